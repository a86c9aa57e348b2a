//! A quadrilateral around a convex pentagon, at most 3/sqrt5 times larger.

use polycover::geom::{random_convex_ngon, regular_ngon};
use polycover::pentagon::{circumscribe_pentagon, pentagon_formula_areas, relabel_and_extract};

fn main() {
    let regular = regular_ngon(5, 1.0).unwrap();
    let c = circumscribe_pentagon(&regular).unwrap();
    println!("regular pentagon: ratio {:.12} (3/sqrt5 = {:.12})", c.ratio, 3.0 / 5f64.sqrt());

    let (k, params, _) = relabel_and_extract(&regular).unwrap();
    println!("rotation {k}, a={:.9} b={:.9} c={:.9} d={:.9}", params.a, params.b, params.c, params.d);

    let mut worst: f64 = 0.0;
    for seed in 0..1000 {
        let p = random_convex_ngon(5, seed).unwrap();
        let c = circumscribe_pentagon(&p).unwrap();
        worst = worst.max(c.ratio);
    }
    println!("worst over 1000 random pentagons: {worst:.9}");

    let p = random_convex_ngon(5, 7).unwrap();
    let (_, params, frame) = relabel_and_extract(&p).unwrap();
    let areas = pentagon_formula_areas(&params);
    println!(
        "seed 7: area {:.9} = {:.9} * |AOD|, ears {:?}",
        p.area(),
        areas.total,
        areas.ears.map(|e| (e * 1e6).round() / 1e6)
    );
    println!("frame origin {:?}, |AOD| = {:.9}", frame.origin, frame.scale);
}
