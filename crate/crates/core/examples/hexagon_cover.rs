//! A pentagon around a convex hexagon, at most 7/6 times larger.

use polycover::geom::{random_convex_ngon, regular_ngon};
use polycover::hexagon::{
    circumscribe_hexagon, extract_hexagon_params, hexagon_from_params, HexagonParams,
};

fn main() {
    let regular = regular_ngon(6, 1.0).unwrap();
    let c = circumscribe_hexagon(&regular).unwrap();
    println!("regular hexagon: ratio {:.12}", c.ratio);

    // concurrent long diagonals: extraction nudges a vertex first
    let x = extract_hexagon_params(&regular).unwrap();
    println!("perturbed = {}, params {:?}", x.perturbed, x.params.as_array().map(|p| (p * 1e4).round() / 1e4));

    let ones = HexagonParams::new(1.0, 1.0, 1.0, 1.0, 1.0, 1.0);
    let h = hexagon_from_params(&ones).unwrap();
    println!(
        "all-ones hexagon: area {}, |AHB| {:.6}, |FGA| {:.6}, ratio {:.9} (15/13 = {:.9})",
        h.area(),
        ones.corner_ahb(),
        ones.corner_fga(),
        circumscribe_hexagon(&h).unwrap().ratio,
        15.0 / 13.0
    );

    let mut worst: f64 = 0.0;
    for seed in 0..1000 {
        let p = random_convex_ngon(6, seed).unwrap();
        worst = worst.max(circumscribe_hexagon(&p).unwrap().ratio);
    }
    println!("worst over 1000 random hexagons: {worst:.9}");

    let p = random_convex_ngon(6, 3).unwrap();
    let x = extract_hexagon_params(&p).unwrap();
    println!(
        "seed 3: A = vertex {} ({}), params {:?}",
        x.rotation,
        if x.mirrored { "mirrored" } else { "as given" },
        x.params.as_array()
    );
}
