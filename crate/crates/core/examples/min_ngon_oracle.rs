//! Smallest circumscribing n-gons by enumerating flush sides.

use polycover::geom::{random_convex_ngon, regular_ngon};
use polycover::oracle::{hill_climb_refine, min_area_ngon, random_start};

fn main() {
    let square = regular_ngon(4, 1.0).unwrap();
    println!("square -> triangle: {:.12}", min_area_ngon(&square, 3).unwrap().best.area());

    for (m, n) in [(5, 4), (6, 3), (6, 5), (7, 6), (8, 7)] {
        let p = regular_ngon(m, 1.0).unwrap();
        let r = min_area_ngon(&p, n).unwrap();
        println!(
            "regular {m}-gon -> {n}-gon: ratio {:.12}, {} candidates, {:?}",
            r.best.ratio, r.candidates_examined, r.method
        );
    }

    let p = random_convex_ngon(9, 5).unwrap();
    let r = min_area_ngon(&p, 5).unwrap();
    let a = r.assignment.unwrap();
    println!("random 9-gon -> pentagon: ratio {:.9}, flush edges {:?}", r.best.ratio, a.flush_edges);
    if let Some((gap, side)) = a.free_side {
        println!("  free side after flush edge #{gap}, through vertex {}", side.vertex);
    }

    // cold start for the local search
    let hexagon = regular_ngon(6, 1.0).unwrap();
    let start = random_start(&hexagon, 5, 11);
    let refined = hill_climb_refine(&hexagon, 5, &start, 11);
    println!("hill climb on the hexagon: {:.6} -> {:.9}", start.ratio, refined.ratio);
}
