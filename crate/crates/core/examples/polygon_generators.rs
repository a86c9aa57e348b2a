//! Regular and random convex polygons.

use polycover::geom::{random_convex_ngon, regular_ngon};

fn main() {
    for n in 3..=8 {
        let p = regular_ngon(n, 1.0).unwrap();
        println!("regular {n}-gon: area {:.12}, diameter {:.6}", p.area(), p.diameter());
    }

    // same seed, same polygon
    let a = random_convex_ngon(7, 42).unwrap();
    let b = random_convex_ngon(7, 42).unwrap();
    assert_eq!(a, b);
    for (i, v) in a.vertices().iter().enumerate() {
        println!("  v{i} = ({:+.6}, {:+.6})", v.x, v.y);
    }
    println!("random 7-gon area {:.6}", a.area());
}
