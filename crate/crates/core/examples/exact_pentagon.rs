//! The affine-regular pentagon in exact arithmetic: ratio exactly 3/sqrt5.

use polycover::algebra::Root5Number;
use polycover::pentagon::{circumscribe_pentagon, g_direct, pentagon_from_params, PentagonParams};

fn main() {
    let phi = Root5Number::phi();
    let one = Root5Number::from(1);
    let params = PentagonParams::new(phi.clone(), phi, one.clone(), one);

    let p = pentagon_from_params(&params).unwrap();
    for v in p.vertices() {
        println!("  ({}, {})", v.x, v.y);
    }
    let c = circumscribe_pentagon(&p).unwrap();
    println!("area {} -> cover area {}", p.area(), c.area());
    println!("ratio = {}", c.ratio);
    println!("g(phi, phi, 1, 1) = {}", g_direct(&params));

    let [a, b, c, d] = [1, 1, 1, 1].map(Root5Number::from);
    println!("g(1, 1, 1, 1) = {}", g_direct(&PentagonParams::new(a, b, c, d)));
}
