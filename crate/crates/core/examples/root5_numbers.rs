//! Exact arithmetic in Q(sqrt5).

use polycover::algebra::{rational, Root5Number};

fn main() {
    let phi = Root5Number::phi();
    println!("phi = {phi} ~ {:.15}", phi.to_f64());
    // phi^2 + phi = 1
    println!("phi^2 + phi = {}", &phi.pow(2) + &phi);

    let k = Root5Number::from_ints(-30, 16);
    println!("{k} is {:?} zero", k.signum());

    let x = Root5Number::new(rational(3, 2), rational(-1, 7));
    let y = Root5Number::from_ints(2, 1);
    let q = x.checked_div(&y).unwrap();
    println!("({x}) / ({y}) = {q}");
    assert_eq!(&q * &y, x);

    // 3/sqrt5 - 1, the pentagon bound minus one
    let bound = Root5Number::from(3).checked_div(&Root5Number::sqrt5()).unwrap() - Root5Number::from(1);
    println!("3/sqrt5 - 1 = {bound} ~ {:.12}", bound.to_f64());
}
