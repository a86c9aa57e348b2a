//! Sparse polynomials over Q(sqrt5): parsing, expansion, substitution.

use std::collections::HashMap;

use polycover::algebra::{parse_polynomial, Root5Number};

fn main() {
    let p = parse_polynomial("(a + sqrt5*b)^3 - a*b").unwrap();
    println!("p = {p}");
    println!("{} terms, degree {}", p.num_terms(), p.total_degree());

    let b = parse_polynomial("a + x").unwrap();
    let shifted = p.substitute("b", &b);
    for (exps, coeff) in shifted.collect_by(&["x"]) {
        println!("  x^{}: {coeff}", exps[0]);
    }

    let point: HashMap<String, Root5Number> = [
        ("a".to_string(), Root5Number::phi()),
        ("b".to_string(), Root5Number::from(1)),
    ]
    .into();
    println!("p(phi, 1) = {}", p.eval(&point).unwrap());

    match parse_polynomial("a + * b") {
        Err(e) => println!("bad input: {e}"),
        Ok(_) => unreachable!(),
    }
}
