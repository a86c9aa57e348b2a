//! The cleared-denominator identity behind the hexagon bound.

use polycover::hexagon::{final_identity_check, identity_lhs, DISPLAYED_COEFFICIENTS};

fn main() {
    let lhs = identity_lhs();
    println!("expanded left side: {} terms in a, x, y", lhs.num_terms());
    let groups = lhs.collect_by(&["x", "y"]);
    for (i, j, coeffs) in DISPLAYED_COEFFICIENTS {
        println!("x^{i} y^{j}:  {}", groups[&vec![i, j]]);
        assert!(coeffs.iter().all(|&c| c >= 0));
    }
    let report = final_identity_check().unwrap();
    println!("residual zero: {}, {}/{} coefficient polynomials nonnegative", report.residual.is_zero(), report.nonnegative, report.monomials);
}
