//! Exact check of the nonnegativity certificate for the pentagon bound.

use polycover::pentagon::{certificate_check, certificate_terms, g_polynomial};

fn main() {
    println!("g has {} terms", g_polynomial().num_terms());
    for (i, t) in certificate_terms().iter().enumerate() {
        let labels = t.labels.iter().filter(|l| !l.is_empty()).copied().collect::<Vec<_>>().join(" + ");
        println!("{:>2}  ({})  *  ({labels})", i + 1, t.coefficient);
    }
    let report = certificate_check().unwrap();
    println!(
        "residual terms {}, nonnegative coefficients {}/{}",
        report.residual_terms, report.nonnegative, report.groups
    );
    println!("g(1,1,1,1) = {}", report.g_unit);
    println!("g(phi,phi,1,1) = {}", report.g_golden);
}
