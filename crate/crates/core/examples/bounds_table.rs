//! Bounds on the worst-case ratio and the regular-polygon values.

use polycover::bounds::{bounds_table, heptagon_report};

fn main() {
    println!("  n  chakerian  ismailescu  ft_lower  ft_upper  conjecture  regular");
    let cell = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.7}"));
    for row in bounds_table(12).unwrap() {
        println!(
            "{:>3}  {:.7}  {:.7}   {:>9} {:>9}  {:>10}  {:>9}{}",
            row.n,
            row.chakerian,
            row.ismailescu,
            cell(row.ft_lower),
            cell(row.ft_upper),
            cell(row.conjecture),
            cell(row.oracle_regular),
            if row.conflict() { "  <- conflict" } else { "" }
        );
    }

    let h = heptagon_report(&[0, 1, 2]).unwrap();
    println!("regular heptagon, best hexagon:");
    println!("  oracle  {:.9} (seed spread {:.1e})", h.oracle, h.spread);
    println!("  printed {:.4}", h.printed);
    println!("  formula {:.9}", h.formula);
}
