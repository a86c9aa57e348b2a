//! Drive the command line in-process.

use polycover::cli::run_with;

fn main() {
    let dir = std::env::temp_dir();
    let poly = dir.join("regular7.json");
    let poly = poly.to_str().unwrap();

    for args in [
        vec!["regular", "--n", "7", "--out", poly],
        vec!["oracle", "--input", poly, "--sides", "6"],
        vec!["certify", "pentagon"],
        vec!["certify", "hexagon", "--json"],
        vec!["verify", "hexagon", "--samples", "2000", "--seed", "1"],
    ] {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("polycover").chain(args.iter().copied()), &mut out, &mut err);
        println!("$ polycover {}  (exit {code})", args.join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        eprint!("{}", String::from_utf8_lossy(&err));
    }
}
