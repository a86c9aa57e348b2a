//! Hill climbing for m-gons whose smallest circumscribing n-gon is large.

use std::time::Instant;

use polycover::search::search_extremal;

fn main() {
    for (n, m) in [(4, 5), (5, 6), (6, 7)] {
        let t = Instant::now();
        let r = search_extremal(n, m, 4000, 7).unwrap();
        println!(
            "({n}, {m}): best {:.9}, {} {:.9}, gap {:+.2e}  [{:.1?}]",
            r.best_ratio,
            r.comparison.source,
            r.comparison.target,
            r.comparison.gap,
            t.elapsed()
        );
    }
}
