//! Draw a polygon inside its cover as SVG.

use polycover::cli::svg_emit;
use polycover::geom::regular_ngon;
use polycover::hexagon::circumscribe_hexagon;
use polycover::pentagon::circumscribe_pentagon;

fn main() {
    let dir = std::env::temp_dir();

    let pentagon = regular_ngon(5, 1.0).unwrap();
    let quad = circumscribe_pentagon(&pentagon).unwrap();
    let path = dir.join("pentagon_cover.svg");
    svg_emit(&pentagon, &quad.cover, &path).unwrap();
    println!("wrote {}", path.display());

    let hexagon = regular_ngon(6, 1.0).unwrap();
    let penta = circumscribe_hexagon(&hexagon).unwrap();
    let path = dir.join("hexagon_cover.svg");
    svg_emit(&hexagon, &penta.cover, &path).unwrap();
    println!("wrote {}", path.display());
}
