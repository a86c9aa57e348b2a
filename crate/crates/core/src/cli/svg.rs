use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::geom::ConvexPolygon;

use super::CliError;

fn points(p: &ConvexPolygon) -> String {
    p.vertices()
        .iter()
        .map(|v| format!("{:.6},{:.6}", v.x, -v.y))
        .collect::<Vec<_>>()
        .join(" ")
}

fn label(i: usize) -> String {
    let letter = (b'A' + (i % 26) as u8) as char;
    if i < 26 {
        letter.to_string()
    } else {
        format!("{letter}{}", i / 26)
    }
}

/// `inner` shaded inside the outlined `cover`, vertices of `inner` labeled
/// `A, B, C, …`. The y axis points up.
pub fn svg_string(inner: &ConvexPolygon, cover: &ConvexPolygon) -> Result<String, CliError> {
    if !cover.contains_polygon(inner, &(1e-9 * cover.diameter())) {
        return Err(CliError::Internal("cover does not contain the polygon".into()));
    }
    let (lo, hi) = cover.bounding_box();
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let margin = 0.05 * w.max(h);
    let size = w.max(h);
    let stroke = 0.005 * size;
    let font = 0.05 * size;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        lo.x - margin,
        -hi.y - margin,
        w + 2.0 * margin,
        h + 2.0 * margin
    )
    .unwrap();
    writeln!(
        s,
        r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="{stroke:.6}"/>"#,
        points(cover)
    )
    .unwrap();
    writeln!(
        s,
        r#"  <polygon points="{}" fill="steelblue" fill-opacity="0.3" stroke="steelblue" stroke-width="{stroke:.6}"/>"#,
        points(inner)
    )
    .unwrap();
    let c = inner.centroid_of_vertices();
    for (i, v) in inner.vertices().iter().enumerate() {
        let out = *v - c;
        let at = *v + out.scale(font / out.norm().max(1e-300));
        writeln!(
            s,
            r#"  <text x="{:.6}" y="{:.6}" font-size="{font:.6}" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            at.x,
            -at.y,
            label(i)
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn svg_emit(inner: &ConvexPolygon, cover: &ConvexPolygon, path: &Path) -> Result<(), CliError> {
    let svg = svg_string(inner, cover)?;
    fs::write(path, svg).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::regular_ngon;
    use crate::pentagon::circumscribe_pentagon;

    #[test]
    fn pentagon_figure() {
        let p = regular_ngon(5, 1.0).unwrap();
        let c = circumscribe_pentagon(&p).unwrap();
        let svg = svg_string(&p, &c.cover).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 2);
        assert!(svg.contains(">E</text>"));
        assert!(svg.contains(r#"fill-opacity="0.3""#));
        assert_eq!(svg, svg_string(&p, &c.cover).unwrap());
    }

    #[test]
    fn non_containing_pair_is_rejected() {
        let p = regular_ngon(5, 1.0).unwrap();
        let small = regular_ngon(4, 0.1).unwrap();
        assert!(matches!(svg_string(&p, &small), Err(CliError::Internal(_))));
    }
}
