use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::geom::{ConvexPolygon, Vector2};

use super::CliError;

/// On-disk polygon: `{"vertices": [[x, y], …]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonFile {
    pub vertices: Vec<[f64; 2]>,
}

impl PolygonFile {
    pub fn from_polygon(p: &ConvexPolygon) -> Self {
        PolygonFile {
            vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
        }
    }
}

/// Parses JSON (`{"vertices": …}`) or whitespace-separated `x y` lines.
pub fn parse_polygon(text: &str) -> Result<ConvexPolygon, CliError> {
    let points: Vec<[f64; 2]> = if text.trim_start().starts_with('{') {
        serde_json::from_str::<PolygonFile>(text)
            .map_err(|e| CliError::Parse(format!("bad polygon JSON: {e}")))?
            .vertices
    } else {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|(i, l)| {
                let nums: Vec<f64> = l
                    .split_whitespace()
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|e| CliError::Parse(format!("line {}: {e}", i + 1)))?;
                match nums[..] {
                    [x, y] => Ok([x, y]),
                    _ => Err(CliError::Parse(format!("line {}: expected two numbers", i + 1))),
                }
            })
            .collect::<Result<_, _>>()?
    };
    if points.len() < 3 {
        return Err(CliError::Parse(format!("need at least 3 vertices, got {}", points.len())));
    }
    if points.iter().flatten().any(|c| !c.is_finite()) {
        return Err(CliError::Parse("coordinates must be finite".into()));
    }
    Ok(ConvexPolygon::new(points.iter().map(|&[x, y]| Vector2::new(x, y)).collect())?)
}

pub fn polygon_io(path: &Path) -> Result<ConvexPolygon, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_polygon(&text)
}

pub fn write_polygon(path: &Path, p: &ConvexPolygon) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(&PolygonFile::from_polygon(p)).expect("plain data serializes");
    fs::write(path, json + "\n").map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
