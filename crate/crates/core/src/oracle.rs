//! Minimal-area circumscribing n-gons by enumeration.
//!
//! A smallest n-gon around a convex polygon `P` has at least `n − 1` sides
//! lying along edges of `P`, and every side has its midpoint on `P`. So it
//! suffices to try every set of `n` edge lines, and every set of `n − 1`
//! edge lines plus one side through a vertex of `P` whose midpoint is that
//! vertex. A support-line hill climb independently cross-checks the result.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::cover::Circumscription;
use crate::geom::{line_intersect, ConvexPolygon, GeomError, Line2, Vector2};

pub const MAX_INNER_VERTICES: usize = 16;
pub const MAX_SIDES: usize = 7;

/// Relative gap between enumeration and hill climb tolerated as agreement.
pub const AGREEMENT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("need 3 <= n < m with n <= {MAX_SIDES} and m <= {MAX_INNER_VERTICES}, got n = {n}, m = {m}")]
    BadSideCount { n: usize, m: usize },
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("no chord through the vertex has it as midpoint")]
    NoSolution,
    #[error("vertex lies on a flush line")]
    Degenerate,
    #[error("enumeration found area {enumerated} but hill climbing reached {refined}")]
    Disagreement { enumerated: f64, refined: f64 },
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

/// A side through vertex `vertex` of `P`, meeting the neighbouring flush
/// lines at `x` and `y`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeSide {
    pub vertex: usize,
    pub line: Line2,
    pub x: Vector2,
    pub y: Vector2,
}

/// Which edges of `P` the cover's sides lie along, in cyclic order. With a
/// free side, it sits between `flush_edges[gap]` and the next flush edge.
#[derive(Clone, Debug, PartialEq)]
pub struct FlushAssignment {
    pub flush_edges: Vec<usize>,
    pub free_side: Option<(usize, FreeSide)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMethod {
    Enumeration,
    Refined,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleResult {
    pub best: Circumscription,
    /// `None` when the hill climb produced the returned cover.
    pub assignment: Option<FlushAssignment>,
    pub candidates_examined: usize,
    pub method: OracleMethod,
    pub enumerated_area: f64,
    pub refined_area: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleOptions {
    /// Seed for the hill climb's random kicks.
    pub seed: u64,
    /// Run the hill-climb cross-check.
    pub refine: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { seed: 0, refine: true }
    }
}

/// Endpoints `X ∈ l1`, `Y ∈ l2` of the chord with midpoint `v`.
pub fn midpoint_chord(l1: &Line2, l2: &Line2, v: &Vector2) -> Result<(Vector2, Vector2), OracleError> {
    let scale = l1.direction.norm() * l2.direction.norm();
    let on_line = |l: &Line2| l.side(v).abs() <= 1e-12 * l.direction.norm() * (v - &l.point).norm().max(1.0);
    if on_line(l1) || on_line(l2) {
        return Err(OracleError::Degenerate);
    }
    let det = l1.direction.cross(&l2.direction);
    if det.abs() <= 1e-12 * scale {
        return Err(OracleError::NoSolution);
    }
    let q = v.scale(2.0) - l1.point - l2.point;
    let s = q.cross(&l2.direction) / det;
    let r = l1.direction.cross(&q) / det;
    Ok((l1.at(s), l2.at(r)))
}

/// The line through `v` cutting `l1` and `l2` at points symmetric about `v`,
/// directed from `l1` to `l2`. Among lines through `v` it cuts off the
/// least area from the wedge.
pub fn free_side_through_vertex(l1: &Line2, l2: &Line2, v: &Vector2) -> Result<Line2, OracleError> {
    let (x, y) = midpoint_chord(l1, l2, v)?;
    Ok(Line2::new(x, y - x)?)
}

fn check_sizes(p: &ConvexPolygon, n: usize) -> Result<(), OracleError> {
    let m = p.len();
    if n < 3 || n >= m || n > MAX_SIDES || m > MAX_INNER_VERTICES {
        return Err(OracleError::BadSideCount { n, m });
    }
    let threshold = 1e-12 * p.diameter_sq();
    if (0..m).any(|i| p.ear_area(i) <= threshold) {
        return Err(OracleError::DegenerateInput("an ear has no area".into()));
    }
    Ok(())
}

/// All increasing `k`-subsets of `0..m`.
fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=(m - (k - cur.len())) {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn edge_line(p: &ConvexPolygon, i: usize) -> Line2 {
    Line2 {
        point: *p.vertex(i),
        direction: p.edge(i),
    }
}

/// Polygon cut out by consecutive lines, if every turn is a proper left turn.
fn polygon_from_lines(lines: &[Line2]) -> Option<ConvexPolygon> {
    let k = lines.len();
    let mut vertices = Vec::with_capacity(k);
    for i in 0..k {
        let (l1, l2) = (&lines[i], &lines[(i + 1) % k]);
        if l1.direction.cross(&l2.direction) <= 1e-12 * l1.direction.norm() * l2.direction.norm() {
            return None;
        }
        vertices.push(line_intersect(l1, l2).ok()?);
    }
    ConvexPolygon::new(vertices).ok()
}

struct Candidate {
    area: f64,
    cover: ConvexPolygon,
    assignment: FlushAssignment,
}

fn consider(best: &mut Option<Candidate>, p: &ConvexPolygon, tol: f64, cover: ConvexPolygon, assignment: FlushAssignment) {
    if !cover.contains_polygon(p, &tol) {
        return;
    }
    let area = cover.area();
    if best.as_ref().is_none_or(|b| area < b.area) {
        *best = Some(Candidate { area, cover, assignment });
    }
}

/// Exhaustive search over flush assignments, without the hill-climb check.
pub fn enumerate_min_ngon(p: &ConvexPolygon, n: usize) -> Result<OracleResult, OracleError> {
    check_sizes(p, n)?;
    let m = p.len();
    let tol = 1e-9 * p.diameter();
    let lines: Vec<Line2> = (0..m).map(|i| edge_line(p, i)).collect();
    let mut best: Option<Candidate> = None;
    let mut examined = 0;

    for subset in combinations(m, n) {
        examined += 1;
        let ls: Vec<Line2> = subset.iter().map(|&i| lines[i].clone()).collect();
        if let Some(cover) = polygon_from_lines(&ls) {
            let assignment = FlushAssignment { flush_edges: subset, free_side: None };
            consider(&mut best, p, tol, cover, assignment);
        }
    }

    for subset in combinations(m, n - 1) {
        for gap in 0..n - 1 {
            let i = subset[gap];
            let j = subset[(gap + 1) % (n - 1)];
            // vertices strictly between edge i and edge j
            let span = (j + m - i) % m;
            let span = if span == 0 { m } else { span };
            for step in 2..span {
                let vertex = (i + step) % m;
                examined += 1;
                let Ok((x, y)) = midpoint_chord(&lines[i], &lines[j], p.vertex(vertex)) else {
                    continue;
                };
                if (y - x).norm() <= 1e-12 * p.diameter() {
                    continue;
                }
                let free = Line2 { point: x, direction: y - x };
                let mut ls: Vec<Line2> = subset.iter().map(|&e| lines[e].clone()).collect();
                ls.insert(gap + 1, free.clone());
                if let Some(cover) = polygon_from_lines(&ls) {
                    let assignment = FlushAssignment {
                        flush_edges: subset.clone(),
                        free_side: Some((gap, FreeSide { vertex, line: free, x, y })),
                    };
                    consider(&mut best, p, tol, cover, assignment);
                }
            }
        }
    }

    let best = best.ok_or_else(|| OracleError::DegenerateInput("no valid circumscribing polygon".into()))?;
    let construction_points = match &best.assignment.free_side {
        Some((_, fs)) => vec![fs.x, fs.y],
        None => Vec::new(),
    };
    Ok(OracleResult {
        best: Circumscription {
            ratio: best.area / p.area(),
            cover: best.cover,
            labeling: 0,
            construction_points,
        },
        assignment: Some(best.assignment),
        candidates_examined: examined,
        method: OracleMethod::Enumeration,
        enumerated_area: best.area,
        refined_area: None,
    })
}

/// Enumeration cross-checked by [`hill_climb_refine`] with seed 0.
pub fn min_area_ngon(p: &ConvexPolygon, n: usize) -> Result<OracleResult, OracleError> {
    min_area_ngon_with(p, n, OracleOptions::default())
}

pub fn min_area_ngon_with(
    p: &ConvexPolygon,
    n: usize,
    options: OracleOptions,
) -> Result<OracleResult, OracleError> {
    let mut result = enumerate_min_ngon(p, n)?;
    if !options.refine {
        return Ok(result);
    }
    let refined = hill_climb_refine(p, n, &result.best, options.seed);
    let (enumerated, refined_area) = (result.enumerated_area, refined.area());
    result.refined_area = Some(refined_area);
    if refined_area < enumerated * (1.0 - AGREEMENT_TOL) {
        return Err(OracleError::Disagreement { enumerated, refined: refined_area });
    }
    if refined_area < enumerated {
        result.best = refined;
        result.assignment = None;
        result.method = OracleMethod::Refined;
    }
    Ok(result)
}

/// Support-line model: side `k` is the support line of `P` with outward
/// normal angle `θ_k`.
struct SupportModel<'a> {
    p: &'a ConvexPolygon,
}

impl SupportModel<'_> {
    fn offset(&self, theta: f64) -> f64 {
        let nrm = Vector2::from_angle(theta);
        self.p.vertices().iter().map(|v| v.dot(&nrm)).fold(f64::NEG_INFINITY, f64::max)
    }

    fn polygon(&self, angles: &[f64]) -> Option<Vec<Vector2>> {
        let k = angles.len();
        let offsets: Vec<f64> = angles.iter().map(|&t| self.offset(t)).collect();
        let mut out = Vec::with_capacity(k);
        for i in 0..k {
            let j = (i + 1) % k;
            let gap = (angles[j] - angles[i]).rem_euclid(2.0 * PI);
            if gap <= 1e-9 || gap >= PI - 1e-9 {
                return None;
            }
            let (a, b) = (Vector2::from_angle(angles[i]), Vector2::from_angle(angles[j]));
            let det = a.cross(&b);
            // a·x = h_i, b·x = h_j
            out.push(Vector2::new(
                (offsets[i] * b.y - offsets[j] * a.y) / det,
                (a.x * offsets[j] - b.x * offsets[i]) / det,
            ));
        }
        // total turning must be one full turn
        let turning: f64 = (0..k).map(|i| (angles[(i + 1) % k] - angles[i]).rem_euclid(2.0 * PI)).sum();
        if (turning - 2.0 * PI).abs() > 1e-6 {
            return None;
        }
        Some(out)
    }

    fn area(&self, angles: &[f64]) -> f64 {
        match self.polygon(angles) {
            Some(vs) => {
                let k = vs.len();
                (0..k).map(|i| vs[i].cross(&vs[(i + 1) % k])).sum::<f64>() / 2.0
            }
            None => f64::INFINITY,
        }
    }

    fn descend(&self, angles: &mut [f64], mut value: f64) -> f64 {
        let mut step = 0.05;
        while step > 1e-13 {
            let mut improved = false;
            for k in 0..angles.len() {
                for dir in [1.0, -1.0] {
                    let old = angles[k];
                    angles[k] = old + dir * step;
                    let v = self.area(angles);
                    if v < value {
                        value = v;
                        improved = true;
                    } else {
                        angles[k] = old;
                    }
                }
            }
            if !improved {
                step /= 2.0;
            }
        }
        value
    }
}

fn outward_angles(cover: &ConvexPolygon) -> Vec<f64> {
    (0..cover.len())
        .map(|i| {
            let e = cover.edge(i);
            Vector2::new(e.y, -e.x).angle()
        })
        .collect()
}

/// Coordinate descent on the support-line normal angles, with a few
/// seeded random kicks. The result is never worse than `start` and always
/// contains `P`.
pub fn hill_climb_refine(p: &ConvexPolygon, n: usize, start: &Circumscription, seed: u64) -> Circumscription {
    let model = SupportModel { p };
    let mut angles = outward_angles(&start.cover);
    // pad a cover with fewer sides by splitting its longest turn
    while angles.len() < n {
        let k = angles.len();
        let (i, _) = (0..k)
            .map(|i| (i, (angles[(i + 1) % k] - angles[i]).rem_euclid(2.0 * PI)))
            .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        let mid = angles[i] + (angles[(i + 1) % k] - angles[i]).rem_euclid(2.0 * PI) / 2.0;
        angles.insert(i + 1, mid);
    }
    let mut best_angles = angles.clone();
    let mut best = model.descend(&mut best_angles, model.area(&angles));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let mut trial: Vec<f64> = best_angles
            .iter()
            .map(|t| t + 0.05 * rng.sample::<f64, _>(StandardNormal))
            .collect();
        let start_value = model.area(&trial);
        if !start_value.is_finite() {
            continue;
        }
        let v = model.descend(&mut trial, start_value);
        if v < best {
            best = v;
            best_angles = trial;
        }
    }
    let improved = model
        .polygon(&best_angles)
        .and_then(|vs| ConvexPolygon::new(vs).ok())
        .filter(|c| best < start.area() && c.contains_polygon(p, &(1e-9 * p.diameter())));
    match improved {
        Some(cover) => Circumscription {
            ratio: cover.area() / p.area(),
            cover,
            labeling: 0,
            construction_points: Vec::new(),
        },
        None => start.clone(),
    }
}

/// A valid cover built from random support-line angles, for cold starts.
pub fn random_start(p: &ConvexPolygon, n: usize, seed: u64) -> Circumscription {
    let model = SupportModel { p };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..2.0 * PI)).collect();
        angles.sort_by(f64::total_cmp);
        if let Some(cover) = model.polygon(&angles).and_then(|vs| ConvexPolygon::new(vs).ok()) {
            return Circumscription {
                ratio: cover.area() / p.area(),
                cover,
                labeling: 0,
                construction_points: Vec::new(),
            };
        }
    }
}
