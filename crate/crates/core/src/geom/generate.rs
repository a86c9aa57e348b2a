use std::f64::consts::{PI, TAU};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ConvexPolygon, GeomError, Vector2};

/// Regular `n`-gon of the given area, centred at the origin with a
/// horizontal bottom edge.
pub fn regular_ngon(n: usize, area: f64) -> Result<ConvexPolygon, GeomError> {
    if n < 3 {
        return Err(GeomError::BadSideCount(n));
    }
    if !(area > 0.0 && area.is_finite()) {
        return Err(GeomError::BadArea(area));
    }
    let step = TAU / n as f64;
    let radius = (2.0 * area / (n as f64 * step.sin())).sqrt();
    let start = -PI / 2.0 - step / 2.0;
    let vertices = (0..n)
        .map(|k| radius * Vector2::from_angle(start + step * k as f64))
        .collect();
    ConvexPolygon::new(vertices)
}

/// Random strictly convex `n`-gon, deterministic in `(n, seed)`.
///
/// Valtr's construction: split sorted x and y samples into two monotone
/// chains each, pair the resulting increments at random, and lay the edge
/// vectors out in angular order. Degenerate draws are retried.
pub fn random_convex_ngon(n: usize, seed: u64) -> Result<ConvexPolygon, GeomError> {
    if n < 3 {
        return Err(GeomError::BadSideCount(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Ok(p) = valtr_draw(n, &mut rng) {
            return Ok(p);
        }
    }
}

fn chain_increments<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut xs: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    xs.sort_by(f64::total_cmp);
    let (lo, hi) = (xs[0], xs[n - 1]);
    let (mut top, mut bottom) = (lo, lo);
    let mut out = Vec::with_capacity(n);
    for &x in &xs[1..n - 1] {
        if rng.random::<bool>() {
            out.push(x - top);
            top = x;
        } else {
            out.push(bottom - x);
            bottom = x;
        }
    }
    out.push(hi - top);
    out.push(bottom - hi);
    out
}

fn valtr_draw<R: Rng>(n: usize, rng: &mut R) -> Result<ConvexPolygon, GeomError> {
    let dx = chain_increments(rng, n);
    let mut dy = chain_increments(rng, n);
    dy.shuffle(rng);
    let mut edges: Vec<Vector2> = dx
        .into_iter()
        .zip(dy)
        .map(|(x, y)| Vector2::new(x, y))
        .collect();
    edges.sort_by(|a, b| a.angle().total_cmp(&b.angle()));
    let mut p = Vector2::new(0.0, 0.0);
    let mut vertices = Vec::with_capacity(n);
    for e in &edges {
        vertices.push(p);
        p = p + *e;
    }
    ConvexPolygon::new(vertices)
}
