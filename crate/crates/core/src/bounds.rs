//! Closed-form bounds on the worst-case circumscribing n-gon ratio, the
//! conjectured `r(n − 1, n)`, and oracle ratios for regular polygons.

use std::f64::consts::PI;

use serde::Serialize;

use crate::geom::regular_ngon;
use crate::oracle::{min_area_ngon_with, OracleError, OracleOptions};

/// The decimal printed next to the conjecture for `n = 7`.
pub const PRINTED_HEPTAGON_VALUE: f64 = 1.1725;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundsError {
    #[error("side count {n} is outside {min}..={max}")]
    BadSideCount { n: usize, min: usize, max: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Bounds on `R_n`, the largest ratio `|C_n(K)| / |K|` over convex disks
/// `K`, plus the conjectured `r(n − 1, n)` and the oracle's value for the
/// regular n-gon.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundRow {
    pub n: usize,
    /// `(2π/n)·csc(2π/n)`.
    pub chakerian: f64,
    /// `sec(π/n)`.
    pub ismailescu: f64,
    /// `(n/π)·tan(π/n)`, for `n ≥ 5`.
    pub ft_lower: Option<f64>,
    /// `((n−2)/π)·tan(π/(n−2))`, for `n ≥ 5`.
    pub ft_upper: Option<f64>,
    pub conjecture: Option<f64>,
    pub oracle_regular: Option<f64>,
}

impl BoundRow {
    /// The conjecture formula disagrees with the oracle on the regular
    /// n-gon by more than `1e-6`.
    pub fn conflict(&self) -> bool {
        matches!((self.conjecture, self.oracle_regular), (Some(c), Some(o)) if (c - o).abs() > 1e-6)
    }
}

pub fn chakerian_bound(n: usize) -> f64 {
    let t = 2.0 * PI / n as f64;
    t / t.sin()
}

pub fn ismailescu_bound(n: usize) -> f64 {
    1.0 / (PI / n as f64).cos()
}

pub fn ft_lower_bound(n: usize) -> f64 {
    n as f64 / PI * (PI / n as f64).tan()
}

pub fn ft_upper_bound(n: usize) -> f64 {
    let k = (n - 2) as f64;
    k / PI * (PI / k).tan()
}

/// Closed-form columns only.
pub fn bound_values(n: usize) -> Result<BoundRow, BoundsError> {
    if n < 3 {
        return Err(BoundsError::BadSideCount { n, min: 3, max: usize::MAX });
    }
    Ok(BoundRow {
        n,
        chakerian: chakerian_bound(n),
        ismailescu: ismailescu_bound(n),
        ft_lower: (n >= 5).then(|| ft_lower_bound(n)),
        ft_upper: (n >= 5).then(|| ft_upper_bound(n)),
        conjecture: (n >= 6).then(|| conjecture_formula(n)),
        oracle_regular: None,
    })
}

fn conjecture_formula(n: usize) -> f64 {
    let nf = n as f64;
    1.0 + (2.0 * PI / nf).tan() / (nf * (PI / nf).cos())
}

/// `1 + tan(2π/n) / (n·cos(π/n))`, evaluated as written.
pub fn conjecture_value(n: usize) -> Result<f64, BoundsError> {
    if n < 6 {
        return Err(BoundsError::BadSideCount { n, min: 6, max: usize::MAX });
    }
    Ok(conjecture_formula(n))
}

/// Smallest `(n−1)`-gon around the unit-area regular n-gon, by the oracle.
pub fn regular_ratio(n: usize) -> Result<f64, BoundsError> {
    regular_ratio_seeded(n, 0)
}

pub fn regular_ratio_seeded(n: usize, seed: u64) -> Result<f64, BoundsError> {
    if !(4..=8).contains(&n) {
        return Err(BoundsError::BadSideCount { n, min: 4, max: 8 });
    }
    let p = regular_ngon(n, 1.0).expect("n >= 4 and unit area are valid");
    let r = min_area_ngon_with(&p, n - 1, OracleOptions { seed, refine: true })?;
    Ok(r.best.ratio)
}

/// Rows `3..=max_n`, with oracle values where the oracle applies.
pub fn bounds_table(max_n: usize) -> Result<Vec<BoundRow>, BoundsError> {
    (3..=max_n)
        .map(|n| {
            let mut row = bound_values(n)?;
            if (4..=8).contains(&n) {
                row.oracle_regular = Some(regular_ratio(n)?);
            }
            Ok(row)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeptagonReport {
    pub oracle: f64,
    pub printed: f64,
    pub formula: f64,
    /// Oracle value per hill-climb seed.
    pub per_seed: Vec<(u64, f64)>,
    pub spread: f64,
}

/// The hexagon ratio of the regular heptagon beside the two printed
/// values it could be compared against.
pub fn heptagon_report(seeds: &[u64]) -> Result<HeptagonReport, BoundsError> {
    let per_seed: Vec<(u64, f64)> = seeds
        .iter()
        .map(|&s| regular_ratio_seeded(7, s).map(|r| (s, r)))
        .collect::<Result<_, _>>()?;
    let lo = per_seed.iter().map(|x| x.1).fold(f64::INFINITY, f64::min);
    let hi = per_seed.iter().map(|x| x.1).fold(f64::NEG_INFINITY, f64::max);
    Ok(HeptagonReport {
        oracle: per_seed.first().map_or(f64::NAN, |x| x.1),
        printed: PRINTED_HEPTAGON_VALUE,
        formula: conjecture_formula(7),
        per_seed,
        spread: hi - lo,
    })
}
