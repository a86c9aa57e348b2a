//! Pentagons around convex hexagons.
//!
//! The long diagonals `AD`, `BE`, `CF` of a hexagon bound a triangle
//! `M = AD ∩ BE`, `N = AD ∩ CF`, `P = CF ∩ BE`. With `u = MN`, `v = MP` and
//! `w = v − u`, each vertex sits on one diagonal beyond a corner of `MNP`:
//!
//! ```text
//! A = M − a·u   B = M − b·v   C = N − c·w
//! D = N + d·u   E = P + e·v   F = P + f·w
//! ```
//!
//! Cutting off `A` by the line through it parallel to `FB` gives a pentagon
//! `HCDEG` whose area is at most `7/6` times the hexagon's when `a` is the
//! smallest parameter.

pub mod identity;

use crate::cover::Circumscription;
use crate::geom::{
    line_intersect, validate_convex, wedge, triangle_area, ConvexPolygon, GeomError, Line2, Scalar,
    Vector2, CONVEXITY_TOL,
};

pub use identity::{
    displayed_polynomial, final_identity_check, identity_lhs, IdentityReport, DISPLAYED_COEFFICIENTS,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HexagonError {
    #[error("expected a hexagon, got {0} vertices")]
    WrongVertexCount(usize),
    #[error("hexagon is degenerate: {0}")]
    DegenerateHexagon(String),
    #[error("parameters are infeasible: {0}")]
    InfeasibleParams(String),
    #[error("identity residual has {residual_terms} terms")]
    IdentityMismatch { residual_terms: usize },
    #[error("coefficient of x^{0}y^{1} has a negative coefficient")]
    NegativeCoefficient(u32, u32),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct HexagonParams<S = f64> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
    pub e: S,
    pub f: S,
}

/// The diagonal triangle `M, N, P` with `u = N − M`, `v = P − M`,
/// `w = v − u` and `scale = u ∧ v = |MNP|`.
#[derive(Clone, Debug, PartialEq)]
pub struct HexagonFrame<S = f64> {
    pub m: Vector2<S>,
    pub n: Vector2<S>,
    pub pt: Vector2<S>,
    pub u: Vector2<S>,
    pub v: Vector2<S>,
    pub w: Vector2<S>,
    pub scale: S,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HexagonExtraction<S = f64> {
    pub params: HexagonParams<S>,
    pub frame: HexagonFrame<S>,
    /// Labels start at vertex `rotation` of the (possibly mirrored) input.
    pub rotation: usize,
    /// Labels run clockwise; the frame lives in the mirrored plane `x → −x`.
    pub mirrored: bool,
    /// The diagonals were concurrent and one vertex was nudged outwards.
    pub perturbed: bool,
}

/// Total area and the triangles `EFA, FAB, ABC, FBC, EFB`, in units of
/// `|MNP|`.
#[derive(Clone, Debug, PartialEq)]
pub struct HexagonAreas<S = f64> {
    pub total: S,
    pub efa: S,
    pub fab: S,
    pub abc: S,
    pub fbc: S,
    pub efb: S,
}

impl<S: Scalar> HexagonParams<S> {
    pub fn new(a: S, b: S, c: S, d: S, e: S, f: S) -> Self {
        HexagonParams { a, b, c, d, e, f }
    }

    pub fn as_array(&self) -> [S; 6] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
        ]
    }

    /// `|AHB| = |FAB|·|ABC| / |FBC|`.
    pub fn corner_ahb(&self) -> S {
        let t = hexagon_formula_areas(self);
        t.fab * t.abc / t.fbc
    }

    /// `|FGA| = |EFA|·|FAB| / |EFB|`.
    pub fn corner_fga(&self) -> S {
        let t = hexagon_formula_areas(self);
        t.efa * t.fab / t.efb
    }

    /// Area ratio of the cover `HCDEG` from the closed forms.
    pub fn cover_ratio(&self) -> S {
        let total = hexagon_formula_areas(self).total;
        (total.clone() + self.corner_ahb() + self.corner_fga()) / total
    }

    pub fn to_f64(&self) -> HexagonParams<f64> {
        let [a, b, c, d, e, f] = self.as_array().map(|x| x.to_f64());
        HexagonParams::new(a, b, c, d, e, f)
    }
}

fn check_hexagon<S: Scalar>(h: &ConvexPolygon<S>) -> Result<(), HexagonError> {
    if h.len() != 6 {
        return Err(HexagonError::WrongVertexCount(h.len()));
    }
    let threshold = S::approx_eps(CONVEXITY_TOL) * h.diameter_sq();
    if (0..6).any(|i| h.ear_area(i) <= threshold) {
        return Err(HexagonError::DegenerateHexagon("an ear has no area".into()));
    }
    Ok(())
}

/// Frame and parameters for the labeling `A = h[0]`, or `None` if some
/// parameter is not positive in this labeling.
fn params_for_labeling<S: Scalar>(
    h: &ConvexPolygon<S>,
) -> Result<Option<(HexagonParams<S>, HexagonFrame<S>)>, HexagonError> {
    let [a, b, c, d, e, f] = [0, 1, 2, 3, 4, 5].map(|i| h.vertex(i).clone());
    let ad = Line2::through(&a, &d)?;
    let be = Line2::through(&b, &e)?;
    let cf = Line2::through(&c, &f)?;
    let m = line_intersect(&ad, &be)?;
    let n = line_intersect(&ad, &cf)?;
    let pt = line_intersect(&cf, &be)?;
    let u = &n - &m;
    let v = &pt - &m;
    let scale = wedge(&u, &v);
    if scale <= S::zero() {
        return Ok(None);
    }
    // frame coordinates: X − M = s·u + t·v
    let coords = |x: &Vector2<S>| {
        let r = x - &m;
        (wedge(&r, &v) / scale.clone(), wedge(&u, &r) / scale.clone())
    };
    let params = HexagonParams::new(
        -coords(&a).0,
        -coords(&b).1,
        -coords(&c).1,
        coords(&d).0 - S::one(),
        coords(&e).1 - S::one(),
        -coords(&f).0,
    );
    if params.as_array().iter().any(|x| *x <= S::zero()) {
        return Ok(None);
    }
    let w = &v - &u;
    Ok(Some((params, HexagonFrame { m, n, pt, u, v, w, scale })))
}

/// Moves one vertex outwards by `1e-3 × diameter` along the normal of an
/// incident edge, trying vertex 0 first, until the diagonals separate.
fn perturb_apart<S: Scalar>(h: &ConvexPolygon<S>) -> Result<ConvexPolygon<S>, HexagonError> {
    let f = h.to_f64();
    let delta = 1e-3 * f.diameter();
    for i in 0..6 {
        for edge in [f.edge(i), f.edge(i + 5)] {
            let normal = Vector2::new(edge.y, -edge.x).scale(delta / edge.norm());
            let shift = Vector2::new(S::from_f64(normal.x), S::from_f64(normal.y));
            let mut vertices = h.vertices().to_vec();
            vertices[i] = &vertices[i] + &shift;
            if let Ok(q) = ConvexPolygon::new(vertices) {
                if !diagonals_concurrent(&q)? {
                    return Ok(q);
                }
            }
        }
    }
    Err(HexagonError::DegenerateHexagon("could not separate concurrent diagonals".into()))
}

fn diagonals_concurrent<S: Scalar>(h: &ConvexPolygon<S>) -> Result<bool, HexagonError> {
    let [a, b, c, d, e, f] = [0, 1, 2, 3, 4, 5].map(|i| h.vertex(i).clone());
    let m = line_intersect(&Line2::through(&a, &d)?, &Line2::through(&b, &e)?)?;
    let cf = Line2::through(&c, &f)?;
    let off = cf.side(&m);
    Ok(off.clone() * off <= S::approx_eps(1e-18) * h.diameter_sq() * cf.direction.norm_sq())
}

/// Labeling with `a = min{a, …, f}`.
///
/// All six rotations of both orientations are tried; a vertex's parameter
/// does not depend on the labeling, so this selects the vertex with the
/// smallest parameter. Ties within a relative `1e-9` (exact equality in
/// exact mode) go to the smallest rotation, unmirrored first.
pub fn extract_hexagon_params<S: Scalar>(
    h: &ConvexPolygon<S>,
) -> Result<HexagonExtraction<S>, HexagonError> {
    check_hexagon(h)?;
    let (base, perturbed) = if diagonals_concurrent(h)? {
        (perturb_apart(h)?, true)
    } else {
        (h.clone(), false)
    };
    let mut best: Option<HexagonExtraction<S>> = None;
    for mirrored in [false, true] {
        let oriented = if mirrored { base.mirrored() } else { base.clone() };
        for rotation in 0..6 {
            let Some((params, frame)) = params_for_labeling(&oriented.rotated(rotation))? else {
                continue;
            };
            let better = match &best {
                None => true,
                Some(b) => params.a.clone() < b.params.a.clone() - S::approx_eps(1e-9) * b.params.a.clone(),
            };
            if better {
                best = Some(HexagonExtraction { params, frame, rotation, mirrored, perturbed });
            }
        }
    }
    best.ok_or_else(|| HexagonError::DegenerateHexagon("no labeling has positive parameters".into()))
}

/// Closed-form total area and the triangles used by the construction.
pub fn hexagon_formula_areas<S: Scalar>(p: &HexagonParams<S>) -> HexagonAreas<S> {
    let [a, b, c, d, e, f] = p.as_array();
    let one = S::one();
    let total = one.clone()
        + a.clone() + b.clone() + c.clone() + d.clone() + e.clone() + f.clone()
        + a.clone() * b.clone()
        + b.clone() * c.clone()
        + c.clone() * d.clone()
        + d * e.clone()
        + e.clone() * f.clone()
        + f.clone() * a.clone();
    HexagonAreas {
        total,
        efa: f.clone() * (one.clone() + e.clone() + a.clone()) - e.clone() * a.clone(),
        fab: a.clone() * (one.clone() + f.clone() + b.clone()) - f.clone() * b.clone(),
        abc: b.clone() * (one.clone() + a.clone() + c.clone()) - a.clone() * c.clone(),
        fbc: (one.clone() + b.clone()) * (one.clone() + c + f.clone()),
        efb: f * (one + b + e),
    }
}

/// Hexagon with `M` at the origin, `u = (1, 0)` and `v = (0, 2)`.
pub fn hexagon_from_params<S: Scalar>(
    p: &HexagonParams<S>,
) -> Result<ConvexPolygon<S>, HexagonError> {
    if p.as_array().iter().any(|x| *x <= S::zero()) {
        return Err(HexagonError::InfeasibleParams("all parameters must be positive".into()));
    }
    let [a, b, c, d, e, f] = p.as_array();
    let (zero, one, two) = (S::zero(), S::one(), S::from_i64(2));
    let vertices = vec![
        Vector2::new(-a, zero.clone()),
        Vector2::new(zero.clone(), -(two.clone() * b)),
        Vector2::new(one.clone() + c.clone(), -(two.clone() * c)),
        Vector2::new(one.clone() + d, zero.clone()),
        Vector2::new(zero, two.clone() + two.clone() * e),
        Vector2::new(-f.clone(), two.clone() + two * f),
    ];
    validate_convex(vertices, S::approx_eps(CONVEXITY_TOL))
        .map_err(|e| HexagonError::InfeasibleParams(e.to_string()))
}

/// Upper bounds for `|AHB|` and `|FGA|` that hold when `c, e ≥ a`; they are
/// the values at `c = a` and `e = a`.
pub fn corner_bounds<S: Scalar>(a: &S, b: &S, f: &S) -> (S, S) {
    let (a, b, f) = (a.clone(), b.clone(), f.clone());
    let one = S::one();
    let two = S::from_i64(2);
    let fab = a.clone() + a.clone() * f.clone() + a.clone() * b.clone() - f.clone() * b.clone();
    let a2 = a.clone() * a.clone();
    let ahb = fab.clone() * (b.clone() + two.clone() * a.clone() * b.clone() - a2.clone())
        / ((one.clone() + b.clone()) * (one.clone() + a.clone() + f.clone()));
    let fga = fab * (f.clone() + two * a.clone() * f.clone() - a2) / (f * (one + a + b));
    (ahb, fga)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HexagonConstruction<S = f64> {
    pub labeling: usize,
    /// On line `EF` beyond `F`.
    pub g: Vector2<S>,
    /// On line `CB` beyond `B`.
    pub h: Vector2<S>,
    /// Vertices `H, C, D, E, G`.
    pub cover: ConvexPolygon<S>,
    pub ahb: S,
    pub fga: S,
}

/// Builds `HCDEG` for rotation `k`.
pub fn construct_for_labeling<S: Scalar>(
    hex: &ConvexPolygon<S>,
    k: usize,
) -> Result<HexagonConstruction<S>, HexagonError> {
    check_hexagon(hex)?;
    let [a, b, c, d, e, f] = [0, 1, 2, 3, 4, 5].map(|i| hex.vertex(k + i).clone());
    let cut = Line2::new(a.clone(), &b - &f)?;
    let cb = Line2::through(&c, &b)?;
    let ef = Line2::through(&e, &f)?;
    let th = cb.intersect_param(&cut)?;
    let tg = ef.intersect_param(&cut)?;
    if th <= S::one() || tg <= S::one() {
        return Err(HexagonError::DegenerateHexagon(format!(
            "labeling {k}: cut line misses the side extensions"
        )));
    }
    let h = cb.at(th);
    let g = ef.at(tg);
    let cover = validate_convex(
        vec![h.clone(), c, d, e, g.clone()],
        S::approx_eps(CONVEXITY_TOL),
    )?;
    let tol = S::approx_eps(1e-9 * hex.diameter_sq().to_f64().sqrt());
    if !cover.contains_polygon(hex, &tol) {
        return Err(HexagonError::DegenerateHexagon(format!(
            "labeling {k}: cover misses a vertex"
        )));
    }
    let ahb = triangle_area(&a, &h, &b);
    let fga = triangle_area(&f, &g, &a);
    Ok(HexagonConstruction { labeling: k, g, h, cover, ahb, fga })
}

/// Smallest valid `HCDEG` over the six rotations; ratio at most `7/6`.
///
/// Mirroring a labeling keeps `A` and the cut line and swaps `G` with `H`,
/// so the mirrored labelings add nothing.
pub fn circumscribe_hexagon<S: Scalar>(
    hex: &ConvexPolygon<S>,
) -> Result<Circumscription<S>, HexagonError> {
    check_hexagon(hex)?;
    let mut best: Option<HexagonConstruction<S>> = None;
    let mut last_err = None;
    for k in 0..6 {
        match construct_for_labeling(hex, k) {
            Ok(c) => {
                if best.as_ref().is_none_or(|b| c.cover.area() < b.cover.area()) {
                    best = Some(c);
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    let best = best.ok_or_else(|| {
        last_err.unwrap_or_else(|| HexagonError::DegenerateHexagon("no valid labeling".into()))
    })?;
    Ok(Circumscription {
        ratio: best.cover.area() / hex.area(),
        labeling: best.labeling,
        construction_points: vec![best.g, best.h],
        cover: best.cover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, BigRational};
    use crate::geom::{affine_apply, random_convex_ngon, regular_ngon, AffineMap};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ones() -> HexagonParams {
        HexagonParams::new(1.0, 1.0, 1.0, 1.0, 1.0, 1.0)
    }

    fn random_params(rng: &mut ChaCha8Rng) -> HexagonParams {
        let mut draw = || (rng.random_range(-3.0f64..1.5)).exp();
        HexagonParams::new(draw(), draw(), draw(), draw(), draw(), draw())
    }

    #[test]
    fn unit_params_areas() {
        let h = hexagon_from_params(&ones()).unwrap();
        assert!((h.area() - 13.0).abs() < 1e-12);
        let t = hexagon_formula_areas(&ones());
        assert_eq!((t.total, t.efa, t.fab, t.abc, t.fbc, t.efb), (13.0, 2.0, 2.0, 2.0, 6.0, 3.0));
        // |ANF| = (a + 1)(f + 1)
        let n = Vector2::new(1.0, 0.0);
        assert!((triangle_area(h.vertex(0), &n, h.vertex(5)) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn unit_params_round_trip() {
        let h = hexagon_from_params(&ones()).unwrap();
        let x = extract_hexagon_params(&h).unwrap();
        assert!(!x.perturbed);
        for p in x.params.as_array() {
            assert!((p - 1.0).abs() < 1e-9);
        }
        assert!((x.frame.scale - 1.0).abs() < 1e-12);
        assert_eq!(x.frame.w, x.frame.v - x.frame.u);
    }

    #[test]
    fn tiny_parameter_does_not_crash() {
        let p = HexagonParams::new(1e-9, 1.0, 1.0, 1.0, 1.0, 1.0);
        match hexagon_from_params(&p) {
            Ok(h) => assert!(h.area() > 0.0),
            Err(e) => assert!(matches!(e, HexagonError::InfeasibleParams(_))),
        }
        assert!(hexagon_from_params(&HexagonParams::new(0.0, 1.0, 1.0, 1.0, 1.0, 1.0)).is_err());
    }

    #[test]
    fn regular_hexagon_uses_perturbation() {
        let h = regular_ngon(6, 1.0).unwrap();
        let x = extract_hexagon_params(&h).unwrap();
        assert!(x.perturbed);
        let ps = x.params.as_array();
        let (lo, hi) = (ps.iter().cloned().fold(f64::MAX, f64::min), ps.iter().cloned().fold(0.0, f64::max));
        assert!(lo > 0.0);
        // params blow up as |MNP| → 0, but stay comparable to one another
        assert!(hi / lo < 10.0, "{ps:?}");
    }

    #[test]
    fn exact_affine_regular_hexagon_uses_perturbation() {
        let pts = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)];
        let h: ConvexPolygon<BigRational> = ConvexPolygon::new(
            pts.iter().map(|&(x, y)| Vector2::new(rational(x, 1), rational(y, 1))).collect(),
        )
        .unwrap();
        let x = extract_hexagon_params(&h).unwrap();
        assert!(x.perturbed);
        assert!(x.params.as_array().iter().all(|p| *p > rational(0, 1)));
    }

    #[test]
    fn extraction_picks_min_and_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut done = 0;
        while done < 300 {
            let p = random_params(&mut rng);
            let Ok(h) = hexagon_from_params(&p) else { continue };
            done += 1;
            let x = extract_hexagon_params(&h).unwrap();
            let min = p.as_array().into_iter().fold(f64::MAX, f64::min);
            assert!((x.params.a - min).abs() <= 1e-9 * (1.0 + min));
            let got = x.params.as_array();
            for v in got {
                assert!(p.as_array().iter().any(|w| (v - w).abs() <= 1e-7 * (1.0 + w)));
            }
        }
    }

    #[test]
    fn extraction_on_random_hexagons() {
        for seed in 0..300 {
            let h = random_convex_ngon(6, seed).unwrap();
            let x = extract_hexagon_params(&h).unwrap();
            assert!(x.params.as_array().iter().all(|&p| p >= x.params.a));
        }
    }

    #[test]
    fn formula_matches_shoelace() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut done = 0;
        while done < 10_000 {
            let p = random_params(&mut rng);
            let Ok(h) = hexagon_from_params(&p) else { continue };
            done += 1;
            let t = hexagon_formula_areas(&p);
            let [a, b, c, _, e, f] = [0, 1, 2, 3, 4, 5].map(|i| *h.vertex(i));
            let rel = |x: f64, y: f64| (x - y).abs() <= 1e-9 * y.abs().max(1.0);
            assert!(rel(h.area(), t.total));
            assert!(rel(triangle_area(&e, &f, &a), t.efa));
            assert!(rel(triangle_area(&f, &a, &b), t.fab));
            assert!(rel(triangle_area(&a, &b, &c), t.abc));
            assert!(rel(triangle_area(&f, &b, &c), t.fbc));
            assert!(rel(triangle_area(&e, &f, &b), t.efb));
            assert!(t.fbc > 0.0);
        }
    }

    #[test]
    fn unit_params_cover_ratio() {
        let p = ones();
        assert!((p.corner_ahb() - 2.0 / 3.0).abs() < 1e-15);
        assert!((p.corner_fga() - 4.0 / 3.0).abs() < 1e-15);
        let h = hexagon_from_params(&p).unwrap();
        let c = circumscribe_hexagon(&h).unwrap();
        assert!((c.ratio - 15.0 / 13.0).abs() < 1e-12, "{}", c.ratio);
    }

    #[test]
    fn regular_hexagon_ratio() {
        let h = regular_ngon(6, 1.0).unwrap();
        let c = circumscribe_hexagon(&h).unwrap();
        assert!((c.ratio - 7.0 / 6.0).abs() < 1e-12);
        assert_eq!(c.cover.len(), 5);
        assert!(c.cover.contains_polygon(&h, &1e-9));
    }

    #[test]
    fn exact_affine_regular_ratio() {
        let pts = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)];
        let h: ConvexPolygon<BigRational> = ConvexPolygon::new(
            pts.iter().map(|&(x, y)| Vector2::new(rational(x, 1), rational(y, 1))).collect(),
        )
        .unwrap();
        assert_eq!(circumscribe_hexagon(&h).unwrap().ratio, rational(7, 6));
    }

    #[test]
    fn construction_geometry_and_closed_forms() {
        for seed in 0..300 {
            let hex = random_convex_ngon(6, seed).unwrap();
            let scale = hex.diameter_sq();
            for k in 0..6 {
                let con = construct_for_labeling(&hex, k).unwrap();
                let q = hex.rotated(k);
                let [a, b, c, _, e, f] = [0, 1, 2, 3, 4, 5].map(|i| *q.vertex(i));
                assert!((b - c).cross(&(con.h - c)).abs() <= 1e-9 * scale);
                assert!((f - e).cross(&(con.g - e)).abs() <= 1e-9 * scale);
                assert!((con.g - con.h).cross(&(a - con.h)).abs() <= 1e-9 * scale);
                assert!((a - con.g).dot(&(a - con.h)) <= 0.0);
                assert!((con.g - con.h).cross(&(b - f)).abs() <= 1e-9 * scale);
                let t = |p: &Vector2, q: &Vector2, r: &Vector2| triangle_area(p, q, r);
                let (fab, abc, fbc) = (t(&f, &a, &b), t(&a, &b, &c), t(&f, &b, &c));
                let (efa, efb) = (t(&e, &f, &a), t(&e, &f, &b));
                assert!((con.ahb - fab * abc / fbc).abs() <= 1e-9 * scale);
                assert!((con.fga - efa * fab / efb).abs() <= 1e-9 * scale);
            }
        }
    }

    #[test]
    fn random_ratio_bound() {
        for seed in 0..20_000 {
            let hex = random_convex_ngon(6, seed).unwrap();
            let c = circumscribe_hexagon(&hex).unwrap();
            assert!(c.ratio <= 7.0 / 6.0 + 1e-12, "seed {seed}: {}", c.ratio);
            assert!(c.ratio >= 1.0);
        }
    }

    #[test]
    fn ratio_is_affine_invariant() {
        let hex = random_convex_ngon(6, 4).unwrap();
        let base = circumscribe_hexagon(&hex).unwrap().ratio;
        let t = AffineMap::new([[0.3, 1.7], [-2.0, 0.4]], Vector2::new(-3.0, 8.0));
        let q = affine_apply(&t, &hex).unwrap();
        assert!((circumscribe_hexagon(&q).unwrap().ratio - base).abs() < 1e-9);
    }

    #[test]
    fn corner_bounds_examples_and_monotonicity() {
        let (ahb, fga) = corner_bounds(&1.0, &1.0, &1.0);
        assert!((ahb - 2.0 / 3.0).abs() < 1e-15);
        assert!((fga - 4.0 / 3.0).abs() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut done = 0;
        while done < 2000 {
            let p = random_params(&mut rng);
            if hexagon_from_params(&p).is_err() {
                continue;
            }
            done += 1;
            let at_c = HexagonParams { c: p.a, ..p.clone() };
            let at_e = HexagonParams { e: p.a, ..p.clone() };
            let (ahb_b, fga_b) = corner_bounds(&p.a, &p.b, &p.f);
            assert!((at_c.corner_ahb() - ahb_b).abs() <= 1e-12 * (1.0 + ahb_b.abs()));
            assert!((at_e.corner_fga() - fga_b).abs() <= 1e-12 * (1.0 + fga_b.abs()));
            if hexagon_formula_areas(&p).fab > 0.0 {
                let h = 1e-6;
                let bumped = HexagonParams { c: p.c + h, ..p.clone() };
                assert!(bumped.corner_ahb() < p.corner_ahb());
                if p.c >= p.a && p.e >= p.a {
                    assert!(p.corner_ahb() <= ahb_b * (1.0 + 1e-12) + 1e-15);
                    assert!(p.corner_fga() <= fga_b * (1.0 + 1e-12) + 1e-15);
                }
            }
        }
    }

    #[test]
    fn inequality_chain_on_min_labeled_params() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut done = 0;
        while done < 2000 {
            let p = random_params(&mut rng);
            if hexagon_from_params(&p).is_err() || p.as_array().iter().any(|&x| x < p.a) {
                continue;
            }
            done += 1;
            let total = hexagon_formula_areas(&p).total;
            assert!(total - 6.0 * p.corner_ahb() - 6.0 * p.corner_fga() >= -1e-9 * total);
        }
    }

    #[test]
    fn wrong_vertex_count() {
        let p = regular_ngon(5, 1.0).unwrap();
        assert_eq!(extract_hexagon_params(&p), Err(HexagonError::WrongVertexCount(5)));
        assert!(matches!(circumscribe_hexagon(&p), Err(HexagonError::WrongVertexCount(5))));
    }
}
