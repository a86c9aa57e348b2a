//! Quadrilaterals around convex pentagons.
//!
//! A pentagon `ABCDE` is labeled so that the ear `DEA` is smallest. With
//! `O = AC ∩ BD`, `u = OD`, `v = OA` scaled to `u ∧ v = 1`, the pentagon is
//! determined up to affinity by four positive numbers:
//!
//! ```text
//! OB = -a·u,  OC = -b·v,  OE = c·u + d·v
//! ```
//!
//! The cover `BCFG` is cut by the line through `E` parallel to `AD`; its area
//! never exceeds `3/√5` times the pentagon's. The algebraic half of that
//! bound lives in [`certificate`].

pub mod certificate;

use crate::cover::Circumscription;
use crate::geom::{
    line_intersect, triangle_area, validate_convex, wedge, ConvexPolygon, GeomError, Line2,
    Scalar, Vector2, CONVEXITY_TOL,
};

pub use certificate::{
    certificate_check, certificate_sum, certificate_terms, g_direct, g_direct_f64, g_from_areas, g_polynomial,
    CertificateReport, CertificateTerm,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PentagonError {
    #[error("expected a pentagon, got {0} vertices")]
    WrongVertexCount(usize),
    #[error("pentagon is degenerate: {0}")]
    DegeneratePentagon(String),
    #[error("parameters are infeasible: {0}")]
    InfeasibleParams(String),
    #[error("certificate expansion differs from g in {residual_terms} terms")]
    CertificateMismatch { residual_terms: usize },
    #[error("certificate coefficient {index} is negative")]
    NegativeCoefficient { index: usize },
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

/// Area ratios of a min-ear labeled pentagon, in units of `|AOD|`.
#[derive(Clone, Debug, PartialEq)]
pub struct PentagonParams<S = f64> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

/// The diagonal frame: `origin = AC ∩ BD`, `u = OD`, `v = OA`, and
/// `scale = u ∧ v = |AOD|`, the area unit the parameters are measured in.
#[derive(Clone, Debug, PartialEq)]
pub struct PentagonFrame<S = f64> {
    pub origin: Vector2<S>,
    pub u: Vector2<S>,
    pub v: Vector2<S>,
    pub scale: S,
}

/// Total area and the five ears `(ABC, BCD, CDE, DEA, EAB)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PentagonAreas<S = f64> {
    pub total: S,
    pub ears: [S; 5],
}

impl<S: Scalar> PentagonParams<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        PentagonParams { a, b, c, d }
    }

    /// `e = 1 + a + ab − c − d`, nonnegative iff `|DEA| ≤ |ABC|`.
    pub fn e(&self) -> S {
        S::one() + self.a.clone() + self.a.clone() * self.b.clone() - self.c.clone() - self.d.clone()
    }

    /// `f = 1 + b + ab − c − d`, nonnegative iff `|DEA| ≤ |BCD|`.
    pub fn f(&self) -> S {
        S::one() + self.b.clone() + self.a.clone() * self.b.clone() - self.c.clone() - self.d.clone()
    }

    /// `|DFE|` of the cover construction.
    pub fn corner_dfe(&self) -> S {
        let (b, c, d) = (self.b.clone(), self.c.clone(), self.d.clone());
        (c.clone() + d.clone() - S::one()) * (b.clone() - b.clone() * c + d) / (S::one() + b)
    }

    /// `|EGA|` of the cover construction.
    pub fn corner_ega(&self) -> S {
        let (a, c, d) = (self.a.clone(), self.c.clone(), self.d.clone());
        (c.clone() + d.clone() - S::one()) * (a.clone() - a.clone() * d + c) / (S::one() + a)
    }

    /// `|BCFG| / |ABCDE|` from the closed forms.
    pub fn cover_ratio(&self) -> S {
        let total = pentagon_formula_areas(self).total;
        (total.clone() + self.corner_dfe() + self.corner_ega()) / total
    }

    pub fn to_f64(&self) -> PentagonParams<f64> {
        PentagonParams::new(self.a.to_f64(), self.b.to_f64(), self.c.to_f64(), self.d.to_f64())
    }
}

fn check_pentagon<S: Scalar>(p: &ConvexPolygon<S>) -> Result<(), PentagonError> {
    if p.len() != 5 {
        return Err(PentagonError::WrongVertexCount(p.len()));
    }
    let threshold = S::approx_eps(CONVEXITY_TOL) * p.diameter_sq();
    for i in 0..5 {
        if p.ear_area(i) <= threshold {
            return Err(PentagonError::DegeneratePentagon(format!(
                "ear at vertex {i} has no area"
            )));
        }
    }
    Ok(())
}

/// Rotation `k` that makes the smallest ear `DEA`, i.e. puts the vertex
/// with the smallest ear at label `E = v[k + 4]`.
///
/// Ears within a relative `1e-9` of the minimum count as tied (exactly equal
/// in exact mode); ties go to the smallest `k`.
pub fn min_ear_relabel<S: Scalar>(p: &ConvexPolygon<S>) -> Result<usize, PentagonError> {
    check_pentagon(p)?;
    let ears: Vec<S> = (0..5).map(|i| p.ear_area(i)).collect();
    let min = ears.iter().cloned().reduce(S::min_of).expect("five ears");
    let slack = S::approx_eps(1e-9) * min.clone();
    (0..5)
        .find(|&k| ears[(k + 4) % 5] <= min.clone() + slack.clone())
        .ok_or_else(|| PentagonError::DegeneratePentagon("no minimal ear".into()))
}

/// Parameters of a pentagon whose labels are already min-ear ordered
/// (`A = v[0]`, …, `E = v[4]`).
pub fn extract_params<S: Scalar>(
    p: &ConvexPolygon<S>,
) -> Result<(PentagonParams<S>, PentagonFrame<S>), PentagonError> {
    check_pentagon(p)?;
    let [a, b, c, d, e] = [0, 1, 2, 3, 4].map(|i| p.vertex(i).clone());
    let origin = line_intersect(&Line2::through(&a, &c)?, &Line2::through(&b, &d)?)?;
    let u = &d - &origin;
    let v = &a - &origin;
    let scale = wedge(&u, &v);
    if scale <= S::zero() {
        return Err(PentagonError::DegeneratePentagon("diagonal frame collapsed".into()));
    }
    let ratio = |x: &Vector2<S>, y: &Vector2<S>| triangle_area(&origin, x, y) / scale.clone();
    let params = PentagonParams::new(ratio(&a, &b), ratio(&c, &d), ratio(&e, &a), ratio(&d, &e));
    for (name, value) in [("a", &params.a), ("b", &params.b), ("c", &params.c), ("d", &params.d)] {
        if *value <= S::zero() {
            return Err(PentagonError::DegeneratePentagon(format!("parameter {name} is not positive")));
        }
    }
    Ok((params, PentagonFrame { origin, u, v, scale }))
}

/// Relabels by [`min_ear_relabel`] and extracts parameters.
pub fn relabel_and_extract<S: Scalar>(
    p: &ConvexPolygon<S>,
) -> Result<(usize, PentagonParams<S>, PentagonFrame<S>), PentagonError> {
    let k = min_ear_relabel(p)?;
    let (params, frame) = extract_params(&p.rotated(k))?;
    Ok((k, params, frame))
}

/// Closed-form total area `a + b + c + d + ab` and ears.
pub fn pentagon_formula_areas<S: Scalar>(params: &PentagonParams<S>) -> PentagonAreas<S> {
    let PentagonParams { a, b, c, d } = params.clone();
    let ab = a.clone() * b.clone();
    PentagonAreas {
        total: a.clone() + b.clone() + c.clone() + d.clone() + ab.clone(),
        ears: [
            a.clone() + ab.clone(),
            b.clone() + ab,
            b.clone() + d.clone() - b * c.clone(),
            c.clone() + d.clone() - S::one(),
            a.clone() + c - a * d,
        ],
    }
}

/// Pentagon with `O` at the origin, `u = (1, 0)` and `v = (0, 2)`.
///
/// Requires positive parameters satisfying the min-ear constraints
/// `c ≤ 1, d ≤ 1, e ≥ 0, f ≥ 0` (to within `1e-9` in floating mode) and a
/// nondegenerate ear `DEA`.
pub fn pentagon_from_params<S: Scalar>(
    params: &PentagonParams<S>,
) -> Result<ConvexPolygon<S>, PentagonError> {
    let margin = S::approx_eps(1e-9);
    let infeasible = |what: &str| Err(PentagonError::InfeasibleParams(what.to_string()));
    let PentagonParams { a, b, c, d } = params.clone();
    if a <= S::zero() || b <= S::zero() || c <= S::zero() || d <= S::zero() {
        return infeasible("a, b, c, d must be positive");
    }
    let neg_margin = -margin.clone();
    if S::one() - c.clone() < neg_margin || S::one() - d.clone() < neg_margin {
        return infeasible("c and d must not exceed 1");
    }
    if params.e() < neg_margin || params.f() < neg_margin {
        return infeasible("e and f must be nonnegative");
    }
    if c.clone() + d.clone() - S::one() <= margin {
        return infeasible("ear DEA is degenerate");
    }
    let two = S::from_i64(2);
    let vertices = vec![
        Vector2::new(S::zero(), two.clone()),
        Vector2::new(-a, S::zero()),
        Vector2::new(S::zero(), -(two.clone() * b)),
        Vector2::new(S::one(), S::zero()),
        Vector2::new(c, two * d),
    ];
    validate_convex(vertices, S::approx_eps(CONVEXITY_TOL))
        .map_err(|e| PentagonError::InfeasibleParams(e.to_string()))
}

/// One labeling's cover `BCFG`.
#[derive(Clone, Debug, PartialEq)]
pub struct PentagonConstruction<S = f64> {
    pub labeling: usize,
    /// On ray `CD` beyond `D`.
    pub f: Vector2<S>,
    /// On ray `BA` beyond `A`.
    pub g: Vector2<S>,
    pub cover: ConvexPolygon<S>,
    pub dfe: S,
    pub ega: S,
}

/// Builds `BCFG` for rotation `k`, or reports why it is not a valid cover.
pub fn construct_for_labeling<S: Scalar>(
    p: &ConvexPolygon<S>,
    k: usize,
) -> Result<PentagonConstruction<S>, PentagonError> {
    check_pentagon(p)?;
    let [a, b, c, d, e] = [0, 1, 2, 3, 4].map(|i| p.vertex(k + i).clone());
    let cut = Line2::new(e.clone(), &d - &a)?;
    let cd = Line2::through(&c, &d)?;
    let ba = Line2::through(&b, &a)?;
    let tf = cd.intersect_param(&cut)?;
    let tg = ba.intersect_param(&cut)?;
    if tf <= S::one() || tg <= S::one() {
        return Err(PentagonError::DegeneratePentagon(format!(
            "labeling {k}: cut line misses the side extensions"
        )));
    }
    let f = cd.at(tf);
    let g = ba.at(tg);
    let cover = validate_convex(
        vec![b, c, f.clone(), g.clone()],
        S::approx_eps(CONVEXITY_TOL),
    )?;
    let tol = S::approx_eps(1e-9 * p.diameter_sq().to_f64().sqrt());
    if !cover.contains_polygon(p, &tol) {
        return Err(PentagonError::DegeneratePentagon(format!(
            "labeling {k}: cover misses a vertex"
        )));
    }
    let dfe = triangle_area(&d, &f, &e);
    let ega = triangle_area(&e, &g, &a);
    Ok(PentagonConstruction {
        labeling: k,
        f,
        g,
        cover,
        dfe,
        ega,
    })
}

/// Smallest valid `BCFG` over the five labelings (ties to the smallest
/// rotation). Its ratio is at most `3/√5`.
pub fn circumscribe_pentagon<S: Scalar>(
    p: &ConvexPolygon<S>,
) -> Result<Circumscription<S>, PentagonError> {
    check_pentagon(p)?;
    let mut best: Option<PentagonConstruction<S>> = None;
    let mut last_err = None;
    for k in 0..5 {
        match construct_for_labeling(p, k) {
            Ok(c) => {
                if best.as_ref().is_none_or(|b| c.cover.area() < b.cover.area()) {
                    best = Some(c);
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    let best = best.ok_or_else(|| {
        last_err.unwrap_or_else(|| PentagonError::DegeneratePentagon("no valid labeling".into()))
    })?;
    Ok(Circumscription {
        ratio: best.cover.area() / p.area(),
        labeling: best.labeling,
        construction_points: vec![best.f, best.g],
        cover: best.cover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Root5Number;
    use crate::geom::{affine_apply, random_convex_ngon, regular_ngon, AffineMap};

    const PHI: f64 = 0.6180339887498949;

    fn params(a: f64, b: f64, c: f64, d: f64) -> PentagonParams {
        PentagonParams::new(a, b, c, d)
    }

    #[test]
    fn regular_pentagon_labels_and_params() {
        let p = regular_ngon(5, 1.0).unwrap();
        assert_eq!(min_ear_relabel(&p).unwrap(), 0);
        let (k, prm, frame) = relabel_and_extract(&p).unwrap();
        assert_eq!(k, 0);
        for (x, want) in [(prm.a, PHI), (prm.b, PHI), (prm.c, 1.0), (prm.d, 1.0)] {
            assert!((x - want).abs() < 1e-9, "{x} vs {want}");
        }
        assert!(frame.scale > 0.0);
    }

    #[test]
    fn unique_small_ear_is_rotated_to_dea() {
        // shrink the ear at vertex 3 by pulling it inwards
        let mut v = regular_ngon(5, 1.0).unwrap().vertices().to_vec();
        v[3] = 0.8 * v[3];
        let p = ConvexPolygon::new(v).unwrap();
        let k = min_ear_relabel(&p).unwrap();
        assert_eq!((k + 4) % 5, 3);
        let q = p.rotated(k);
        let ears: Vec<f64> = (0..5).map(|i| q.ear_area(i)).collect();
        assert!(ears.iter().all(|&x| x >= ears[4]));
    }

    #[test]
    fn degenerate_pentagon_rejected() {
        let raw = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.0, 1.0)];
        let tri = ConvexPolygon::from_trusted(raw.iter().map(|&(x, y)| Vector2::new(x, y)).collect());
        assert!(matches!(min_ear_relabel(&tri), Err(PentagonError::DegeneratePentagon(_))));
        let sq = regular_ngon(4, 1.0).unwrap();
        assert_eq!(min_ear_relabel(&sq), Err(PentagonError::WrongVertexCount(4)));
    }

    #[test]
    fn from_params_examples() {
        let p = pentagon_from_params(&params(1.0, 1.0, 1.0, 1.0)).unwrap();
        assert!((p.area() - 5.0).abs() < 1e-12);
        let (_, back, _) = relabel_and_extract(&p).unwrap();
        for x in [back.a, back.b, back.c, back.d] {
            assert!((x - 1.0).abs() < 1e-9);
        }
        assert!(matches!(
            pentagon_from_params(&params(1.0, 1.0, 2.0, 2.0)),
            Err(PentagonError::InfeasibleParams(_))
        ));
        assert!(pentagon_from_params(&params(-1.0, 1.0, 1.0, 1.0)).is_err());
    }

    #[test]
    fn golden_params_give_affine_regular_pentagon() {
        let p = pentagon_from_params(&params(PHI, PHI, 1.0, 1.0)).unwrap();
        let ears: Vec<f64> = (0..5).map(|i| p.ear_area(i)).collect();
        for e in &ears {
            assert!((e - ears[0]).abs() < 1e-12);
        }
        let areas = pentagon_formula_areas(&params(PHI, PHI, 1.0, 1.0));
        for e in areas.ears {
            assert!((e - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn formula_areas_for_unit_params() {
        let areas = pentagon_formula_areas(&params(1.0, 1.0, 1.0, 1.0));
        assert_eq!(areas.total, 5.0);
        assert_eq!(areas.ears, [2.0, 2.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn unit_params_cover_ratio_is_six_fifths() {
        let prm = params(1.0, 1.0, 1.0, 1.0);
        assert_eq!(prm.corner_dfe(), 0.5);
        assert_eq!(prm.corner_ega(), 0.5);
        let p = pentagon_from_params(&prm).unwrap();
        let c = circumscribe_pentagon(&p).unwrap();
        assert!((c.ratio - 1.2).abs() < 1e-12);
        let con = construct_for_labeling(&p, 0).unwrap();
        assert!((con.dfe - 0.5).abs() < 1e-12 && (con.ega - 0.5).abs() < 1e-12);
    }

    #[test]
    fn regular_pentagon_ratio() {
        let p = regular_ngon(5, 1.0).unwrap();
        let c = circumscribe_pentagon(&p).unwrap();
        assert!((c.ratio - 3.0 / 5f64.sqrt()).abs() < 1e-12);
        assert_eq!(c.cover.len(), 4);
        assert!(c.cover.contains_polygon(&p, &1e-9));
    }

    #[test]
    fn exact_golden_pentagon_ratio_is_three_over_root_five() {
        let phi = Root5Number::phi();
        let one = Root5Number::from(1);
        let prm = PentagonParams::new(phi.clone(), phi, one.clone(), one);
        let p = pentagon_from_params(&prm).unwrap();
        let c = circumscribe_pentagon(&p).unwrap();
        let target = Root5Number::new(crate::algebra::rational(0, 1), crate::algebra::rational(3, 5));
        assert_eq!(c.ratio, target);
        assert!(c.cover.contains_polygon(&p, &Root5Number::default()));
    }

    #[test]
    fn construction_geometry_and_closed_forms() {
        for seed in 0..300 {
            let p = random_convex_ngon(5, seed).unwrap();
            let (k, prm, _) = relabel_and_extract(&p).unwrap();
            let con = construct_for_labeling(&p, k).unwrap();
            let q = p.rotated(k);
            let [a, b, c, d, e] = [0, 1, 2, 3, 4].map(|i| *q.vertex(i));
            let scale = q.diameter_sq();
            // F on CD, G on BA, E between F and G, FG parallel to AD
            assert!((d - c).cross(&(con.f - c)).abs() <= 1e-9 * scale);
            assert!((a - b).cross(&(con.g - b)).abs() <= 1e-9 * scale);
            assert!((con.g - con.f).cross(&(e - con.f)).abs() <= 1e-9 * scale);
            assert!((e - con.f).dot(&(e - con.g)) <= 0.0);
            assert!((con.g - con.f).cross(&(d - a)).abs() <= 1e-9 * scale);
            // areas in units of |AOD|
            let unit = q.area() / pentagon_formula_areas(&prm).total;
            assert!((con.dfe / unit - prm.corner_dfe()).abs() < 1e-9 * (1.0 + prm.corner_dfe()));
            assert!((con.ega / unit - prm.corner_ega()).abs() < 1e-9 * (1.0 + prm.corner_ega()));
        }
    }

    #[test]
    fn ratio_is_affine_invariant() {
        let p = random_convex_ngon(5, 11).unwrap();
        let base = circumscribe_pentagon(&p).unwrap().ratio;
        let t = AffineMap::new([[2.0, 0.7], [-0.3, 0.5]], Vector2::new(4.0, -1.0));
        let q = affine_apply(&t, &p).unwrap();
        assert!((circumscribe_pentagon(&q).unwrap().ratio - base).abs() < 1e-9);
    }
}
