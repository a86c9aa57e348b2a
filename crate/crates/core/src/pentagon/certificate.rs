//! Nonnegativity certificate for the pentagon bound.
//!
//! With `φ = (√5 − 1)/2`, the quantity
//!
//! ```text
//! g = 10(1+a)(1+b)·[(3/√5 − 1)·S − |DFE| − |EGA|]
//! ```
//!
//! is a polynomial in `a, b, c, d` that equals a sum of products of
//! nonnegative factors with nonnegative coefficients in ℚ(√5) whenever the
//! parameters are min-ear feasible. So `|BCFG| ≤ (3/√5)·|ABCDE|`.

use std::collections::HashMap;

use crate::algebra::{parse_polynomial, Root5Number, SparsePolynomial};

use super::{pentagon_formula_areas, PentagonError, PentagonParams};

type Poly = SparsePolynomial<Root5Number>;

/// One coefficient group: `coefficient · (products[0] + products[1])`.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateTerm {
    pub coefficient: Root5Number,
    pub labels: [&'static str; 2],
    pub products: [Poly; 2],
}

impl CertificateTerm {
    pub fn expand(&self) -> Poly {
        (&self.products[0] + &self.products[1]).scale(&self.coefficient)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertificateReport {
    pub groups: usize,
    pub nonnegative: usize,
    /// Terms of `g − Σ certificate`; zero when the identity holds.
    pub residual_terms: usize,
    pub g_unit: Root5Number,
    pub g_golden: Root5Number,
}

/// `g` as a polynomial in `a, b, c, d`.
pub fn g_polynomial() -> Poly {
    parse_polynomial(
        "(6*sqrt5 - 10)*(1+a)*(1+b)*(a+b+c+d+a*b) \
         - 10*(1+a)*(c+d-1)*(b-b*c+d) \
         - 10*(1+b)*(c+d-1)*(a-a*d+c)",
    )
    .expect("g is well formed")
}

/// `g` evaluated exactly from the closed-form areas.
pub fn g_direct(params: &PentagonParams<Root5Number>) -> Root5Number {
    let one = Root5Number::from(1);
    let total = pentagon_formula_areas(params).total;
    // 3/√5 − 1 = (3√5 − 5)/5
    let k = Root5Number::new(crate::algebra::rational(-1, 1), crate::algebra::rational(3, 5));
    Root5Number::from(10)
        * (one.clone() + params.a.clone())
        * (one + params.b.clone())
        * (k * total - params.corner_dfe() - params.corner_ega())
}

/// Floating-point [`g_direct`].
pub fn g_direct_f64(params: &PentagonParams<f64>) -> f64 {
    let total = pentagon_formula_areas(params).total;
    let (a, b) = (params.a, params.b);
    10.0 * (1.0 + a) * (1.0 + b)
        * ((3.0 / 5f64.sqrt() - 1.0) * total - params.corner_dfe() - params.corner_ega())
}

/// `g` from measured areas: `total`, `dfe`, `ega` in units of `|AOD|`.
pub fn g_from_areas(params: &PentagonParams<f64>, total: f64, dfe: f64, ega: f64) -> f64 {
    10.0 * (1.0 + params.a) * (1.0 + params.b) * ((3.0 / 5f64.sqrt() - 1.0) * total - dfe - ega)
}

/// The seventeen coefficient groups.
pub fn certificate_terms() -> Vec<CertificateTerm> {
    let [a, b, c, d] = ["a", "b", "c", "d"].map(Poly::var);
    let one = Poly::one();
    let phi = Poly::constant(Root5Number::phi());
    let e = parse_polynomial("1 + a + a*b - c - d").expect("e");
    let f = parse_polynomial("1 + b + a*b - c - d").expect("f");
    let c1 = &one - &c;
    let d1 = &one - &d;
    let ap = (&a - &phi).pow(2);
    let bp = (&b - &phi).pow(2);
    let cd = &c1 * &d1;
    let ab = &a * &b;
    let prod = |fs: &[&Poly]| fs.iter().fold(Poly::one(), |acc, x| &acc * *x);

    let r = Root5Number::from_ints;
    let term = |coefficient: Root5Number, labels: [&'static str; 2], products: [Poly; 2]| CertificateTerm {
        coefficient,
        labels,
        products,
    };
    vec![
        term(r(60, -26), ["cf", "de"], [prod(&[&c, &f]), prod(&[&d, &e])]),
        term(r(21, -7), ["af", "be"], [prod(&[&a, &f]), prod(&[&b, &e])]),
        term(r(-30, 16), ["cde", "cdf"], [prod(&[&c, &d, &e]), prod(&[&c, &d, &f])]),
        term(r(80, -32), ["ab(1-c)(1-d)", ""], [prod(&[&ab, &cd]), Poly::zero()]),
        term(r(-5, 3), ["b^2(a-phi)^2", "a^2(b-phi)^2"], [prod(&[&b, &b, &ap]), prod(&[&a, &a, &bp])]),
        term(r(5, -1), ["b^2(1-c)^2", "a^2(1-d)^2"], [prod(&[&b, &b, &c1, &c1]), prod(&[&a, &a, &d1, &d1])]),
        term(r(10, -2), ["b^2c(1-c)", "a^2d(1-d)"], [prod(&[&b, &b, &c, &c1]), prod(&[&a, &a, &d, &d1])]),
        term(r(10, 0), ["ab(1-c)^2", "ab(1-d)^2"], [prod(&[&ab, &c1, &c1]), prod(&[&ab, &d1, &d1])]),
        term(r(48, -20), ["(1-c)(1-d)a(1-c)", "(1-c)(1-d)b(1-d)"], [prod(&[&cd, &a, &c1]), prod(&[&cd, &b, &d1])]),
        term(r(-20, 10), ["d(1-c)^2", "c(1-d)^2"], [prod(&[&d, &c1, &c1]), prod(&[&c, &d1, &d1])]),
        term(r(5, -1), ["d^2(a-phi)^2", "c^2(b-phi)^2"], [prod(&[&d, &d, &ap]), prod(&[&c, &c, &bp])]),
        term(r(-21, 11), ["b(a-phi)^2", "a(b-phi)^2"], [prod(&[&b, &ap]), prod(&[&a, &bp])]),
        term(r(-10, 6), ["b(1-c)^2", "a(1-d)^2"], [prod(&[&b, &c1, &c1]), prod(&[&a, &d1, &d1])]),
        term(r(97, -41), ["(1-c)(1-d)ac", "(1-c)(1-d)bd"], [prod(&[&cd, &a, &c]), prod(&[&cd, &b, &d])]),
        term(r(-31, 17), ["bc(1-d)", "ad(1-c)"], [prod(&[&b, &c, &d1]), prod(&[&a, &d, &c1])]),
        term(r(49, -21), ["bd^2(1-c)", "ac^2(1-d)"], [prod(&[&b, &d, &d, &c1]), prod(&[&a, &c, &c, &d1])]),
        term(r(-40, 22), ["(1-c)(1-d)c", "(1-c)(1-d)d"], [prod(&[&cd, &c]), prod(&[&cd, &d])]),
    ]
}

/// Sum of all certificate groups.
pub fn certificate_sum(terms: &[CertificateTerm]) -> Poly {
    terms.iter().fold(Poly::zero(), |acc, t| acc + t.expand())
}

fn eval_at(poly: &Poly, [a, b, c, d]: [Root5Number; 4]) -> Root5Number {
    let point: HashMap<String, Root5Number> =
        [("a", a), ("b", b), ("c", c), ("d", d)].map(|(k, v)| (k.to_string(), v)).into();
    poly.eval(&point).expect("all variables bound")
}

/// Checks the identity `g = Σ certificate` exactly and that every
/// coefficient is nonnegative.
pub fn certificate_check() -> Result<CertificateReport, PentagonError> {
    let terms = certificate_terms();
    let g = g_polynomial();
    let residual = &g - &certificate_sum(&terms);
    if !residual.is_zero() {
        return Err(PentagonError::CertificateMismatch {
            residual_terms: residual.num_terms(),
        });
    }
    if let Some(index) = terms.iter().position(|t| !t.coefficient.is_nonnegative()) {
        return Err(PentagonError::NegativeCoefficient { index });
    }
    let one = Root5Number::from(1);
    let phi = Root5Number::phi();
    Ok(CertificateReport {
        groups: terms.len(),
        nonnegative: terms.len(),
        residual_terms: 0,
        g_unit: eval_at(&g, [one.clone(), one.clone(), one.clone(), one.clone()]),
        g_golden: eval_at(&g, [phi.clone(), phi, one.clone(), one]),
    })
}
