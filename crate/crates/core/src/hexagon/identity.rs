//! The polynomial identity behind the hexagon bound.
//!
//! With `b = a + x` and `f = a + y`, clearing denominators in
//!
//! ```text
//! 4a + b + f + 2a² + 2ab + 2af − 6·AHB_bound − 6·FGA_bound
//! ```
//!
//! gives a polynomial in `x, y` whose coefficients are polynomials in `a`
//! with nonnegative coefficients, so the left side is nonnegative for
//! `a, x, y ≥ 0`.

use crate::algebra::{parse_polynomial, Root5Number, SparsePolynomial};

use super::HexagonError;

type Poly = SparsePolynomial<Root5Number>;

/// `(x exponent, y exponent, coefficients of a⁰, a¹, …)`.
pub const DISPLAYED_COEFFICIENTS: [(u32, u32, &[i64]); 14] = [
    (3, 2, &[7, 14]),
    (2, 3, &[7, 14]),
    (3, 1, &[1, 11, 18]),
    (1, 3, &[8, 25, 18]),
    (2, 2, &[15, 78, 78]),
    (3, 0, &[0, 1, 4, 4]),
    (0, 3, &[1, 5, 8, 4]),
    (2, 1, &[2, 26, 85, 70]),
    (1, 2, &[9, 66, 125, 70]),
    (2, 0, &[0, 2, 11, 20, 12]),
    (0, 2, &[1, 8, 23, 28, 12]),
    (1, 1, &[1, 16, 58, 84, 42]),
    (1, 0, &[0, 1, 7, 12, 8, 2]),
    (0, 1, &[0, 1, 1, 0, 2, 2]),
];

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub residual: Poly,
    pub monomials: usize,
    pub nonnegative: usize,
}

/// The cleared left side as a polynomial in `a, x, y`.
pub fn identity_lhs() -> Poly {
    let cleared = parse_polynomial(
        "(4*a + b + f + 2*a^2 + 2*a*b + 2*a*f)*f*(1+b)*(1+a+f)*(1+a+b) \
         - 6*(a + a*f + a*b - f*b)*(b + 2*a*b - a^2)*f*(1+a+b) \
         - 6*(a + a*f + a*b - f*b)*(f + 2*a*f - a^2)*(1+b)*(1+a+f)",
    )
    .expect("identity is well formed");
    let b = parse_polynomial("a + x").expect("b");
    let f = parse_polynomial("a + y").expect("f");
    cleared.substitute("b", &b).substitute("f", &f)
}

/// The tabulated right side.
pub fn displayed_polynomial() -> Poly {
    let [a, x, y] = ["a", "x", "y"].map(Poly::var);
    DISPLAYED_COEFFICIENTS
        .iter()
        .fold(Poly::zero(), |acc, &(i, j, coeffs)| {
            let in_a = coeffs
                .iter()
                .enumerate()
                .fold(Poly::zero(), |p, (k, &c)| p + a.pow(k as u32).scale(&Root5Number::from(c)));
            acc + in_a * x.pow(i) * y.pow(j)
        })
}

/// Checks that both sides agree exactly and every tabulated coefficient is
/// nonnegative.
pub fn final_identity_check() -> Result<IdentityReport, HexagonError> {
    let residual = (identity_lhs() - displayed_polynomial()).trimmed();
    if !residual.is_zero() {
        return Err(HexagonError::IdentityMismatch {
            residual_terms: residual.num_terms(),
        });
    }
    if let Some(&(i, j, _)) = DISPLAYED_COEFFICIENTS
        .iter()
        .find(|(_, _, c)| c.iter().any(|&k| k < 0))
    {
        return Err(HexagonError::NegativeCoefficient(i, j));
    }
    Ok(IdentityReport {
        residual,
        monomials: DISPLAYED_COEFFICIENTS.len(),
        nonnegative: DISPLAYED_COEFFICIENTS.len(),
    })
}
