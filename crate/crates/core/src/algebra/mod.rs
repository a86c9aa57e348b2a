//! Exact arithmetic: the quadratic field ℚ(√5), sparse multivariate
//! polynomials over exact coefficients, and a small expression parser.
//!
//! Rationals come from `num-rational`.

mod parse;
mod poly;
mod root5;

pub use num_rational::BigRational;
pub use parse::parse_polynomial;
pub use poly::{Coefficient, SparsePolynomial};
pub use root5::Root5Number;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable '{0}' is not bound")]
    UnboundVariable(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// Rational `num / den`.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}
