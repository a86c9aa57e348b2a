use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Exact element `p + q√5` of the field ℚ(√5).
///
/// The representation is canonical because √5 is irrational, so derived
/// equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Root5Number {
    p: BigRational,
    q: BigRational,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Root5Number {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        Root5Number { p, q }
    }

    /// `p + q√5` with integer parts.
    pub fn from_ints(p: i64, q: i64) -> Self {
        Root5Number::new(int(p), int(q))
    }

    pub fn rational(p: BigRational) -> Self {
        Root5Number::new(p, BigRational::zero())
    }

    pub fn sqrt5() -> Self {
        Root5Number::from_ints(0, 1)
    }

    /// φ = (√5 − 1)/2.
    pub fn phi() -> Self {
        let half = BigRational::new(1.into(), 2.into());
        Root5Number::new(-half.clone(), half)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.p
    }

    pub fn sqrt5_part(&self) -> &BigRational {
        &self.q
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Galois conjugate `p − q√5`.
    pub fn conjugate(&self) -> Self {
        Root5Number::new(self.p.clone(), -self.q.clone())
    }

    /// Field norm `p² − 5q²` (product with the conjugate).
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - int(5) * &self.q * &self.q
    }

    /// Exact sign, decided by rational comparisons only.
    pub fn signum(&self) -> Ordering {
        let sp = self.p.cmp(&BigRational::zero());
        let sq = self.q.cmp(&BigRational::zero());
        if sq == Ordering::Equal {
            return sp;
        }
        if sp == Ordering::Equal || sp == sq {
            return sq;
        }
        // opposite signs: the larger of p² and 5q² wins
        match (&self.p * &self.p).cmp(&(int(5) * &self.q * &self.q)) {
            Ordering::Greater => sp,
            _ => sq,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum() != Ordering::Less
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        let n = rhs.norm();
        if n.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // x / y = x * conj(y) / N(y)
        let num = self * &rhs.conjugate();
        Ok(Root5Number::new(num.p / &n, num.q / n))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Root5Number::from_ints(1, 0);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.p.to_f64().unwrap_or(f64::NAN) + self.q.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

impl From<i64> for Root5Number {
    fn from(n: i64) -> Self {
        Root5Number::from_ints(n, 0)
    }
}

impl From<BigRational> for Root5Number {
    fn from(p: BigRational) -> Self {
        Root5Number::rational(p)
    }
}

impl PartialOrd for Root5Number {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root5Number {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Add for &Root5Number {
    type Output = Root5Number;
    fn add(self, rhs: Self) -> Root5Number {
        Root5Number::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub for &Root5Number {
    type Output = Root5Number;
    fn sub(self, rhs: Self) -> Root5Number {
        Root5Number::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Mul for &Root5Number {
    type Output = Root5Number;
    fn mul(self, rhs: Self) -> Root5Number {
        Root5Number::new(
            &self.p * &rhs.p + int(5) * &self.q * &rhs.q,
            &self.p * &rhs.q + &self.q * &rhs.p,
        )
    }
}

impl Add for Root5Number {
    type Output = Root5Number;
    fn add(self, rhs: Self) -> Root5Number {
        &self + &rhs
    }
}

impl Sub for Root5Number {
    type Output = Root5Number;
    fn sub(self, rhs: Self) -> Root5Number {
        &self - &rhs
    }
}

impl Mul for Root5Number {
    type Output = Root5Number;
    fn mul(self, rhs: Self) -> Root5Number {
        &self * &rhs
    }
}

/// Panics on division by zero; use [`Root5Number::checked_div`] otherwise.
impl Div for Root5Number {
    type Output = Root5Number;
    fn div(self, rhs: Self) -> Root5Number {
        self.checked_div(&rhs).expect("division by zero in Q(sqrt5)")
    }
}

impl Neg for Root5Number {
    type Output = Root5Number;
    fn neg(self) -> Root5Number {
        Root5Number::new(-self.p, -self.q)
    }
}

impl fmt::Display for Root5Number {
    /// Parser-compatible form, e.g. `-240 + 120*sqrt5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q_text = |q: &BigRational| {
            if q.is_one() {
                "sqrt5".to_string()
            } else if q.is_integer() {
                format!("{}*sqrt5", q)
            } else {
                format!("({})*sqrt5", q)
            }
        };
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", self.p),
            (true, false) => {
                if self.q.is_negative() {
                    write!(f, "-{}", q_text(&-self.q.clone()))
                } else {
                    write!(f, "{}", q_text(&self.q))
                }
            }
            (false, false) => {
                if self.q.is_negative() {
                    write!(f, "{} - {}", self.p, q_text(&-self.q.clone()))
                } else {
                    write!(f, "{} + {}", self.p, q_text(&self.q))
                }
            }
        }
    }
}

impl crate::geom::Scalar for Root5Number {
    const EXACT: bool = true;

    fn zero() -> Self {
        Root5Number::default()
    }
    fn one() -> Self {
        Root5Number::from_ints(1, 0)
    }
    fn from_i64(n: i64) -> Self {
        Root5Number::from_ints(n, 0)
    }
    fn from_f64(x: f64) -> Self {
        Root5Number::rational(<BigRational as crate::geom::Scalar>::from_f64(x))
    }
    fn to_f64(&self) -> f64 {
        Root5Number::to_f64(self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.p) && Zero::is_zero(&self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Root5Number {
        Root5Number::from_ints(p, q)
    }

    #[test]
    fn sqrt5_squared_is_five() {
        assert_eq!(&Root5Number::sqrt5() * &Root5Number::sqrt5(), r(5, 0));
    }

    #[test]
    fn phi_minimal_polynomial() {
        let phi = Root5Number::phi();
        let val = &(&(&phi * &phi) + &phi) - &r(1, 0);
        assert!(crate::geom::Scalar::is_zero(&val));
    }

    #[test]
    fn signs() {
        assert_eq!(r(60, -26).signum(), Ordering::Greater);
        assert_eq!(r(-30, 16).signum(), Ordering::Greater);
        assert_eq!(r(-3, 1).signum(), Ordering::Less);
        assert_eq!(r(0, 0).signum(), Ordering::Equal);
        assert_eq!(r(-240, 120).signum(), Ordering::Greater);
        assert!(r(2, 0) < r(0, 1));
        assert!(r(3, 0) > r(0, 1));
    }

    #[test]
    fn division() {
        let x = r(3, 7);
        let y = r(-2, 5);
        let q = x.checked_div(&y).unwrap();
        assert_eq!(&q * &y, x);
        assert_eq!(x.checked_div(&r(0, 0)), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn display_round_trips_readably() {
        assert_eq!(r(-240, 120).to_string(), "-240 + 120*sqrt5");
        assert_eq!(r(0, -1).to_string(), "-sqrt5");
        assert_eq!(Root5Number::phi().to_string(), "-1/2 + (1/2)*sqrt5");
    }

    /// Sign of p + q√5 from a 50-digit decimal enclosure of √5.
    fn sign_by_enclosure(p: &BigRational, q: &BigRational) -> Ordering {
        let scale = BigInt::from(10).pow(50);
        let lo = (BigInt::from(5) * &scale * &scale).sqrt();
        let hi = &lo + 1;
        let lo = BigRational::new(lo, scale.clone());
        let hi = BigRational::new(hi, scale);
        let (a, b) = (p + q * &lo, p + q * &hi);
        let (min, max) = if a <= b { (a, b) } else { (b, a) };
        if min > BigRational::zero() {
            Ordering::Greater
        } else if max < BigRational::zero() {
            Ordering::Less
        } else {
            assert!(p.is_zero() && q.is_zero(), "enclosure too wide");
            Ordering::Equal
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn sign_matches_high_precision(pn in -10_000i64..10_000, pd in 1i64..500,
                                       qn in -10_000i64..10_000, qd in 1i64..500) {
            let p = BigRational::new(pn.into(), pd.into());
            let q = BigRational::new(qn.into(), qd.into());
            let x = Root5Number::new(p.clone(), q.clone());
            prop_assert_eq!(x.signum(), sign_by_enclosure(&p, &q));
        }

        #[test]
        fn field_axioms(a in -50i64..50, b in -50i64..50, c in -50i64..50,
                        d in -50i64..50, e in -50i64..50, f in -50i64..50) {
            let (x, y, z) = (r(a, b), r(c, d), r(e, f));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
        }
    }
}
