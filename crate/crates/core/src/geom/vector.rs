use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{GeomError, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Vector2<S = f64> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Vector2<S> {
    pub fn new(x: S, y: S) -> Self {
        Vector2 { x, y }
    }

    pub fn zero() -> Self {
        Vector2::new(S::zero(), S::zero())
    }

    pub fn dot(&self, other: &Self) -> S {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// Full determinant `x1*y2 - y1*x2` (twice the wedge).
    pub fn cross(&self, other: &Self) -> S {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn norm_sq(&self) -> S {
        self.dot(self)
    }

    pub fn scale(&self, k: S) -> Self {
        Vector2::new(self.x.clone() * k.clone(), self.y.clone() * k)
    }

    pub fn to_f64(&self) -> Vector2<f64> {
        Vector2::new(self.x.to_f64(), self.y.to_f64())
    }

    pub fn from_f64(v: Vector2<f64>) -> Self {
        Vector2::new(S::from_f64(v.x), S::from_f64(v.y))
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Self) -> Self {
        Vector2::new(
            (self.x.clone() + other.x.clone()).half(),
            (self.y.clone() + other.y.clone()).half(),
        )
    }
}

impl Vector2<f64> {
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn angle(&self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn from_angle(theta: f64) -> Self {
        Vector2::new(theta.cos(), theta.sin())
    }
}

impl<S: Scalar> Add for Vector2<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Vector2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<S: Scalar> Sub for Vector2<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Vector2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<S: Scalar> Add for &Vector2<S> {
    type Output = Vector2<S>;
    fn add(self, rhs: Self) -> Vector2<S> {
        Vector2::new(self.x.clone() + rhs.x.clone(), self.y.clone() + rhs.y.clone())
    }
}

impl<S: Scalar> Sub for &Vector2<S> {
    type Output = Vector2<S>;
    fn sub(self, rhs: Self) -> Vector2<S> {
        Vector2::new(self.x.clone() - rhs.x.clone(), self.y.clone() - rhs.y.clone())
    }
}

impl<S: Scalar> Neg for Vector2<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Vector2::new(-self.x, -self.y)
    }
}

impl Mul<Vector2<f64>> for f64 {
    type Output = Vector2<f64>;
    fn mul(self, rhs: Vector2<f64>) -> Vector2<f64> {
        Vector2::new(self * rhs.x, self * rhs.y)
    }
}

/// Outer product `u ∧ v = ½ (u.x v.y − u.y v.x)`: the signed area of the
/// triangle spanned by `u` and `v`.
pub fn wedge<S: Scalar>(u: &Vector2<S>, v: &Vector2<S>) -> S {
    u.cross(v).half()
}

/// Signed area of triangle `pqr`, positive when counterclockwise.
pub fn triangle_area<S: Scalar>(p: &Vector2<S>, q: &Vector2<S>, r: &Vector2<S>) -> S {
    wedge(&(q - p), &(r - p))
}

/// A line through `point` with nonzero `direction`.
#[derive(Clone, Debug, PartialEq)]
pub struct Line2<S = f64> {
    pub point: Vector2<S>,
    pub direction: Vector2<S>,
}

impl<S: Scalar> Line2<S> {
    pub fn new(point: Vector2<S>, direction: Vector2<S>) -> Result<Self, GeomError> {
        if direction.norm_sq().is_zero() {
            return Err(GeomError::ZeroDirection);
        }
        Ok(Line2 { point, direction })
    }

    pub fn through(p: &Vector2<S>, q: &Vector2<S>) -> Result<Self, GeomError> {
        Line2::new(p.clone(), q - p)
    }

    /// Point at parameter `t`: `point + t * direction`.
    pub fn at(&self, t: S) -> Vector2<S> {
        &self.point + &self.direction.scale(t)
    }

    /// Twice the signed area of the triangle (point, point + direction, q);
    /// positive when `q` lies to the left.
    pub fn side(&self, q: &Vector2<S>) -> S {
        self.direction.cross(&(q - &self.point))
    }

    /// Parameter `t` of the intersection with `other`, measured along `self`.
    pub fn intersect_param(&self, other: &Line2<S>) -> Result<S, GeomError> {
        let denom = self.direction.cross(&other.direction);
        let eps = S::approx_eps(1e-12);
        let bound = eps.clone() * eps * self.direction.norm_sq() * other.direction.norm_sq();
        if denom.is_zero() || denom.clone() * denom.clone() <= bound {
            return Err(GeomError::ParallelLines);
        }
        Ok((&other.point - &self.point).cross(&other.direction) / denom)
    }
}

/// Intersection point of two non-parallel lines.
pub fn line_intersect<S: Scalar>(l1: &Line2<S>, l2: &Line2<S>) -> Result<Vector2<S>, GeomError> {
    let t = l1.intersect_param(l2)?;
    Ok(l1.at(t))
}

/// `x ↦ linear · x + translation`, with `linear` stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap<S = f64> {
    pub linear: [[S; 2]; 2],
    pub translation: Vector2<S>,
}

impl<S: Scalar> AffineMap<S> {
    pub fn new(linear: [[S; 2]; 2], translation: Vector2<S>) -> Self {
        AffineMap {
            linear,
            translation,
        }
    }

    pub fn identity() -> Self {
        AffineMap::new([[S::one(), S::zero()], [S::zero(), S::one()]], Vector2::zero())
    }

    pub fn determinant(&self) -> S {
        let [[a, b], [c, d]] = &self.linear;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    pub fn apply(&self, p: &Vector2<S>) -> Vector2<S> {
        let [[a, b], [c, d]] = &self.linear;
        Vector2::new(
            a.clone() * p.x.clone() + b.clone() * p.y.clone() + self.translation.x.clone(),
            c.clone() * p.x.clone() + d.clone() * p.y.clone() + self.translation.y.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn v(x: f64, y: f64) -> Vector2 {
        Vector2::new(x, y)
    }

    fn line(p: (f64, f64), d: (f64, f64)) -> Line2 {
        Line2::new(v(p.0, p.1), v(d.0, d.1)).unwrap()
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(wedge(&v(1.0, 0.0), &v(0.0, 1.0)), 0.5);
        assert_eq!(wedge(&v(2.0, 0.0), &v(0.0, 2.0)), 2.0);
        let u = v(0.3, -1.7);
        assert_eq!(wedge(&u, &u), 0.0);
    }

    #[test]
    fn wedge_is_signed_triangle_area() {
        let u = v(3.0, 1.0);
        let w = v(-1.0, 2.0);
        let sum = u + w;
        assert_eq!(wedge(&u, &w), triangle_area(&Vector2::zero(), &u, &sum));
    }

    #[test]
    fn intersections() {
        let x_axis = line((0.0, 0.0), (1.0, 0.0));
        let y_axis = line((0.0, 0.0), (0.0, 1.0));
        assert_eq!(line_intersect(&x_axis, &y_axis).unwrap(), v(0.0, 0.0));

        let diag = line((0.0, 0.0), (1.0, 1.0));
        let anti = line((0.0, 2.0), (1.0, -1.0));
        let p = line_intersect(&diag, &anti).unwrap();
        assert!((p.x - 1.0).abs() < 1e-15 && (p.y - 1.0).abs() < 1e-15);

        let y1 = line((0.0, 1.0), (1.0, 0.0));
        assert_eq!(line_intersect(&x_axis, &y1), Err(GeomError::ParallelLines));
    }

    #[test]
    fn zero_direction_rejected() {
        assert_eq!(
            Line2::new(v(0.0, 0.0), v(0.0, 0.0)),
            Err(GeomError::ZeroDirection)
        );
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    proptest! {
        #[test]
        fn wedge_antisymmetric_exact(a in -1000i64..1000, b in -1000i64..1000,
                                     c in -1000i64..1000, d in -1000i64..1000,
                                     den in 1i64..50) {
            let u = Vector2::new(rat(a, den), rat(b, den));
            let w = Vector2::new(rat(c, den), rat(d, 1));
            prop_assert_eq!(wedge(&u, &w), -wedge(&w, &u));
        }

        #[test]
        fn wedge_antisymmetric_float(a in -1e3..1e3f64, b in -1e3..1e3f64,
                                     c in -1e3..1e3f64, d in -1e3..1e3f64) {
            let (u, w) = (v(a, b), v(c, d));
            let scale = (a.abs() + b.abs()) * (c.abs() + d.abs()) + 1.0;
            prop_assert!((wedge(&u, &w) + wedge(&w, &u)).abs() <= 1e-15 * scale);
        }

        #[test]
        fn wedge_bilinear_exact(a in -100i64..100, b in -100i64..100, c in -100i64..100,
                                d in -100i64..100, e in -100i64..100, f in -100i64..100,
                                al in -20i64..20, be in -20i64..20) {
            let (u, w, x) = (
                Vector2::new(rat(a, 1), rat(b, 3)),
                Vector2::new(rat(c, 7), rat(d, 1)),
                Vector2::new(rat(e, 1), rat(f, 2)),
            );
            let (al, be) = (rat(al, 5), rat(be, 1));
            let lhs = wedge(&(u.scale(al.clone()) + w.scale(be.clone())), &x);
            let rhs = al * wedge(&u, &x) + be * wedge(&w, &x);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
