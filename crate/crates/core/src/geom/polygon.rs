use serde::Serialize;

use super::{triangle_area, wedge, AffineMap, GeomError, Scalar, Vector2};

/// Relative degeneracy threshold: a vertex triple whose ear area falls below
/// `CONVEXITY_TOL * diameter²` is treated as collinear.
pub const CONVEXITY_TOL: f64 = 1e-12;

/// A strictly convex polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexPolygon<S = f64> {
    vertices: Vec<Vector2<S>>,
}

/// Checks `vertices` for strict convexity and returns them as a
/// counterclockwise polygon. Clockwise input is reversed.
///
/// `tol` is relative: triples whose ear area is at most `tol * diameter²`
/// are rejected as collinear. Pass zero for an exact strictness check.
pub fn validate_convex<S: Scalar>(
    vertices: Vec<Vector2<S>>,
    tol: S,
) -> Result<ConvexPolygon<S>, GeomError> {
    let m = vertices.len();
    if m < 3 {
        return Err(GeomError::TooFewVertices(m));
    }
    if has_crossing_edges(&vertices) {
        return Err(GeomError::SelfIntersecting);
    }
    let mut vertices = vertices;
    if signed_area(&vertices) < S::zero() {
        vertices.reverse();
    }
    let threshold = tol * diameter_sq(&vertices);
    for i in 0..m {
        let prev = &vertices[(i + m - 1) % m];
        let next = &vertices[(i + 1) % m];
        if triangle_area(prev, &vertices[i], next) <= threshold {
            return Err(GeomError::NotStrictlyConvex { vertex: i });
        }
    }
    Ok(ConvexPolygon { vertices })
}

fn signed_area<S: Scalar>(vertices: &[Vector2<S>]) -> S {
    let m = vertices.len();
    (0..m).fold(S::zero(), |acc, i| {
        acc + wedge(&vertices[i], &vertices[(i + 1) % m])
    })
}

fn diameter_sq<S: Scalar>(vertices: &[Vector2<S>]) -> S {
    let mut best = S::zero();
    for (i, p) in vertices.iter().enumerate() {
        for q in &vertices[i + 1..] {
            best = best.max_of((p - q).norm_sq());
        }
    }
    best
}

fn sign<S: Scalar>(x: &S) -> i8 {
    let zero = S::zero();
    if *x > zero {
        1
    } else if *x < zero {
        -1
    } else {
        0
    }
}

fn on_segment<S: Scalar>(p: &Vector2<S>, a: &Vector2<S>, b: &Vector2<S>) -> bool {
    let within = |t: &S, lo: &S, hi: &S| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        t >= lo && t <= hi
    };
    within(&p.x, &a.x, &b.x) && within(&p.y, &a.y, &b.y)
}

fn segments_touch<S: Scalar>(a: &Vector2<S>, b: &Vector2<S>, c: &Vector2<S>, d: &Vector2<S>) -> bool {
    let o1 = sign(&(b - a).cross(&(c - a)));
    let o2 = sign(&(b - a).cross(&(d - a)));
    let o3 = sign(&(d - c).cross(&(a - c)));
    let o4 = sign(&(d - c).cross(&(b - c)));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(c, a, b))
        || (o2 == 0 && on_segment(d, a, b))
        || (o3 == 0 && on_segment(a, c, d))
        || (o4 == 0 && on_segment(b, c, d))
}

fn has_crossing_edges<S: Scalar>(vertices: &[Vector2<S>]) -> bool {
    let m = vertices.len();
    for i in 0..m {
        for j in i + 2..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            let (a, b) = (&vertices[i], &vertices[(i + 1) % m]);
            let (c, d) = (&vertices[j], &vertices[(j + 1) % m]);
            if segments_touch(a, b, c, d) {
                return true;
            }
        }
    }
    false
}

impl<S: Scalar> ConvexPolygon<S> {
    /// Wraps vertices already known to be strictly convex and CCW.
    pub(crate) fn from_trusted(vertices: Vec<Vector2<S>>) -> Self {
        debug_assert!(vertices.len() >= 3);
        ConvexPolygon { vertices }
    }

    pub fn new(vertices: Vec<Vector2<S>>) -> Result<Self, GeomError> {
        validate_convex(vertices, S::approx_eps(CONVEXITY_TOL))
    }

    pub fn vertices(&self) -> &[Vector2<S>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex `i` modulo the vertex count.
    pub fn vertex(&self, i: usize) -> &Vector2<S> {
        &self.vertices[i % self.vertices.len()]
    }

    /// Edge vector from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> Vector2<S> {
        self.vertex(i + 1) - self.vertex(i)
    }

    /// Area of the ear at vertex `i`: triangle (v[i-1], v[i], v[i+1]).
    pub fn ear_area(&self, i: usize) -> S {
        let m = self.len();
        triangle_area(self.vertex(i + m - 1), self.vertex(i), self.vertex(i + 1))
    }

    pub fn area(&self) -> S {
        signed_area(&self.vertices)
    }

    pub fn diameter_sq(&self) -> S {
        diameter_sq(&self.vertices)
    }

    /// The same polygon relabeled so that vertex `k` comes first.
    pub fn rotated(&self, k: usize) -> Self {
        let m = self.len();
        let vertices = (0..m).map(|i| self.vertex(k + i).clone()).collect();
        ConvexPolygon { vertices }
    }

    /// Mirror image under `(x, y) ↦ (−x, y)`, relabeled to stay CCW while
    /// keeping vertex 0 in place and reversing the cyclic order.
    pub fn mirrored(&self) -> Self {
        let m = self.len();
        let vertices = (0..m)
            .map(|i| {
                let p = self.vertex(m - i);
                Vector2::new(-p.x.clone(), p.y.clone())
            })
            .collect();
        ConvexPolygon { vertices }
    }

    /// True when `q` is inside or within distance `tol` of the boundary.
    pub fn contains_point(&self, q: &Vector2<S>, tol: &S) -> bool {
        let m = self.len();
        (0..m).all(|i| {
            let e = self.edge(i);
            let side = e.cross(&(q - self.vertex(i)));
            side >= S::zero() || side.clone() * side <= tol.clone() * tol.clone() * e.norm_sq()
        })
    }

    /// True when every vertex of `inner` passes [`contains_point`](Self::contains_point).
    pub fn contains_polygon(&self, inner: &ConvexPolygon<S>, tol: &S) -> bool {
        inner.vertices.iter().all(|q| self.contains_point(q, tol))
    }

    pub fn to_f64(&self) -> ConvexPolygon<f64> {
        ConvexPolygon {
            vertices: self.vertices.iter().map(Vector2::to_f64).collect(),
        }
    }

    /// Bounding box as (min corner, max corner).
    pub fn bounding_box(&self) -> (Vector2<S>, Vector2<S>) {
        let first = self.vertices[0].clone();
        self.vertices
            .iter()
            .skip(1)
            .fold((first.clone(), first), |(lo, hi), p| {
                (
                    Vector2::new(lo.x.min_of(p.x.clone()), lo.y.min_of(p.y.clone())),
                    Vector2::new(hi.x.max_of(p.x.clone()), hi.y.max_of(p.y.clone())),
                )
            })
    }
}

impl ConvexPolygon<f64> {
    pub fn diameter(&self) -> f64 {
        self.diameter_sq().sqrt()
    }

    /// Exact copy of the floating coordinates.
    pub fn to_exact<S: Scalar>(&self) -> ConvexPolygon<S> {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|p| Vector2::from_f64(*p)).collect(),
        }
    }

    pub fn centroid_of_vertices(&self) -> Vector2 {
        let m = self.len() as f64;
        let s = self
            .vertices
            .iter()
            .fold(Vector2::new(0.0, 0.0), |acc, p| acc + *p);
        Vector2::new(s.x / m, s.y / m)
    }
}

/// Image of `polygon` under `map`, re-oriented counterclockwise.
pub fn affine_apply<S: Scalar>(
    map: &AffineMap<S>,
    polygon: &ConvexPolygon<S>,
) -> Result<ConvexPolygon<S>, GeomError> {
    let det = map.determinant();
    if Scalar::is_zero(&det) {
        return Err(GeomError::SingularMap);
    }
    let mut vertices: Vec<_> = polygon.vertices().iter().map(|p| map.apply(p)).collect();
    if det < S::zero() {
        vertices.reverse();
    }
    Ok(ConvexPolygon::from_trusted(vertices))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[(f64, f64)]) -> Vec<Vector2> {
        raw.iter().map(|&(x, y)| Vector2::new(x, y)).collect()
    }

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])).unwrap()
    }

    #[test]
    fn areas() {
        assert_eq!(unit_square().area(), 1.0);
        let tri = ConvexPolygon::new(pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])).unwrap();
        assert_eq!(tri.area(), 0.5);
        let h = 3f64.sqrt() / 2.0;
        let hex = ConvexPolygon::new(pts(&[
            (1.0, 0.0),
            (0.5, h),
            (-0.5, h),
            (-1.0, 0.0),
            (-0.5, -h),
            (0.5, -h),
        ]))
        .unwrap();
        assert!((hex.area() - 2.598076211353316).abs() < 1e-12);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            ConvexPolygon::new(pts(&[(0.0, 0.0), (1.0, 0.0)])),
            Err(GeomError::TooFewVertices(2))
        ));
        assert_eq!(
            ConvexPolygon::new(pts(&[(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)])),
            Err(GeomError::SelfIntersecting)
        );
        assert!(matches!(
            ConvexPolygon::new(pts(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (1.0, 1.0)])),
            Err(GeomError::NotStrictlyConvex { .. })
        ));
        // reflex vertex
        assert!(matches!(
            ConvexPolygon::new(pts(&[(0.0, 0.0), (2.0, 0.0), (1.0, 0.5), (1.0, 2.0)])),
            Err(GeomError::NotStrictlyConvex { .. })
        ));
        // pentagram
        let star: Vec<Vector2> = (0..5)
            .map(|k| Vector2::from_angle(std::f64::consts::TAU * (2 * k) as f64 / 5.0))
            .collect();
        assert_eq!(ConvexPolygon::new(star), Err(GeomError::SelfIntersecting));
    }

    #[test]
    fn clockwise_input_is_reversed() {
        let p = ConvexPolygon::new(pts(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)])).unwrap();
        assert_eq!(p.area(), 1.0);
    }

    #[test]
    fn containment() {
        let sq = unit_square();
        let tol = 1e-9;
        assert!(sq.contains_point(&Vector2::new(0.5, 0.5), &tol));
        assert!(!sq.contains_point(&Vector2::new(1.5, 0.5), &tol));
        assert!(sq.contains_point(&Vector2::new(1.0 + tol / 2.0, 0.5), &tol));
        assert!(!sq.contains_point(&Vector2::new(1.0 + 2.0 * tol, 0.5), &tol));

        let diamond =
            ConvexPolygon::new(pts(&[(0.5, 0.0), (1.0, 0.5), (0.5, 1.0), (0.0, 0.5)])).unwrap();
        assert!(sq.contains_polygon(&diamond, &tol));
        assert!(!diamond.contains_polygon(&sq, &tol));
        assert!(sq.contains_polygon(&sq, &0.0));
    }

    #[test]
    fn affine_examples() {
        let sq = unit_square();
        assert_eq!(affine_apply(&AffineMap::identity(), &sq).unwrap(), sq);
        let double = AffineMap::new([[2.0, 0.0], [0.0, 2.0]], Vector2::new(0.0, 0.0));
        assert_eq!(affine_apply(&double, &sq).unwrap().area(), 4.0);
        let flip = AffineMap::new([[-1.0, 0.0], [0.0, 1.0]], Vector2::new(3.0, 0.0));
        let img = affine_apply(&flip, &sq).unwrap();
        assert!(img.area() > 0.0);
        assert!(ConvexPolygon::new(img.vertices().to_vec()).is_ok());
        let singular = AffineMap::new([[1.0, 2.0], [2.0, 4.0]], Vector2::new(0.0, 0.0));
        assert_eq!(affine_apply(&singular, &sq), Err(GeomError::SingularMap));
    }

    #[test]
    fn mirrored_keeps_first_vertex_and_area() {
        let p = ConvexPolygon::new(pts(&[(0.0, 0.0), (3.0, 0.0), (2.0, 1.0), (0.0, 2.0)])).unwrap();
        let q = p.mirrored();
        assert_eq!(q.vertex(0), &Vector2::new(-0.0, 0.0));
        assert!((q.area() - p.area()).abs() < 1e-15);
        assert!(ConvexPolygon::new(q.vertices().to_vec()).is_ok());
    }
}
