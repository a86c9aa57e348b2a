//! Planar primitives: vectors and the outer product, lines, affine maps,
//! strictly convex polygons, and polygon generators.
//!
//! Everything except the generators is generic over [`Scalar`], so the same
//! code runs in `f64` and in exact arithmetic.

mod generate;
mod polygon;
mod scalar;
mod vector;

pub use generate::{random_convex_ngon, regular_ngon};
pub use polygon::{affine_apply, validate_convex, ConvexPolygon, CONVEXITY_TOL};
pub use scalar::Scalar;
pub use vector::{line_intersect, triangle_area, wedge, AffineMap, Line2, Vector2};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeomError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon is not strictly convex at vertex {vertex}")]
    NotStrictlyConvex { vertex: usize },
    #[error("polygon boundary intersects itself")]
    SelfIntersecting,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("line direction is zero")]
    ZeroDirection,
    #[error("affine map is singular")]
    SingularMap,
    #[error("side count must be at least 3, got {0}")]
    BadSideCount(usize),
    #[error("area must be positive and finite, got {0}")]
    BadArea(f64),
}
