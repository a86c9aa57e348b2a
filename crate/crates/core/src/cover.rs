use crate::geom::{ConvexPolygon, Scalar, Vector2};

/// A circumscribing polygon together with how it was obtained.
#[derive(Clone, Debug, PartialEq)]
pub struct Circumscription<S = f64> {
    pub cover: ConvexPolygon<S>,
    /// `|cover| / |input|`.
    pub ratio: S,
    /// Rotation of the input's vertex labels used by the construction
    /// (zero for enumeration results).
    pub labeling: usize,
    /// Auxiliary points of the construction, in construction order.
    pub construction_points: Vec<Vector2<S>>,
}

impl<S: Scalar> Circumscription<S> {
    pub fn area(&self) -> S {
        self.cover.area()
    }

    pub fn to_f64(&self) -> Circumscription<f64> {
        Circumscription {
            cover: self.cover.to_f64(),
            ratio: self.ratio.to_f64(),
            labeling: self.labeling,
            construction_points: self.construction_points.iter().map(Vector2::to_f64).collect(),
        }
    }
}
