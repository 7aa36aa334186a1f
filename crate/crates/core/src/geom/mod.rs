//! Exact integer geometry: orientation, hulls, convex layers, angular
//! orderings and convex-region disjointness.
//!
//! Every predicate is decided by the sign of a 64-bit cross product; no
//! floating point is involved anywhere.

mod angular;
mod hull;
mod point;
mod pointset;
mod polygon;

pub use angular::{angular_order, halfplane_points, in_cone, kth_angular_neighbor, Region};
pub use hull::{
    convex_hull, convex_layers, interior_points, layer_signature, ConvexLayers, Layer, LayerSignature,
};
pub use point::{cross, orientation, Orientation, Point, C_MAX};
pub use pointset::{validate_general_position, PointSet};
pub use polygon::{
    convex_polygons_disjoint, convex_sets_disjoint, hull_vertices, point_in_convex_polygon, Containment,
    ConvexPolygon,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("empty point list")]
    EmptyInput,
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("points {0}, {1} and {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("point {0} has a coordinate beyond +/-{C_MAX}")]
    CoordinateOverflow(usize),
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("vertex cycle is not strictly convex")]
    NotConvex,
    #[error("requested angular neighbor {requested} but region holds {available} points")]
    NotEnoughPointsInRegion { requested: usize, available: usize },
    #[error("side witness lies on the line")]
    WitnessOnLine,
    #[error("region points lie on both sides of the reference ray")]
    RegionStraddlesRay,
}
