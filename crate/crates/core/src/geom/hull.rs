use std::fmt;

use serde::{Deserialize, Serialize};

use super::point::Point;
use super::polygon::{hull_vertices, ConvexPolygon};
use super::pointset::PointSet;
use super::GeomError;

/// Convex hull of a point set of at least three points.
pub fn convex_hull(s: &PointSet) -> Result<ConvexPolygon, GeomError> {
    if s.len() < 3 {
        return Err(GeomError::TooFewPoints { needed: 3, got: s.len() });
    }
    Ok(ConvexPolygon::from_hull_unchecked(hull_vertices(s.points())))
}

/// Points of `s` that are not hull vertices, in canonical order.
pub fn interior_points(s: &PointSet, hull: &ConvexPolygon) -> Vec<Point> {
    s.iter().filter(|p| !hull.has_vertex(*p)).collect()
}

/// Sizes of successive convex layers, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LayerSignature(pub Vec<usize>);

impl LayerSignature {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is(&self, counts: &[usize]) -> bool {
        self.0 == counts
    }
}

impl fmt::Display for LayerSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// One convex layer. A final layer of one or two points has no polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Layer {
    Polygon(ConvexPolygon),
    Degenerate(Vec<Point>),
}

impl Layer {
    pub fn points(&self) -> &[Point] {
        match self {
            Layer::Polygon(p) => p.vertices(),
            Layer::Degenerate(v) => v,
        }
    }

    pub fn len(&self) -> usize {
        self.points().len()
    }

    pub fn is_empty(&self) -> bool {
        self.points().is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexLayers {
    pub layers: Vec<Layer>,
    pub signature: LayerSignature,
}

/// Onion peeling: repeatedly remove hull vertices.
pub fn convex_layers(s: &PointSet) -> ConvexLayers {
    let mut rest: Vec<Point> = s.points().to_vec();
    let mut layers = Vec::new();
    while !rest.is_empty() {
        if rest.len() < 3 {
            layers.push(Layer::Degenerate(std::mem::take(&mut rest)));
            break;
        }
        let hull = hull_vertices(&rest);
        rest.retain(|p| !hull.contains(p));
        layers.push(Layer::Polygon(ConvexPolygon::from_hull_unchecked(hull)));
    }
    let signature = LayerSignature(layers.iter().map(Layer::len).collect());
    ConvexLayers { layers, signature }
}

pub fn layer_signature(s: &PointSet) -> LayerSignature {
    convex_layers(s).signature
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::validate_general_position;

    fn set(v: &[(i64, i64)]) -> PointSet {
        validate_general_position(&v.iter().map(|&(x, y)| Point::new(x, y)).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn hull_examples() {
        // the exact center would be collinear with two corners
        let sq = set(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]);
        let h = convex_hull(&sq).unwrap();
        assert_eq!(h.vertices(), &[Point::new(0, 0), Point::new(4, 0), Point::new(4, 4), Point::new(0, 4)]);
        assert_eq!(interior_points(&sq, &h), vec![Point::new(2, 1)]);

        let pent = set(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]);
        assert_eq!(convex_hull(&pent).unwrap().len(), 5);

        let tri = set(&[(0, 0), (5, 0), (0, 5)]);
        assert_eq!(convex_hull(&tri).unwrap().len(), 3);
        assert!(matches!(
            convex_hull(&set(&[(0, 0), (1, 0)])),
            Err(GeomError::TooFewPoints { .. })
        ));
    }

    #[test]
    fn layer_examples() {
        let nested = set(&[
            (0, 0), (12, 0), (0, 12),
            (2, 1), (7, 2), (1, 7),
            (3, 3), (4, 3), (3, 5),
        ]);
        assert!(layer_signature(&nested).is(&[3, 3, 3]));

        let sq = set(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]);
        let layers = convex_layers(&sq);
        assert!(layers.signature.is(&[4, 1]));
        assert!(matches!(layers.layers[1], Layer::Degenerate(_)));
        assert_eq!(layers.signature.to_string(), "L{4,1}");
    }
}
