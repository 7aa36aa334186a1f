use serde::{Deserialize, Serialize};

use super::point::{cross, orientation, Orientation, Point};
use super::GeomError;

/// A strictly convex polygon, vertices counter-clockwise starting from the
/// lexicographically smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    StrictInside,
    OnBoundary,
    Outside,
}

impl ConvexPolygon {
    /// Accepts a vertex cycle in either orientation and normalizes it.
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeomError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::TooFewPoints { needed: 3, got: n });
        }
        let first = orientation(vertices[0], vertices[1], vertices[2]);
        if first == Orientation::Collinear {
            return Err(GeomError::NotConvex);
        }
        for i in 0..n {
            let o = orientation(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
            if o != first {
                return Err(GeomError::NotConvex);
            }
        }
        // a star-shaped cycle can turn consistently yet wind twice
        let mut winding = 0i64;
        let o = vertices[0];
        for i in 1..n - 1 {
            winding += cross(o, vertices[i], vertices[i + 1]).signum();
        }
        if winding.unsigned_abs() as usize != n - 2 {
            return Err(GeomError::NotConvex);
        }
        let mut v = vertices;
        if first == Orientation::Cw {
            v.reverse();
        }
        let start = v
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| **p)
            .map(|(i, _)| i)
            .unwrap_or(0);
        v.rotate_left(start);
        Ok(ConvexPolygon { vertices: v })
    }

    /// Convex hull of points in convex position, or `NotConvex` when some
    /// point falls inside the hull of the others.
    pub fn from_convex_position(points: &[Point]) -> Result<Self, GeomError> {
        let hull = hull_vertices(points);
        if hull.len() != points.len() {
            return Err(GeomError::NotConvex);
        }
        ConvexPolygon::new(hull)
    }

    pub(crate) fn from_hull_unchecked(vertices: Vec<Point>) -> Self {
        debug_assert!(vertices.len() >= 3);
        ConvexPolygon { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed CCW edges.
    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn contains(&self, p: Point) -> Containment {
        point_in_convex_polygon(p, self)
    }

    pub fn has_vertex(&self, p: Point) -> bool {
        self.vertices.contains(&p)
    }
}

impl TryFrom<Vec<Point>> for ConvexPolygon {
    type Error = GeomError;

    fn try_from(v: Vec<Point>) -> Result<Self, Self::Error> {
        ConvexPolygon::new(v)
    }
}

impl From<ConvexPolygon> for Vec<Point> {
    fn from(p: ConvexPolygon) -> Self {
        p.vertices
    }
}

/// Classifies `p` against every directed edge of `poly`.
pub fn point_in_convex_polygon(p: Point, poly: &ConvexPolygon) -> Containment {
    let mut on_line = false;
    for (a, b) in poly.edges() {
        match orientation(a, b, p) {
            Orientation::Cw => return Containment::Outside,
            Orientation::Collinear => on_line = true,
            Orientation::Ccw => {}
        }
    }
    if on_line {
        Containment::OnBoundary
    } else {
        Containment::StrictInside
    }
}

/// True iff the closed regions of `a` and `b` share no point.
///
/// Two disjoint convex polygons always admit a separating line through an
/// edge of one of them, so it suffices to look for an edge whose outer open
/// halfplane holds every vertex of the other polygon.
pub fn convex_polygons_disjoint(a: &ConvexPolygon, b: &ConvexPolygon) -> bool {
    separated_by_edge(a.vertices(), b.vertices()) || separated_by_edge(b.vertices(), a.vertices())
}

fn separated_by_edge(edges_of: &[Point], others: &[Point]) -> bool {
    let n = edges_of.len();
    (0..n).any(|i| {
        let (p, q) = (edges_of[i], edges_of[(i + 1) % n]);
        others.iter().all(|&r| cross(p, q, r) < 0)
    })
}

/// Disjointness of closed convex hulls given as CCW hull vertex lists of any
/// size: a point, a segment, or a polygon.
///
/// Degenerate hulls contribute both directions of their supporting line as
/// candidate separators. Assumes no point of one list is collinear with a
/// segment of the other, which holds for subsets of a general-position set.
pub fn convex_sets_disjoint(a: &[Point], b: &[Point]) -> bool {
    if a.is_empty() || b.is_empty() {
        return true;
    }
    if a.len() == 1 && b.len() == 1 {
        return a[0] != b[0];
    }
    candidate_separated(a, b) || candidate_separated(b, a)
}

fn candidate_separated(edges_of: &[Point], others: &[Point]) -> bool {
    match edges_of.len() {
        1 => false,
        2 => {
            let (p, q) = (edges_of[0], edges_of[1]);
            others.iter().all(|&r| cross(p, q, r) < 0) || others.iter().all(|&r| cross(p, q, r) > 0)
        }
        _ => separated_by_edge(edges_of, others),
    }
}

/// Vertices of the convex hull, CCW from the lexicographic minimum
/// (Andrew's monotone chain). Returns the input itself, sorted, when fewer
/// than three points are given.
pub fn hull_vertices(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(pts.len() + 1);
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn poly(v: &[(i64, i64)]) -> ConvexPolygon {
        ConvexPolygon::new(v.iter().map(|&(x, y)| p(x, y)).collect()).unwrap()
    }

    #[test]
    fn normalizes_orientation_and_start() {
        let a = poly(&[(4, 4), (4, 0), (0, 0), (0, 4)]);
        assert_eq!(a.vertices(), &[p(0, 0), p(4, 0), p(4, 4), p(0, 4)]);
    }

    #[test]
    fn rejects_reflex_and_pentagram() {
        let reflex = vec![p(0, 0), p(4, 0), p(1, 1), p(0, 4)];
        assert_eq!(ConvexPolygon::new(reflex), Err(GeomError::NotConvex));
        // five-point star: every turn is a left turn but it winds twice
        let star = vec![p(0, 10), p(6, -8), p(-10, 3), p(10, 3), p(-6, -8)];
        assert_eq!(ConvexPolygon::new(star), Err(GeomError::NotConvex));
    }

    #[test]
    fn containment() {
        let sq = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert_eq!(point_in_convex_polygon(p(2, 2), &sq), Containment::StrictInside);
        assert_eq!(point_in_convex_polygon(p(0, 2), &sq), Containment::OnBoundary);
        assert_eq!(point_in_convex_polygon(p(9, 9), &sq), Containment::Outside);
    }

    #[test]
    fn disjointness_examples() {
        let t1 = poly(&[(0, 0), (2, 0), (0, 2)]);
        let t2 = poly(&[(10, 0), (12, 0), (10, 2)]);
        assert!(convex_polygons_disjoint(&t1, &t2));
        let sq = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let inner = poly(&[(1, 1), (3, 1), (1, 3)]);
        assert!(!convex_polygons_disjoint(&sq, &inner));
        assert!(!convex_polygons_disjoint(&inner, &sq));
        let shared = poly(&[(2, 0), (5, 1), (3, 3)]);
        assert!(!convex_polygons_disjoint(&t1, &shared));
    }

    #[test]
    fn degenerate_sets() {
        let sq = [p(0, 0), p(4, 0), p(4, 4), p(0, 4)];
        assert!(!convex_sets_disjoint(&[p(1, 1)], &sq));
        assert!(convex_sets_disjoint(&[p(5, 1)], &sq));
        assert!(convex_sets_disjoint(&[p(5, 1), p(7, 9)], &sq));
        assert!(!convex_sets_disjoint(&[p(-1, 1), p(7, 2)], &sq));
        assert!(!convex_sets_disjoint(&[p(0, 0), p(3, 7)], &[p(3, -1), p(-1, 3)]));
        assert!(convex_sets_disjoint(&[p(0, 0)], &[p(1, 0)]));
    }

    #[test]
    fn hull_of_square_with_center() {
        let h = hull_vertices(&[p(2, 2), p(4, 4), p(0, 0), p(0, 4), p(4, 0)]);
        assert_eq!(h, vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4)]);
    }
}
