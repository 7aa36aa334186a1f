use serde::{Deserialize, Serialize};

use crate::geom::{cross, hull_vertices, Point, PointSet};
use crate::holes::find_5hole_points;
use crate::holes::Hole;

use super::{DisjointError, DisjointPair, Separator, Side};

/// A hull diagonal splitting the remaining hull vertices as evenly as
/// parity allows, with the number of interior points on each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DividingDiagonal {
    pub from: Point,
    pub to: Point,
    /// Interior points strictly left of `from -> to`.
    pub left: usize,
    /// Interior points strictly right of `from -> to`.
    pub right: usize,
}

impl DividingDiagonal {
    /// The `(a, b)` splitter type, `a <= b`.
    pub fn splitter(&self) -> (usize, usize) {
        (self.left.min(self.right), self.left.max(self.right))
    }
}

/// All dividing diagonals of `hull(s)`, ordered by hull vertex indices
/// (hull listed CCW from the lexicographically smallest point).
pub fn dividing_diagonals(s: &PointSet) -> Result<Vec<DividingDiagonal>, DisjointError> {
    let hull = hull_vertices(s.points());
    let k = hull.len();
    if k < 4 {
        return Err(DisjointError::HullTooSmall(k));
    }
    let interior: Vec<Point> = s.iter().filter(|p| !hull.contains(p)).collect();
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            let one = j - i - 1;
            let other = k - 2 - one;
            if one.abs_diff(other) != k % 2 {
                continue;
            }
            let (from, to) = (hull[i], hull[j]);
            let left = interior.iter().filter(|&&p| cross(from, to, p) > 0).count();
            out.push(DividingDiagonal { from, to, left, right: interior.len() - left });
        }
    }
    Ok(out)
}

const ASSIGNMENTS: [(Side, Side); 4] =
    [(Side::Left, Side::Right), (Side::Right, Side::Left), (Side::Left, Side::Left), (Side::Right, Side::Right)];

fn split(points: &[Point], sep: &Separator) -> (Vec<Point>, Vec<Point>) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &p in points {
        match sep.side_of(p) {
            Some(Side::Left) => left.push(p),
            Some(Side::Right) => right.push(p),
            None => unreachable!("general position: only the two line points lie on the line"),
        }
    }
    (left, right)
}

/// Tries the four side assignments of the line through `p` and `q`.
fn across(s: &PointSet, p: Point, q: Point) -> Result<Option<DisjointPair>, DisjointError> {
    for (from_side, to_side) in ASSIGNMENTS {
        let separator = Separator { from: p, to: q, from_side, to_side };
        let (left, right) = split(s.points(), &separator);
        if left.len() < 5 || right.len() < 5 {
            continue;
        }
        // a hole of one closed side is empty in all of `s`: the rest of `s`
        // is strictly across the line or is the other tagged line point
        let Some(a) = find_5hole_points(&left) else { continue };
        let Some(b) = find_5hole_points(&right) else { continue };
        let pair = DisjointPair { a: Hole::certify(&a, s)?, b: Hole::certify(&b, s)?, separator };
        if !separator.separates(pair.a.vertices(), pair.b.vertices()) {
            return Err(DisjointError::ContractViolation(format!("separator {separator:?} does not split the pair")));
        }
        return Ok(Some(pair));
    }
    Ok(None)
}

/// Two disjoint 5-holes of `s`, or `None` when there are none.
///
/// Dividing diagonals of the hull are tried first; then every line through
/// two points of `s` with each assignment of those two points to the sides.
/// Disjoint convex polygons always have a common inner tangent through a
/// vertex of each, so the scan is complete. Sets of at least 19 points
/// always yield a pair.
pub fn find_two_disjoint_5holes(s: &PointSet) -> Result<Option<DisjointPair>, DisjointError> {
    if s.len() < 10 {
        return Ok(None);
    }
    if let Ok(diagonals) = dividing_diagonals(s) {
        for d in diagonals {
            if let Some(pair) = across(s, d.from, d.to)? {
                return Ok(Some(pair));
            }
        }
    }
    let pts = s.points();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if let Some(pair) = across(s, pts[i], pts[j])? {
                return Ok(Some(pair));
            }
        }
    }
    if s.len() >= 19 {
        return Err(DisjointError::ContractViolation(format!("{} points without two disjoint 5-holes", s.len())));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{convex_polygons_disjoint, validate_general_position};

    fn set(v: &[(i64, i64)]) -> PointSet {
        validate_general_position(&v.iter().map(|&(x, y)| Point::new(x, y)).collect::<Vec<_>>()).unwrap()
    }

    fn regular(k: usize, r: f64) -> Vec<(i64, i64)> {
        (0..k)
            .map(|i| {
                let a = std::f64::consts::TAU * i as f64 / k as f64 + 0.1;
                ((r * a.cos()).round() as i64, (r * a.sin()).round() as i64)
            })
            .collect()
    }

    #[test]
    fn hexagon_long_diagonals() {
        let s = set(&regular(6, 1000.0));
        let d = dividing_diagonals(&s).unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.iter().all(|d| d.splitter() == (0, 0)));
    }

    #[test]
    fn square_splitter() {
        let s = set(&[(0, 0), (20, 0), (20, 20), (0, 20), (12, 3), (16, 5), (17, 9)]);
        let d = dividing_diagonals(&s).unwrap();
        assert_eq!(d.len(), 2);
        let long = d.iter().find(|d| d.from == Point::new(0, 0)).unwrap();
        assert_eq!(long.splitter(), (0, 3));
    }

    #[test]
    fn triangle_too_small() {
        let s = set(&[(0, 0), (10, 0), (0, 10), (2, 3)]);
        assert_eq!(dividing_diagonals(&s), Err(DisjointError::HullTooSmall(3)));
    }

    #[test]
    fn convex_decagon_pair() {
        let s = set(&regular(10, 1000.0));
        let pair = find_two_disjoint_5holes(&s).unwrap().unwrap();
        assert!(convex_polygons_disjoint(pair.a.polygon(), pair.b.polygon()));
        assert!(pair.separator.separates(pair.a.vertices(), pair.b.vertices()));
    }

    #[test]
    fn nonagon_has_no_pair() {
        let s = set(&regular(9, 1000.0));
        assert_eq!(find_two_disjoint_5holes(&s).unwrap(), None);
    }
}
