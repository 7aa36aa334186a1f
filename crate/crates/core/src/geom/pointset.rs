use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::point::{cross, Point};
use super::GeomError;

/// A validated point set in general position, stored in canonical order
/// (ascending x, then ascending y).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct PointSet {
    points: Vec<Point>,
}

/// Rejects duplicates, collinear triples and out-of-range coordinates.
///
/// Reported indices refer to positions in `points` as given. When several
/// violations exist the lexicographically smallest index pair or triple is
/// reported, so the error is independent of scan order.
pub fn validate_general_position(points: &[Point]) -> Result<PointSet, GeomError> {
    if points.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    if let Some(i) = points.iter().position(|p| !p.in_range()) {
        return Err(GeomError::CoordinateOverflow(i));
    }
    // duplicates: sort indices by point, adjacent equal entries collide
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_key(|&i| (points[i], i));
    let mut dup: Option<(usize, usize)> = None;
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            let pair = (w[0].min(w[1]), w[0].max(w[1]));
            dup = Some(dup.map_or(pair, |d| d.min(pair)));
        }
    }
    if let Some((i, j)) = dup {
        return Err(GeomError::DuplicatePoint(i, j));
    }
    if let Some((i, j, k)) = first_collinear_triple(points) {
        return Err(GeomError::CollinearTriple(i, j, k));
    }
    Ok(PointSet::from_valid(points.to_vec()))
}

fn first_collinear_triple(points: &[Point]) -> Option<(usize, usize, usize)> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if cross(points[i], points[j], points[k]) == 0 {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

impl PointSet {
    /// Builds a set from points already known to be distinct, in range and
    /// in general position (typically a subset of a validated set).
    pub(crate) fn from_valid(mut points: Vec<Point>) -> Self {
        points.sort_unstable();
        debug_assert!(points.windows(2).all(|w| w[0] != w[1]));
        PointSet { points }
    }

    /// Subset of this set; callers guarantee membership.
    pub fn subset(&self, points: impl IntoIterator<Item = Point>) -> PointSet {
        let pts: Vec<Point> = points.into_iter().collect();
        debug_assert!(pts.iter().all(|p| self.contains(*p)));
        PointSet::from_valid(pts)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<Point> {
        self.points.get(index).copied()
    }

    /// Canonical index of `p`, if present.
    pub fn index_of(&self, p: Point) -> Option<usize> {
        self.points.binary_search(&p).ok()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.index_of(p).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.points.iter().copied()
    }

    /// Points of this set not in `other`.
    pub fn without(&self, other: &[Point]) -> PointSet {
        PointSet {
            points: self
                .points
                .iter()
                .copied()
                .filter(|p| !other.contains(p))
                .collect(),
        }
    }

    /// SHA-256 over the canonical text form, lowercase hex.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        for p in &self.points {
            hasher.update(format!("{} {}\n", p.x, p.y).as_bytes());
        }
        hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.points {
            writeln!(f, "{} {}", p.x, p.y)?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}


impl TryFrom<Vec<Point>> for PointSet {
    type Error = GeomError;

    fn try_from(v: Vec<Point>) -> Result<Self, Self::Error> {
        validate_general_position(&v)
    }
}

impl From<PointSet> for Vec<Point> {
    fn from(s: PointSet) -> Self {
        s.points
    }
}
