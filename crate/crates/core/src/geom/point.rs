use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest admissible absolute coordinate.
///
/// With `|x|, |y| <= C_MAX` every coordinate difference is below `2^22` and a
/// 2x2 determinant of differences stays below `2^45`, far from `i64` overflow.
pub const C_MAX: i64 = 1_000_000;

/// An integer point of the plane.
///
/// Field order gives the derived `Ord` the canonical lexicographic order
/// (ascending x, then ascending y) used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn in_range(&self) -> bool {
        self.x.abs() <= C_MAX && self.y.abs() <= C_MAX
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the turn `p -> q -> r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Collinear,
    Cw,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Ccw => 1,
            Orientation::Collinear => 0,
            Orientation::Cw => -1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

/// Twice the signed area of triangle `pqr`, exact.
#[inline]
pub fn cross(p: Point, q: Point, r: Point) -> i64 {
    (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
}

/// Exact orientation of the triple `(p, q, r)`.
#[inline]
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    match cross(p, q, r).signum() {
        1 => Orientation::Ccw,
        -1 => Orientation::Cw,
        _ => Orientation::Collinear,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn basic_orientations() {
        assert_eq!(orientation(p(0, 0), p(1, 0), p(0, 1)), Orientation::Ccw);
        assert_eq!(orientation(p(0, 0), p(1, 1), p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(p(0, 0), p(0, 1), p(1, 0)), Orientation::Cw);
    }

    #[test]
    fn extreme_coordinates_do_not_overflow() {
        let a = p(-C_MAX, -C_MAX);
        let b = p(C_MAX, -C_MAX);
        let c = p(C_MAX, C_MAX);
        assert_eq!(cross(a, b, c), 2 * C_MAX * 2 * C_MAX);
        assert_eq!(orientation(a, b, c), Orientation::Ccw);
        assert_eq!(orientation(c, b, a), Orientation::Cw);
    }

    #[test]
    fn lexicographic_order() {
        let mut v = vec![p(1, 0), p(0, 5), p(0, -1)];
        v.sort();
        assert_eq!(v, vec![p(0, -1), p(0, 5), p(1, 0)]);
    }
}
