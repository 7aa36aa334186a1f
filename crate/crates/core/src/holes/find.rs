use crate::geom::{hull_vertices, Point, PointSet};

use super::constructive::{hole_in_hexagon, hole_in_pentagon, hole_in_quadrilateral, Found};
use super::{search, Hole};

/// Structured route by hull size, if one applies.
fn structured(points: &[Point]) -> Option<Found> {
    let hull = hull_vertices(points);
    let interior = points.len() - hull.len();
    match hull.len() {
        n if n >= 6 => Some(hole_in_hexagon(&hull[..6], points)),
        5 if interior >= 2 => Some(hole_in_pentagon(&hull, points)),
        4 if interior >= 5 => Some(hole_in_quadrilateral(&hull, points)),
        _ => None,
    }
}

/// Some 5-hole of `points` (empty with respect to `points`), or `None` when
/// none exists.
pub(crate) fn find_5hole_points(points: &[Point]) -> Option<Vec<Point>> {
    if points.len() < 5 {
        return None;
    }
    match structured(points) {
        Some(Ok(found)) => return Some(found),
        Some(Err(e)) => log::warn!("structured 5-hole finder failed ({e}); using complete search"),
        None => {}
    }
    search::first_hole(points, 5)
}

/// A verified 5-hole of `s`, or `None` exactly when `s` has none.
///
/// Large hulls go through the constructive finders; anything else, and any
/// structured failure, is settled by the complete fan search.
pub fn find_5hole(s: &PointSet) -> Option<Hole> {
    let found = find_5hole_points(s.points())?;
    match Hole::certify(&found, s) {
        Ok(h) => Some(h),
        Err(e) => {
            log::warn!("discarding uncertified 5-hole ({e}); using complete search");
            let found = search::first_hole(s.points(), 5)?;
            Hole::certify(&found, s).ok()
        }
    }
}

/// Existence only, without building a certificate.
pub fn has_5hole(points: &[Point]) -> bool {
    find_5hole_points(points).is_some()
}
