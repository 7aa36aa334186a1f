//! Halfplanes, cones and angular neighbors.

use std::cmp::Ordering;

use super::point::{cross, orientation, Orientation, Point};
use super::pointset::PointSet;
use super::GeomError;

/// A convex region bounded by one or two lines through host points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// The halfplane bounded by line `ab` on the side of `witness`.
    Halfplane { a: Point, b: Point, witness: Point, closed: bool },
    /// Open interior of the angle `from - apex - to` (less than pi).
    Cone { apex: Point, from: Point, to: Point },
    /// The whole plane.
    Plane,
}

impl Region {
    pub fn contains(&self, p: Point) -> bool {
        match *self {
            Region::Halfplane { a, b, witness, closed } => {
                let side = cross(a, b, witness).signum();
                let s = cross(a, b, p).signum();
                s == side || (closed && s == 0)
            }
            Region::Cone { apex, from, to } => in_cone(apex, from, to, p),
            Region::Plane => true,
        }
    }
}

/// Membership in the open cone at `apex` spanned by rays towards `from` and
/// `to`, the angle between them being below pi.
pub fn in_cone(apex: Point, from: Point, to: Point, p: Point) -> bool {
    let turn = cross(apex, from, to).signum();
    turn != 0 && cross(apex, from, p).signum() == turn && cross(apex, p, to).signum() == turn
}

/// Points of `s` on the side of line `pq` holding `side_witness`.
pub fn halfplane_points(
    p: Point,
    q: Point,
    side_witness: Point,
    closed: bool,
    s: &PointSet,
) -> Result<Vec<Point>, GeomError> {
    if orientation(p, q, side_witness) == Orientation::Collinear {
        return Err(GeomError::WitnessOnLine);
    }
    let region = Region::Halfplane { a: p, b: q, witness: side_witness, closed };
    Ok(s.iter().filter(|&r| region.contains(r)).collect())
}

/// Orders points lying strictly on one side of the ray `apex -> target` by
/// increasing angle from that ray. Ties cannot occur in general position.
pub fn angular_order(apex: Point, target: Point, points: &mut [Point]) -> Result<(), GeomError> {
    let Some(&first) = points.first() else {
        return Ok(());
    };
    let side = cross(apex, target, first).signum();
    if side == 0 || points.iter().any(|&r| cross(apex, target, r).signum() != side) {
        return Err(GeomError::RegionStraddlesRay);
    }
    points.sort_by(|&a, &b| angular_cmp(apex, side, a, b));
    Ok(())
}

fn angular_cmp(apex: Point, side: i64, a: Point, b: Point) -> Ordering {
    let o = cross(apex, a, b).signum();
    if o == side {
        Ordering::Less
    } else if o == -side {
        Ordering::Greater
    } else {
        a.cmp(&b)
    }
}

/// The point `s` of `region` such that `Cone(s, apex, ray_target)` holds
/// exactly `k - 1` points of the region. `apex` and `ray_target` themselves
/// are never candidates.
pub fn kth_angular_neighbor(
    apex: Point,
    ray_target: Point,
    region: Region,
    k: usize,
    s: &PointSet,
) -> Result<Point, GeomError> {
    let mut candidates: Vec<Point> = s
        .iter()
        .filter(|&r| r != apex && r != ray_target && region.contains(r))
        .collect();
    if k == 0 || candidates.len() < k {
        return Err(GeomError::NotEnoughPointsInRegion { requested: k, available: candidates.len() });
    }
    angular_order(apex, ray_target, &mut candidates)?;
    Ok(candidates[k - 1])
}
