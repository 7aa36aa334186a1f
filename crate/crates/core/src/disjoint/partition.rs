use serde::{Deserialize, Serialize};

use crate::geom::{
    angular_order, convex_sets_disjoint, cross, hull_vertices, point_in_convex_polygon, Containment, ConvexPolygon,
    Point, PointSet,
};
use crate::holes::{find_5hole_points, Hole};

use super::DisjointError;

/// Angular labeling of `2m + 9` points around a hull vertex `u1`.
///
/// Sweeping CCW around `u1` from the next hull vertex `u2` to the previous
/// one `w_m`, `u` holds `u1` and the first `m - 1` points, `v` the next 9
/// and `w` the last `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UVWLabeling {
    pub u: Vec<Point>,
    pub v: Vec<Point>,
    pub w: Vec<Point>,
    /// `[u1, u2, w_m]`; `u1 u2` and `w_m u1` are hull edges.
    pub anchor: [Point; 3],
}

fn check_size(s: &PointSet, m: usize) -> Result<(), DisjointError> {
    if m == 0 || s.len() != 2 * m + 9 {
        return Err(DisjointError::SizeMismatch { expected: 2 * m.max(1) + 9, got: s.len() });
    }
    Ok(())
}

/// Labels `s` (`|s| = 2m + 9`) around hull vertex number `anchor` (hull
/// listed CCW from the lexicographically smallest point).
pub fn label_uvw(s: &PointSet, m: usize, anchor: usize) -> Result<UVWLabeling, DisjointError> {
    check_size(s, m)?;
    let hull = hull_vertices(s.points());
    let h = hull.len();
    if anchor >= h {
        return Err(DisjointError::BadAnchor { anchor, hull: h });
    }
    let u1 = hull[anchor];
    let u2 = hull[(anchor + 1) % h];
    let wm = hull[(anchor + h - 1) % h];
    let mut rest: Vec<Point> = s.iter().filter(|&p| p != u1 && p != u2).collect();
    angular_order(u1, u2, &mut rest)?;
    let mut sweep = Vec::with_capacity(s.len() - 1);
    sweep.push(u2);
    sweep.extend(rest);
    let mut u = vec![u1];
    u.extend_from_slice(&sweep[..m - 1]);
    let v = sweep[m - 1..m + 8].to_vec();
    let w = sweep[m + 8..].to_vec();
    debug_assert_eq!(w.last(), Some(&wm));
    Ok(UVWLabeling { u, v, w, anchor: [u1, u2, wm] })
}

/// Three pairwise hull-disjoint parts of sizes `m`, `9`, `m`, the middle one
/// holding a 5-hole.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparablePartition {
    pub s1: PointSet,
    pub s2: PointSet,
    pub s3: PointSet,
    /// A 5-hole of `s2` (and, the parts being hull-disjoint, of the whole set).
    pub hole: Hole,
    pub m: usize,
}

impl SeparablePartition {
    /// Re-checks every invariant against the partitioned set `s`.
    pub fn check(&self, s: &PointSet) -> Result<(), String> {
        let parts = [&self.s1, &self.s2, &self.s3];
        let sizes = [self.m, 9, self.m];
        for (part, size) in parts.iter().zip(sizes) {
            if part.len() != size {
                return Err(format!("part of size {} where {size} was expected", part.len()));
            }
        }
        let mut all: Vec<Point> = parts.iter().flat_map(|p| p.iter()).collect();
        all.sort_unstable();
        if all != s.points() {
            return Err("parts do not partition the set".into());
        }
        let hulls: Vec<Vec<Point>> = parts.iter().map(|p| hull_vertices(p.points())).collect();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if !convex_sets_disjoint(&hulls[i], &hulls[j]) {
                return Err(format!("hulls of parts {} and {} intersect", i + 1, j + 1));
            }
        }
        match crate::holes::is_empty_convex(self.hole.vertices(), &self.s2) {
            Ok(true) if self.hole.k() == 5 => Ok(()),
            Ok(_) => Err("middle hole is not an empty convex pentagon".into()),
            Err(e) => Err(format!("middle hole: {e}")),
        }
    }
}

/// Order in which `v` entries leave the middle set: outermost first.
const REMOVALS: [usize; 9] = [0, 8, 1, 7, 2, 6, 3, 5, 4];

/// Points that may enter the middle set: `u1`, then alternately the `u` and
/// `w` points angularly closest to `v`.
fn additions(lab: &UVWLabeling) -> Vec<Point> {
    let mut out = vec![lab.u[0]];
    let from_u = lab.u[1..].iter().rev();
    let mut from_w = lab.w.iter();
    for &p in from_u {
        out.push(p);
        if let Some(&q) = from_w.next() {
            out.push(q);
        }
    }
    out.extend(from_w);
    out
}

/// Visits `v` with up to two points swapped out for points of `u` and `w`;
/// `visit` returns `Some` to stop.
fn for_each_middle<T>(
    lab: &UVWLabeling,
    mut visit: impl FnMut(&[Point]) -> Result<Option<T>, DisjointError>,
) -> Result<Option<T>, DisjointError> {
    if let Some(t) = visit(&lab.v)? {
        return Ok(Some(t));
    }
    let adds = additions(lab);
    let mut middle = lab.v.clone();
    for &r in &REMOVALS {
        for &a in &adds {
            middle[r] = a;
            if let Some(t) = visit(&middle)? {
                return Ok(Some(t));
            }
        }
        middle[r] = lab.v[r];
    }
    for i in 0..9 {
        for j in i + 1..9 {
            let (r1, r2) = (REMOVALS[i], REMOVALS[j]);
            for x in 0..adds.len() {
                for y in x + 1..adds.len() {
                    middle[r1] = adds[x];
                    middle[r2] = adds[y];
                    if let Some(t) = visit(&middle)? {
                        return Ok(Some(t));
                    }
                }
            }
            middle[r1] = lab.v[r1];
            middle[r2] = lab.v[r2];
        }
    }
    Ok(None)
}

/// Splits `rest` into two line-separated halves of size `m`, both
/// hull-disjoint from `middle_hull`. Tries every line through two points of
/// `rest` with every side assignment of those points, which covers every
/// pair of hull-disjoint halves.
fn balanced_split(rest: &[Point], m: usize, middle_hull: &[Point]) -> Option<(Vec<Point>, Vec<Point>)> {
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let (p, q) = (rest[i], rest[j]);
            let strictly_left = rest.iter().filter(|&&r| cross(p, q, r) > 0).count();
            for (p_left, q_left) in [(true, false), (false, true), (true, true), (false, false)] {
                if strictly_left + p_left as usize + q_left as usize != m {
                    continue;
                }
                let (left, right): (Vec<Point>, Vec<Point>) = rest.iter().partition(|&&r| {
                    if r == p {
                        p_left
                    } else if r == q {
                        q_left
                    } else {
                        cross(p, q, r) > 0
                    }
                });
                if convex_sets_disjoint(&hull_vertices(&left), middle_hull)
                    && convex_sets_disjoint(&hull_vertices(&right), middle_hull)
                {
                    return Some((left, right));
                }
            }
        }
    }
    None
}

fn try_middle(s: &PointSet, middle: &[Point], m: usize) -> Result<Option<SeparablePartition>, DisjointError> {
    let hull = hull_vertices(middle);
    let polygon = ConvexPolygon::from_hull_unchecked(hull.clone());
    let rest: Vec<Point> = s.iter().filter(|p| !middle.contains(p)).collect();
    if rest.iter().any(|&r| point_in_convex_polygon(r, &polygon) != Containment::Outside) {
        return Ok(None);
    }
    let Some(found) = find_5hole_points(middle) else { return Ok(None) };
    let Some((left, right)) = balanced_split(&rest, m, &hull) else { return Ok(None) };
    let s2 = s.subset(middle.iter().copied());
    let hole = Hole::certify(&found, &s2)?;
    Ok(Some(SeparablePartition { s1: s.subset(left), s2, s3: s.subset(right), hole, m }))
}

/// Splits `s` (`|s| = 2m + 9`) into hull-disjoint parts of sizes `m`, `9`,
/// `m` with a 5-hole in the middle part.
///
/// For each hull vertex as anchor, the middle part is drawn from the `v`
/// points of [`label_uvw`] with at most two of them exchanged for points of
/// `u` and `w`; the first candidate that holds a 5-hole and leaves a
/// balanced hull-disjoint split of the remaining points wins.
pub fn separable_partition(s: &PointSet, m: usize) -> Result<SeparablePartition, DisjointError> {
    check_size(s, m)?;
    let h = hull_vertices(s.points()).len();
    for anchor in 0..h {
        let lab = label_uvw(s, m, anchor)?;
        if let Some(found) = for_each_middle(&lab, |middle| try_middle(s, middle, m))? {
            if let Err(e) = found.check(s) {
                return Err(DisjointError::ContractViolation(format!("partition failed its own check: {e}")));
            }
            return Ok(found);
        }
    }
    Err(DisjointError::ContractViolation(format!(
        "no separable partition with m = {m} among {h} anchors and all swap candidates"
    )))
}
