//! Complete k-hole search by fans around the lexicographically smallest
//! vertex.
//!
//! Every k-hole has a unique lexicographically smallest vertex `a`; its other
//! vertices all lie in the open halfplane "after" `a`, so their angular order
//! around `a` is a total order. A convex chain in that order, closed back to
//! `a`, is empty iff every fan triangle `(a, c_i, c_{i+1})` is empty, and only
//! points after `a` can fall inside. Both facts reduce the search to a DFS
//! over a precomputed empty-triangle table.

use crate::geom::{cross, Point};

struct Fan {
    anchor: Point,
    order: Vec<Point>,
    empty: Vec<bool>,
}

impl Fan {
    fn new(points: &[Point], anchor_idx: usize) -> Fan {
        let anchor = points[anchor_idx];
        let mut order: Vec<Point> = points[anchor_idx + 1..].to_vec();
        order.sort_by(|&b, &c| 0.cmp(&cross(anchor, b, c)));
        let m = order.len();
        let mut empty = vec![false; m * m];
        for i in 0..m {
            for j in i + 1..m {
                let (b, c) = (order[i], order[j]);
                let side = cross(b, c, anchor).signum();
                let hit = order[i + 1..j].iter().any(|&r| cross(b, c, r).signum() == side);
                empty[i * m + j] = !hit;
            }
        }
        Fan { anchor, order, empty }
    }

    fn is_empty(&self, i: usize, j: usize) -> bool {
        self.empty[i * self.order.len() + j]
    }

    /// Visits each convex empty chain of `k - 1` fan points closing at the
    /// anchor; `visit` returns `true` to stop.
    fn walk(&self, k: usize, chain: &mut Vec<usize>, visit: &mut dyn FnMut(&[Point]) -> bool) -> bool {
        let m = self.order.len();
        if chain.len() == k - 1 {
            let n = chain.len();
            let (b, c) = (self.order[chain[n - 2]], self.order[chain[n - 1]]);
            if cross(b, c, self.anchor) > 0 {
                let mut verts = Vec::with_capacity(k);
                verts.push(self.anchor);
                verts.extend(chain.iter().map(|&i| self.order[i]));
                return visit(&verts);
            }
            return false;
        }
        let last = *chain.last().expect("chain starts non-empty");
        let needed = k - 1 - chain.len();
        for next in last + 1..m {
            if m - next < needed {
                break;
            }
            if !self.is_empty(last, next) {
                continue;
            }
            if chain.len() >= 2 {
                let prev = self.order[chain[chain.len() - 2]];
                if cross(prev, self.order[last], self.order[next]) <= 0 {
                    continue;
                }
            }
            chain.push(next);
            let stop = self.walk(k, chain, visit);
            chain.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

fn for_each_hole(points: &[Point], k: usize, visit: &mut dyn FnMut(&[Point]) -> bool) {
    assert!(k >= 3, "k-hole search needs k >= 3");
    let mut pts = points.to_vec();
    pts.sort_unstable();
    for a in 0..pts.len() {
        if pts.len() - a < k {
            break;
        }
        let fan = Fan::new(&pts, a);
        for first in 0..fan.order.len() {
            let mut chain = vec![first];
            if fan.walk(k, &mut chain, visit) {
                return;
            }
        }
    }
}

/// First k-hole in canonical order (vertices CCW from the lexicographic
/// minimum), or `None`.
pub fn first_hole(points: &[Point], k: usize) -> Option<Vec<Point>> {
    let mut found = None;
    for_each_hole(points, k, &mut |v| {
        found = Some(v.to_vec());
        true
    });
    found
}

/// All k-holes, vertices CCW from the lexicographic minimum, sorted.
pub fn all_holes(points: &[Point], k: usize) -> Vec<Vec<Point>> {
    let mut out = Vec::new();
    for_each_hole(points, k, &mut |v| {
        out.push(v.to_vec());
        false
    });
    out.sort();
    out
}

/// First k-hole satisfying `accept`.
pub fn first_hole_where(points: &[Point], k: usize, mut accept: impl FnMut(&[Point]) -> bool) -> Option<Vec<Point>> {
    let mut found = None;
    for_each_hole(points, k, &mut |v| {
        if accept(v) {
            found = Some(v.to_vec());
            true
        } else {
            false
        }
    });
    found
}
