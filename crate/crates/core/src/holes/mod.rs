//! k-holes: empty convex polygons spanned by points of a host set.
//!
//! [`enumerate_k_holes`] is the brute-force definition and serves as the
//! oracle. [`find_5hole`] answers the existence question quickly by
//! dispatching on the hull size to the constructive finders in
//! [`constructive`], and falls back to a complete fan search otherwise.

mod classify;
pub mod constructive;
mod find;
pub mod search;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{hull_vertices, point_in_convex_polygon, Containment, ConvexPolygon, GeomError, Point, PointSet};

pub use classify::{classify_9points, is_k_redundant, NinePointClassification};
pub use constructive::{
    find_5hole_9pts_hull4plus, find_5hole_hexagon, find_5hole_in_hexagon, find_5hole_pentagon_hull,
    find_5hole_quad_hull,
};
pub use find::{find_5hole, has_5hole};
pub(crate) use find::find_5hole_points;

/// Default cap on the number of subsets the brute-force oracle may test.
pub const DEFAULT_ORACLE_BUDGET: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_ORACLE_BUDGET`].
pub const ORACLE_BUDGET_ENV: &str = "PENTAHOLE_ORACLE_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HoleError {
    #[error("point {0} is not in the host set")]
    SubsetNotInHost(Point),
    #[error("point {0} is not in the set")]
    PointNotInSet(Point),
    #[error("oracle would test {subsets} subsets, budget is {budget}")]
    BudgetExceeded { subsets: u128, budget: u64 },
    #[error("no convex hexagon found")]
    NoConvexHexagonFound,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("contract violation (implementation fault): {0}")]
    ContractViolation(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// An empty convex polygon whose vertices belong to a host set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hole {
    polygon: ConvexPolygon,
    host_digest: String,
}

impl Hole {
    /// Checks emptiness and convexity against `host` and wraps the result.
    pub fn certify(vertices: &[Point], host: &PointSet) -> Result<Hole, HoleError> {
        if !is_empty_convex(vertices, host)? {
            return Err(HoleError::ContractViolation(format!(
                "{} is not an empty convex polygon of the host set",
                fmt_points(vertices)
            )));
        }
        Ok(Hole {
            polygon: ConvexPolygon::from_convex_position(vertices)?,
            host_digest: host.digest(),
        })
    }

    pub(crate) fn from_parts(polygon: ConvexPolygon, host_digest: String) -> Hole {
        Hole { polygon, host_digest }
    }

    pub fn polygon(&self) -> &ConvexPolygon {
        &self.polygon
    }

    pub fn vertices(&self) -> &[Point] {
        self.polygon.vertices()
    }

    pub fn k(&self) -> usize {
        self.polygon.len()
    }

    pub fn host_digest(&self) -> &str {
        &self.host_digest
    }

    /// The same polygon re-checked against a larger host set.
    pub fn rehost(&self, host: &PointSet) -> Result<Hole, HoleError> {
        Hole::certify(self.vertices(), host)
    }
}

impl fmt::Display for Hole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_points(self.vertices()))
    }
}

pub(crate) fn fmt_points(points: &[Point]) -> String {
    let parts: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

/// True iff `subset` is in convex position and no other point of `s` lies
/// strictly inside its hull.
pub fn is_empty_convex(subset: &[Point], s: &PointSet) -> Result<bool, HoleError> {
    if let Some(&p) = subset.iter().find(|p| !s.contains(**p)) {
        return Err(HoleError::SubsetNotInHost(p));
    }
    if subset.len() < 3 {
        return Err(GeomError::TooFewPoints { needed: 3, got: subset.len() }.into());
    }
    let hull = hull_vertices(subset);
    if hull.len() != subset.len() {
        return Ok(false);
    }
    let polygon = ConvexPolygon::from_hull_unchecked(hull);
    Ok(s
        .iter()
        .filter(|p| !subset.contains(p))
        .all(|p| point_in_convex_polygon(p, &polygon) == Containment::Outside))
}

/// Budget from `PENTAHOLE_ORACLE_BUDGET`, else the default.
pub fn oracle_budget() -> u64 {
    std::env::var(ORACLE_BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_BUDGET)
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Every k-hole of `s`, by testing all `C(n, k)` subsets.
pub fn enumerate_k_holes(s: &PointSet, k: usize) -> Result<Vec<Hole>, HoleError> {
    enumerate_k_holes_with_budget(s, k, oracle_budget())
}

pub fn enumerate_k_holes_with_budget(s: &PointSet, k: usize, budget: u64) -> Result<Vec<Hole>, HoleError> {
    if k < 3 || k > s.len() {
        return Err(HoleError::PreconditionViolated(format!(
            "need 3 <= k <= n, got k = {k}, n = {}",
            s.len()
        )));
    }
    let subsets = binomial(s.len(), k);
    if subsets > budget as u128 {
        return Err(HoleError::BudgetExceeded { subsets, budget });
    }
    let pts = s.points();
    let digest = s.digest();
    let mut holes = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut chosen = vec![Point::new(0, 0); k];
    loop {
        for (slot, &i) in chosen.iter_mut().zip(&idx) {
            *slot = pts[i];
        }
        if subset_is_hole(&chosen, pts) {
            let polygon = ConvexPolygon::from_hull_unchecked(hull_vertices(&chosen));
            holes.push(Hole::from_parts(polygon, digest.clone()));
        }
        if !next_combination(&mut idx, pts.len()) {
            break;
        }
    }
    holes.sort_by(|a, b| a.vertices().cmp(b.vertices()));
    Ok(holes)
}

fn subset_is_hole(chosen: &[Point], all: &[Point]) -> bool {
    let hull = hull_vertices(chosen);
    if hull.len() != chosen.len() {
        return false;
    }
    let polygon = ConvexPolygon::from_hull_unchecked(hull);
    all.iter()
        .filter(|p| !chosen.contains(p))
        .all(|&p| point_in_convex_polygon(p, &polygon) == Containment::Outside)
}

/// Advances `idx` to the next k-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
