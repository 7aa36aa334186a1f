//! Families of pairwise-disjoint 5-holes.
//!
//! * [`find_two_disjoint_5holes`]: two disjoint 5-holes, guaranteed for
//!   every set of at least 19 points; the search over separating lines is
//!   complete, so `None` is a proof of absence.
//! * [`separable_partition`]: splits `2m + 9` points into hull-disjoint parts
//!   of sizes `m`, `9`, `m` with a 5-hole in the middle part.
//! * [`witness_5n_47`] and [`witness_doubling`]: assemble the above into
//!   `floor(5n/47)` and `(3n - 1)/28` disjoint 5-holes.
//! * [`verify_witness`]: an independent re-check of any [`WitnessReport`].

mod pair;
mod partition;
mod verify;
mod witness;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{cross, GeomError, Point};
use crate::holes::{Hole, HoleError};

pub use pair::{dividing_diagonals, find_two_disjoint_5holes, DividingDiagonal};
pub use partition::{label_uvw, separable_partition, SeparablePartition, UVWLabeling};
pub use verify::{verify_witness, Verification, VerifyIssue};
pub use witness::{
    doubling_level, doubling_size, witness_5n_47, witness_doubling, PlanEntry, StripMethod, WitnessMethod,
    WitnessReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DisjointError {
    #[error("hull has {0} vertices, need at least 4")]
    HullTooSmall(usize),
    #[error("expected {expected} points, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("{0} is not of the form 28*2^(k-1) - 9")]
    NotADoublingSize(usize),
    #[error("anchor {anchor} out of range for a hull of {hull} vertices")]
    BadAnchor { anchor: usize, hull: usize },
    #[error("contract violation (implementation fault): {0}")]
    ContractViolation(String),
    #[error(transparent)]
    Hole(#[from] HoleError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Directed line through two points, with a side tag for each of them.
///
/// A point strictly left of `from -> to` is on [`Side::Left`], strictly
/// right on [`Side::Right`]; `from` and `to` themselves are on the side
/// their tag names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Separator {
    pub from: Point,
    pub to: Point,
    pub from_side: Side,
    pub to_side: Side,
}

impl Separator {
    pub fn side_of(&self, p: Point) -> Option<Side> {
        if p == self.from {
            return Some(self.from_side);
        }
        if p == self.to {
            return Some(self.to_side);
        }
        match cross(self.from, self.to, p).signum() {
            1 => Some(Side::Left),
            -1 => Some(Side::Right),
            _ => None,
        }
    }

    /// True iff every point of `a` is on the left and every point of `b` on
    /// the right. Since the line meets each side in at most one tagged
    /// point, this certifies that the two hulls are disjoint.
    pub fn separates(&self, a: &[Point], b: &[Point]) -> bool {
        self.from != self.to
            && a.iter().all(|&p| self.side_of(p) == Some(Side::Left))
            && b.iter().all(|&p| self.side_of(p) == Some(Side::Right))
    }
}

/// Two disjoint 5-holes of one host set, with a separating line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointPair {
    pub a: Hole,
    pub b: Hole,
    /// `a` lies on the left of the separator, `b` on the right.
    pub separator: Separator,
}

impl DisjointPair {
    pub fn holes(&self) -> [&Hole; 2] {
        [&self.a, &self.b]
    }
}
