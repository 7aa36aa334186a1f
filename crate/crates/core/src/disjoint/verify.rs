use serde::{Deserialize, Serialize};

use crate::geom::{convex_polygons_disjoint, PointSet};
use crate::holes::{is_empty_convex, HoleError};

use super::{doubling_level, WitnessMethod, WitnessReport};

/// Why a witness report was rejected. Hole numbers index `report.holes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum VerifyIssue {
    SizeMismatch { reported: usize, actual: usize },
    NotAPentagon { hole: usize, k: usize },
    SubsetNotInHost { hole: usize },
    NotEmptyConvex { hole: usize },
    Overlap { a: usize, b: usize },
    BelowBound { found: usize, claimed: usize },
    WrongBound { claimed: usize, expected: usize },
    NotADoublingSize { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub valid: bool,
    pub issues: Vec<VerifyIssue>,
}

/// Re-checks a report from scratch against `s`: every hole is an empty
/// convex pentagon of `s`, all holes are pairwise hull-disjoint, and there
/// are at least as many as the bound the method promises. Only the
/// emptiness test and the polygon disjointness test are trusted.
pub fn verify_witness(report: &WitnessReport, s: &PointSet) -> Verification {
    let mut issues = Vec::new();
    if report.n != s.len() {
        issues.push(VerifyIssue::SizeMismatch { reported: report.n, actual: s.len() });
    }
    for (i, hole) in report.holes.iter().enumerate() {
        if hole.k() != 5 {
            issues.push(VerifyIssue::NotAPentagon { hole: i, k: hole.k() });
        }
        match is_empty_convex(hole.vertices(), s) {
            Ok(true) => {}
            Ok(false) => issues.push(VerifyIssue::NotEmptyConvex { hole: i }),
            Err(HoleError::SubsetNotInHost(_)) => issues.push(VerifyIssue::SubsetNotInHost { hole: i }),
            Err(_) => issues.push(VerifyIssue::NotEmptyConvex { hole: i }),
        }
    }
    for i in 0..report.holes.len() {
        for j in i + 1..report.holes.len() {
            if !convex_polygons_disjoint(report.holes[i].polygon(), report.holes[j].polygon()) {
                issues.push(VerifyIssue::Overlap { a: i, b: j });
            }
        }
    }
    let n = s.len();
    let expected = match report.method {
        WitnessMethod::Strip5n47 => Some(5 * n / 47),
        WitnessMethod::Doubling3n28 => {
            if doubling_level(n).is_none() {
                issues.push(VerifyIssue::NotADoublingSize { n });
            }
            Some((3 * n).saturating_sub(1) / 28)
        }
        WitnessMethod::Direct => None,
    };
    if let Some(expected) = expected {
        if report.bound_claimed != expected {
            issues.push(VerifyIssue::WrongBound { claimed: report.bound_claimed, expected });
        }
    }
    if report.holes.len() < report.bound_claimed {
        issues.push(VerifyIssue::BelowBound { found: report.holes.len(), claimed: report.bound_claimed });
    }
    Verification { valid: issues.is_empty(), issues }
}
