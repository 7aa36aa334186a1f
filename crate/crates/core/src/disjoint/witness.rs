use serde::{Deserialize, Serialize};

use crate::geom::{Point, PointSet};
use crate::holes::{find_5hole, Hole};

use super::{find_two_disjoint_5holes, separable_partition, verify_witness, DisjointError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WitnessMethod {
    #[serde(rename = "STRIP_5N_47")]
    Strip5n47,
    #[serde(rename = "DOUBLING_3N_28")]
    Doubling3n28,
    #[serde(rename = "DIRECT")]
    Direct,
}

/// How one block of the sweep order was turned into holes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StripMethod {
    /// 47 points: partition 19 + 9 + 19, a pair in each outer part and the
    /// middle hole (5 holes).
    Partition,
    /// 19 points: two disjoint holes.
    Pair,
    /// 10 to 18 points: one hole.
    Single,
    /// Fewer than 10 points: nothing guaranteed.
    Unused,
}

/// Block `[start, end)` of the sweep order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlanEntry {
    pub start: usize,
    pub end: usize,
    pub method: StripMethod,
    pub holes: usize,
}

/// A family of pairwise-disjoint 5-holes of an `n`-point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub n: usize,
    /// Sorted by vertex list.
    pub holes: Vec<Hole>,
    pub bound_claimed: usize,
    pub method: WitnessMethod,
    pub verified: bool,
    /// Sweep direction `(1, d)` of the strip method.
    pub sweep: Option<(i64, i64)>,
    pub strip_plan: Vec<PlanEntry>,
}

impl WitnessReport {
    /// A report for holes found by any other means; the claimed bound is the
    /// number of holes.
    pub fn direct(s: &PointSet, holes: Vec<Hole>) -> WitnessReport {
        finish(s, holes, holes_len_bound, WitnessMethod::Direct, None, Vec::new())
    }
}

fn holes_len_bound(holes: &[Hole]) -> usize {
    holes.len()
}

fn finish(
    s: &PointSet,
    mut holes: Vec<Hole>,
    bound: impl Fn(&[Hole]) -> usize,
    method: WitnessMethod,
    sweep: Option<(i64, i64)>,
    strip_plan: Vec<PlanEntry>,
) -> WitnessReport {
    holes.sort_by(|a, b| a.vertices().cmp(b.vertices()));
    let bound_claimed = bound(&holes);
    let mut report = WitnessReport { n: s.len(), holes, bound_claimed, method, verified: false, sweep, strip_plan };
    report.verified = verify_witness(&report, s).valid;
    report
}

/// Smallest `d >= 0` such that `x + d*y` is distinct over `s`.
fn sweep_direction(s: &PointSet) -> (i64, i64) {
    let mut keys = Vec::with_capacity(s.len());
    for d in 0.. {
        keys.clear();
        keys.extend(s.iter().map(|p| p.x + d * p.y));
        keys.sort_unstable();
        if keys.windows(2).all(|w| w[0] != w[1]) {
            return (1, d);
        }
    }
    unreachable!("some direction separates all projections")
}

/// Holes of a block from the sweep order, re-certified against the full
/// set. Blocks lie in disjoint slabs, so emptiness carries over.
fn block_holes(s: &PointSet, block: &[Point]) -> Result<(StripMethod, Vec<Hole>), DisjointError> {
    let sub = s.subset(block.iter().copied());
    let (method, local): (StripMethod, Vec<Hole>) = match block.len() {
        47 => {
            let part = separable_partition(&sub, 19)?;
            let mut holes = vec![part.hole.clone()];
            for outer in [&part.s1, &part.s3] {
                let pair = find_two_disjoint_5holes(outer)?
                    .ok_or_else(|| DisjointError::ContractViolation("19 points without a disjoint pair".into()))?;
                holes.extend([pair.a, pair.b]);
            }
            (StripMethod::Partition, holes)
        }
        19 => {
            let pair = find_two_disjoint_5holes(&sub)?
                .ok_or_else(|| DisjointError::ContractViolation("19 points without a disjoint pair".into()))?;
            (StripMethod::Pair, vec![pair.a, pair.b])
        }
        10..=18 => {
            let hole = find_5hole(&sub)
                .ok_or_else(|| DisjointError::ContractViolation(format!("{} points without a 5-hole", block.len())))?;
            (StripMethod::Single, vec![hole])
        }
        _ => (StripMethod::Unused, Vec::new()),
    };
    let holes = local.iter().map(|h| h.rehost(s)).collect::<Result<Vec<_>, _>>()?;
    Ok((method, holes))
}

/// Block sizes for the remainder after the 47-point strips: greedy 19s,
/// then one block of the rest.
fn remainder_blocks(r: usize) -> Vec<usize> {
    let mut out = vec![19; r / 19];
    if r % 19 > 0 {
        out.push(r % 19);
    }
    out
}

/// Holes guaranteed from a remainder of `r` points.
#[cfg(test)]
fn remainder_yield(r: usize) -> usize {
    2 * (r / 19) + usize::from(r % 19 >= 10)
}

/// At least `floor(5n/47)` disjoint 5-holes: the points are cut along a
/// generic sweep direction into strips of 47 (five holes each via
/// [`separable_partition`] with `m = 19`) and a remainder cut into blocks of
/// 19 (two holes each) and one block of 10 to 18 points (one hole).
pub fn witness_5n_47(s: &PointSet) -> Result<WitnessReport, DisjointError> {
    let sweep = sweep_direction(s);
    let mut order: Vec<Point> = s.points().to_vec();
    order.sort_by_key(|p| p.x + sweep.1 * p.y);
    let mut sizes = vec![47; s.len() / 47];
    sizes.extend(remainder_blocks(s.len() % 47));
    let mut holes = Vec::new();
    let mut plan = Vec::new();
    let mut start = 0;
    for size in sizes {
        let end = start + size;
        let (method, found) = block_holes(s, &order[start..end])?;
        plan.push(PlanEntry { start, end, method, holes: found.len() });
        holes.extend(found);
        start = end;
    }
    let bound = 5 * s.len() / 47;
    if holes.len() < bound {
        return Err(DisjointError::ContractViolation(format!("{} holes, bound {bound}", holes.len())));
    }
    Ok(finish(s, holes, |_| bound, WitnessMethod::Strip5n47, Some(sweep), plan))
}

/// `28 * 2^(k-1) - 9`.
pub fn doubling_size(k: u32) -> usize {
    28 * (1usize << (k - 1)) - 9
}

/// The `k >= 1` with `n = 28 * 2^(k-1) - 9`, if any.
pub fn doubling_level(n: usize) -> Option<u32> {
    (1..usize::BITS - 5).find(|&k| doubling_size(k) == n)
}

fn doubling_holes(s: &PointSet, k: u32) -> Result<Vec<Hole>, DisjointError> {
    if k == 1 {
        let pair = find_two_disjoint_5holes(s)?
            .ok_or_else(|| DisjointError::ContractViolation("19 points without a disjoint pair".into()))?;
        return Ok(vec![pair.a, pair.b]);
    }
    let part = separable_partition(s, doubling_size(k - 1))?;
    let mut holes = doubling_holes(&part.s1, k - 1)?;
    holes.extend(doubling_holes(&part.s3, k - 1)?);
    holes.push(part.hole);
    Ok(holes)
}

/// At least `(3n - 1)/28 = 3 * 2^(k-1) - 1` disjoint 5-holes for
/// `n = 28 * 2^(k-1) - 9`, by recursive separable partitions with
/// `m = 28 * 2^(k-2) - 9`.
pub fn witness_doubling(s: &PointSet) -> Result<WitnessReport, DisjointError> {
    let k = doubling_level(s.len()).ok_or(DisjointError::NotADoublingSize(s.len()))?;
    let holes = doubling_holes(s, k)?.iter().map(|h| h.rehost(s)).collect::<Result<Vec<_>, _>>()?;
    let bound = (3 * s.len() - 1) / 28;
    if holes.len() < bound {
        return Err(DisjointError::ContractViolation(format!("{} holes, bound {bound}", holes.len())));
    }
    Ok(finish(s, holes, |_| bound, WitnessMethod::Doubling3n28, None, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::random_general_position;

    #[test]
    fn remainder_meets_bound_for_every_residue() {
        for r in 0..47 {
            assert!(remainder_yield(r) >= 5 * r / 47, "residue {r}");
            assert_eq!(remainder_blocks(r).iter().sum::<usize>(), r);
        }
    }

    #[test]
    fn doubling_sizes() {
        assert_eq!((doubling_size(1), doubling_size(2), doubling_size(3)), (19, 47, 103));
        assert_eq!(doubling_level(47), Some(2));
        assert_eq!(doubling_level(20), None);
    }

    #[test]
    fn not_a_doubling_size() {
        let s = random_general_position(20, 0, 1000).unwrap();
        assert_eq!(witness_doubling(&s), Err(DisjointError::NotADoublingSize(20)));
    }

    #[test]
    fn sweep_breaks_ties() {
        let s = crate::io::parse_points("0 0\n0 5\n3 1\n").unwrap();
        assert_eq!(sweep_direction(&s), (1, 1));
    }

    #[test]
    fn strip_witness_on_47() {
        let s = random_general_position(47, 7, 1_000_000).unwrap();
        let r = witness_5n_47(&s).unwrap();
        assert!(r.holes.len() >= 5);
        assert!(r.verified);
    }

    #[test]
    fn tiny_input_zero_bound() {
        let s = random_general_position(9, 2, 1000).unwrap();
        let r = witness_5n_47(&s).unwrap();
        assert_eq!(r.bound_claimed, 0);
        assert!(r.verified);
    }
}
