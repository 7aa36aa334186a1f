//! Constructive 5-hole finders for small configurations.
//!
//! Each finder follows a region-counting argument: it locates a line through
//! two points whose far side holds only extreme points, or shrinks the
//! enclosing polygon while keeping its size, until a 5-hole is exposed. The
//! internal routines work on raw point slices where `host` is the set the
//! hole must be empty in; the public wrappers certify the result against the
//! caller's [`PointSet`] before returning.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::geom::{cross, hull_vertices, point_in_convex_polygon, Containment, ConvexPolygon, Point, PointSet};

use super::search;
use super::{binomial, fmt_points, next_combination, oracle_budget, Hole, HoleError};

static LOCAL_FALLBACKS: AtomicUsize = AtomicUsize::new(0);

/// How often a case analysis ran out of named candidates and had to scan
/// its local configuration. Stays at zero unless a case argument is
/// incomplete.
pub fn local_fallback_count() -> usize {
    LOCAL_FALLBACKS.load(Ordering::Relaxed)
}

pub(crate) type Found = Result<Vec<Point>, HoleError>;

/// Convex position plus emptiness in `host`.
pub(crate) fn is_hole_in(cand: &[Point], host: &[Point]) -> bool {
    let hull = hull_vertices(cand);
    if hull.len() != cand.len() || hull.len() < 3 {
        return false;
    }
    let poly = ConvexPolygon::from_hull_unchecked(hull);
    host.iter()
        .filter(|p| !cand.contains(p))
        .all(|&p| point_in_convex_polygon(p, &poly) == Containment::Outside)
}

fn strictly_inside(poly: &[Point], host: &[Point]) -> Vec<Point> {
    let poly = ConvexPolygon::from_hull_unchecked(hull_vertices(poly));
    host.iter()
        .copied()
        .filter(|&p| point_in_convex_polygon(p, &poly) == Containment::StrictInside)
        .collect()
}

fn claim(cand: Vec<Point>, host: &[Point], step: &str) -> Found {
    if is_hole_in(&cand, host) {
        Ok(cand)
    } else {
        Err(HoleError::ContractViolation(format!(
            "{step}: {} is not a 5-hole",
            fmt_points(&cand)
        )))
    }
}

fn with(base: &[Point], extra: &[Point]) -> Vec<Point> {
    let mut v = base.to_vec();
    v.extend_from_slice(extra);
    v
}

/// Vertices of `vertices` strictly right (outer side) of `a -> b`.
fn right_side(a: Point, b: Point, vertices: &[Point]) -> Vec<Point> {
    vertices.iter().copied().filter(|&v| cross(a, b, v) < 0).collect()
}

fn left_side(a: Point, b: Point, vertices: &[Point]) -> Vec<Point> {
    vertices.iter().copied().filter(|&v| cross(a, b, v) > 0).collect()
}

/// Directed edges of a hull with the outer side on the right. A two-point
/// hull yields both directions.
fn outward_edges(hull: &[Point]) -> Vec<(Point, Point)> {
    match hull.len() {
        0 | 1 => Vec::new(),
        2 => vec![(hull[0], hull[1]), (hull[1], hull[0])],
        n => (0..n).map(|i| (hull[i], hull[(i + 1) % n])).collect(),
    }
}

pub(crate) fn count_local_fallback(step: &str) {
    LOCAL_FALLBACKS.fetch_add(1, Ordering::Relaxed);
    log::warn!("{step}: named candidates exhausted, scanning local configuration");
}

fn local_scan(config: &[Point], host: &[Point], step: &str) -> Found {
    count_local_fallback(step);
    search::first_hole_where(config, 5, |c| is_hole_in(c, host))
        .ok_or_else(|| HoleError::ContractViolation(format!("{step}: configuration has no 5-hole")))
}

/// A convex hexagon of host points always holds a 5-hole.
///
/// While the hexagon has interior points, take an edge `xy` of their hull:
/// if three hexagon vertices lie beyond it they form a 5-hole with `x` and
/// `y`; otherwise the vertices on the near side together with `x` and `y`
/// span a new convex polygon of at least six vertices with at least two
/// fewer interior points.
pub(crate) fn hole_in_hexagon(hexagon: &[Point], host: &[Point]) -> Found {
    let mut hex = hull_vertices(hexagon);
    if hex.len() != 6 || hexagon.len() != 6 {
        return Err(HoleError::PreconditionViolated(format!(
            "{} is not a convex hexagon",
            fmt_points(hexagon)
        )));
    }
    loop {
        let inside = strictly_inside(&hex, host);
        match inside.len() {
            0 => return claim(hex[..5].to_vec(), host, "empty hexagon"),
            1 => {
                let p = inside[0];
                for &h in &hex {
                    for side in [left_side(h, p, &hex), right_side(h, p, &hex)] {
                        if side.len() >= 3 {
                            return claim(with(&[h, p], &side[..3]), host, "hexagon with one interior point");
                        }
                    }
                }
                return Err(HoleError::ContractViolation("no line through the interior point splits 3 vertices".into()));
            }
            _ => {
                let inner = hull_vertices(&inside);
                let edges = outward_edges(&inner);
                for &(x, y) in &edges {
                    let outer = right_side(x, y, &hex);
                    if outer.len() >= 3 {
                        return claim(with(&[x, y], &outer[..3]), host, "hexagon edge split");
                    }
                }
                let (x, y) = edges[0];
                let mut next = left_side(x, y, &hex);
                next.truncate(4);
                next.push(x);
                next.push(y);
                let shrunk = hull_vertices(&next);
                if shrunk.len() != 6 {
                    return Err(HoleError::ContractViolation(format!(
                        "shrunk hexagon {} lost convex position",
                        fmt_points(&next)
                    )));
                }
                hex = shrunk;
            }
        }
    }
}

/// Convex pentagon with at least two interior points.
pub(crate) fn hole_in_pentagon(pentagon: &[Point], host: &[Point]) -> Found {
    let mut pent = hull_vertices(pentagon);
    if pent.len() != 5 || pentagon.len() != 5 {
        return Err(HoleError::PreconditionViolated(format!(
            "{} is not a convex pentagon",
            fmt_points(pentagon)
        )));
    }
    loop {
        let inside = strictly_inside(&pent, host);
        match inside.len() {
            0 | 1 => {
                return Err(HoleError::PreconditionViolated(format!(
                    "pentagon {} has {} interior points, need at least 2",
                    fmt_points(&pent),
                    inside.len()
                )))
            }
            2 => return pentagon_two_inside(&pent, inside[0], inside[1], host),
            3 => return pentagon_three_inside(&pent, &inside, host),
            _ => {
                let inner = hull_vertices(&inside);
                let (x, y) = (inner[0], inner[1]);
                let outer = right_side(x, y, &pent);
                match outer.len() {
                    n if n >= 3 => return claim(with(&[x, y], &outer[..3]), host, "pentagon edge split"),
                    1 => {
                        let hexagon = with(&left_side(x, y, &pent), &[x, y]);
                        return hole_in_hexagon(&hexagon, host);
                    }
                    2 => {
                        // inner vertices in CCW order, starting next to the
                        // crossing beyond y
                        let start = (0..5)
                            .find(|&i| cross(x, y, pent[i]) > 0 && cross(x, y, pent[(i + 4) % 5]) < 0)
                            .ok_or_else(|| HoleError::ContractViolation("pentagon chain not found".into()))?;
                        let chain: Vec<Point> = (0..3).map(|i| pent[(start + i) % 5]).collect();
                        let (u, w) = (chain[0], chain[2]);
                        let beyond = |a: Point, b: Point, away_from: Point| {
                            inside
                                .iter()
                                .copied()
                                .filter(move |&q| cross(x, y, q) > 0 && cross(a, b, q).signum() == -cross(a, b, away_from).signum())
                                .min_by_key(move |&q| cross(a, b, q).abs())
                        };
                        if let Some(q) = beyond(u, y, x) {
                            return hole_in_hexagon(&with(&chain, &[x, y, q]), host);
                        }
                        if let Some(q) = beyond(w, x, y) {
                            return hole_in_hexagon(&with(&chain, &[x, y, q]), host);
                        }
                        pent = hull_vertices(&with(&chain, &[x, y]));
                    }
                    _ => return Err(HoleError::ContractViolation("interior edge line misses the pentagon".into())),
                }
            }
        }
    }
}

fn pentagon_two_inside(pent: &[Point], y1: Point, y2: Point, host: &[Point]) -> Found {
    for side in [left_side(y1, y2, pent), right_side(y1, y2, pent)] {
        if side.len() >= 3 {
            return claim(with(&[y1, y2], &side[..3]), host, "pentagon with two interior points");
        }
    }
    Err(HoleError::ContractViolation("line through two interior points splits 5 vertices as 2+2".into()))
}

fn pentagon_three_inside(pent: &[Point], inside: &[Point], host: &[Point]) -> Found {
    let t = hull_vertices(inside);
    let edges: Vec<(Point, Point)> = (0..3).map(|i| (t[i], t[(i + 1) % 3])).collect();
    let outside = |v: Point| -> Vec<bool> { edges.iter().map(|&(a, b)| cross(a, b, v) < 0).collect() };
    // a region beyond exactly one edge holding two vertices
    for e in 0..3 {
        let region: Vec<Point> = pent
            .iter()
            .copied()
            .filter(|&v| {
                let o = outside(v);
                o[e] && o.iter().filter(|&&b| b).count() == 1
            })
            .collect();
        if region.len() >= 2 {
            return claim(with(&t, &region[..2]), host, "pentagon edge region");
        }
    }
    // an edge line with three vertices beyond it
    for &(a, b) in &edges {
        let beyond = right_side(a, b, pent);
        if beyond.len() >= 3 {
            return claim(with(&[a, b], &beyond[..3]), host, "pentagon halfplane");
        }
    }
    Err(HoleError::ContractViolation(format!(
        "pentagon {} with interior {} escaped the region count",
        fmt_points(pent),
        fmt_points(inside)
    )))
}

/// Convex quadrilateral with at least five interior points.
pub(crate) fn hole_in_quadrilateral(quad: &[Point], host: &[Point]) -> Found {
    let mut q = hull_vertices(quad);
    if q.len() != 4 || quad.len() != 4 {
        return Err(HoleError::PreconditionViolated(format!(
            "{} is not a convex quadrilateral",
            fmt_points(quad)
        )));
    }
    loop {
        let inside = strictly_inside(&q, host);
        if inside.len() < 5 {
            return Err(HoleError::PreconditionViolated(format!(
                "quadrilateral {} has {} interior points, need at least 5",
                fmt_points(&q),
                inside.len()
            )));
        }
        let inner = hull_vertices(&inside);
        for (x, y) in outward_edges(&inner) {
            let outer = right_side(x, y, &q);
            if outer.len() >= 3 {
                return claim(with(&[x, y], &outer[..3]), host, "quadrilateral outer halfplane");
            }
        }
        if inside.len() == 5 {
            let config = with(&q, &inside);
            return match inner.len() {
                5 => claim(inner, host, "second layer pentagon"),
                4 => {
                    let x = *inside.iter().find(|p| !inner.contains(p)).expect("one third-layer point");
                    quad_case_second_layer_quad(&q, &inner, x, &config, host)
                }
                _ => quad_case_second_layer_triangle(&q, &inner, &inside, &config, host),
            };
        }
        // drop a hull vertex whose ear holds an interior point
        let config = with(&q, &inside);
        let i = (0..4)
            .find(|&i| {
                let ear = [q[(i + 3) % 4], q[i], q[(i + 1) % 4]];
                !strictly_inside(&ear, &inside).is_empty()
            })
            .ok_or_else(|| HoleError::ContractViolation("no quadrilateral ear holds an interior point".into()))?;
        let reduced: Vec<Point> = config.iter().copied().filter(|&p| p != q[i]).collect();
        let hull = hull_vertices(&reduced);
        match hull.len() {
            n if n >= 6 => return hole_in_hexagon(&hull[..6], host),
            5 => return hole_in_pentagon(&hull, host),
            _ => q = hull,
        }
    }
}

fn quad_case_second_layer_quad(quad: &[Point], z: &[Point], x: Point, config: &[Point], host: &[Point]) -> Found {
    for r in 0..4 {
        let (z1, z2, z3, z4) = (z[r], z[(r + 1) % 4], z[(r + 2) % 4], z[(r + 3) % 4]);
        if strictly_inside(&[z1, z3, z4], &[x]).is_empty() {
            continue;
        }
        for &p in quad {
            let cand = vec![p, z1, z2, z3, x];
            if is_hole_in(&cand, host) {
                return Ok(cand);
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                let (a, b) = (quad[i], quad[j]);
                for cand in [vec![a, b, z1, z4, x], vec![a, b, z3, z4, x]] {
                    if is_hole_in(&cand, host) {
                        return Ok(cand);
                    }
                }
                let pent = vec![a, b, z1, z3, z4];
                if hull_vertices(&pent).len() == 5 && strictly_inside(&pent, host).len() >= 2 {
                    if let Ok(found) = hole_in_pentagon(&pent, host) {
                        return Ok(found);
                    }
                }
            }
        }
    }
    local_scan(config, host, "quadrilateral hull, second layer of four")
}

fn quad_case_second_layer_triangle(quad: &[Point], z: &[Point], inside: &[Point], config: &[Point], host: &[Point]) -> Found {
    let third: Vec<Point> = inside.iter().copied().filter(|p| !z.contains(p)).collect();
    let (x, y) = (third[0], third[1]);
    let line_split = [left_side(x, y, z), right_side(x, y, z)];
    for side in &line_split {
        if side.len() == 3 {
            return claim(with(&[x, y], side), host, "line through the third layer");
        }
    }
    if let Some(found) = search::first_hole_where(config, 5, |c| c.contains(&x) && c.contains(&y) && is_hole_in(c, host)) {
        return Ok(found);
    }
    // two hull vertices facing an edge of the triangle, closed by one of x, y
    for i in 0..4 {
        for j in i + 1..4 {
            for k in 0..3 {
                for t in [x, y] {
                    let cand = vec![quad[i], quad[j], z[k], z[(k + 1) % 3], t];
                    if is_hole_in(&cand, host) {
                        return Ok(cand);
                    }
                }
            }
        }
    }
    local_scan(config, host, "quadrilateral hull, second layer of three")
}

/// Nine points whose hull has at least four vertices.
pub(crate) fn hole_in_nine(points: &[Point]) -> Found {
    let hull = hull_vertices(points);
    match hull.len() {
        n if n >= 6 => hole_in_hexagon(&hull[..6], points),
        5 => hole_in_pentagon(&hull, points),
        4 => hole_in_quadrilateral(&hull, points),
        n => Err(HoleError::PreconditionViolated(format!("hull has {n} vertices, need at least 4"))),
    }
}

/// Any convex hexagon among `points`, scanning subsets in lexicographic
/// order under the oracle budget.
pub(crate) fn find_convex_hexagon(points: &[Point]) -> Result<Vec<Point>, HoleError> {
    let hull = hull_vertices(points);
    if hull.len() >= 6 {
        return Ok(hull[..6].to_vec());
    }
    if points.len() < 6 {
        return Err(HoleError::NoConvexHexagonFound);
    }
    let budget = oracle_budget();
    let subsets = binomial(points.len(), 6);
    if subsets > budget as u128 {
        return Err(HoleError::BudgetExceeded { subsets, budget });
    }
    let mut pts = points.to_vec();
    pts.sort_unstable();
    let mut idx: Vec<usize> = (0..6).collect();
    loop {
        let cand: Vec<Point> = idx.iter().map(|&i| pts[i]).collect();
        if hull_vertices(&cand).len() == 6 {
            return Ok(cand);
        }
        if !next_combination(&mut idx, pts.len()) {
            return Err(HoleError::NoConvexHexagonFound);
        }
    }
}

/// A 5-hole of `s`, built from a convex hexagon of `s` (the first six hull
/// vertices when the hull is large enough).
pub fn find_5hole_hexagon(s: &PointSet) -> Result<Hole, HoleError> {
    let hexagon = find_convex_hexagon(s.points())?;
    let found = hole_in_hexagon(&hexagon, s.points())?;
    Hole::certify(&found, s)
}

/// A 5-hole inside the given convex hexagon of host points.
pub fn find_5hole_in_hexagon(hexagon: &[Point], s: &PointSet) -> Result<Hole, HoleError> {
    if let Some(&p) = hexagon.iter().find(|p| !s.contains(**p)) {
        return Err(HoleError::SubsetNotInHost(p));
    }
    let found = hole_in_hexagon(hexagon, s.points())?;
    Hole::certify(&found, s)
}

/// Sets whose hull is a pentagon with at least two interior points.
pub fn find_5hole_pentagon_hull(z: &PointSet) -> Result<Hole, HoleError> {
    let hull = hull_vertices(z.points());
    if hull.len() != 5 || z.len() < 7 {
        return Err(HoleError::PreconditionViolated(format!(
            "need a pentagon hull with at least 2 interior points, got hull {} of {} points",
            hull.len(),
            z.len()
        )));
    }
    let found = hole_in_pentagon(&hull, z.points())?;
    Hole::certify(&found, z)
}

/// Sets whose hull is a quadrilateral with at least five interior points.
pub fn find_5hole_quad_hull(z: &PointSet) -> Result<Hole, HoleError> {
    let hull = hull_vertices(z.points());
    if hull.len() != 4 || z.len() < 9 {
        return Err(HoleError::PreconditionViolated(format!(
            "need a quadrilateral hull with at least 5 interior points, got hull {} of {} points",
            hull.len(),
            z.len()
        )));
    }
    let found = hole_in_quadrilateral(&hull, z.points())?;
    Hole::certify(&found, z)
}

/// Nine points with at least four hull vertices always hold a 5-hole.
pub fn find_5hole_9pts_hull4plus(z: &PointSet) -> Result<Hole, HoleError> {
    if z.len() != 9 {
        return Err(HoleError::PreconditionViolated(format!("need 9 points, got {}", z.len())));
    }
    let found = hole_in_nine(z.points())?;
    Hole::certify(&found, z)
}
