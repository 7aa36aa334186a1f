use serde::{Deserialize, Serialize};

use crate::geom::{convex_layers, cross, hull_vertices, LayerSignature, Point, PointSet};

use super::constructive::{hole_in_hexagon, hole_in_nine, is_hole_in};
use super::find::find_5hole_points;
use super::{search, Hole, HoleError};

/// Verdict on a 9-point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum NinePointClassification {
    HasFiveHole(Hole),
    NoFiveHole(LayerSignature),
}

const NO_HOLE_CLASSES: [[usize; 3]; 2] = [[3, 3, 3], [3, 5, 1]];

/// Decides whether nine points contain a 5-hole. Sets without one must have
/// layer signature `L{3,3,3}` or `L{3,5,1}`; anything else is reported as a
/// [`HoleError::ContractViolation`].
pub fn classify_9points(z: &PointSet) -> Result<NinePointClassification, HoleError> {
    if z.len() != 9 {
        return Err(HoleError::PreconditionViolated(format!("need 9 points, got {}", z.len())));
    }
    let pts = z.points();
    let hull = hull_vertices(pts);
    let found = if hull.len() >= 4 {
        Some(hole_in_nine(pts)?)
    } else {
        let layers = convex_layers(z);
        let sig = layers.signature.clone();
        if sig.is(&[3, 6]) {
            Some(hole_in_hexagon(layers.layers[1].points(), pts)?)
        } else if sig.is(&[3, 4, 2]) {
            Some(three_four_two(layers.layers[1].points(), layers.layers[2].points(), &hull, pts)?)
        } else {
            search::first_hole(pts, 5)
        }
    };
    match found {
        Some(v) => Ok(NinePointClassification::HasFiveHole(Hole::certify(&v, z)?)),
        None => {
            let sig = convex_layers(z).signature;
            if NO_HOLE_CLASSES.iter().any(|c| sig.is(c)) {
                Ok(NinePointClassification::NoFiveHole(sig))
            } else {
                Err(HoleError::ContractViolation(format!(
                    "9 points without a 5-hole in layer class {sig}"
                )))
            }
        }
    }
}

/// Hull triangle, second layer `z1..z4`, third layer `{x, y}`.
fn three_four_two(z: &[Point], third: &[Point], outer: &[Point], host: &[Point]) -> Result<Vec<Point>, HoleError> {
    let (x, y) = (third[0], third[1]);
    // three second-layer points beyond the line xy
    for sign in [1, -1] {
        let side: Vec<Point> = z.iter().copied().filter(|&p| cross(x, y, p).signum() == sign).collect();
        if side.len() == 3 {
            let cand = vec![x, y, side[0], side[1], side[2]];
            if is_hole_in(&cand, host) {
                return Ok(cand);
            }
        }
    }
    // two second-layer points per side: an outer vertex facing an edge of
    // the second layer, or two outer vertices facing the same side
    for &p in outer {
        for i in 0..4 {
            let (a, b) = (z[i], z[(i + 1) % 4]);
            for cand in [vec![p, a, b, x, y], vec![p, a, b, x, z[(i + 2) % 4]], vec![p, a, b, y, z[(i + 3) % 4]]] {
                if is_hole_in(&cand, host) {
                    return Ok(cand);
                }
            }
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let (p, q) = (outer[i], outer[j]);
            for k in 0..4 {
                let (a, b) = (z[k], z[(k + 1) % 4]);
                for c in [x, y] {
                    let cand = vec![p, q, a, b, c];
                    if is_hole_in(&cand, host) {
                        return Ok(cand);
                    }
                }
            }
        }
    }
    super::constructive::count_local_fallback("nine points in L{3,4,2}");
    search::first_hole_where(host, 5, |c| is_hole_in(c, host))
        .ok_or_else(|| HoleError::ContractViolation("L{3,4,2} configuration without a 5-hole".into()))
}

/// True iff `t` minus `p` still contains a k-hole.
pub fn is_k_redundant(p: Point, t: &PointSet, k: usize) -> Result<bool, HoleError> {
    if !t.contains(p) {
        return Err(HoleError::PointNotInSet(p));
    }
    if k < 3 {
        return Err(HoleError::PreconditionViolated(format!("k must be at least 3, got {k}")));
    }
    let rest: Vec<Point> = t.iter().filter(|&q| q != p).collect();
    Ok(if k == 5 {
        find_5hole_points(&rest).is_some()
    } else {
        search::first_hole(&rest, k).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::validate_general_position;

    fn set(v: &[(i64, i64)]) -> PointSet {
        validate_general_position(&v.iter().map(|&(x, y)| Point::new(x, y)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn convex_nine_gon_has_hole() {
        let s = set(&[(0, 0), (10, -3), (19, 0), (24, 8), (23, 17), (15, 23), (5, 22), (-3, 15), (-4, 6)]);
        assert!(matches!(classify_9points(&s).unwrap(), NinePointClassification::HasFiveHole(_)));
    }

    #[test]
    fn wrong_size() {
        let s = set(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]);
        assert!(matches!(classify_9points(&s), Err(HoleError::PreconditionViolated(_))));
    }

    #[test]
    fn redundancy_examples() {
        // a pentagon plus a far point seeing it
        let t = set(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3), (40, 40)]);
        assert!(is_k_redundant(Point::new(40, 40), &t, 5).unwrap());
        assert_eq!(
            is_k_redundant(Point::new(1, 1), &t, 5),
            Err(HoleError::PointNotInSet(Point::new(1, 1)))
        );
        // the other five are not in convex position
        let t = set(&[(0, 0), (10, 0), (5, 9), (4, 3), (6, 1), (21, 17)]);
        assert!(!is_k_redundant(Point::new(21, 17), &t, 5).unwrap());
    }
}
