use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{cross, Point, PointSet, C_MAX};

use super::IoError;

const RESAMPLE_LIMIT: usize = 100_000;

/// `n` distinct points drawn uniformly from `[-coord_max, coord_max]^2`,
/// redrawing any point that duplicates an earlier one or is collinear with
/// two of them. The same `(n, seed, coord_max)` always yields the same set.
pub fn random_general_position(n: usize, seed: u64, coord_max: i64) -> Result<PointSet, IoError> {
    if n == 0 {
        return Err(IoError::Unsatisfiable("n must be positive".into()));
    }
    if !(3..=C_MAX).contains(&coord_max) {
        return Err(IoError::Unsatisfiable(format!(
            "coord_max must lie in [3, {C_MAX}], got {coord_max}"
        )));
    }
    let side = 2 * coord_max as u128 + 1;
    if side * side < n as u128 {
        return Err(IoError::Unsatisfiable(format!("grid of side {side} holds fewer than {n} points")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Point> = Vec::with_capacity(n);
    while points.len() < n {
        let mut placed = false;
        for _ in 0..RESAMPLE_LIMIT {
            let p = Point::new(rng.gen_range(-coord_max..=coord_max), rng.gen_range(-coord_max..=coord_max));
            if fits(&points, p) {
                points.push(p);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(IoError::Unsatisfiable(format!(
                "could not place point {} of {n} on the grid [-{coord_max}, {coord_max}]^2",
                points.len() + 1
            )));
        }
    }
    Ok(PointSet::from_valid(points))
}

fn fits(points: &[Point], p: Point) -> bool {
    if points.contains(&p) {
        return false;
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if cross(points[i], points[j], p) == 0 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::validate_general_position;

    #[test]
    fn deterministic() {
        let a = random_general_position(10, 1, C_MAX).unwrap();
        let b = random_general_position(10, 1, C_MAX).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_general_position(10, 2, C_MAX).unwrap());
    }

    #[test]
    fn output_is_valid() {
        let s = random_general_position(40, 9, 50).unwrap();
        assert_eq!(s.len(), 40);
        assert!(validate_general_position(s.points()).is_ok());
    }

    #[test]
    fn unsatisfiable_grids() {
        assert!(matches!(random_general_position(5, 0, 1), Err(IoError::Unsatisfiable(_))));
        // a 7x7 grid has room for at most 14 points with no three in line
        assert!(matches!(random_general_position(15, 0, 3), Err(IoError::Unsatisfiable(_))));
    }
}
