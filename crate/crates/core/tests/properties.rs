//! Property tests: invariants of every operation on random point sets.

use proptest::prelude::*;

use pentahole::disjoint::{find_two_disjoint_5holes, separable_partition, verify_witness, witness_5n_47};
use pentahole::geom::{
    convex_layers, convex_polygons_disjoint, cross, hull_vertices, orientation, point_in_convex_polygon,
    validate_general_position, Containment, ConvexPolygon, Point, PointSet, C_MAX,
};
use pentahole::holes::{
    enumerate_k_holes, find_5hole, find_5hole_pentagon_hull, find_5hole_quad_hull, is_empty_convex, search,
};
use pentahole::io::{emit, parse_points, random_general_position};

fn set(max_n: usize) -> impl Strategy<Value = PointSet> {
    (5..=max_n, any::<u64>(), prop_oneof![Just(12i64), Just(300), Just(C_MAX)])
        .prop_filter_map("grid too small", |(n, seed, c)| random_general_position(n, seed, c).ok())
}

fn coord() -> impl Strategy<Value = i64> {
    prop_oneof![-C_MAX..=C_MAX, Just(C_MAX), Just(-C_MAX), (C_MAX - 2)..=C_MAX]
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn orientation_identities(a in point(), b in point(), c in point()) {
        let o = orientation(a, b, c);
        prop_assert_eq!(o, orientation(b, c, a));
        prop_assert_eq!(o, orientation(b, a, c).reversed());
        let wide = (b.x as i128 - a.x as i128) * (c.y as i128 - a.y as i128)
            - (b.y as i128 - a.y as i128) * (c.x as i128 - a.x as i128);
        prop_assert_eq!(cross(a, b, c) as i128, wide);
    }

    #[test]
    fn emit_parse_round_trip(s in set(40)) {
        prop_assert_eq!(parse_points(&emit(&s)).unwrap(), s);
    }

    #[test]
    fn validation_accepts_exactly_general_position(pts in prop::collection::vec((-6i64..6, -6i64..6), 3..8)) {
        let pts: Vec<Point> = pts.into_iter().map(Point::from).collect();
        let degenerate = (0..pts.len()).any(|i| (i + 1..pts.len()).any(|j| {
            pts[i] == pts[j] || (j + 1..pts.len()).any(|k| cross(pts[i], pts[j], pts[k]) == 0)
        }));
        prop_assert_eq!(validate_general_position(&pts).is_err(), degenerate);
    }

    #[test]
    fn hull_contains_everything(s in set(40)) {
        let hull = ConvexPolygon::new(hull_vertices(s.points())).unwrap();
        for p in s.iter() {
            prop_assert_ne!(point_in_convex_polygon(p, &hull), Containment::Outside);
        }
    }

    #[test]
    fn layers_partition_the_set(s in set(40)) {
        let layers = convex_layers(&s);
        let mut all: Vec<Point> = layers.layers.iter().flat_map(|l| l.points().to_vec()).collect();
        all.sort_unstable();
        prop_assert_eq!(&all[..], s.points());
        prop_assert_eq!(layers.signature.total(), s.len());
    }

    #[test]
    fn find_5hole_matches_oracle(s in set(12)) {
        let oracle = enumerate_k_holes(&s, 5).unwrap();
        match find_5hole(&s) {
            Some(h) => {
                prop_assert!(is_empty_convex(h.vertices(), &s).unwrap());
                prop_assert!(oracle.contains(&h));
            }
            None => prop_assert!(oracle.is_empty()),
        }
    }

    #[test]
    fn fan_search_lists_oracle_holes(s in set(11), k in 3usize..=6) {
        prop_assume!(k <= s.len());
        let oracle: Vec<Vec<Point>> = enumerate_k_holes(&s, k).unwrap().iter().map(|h| h.vertices().to_vec()).collect();
        prop_assert_eq!(search::all_holes(s.points(), k), oracle);
    }

    #[test]
    fn structured_finders_return_oracle_holes(s in set(14)) {
        let hull = hull_vertices(s.points()).len();
        let found = match hull {
            5 if s.len() >= 7 => Some(find_5hole_pentagon_hull(&s).unwrap()),
            4 if s.len() >= 9 => Some(find_5hole_quad_hull(&s).unwrap()),
            _ => None,
        };
        if let Some(h) = found {
            prop_assert!(enumerate_k_holes(&s, 5).unwrap().contains(&h));
        }
    }

    #[test]
    fn pair_certificates_hold(s in set(25)) {
        if let Some(p) = find_two_disjoint_5holes(&s).unwrap() {
            prop_assert!(convex_polygons_disjoint(p.a.polygon(), p.b.polygon()));
            prop_assert!(p.separator.separates(p.a.vertices(), p.b.vertices()));
            prop_assert!(is_empty_convex(p.a.vertices(), &s).unwrap());
            prop_assert!(is_empty_convex(p.b.vertices(), &s).unwrap());
        } else {
            prop_assert!(s.len() < 19);
        }
    }

    #[test]
    fn partitions_hold_invariants(m in 1usize..8, seed in any::<u64>()) {
        let s = random_general_position(2 * m + 9, seed, 1000).unwrap();
        let p = separable_partition(&s, m).unwrap();
        prop_assert_eq!(p.check(&s), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn strip_holes_stay_in_their_slabs(n in 9usize..160, seed in any::<u64>()) {
        let s = random_general_position(n, seed, C_MAX).unwrap();
        let r = witness_5n_47(&s).unwrap();
        prop_assert!(verify_witness(&r, &s).valid);
        prop_assert!(r.holes.len() >= 5 * n / 47);
        let (_, d) = r.sweep.unwrap();
        let mut order: Vec<Point> = s.points().to_vec();
        order.sort_by_key(|p| p.x + d * p.y);
        let key = |p: &Point| p.x + d * p.y;
        for hole in &r.holes {
            let lo = hole.vertices().iter().map(key).min().unwrap();
            let hi = hole.vertices().iter().map(key).max().unwrap();
            let inside = r.strip_plan.iter().any(|e| key(&order[e.start]) <= lo && hi <= key(&order[e.end - 1]));
            prop_assert!(inside, "hole {} crosses a strip boundary", hole);
        }
    }
}
