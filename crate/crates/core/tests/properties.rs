use proptest::prelude::*;
use shull::cli_io::{generate, run_pipeline, PipelineOptions, PointKind};
use shull::oracle::{audit, brute_force_delaunay, edge_set, gift_wrap_hull};
use shull::seeding::{find_min_circumcircle_partner, radial_sort, select_seed};
use shull::{
    circumcircle, dist_sq, in_circumcircle, orientation, CirclePosition, Error, Orientation, Point, SweepHull,
};

fn coord() -> impl Strategy<Value = f64> {
    -1000.0..1000.0f64
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

/// Multiples of 1/8 up to 2^20: sums and products of a few of these stay
/// exact in f64, so translated predicates must agree bit for bit.
fn dyadic_point() -> impl Strategy<Value = Point> {
    (-8_000_000i64..8_000_000, -8_000_000i64..8_000_000).prop_map(|(x, y)| Point::new(x as f64 / 8.0, y as f64 / 8.0))
}

fn distinct_points(max: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(point(), 3..max).prop_map(|mut pts| {
        pts.sort_by(|a, b| a.lex_cmp(b));
        pts.dedup();
        pts
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn orientation_is_antisymmetric(a in point(), b in point(), c in point()) {
        let o = orientation(a, b, c);
        prop_assert_eq!(orientation(b, a, c), o.reversed());
        prop_assert_eq!(orientation(b, c, a), o);
        prop_assert_eq!(orientation(c, a, b), o);
    }

    #[test]
    fn circumcenter_is_equidistant(a in point(), b in point(), c in point()) {
        prop_assume!(orientation(a, b, c) != Orientation::Collinear);
        let circle = circumcircle(a, b, c).unwrap();
        // Near-degenerate triangles have huge circles; compare relatively.
        for p in [a, b, c] {
            let d = dist_sq(circle.center, p);
            prop_assert!((d - circle.radius_sq).abs() <= 1e-9 * circle.radius_sq.max(1.0), "{} vs {}", d, circle.radius_sq);
        }
    }

    #[test]
    fn in_circle_ignores_vertex_order(a in point(), b in point(), c in point(), p in point()) {
        prop_assume!(orientation(a, b, c) != Orientation::Collinear);
        let r = in_circumcircle(a, b, c, p).unwrap();
        prop_assert_eq!(in_circumcircle(b, c, a, p).unwrap(), r);
        prop_assert_eq!(in_circumcircle(c, b, a, p).unwrap(), r);
    }

    #[test]
    fn in_circle_agrees_with_distance_when_clear(a in point(), b in point(), c in point(), p in point()) {
        prop_assume!(orientation(a, b, c) != Orientation::Collinear);
        let circle = circumcircle(a, b, c).unwrap();
        let d = dist_sq(circle.center, p);
        let r = in_circumcircle(a, b, c, p).unwrap();
        if d < circle.radius_sq * (1.0 - 1e-6) {
            prop_assert_eq!(r, CirclePosition::Inside);
        } else if d > circle.radius_sq * (1.0 + 1e-6) {
            prop_assert_eq!(r, CirclePosition::Outside);
        }
    }

    #[test]
    fn predicates_are_translation_invariant(
        a in dyadic_point(), b in dyadic_point(), c in dyadic_point(), p in dyadic_point(),
        dx in -1000i32..1000, dy in -1000i32..1000,
    ) {
        let shift = |q: Point| Point::new(q.x + f64::from(dx), q.y + f64::from(dy));
        prop_assert_eq!(orientation(shift(a), shift(b), shift(c)), orientation(a, b, c));
        if orientation(a, b, c) != Orientation::Collinear {
            prop_assert_eq!(
                in_circumcircle(shift(a), shift(b), shift(c), shift(p)).unwrap(),
                in_circumcircle(a, b, c, p).unwrap()
            );
        }
    }

    #[test]
    fn hull_stays_convex_during_sweep(points in distinct_points(60)) {
        let Ok(mut sweep) = SweepHull::new(points) else { return Ok(()) };
        prop_assert!(sweep.hull_is_convex());
        while sweep.step().unwrap() {
            prop_assert!(sweep.hull_is_convex());
        }
    }

    #[test]
    fn early_exit_matches_exhaustive(points in distinct_points(200)) {
        let Ok(i0) = select_seed(&points) else { return Ok(()) };
        let sorted = radial_sort(&points, points[i0]);
        let ij = sorted.order[1];
        let fast = find_min_circumcircle_partner(&points, &sorted, i0, ij).ok().map(|(k, _)| k);
        let mut best: Option<(usize, f64)> = None;
        for &k in &sorted.order {
            if k == i0 || k == ij {
                continue;
            }
            if let Ok(c) = circumcircle(points[i0], points[ij], points[k]) {
                if best.is_none_or(|(_, r)| c.radius_sq < r) {
                    best = Some((k, c.radius_sq));
                }
            }
        }
        prop_assert_eq!(fast, best.map(|(k, _)| k));
    }

    #[test]
    fn pipeline_is_delaunay(points in distinct_points(120)) {
        match run_pipeline(&points, PipelineOptions::default()) {
            Ok(out) => {
                let report = audit(&out.triangulation);
                prop_assert!(report.is_clean(), "{}", report.summary());
            }
            Err(Error::AllCollinear) => prop_assert!(gift_wrap_hull(&points).is_err()),
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn matches_brute_force(points in distinct_points(25)) {
        let Ok(expected) = brute_force_delaunay(&points) else { return Ok(()) };
        let out = run_pipeline(&points, PipelineOptions::default()).unwrap();
        prop_assert_eq!(out.triangulation.edge_set(), edge_set(&expected));
    }
}

#[test]
fn uniform_thousand_has_expected_triangle_count() {
    let points = generate(PointKind::Uniform, 1000, 7);
    let h = gift_wrap_hull(&points).unwrap().len();
    let out = run_pipeline(&points, PipelineOptions::default()).unwrap();
    assert_eq!(out.triangulation.len(), 2 * 1000 - 2 - h);
    assert!(audit(&out.triangulation).is_clean());
}

#[test]
fn large_integer_lattice_is_clean() {
    // Every unit square of the lattice is cocircular, so flips must not cycle.
    let points = generate(PointKind::Grid, 2500, 0);
    let out = run_pipeline(&points, PipelineOptions::default()).unwrap();
    assert_eq!(out.stats.pairs_hit_limit, 0);
    assert!(audit(&out.triangulation).is_clean());
}

#[test]
fn far_from_origin_points_triangulate() {
    let points: Vec<Point> = generate(PointKind::Uniform, 500, 3)
        .into_iter()
        .map(|p| Point::new(p.x + 1e7, p.y - 3e6))
        .collect();
    let (tri, _) = shull::triangulate(&points).unwrap();
    let report = audit(&tri);
    assert!(report.structure_ok(), "{}", report.summary());
    assert!(report.delaunay_violations.is_empty());
}
