//! Seed triangle selection and the radial sweep order.

use crate::error::{Error, Result};
use crate::geometry::{circumcircle, dist_sq, orientation, Circumcircle, Orientation, Point};

/// The counter-clockwise triangle the sweep starts from, together with its
/// circumcircle. Every other point is inserted in order of distance from
/// `circumcenter`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeedTriangle {
    /// The seed point.
    pub i0: usize,
    /// Nearest neighbour of the seed point.
    pub ij: usize,
    /// Partner minimising the circumradius through `i0` and `ij`.
    pub ik: usize,
    pub circumcenter: Point,
    pub radius_sq: f64,
}

impl SeedTriangle {
    pub fn indices(&self) -> [usize; 3] {
        [self.i0, self.ij, self.ik]
    }

    pub fn circle(&self) -> Circumcircle {
        Circumcircle {
            center: self.circumcenter,
            radius_sq: self.radius_sq,
        }
    }
}

/// A permutation of point indices along with the squared distance of each
/// point from the sort origin. `keys[i]` belongs to `order[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOrder {
    pub order: Vec<usize>,
    pub keys: Vec<f64>,
}

impl SweepOrder {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

fn check_points(points: &[Point]) -> Result<()> {
    if let Some(bad) = points.iter().position(|p| !p.is_finite()) {
        return Err(Error::NonFinite(bad));
    }
    if points.len() < 3 {
        return Err(Error::TooFewPoints(points.len()));
    }
    Ok(())
}

/// Picks the point closest to the centre of the bounding box, preferring the
/// lowest index on ties.
pub fn select_seed(points: &[Point]) -> Result<usize> {
    check_points(points)?;
    let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
    let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        min_x = min_x.min(p.x);
        min_y = min_y.min(p.y);
        max_x = max_x.max(p.x);
        max_y = max_y.max(p.y);
    }
    let center = Point::new((min_x + max_x) / 2.0, (min_y + max_y) / 2.0);

    let mut best = 0;
    let mut best_dist = f64::INFINITY;
    for (i, &p) in points.iter().enumerate() {
        let d = dist_sq(p, center);
        if d < best_dist {
            best = i;
            best_dist = d;
        }
    }
    Ok(best)
}

/// Stable sort of all point indices by squared distance from `origin`.
pub fn radial_sort(points: &[Point], origin: Point) -> SweepOrder {
    let mut keyed: Vec<(f64, usize)> = points
        .iter()
        .enumerate()
        .map(|(i, &p)| (dist_sq(p, origin), i))
        .collect();
    // Breaking ties on the index gives the same result as a stable sort.
    keyed.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let (keys, order) = keyed.into_iter().unzip();
    SweepOrder { order, keys }
}

/// Scans points in `sorted` (which must be ordered by distance from
/// `points[i0]`) for the one forming the smallest circumcircle with `i0`
/// and `ij`.
///
/// A circle through `x0` and `xk` has diameter at least `|xk - x0|`, so the
/// scan stops at the first candidate farther from `x0` than the diameter of
/// the best circle found so far.
pub fn find_min_circumcircle_partner(
    points: &[Point],
    sorted: &SweepOrder,
    i0: usize,
    ij: usize,
) -> Result<(usize, Circumcircle)> {
    let x0 = points[i0];
    let xj = points[ij];
    let mut best: Option<(usize, Circumcircle)> = None;
    for (&k, &key) in sorted.order.iter().zip(&sorted.keys) {
        if k == i0 || k == ij {
            continue;
        }
        if let Some((_, circle)) = best {
            // Slightly widened so rounding in the candidate's own radius can
            // never make a skipped point the true minimum.
            if key > 4.0 * circle.radius_sq * (1.0 + 1e-9) {
                break;
            }
        }
        let Ok(circle) = circumcircle(x0, xj, points[k]) else {
            continue;
        };
        match best {
            Some((_, b)) if circle.radius_sq >= b.radius_sq => {}
            _ => best = Some((k, circle)),
        }
    }
    best.ok_or(Error::AllCollinear)
}

/// Returns the first pair of exactly coincident points, if any.
///
/// Coincident points have identical keys, so only runs of equal keys in the
/// sorted order need to be compared.
fn find_duplicate(points: &[Point], sorted: &SweepOrder) -> Option<(usize, usize)> {
    let mut found: Option<(usize, usize)> = None;
    let mut start = 0;
    while start < sorted.len() {
        let mut end = start + 1;
        while end < sorted.len() && sorted.keys[end] == sorted.keys[start] {
            end += 1;
        }
        if end - start > 1 {
            let mut run: Vec<usize> = sorted.order[start..end].to_vec();
            run.sort_unstable_by(|&a, &b| points[a].lex_cmp(&points[b]).then(a.cmp(&b)));
            for pair in run.windows(2) {
                if points[pair[0]] == points[pair[1]] {
                    let candidate = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                    if found.is_none_or(|f| candidate < f) {
                        found = Some(candidate);
                    }
                }
            }
        }
        start = end;
    }
    found
}

/// Runs the full seeding stage: seed point, nearest neighbour, smallest
/// circumcircle partner, counter-clockwise ordering, and the resort of all
/// points about the seed circumcenter.
///
/// The returned order lists the three seed vertices first, followed by the
/// remaining points by increasing distance from the circumcenter.
pub fn build_seed(points: &[Point]) -> Result<(SeedTriangle, SweepOrder)> {
    let i0 = select_seed(points)?;
    let about_seed = radial_sort(points, points[i0]);
    if let Some((first, second)) = find_duplicate(points, &about_seed) {
        return Err(Error::DuplicatePoints { first, second });
    }
    // order[0] is i0 itself, the only point at distance zero.
    let mut ij = about_seed.order[1];
    let (mut ik, circle) = find_min_circumcircle_partner(points, &about_seed, i0, ij)?;
    if orientation(points[i0], points[ij], points[ik]) == Orientation::Clockwise {
        std::mem::swap(&mut ij, &mut ik);
    }

    let seed = SeedTriangle {
        i0,
        ij,
        ik,
        circumcenter: circle.center,
        radius_sq: circle.radius_sq,
    };

    let center = circle.center;
    let mut rest: Vec<(f64, usize)> = (0..points.len())
        .filter(|&i| i != i0 && i != ij && i != ik)
        .map(|i| (dist_sq(points[i], center), i))
        .collect();
    rest.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut order = Vec::with_capacity(points.len());
    let mut keys = Vec::with_capacity(points.len());
    for i in seed.indices() {
        order.push(i);
        keys.push(dist_sq(points[i], center));
    }
    for (key, i) in rest {
        order.push(i);
        keys.push(key);
    }
    Ok((seed, SweepOrder { order, keys }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(coords: &[(f64, f64)]) -> Vec<Point> {
        coords.iter().map(|&c| c.into()).collect()
    }

    /// Nearest point to the bounding box centre by plain enumeration.
    fn nearest_to_bbox_center(points: &[Point]) -> usize {
        let xs = points.iter().map(|p| p.x);
        let ys = points.iter().map(|p| p.y);
        let cx = (xs.clone().fold(f64::MAX, f64::min) + xs.fold(f64::MIN, f64::max)) / 2.0;
        let cy = (ys.clone().fold(f64::MAX, f64::min) + ys.fold(f64::MIN, f64::max)) / 2.0;
        let d = |p: &Point| (p.x - cx).powi(2) + (p.y - cy).powi(2);
        let best = points.iter().map(d).fold(f64::MAX, f64::min);
        points.iter().position(|p| d(p) == best).unwrap()
    }

    #[test]
    fn select_seed_examples() {
        let a = pts(&[(0., 0.), (10., 0.), (0., 10.), (4., 4.)]);
        assert_eq!(nearest_to_bbox_center(&a), 3);
        assert_eq!(select_seed(&a).unwrap(), 3);

        let b = pts(&[(0., 0.), (1., 0.), (0., 1.)]);
        assert_eq!(nearest_to_bbox_center(&b), 0);
        assert_eq!(select_seed(&b).unwrap(), 0);

        let c = pts(&[(0., 0.), (1., 0.)]);
        assert!(matches!(select_seed(&c), Err(Error::TooFewPoints(2))));
    }

    #[test]
    fn select_seed_rejects_non_finite() {
        let a = pts(&[(0., 0.), (f64::NAN, 0.), (0., 1.)]);
        assert!(matches!(select_seed(&a), Err(Error::NonFinite(1))));
    }

    #[test]
    fn radial_sort_examples() {
        let o = Point::new(0., 0.);
        assert_eq!(radial_sort(&pts(&[(5., 0.), (1., 0.), (3., 0.)]), o).order, vec![1, 2, 0]);
        assert_eq!(radial_sort(&pts(&[(1., 0.), (0., 1.)]), o).order, vec![0, 1]);
        assert_eq!(radial_sort(&pts(&[(0., 0.)]), o).order, vec![0]);
    }

    #[test]
    fn partner_example() {
        let points = pts(&[(0., 0.), (1., 0.), (0., 1.), (10., 10.)]);
        // Enumerated candidates: (0,1) gives centre (0.5, 0.5) with r^2 = 0.5,
        // (10,10) gives centre (0.5, 9.5) with r^2 = 90.5.
        let far = circumcircle(points[0], points[1], points[3]).unwrap();
        assert_eq!(far.center, Point::new(0.5, 9.5));
        assert_eq!(far.radius_sq, 90.5);

        let sorted = radial_sort(&points, points[0]);
        let (k, circle) = find_min_circumcircle_partner(&points, &sorted, 0, 1).unwrap();
        assert_eq!(k, 2);
        assert_eq!(circle.center, Point::new(0.5, 0.5));
        assert_eq!(circle.radius_sq, 0.5);
    }

    #[test]
    fn partner_all_collinear() {
        let points: Vec<Point> = (0..6).map(|i| Point::new(i as f64, 0.)).collect();
        let sorted = radial_sort(&points, points[0]);
        assert!(matches!(
            find_min_circumcircle_partner(&points, &sorted, 0, 1),
            Err(Error::AllCollinear)
        ));
    }

    #[test]
    fn build_seed_four_points() {
        let points = pts(&[(0., 0.), (1., 0.), (0., 1.), (10., 10.)]);
        let (seed, order) = build_seed(&points).unwrap();
        let mut idx = seed.indices();
        idx.sort();
        assert_eq!(idx, [0, 1, 2]);
        assert_eq!(
            orientation(points[seed.i0], points[seed.ij], points[seed.ik]),
            Orientation::CounterClockwise
        );
        assert_eq!(seed.circumcenter, Point::new(0.5, 0.5));
        assert_eq!(&order.order[..3], &seed.indices());
        assert_eq!(order.order[3], 3);
    }

    #[test]
    fn build_seed_equilateral() {
        let h = 3f64.sqrt() / 2.0;
        let points = pts(&[(0., 0.), (1., 0.), (0.5, h)]);
        let (seed, _) = build_seed(&points).unwrap();
        let mut idx = seed.indices();
        idx.sort();
        assert_eq!(idx, [0, 1, 2]);
        assert!((seed.circumcenter.x - 0.5).abs() < 1e-15);
        assert!((seed.circumcenter.y - 3f64.sqrt() / 6.0).abs() < 1e-15);
    }

    #[test]
    fn build_seed_collinear_and_duplicates() {
        let line: Vec<Point> = (0..100).map(|i| Point::new(i as f64, 2.0 * i as f64)).collect();
        assert!(matches!(build_seed(&line), Err(Error::AllCollinear)));

        let dup = pts(&[(0., 0.), (3., 1.), (1., 2.), (3., 1.), (5., 5.)]);
        assert!(matches!(
            build_seed(&dup),
            Err(Error::DuplicatePoints { first: 1, second: 3 })
        ));
    }

    #[test]
    fn duplicate_detection_within_equal_key_runs() {
        // Points on a circle about the seed all share one key; the duplicate
        // sits among them.
        let dup = pts(&[(0., 0.), (1., 0.), (0., 1.), (-1., 0.), (0., -1.), (0., 1.)]);
        assert!(matches!(
            build_seed(&dup),
            Err(Error::DuplicatePoints { first: 2, second: 5 })
        ));
    }
}
