//! Brute-force reference implementations and a structural audit.
//!
//! Nothing here calls into the predicates of [`crate::geometry`]; the
//! arithmetic is written out again so that a bug in the fast path cannot hide
//! itself by agreeing with its own check.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::sweephull::Triangulation;

/// Relative tolerance on the squared circumradius used by the oracles.
pub const ORACLE_TOLERANCE: f64 = 1e-9;

fn cross(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn sq(x: f64) -> f64 {
    x * x
}

/// Centre and squared radius of the circle through three points, or `None`
/// when they are (numerically) collinear.
fn naive_circle(a: Point, b: Point, c: Point) -> Option<(Point, f64)> {
    // Work relative to the centroid to keep the products small.
    let ox = (a.x + b.x + c.x) / 3.0;
    let oy = (a.y + b.y + c.y) / 3.0;
    let (ax, ay) = (a.x - ox, a.y - oy);
    let (bx, by) = (b.x - ox, b.y - oy);
    let (cx, cy) = (c.x - ox, c.y - oy);
    let d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    let scale = 2.0 * ((ax * (by - cy)).abs() + (bx * (cy - ay)).abs() + (cx * (ay - by)).abs());
    if d == 0.0 || d.abs() <= 1e-14 * scale {
        return None;
    }
    let a2 = sq(ax) + sq(ay);
    let b2 = sq(bx) + sq(by);
    let c2 = sq(cx) + sq(cy);
    let ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    let uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    // Average over the three vertices to damp the rounding of the centre.
    let r2 = (sq(ax - ux) + sq(ay - uy) + sq(bx - ux) + sq(by - uy) + sq(cx - ux) + sq(cy - uy)) / 3.0;
    Some((Point::new(ox + ux, oy + uy), r2))
}

/// Every triangle whose circumcircle holds no other input point, found by
/// testing all `O(n^3)` triples against all points. Triangles are returned
/// counter-clockwise, in lexicographic order of their sorted vertex triples.
///
/// Intended for small inputs (up to a few hundred points).
pub fn brute_force_delaunay(points: &[Point]) -> Result<Vec<[usize; 3]>> {
    let n = points.len();
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (points[i], points[j], points[k]);
                let Some((center, r2)) = naive_circle(a, b, c) else { continue };
                let mut empty = true;
                for (m, &p) in points.iter().enumerate() {
                    if m == i || m == j || m == k {
                        continue;
                    }
                    let d2 = sq(p.x - center.x) + sq(p.y - center.y);
                    if (d2 - r2).abs() <= ORACLE_TOLERANCE * r2 {
                        return Err(Error::DegenerateCocircular);
                    }
                    if d2 < r2 {
                        empty = false;
                        break;
                    }
                }
                if empty {
                    out.push(if cross(a, b, c) > 0.0 { [i, j, k] } else { [i, k, j] });
                }
            }
        }
    }
    Ok(out)
}

/// Convex hull by gift wrapping, counter-clockwise from the lowest (then
/// leftmost) point. Points in the interior of hull edges are left out.
pub fn gift_wrap_hull(points: &[Point]) -> Result<Vec<usize>> {
    let n = points.len();
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    let start = (0..n)
        .min_by(|&a, &b| {
            let (p, q) = (points[a], points[b]);
            p.y.total_cmp(&q.y).then(p.x.total_cmp(&q.x))
        })
        .unwrap();

    let mut hull = vec![start];
    let mut current = start;
    loop {
        let mut candidate = if current == 0 { 1 } else { 0 };
        for r in 0..n {
            if r == current || r == candidate {
                continue;
            }
            let c = cross(points[current], points[candidate], points[r]);
            let farther = sq(points[r].x - points[current].x) + sq(points[r].y - points[current].y)
                > sq(points[candidate].x - points[current].x) + sq(points[candidate].y - points[current].y);
            if c < 0.0 || (c == 0.0 && farther) {
                candidate = r;
            }
        }
        if candidate == start {
            break;
        }
        hull.push(candidate);
        current = candidate;
        if hull.len() > n {
            break;
        }
    }
    if hull.len() < 3 {
        return Err(Error::AllCollinear);
    }
    Ok(hull)
}

/// Undirected edges of a triangle list as sorted `(low, high)` pairs.
pub fn edge_set(triangles: &[[usize; 3]]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = triangles
        .iter()
        .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])])
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Whether `a` and `b` list the same cycle, allowing any starting point.
pub fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let Some(shift) = b.iter().position(|&x| x == a[0]) else {
        return false;
    };
    (0..a.len()).all(|i| a[i] == b[(i + shift) % b.len()])
}

/// Findings of [`audit`]. An empty violation list means no input point lies
/// strictly inside any triangle's circumcircle at the audit tolerance.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AuditReport {
    /// `(triangle, point)` pairs where the point is inside the circumcircle.
    pub delaunay_violations: Vec<(usize, usize)>,
    /// `|sum of triangle areas - hull area| / hull area`.
    pub area_mismatch: f64,
    pub euler_ok: bool,
    pub manifold_ok: bool,
    pub adjacency_ok: bool,
    pub hull_matches_oracle: bool,
    /// Every triangle is strictly counter-clockwise.
    pub ccw_ok: bool,
    /// Every input point is a vertex of some triangle.
    pub coverage_ok: bool,
}

impl AuditReport {
    /// All checks except the empty-circumcircle scan.
    pub fn structure_ok(&self) -> bool {
        self.area_mismatch <= ORACLE_TOLERANCE
            && self.euler_ok
            && self.manifold_ok
            && self.adjacency_ok
            && self.hull_matches_oracle
            && self.ccw_ok
            && self.coverage_ok
    }

    pub fn is_clean(&self) -> bool {
        self.delaunay_violations.is_empty() && self.structure_ok()
    }

    /// One `name: ok|FAIL` line per check.
    pub fn summary(&self) -> String {
        let flag = |ok: bool| if ok { "ok" } else { "FAIL" };
        format!(
            "delaunay: {} ({} violations)\narea: {} (relative mismatch {:.3e})\neuler: {}\nmanifold: {}\nadjacency: {}\nhull: {}\norientation: {}\ncoverage: {}",
            flag(self.delaunay_violations.is_empty()),
            self.delaunay_violations.len(),
            flag(self.area_mismatch <= ORACLE_TOLERANCE),
            self.area_mismatch,
            flag(self.euler_ok),
            flag(self.manifold_ok),
            flag(self.adjacency_ok),
            flag(self.hull_matches_oracle),
            flag(self.ccw_ok),
            flag(self.coverage_ok),
        )
    }
}

pub fn audit(tri: &Triangulation) -> AuditReport {
    audit_with_tolerance(tri, ORACLE_TOLERANCE)
}

/// Runs every structural check plus an exhaustive empty-circumcircle scan,
/// counting a point as inside when `r^2 - d^2 > tolerance * r^2`.
pub fn audit_with_tolerance(tri: &Triangulation, tolerance: f64) -> AuditReport {
    let points = tri.points();
    let tris = tri.triangles();
    let n = points.len();
    let mut report = AuditReport::default();

    let in_range = tris.iter().all(|t| t.v.iter().all(|&i| i < n));
    if !in_range {
        report.area_mismatch = f64::INFINITY;
        return report;
    }

    report.ccw_ok = tris.iter().all(|t| cross(points[t.v[0]], points[t.v[1]], points[t.v[2]]) > 0.0);

    let mut used = vec![false; n];
    for t in tris {
        for &i in &t.v {
            used[i] = true;
        }
    }
    report.coverage_ok = used.iter().all(|&u| u);

    // Directed edge -> (triangle, edge index); duplicates break manifoldness.
    let mut directed: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    let mut duplicate_directed = false;
    for (ti, t) in tris.iter().enumerate() {
        for e in 0..3 {
            let edge = (t.v[e], t.v[(e + 1) % 3]);
            if directed.insert(edge, (ti, e)).is_some() {
                duplicate_directed = true;
            }
        }
    }
    let boundary: HashSet<(usize, usize)> = directed
        .keys()
        .filter(|&&(a, b)| !directed.contains_key(&(b, a)))
        .copied()
        .collect();
    let ring: HashSet<(usize, usize)> = tri.hull().edges().collect();
    report.manifold_ok = !duplicate_directed && boundary == ring && ring.len() == tri.hull().len();

    let mut adjacency_ok = true;
    for (ti, t) in tris.iter().enumerate() {
        for e in 0..3 {
            let (a, b) = (t.v[e], t.v[(e + 1) % 3]);
            let twin = directed.get(&(b, a));
            match (t.nbr(e), twin) {
                (Some(u), Some(&(tu, eu))) => {
                    if u != tu || tris[tu].nbr(eu) != Some(ti) {
                        adjacency_ok = false;
                    }
                }
                (None, None) => {}
                _ => adjacency_ok = false,
            }
        }
    }
    for ((a, b), link) in tri.hull().edges().zip(tri.hull().edge_triangles()) {
        if link.map(|t| directed.get(&(a, b)).map(|&(u, _)| u) != Some(t)).unwrap_or(true) {
            adjacency_ok = false;
        }
    }
    report.adjacency_ok = adjacency_ok;

    let boundary_vertices: HashSet<usize> = boundary.iter().map(|&(a, _)| a).collect();
    report.euler_ok = report.coverage_ok
        && boundary_vertices.len() == boundary.len()
        && tris.len() + 2 + boundary.len() == 2 * n;

    match gift_wrap_hull(points) {
        Ok(hull) => {
            let hull_area = polygon_area(points, &hull);
            let tri_area: f64 = tris
                .iter()
                .map(|t| cross(points[t.v[0]], points[t.v[1]], points[t.v[2]]) / 2.0)
                .sum();
            report.area_mismatch = (tri_area - hull_area).abs() / hull_area;
            report.hull_matches_oracle = same_cycle(&tri.hull().corners(points), &hull);
        }
        Err(_) => report.area_mismatch = f64::INFINITY,
    }

    report.delaunay_violations = empty_circle_violations(points, tris.iter().map(|t| t.v), tolerance);
    report
}

/// Area of a convex ring as a fan from its first vertex, so coordinates far
/// from the origin do not cancel.
fn polygon_area(points: &[Point], ring: &[usize]) -> f64 {
    let apex = points[ring[0]];
    ring.windows(2)
        .skip(1)
        .map(|w| cross(apex, points[w[0]], points[w[1]]))
        .sum::<f64>()
        / 2.0
}

/// Every `(triangle, point)` pair where the point lies inside the
/// triangle's circumcircle. Points are bucketed by x so each circle only
/// looks at the slab it spans; the result is the same as testing all pairs.
pub fn empty_circle_violations(
    points: &[Point],
    triangles: impl Iterator<Item = [usize; 3]>,
    tolerance: f64,
) -> Vec<(usize, usize)> {
    let mut by_x: Vec<usize> = (0..points.len()).collect();
    by_x.sort_unstable_by(|&a, &b| points[a].x.total_cmp(&points[b].x));
    let xs: Vec<f64> = by_x.iter().map(|&i| points[i].x).collect();

    let mut out = Vec::new();
    for (ti, v) in triangles.enumerate() {
        let [a, b, c] = v.map(|i| points[i]);
        let Some((center, r2)) = naive_circle(a, b, c) else {
            continue;
        };
        let r = r2.sqrt() * (1.0 + 1e-9);
        let lo = xs.partition_point(|&x| x < center.x - r);
        let hi = xs.partition_point(|&x| x <= center.x + r);
        for &m in &by_x[lo..hi] {
            if v.contains(&m) {
                continue;
            }
            let p = points[m];
            let d2 = sq(p.x - center.x) + sq(p.y - center.y);
            if r2 - d2 > tolerance * r2 {
                out.push((ti, m));
            }
        }
    }
    out.sort_unstable();
    out
}
