//! Construction of a non-overlapping triangulation by growing a convex hull
//! outward through the radial sweep order.
//!
//! Each point taken from the sweep order lies outside the hull of the points
//! before it. The hull edges it can see are each joined to it by a new
//! triangle, and the visible run of the hull is replaced by two edges through
//! the new point.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geometry::{
    circumcircle, circumcircle_unchecked, dist_sq, orientation, Orientation, Point,
};
use crate::seeding::{build_seed, SeedTriangle, SweepOrder};

const NONE: usize = usize::MAX;

#[inline]
pub(crate) fn next_edge(e: usize) -> usize {
    if e == 2 {
        0
    } else {
        e + 1
    }
}

#[inline]
pub(crate) fn prev_edge(e: usize) -> usize {
    if e == 0 {
        2
    } else {
        e - 1
    }
}

/// Stored neighbour link meaning "no triangle on this side".
const NO_LINK: u32 = u32::MAX;

/// A counter-clockwise triangle in the triangle graph.
///
/// Edge `e` runs from `v[e]` to `v[(e + 1) % 3]`; `nbr(e)` is the triangle on
/// the other side of it, or `None` on the boundary.
///
/// Links are stored as `u32` so a triangle fills exactly one cache line,
/// which limits a mesh to `u32::MAX - 1` triangles.
#[derive(Debug, Clone, Copy, PartialEq)]
#[repr(C, align(64))]
pub struct Triangle {
    pub v: [usize; 3],
    links: [u32; 3],
    pub circumcenter: Point,
    pub radius_sq: f64,
}

impl Triangle {
    /// Builds a triangle with no neighbours. `v` must be counter-clockwise.
    pub(crate) fn new(points: &[Point], v: [usize; 3]) -> Self {
        let circle = circumcircle_unchecked(points[v[0]], points[v[1]], points[v[2]]);
        Triangle {
            v,
            links: [NO_LINK; 3],
            circumcenter: circle.center,
            radius_sq: circle.radius_sq,
        }
    }

    /// The triangle across edge `e`.
    pub fn nbr(&self, e: usize) -> Option<usize> {
        let link = self.links[e];
        (link != NO_LINK).then_some(link as usize)
    }

    pub fn neighbors(&self) -> [Option<usize>; 3] {
        [self.nbr(0), self.nbr(1), self.nbr(2)]
    }

    pub(crate) fn set_nbr(&mut self, e: usize, t: Option<usize>) {
        self.links[e] = t.map_or(NO_LINK, |t| u32::try_from(t).expect("triangle index exceeds u32"));
    }

    pub(crate) fn set_neighbors(&mut self, nbr: [Option<usize>; 3]) {
        for (e, t) in nbr.into_iter().enumerate() {
            self.set_nbr(e, t);
        }
    }

    pub(crate) fn recompute_circle(&mut self, points: &[Point]) {
        let circle = circumcircle_unchecked(points[self.v[0]], points[self.v[1]], points[self.v[2]]);
        self.circumcenter = circle.center;
        self.radius_sq = circle.radius_sq;
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        (self.v[e], self.v[next_edge(e)])
    }

    /// Index of the directed edge `a -> b`, if this triangle has it.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        (0..3).find(|&e| self.v[e] == a && self.v[next_edge(e)] == b)
    }

    /// The vertex not on edge `e`.
    pub fn opposite(&self, e: usize) -> usize {
        self.v[prev_edge(e)]
    }

    pub fn has_vertex(&self, p: usize) -> bool {
        self.v.contains(&p)
    }
}

/// The convex boundary of a triangulation, counter-clockwise.
///
/// `edge_triangles[i]` is the triangle inside the edge from `vertices[i]` to
/// `vertices[i + 1]`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HullRing {
    vertices: Vec<usize>,
    edge_triangles: Vec<Option<usize>>,
}

impl HullRing {
    pub fn new(vertices: Vec<usize>, edge_triangles: Vec<Option<usize>>) -> Self {
        assert_eq!(vertices.len(), edge_triangles.len());
        HullRing {
            vertices,
            edge_triangles,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edge_triangles(&self) -> &[Option<usize>] {
        &self.edge_triangles
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Hull edges as `(from, to)` pairs in ring order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// The ring with vertices lying on a straight stretch of the boundary
    /// removed, leaving only the corners of the convex hull.
    pub fn corners(&self, points: &[Point]) -> Vec<usize> {
        let n = self.vertices.len();
        (0..n)
            .filter(|&i| {
                let a = points[self.vertices[(i + n - 1) % n]];
                let b = points[self.vertices[i]];
                let c = points[self.vertices[(i + 1) % n]];
                orientation(a, b, c) != Orientation::Collinear
            })
            .map(|i| self.vertices[i])
            .collect()
    }

    /// Whether every consecutive vertex triple turns left or goes straight.
    pub fn is_convex(&self, points: &[Point]) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = points[self.vertices[i]];
            let b = points[self.vertices[(i + 1) % n]];
            let c = points[self.vertices[(i + 2) % n]];
            orientation(a, b, c) != Orientation::Clockwise
        })
    }
}

/// A triangulation of a point set: the triangle graph plus its boundary.
#[derive(Debug, Clone)]
pub struct Triangulation {
    pub(crate) points: Vec<Point>,
    pub(crate) triangles: Vec<Triangle>,
    pub(crate) hull: HullRing,
}

impl Triangulation {
    /// Maps vertex indices back through `labels` from
    /// [`SweepHull::new_in_sweep_order`] and swaps in the caller's `points`.
    /// Triangle numbering and neighbour links are unchanged.
    pub fn restore_labels(&mut self, labels: &[usize], points: Vec<Point>) {
        assert_eq!(labels.len(), self.points.len());
        assert_eq!(points.len(), self.points.len());
        for tri in &mut self.triangles {
            tri.v = tri.v.map(|i| labels[i]);
        }
        for v in &mut self.hull.vertices {
            *v = labels[*v];
        }
        self.points = points;
    }

    /// Assembles a triangulation from bare vertex triples and a boundary
    /// ring, rebuilding neighbour links by matching opposite directed edges.
    ///
    /// No geometric validation is done here; use [`crate::oracle::audit`] to
    /// check the result.
    pub fn from_parts(points: Vec<Point>, triangles: &[[usize; 3]], hull: Vec<usize>) -> Result<Self> {
        let len = points.len();
        for &index in triangles.iter().flatten().chain(hull.iter()) {
            if index >= len {
                return Err(Error::IndexOutOfRange { index, len });
            }
        }

        let mut tris: Vec<Triangle> = triangles
            .iter()
            .map(|&v| {
                let (circumcenter, radius_sq) =
                    match circumcircle(points[v[0]], points[v[1]], points[v[2]]) {
                        Ok(c) => (c.center, c.radius_sq),
                        Err(_) => (Point::new(f64::NAN, f64::NAN), f64::INFINITY),
                    };
                Triangle {
                    v,
                    links: [NO_LINK; 3],
                    circumcenter,
                    radius_sq,
                }
            })
            .collect();

        let mut directed: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        for (t, tri) in tris.iter().enumerate() {
            for e in 0..3 {
                directed.entry(tri.edge(e)).or_insert((t, e));
            }
        }
        for tri in &mut tris {
            for e in 0..3 {
                let (a, b) = tri.edge(e);
                if let Some(&(u, _)) = directed.get(&(b, a)) {
                    tri.set_nbr(e, Some(u));
                }
            }
        }

        let n = hull.len();
        let edge_triangles = (0..n)
            .map(|i| {
                directed
                    .get(&(hull[i], hull[(i + 1) % n]))
                    .map(|&(t, _)| t)
            })
            .collect();

        Ok(Triangulation {
            points,
            triangles: tris,
            hull: HullRing::new(hull, edge_triangles),
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn hull(&self) -> &HullRing {
        &self.hull
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Vertex triples of every triangle, counter-clockwise.
    pub fn triangle_indices(&self) -> Vec<[usize; 3]> {
        self.triangles.iter().map(|t| t.v).collect()
    }

    /// Undirected edges as sorted `(low, high)` pairs, sorted.
    pub fn edge_set(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| (0..3).map(move |e| t.edge(e)))
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    /// Re-derives the interior triangle of every hull edge from the
    /// neighbour-less triangle edges.
    pub(crate) fn refresh_hull_links(&mut self) {
        let mut boundary: HashMap<usize, usize> = HashMap::with_capacity(self.hull.len());
        for (t, tri) in self.triangles.iter().enumerate() {
            for e in 0..3 {
                if tri.nbr(e).is_none() {
                    boundary.insert(tri.v[e], t);
                }
            }
        }
        let links = self
            .hull
            .vertices
            .iter()
            .map(|v| boundary.get(v).copied())
            .collect();
        self.hull.edge_triangles = links;
    }
}

/// Result of asking which hull edges a new point can see.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Visibility {
    /// The maximal run of consecutive hull edges, in ring order, that have
    /// the point strictly on their outer side.
    Edges(Vec<(usize, usize)>),
    /// No edge is strictly visible, but the point lies on the interior of
    /// this hull edge; it is absorbed by splitting the edge.
    OnEdge(usize, usize),
}

/// The in-progress sweep: the triangles built so far and the hull frontier
/// as a doubly linked ring over point indices.
#[derive(Debug, Clone)]
pub struct SweepHull {
    points: Vec<Point>,
    seed: SeedTriangle,
    order: SweepOrder,
    /// Position in `order` of the next point to insert.
    cursor: usize,
    triangles: Vec<Triangle>,
    next: Vec<usize>,
    prev: Vec<usize>,
    /// Triangle inside the hull edge starting at each hull vertex.
    hull_tri: Vec<usize>,
    hull_start: usize,
    hull_len: usize,
    /// Hull vertices bucketed by pseudo-angle about the seed circumcenter.
    hash: Vec<usize>,
    last_added: Vec<usize>,
}

impl SweepHull {
    /// Seeds the sweep from `points`. The seed triangle is the only triangle
    /// until [`SweepHull::step`] or [`SweepHull::insert_point`] is called.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let (seed, order) = build_seed(&points)?;
        Ok(Self::from_seed(points, seed, order))
    }

    /// Like [`SweepHull::new`], but sweeps a copy of `points` renumbered in
    /// insertion order, so that consecutive insertions read neighbouring
    /// memory. Also returns `labels`, where `labels[i]` is the caller's index
    /// of point `i`; hand it to [`Triangulation::restore_labels`] afterwards.
    pub fn new_in_sweep_order(points: &[Point]) -> Result<(Self, Vec<usize>)> {
        let (seed, order) = build_seed(points)?;
        let SweepOrder { order: labels, keys } = order;
        let sorted = labels.iter().map(|&i| points[i]).collect();
        let seed = SeedTriangle { i0: 0, ij: 1, ik: 2, ..seed };
        let order = SweepOrder {
            order: (0..labels.len()).collect(),
            keys,
        };
        Ok((Self::from_seed(sorted, seed, order), labels))
    }

    /// Starts a sweep from an explicit seed. `seed` must be counter-clockwise
    /// and `order` must begin with the three seed indices.
    pub fn from_seed(points: Vec<Point>, seed: SeedTriangle, order: SweepOrder) -> Self {
        let n = points.len();
        let hash_size = ((n as f64).sqrt().ceil() as usize).max(1);
        let [a, b, c] = seed.indices();

        let mut hull = SweepHull {
            triangles: vec![Triangle::new(&points, [a, b, c])],
            points,
            seed,
            order,
            cursor: 3,
            next: vec![NONE; n],
            prev: vec![NONE; n],
            hull_tri: vec![NONE; n],
            hull_start: a,
            hull_len: 3,
            hash: vec![NONE; hash_size],
            last_added: vec![0],
        };
        for (u, v) in [(a, b), (b, c), (c, a)] {
            hull.next[u] = v;
            hull.prev[v] = u;
            hull.hull_tri[u] = 0;
            hull.hash_insert(u);
        }
        hull
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn seed(&self) -> &SeedTriangle {
        &self.seed
    }

    pub fn order(&self) -> &SweepOrder {
        &self.order
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    /// Triangles created or rewritten by the most recent insertion.
    pub fn last_added(&self) -> &[usize] {
        &self.last_added
    }

    /// Number of points inserted so far, seed vertices included.
    pub fn inserted(&self) -> usize {
        self.cursor
    }

    pub fn is_done(&self) -> bool {
        self.cursor >= self.order.len()
    }

    /// Current hull vertices, counter-clockwise.
    pub fn hull_vertices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.hull_len);
        let mut v = self.hull_start;
        loop {
            out.push(v);
            v = self.next[v];
            if v == self.hull_start {
                break;
            }
        }
        out
    }

    pub fn hull_ring(&self) -> HullRing {
        let vertices = self.hull_vertices();
        let edge_triangles = vertices.iter().map(|&v| Some(self.hull_tri[v])).collect();
        HullRing::new(vertices, edge_triangles)
    }

    pub fn hull_is_convex(&self) -> bool {
        self.hull_ring().is_convex(&self.points)
    }

    fn on_hull(&self, v: usize) -> bool {
        self.next[v] != NONE
    }

    fn hash_key(&self, p: Point) -> usize {
        let c = self.seed.circumcenter;
        let dx = p.x - c.x;
        let dy = p.y - c.y;
        let len = self.hash.len();
        ((pseudo_angle(dx, dy) * len as f64).floor() as usize) % len
    }

    fn hash_insert(&mut self, v: usize) {
        let key = self.hash_key(self.points[v]);
        self.hash[key] = v;
    }

    /// A live hull vertex at roughly the same angle about the circumcenter
    /// as `p`.
    fn hash_lookup(&self, p: Point) -> usize {
        let key = self.hash_key(p);
        let len = self.hash.len();
        (0..len)
            .map(|j| self.hash[(key + j) % len])
            .find(|&v| v != NONE && self.on_hull(v))
            .unwrap_or(self.hull_start)
    }

    fn sees(&self, u: usize, v: usize, p: Point) -> bool {
        orientation(self.points[u], self.points[v], p) == Orientation::Clockwise
    }

    /// Hull edges visible from point `index`.
    ///
    /// The search starts at the hull edge nearest in angle to the point and
    /// walks the ring until it finds a visible edge, then grows the run in
    /// both directions.
    pub fn visible_edges(&self, index: usize) -> Result<Visibility> {
        let p = self.points[index];
        let start = self.prev[self.hash_lookup(p)];

        let mut e = start;
        let mut steps = 0;
        while !self.sees(e, self.next[e], p) {
            e = self.next[e];
            steps += 1;
            if e == start || steps > self.hull_len {
                return self.edge_containing(index, start);
            }
        }

        let mut first = e;
        let mut count = 1;
        while count < self.hull_len && self.sees(self.prev[first], first, p) {
            first = self.prev[first];
            count += 1;
        }
        let mut last = self.next[e];
        while count < self.hull_len && self.sees(last, self.next[last], p) {
            last = self.next[last];
            count += 1;
        }

        let mut edges = Vec::with_capacity(count);
        let mut u = first;
        while u != last {
            edges.push((u, self.next[u]));
            u = self.next[u];
        }
        Ok(Visibility::Edges(edges))
    }

    /// The hull edge whose interior `index` lies on, used when no edge is
    /// strictly visible.
    fn edge_containing(&self, index: usize, start: usize) -> Result<Visibility> {
        let p = self.points[index];
        let mut u = start;
        loop {
            let v = self.next[u];
            let (a, b) = (self.points[u], self.points[v]);
            if orientation(a, b, p) == Orientation::Collinear {
                let t = ((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) / dist_sq(a, b);
                if t > 0.0 && t < 1.0 {
                    return Ok(Visibility::OnEdge(u, v));
                }
            }
            u = v;
            if u == start {
                return Err(Error::NoVisibleEdge(index));
            }
        }
    }

    /// Inserts point `index`, which must lie outside the current hull.
    pub fn insert_point(&mut self, index: usize) -> Result<()> {
        match self.visible_edges(index)? {
            Visibility::Edges(run) => self.add_fan(index, &run),
            Visibility::OnEdge(u, v) => self.split_hull_edge(index, u, v),
        }
        Ok(())
    }

    fn add_fan(&mut self, p: usize, run: &[(usize, usize)]) {
        let base = self.triangles.len();
        let k = run.len();
        self.last_added.clear();
        for (i, &(u, v)) in run.iter().enumerate() {
            let t = base + i;
            let mut tri = Triangle::new(&self.points, [u, p, v]);
            let inner = self.hull_tri[u];
            tri.set_neighbors([(i > 0).then(|| t - 1), (i + 1 < k).then_some(t + 1), Some(inner)]);
            let back = self.triangles[inner]
                .edge_index(u, v)
                .expect("hull link points at a triangle without the hull edge");
            self.triangles[inner].set_nbr(back, Some(t));
            self.triangles.push(tri);
            self.last_added.push(t);
        }

        let first = run[0].0;
        let last = run[k - 1].1;
        for &(_, v) in &run[..k - 1] {
            self.next[v] = NONE;
            self.prev[v] = NONE;
            self.hull_tri[v] = NONE;
        }
        self.next[first] = p;
        self.prev[p] = first;
        self.next[p] = last;
        self.prev[last] = p;
        self.hull_tri[first] = base;
        self.hull_tri[p] = base + k - 1;
        self.hull_start = p;
        self.hull_len = self.hull_len + 2 - k;
        self.hash_insert(p);
        self.hash_insert(first);
    }

    fn split_hull_edge(&mut self, p: usize, u: usize, v: usize) {
        let t1 = self.hull_tri[u];
        let old = self.triangles[t1];
        let e = old.edge_index(u, v).expect("hull link points at a triangle without the hull edge");
        let w = old.opposite(e);
        let across_vw = old.nbr(next_edge(e));
        let across_wu = old.nbr(prev_edge(e));
        let t2 = self.triangles.len();

        let mut first = Triangle::new(&self.points, [u, p, w]);
        first.set_neighbors([None, Some(t2), across_wu]);
        let mut second = Triangle::new(&self.points, [p, v, w]);
        second.set_neighbors([None, across_vw, Some(t1)]);
        self.triangles[t1] = first;
        self.triangles.push(second);
        if let Some(n) = across_vw {
            let back = self.triangles[n].edge_index(w, v).expect("broken neighbour link");
            self.triangles[n].set_nbr(back, Some(t2));
        }

        self.next[u] = p;
        self.prev[p] = u;
        self.next[p] = v;
        self.prev[v] = p;
        self.hull_tri[p] = t2;
        if self.next[v] == w && self.hull_tri[v] == t1 {
            self.hull_tri[v] = t2;
        }
        self.hull_len += 1;
        self.hash_insert(p);
        self.last_added.clear();
        self.last_added.extend([t1, t2]);
    }

    /// Inserts the next point of the sweep order. Returns `false` once every
    /// point has been inserted.
    pub fn step(&mut self) -> Result<bool> {
        if self.is_done() {
            return Ok(false);
        }
        let index = self.order.order[self.cursor];
        self.insert_point(index)?;
        self.cursor += 1;
        Ok(true)
    }

    pub fn run(&mut self) -> Result<()> {
        while self.step()? {}
        Ok(())
    }

    /// Freezes the current state into a [`Triangulation`].
    pub fn finish(self) -> Triangulation {
        let hull = self.hull_ring();
        Triangulation {
            points: self.points,
            triangles: self.triangles,
            hull,
        }
    }
}

/// Monotone stand-in for the angle of `(dx, dy)`, in `[0, 1)`.
fn pseudo_angle(dx: f64, dy: f64) -> f64 {
    let sum = dx.abs() + dy.abs();
    if sum == 0.0 {
        return 0.0;
    }
    let p = dx / sum;
    (if dy > 0.0 { 3.0 - p } else { 1.0 + p }) / 4.0
}

/// Seeds and sweeps `points` into a non-overlapping triangulation, without
/// any edge flipping.
pub fn triangulate_nonoverlapping(points: &[Point]) -> Result<Triangulation> {
    let (mut sweep, labels) = SweepHull::new_in_sweep_order(points)?;
    sweep.run()?;
    let mut tri = sweep.finish();
    tri.restore_labels(&labels, points.to_vec());
    Ok(tri)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(coords: &[(f64, f64)]) -> Vec<Point> {
        coords.iter().map(|&c| c.into()).collect()
    }

    #[test]
    fn renumbered_sweep_gives_the_same_mesh() {
        let points = crate::cli_io::generate(crate::cli_io::PointKind::Clustered, 400, 9);
        let mut plain = SweepHull::new(points.clone()).unwrap();
        plain.run().unwrap();
        let plain = plain.finish();
        let renumbered = triangulate_nonoverlapping(&points).unwrap();
        assert_eq!(renumbered.triangles, plain.triangles);
        assert_eq!(renumbered.hull.vertices, plain.hull.vertices);
        assert_eq!(renumbered.points, plain.points);
    }

    /// A sweep seeded with the triangle (0,0),(2,0),(1,2) and one more point.
    fn seeded_with(extra: (f64, f64)) -> SweepHull {
        let points = pts(&[(0., 0.), (2., 0.), (1., 2.), extra]);
        let c = circumcircle(points[0], points[1], points[2]).unwrap();
        let seed = SeedTriangle {
            i0: 0,
            ij: 1,
            ik: 2,
            circumcenter: c.center,
            radius_sq: c.radius_sq,
        };
        let order = SweepOrder {
            order: vec![0, 1, 2, 3],
            keys: vec![0.0; 4],
        };
        SweepHull::from_seed(points, seed, order)
    }

    fn cross(a: Point, b: Point, c: Point) -> f64 {
        (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    }

    #[test]
    fn visible_edges_below() {
        let sweep = seeded_with((1., -1.));
        let p = sweep.points()[3];
        let ring = sweep.hull_vertices();
        let by_cross: Vec<(usize, usize)> = (0..3)
            .map(|i| (ring[i], ring[(i + 1) % 3]))
            .filter(|&(u, v)| cross(sweep.points()[u], sweep.points()[v], p) < 0.0)
            .collect();
        assert_eq!(by_cross, vec![(0, 1)]);
        assert_eq!(sweep.visible_edges(3).unwrap(), Visibility::Edges(vec![(0, 1)]));
    }

    #[test]
    fn visible_edges_upper_right() {
        let sweep = seeded_with((3., 3.));
        let pt = sweep.points();
        assert!(cross(pt[1], pt[2], pt[3]) < 0.0);
        assert!(cross(pt[0], pt[1], pt[3]) > 0.0);
        assert!(cross(pt[2], pt[0], pt[3]) > 0.0);
        assert_eq!(sweep.visible_edges(3).unwrap(), Visibility::Edges(vec![(1, 2)]));
    }

    #[test]
    fn visible_edges_inside_is_error() {
        let sweep = seeded_with((1., 1.));
        assert!(matches!(sweep.visible_edges(3), Err(Error::NoVisibleEdge(3))));
    }

    #[test]
    fn insert_below_seed() {
        let mut sweep = seeded_with((1., -1.));
        sweep.step().unwrap();
        assert_eq!(sweep.triangles().len(), 2);
        assert_eq!(sweep.triangles()[1].v, [0, 3, 1]);
        assert_eq!(sweep.last_added(), &[1]);
        let pt = sweep.points();
        let t = sweep.triangles()[1].v;
        assert_eq!(orientation(pt[t[0]], pt[t[1]], pt[t[2]]), Orientation::CounterClockwise);
        assert_eq!(sweep.hull_vertices().len(), 4);
        assert!(sweep.hull_is_convex());
        assert_eq!(sweep.triangles()[0].nbr(0), Some(1));
        assert_eq!(sweep.triangles()[1].nbr(2), Some(0));
    }

    #[test]
    fn insert_seeing_two_edges() {
        // (3, -1) sees the bottom edge and the right edge.
        let mut sweep = seeded_with((3., -1.));
        let Visibility::Edges(run) = sweep.visible_edges(3).unwrap() else {
            panic!("expected visible edges");
        };
        assert_eq!(run, vec![(0, 1), (1, 2)]);
        sweep.step().unwrap();
        assert_eq!(sweep.triangles().len(), 3);
        // 3 + 1 - (2 - 1)
        assert_eq!(sweep.hull_vertices().len(), 3);
        assert!(!sweep.hull_vertices().contains(&1));
    }

    #[test]
    fn point_on_hull_edge_splits_it() {
        let mut sweep = seeded_with((1., 0.));
        assert_eq!(sweep.visible_edges(3).unwrap(), Visibility::OnEdge(0, 1));
        sweep.step().unwrap();
        let tri = sweep.finish();
        assert_eq!(tri.len(), 2);
        assert_eq!(tri.hull().vertices().len(), 4);
        assert_eq!(tri.hull().corners(tri.points()).len(), 3);
    }

    #[test]
    fn collinear_extension_is_not_visible() {
        // (3,0) continues the bottom edge; only the right edge is visible.
        let sweep = seeded_with((3., 0.));
        assert_eq!(sweep.visible_edges(3).unwrap(), Visibility::Edges(vec![(1, 2)]));
    }

    #[test]
    fn base_cases() {
        let t = triangulate_nonoverlapping(&pts(&[(0., 0.), (1., 0.), (0., 1.)])).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.hull().len(), 3);

        let t = triangulate_nonoverlapping(&pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)])).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.hull().len(), 4);
    }

    #[test]
    fn four_point_set_euler_count() {
        let points = pts(&[(0., 0.), (1., 0.), (0., 1.), (10., 10.)]);
        let t = triangulate_nonoverlapping(&points).unwrap();
        let h = crate::oracle::gift_wrap_hull(&points).unwrap().len();
        assert_eq!(h, 4);
        assert_eq!(t.hull().len(), h);
        assert_eq!(t.len(), 2 * 4 - 2 - 4);
    }

    #[test]
    fn from_parts_rebuilds_links() {
        let points = pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        let t = Triangulation::from_parts(points, &[[0, 1, 2], [0, 2, 3]], vec![0, 1, 2, 3]).unwrap();
        assert_eq!(t.triangles()[0].neighbors(), [None, None, Some(1)]);
        assert_eq!(t.triangles()[1].neighbors(), [Some(0), None, None]);
        assert_eq!(t.hull().edge_triangles(), &[Some(0), Some(0), Some(1), Some(1)]);
        assert!(matches!(
            Triangulation::from_parts(vec![Point::default()], &[[0, 1, 2]], vec![]),
            Err(Error::IndexOutOfRange { index: 1, len: 1 })
        ));
    }

    #[test]
    fn pseudo_angle_is_monotone() {
        let angles: Vec<f64> = (0..64)
            .map(|i| {
                let a = -std::f64::consts::PI + (i as f64 + 0.5) * std::f64::consts::TAU / 64.0;
                pseudo_angle(a.cos(), a.sin())
            })
            .collect();
        // Starts just past the negative x axis and sweeps counter-clockwise.
        assert!(angles.windows(2).all(|w| w[0] < w[1]));
    }
}
