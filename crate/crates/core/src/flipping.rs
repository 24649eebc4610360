//! Edge flipping from an arbitrary triangulation to a Delaunay one.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geometry::{dist_sq, in_circumcircle_ccw, orientation, CirclePosition, Orientation, Point};
use crate::sweephull::{Triangle, Triangulation};

/// Points farther than this (relative to the squared radius) outside a cached
/// circumcircle skip the in-circle determinant. It is wide enough to cover
/// the error of a circumcenter computed for a nearly collinear triangle.
const PREFILTER_MARGIN: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FlipStats {
    /// Passes run, including the final pass that found nothing to flip.
    pub passes: usize,
    pub flips_total: usize,
    /// Distinct vertex pairs whose edge was frozen after reaching the
    /// per-pair flip limit.
    pub pairs_hit_limit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlipLimits {
    /// Flips allowed for the edge between one unordered pair of vertices.
    pub max_flips_per_pair: usize,
    pub max_passes: usize,
}

impl FlipLimits {
    pub fn for_point_count(n: usize) -> Self {
        FlipLimits {
            max_flips_per_pair: 8,
            max_passes: 100 + n,
        }
    }
}

/// Locates the edge shared by triangles `a` and `b`: the edge index in `a`
/// and the matching reversed edge index in `b`.
fn shared_edge(tris: &[Triangle], a: usize, b: usize) -> Result<(usize, usize)> {
    let (ta, tb) = match (tris.get(a), tris.get(b)) {
        (Some(ta), Some(tb)) if a != b => (ta, tb),
        _ => return Err(Error::NotAdjacent(a, b)),
    };
    for ea in 0..3 {
        if ta.nbr(ea) != Some(b) {
            continue;
        }
        let (p0, p1) = ta.edge(ea);
        if let Some(eb) = tb.edge_index(p1, p0) {
            return Ok((ea, eb));
        }
    }
    Err(Error::NotAdjacent(a, b))
}

/// Whether the edge `ea` of `ta`, with `ob` the opposite vertex across it,
/// should be replaced by the other diagonal.
fn flip_wanted(points: &[Point], ta: &Triangle, ea: usize, ob: usize) -> bool {
    let (p0, p1) = ta.edge(ea);
    let oa = ta.opposite(ea);
    let d = points[ob];
    if dist_sq(d, ta.circumcenter) > ta.radius_sq * (1.0 + PREFILTER_MARGIN) {
        return false;
    }
    if in_circumcircle_ccw(points[p0], points[p1], points[oa], d) != CirclePosition::Inside {
        return false;
    }
    // Both replacement triangles must keep a strict left turn, otherwise the
    // quadrilateral is not convex and the flip would fold the mesh.
    orientation(points[oa], points[p0], d) == Orientation::CounterClockwise
        && orientation(d, points[p1], points[oa]) == Orientation::CounterClockwise
}

/// True iff the vertex of `b` opposite the shared edge lies strictly inside
/// the circumcircle of `a` and the two triangles form a convex
/// quadrilateral. Cocircular quadruples are never flipped.
pub fn should_flip(tri: &Triangulation, a: usize, b: usize) -> Result<bool> {
    let (ea, eb) = shared_edge(&tri.triangles, a, b)?;
    let ob = tri.triangles[b].opposite(eb);
    Ok(flip_wanted(&tri.points, &tri.triangles[a], ea, ob))
}

/// Replaces the edge shared by `a` and `b` with the other diagonal of their
/// quadrilateral, keeping both slots. Returns the removed edge's endpoints.
fn flip_unchecked(points: &[Point], tris: &mut [Triangle], a: usize, b: usize, ea: usize, eb: usize) -> (usize, usize) {
    let ta = tris[a];
    let tb = tris[b];
    let (p0, p1) = ta.edge(ea);
    let oa = ta.opposite(ea);
    let ob = tb.opposite(eb);

    // Outer neighbours, named by the edge they sit on.
    let across_p1_oa = ta.nbr((ea + 1) % 3);
    let across_oa_p0 = ta.nbr((ea + 2) % 3);
    let across_p0_ob = tb.nbr((eb + 1) % 3);
    let across_ob_p1 = tb.nbr((eb + 2) % 3);

    let new_a = &mut tris[a];
    new_a.v = [oa, p0, ob];
    new_a.set_neighbors([across_oa_p0, across_p0_ob, Some(b)]);
    new_a.recompute_circle(points);

    let new_b = &mut tris[b];
    new_b.v = [ob, p1, oa];
    new_b.set_neighbors([across_ob_p1, across_p1_oa, Some(a)]);
    new_b.recompute_circle(points);

    if let Some(n) = across_p0_ob {
        if let Some(e) = tris[n].edge_index(ob, p0) {
            tris[n].set_nbr(e, Some(a));
        }
    }
    if let Some(n) = across_p1_oa {
        if let Some(e) = tris[n].edge_index(oa, p1) {
            tris[n].set_nbr(e, Some(b));
        }
    }
    (p0, p1)
}

/// Flips the edge shared by triangles `a` and `b`.
///
/// The caller is expected to have checked [`should_flip`]; flipping a
/// non-convex pair produces inverted triangles.
pub fn flip_edge(tri: &mut Triangulation, a: usize, b: usize) -> Result<()> {
    let (ea, eb) = shared_edge(&tri.triangles, a, b)?;
    flip_unchecked(&tri.points, &mut tri.triangles, a, b, ea, eb);
    tri.refresh_hull_links();
    Ok(())
}

/// Per-pair flip counts for the flip limit.
///
/// With a strict in-circle test an edge removed by a flip is almost never
/// re-created, so nearly every pair is flipped at most once. A blocked Bloom
/// filter remembers each removed pair in two bits of one word, and exact
/// counts are kept only for pairs that a flip re-creates while the filter
/// reports them as removed before. A false positive makes such a pair start
/// from one flip instead of zero.
struct FlipLedger {
    removed: Vec<u64>,
    shift: u32,
    counts: HashMap<(usize, usize), usize>,
}

impl FlipLedger {
    /// About 64 filter bits per triangle; a mesh sees roughly three flips
    /// per triangle on random input.
    fn new(triangles: usize) -> Self {
        let words = triangles.next_power_of_two().max(2);
        FlipLedger {
            removed: vec![0; words],
            shift: 64 - words.trailing_zeros(),
            counts: HashMap::new(),
        }
    }

    fn probe(&self, (a, b): (usize, usize)) -> (usize, u64) {
        let h = ((a as u64) << 32 ^ b as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        let mask = 1u64 << ((h >> 20) & 63) | 1u64 << ((h >> 26) & 63);
        ((h >> self.shift) as usize, mask)
    }

    fn maybe_removed(&self, pair: (usize, usize)) -> bool {
        let (word, mask) = self.probe(pair);
        self.removed[word] & mask == mask
    }

    fn mark_removed(&mut self, pair: (usize, usize)) {
        let (word, mask) = self.probe(pair);
        self.removed[word] |= mask;
    }

    /// Every pair in `counts` is also marked in the filter, so the map is
    /// only consulted on a filter hit.
    fn flips(&self, pair: (usize, usize)) -> usize {
        if self.maybe_removed(pair) {
            self.counts.get(&pair).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// Marks `pair` frozen at `limit` flips; true the first time only.
    fn freeze(&mut self, pair: (usize, usize), limit: usize) -> bool {
        self.mark_removed(pair);
        let count = self.counts.entry(pair).or_insert(0);
        if *count == limit {
            *count += 1;
            true
        } else {
            false
        }
    }

    fn record_flip(&mut self, removed: (usize, usize), created: (usize, usize)) {
        if self.maybe_removed(removed) {
            if let Some(count) = self.counts.get_mut(&removed) {
                *count += 1;
            }
        } else {
            self.mark_removed(removed);
        }
        if self.maybe_removed(created) {
            self.counts.entry(created).or_insert(1);
        }
    }
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Flips edges until a full pass over the triangle pool makes no flips, or
/// until `limits.max_passes` passes have run.
///
/// Within a pass, the two triangles produced by a flip are re-examined
/// straight away, before the scan moves on. Their outer edges are the only
/// ones a flip can make illegal, and checking them while they are still in
/// cache keeps large meshes fast. A pass that makes no flips has checked
/// every interior edge, so the result is the same as with plain passes.
pub fn legalize(tri: &mut Triangulation, limits: FlipLimits) -> FlipStats {
    let mut stats = FlipStats::default();
    let points = &tri.points;
    let tris = &mut tri.triangles;

    let mut ledger = FlipLedger::new(tris.len());
    let mut stack: Vec<usize> = Vec::new();
    let mut stacked = vec![false; tris.len()];

    while stats.passes < limits.max_passes {
        stats.passes += 1;
        let mut flips = 0;

        for start in 0..tris.len() {
            stack.push(start);
            stacked[start] = true;
            while let Some(t) = stack.pop() {
                stacked[t] = false;
                for e in 0..3 {
                    let Some(u) = tris[t].nbr(e) else { continue };
                    let (p0, p1) = tris[t].edge(e);
                    let Some(eb) = tris[u].edge_index(p1, p0) else { continue };
                    let (oa, ob) = (tris[t].opposite(e), tris[u].opposite(eb));
                    if !flip_wanted(points, &tris[t], e, ob) {
                        continue;
                    }

                    let key = pair(p0, p1);
                    if ledger.flips(key) >= limits.max_flips_per_pair {
                        if ledger.freeze(key, limits.max_flips_per_pair) {
                            stats.pairs_hit_limit += 1;
                        }
                        continue;
                    }
                    ledger.record_flip(key, pair(oa, ob));

                    flip_unchecked(points, tris, t, u, e, eb);
                    flips += 1;
                    for x in [u, t] {
                        if !stacked[x] {
                            stacked[x] = true;
                            stack.push(x);
                        }
                    }
                    // Triangle `t` has new edges; re-examine it from the stack.
                    break;
                }
            }
        }

        stats.flips_total += flips;
        if flips == 0 {
            break;
        }
    }

    tri.refresh_hull_links();
    stats
}
