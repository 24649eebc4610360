//! Browser bindings for the triangulation demo page.
//!
//! Point sets cross the boundary as flat `[x0, y0, x1, y1, ...]` arrays and
//! triangles as flat index triples, so the page needs no extra glue.

use shull::cli_io::{generate, sweep_snapshot, PointKind};
use shull::flipping::{legalize, FlipLimits};
use shull::oracle::audit;
use shull::seeding::build_seed;
use shull::sweephull::triangulate_nonoverlapping;
use shull::Point;
use wasm_bindgen::prelude::*;

fn to_points(coords: &[f64]) -> Result<Vec<Point>, String> {
    if !coords.len().is_multiple_of(2) {
        return Err("coordinate array has odd length".to_string());
    }
    Ok(coords.chunks_exact(2).map(|c| Point::new(c[0], c[1])).collect())
}

fn flatten(triangles: impl IntoIterator<Item = [usize; 3]>) -> Vec<u32> {
    triangles.into_iter().flatten().map(|i| i as u32).collect()
}

/// A finished mesh plus the numbers shown next to the canvas.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Mesh {
    triangles: Vec<u32>,
    hull: Vec<u32>,
    flips: u32,
    passes: u32,
    violations: u32,
}

#[wasm_bindgen]
impl Mesh {
    /// Flat counter-clockwise index triples.
    #[wasm_bindgen(getter)]
    pub fn triangles(&self) -> Vec<u32> {
        self.triangles.clone()
    }

    /// Hull vertices in counter-clockwise order.
    #[wasm_bindgen(getter)]
    pub fn hull(&self) -> Vec<u32> {
        self.hull.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn flips(&self) -> u32 {
        self.flips
    }

    #[wasm_bindgen(getter)]
    pub fn passes(&self) -> u32 {
        self.passes
    }

    /// Empty-circumcircle violations found by the audit.
    #[wasm_bindgen(getter)]
    pub fn violations(&self) -> u32 {
        self.violations
    }
}

/// Triangles before and after one sweep insertion.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Step {
    existing: Vec<u32>,
    added: Vec<u32>,
}

#[wasm_bindgen]
impl Step {
    #[wasm_bindgen(getter)]
    pub fn existing(&self) -> Vec<u32> {
        self.existing.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn added(&self) -> Vec<u32> {
        self.added.clone()
    }
}

fn generate_impl(kind: &str, n: u32, seed: u32) -> Result<Vec<f64>, String> {
    let kind: PointKind = kind.parse()?;
    Ok(generate(kind, n as usize, u64::from(seed))
        .into_iter()
        .flat_map(|p| [p.x, p.y])
        .collect())
}

fn triangulate_impl(coords: &[f64], flip: bool) -> Result<Mesh, String> {
    let points = to_points(coords)?;
    let mut tri = triangulate_nonoverlapping(&points).map_err(|e| e.to_string())?;
    let stats = if flip {
        legalize(&mut tri, FlipLimits::for_point_count(points.len()))
    } else {
        Default::default()
    };
    Ok(Mesh {
        triangles: flatten(tri.triangle_indices()),
        hull: tri.hull().vertices().iter().map(|&i| i as u32).collect(),
        flips: stats.flips_total as u32,
        passes: stats.passes as u32,
        violations: audit(&tri).delaunay_violations.len() as u32,
    })
}

fn sweep_step_impl(coords: &[f64], k: u32) -> Result<Step, String> {
    let points = to_points(coords)?;
    let snap = sweep_snapshot(&points, k as usize).map_err(|e| e.to_string())?;
    Ok(Step {
        existing: flatten(snap.existing),
        added: flatten(snap.added),
    })
}

fn seed_circle_impl(coords: &[f64]) -> Result<Vec<f64>, String> {
    let points = to_points(coords)?;
    let (seed, _) = build_seed(&points).map_err(|e| e.to_string())?;
    let [a, b, c] = seed.indices();
    Ok(vec![
        a as f64,
        b as f64,
        c as f64,
        seed.circumcenter.x,
        seed.circumcenter.y,
        seed.radius_sq.sqrt(),
    ])
}

/// Synthetic points of the named kind, flattened.
#[wasm_bindgen(js_name = generatePoints)]
pub fn generate_points(kind: &str, n: u32, seed: u32) -> Result<Vec<f64>, JsError> {
    generate_impl(kind, n, seed).map_err(|e| JsError::new(&e))
}

/// Sweep construction, optionally followed by edge flipping.
#[wasm_bindgen]
pub fn triangulate(coords: &[f64], flip: bool) -> Result<Mesh, JsError> {
    triangulate_impl(coords, flip).map_err(|e| JsError::new(&e))
}

/// State right after the `k`-th insertion following the seed triangle.
#[wasm_bindgen(js_name = sweepStep)]
pub fn sweep_step(coords: &[f64], k: u32) -> Result<Step, JsError> {
    sweep_step_impl(coords, k).map_err(|e| JsError::new(&e))
}

/// `[i0, i1, i2, cx, cy, r]`: the seed triangle and its circumcircle.
#[wasm_bindgen(js_name = seedCircle)]
pub fn seed_circle(coords: &[f64]) -> Result<Vec<f64>, JsError> {
    seed_circle_impl(coords).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_points_triangulate_cleanly() {
        let coords = generate_impl("uniform", 200, 1).unwrap();
        assert_eq!(coords.len(), 400);
        let mesh = triangulate_impl(&coords, true).unwrap();
        let h = mesh.hull.len();
        assert_eq!(mesh.triangles.len(), 3 * (2 * 200 - 2 - h));
        assert_eq!(mesh.violations, 0);
    }

    #[test]
    fn unflipped_mesh_has_same_size() {
        let coords = generate_impl("disk", 100, 4).unwrap();
        let flipped = triangulate_impl(&coords, true).unwrap();
        let raw = triangulate_impl(&coords, false).unwrap();
        assert_eq!(raw.triangles.len(), flipped.triangles.len());
        assert_eq!(raw.flips, 0);
    }

    #[test]
    fn step_and_seed() {
        let coords = generate_impl("uniform", 50, 2).unwrap();
        let step = sweep_step_impl(&coords, 1).unwrap();
        assert_eq!(step.existing.len(), 3);
        assert!(!step.added.is_empty());
        assert!(sweep_step_impl(&coords, 48).is_err());
        let seed = seed_circle_impl(&coords).unwrap();
        assert_eq!(seed.len(), 6);
        assert!(seed[5] > 0.0);
    }

    #[test]
    fn bad_input_is_reported() {
        assert!(generate_impl("spiral", 10, 0).is_err());
        assert!(triangulate_impl(&[0.0, 0.0, 1.0], true).is_err());
        assert!(triangulate_impl(&[0.0, 0.0, 1.0, 1.0, 2.0, 2.0], true).is_err());
    }
}
