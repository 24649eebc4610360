//! SVG snapshots of the three construction stages: the seed triangle with
//! its circumcircle, a single sweep insertion, and the finished mesh.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use super::pipeline::{run_pipeline, PipelineOptions};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::seeding::{build_seed, SeedTriangle};
use crate::sweephull::{SweepHull, Triangulation};

const CANVAS: f64 = 800.0;
const MARGIN: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Seed,
    /// The `k`-th insertion after the seed triangle, counting from 1.
    Step(usize),
    Final,
}

impl FromStr for Stage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "seed" => Ok(Stage::Seed),
            "final" => Ok(Stage::Final),
            _ => s
                .strip_prefix("step")
                .and_then(|k| k.parse().ok())
                .filter(|&k| k >= 1)
                .map(Stage::Step)
                .ok_or_else(|| Error::InvalidStage(s.to_string())),
        }
    }
}

/// Triangles just before and just after one sweep insertion.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepSnapshot {
    /// Triangles untouched by the insertion.
    pub existing: Vec<[usize; 3]>,
    /// Triangles created (or rewritten, for an edge split) by it.
    pub added: Vec<[usize; 3]>,
}

/// Runs the sweep up to and including insertion `step` (1-based, after the
/// seed triangle).
pub fn sweep_snapshot(points: &[Point], step: usize) -> Result<SweepSnapshot> {
    if step == 0 || step + 3 > points.len() {
        return Err(Error::InvalidStage(format!("step{step}")));
    }
    let mut sweep = SweepHull::new(points.to_vec())?;
    for _ in 0..step {
        sweep.step()?;
    }
    let added = sweep.last_added();
    let mut snap = SweepSnapshot::default();
    for (i, t) in sweep.triangles().iter().enumerate() {
        if added.contains(&i) {
            snap.added.push(t.v);
        } else {
            snap.existing.push(t.v);
        }
    }
    Ok(snap)
}

/// Maps point coordinates into the canvas, y pointing up.
struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn fit(points: &[Point]) -> Self {
        let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
        let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            min_x = min_x.min(p.x);
            min_y = min_y.min(p.y);
            max_x = max_x.max(p.x);
            max_y = max_y.max(p.y);
        }
        let span = (max_x - min_x).max(max_y - min_y);
        let scale = if span > 0.0 { (CANVAS - 2.0 * MARGIN) / span } else { 1.0 };
        Frame { min_x, max_y, scale }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (
            MARGIN + (p.x - self.min_x) * self.scale,
            MARGIN + (self.max_y - p.y) * self.scale,
        )
    }
}

struct Canvas {
    frame: Frame,
    body: String,
}

impl Canvas {
    fn new(points: &[Point], title: &str) -> Self {
        let mut body = String::new();
        let _ = writeln!(
            body,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
        );
        let _ = writeln!(body, "<title>{title}</title>");
        let _ = writeln!(body, r#"<rect width="100%" height="100%" fill="white"/>"#);
        Canvas {
            frame: Frame::fit(points),
            body,
        }
    }

    fn triangle(&mut self, points: &[Point], v: [usize; 3], class: &str, stroke: &str, fill: &str) {
        let coords: Vec<String> = v
            .iter()
            .map(|&i| {
                let (x, y) = self.frame.map(points[i]);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            self.body,
            r#"<polygon class="{class}" points="{}" fill="{fill}" stroke="{stroke}" stroke-width="1"/>"#,
            coords.join(" ")
        );
    }

    fn points(&mut self, points: &[Point]) {
        for &p in points {
            let (x, y) = self.frame.map(p);
            let _ = writeln!(
                self.body,
                r#"<rect class="point" x="{:.3}" y="{:.3}" width="3" height="3" fill="black"/>"#,
                x - 1.5,
                y - 1.5
            );
        }
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

/// The point set, the seed triangle in red and its circumcircle.
pub fn render_seed(points: &[Point], seed: &SeedTriangle) -> String {
    let mut canvas = Canvas::new(points, "seed triangle and circumcircle");
    canvas.triangle(points, seed.indices(), "seed", "red", "rgba(255,0,0,0.2)");
    let (cx, cy) = canvas.frame.map(seed.circumcenter);
    let r = seed.radius_sq.sqrt() * canvas.frame.scale;
    let _ = writeln!(
        canvas.body,
        r#"<circle class="circumcircle" cx="{cx:.3}" cy="{cy:.3}" r="{r:.3}" fill="none" stroke="red" stroke-dasharray="4 3"/>"#
    );
    canvas.points(points);
    canvas.finish()
}

/// Existing triangles in blue and the triangles of the latest insertion in
/// red.
pub fn render_sweep(points: &[Point], snapshot: &SweepSnapshot) -> String {
    let mut canvas = Canvas::new(points, "sweep insertion");
    for &t in &snapshot.existing {
        canvas.triangle(points, t, "existing", "blue", "rgba(0,0,255,0.08)");
    }
    for &t in &snapshot.added {
        canvas.triangle(points, t, "added", "red", "rgba(255,0,0,0.35)");
    }
    canvas.points(points);
    canvas.finish()
}

pub fn render_mesh(tri: &Triangulation) -> String {
    let points = tri.points();
    let mut canvas = Canvas::new(points, "triangulation");
    for t in tri.triangles() {
        canvas.triangle(points, t.v, "triangle", "black", "none");
    }
    canvas.points(points);
    canvas.finish()
}

/// Computes whatever the stage needs from the raw points and renders it.
/// `flip` only affects the final stage.
pub fn render_stage(points: &[Point], stage: Stage, flip: bool) -> Result<String> {
    match stage {
        Stage::Seed => {
            let (seed, _) = build_seed(points)?;
            Ok(render_seed(points, &seed))
        }
        Stage::Step(k) => Ok(render_sweep(points, &sweep_snapshot(points, k)?)),
        Stage::Final => {
            let out = run_pipeline(points, PipelineOptions { flip, ..Default::default() })?;
            Ok(render_mesh(&out.triangulation))
        }
    }
}

pub fn write_svg(path: impl AsRef<Path>, svg: &str) -> Result<()> {
    fs::write(path, svg).map_err(Error::FileWrite)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stage_parsing() {
        assert_eq!("seed".parse::<Stage>().unwrap(), Stage::Seed);
        assert_eq!("final".parse::<Stage>().unwrap(), Stage::Final);
        assert_eq!("step12".parse::<Stage>().unwrap(), Stage::Step(12));
        for bad in ["step0", "step", "stepx", "middle"] {
            assert!(matches!(bad.parse::<Stage>(), Err(Error::InvalidStage(_))), "{bad}");
        }
    }

    #[test]
    fn snapshot_step_range() {
        let pts = [Point::new(0., 0.), Point::new(1., 0.), Point::new(0., 1.), Point::new(1., 1.)];
        assert_eq!(sweep_snapshot(&pts, 1).unwrap().added.len(), 1);
        assert!(matches!(sweep_snapshot(&pts, 2), Err(Error::InvalidStage(_))));
        assert!(matches!(sweep_snapshot(&pts, 0), Err(Error::InvalidStage(_))));
    }

    #[test]
    fn write_failure_is_file_write() {
        let err = write_svg("/nonexistent-dir/x.svg", "<svg/>").unwrap_err();
        assert_eq!(err.code(), "FileWrite");
    }
}
