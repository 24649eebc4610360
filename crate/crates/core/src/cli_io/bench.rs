//! Timing harness over uniform random inputs of increasing size.

use std::fmt::Write as _;
use std::time::Duration;

use super::generate::{generate, PointKind};
use super::pipeline::{run_pipeline, PipelineOptions};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    /// Median construction time in seconds (seeding, sorting, sweep).
    pub build_secs: f64,
    /// Median flipping time in seconds.
    pub flip_secs: f64,
    /// Median of the per-run totals, in seconds.
    pub total_secs: f64,
    pub triangles: usize,
    pub flip_passes: usize,
    /// Whether every repeat produced the same triangle count.
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_unstable_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

/// Triangulates uniform random sets of each size `repeats` times and keeps
/// the median timings. Runs are strictly sequential.
pub fn bench(sizes: &[usize], repeats: usize, seed: u64) -> Result<BenchReport> {
    let repeats = repeats.max(1);
    let mut report = BenchReport::default();
    for &n in sizes {
        let points = generate(PointKind::Uniform, n, seed);
        let mut build = Vec::with_capacity(repeats);
        let mut flip = Vec::with_capacity(repeats);
        let mut total = Vec::with_capacity(repeats);
        let mut counts = Vec::with_capacity(repeats);
        let mut passes = 0;
        for _ in 0..repeats {
            let out = run_pipeline(&points, PipelineOptions::default())?;
            build.push(out.timings.build.as_secs_f64());
            flip.push(out.timings.flip.as_secs_f64());
            total.push(out.timings.total().as_secs_f64());
            counts.push(out.triangulation.len());
            passes = out.stats.passes;
        }
        report.rows.push(BenchRow {
            n,
            build_secs: median(build),
            flip_secs: median(flip),
            total_secs: median(total),
            triangles: counts[0],
            flip_passes: passes,
            consistent: counts.iter().all(|&c| c == counts[0]),
        });
    }
    Ok(report)
}

impl BenchReport {
    pub fn total(&self, n: usize) -> Option<Duration> {
        self.rows
            .iter()
            .find(|r| r.n == n)
            .map(|r| Duration::from_secs_f64(r.total_secs))
    }

    /// Aligned text table, one row per size.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# uniform random points; timings are medians and include sorting, exclude file I/O");
        let _ = writeln!(
            out,
            "{:>10}  {:>12}  {:>12}  {:>12}  {:>10}  {:>6}",
            "points", "build s", "flip s", "total s", "triangles", "passes"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>10}  {:>12.6}  {:>12.6}  {:>12.6}  {:>10}  {:>6}",
                r.n, r.build_secs, r.flip_secs, r.total_secs, r.triangles, r.flip_passes
            );
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,build_secs,flip_secs,total_secs,triangles,flip_passes\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{:.9},{:.9},{:.9},{},{}",
                r.n, r.build_secs, r.flip_secs, r.total_secs, r.triangles, r.flip_passes
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_odd_and_even() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn small_bench_rows() {
        let report = bench(&[100, 1000], 3, 5).unwrap();
        assert_eq!(report.rows.len(), 2);
        for r in &report.rows {
            assert!(r.consistent);
            assert!(r.total_secs > 0.0);
        }
        assert_eq!(report.to_table().lines().count(), 4);
        assert_eq!(report.to_csv().lines().count(), 3);
    }
}
