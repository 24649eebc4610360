use std::time::{Duration, Instant};

use crate::error::Result;
use crate::flipping::{legalize, FlipLimits, FlipStats};
use crate::geometry::Point;
use crate::sweephull::SweepHull;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Run edge flipping after the sweep. Without it the output is the
    /// non-overlapping sweep triangulation.
    pub flip: bool,
    /// Drop exact duplicate points (keeping the first) instead of failing.
    pub dedup: bool,
    /// Flip limits; defaults to [`FlipLimits::for_point_count`].
    pub limits: Option<FlipLimits>,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            flip: true,
            dedup: false,
            limits: None,
        }
    }
}

/// Wall-clock time of the two stages. Construction includes seeding and
/// both radial sorts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Timings {
    pub build: Duration,
    pub flip: Duration,
}

impl Timings {
    pub fn total(&self) -> Duration {
        self.build + self.flip
    }
}

#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub triangulation: crate::sweephull::Triangulation,
    pub stats: FlipStats,
    pub timings: Timings,
    /// For each output point, its index in the input. Only differs from the
    /// identity when deduplication removed points.
    pub source_index: Vec<usize>,
}

/// Exact duplicates removed, keeping the first occurrence. Returns the kept
/// points and their input indices.
pub fn dedup_points(points: &[Point]) -> (Vec<Point>, Vec<usize>) {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_unstable_by(|&a, &b| points[a].lex_cmp(&points[b]).then(a.cmp(&b)));
    let mut keep = vec![true; points.len()];
    for pair in order.windows(2) {
        if points[pair[0]] == points[pair[1]] {
            keep[pair[1]] = false;
        }
    }
    (0..points.len())
        .filter(|&i| keep[i])
        .map(|i| (points[i], i))
        .unzip()
}

/// Seeding, sweep construction and (optionally) flipping, timed separately.
pub fn run_pipeline(points: &[Point], options: PipelineOptions) -> Result<PipelineOutput> {
    let (points, source_index) = if options.dedup {
        dedup_points(points)
    } else {
        (points.to_vec(), (0..points.len()).collect())
    };
    let n = points.len();

    let start = Instant::now();
    let (mut sweep, labels) = SweepHull::new_in_sweep_order(&points)?;
    sweep.run()?;
    let mut triangulation = sweep.finish();
    let mut build = start.elapsed();

    let start = Instant::now();
    let stats = if options.flip {
        legalize(
            &mut triangulation,
            options.limits.unwrap_or_else(|| FlipLimits::for_point_count(n)),
        )
    } else {
        FlipStats::default()
    };
    let flip = start.elapsed();

    let start = Instant::now();
    triangulation.restore_labels(&labels, points);
    build += start.elapsed();

    Ok(PipelineOutput {
        triangulation,
        stats,
        timings: Timings { build, flip },
        source_index,
    })
}
