//! Deterministic point-set generators.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::geometry::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointKind {
    /// Uniform in the unit square.
    Uniform,
    /// Uniform in the unit disk.
    Disk,
    /// Evenly spaced on the unit circle, with a random phase. Every point is
    /// cocircular with every other.
    Circle,
    /// Integer lattice, filled row by row, `ceil(sqrt(n))` columns wide.
    Grid,
    /// Exactly collinear points on the line `y = 2x`.
    Collinear,
    /// Gaussian clusters around uniformly placed centres.
    Clustered,
}

impl PointKind {
    pub const ALL: [PointKind; 6] = [
        PointKind::Uniform,
        PointKind::Disk,
        PointKind::Circle,
        PointKind::Grid,
        PointKind::Collinear,
        PointKind::Clustered,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PointKind::Uniform => "uniform",
            PointKind::Disk => "disk",
            PointKind::Circle => "circle",
            PointKind::Grid => "grid",
            PointKind::Collinear => "collinear",
            PointKind::Clustered => "clustered",
        }
    }
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PointKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PointKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown point kind {s:?}"))
    }
}

/// `n` points of the given kind. The same `(kind, n, seed)` always yields
/// the same points.
pub fn generate(kind: PointKind, n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        PointKind::Uniform => (0..n)
            .map(|_| Point::new(rng.random(), rng.random()))
            .collect(),
        PointKind::Disk => (0..n)
            .map(|_| {
                let r = rng.random::<f64>().sqrt();
                let a = rng.random::<f64>() * TAU;
                Point::new(r * a.cos(), r * a.sin())
            })
            .collect(),
        PointKind::Circle => {
            let phase = rng.random::<f64>() * TAU;
            (0..n)
                .map(|i| {
                    let a = phase + i as f64 * TAU / n as f64;
                    Point::new(a.cos(), a.sin())
                })
                .collect()
        }
        PointKind::Grid => {
            let side = (n as f64).sqrt().ceil().max(1.0) as usize;
            (0..n)
                .map(|i| Point::new((i % side) as f64, (i / side) as f64))
                .collect()
        }
        PointKind::Collinear => (0..n)
            .map(|i| {
                // Distinct by construction, jittered along the line.
                let t = (4 * i + rng.random_range(0..4)) as f64;
                Point::new(t, 2.0 * t)
            })
            .collect(),
        PointKind::Clustered => {
            let clusters = (n / 100).max(1);
            let centers: Vec<Point> = (0..clusters)
                .map(|_| Point::new(rng.random(), rng.random()))
                .collect();
            let spread = Normal::new(0.0, 0.02).unwrap();
            (0..n)
                .map(|i| {
                    let c = centers[i % clusters];
                    Point::new(c.x + spread.sample(&mut rng), c.y + spread.sample(&mut rng))
                })
                .collect()
        }
    }
}
