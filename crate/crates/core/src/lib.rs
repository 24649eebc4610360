//! Planar Delaunay triangulation by radial sweep-hull construction.
//!
//! Points are sorted by distance from the circumcenter of a small seed
//! triangle and inserted one at a time into a growing convex hull, each new
//! point being joined to every hull edge it can see. The resulting
//! non-overlapping triangulation is then made Delaunay by repeated edge
//! flipping.
//!
//! ```
//! use shull::{triangulate, Point};
//!
//! let points = vec![
//!     Point::new(0.0, 0.0),
//!     Point::new(1.0, 0.0),
//!     Point::new(1.0, 1.0),
//!     Point::new(0.0, 1.0),
//!     Point::new(0.4, 0.6),
//! ];
//! let (mesh, _stats) = triangulate(&points).unwrap();
//! assert_eq!(mesh.len(), 4);
//! assert_eq!(mesh.hull().len(), 4);
//! ```

pub mod cli_io;
pub mod error;
pub mod flipping;
pub mod geometry;
pub mod oracle;
pub mod seeding;
pub mod sweephull;

pub use error::{Error, Result};
pub use flipping::{flip_edge, legalize, should_flip, FlipLimits, FlipStats};
pub use geometry::{
    circumcircle, dist_sq, in_circumcircle, orientation, CirclePosition, Circumcircle, Orientation, Point,
};
pub use seeding::{build_seed, find_min_circumcircle_partner, radial_sort, select_seed, SeedTriangle, SweepOrder};
pub use sweephull::{triangulate_nonoverlapping, HullRing, SweepHull, Triangle, Triangulation, Visibility};

/// Delaunay triangulation of `points` with default flip limits.
pub fn triangulate(points: &[Point]) -> Result<(Triangulation, FlipStats)> {
    let (mut sweep, labels) = SweepHull::new_in_sweep_order(points)?;
    sweep.run()?;
    let mut tri = sweep.finish();
    let stats = legalize(&mut tri, FlipLimits::for_point_count(points.len()));
    tri.restore_labels(&labels, points.to_vec());
    Ok((tri, stats))
}
