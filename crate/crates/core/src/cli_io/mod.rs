//! File formats, generators, the timed pipeline, the benchmark harness and
//! SVG rendering used by the `shull` command line tool.

pub mod bench;
pub mod formats;
pub mod generate;
pub mod pipeline;
pub mod svg;

pub use bench::{bench, BenchReport, BenchRow};
pub use formats::{
    read_mesh, read_mesh_file, read_points, read_points_file, write_mesh, write_mesh_file, write_points,
    write_points_file, MeshFile, PointSet,
};
pub use generate::{generate, PointKind};
pub use pipeline::{dedup_points, run_pipeline, PipelineOptions, PipelineOutput, Timings};
pub use svg::{render_mesh, render_seed, render_stage, render_sweep, sweep_snapshot, write_svg, Stage, SweepSnapshot};
