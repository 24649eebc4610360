use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use shull::cli_io::{
    bench, dedup_points, generate, read_mesh_file, read_points_file, render_stage, run_pipeline, write_mesh_file,
    write_points_file, write_svg, MeshFile, PipelineOptions, PointKind, PointSet, Stage,
};
use shull::oracle::audit;
use shull::Error;

#[derive(Parser)]
#[command(name = "shull", version, about = "Delaunay triangulation by radial sweep hull")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Triangulate a point file and write a mesh file.
    Triangulate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Also write an SVG picture of the chosen stage.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// seed, final or stepN (the N-th point inserted after the seed).
        #[arg(long, default_value = "final")]
        stage: Stage,
        /// Drop exact duplicate points instead of failing.
        #[arg(long)]
        dedup: bool,
        /// Stop after the sweep and write the non-overlapping mesh.
        #[arg(long)]
        no_flip: bool,
    },
    /// Audit a mesh file against the point file it was built from.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        mesh: PathBuf,
    },
    /// Write a synthetic point set.
    Gen {
        #[arg(long)]
        kind: PointKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: PathBuf,
    },
    /// Time the pipeline on uniform random sets.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000,100000,1000000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure ready to print: the error code plus a message that already
/// names input lines where that helps.
struct Failure {
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure {
            code: err.code(),
            message: err.to_string(),
        }
    }
}

/// Rewrites point indices in `err` into input line numbers. `source` maps
/// the indices seen by the library back to positions in `input`.
fn with_lines(err: Error, input: &PointSet, source: &[usize]) -> Failure {
    let line = |i: usize| {
        source
            .get(i)
            .and_then(|&s| input.line_of(s))
            .map_or_else(|| "?".to_string(), |l| l.to_string())
    };
    let message = match &err {
        Error::DuplicatePoints { first, second } => {
            format!("{err} (input lines {} and {})", line(*first), line(*second))
        }
        Error::NonFinite(i) | Error::NoVisibleEdge(i) => format!("{err} (input line {})", line(*i)),
        _ => err.to_string(),
    };
    Failure {
        code: err.code(),
        message,
    }
}

fn triangulate(
    input: PathBuf,
    output: PathBuf,
    svg: Option<PathBuf>,
    stage: Stage,
    dedup: bool,
    no_flip: bool,
) -> Result<(), Failure> {
    let set = read_points_file(&input)?;
    let (points, source) = if dedup {
        dedup_points(&set.points)
    } else {
        (set.points.clone(), (0..set.points.len()).collect())
    };
    let options = PipelineOptions {
        flip: !no_flip,
        ..Default::default()
    };
    let out = run_pipeline(&points, options).map_err(|e| with_lines(e, &set, &source))?;
    write_mesh_file(&output, &MeshFile::from_triangulation(&out.triangulation))?;
    if let Some(path) = svg {
        let picture = render_stage(&points, stage, !no_flip).map_err(|e| with_lines(e, &set, &source))?;
        write_svg(&path, &picture)?;
    }
    let t = &out.timings;
    println!(
        "{} points, {} triangles, hull {}; build {:.6}s, flip {:.6}s ({} flips in {} passes)",
        out.triangulation.points().len(),
        out.triangulation.len(),
        out.triangulation.hull().len(),
        t.build.as_secs_f64(),
        t.flip.as_secs_f64(),
        out.stats.flips_total,
        out.stats.passes,
    );
    if out.stats.pairs_hit_limit > 0 {
        eprintln!(
            "warning: {} edge pairs hit the flip limit; the mesh may not be Delaunay",
            out.stats.pairs_hit_limit
        );
    }
    Ok(())
}

fn verify(input: PathBuf, mesh: PathBuf) -> Result<(), Failure> {
    let set = read_points_file(&input)?;
    let mesh = read_mesh_file(&mesh)?;
    let same_points = set.points.len() == mesh.points.len()
        && set
            .points
            .iter()
            .zip(&mesh.points)
            .all(|(a, b)| a.x.to_bits() == b.x.to_bits() && a.y.to_bits() == b.y.to_bits());
    if !same_points {
        return Err(Failure {
            code: "PointMismatch",
            message: "mesh points differ from the input points".to_string(),
        });
    }
    let tri = mesh.into_triangulation()?;
    let report = audit(&tri);
    println!("{}", report.summary());
    if report.is_clean() {
        Ok(())
    } else {
        Err(Failure {
            code: "AuditFailed",
            message: format!(
                "mesh failed the audit ({} empty-circle violations)",
                report.delaunay_violations.len()
            ),
        })
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Triangulate {
            input,
            output,
            svg,
            stage,
            dedup,
            no_flip,
        } => triangulate(input, output, svg, stage, dedup, no_flip),
        Command::Verify { input, mesh } => verify(input, mesh),
        Command::Gen { kind, n, seed, output } => {
            if n == 0 {
                return Err(Error::TooFewPoints(0).into());
            }
            Ok(write_points_file(&output, &generate(kind, n, seed))?)
        }
        Command::Bench { sizes, repeats, seed } => {
            if sizes.is_empty() {
                return Err(Failure {
                    code: "InvalidArgument",
                    message: "--sizes must list at least one size".to_string(),
                });
            }
            let report = bench(&sizes, repeats, seed)?;
            print!("{}", report.to_table());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error[{}]: {}", f.code, f.message);
            ExitCode::FAILURE
        }
    }
}
