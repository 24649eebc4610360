//! Plain-text point and mesh files.
//!
//! A point file holds one `x y` (or `x,y`) pair per line; blank lines and
//! lines starting with `#` are ignored. A mesh file starts with a header line
//! `n_points n_triangles hull_size`, followed by the points, then one
//! counter-clockwise triangle per line as three zero-based indices, then the
//! hull ring as a single line of indices.
//!
//! Coordinates are written with 17 significant digits, which is enough for
//! every `f64` to read back bit-identically.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::sweephull::Triangulation;

/// Points read from a file, with the 1-based line each came from.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PointSet {
    pub points: Vec<Point>,
    pub lines: Vec<usize>,
}

impl PointSet {
    /// Line number of point `index`, for error messages.
    pub fn line_of(&self, index: usize) -> Option<usize> {
        self.lines.get(index).copied()
    }
}

/// Contents of a mesh file.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MeshFile {
    pub points: Vec<Point>,
    pub triangles: Vec<[usize; 3]>,
    pub hull: Vec<usize>,
}

impl MeshFile {
    pub fn from_triangulation(tri: &Triangulation) -> Self {
        MeshFile {
            points: tri.points().to_vec(),
            triangles: tri.triangle_indices(),
            hull: tri.hull().vertices().to_vec(),
        }
    }

    pub fn into_triangulation(self) -> Result<Triangulation> {
        Triangulation::from_parts(self.points, &self.triangles, self.hull)
    }
}

fn fields(line: &str) -> impl Iterator<Item = &str> {
    line.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_point(text: &str, line: usize) -> Result<Point> {
    let mut it = fields(text);
    let mut coord = |name: &str| -> Result<f64> {
        let raw = it
            .next()
            .ok_or_else(|| parse_err(line, format!("missing {name} coordinate")))?;
        let value: f64 = raw
            .parse()
            .map_err(|_| parse_err(line, format!("invalid number {raw:?}")))?;
        if !value.is_finite() {
            return Err(parse_err(line, format!("non-finite coordinate {raw:?}")));
        }
        Ok(value)
    };
    let x = coord("x")?;
    let y = coord("y")?;
    if let Some(extra) = it.next() {
        return Err(parse_err(line, format!("unexpected field {extra:?}")));
    }
    Ok(Point::new(x, y))
}

fn parse_indices(text: &str, line: usize) -> Result<Vec<usize>> {
    fields(text)
        .map(|raw| {
            raw.parse()
                .map_err(|_| parse_err(line, format!("invalid index {raw:?}")))
        })
        .collect()
}

/// Lines that carry data, numbered from 1.
fn content_lines(reader: impl BufRead) -> impl Iterator<Item = Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .map(|(i, line)| line.map(|l| (i + 1, l)).map_err(Error::from))
        .filter(|r| match r {
            Ok((_, l)) => {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            }
            Err(_) => true,
        })
}

pub fn read_points(reader: impl Read) -> Result<PointSet> {
    let mut set = PointSet::default();
    for entry in content_lines(BufReader::new(reader)) {
        let (line, text) = entry?;
        set.points.push(parse_point(&text, line)?);
        set.lines.push(line);
    }
    Ok(set)
}

pub fn write_points(mut writer: impl Write, points: &[Point]) -> Result<()> {
    for p in points {
        writeln!(writer, "{:.16e} {:.16e}", p.x, p.y)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_mesh(reader: impl Read) -> Result<MeshFile> {
    let mut lines = content_lines(BufReader::new(reader));
    let mut next_line = |what: &str| -> Result<(usize, String)> {
        lines
            .next()
            .unwrap_or_else(|| Err(parse_err(0, format!("unexpected end of file, expected {what}"))))
    };

    let (line, header) = next_line("header")?;
    let counts = parse_indices(&header, line)?;
    let [n_points, n_triangles, hull_size] = counts[..] else {
        return Err(parse_err(line, "header must be `n_points n_triangles hull_size`"));
    };

    let mut mesh = MeshFile::default();
    for _ in 0..n_points {
        let (line, text) = next_line("a point")?;
        mesh.points.push(parse_point(&text, line)?);
    }
    for _ in 0..n_triangles {
        let (line, text) = next_line("a triangle")?;
        let idx = parse_indices(&text, line)?;
        let [a, b, c] = idx[..] else {
            return Err(parse_err(line, "a triangle needs exactly three indices"));
        };
        mesh.triangles.push([a, b, c]);
    }
    if hull_size > 0 {
        let (line, text) = next_line("the hull ring")?;
        mesh.hull = parse_indices(&text, line)?;
        if mesh.hull.len() != hull_size {
            return Err(parse_err(
                line,
                format!("hull has {} indices, header says {hull_size}", mesh.hull.len()),
            ));
        }
    }
    let len = mesh.points.len();
    for &index in mesh.triangles.iter().flatten().chain(&mesh.hull) {
        if index >= len {
            return Err(Error::IndexOutOfRange { index, len });
        }
    }
    Ok(mesh)
}

pub fn write_mesh(mut writer: impl Write, mesh: &MeshFile) -> Result<()> {
    writeln!(writer, "{} {} {}", mesh.points.len(), mesh.triangles.len(), mesh.hull.len())?;
    write_points(&mut writer, &mesh.points)?;
    for t in &mesh.triangles {
        writeln!(writer, "{} {} {}", t[0], t[1], t[2])?;
    }
    let ring: Vec<String> = mesh.hull.iter().map(|i| i.to_string()).collect();
    writeln!(writer, "{}", ring.join(" "))?;
    writer.flush()?;
    Ok(())
}

pub fn read_points_file(path: impl AsRef<Path>) -> Result<PointSet> {
    read_points(File::open(path)?)
}

pub fn write_points_file(path: impl AsRef<Path>, points: &[Point]) -> Result<()> {
    let file = File::create(path).map_err(Error::FileWrite)?;
    write_points(BufWriter::new(file), points).map_err(Error::into_write)
}

pub fn read_mesh_file(path: impl AsRef<Path>) -> Result<MeshFile> {
    read_mesh(File::open(path)?)
}

pub fn write_mesh_file(path: impl AsRef<Path>, mesh: &MeshFile) -> Result<()> {
    let file = File::create(path).map_err(Error::FileWrite)?;
    write_mesh(BufWriter::new(file), mesh).map_err(Error::into_write)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reads_both_separators_and_comments() {
        let text = "# header\n1 2\n\n3.5,-4\n  5e-1\t6  \n";
        let set = read_points(text.as_bytes()).unwrap();
        assert_eq!(
            set.points,
            vec![Point::new(1., 2.), Point::new(3.5, -4.), Point::new(0.5, 6.)]
        );
        assert_eq!(set.lines, vec![2, 4, 5]);
    }

    #[test]
    fn rejects_bad_lines() {
        for (text, line) in [("1 2\n3\n", 2), ("1 x\n", 1), ("1 2 3\n", 1), ("inf 0\n", 1)] {
            match read_points(text.as_bytes()) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn mesh_round_trip() {
        let mesh = MeshFile {
            points: vec![Point::new(0., 0.), Point::new(1., 0.), Point::new(1., 1.), Point::new(0.1, 0.9)],
            triangles: vec![[0, 1, 2], [0, 2, 3]],
            hull: vec![0, 1, 2, 3],
        };
        let mut buf = Vec::new();
        write_mesh(&mut buf, &mesh).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("4 2 4\n"));
        assert_eq!(read_mesh(&buf[..]).unwrap(), mesh);
    }

    #[test]
    fn mesh_rejects_out_of_range_and_truncation() {
        let text = "3 1 3\n0 0\n1 0\n0 1\n0 1 5\n0 1 2\n";
        assert!(matches!(read_mesh(text.as_bytes()), Err(Error::IndexOutOfRange { index: 5, len: 3 })));
        let text = "3 1 3\n0 0\n1 0\n";
        assert!(matches!(read_mesh(text.as_bytes()), Err(Error::Parse { .. })));
    }

    proptest! {
        #[test]
        fn point_file_round_trips_exactly(coords in prop::collection::vec((any::<f64>(), any::<f64>()), 0..50)) {
            let points: Vec<Point> = coords
                .into_iter()
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(Point::from)
                .collect();
            let mut buf = Vec::new();
            write_points(&mut buf, &points).unwrap();
            let back = read_points(&buf[..]).unwrap().points;
            prop_assert_eq!(back.len(), points.len());
            for (a, b) in back.iter().zip(&points) {
                prop_assert_eq!(a.x.to_bits(), b.x.to_bits());
                prop_assert_eq!(a.y.to_bits(), b.y.to_bits());
            }
        }
    }
}
