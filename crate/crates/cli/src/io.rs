//! Plain-text instance formats.
//!
//! Polygon: a vertex count, then one `x y` line per vertex in
//! counter-clockwise order. Triangulation: one `i j` line per diagonal.
//! Graph: a vertex count, then one `i j` line per chord; the boundary cycle
//! is implicit. Blank lines and `#` comments are ignored.

use crate::CliError;
use compat_core::dp::AdjacencyMatrix;
use compat_core::{IndexPair, Point, Polygon};
use std::fs;
use std::path::Path;

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Non-empty lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn ints<T: std::str::FromStr>(line: usize, s: &str, want: usize) -> Result<Vec<T>, CliError> {
    let parsed: Result<Vec<T>, _> = s.split_whitespace().map(str::parse).collect();
    match parsed {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(CliError::Invalid(format!("line {line}: expected {want} integer(s), got {s:?}"))),
    }
}

pub fn parse_polygon(text: &str) -> Result<Polygon, CliError> {
    let mut it = lines(text);
    let (first, header) = it.next().ok_or_else(|| CliError::Invalid("line 1: missing vertex count".into()))?;
    let n = ints::<usize>(first, header, 1)?[0];
    let mut points = Vec::with_capacity(n);
    let mut last = first;
    for (line, s) in it {
        if points.len() == n {
            return Err(CliError::Invalid(format!("line {line}: more than {n} vertices")));
        }
        let xy = ints::<i64>(line, s, 2)?;
        points.push(Point::new(xy[0], xy[1]));
        last = line;
    }
    if points.len() != n {
        return Err(CliError::Invalid(format!("line {last}: expected {n} vertices, found {}", points.len())));
    }
    Polygon::validate(points).map_err(|e| CliError::Invalid(e.to_string()))
}

pub fn format_polygon(p: &Polygon) -> String {
    let mut out = format!("{}\n", p.len());
    for v in p.vertices() {
        out.push_str(&format!("{} {}\n", v.x, v.y));
    }
    out
}

pub fn parse_pairs<'a>(it: impl Iterator<Item = (usize, &'a str)>, n: usize) -> Result<Vec<IndexPair>, CliError> {
    it.map(|(line, s)| {
        let ij = ints::<usize>(line, s, 2)?;
        if ij[0] >= n || ij[1] >= n || ij[0] == ij[1] {
            return Err(CliError::Invalid(format!("line {line}: bad pair {} {} for n = {n}", ij[0], ij[1])));
        }
        Ok(IndexPair::new(ij[0], ij[1]))
    })
    .collect()
}

pub fn parse_diagonals(text: &str, n: usize) -> Result<Vec<IndexPair>, CliError> {
    parse_pairs(lines(text), n)
}

pub fn parse_graph(text: &str) -> Result<AdjacencyMatrix, CliError> {
    let mut it = lines(text);
    let (first, header) = it.next().ok_or_else(|| CliError::Invalid("line 1: missing vertex count".into()))?;
    let n = ints::<usize>(first, header, 1)?[0];
    let chords = parse_pairs(it, n)?;
    AdjacencyMatrix::from_diagonals(n, &chords).map_err(|e| CliError::Invalid(e.to_string()))
}

pub fn format_graph(a: &AdjacencyMatrix) -> String {
    let mut out = format!("{}\n", a.len());
    out.push_str(&compat_core::triangulation::format_diagonals(&a.diagonals()));
    out
}
