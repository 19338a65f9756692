//! Text formats: point sets, graph edge lists and flat key=value reports.
//!
//! Points file:
//!
//! ```text
//! tripts v1 3
//! # comments and blank lines are ignored
//! 0/1 0/1
//! 2/1 1/3
//! -7/2 5/1
//! ```
//!
//! Coordinates are written in lowest terms, always with a denominator, so
//! serializing a parsed canonical file reproduces it byte for byte.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::PointSet;
use crate::graph::{Edge, Flavor, Graph, TriGraph};
use crate::scalar::ExactScalar;

pub const POINTS_MAGIC: &str = "tripts v1";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_rational(tok: &str, line: usize) -> Result<BigRational> {
    let (num, den) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| parse_err(line, format!("bad numerator in {tok:?}")))?;
    let den = BigInt::from_str(den).map_err(|_| parse_err(line, format!("bad denominator in {tok:?}")))?;
    if den.is_zero() {
        return Err(parse_err(line, format!("zero denominator in {tok:?}")));
    }
    Ok(BigRational::new(num, den))
}

fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Strips a trailing `#` comment and surrounding whitespace.
fn content(line: &str) -> &str {
    line.split_once('#').map_or(line, |(c, _)| c).trim()
}

/// Parses a points file. Duplicate points are rejected; general position
/// is checked separately (see [`PointSet::general_position`]).
pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content(l)))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let count = header
        .strip_prefix(POINTS_MAGIC)
        .map(str::trim)
        .ok_or_else(|| parse_err(hline, format!("expected header \"{POINTS_MAGIC} <n>\"")))?;
    let n: usize = count
        .parse()
        .map_err(|_| parse_err(hline, format!("bad point count {count:?}")))?;
    let mut coords = Vec::with_capacity(n);
    let mut last = hline;
    for (lineno, l) in lines {
        last = lineno;
        let mut toks = l.split_whitespace();
        let (Some(x), Some(y), None) = (toks.next(), toks.next(), toks.next()) else {
            return Err(parse_err(lineno, "expected two coordinates"));
        };
        coords.push((
            ExactScalar::from_rational(parse_rational(x, lineno)?),
            ExactScalar::from_rational(parse_rational(y, lineno)?),
        ));
    }
    if coords.len() != n {
        return Err(parse_err(
            last,
            format!("header announces {n} points, found {}", coords.len()),
        ));
    }
    PointSet::new(coords)
}

/// Serializes a point set with rational coordinates.
pub fn serialize_points(ps: &PointSet) -> Result<String> {
    let mut out = format!("{POINTS_MAGIC} {}\n", ps.len());
    for p in ps.points() {
        if !p.x.is_rational() || !p.y.is_rational() {
            return Err(Error::InvalidArgument(format!(
                "point {} has an irrational coordinate",
                p.id
            )));
        }
        writeln!(
            out,
            "{} {}",
            format_rational(&p.x.rational_part().to_big()),
            format_rational(&p.y.rational_part().to_big())
        )
        .expect("writing to a String");
    }
    Ok(out)
}

/// Flavor header line followed by sorted `u v` lines.
pub fn export_graph(g: &TriGraph) -> String {
    let mut out = format!("{}\n", g.flavor());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

/// Inverse of [`export_graph`]; the vertex count is the largest id + 1
/// unless `n` is given.
pub fn parse_graph(text: &str, n: Option<usize>) -> Result<(Flavor, Graph)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content(l)))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing flavor header"))?;
    let flavor = Flavor::from_str(header).map_err(|_| parse_err(hline, format!("unknown flavor {header:?}")))?;
    let mut edges: Vec<Edge> = Vec::new();
    for (lineno, l) in lines {
        let mut toks = l.split_whitespace().map(usize::from_str);
        let (Some(Ok(u)), Some(Ok(v)), None) = (toks.next(), toks.next(), toks.next()) else {
            return Err(parse_err(lineno, "expected two vertex ids"));
        };
        if u == v {
            return Err(parse_err(lineno, "self loop"));
        }
        edges.push((u, v));
    }
    let max_id = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = n.unwrap_or(max_id);
    if max_id > n {
        return Err(parse_err(hline, format!("vertex id out of range for n = {n}")));
    }
    Ok((flavor, Graph::from_edges(n, edges)))
}

/// `key=value` lines.
pub fn format_kv<'a>(pairs: impl IntoIterator<Item = (&'a str, String)>) -> String {
    let mut out = String::new();
    for (k, v) in pairs {
        writeln!(out, "{k}={v}").expect("writing to a String");
    }
    out
}

/// Parses `key=value` lines, skipping blanks and `#` comments.
pub fn parse_kv(text: &str) -> Result<Vec<(String, String)>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content(l)))
        .filter(|(_, l)| !l.is_empty())
        .map(|(lineno, l)| {
            l.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| parse_err(lineno, "expected key=value"))
        })
        .collect()
}
