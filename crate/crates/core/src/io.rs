//! Text formats: DIMACS-style instances and solution files.
//!
//! Instance grammar, one record per line, 1-based vertex ids:
//!
//! ```text
//! c <comment>
//! p edge <n> <m>
//! e <u> <v> <distance>
//! n <v> <weight>        (optional vertex multiplicity, multicoloring only)
//! ```
//!
//! `e v v d` self-loop lines carry the distance required between two colors
//! of the same vertex; they count toward `m` but are not part of the
//! single-coloring graph.
//!
//! Solution files hold an optional `c instance <id>` line, an `s <span>`
//! line and one `v <vertex> <color>` line per vertex in ascending order.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::error::{parse_err, Error, Result};
use crate::graph::WeightedGraph;

/// Records of an instance file, validated for ranges and counts but not yet
/// split into the single- or multicoloring view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub n: usize,
    /// Proper edges, 0-based, in file order.
    pub edges: Vec<(usize, usize, u32)>,
    /// `(vertex, distance)` from self-loop lines.
    pub loops: Vec<(usize, u32)>,
    /// `(vertex, weight)` from `n` lines.
    pub vertex_weights: Vec<(usize, u32)>,
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {tok:?}")))
}

fn vertex(tok: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let v: usize = field(tok, line, "vertex id")?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut file = InstanceFile {
        n: 0,
        edges: Vec::new(),
        loops: Vec::new(),
        vertex_weights: Vec::new(),
    };
    let mut seen = HashSet::new();
    let mut edge_lines = 0usize;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                let format: String = field(toks.next(), line, "problem format")?;
                if format != "edge" && format != "col" {
                    return Err(parse_err(line, format!("unsupported format {format:?}")));
                }
                let n: usize = field(toks.next(), line, "vertex count")?;
                let m: usize = field(toks.next(), line, "edge count")?;
                if n == 0 {
                    return Err(parse_err(line, "vertex count must be positive"));
                }
                file.n = n;
                header = Some((n, m));
            }
            "e" | "n" => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "record before problem line"))?;
                let u = vertex(toks.next(), n, line)?;
                if kind == "n" {
                    let w: u32 = field(toks.next(), line, "vertex weight")?;
                    file.vertex_weights.push((u, w));
                } else {
                    let v = vertex(toks.next(), n, line)?;
                    let d: u32 = field(toks.next(), line, "distance")?;
                    if d == 0 {
                        return Err(parse_err(line, "distance must be positive"));
                    }
                    if !seen.insert((u.min(v), u.max(v))) {
                        return Err(parse_err(line, format!("duplicate edge ({}, {})", u + 1, v + 1)));
                    }
                    edge_lines += 1;
                    if u == v {
                        file.loops.push((u, d));
                    } else {
                        file.edges.push((u, v, d));
                    }
                }
            }
            other => return Err(parse_err(line, format!("unknown record type {other:?}"))),
        }
        if let Some(extra) = toks.next() {
            return Err(parse_err(line, format!("unexpected trailing token {extra:?}")));
        }
    }

    let (_, m) = header.ok_or_else(|| parse_err(last_line.max(1), "missing problem line"))?;
    if edge_lines != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} edges, found {edge_lines}"),
        ));
    }
    Ok(file)
}

/// Parses an instance as a single-coloring graph. Vertex weights and
/// self-loop distances are ignored.
pub fn parse_bcp(text: &str) -> Result<WeightedGraph> {
    let file = parse_instance(text)?;
    WeightedGraph::new(file.n, file.edges)
}

/// Writes a graph in the instance format, edges in stored order.
pub fn write_instance(graph: &WeightedGraph) -> String {
    let mut out = String::with_capacity(16 * graph.m() + 32);
    let _ = writeln!(out, "p edge {} {}", graph.n(), graph.m());
    for e in graph.edges() {
        let _ = writeln!(out, "e {} {} {}", e.u + 1, e.v + 1, e.distance);
    }
    out
}

pub fn write_solution(coloring: &Coloring, instance_id: &str) -> String {
    let mut out = String::with_capacity(16 * coloring.len() + 32);
    if !instance_id.is_empty() {
        let _ = writeln!(out, "c instance {instance_id}");
    }
    let _ = writeln!(out, "s {}", coloring.span());
    for (v, c) in coloring.colors().iter().enumerate() {
        let _ = writeln!(out, "v {} {}", v + 1, c);
    }
    out
}

/// A parsed solution file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionFile {
    pub instance_id: Option<String>,
    pub coloring: Coloring,
}

/// Reads a solution for an instance with `n` vertices.
pub fn read_solution(text: &str, n: usize) -> Result<SolutionFile> {
    let mut instance_id = None;
    let mut span: Option<u32> = None;
    let mut colors = vec![0u32; n];
    let fmt = |line: usize, msg: String| Error::Format(format!("line {line}: {msg}"));

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None => {}
            Some("c") => {
                if toks.next() == Some("instance") {
                    instance_id = toks.next().map(str::to_owned);
                }
            }
            Some("s") => {
                if span.is_some() {
                    return Err(fmt(line, "duplicate span line".into()));
                }
                span = Some(
                    toks.next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| fmt(line, "invalid span".into()))?,
                );
            }
            Some("v") => {
                let v: usize = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| fmt(line, "invalid vertex".into()))?;
                let c: u32 = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| fmt(line, "invalid color".into()))?;
                if v == 0 || v > n {
                    return Err(fmt(line, format!("vertex {v} out of range 1..={n}")));
                }
                if c == 0 {
                    return Err(fmt(line, "colors start at 1".into()));
                }
                if colors[v - 1] != 0 {
                    return Err(fmt(line, format!("vertex {v} listed twice")));
                }
                colors[v - 1] = c;
            }
            Some(other) => return Err(fmt(line, format!("unknown record {other:?}"))),
        }
    }

    if let Some(missing) = colors.iter().position(|&c| c == 0) {
        return Err(Error::Format(format!(
            "no color for vertex {} (instance has {n} vertices)",
            missing + 1
        )));
    }
    let coloring = Coloring::new(colors)?;
    match span {
        Some(s) if s != coloring.span() => Err(Error::Format(format!(
            "declared span {s} differs from largest color {}",
            coloring.span()
        ))),
        Some(_) => Ok(SolutionFile { instance_id, coloring }),
        None => Err(Error::Format("missing span line".into())),
    }
}
