//! Bandwidth multicoloring: instances, reduction to single coloring by
//! clique expansion, and lifting expanded solutions back.

use std::fmt;

use crate::coloring::{first_violation, Coloring};
use crate::error::{parse_err, Error, Result};
use crate::graph::WeightedGraph;
use crate::io::parse_instance;

/// A graph whose vertex `v` needs `multiplicity[v]` colors pairwise at least
/// `loop_distance[v]` apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BmcpInstance {
    graph: WeightedGraph,
    multiplicity: Vec<u32>,
    loop_distance: Vec<u32>,
}

impl BmcpInstance {
    pub fn new(graph: WeightedGraph, multiplicity: Vec<u32>, loop_distance: Vec<u32>) -> Result<Self> {
        let n = graph.n();
        for len in [multiplicity.len(), loop_distance.len()] {
            if len != n {
                return Err(Error::DimensionMismatch { expected: n, got: len });
            }
        }
        if let Some(v) = multiplicity.iter().position(|&w| w == 0) {
            return Err(Error::Config(format!("vertex {} has weight 0", v + 1)));
        }
        if let Some(v) = (0..n).find(|&v| multiplicity[v] > 1 && loop_distance[v] == 0) {
            return Err(Error::ZeroDistance { u: v + 1, v: v + 1 });
        }
        Ok(Self {
            graph,
            multiplicity,
            loop_distance,
        })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn multiplicity(&self, v: usize) -> u32 {
        self.multiplicity[v]
    }

    pub fn loop_distance(&self, v: usize) -> u32 {
        self.loop_distance[v]
    }

    pub fn total_multiplicity(&self) -> usize {
        self.multiplicity.iter().map(|&w| w as usize).sum()
    }
}

/// Result of [`parse_bmcp`]: the instance plus non-fatal notes about
/// defaulted values.
#[derive(Debug, Clone)]
pub struct ParsedBmcp {
    pub instance: BmcpInstance,
    pub warnings: Vec<String>,
}

/// Parses a weights file: one `<vertex> <weight>` pair per line (a colon
/// after the vertex id is tolerated), `c` comment lines allowed.
pub fn parse_weights(text: &str, n: usize) -> Result<Vec<(usize, u32)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(first) = toks.next() else { continue };
        if first == "c" {
            continue;
        }
        let id = first.strip_suffix(':').unwrap_or(first);
        let v: usize = id
            .parse()
            .map_err(|_| parse_err(line, format!("invalid vertex id {first:?}")))?;
        if v == 0 || v > n {
            return Err(parse_err(line, format!("vertex {v} out of range 1..={n}")));
        }
        let w_tok = toks.next().ok_or_else(|| parse_err(line, "missing weight"))?;
        let w: u32 = w_tok
            .parse()
            .map_err(|_| parse_err(line, format!("invalid weight {w_tok:?}")))?;
        if toks.next().is_some() {
            return Err(parse_err(line, "unexpected trailing token"));
        }
        out.push((v - 1, w));
    }
    Ok(out)
}

/// Builds a multicoloring instance from an instance file and vertex weights
/// taken from `weights_text` or, when absent, from the instance's `n`
/// lines. Vertices needing several colors without a self-loop line get
/// `loop_default` as their internal distance, reported as a warning.
pub fn parse_bmcp(instance_text: &str, weights_text: Option<&str>, loop_default: u32) -> Result<ParsedBmcp> {
    let file = parse_instance(instance_text)?;
    let n = file.n;
    let weights = match weights_text {
        Some(text) => parse_weights(text, n)?,
        None if !file.vertex_weights.is_empty() => file.vertex_weights.clone(),
        None => return Err(parse_err(1, "no vertex weights given (weights file or `n` lines)")),
    };

    let mut multiplicity = vec![0u32; n];
    for (i, &(v, w)) in weights.iter().enumerate() {
        if w == 0 {
            return Err(parse_err(i + 1, format!("vertex {} has weight 0", v + 1)));
        }
        if multiplicity[v] != 0 {
            return Err(parse_err(i + 1, format!("duplicate weight for vertex {}", v + 1)));
        }
        multiplicity[v] = w;
    }
    if let Some(v) = multiplicity.iter().position(|&w| w == 0) {
        return Err(parse_err(
            weights.len().max(1),
            format!("missing weight for vertex {}", v + 1),
        ));
    }

    let mut loop_distance = vec![0u32; n];
    for &(v, d) in &file.loops {
        loop_distance[v] = d;
    }
    let defaulted: Vec<usize> = (0..n)
        .filter(|&v| loop_distance[v] == 0 && multiplicity[v] > 1)
        .collect();
    let mut warnings = Vec::new();
    if !defaulted.is_empty() {
        warnings.push(format!(
            "{} vertices with weight > 1 have no self-loop distance; using {loop_default} (first: vertex {})",
            defaulted.len(),
            defaulted[0] + 1
        ));
    }
    for d in loop_distance.iter_mut().filter(|d| **d == 0) {
        *d = loop_default;
    }

    let graph = WeightedGraph::new(n, file.edges)?;
    Ok(ParsedBmcp {
        instance: BmcpInstance::new(graph, multiplicity, loop_distance)?,
        warnings,
    })
}

/// Correspondence between expanded vertices and original vertex copies.
/// Copies of a vertex are contiguous and ordered by original id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionMap {
    origin_of: Vec<(usize, u32)>,
    first_copy: Vec<usize>,
}

impl ExpansionMap {
    pub fn expanded_n(&self) -> usize {
        self.origin_of.len()
    }

    pub fn original_n(&self) -> usize {
        self.first_copy.len()
    }

    /// `(original vertex, copy index)` of an expanded vertex.
    pub fn origin(&self, expanded: usize) -> (usize, u32) {
        self.origin_of[expanded]
    }

    /// Expanded ids of the copies of original vertex `v`.
    pub fn copies(&self, v: usize) -> std::ops::Range<usize> {
        let end = self.first_copy.get(v + 1).copied().unwrap_or(self.origin_of.len());
        self.first_copy[v]..end
    }
}

/// Replaces every vertex by a clique of its copies joined at the loop
/// distance; each original edge joins every pair of copies across it.
pub fn expand_to_bcp(bmcp: &BmcpInstance) -> (WeightedGraph, ExpansionMap) {
    let n = bmcp.graph.n();
    let mut origin_of = Vec::with_capacity(bmcp.total_multiplicity());
    let mut first_copy = Vec::with_capacity(n);
    for v in 0..n {
        first_copy.push(origin_of.len());
        origin_of.extend((0..bmcp.multiplicity[v]).map(|i| (v, i)));
    }
    let map = ExpansionMap { origin_of, first_copy };

    let mut edges = Vec::new();
    for v in 0..n {
        let copies = map.copies(v);
        for a in copies.clone() {
            for b in a + 1..copies.end {
                edges.push((a, b, bmcp.loop_distance[v]));
            }
        }
    }
    for e in bmcp.graph.edges() {
        for a in map.copies(e.u) {
            for b in map.copies(e.v) {
                edges.push((a, b, e.distance));
            }
        }
    }
    let graph = WeightedGraph::new(map.expanded_n(), edges).expect("expansion of a valid instance");
    (graph, map)
}

/// Sorted color set per original vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multicoloring(Vec<Vec<u32>>);

impl Multicoloring {
    pub fn new(mut colors: Vec<Vec<u32>>) -> Self {
        for set in &mut colors {
            set.sort_unstable();
        }
        Self(colors)
    }

    pub fn colors(&self, v: usize) -> &[u32] {
        &self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn span(&self) -> u32 {
        self.0.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Groups the colors of a feasible expanded coloring by original vertex.
pub fn lift_solution(expanded: &WeightedGraph, map: &ExpansionMap, coloring: &Coloring) -> Result<Multicoloring> {
    if expanded.n() != map.expanded_n() {
        return Err(Error::DimensionMismatch {
            expected: map.expanded_n(),
            got: expanded.n(),
        });
    }
    if let Some(violation) = first_violation(expanded, coloring)? {
        return Err(Error::Infeasible(violation));
    }
    group_by_origin(map, coloring)
}

/// Groups expanded colors by original vertex without checking legality.
pub fn group_by_origin(map: &ExpansionMap, coloring: &Coloring) -> Result<Multicoloring> {
    if coloring.len() != map.expanded_n() {
        return Err(Error::DimensionMismatch {
            expected: map.expanded_n(),
            got: coloring.len(),
        });
    }
    let sets = (0..map.original_n())
        .map(|v| map.copies(v).map(|x| coloring[x]).collect())
        .collect();
    Ok(Multicoloring::new(sets))
}

/// A broken multicoloring constraint, 1-based ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MulticolorViolation {
    Count {
        v: usize,
        expected: u32,
        got: usize,
    },
    Loop {
        v: usize,
        a: u32,
        b: u32,
        required: u32,
    },
    Edge {
        u: usize,
        v: usize,
        a: u32,
        b: u32,
        required: u32,
    },
}

impl fmt::Display for MulticolorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Count { v, expected, got } => {
                write!(f, "vertex {v} needs {expected} colors, has {got}")
            }
            Self::Loop { v, a, b, required } => {
                write!(f, "vertex {v} has colors {a} and {b}, required separation {required}")
            }
            Self::Edge { u, v, a, b, required } => write!(
                f,
                "vertices {u} and {v} have colors {a} and {b}, required distance {required}"
            ),
        }
    }
}

/// Checks a multicoloring directly against the unexpanded constraints.
pub fn check_multicoloring(bmcp: &BmcpInstance, mc: &Multicoloring) -> Result<Option<MulticolorViolation>> {
    let n = bmcp.graph.n();
    if mc.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: mc.len(),
        });
    }
    for v in 0..n {
        let set = mc.colors(v);
        if set.len() != bmcp.multiplicity[v] as usize || set.contains(&0) {
            return Ok(Some(MulticolorViolation::Count {
                v: v + 1,
                expected: bmcp.multiplicity[v],
                got: set.len(),
            }));
        }
        let required = bmcp.loop_distance[v];
        for (i, &a) in set.iter().enumerate() {
            if let Some(&b) = set[i + 1..].iter().find(|&&b| a.abs_diff(b) < required) {
                return Ok(Some(MulticolorViolation::Loop {
                    v: v + 1,
                    a,
                    b,
                    required,
                }));
            }
        }
    }
    for e in bmcp.graph.edges() {
        for &a in mc.colors(e.u) {
            if let Some(&b) = mc.colors(e.v).iter().find(|&&b| a.abs_diff(b) < e.distance) {
                return Ok(Some(MulticolorViolation::Edge {
                    u: e.u + 1,
                    v: e.v + 1,
                    a,
                    b,
                    required: e.distance,
                }));
            }
        }
    }
    Ok(None)
}
