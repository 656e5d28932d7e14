use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use bcolor_core::bmcp::{expand_to_bcp, parse_bmcp, BmcpInstance, ExpansionMap};
use bcolor_core::io::parse_bcp;
use bcolor_core::WeightedGraph;

/// An instance ready for the solver. For multicoloring the solver graph is
/// the clique expansion; `n` and `m` always describe the input file.
pub struct Problem {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub graph: WeightedGraph,
    pub bmcp: Option<(BmcpInstance, ExpansionMap)>,
}

pub fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Loads a single-coloring instance, or a multicoloring one when `bmcp` is
/// set or a weights file is given.
pub fn load(path: &Path, weights: Option<&PathBuf>, bmcp: bool, loop_default: u32) -> Result<Problem> {
    let text = read(path)?;
    let name = instance_name(path);
    if !bmcp && weights.is_none() {
        let graph = parse_bcp(&text).with_context(|| format!("in {}", path.display()))?;
        return Ok(Problem {
            name,
            n: graph.n(),
            m: graph.m(),
            graph,
            bmcp: None,
        });
    }
    let weights_text = weights.map(|p| read(p)).transpose()?;
    let parsed =
        parse_bmcp(&text, weights_text.as_deref(), loop_default).with_context(|| format!("in {}", path.display()))?;
    for w in &parsed.warnings {
        eprintln!("warning: {name}: {w}");
    }
    let instance = parsed.instance;
    let (graph, map) = expand_to_bcp(&instance);
    Ok(Problem {
        name,
        n: instance.graph().n(),
        m: instance.graph().m(),
        graph,
        bmcp: Some((instance, map)),
    })
}
