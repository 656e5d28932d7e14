//! Greedy construction of a feasible starting coloring.

use std::str::FromStr;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Vertex sequence fed to the greedy construction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum GreedyOrder {
    /// Ascending vertex id.
    #[default]
    Id,
    /// Descending sum of incident distances, ties by ascending id.
    Weight,
}

impl FromStr for GreedyOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id" => Ok(Self::Id),
            "weight" => Ok(Self::Weight),
            other => Err(Error::Config(format!(
                "unknown greedy order {other:?}, expected \"id\" or \"weight\""
            ))),
        }
    }
}

impl GreedyOrder {
    pub fn sequence(self, graph: &WeightedGraph) -> Vec<usize> {
        let mut order: Vec<usize> = (0..graph.n()).collect();
        if self == Self::Weight {
            order.sort_by_key(|&v| std::cmp::Reverse(graph.weight_sum(v)));
        }
        order
    }
}

/// Colors vertices in `order`, giving each the smallest color whose
/// separation from every already-colored neighbor meets the edge distance.
///
/// # Panics
///
/// Panics if `order` is not a permutation of the vertices.
pub fn greedy_coloring(graph: &WeightedGraph, order: &[usize]) -> Coloring {
    assert_eq!(order.len(), graph.n(), "order must cover every vertex");
    let mut colors = vec![0u32; graph.n()];
    // forbidden open intervals (c_j - d, c_j + d) as closed [lo, hi]
    let mut forbidden: Vec<(u32, u32)> = Vec::new();
    for &v in order {
        assert_eq!(colors[v], 0, "vertex {} appears twice in order", v + 1);
        forbidden.clear();
        forbidden.extend(
            graph
                .neighbors(v)
                .iter()
                .filter(|&&(j, _)| colors[j] != 0)
                .map(|&(j, d)| (colors[j].saturating_sub(d - 1).max(1), colors[j] + d - 1)),
        );
        forbidden.sort_unstable();
        let mut candidate = 1u32;
        for &(lo, hi) in &forbidden {
            if lo > candidate {
                break;
            }
            candidate = candidate.max(hi + 1);
        }
        colors[v] = candidate;
    }
    Coloring::from_vec_unchecked(colors)
}

/// Upper bound coloring using the given vertex order.
pub fn greedy_ub(graph: &WeightedGraph, order: GreedyOrder) -> Coloring {
    greedy_coloring(graph, &order.sequence(graph))
}
