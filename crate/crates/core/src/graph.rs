//! Distance-weighted undirected graphs.
//!
//! Vertices are addressed by 0-based `usize` indices throughout the library;
//! text formats and error messages use 1-based ids.

use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub distance: u32,
}

/// An immutable graph with a positive distance on every edge.
///
/// Adjacency lists and the per-vertex aggregates used by the vertex
/// ordering (sum and maximum of incident distances) are built once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, u32)>>,
    weight_sum: Vec<u64>,
    max_incident: Vec<u32>,
    max_distance: u32,
}

impl WeightedGraph {
    /// Builds a graph on `n` vertices from `(u, v, distance)` triples with
    /// 0-based endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v, distance) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x + 1, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u + 1));
            }
            if distance == 0 {
                return Err(Error::ZeroDistance { u: u + 1, v: v + 1 });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u: u + 1, v: v + 1 });
            }
            adjacency[u].push((v, distance));
            adjacency[v].push((u, distance));
            list.push(Edge { u, v, distance });
        }

        let weight_sum = adjacency
            .iter()
            .map(|adj| adj.iter().map(|&(_, d)| u64::from(d)).sum())
            .collect();
        let max_incident: Vec<u32> = adjacency
            .iter()
            .map(|adj| adj.iter().map(|&(_, d)| d).max().unwrap_or(0))
            .collect();
        let max_distance = max_incident.iter().copied().max().unwrap_or(0);

        Ok(Self {
            n,
            edges: list,
            adjacency,
            weight_sum,
            max_incident,
            max_distance,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` with the distance of the connecting edge.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[(usize, u32)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Sum of the distances of all edges incident to `v`.
    #[inline]
    pub fn weight_sum(&self, v: usize) -> u64 {
        self.weight_sum[v]
    }

    /// Largest distance on an edge incident to `v`, 0 for isolated vertices.
    #[inline]
    pub fn max_incident(&self, v: usize) -> u32 {
        self.max_incident[v]
    }

    pub fn max_distance(&self) -> u32 {
        self.max_distance
    }

    /// Any coloring of an edge with distance `d` spans at least `d + 1` colors.
    pub fn span_lower_bound(&self) -> u32 {
        self.max_distance + 1
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v + 1,
                n: self.n,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregates() {
        let g = WeightedGraph::new(3, [(0, 1, 4), (1, 2, 9)]).unwrap();
        assert_eq!(g.weight_sum(1), 13);
        assert_eq!(g.max_incident(1), 9);
        assert_eq!(g.max_incident(0), 4);
        assert_eq!(g.max_distance(), 9);
        assert_eq!(g.span_lower_bound(), 10);
    }

    #[test]
    fn isolated_vertex() {
        let g = WeightedGraph::new(2, []).unwrap();
        assert_eq!(g.degree(0), 0);
        assert_eq!(g.max_incident(0), 0);
        assert_eq!(g.span_lower_bound(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(WeightedGraph::new(0, []), Err(Error::EmptyGraph)));
        assert!(matches!(
            WeightedGraph::new(2, [(0, 2, 1)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        ));
        assert!(matches!(WeightedGraph::new(2, [(1, 1, 1)]), Err(Error::SelfLoop(2))));
        assert!(matches!(
            WeightedGraph::new(2, [(0, 1, 0)]),
            Err(Error::ZeroDistance { .. })
        ));
        assert!(matches!(
            WeightedGraph::new(2, [(0, 1, 2), (1, 0, 3)]),
            Err(Error::DuplicateEdge { u: 2, v: 1 })
        ));
    }
}
