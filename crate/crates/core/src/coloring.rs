use std::ops::Index;

use crate::error::{Error, Result, Violation};
use crate::graph::WeightedGraph;

/// One positive color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0) {
            return Err(Error::ColorOutOfRange {
                color: c,
                max: u32::MAX,
            });
        }
        Ok(Self(colors))
    }

    pub(crate) fn from_vec_unchecked(colors: Vec<u32>) -> Self {
        debug_assert!(!colors.is_empty() && colors.iter().all(|&c| c >= 1));
        Self(colors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    /// Largest color used; colors start at 1 so this is the span.
    pub fn span(&self) -> u32 {
        max_color(self)
    }
}

impl Index<usize> for Coloring {
    type Output = u32;

    fn index(&self, v: usize) -> &u32 {
        &self.0[v]
    }
}

/// Shortfall of the separation `|a - b|` against the required distance.
#[inline]
pub fn edge_penalty(distance: u32, a: u32, b: u32) -> u64 {
    u64::from(distance.saturating_sub(a.abs_diff(b)))
}

fn check_len(graph: &WeightedGraph, coloring: &Coloring) -> Result<()> {
    if coloring.len() == graph.n() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: graph.n(),
            got: coloring.len(),
        })
    }
}

/// Total penalty over all edges; zero exactly for legal colorings.
pub fn evaluate(graph: &WeightedGraph, coloring: &Coloring) -> Result<u64> {
    check_len(graph, coloring)?;
    Ok(graph
        .edges()
        .iter()
        .map(|e| edge_penalty(e.distance, coloring[e.u], coloring[e.v]))
        .sum())
}

/// Penalty summed over the edges incident to `v`.
pub fn vertex_conflicts(graph: &WeightedGraph, coloring: &Coloring, v: usize) -> Result<u64> {
    check_len(graph, coloring)?;
    graph.check_vertex(v)?;
    Ok(conflicts_unchecked(graph, coloring.colors(), v))
}

#[inline]
pub(crate) fn conflicts_unchecked(graph: &WeightedGraph, colors: &[u32], v: usize) -> u64 {
    let cv = colors[v];
    graph
        .neighbors(v)
        .iter()
        .map(|&(j, d)| edge_penalty(d, cv, colors[j]))
        .sum()
}

pub fn max_color(coloring: &Coloring) -> u32 {
    coloring.0.iter().copied().max().unwrap_or(0)
}

pub fn is_feasible(graph: &WeightedGraph, coloring: &Coloring) -> Result<bool> {
    Ok(evaluate(graph, coloring)? == 0)
}

/// First edge, in edge-list order, whose distance constraint is violated.
pub fn first_violation(graph: &WeightedGraph, coloring: &Coloring) -> Result<Option<Violation>> {
    check_len(graph, coloring)?;
    Ok(graph
        .edges()
        .iter()
        .find(|e| coloring[e.u].abs_diff(coloring[e.v]) < e.distance)
        .map(|e| Violation {
            u: e.u,
            v: e.v,
            color_u: coloring[e.u],
            color_v: coloring[e.v],
            required: e.distance,
        }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(c: &[u32]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    #[test]
    fn evaluate_single_edge() {
        let g = WeightedGraph::new(2, [(0, 1, 5)]).unwrap();
        assert_eq!(evaluate(&g, &col(&[1, 3])).unwrap(), 3);
        assert_eq!(evaluate(&g, &col(&[1, 6])).unwrap(), 0);
    }

    #[test]
    fn evaluate_triangle() {
        let g = WeightedGraph::new(3, [(0, 1, 2), (1, 2, 2), (0, 2, 2)]).unwrap();
        // edge terms: (1,2) -> 1, (2,3) -> 1, (1,3) -> 0
        assert_eq!(evaluate(&g, &col(&[1, 2, 3])).unwrap(), 2);
    }

    #[test]
    fn star_center_conflicts() {
        let g = WeightedGraph::new(4, [(0, 1, 3), (0, 2, 3), (0, 3, 3)]).unwrap();
        let c = col(&[1, 2, 3, 4]);
        assert_eq!(vertex_conflicts(&g, &c, 0).unwrap(), 3);
        let isolated = WeightedGraph::new(1, []).unwrap();
        assert_eq!(vertex_conflicts(&isolated, &col(&[1]), 0).unwrap(), 0);
    }

    #[test]
    fn errors() {
        let g = WeightedGraph::new(2, [(0, 1, 5)]).unwrap();
        assert!(matches!(
            evaluate(&g, &col(&[1])),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
        assert!(matches!(
            vertex_conflicts(&g, &col(&[1, 1]), 2),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(Coloring::new(vec![1, 0]).is_err());
        assert!(Coloring::new(vec![]).is_err());
    }

    #[test]
    fn max_color_values() {
        assert_eq!(max_color(&col(&[1, 1, 1])), 1);
        assert_eq!(max_color(&col(&[3, 7, 2])), 7);
    }

    #[test]
    fn feasibility() {
        let g = WeightedGraph::new(2, [(0, 1, 2)]).unwrap();
        assert!(is_feasible(&g, &col(&[1, 3])).unwrap());
        assert!(!is_feasible(&g, &col(&[1, 2])).unwrap());
        let v = first_violation(&g, &col(&[1, 2])).unwrap().unwrap();
        assert_eq!((v.u, v.v, v.required), (0, 1, 2));
        assert!(v.to_string().contains("vertices 1 and 2"));
    }
}
