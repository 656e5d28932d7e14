//! Exact minimum span by backtracking, for small instances.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

pub const DEFAULT_VERTEX_LIMIT: usize = 10;

/// Minimum-span legal coloring with span at most `max_span`, or `None` if
/// none exists. Refuses graphs with more than `vertex_limit` vertices.
pub fn minimum_span(graph: &WeightedGraph, max_span: u32, vertex_limit: usize) -> Result<Option<Coloring>> {
    if graph.n() > vertex_limit {
        return Err(Error::TooLarge {
            n: graph.n(),
            limit: vertex_limit,
        });
    }
    let order = search_order(graph);
    for span in graph.span_lower_bound()..=max_span {
        if let Some(colors) = color_within(graph, &order, span) {
            return Ok(Some(Coloring::from_vec_unchecked(colors)));
        }
    }
    Ok(None)
}

/// Most constrained first: start from the heaviest vertex, then repeatedly
/// take the vertex with the largest distance sum towards placed vertices.
fn search_order(graph: &WeightedGraph) -> Vec<usize> {
    let n = graph.n();
    let mut placed = vec![false; n];
    let mut pull = vec![0u64; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (pull[v], graph.weight_sum(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &(j, d) in graph.neighbors(v) {
            pull[j] += u64::from(d);
        }
    }
    order
}

fn color_within(graph: &WeightedGraph, order: &[usize], span: u32) -> Option<Vec<u32>> {
    let mut colors = vec![0u32; graph.n()];
    if assign(graph, order, 0, span, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

fn assign(graph: &WeightedGraph, order: &[usize], depth: usize, span: u32, colors: &mut [u32]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    // reflection c -> span + 1 - c preserves legality
    let top = if depth == 0 { span.div_ceil(2) } else { span };
    for c in 1..=top {
        let ok = graph
            .neighbors(v)
            .iter()
            .all(|&(j, d)| colors[j] == 0 || colors[j].abs_diff(c) >= d);
        if ok {
            colors[v] = c;
            if assign(graph, order, depth + 1, span, colors) {
                return true;
            }
        }
    }
    colors[v] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_feasible;
    use crate::random::random_graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Plain enumeration of every coloring in `[1, s]^n`.
    fn enumerate_min_span(g: &WeightedGraph, max_span: u32) -> Option<u32> {
        let n = g.n();
        (1..=max_span).find(|&s| {
            let total = (s as u64).pow(n as u32);
            (0..total).any(|mut code| {
                let colors: Vec<u32> = (0..n)
                    .map(|_| {
                        let c = (code % s as u64) as u32 + 1;
                        code /= s as u64;
                        c
                    })
                    .collect();
                g.edges()
                    .iter()
                    .all(|e| colors[e.u].abs_diff(colors[e.v]) >= e.distance)
            })
        })
    }

    fn span_of(g: &WeightedGraph, max: u32) -> Option<u32> {
        minimum_span(g, max, 10).unwrap().map(|c| c.span())
    }

    #[test]
    fn known_values() {
        let edge = WeightedGraph::new(2, [(0, 1, 5)]).unwrap();
        assert_eq!(span_of(&edge, 20), Some(6));
        let tri = WeightedGraph::new(3, [(0, 1, 2), (1, 2, 2), (0, 2, 2)]).unwrap();
        assert_eq!(span_of(&tri, 20), Some(5));
        let expanded = WeightedGraph::new(3, [(0, 1, 3), (0, 2, 2), (1, 2, 2)]).unwrap();
        assert_eq!(span_of(&expanded, 6), Some(5));
        assert_eq!(span_of(&expanded, 4), None);
        assert_eq!(span_of(&WeightedGraph::new(4, []).unwrap(), 3), Some(1));
    }

    #[test]
    fn refuses_large_instances() {
        let g = WeightedGraph::new(11, []).unwrap();
        assert!(matches!(
            minimum_span(&g, 5, 10),
            Err(Error::TooLarge { n: 11, limit: 10 })
        ));
    }

    #[test]
    fn agrees_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let n = rng.random_range(1..=5);
            let density = rng.random_range(0.3..0.9);
            let g = random_graph(&mut rng, n, density, 3);
            let found = minimum_span(&g, 12, 10).unwrap();
            if let Some(c) = &found {
                assert!(is_feasible(&g, c).unwrap());
            }
            assert_eq!(found.map(|c| c.span()), enumerate_min_span(&g, 12));
        }
    }
}
