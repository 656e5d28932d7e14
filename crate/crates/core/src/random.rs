//! Random instance generators for tests and benchmarks.

use rand::Rng;

use crate::graph::WeightedGraph;

/// Erdős–Rényi style graph: each pair is joined with probability
/// `density`, distances uniform in `[1, max_distance]`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64, max_distance: u32) -> WeightedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                edges.push((u, v, rng.random_range(1..=max_distance)));
            }
        }
    }
    WeightedGraph::new(n, edges).expect("generated edges are valid")
}

/// Random geometric graph: points uniform in a `side × side` square, joined
/// when closer than `radius`, with distance requirements decreasing
/// linearly from `max_distance` (coincident points) to 1 (at `radius`).
pub fn geometric_graph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    side: f64,
    radius: f64,
    max_distance: u32,
) -> WeightedGraph {
    let points: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.random_range(0.0..side), rng.random_range(0.0..side)))
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (dx, dy) = (points[u].0 - points[v].0, points[u].1 - points[v].1);
            let dist = (dx * dx + dy * dy).sqrt();
            if dist < radius {
                let scaled = (1.0 - dist / radius) * f64::from(max_distance);
                edges.push((u, v, (scaled.ceil() as u32).clamp(1, max_distance)));
            }
        }
    }
    WeightedGraph::new(n, edges).expect("generated edges are valid")
}
