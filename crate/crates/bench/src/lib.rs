//! Fixed benchmark workloads shared by the criterion benches.

use bcolor_core::random::geometric_graph;
use bcolor_core::vns::SolverRng;
use bcolor_core::WeightedGraph;
use rand::SeedableRng;

/// Geometric graph resembling the dense benchmark family: `n` points in a
/// 10,000 square, radius scaled so the average degree stays near 20.
pub fn dense_geometric(n: usize, seed: u64) -> WeightedGraph {
    let mut rng = SolverRng::seed_from_u64(seed);
    let side = 10_000.0;
    let radius = side * (20.0 / (std::f64::consts::PI * n as f64)).sqrt();
    geometric_graph(&mut rng, n, side, radius.min(side), 10)
}

/// Sparse variant with average degree near 10 and distances up to 5.
pub fn sparse_geometric(n: usize, seed: u64) -> WeightedGraph {
    let mut rng = SolverRng::seed_from_u64(seed);
    let side = 10_000.0;
    let radius = side * (10.0 / (std::f64::consts::PI * n as f64)).sqrt();
    geometric_graph(&mut rng, n, side, radius.min(side), 5)
}
