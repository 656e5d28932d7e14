//! Search state with cached per-vertex conflicts and incremental moves.

use crate::coloring::{conflicts_unchecked, edge_penalty, Coloring};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// A coloring restricted to `[1, nc]` together with the conflict caches
/// kept consistent under recoloring.
///
/// Invariants: `total_penalty` equals the full evaluation of the coloring,
/// and the per-vertex conflicts sum to twice that value.
#[derive(Debug)]
pub struct SearchState<'g> {
    graph: &'g WeightedGraph,
    colors: Vec<u32>,
    conflict_of: Vec<u64>,
    total_penalty: u64,
    nc: u32,
    scratch: Vec<i64>,
}

impl Clone for SearchState<'_> {
    fn clone(&self) -> Self {
        Self {
            graph: self.graph,
            colors: self.colors.clone(),
            conflict_of: self.conflict_of.clone(),
            total_penalty: self.total_penalty,
            nc: self.nc,
            scratch: Vec::new(),
        }
    }
}

impl PartialEq for SearchState<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.graph, other.graph)
            && self.nc == other.nc
            && self.total_penalty == other.total_penalty
            && self.colors == other.colors
            && self.conflict_of == other.conflict_of
    }
}

impl<'g> SearchState<'g> {
    pub fn new(graph: &'g WeightedGraph, coloring: Coloring, nc: u32) -> Result<Self> {
        if coloring.len() != graph.n() {
            return Err(Error::DimensionMismatch {
                expected: graph.n(),
                got: coloring.len(),
            });
        }
        if nc == 0 {
            return Err(Error::ColorOutOfRange { color: 0, max: 0 });
        }
        if let Some(&c) = coloring.colors().iter().find(|&&c| c > nc) {
            return Err(Error::ColorOutOfRange { color: c, max: nc });
        }
        let colors = coloring.into_inner();
        let conflict_of: Vec<u64> = (0..graph.n()).map(|v| conflicts_unchecked(graph, &colors, v)).collect();
        let total_penalty = conflict_of.iter().sum::<u64>() / 2;
        Ok(Self {
            graph,
            colors,
            conflict_of,
            total_penalty,
            nc,
            scratch: Vec::new(),
        })
    }

    pub fn graph(&self) -> &'g WeightedGraph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn coloring(&self) -> Coloring {
        Coloring::from_vec_unchecked(self.colors.clone())
    }

    #[inline]
    pub fn conflict_of(&self, v: usize) -> u64 {
        self.conflict_of[v]
    }

    pub fn total_penalty(&self) -> u64 {
        self.total_penalty
    }

    pub fn is_feasible(&self) -> bool {
        self.total_penalty == 0
    }

    /// Number of colors currently allowed.
    pub fn nc(&self) -> u32 {
        self.nc
    }

    pub fn weight_sum(&self, v: usize) -> u64 {
        self.graph.weight_sum(v)
    }

    pub fn max_incident(&self, v: usize) -> u32 {
        self.graph.max_incident(v)
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    fn check_move(&self, v: usize, color: u32) -> Result<()> {
        self.graph.check_vertex(v)?;
        if color == 0 || color > self.nc {
            return Err(Error::ColorOutOfRange { color, max: self.nc });
        }
        Ok(())
    }

    /// Change in total penalty if `v` were recolored to `color`.
    pub fn recolor_delta(&self, v: usize, color: u32) -> Result<i64> {
        self.check_move(v, color)?;
        let after: u64 = self
            .graph
            .neighbors(v)
            .iter()
            .map(|&(j, d)| edge_penalty(d, color, self.colors[j]))
            .sum();
        Ok(after as i64 - self.conflict_of[v] as i64)
    }

    pub fn apply_recolor(&mut self, v: usize, color: u32) -> Result<()> {
        self.check_move(v, color)?;
        self.recolor_unchecked(v, color);
        Ok(())
    }

    pub(crate) fn recolor_unchecked(&mut self, v: usize, color: u32) {
        let old = self.colors[v];
        if old == color {
            return;
        }
        let mut after = 0u64;
        for &(j, d) in self.graph.neighbors(v) {
            let cj = self.colors[j];
            let before_j = edge_penalty(d, old, cj);
            let after_j = edge_penalty(d, color, cj);
            self.conflict_of[j] = self.conflict_of[j] + after_j - before_j;
            after += after_j;
        }
        self.total_penalty = self.total_penalty + after - self.conflict_of[v];
        self.conflict_of[v] = after;
        self.colors[v] = color;
    }

    /// Conflicts `v` would have for every color in `[1, nc]`; entry `i`
    /// corresponds to color `i + 1`.
    ///
    /// Each neighbor contributes a triangular profile
    /// `max(0, d - |c - c_j|)`, accumulated with second differences, so
    /// the scan costs `O(nc + deg(v) + max_incident(v))`.
    pub fn candidate_conflicts(&mut self, v: usize) -> &[i64] {
        let nc = self.nc as usize;
        let offset = self.graph.max_incident(v) as usize;
        let size = nc + 2 * offset + 3;
        self.scratch.clear();
        self.scratch.resize(size, 0);
        let buf = &mut self.scratch;
        for &(j, d) in self.graph.neighbors(v) {
            let a = self.colors[j] as usize + offset;
            let d = d as usize;
            buf[a + 1 - d] += 1;
            buf[a + 1] -= 2;
            buf[a + 1 + d] += 1;
        }
        let mut slope = 0i64;
        let mut value = 0i64;
        for x in buf.iter_mut() {
            slope += *x;
            value += slope;
            *x = value;
        }
        &self.scratch[offset + 1..=offset + nc]
    }

    /// Best color for `v` in `[1, nc]` (smallest color on ties) and the
    /// resulting change in total penalty. The current color is a candidate,
    /// so the delta is never positive.
    pub fn find_best_recoloring(&mut self, v: usize) -> (u32, i64) {
        let current = self.conflict_of[v] as i64;
        let scan = self.candidate_conflicts(v);
        let (idx, best) = scan
            .iter()
            .enumerate()
            .fold((0, i64::MAX), |acc, (i, &p)| if p < acc.1 { (i, p) } else { acc });
        (idx as u32 + 1, best - current)
    }

    /// Lowers the color budget. Callers must recolor every vertex above the
    /// new budget before the state is used again.
    pub(crate) fn set_nc(&mut self, nc: u32) {
        self.nc = nc;
    }

    /// Recomputes every cache from scratch and compares.
    pub fn is_consistent(&self) -> bool {
        let fresh: Vec<u64> = (0..self.n())
            .map(|v| conflicts_unchecked(self.graph, &self.colors, v))
            .collect();
        let total: u64 = self
            .graph
            .edges()
            .iter()
            .map(|e| edge_penalty(e.distance, self.colors[e.u], self.colors[e.v]))
            .sum();
        fresh == self.conflict_of && total == self.total_penalty && self.colors.iter().all(|&c| c >= 1 && c <= self.nc)
    }
}
