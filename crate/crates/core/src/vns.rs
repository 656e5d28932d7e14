//! Variable neighborhood search over penalized colorings.
//!
//! The search keeps an incumbent coloring restricted to `nc` colors and
//! minimizes its distance-constraint penalty. Each iteration perturbs `k`
//! vertices of the incumbent (shaking), improves the result with a
//! variable neighborhood descent whose vertex order is driven by up to
//! three criteria, and decides acceptance with [`compare`]. Whenever the
//! descent reaches zero penalty the coloring is recorded and the color
//! budget drops below its span.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::greedy::{greedy_ub, GreedyOrder};
use crate::state::SearchState;

/// Generator used by the solver. ChaCha8 streams are fixed by the seed on
/// every platform, which keeps seeded runs reproducible.
pub type SolverRng = ChaCha8Rng;

/// Which vertex-ordering criteria the descent applies, in priority order:
/// conflicts (descending), distance of the color from the middle of
/// `[1, nc]` (ascending), geometric mean of incident distance sum and
/// maximum (descending).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CriteriaMask {
    pub conflicts: bool,
    pub mid_distance: bool,
    pub geometric_mean: bool,
}

impl CriteriaMask {
    pub const ALL: Self = Self {
        conflicts: true,
        mid_distance: true,
        geometric_mean: true,
    };
    pub const NONE: Self = Self {
        conflicts: false,
        mid_distance: false,
        geometric_mean: false,
    };

    /// All eight combinations, `000` through `111`.
    pub fn variants() -> [Self; 8] {
        std::array::from_fn(|i| Self {
            conflicts: i & 4 != 0,
            mid_distance: i & 2 != 0,
            geometric_mean: i & 1 != 0,
        })
    }
}

impl Default for CriteriaMask {
    fn default() -> Self {
        Self::ALL
    }
}

impl fmt::Display for CriteriaMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bit = |b: bool| if b { '1' } else { '0' };
        write!(
            f,
            "{}{}{}",
            bit(self.conflicts),
            bit(self.mid_distance),
            bit(self.geometric_mean)
        )
    }
}

impl FromStr for CriteriaMask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits: Vec<bool> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(()),
            })
            .collect::<Result<_, ()>>()
            .map_err(|_| Error::Config(format!("criteria {s:?} must consist of 0/1")))?;
        match bits[..] {
            [conflicts, mid_distance, geometric_mean] => Ok(Self {
                conflicts,
                mid_distance,
                geometric_mean,
            }),
            _ => Err(Error::Config(format!("criteria {s:?} must have 3 bits"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub k_min: usize,
    pub k_max: usize,
    /// Wall-clock budget for the whole run, greedy construction included.
    pub time_limit: Duration,
    /// Optional cap on shake/descent iterations, for reproducible runs
    /// that do not depend on timing.
    pub max_iterations: Option<u64>,
    /// Probability of moving to a candidate with the same budget and penalty.
    pub p_move: f64,
    pub criteria: CriteriaMask,
    pub seed: u64,
    pub greedy_order: GreedyOrder,
    /// Start the search at this many colors instead of one below the
    /// greedy bound.
    pub start_k: Option<u32>,
    /// Stop as soon as a coloring with at most this span is found.
    pub target_span: Option<u32>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            k_min: 2,
            k_max: 20,
            time_limit: Duration::from_secs(60),
            max_iterations: None,
            p_move: 0.5,
            criteria: CriteriaMask::ALL,
            seed: 0,
            greedy_order: GreedyOrder::Id,
            start_k: None,
            target_span: None,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k_min < 1 {
            return Err(Error::Config("k_min must be at least 1".into()));
        }
        if self.k_min > self.k_max {
            return Err(Error::Config(format!(
                "k_min ({}) exceeds k_max ({})",
                self.k_min, self.k_max
            )));
        }
        if !(0.0..=1.0).contains(&self.p_move) {
            return Err(Error::Config(format!("p_move {} outside [0, 1]", self.p_move)));
        }
        if self.start_k == Some(0) {
            return Err(Error::Config("start_k must be positive".into()));
        }
        Ok(())
    }
}

/// A new best span found during a run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Improvement {
    pub elapsed_secs: f64,
    pub iteration: u64,
    pub span: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub k_star: u32,
    pub best_coloring: Coloring,
    /// Span of the greedy starting coloring.
    pub greedy_span: u32,
    pub elapsed_to_best: Duration,
    pub iterations_to_best: u64,
    pub elapsed: Duration,
    pub iterations: u64,
    /// Every improvement of the best span, the greedy bound first.
    pub trace: Vec<Improvement>,
}

/// Wall-clock deadline measured from the start of a run.
#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    start: Instant,
    limit: Duration,
}

impl Deadline {
    pub fn new(start: Instant, limit: Duration) -> Self {
        Self { start, limit }
    }

    pub fn after(limit: Duration) -> Self {
        Self::new(Instant::now(), limit)
    }

    pub fn never() -> Self {
        Self::after(Duration::MAX)
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub fn expired(&self) -> bool {
        self.start.elapsed() >= self.limit
    }
}

/// Receives every zero-penalty state the descent reaches, before the color
/// budget is lowered.
pub trait FeasibilitySink {
    fn feasible(&mut self, state: &SearchState<'_>);
}

impl<F: FnMut(&SearchState<'_>)> FeasibilitySink for F {
    fn feasible(&mut self, state: &SearchState<'_>) {
        self(state)
    }
}

/// Random coloring with colors uniform in `[1, ub - 1]`, or `None` when
/// `ub < 2` (a single color already suffices).
pub fn init_solution<R: Rng + ?Sized>(n: usize, ub: u32, rng: &mut R) -> Option<Coloring> {
    if ub < 2 || n == 0 {
        return None;
    }
    let colors = (0..n).map(|_| rng.random_range(1..ub)).collect();
    Some(Coloring::from_vec_unchecked(colors))
}

/// Recolors `min(k, n)` distinct random vertices, each to a uniformly chosen
/// different color in `[1, nc]`. Does nothing when `nc < 2`.
pub fn shake<R: Rng + ?Sized>(state: &mut SearchState<'_>, k: usize, rng: &mut R) {
    let nc = state.nc();
    if nc < 2 {
        return;
    }
    let n = state.n();
    for v in index::sample(rng, n, k.min(n)) {
        let old = state.color(v);
        let mut color = rng.random_range(1..nc);
        if color >= old {
            color += 1;
        }
        state.recolor_unchecked(v, color);
    }
}

/// Vertex order for one descent pass: lexicographic over the enabled
/// criteria, ties broken by ascending vertex id.
pub fn order_vertices(state: &SearchState<'_>, mask: CriteriaMask) -> Vec<usize> {
    let graph = state.graph();
    let nc = i64::from(state.nc());
    // |nc/2 - c| compared as |nc - 2c|
    let mid = |v: usize| (nc - 2 * i64::from(state.color(v))).abs();
    // sqrt(a) > sqrt(b) iff a > b
    let geo = |v: usize| graph.weight_sum(v) * u64::from(graph.max_incident(v));
    let mut order: Vec<usize> = (0..state.n()).collect();
    order.sort_unstable_by(|&a, &b| {
        let mut ord = Ordering::Equal;
        if mask.conflicts {
            ord = state.conflict_of(b).cmp(&state.conflict_of(a));
        }
        if mask.mid_distance {
            ord = ord.then_with(|| mid(a).cmp(&mid(b)));
        }
        if mask.geometric_mean {
            ord = ord.then_with(|| geo(b).cmp(&geo(a)));
        }
        ord.then(a.cmp(&b))
    });
    order
}

/// Best color for `v` in `[1, nc]` and the penalty change it causes.
pub fn find_best_recoloring(state: &mut SearchState<'_>, v: usize) -> (u32, i64) {
    state.find_best_recoloring(v)
}

/// Reports feasible states to the sink and lowers the budget to one below
/// the span, re-randomizing every vertex above it, until the state is
/// infeasible again.
fn settle<R: Rng + ?Sized>(state: &mut SearchState<'_>, rng: &mut R, sink: &mut dyn FeasibilitySink) {
    while state.is_feasible() {
        sink.feasible(state);
        let span = state.max_color();
        if span <= 1 {
            return;
        }
        let nc = span - 1;
        state.set_nc(nc);
        for v in 0..state.n() {
            if state.color(v) > nc {
                let color = rng.random_range(1..=nc);
                state.recolor_unchecked(v, color);
            }
        }
    }
}

/// Variable neighborhood descent: repeated passes over the ordered
/// vertices, adopting each best recoloring that strictly lowers the
/// penalty, until a pass improves nothing or the deadline passes.
pub fn vnd<R: Rng + ?Sized>(
    state: &mut SearchState<'_>,
    deadline: &Deadline,
    criteria: CriteriaMask,
    rng: &mut R,
    sink: &mut dyn FeasibilitySink,
) {
    settle(state, rng, sink);
    let mut improved = true;
    while improved {
        improved = false;
        for v in order_vertices(state, criteria) {
            if deadline.expired() {
                return;
            }
            let (color, delta) = state.find_best_recoloring(v);
            if delta < 0 {
                state.recolor_unchecked(v, color);
                improved = true;
                settle(state, rng, sink);
            }
        }
    }
}

/// Acceptance of a descent result: fewer allowed colors wins, then lower
/// penalty; on a tie the candidate is taken with probability `p_move`.
pub fn compare<R: Rng + ?Sized>(
    candidate: &SearchState<'_>,
    incumbent: &SearchState<'_>,
    p_move: f64,
    rng: &mut R,
) -> bool {
    match candidate.nc().cmp(&incumbent.nc()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => match candidate.total_penalty().cmp(&incumbent.total_penalty()) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => rng.random_bool(p_move),
        },
    }
}

/// Next neighborhood index after a rejected candidate.
pub fn next_neighborhood(k: usize, k_min: usize, k_max: usize) -> usize {
    if k < k_max {
        k + 1
    } else {
        k_min
    }
}

struct Best {
    k_star: u32,
    coloring: Coloring,
    elapsed_to_best: Duration,
    iterations_to_best: u64,
    trace: Vec<Improvement>,
}

struct Recorder<'a> {
    best: &'a mut Best,
    deadline: &'a Deadline,
    iteration: u64,
}

impl FeasibilitySink for Recorder<'_> {
    fn feasible(&mut self, state: &SearchState<'_>) {
        let span = state.max_color();
        if span < self.best.k_star {
            let elapsed = self.deadline.elapsed();
            self.best.k_star = span;
            self.best.coloring = state.coloring();
            self.best.elapsed_to_best = elapsed;
            self.best.iterations_to_best = self.iteration;
            self.best.trace.push(Improvement {
                elapsed_secs: elapsed.as_secs_f64(),
                iteration: self.iteration,
                span,
            });
        }
    }
}

/// Outcome of one shake/descent/compare iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    /// Neighborhood used for the shake.
    pub k: usize,
    pub accepted: bool,
}

/// A single solver run, steppable one iteration at a time.
pub struct Vns<'g> {
    graph: &'g WeightedGraph,
    config: SolverConfig,
    deadline: Deadline,
    rng: SolverRng,
    incumbent: Option<SearchState<'g>>,
    k: usize,
    iterations: u64,
    best: Best,
}

impl<'g> Vns<'g> {
    /// Builds the greedy bound and the random starting coloring; the clock
    /// starts here.
    pub fn new(graph: &'g WeightedGraph, config: SolverConfig) -> Result<Self> {
        config.validate()?;
        let deadline = Deadline::after(config.time_limit);
        let greedy = greedy_ub(graph, config.greedy_order);
        let ub = greedy.span();
        let mut rng = SolverRng::seed_from_u64(config.seed);
        let nc = config.start_k.map_or(ub.saturating_sub(1), |k| k.min(ub - 1));
        let incumbent = init_solution(graph.n(), nc + 1, &mut rng)
            .map(|c| SearchState::new(graph, c, nc))
            .transpose()?;
        let elapsed = deadline.elapsed();
        Ok(Self {
            graph,
            k: config.k_min,
            config,
            deadline,
            rng,
            incumbent,
            iterations: 0,
            best: Best {
                k_star: ub,
                coloring: greedy,
                elapsed_to_best: elapsed,
                iterations_to_best: 0,
                trace: vec![Improvement {
                    elapsed_secs: elapsed.as_secs_f64(),
                    iteration: 0,
                    span: ub,
                }],
            },
        })
    }

    pub fn k_star(&self) -> u32 {
        self.best.k_star
    }

    pub fn incumbent(&self) -> Option<&SearchState<'g>> {
        self.incumbent.as_ref()
    }

    pub fn iterations(&self) -> u64 {
        self.iterations
    }

    /// True once the run should stop: time or iteration budget spent,
    /// target reached, or the span matches the largest edge distance + 1
    /// and cannot improve.
    pub fn finished(&self) -> bool {
        self.incumbent.is_none()
            || self.best.k_star <= self.graph.span_lower_bound()
            || self.config.target_span.is_some_and(|t| self.best.k_star <= t)
            || self.config.max_iterations.is_some_and(|cap| self.iterations >= cap)
            || self.deadline.expired()
    }

    /// One shake, descent and acceptance decision. Returns `None` when
    /// there is nothing left to search.
    pub fn step(&mut self) -> Option<Step> {
        let incumbent = self.incumbent.as_ref()?;
        let k = self.k;
        self.iterations += 1;
        let mut candidate = incumbent.clone();
        shake(&mut candidate, k, &mut self.rng);
        let mut recorder = Recorder {
            best: &mut self.best,
            deadline: &self.deadline,
            iteration: self.iterations,
        };
        vnd(
            &mut candidate,
            &self.deadline,
            self.config.criteria,
            &mut self.rng,
            &mut recorder,
        );
        let accepted = compare(&candidate, incumbent, self.config.p_move, &mut self.rng);
        if accepted {
            self.incumbent = Some(candidate);
        } else {
            self.k = next_neighborhood(k, self.config.k_min, self.config.k_max);
        }
        Some(Step { k, accepted })
    }

    pub fn run(mut self) -> RunResult {
        while !self.finished() {
            self.step();
        }
        self.into_result()
    }

    pub fn into_result(self) -> RunResult {
        RunResult {
            k_star: self.best.k_star,
            best_coloring: self.best.coloring,
            greedy_span: self.best.trace[0].span,
            elapsed_to_best: self.best.elapsed_to_best,
            iterations_to_best: self.best.iterations_to_best,
            elapsed: self.deadline.elapsed(),
            iterations: self.iterations,
            trace: self.best.trace,
        }
    }
}

/// Runs the search until the configured budget is spent.
pub fn solve(graph: &WeightedGraph, config: &SolverConfig) -> Result<RunResult> {
    Ok(Vns::new(graph, config.clone())?.run())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{evaluate, is_feasible, max_color};
    use crate::random::random_graph;

    fn state<'g>(g: &'g WeightedGraph, c: &[u32], nc: u32) -> SearchState<'g> {
        SearchState::new(g, Coloring::new(c.to_vec()).unwrap(), nc).unwrap()
    }

    fn iter_config(seed: u64, iters: u64) -> SolverConfig {
        SolverConfig {
            seed,
            max_iterations: Some(iters),
            time_limit: Duration::from_secs(3600),
            ..SolverConfig::default()
        }
    }

    #[test]
    fn criteria_parse_and_display() {
        let m: CriteriaMask = "101".parse().unwrap();
        assert!(m.conflicts && !m.mid_distance && m.geometric_mean);
        assert_eq!(m.to_string(), "101");
        assert!("11".parse::<CriteriaMask>().is_err());
        assert!("1a1".parse::<CriteriaMask>().is_err());
        let names: Vec<String> = CriteriaMask::variants().iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["000", "001", "010", "011", "100", "101", "110", "111"]);
    }

    #[test]
    fn config_validation() {
        assert!(SolverConfig::default().validate().is_ok());
        let bad = [
            SolverConfig {
                k_min: 0,
                ..Default::default()
            },
            SolverConfig {
                k_min: 5,
                k_max: 4,
                ..Default::default()
            },
            SolverConfig {
                p_move: 1.5,
                ..Default::default()
            },
            SolverConfig {
                start_k: Some(0),
                ..Default::default()
            },
        ];
        for c in bad {
            assert!(c.validate().is_err(), "{c:?}");
        }
    }

    #[test]
    fn init_ranges() {
        let mut rng = SolverRng::seed_from_u64(1);
        assert!(init_solution(5, 1, &mut rng).is_none());
        assert_eq!(init_solution(4, 2, &mut rng).unwrap().colors(), &[1, 1, 1, 1]);
        let c = init_solution(100, 10, &mut rng).unwrap();
        assert!(c.colors().iter().all(|&x| (1..=9).contains(&x)));
        let a = init_solution(50, 10, &mut SolverRng::seed_from_u64(7));
        let b = init_solution(50, 10, &mut SolverRng::seed_from_u64(7));
        assert_eq!(a, b);
    }

    #[test]
    fn shake_hamming_distance() {
        let mut rng = SolverRng::seed_from_u64(2);
        let g = random_graph(&mut rng, 12, 0.3, 4);
        let base = state(&g, &[3; 12], 6);
        for k in [1, 2, 5, 12, 30] {
            let mut s = base.clone();
            shake(&mut s, k, &mut rng);
            let changed = s.colors().iter().zip(base.colors()).filter(|(a, b)| a != b).count();
            assert_eq!(changed, k.min(12));
            assert!(s.colors().iter().all(|&c| (1..=6).contains(&c)));
            assert!(s.is_consistent());
        }
    }

    #[test]
    fn ordering_without_criteria_is_identity() {
        let g = WeightedGraph::new(3, [(0, 2, 9)]).unwrap();
        let s = state(&g, &[5, 1, 9], 10);
        assert_eq!(order_vertices(&s, CriteriaMask::NONE), vec![0, 1, 2]);
        // mid keys |10 - 2c|: 0, 8, 8
        assert_eq!(order_vertices(&s, "010".parse().unwrap()), vec![0, 1, 2]);
        assert_eq!(order_vertices(&s, "100".parse().unwrap()), vec![0, 2, 1]);
    }

    #[test]
    fn ordering_conflicts_then_mid_distance() {
        // vertex 0 and 2 both have 5 conflicts, vertex 1 has 2
        // 0 -- 3 (d=5, colors 5 and 5), 2 -- 4 (d=5, colors 9 and 9), 1 -- 5 (d=2, colors 1,1)
        let g = WeightedGraph::new(6, [(0, 3, 5), (2, 4, 5), (1, 5, 2)]).unwrap();
        let s = state(&g, &[5, 1, 9, 5, 9, 1], 10);
        assert_eq!([s.conflict_of(0), s.conflict_of(1), s.conflict_of(2)], [5, 2, 5]);
        let order = order_vertices(&s, "110".parse().unwrap());
        let pos = |v| order.iter().position(|&x| x == v).unwrap();
        assert!(pos(0) < pos(2));
        assert!(pos(2) < pos(1));
        // vertex 1 last among the three
        assert_eq!(&order[4..], &[1, 5]);
    }

    #[test]
    fn ordering_geometric_mean_tie() {
        // keys weight_sum * max_incident: v0 = 9 * 4, v1 = 6 * 6, v5 = 6 * 6
        let g = WeightedGraph::new(6, [(0, 2, 4), (0, 3, 4), (0, 4, 1), (1, 5, 6)]).unwrap();
        let s = state(&g, &[1; 6], 1);
        let order = order_vertices(&s, "001".parse().unwrap());
        assert_eq!(order, vec![0, 1, 5, 2, 3, 4]);
    }

    #[test]
    fn vnd_single_edge_cannot_reach_three_colors() {
        let g = WeightedGraph::new(2, [(0, 1, 3)]).unwrap();
        let mut s = state(&g, &[1, 1], 3);
        let mut rng = SolverRng::seed_from_u64(0);
        let mut reports = 0;
        vnd(
            &mut s,
            &Deadline::never(),
            CriteriaMask::ALL,
            &mut rng,
            &mut |_: &SearchState<'_>| reports += 1,
        );
        assert_eq!(s.total_penalty(), 1);
        assert_eq!(reports, 0);
    }

    #[test]
    fn vnd_reports_feasible_input() {
        let g = WeightedGraph::new(2, [(0, 1, 2)]).unwrap();
        let mut s = state(&g, &[1, 5], 6);
        let mut rng = SolverRng::seed_from_u64(0);
        let mut spans = Vec::new();
        vnd(
            &mut s,
            &Deadline::never(),
            CriteriaMask::ALL,
            &mut rng,
            &mut |st: &SearchState<'_>| {
                assert!(st.is_feasible());
                spans.push(st.max_color())
            },
        );
        assert_eq!(spans[0], 5);
        assert!(spans.windows(2).all(|w| w[1] < w[0]));
        // span 3 is optimal, so the budget ends at 2
        assert_eq!(*spans.last().unwrap(), 3);
        assert_eq!(s.nc(), 2);
    }

    #[test]
    fn compare_rules() {
        let g = WeightedGraph::new(2, [(0, 1, 9)]).unwrap();
        let mut rng = SolverRng::seed_from_u64(0);
        let low = state(&g, &[1, 7], 8); // penalty 3
        let high = state(&g, &[1, 3], 8); // penalty 7
        assert!(compare(&low, &high, 0.5, &mut rng));
        assert!(!compare(&high, &low, 0.5, &mut rng));
        let fewer = state(&g, &[1, 3], 7);
        assert!(compare(&fewer, &low, 0.0, &mut rng));
        assert!(!compare(&low, &fewer, 1.0, &mut rng));
        assert!(compare(&low, &low, 1.0, &mut rng));
        assert!(!compare(&low, &low, 0.0, &mut rng));
    }

    #[test]
    fn neighborhood_cycling() {
        assert_eq!(next_neighborhood(2, 2, 4), 3);
        assert_eq!(next_neighborhood(4, 2, 4), 2);
        let mut rng = SolverRng::seed_from_u64(5);
        let g = random_graph(&mut rng, 30, 0.4, 5);
        let cfg = SolverConfig {
            k_min: 3,
            k_max: 6,
            ..iter_config(1, 300)
        };
        let mut vns = Vns::new(&g, cfg).unwrap();
        let mut prev: Option<Step> = None;
        while let Some(step) = vns.step() {
            assert!((3..=6).contains(&step.k));
            if let Some(p) = prev {
                let expected = if p.accepted { p.k } else { next_neighborhood(p.k, 3, 6) };
                assert_eq!(step.k, expected);
            }
            prev = Some(step);
            if vns.iterations() >= 300 {
                break;
            }
        }
    }

    #[test]
    fn edgeless_graph_uses_one_color() {
        let g = WeightedGraph::new(7, []).unwrap();
        let r = solve(&g, &SolverConfig::default()).unwrap();
        assert_eq!(r.k_star, 1);
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn zero_time_limit_returns_greedy() {
        let mut rng = SolverRng::seed_from_u64(9);
        let g = random_graph(&mut rng, 25, 0.5, 5);
        let cfg = SolverConfig {
            time_limit: Duration::ZERO,
            ..Default::default()
        };
        let r = solve(&g, &cfg).unwrap();
        assert_eq!(r.iterations, 0);
        assert_eq!(r.k_star, r.greedy_span);
    }

    #[test]
    fn run_result_invariants_and_reproducibility() {
        let mut rng = SolverRng::seed_from_u64(21);
        for _ in 0..5 {
            let g = random_graph(&mut rng, 25, 0.5, 6);
            let a = solve(&g, &iter_config(4, 200)).unwrap();
            let b = solve(&g, &iter_config(4, 200)).unwrap();
            assert_eq!(a.best_coloring, b.best_coloring);
            assert_eq!(a.k_star, b.k_star);
            assert_eq!(a.iterations_to_best, b.iterations_to_best);
            assert!(is_feasible(&g, &a.best_coloring).unwrap());
            assert_eq!(max_color(&a.best_coloring), a.k_star);
            assert!(a.k_star <= a.greedy_span);
            let spans: Vec<u32> = a.trace.iter().map(|i| i.span).collect();
            assert!(spans.windows(2).all(|w| w[1] < w[0]));
            assert_eq!(*spans.last().unwrap(), a.k_star);
        }
    }

    #[test]
    fn start_k_and_target() {
        let mut rng = SolverRng::seed_from_u64(8);
        let g = random_graph(&mut rng, 20, 0.5, 4);
        let greedy = greedy_ub(&g, GreedyOrder::Id).span();
        let cfg = SolverConfig {
            target_span: Some(greedy - 1),
            ..iter_config(1, 10_000)
        };
        let r = solve(&g, &cfg).unwrap();
        assert!(r.k_star < greedy);
        let cfg = SolverConfig {
            start_k: Some(greedy + 10),
            ..iter_config(1, 50)
        };
        let vns = Vns::new(&g, cfg).unwrap();
        assert_eq!(vns.incumbent().unwrap().nc(), greedy - 1);
        let r = vns.run();
        assert_eq!(evaluate(&g, &r.best_coloring).unwrap(), 0);
    }
}
