//! r-neighbor bootstrap percolation: closures and round-by-round traces.
//!
//! The update rule: an uninfected vertex becomes infected once at least `r`
//! of its neighbors are infected, and infected vertices stay infected. The
//! closure of a seed set is the unique fixpoint of that rule.
//!
//! Two implementations are kept side by side on purpose. [`closure`] drives
//! per-vertex infected-neighbor counters with a work list (amortized
//! `O(sum of degrees)`), which is what the exact solver hammers millions of
//! times. [`closure_naive`] rescans every vertex each round; it exists as an
//! independent reference the test suites compare against.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("seed set width {set} does not match graph order {graph}")]
    WidthMismatch { set: usize, graph: usize },
    #[error("infection threshold r must be at least 1")]
    ZeroThreshold,
}

fn validate(g: &Graph, r: usize, a0: &VertexSet) -> Result<(), EngineError> {
    if r == 0 {
        return Err(EngineError::ZeroThreshold);
    }
    if a0.width() != g.order() {
        return Err(EngineError::WidthMismatch { set: a0.width(), graph: g.order() });
    }
    Ok(())
}

/// Reusable scratch space for closure computations. The solver keeps one per
/// worker so the hot path never allocates.
#[derive(Clone)]
pub(crate) struct Workspace {
    counts: Vec<u32>,
    frontier: Vec<usize>,
    next: Vec<usize>,
    blue: VertexSet,
}

impl Workspace {
    pub(crate) fn for_graph(g: &Graph) -> Workspace {
        Workspace {
            counts: vec![0; g.order()],
            frontier: Vec::with_capacity(g.order()),
            next: Vec::with_capacity(g.order()),
            blue: VertexSet::new(g.order()),
        }
    }

    /// Runs the counter-based closure from `a0`. Returns the number of blue
    /// vertices at the fixpoint; the fixpoint itself is left in `self.blue`.
    /// With `stop_when_full` the propagation exits as soon as every vertex
    /// is blue (the solver only needs that bit).
    pub(crate) fn run(&mut self, g: &Graph, r: usize, a0: &VertexSet, stop_when_full: bool) -> usize {
        let n = g.order();
        self.counts[..n].fill(0);
        self.blue.copy_from(a0);
        self.frontier.clear();
        self.next.clear();
        self.frontier.extend(a0.iter());
        let mut blue_count = self.frontier.len();
        let r32 = r as u32;
        while !self.frontier.is_empty() {
            if stop_when_full && blue_count == n {
                return blue_count;
            }
            // One synchronous round: raise counts for the round's new blue
            // vertices, then collect everything that crossed the threshold.
            for &v in &self.frontier {
                for u in g.neighbors(v).iter() {
                    if self.blue.contains(u) {
                        continue;
                    }
                    self.counts[u] += 1;
                    if self.counts[u] == r32 {
                        self.next.push(u);
                    }
                }
            }
            self.frontier.clear();
            std::mem::swap(&mut self.frontier, &mut self.next);
            for &v in &self.frontier {
                self.blue.insert(v);
            }
            blue_count += self.frontier.len();
        }
        blue_count
    }

    pub(crate) fn blue(&self) -> &VertexSet {
        &self.blue
    }
}

/// The percolation closure: the fixpoint of the update rule from `a0`.
pub fn closure(g: &Graph, r: usize, a0: &VertexSet) -> Result<VertexSet, EngineError> {
    validate(g, r, a0)?;
    let mut ws = Workspace::for_graph(g);
    ws.run(g, r, a0, false);
    Ok(ws.blue)
}

/// Reference implementation: rescans all vertices every round. Quadratic,
/// deliberately independent of [`closure`]'s counter bookkeeping.
pub fn closure_naive(g: &Graph, r: usize, a0: &VertexSet) -> Result<VertexSet, EngineError> {
    validate(g, r, a0)?;
    let mut blue = a0.clone();
    loop {
        let mut grew = false;
        let snapshot = blue.clone();
        for v in g.vertices() {
            if !snapshot.contains(v) && g.neighbors(v).intersection_count(&snapshot) >= r {
                blue.insert(v);
                grew = true;
            }
        }
        if !grew {
            return Ok(blue);
        }
    }
}

/// Does `a0` percolate, i.e. is its closure all of `V(G)`? The empty seed
/// on a nonempty graph never percolates.
pub fn propagates(g: &Graph, r: usize, a0: &VertexSet) -> Result<bool, EngineError> {
    validate(g, r, a0)?;
    let mut ws = Workspace::for_graph(g);
    Ok(ws.run(g, r, a0, true) == g.order())
}

/// The round-by-round infection sequence `A_0 ⊆ A_1 ⊆ … ⊆ A_T`, where `T`
/// is the first fixpoint index (the fixpoint is stored once).
#[derive(Debug, Clone, Serialize)]
pub struct PercolationTrace {
    pub r: usize,
    /// `rounds[t]` is `A_t`; strictly increasing, last entry is the fixpoint.
    pub rounds: Vec<VertexSet>,
    /// `newly_infected[t-1]` is `A_t \ A_{t-1}` for `t = 1..=T`.
    pub newly_infected: Vec<VertexSet>,
}

impl PercolationTrace {
    /// The first fixpoint index `T`.
    pub fn t_max(&self) -> usize {
        self.rounds.len() - 1
    }

    pub fn fixpoint(&self) -> &VertexSet {
        self.rounds.last().expect("trace always holds A_0")
    }
}

/// Full percolation trace from `a0`.
pub fn trace(g: &Graph, r: usize, a0: &VertexSet) -> Result<PercolationTrace, EngineError> {
    validate(g, r, a0)?;
    let n = g.order();
    let mut blue = a0.clone();
    let mut counts = vec![0u32; n];
    let mut rounds = vec![blue.clone()];
    let mut newly = Vec::new();
    let mut frontier: Vec<usize> = a0.iter().collect();
    let r32 = r as u32;
    loop {
        let mut next = Vec::new();
        for &v in &frontier {
            for u in g.neighbors(v).iter() {
                if blue.contains(u) {
                    continue;
                }
                counts[u] += 1;
                if counts[u] == r32 {
                    next.push(u);
                }
            }
        }
        if next.is_empty() {
            return Ok(PercolationTrace { r, rounds, newly_infected: newly });
        }
        let mut new_set = VertexSet::new(n);
        for &v in &next {
            blue.insert(v);
            new_set.insert(v);
        }
        rounds.push(blue.clone());
        newly.push(new_set);
        frontier = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};
    use crate::product::{direct_product, pair_index};

    fn set(width: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_indices(width, vs.iter().copied())
    }

    #[test]
    fn closure_c6_alternating_fills() {
        let c6 = cycle(6).unwrap();
        let out = closure(&c6, 2, &set(6, &[0, 2, 4])).unwrap();
        assert!(out.is_full());
    }

    #[test]
    fn closure_of_full_is_full() {
        let c6 = cycle(6).unwrap();
        let out = closure(&c6, 2, &VertexSet::full(6)).unwrap();
        assert!(out.is_full());
    }

    #[test]
    fn closure_p5_single_seed_is_stuck() {
        let p5 = path(5).unwrap();
        let out = closure(&p5, 2, &set(5, &[0])).unwrap();
        assert_eq!(out.to_sorted_vec(), vec![0]);
    }

    #[test]
    fn antipodal_pair_does_not_percolate_c6() {
        let c6 = cycle(6).unwrap();
        let out = closure(&c6, 2, &set(6, &[0, 3])).unwrap();
        assert_eq!(out.to_sorted_vec(), vec![0, 3]);
        assert!(!propagates(&c6, 2, &set(6, &[0, 3])).unwrap());
    }

    #[test]
    fn empty_seed_never_percolates_nonempty_graph() {
        let k4 = complete(4).unwrap();
        assert!(!propagates(&k4, 2, &VertexSet::new(4)).unwrap());
    }

    #[test]
    fn r1_closure_is_component_union() {
        // components {0,1,2} and {3,4}; seeding one vertex grabs its component
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let out = closure(&g, 1, &set(5, &[0])).unwrap();
        assert_eq!(out.to_sorted_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn errors() {
        let c6 = cycle(6).unwrap();
        assert_eq!(
            closure(&c6, 2, &VertexSet::new(5)),
            Err(EngineError::WidthMismatch { set: 5, graph: 6 })
        );
        assert_eq!(closure(&c6, 0, &VertexSet::new(6)), Err(EngineError::ZeroThreshold));
    }

    #[test]
    fn trace_c6_one_round() {
        let c6 = cycle(6).unwrap();
        let tr = trace(&c6, 2, &set(6, &[0, 2, 4])).unwrap();
        assert_eq!(tr.t_max(), 1);
        assert_eq!(tr.newly_infected[0].to_sorted_vec(), vec![1, 3, 5]);
        assert!(tr.fixpoint().is_full());
    }

    #[test]
    fn trace_of_full_seed_has_no_rounds() {
        let c6 = cycle(6).unwrap();
        let tr = trace(&c6, 2, &VertexSet::full(6)).unwrap();
        assert_eq!(tr.t_max(), 0);
        assert!(tr.newly_infected.is_empty());
    }

    #[test]
    fn trace_rounds_strictly_increase_and_are_sound() {
        let g = direct_product(&cycle(5).unwrap(), &path(4).unwrap()).unwrap();
        let seed = set(20, &[0, 4, 8, 12, 16]); // the C5-layer on h = 0
        let tr = trace(&g, 2, &seed).unwrap();
        for t in 1..=tr.t_max() {
            assert!(tr.rounds[t - 1].is_subset_of(&tr.rounds[t]));
            assert!(tr.rounds[t].len() > tr.rounds[t - 1].len());
            // round soundness: every newly infected vertex really had >= r
            // blue neighbors in the previous round
            for v in tr.newly_infected[t - 1].iter() {
                assert!(g.neighbors(v).intersection_count(&tr.rounds[t - 1]) >= 2);
            }
        }
        assert!(tr.t_max() <= g.order());
    }

    #[test]
    fn layer_infects_adjacent_layer_in_round_one() {
        // starting from a full G-layer in G x P3 with min degree >= 2, round
        // one infects exactly the adjacent layer
        let g = cycle(4).unwrap();
        let h = path(3).unwrap();
        let prod = direct_product(&g, &h).unwrap();
        let layer0 = VertexSet::from_indices(12, (0..4).map(|gv| pair_index(3, gv, 0)));
        let tr = trace(&prod, 2, &layer0).unwrap();
        let layer1: Vec<usize> = (0..4).map(|gv| pair_index(3, gv, 1)).collect();
        assert_eq!(tr.newly_infected[0].to_sorted_vec(), layer1);
    }

    #[test]
    fn engines_agree_on_samples() {
        let g = direct_product(&complete(4).unwrap(), &cycle(5).unwrap()).unwrap();
        for seed_bits in [0b1u32, 0b1001, 0b100110, 0b11100101] {
            let seed = VertexSet::from_indices(
                g.order(),
                (0..20).filter(|i| seed_bits >> (i % 8) & 1 == 1),
            );
            for r in 1..=3 {
                assert_eq!(
                    closure(&g, r, &seed).unwrap(),
                    closure_naive(&g, r, &seed).unwrap()
                );
            }
        }
    }
}
