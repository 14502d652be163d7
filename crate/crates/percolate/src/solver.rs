//! Exact computation of the r-bootstrap percolation number m(G, r).
//!
//! The solver decomposes the graph into connected components (the value of a
//! disjoint union is the sum over components), then runs iterative
//! deepening per component: try k, prove no percolating set of size k
//! exists, move to k+1. Candidate sets always contain every forced vertex
//! (degree < r: such vertices can never be infected by the rule, so they
//! belong to every percolating set); enumeration is over the remainder in
//! increasing index order, so the first witness found is the
//! lexicographically smallest one. A branch is pruned when even the whole
//! remaining suffix pool cannot complete the partial set to a percolating
//! set, which is sound by closure monotonicity.
//!
//! The top-level choice of the first free vertex splits the enumeration
//! into chunks that run in parallel on the current rayon pool; the reduce
//! step keeps the witness from the smallest chunk index, so results do not
//! depend on the worker count. Chunks are never cancelled, which keeps
//! `sets_examined` deterministic as well.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::connected_components;
use crate::engine::{EngineError, Workspace};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Resource limits for a solve. The budget bounds the number of closure
/// evaluations; exceeding it yields an explicit inconclusive outcome, never
/// a silently wrong value.
#[derive(Debug, Clone, Serialize)]
pub struct SolverConfig {
    pub max_closure_evals: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_closure_evals: 100_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundOrigin {
    ForcedCount,
    ComponentSum,
    Perimeter,
    Trivial,
}

impl std::fmt::Display for BoundOrigin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundOrigin::ForcedCount => "forced-count",
            BoundOrigin::ComponentSum => "component-sum",
            BoundOrigin::Perimeter => "perimeter",
            BoundOrigin::Trivial => "trivial",
        };
        f.write_str(s)
    }
}

/// A certified exact result: `witness` percolates, `|witness| = value`, and
/// `exhaustive` records that the search proved no smaller set percolates.
#[derive(Debug, Clone, Serialize)]
pub struct SolverReport {
    pub value: usize,
    pub witness: VertexSet,
    pub lower_bound: usize,
    pub lower_bound_origin: BoundOrigin,
    pub sets_examined: u64,
    #[serde(skip)]
    pub wall_time: Duration,
    pub exhaustive: bool,
}

/// Outcome of a solve: exact, or honest bounds when the budget ran out.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SolveOutcome {
    Exact(SolverReport),
    Inconclusive {
        lower_bound: usize,
        upper_bound: usize,
        /// A percolating set witnessing `upper_bound`.
        upper_witness: VertexSet,
        sets_examined: u64,
        #[serde(skip)]
        wall_time: Duration,
    },
}

impl SolveOutcome {
    pub fn exact(&self) -> Option<&SolverReport> {
        match self {
            SolveOutcome::Exact(r) => Some(r),
            SolveOutcome::Inconclusive { .. } => None,
        }
    }

    /// The exact value, panicking on an inconclusive outcome. Test helper.
    pub fn value(&self) -> usize {
        self.exact().expect("solver was inconclusive").value
    }
}

/// All vertices of degree less than `r`. They cannot be infected by the
/// update rule, so every percolating set contains them.
pub fn forced_vertices(g: &Graph, r: usize) -> VertexSet {
    let mut s = g.empty_set();
    for v in g.vertices() {
        if g.degree(v) < r {
            s.insert(v);
        }
    }
    s
}

/// Greedy percolating set: start from the forced vertices and repeatedly add
/// the vertex whose addition grows the closure the most (smallest index on
/// ties). Always returns a percolating set; its size is an upper bound on
/// m(G, r).
pub fn greedy_upper(g: &Graph, r: usize) -> Result<VertexSet, EngineError> {
    let n = g.order();
    if n == 0 {
        return Ok(g.empty_set());
    }
    if r == 0 {
        return Err(EngineError::ZeroThreshold);
    }
    let mut ws = Workspace::for_graph(g);
    let mut seeds = forced_vertices(g, r);
    let mut blue_count = ws.run(g, r, &seeds, false);
    let mut blue = ws.blue().clone();
    while blue_count < n {
        let mut best: Option<(usize, usize)> = None; // (gain, vertex)
        for v in g.vertices() {
            if blue.contains(v) {
                continue;
            }
            let mut trial = seeds.clone();
            trial.insert(v);
            let grown = ws.run(g, r, &trial, false);
            let gain = grown - blue_count;
            if best.map_or(true, |(bg, _)| gain > bg) {
                best = Some((gain, v));
            }
        }
        let (_, v) = best.expect("uninfected vertex must exist");
        seeds.insert(v);
        blue_count = ws.run(g, r, &seeds, false);
        blue = ws.blue().clone();
    }
    Ok(seeds)
}

struct SearchCtx<'a> {
    sub: &'a Graph,
    r: usize,
    base: &'a VertexSet,
    free: &'a [usize],
    /// `suffix_pool[i]` = base plus all free vertices at positions >= i.
    suffix_pool: &'a [VertexSet],
    evals: &'a AtomicU64,
    budget: u64,
}

struct BudgetExceeded;

impl SearchCtx<'_> {
    fn covers_all(&self, ws: &mut Workspace, seed: &VertexSet) -> Result<bool, BudgetExceeded> {
        if self.evals.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(BudgetExceeded);
        }
        Ok(ws.run(self.sub, self.r, seed, true) == self.sub.order())
    }

    /// Depth-first enumeration of `slots` more picks from `free[pos..]`.
    /// Returns the first (lexicographically smallest) completed witness.
    fn dfs(
        &self,
        ws: &mut Workspace,
        current: &mut VertexSet,
        pos: usize,
        slots: usize,
        ) -> Result<Option<VertexSet>, BudgetExceeded> {
        if slots == 0 {
            return Ok(if self.covers_all(ws, current)? { Some(current.clone()) } else { None });
        }
        if self.free.len() - pos < slots {
            return Ok(None);
        }
        // Superset-monotonicity cut: if even taking the whole suffix pool
        // cannot percolate, no completion from here can.
        let mut pool = current.clone();
        pool.union_with(&self.suffix_pool[pos]);
        if !self.covers_all(ws, &pool)? {
            return Ok(None);
        }
        for i in pos..=self.free.len() - slots {
            current.insert(self.free[i]);
            if let Some(w) = self.dfs(ws, current, i + 1, slots - 1)? {
                return Ok(Some(w));
            }
            current.remove(self.free[i]);
        }
        Ok(None)
    }
}

/// Searches for a percolating superset of `base` using exactly `k_free`
/// vertices from `free`. Parallel over the first pick.
fn search_at_k(ctx: &SearchCtx<'_>, k_free: usize) -> Result<Option<VertexSet>, BudgetExceeded> {
    if k_free == 0 {
        let mut ws = Workspace::for_graph(ctx.sub);
        return Ok(if ctx.covers_all(&mut ws, ctx.base)? { Some(ctx.base.clone()) } else { None });
    }
    if ctx.free.len() < k_free {
        return Ok(None);
    }
    let last_first = ctx.free.len() - k_free;
    let chunk_results: Vec<Result<Option<VertexSet>, BudgetExceeded>> = (0..=last_first)
        .into_par_iter()
        .map(|first| {
            let mut ws = Workspace::for_graph(ctx.sub);
            let mut current = ctx.base.clone();
            current.insert(ctx.free[first]);
            ctx.dfs(&mut ws, &mut current, first + 1, k_free - 1)
        })
        .collect();
    // Reduce in chunk order: the first hit is the lexicographically
    // smallest witness over the whole enumeration.
    let mut exceeded = false;
    for res in chunk_results {
        match res {
            Ok(Some(w)) => return Ok(Some(w)),
            Ok(None) => {}
            Err(BudgetExceeded) => exceeded = true,
        }
    }
    if exceeded {
        Err(BudgetExceeded)
    } else {
        Ok(None)
    }
}

struct ComponentSolve {
    value: usize,
    witness: VertexSet, // in component-local indices
    lower: usize,
    origin: BoundOrigin,
}

fn component_lower_bound(sub: &Graph, r: usize, forced: &VertexSet) -> (usize, BoundOrigin) {
    let trivial = r.min(sub.order()).max(usize::from(sub.order() > 0));
    let fc = forced.len();
    if fc >= trivial && fc > 0 {
        (fc, BoundOrigin::ForcedCount)
    } else {
        (trivial, BoundOrigin::Trivial)
    }
}

fn solve_component(
    sub: &Graph,
    r: usize,
    evals: &AtomicU64,
    budget: u64,
) -> Result<ComponentSolve, (usize, VertexSet)> {
    let forced = forced_vertices(sub, r);
    let (lower, origin) = component_lower_bound(sub, r, &forced);
    let greedy = greedy_upper(sub, r).expect("r >= 1 checked by caller");
    let free: Vec<usize> = sub.vertices().filter(|&v| !forced.contains(v)).collect();
    let mut suffix_pool = vec![forced.clone(); free.len() + 1];
    for i in (0..free.len()).rev() {
        suffix_pool[i] = suffix_pool[i + 1].clone();
        suffix_pool[i].insert(free[i]);
    }
    let ctx = SearchCtx { sub, r, base: &forced, free: &free, suffix_pool: &suffix_pool, evals, budget };
    for k in lower..=greedy.len() {
        match search_at_k(&ctx, k - forced.len()) {
            Ok(Some(witness)) => {
                return Ok(ComponentSolve { value: k, witness, lower, origin });
            }
            Ok(None) => {}
            // On budget exhaustion report the bounds proven so far: no set
            // of size k-1 exists, and the greedy set is an upper bound.
            Err(BudgetExceeded) => return Err((k, greedy)),
        }
    }
    unreachable!("the greedy set percolates, so some k <= |greedy| succeeds");
}

/// Computes m(G, r) exactly with a certified witness, or honest bounds when
/// the budget is exhausted. The witness is the lexicographically smallest
/// minimum percolating set, independent of the rayon worker count.
pub fn min_percolating(g: &Graph, r: usize, config: &SolverConfig) -> Result<SolveOutcome, EngineError> {
    if r == 0 {
        return Err(EngineError::ZeroThreshold);
    }
    let start = Instant::now();
    let comps = connected_components(g);
    let evals = AtomicU64::new(0);
    let n = g.order();

    let mut total_value = 0usize;
    let mut witness = VertexSet::new(n);
    let mut lower_sum = 0usize;
    let mut single_origin = BoundOrigin::Trivial;

    for (idx, comp) in comps.iter().enumerate() {
        let (sub, map) = g.induced_subgraph(comp);
        match solve_component(&sub, r, &evals, config.max_closure_evals) {
            Ok(cs) => {
                total_value += cs.value;
                lower_sum += cs.lower;
                single_origin = cs.origin;
                for v in cs.witness.iter() {
                    witness.insert(map[v]);
                }
            }
            Err((k_reached, greedy)) => {
                // Partial result: exact on components [0, idx), bounded on
                // the rest.
                let mut lower = total_value + k_reached;
                let mut upper_witness = witness.clone();
                let mut upper = total_value;
                for v in greedy.iter() {
                    upper_witness.insert(map[v]);
                }
                upper += greedy.len();
                for rest in comps.iter().skip(idx + 1) {
                    let (rsub, rmap) = g.induced_subgraph(rest);
                    let rforced = forced_vertices(&rsub, r);
                    lower += component_lower_bound(&rsub, r, &rforced).0;
                    let rgreedy = greedy_upper(&rsub, r)?;
                    upper += rgreedy.len();
                    for v in rgreedy.iter() {
                        upper_witness.insert(rmap[v]);
                    }
                }
                return Ok(SolveOutcome::Inconclusive {
                    lower_bound: lower,
                    upper_bound: upper,
                    upper_witness,
                    sets_examined: evals.load(Ordering::Relaxed),
                    wall_time: start.elapsed(),
                });
            }
        }
    }

    let (lower_bound, origin) = match comps.len() {
        0 | 1 => (lower_sum, single_origin),
        _ => (lower_sum, BoundOrigin::ComponentSum),
    };
    Ok(SolveOutcome::Exact(SolverReport {
        value: total_value,
        witness,
        lower_bound,
        lower_bound_origin: origin,
        sets_examined: evals.load(Ordering::Relaxed),
        wall_time: start.elapsed(),
        exhaustive: true,
    }))
}

/// Independent brute-force oracle: enumerate every subset of `V(G)` in
/// increasing size (lexicographic within a size) using only the naive
/// engine, and return the first percolating one. Exponential; intended for
/// graphs of at most a dozen vertices in tests and verification suites.
pub mod oracle {
    use crate::engine::closure_naive;
    use crate::graph::Graph;
    use crate::vertex_set::VertexSet;

    /// Advances `picks` to the next k-combination of `0..n` in
    /// lexicographic order; returns false after the last one.
    fn next_combination(picks: &mut [usize], n: usize) -> bool {
        let k = picks.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if picks[i] != i + n - k {
                picks[i] += 1;
                for j in i + 1..k {
                    picks[j] = picks[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    pub fn naive_min_percolating(g: &Graph, r: usize) -> (usize, VertexSet) {
        let n = g.order();
        for k in 0..=n {
            let mut picks: Vec<usize> = (0..k).collect();
            loop {
                let seed = VertexSet::from_indices(n, picks.iter().copied());
                if closure_naive(g, r, &seed).expect("valid widths").is_full() {
                    return (k, seed);
                }
                if !next_combination(&mut picks, n) {
                    break;
                }
            }
        }
        unreachable!("the full vertex set percolates");
    }
}
