//! Structural analysis: connectivity, bipartiteness, odd-cycle witnesses.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Connected components as vertex sets, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut seen = VertexSet::new(n);
    let mut comps = Vec::new();
    for start in g.vertices() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::new(n);
        let mut stack = vec![start];
        comp.insert(start);
        seen.insert(start);
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v).iter() {
                if comp.insert(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        comps.push(comp);
    }
    comps
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Result of the bipartiteness test: either one color class of a proper
/// two-coloring, or an odd cycle witnessing non-bipartiteness.
#[derive(Debug, Clone)]
pub enum Bipartiteness {
    /// `side` is one color class; the other is its complement within each
    /// component.
    Bipartite { side: VertexSet },
    /// Vertices of an odd cycle in order; consecutive entries (and the
    /// last/first pair) are adjacent.
    OddCycle { cycle: Vec<usize> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// BFS two-coloring. On an odd closing edge, the witness cycle is assembled
/// from the two tree paths to the endpoints' lowest common ancestor.
pub fn bipartiteness(g: &Graph) -> Bipartiteness {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut side = VertexSet::new(n);
    for start in g.vertices() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        side.insert(start);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v).iter() {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    if color[u] == 0 {
                        side.insert(u);
                    }
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return Bipartiteness::OddCycle { cycle: extract_cycle(&parent, &depth, v, u) };
                }
            }
        }
    }
    Bipartiteness::Bipartite { side }
}

fn extract_cycle(parent: &[usize], depth: &[usize], mut a: usize, mut b: usize) -> Vec<usize> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // `left` ends at the common ancestor; append the other side in reverse,
    // skipping the duplicated ancestor.
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Vertices of some odd cycle, or `None` when the graph is bipartite.
pub fn contains_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    match bipartiteness(g) {
        Bipartiteness::Bipartite { .. } => None,
        Bipartiteness::OddCycle { cycle } => Some(cycle),
    }
}
