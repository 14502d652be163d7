//! Immutable simple graphs with per-vertex neighbor bitsets.

use thiserror::Error;

use crate::vertex_set::VertexSet;

/// Opaque per-vertex coordinate tag. Builders use it to record direct
/// product coordinates `(g, h)` or grid coordinates `(x, y)`.
pub type Coord = (usize, usize);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("{what}: parameter {param} must be at least {min}, got {got}")]
    ParameterTooSmall { what: &'static str, param: &'static str, min: usize, got: usize },
    #[error("direct product requires nonempty factors")]
    EmptyFactor,
    #[error("label count {got} does not match graph order {order}")]
    LabelCountMismatch { got: usize, order: usize },
}

/// A finite simple graph. Immutable once built: adjacency is validated at
/// construction (symmetric, loop-free, in range) and never changes, so
/// graphs can be shared freely across solver workers.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<Coord>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `order` vertices from an edge list. Rejects
    /// out-of-range endpoints, self-loops, and duplicate edges.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![VertexSet::new(order); order];
        let mut edge_count = 0;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            edge_count += 1;
        }
        Ok(Graph { adj, labels: None, edge_count })
    }

    /// The edgeless graph on `order` vertices.
    pub fn edgeless(order: usize) -> Graph {
        Graph { adj: vec![VertexSet::new(order); order], labels: None, edge_count: 0 }
    }

    /// Attaches per-vertex coordinate labels.
    pub fn with_labels(mut self, labels: Vec<Coord>) -> Result<Graph, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::LabelCountMismatch { got: labels.len(), order: self.order() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbor set of `v`. Panics when `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in self.vertices() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).max()
    }

    pub fn label(&self, v: usize) -> Option<Coord> {
        self.labels.as_ref().map(|l| l[v])
    }

    pub fn labels(&self) -> Option<&[Coord]> {
        self.labels.as_deref()
    }

    /// Extracts the subgraph induced by `verts`. Returns the subgraph and
    /// the map from new indices to original ones (new index `i` is the
    /// `i`-th smallest member of `verts`). Labels are carried over.
    pub fn induced_subgraph(&self, verts: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(verts.width(), self.order(), "vertex set width mismatch");
        let old_of_new: Vec<usize> = verts.to_sorted_vec();
        let mut new_of_old = vec![usize::MAX; self.order()];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let k = old_of_new.len();
        let mut adj = vec![VertexSet::new(k); k];
        for (new, &old) in old_of_new.iter().enumerate() {
            for nb in self.adj[old].intersection(verts).iter() {
                adj[new].insert(new_of_old[nb]);
            }
        }
        let edge_count = adj.iter().map(|s| s.len()).sum::<usize>() / 2;
        let labels = self
            .labels
            .as_ref()
            .map(|l| old_of_new.iter().map(|&old| l[old]).collect());
        (Graph { adj, labels, edge_count }, old_of_new)
    }

    /// Empty [`VertexSet`] sized for this graph.
    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.order())
    }

    /// Full [`VertexSet`] sized for this graph.
    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.order(), self.edge_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_validates() {
        assert!(Graph::from_edges(3, &[(0, 1), (1, 2)]).is_ok());
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
            assert!(!g.has_edge(u, u));
        }
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let verts = VertexSet::from_indices(5, [0, 1, 3, 4]);
        let (sub, map) = g.induced_subgraph(&verts);
        assert_eq!(sub.order(), 4);
        assert_eq!(map, vec![0, 1, 3, 4]);
        // surviving edges: (0,1), (3,4), (4,0)
        assert_eq!(sub.edge_count(), 3);
        assert!(sub.has_edge(0, 1));
        assert!(sub.has_edge(2, 3));
        assert!(sub.has_edge(3, 0));
        assert!(!sub.has_edge(1, 2));
    }

    #[test]
    fn degenerate_graphs() {
        let g = Graph::edgeless(0);
        assert_eq!(g.order(), 0);
        assert_eq!(g.min_degree(), None);
        let g1 = Graph::edgeless(1);
        assert_eq!(g1.min_degree(), Some(0));
    }
}
