//! Direct (tensor, categorical) product of graphs.

use crate::graph::{Graph, GraphError};

/// Index of `(g, h)` in the product of `G` with a second factor of order
/// `h_order`. Fixed as `g * h_order + h` so witnesses are portable.
pub fn pair_index(h_order: usize, g: usize, h: usize) -> usize {
    g * h_order + h
}

/// Inverse of [`pair_index`].
pub fn pair_coords(h_order: usize, idx: usize) -> (usize, usize) {
    (idx / h_order, idx % h_order)
}

/// The direct product `G x H`: vertex `(g, h)` at index `g * |V(H)| + h`,
/// with `(g, h) ~ (g', h')` iff `gg'` is an edge of `G` and `hh'` an edge of
/// `H`. Coordinate labels `(g, h)` are recorded on the result.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if g.order() == 0 || h.order() == 0 {
        return Err(GraphError::EmptyFactor);
    }
    let hn = h.order();
    let n = g.order() * hn;
    let mut edges = Vec::with_capacity(2 * g.edge_count() * h.edge_count());
    for (gu, gv) in g.edges() {
        for (hu, hv) in h.edges() {
            // each pair of factor edges induces two product edges
            edges.push((pair_index(hn, gu, hu), pair_index(hn, gv, hv)));
            edges.push((pair_index(hn, gu, hv), pair_index(hn, gv, hu)));
        }
    }
    let labels = (0..n).map(|idx| pair_coords(hn, idx)).collect();
    Graph::from_edges(n, &edges)?.with_labels(labels)
}
