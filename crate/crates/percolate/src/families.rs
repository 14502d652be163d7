//! Builders for the named graph families the theorems are stated on.

use crate::graph::{Graph, GraphError};

fn too_small(what: &'static str, param: &'static str, min: usize, got: usize) -> GraphError {
    GraphError::ParameterTooSmall { what, param, min, got }
}

/// Path `P_n` on vertices `0..n`, edges `{i, i+1}`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(too_small("path", "n", 1, n));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(too_small("cycle", "n", 3, n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(too_small("complete", "n", 1, n));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a < 1 {
        return Err(too_small("complete_bipartite", "a", 1, a));
    }
    if b < 1 {
        return Err(too_small("complete_bipartite", "b", 1, b));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// Hypercube `Q_d`: vertices are the `2^d` bit strings, edges join strings
/// at Hamming distance one.
pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    if d < 1 {
        return Err(too_small("hypercube", "d", 1, d));
    }
    let n = 1usize << d;
    let mut edges = Vec::with_capacity(n * d / 2);
    for u in 0..n {
        for bit in 0..d {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// The star `K_{1,n-1}` (center 0, leaves `1..n`) plus one edge between
/// leaves 1 and 2. Requires `n >= 3`. Any pair of leaves gives an isomorphic
/// graph; fixing leaves 1 and 2 makes the builder deterministic.
pub fn star_plus_edge(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(too_small("star_plus_edge", "n", 3, n));
    }
    let mut edges: Vec<_> = (1..n).map(|leaf| (0, leaf)).collect();
    edges.push((1, 2));
    Graph::from_edges(n, &edges)
}

/// The star `K_{1,n-1}` itself (center 0).
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(too_small("star", "n", 2, n));
    }
    let edges: Vec<_> = (1..n).map(|leaf| (0, leaf)).collect();
    Graph::from_edges(n, &edges)
}

/// `B_m`: a six-cycle `0..6` plus `m-1` internally disjoint paths of length
/// three between the fixed antipodal pair `(0, 3)`. `B_1` is `C_6` itself;
/// `|V(B_m)| = 6 + 2(m-1)`.
pub fn b_family(m: usize) -> Result<Graph, GraphError> {
    if m < 1 {
        return Err(too_small("b_family", "m", 1, m));
    }
    let n = 6 + 2 * (m - 1);
    let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    let mut next = 6;
    for _ in 1..m {
        let (a, b) = (next, next + 1);
        edges.push((0, a));
        edges.push((a, b));
        edges.push((b, 3));
        next += 2;
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_multiset(g: &Graph) -> Vec<usize> {
        let mut d: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn path_shapes() {
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(path(2).unwrap().edge_count(), 1);
        assert_eq!(degree_multiset(&path(5).unwrap()), vec![1, 1, 2, 2, 2]);
        assert!(path(0).is_err());
    }

    #[test]
    fn cycle_and_complete() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.min_degree(), Some(2));
        assert!(cycle(2).is_err());
        let k4 = complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.min_degree(), Some(3));
    }

    #[test]
    fn bipartite_and_cube() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(degree_multiset(&k23), vec![2, 2, 2, 3, 3]);
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.order(), 8);
        assert_eq!(q3.min_degree(), Some(3));
        assert_eq!(q3.max_degree(), Some(3));
        assert!(hypercube(0).is_err());
    }

    #[test]
    fn star_plus_edge_shape() {
        let g = star_plus_edge(6).unwrap();
        // center degree 5, leaves 1 and 2 degree 2, remaining leaves degree 1
        assert_eq!(degree_multiset(&g), vec![1, 1, 1, 2, 2, 5]);
        assert!(g.has_edge(1, 2));
        assert!(star_plus_edge(2).is_err());
    }

    #[test]
    fn b_family_shapes() {
        let b1 = b_family(1).unwrap();
        assert_eq!((b1.order(), b1.edge_count()), (6, 6));
        assert_eq!(b1.min_degree(), Some(2));
        assert_eq!(b1.max_degree(), Some(2));

        let b3 = b_family(3).unwrap();
        assert_eq!(b3.order(), 10);
        let deg = degree_multiset(&b3);
        assert_eq!(deg.iter().filter(|&&d| d == 4).count(), 2);
        assert_eq!(deg.iter().filter(|&&d| d == 2).count(), 8);
        assert_eq!(b3.degree(0), 4);
        assert_eq!(b3.degree(3), 4);
    }
}
