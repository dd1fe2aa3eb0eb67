//! Simple undirected graphs with sorted adjacency lists, plus the dense
//! per-node feature matrices that travel with them.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// An undirected edge in canonical form: `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order.
    ///
    /// Panics if `a == b`; simple graphs carry no self-loops.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "edge endpoints must differ, got ({a}, {b})");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// Smaller endpoint.
    pub fn u(self) -> usize {
        self.u
    }

    /// Larger endpoint.
    pub fn v(self) -> usize {
        self.v
    }
}

/// A simple undirected unweighted graph over dense node indices `0..n`.
///
/// Adjacency lists are strictly ascending, never contain the owning node,
/// and are symmetric: `j ∈ adj[i]` iff `i ∈ adj[j]`. Construction enforces
/// all of this; the struct is immutable afterwards and safe to share
/// across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs and reversed
    /// duplicates collapse into one undirected edge.
    pub fn from_edges(num_nodes: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut adj = vec![Vec::new(); num_nodes];
        for &(u, v) in edges {
            let hi = u.max(v);
            if hi >= num_nodes {
                return Err(Error::IndexOutOfRange {
                    index: hi,
                    bound: num_nodes,
                });
            }
            if u == v {
                return Err(Error::SelfLoopRejected { node: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn num_nodes(&self) -> usize {
        self.adj.len()
    }

    /// Number of undirected edges.
    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Degree of node `i`.
    pub fn degree(&self, i: usize) -> Result<usize, Error> {
        self.adj.get(i).map(Vec::len).ok_or(Error::IndexOutOfRange {
            index: i,
            bound: self.adj.len(),
        })
    }

    /// Neighbors of `i` in ascending order. Panics if `i >= num_nodes`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.adj.len() && v < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted intersection of the neighborhoods of `i` and `j`, i.e. the
    /// third corners of all triangles through the pair. Linear merge over
    /// the two sorted lists.
    pub fn common_neighbors(&self, i: usize, j: usize) -> Result<Vec<usize>, Error> {
        let bound = self.adj.len();
        if i >= bound {
            return Err(Error::IndexOutOfRange { index: i, bound });
        }
        if j >= bound {
            return Err(Error::IndexOutOfRange { index: j, bound });
        }
        debug_assert!(i != j, "common_neighbors expects distinct nodes");
        let (mut a, mut b) = (self.adj[i].iter().peekable(), self.adj[j].iter().peekable());
        let mut out = Vec::new();
        while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
            if x == y {
                out.push(x);
                a.next();
                b.next();
            } else if x < y {
                a.next();
            } else {
                b.next();
            }
        }
        Ok(out)
    }

    /// Edges in canonical `(u, v)` order, ascending lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }
}

/// Dense row-major feature matrix; row `i` is the feature vector of node
/// `i`. All values are finite by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl FeatureMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(FeatureMatrix { rows, cols, data })
    }

    /// Builds from per-node rows, which must all share one length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, Error> {
        let cols = rows.first().map(Vec::len).unwrap_or(0);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ShapeMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
        }
        let data: Vec<f64> = rows.iter().flatten().copied().collect();
        FeatureMatrix::new(rows.len(), cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Feature vector of node `r`. Panics if `r >= rows`.
    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn build_dedups_and_symmetrizes() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.neighbors(2), &[1]);
    }

    #[test]
    fn empty_edge_list_gives_isolated_nodes() {
        let g = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(g.num_nodes(), 2);
        assert_eq!(g.num_edges(), 0);
        assert_eq!(g.degree(0).unwrap(), 0);
        assert_eq!(g.degree(1).unwrap(), 0);
    }

    #[test]
    fn complete_graph_degrees() {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = Graph::from_edges(4, &edges).unwrap();
        for i in 0..4 {
            assert_eq!(g.degree(i).unwrap(), 3);
        }
        assert_eq!(g.num_edges(), 6);
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(Error::SelfLoopRejected { node: 0 })
        );
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, bound: 2 })
        );
        assert!(Graph::from_edges(2, &[]).unwrap().degree(2).is_err());
    }

    #[test]
    fn common_neighbors_examples() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.common_neighbors(0, 1).unwrap(), vec![2, 3]);

        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.common_neighbors(0, 1).unwrap(), Vec::<usize>::new());

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.common_neighbors(0, 1).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn common_neighbors_is_symmetric() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    assert_eq!(g.common_neighbors(i, j), g.common_neighbors(j, i));
                }
            }
        }
    }

    #[test]
    fn rebuild_from_emitted_edges_is_identity() {
        let g = Graph::from_edges(5, &[(3, 1), (0, 4), (1, 0), (0, 1), (2, 4)]).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u(), e.v())).collect();
        let rebuilt = Graph::from_edges(5, &edges).unwrap();
        assert_eq!(g, rebuilt);
        let deg_sum: usize = (0..5).map(|i| g.degree(i).unwrap()).sum();
        assert_eq!(deg_sum, 2 * g.num_edges());
    }

    #[test]
    fn edge_canonicalizes() {
        let e = Edge::new(3, 1);
        assert_eq!((e.u(), e.v()), (1, 3));
    }

    #[test]
    fn feature_matrix_shape_checks() {
        assert!(FeatureMatrix::new(2, 2, vec![1.0, 2.0, 3.0]).is_err());
        assert_eq!(
            FeatureMatrix::new(1, 1, vec![f64::NAN]),
            Err(Error::NonFinite)
        );
        let m = FeatureMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(m.row(1), &[3.0, 4.0]);
        assert!(FeatureMatrix::from_rows(&[vec![1.0], vec![1.0, 2.0]]).is_err());
    }
}
