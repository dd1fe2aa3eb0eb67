//! Balanced Forman curvature of graph edges.
//!
//! For an edge `(i, j)` whose endpoints both have degree above one,
//!
//! ```text
//! bfc(i, j) = 2/d_i + 2/d_j - 2
//!           + 2*tri/max(d_i, d_j) + tri/min(d_i, d_j)
//!           + (sq_i + sq_j) / (gamma_max * max(d_i, d_j))
//! ```
//!
//! where `tri` counts the common neighbors of `i` and `j` (the triangles
//! through the edge), `sq_i` counts the neighbors of `i` that lie on at
//! least one 4-cycle through `(i, j)` with no diagonal chord, `sq_j` is the
//! same for `j`, and `gamma_max` is the largest number of such 4-cycles
//! sharing a single middle node. An edge with a degree-one endpoint has
//! curvature exactly zero, and the square term is zero when no
//! diagonal-free 4-cycle exists (both `sq` counts are then zero as well).
//!
//! Negative values mark bridge-like bottleneck edges; values are positive
//! inside densely connected clusters. Every value is strictly greater
//! than -2.
//!
//! The precise square sets are
//!
//! ```text
//! sq_i = #{ k ∈ N_i \ (N_j ∪ {j}) : (N_k ∩ N_j) \ (N_i ∪ {i}) ≠ ∅ }
//! ```
//!
//! and symmetrically for `sq_j`; `gamma_max` maximizes, over every node on
//! either side, the number of diagonal-free 4-cycles through `(i, j)` that
//! traverse it.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Edge, Graph};

/// Diagonal-free 4-cycle census for one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareStats {
    /// Neighbors of `i` on at least one diagonal-free 4-cycle through the edge.
    pub sq_i: usize,
    /// Neighbors of `j` on at least one diagonal-free 4-cycle through the edge.
    pub sq_j: usize,
    /// Largest number of those 4-cycles traversing one common node; zero
    /// exactly when `sq_i + sq_j` is zero.
    pub gamma_max: usize,
}

/// Curvature of every edge of one graph, keyed by canonical edge.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeCurvature {
    values: BTreeMap<Edge, f64>,
}

impl EdgeCurvature {
    /// Curvature of `(u, v)` in either endpoint order; `None` when the
    /// pair is not a recorded edge.
    pub fn get(&self, u: usize, v: usize) -> Option<f64> {
        if u == v {
            return None;
        }
        self.values.get(&Edge::new(u, v)).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entries in ascending canonical edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, f64)> + '_ {
        self.values.iter().map(|(&e, &v)| (e, v))
    }

    /// Curvature values in ascending canonical edge order.
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.values().copied()
    }

    /// True when the map covers exactly the edge set of `g`.
    pub fn matches_graph(&self, g: &Graph) -> bool {
        self.values.len() == g.num_edges() && self.values.keys().all(|e| g.has_edge(e.u(), e.v()))
    }
}

impl FromIterator<(Edge, f64)> for EdgeCurvature {
    fn from_iter<T: IntoIterator<Item = (Edge, f64)>>(iter: T) -> Self {
        EdgeCurvature {
            values: iter.into_iter().collect(),
        }
    }
}

// Reusable neighborhood membership flags; set/clear cost O(d_i + d_j) per
// edge, so a full sweep stays O(|E| * d_max^2) without per-edge
// allocations.
struct Marks {
    on_i: Vec<bool>,
    on_j: Vec<bool>,
}

impl Marks {
    fn new(n: usize) -> Self {
        Marks {
            on_i: vec![false; n],
            on_j: vec![false; n],
        }
    }

    fn set(&mut self, g: &Graph, i: usize, j: usize) {
        for &k in g.neighbors(i) {
            self.on_i[k] = true;
        }
        for &k in g.neighbors(j) {
            self.on_j[k] = true;
        }
    }

    fn clear(&mut self, g: &Graph, i: usize, j: usize) {
        for &k in g.neighbors(i) {
            self.on_i[k] = false;
        }
        for &k in g.neighbors(j) {
            self.on_j[k] = false;
        }
    }
}

// Requires marks set for (i, j) and (i, j) ∈ E. For each candidate outer
// node the inner scan walks its neighbor list once, giving the
// O(d_max^2) per-edge bound.
fn square_stats_marked(g: &Graph, i: usize, j: usize, marks: &Marks) -> SquareStats {
    let mut sq_i = 0;
    let mut sq_j = 0;
    let mut gamma_max = 0;
    for &k in g.neighbors(i) {
        if k == j || marks.on_j[k] {
            continue;
        }
        // partners w close the cycle i-j-w-k-i without diagonals
        let cycles = g
            .neighbors(k)
            .iter()
            .filter(|&&w| w != i && marks.on_j[w] && !marks.on_i[w])
            .count();
        if cycles > 0 {
            sq_i += 1;
            gamma_max = gamma_max.max(cycles);
        }
    }
    for &w in g.neighbors(j) {
        if w == i || marks.on_i[w] {
            continue;
        }
        let cycles = g
            .neighbors(w)
            .iter()
            .filter(|&&k| k != j && marks.on_i[k] && !marks.on_j[k])
            .count();
        if cycles > 0 {
            sq_j += 1;
            gamma_max = gamma_max.max(cycles);
        }
    }
    SquareStats {
        sq_i,
        sq_j,
        gamma_max,
    }
}

fn count_common(a: &[usize], b: &[usize]) -> usize {
    let (mut x, mut y, mut count) = (0, 0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            core::cmp::Ordering::Equal => {
                count += 1;
                x += 1;
                y += 1;
            }
            core::cmp::Ordering::Less => x += 1,
            core::cmp::Ordering::Greater => y += 1,
        }
    }
    count
}

fn bfc_value(d_i: usize, d_j: usize, triangles: usize, sq: SquareStats) -> f64 {
    if d_i.min(d_j) <= 1 {
        return 0.0;
    }
    let d_max = d_i.max(d_j) as f64;
    let d_min = d_i.min(d_j) as f64;
    let tri = triangles as f64;
    let mut value = 2.0 / d_i as f64 + 2.0 / d_j as f64 - 2.0 + 2.0 * tri / d_max + tri / d_min;
    if sq.gamma_max > 0 {
        value += (sq.sq_i + sq.sq_j) as f64 / (sq.gamma_max as f64 * d_max);
    }
    value
}

/// Census of diagonal-free 4-cycles through the edge `(i, j)`.
pub fn square_stats(g: &Graph, i: usize, j: usize) -> Result<SquareStats, Error> {
    if !g.has_edge(i, j) {
        return Err(Error::EdgeNotPresent { u: i, v: j });
    }
    let mut marks = Marks::new(g.num_nodes());
    marks.set(g, i, j);
    Ok(square_stats_marked(g, i, j, &marks))
}

/// Balanced Forman curvature of the single edge `(i, j)`.
pub fn bfc_edge(g: &Graph, i: usize, j: usize) -> Result<f64, Error> {
    if !g.has_edge(i, j) {
        return Err(Error::EdgeNotPresent { u: i, v: j });
    }
    let mut marks = Marks::new(g.num_nodes());
    marks.set(g, i, j);
    let stats = square_stats_marked(g, i, j, &marks);
    let triangles = count_common(g.neighbors(i), g.neighbors(j));
    Ok(bfc_value(
        g.neighbors(i).len(),
        g.neighbors(j).len(),
        triangles,
        stats,
    ))
}

/// Balanced Forman curvature of every edge. Values equal per-edge
/// `bfc_edge` calls and do not depend on evaluation order.
pub fn bfc_all(g: &Graph) -> EdgeCurvature {
    let mut marks = Marks::new(g.num_nodes());
    let mut values = BTreeMap::new();
    for i in 0..g.num_nodes() {
        for &j in g.neighbors(i) {
            if j <= i {
                continue;
            }
            marks.set(g, i, j);
            let stats = square_stats_marked(g, i, j, &marks);
            marks.clear(g, i, j);
            let triangles = count_common(g.neighbors(i), g.neighbors(j));
            values.insert(
                Edge::new(i, j),
                bfc_value(g.neighbors(i).len(), g.neighbors(j).len(), triangles, stats),
            );
        }
    }
    EdgeCurvature { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{barbell, complete, cycle, path};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9
    }

    #[test]
    fn c4_square_stats() {
        let c4 = cycle(4).unwrap();
        let s = square_stats(&c4, 0, 1).unwrap();
        assert_eq!(
            s,
            SquareStats {
                sq_i: 1,
                sq_j: 1,
                gamma_max: 1
            }
        );
    }

    #[test]
    fn k4_has_no_diagonal_free_squares() {
        let k4 = complete(4).unwrap();
        for e in k4.edges() {
            let s = square_stats(&k4, e.u(), e.v()).unwrap();
            assert_eq!(
                s,
                SquareStats {
                    sq_i: 0,
                    sq_j: 0,
                    gamma_max: 0
                }
            );
        }
    }

    #[test]
    fn tree_has_no_squares() {
        let p4 = path(4).unwrap();
        let s = square_stats(&p4, 1, 2).unwrap();
        assert_eq!(
            s,
            SquareStats {
                sq_i: 0,
                sq_j: 0,
                gamma_max: 0
            }
        );
    }

    #[test]
    fn degree_one_endpoint_is_zero() {
        let p2 = path(2).unwrap();
        assert_eq!(bfc_edge(&p2, 0, 1).unwrap(), 0.0);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        for e in star.edges() {
            assert_eq!(bfc_edge(&star, e.u(), e.v()).unwrap(), 0.0);
        }
    }

    #[test]
    fn long_path_interior_edge_is_zero() {
        let p6 = path(6).unwrap();
        assert!(close(bfc_edge(&p6, 2, 3).unwrap(), 0.0));
    }

    #[test]
    fn k4_edges_are_four_thirds() {
        let k4 = complete(4).unwrap();
        for e in k4.edges() {
            assert!(close(bfc_edge(&k4, e.u(), e.v()).unwrap(), 4.0 / 3.0));
        }
    }

    #[test]
    fn c4_edges_are_one() {
        let c4 = cycle(4).unwrap();
        for e in c4.edges() {
            assert!(close(bfc_edge(&c4, e.u(), e.v()).unwrap(), 1.0));
        }
    }

    #[test]
    fn k3_edges_are_three_halves() {
        let k3 = complete(3).unwrap();
        let curv = bfc_all(&k3);
        assert_eq!(curv.len(), 3);
        for (_, v) in curv.iter() {
            assert!(close(v, 1.5));
        }
    }

    #[test]
    fn barbell_bridge_is_minus_one() {
        let g = barbell(4).unwrap();
        let curv = bfc_all(&g);
        // bridge joins the two cliques at nodes 3 and 4
        assert!(close(curv.get(3, 4).unwrap(), -1.0));
        for (e, v) in curv.iter() {
            if (e.u(), e.v()) != (3, 4) {
                assert!(v > 0.0, "clique-internal edge ({}, {}) = {v}", e.u(), e.v());
            }
        }
    }

    #[test]
    fn empty_graph_has_empty_curvature() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert!(bfc_all(&g).is_empty());
    }

    #[test]
    fn missing_edge_is_an_error() {
        let c4 = cycle(4).unwrap();
        assert_eq!(
            bfc_edge(&c4, 0, 2),
            Err(Error::EdgeNotPresent { u: 0, v: 2 })
        );
        assert!(square_stats(&c4, 0, 2).is_err());
    }

    #[test]
    fn get_is_symmetric_and_matches_graph() {
        let c4 = cycle(4).unwrap();
        let curv = bfc_all(&c4);
        assert_eq!(curv.get(1, 0), curv.get(0, 1));
        assert_eq!(curv.get(0, 0), None);
        assert!(curv.matches_graph(&c4));
        assert!(!curv.matches_graph(&complete(4).unwrap()));
    }
}
