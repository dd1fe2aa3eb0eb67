//! Brute-force oracles and randomized fixtures backing the test suites.
//!
//! Everything here favors obviousness over speed: dense adjacency
//! matrices, exhaustive subset enumeration, plain BFS. None of it shares
//! code with the optimized implementations it checks.

// loop indices are node ids throughout; enumerate() would obscure that
#![allow(clippy::needless_range_loop)]

use curvpool_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Dense boolean adjacency matrix rebuilt from a graph's edge iterator,
/// so oracle arithmetic never touches the adjacency-list paths under
/// test.
pub struct AdjMatrix {
    n: usize,
    cells: Vec<bool>,
}

impl AdjMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.num_nodes();
        let mut cells = vec![false; n * n];
        for e in g.edges() {
            cells[e.u() * n + e.v()] = true;
            cells[e.v() * n + e.u()] = true;
        }
        AdjMatrix { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has(&self, a: usize, b: usize) -> bool {
        self.cells[a * self.n + b]
    }

    pub fn degree(&self, a: usize) -> usize {
        (0..self.n).filter(|&b| self.has(a, b)).count()
    }
}

/// The 3- and 4-node census of one edge, counted the slow way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCensus {
    pub triangles: usize,
    pub sq_i: usize,
    pub sq_j: usize,
    pub gamma_max: usize,
}

/// Enumerates every ordered pair of extra nodes `(k, w)` and keeps those
/// closing a 4-cycle `i-j-w-k-i` with neither diagonal present, tallying
/// cycles per traversed node; triangles come from the 3-node sweep.
pub fn census_oracle(m: &AdjMatrix, i: usize, j: usize) -> OracleCensus {
    assert!(m.has(i, j), "oracle census requires an existing edge");
    let n = m.n();
    let triangles = (0..n)
        .filter(|&k| k != i && k != j && m.has(i, k) && m.has(j, k))
        .count();
    let mut through_side_i = vec![0usize; n];
    let mut through_side_j = vec![0usize; n];
    for k in 0..n {
        if k == i || k == j {
            continue;
        }
        for w in 0..n {
            if w == i || w == j || w == k {
                continue;
            }
            let cycle = m.has(i, k) && m.has(k, w) && m.has(w, j);
            let diagonal_free = !m.has(j, k) && !m.has(i, w);
            if cycle && diagonal_free {
                through_side_i[k] += 1;
                through_side_j[w] += 1;
            }
        }
    }
    OracleCensus {
        triangles,
        sq_i: through_side_i.iter().filter(|&&c| c > 0).count(),
        sq_j: through_side_j.iter().filter(|&&c| c > 0).count(),
        gamma_max: through_side_i
            .iter()
            .chain(through_side_j.iter())
            .copied()
            .max()
            .unwrap_or(0),
    }
}

/// Balanced Forman curvature from the brute-force census. Degrees come
/// from matrix row sums, and the formula is restated here rather than
/// shared with the implementation.
pub fn bfc_oracle(m: &AdjMatrix, i: usize, j: usize) -> f64 {
    let d_i = m.degree(i);
    let d_j = m.degree(j);
    if d_i.min(d_j) <= 1 {
        return 0.0;
    }
    let census = census_oracle(m, i, j);
    let d_max = d_i.max(d_j) as f64;
    let d_min = d_i.min(d_j) as f64;
    let tri = census.triangles as f64;
    let mut value = 2.0 / d_i as f64 + 2.0 / d_j as f64 - 2.0 + 2.0 * tri / d_max + tri / d_min;
    if census.gamma_max > 0 {
        value += (census.sq_i + census.sq_j) as f64 / (census.gamma_max as f64 * d_max);
    }
    value
}

/// BFS connected components of the pair graph on `0..n`, in canonical
/// pool order: components by ascending smallest member, members
/// ascending.
pub fn bfs_components(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in pairs {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut members = vec![start];
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Maximal cliques by checking every vertex subset; keep `n <= 20`.
/// Result cliques are sorted ascending and listed lexicographically.
pub fn subset_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.num_nodes();
    assert!(n <= 20, "subset enumeration is 2^n");
    let m = AdjMatrix::new(g);
    let mut masks: Vec<u32> = vec![0; n];
    for v in 0..n {
        for w in 0..n {
            if m.has(v, w) {
                masks[v] |= 1 << w;
            }
        }
    }
    let mut cliques = Vec::new();
    for subset in 1u32..(1u32 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| subset & (1 << v) != 0).collect();
        let is_clique = members
            .iter()
            .all(|&v| masks[v] & subset == subset & !(1 << v));
        if !is_clique {
            continue;
        }
        let maximal = (0..n)
            .filter(|&v| subset & (1 << v) == 0)
            .all(|v| masks[v] & subset != subset);
        if maximal {
            cliques.push(members);
        }
    }
    cliques.sort();
    cliques
}

/// G(n, p) drawn from the supplied RNG, independent of the library's own
/// generators.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated pairs are in range and loop-free")
}

/// Uniform random node pairs with distinct endpoints, for exercising the
/// overlap merge on arbitrary candidate sets. Requires `n >= 2`.
pub fn random_pairs<R: Rng>(rng: &mut R, n: usize, count: usize) -> Vec<(usize, usize)> {
    assert!(n >= 2);
    (0..count)
        .map(|_| loop {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a != b {
                break (a, b);
            }
        })
        .collect()
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Relabels `g` by `perm` (old index → new index).
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().map(|e| (perm[e.u()], perm[e.v()])).collect();
    Graph::from_edges(g.num_nodes(), &edges).expect("permutation preserves validity")
}
