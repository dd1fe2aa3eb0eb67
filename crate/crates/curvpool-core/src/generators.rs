//! Synthetic graphs: the connected-caveman family used for artificial
//! datasets, plus small canonical fixtures for tests and benchmarks.
//!
//! Everything is deterministic. Randomized constructions run on ChaCha8
//! seeded from the generator parameters, so equal seeds rebuild
//! byte-identical graphs on every platform.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{FeatureMatrix, Graph};

/// Parameters of a connected caveman graph: `num_cliques` cliques of
/// `clique_size` nodes arranged in a ring, with one edge per clique
/// rewired into a bridge to the next clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CavemanSpec {
    /// Number of cliques (caves); at least 2.
    pub num_cliques: usize,
    /// Nodes per clique; at least 3.
    pub clique_size: usize,
    /// RNG seed deciding which edges are rewired.
    pub seed: u64,
}

/// Builds a connected caveman graph: dense clique-like areas joined by a
/// small number of bottleneck edges.
///
/// Clique `c` owns nodes `c*k .. (c+1)*k`. For each clique the RNG picks
/// an internal edge `(keep, cut)`, removes it, and reattaches `keep` to a
/// random node of clique `(c+1) mod l`. The result is connected with
/// exactly `l*k` nodes and `l*k*(k-1)/2` edges.
pub fn caveman(spec: &CavemanSpec) -> Result<Graph, Error> {
    let l = spec.num_cliques;
    let k = spec.clique_size;
    if l < 2 {
        return Err(Error::InvalidSpec("caveman needs at least 2 cliques"));
    }
    if k < 3 {
        return Err(Error::InvalidSpec("caveman cliques need at least 3 nodes"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for c in 0..l {
        let base = c * k;
        for a in 0..k {
            for b in a + 1..k {
                edges.insert((base + a, base + b));
            }
        }
    }
    for c in 0..l {
        let base = c * k;
        let next = ((c + 1) % l) * k;
        let keep = base + rng.random_range(0..k);
        let cut = loop {
            let cand = base + rng.random_range(0..k);
            if cand != keep {
                break cand;
            }
        };
        // Redraw if the bridge already exists; only possible for l == 2,
        // where the reverse bridge connects the same clique pair.
        let bridge = loop {
            let target = next + rng.random_range(0..k);
            let e = (keep.min(target), keep.max(target));
            if !edges.contains(&e) {
                break e;
            }
        };
        edges.remove(&(keep.min(cut), keep.max(cut)));
        edges.insert(bridge);
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::from_edges(l * k, &edges)
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph, Error> {
    if n < 1 {
        return Err(Error::InvalidSpec("complete graph needs n >= 1"));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Cycle C_n.
pub fn cycle(n: usize) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::InvalidSpec("cycle needs n >= 3"));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Path P_n.
pub fn path(n: usize) -> Result<Graph, Error> {
    if n < 1 {
        return Err(Error::InvalidSpec("path needs n >= 1"));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Two K_k cliques joined by a single bridge edge between nodes `k-1`
/// and `k`.
pub fn barbell(k: usize) -> Result<Graph, Error> {
    if k < 3 {
        return Err(Error::InvalidSpec(
            "barbell needs cliques of at least 3 nodes",
        ));
    }
    let mut edges = Vec::new();
    for base in [0, k] {
        for a in 0..k {
            for b in a + 1..k {
                edges.push((base + a, base + b));
            }
        }
    }
    edges.push((k - 1, k));
    Graph::from_edges(2 * k, &edges)
}

/// Star: node 0 joined to every other node.
pub fn star(n: usize) -> Result<Graph, Error> {
    if n < 1 {
        return Err(Error::InvalidSpec("star needs n >= 1"));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|leaf| (0, leaf)).collect();
    Graph::from_edges(n, &edges)
}

/// Erdős–Rényi G(n, p) on a ChaCha8 stream.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, Error> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidSpec("edge probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// The default feature set: an n x 1 matrix holding each node's degree.
pub fn degree_features(g: &Graph) -> FeatureMatrix {
    let data: Vec<f64> = (0..g.num_nodes())
        .map(|v| g.neighbors(v).len() as f64)
        .collect();
    FeatureMatrix::new(g.num_nodes(), 1, data).expect("degrees are finite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn is_connected(g: &Graph) -> bool {
        let n = g.num_nodes();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    #[test]
    fn caveman_counts_and_connectivity() {
        for (l, k, seed) in [(2, 3, 0), (3, 4, 7), (4, 5, 11), (6, 3, 123)] {
            let g = caveman(&CavemanSpec {
                num_cliques: l,
                clique_size: k,
                seed,
            })
            .unwrap();
            assert_eq!(g.num_nodes(), l * k);
            assert_eq!(g.num_edges(), l * k * (k - 1) / 2, "l={l} k={k}");
            assert!(is_connected(&g), "l={l} k={k} seed={seed}");
        }
    }

    #[test]
    fn caveman_is_deterministic_per_seed() {
        let spec = CavemanSpec {
            num_cliques: 3,
            clique_size: 4,
            seed: 99,
        };
        assert_eq!(caveman(&spec).unwrap(), caveman(&spec).unwrap());
    }

    #[test]
    fn caveman_rejects_bad_specs() {
        assert!(caveman(&CavemanSpec {
            num_cliques: 1,
            clique_size: 3,
            seed: 0
        })
        .is_err());
        assert!(caveman(&CavemanSpec {
            num_cliques: 2,
            clique_size: 2,
            seed: 0
        })
        .is_err());
    }

    #[test]
    fn fixture_counts() {
        assert_eq!(complete(4).unwrap().num_edges(), 6);
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.num_edges(), 4);
        for i in 0..4 {
            assert_eq!(c4.degree(i).unwrap(), 2);
        }
        let b4 = barbell(4).unwrap();
        assert_eq!(b4.num_edges(), 13);
        let high: Vec<usize> = (0..8).filter(|&i| b4.degree(i).unwrap() == 4).collect();
        assert_eq!(high, vec![3, 4]);
        assert_eq!(star(5).unwrap().degree(0).unwrap(), 4);
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(barbell(2).is_err());
    }

    #[test]
    fn erdos_renyi_extremes() {
        assert_eq!(erdos_renyi(5, 0.0, 1).unwrap().num_edges(), 0);
        assert_eq!(erdos_renyi(5, 1.0, 1).unwrap().num_edges(), 10);
        assert!(erdos_renyi(5, 1.5, 1).is_err());
    }

    #[test]
    fn degree_feature_examples() {
        let k4 = complete(4).unwrap();
        assert_eq!(degree_features(&k4).data(), &[3.0, 3.0, 3.0, 3.0]);
        let p3 = path(3).unwrap();
        assert_eq!(degree_features(&p3).data(), &[1.0, 2.0, 1.0]);
        let lone = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(degree_features(&lone).data(), &[0.0]);
    }
}
