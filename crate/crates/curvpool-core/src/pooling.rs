//! Curvature-threshold pooling: candidate pairs, overlap merge into
//! disjoint pools, feature aggregation, and edge remap onto the coarser
//! graph.
//!
//! The pipeline is `bfc_all` → [`candidate_pairs`] → [`merge_pools`] →
//! ([`aggregate_features`], [`remap_edges`]); [`curvpool`] runs it in one
//! call. Every node of the input ends up in exactly one pool (untouched
//! nodes stay as singletons), and pools only ever grow along selected
//! edges, so each pool induces a connected subgraph of the input.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::curvature::{bfc_all, EdgeCurvature};
use crate::error::Error;
use crate::graph::{Edge, FeatureMatrix, Graph};

/// Which edges qualify as pooling candidates. Comparisons are strict:
/// an edge whose curvature equals a threshold is never pooled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Strategy {
    /// Pool across edges with curvature strictly above `t_high`
    /// (densely connected clusters).
    High { t_high: f64 },
    /// Pool across edges with curvature strictly below `t_low`
    /// (bottlenecks).
    Low { t_low: f64 },
    /// Union of both rules; requires `t_low <= t_high`.
    Mixed { t_low: f64, t_high: f64 },
}

impl Strategy {
    pub fn validate(self) -> Result<(), Error> {
        if let Strategy::Mixed { t_low, t_high } = self {
            if t_low > t_high {
                return Err(Error::InvalidThresholds { t_low, t_high });
            }
        }
        Ok(())
    }

    fn selects(self, curvature: f64) -> bool {
        match self {
            Strategy::High { t_high } => curvature > t_high,
            Strategy::Low { t_low } => curvature < t_low,
            Strategy::Mixed { t_low, t_high } => curvature < t_low || curvature > t_high,
        }
    }
}

/// Coordinatewise reduction of the feature rows inside one pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Aggregator {
    Sum,
    Avg,
    Max,
}

/// Disjoint pools covering every node of a graph.
///
/// Pools are listed in ascending order of their smallest member, members
/// ascending within each pool, and `pool_of` maps each node to its pool
/// index. Pools produced by [`merge_pools`] from a subset of the graph's
/// edges additionally induce connected subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolAssignment {
    pools: Vec<Vec<usize>>,
    pool_of: Vec<usize>,
}

impl PoolAssignment {
    /// One singleton pool per node (the identity pooling).
    pub fn singletons(num_nodes: usize) -> Self {
        PoolAssignment {
            pools: (0..num_nodes).map(|v| vec![v]).collect(),
            pool_of: (0..num_nodes).collect(),
        }
    }

    /// Validates and adopts an explicit pool list: pools must be
    /// non-empty, strictly ascending, pairwise disjoint, cover exactly
    /// `0..n` where `n` is the total member count, and appear in
    /// ascending order of their smallest member.
    pub fn from_pools(pools: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n: usize = pools.iter().map(Vec::len).sum();
        let mut pool_of = vec![usize::MAX; n];
        for (p, pool) in pools.iter().enumerate() {
            if pool.is_empty() {
                return Err(Error::PoolInvariant("empty pool"));
            }
            let mut last = None;
            for &v in pool {
                if let Some(l) = last {
                    if v <= l {
                        return Err(Error::PoolInvariant("pool members not strictly ascending"));
                    }
                }
                if v >= n {
                    return Err(Error::PoolInvariant(
                        "pool member out of range: the cover has a gap",
                    ));
                }
                if pool_of[v] != usize::MAX {
                    return Err(Error::PoolInvariant("pools overlap"));
                }
                pool_of[v] = p;
                last = Some(v);
            }
        }
        // Disjointness plus sum-of-sizes == n makes the cover exact.
        if pools.windows(2).any(|w| w[0][0] >= w[1][0]) {
            return Err(Error::PoolInvariant(
                "pools not in ascending order of smallest member",
            ));
        }
        Ok(PoolAssignment { pools, pool_of })
    }

    /// Number of pools.
    pub fn len(&self) -> usize {
        self.pools.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pools.is_empty()
    }

    /// Number of nodes of the graph the pools cover.
    pub fn num_nodes(&self) -> usize {
        self.pool_of.len()
    }

    pub fn pools(&self) -> &[Vec<usize>] {
        &self.pools
    }

    /// Pool index of `node`. Panics if `node >= num_nodes`.
    pub fn pool_of(&self, node: usize) -> usize {
        self.pool_of[node]
    }

    /// The node → pool-index map as a slice.
    pub fn assignments(&self) -> &[usize] {
        &self.pool_of
    }
}

/// A coarsened graph plus the pool assignment that produced it, keeping
/// the provenance of every pooled node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PooledGraph {
    pub graph: Graph,
    pub origin: PoolAssignment,
}

// Union-find with path halving and union by rank.
struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.rank[ra] < self.rank[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        if self.rank[ra] == self.rank[rb] {
            self.rank[ra] += 1;
        }
    }
}

/// Filters the curvature map down to the pooling candidates of
/// `strategy`.
pub fn candidate_pairs(curv: &EdgeCurvature, strategy: Strategy) -> Result<BTreeSet<Edge>, Error> {
    strategy.validate()?;
    Ok(curv
        .iter()
        .filter(|&(_, c)| strategy.selects(c))
        .map(|(e, _)| e)
        .collect())
}

/// Collapses overlapping candidate pairs into disjoint pools: the pools
/// are exactly the connected components of the pair graph on `0..n`,
/// with untouched nodes as singletons. Order-independent, so equal-value
/// ties need no tie-breaking.
pub fn merge_pools(
    num_nodes: usize,
    pairs: impl IntoIterator<Item = Edge>,
) -> Result<PoolAssignment, Error> {
    let mut sets = DisjointSets::new(num_nodes);
    for e in pairs {
        if e.v() >= num_nodes {
            return Err(Error::IndexOutOfRange {
                index: e.v(),
                bound: num_nodes,
            });
        }
        sets.union(e.u(), e.v());
    }
    let mut pool_of = vec![usize::MAX; num_nodes];
    let mut root_pool = vec![usize::MAX; num_nodes];
    let mut pools: Vec<Vec<usize>> = Vec::new();
    // ascending scan puts pools in ascending-smallest-member order
    for (v, slot) in pool_of.iter_mut().enumerate() {
        let r = sets.find(v);
        if root_pool[r] == usize::MAX {
            root_pool[r] = pools.len();
            pools.push(Vec::new());
        }
        *slot = root_pool[r];
        pools[root_pool[r]].push(v);
    }
    Ok(PoolAssignment { pools, pool_of })
}

/// Reduces the feature rows of each pool with `agg`; output row `p` is
/// the reduction over the members of pool `p`.
pub fn aggregate_features(
    feats: &FeatureMatrix,
    pools: &PoolAssignment,
    agg: Aggregator,
) -> Result<FeatureMatrix, Error> {
    if feats.rows() != pools.num_nodes() {
        return Err(Error::ShapeMismatch {
            expected: pools.num_nodes(),
            actual: feats.rows(),
        });
    }
    let cols = feats.cols();
    let mut data = Vec::with_capacity(pools.len() * cols);
    for pool in pools.pools() {
        for c in 0..cols {
            let mut acc = feats.row(pool[0])[c];
            for &m in &pool[1..] {
                let x = feats.row(m)[c];
                acc = match agg {
                    Aggregator::Sum | Aggregator::Avg => acc + x,
                    Aggregator::Max => acc.max(x),
                };
            }
            if agg == Aggregator::Avg {
                acc /= pool.len() as f64;
            }
            data.push(acc);
        }
    }
    FeatureMatrix::new(pools.len(), cols, data)
}

/// Rebuilds the graph on pool indices: two distinct pools are adjacent
/// iff some original edge crosses them. Parallel crossings collapse to a
/// single edge and intra-pool edges vanish.
pub fn remap_edges(g: &Graph, pools: &PoolAssignment) -> PooledGraph {
    assert_eq!(
        g.num_nodes(),
        pools.num_nodes(),
        "pool assignment was built for a different graph"
    );
    let mut pooled: BTreeSet<(usize, usize)> = BTreeSet::new();
    for e in g.edges() {
        let (a, b) = (pools.pool_of(e.u()), pools.pool_of(e.v()));
        if a != b {
            pooled.insert((a.min(b), a.max(b)));
        }
    }
    let edges: Vec<(usize, usize)> = pooled.into_iter().collect();
    let graph = Graph::from_edges(pools.len(), &edges)
        .expect("pool indices are dense and crossing edges are loop-free");
    PooledGraph {
        graph,
        origin: pools.clone(),
    }
}

/// Full pooling pipeline in one call: curvature, candidate filter,
/// overlap merge, feature aggregation, and edge remap.
pub fn curvpool(
    g: &Graph,
    feats: &FeatureMatrix,
    strategy: Strategy,
    agg: Aggregator,
) -> Result<(PooledGraph, FeatureMatrix), Error> {
    strategy.validate()?;
    let curv = bfc_all(g);
    curvpool_precomputed(g, feats, &curv, strategy, agg)
}

/// Same pipeline with the curvature supplied by the caller, so one
/// curvature pass can feed any number of strategy and threshold
/// settings.
pub fn curvpool_precomputed(
    g: &Graph,
    feats: &FeatureMatrix,
    curv: &EdgeCurvature,
    strategy: Strategy,
    agg: Aggregator,
) -> Result<(PooledGraph, FeatureMatrix), Error> {
    if feats.rows() != g.num_nodes() {
        return Err(Error::ShapeMismatch {
            expected: g.num_nodes(),
            actual: feats.rows(),
        });
    }
    let pairs = candidate_pairs(curv, strategy)?;
    let pools = merge_pools(g.num_nodes(), pairs)?;
    let pooled_feats = aggregate_features(feats, &pools, agg)?;
    let pooled = remap_edges(g, &pools);
    Ok((pooled, pooled_feats))
}
