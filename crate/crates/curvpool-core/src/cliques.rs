//! CliquePool baseline: enumerate maximal cliques with Bron-Kerbosch,
//! then strip duplicated nodes from every non-largest clique so the
//! surviving sets form a disjoint cover.
//!
//! Clique pooling only bites where exact cliques exist, which is its
//! known weakness next to curvature pooling; representation-learned
//! soft assignments (DiffPool and friends) sit at the other extreme and
//! need training, so they are out of scope for a precompute toolkit.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{FeatureMatrix, Graph};
use crate::pooling::{aggregate_features, remap_edges, Aggregator, PoolAssignment, PooledGraph};

/// All maximal cliques of a graph: each clique sorted ascending, the
/// list in lexicographic order. Isolated nodes appear as singleton
/// cliques, so every node is in at least one clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSet {
    cliques: Vec<Vec<usize>>,
}

impl CliqueSet {
    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

fn intersect(a: &[usize], sorted: &[usize]) -> Vec<usize> {
    let (mut x, mut y) = (0, 0);
    let mut out = Vec::new();
    while x < a.len() && y < sorted.len() {
        match a[x].cmp(&sorted[y]) {
            core::cmp::Ordering::Equal => {
                out.push(a[x]);
                x += 1;
                y += 1;
            }
            core::cmp::Ordering::Less => x += 1,
            core::cmp::Ordering::Greater => y += 1,
        }
    }
    out
}

fn intersect_len(a: &[usize], b: &[usize]) -> usize {
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

// Bron-Kerbosch with pivoting. `current` is the clique under
// construction, `candidates` (P) may still extend it, `excluded` (X)
// would only rebuild cliques already reported. P and X stay sorted so
// set work is linear merging. Worst case O(3^(n/3)).
fn expand(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: Vec<usize>,
    mut excluded: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() && excluded.is_empty() {
        let mut clique = current.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    }
    // pivot with the most candidate neighbors prunes the branch count
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&u| intersect_len(g.neighbors(u), &candidates))
        .expect("candidates or excluded is non-empty");
    let todo: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    for v in todo {
        let nbrs = g.neighbors(v);
        current.push(v);
        expand(
            g,
            current,
            intersect(&candidates, nbrs),
            intersect(&excluded, nbrs),
            out,
        );
        current.pop();
        if let Ok(pos) = candidates.binary_search(&v) {
            candidates.remove(pos);
        }
        if let Err(pos) = excluded.binary_search(&v) {
            excluded.insert(pos, v);
        }
    }
}

/// Enumerates every maximal clique via Bron-Kerbosch with pivoting.
pub fn maximal_cliques(g: &Graph) -> CliqueSet {
    let mut cliques = Vec::new();
    if g.num_nodes() > 0 {
        let candidates: Vec<usize> = (0..g.num_nodes()).collect();
        expand(g, &mut Vec::new(), candidates, Vec::new(), &mut cliques);
    }
    cliques.sort_unstable();
    CliqueSet { cliques }
}

/// CliquePool: order the maximal cliques by size descending (ties by
/// ascending lexicographic member order), keep each node only in the
/// first clique containing it, drop cliques emptied by that rule, and
/// pool what remains.
pub fn clique_pool(
    g: &Graph,
    feats: &FeatureMatrix,
    agg: Aggregator,
) -> Result<(PooledGraph, FeatureMatrix), Error> {
    let clique_set = maximal_cliques(g);
    let mut order: Vec<&Vec<usize>> = clique_set.cliques().iter().collect();
    order.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.as_slice().cmp(b.as_slice()))
    });

    let mut claimed = vec![false; g.num_nodes()];
    let mut pools: Vec<Vec<usize>> = Vec::new();
    for clique in order {
        let members: Vec<usize> = clique.iter().copied().filter(|&v| !claimed[v]).collect();
        if members.is_empty() {
            continue;
        }
        for &v in &members {
            claimed[v] = true;
        }
        pools.push(members);
    }
    pools.sort_unstable_by_key(|pool| pool[0]);

    let pools = PoolAssignment::from_pools(pools)?;
    let pooled_feats = aggregate_features(feats, &pools, agg)?;
    Ok((remap_edges(g, &pools), pooled_feats))
}
