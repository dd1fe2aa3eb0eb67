//! Curvature-distribution summaries: histograms, threshold
//! recommendation, and before/after pooling reports.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::curvature::EdgeCurvature;
use crate::error::Error;
use crate::graph::Graph;
use crate::pooling::PoolAssignment;

/// Uniform-bin histogram over curvature values with summary statistics.
/// Bins are right-open except the last, which also includes `max`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureHistogram {
    /// `num_bins + 1` strictly increasing bin boundaries.
    pub bin_edges: Vec<f64>,
    /// Per-bin value counts; sums to the number of input values.
    pub counts: Vec<usize>,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub median: f64,
}

fn median_of(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

fn check_finite(values: &[f64]) -> Result<(), Error> {
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

/// Bins `values` into `num_bins` uniform bins spanning `[min, max]`.
/// When all values coincide the span is widened by half a unit on each
/// side so the bin edges stay strictly increasing.
pub fn histogram(values: &[f64], num_bins: usize) -> Result<CurvatureHistogram, Error> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if num_bins == 0 {
        return Err(Error::InvalidSpec("histogram needs at least one bin"));
    }
    check_finite(values)?;
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = if max > min {
        (min, max)
    } else {
        (min - 0.5, max + 0.5)
    };
    let width = (hi - lo) / num_bins as f64;
    let bin_edges: Vec<f64> = (0..=num_bins).map(|b| lo + width * b as f64).collect();
    let mut counts = vec![0usize; num_bins];
    for &v in values {
        let idx = ((v - lo) / (hi - lo) * num_bins as f64) as usize;
        counts[idx.min(num_bins - 1)] += 1;
    }
    Ok(CurvatureHistogram {
        bin_edges,
        counts,
        min,
        max,
        mean: values.iter().sum::<f64>() / values.len() as f64,
        median: median_of(values),
    })
}

/// Recommended starting threshold: the median, which splits the observed
/// values into two halves. Even-length inputs average the two central
/// values. If every value is equal the recommendation degenerates and
/// strict thresholds will pool nothing or everything; callers can detect
/// that case via `min == max` of the value range.
pub fn recommend_threshold(values: &[f64]) -> Result<f64, Error> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    check_finite(values)?;
    Ok(median_of(values))
}

/// Mean curvature over edges; `None` for an edgeless graph, since zero is
/// a meaningful curvature value and must not stand in for "no edges".
pub fn mean_curvature(curv: &EdgeCurvature) -> Option<f64> {
    if curv.is_empty() {
        None
    } else {
        Some(curv.values().sum::<f64>() / curv.len() as f64)
    }
}

/// Structural before/after summary of one pooling step.
#[derive(Debug, Clone, PartialEq)]
pub struct PoolingReport {
    pub nodes_before: usize,
    pub nodes_after: usize,
    pub edges_before: usize,
    pub edges_after: usize,
    pub mean_curv_before: Option<f64>,
    pub mean_curv_after: Option<f64>,
    /// pool size → number of pools of that size; sizes weighted by count
    /// sum to `nodes_before`.
    pub pool_size_histogram: BTreeMap<usize, usize>,
}

/// Builds the report for a pooling step. `curv_before`/`curv_after` must
/// be the curvature maps of `g_before`/`g_after`, and `pools` the
/// assignment that carried one onto the other.
pub fn pooling_report(
    g_before: &Graph,
    curv_before: &EdgeCurvature,
    g_after: &Graph,
    curv_after: &EdgeCurvature,
    pools: &PoolAssignment,
) -> Result<PoolingReport, Error> {
    if pools.num_nodes() != g_before.num_nodes() {
        return Err(Error::ShapeMismatch {
            expected: g_before.num_nodes(),
            actual: pools.num_nodes(),
        });
    }
    if pools.len() != g_after.num_nodes() {
        return Err(Error::ShapeMismatch {
            expected: pools.len(),
            actual: g_after.num_nodes(),
        });
    }
    if curv_before.len() != g_before.num_edges() {
        return Err(Error::ShapeMismatch {
            expected: g_before.num_edges(),
            actual: curv_before.len(),
        });
    }
    if curv_after.len() != g_after.num_edges() {
        return Err(Error::ShapeMismatch {
            expected: g_after.num_edges(),
            actual: curv_after.len(),
        });
    }
    let mut pool_size_histogram = BTreeMap::new();
    for pool in pools.pools() {
        *pool_size_histogram.entry(pool.len()).or_insert(0) += 1;
    }
    Ok(PoolingReport {
        nodes_before: g_before.num_nodes(),
        nodes_after: g_after.num_nodes(),
        edges_before: g_before.num_edges(),
        edges_after: g_after.num_edges(),
        mean_curv_before: mean_curvature(curv_before),
        mean_curv_after: mean_curvature(curv_after),
        pool_size_histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::bfc_all;
    use crate::generators::{barbell, complete};
    use alloc::vec;

    #[test]
    fn single_value_single_bin() {
        let h = histogram(&[0.75], 1).unwrap();
        assert_eq!(h.counts, vec![1]);
        assert_eq!(h.min, 0.75);
        assert_eq!(h.max, 0.75);
        assert_eq!(h.bin_edges.len(), 2);
        assert!(h.bin_edges[0] < h.bin_edges[1]);
    }

    #[test]
    fn k4_mass_lands_in_the_bin_containing_its_value() {
        let curv = bfc_all(&complete(4).unwrap());
        let values: Vec<f64> = curv.values().collect();
        let h = histogram(&values, 5).unwrap();
        assert_eq!(h.counts.iter().sum::<usize>(), 6);
        let four_thirds = 4.0 / 3.0;
        let hot: Vec<usize> = (0..5).filter(|&b| h.counts[b] > 0).collect();
        assert_eq!(hot.len(), 1);
        let b = hot[0];
        assert!(h.bin_edges[b] <= four_thirds && four_thirds <= h.bin_edges[b + 1]);
    }

    #[test]
    fn barbell_histogram_is_bimodal() {
        let curv = bfc_all(&barbell(4).unwrap());
        let values: Vec<f64> = curv.values().collect();
        let h = histogram(&values, 4).unwrap();
        assert_eq!(h.counts.iter().sum::<usize>(), 13);
        // one edge at -1, twelve strictly positive
        assert_eq!(h.counts[0], 1);
        assert_eq!(h.counts[1], 0);
        assert_eq!(h.min, -1.0);
    }

    #[test]
    fn histogram_rejects_empty_and_degenerate_inputs() {
        assert_eq!(histogram(&[], 4), Err(Error::EmptyInput));
        assert!(histogram(&[1.0], 0).is_err());
        assert_eq!(histogram(&[f64::NAN], 1), Err(Error::NonFinite));
    }

    #[test]
    fn median_recommendation() {
        assert_eq!(recommend_threshold(&[1.0, 2.0, 3.0]).unwrap(), 2.0);
        assert_eq!(recommend_threshold(&[1.0, 2.0, 3.0, 4.0]).unwrap(), 2.5);
        assert_eq!(recommend_threshold(&[3.0, 1.0, 2.0]).unwrap(), 2.0);
        // the recommendation always lies inside the observed range
        for values in [&[0.5, -1.0, 1.25, 0.0][..], &[2.0, 2.0][..]] {
            let t = recommend_threshold(values).unwrap();
            let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            assert!(lo <= t && t <= hi);
        }
        assert_eq!(recommend_threshold(&[5.0, 5.0, 5.0]).unwrap(), 5.0);
        assert_eq!(recommend_threshold(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn identity_pooling_report_matches_before_and_after() {
        let g = complete(4).unwrap();
        let curv = bfc_all(&g);
        let pools = PoolAssignment::singletons(4);
        let r = pooling_report(&g, &curv, &g, &curv, &pools).unwrap();
        assert_eq!(r.nodes_before, r.nodes_after);
        assert_eq!(r.edges_before, r.edges_after);
        assert_eq!(r.mean_curv_before, r.mean_curv_after);
        assert_eq!(r.pool_size_histogram.get(&1), Some(&4));
    }

    #[test]
    fn edgeless_graph_reports_absent_mean() {
        let g = Graph::from_edges(2, &[]).unwrap();
        let curv = bfc_all(&g);
        assert_eq!(mean_curvature(&curv), None);
        let pools = PoolAssignment::singletons(2);
        let r = pooling_report(&g, &curv, &g, &curv, &pools).unwrap();
        assert_eq!(r.mean_curv_before, None);
    }

    #[test]
    fn report_rejects_inconsistent_inputs() {
        let g = complete(3).unwrap();
        let curv = bfc_all(&g);
        let pools = PoolAssignment::singletons(2);
        assert!(pooling_report(&g, &curv, &g, &curv, &pools).is_err());
    }

    #[test]
    fn barbell_low_pool_merges_the_bridge_endpoints() {
        use crate::generators::degree_features;
        use crate::pooling::{curvpool_precomputed, Aggregator, Strategy};

        let g = barbell(4).unwrap();
        let curv = bfc_all(&g);
        let (pooled, _) = curvpool_precomputed(
            &g,
            &degree_features(&g),
            &curv,
            Strategy::Low { t_low: -0.5 },
            Aggregator::Sum,
        )
        .unwrap();
        // only the bridge (curvature -1) qualifies, so 3 and 4 merge
        assert_eq!(pooled.origin.pool_of(3), pooled.origin.pool_of(4));
        let curv_after = bfc_all(&pooled.graph);
        let report = pooling_report(&g, &curv, &pooled.graph, &curv_after, &pooled.origin).unwrap();
        assert!(report.edges_after < report.edges_before);
        assert_eq!(report.nodes_after, 7);
        assert_eq!(report.pool_size_histogram, BTreeMap::from([(1, 6), (2, 1)]));
    }

    #[test]
    fn caveman_high_pool_collapses_to_one_node_per_cave_and_mean_rises() {
        use crate::generators::{caveman, degree_features, CavemanSpec};
        use crate::pooling::{curvpool_precomputed, Aggregator, Strategy};

        let g = caveman(&CavemanSpec {
            num_cliques: 4,
            clique_size: 5,
            seed: 7,
        })
        .unwrap();
        let curv = bfc_all(&g);
        let (pooled, _) = curvpool_precomputed(
            &g,
            &degree_features(&g),
            &curv,
            Strategy::High { t_high: 0.0 },
            Aggregator::Sum,
        )
        .unwrap();
        let curv_after = bfc_all(&pooled.graph);
        let report = pooling_report(&g, &curv, &pooled.graph, &curv_after, &pooled.origin).unwrap();
        assert_eq!(report.nodes_after, 4);
        assert!(report.mean_curv_after.unwrap() > report.mean_curv_before.unwrap());
    }
}
