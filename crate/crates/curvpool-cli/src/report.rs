//! JSON mirrors of the analysis types, plus the plain-text histogram
//! export for plotting tools.

use std::collections::BTreeMap;

use curvpool_core::{CurvatureHistogram, PoolingReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoolingReportJson {
    pub nodes_before: usize,
    pub nodes_after: usize,
    pub edges_before: usize,
    pub edges_after: usize,
    pub mean_curv_before: Option<f64>,
    pub mean_curv_after: Option<f64>,
    pub pool_size_histogram: BTreeMap<usize, usize>,
}

impl From<&PoolingReport> for PoolingReportJson {
    fn from(r: &PoolingReport) -> Self {
        PoolingReportJson {
            nodes_before: r.nodes_before,
            nodes_after: r.nodes_after,
            edges_before: r.edges_before,
            edges_after: r.edges_after,
            mean_curv_before: r.mean_curv_before,
            mean_curv_after: r.mean_curv_after,
            pool_size_histogram: r.pool_size_histogram.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistogramJson {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<usize>,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub median: f64,
}

impl From<&CurvatureHistogram> for HistogramJson {
    fn from(h: &CurvatureHistogram) -> Self {
        HistogramJson {
            bin_edges: h.bin_edges.clone(),
            counts: h.counts.clone(),
            min: h.min,
            max: h.max,
            mean: h.mean,
            median: h.median,
        }
    }
}

/// Per-graph summary row of a `stats` run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphStats {
    pub name: String,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median: Option<f64>,
}

/// Dataset-level `stats` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub name: String,
    pub num_graphs: usize,
    pub num_edges: usize,
    pub recommended_threshold: f64,
    pub histogram: HistogramJson,
    pub per_graph: Vec<GraphStats>,
}

/// Two-column `bin_center count` text, one line per bin.
pub fn histogram_text(h: &CurvatureHistogram) -> String {
    let mut out = String::new();
    for (b, &count) in h.counts.iter().enumerate() {
        let center = (h.bin_edges[b] + h.bin_edges[b + 1]) / 2.0;
        out.push_str(&format!("{center} {count}\n"));
    }
    out
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types always serialize");
    out.push('\n');
    out
}
