//! Dataset manifests: a named list of graph files, each with a feature
//! source and an integer class label.
//!
//! `features` is either a path relative to the manifest or the literal
//! token `degrees`, which derives the n x 1 degree matrix from the graph
//! itself. All graph files use dense zero-based node indices; datasets
//! with external string node ids can keep their own id ↔ index mapping
//! next to the manifest, the formats here never see it.

use std::fs;
use std::path::{Path, PathBuf};

use curvpool_core::{degree_features, FeatureMatrix, Graph};
use serde::{Deserialize, Serialize};

use crate::formats::{self, FormatError};

/// Feature-source token selecting degree features.
pub const DEGREE_FEATURES: &str = "degrees";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    /// Edge-list file, relative to the manifest.
    pub graph: String,
    /// Feature file relative to the manifest, or `degrees`.
    pub features: String,
    /// Class label.
    pub label: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetManifest {
    pub name: String,
    pub graphs: Vec<ManifestEntry>,
}

impl DatasetManifest {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("manifests always serialize");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        serde_json::from_str(text).map_err(|e| FormatError::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }
}

/// Loads a manifest and verifies every referenced file exists. Returns
/// the manifest and the directory entries resolve against.
pub fn load_manifest(path: &Path) -> Result<(DatasetManifest, PathBuf), FormatError> {
    let text = fs::read_to_string(path)?;
    let manifest = DatasetManifest::from_json(&text)?;
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    for (i, entry) in manifest.graphs.iter().enumerate() {
        let graph_path = base.join(&entry.graph);
        if !graph_path.is_file() {
            return Err(FormatError::Invariant {
                msg: format!(
                    "manifest entry {i}: graph file {} not found",
                    graph_path.display()
                ),
            });
        }
        if entry.features != DEGREE_FEATURES {
            let feature_path = base.join(&entry.features);
            if !feature_path.is_file() {
                return Err(FormatError::Invariant {
                    msg: format!(
                        "manifest entry {i}: feature file {} not found",
                        feature_path.display()
                    ),
                });
            }
        }
    }
    Ok((manifest, base))
}

/// Reads one entry's graph and features.
pub fn load_entry(
    base: &Path,
    entry: &ManifestEntry,
) -> Result<(Graph, FeatureMatrix), FormatError> {
    let graph = formats::read_edge_list(&fs::read_to_string(base.join(&entry.graph))?)?;
    let features = if entry.features == DEGREE_FEATURES {
        degree_features(&graph)
    } else {
        let feats = formats::read_features(&fs::read_to_string(base.join(&entry.features))?)?;
        if feats.rows() != graph.num_nodes() {
            return Err(FormatError::Invariant {
                msg: format!(
                    "{}: {} feature rows for a {}-node graph",
                    entry.features,
                    feats.rows(),
                    graph.num_nodes()
                ),
            });
        }
        feats
    };
    Ok((graph, features))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let m = DatasetManifest {
            name: "demo".into(),
            graphs: vec![ManifestEntry {
                graph: "g0000.graph".into(),
                features: DEGREE_FEATURES.into(),
                label: 1,
            }],
        };
        assert_eq!(DatasetManifest::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn load_rejects_missing_files() {
        let dir = std::env::temp_dir().join("curvpool-manifest-test");
        fs::create_dir_all(&dir).unwrap();
        let manifest_path = dir.join("manifest.json");
        let m = DatasetManifest {
            name: "demo".into(),
            graphs: vec![ManifestEntry {
                graph: "missing.graph".into(),
                features: DEGREE_FEATURES.into(),
                label: 0,
            }],
        };
        fs::write(&manifest_path, m.to_json()).unwrap();
        assert!(matches!(
            load_manifest(&manifest_path),
            Err(FormatError::Invariant { .. })
        ));
    }

    #[test]
    fn degree_token_derives_features() {
        let dir = std::env::temp_dir().join("curvpool-manifest-degrees");
        fs::create_dir_all(&dir).unwrap();
        fs::write(dir.join("p3.graph"), "n 3\n0 1\n1 2\n").unwrap();
        let entry = ManifestEntry {
            graph: "p3.graph".into(),
            features: DEGREE_FEATURES.into(),
            label: 0,
        };
        let (g, feats) = load_entry(&dir, &entry).unwrap();
        assert_eq!(g.num_edges(), 2);
        assert_eq!(feats.data(), &[1.0, 2.0, 1.0]);
    }
}
