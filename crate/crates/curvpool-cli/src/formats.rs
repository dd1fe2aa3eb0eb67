//! Text formats for graphs, curvature maps, pool assignments, and
//! feature matrices.
//!
//! * Edge list: header `n <count>`, then one `u v` pair per line,
//!   zero-based indices.
//! * Curvature: one `u v value` line per edge with `u < v`, values
//!   printed with 17 significant digits so parsing reproduces the exact
//!   double.
//! * Pools: JSON `{"pools": [[0, 1], [2]]}`.
//! * Features: one comma-separated row per node.
//!
//! `#`-comment lines and blank lines are skipped by every reader.
//! Writers are canonical: equal values produce equal bytes, and every
//! write/read pair is an identity. Readers reject input that violates
//! the target type's invariants with a diagnostic naming the invariant.

use std::collections::BTreeSet;

use curvpool_core::{Edge, EdgeCurvature, FeatureMatrix, Graph, PoolAssignment};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: self-loop ({node} {node}) rejected")]
    SelfLoop { line: usize, node: usize },
    #[error("line {line}: node index {index} out of range (n = {bound})")]
    IndexOutOfRange {
        line: usize,
        index: usize,
        bound: usize,
    },
    #[error("invariant violation: {msg}")]
    Invariant { msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_index(token: &str, line: usize) -> Result<usize, FormatError> {
    token.parse::<usize>().map_err(|_| FormatError::Parse {
        line,
        msg: format!("expected a node index, got `{token}`"),
    })
}

/// Lines paired with their 1-based numbers, comments and blanks dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses an edge list. The header must be the first line of the file.
pub fn read_edge_list(text: &str) -> Result<Graph, FormatError> {
    let header = text.lines().next().ok_or(FormatError::Parse {
        line: 1,
        msg: "missing `n <count>` header".into(),
    })?;
    let mut parts = header.split_whitespace();
    let n = match (parts.next(), parts.next(), parts.next()) {
        (Some("n"), Some(count), None) => {
            count.parse::<usize>().map_err(|_| FormatError::Parse {
                line: 1,
                msg: format!("bad node count `{count}`"),
            })?
        }
        _ => {
            return Err(FormatError::Parse {
                line: 1,
                msg: format!("expected `n <count>`, got `{}`", header.trim()),
            })
        }
    };
    let mut edges = Vec::new();
    for (line, body) in content_lines(text).skip(1) {
        let mut it = body.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (parse_index(a, line)?, parse_index(b, line)?),
            _ => {
                return Err(FormatError::Parse {
                    line,
                    msg: format!("expected `u v`, got `{body}`"),
                })
            }
        };
        if u == v {
            return Err(FormatError::SelfLoop { line, node: u });
        }
        let hi = u.max(v);
        if hi >= n {
            return Err(FormatError::IndexOutOfRange {
                line,
                index: hi,
                bound: n,
            });
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges).map_err(|e| FormatError::Invariant { msg: e.to_string() })
}

/// Canonical edge-list bytes: header, then edges with `u < v` ascending
/// lexicographically, one per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.num_nodes());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

// 17 significant digits; the shortest width at which every f64 parses
// back bit-exactly.
fn format_curvature_value(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_curvature(curv: &EdgeCurvature) -> String {
    let mut out = String::new();
    for (e, v) in curv.iter() {
        out.push_str(&format!(
            "{} {} {}\n",
            e.u(),
            e.v(),
            format_curvature_value(v)
        ));
    }
    out
}

pub fn read_curvature(text: &str) -> Result<EdgeCurvature, FormatError> {
    let mut seen: BTreeSet<Edge> = BTreeSet::new();
    let mut entries = Vec::new();
    for (line, body) in content_lines(text) {
        let mut it = body.split_whitespace();
        let (u, v, raw) = match (it.next(), it.next(), it.next(), it.next()) {
            (Some(a), Some(b), Some(c), None) => (parse_index(a, line)?, parse_index(b, line)?, c),
            _ => {
                return Err(FormatError::Parse {
                    line,
                    msg: format!("expected `u v value`, got `{body}`"),
                })
            }
        };
        if u >= v {
            return Err(FormatError::Invariant {
                msg: format!(
                    "line {line}: curvature keys must be canonical edges (u < v), got {u} {v}"
                ),
            });
        }
        let value = raw.parse::<f64>().map_err(|_| FormatError::Parse {
            line,
            msg: format!("bad curvature value `{raw}`"),
        })?;
        if !value.is_finite() || value <= -2.0 {
            return Err(FormatError::Invariant {
                msg: format!(
                    "line {line}: curvature {value} outside the valid range (finite, > -2)"
                ),
            });
        }
        let edge = Edge::new(u, v);
        if !seen.insert(edge) {
            return Err(FormatError::Invariant {
                msg: format!("line {line}: duplicate entry for edge {u} {v}"),
            });
        }
        entries.push((edge, value));
    }
    Ok(entries.into_iter().collect())
}

#[derive(Serialize, Deserialize)]
struct PoolsFile {
    pools: Vec<Vec<usize>>,
}

pub fn write_pools(pools: &PoolAssignment) -> String {
    let mut out = serde_json::to_string(&PoolsFile {
        pools: pools.pools().to_vec(),
    })
    .expect("pool lists always serialize");
    out.push('\n');
    out
}

pub fn read_pools(text: &str) -> Result<PoolAssignment, FormatError> {
    let file: PoolsFile = serde_json::from_str(text).map_err(|e| FormatError::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    PoolAssignment::from_pools(file.pools)
        .map_err(|e| FormatError::Invariant { msg: e.to_string() })
}

/// Canonical feature bytes: one comma-separated row per node; values in
/// Rust's shortest round-trip form.
pub fn write_features(feats: &FeatureMatrix) -> String {
    let mut out = String::new();
    for r in 0..feats.rows() {
        let row: Vec<String> = feats.row(r).iter().map(|v| format!("{v}")).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn read_features(text: &str) -> Result<FeatureMatrix, FormatError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width = None;
    for (line, body) in content_lines(text) {
        let row: Vec<f64> = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<f64>().map_err(|_| FormatError::Parse {
                    line,
                    msg: format!("bad feature value `{tok}`"),
                })
            })
            .collect::<Result<_, _>>()?;
        if row.iter().any(|v| !v.is_finite()) {
            return Err(FormatError::Invariant {
                msg: format!("line {line}: feature values must be finite"),
            });
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(FormatError::Invariant {
                    msg: format!("line {line}: expected {w} columns, got {}", row.len()),
                })
            }
            _ => {}
        }
        rows.push(row);
    }
    FeatureMatrix::from_rows(&rows).map_err(|e| FormatError::Invariant { msg: e.to_string() })
}
