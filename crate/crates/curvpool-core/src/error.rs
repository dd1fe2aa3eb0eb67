use core::fmt;

/// Error type shared by every operation in this crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A node index is not smaller than the number of nodes.
    IndexOutOfRange { index: usize, bound: usize },
    /// A self-loop `(u, u)` was supplied where a simple graph is required.
    SelfLoopRejected { node: usize },
    /// The queried node pair is not an edge of the graph.
    EdgeNotPresent { u: usize, v: usize },
    /// Mixed-strategy thresholds with `t_low > t_high`.
    InvalidThresholds { t_low: f64, t_high: f64 },
    /// Paired inputs disagree on a row or node count.
    ShapeMismatch { expected: usize, actual: usize },
    /// A generator parameter is outside its legal range.
    InvalidSpec(&'static str),
    /// A pool list is not a disjoint cover of `0..n` in canonical order.
    PoolInvariant(&'static str),
    /// The operation needs at least one input value.
    EmptyInput,
    /// A value is NaN or infinite where a finite number is required.
    NonFinite,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::IndexOutOfRange { index, bound } => {
                write!(
                    f,
                    "node index {index} out of range (graph has {bound} nodes)"
                )
            }
            Error::SelfLoopRejected { node } => write!(f, "self-loop ({node}, {node}) rejected"),
            Error::EdgeNotPresent { u, v } => write!(f, "({u}, {v}) is not an edge of the graph"),
            Error::InvalidThresholds { t_low, t_high } => {
                write!(
                    f,
                    "invalid thresholds: t_low {t_low} exceeds t_high {t_high}"
                )
            }
            Error::ShapeMismatch { expected, actual } => {
                write!(f, "shape mismatch: expected {expected}, got {actual}")
            }
            Error::InvalidSpec(msg) => write!(f, "invalid spec: {msg}"),
            Error::PoolInvariant(msg) => write!(f, "pool invariant violated: {msg}"),
            Error::EmptyInput => write!(f, "empty input"),
            Error::NonFinite => write!(f, "non-finite value"),
        }
    }
}

impl core::error::Error for Error {}
