//! File formats, dataset manifests, and JSON reports backing the
//! `curvpool` command line tool. All formats are plain UTF-8 text with
//! canonical writers, so reruns of any pipeline produce byte-identical
//! files.

pub mod formats;
pub mod manifest;
pub mod report;
