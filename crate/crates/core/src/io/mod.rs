//! File formats.
//!
//! - [`pfm`]: portable float maps (`PF`/`Pf`, little-endian, scale -1.0) for
//!   depth, barycentric, face-index and geodesic rasters.
//! - [`flo`]: optical-flow fields (magic float 202021.25), storing per-pixel
//!   offsets `target - pixel`.
//! - [`png`]: 8-bit RGB images and binary masks.
//! - [`checkpoint`]: named-tensor network weights (`GPSW`).
//! - [`config`]: flat `key = value` run configuration files.
//!
//! Readers reject malformed headers; writers produce byte-stable output so
//! seeded runs are reproducible artifact-for-artifact.

pub mod checkpoint;
pub mod config;
pub mod flo;
pub mod pfm;
pub mod png;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{path}: bad {format} header: {msg}")]
    BadHeader { format: &'static str, path: String, msg: String },
    #[error("{path}: truncated {format} payload (wanted {wanted} bytes)")]
    Truncated { format: &'static str, path: String, wanted: usize },
    #[error("config line {line}: expected `key = value`, got `{text}`")]
    BadConfigLine { line: usize, text: String },
    #[error("config key `{key}`: {msg}")]
    BadConfigValue { key: String, msg: String },
    #[error("{0}")]
    Other(String),
}
