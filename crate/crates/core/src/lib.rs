//! Geodesic-preserving per-pixel feature embeddings for dense human-like
//! correspondences, end to end on the CPU.
//!
//! The crate is organized around the stages of the pipeline:
//!
//! - [`mesh`]: triangle meshes, surface points, and the plain-text mesh format.
//! - [`geodesic`]: single-source geodesic distance fields — the exact
//!   window-propagation method and a Steiner-graph upper-bound oracle.
//! - [`synth`]: procedural articulated toy humanoids, pinhole rendering, and
//!   the ground-truth rasters (correspondence fields, visibility, geodesic
//!   distance images) that supervise training.
//! - [`tensor`]: a small dense-tensor engine with reverse-mode automatic
//!   differentiation.
//! - [`net`]: the residual U-Net feature extractor and the ADAM optimizer.
//! - [`loss`]: the geodesic-preserving loss terms, the triplet baseline, and
//!   the training loop.
//! - [`matching`]: nearest-neighbor dense matching, visibility scores, and
//!   the evaluation metrics (AEPE, occlusion AP, cycle consistency), plus
//!   warping and morphing.
//! - [`io`]: file formats (`.flo`, PFM, PNG, checkpoints, manifests, configs).
//! - [`rng`]: one seed, many named deterministic streams.

pub mod geodesic;
pub mod grid;
pub mod io;
pub mod loss;
pub mod matching;
pub mod mesh;
pub mod net;
pub mod rng;
pub mod synth;
pub mod tensor;
