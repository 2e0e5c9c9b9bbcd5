//! Strong orientations of bridgeless multigraphs with diameter guarantees.
//!
//! Every connected bridgeless graph admits a strong orientation; this crate
//! computes such orientations while controlling how much the diameter can
//! grow. It provides:
//!
//! - multigraph and digraph types with distance machinery ([`graph`]),
//! - block/cut-vertex decomposition and block-graph recognition
//!   ([`decompose`]),
//! - orientation strategies with per-run verified diameter bounds
//!   ([`orient`]): the block-count bound n − ⌊p/2⌋ and the block-graph
//!   parity bound ⌊3n/4⌋ / ⌊3(n+1)/4⌋,
//! - exact minimum-diameter orientation solvers with certificates
//!   ([`exact`]),
//! - extremal graph families meeting the bounds and random corpora
//!   ([`families`]),
//! - a plain-text edge-list / arc-list format ([`format`]).

pub mod decompose;
pub mod error;
pub mod exact;
pub mod families;
pub mod format;
pub mod graph;
pub mod orient;
pub mod rng;

pub use decompose::{decompose, BlockDecomposition};
pub use error::{Error, Result};
pub use exact::{
    oriented_diameter_bruteforce, oriented_diameter_decomposed, OrientationCertificate,
};
pub use families::{bounds, BoundSet, Family, FamilySpec};
pub use graph::{Digraph, Distance, MultiGraph};
pub use orient::{
    blockgraph_orientation, robbins_orientation, theorem1_orientation, OrientationReport,
};
