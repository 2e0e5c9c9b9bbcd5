//! Construction of strong orientations: completing partial orientations,
//! disjoint path pairs, tournaments of small diameter, orientations of tree
//! extensions, and the two headline strategies with their diameter bounds.

mod cross_block;
mod disjoint_paths;
mod extend;
mod robbins;
mod strategies;
mod tournament;
mod tree_extension;

pub use cross_block::lemma1_orientation;
pub use disjoint_paths::{two_disjoint_paths, PathPair};
pub use extend::{extend_orientation, PartialOrientation};
pub use robbins::robbins_orientation;
pub use strategies::{
    blockgraph_orientation, robbins_with_report, theorem1_orientation, OrientationReport,
};
pub use tournament::{complete_orientation, complete_orientation_seeded};
pub use tree_extension::{
    tree_extension_orientation, ExtensionPath, SubOrientation, TreeExtension,
};
