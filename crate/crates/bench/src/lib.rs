//! Shared fixtures for the criterion benchmarks in `benches/`.

use orientdia_core::families::{
    gen_gnp_extremal, gen_random_block_graph, gen_random_bridgeless,
};
use orientdia_core::MultiGraph;

/// A mid-sized bridgeless graph: 40 vertices in 6 blocks.
pub fn bridgeless_40() -> MultiGraph {
    gen_random_bridgeless(40, 6, 1).expect("feasible spec")
}

/// A block graph on 40 vertices.
pub fn block_graph_40() -> MultiGraph {
    gen_random_block_graph(40, 1).expect("feasible spec")
}

/// The extremal chain-of-triangles graph with p blocks on 2p + 1 vertices.
pub fn triangle_chain(p: usize) -> MultiGraph {
    gen_gnp_extremal(2 * p + 1, p).expect("feasible spec").0
}
