//! Exhaustive search for the exact oriented diameter.
//!
//! Orientations are encoded as bitmasks over edge ids: bit e = 0 keeps edge
//! e on its stored endpoints (a -> b), bit e = 1 reverses it. Reversing all
//! edges transposes the digraph and preserves both strong connectivity and
//! diameter, so only masks with bit 0 = 0 are enumerated; this halves the
//! space without losing any diameter value. Ties in the minimum are resolved
//! by the smallest enumerated mask, which makes the witness reproducible.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Distance, MultiGraph};

use super::{
    forced_pair_constraints, satisfies_constraints, ExactMethod, OrientationCertificate, Searcher,
};

/// Largest edge count accepted by default: 2^21 candidate masks.
pub const DEFAULT_EDGE_BUDGET: usize = 22;

/// Minimum diameter over all strong orientations, by exhaustive enumeration.
///
/// Fails with [`Error::Budget`] when the graph has more than `edge_budget`
/// edges (use the decomposed method for larger graphs), and with
/// [`Error::Bridge`] when no strong orientation exists.
pub fn oriented_diameter_bruteforce(
    g: &MultiGraph,
    edge_budget: usize,
) -> Result<OrientationCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((u, v)) = g.find_bridge() {
        return Err(Error::Bridge { u, v });
    }
    let m = g.edge_count();
    if m > edge_budget || m > 62 {
        return Err(Error::Budget(format!(
            "graph has {m} edges, above the exhaustive budget of {}; \
             use the decomposed method",
            edge_budget.min(62)
        )));
    }
    if m == 0 {
        // Bridgeless and connected with no edges: a single vertex.
        return Ok(OrientationCertificate {
            value: 0,
            witness: Digraph::new(g.vertex_count(), Vec::new())?,
            method: ExactMethod::Brute,
            explored: 1,
        });
    }

    let searcher = Searcher::new(g);
    let constraints = forced_pair_constraints(g);
    let half: u64 = 1 << (m - 1);
    let threads = rayon::current_num_threads() as u64;
    let chunks = (threads * 8).min(half).max(1);
    let chunk_size = half.div_ceil(chunks);

    let (found, explored) = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk_size;
            let hi = ((c + 1) * chunk_size).min(half);
            let mut scratch = searcher.scratch();
            let mut best: Option<(u32, u64)> = None;
            let mut explored = 0u64;
            for k in lo..hi {
                let mask = k << 1;
                if !satisfies_constraints(mask, &constraints) {
                    continue;
                }
                explored += 1;
                let limit = best.map_or(u32::MAX, |(v, _)| v);
                if let Some(d) = searcher.diameter_below(mask, limit, &mut scratch) {
                    best = Some((d, mask));
                }
            }
            (best, explored)
        })
        .reduce(
            || (None, 0u64),
            |a, b| {
                let merged = match (a.0, b.0) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, None) => x,
                    (None, y) => y,
                };
                (merged, a.1 + b.1)
            },
        );

    let (value, mask) = found.ok_or_else(|| {
        Error::contract("bridgeless connected graph has no strong orientation")
    })?;
    let flags: Vec<bool> = (0..m).map(|e| (mask >> e) & 1 == 0).collect();
    let witness = Digraph::from_orientation(g, &flags)?;
    debug_assert_eq!(witness.diameter(), Distance::Finite(value as usize));
    Ok(OrientationCertificate {
        value: value as usize,
        witness,
        method: ExactMethod::Brute,
        explored,
    })
}
