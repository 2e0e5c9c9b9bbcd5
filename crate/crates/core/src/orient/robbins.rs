//! Strong orientation of any connected bridgeless multigraph via
//! depth-first search: tree edges point away from the root, all remaining
//! edges point from descendant to ancestor.

use crate::error::{Error, Result};
use crate::graph::{Digraph, MultiGraph};

/// Orients a connected bridgeless multigraph so the result is strongly
/// connected. A bridge is reported as [`Error::Bridge`] with its endpoints;
/// a disconnected input as [`Error::Disconnected`].
pub fn robbins_orientation(g: &MultiGraph) -> Result<Digraph> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::invalid("cannot orient the empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.edge_count();
    if n == 1 {
        return Digraph::new(1, Vec::new());
    }

    let mut dirs: Vec<Option<bool>> = vec![None; m];
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut timer = 0usize;
    // Stack frames: (vertex, index of next adjacency entry to scan).
    let mut stack: Vec<(usize, usize)> = Vec::new();
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    stack.push((0, 0));

    // Orients edge `e` from `from` towards its other endpoint.
    let orient = |dirs: &mut Vec<Option<bool>>, e: usize, from: usize| {
        let (a, _) = g.edge(e);
        dirs[e] = Some(a == from);
    };

    while let Some(top) = stack.last_mut() {
        let u = top.0;
        if top.1 < g.adjacent(u).len() {
            let (w, e) = g.adjacent(u)[top.1];
            top.1 += 1;
            if dirs[e].is_some() {
                continue;
            }
            if disc[w] == usize::MAX {
                // Tree edge, away from the root.
                orient(&mut dirs, e, u);
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, 0));
            } else {
                // Any other unoriented edge leads to an ancestor (a vertex
                // below `u` on the stack): point it upwards.
                debug_assert!(disc[w] < disc[u]);
                orient(&mut dirs, e, u);
                low[u] = low[u].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(parent, _)) = stack.last() {
                if low[u] > disc[parent] {
                    return Err(Error::Bridge { u: parent, v: u });
                }
                let lu = low[u];
                low[parent] = low[parent].min(lu);
            }
        }
    }

    debug_assert!(dirs.iter().all(|d| d.is_some()));
    let flags: Vec<bool> = dirs.into_iter().map(|d| d.unwrap()).collect();
    let d = Digraph::from_orientation(g, &flags)?;
    debug_assert!(d.is_strongly_connected());
    Ok(d)
}
