//! Partial orientations and their completion to strong orientations.

use crate::error::{Error, Result};
use crate::graph::{Digraph, MultiGraph};

/// A multigraph together with directions fixed for a subset of its edges.
#[derive(Debug, Clone)]
pub struct PartialOrientation {
    base: MultiGraph,
    /// Per edge: `None` = still free, `Some(true)` = as stored, `Some(false)` = reversed.
    assigned: Vec<Option<bool>>,
}

impl PartialOrientation {
    pub fn new(base: MultiGraph) -> Self {
        let m = base.edge_count();
        PartialOrientation {
            base,
            assigned: vec![None; m],
        }
    }

    pub fn base(&self) -> &MultiGraph {
        &self.base
    }

    /// Fixes edge `edge` to point `from -> to`. The pair must match the edge's
    /// endpoints; re-assigning the same direction is a no-op, a conflicting
    /// direction is an error.
    pub fn assign(&mut self, edge: usize, from: usize, to: usize) -> Result<()> {
        if edge >= self.base.edge_count() {
            return Err(Error::invalid(format!(
                "edge id {edge} out of range (graph has {} edges)",
                self.base.edge_count()
            )));
        }
        let (a, b) = self.base.edge(edge);
        let forward = if (from, to) == (a, b) {
            true
        } else if (from, to) == (b, a) {
            false
        } else {
            return Err(Error::invalid(format!(
                "edge {edge} joins {a} and {b}, not {from} and {to}"
            )));
        };
        match self.assigned[edge] {
            None => {
                self.assigned[edge] = Some(forward);
                Ok(())
            }
            Some(f) if f == forward => Ok(()),
            Some(_) => Err(Error::invalid(format!(
                "edge {edge} already oriented in the opposite direction"
            ))),
        }
    }

    /// The direction assigned to `edge`, as a `(from, to)` pair.
    pub fn direction(&self, edge: usize) -> Option<(usize, usize)> {
        let (a, b) = self.base.edge(edge);
        self.assigned[edge].map(|f| if f { (a, b) } else { (b, a) })
    }

    pub fn assigned_count(&self) -> usize {
        self.assigned.iter().filter(|d| d.is_some()).count()
    }

    pub fn free_count(&self) -> usize {
        self.assigned.len() - self.assigned_count()
    }

    pub(crate) fn flags(&self) -> &[Option<bool>] {
        &self.assigned
    }
}

/// True if every vertex can reach and be reached from vertex 0 when assigned
/// edges are one-way and free edges may be used in both directions. This is a
/// necessary condition for a strong completion to exist.
fn mixed_strong(g: &MultiGraph, dirs: &[Option<bool>]) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    // forward = arcs usable leaving a vertex; backward = arcs usable entering.
    for forward in [true, false] {
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0usize);
        let mut count = 1usize;
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.adjacent(u) {
                if seen[w] {
                    continue;
                }
                let usable = match dirs[e] {
                    None => true,
                    Some(f) => {
                        // Edge points a -> b when f, b -> a otherwise.
                        let (a, b) = g.edge(e);
                        let tail = if f { a } else { b };
                        if forward {
                            tail == u
                        } else {
                            tail == w
                        }
                    }
                };
                if usable {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        if count != n {
            return false;
        }
    }
    true
}

/// Completes a partial orientation of a connected bridgeless multigraph to a
/// strong orientation, keeping every already-assigned direction.
///
/// Free edges are decided by backtracking in increasing edge-id order,
/// preferring the stored direction; branches are pruned as soon as the mixed
/// graph (fixed arcs one-way, free edges two-way) stops being strongly
/// connected. The result is deterministic.
pub fn extend_orientation(partial: &PartialOrientation) -> Result<Digraph> {
    let g = partial.base();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((u, v)) = g.find_bridge() {
        return Err(Error::Bridge { u, v });
    }
    let mut dirs: Vec<Option<bool>> = partial.flags().to_vec();
    let free: Vec<usize> = (0..dirs.len()).filter(|&e| dirs[e].is_none()).collect();

    fn search(g: &MultiGraph, dirs: &mut [Option<bool>], free: &[usize], idx: usize) -> bool {
        if !mixed_strong(g, dirs) {
            return false;
        }
        if idx == free.len() {
            return true;
        }
        let e = free[idx];
        for flag in [true, false] {
            dirs[e] = Some(flag);
            if search(g, dirs, free, idx + 1) {
                return true;
            }
        }
        dirs[e] = None;
        false
    }

    if !search(g, &mut dirs, &free, 0) {
        return Err(Error::contract(
            "partial orientation admits no strong completion",
        ));
    }
    let flags: Vec<bool> = dirs.into_iter().map(|d| d.unwrap()).collect();
    let d = Digraph::from_orientation(g, &flags)?;
    debug_assert!(d.is_strongly_connected());
    Ok(d)
}
