//! Strong orientations with short routes between two vertices lying in
//! different blocks, built from two edge-disjoint path pairs through a
//! separating cut vertex.

use crate::decompose::{branches_at, decompose};
use crate::error::{Error, Result};
use crate::graph::{Digraph, MultiGraph, SubGraph};
use crate::orient::disjoint_paths::two_disjoint_paths;
use crate::orient::extend::{extend_orientation, PartialOrientation};

/// Orients a connected bridgeless multigraph on `n` vertices so that it is
/// strongly connected and the two given vertices, which must lie in
/// different blocks, are at distance at most `n - 2` from each other in both
/// directions.
///
/// A cut vertex `y` separating `x` from `z` is chosen (smallest id first).
/// In the branch at `y` containing `x`, two disjoint paths between `x` and
/// `y` are found and oriented oppositely, the shorter one from `x` towards
/// `y`; symmetrically, in the branch containing `z` the shorter path runs
/// from `z` towards `y`. The remaining edges are completed to a strong
/// orientation. The distance guarantee follows from the length bounds of
/// [`two_disjoint_paths`]: each route concatenates a shorter path (at most
/// its branch order minus 2) with a longer one (at most the other branch
/// order minus 1), and the two branch orders sum to `n + 1`.
pub fn lemma1_orientation(g: &MultiGraph, x: usize, z: usize) -> Result<Digraph> {
    let n = g.vertex_count();
    if x >= n {
        return Err(Error::VertexOutOfRange { vertex: x, order: n });
    }
    if z >= n {
        return Err(Error::VertexOutOfRange { vertex: z, order: n });
    }
    if x == z {
        return Err(Error::invalid("the two distinguished vertices must differ"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((u, v)) = g.find_bridge() {
        return Err(Error::Bridge { u, v });
    }

    let dec = decompose(g)?;
    let shared_block = dec
        .blocks()
        .iter()
        .any(|b| b.binary_search(&x).is_ok() && b.binary_search(&z).is_ok());
    if shared_block {
        return Err(Error::invalid(format!(
            "vertices {x} and {z} lie in a common block"
        )));
    }

    // Smallest cut vertex whose removal separates x from z.
    let mut separator = None;
    'outer: for &y in dec.cut_vertices() {
        if y == x || y == z {
            continue;
        }
        let mut comp = vec![usize::MAX; n];
        let mut next_comp = 0usize;
        for start in 0..n {
            if start == y || comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next_comp;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in g.adjacent(u) {
                    if w != y && comp[w] == usize::MAX {
                        comp[w] = next_comp;
                        queue.push_back(w);
                    }
                }
            }
            next_comp += 1;
        }
        if comp[x] != comp[z] {
            separator = Some(y);
            break 'outer;
        }
    }
    let y = separator.ok_or_else(|| {
        Error::contract(format!(
            "no cut vertex separates {x} from {z} although they share no block"
        ))
    })?;

    let branches = branches_at(g, y)?;
    let find_branch = |v: usize| -> Result<&SubGraph> {
        branches
            .iter()
            .find(|b| b.to_local(v).is_some())
            .ok_or_else(|| Error::contract(format!("vertex {v} missing from every branch")))
    };
    let branch_x = find_branch(x)?;
    let branch_z = find_branch(z)?;

    let mut partial = PartialOrientation::new(g.clone());
    // Orients the shorter of two disjoint paths from `near` to `far` in that
    // direction and the longer one the opposite way.
    let mut orient_pair = |branch: &SubGraph, near: usize, far: usize| -> Result<()> {
        let ln = branch
            .to_local(near)
            .ok_or_else(|| Error::contract("endpoint missing from branch"))?;
        let lf = branch
            .to_local(far)
            .ok_or_else(|| Error::contract("endpoint missing from branch"))?;
        let pair = two_disjoint_paths(&branch.graph, ln, lf)?;
        for (step, &e) in pair.first_edges.iter().enumerate() {
            let a = branch.vertex_map[pair.first[step]];
            let b = branch.vertex_map[pair.first[step + 1]];
            partial.assign(branch.edge_map[e], a, b)?;
        }
        for (step, &e) in pair.second_edges.iter().enumerate() {
            let a = branch.vertex_map[pair.second[step]];
            let b = branch.vertex_map[pair.second[step + 1]];
            partial.assign(branch.edge_map[e], b, a)?;
        }
        Ok(())
    };
    orient_pair(branch_x, x, y)?;
    orient_pair(branch_z, z, y)?;

    let d = extend_orientation(&partial)?;

    let from_x = d.bfs_distances(x)?;
    let to_x = d.bfs_distances_to(x)?;
    for (label, dist) in [("x to z", &from_x[z]), ("z to x", &to_x[z])] {
        match dist.finite() {
            Some(v) if v <= n - 2 => {}
            Some(v) => {
                return Err(Error::contract(format!(
                    "distance {label} is {v}, above the guarantee n - 2 = {}",
                    n - 2
                )))
            }
            None => {
                return Err(Error::contract(format!("no route {label}")));
            }
        }
    }
    Ok(d)
}
