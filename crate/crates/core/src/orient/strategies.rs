//! The diameter-bounded orientation strategies: the block-count bound
//! n - floor(p/2) via recursive decomposition, and the parity bound
//! floor(3n/4) / floor(3(n+1)/4) for block graphs via a spanning tree of the
//! cut vertices.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::decompose::{branches_at, decompose, is_block_graph, BlockDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Digraph, MultiGraph, SubGraph};
use crate::orient::cross_block::lemma1_orientation;
use crate::orient::robbins::robbins_orientation;
use crate::orient::tournament::complete_orientation;
use crate::orient::tree_extension::{
    tree_extension_orientation, ExtensionPath, TreeExtension,
};

/// Summary of a produced orientation: the achieved diameter, the bound the
/// strategy promises, and a human-readable trace of the construction.
#[derive(Debug, Clone, Serialize)]
pub struct OrientationReport {
    pub strategy: String,
    pub diameter: usize,
    pub bound: usize,
    pub bound_name: String,
    pub satisfied: bool,
    pub witness_pair: (usize, usize),
    pub case_trace: Vec<String>,
}

/// Verifies strong connectivity and the promised bound, then assembles the
/// report. A violated bound is an internal error, never a silent report.
fn report_for(
    d: &Digraph,
    strategy: &str,
    bound: usize,
    bound_name: &str,
    case_trace: Vec<String>,
) -> Result<OrientationReport> {
    let (diam, witness) = d.diameter_with_witness();
    let diameter = diam.finite().ok_or_else(|| {
        Error::contract(format!("{strategy} produced a non-strong orientation"))
    })?;
    if diameter > bound {
        return Err(Error::contract(format!(
            "{strategy} produced diameter {diameter}, above its bound {bound}"
        )));
    }
    Ok(OrientationReport {
        strategy: strategy.to_string(),
        diameter,
        bound,
        bound_name: bound_name.to_string(),
        satisfied: true,
        witness_pair: witness.unwrap_or((0, 0)),
        case_trace,
    })
}

/// Any strong orientation, reported against the trivial bound n - 1 (every
/// finite directed distance is at most n - 1).
pub fn robbins_with_report(g: &MultiGraph) -> Result<(Digraph, OrientationReport)> {
    let d = robbins_orientation(g)?;
    let bound = g.vertex_count().saturating_sub(1);
    let report = report_for(
        &d,
        "robbins",
        bound,
        "trivial",
        vec!["any strong orientation meets the trivial bound".to_string()],
    )?;
    Ok((d, report))
}

/// Records each assigned direction exactly once; a second, conflicting
/// assignment signals overlapping subproblems, which is an internal error.
fn set_direction(dirs: &mut [Option<bool>], edge: usize, forward: bool) -> Result<()> {
    match dirs[edge] {
        None => {
            dirs[edge] = Some(forward);
            Ok(())
        }
        Some(f) if f == forward => Ok(()),
        Some(_) => Err(Error::contract(format!(
            "edge {edge} oriented twice with conflicting directions"
        ))),
    }
}

/// Copies the orientation of a subgraph (arc i of `d` = local edge i) into
/// the host direction table.
fn merge_suborientation(
    dirs: &mut [Option<bool>],
    sub: &SubGraph,
    d: &Digraph,
) -> Result<()> {
    for (local, &global) in sub.edge_map.iter().enumerate() {
        let stored = sub.graph.edge(local);
        let arc = d.arcs()[local];
        debug_assert!(arc == stored || arc == (stored.1, stored.0));
        set_direction(dirs, global, arc == stored)?;
    }
    Ok(())
}

fn assemble(g: &MultiGraph, dirs: Vec<Option<bool>>) -> Result<Digraph> {
    let mut flags = Vec::with_capacity(dirs.len());
    for (e, d) in dirs.into_iter().enumerate() {
        flags.push(d.ok_or_else(|| {
            Error::contract(format!("edge {e} was never oriented"))
        })?);
    }
    Digraph::from_orientation(g, &flags)
}

/// Strong orientation of a connected bridgeless multigraph with diameter at
/// most n - floor(p/2), where p is the number of blocks.
///
/// The construction recurses on the block structure: with at most three
/// blocks any strong orientation already meets the bound; a cut vertex lying
/// in more than two blocks splits the graph into branches handled
/// independently; two blocks with exactly two cut vertices each, sharing one
/// of them, are contracted to a single vertex for the recursive step and then
/// oriented by [`lemma1_orientation`]; otherwise any strong orientation
/// suffices. The bound is re-verified at every level of the recursion.
pub fn theorem1_orientation(g: &MultiGraph) -> Result<(Digraph, OrientationReport)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::invalid("cannot orient the empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((u, v)) = g.find_bridge() {
        return Err(Error::Bridge { u, v });
    }
    let mut trace = Vec::new();
    let d = theorem1_recurse(g, 0, &mut trace)?;
    let dec = decompose(g)?;
    let bound = n - dec.block_count() / 2;
    let report = report_for(&d, "theorem1", bound, "theorem1", trace)?;
    Ok((d, report))
}

fn theorem1_recurse(
    g: &MultiGraph,
    depth: usize,
    trace: &mut Vec<String>,
) -> Result<Digraph> {
    let dec = decompose(g)?;
    if let Some(&e) = dec.bridges().first() {
        let (u, v) = g.edge(e);
        return Err(Error::Bridge { u, v });
    }
    let n = g.vertex_count();
    let p = dec.block_count();
    let level_bound = n - p / 2;
    let slot = trace.len();
    trace.push(String::new());

    let (label, d) = if p <= 3 {
        (
            format!("depth {depth}: {p} block(s), strong orientation directly"),
            robbins_orientation(g)?,
        )
    } else if let Some(&v) = dec
        .cut_vertices()
        .iter()
        .find(|&&v| dec.blocks_of_vertex(v).len() > 2)
    {
        (
            format!("depth {depth}: cut vertex {v} lies in more than two blocks, splitting into branches"),
            theorem1_split(g, v, depth, trace)?,
        )
    } else if let Some((a, b, y)) = find_adjacent_two_cut_blocks(&dec) {
        let cuts_a = dec.cut_vertices_of_block(a);
        let cuts_b = dec.cut_vertices_of_block(b);
        let x = if cuts_a[0] == y { cuts_a[1] } else { cuts_a[0] };
        let z = if cuts_b[0] == y { cuts_b[1] } else { cuts_b[0] };
        (
            format!("depth {depth}: contracting two blocks around cut vertex {y} with outer cut vertices {x} and {z}"),
            theorem1_contract(g, &dec, a, b, y, x, z, depth, trace)?,
        )
    } else {
        (
            format!("depth {depth}: block structure is simple, strong orientation directly"),
            robbins_orientation(g)?,
        )
    };

    let (diam, _) = d.diameter_with_witness();
    let diameter = diam.finite().ok_or_else(|| {
        Error::contract(format!("orientation at depth {depth} is not strong"))
    })?;
    if diameter > level_bound {
        return Err(Error::contract(format!(
            "orientation at depth {depth} has diameter {diameter}, above n - floor(p/2) = {level_bound}"
        )));
    }
    trace[slot] = format!("{label}; verified diameter {diameter} <= {level_bound}");
    Ok(d)
}

/// The two largest branches at `v` and the union of all remaining ones are
/// oriented independently; their arc sets are disjoint and cover the graph.
fn theorem1_split(
    g: &MultiGraph,
    v: usize,
    depth: usize,
    trace: &mut Vec<String>,
) -> Result<Digraph> {
    let branches = branches_at(g, v)?;
    if branches.len() < 3 {
        return Err(Error::contract(format!(
            "cut vertex {v} in more than two blocks yielded fewer than three branches"
        )));
    }
    let mut order: Vec<usize> = (0..branches.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(branches[i].graph.vertex_count()), i));

    let mut dirs: Vec<Option<bool>> = vec![None; g.edge_count()];
    for &big in &order[..2] {
        let sub = &branches[big];
        let d = theorem1_recurse(&sub.graph, depth + 1, trace)?;
        merge_suborientation(&mut dirs, sub, &d)?;
    }
    let mut rest_vertices = BTreeSet::new();
    for &i in &order[2..] {
        rest_vertices.extend(branches[i].vertex_map.iter().copied());
    }
    let rest_list: Vec<usize> = rest_vertices.into_iter().collect();
    let rest = g.induced(&rest_list)?;
    let d = theorem1_recurse(&rest.graph, depth + 1, trace)?;
    merge_suborientation(&mut dirs, &rest, &d)?;
    assemble(g, dirs)
}

/// First pair of distinct blocks that each contain exactly two cut vertices
/// and share one of them, scanning blocks and cut vertices in ascending order.
fn find_adjacent_two_cut_blocks(dec: &BlockDecomposition) -> Option<(usize, usize, usize)> {
    for a in 0..dec.block_count() {
        let cuts_a = dec.cut_vertices_of_block(a);
        if cuts_a.len() != 2 {
            continue;
        }
        for &y in cuts_a {
            for &b in dec.blocks_of_vertex(y) {
                if b != a && dec.cut_vertices_of_block(b).len() == 2 {
                    return Some((a, b, y));
                }
            }
        }
    }
    None
}

/// Contracts the union of blocks `a` and `b` (sharing cut vertex `y`, with
/// outer cut vertices `x` and `z`) to a single vertex, orients the contracted
/// graph recursively, lifts the arcs back along preserved edge identities,
/// and orients the two blocks by [`lemma1_orientation`].
#[allow(clippy::too_many_arguments)]
fn theorem1_contract(
    g: &MultiGraph,
    dec: &BlockDecomposition,
    a: usize,
    b: usize,
    y: usize,
    x: usize,
    z: usize,
    depth: usize,
    trace: &mut Vec<String>,
) -> Result<Digraph> {
    let n = g.vertex_count();
    if !dec.blocks()[a].contains(&y) || !dec.blocks()[b].contains(&y) {
        return Err(Error::contract(format!(
            "cut vertex {y} is not shared by the two blocks being contracted"
        )));
    }
    let mut in_ab = vec![false; n];
    for &v in &dec.blocks()[a] {
        in_ab[v] = true;
    }
    for &v in &dec.blocks()[b] {
        in_ab[v] = true;
    }
    let ab_vertices: Vec<usize> = (0..n).filter(|&v| in_ab[v]).collect();

    // Structural guarantees behind the contraction: every edge inside the
    // contracted part belongs to one of the two blocks, edges leaving it
    // attach only at the outer cut vertices, and no outside vertex sees both
    // of them (which would create parallel edges after contraction).
    let mut sees_x = vec![false; n];
    let mut sees_z = vec![false; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match (in_ab[u], in_ab[v]) {
            (true, true) => {
                if dec.block_of_edge(e) != a && dec.block_of_edge(e) != b {
                    return Err(Error::contract(format!(
                        "edge {e} joins the contracted blocks but belongs to neither"
                    )));
                }
            }
            (true, false) | (false, true) => {
                let (inside, outside) = if in_ab[u] { (u, v) } else { (v, u) };
                if inside == x {
                    if sees_z[outside] {
                        return Err(Error::contract(format!(
                            "vertex {outside} is adjacent to both outer cut vertices"
                        )));
                    }
                    sees_x[outside] = true;
                } else if inside == z {
                    if sees_x[outside] {
                        return Err(Error::contract(format!(
                            "vertex {outside} is adjacent to both outer cut vertices"
                        )));
                    }
                    sees_z[outside] = true;
                } else {
                    return Err(Error::contract(format!(
                        "edge {e} leaves the contracted blocks at vertex {inside}, \
                         which is not an outer cut vertex"
                    )));
                }
            }
            (false, false) => {}
        }
    }

    // Contracted graph: outside vertices keep their relative order, the new
    // vertex takes the last index.
    let kept: Vec<usize> = (0..n).filter(|&v| !in_ab[v]).collect();
    let mut new_index = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        new_index[v] = i;
    }
    let merged = kept.len();
    let map = |v: usize| if in_ab[v] { merged } else { new_index[v] };
    let mut contracted_edges = Vec::new();
    let mut edge_back = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if in_ab[u] && in_ab[v] {
            continue;
        }
        contracted_edges.push((map(u), map(v)));
        edge_back.push(e);
    }
    let contracted = MultiGraph::new(merged + 1, contracted_edges)?;
    let d_contracted = theorem1_recurse(&contracted, depth + 1, trace)?;

    let mut dirs: Vec<Option<bool>> = vec![None; g.edge_count()];
    for (j, &e) in edge_back.iter().enumerate() {
        let stored = contracted.edge(j);
        let arc = d_contracted.arcs()[j];
        set_direction(&mut dirs, e, arc == stored)?;
    }

    let sub = g.induced(&ab_vertices)?;
    let lx = sub
        .to_local(x)
        .ok_or_else(|| Error::contract("outer cut vertex missing from contraction"))?;
    let lz = sub
        .to_local(z)
        .ok_or_else(|| Error::contract("outer cut vertex missing from contraction"))?;
    let d_ab = lemma1_orientation(&sub.graph, lx, lz)?;
    merge_suborientation(&mut dirs, &sub, &d_ab)?;
    assemble(g, dirs)
}

/// Strong orientation of a connected bridgeless block graph with diameter at
/// most floor(3n/4) for even n and floor(3(n+1)/4) for odd n.
///
/// With no cut vertex the graph is a single complete block and a
/// small-diameter tournament suffices. Otherwise a spanning tree of the cut
/// vertices is oriented together with short attached paths (one length-2
/// path through an interior vertex for each block with exactly two cut
/// vertices, one direct edge for each tree-nonadjacent pair of cut vertices
/// in larger blocks), end blocks get tournaments centred on their cut
/// vertex, remaining interior vertices are routed cut -> vertex -> cut, and
/// every leftover edge is oriented from its smaller to its larger endpoint.
pub fn blockgraph_orientation(g: &MultiGraph) -> Result<(Digraph, OrientationReport)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::invalid("cannot orient the empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n >= 2 {
        if let Some((u, v)) = g.find_bridge() {
            return Err(Error::Bridge { u, v });
        }
    }
    if !is_block_graph(g)? {
        return Err(Error::invalid(
            "input is not a block graph: some block is not complete",
        ));
    }
    let bound = if n.is_multiple_of(2) { 3 * n / 4 } else { 3 * (n + 1) / 4 };
    let mut trace = Vec::new();
    let d = blockgraph_build(g, &mut trace)?;
    let report = report_for(&d, "blockgraph", bound, "blockgraph", trace)?;
    Ok((d, report))
}

fn blockgraph_build(g: &MultiGraph, trace: &mut Vec<String>) -> Result<Digraph> {
    let n = g.vertex_count();
    if n == 1 {
        trace.push("single vertex, nothing to orient".to_string());
        return Digraph::new(1, Vec::new());
    }
    if n == 2 {
        // Parallel edges between two vertices: one forward, the rest back.
        trace.push("two vertices joined by parallel edges".to_string());
        let flags: Vec<bool> = (0..g.edge_count()).map(|e| e == 0).collect();
        return Digraph::from_orientation(g, &flags);
    }
    let dec = decompose(g)?;
    let s = dec.cut_count();

    if s == 0 {
        trace.push(format!(
            "no cut vertices: single complete block on {n} vertices, tournament orientation"
        ));
        let t = complete_orientation(n, None)?;
        let points_to = direction_table(&t);
        let flags: Vec<bool> = g
            .edges()
            .iter()
            .map(|&(u, v)| points_to[u][v])
            .collect();
        return Digraph::from_orientation(g, &flags);
    }

    let cuts: Vec<usize> = dec.cut_vertices().to_vec();
    let gs = g.induced(&cuts)?;
    if !gs.graph.is_connected() {
        return Err(Error::contract(
            "the cut vertices do not induce a connected subgraph",
        ));
    }

    // Breadth-first spanning tree of the induced subgraph on cut vertices.
    let mut tree_edges = Vec::new();
    {
        let mut seen = vec![false; cuts.len()];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(w, le) in gs.graph.adjacent(u) {
                if !seen[w] {
                    seen[w] = true;
                    tree_edges.push(gs.edge_map[le]);
                    queue.push_back(w);
                }
            }
        }
    }
    let tree_edge_set: BTreeSet<usize> = tree_edges.iter().copied().collect();
    let tree_pairs: BTreeSet<(usize, usize)> = tree_edges
        .iter()
        .map(|&e| {
            let (u, v) = g.edge(e);
            (u.min(v), u.max(v))
        })
        .collect();

    // Smallest-id edge between two vertices, skipping tree edges.
    let edge_between = |u: usize, v: usize| -> Option<usize> {
        g.adjacent(u)
            .iter()
            .filter(|&&(w, e)| w == v && !tree_edge_set.contains(&e))
            .map(|&(_, e)| e)
            .min()
    };

    let mut paths = Vec::new();
    for b in 0..dec.block_count() {
        let cuts_b = dec.cut_vertices_of_block(b);
        if cuts_b.len() == 2 {
            let (u, v) = (cuts_b[0], cuts_b[1]);
            let interior = dec.blocks()[b]
                .iter()
                .copied()
                .find(|&w| !dec.is_cut_vertex(w));
            match interior {
                Some(w) => {
                    let eu = edge_between(u, w).ok_or_else(|| {
                        Error::contract(format!("no edge between {u} and {w} in their block"))
                    })?;
                    let ev = edge_between(w, v).ok_or_else(|| {
                        Error::contract(format!("no edge between {w} and {v} in their block"))
                    })?;
                    paths.push(ExtensionPath {
                        vertices: vec![u, w, v],
                        edges: vec![eu, ev],
                    });
                }
                None => {
                    // A block of two cut vertices joined by parallel edges:
                    // attach one non-tree copy directly.
                    let e = edge_between(u, v).ok_or_else(|| {
                        Error::contract(format!(
                            "no non-tree edge between cut vertices {u} and {v}"
                        ))
                    })?;
                    paths.push(ExtensionPath {
                        vertices: vec![u, v],
                        edges: vec![e],
                    });
                }
            }
        } else if cuts_b.len() > 2 {
            for i in 0..cuts_b.len() {
                for j in i + 1..cuts_b.len() {
                    let (u, v) = (cuts_b[i], cuts_b[j]);
                    if tree_pairs.contains(&(u.min(v), u.max(v))) {
                        continue;
                    }
                    let e = edge_between(u, v).ok_or_else(|| {
                        Error::contract(format!(
                            "cut vertices {u} and {v} share a block but no edge"
                        ))
                    })?;
                    paths.push(ExtensionPath {
                        vertices: vec![u, v],
                        edges: vec![e],
                    });
                }
            }
        }
    }
    trace.push(format!(
        "{s} cut vertices; spanning tree with {} attached paths oriented by bounded search",
        paths.len()
    ));

    let ext = TreeExtension::new(g.clone(), cuts.clone(), tree_edges, paths, 2)?;
    let sub = tree_extension_orientation(&ext)?;

    let mut dirs: Vec<Option<bool>> = vec![None; g.edge_count()];
    for (&e, &(from, _to)) in sub.arc_map() {
        let stored = g.edge(e);
        set_direction(&mut dirs, e, stored.0 == from)?;
    }
    let mut covered = vec![false; n];
    for v in sub.vertices() {
        covered[v] = true;
    }

    // End blocks: tournament with the cut vertex as the distinguished vertex.
    for &b in dec.end_blocks() {
        let verts = &dec.blocks()[b];
        let cut = dec.cut_vertices_of_block(b)[0];
        if verts.len() == 2 {
            let other = if verts[0] == cut { verts[1] } else { verts[0] };
            let mut first = true;
            for &(w, e) in g.adjacent(cut) {
                if w == other && dirs[e].is_none() {
                    let stored = g.edge(e);
                    let (from, to) = if first { (cut, other) } else { (other, cut) };
                    set_direction(&mut dirs, e, stored == (from, to))?;
                    first = false;
                }
            }
        } else {
            let special = verts
                .binary_search(&cut)
                .map_err(|_| Error::contract("cut vertex missing from its end block"))?;
            let t = complete_orientation(verts.len(), Some(special))?;
            let points_to = direction_table(&t);
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                if dec.block_of_edge(e) == b {
                    let lu = verts.binary_search(&u).map_err(|_| {
                        Error::contract("edge endpoint missing from its block")
                    })?;
                    let lv = verts.binary_search(&v).map_err(|_| {
                        Error::contract("edge endpoint missing from its block")
                    })?;
                    set_direction(&mut dirs, e, points_to[lu][lv])?;
                }
            }
        }
    }

    // Interior vertices of non-end blocks that the tree extension skipped:
    // route them through the block's two smallest cut vertices.
    let end_blocks: BTreeSet<usize> = dec.end_blocks().iter().copied().collect();
    for b in 0..dec.block_count() {
        if end_blocks.contains(&b) {
            continue;
        }
        let cuts_b = dec.cut_vertices_of_block(b);
        if cuts_b.len() < 2 {
            continue;
        }
        let (u, w) = (cuts_b[0], cuts_b[1]);
        for &v in &dec.blocks()[b] {
            if dec.is_cut_vertex(v) || covered[v] {
                continue;
            }
            let eu = smallest_unassigned_edge(g, &dirs, u, v).ok_or_else(|| {
                Error::contract(format!("no free edge from cut vertex {u} to {v}"))
            })?;
            let stored = g.edge(eu);
            set_direction(&mut dirs, eu, stored == (u, v))?;
            let ew = smallest_unassigned_edge(g, &dirs, v, w).ok_or_else(|| {
                Error::contract(format!("no free edge from {v} to cut vertex {w}"))
            })?;
            let stored = g.edge(ew);
            set_direction(&mut dirs, ew, stored == (v, w))?;
        }
    }

    // Leftover edges run from the smaller to the larger endpoint; both ends
    // already lie in the strongly connected part, so any direction is safe.
    for (e, dir) in dirs.iter_mut().enumerate() {
        if dir.is_none() {
            let (u, v) = g.edge(e);
            *dir = Some(u < v);
        }
    }

    let d = assemble(g, dirs)?;

    // Every vertex outside the oriented core must reach, and be reached
    // from, some cut vertex within two steps.
    for (v, &is_covered) in covered.iter().enumerate() {
        if is_covered {
            continue;
        }
        let from_v = d.bfs_distances(v)?;
        let to_v = d.bfs_distances_to(v)?;
        let near_out = cuts
            .iter()
            .filter_map(|&t| from_v[t].finite())
            .min()
            .unwrap_or(usize::MAX);
        let near_in = cuts
            .iter()
            .filter_map(|&t| to_v[t].finite())
            .min()
            .unwrap_or(usize::MAX);
        if near_out > 2 || near_in > 2 {
            return Err(Error::contract(format!(
                "vertex {v} is {near_out} steps to and {near_in} steps from the \
                 nearest cut vertex, expected at most 2"
            )));
        }
    }
    trace.push(
        "all remaining vertices lie within two steps of a cut vertex in both directions"
            .to_string(),
    );
    Ok(d)
}

/// points_to[u][v] = true when the tournament directs u -> v.
fn direction_table(t: &Digraph) -> Vec<Vec<bool>> {
    let n = t.vertex_count();
    let mut table = vec![vec![false; n]; n];
    for &(u, v) in t.arcs() {
        table[u][v] = true;
    }
    table
}

fn smallest_unassigned_edge(
    g: &MultiGraph,
    dirs: &[Option<bool>],
    u: usize,
    v: usize,
) -> Option<usize> {
    g.adjacent(u)
        .iter()
        .filter(|&&(w, e)| w == v && dirs[e].is_none())
        .map(|&(_, e)| e)
        .min()
}
