//! Orienting a spanning tree of selected vertices together with short
//! attached paths and cycles, so that the result is strongly connected and
//! satisfies explicit distance bounds between tree vertices.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Digraph, MultiGraph};

/// A path (or cycle, when the endpoints coincide) attached to the tree:
/// both endpoints are tree vertices, all interior vertices are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl ExtensionPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }
}

/// A tree on a subset of the vertices of a host multigraph, together with a
/// collection of paths and cycles of length at most `k` whose endpoints lie
/// on the tree and whose union with the tree is bridgeless.
#[derive(Debug, Clone)]
pub struct TreeExtension {
    host: MultiGraph,
    tree_vertices: Vec<usize>,
    tree_edges: Vec<usize>,
    paths: Vec<ExtensionPath>,
    k: usize,
}

impl TreeExtension {
    /// Validates and builds the structure. `tree_vertices` must be sorted and
    /// duplicate-free; `tree_edges` must form a spanning tree of them inside
    /// `host`; every path must have length between 1 and `k`, endpoints on
    /// the tree, interior vertices off the tree and pairwise distinct, and
    /// consecutive vertices joined by the listed host edges. The union of the
    /// tree and all paths must be connected and bridgeless.
    pub fn new(
        host: MultiGraph,
        tree_vertices: Vec<usize>,
        tree_edges: Vec<usize>,
        paths: Vec<ExtensionPath>,
        k: usize,
    ) -> Result<Self> {
        let n = host.vertex_count();
        if k == 0 {
            return Err(Error::invalid("extension parameter k must be at least 1"));
        }
        if tree_vertices.is_empty() {
            return Err(Error::invalid("tree must have at least one vertex"));
        }
        if !tree_vertices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::invalid(
                "tree vertices must be strictly increasing",
            ));
        }
        if *tree_vertices.last().unwrap() >= n {
            return Err(Error::VertexOutOfRange {
                vertex: *tree_vertices.last().unwrap(),
                order: n,
            });
        }
        let on_tree = |v: usize| tree_vertices.binary_search(&v).is_ok();
        if tree_edges.len() + 1 != tree_vertices.len() {
            return Err(Error::invalid(format!(
                "a tree on {} vertices needs {} edges, got {}",
                tree_vertices.len(),
                tree_vertices.len() - 1,
                tree_edges.len()
            )));
        }
        let tree_edge_set: BTreeSet<usize> = tree_edges.iter().copied().collect();
        if tree_edge_set.len() != tree_edges.len() {
            return Err(Error::invalid("tree edges must be distinct"));
        }
        for &e in &tree_edges {
            if e >= host.edge_count() {
                return Err(Error::invalid(format!("tree edge id {e} out of range")));
            }
            let (a, b) = host.edge(e);
            if !on_tree(a) || !on_tree(b) {
                return Err(Error::invalid(format!(
                    "tree edge {e} has an endpoint off the tree"
                )));
            }
        }
        // Connectivity of |V(T)| - 1 edges on V(T) makes T a tree.
        {
            let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &e in &tree_edges {
                let (a, b) = host.edge(e);
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
            let mut seen = BTreeSet::new();
            let mut queue = std::collections::VecDeque::new();
            seen.insert(tree_vertices[0]);
            queue.push_back(tree_vertices[0]);
            while let Some(u) = queue.pop_front() {
                for &w in adj.get(&u).into_iter().flatten() {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            if seen.len() != tree_vertices.len() {
                return Err(Error::invalid("tree edges do not span the tree vertices"));
            }
        }

        for (i, path) in paths.iter().enumerate() {
            let l = path.edges.len();
            if l == 0 || l > k {
                return Err(Error::invalid(format!(
                    "path {i} has length {l}, outside 1..={k}"
                )));
            }
            if path.vertices.len() != l + 1 {
                return Err(Error::invalid(format!(
                    "path {i} lists {} vertices for {} edges",
                    path.vertices.len(),
                    l
                )));
            }
            let first = path.vertices[0];
            let last = *path.vertices.last().unwrap();
            if !on_tree(first) || !on_tree(last) {
                return Err(Error::invalid(format!(
                    "path {i} must start and end on the tree"
                )));
            }
            let interior = &path.vertices[1..l];
            let mut interior_set = BTreeSet::new();
            for &v in interior {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
                if on_tree(v) {
                    return Err(Error::invalid(format!(
                        "path {i} passes through tree vertex {v}"
                    )));
                }
                if !interior_set.insert(v) {
                    return Err(Error::invalid(format!(
                        "path {i} repeats interior vertex {v}"
                    )));
                }
            }
            let mut edge_set = BTreeSet::new();
            for (j, &e) in path.edges.iter().enumerate() {
                if !edge_set.insert(e) {
                    return Err(Error::invalid(format!("path {i} repeats edge {e}")));
                }
                if e >= host.edge_count() {
                    return Err(Error::invalid(format!(
                        "path {i} uses edge id {e} out of range"
                    )));
                }
                if tree_edge_set.contains(&e) {
                    return Err(Error::invalid(format!(
                        "path {i} reuses tree edge {e}"
                    )));
                }
                let (a, b) = host.edge(e);
                let (u, v) = (path.vertices[j], path.vertices[j + 1]);
                if (a, b) != (u, v) && (a, b) != (v, u) {
                    return Err(Error::invalid(format!(
                        "path {i} edge {e} does not join vertices {u} and {v}"
                    )));
                }
            }
        }

        let ext = TreeExtension {
            host,
            tree_vertices,
            tree_edges,
            paths,
            k,
        };
        let all: Vec<usize> = (0..ext.paths.len()).collect();
        if !ext.union_is_bridgeless(&all) {
            return Err(Error::invalid(
                "the tree plus all paths must be connected and bridgeless",
            ));
        }
        Ok(ext)
    }

    pub fn host(&self) -> &MultiGraph {
        &self.host
    }

    pub fn tree_vertices(&self) -> &[usize] {
        &self.tree_vertices
    }

    pub fn tree_edges(&self) -> &[usize] {
        &self.tree_edges
    }

    pub fn paths(&self) -> &[ExtensionPath] {
        &self.paths
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Checks that the tree plus the selected paths forms a connected
    /// bridgeless sub-multigraph (on the vertices it touches).
    fn union_is_bridgeless(&self, selected: &[usize]) -> bool {
        if self.tree_vertices.len() == 1 && selected.is_empty() && self.paths.is_empty() {
            return true;
        }
        let mut edge_ids: BTreeSet<usize> = self.tree_edges.iter().copied().collect();
        for &p in selected {
            edge_ids.extend(self.paths[p].edges.iter().copied());
        }
        let mut vertices: BTreeSet<usize> = self.tree_vertices.iter().copied().collect();
        for &e in &edge_ids {
            let (a, b) = self.host.edge(e);
            vertices.insert(a);
            vertices.insert(b);
        }
        if vertices.len() == 1 {
            return true;
        }
        let vlist: Vec<usize> = vertices.iter().copied().collect();
        let local = |v: usize| vlist.binary_search(&v).unwrap();
        let edges: Vec<(usize, usize)> = edge_ids
            .iter()
            .map(|&e| {
                let (a, b) = self.host.edge(e);
                (local(a), local(b))
            })
            .collect();
        let g = match MultiGraph::new(vlist.len(), edges) {
            Ok(g) => g,
            Err(_) => return false,
        };
        g.is_connected() && g.find_bridge().is_none()
    }
}

/// An orientation of a sub-multigraph, stored as a map from host edge ids to
/// directed pairs.
#[derive(Debug, Clone, Default)]
pub struct SubOrientation {
    arcs: BTreeMap<usize, (usize, usize)>,
}

impl SubOrientation {
    pub fn arc_map(&self) -> &BTreeMap<usize, (usize, usize)> {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// All vertices touched by the oriented edges, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut set = BTreeSet::new();
        for &(a, b) in self.arcs.values() {
            set.insert(a);
            set.insert(b);
        }
        set.into_iter().collect()
    }

    /// The digraph induced on the touched vertices, along with the map from
    /// local indices back to host vertices.
    pub fn induced_digraph(&self) -> Result<(Digraph, Vec<usize>)> {
        let vmap = self.vertices();
        let local = |v: usize| vmap.binary_search(&v).unwrap();
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .values()
            .map(|&(a, b)| (local(a), local(b)))
            .collect();
        let d = Digraph::new(vmap.len(), arcs)?;
        Ok((d, vmap))
    }
}

/// The two distance bounds an accepted orientation must satisfy, in terms of
/// the tree order `p` and the extension parameter `k`:
/// between tree vertices, and between arbitrary vertices of the oriented part.
fn distance_bounds(p: usize, k: usize) -> (usize, usize) {
    let tree_pairs = if p.is_multiple_of(2) {
        (k + 1) * p / 2 - 1
    } else {
        (k + 1) * (p - 1) / 2
    };
    let all_pairs = if p.is_multiple_of(2) {
        (k + 1) * p / 2 + k - 2
    } else {
        ((k + 1) * p + k - 3) / 2
    };
    (tree_pairs, all_pairs)
}

const SEARCH_BUDGET: u64 = 1 << 24;

/// Orients the tree together with a subset of the attached paths so that the
/// result is strongly connected, every ordered pair of tree vertices is at
/// distance at most (k+1)/2 * p - 1 (p even) or (k+1)/2 * (p-1) (p odd), and
/// every ordered pair of oriented vertices is at distance at most
/// (k+1)/2 * p + k - 2 (p even) or (k+1)/2 * p + (k-3)/2 (p odd).
///
/// The search tries path subsets from largest to smallest and both directions
/// for every tree edge and path, returning the first orientation that passes
/// all checks. Exceeding the internal node budget reports [`Error::Budget`];
/// exhausting the space without success is a contract violation.
pub fn tree_extension_orientation(ext: &TreeExtension) -> Result<SubOrientation> {
    let p = ext.tree_vertices.len();
    let k = ext.k;
    let (bound_tree, bound_all) = distance_bounds(p, k);
    let q = ext.paths.len();
    let t = ext.tree_edges.len();

    if p == 1 && q == 0 {
        // A single vertex and nothing else: trivially strong, bounds hold.
        return Ok(SubOrientation::default());
    }

    // Path subsets, largest first; ties by ascending bitmask.
    let mut selections: Vec<u64> = (0..(1u64 << q)).collect();
    selections.sort_by_key(|s| (std::cmp::Reverse(s.count_ones()), *s));

    let mut nodes: u64 = 0;
    for sel in selections {
        let chosen: Vec<usize> = (0..q).filter(|&i| sel >> i & 1 == 1).collect();
        if !ext.union_is_bridgeless(&chosen) {
            continue;
        }
        let dims = t + chosen.len();
        // An orientation and its reverse pass the same checks, so the first
        // dimension can be pinned to one side.
        let states: u64 = 1u64 << dims;
        let mut assignment = 0u64;
        while assignment < states {
            if dims > 0 && assignment & 1 == 1 {
                assignment += 1;
                continue;
            }
            nodes += 1;
            if nodes > SEARCH_BUDGET {
                return Err(Error::Budget(format!(
                    "orientation search exceeded {SEARCH_BUDGET} attempts; \
                     the extension has too many paths"
                )));
            }
            if let Some(sub) = try_assignment(ext, &chosen, assignment, bound_tree, bound_all) {
                return Ok(sub);
            }
            assignment += 1;
        }
    }
    Err(Error::contract(
        "no orientation of the tree extension satisfies the distance bounds",
    ))
}

/// Builds the orientation described by `assignment` (low bits: tree edges as
/// stored / reversed; high bits: path senses) and accepts it if it is strong
/// and satisfies both distance bounds.
fn try_assignment(
    ext: &TreeExtension,
    chosen: &[usize],
    assignment: u64,
    bound_tree: usize,
    bound_all: usize,
) -> Option<SubOrientation> {
    let t = ext.tree_edges.len();
    let mut arcs: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (i, &e) in ext.tree_edges.iter().enumerate() {
        let (a, b) = ext.host.edge(e);
        let pair = if assignment >> i & 1 == 0 { (a, b) } else { (b, a) };
        arcs.insert(e, pair);
    }
    for (j, &pi) in chosen.iter().enumerate() {
        let path = &ext.paths[pi];
        let forward = assignment >> (t + j) & 1 == 0;
        for (step, &e) in path.edges.iter().enumerate() {
            let (u, v) = (path.vertices[step], path.vertices[step + 1]);
            let pair = if forward { (u, v) } else { (v, u) };
            match arcs.get(&e) {
                Some(&existing) if existing != pair => return None,
                _ => {
                    arcs.insert(e, pair);
                }
            }
        }
    }

    let sub = SubOrientation { arcs };
    let (d, vmap) = sub.induced_digraph().ok()?;
    if !d.is_strongly_connected() {
        return None;
    }
    // Every tree vertex must belong to the oriented part.
    let mut tree_local = Vec::with_capacity(ext.tree_vertices.len());
    for &v in &ext.tree_vertices {
        match vmap.binary_search(&v) {
            Ok(i) => tree_local.push(i),
            Err(_) => return None,
        }
    }
    let on_tree = |local: usize| tree_local.binary_search(&local).is_ok();
    for u in 0..d.vertex_count() {
        let dist = d.bfs_distances(u).ok()?;
        for (w, &dw) in dist.iter().enumerate() {
            let duw = dw.finite()?;
            if duw > bound_all {
                return None;
            }
            if on_tree(u) && on_tree(w) && duw > bound_tree {
                return None;
            }
        }
    }
    Some(sub)
}
