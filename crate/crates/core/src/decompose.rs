//! Block structure of a connected multigraph: blocks (maximal 2-connected
//! edge classes, plus single-edge bridge blocks and the degenerate one-vertex
//! graph), cut vertices, bridges, branches, and the block graph whose
//! vertices are the blocks of G with blocks adjacent iff they share a cut
//! vertex.

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, SubGraph};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    block_of_edge: Vec<usize>,
    blocks_of_vertex: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    is_cut: Vec<bool>,
    block_cuts: Vec<Vec<usize>>,
    bridges: Vec<usize>,
    end_blocks: Vec<usize>,
}

impl BlockDecomposition {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of blocks, usually called p.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Number of cut vertices, usually called s.
    pub fn cut_count(&self) -> usize {
        self.cut_vertices.len()
    }

    /// Vertex lists, each sorted ascending, in DFS completion order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of_edge(&self, edge: usize) -> usize {
        self.block_of_edge[edge]
    }

    pub fn blocks_of_vertex(&self, v: usize) -> &[usize] {
        &self.blocks_of_vertex[v]
    }

    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.is_cut[v]
    }

    /// Cut vertices lying in block `b`, sorted ascending.
    pub fn cut_vertices_of_block(&self, b: usize) -> &[usize] {
        &self.block_cuts[b]
    }

    /// Bridge edge ids, ascending.
    pub fn bridges(&self) -> &[usize] {
        &self.bridges
    }

    /// Indices of blocks containing exactly one cut vertex.
    pub fn end_blocks(&self) -> &[usize] {
        &self.end_blocks
    }
}

/// Computes the block decomposition of a connected multigraph.
pub fn decompose(g: &MultiGraph) -> Result<BlockDecomposition> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::invalid("graph must have at least one vertex"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let m = g.edge_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut edge_seen = vec![false; m];
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut block_edges: Vec<Vec<usize>> = Vec::new();
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;

    if n == 1 {
        // Single vertex: one edgeless block by convention.
        return Ok(assemble(g, vec![vec![0]], vec![], is_cut));
    }

    // (vertex, cursor into adjacency, entry edge id)
    let mut stack: Vec<(usize, usize, Option<usize>)> = vec![(0, 0, None)];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    let mut root_children = 0usize;

    while let Some(&mut (u, ref mut cursor, _)) = stack.last_mut() {
        if let Some(&(w, e)) = g.adjacent(u).get(*cursor) {
            *cursor += 1;
            if edge_seen[e] {
                continue;
            }
            edge_seen[e] = true;
            edge_stack.push(e);
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, 0, Some(e)));
            } else {
                // Back edge to an ancestor (parallel copies of the tree edge
                // land here too, which is what keeps them off the bridge list).
                low[u] = low[u].min(disc[w]);
            }
        } else {
            let (u, _, entry) = stack.pop().unwrap();
            if let Some(&mut (parent, _, _)) = stack.last_mut() {
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    let e = entry.unwrap();
                    let mut block = Vec::new();
                    loop {
                        let top = edge_stack.pop().expect("entry edge on stack");
                        block.push(top);
                        if top == e {
                            break;
                        }
                    }
                    block_edges.push(block);
                    if parent == 0 {
                        root_children += 1;
                    } else {
                        is_cut[parent] = true;
                    }
                }
            }
        }
    }
    if root_children >= 2 {
        is_cut[0] = true;
    }
    debug_assert!(edge_stack.is_empty());
    debug_assert_eq!(block_edges.iter().map(Vec::len).sum::<usize>(), m);

    // Emitted in closing order; reverse to get the order blocks are first
    // entered along the DFS.
    block_edges.reverse();

    let mut blocks = Vec::with_capacity(block_edges.len());
    for edges in &block_edges {
        let mut vs: Vec<usize> = edges
            .iter()
            .flat_map(|&e| {
                let (a, b) = g.edge(e);
                [a, b]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        blocks.push(vs);
    }
    Ok(assemble(g, blocks, block_edges, is_cut))
}

fn assemble(
    g: &MultiGraph,
    blocks: Vec<Vec<usize>>,
    block_edges: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut block_of_edge = vec![usize::MAX; g.edge_count()];
    for (b, edges) in block_edges.iter().enumerate() {
        for &e in edges {
            block_of_edge[e] = b;
        }
    }
    let mut blocks_of_vertex = vec![Vec::new(); n];
    for (b, vs) in blocks.iter().enumerate() {
        for &v in vs {
            blocks_of_vertex[v].push(b);
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let block_cuts: Vec<Vec<usize>> = blocks
        .iter()
        .map(|vs| vs.iter().copied().filter(|&v| is_cut[v]).collect())
        .collect();
    let mut bridges: Vec<usize> = block_edges
        .iter()
        .filter(|es| es.len() == 1)
        .map(|es| es[0])
        .collect();
    bridges.sort_unstable();
    let end_blocks: Vec<usize> = (0..blocks.len())
        .filter(|&b| block_cuts[b].len() == 1)
        .collect();
    BlockDecomposition {
        n,
        blocks,
        block_of_edge,
        blocks_of_vertex,
        cut_vertices,
        is_cut,
        block_cuts,
        bridges,
        end_blocks,
    }
}

/// The components of g - v, each together with v, as subgraphs of g.
/// Ordered by their smallest vertex.
pub fn branches_at(g: &MultiGraph, v: usize) -> Result<Vec<SubGraph>> {
    let n = g.vertex_count();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if start == v || comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.adjacent(u) {
                if w != v && comp[w] == usize::MAX {
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    if count < 2 {
        return Err(Error::invalid(format!("vertex {v} is not a cut vertex")));
    }
    let mut branches = Vec::with_capacity(count);
    for c in 0..count {
        let mut vs: Vec<usize> = (0..n).filter(|&u| u == v || comp[u] == c).collect();
        vs.sort_unstable();
        branches.push(g.induced(&vs)?);
    }
    Ok(branches)
}

/// B(G): one vertex per block, an edge whenever two blocks share a cut vertex.
pub fn block_graph(dec: &BlockDecomposition) -> MultiGraph {
    let mut edges = Vec::new();
    for &v in dec.cut_vertices() {
        let bs = dec.blocks_of_vertex(v);
        for i in 0..bs.len() {
            for j in i + 1..bs.len() {
                edges.push((bs[i], bs[j]));
            }
        }
    }
    edges.sort_unstable();
    MultiGraph::new(dec.block_count(), edges).expect("block indices in range")
}

/// `Ok(None)` iff no cut vertex lies in more than two blocks; B(G) is then
/// verified to be a tree. Otherwise returns a violating cut vertex.
pub fn block_graph_is_tree(dec: &BlockDecomposition) -> Result<Option<usize>> {
    for &v in dec.cut_vertices() {
        if dec.blocks_of_vertex(v).len() > 2 {
            return Ok(Some(v));
        }
    }
    let bg = block_graph(dec);
    let is_tree = bg.is_connected() && bg.edge_count() + 1 == bg.vertex_count();
    if !is_tree {
        return Err(Error::contract(
            "block graph is not a tree although no cut vertex lies in more than two blocks",
        ));
    }
    Ok(None)
}

/// Leaf count of a tree without two adjacent degree-2 vertices, together with
/// the guaranteed lower bound ceil((p + 5) / 4).
pub fn leaf_lower_bound(t: &MultiGraph) -> Result<(usize, usize)> {
    let n = t.vertex_count();
    if n < 2 {
        return Err(Error::invalid("tree must have at least 2 vertices"));
    }
    if !t.is_connected() || t.edge_count() != n - 1 {
        return Err(Error::invalid("input is not a tree"));
    }
    for &(u, v) in t.edges() {
        if t.degree(u) == 2 && t.degree(v) == 2 {
            return Err(Error::invalid(format!(
                "adjacent degree-2 vertices {u} and {v}; the leaf bound is not claimed"
            )));
        }
    }
    let leaves = (0..n).filter(|&v| t.degree(v) == 1).count();
    let bound = (n + 5).div_ceil(4);
    if leaves < bound {
        return Err(Error::contract(format!(
            "tree on {n} vertices has {leaves} leaves, below the guaranteed {bound}"
        )));
    }
    Ok((leaves, bound))
}

/// Inequalities every bridgeless connected graph satisfies, with slack.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub n: usize,
    pub p: usize,
    pub s: usize,
    pub min_block_size: usize,
    /// n - (2p + 1)
    pub order_vs_blocks_slack: usize,
    /// n - (2s + 3)
    pub order_vs_cuts_slack: usize,
    /// (p - 1) - s
    pub blocks_vs_cuts_slack: usize,
}

pub fn structural_inequalities(g: &MultiGraph, dec: &BlockDecomposition) -> Result<StructuralReport> {
    if let Some(&e) = dec.bridges().first() {
        let (u, v) = g.edge(e);
        return Err(Error::Bridge { u, v });
    }
    let n = dec.order();
    if n < 3 {
        return Err(Error::invalid("graph must have at least 3 vertices"));
    }
    let p = dec.block_count();
    let s = dec.cut_count();
    let min_block_size = dec.blocks().iter().map(Vec::len).min().unwrap();
    let check = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::contract(format!(
                "bridgeless graph violates {what} (n={n}, p={p}, s={s})"
            )))
        }
    };
    check(min_block_size >= 3, "minimum block size >= 3")?;
    check(n > 2 * p, "n >= 2p + 1")?;
    check(n >= 2 * s + 3, "n >= 2s + 3")?;
    check(s < p, "s <= p - 1")?;
    Ok(StructuralReport {
        n,
        p,
        s,
        min_block_size,
        order_vs_blocks_slack: n - (2 * p + 1),
        order_vs_cuts_slack: n - (2 * s + 3),
        blocks_vs_cuts_slack: (p - 1) - s,
    })
}

/// True iff every block induces a complete subgraph.
pub fn is_block_graph(g: &MultiGraph) -> Result<bool> {
    let dec = decompose(g)?;
    for block in dec.blocks() {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                if !g.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// JSON-facing summary of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecomposeReport {
    pub blocks: Vec<Vec<usize>>,
    pub bridges: Vec<(usize, usize)>,
    pub cut_vertices: Vec<usize>,
    pub is_block_graph: bool,
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub s: usize,
}

pub fn decompose_report(g: &MultiGraph) -> Result<DecomposeReport> {
    let dec = decompose(g)?;
    let bridges = dec
        .bridges()
        .iter()
        .map(|&e| {
            let (u, v) = g.edge(e);
            (u.min(v), u.max(v))
        })
        .collect();
    Ok(DecomposeReport {
        blocks: dec.blocks().to_vec(),
        bridges,
        cut_vertices: dec.cut_vertices().to_vec(),
        is_block_graph: is_block_graph(g)?,
        m: g.edge_count(),
        n: g.vertex_count(),
        p: dec.block_count(),
        s: dec.cut_count(),
    })
}
