//! Independent oracle used by the integration tests. Everything here works
//! on raw vertex counts and edge/arc lists and is implemented from scratch
//! (union-find connectivity, naive BFS, full 2^m orientation enumeration),
//! so that agreement with the library is meaningful evidence.

#![allow(dead_code)]

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Number of connected components of the undirected graph, counting only
/// vertices for which `alive` is true and edges with both ends alive.
pub fn components_among(n: usize, edges: &[(usize, usize)], alive: &[bool]) -> usize {
    let mut uf = UnionFind::new(n);
    for &(u, v) in edges {
        if alive[u] && alive[v] {
            uf.union(u, v);
        }
    }
    (0..n)
        .filter(|&v| alive[v])
        .filter(|&v| uf.find(v) == v)
        .count()
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    n == 0 || components_among(n, edges, &vec![true; n]) == 1
}

/// Edge `skip` removed; is the graph still connected?
pub fn is_bridge(n: usize, edges: &[(usize, usize)], skip: usize) -> bool {
    let mut uf = UnionFind::new(n);
    for (e, &(u, v)) in edges.iter().enumerate() {
        if e != skip {
            uf.union(u, v);
        }
    }
    (0..n).filter(|&v| uf.find(v) == v).count() > 1
}

pub fn has_bridge(n: usize, edges: &[(usize, usize)]) -> bool {
    (0..edges.len()).any(|e| is_bridge(n, edges, e))
}

/// Cut vertices of a connected graph: removing the vertex splits the rest.
pub fn cut_vertices(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    (0..n)
        .filter(|&v| {
            let mut alive = vec![true; n];
            alive[v] = false;
            components_among(n, edges, &alive) > 1
        })
        .collect()
}

/// Number of blocks of a connected graph, via the block-cut-tree identity:
/// a cut vertex v lies in as many blocks as G − v has components, and the
/// blocks containing at least one cut vertex form a tree with them.
pub fn block_count(n: usize, edges: &[(usize, usize)]) -> usize {
    assert!(is_connected(n, edges));
    let mut p = 1;
    for v in 0..n {
        let mut alive = vec![true; n];
        alive[v] = false;
        let c = components_among(n, edges, &alive);
        if c > 1 {
            p += c - 1;
        }
    }
    p
}

/// Directed single-source distances by naive BFS over an arc list.
pub fn directed_distances(n: usize, arcs: &[(usize, usize)], src: usize) -> Vec<Option<usize>> {
    let mut out = vec![Vec::new(); n];
    for &(u, v) in arcs {
        out[u].push(v);
    }
    let mut dist = vec![None; n];
    dist[src] = Some(0);
    let mut frontier = vec![src];
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in &out[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    dist
}

pub fn is_strong(n: usize, arcs: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let forward = directed_distances(n, arcs, 0);
    if forward.iter().any(Option::is_none) {
        return false;
    }
    let reversed: Vec<(usize, usize)> = arcs.iter().map(|&(u, v)| (v, u)).collect();
    directed_distances(n, &reversed, 0).iter().all(Option::is_some)
}

/// Diameter of a digraph, or None when it is not strongly connected.
pub fn diameter(n: usize, arcs: &[(usize, usize)]) -> Option<usize> {
    let mut best = 0;
    for src in 0..n {
        let dist = directed_distances(n, arcs, src);
        for d in dist {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// Arcs of the orientation of `edges` encoded by `mask` (bit e set: edge e
/// reversed).
pub fn oriented_arcs(edges: &[(usize, usize)], mask: u64) -> Vec<(usize, usize)> {
    edges
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| if (mask >> e) & 1 == 0 { (u, v) } else { (v, u) })
        .collect()
}

/// Minimum diameter over all 2^m orientations, by full enumeration with no
/// symmetry reduction or pruning. None when no orientation is strong.
pub fn oriented_diameter(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let m = edges.len();
    assert!(m <= 20, "oracle enumeration is for small graphs");
    let mut best: Option<usize> = None;
    for mask in 0..(1u64 << m) {
        let arcs = oriented_arcs(edges, mask);
        if !is_strong(n, &arcs) {
            continue;
        }
        let d = diameter(n, &arcs).expect("strong digraph has a diameter");
        best = Some(best.map_or(d, |b| b.min(d)));
    }
    best
}

/// Every strong orientation of `edges`, as arc lists.
pub fn all_strong_orientations(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let m = edges.len();
    assert!(m <= 20, "oracle enumeration is for small graphs");
    (0..(1u64 << m))
        .map(|mask| oriented_arcs(edges, mask))
        .filter(|arcs| is_strong(n, arcs))
        .collect()
}
