use crate::error::{Error, Result};
use std::fmt;

/// Hop count that may be unreachable. `Finite(_) < Infinite` by variant order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    /// Saturating addition: anything plus unreachable stays unreachable.
    pub fn plus(self, other: Distance) -> Distance {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Undirected multigraph on vertices 0..n. Parallel edges are allowed and
/// keep distinct identities (their index in the edge list); loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // per vertex: (neighbor, edge id)
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
        }
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(MultiGraph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// Incident (neighbor, edge id) pairs in edge-insertion order.
    pub fn adjacent(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].iter().any(|&(w, _)| w == v)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Unweighted distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Distance>> {
        if source >= self.n {
            return Err(Error::VertexOutOfRange { vertex: source, order: self.n });
        }
        let mut dist = vec![Distance::Infinite; self.n];
        dist[source] = Distance::Finite(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].finite().unwrap();
            for &(w, _) in &self.adj[u] {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Some bridge of the graph, if one exists. Parallel edges are honored:
    /// only a block consisting of a single edge is a bridge.
    pub fn find_bridge(&self) -> Option<(usize, usize)> {
        // Iterative lowpoint DFS over every component.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut stack: Vec<(usize, usize, Option<usize>)> = Vec::new(); // (vertex, cursor, entry edge)
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, 0, None));
            while let Some(&mut (u, ref mut cursor, entry)) = stack.last_mut() {
                if let Some(&(w, e)) = self.adj[u].get(*cursor) {
                    *cursor += 1;
                    if Some(e) == entry {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, 0, Some(e)));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (parent, _, _)) = stack.last_mut() {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] > disc[parent] {
                            return Some((parent, u));
                        }
                    }
                }
            }
        }
        None
    }

    /// Subgraph induced by a sorted, duplicate-free vertex list.
    pub fn induced(&self, vertices: &[usize]) -> Result<SubGraph> {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
            }
            if i > 0 && vertices[i - 1] >= v {
                return Err(Error::invalid("vertex list must be strictly increasing"));
            }
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                edges.push((local[u], local[v]));
                edge_map.push(id);
            }
        }
        Ok(SubGraph {
            graph: MultiGraph::new(vertices.len(), edges)?,
            vertex_map: vertices.to_vec(),
            edge_map,
        })
    }
}

/// A subgraph together with maps from its local vertex/edge indices back to
/// the graph it was cut from.
#[derive(Debug, Clone)]
pub struct SubGraph {
    pub graph: MultiGraph,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

impl SubGraph {
    pub fn to_local(&self, global_vertex: usize) -> Option<usize> {
        self.vertex_map.binary_search(&global_vertex).ok()
    }
}

/// Directed multigraph. When produced by orienting a MultiGraph, arc i is
/// edge i with a direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &arcs {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        Ok(Digraph { n, arcs, out_adj, in_adj })
    }

    /// Orients edge i of `g` as stored when `towards_second[i]`, flipped otherwise.
    pub fn from_orientation(g: &MultiGraph, towards_second: &[bool]) -> Result<Self> {
        if towards_second.len() != g.edge_count() {
            return Err(Error::invalid("orientation length does not match edge count"));
        }
        let arcs = g
            .edges()
            .iter()
            .zip(towards_second)
            .map(|(&(u, v), &fwd)| if fwd { (u, v) } else { (v, u) })
            .collect();
        Digraph::new(g.vertex_count(), arcs)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn reversed(&self) -> Digraph {
        let arcs = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        Digraph::new(self.n, arcs).expect("reversal preserves validity")
    }

    fn bfs(&self, source: usize, forward: bool) -> Vec<Distance> {
        let adj = if forward { &self.out_adj } else { &self.in_adj };
        let mut dist = vec![Distance::Infinite; self.n];
        dist[source] = Distance::Finite(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].finite().unwrap();
            for &w in &adj[u] {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Directed distances from `source`.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Distance>> {
        if source >= self.n {
            return Err(Error::VertexOutOfRange { vertex: source, order: self.n });
        }
        Ok(self.bfs(source, true))
    }

    /// Distances from every vertex *to* `target`.
    pub fn bfs_distances_to(&self, target: usize) -> Result<Vec<Distance>> {
        if target >= self.n {
            return Err(Error::VertexOutOfRange { vertex: target, order: self.n });
        }
        Ok(self.bfs(target, false))
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let fwd = self.bfs(0, true);
        if fwd.iter().any(|d| !d.is_finite()) {
            return false;
        }
        let bwd = self.bfs(0, false);
        bwd.iter().all(|d| d.is_finite())
    }

    /// Max distance over ordered pairs; Infinite iff not strongly connected;
    /// 0 when there are fewer than two vertices.
    pub fn diameter(&self) -> Distance {
        self.diameter_with_witness().0
    }

    /// Diameter plus the lexicographically least ordered pair attaining it.
    pub fn diameter_with_witness(&self) -> (Distance, Option<(usize, usize)>) {
        if self.n <= 1 {
            return (Distance::Finite(0), None);
        }
        let mut best = Distance::Finite(0);
        let mut witness = None;
        for u in 0..self.n {
            let row = self.bfs(u, true);
            for (v, &d) in row.iter().enumerate() {
                if u == v {
                    continue;
                }
                if d == Distance::Infinite {
                    return (Distance::Infinite, Some((u, v)));
                }
                if d > best {
                    best = d;
                    witness = Some((u, v));
                }
            }
        }
        (best, witness)
    }

    /// (out, in, max) eccentricities of `v`. Requires strong connectivity.
    pub fn eccentricities(&self, v: usize) -> Result<(usize, usize, usize)> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        if !self.is_strongly_connected() {
            return Err(Error::NotStronglyConnected);
        }
        let out = self
            .bfs(v, true)
            .iter()
            .map(|d| d.finite().unwrap())
            .max()
            .unwrap_or(0);
        let inn = self
            .bfs(v, false)
            .iter()
            .map(|d| d.finite().unwrap())
            .max()
            .unwrap_or(0);
        Ok((out, inn, out.max(inn)))
    }
}

/// All-pairs distance table, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn from_digraph(d: &Digraph) -> Self {
        let n = d.vertex_count();
        let mut entries = Vec::with_capacity(n * n);
        for u in 0..n {
            entries.extend(d.bfs(u, true));
        }
        DistanceMatrix { n, entries }
    }

    pub fn from_multigraph(g: &MultiGraph) -> Self {
        let n = g.vertex_count();
        let mut entries = Vec::with_capacity(n * n);
        for u in 0..n {
            entries.extend(g.bfs_distances(u).expect("source in range"));
        }
        DistanceMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> MultiGraph {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::new(n, edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(MultiGraph::new(3, vec![(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            MultiGraph::new(2, vec![(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, order: 2 })
        );
        assert_eq!(Digraph::new(3, vec![(2, 2)]), Err(Error::LoopEdge(2)));
    }

    #[test]
    fn parallel_edges_keep_identity() {
        let g = MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(0), 2);
        assert!(g.find_bridge().is_none());
    }

    #[test]
    fn single_edge_is_a_bridge() {
        let g = MultiGraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(g.find_bridge(), Some((0, 1)));
    }

    #[test]
    fn cycle_has_no_bridge_but_path_does() {
        assert!(cycle(5).find_bridge().is_none());
        let path = MultiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(path.find_bridge().is_some());
    }

    #[test]
    fn undirected_bfs_on_cycle() {
        let g = cycle(6);
        let d = g.bfs_distances(0).unwrap();
        let got: Vec<usize> = d.iter().map(|x| x.finite().unwrap()).collect();
        assert_eq!(got, vec![0, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn directed_cycle_metrics() {
        let n = 5;
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let d = Digraph::new(n, arcs).unwrap();
        assert!(d.is_strongly_connected());
        assert_eq!(d.diameter(), Distance::Finite(n - 1));
        let (out, inn, ecc) = d.eccentricities(0).unwrap();
        assert_eq!((out, inn, ecc), (n - 1, n - 1, n - 1));
    }

    #[test]
    fn diameter_infinite_iff_not_strong() {
        let d = Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(!d.is_strongly_connected());
        assert_eq!(d.diameter(), Distance::Infinite);
        assert_eq!(d.eccentricities(0), Err(Error::NotStronglyConnected));
    }

    #[test]
    fn diameter_of_tiny_digraphs() {
        assert_eq!(Digraph::new(0, vec![]).unwrap().diameter(), Distance::Finite(0));
        assert_eq!(Digraph::new(1, vec![]).unwrap().diameter(), Distance::Finite(0));
    }

    #[test]
    fn diameter_witness_is_least_pair() {
        let n = 4;
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let d = Digraph::new(n, arcs).unwrap();
        let (dia, wit) = d.diameter_with_witness();
        assert_eq!(dia, Distance::Finite(3));
        assert_eq!(wit, Some((0, 3)));
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let g = MultiGraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        let sub = g.induced(&[1, 2, 3]).unwrap();
        assert_eq!(sub.graph.vertex_count(), 3);
        assert_eq!(sub.graph.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(sub.edge_map, vec![1, 2, 5]);
        assert_eq!(sub.to_local(3), Some(2));
        assert_eq!(sub.to_local(4), None);
    }

    #[test]
    fn distance_ordering_and_arithmetic() {
        assert!(Distance::Finite(100) < Distance::Infinite);
        assert_eq!(
            Distance::Finite(2).plus(Distance::Finite(3)),
            Distance::Finite(5)
        );
        assert_eq!(Distance::Finite(2).plus(Distance::Infinite), Distance::Infinite);
        assert_eq!(Distance::Infinite.to_string(), "inf");
    }

    #[test]
    fn orientation_respects_flags() {
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let d = Digraph::from_orientation(&g, &[true, true, true]).unwrap();
        assert_eq!(d.arcs(), &[(0, 1), (1, 2), (2, 0)]);
        let r = Digraph::from_orientation(&g, &[false, false, false]).unwrap();
        assert_eq!(r.arcs(), &[(1, 0), (2, 1), (0, 2)]);
        assert!(Digraph::from_orientation(&g, &[true]).is_err());
    }

    #[test]
    fn reversal_swaps_eccentricities() {
        let d = Digraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let r = d.reversed();
        assert_eq!(d.diameter(), r.diameter());
        let (out, inn, _) = d.eccentricities(1).unwrap();
        let (rout, rinn, _) = r.eccentricities(1).unwrap();
        assert_eq!((out, inn), (rinn, rout));
    }

    #[test]
    fn distance_matrix_agrees_with_bfs() {
        let d = Digraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let m = DistanceMatrix::from_digraph(&d);
        assert_eq!(m.get(0, 3), Distance::Finite(3));
        assert_eq!(m.get(3, 0), Distance::Finite(1));
        assert_eq!(m.row(1)[3], Distance::Finite(2));
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let mg = DistanceMatrix::from_multigraph(&g);
        assert_eq!(mg.get(0, 2), Distance::Finite(2));
        assert_eq!(mg.get(2, 0), Distance::Finite(2));
    }
}
