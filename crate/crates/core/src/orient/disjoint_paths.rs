//! Two edge-disjoint (and, when possible, internally vertex-disjoint) paths
//! between a pair of vertices, found via minimum-cost flow.

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// A pair of edge-disjoint paths from `x` to `y`, each given as its vertex
/// sequence plus the edge ids used. `first` is never longer than `second`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPair {
    pub first: Vec<usize>,
    pub first_edges: Vec<usize>,
    pub second: Vec<usize>,
    pub second_edges: Vec<usize>,
    /// True when the two paths share no vertex besides the endpoints.
    pub vertex_disjoint: bool,
}

impl PathPair {
    pub fn first_len(&self) -> usize {
        self.first_edges.len()
    }

    pub fn second_len(&self) -> usize {
        self.second_edges.len()
    }
}

struct FlowArc {
    to: usize,
    cap: i64,
    cost: i64,
    /// Edge id in the original multigraph, if this arc crosses an edge.
    edge: Option<usize>,
}

struct FlowNet {
    adj: Vec<Vec<usize>>,
    arcs: Vec<FlowArc>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            arcs: Vec::new(),
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: i64, cost: i64, edge: Option<usize>) {
        let id = self.arcs.len();
        self.arcs.push(FlowArc { to, cap, cost, edge });
        self.adj[from].push(id);
        self.arcs.push(FlowArc {
            to: from,
            cap: 0,
            cost: -cost,
            edge,
        });
        self.adj[to].push(id + 1);
    }

    /// Sends one unit of flow along a shortest (by cost) augmenting path.
    /// Residual costs can be negative after earlier augmentations, so this
    /// uses Bellman-Ford-style relaxation with a queue. Returns false when no
    /// augmenting path exists.
    fn augment_unit(&mut self, s: usize, t: usize) -> bool {
        let n = self.adj.len();
        let mut dist = vec![i64::MAX; n];
        let mut from_arc = vec![usize::MAX; n];
        let mut in_queue = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        dist[s] = 0;
        in_queue[s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            in_queue[u] = false;
            for &a in &self.adj[u] {
                let arc = &self.arcs[a];
                if arc.cap <= 0 || dist[u] == i64::MAX {
                    continue;
                }
                let nd = dist[u] + arc.cost;
                if nd < dist[arc.to] {
                    dist[arc.to] = nd;
                    from_arc[arc.to] = a;
                    if !in_queue[arc.to] {
                        in_queue[arc.to] = true;
                        queue.push_back(arc.to);
                    }
                }
            }
        }
        if dist[t] == i64::MAX {
            return false;
        }
        let mut v = t;
        while v != s {
            let a = from_arc[v];
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            v = self.arcs[a ^ 1].to;
        }
        true
    }
}

/// A path as its vertex sequence plus the ids of the edges it walks.
type RawPath = (Vec<usize>, Vec<usize>);

/// Runs a 2-unit min-cost flow from `x` to `y` where every original edge has
/// capacity 1 in each direction and every internal vertex has capacity
/// `vertex_cap`. Returns the two extracted paths on success.
fn two_paths_with_vertex_cap(
    g: &MultiGraph,
    x: usize,
    y: usize,
    vertex_cap: i64,
) -> Option<(RawPath, RawPath)> {
    let n = g.vertex_count();
    // Node 2v = "in" copy, 2v+1 = "out" copy of vertex v.
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let cap = if v == x || v == y { 2 } else { vertex_cap };
        net.add(2 * v, 2 * v + 1, cap, 0, None);
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        net.add(2 * a + 1, 2 * b, 1, 1, Some(e));
        net.add(2 * b + 1, 2 * a, 1, 1, Some(e));
    }
    let s = 2 * x + 1;
    let t = 2 * y;
    if !net.augment_unit(s, t) || !net.augment_unit(s, t) {
        return None;
    }

    // Record how much flow crosses each arc, then peel off two paths. Since
    // every loop in the network has positive cost, the optimal flow is loop
    // free and each walk below is a simple path.
    let mut flow: Vec<i64> = net
        .arcs
        .iter()
        .enumerate()
        .map(|(i, a)| if i % 2 == 0 { 0 } else { a.cap })
        .collect();
    let mut extract = || -> (Vec<usize>, Vec<usize>) {
        let mut vertices = vec![x];
        let mut edge_ids = Vec::new();
        let mut node = s;
        while node != t {
            // Among positive-flow forward arcs leaving `node`, follow the one
            // whose head vertex is smallest, for a deterministic decomposition.
            let mut chosen: Option<usize> = None;
            for &a in &net.adj[node] {
                if a % 2 == 0 && flow[a + 1] > 0 {
                    let better = match chosen {
                        None => true,
                        Some(c) => net.arcs[a].to / 2 < net.arcs[c].to / 2,
                    };
                    if better {
                        chosen = Some(a);
                    }
                }
            }
            let a = chosen.expect("flow conservation violated during extraction");
            flow[a + 1] -= 1;
            let arc = &net.arcs[a];
            if let Some(e) = arc.edge {
                edge_ids.push(e);
                vertices.push(arc.to / 2);
            }
            node = arc.to;
        }
        (vertices, edge_ids)
    };
    let first = extract();
    let second = extract();
    Some((first, second))
}

/// Finds two edge-disjoint paths from `x` to `y` of minimum total length,
/// internally vertex-disjoint whenever the graph admits such a pair. The
/// shorter path is returned first.
///
/// Postconditions checked at runtime: the first path has at most `n - 2`
/// edges (for `n >= 3`) and the second at most `n - 1`. Their violation, which
/// would contradict the paths being simple, is reported as a contract
/// violation. If `x` and `y` are not joined by two edge-disjoint paths the
/// input is rejected.
pub fn two_disjoint_paths(g: &MultiGraph, x: usize, y: usize) -> Result<PathPair> {
    let n = g.vertex_count();
    if x >= n {
        return Err(Error::VertexOutOfRange { vertex: x, order: n });
    }
    if y >= n {
        return Err(Error::VertexOutOfRange { vertex: y, order: n });
    }
    if x == y {
        return Err(Error::invalid("path endpoints must be distinct"));
    }

    let (paths, vertex_disjoint) = match two_paths_with_vertex_cap(g, x, y, 1) {
        Some(p) => (p, true),
        None => match two_paths_with_vertex_cap(g, x, y, 2) {
            Some(p) => (p, false),
            None => {
                return Err(Error::invalid(format!(
                    "no two edge-disjoint paths join {x} and {y}"
                )))
            }
        },
    };
    let ((v1, e1), (v2, e2)) = paths;
    let (first, first_edges, second, second_edges) = if (e1.len(), &v1) <= (e2.len(), &v2) {
        (v1, e1, v2, e2)
    } else {
        (v2, e2, v1, e1)
    };

    if n >= 3 && first_edges.len() > n - 2 {
        return Err(Error::contract(format!(
            "shorter path uses {} edges, more than n - 2 = {}",
            first_edges.len(),
            n - 2
        )));
    }
    if second_edges.len() > n - 1 {
        return Err(Error::contract(format!(
            "longer path uses {} edges, more than n - 1 = {}",
            second_edges.len(),
            n - 1
        )));
    }
    debug_assert!(first.first() == Some(&x) && first.last() == Some(&y));
    debug_assert!(second.first() == Some(&x) && second.last() == Some(&y));
    debug_assert!(first_edges.iter().all(|e| !second_edges.contains(e)));

    Ok(PathPair {
        first,
        first_edges,
        second,
        second_edges,
        vertex_disjoint,
    })
}
