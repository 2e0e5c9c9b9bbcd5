//! Graph families: the extremal constructions showing the diameter bounds
//! are tight, random corpora for testing, and the closed-form bound values.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Digraph, MultiGraph};
use crate::rng::SplitMix64;

/// Which generator a [`FamilySpec`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    GnpExtremal,
    BlockExtremal,
    RandomBridgeless,
    RandomBlockGraph,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::GnpExtremal => "gnp",
            Family::BlockExtremal => "block",
            Family::RandomBridgeless => "random-bridgeless",
            Family::RandomBlockGraph => "random-block-graph",
        }
    }
}

/// A fully specified generation request.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub p: Option<usize>,
    pub seed: u64,
}

impl FamilySpec {
    fn p_required(&self) -> Result<usize> {
        self.p
            .ok_or_else(|| Error::invalid(format!("family {} requires p", self.family.as_str())))
    }

    /// Generate the graph and, where one is defined, its canonical
    /// orientation.
    pub fn generate(&self) -> Result<(MultiGraph, Option<Digraph>)> {
        match self.family {
            Family::GnpExtremal => {
                let (g, d) = gen_gnp_extremal(self.n, self.p_required()?)?;
                Ok((g, Some(d)))
            }
            Family::BlockExtremal => Ok((gen_block_extremal(self.n)?, None)),
            Family::RandomBridgeless => Ok((
                gen_random_bridgeless(self.n, self.p_required()?, self.seed)?,
                None,
            )),
            Family::RandomBlockGraph => Ok((gen_random_block_graph(self.n, self.seed)?, None)),
        }
    }
}

/// The three closed-form diameter bounds for a graph with `n` vertices,
/// `p` blocks and `s` cut vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundSet {
    pub n: usize,
    pub p: usize,
    pub s: usize,
    /// n − ⌊p/2⌋.
    pub theorem1_bound: usize,
    /// n − ⌊(s+1)/2⌋.
    pub corollary_bound: usize,
    /// ⌊3n/4⌋ for even n, ⌊3(n+1)/4⌋ for odd n (block graphs only).
    pub blockgraph_bound: usize,
}

/// Evaluate the closed-form bounds. `s` may not exceed `p − 1`.
pub fn bounds(n: usize, p: usize, s: usize) -> Result<BoundSet> {
    if n == 0 || p == 0 {
        return Err(Error::invalid("n and p must be at least 1"));
    }
    if s + 1 > p {
        return Err(Error::invalid(
            "for p blocks there are at most p-1 cut vertices",
        ));
    }
    let blockgraph_bound = if n.is_multiple_of(2) {
        3 * n / 4
    } else {
        3 * (n + 1) / 4
    };
    Ok(BoundSet {
        n,
        p,
        s,
        theorem1_bound: n - p / 2,
        corollary_bound: n - s.div_ceil(2),
        blockgraph_bound,
    })
}

/// The extremal family with `p` blocks on `n` vertices: a chain of `p − 1`
/// triangles sharing spine vertices a_0..a_{p−1}, closed off by a cycle of
/// length n − 2p + 2 through a_{p−1}. Its oriented diameter is exactly
/// n − ⌊p/2⌋, which shows the block-count bound is tight.
///
/// Vertex labels are fixed: spine a_i = i for i < p, triangle tips
/// b_i = p + i for i < p − 1, then the remaining cycle vertices
/// 2p−1 .. n−1 in cycle order.
///
/// The returned orientation keeps every edge on its stored endpoints:
/// triangles are directed 3-cycles of alternating sense along the spine
/// (a_0→a_1, a_1→b_0, b_0→a_0; then reversed on the next triangle), and the
/// terminal cycle is one directed cycle leaving a_{p−1}.
pub fn gen_gnp_extremal(n: usize, p: usize) -> Result<(MultiGraph, Digraph)> {
    if p < 2 {
        return Err(Error::invalid("the extremal family needs p >= 2 blocks"));
    }
    if n < 2 * p + 1 {
        return Err(Error::invalid(format!(
            "the extremal family needs n >= 2p+1 vertices, got n={n}, p={p}"
        )));
    }
    let a = |i: usize| i;
    let b = |i: usize| p + i;
    let mut edges = Vec::with_capacity(n + p - 1);
    for i in 0..p - 1 {
        if i % 2 == 0 {
            edges.push((a(i), a(i + 1)));
            edges.push((a(i + 1), b(i)));
            edges.push((b(i), a(i)));
        } else {
            edges.push((a(i + 1), a(i)));
            edges.push((b(i), a(i + 1)));
            edges.push((a(i), b(i)));
        }
    }
    // Terminal cycle a_{p−1} → 2p−1 → 2p → … → n−1 → a_{p−1}.
    let first = 2 * p - 1;
    edges.push((a(p - 1), first));
    for v in first..n - 1 {
        edges.push((v, v + 1));
    }
    edges.push((n - 1, a(p - 1)));
    let g = MultiGraph::new(n, edges)?;
    let orientation = Digraph::from_orientation(&g, &vec![true; g.edge_count()])?;
    debug_assert!(orientation.is_strongly_connected());
    Ok((g, orientation))
}

/// The extremal *block graph* on `n` vertices: for odd n the triangle chain
/// with (n−1)/2 blocks; for even n the chain with (n−2)/2 blocks whose
/// terminal 4-cycle is completed to a K_4. Its exact oriented diameter meets
/// the parity bound ⌊3n/4⌋ / ⌊3(n+1)/4⌋.
pub fn gen_block_extremal(n: usize) -> Result<MultiGraph> {
    if n < 5 {
        return Err(Error::invalid("the extremal block graph needs n >= 5"));
    }
    if n % 2 == 1 {
        let (g, _) = gen_gnp_extremal(n, (n - 1) / 2)?;
        Ok(g)
    } else {
        let p = (n - 2) / 2;
        let (g, _) = gen_gnp_extremal(n, p)?;
        // Terminal cycle is a_{p−1}, c1, c2, c3 with c1 = 2p−1; complete it
        // to a K_4 with the two missing chords.
        let (c1, c2, c3) = (2 * p - 1, 2 * p, 2 * p + 1);
        let mut edges = g.edges().to_vec();
        edges.push((p - 1, c2));
        edges.push((c1, c3));
        MultiGraph::new(n, edges)
    }
}

/// Append a 2-connected block with local labels mapped through `place`:
/// a cycle through some of the vertices, then ears, then up to two chords.
/// `place[0]` is the attachment vertex; the rest are fresh.
fn build_block(edges: &mut Vec<(usize, usize)>, place: &[usize], rng: &mut SplitMix64) {
    let k = place.len();
    debug_assert!(k >= 3);
    let cycle_len = rng.range(3, k);
    for i in 0..cycle_len {
        edges.push((place[i], place[(i + 1) % cycle_len]));
    }
    let mut used = cycle_len;
    while used < k {
        let ear_len = rng.range(1, (k - used).min(3));
        let u = rng.below(used);
        let v = {
            let mut v = rng.below(used - 1);
            if v >= u {
                v += 1;
            }
            v
        };
        let mut prev = place[u];
        for &interior in &place[used..used + ear_len] {
            edges.push((prev, interior));
            prev = interior;
        }
        edges.push((prev, place[v]));
        used += ear_len;
    }
    for _ in 0..rng.below(3) {
        let u = rng.below(k);
        let mut v = rng.below(k - 1);
        if v >= u {
            v += 1;
        }
        edges.push((place[u.min(v)], place[u.max(v)]));
    }
}

/// Random connected bridgeless multigraph with exactly `p` blocks, each
/// 2-connected on at least 3 vertices, glued into a random block tree.
/// Deterministic for fixed (n, p, seed).
pub fn gen_random_bridgeless(n: usize, p: usize, seed: u64) -> Result<MultiGraph> {
    if p == 0 {
        return Err(Error::invalid("need at least one block"));
    }
    if n < 2 * p + 1 {
        return Err(Error::invalid(format!(
            "p blocks of >= 3 vertices glued in a tree need n >= 2p+1, got n={n}, p={p}"
        )));
    }
    let mut rng = SplitMix64::from_parts(&[0x6272_6467, n as u64, p as u64, seed]);
    // Block sizes: at least 3 each, sharing one vertex per gluing, so sizes
    // sum to n + p − 1.
    let mut sizes = vec![3usize; p];
    for _ in 0..n + p - 1 - 3 * p {
        sizes[rng.below(p)] += 1;
    }
    let mut edges = Vec::new();
    let mut next_free = 0usize;
    for (b, &k) in sizes.iter().enumerate() {
        let mut place = Vec::with_capacity(k);
        let fresh = if b == 0 {
            k
        } else {
            place.push(rng.below(next_free));
            k - 1
        };
        place.extend(next_free..next_free + fresh);
        next_free += fresh;
        build_block(&mut edges, &place, &mut rng);
    }
    debug_assert_eq!(next_free, n);
    MultiGraph::new(n, edges)
}

/// Random bridgeless block graph: a tree of cliques of sizes 3–5 (weighted
/// toward triangles), adjacent cliques sharing one vertex. Deterministic for
/// fixed (n, seed).
pub fn gen_random_block_graph(n: usize, seed: u64) -> Result<MultiGraph> {
    if n < 3 {
        return Err(Error::invalid("a bridgeless block graph needs n >= 3"));
    }
    let mut rng = SplitMix64::from_parts(&[0x636c_6971, n as u64, seed]);
    let mut edges = Vec::new();
    let mut next_free = 0usize;
    let mut remaining = n;
    while remaining > 0 {
        let first = next_free == 0;
        // A clique of size k consumes k (first) or k−1 (glued) new vertices;
        // whatever is left must be completable by cliques adding >= 2 each.
        let feasible = |k: usize| -> bool {
            let add = if first { k } else { k - 1 };
            add <= remaining && (remaining - add == 0 || remaining - add >= 2)
        };
        let weighted = [3, 3, 4, 5];
        let options: Vec<usize> = weighted.iter().copied().filter(|&k| feasible(k)).collect();
        if options.is_empty() {
            // Unreachable: remaining is never left at 1, and every value
            // >= 2 (or >= 3 for the first clique) admits some size in 3..=5.
            return Err(Error::contract("no feasible clique size"));
        }
        let k = *rng.choose(&options);
        let mut place = Vec::with_capacity(k);
        let fresh = if first {
            k
        } else {
            place.push(rng.below(next_free));
            k - 1
        };
        place.extend(next_free..next_free + fresh);
        next_free += fresh;
        remaining -= fresh;
        for i in 0..k {
            for j in i + 1..k {
                edges.push((place[i].min(place[j]), place[i].max(place[j])));
            }
        }
    }
    debug_assert_eq!(next_free, n);
    MultiGraph::new(n, edges)
}
