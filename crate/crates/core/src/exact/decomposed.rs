//! Exact oriented diameter via block decomposition.
//!
//! Blocks of a bridgeless graph can be oriented independently: any walk that
//! leaves a block must re-enter it through the same cut vertex (the
//! block-cut tree is a tree), so distances inside a block do not depend on
//! the other blocks, and distances across blocks decompose into per-block
//! cut-to-cut segments along the unique block-cut-tree path. It is therefore
//! enough to enumerate each block's strong orientations once, keep only the
//! Pareto-minimal distance profiles, and then scan combinations of profiles.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Distance, MultiGraph};
use crate::decompose::decompose;

use super::{
    forced_pair_constraints, satisfies_constraints, ExactMethod, OrientationCertificate, Searcher,
};

/// Largest edge count enumerated per block: 2^19 candidate masks.
pub const PER_BLOCK_EDGE_LIMIT: usize = 20;

/// Largest number of profile combinations scanned.
const COMBINATION_BUDGET: u128 = 1 << 22;

const INF: usize = usize::MAX / 4;

/// Distance summary of one strong orientation of a block, as seen from its
/// attachment (cut) vertices. Orientations whose summaries are dominated
/// componentwise never help the combined diameter and are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockProfile {
    /// `cut_distances[i][j]`: directed distance from attachment i to j.
    pub cut_distances: Vec<Vec<usize>>,
    /// `to_cut_max[i]`: max over non-attachment vertices v of d(v, attachment i).
    pub to_cut_max: Vec<usize>,
    /// `from_cut_max[i]`: max over non-attachment vertices v of d(attachment i, v).
    pub from_cut_max: Vec<usize>,
    /// Diameter over all ordered vertex pairs of the block.
    pub diameter: usize,
    /// Orientation mask reproducing this profile (bit e = 1: edge e reversed).
    pub mask: u64,
}

impl BlockProfile {
    fn key(&self) -> Vec<usize> {
        let mut k: Vec<usize> = self.cut_distances.iter().flatten().copied().collect();
        k.extend_from_slice(&self.to_cut_max);
        k.extend_from_slice(&self.from_cut_max);
        k.push(self.diameter);
        k
    }

    fn transposed(&self, full_mask: u64) -> BlockProfile {
        let a = self.cut_distances.len();
        let cut_distances = (0..a)
            .map(|i| (0..a).map(|j| self.cut_distances[j][i]).collect())
            .collect();
        BlockProfile {
            cut_distances,
            to_cut_max: self.from_cut_max.clone(),
            from_cut_max: self.to_cut_max.clone(),
            diameter: self.diameter,
            mask: self.mask ^ full_mask,
        }
    }
}

fn dominates(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Pareto-minimal distance profiles over all strong orientations of `block`.
///
/// `attachments` lists the vertices shared with other blocks, strictly
/// increasing, in the block's own vertex numbering. The result is closed
/// under arc reversal up to profile equality: whenever a profile is kept,
/// a profile equal to its transpose is kept too.
pub fn block_profiles(block: &MultiGraph, attachments: &[usize]) -> Result<Vec<BlockProfile>> {
    profiles_with_count(block, attachments).map(|(profiles, _)| profiles)
}

fn profiles_with_count(
    block: &MultiGraph,
    attachments: &[usize],
) -> Result<(Vec<BlockProfile>, u64)> {
    let n = block.vertex_count();
    for (i, &v) in attachments.iter().enumerate() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, order: n });
        }
        if i > 0 && attachments[i - 1] >= v {
            return Err(Error::invalid("attachments must be strictly increasing"));
        }
    }
    if !block.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((u, v)) = block.find_bridge() {
        return Err(Error::Bridge { u, v });
    }
    let m = block.edge_count();
    if m > PER_BLOCK_EDGE_LIMIT {
        return Err(Error::Budget(format!(
            "block has {m} edges, above the per-block enumeration limit of \
             {PER_BLOCK_EDGE_LIMIT}"
        )));
    }
    let a = attachments.len();
    if m == 0 {
        // Single vertex.
        let profile = BlockProfile {
            cut_distances: vec![vec![0; a]; a],
            to_cut_max: vec![0; a],
            from_cut_max: vec![0; a],
            diameter: 0,
            mask: 0,
        };
        return Ok((vec![profile], 1));
    }

    let searcher = Searcher::new(block);
    let mut scratch = searcher.scratch();
    let constraints = forced_pair_constraints(block);
    let full_mask: u64 = (1 << m) - 1;
    let is_attachment: Vec<bool> = {
        let mut f = vec![false; n];
        for &v in attachments {
            f[v] = true;
        }
        f
    };

    let mut kept: Vec<(Vec<usize>, BlockProfile)> = Vec::new();
    let mut explored = 0u64;
    let mut dist = vec![vec![0u32; n]; n];
    'masks: for k in 0..(1u64 << (m - 1)) {
        let mask = k << 1;
        if !satisfies_constraints(mask, &constraints) {
            continue;
        }
        explored += 1;
        for (src, row) in dist.iter_mut().enumerate() {
            if searcher.bfs(mask, src, 0, u32::MAX, &mut scratch).is_none() {
                continue 'masks;
            }
            row.copy_from_slice(&scratch.dist);
        }
        let d = |u: usize, v: usize| dist[u][v] as usize;
        let cut_distances: Vec<Vec<usize>> = attachments
            .iter()
            .map(|&u| attachments.iter().map(|&v| d(u, v)).collect())
            .collect();
        let internals: Vec<usize> = (0..n).filter(|&v| !is_attachment[v]).collect();
        let to_cut_max: Vec<usize> = attachments
            .iter()
            .map(|&c| internals.iter().map(|&v| d(v, c)).max().unwrap_or(0))
            .collect();
        let from_cut_max: Vec<usize> = attachments
            .iter()
            .map(|&c| internals.iter().map(|&v| d(c, v)).max().unwrap_or(0))
            .collect();
        let diameter = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .map(|(u, v)| d(u, v))
            .max()
            .unwrap_or(0);
        let profile = BlockProfile {
            cut_distances,
            to_cut_max,
            from_cut_max,
            diameter,
            mask,
        };
        let transpose = profile.transposed(full_mask);
        for cand in [profile, transpose] {
            let key = cand.key();
            if kept.iter().any(|(k, _)| dominates(k, &key)) {
                continue;
            }
            kept.retain(|(k, _)| !dominates(&key, k));
            kept.push((key, cand));
        }
    }
    if kept.is_empty() {
        return Err(Error::contract(
            "bridgeless connected block has no strong orientation",
        ));
    }
    Ok((kept.into_iter().map(|(_, p)| p).collect(), explored))
}

/// Minimum diameter over all strong orientations, combined exactly from
/// per-block profiles. Matches [`super::oriented_diameter_bruteforce`] on
/// every input both can handle, but scales with the largest block rather
/// than the whole graph.
pub fn oriented_diameter_decomposed(g: &MultiGraph) -> Result<OrientationCertificate> {
    if g.vertex_count() == 0 {
        return Err(Error::invalid("graph must have at least one vertex"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((u, v)) = g.find_bridge() {
        return Err(Error::Bridge { u, v });
    }
    let n = g.vertex_count();
    if n == 1 {
        return Ok(OrientationCertificate {
            value: 0,
            witness: Digraph::new(1, Vec::new())?,
            method: ExactMethod::Decomposed,
            explored: 1,
        });
    }

    let dec = decompose(g)?;
    let p = dec.block_count();
    let s = dec.cut_count();
    let cut_id = |v: usize| -> usize {
        dec.cut_vertices()
            .binary_search(&v)
            .expect("cut vertex index")
    };

    let mut subs = Vec::with_capacity(p);
    let mut atts_global: Vec<&[usize]> = Vec::with_capacity(p);
    let mut profiles: Vec<Vec<BlockProfile>> = Vec::with_capacity(p);
    let mut explored = 0u64;
    for b in 0..p {
        let sub = g.induced(&dec.blocks()[b])?;
        let atts = dec.cut_vertices_of_block(b);
        let atts_local: Vec<usize> = atts
            .iter()
            .map(|&v| sub.to_local(v).expect("attachment inside its block"))
            .collect();
        let (prof, count) = profiles_with_count(&sub.graph, &atts_local)?;
        explored += count;
        subs.push(sub);
        atts_global.push(atts);
        profiles.push(prof);
    }

    // Cut-vertex ids of each block's attachments, in attachment order.
    let att_cut_ids: Vec<Vec<usize>> = atts_global
        .iter()
        .map(|atts| atts.iter().map(|&v| cut_id(v)).collect())
        .collect();

    // Block-cut tree on nodes 0..p (blocks) and p..p+s (cut vertices).
    let mut tree_adj = vec![Vec::new(); p + s];
    for b in 0..p {
        for &ci in &att_cut_ids[b] {
            tree_adj[b].push(p + ci);
            tree_adj[p + ci].push(b);
        }
    }
    // toward_block[i][j] (j != i): index of block i's attachment on the tree
    // path toward block j; toward_cut[i][c]: same, toward cut vertex c.
    let mut toward_block = vec![vec![usize::MAX; p]; p];
    let mut toward_cut = vec![vec![usize::MAX; s]; p];
    for i in 0..p {
        for (ai, &ci) in att_cut_ids[i].iter().enumerate() {
            // Everything reachable from attachment ai without entering block i.
            let mut seen = vec![false; p + s];
            seen[i] = true;
            seen[p + ci] = true;
            let mut queue = vec![p + ci];
            toward_cut[i][ci] = ai;
            while let Some(x) = queue.pop() {
                for &y in &tree_adj[x] {
                    if seen[y] {
                        continue;
                    }
                    seen[y] = true;
                    if y < p {
                        toward_block[i][y] = ai;
                    } else {
                        toward_cut[i][y - p] = ai;
                    }
                    queue.push(y);
                }
            }
        }
    }

    let total: u128 = profiles.iter().map(|v| v.len() as u128).product();
    if total > COMBINATION_BUDGET {
        return Err(Error::Budget(format!(
            "{total} profile combinations exceed the budget of {COMBINATION_BUDGET}"
        )));
    }

    let mut idx = vec![0usize; p];
    let mut dist = vec![vec![INF; s]; s];
    let mut best: Option<(usize, Vec<usize>)> = None;
    loop {
        let limit = best.as_ref().map_or(usize::MAX, |(v, _)| *v);
        if let Some(val) = combined_diameter(
            &profiles,
            &idx,
            &att_cut_ids,
            &toward_block,
            &toward_cut,
            s,
            limit,
            &mut dist,
        ) {
            best = Some((val, idx.clone()));
        }
        // Odometer increment, last block fastest.
        let mut exhausted = true;
        for pos in (0..p).rev() {
            idx[pos] += 1;
            if idx[pos] < profiles[pos].len() {
                exhausted = false;
                break;
            }
            idx[pos] = 0;
        }
        if exhausted {
            break;
        }
    }

    let (value, chosen) =
        best.ok_or_else(|| Error::contract("no profile combination produced a diameter"))?;
    let mut flags = vec![true; g.edge_count()];
    for b in 0..p {
        let mask = profiles[b][chosen[b]].mask;
        for (local, &global) in subs[b].edge_map.iter().enumerate() {
            flags[global] = (mask >> local) & 1 == 0;
        }
    }
    let witness = Digraph::from_orientation(g, &flags)?;
    if witness.diameter() != Distance::Finite(value) {
        return Err(Error::contract(format!(
            "combined diameter {value} disagrees with witness diameter {}",
            witness.diameter()
        )));
    }
    Ok(OrientationCertificate {
        value,
        witness,
        method: ExactMethod::Decomposed,
        explored,
    })
}

/// Diameter of the orientation selecting `idx[b]`-th profile per block, or
/// `None` once it provably reaches `limit`. Exact for strictly smaller
/// values: every term is the true distance of some vertex pair and every
/// vertex pair is covered by some term.
#[allow(clippy::too_many_arguments)]
fn combined_diameter(
    profiles: &[Vec<BlockProfile>],
    idx: &[usize],
    att_cut_ids: &[Vec<usize>],
    toward_block: &[Vec<usize>],
    toward_cut: &[Vec<usize>],
    s: usize,
    limit: usize,
    dist: &mut [Vec<usize>],
) -> Option<usize> {
    let p = profiles.len();
    let pr = |i: usize| &profiles[i][idx[i]];

    for row in dist.iter_mut() {
        row.fill(INF);
    }
    for (i, ids) in att_cut_ids.iter().enumerate() {
        let prof = pr(i);
        for (ai, &ci) in ids.iter().enumerate() {
            for (aj, &cj) in ids.iter().enumerate() {
                let d = prof.cut_distances[ai][aj];
                if d < dist[ci][cj] {
                    dist[ci][cj] = d;
                }
            }
        }
    }
    // Floyd-Warshall over the cut vertices; the textbook triple loop needs
    // dist[i][*] and dist[k][*] at once, so indices stay.
    #[allow(clippy::needless_range_loop)]
    for k in 0..s {
        for i in 0..s {
            let dik = dist[i][k];
            if dik >= INF {
                continue;
            }
            for j in 0..s {
                let alt = dik + dist[k][j];
                if alt < dist[i][j] {
                    dist[i][j] = alt;
                }
            }
        }
    }

    let mut val = 0usize;
    let mut bump = |x: usize| -> bool {
        if x > val {
            val = x;
        }
        val >= limit
    };

    // (a) pairs inside one block.
    for i in 0..p {
        if bump(pr(i).diameter) {
            return None;
        }
    }
    // (b) non-attachment vertex of block i to non-attachment vertex of block j.
    for i in 0..p {
        for j in 0..p {
            if i == j {
                continue;
            }
            let ai = toward_block[i][j];
            let aj = toward_block[j][i];
            let term = pr(i).to_cut_max[ai]
                + dist[att_cut_ids[i][ai]][att_cut_ids[j][aj]]
                + pr(j).from_cut_max[aj];
            if bump(term) {
                return None;
            }
        }
    }
    // (c) cut vertex to non-attachment vertex of block j, and (d) reverse.
    for j in 0..p {
        for ci in 0..s {
            let aj = toward_cut[j][ci];
            let enter = dist[ci][att_cut_ids[j][aj]] + pr(j).from_cut_max[aj];
            let leave = pr(j).to_cut_max[aj] + dist[att_cut_ids[j][aj]][ci];
            if bump(enter) || bump(leave) {
                return None;
            }
        }
    }
    // (e) cut vertex to cut vertex.
    for row in dist.iter() {
        for &d in row {
            if bump(d) {
                return None;
            }
        }
    }
    Some(val)
}
