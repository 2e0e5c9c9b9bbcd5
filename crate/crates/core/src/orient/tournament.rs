//! Orientations of complete graphs with the smallest possible diameter:
//! diameter 2 for every order n >= 3 except n = 4, where diameter 3 is
//! optimal and one chosen vertex still reaches and is reached within 2.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::rng::SplitMix64;

const RANDOM_ATTEMPTS: u64 = 100_000;

/// Arcs of K4 on vertices 0..4 whose diameter is 3 while vertex 0 has
/// eccentricity 2 in both directions.
const K4_BASE: [(usize, usize); 6] = [(0, 1), (1, 2), (1, 3), (2, 0), (2, 3), (3, 0)];

fn k4_direction(special: usize, mut a: usize, mut b: usize) -> bool {
    // Relabel so that `special` plays the role of vertex 0.
    let swap = |v: usize| {
        if v == special {
            0
        } else if v == 0 {
            special
        } else {
            v
        }
    };
    a = swap(a);
    b = swap(b);
    K4_BASE.iter().any(|&(u, v)| (u, v) == (a, b))
}

/// Builds the arc list for the orientation of K_n described by `points_to`,
/// where `points_to(i, j)` (for i < j) tells whether the edge is directed
/// i -> j. Edges are enumerated in lexicographic order.
fn build(n: usize, points_to: impl Fn(usize, usize) -> bool) -> Result<Digraph> {
    let mut arcs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            arcs.push(if points_to(i, j) { (i, j) } else { (j, i) });
        }
    }
    Digraph::new(n, arcs)
}

/// Orientation of the complete graph on `n >= 3` vertices with seed 0 for the
/// randomized fallback. See [`complete_orientation_seeded`].
pub fn complete_orientation(n: usize, special: Option<usize>) -> Result<Digraph> {
    complete_orientation_seeded(n, special, 0)
}

/// Orients K_n so that the diameter is 2, except for n = 4 where the
/// diameter is 3 and the vertex `special` (default 0) has eccentricity 2 in
/// both directions. The result is verified by breadth-first search before
/// being returned.
///
/// Odd n uses the rotational orientation i -> i + 1, ..., i + (n-1)/2
/// (indices mod n). Even n >= 6 extends the rotational orientation of
/// K_{n-1} by one vertex whose out-neighbourhood is chosen as a block of
/// (n-2)/2 consecutive vertices, falling back to a seeded random search over
/// out-neighbourhoods when the block choice fails verification.
pub fn complete_orientation_seeded(n: usize, special: Option<usize>, seed: u64) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::invalid(format!(
            "a strong orientation of a complete graph needs n >= 3, got {n}"
        )));
    }
    let special = special.unwrap_or(0);
    if special >= n {
        return Err(Error::VertexOutOfRange {
            vertex: special,
            order: n,
        });
    }

    if n == 4 {
        let d = build(4, |a, b| k4_direction(special, a, b))?;
        let diam = d.diameter().finite().ok_or_else(|| {
            Error::contract("orientation of K4 is not strongly connected")
        })?;
        let (out_ecc, in_ecc, _) = d.eccentricities(special)?;
        if diam != 3 || out_ecc > 2 || in_ecc > 2 {
            return Err(Error::contract(format!(
                "orientation of K4 has diameter {diam} with eccentricity \
                 ({out_ecc}, {in_ecc}) at vertex {special}, expected 3 and (2, 2)"
            )));
        }
        return Ok(d);
    }

    if n % 2 == 1 {
        let d = build(n, |i, j| j - i <= (n - 1) / 2)?;
        return check_diameter_two(d);
    }

    // Even n >= 6: rotational orientation on 0..n-1, plus vertex n-1.
    let core = |i: usize, j: usize| {
        let fwd = (j - i) % (n - 1);
        fwd <= (n - 2) / 2
    };
    let block: Vec<bool> = (0..n - 1).map(|i| i < (n - 2) / 2).collect();
    let with_out_set = |out: &[bool]| {
        let out = out.to_vec();
        build(n, move |i, j| {
            if j == n - 1 {
                !out[i]
            } else {
                core(i, j)
            }
        })
    };
    if let Ok(d) = check_diameter_two(with_out_set(&block)?) {
        return Ok(d);
    }
    let mut rng = SplitMix64::from_parts(&[0x746f_7572, n as u64, seed]);
    for _ in 0..RANDOM_ATTEMPTS {
        let out: Vec<bool> = (0..n - 1).map(|_| rng.chance(1, 2)).collect();
        // A strong orientation needs the last vertex to have both an
        // out-neighbour and an in-neighbour.
        if out.iter().all(|&b| b) || out.iter().all(|&b| !b) {
            continue;
        }
        if let Ok(d) = check_diameter_two(with_out_set(&out)?) {
            return Ok(d);
        }
    }
    Err(Error::contract(format!(
        "no diameter-2 orientation of K_{n} found within {RANDOM_ATTEMPTS} attempts"
    )))
}

fn check_diameter_two(d: Digraph) -> Result<Digraph> {
    match d.diameter().finite() {
        Some(2) => Ok(d),
        Some(k) => Err(Error::contract(format!(
            "orientation of K_{} has diameter {k}, expected 2",
            d.vertex_count()
        ))),
        None => Err(Error::contract(
            "orientation of the complete graph is not strongly connected",
        )),
    }
}
