//! Family generators checked for shape (via the oracle) and for the
//! sharpness results: the extremal families meet their bounds exactly.

mod common;

use orientdia_core::decompose::{decompose, is_block_graph, structural_inequalities};
use orientdia_core::exact::{oriented_diameter_bruteforce, DEFAULT_EDGE_BUDGET};
use orientdia_core::families::{
    bounds, gen_block_extremal, gen_gnp_extremal, gen_random_block_graph, gen_random_bridgeless,
};
use orientdia_core::format::is_orientation_of;
use orientdia_core::rng::SplitMix64;
use orientdia_core::Error;

#[test]
fn extremal_graph_shape_is_right() {
    for n in 5..=14 {
        for p in 2..=(n - 1) / 2 {
            let (g, canonical) = gen_gnp_extremal(n, p).unwrap();
            assert_eq!(g.vertex_count(), n);
            assert_eq!(g.edge_count(), n + p - 1);
            assert!(!common::has_bridge(n, g.edges()));
            assert_eq!(common::block_count(n, g.edges()), p, "({n},{p})");
            assert_eq!(common::cut_vertices(n, g.edges()).len(), p - 1);
            // The canonical orientation is strong with the promised diameter.
            assert!(is_orientation_of(&canonical, &g));
            assert_eq!(
                common::diameter(n, canonical.arcs()),
                Some(n - p / 2),
                "({n},{p})"
            );
        }
    }
}

#[test]
fn extremal_family_is_sharp_at_desk_scale() {
    // The canonical orientation achieves n - floor(p/2), and no orientation
    // does better: the bound is tight for every feasible (n, p).
    for n in 5..=12 {
        for p in 2..=(n - 1) / 2 {
            let (g, _) = gen_gnp_extremal(n, p).unwrap();
            let cert = oriented_diameter_bruteforce(&g, DEFAULT_EDGE_BUDGET).unwrap();
            assert_eq!(cert.value, n - p / 2, "({n},{p})");
        }
    }
}

#[test]
fn block_extremal_meets_parity_bound_exactly() {
    for n in 5..=12 {
        let g = gen_block_extremal(n).unwrap();
        assert!(is_block_graph(&g).unwrap());
        let cert = oriented_diameter_bruteforce(&g, DEFAULT_EDGE_BUDGET).unwrap();
        let bound = if n % 2 == 0 { 3 * n / 4 } else { 3 * (n + 1) / 4 };
        assert_eq!(cert.value, bound, "n={n}");
    }
}

#[test]
fn spine_labels_are_the_first_vertices() {
    // Vertex labeling is part of the format contract: spine 0..p, tips
    // p..2p-1, cycle last.
    let (g, _) = gen_gnp_extremal(9, 3).unwrap();
    // Spine edges exist between consecutive spine labels.
    for i in 0..2 {
        assert!(g.has_edge(i, i + 1), "spine edge {i}");
    }
    // Tips are adjacent to exactly their two spine neighbors.
    for i in 0..2 {
        let tip = 3 + i;
        assert!(g.has_edge(tip, i) && g.has_edge(tip, i + 1));
        assert_eq!(g.degree(tip), 2);
    }
    // Remaining vertices form the terminal cycle through the last spine
    // vertex: all of degree 2.
    for v in 5..9 {
        assert_eq!(g.degree(v), 2);
    }
}

#[test]
fn random_bridgeless_respects_its_contract() {
    let mut rng = SplitMix64::new(51);
    for seed in 0..60u64 {
        let p = rng.range(1, 5);
        let n = rng.range(2 * p + 1, 2 * p + 10);
        let g = gen_random_bridgeless(n, p, seed).unwrap();
        assert_eq!(g.vertex_count(), n);
        assert!(common::is_connected(n, g.edges()));
        assert!(!common::has_bridge(n, g.edges()), "seed {seed}");
        assert_eq!(common::block_count(n, g.edges()), p, "seed {seed}");
        let dec = decompose(&g).unwrap();
        structural_inequalities(&g, &dec).unwrap();
    }
    assert!(matches!(
        gen_random_bridgeless(6, 3, 0),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn random_block_graph_respects_its_contract() {
    let mut rng = SplitMix64::new(52);
    for seed in 0..60u64 {
        let n = rng.range(3, 17);
        let g = gen_random_block_graph(n, seed).unwrap();
        assert_eq!(g.vertex_count(), n);
        assert!(!common::has_bridge(n, g.edges()), "seed {seed}");
        assert!(is_block_graph(&g).unwrap(), "seed {seed}");
        let dec = decompose(&g).unwrap();
        structural_inequalities(&g, &dec).unwrap();
        assert!(n >= 2 * dec.cut_count() + 3);
    }
}

#[test]
fn bound_set_relations() {
    // When every cut vertex joins exactly two blocks (s = p - 1), the
    // corollary bound coincides with the block-count bound.
    for n in 3..20 {
        for p in 1..=(n - 1) / 2 {
            let b = bounds(n, p, p - 1).unwrap();
            assert_eq!(b.corollary_bound, b.theorem1_bound);
            // Fewer cut vertices can only weaken the corollary bound.
            for s in 0..p {
                let c = bounds(n, p, s).unwrap();
                assert!(c.corollary_bound >= b.corollary_bound);
            }
        }
    }
    assert!(bounds(10, 2, 5).is_err());
    assert!(bounds(0, 1, 0).is_err());
}
