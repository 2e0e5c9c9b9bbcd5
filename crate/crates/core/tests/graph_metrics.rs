//! Distance and format machinery checked against the independent oracle.

mod common;

use orientdia_core::format::{
    digraph_to_dot, is_orientation_of, parse_digraph, parse_multigraph, write_digraph,
    write_multigraph,
};
use orientdia_core::graph::{Digraph, Distance, MultiGraph};
use orientdia_core::rng::SplitMix64;
use orientdia_core::Error;

fn random_digraph(n: usize, arc_count: usize, rng: &mut SplitMix64) -> Digraph {
    let mut arcs = Vec::with_capacity(arc_count);
    while arcs.len() < arc_count {
        let u = rng.below(n);
        let v = rng.below(n);
        if u != v {
            arcs.push((u, v));
        }
    }
    Digraph::new(n, arcs).unwrap()
}

#[test]
fn bfs_distances_match_oracle_on_random_digraphs() {
    let mut rng = SplitMix64::new(11);
    for _ in 0..60 {
        let n = rng.range(2, 12);
        let d = random_digraph(n, rng.range(1, 3 * n), &mut rng);
        for src in 0..n {
            let got = d.bfs_distances(src).unwrap();
            let want = common::directed_distances(n, d.arcs(), src);
            for v in 0..n {
                assert_eq!(got[v].finite(), want[v], "src {src} vertex {v}");
            }
        }
    }
}

#[test]
fn reverse_distances_match_oracle() {
    let mut rng = SplitMix64::new(12);
    for _ in 0..40 {
        let n = rng.range(2, 10);
        let d = random_digraph(n, rng.range(1, 2 * n), &mut rng);
        let reversed: Vec<(usize, usize)> = d.arcs().iter().map(|&(u, v)| (v, u)).collect();
        for t in 0..n {
            let got = d.bfs_distances_to(t).unwrap();
            let want = common::directed_distances(n, &reversed, t);
            for v in 0..n {
                assert_eq!(got[v].finite(), want[v], "target {t} vertex {v}");
            }
        }
    }
}

#[test]
fn diameter_and_strong_connectivity_match_oracle() {
    let mut rng = SplitMix64::new(13);
    for _ in 0..80 {
        let n = rng.range(2, 10);
        let d = random_digraph(n, rng.range(1, 3 * n), &mut rng);
        let want = common::diameter(n, d.arcs());
        assert_eq!(d.is_strongly_connected(), common::is_strong(n, d.arcs()));
        assert_eq!(d.diameter().finite(), want);
        if let Some(w) = want {
            let (dist, pair) = d.diameter_with_witness();
            assert_eq!(dist.finite(), Some(w));
            let (a, b) = pair.unwrap();
            let from_a = common::directed_distances(n, d.arcs(), a);
            assert_eq!(from_a[b], Some(w), "witness pair must realize the diameter");
        }
    }
}

#[test]
fn eccentricities_match_oracle() {
    let mut rng = SplitMix64::new(14);
    let mut checked = 0;
    while checked < 25 {
        let n = rng.range(3, 9);
        let d = random_digraph(n, rng.range(2 * n, 3 * n), &mut rng);
        if !d.is_strongly_connected() {
            continue;
        }
        checked += 1;
        let reversed: Vec<(usize, usize)> = d.arcs().iter().map(|&(u, v)| (v, u)).collect();
        for v in 0..n {
            let (out, inn, max) = d.eccentricities(v).unwrap();
            let out_want = common::directed_distances(n, d.arcs(), v)
                .into_iter()
                .map(Option::unwrap)
                .max()
                .unwrap();
            let in_want = common::directed_distances(n, &reversed, v)
                .into_iter()
                .map(Option::unwrap)
                .max()
                .unwrap();
            assert_eq!((out, inn, max), (out_want, in_want, out_want.max(in_want)));
        }
    }
}

#[test]
fn connectivity_and_bridges_match_oracle() {
    let mut rng = SplitMix64::new(15);
    for _ in 0..80 {
        let n = rng.range(2, 10);
        let m = rng.range(1, 2 * n);
        let mut edges = Vec::new();
        while edges.len() < m {
            let u = rng.below(n);
            let v = rng.below(n);
            if u != v {
                edges.push((u, v));
            }
        }
        let g = MultiGraph::new(n, edges.clone()).unwrap();
        assert_eq!(g.is_connected(), common::is_connected(n, &edges));
        if g.is_connected() {
            assert_eq!(
                g.find_bridge().is_some(),
                common::has_bridge(n, &edges),
                "n={n} edges={edges:?}"
            );
        }
    }
}

#[test]
fn loops_and_range_errors_are_rejected() {
    assert!(matches!(
        MultiGraph::new(3, vec![(1, 1)]),
        Err(Error::LoopEdge(1))
    ));
    assert!(matches!(
        MultiGraph::new(3, vec![(0, 3)]),
        Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
    ));
    assert!(matches!(
        Digraph::new(2, vec![(0, 2)]),
        Err(Error::VertexOutOfRange { vertex: 2, order: 2 })
    ));
}

#[test]
fn graph_text_round_trips() {
    let mut rng = SplitMix64::new(16);
    for _ in 0..20 {
        let n = rng.range(2, 9);
        let m = rng.range(1, 2 * n);
        let mut edges = Vec::new();
        while edges.len() < m {
            let u = rng.below(n);
            let v = rng.below(n);
            if u != v {
                edges.push((u, v));
            }
        }
        let g = MultiGraph::new(n, edges).unwrap();
        let text = write_multigraph(&g);
        let back = parse_multigraph(&text).unwrap();
        assert_eq!(g, back);

        let flags = vec![true; g.edge_count()];
        let d = Digraph::from_orientation(&g, &flags).unwrap();
        let dtext = write_digraph(&d);
        let dback = parse_digraph(&dtext).unwrap();
        assert_eq!(d, dback);
        assert!(is_orientation_of(&d, &g));
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    match parse_multigraph("3 2\n0 1\nx y\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("expected parse error, got {other:?}"),
    }
    match parse_multigraph("3\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
        other => panic!("expected parse error, got {other:?}"),
    }
    // Declared two edges, provided one.
    assert!(parse_multigraph("3 2\n0 1\n").is_err());
}

#[test]
fn orientation_mismatches_are_detected() {
    let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    let d = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
    assert!(is_orientation_of(&d, &g));
    // An arc repeated (covers one edge twice, another zero times).
    let bad = Digraph::new(3, vec![(0, 1), (0, 1), (2, 0)]).unwrap();
    assert!(!is_orientation_of(&bad, &g));
    // Arc between vertices that are not adjacent in g.
    let h = MultiGraph::new(4, vec![(0, 1), (1, 2), (0, 2), (2, 3), (1, 3)]).unwrap();
    let e = Digraph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)]).unwrap();
    assert!(!is_orientation_of(&e, &h));
}

#[test]
fn dot_output_lists_every_arc() {
    let d = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
    let dot = digraph_to_dot(&d);
    assert!(dot.starts_with("digraph {"));
    assert!(dot.trim_end().ends_with('}'));
    for (u, v) in [(0, 1), (1, 2), (2, 0)] {
        assert!(dot.contains(&format!("{u} -> {v};")), "missing {u}->{v} in {dot}");
    }
}

#[test]
fn distance_ordering_is_finite_first() {
    assert!(Distance::Finite(100) < Distance::Infinite);
    assert!(Distance::Finite(3) < Distance::Finite(4));
    assert_eq!(
        Distance::Finite(2).plus(Distance::Finite(3)),
        Distance::Finite(5)
    );
    assert_eq!(Distance::Finite(2).plus(Distance::Infinite), Distance::Infinite);
}
