//! Randomized invariants of the contraction engine: degree propagation
//! through a replay, the red-degree cap for untouched vertices, relabeling
//! equivariance, and the symmetric-difference identity.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;

use twinwidth::generators::{gnp, seeded_rng};
use twinwidth::sequence::{apply_sequence, ContractionSequence, ContractionStep};
use twinwidth::trigraph::VertexId;
use twinwidth::Trigraph;

fn random_graph_and_partial_sequence(seed: u64) -> (Trigraph, ContractionSequence) {
    let mut rng = seeded_rng(seed);
    let n = rng.gen_range(2..24);
    let g = gnp(n, rng.gen_range(0.05..0.95), seed ^ 0x5555).unwrap();
    let steps = rng.gen_range(0..n);
    let mut alive: Vec<VertexId> = g.vertices().collect();
    let mut seq = ContractionSequence::default();
    for _ in 0..steps {
        if alive.len() < 2 {
            break;
        }
        let i = rng.gen_range(0..alive.len());
        let mut j = rng.gen_range(0..alive.len() - 1);
        if j >= i {
            j += 1;
        }
        seq.push(ContractionStep::new(alive[i], alive[j]));
        alive.swap_remove(j);
    }
    (g, seq)
}

#[test]
fn degree_propagation_bounds_hold() {
    for seed in 0..300 {
        let (g, seq) = random_graph_and_partial_sequence(seed);
        let mut work = g.clone();
        for step in seq.iter() {
            work.contract_in_place(step.keep, step.drop).unwrap();
        }
        let report = apply_sequence(&g, &seq).unwrap();
        for v in work.vertices() {
            let preimage: BTreeSet<VertexId> = report.preimage(v);
            let boundary = g.boundary_size(&preimage).unwrap();
            let degree_sum: usize = preimage.iter().map(|&w| g.degree(w).unwrap()).sum();
            let deg_after = work.degree(v).unwrap();
            assert!(
                deg_after <= boundary && boundary <= degree_sum,
                "seed {seed}, vertex {v}: {deg_after} <= {boundary} <= {degree_sum}"
            );
        }
    }
}

#[test]
fn untouched_vertices_gain_at_most_one_red_per_merge() {
    for seed in 300..600 {
        let (g, seq) = random_graph_and_partial_sequence(seed);
        let mut work = g.clone();
        for step in seq.iter() {
            work.contract_in_place(step.keep, step.drop).unwrap();
        }
        let report = apply_sequence(&g, &seq).unwrap();
        let merged_count = report
            .preimage_sizes
            .values()
            .filter(|&&size| size > 1)
            .count() as u32;
        for v in work.vertices() {
            if report.preimage_sizes[&v] == 1 {
                let before = g.red_degree(v).unwrap();
                let after = work.red_degree(v).unwrap();
                assert!(
                    after <= before + merged_count,
                    "seed {seed}, vertex {v}: {after} > {before} + {merged_count}"
                );
            }
        }
    }
}

#[test]
fn reports_are_relabeling_equivariant() {
    for seed in 600..700 {
        let (g, seq) = random_graph_and_partial_sequence(seed);
        let mut rng = seeded_rng(seed ^ 0xabab);
        let vs: Vec<VertexId> = g.vertices().collect();
        let mut images: Vec<VertexId> = vs.iter().map(|&v| v + 1000).collect();
        images.shuffle(&mut rng);
        let map: BTreeMap<VertexId, VertexId> =
            vs.iter().copied().zip(images.iter().copied()).collect();
        let relabeled_g = g.relabel(&map).unwrap();
        let relabeled_seq = seq.relabel(&map).unwrap();
        let a = apply_sequence(&g, &seq).unwrap();
        let b = apply_sequence(&relabeled_g, &relabeled_seq).unwrap();
        assert_eq!(a.width, b.width, "seed {seed}");
        assert_eq!(
            a.step_max_red_degrees, b.step_max_red_degrees,
            "seed {seed}"
        );
        for (v, img) in &a.sigma {
            assert_eq!(map[img], b.sigma[&map[v]], "seed {seed}");
        }
    }
}

#[test]
fn contraction_shrinks_by_one_and_keeps_edge_sets_disjoint() {
    for seed in 700..800 {
        let mut rng = seeded_rng(seed);
        let n = rng.gen_range(2..20);
        let mut g = gnp(n, 0.5, seed).unwrap();
        // Sprinkle red edges so the invariant is exercised on trigraphs.
        for _ in 0..n / 2 {
            let u = rng.gen_range(0..n) as VertexId;
            let v = rng.gen_range(0..n) as VertexId;
            if u != v {
                g.set_edge(u, v, twinwidth::EdgeColor::Red).unwrap();
            }
        }
        let alive: Vec<VertexId> = g.vertices().collect();
        let u = alive[rng.gen_range(0..alive.len())];
        let mut v = u;
        while v == u {
            v = alive[rng.gen_range(0..alive.len())];
        }
        let merged = g.contract(u, v).unwrap();
        assert_eq!(merged.vertex_count(), g.vertex_count() - 1);
        // Disjointness of black and red is structural (one color per pair);
        // per-pair colors must also be self-consistent.
        for (a, b, c) in merged.edges() {
            assert_eq!(merged.edge_color(b, a), Some(c));
        }
    }
}

#[test]
fn twins_contract_without_red() {
    // In a plain graph, equal neighborhoods away from the pair mean the
    // contraction introduces no red edge.
    let mut found = 0;
    for seed in 800..1400 {
        let mut rng = seeded_rng(seed);
        let n = rng.gen_range(4..12);
        let g = gnp(n, 0.5, seed).unwrap();
        let vs: Vec<VertexId> = g.vertices().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if g.symmetric_difference_size(u, v).unwrap() == 0 {
                    let merged = g.contract(u, v).unwrap();
                    assert_eq!(merged.red_edge_count(), 0, "seed {seed} pair ({u},{v})");
                    found += 1;
                }
            }
        }
    }
    assert!(
        found > 10,
        "twin pairs should occur in the sample ({found})"
    );
}

#[test]
fn symmetric_difference_equals_merged_red_degree() {
    for seed in 1400..1500 {
        let mut rng = seeded_rng(seed);
        let n = rng.gen_range(2..25);
        let g = gnp(n, rng.gen_range(0.1..0.9), seed).unwrap();
        let vs: Vec<VertexId> = g.vertices().collect();
        for _ in 0..10 {
            let u = vs[rng.gen_range(0..vs.len())];
            let mut v = u;
            while v == u {
                v = vs[rng.gen_range(0..vs.len())];
            }
            let merged = g.contract(u, v).unwrap();
            assert_eq!(
                g.symmetric_difference_size(u, v).unwrap() as u32,
                merged.red_degree(u).unwrap(),
                "seed {seed} pair ({u},{v})"
            );
        }
    }
}

#[test]
fn incremental_bookkeeping_matches_recomputation() {
    // Long random mutation runs (edge insertions, recolorings, removals,
    // contractions); after each batch the cached red degrees, edge counts,
    // and the maximum must equal values recomputed from the adjacency.
    for seed in 0..60 {
        let mut rng = seeded_rng(9_000 + seed);
        let n = rng.gen_range(2..20);
        let mut g = Trigraph::with_vertex_count(n);
        for _ in 0..300 {
            let alive: Vec<VertexId> = g.vertices().collect();
            if alive.len() < 2 {
                break;
            }
            let u = alive[rng.gen_range(0..alive.len())];
            let mut v = u;
            while v == u {
                v = alive[rng.gen_range(0..alive.len())];
            }
            match rng.gen_range(0..10) {
                0..=3 => g.add_black_edge(u, v).unwrap(),
                4..=6 => g.add_red_edge(u, v).unwrap(),
                7..=8 => {
                    g.remove_edge(u, v).unwrap();
                }
                _ => g.contract_in_place(u, v).unwrap(),
            }
        }
        let mut black = 0;
        let mut red = 0;
        let mut max_red = 0;
        for v in g.vertices() {
            let red_here = g
                .neighbors(v)
                .filter(|&(_, c)| c == twinwidth::EdgeColor::Red)
                .count() as u32;
            assert_eq!(g.red_degree(v).unwrap(), red_here, "seed {seed} vertex {v}");
            max_red = max_red.max(red_here);
            for (u, c) in g.neighbors(v) {
                if u > v {
                    match c {
                        twinwidth::EdgeColor::Black => black += 1,
                        twinwidth::EdgeColor::Red => red += 1,
                    }
                }
            }
        }
        assert_eq!(g.black_edge_count(), black, "seed {seed}");
        assert_eq!(g.red_edge_count(), red, "seed {seed}");
        assert_eq!(g.max_red_degree(), max_red, "seed {seed}");
    }
}
