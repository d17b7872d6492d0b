mod common;

use boxicity::bounds::{bipartite_bound, boxicity_bound, cubicity_bound};
use boxicity::boxrep::{build_bipartite_box_representation, build_box_representation, decompose};
use boxicity::cover::{approx_vertex_cover, min_vertex_cover};
use boxicity::cub::build_cub_representation;
use boxicity::interval::verify;
use boxicity::{generators, Graph, Representation};
use common::ceil_log2;
use proptest::prelude::*;

fn round_trip(rep: &Representation, g: &Graph) {
    let back = Representation::from_json(&rep.to_json()).unwrap();
    assert_eq!(back.dims, rep.dims);
    assert!(verify(&back, g).passed);
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..1.0f64, any::<u64>())
        .prop_map(|(n, p, seed)| generators::random(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cover_constructions_verify(g in graph_strategy(14)) {
        let n = g.n();
        for cover in [min_vertex_cover(&g).unwrap(), approx_vertex_cover(&g)] {
            let t = cover.len();
            let cub = build_cub_representation(&g, &cover).unwrap();
            prop_assert!(verify(&cub, &g).passed);
            if t > 0 {
                prop_assert!(cub.dim_count() < t + ceil_log2(n - t));
                prop_assert_eq!(Some(cub.dim_count()), cubicity_bound(n, t));
            }
            round_trip(&cub, &g);

            let boxed = build_box_representation(&g, &cover).unwrap();
            prop_assert!(verify(&boxed, &g).passed);
            prop_assert!(boxed.dim_count() <= t / 2 + 1);
            prop_assert!(boxed.dim_count() <= boxicity_bound(t));
            round_trip(&boxed, &g);
        }
    }

    #[test]
    fn decomposition_partitions_the_cover(g in graph_strategy(14)) {
        let cover = min_vertex_cover(&g).unwrap();
        if !cover.is_empty() {
            let d = decompose(&g, &cover).unwrap();
            let mut seen: Vec<usize> = d.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
            seen.extend(&d.residual);
            seen.sort_unstable();
            prop_assert_eq!(seen, cover.vertices.clone());
            prop_assert!(d.pairs.iter().all(|&(a, b)| !g.has_edge(a, b)));
            for (i, &a) in d.residual.iter().enumerate() {
                for &b in &d.residual[i + 1..] {
                    prop_assert!(g.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn bipartite_construction_verifies(
        n1 in 1..=8usize,
        n2 in 1..=8usize,
        p in 0.0..1.0f64,
        seed in any::<u64>(),
    ) {
        let gen = generators::random_bipartite(n1, n2, p, seed).unwrap();
        let bip = gen.bipartition.unwrap();
        let rep = build_bipartite_box_representation(&gen.graph, &bip).unwrap();
        prop_assert!(verify(&rep, &gen.graph).passed);
        prop_assert!(rep.dim_count() <= bipartite_bound(n1, n2));
        let small = n1.min(n2);
        if small >= 3 {
            prop_assert!(rep.dim_count() <= small.div_ceil(2));
        }
        round_trip(&rep, &gen.graph);
    }
}

#[test]
fn families() {
    for n in [4, 6, 8, 10, 12] {
        let g = generators::roberts(n).unwrap();
        let rep = build_box_representation(&g, &min_vertex_cover(&g).unwrap()).unwrap();
        assert!(verify(&rep, &g).passed);
        assert_eq!(rep.dim_count(), n / 2);
    }
    for n in [4, 6, 8, 10, 12, 14, 16] {
        let gen = generators::generate(generators::Family::Crown { n }).unwrap();
        let rep = build_bipartite_box_representation(&gen.graph, gen.bipartition.as_ref().unwrap())
            .unwrap();
        assert!(verify(&rep, &gen.graph).passed);
        assert!(
            rep.dim_count() <= bipartite_bound(n / 2, n / 2),
            "crown({n})"
        );
    }
    for n in 2..=17 {
        let g = generators::star(n).unwrap();
        let rep = build_cub_representation(&g, &min_vertex_cover(&g).unwrap()).unwrap();
        assert!(verify(&rep, &g).passed);
        assert_eq!(rep.dim_count(), ceil_log2(n - 1));
    }
}

#[test]
fn non_minimal_and_non_bipartite_inputs_are_rejected() {
    let c4 = generators::cycle(4).unwrap();
    let cover = boxicity::cover::VertexCover::from_vertices(&c4, vec![0, 1, 2]).unwrap();
    assert!(!cover.is_minimal);
    assert!(build_cub_representation(&c4, &cover).is_err());
    assert!(build_box_representation(&c4, &cover).is_err());
    let bad = boxicity::Bipartition {
        side1: vec![0, 1],
        side2: vec![2, 3],
    };
    assert!(build_bipartite_box_representation(&c4, &bad).is_err());
}
