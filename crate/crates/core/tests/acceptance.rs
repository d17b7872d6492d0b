//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use boxicity::boxrep::{build_bipartite_box_representation, build_box_representation};
use boxicity::cover::{approx_vertex_cover, min_vertex_cover, VertexCover};
use boxicity::cub::build_cub_representation;
use boxicity::enumerate::canonical_key;
use boxicity::generators;
use boxicity::interval::verify;
use boxicity::io::write_graph6;
use boxicity::oracle::{exact_boxicity, exact_cubicity};
use boxicity::recognition::{is_interval, is_unit_interval};
use boxicity::survey::{survey, Check};
use boxicity::{Bipartition, Graph, Kind, Representation};
use common::{
    brute_chi, brute_exact, brute_interval, brute_min_cover, brute_nu, brute_unit_interval,
    ceil_log2, classes, shuffled,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const MAX_K: usize = 8;

/// Passes verification, and still passes after a trip through the JSON format.
fn checked(rep: &Representation, g: &Graph) -> usize {
    let report = verify(rep, g);
    assert!(report.passed, "{:?} on {g:?}", report.violations);
    let back = Representation::from_json(&rep.to_json()).unwrap();
    assert_eq!(back.dims, rep.dims);
    assert_eq!(
        (back.kind, back.scale, back.n),
        (rep.kind, rep.scale, rep.n)
    );
    assert!(verify(&back, g).passed);
    rep.dim_count()
}

fn exact_box(g: &Graph) -> usize {
    let r = exact_boxicity(g, MAX_K).unwrap();
    assert!(!r.capped, "{g:?}");
    checked(r.witness.as_ref().unwrap(), g);
    assert_eq!(r.witness.unwrap().dim_count(), r.value);
    r.value
}

fn exact_cub(g: &Graph) -> usize {
    let r = exact_cubicity(g, MAX_K).unwrap();
    assert!(!r.capped, "{g:?}");
    checked(r.witness.as_ref().unwrap(), g);
    assert_eq!(r.witness.unwrap().dim_count(), r.value);
    r.value
}

/// Minimum and approximate covers; both are minimal.
fn covers(g: &Graph) -> Vec<VertexCover> {
    let mut out = vec![min_vertex_cover(g).unwrap(), approx_vertex_cover(g)];
    out.dedup();
    out
}

fn all_graphs(max_n: usize) -> Vec<&'static Graph> {
    (1..=max_n).flat_map(|n| classes(n).iter()).collect()
}

fn criterion_1_star_tightness() {
    for n in 3..=9 {
        let g = generators::star(n).unwrap();
        let cover = VertexCover::from_vertices(&g, vec![0]).unwrap();
        let rep = build_cub_representation(&g, &cover).unwrap();
        assert_eq!(rep.kind, Kind::Cub);
        assert_eq!(checked(&rep, &g), ceil_log2(n - 1), "star({n})");
    }
    let star5 = generators::star(5).unwrap();
    assert_eq!(exact_cub(&star5), 2);
}

fn criterion_2_cub_bound() {
    all_graphs(7).par_iter().for_each(|&g| {
        let n = g.n();
        let exact = (n <= 6).then(|| exact_cub(g));
        if n <= 5 {
            assert_eq!(exact, Some(brute_exact(g, true)), "{g:?}");
        }
        for cover in covers(g) {
            let t = cover.len();
            let dims = checked(&build_cub_representation(g, &cover).unwrap(), g);
            if t > 0 {
                assert!(dims < t + ceil_log2(n - t), "{g:?}");
            } else {
                assert_eq!(dims, 1);
            }
            if let Some(exact) = exact {
                assert!(exact <= dims, "{g:?}");
            }
        }
    });
}

fn criterion_3_c4() {
    let c4 = generators::cycle(4).unwrap();
    let rep = build_box_representation(&c4, &min_vertex_cover(&c4).unwrap()).unwrap();
    assert_eq!(checked(&rep, &c4), 2);
    assert_eq!(exact_box(&c4), 2);
}

fn criterion_4_roberts() {
    for n in [4, 6, 8] {
        let g = generators::roberts(n).unwrap();
        let cover = min_vertex_cover(&g).unwrap();
        assert_eq!(cover.len(), n - 2);
        assert_eq!(brute_min_cover(&g), n - 2);
        let dims = checked(&build_box_representation(&g, &cover).unwrap(), &g);
        assert!(dims <= n / 2);
        assert_eq!(exact_box(&g), n / 2);
    }
}

fn criterion_5_box_bound() {
    all_graphs(7).par_iter().for_each(|&g| {
        let exact = exact_box(g);
        if g.n() <= 5 {
            assert_eq!(exact, brute_exact(g, false), "{g:?}");
        }
        for cover in covers(g) {
            let dims = checked(&build_box_representation(g, &cover).unwrap(), g);
            assert!(dims <= cover.len() / 2 + 1, "{g:?}");
            assert!(exact <= dims, "{g:?}");
        }
    });
}

fn bipartite_limit(n1: usize, n2: usize) -> usize {
    let (small, large) = (n1.min(n2), n1.max(n2));
    if small >= 3 {
        small.div_ceil(2).min(large.div_ceil(2))
    } else {
        // minimum cover is at most the smaller side
        small / 2 + 1
    }
}

fn criterion_6_bipartite() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for seed in 0..200u64 {
        let (n1, n2) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let p = rng.gen_range(0.1..0.9);
        let gen = generators::random_bipartite(n1, n2, p, seed).unwrap();
        let bip = gen.bipartition.unwrap();
        let rep = build_bipartite_box_representation(&gen.graph, &bip).unwrap();
        assert!(
            checked(&rep, &gen.graph) <= bipartite_limit(n1, n2),
            "seed {seed}"
        );
    }
    let mut count = 0;
    for g in all_graphs(7) {
        let Ok(bip) = g.bipartition() else { continue };
        count += 1;
        let rep = build_bipartite_box_representation(g, &bip).unwrap();
        let limit = bipartite_limit(bip.side1.len(), bip.side2.len());
        assert!(checked(&rep, g) <= limit, "{g:?}");
        // the other orientation of the sides
        let flipped = Bipartition {
            side1: bip.side2.clone(),
            side2: bip.side1.clone(),
        };
        let rep = build_bipartite_box_representation(g, &flipped).unwrap();
        assert!(checked(&rep, g) <= limit, "{g:?}");
    }
    assert!(count > 100);
}

fn criterion_7_crown() {
    let crown8 = generators::generate(generators::Family::Crown { n: 8 }).unwrap();
    let rep =
        build_bipartite_box_representation(&crown8.graph, crown8.bipartition.as_ref().unwrap())
            .unwrap();
    assert_eq!(checked(&rep, &crown8.graph), 2);
    assert_eq!(exact_box(&crown8.graph), 2);
    let crown12 = generators::generate(generators::Family::Crown { n: 12 }).unwrap();
    let rep =
        build_bipartite_box_representation(&crown12.graph, crown12.bipartition.as_ref().unwrap())
            .unwrap();
    assert_eq!(checked(&rep, &crown12.graph), 3);
}

fn criterion_8_chromatic() {
    for n in 1..=6 {
        let report = survey(n, &[Check::Chromatic]).unwrap();
        assert_eq!(report.violations(), 0, "n = {n}");
        for (record, g) in report.records.iter().zip(classes(n)) {
            assert_eq!(record.key, write_graph6(g));
            let c = record.chromatic.as_ref().unwrap();
            assert_eq!(c.chi_exact, brute_chi(g));
            let b = record.box_exact.unwrap();
            assert_eq!(c.box_exact, b);
            // χ ≥ n / (2s + 2) with 2s = n − 2·box
            assert!(c.chi_exact * (n + 2 - 2 * b) >= n, "{g:?}");
        }
    }
    let report = survey(6, &[Check::Chromatic]).unwrap();
    let key = canonical_key(&generators::roberts(6).unwrap()).unwrap();
    let row = report.record(&key).unwrap().chromatic.clone().unwrap();
    assert_eq!((row.box_exact, row.twice_slack, row.chi_exact), (3, 0, 3));
}

fn criterion_9_remark2() {
    for n in 1..=6 {
        let report = survey(n, &[Check::Remark2]).unwrap();
        assert_eq!(report.violations(), 0, "n = {n}");
        for (record, g) in report.records.iter().zip(classes(n)) {
            assert_eq!(record.key, write_graph6(g));
            let m = record.matching.unwrap();
            assert_eq!(m.nu, brute_nu(g));
            assert_eq!(m.nu_complement, brute_nu(&g.complement()));
            assert!(record.box_exact.unwrap() <= (m.nu + 1).min(m.nu_complement));
        }
    }
    let c4 = generators::cycle(4).unwrap();
    let report = survey(4, &[Check::Remark2]).unwrap();
    let row = report.record(&canonical_key(&c4).unwrap()).unwrap();
    let m = row.matching.unwrap();
    assert_eq!((m.nu + 1, m.nu_complement, m.bound), (3, 2, 2));
    assert_eq!(row.box_exact, Some(2));
}

fn criterion_10_properties() {
    // round trips for every construction on every graph up to 7 vertices
    all_graphs(7).par_iter().for_each(|&g| {
        for cover in covers(g) {
            checked(&build_cub_representation(g, &cover).unwrap(), g);
            checked(&build_box_representation(g, &cover).unwrap(), g);
        }
        if let Ok(bip) = g.bipartition() {
            checked(&build_bipartite_box_representation(g, &bip).unwrap(), g);
        }
    });
    // recognition against the event-order oracle, in two labelings
    all_graphs(7).par_iter().enumerate().for_each(|(i, &g)| {
        for h in [g.clone(), shuffled(g, i as u64)] {
            assert_eq!(is_interval(&h).unwrap(), brute_interval(&h), "{h:?}");
            assert_eq!(
                is_unit_interval(&h).unwrap(),
                brute_unit_interval(&h),
                "{h:?}"
            );
        }
    });
    // approximate cover within twice the minimum
    all_graphs(8).par_iter().for_each(|&g| {
        let approx = approx_vertex_cover(g);
        let exact = min_vertex_cover(g).unwrap();
        assert!(approx.is_minimal);
        assert!(approx.len() <= 2 * exact.len(), "{g:?}");
        assert_eq!(exact.len(), brute_min_cover(g));
    });
    // box ≤ cub and box ≤ ⌊n/2⌋
    all_graphs(6).par_iter().for_each(|&g| {
        let b = exact_box(g);
        assert!(b <= exact_cub(g), "{g:?}");
        assert!(b <= g.n() / 2, "{g:?}");
    });
}

fn main() {
    let criteria: [(&str, fn()); 10] = [
        ("star graphs: cub-vc uses ceil(log2(n-1)) dims, exact cub(star(5)) = 2", criterion_1_star_tightness),
        ("cub-vc within t + ceil(log2(n-t)) - 1 for n <= 7; exact cub <= construction for n <= 6", criterion_2_cub_bound),
        ("C4: box-vc gives 2 dims, exact box = 2", criterion_3_c4),
        ("Roberts graphs n = 4, 6, 8: cover n-2, box-vc <= n/2, exact box = n/2", criterion_4_roberts),
        ("box-vc within floor(t/2) + 1 for n <= 7; exact box <= construction", criterion_5_box_bound),
        ("box-bipartite within min(ceil(n1/2), ceil(n2/2)): 200 random + all n <= 7", criterion_6_bipartite),
        ("crown(8): 2 dims and exact box 2; crown(12): 3 dims", criterion_7_crown),
        ("chromatic bound over all n <= 6; Roberts(6) row s = 0, chi = 3", criterion_8_chromatic),
        ("matching bound over all n <= 6; C4 row min(3, 2) = 2", criterion_9_remark2),
        ("JSON round trips, recognition vs event-order oracle, approx cover <= 2x, box <= cub, box <= n/2", criterion_10_properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = panic::catch_unwind(AssertUnwindSafe(run)).is_ok();
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} ({:.1}s): {name}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
