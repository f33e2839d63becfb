use std::path::PathBuf;

use capbound_core::graph::{all_pairs_distances, power};
use capbound_core::minorlp::ratio_type_bound;
use capbound_core::oracle::{alpha_k, DEFAULT_BUDGET};
use capbound_core::shannon::{numeric_rank, rank_type_bound, shannon_exhaustive, shannon_greedy, shannon_matrix};
use capbound_core::{Instance, Manifest, Search, Tolerances};

fn manifest() -> Manifest {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    Manifest::load(dir).unwrap()
}

#[test]
fn every_fixture_is_connected_regular_and_walk_regular() {
    let m = manifest();
    assert!(m.entries().len() >= 6);
    let tol = Tolerances::default();
    for e in m.entries().iter().filter(|e| !e.slow) {
        let g = m.graph(&e.name).unwrap();
        assert!(g.is_connected(), "{}", e.name);
        assert!(g.regular_degree().is_some(), "{}", e.name);
        let inst = Instance::from_graph(g, &tol).unwrap();
        assert_eq!(inst.walk_level(), Some(inst.spectrum().d()), "{}", e.name);
    }
}

#[test]
fn coxeter_fixture() {
    let g = manifest().graph("coxeter").unwrap();
    assert_eq!((g.n(), g.edge_count(), g.regular_degree()), (28, 42, Some(3)));
    assert_eq!(all_pairs_distances(&g).diameter(), 4);
    let spec = Instance::from_graph(g, &Tolerances::default()).unwrap().spectrum().clone();
    assert_eq!(spec.mults(), &[1, 8, 6, 7, 6]);
    let want = [3.0, 2.0, 2f64.sqrt() - 1.0, -1.0, -(2f64.sqrt()) - 1.0];
    for (a, b) in spec.values().iter().zip(want) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn shannon_searches_agree_on_fixtures() {
    let m = manifest();
    let tol = Tolerances::default();
    for e in m.entries().iter().filter(|e| !e.slow) {
        let g = m.graph(&e.name).unwrap();
        let inst = Instance::from_graph(g.clone(), &tol).unwrap();
        let spec = inst.spectrum();
        if spec.d() > 8 {
            continue;
        }
        for k in 1..=spec.d() {
            let greedy = shannon_greedy(spec, k).unwrap();
            let exhaustive = shannon_exhaustive(spec, k).unwrap();
            assert_eq!(greedy.rank, exhaustive.rank, "{} k={k}", e.name);
            assert!(!exhaustive.vanishes_at_principal() || greedy.rank == exhaustive.rank);
            let b = shannon_matrix(&greedy, spec, &g);
            assert_eq!(numeric_rank(&b, 1e-10), greedy.rank, "{} k={k}", e.name);
        }
    }
}

#[test]
fn bounds_dominate_alpha_on_fixtures() {
    let m = manifest();
    let tol = Tolerances::default();
    for name in ["petersen", "heawood", "pappus", "desargues", "coxeter", "nauru", "dodecahedron", "f26a"] {
        let g = m.graph(name).unwrap();
        let inst = Instance::from_graph(g.clone(), &tol).unwrap();
        for k in 1..=3 {
            let a = alpha_k(&g, k, DEFAULT_BUDGET).unwrap();
            assert!(!a.timed_out);
            assert!(power(&g, k).unwrap().is_independent(&a.witness));
            let ratio = ratio_type_bound(&inst, k, &tol).unwrap();
            let rank = rank_type_bound(&inst, k, Search::Greedy).unwrap();
            assert!(a.size as u64 <= ratio.bound_int, "{name} k={k}");
            assert!(a.size as u64 <= rank.bound_int, "{name} k={k}");
        }
    }
}
