//! Witness constructions, checked with the reference Mostar oracle.

mod common;

use common::*;
use mostar_core::{
    canonical_certificate, chemical_witness, cycle_even_witness, decode_graph6, layered_even, mostar_index,
    structural_profile, three_layer, three_layer_graph, tree_witness, witness, Error, Family, Graph, LevelSpec,
    WitnessFamily, WitnessRecord,
};

#[test]
fn every_target_up_to_2000_is_certified() {
    assert_eq!(witness(1), Err(Error::NotRealizable(1)));
    for p in (0..=2000u64).filter(|&p| p != 1) {
        let w = witness(p).unwrap();
        assert_eq!((w.target, w.certified_mo), (p, p));
        assert!(w.graph.is_connected());
        if p >= 6 {
            assert_eq!(w.graph.order() as u64, (p + 3).div_ceil(2), "p={p}");
        }
    }
}

#[test]
fn small_witnesses_agree_with_oracle() {
    for p in (0..=150u64).filter(|&p| p != 1) {
        let w = witness(p).unwrap();
        assert_eq!(mostar_oracle(&w.graph), p, "p={p}");
    }
}

#[test]
fn records_round_trip_through_graph6() {
    for p in [0u64, 2, 3, 5, 6, 7, 9, 200, 201, 203] {
        let rec = witness(p).unwrap().record();
        let g = decode_graph6(&rec.graph6).unwrap();
        assert_eq!(g.order(), rec.order);
        assert_eq!(mostar_index(&g).unwrap(), p);
        assert_eq!(rec.tsv_line().split('\t').count(), WitnessRecord::TSV_HEADER.split('\t').count());
    }
}

#[test]
fn tree_witnesses_are_chemical_trees() {
    for p in (0..=10000u64).step_by(2) {
        let w = tree_witness(p).unwrap();
        let prof = structural_profile(&w.graph);
        assert!(prof.is_tree && prof.max_degree <= 3, "p={p}");
        assert_eq!(w.certified_mo, p);
        assert!(matches!(w.family, WitnessFamily::TreePath | WitnessFamily::TreeStarlike));
    }
    for p in (1..=10001u64).step_by(2) {
        assert_eq!(tree_witness(p), Err(Error::OddTarget(p)));
    }
    for p in (0..=200u64).step_by(2) {
        assert_eq!(mostar_oracle(&tree_witness(p).unwrap().graph), p);
    }
}

#[test]
fn chemical_witnesses_have_degree_at_most_four() {
    assert_eq!(chemical_witness(1), Err(Error::NotRealizable(1)));
    assert_eq!(chemical_witness(5), Err(Error::Unknown(5)));
    for p in (0..=600u64).filter(|&p| p != 1 && p != 5) {
        let w = chemical_witness(p).unwrap();
        assert!(w.graph.max_degree() <= 4, "p={p}");
        assert_eq!(w.certified_mo, p);
    }
}

#[test]
fn cycle_based_even_witnesses() {
    let w = cycle_even_witness(10).unwrap();
    assert_eq!((w.family, w.graph.order()), (WitnessFamily::OddCycleTwoPendants, 5));
    for p in (4..=400u64).step_by(2) {
        match cycle_even_witness(p) {
            Ok(w) => {
                assert_eq!(mostar_oracle(&w.graph), p);
                assert!(w.graph.max_degree() <= 4);
            }
            // 6 is the only even target without a cycle-based form
            Err(Error::BadParams(_)) => assert_eq!(p, 6),
            Err(e) => panic!("p={p}: {e}"),
        }
    }
}

#[test]
fn three_layer_certifies_every_target() {
    assert!(matches!(three_layer(2), Err(Error::BadParams(_))));
    for p in 3..=40 {
        let w = three_layer(p).unwrap();
        assert_eq!(w.graph.order(), 3 * p);
        assert_eq!(mostar_oracle(&w.graph), p as u64);
    }
    let prof = structural_profile(&three_layer_graph(3).unwrap());
    assert!(prof.is_two_connected && prof.is_two_edge_connected && prof.has_triangle);
    assert_eq!((prof.min_degree, prof.max_degree), (3, 4));
}

#[test]
fn layered_even_is_independent_of_k() {
    for m in 0..=8 {
        for k in 1..=4 {
            let spec = LevelSpec::new(m, k).unwrap();
            assert!(spec.is_valid());
            let w = layered_even(m, k).unwrap();
            assert_eq!(w.graph.order(), spec.order());
            assert_eq!(mostar_oracle(&w.graph), 2 * m as u64, "m={m} k={k}");
        }
    }
    for k in 1..=4 {
        let c = Family::Cycle(4 * k + 4).build().unwrap();
        let g = layered_even(0, k).unwrap().graph;
        assert_eq!(canonical_certificate(&g).unwrap(), canonical_certificate(&c).unwrap());
    }
    assert!(LevelSpec::new(3, 0).is_err());
}

#[test]
fn closed_forms_for_families() {
    for n in 2..=30u64 {
        let un = n as usize;
        assert_eq!(mostar_index(&Family::Path(un).build().unwrap()).unwrap(), (n - 1) * (n - 1) / 2);
        assert_eq!(mostar_index(&Family::Star(un).build().unwrap()).unwrap(), (n - 1) * (n - 2));
        assert_eq!(mostar_index(&Family::Complete(un).build().unwrap()).unwrap(), 0);
    }
    for a in 1..=7u64 {
        for b in 1..=7u64 {
            let (ua, ub) = (a as usize, b as usize);
            let split = Family::Split(ua, ub).build().unwrap();
            assert_eq!(mostar_oracle(&split), a * b * (b - 1));
            assert_eq!(mostar_index(&split).unwrap(), a * b * (b - 1));
            let kab = Family::CompleteBipartite(ua, ub).build().unwrap();
            assert_eq!(mostar_index(&kab).unwrap(), a * b * a.abs_diff(b));
        }
    }
    for n in 4..=20usize {
        // arms k and n-2-k swap for larger k, giving the same trees
        for k in 1..=(n - 2) / 2 {
            let g = mostar_core::starlike(n, &[1, k, n - 2 - k]).unwrap();
            let n = n as u64;
            assert_eq!(mostar_index(&g).unwrap(), (n - 1) * (n - 1) / 2 + 2 * k as u64);
        }
    }
}

#[test]
fn oversized_requests_are_rejected() {
    // the even construction for this target needs more than 4096 vertices
    assert!(matches!(witness(10_000), Err(Error::OutOfRange { .. })));
    assert!(matches!(Graph::empty(5000), Err(Error::OutOfRange { .. })));
}
