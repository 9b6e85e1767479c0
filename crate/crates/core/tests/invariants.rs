use proptest::prelude::*;

use tubings::catalog;
use tubings::coxeter::{CoxeterGroup, CoxeterSystem, GroupLimits, TiledComplex};
use tubings::graph::{classify_tubes, enumerate_tubes, is_tubing, reconnected_complement, Graph};
use tubings::lattice::{enumerate_tubings, face_poset, maximal_tubings};
use tubings::promotion::build_by_promotion;

fn connected_graph(max_nodes: usize) -> impl Strategy<Value = Graph> {
    (1..=max_nodes)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let k = pairs.len();
            (Just(n), Just(pairs), proptest::collection::vec(any::<bool>(), k))
        })
        .prop_filter_map("connected", |(n, pairs, keep)| {
            let edges: Vec<_> = pairs.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
            Graph::new(n, &edges).ok().filter(Graph::is_connected)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compatibility_is_symmetric(g in connected_graph(6)) {
        let tubes = enumerate_tubes(&g);
        for &a in &tubes {
            for &b in tubes.iter().filter(|&&b| b != a) {
                let ab = classify_tubes(&g, a, b).unwrap().is_compatible();
                let ba = classify_tubes(&g, b, a).unwrap().is_compatible();
                prop_assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn lattice_is_simple_and_graded(g in connected_graph(6)) {
        let n = g.node_count();
        let lat = face_poset(&g).unwrap();
        prop_assert!(lat.to_poset().is_graded());
        for t in maximal_tubings(&g).unwrap() {
            prop_assert_eq!(t.len(), n - 1);
        }
        // every vertex lies on n - 1 edges
        let poset = lat.to_poset();
        for (i, &d) in lat.dims().iter().enumerate() {
            if d == 0 && n > 1 {
                prop_assert_eq!(poset.upper_covers(i).len(), n - 1);
            }
        }
        for t in enumerate_tubings(&g).unwrap() {
            prop_assert!(is_tubing(&g, t.tubes()).unwrap());
        }
    }

    #[test]
    fn promotion_matches_direct(g in connected_graph(5)) {
        prop_assert_eq!(build_by_promotion(&g).unwrap(), face_poset(&g).unwrap());
    }

    #[test]
    fn reconnected_complements_are_connected(g in connected_graph(7)) {
        for t in enumerate_tubes(&g) {
            let c = reconnected_complement(&g, t).unwrap();
            prop_assert!(c.graph.is_connected());
            prop_assert_eq!(c.graph.node_count(), g.node_count() - t.len());
        }
    }
}

#[test]
fn neighbor_is_a_fixed_point_free_involution() {
    for name in ["A3", "B3", "H3", "A4", "D4", "I2:5"] {
        let w = CoxeterGroup::enumerate(&CoxeterSystem::parse(name).unwrap(), GroupLimits::default()).unwrap();
        for t in enumerate_tubes(&w.graph()) {
            for el in w.elements() {
                let x = w.neighbor(el, t).unwrap();
                assert_ne!(x, el);
                assert_eq!(w.neighbor(x, t).unwrap(), el);
            }
        }
    }
}

#[test]
fn rank_four_complexes_are_closed_three_manifolds() {
    for name in ["B4", "D4", "F4"] {
        let c = TiledComplex::build_with(&CoxeterSystem::parse(name).unwrap(), GroupLimits::default()).unwrap();
        let report = c.verify();
        assert!(report.ok(), "{name}: {:?}", report.failures);
        assert_eq!(report.top_cells, c.group().order());
        assert_eq!(c.euler_characteristic(), 0, "{name} {:?}", c.counts());
    }
}

#[test]
fn rank_three_divisors_match_blown_up_points() {
    for name in ["A3", "B3", "H3"] {
        let c = TiledComplex::build_with(&CoxeterSystem::parse(name).unwrap(), GroupLimits::default()).unwrap();
        let comps = c.exceptional_divisors().unwrap();
        let points = tubings::coxeter::blown_up_points(c.group()).unwrap();
        assert_eq!(comps.len(), points, "{name}");
        // two blow-up edges per pentagon, each shared by two chambers
        let edges: usize = comps.iter().map(|d| d.edges.len()).sum();
        assert_eq!(edges, c.group().order(), "{name}");
    }
}

#[test]
fn catalog_shapes() {
    assert_eq!(face_poset(&catalog::star(3).unwrap()).unwrap().f_vector(), vec![16, 24, 10, 1]);
    assert_eq!(face_poset(&catalog::cycle(4).unwrap()).unwrap().f_vector(), vec![20, 30, 12, 1]);
}
