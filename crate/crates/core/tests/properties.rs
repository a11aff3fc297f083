use pmcover::arrays::{check_core_structure, defect, CoreComponentKind, ThreeArray};
use pmcover::colouring::{
    canonical_type, find_3_edge_colouring, is_3_edge_colourable, kempe_chain, kempe_switch, parity_check, Colour,
    ColourVector, PERMUTATIONS,
};
use pmcover::families::{random_almost_bipartite, random_bridgeless_cubic, random_bridgeless_simple_cubic};
use pmcover::graph::edge_cut;
use pmcover::io::{parse_cmg, parse_graph6, write_cmg, write_graph6};
use pmcover::matching::{
    enumerate_perfect_matchings, has_perfect_matching, pm_avoiding, pm_containing, tutte_certificate,
    DEFAULT_PM_CAP,
};
use pmcover::structure::{almost_bipartite_witness, bipartite_index, colour_almost_bipartite, oddness};
use pmcover::{CubicGraph, Subgraph, Vertex};
use proptest::prelude::*;

fn order(max_half: usize) -> impl Strategy<Value = usize> {
    (2..=max_half).prop_map(|k| 2 * k)
}

fn graph(max_half: usize) -> impl Strategy<Value = CubicGraph> {
    (order(max_half), any::<u64>()).prop_map(|(n, seed)| random_bridgeless_cubic(n, seed).unwrap())
}

fn side_from(bits: u64, n: usize) -> Vec<Vertex> {
    (0..n).filter(|&v| bits >> v & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn plesnik_two_edges_avoidable(g in graph(10), a in any::<usize>(), b in any::<usize>()) {
        let m = g.size();
        let forbidden = [a % m, b % m];
        prop_assert!(pm_avoiding(&g, &forbidden).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn handshake_parity(g in graph(10), bits in any::<u64>()) {
        let side = side_from(bits, g.order());
        prop_assume!(!side.is_empty() && side.len() < g.order());
        let cut = edge_cut(&g, &side).unwrap();
        prop_assert_eq!(cut.len() % 2, side.len() % 2);
    }

    #[test]
    fn cmg_round_trip(g in graph(10)) {
        let back = parse_cmg(&write_cmg(&g)).unwrap();
        prop_assert_eq!(back.edge_list(), g.edge_list());
    }

    #[test]
    fn graph6_round_trip(n in order(10), seed in any::<u64>()) {
        let g = random_bridgeless_simple_cubic(n, seed).unwrap();
        let back = parse_graph6(&write_graph6(&g).unwrap()).unwrap();
        prop_assert_eq!(back.edge_list(), g.edge_list());
    }

    #[test]
    fn tutte_both_directions(g in graph(7), bits in any::<u64>()) {
        let removed = side_from(bits & 0x3f, g.order());
        let h = Subgraph::whole(&g).without_vertices(&removed);
        let pm = has_perfect_matching(&h);
        let cert = tutte_certificate(&h).unwrap();
        prop_assert_eq!(pm.is_none(), cert.is_some());
        if let Some(c) = cert {
            prop_assert!(c.verify(&h));
        }
        if let Some(m) = pm {
            prop_assert!(m.is_perfect_in(&h));
        }
    }

    #[test]
    fn enumeration_agrees_with_prescription(g in graph(8), a in any::<usize>(), b in any::<usize>()) {
        let m = g.size();
        let mut required = vec![a % m, b % m];
        required.sort_unstable();
        required.dedup();
        let all = enumerate_perfect_matchings(&g, DEFAULT_PM_CAP).unwrap();
        let any_contains = all.iter().any(|p| required.iter().all(|&e| p.contains(e)));
        match pm_containing(&g, &required) {
            Ok(found) => {
                prop_assert_eq!(found.is_some(), any_contains);
                if let Some(p) = found {
                    prop_assert!(all.contains(&p));
                }
            }
            Err(_) => prop_assert!(!any_contains),
        }
    }

    #[test]
    fn colourings_are_proper_and_respect_parity(g in graph(10), cuts in prop::collection::vec(any::<u64>(), 20)) {
        if let Some(col) = find_3_edge_colouring(&Subgraph::whole(&g), &[]).unwrap() {
            prop_assert!(col.is_proper(&g));
            for bits in cuts {
                let side = side_from(bits, g.order());
                if side.is_empty() || side.len() == g.order() {
                    continue;
                }
                prop_assert!(parity_check(&col, &edge_cut(&g, &side).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn kempe_switch_is_an_involution(g in graph(10), start in any::<usize>(), other in 0usize..2) {
        let Some(col) = find_3_edge_colouring(&Subgraph::whole(&g), &[]).unwrap() else { return Ok(()) };
        let e = start % g.size();
        let c = col.get(e).unwrap();
        let rest: Vec<Colour> = Colour::ALL.into_iter().filter(|&d| d != c).collect();
        let chain = kempe_chain(&g, &col, e, (c, rest[other])).unwrap();
        let once = kempe_switch(&g, &col, &chain).unwrap();
        prop_assert!(once.is_proper(&g));
        prop_assert_eq!(kempe_switch(&g, &once, &chain).unwrap(), col);
    }

    #[test]
    fn canonical_type_is_permutation_invariant(raw in prop::collection::vec(1u8..=3, 5)) {
        let mut cs: Vec<Colour> = raw.iter().map(|&c| Colour::from_u8(c).unwrap()).collect();
        let x = raw.iter().fold(0, |acc, &c| acc ^ c);
        prop_assume!(x != 0);
        cs.push(Colour::from_u8(x).unwrap());
        let v = ColourVector::new(cs.try_into().unwrap()).unwrap();
        let t = canonical_type(&v);
        for p in PERMUTATIONS {
            prop_assert_eq!(canonical_type(&v.permuted(&p)), t);
        }
    }

    #[test]
    fn phi_chi_duality_and_kirchhoff(g in graph(8), i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let pms = enumerate_perfect_matchings(&g, DEFAULT_PM_CAP).unwrap();
        let p = pms.len();
        let a = ThreeArray::new(&g, [pms[i % p].clone(), pms[j % p].clone(), pms[k % p].clone()]).unwrap();
        let phi = a.phi(&g);
        let chi = a.chi(&g);
        prop_assert!(phi.is_array_colouring(&g));
        prop_assert_eq!(chi.to_phi(), phi.clone());
        prop_assert_eq!(phi.to_chi(), chi.clone());
        prop_assert!(chi.is_flow(&g));
    }

    #[test]
    fn defect_zero_iff_colourable(g in graph(8)) {
        let d = defect(&g, DEFAULT_PM_CAP).unwrap();
        let colourable = is_3_edge_colourable(&g);
        prop_assert_eq!(d.value == 0, colourable);
        if !colourable {
            prop_assert!(d.value >= 3);
        }
        let report = check_core_structure(&g, &d.witness).unwrap();
        for comp in &report.components {
            if let CoreComponentKind::EvenCircuit { length } = comp.kind {
                prop_assert_eq!(length % 2, 0);
            }
        }
    }

    #[test]
    fn bipartite_index_parity_facts(g in graph(7)) {
        let bi = bipartite_index(&g).unwrap();
        prop_assert!(bi.verify(&g));
        prop_assert_eq!(bi.value == 0, g.bipartition().is_some());
        prop_assert_ne!(bi.value, 1);
        prop_assert_eq!(almost_bipartite_witness(&g).is_some(), bi.value == 2);
        prop_assert!(bi.value >= oddness(&g, DEFAULT_PM_CAP).unwrap().value);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn almost_bipartite_graphs_are_colourable(n in (3usize..=12).prop_map(|k| 2 * k), seed in any::<u64>()) {
        let (g, e, f) = random_almost_bipartite(n, seed).unwrap();
        let w = almost_bipartite_witness(&g).unwrap();
        let col = colour_almost_bipartite(&g, &w).unwrap();
        prop_assert!(col.is_proper(&g));
        prop_assert_eq!(col.get(w.e), Some(Colour::One));
        prop_assert_eq!(col.get(w.f), Some(Colour::One));
        let surplus = pmcover::structure::AlmostBipartiteWitness {
            e,
            f,
            in_b: {
                let mut side = Subgraph::whole(&g).without_edges(&[e, f]).bipartition().unwrap();
                if side[g.ends(e).0] {
                    side.iter_mut().for_each(|s| *s = !*s);
                }
                side
            },
        };
        if surplus.validate(&g).is_ok() {
            let col = colour_almost_bipartite(&g, &surplus).unwrap();
            prop_assert_eq!((col.get(e), col.get(f)), (Some(Colour::One), Some(Colour::One)));
        }
    }
}
