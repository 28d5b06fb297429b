use proptest::prelude::*;
use wrdlab::exact::{gamma_exact, gamma_r_exact};
use wrdlab::generate::random_graph;
use wrdlab::{
    is_rdf, is_wrd, undefended_vertices, verify_wrd, Graph, Labeling, VertexSet, WrdVerdict,
};

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

fn all_labelings(n: usize) -> impl Iterator<Item = Labeling> {
    (0..3usize.pow(n as u32)).map(move |mut code| {
        let values = (0..n)
            .map(|_| {
                let d = (code % 3) as u8;
                code /= 3;
                d
            })
            .collect();
        Labeling::new(values).unwrap()
    })
}

/// Straight from the definition, with no shortcuts.
fn literal_wrd(g: &Graph, f: &[u8]) -> bool {
    let stranded = |h: &[u8]| {
        g.vertices()
            .any(|w| h[w] == 0 && g.neighbors(w).iter().all(|&x| h[x] == 0))
    };
    if stranded(f) {
        return false;
    }
    g.vertices().filter(|&u| f[u] == 0).all(|u| {
        g.neighbors(u).iter().any(|&v| {
            if f[v] == 0 {
                return false;
            }
            let mut h = f.to_vec();
            h[u] = 1;
            h[v] -= 1;
            !stranded(&h)
        })
    })
}

#[test]
fn exhaustive_semantics_up_to_five_vertices() {
    for n in 1..=5 {
        let labelings: Vec<Labeling> = all_labelings(n).collect();
        for g in all_graphs(n) {
            for f in &labelings {
                let verdict = verify_wrd(&g, f).unwrap();
                assert_eq!(verdict.is_wrd(), literal_wrd(&g, f.values()), "{g:?} {f:?}");
                if is_rdf(&g, f).unwrap() {
                    assert!(verdict.is_wrd(), "RDF not WRD: {g:?} {f:?}");
                }
                match &verdict {
                    WrdVerdict::Wrd(plan) => {
                        for m in plan.moves() {
                            let after = f.apply_move(&g, m.defender, m.attacked).unwrap();
                            assert!(undefended_vertices(&g, &after).unwrap().is_empty());
                        }
                        // raising any single label keeps the function WRD
                        for v in g.vertices().filter(|&v| f.get(v) < 2) {
                            let mut up = f.clone();
                            up.set(v, f.get(v) + 1);
                            assert!(is_wrd(&g, &up).unwrap(), "{g:?} {f:?} +{v}");
                        }
                    }
                    WrdVerdict::Undefended(s) => assert!(!s.is_empty()),
                    WrdVerdict::Indefensible { attacked } => assert_eq!(f.get(*attacked), 0),
                }
            }
        }
    }
}

#[test]
fn bound_chain_and_unit_value() {
    for seed in 0..300u64 {
        let n = 1 + seed as usize % 12;
        let g = random_graph(n, 0.1 + 0.8 * (seed % 9) as f64 / 8.0, seed);
        let (gamma, d) = gamma_exact(&g, &Default::default()).unwrap();
        let (gamma_r, f) = gamma_r_exact(&g, &Default::default()).unwrap();
        assert!(g.is_dominating(&d) && d.len() == gamma);
        assert_eq!(f.weight(), gamma_r);
        assert!(gamma <= gamma_r && gamma_r <= 2 * gamma, "seed {seed}");
        assert_eq!(gamma_r == 1, g.is_complete(), "seed {seed}");
    }
}

#[test]
fn labeling_text_errors() {
    assert!(Labeling::from_text("0 1 3").is_err());
    assert!(Labeling::from_text("0 x").is_err());
    let f = Labeling::from_text("2 0 1\n").unwrap();
    assert_eq!(Labeling::from_text(&f.to_text()).unwrap(), f);
    assert!(verify_wrd(&Graph::path(2), &f).is_err());
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..14).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..n * 3).prop_map(move |pairs| {
            Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph()) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.m() + g.complement().m(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn private_neighbors_lie_in_the_closed_neighborhood(g in arb_graph(), bits in any::<u16>()) {
        let s = VertexSet::from_iter(g.n(), g.vertices().filter(|&v| bits >> v & 1 == 1));
        for v in s.iter() {
            let pn = g.private_neighbors(v, &s).unwrap();
            prop_assert!(pn.is_subset(&g.closed_neighborhood(v)));
        }
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph()) {
        let parts = g.connected_components();
        let mut all = VertexSet::new(g.n());
        for p in &parts {
            prop_assert!(p.is_disjoint(&all));
            all.union_with(p);
            for (u, v) in g.edges() {
                prop_assert_eq!(p.contains(u), p.contains(v));
            }
        }
        prop_assert_eq!(all.len(), g.n());
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        prop_assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
