//! Randomized property tests for the exact pipeline.

use proptest::prelude::*;

use chromaloc::{chromatic, graph6, spectra, SimpleGraph};

/// Strategy: a graph on 1..=7 vertices from a random edge mask.
fn small_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=7, any::<u32>()).prop_map(|(n, bits)| {
        let mut pairs = Vec::new();
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits >> (idx % 32) & 1 == 1 {
                    pairs.push((u, v));
                }
                idx += 1;
            }
        }
        SimpleGraph::from_edge_list(n, &pairs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The two chromatic oracles agree exactly.
    #[test]
    fn prop_dc_equals_expansion(g in small_graph()) {
        let a = chromatic::chromatic_dc(&g).unwrap();
        let b = chromatic::chromatic_expansion(&g).unwrap();
        prop_assert_eq!(a, b);
    }

    /// Deletion-contraction identity on an arbitrary edge.
    #[test]
    fn prop_deletion_contraction_identity(g in small_graph(), pick in any::<u32>()) {
        if g.m() == 0 {
            return Ok(());
        }
        let e = g.edges()[pick as usize % g.m()];
        let full = chromatic::chromatic_dc(&g).unwrap();
        let deleted = chromatic::chromatic_dc(&g.delete_edge(e)).unwrap();
        let contracted = chromatic::chromatic_dc(&g.contract_edge(e)).unwrap();
        prop_assert_eq!(full, &deleted - &contracted);
    }

    /// graph6 round trip preserves the graph.
    #[test]
    fn prop_graph6_round_trip(g in small_graph()) {
        let code = graph6::emit_graph6(&g);
        let back = graph6::parse_graph6(&code).unwrap();
        prop_assert_eq!(g.n(), back.n());
        prop_assert_eq!(g.edges(), back.edges());
    }

    /// Evaluating the polynomial at small integers counts proper colorings.
    #[test]
    fn prop_evaluation_counts_colorings(g in small_graph(), q in 0u32..5) {
        let p = chromatic::chromatic_dc(&g).unwrap();
        let direct = chromatic::count_colorings(&g, q).unwrap();
        prop_assert_eq!(p.eval_bigint(&q.into()), direct);
    }

    /// Every computed chromatic root lies in the degree disc.
    #[test]
    fn prop_roots_in_degree_disc(g in small_graph()) {
        if g.m() == 0 {
            return Ok(());
        }
        let p = chromatic::chromatic_dc(&g).unwrap();
        let measure = spectra::find_roots(&p, spectra::DEFAULT_ROOT_TOL).unwrap();
        let disc = spectra::SokalDisc::new(g.max_degree());
        prop_assert!(spectra::in_disc(&measure, &disc));
    }
}
