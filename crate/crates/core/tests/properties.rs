use ghw_core::analysis::{
    d2_from_testset, ghw_via_resolution, second_weight_witness, symmetric_difference_lemma, verify_with_profile,
    CodeProfile,
};
use ghw_core::resolution::taylor_pair_minimum;
use ghw_core::{
    betti_table_hochster, reduced_groebner_basis, BinaryMatrix, BitWord, Characteristic, Code, MonomialIdeal,
    OrderKind, TermOrder,
};
use proptest::prelude::*;
use proptest::sample::SizeRange;

/// A full-rank `k × n` generator matrix, `n` in `lens`.
fn code_strategy(lens: std::ops::RangeInclusive<usize>, max_k: usize) -> impl Strategy<Value = Code> {
    lens.prop_flat_map(move |n| {
        let k_max = max_k.min(n);
        (Just(n), 1..=k_max).prop_flat_map(|(n, k)| {
            proptest::collection::vec(0u32..(1 << n), SizeRange::from(k)).prop_filter_map(
                "rank deficient",
                move |rows| {
                    let words: Vec<BitWord> = rows.into_iter().map(|r| BitWord::from_bits(n, r)).collect();
                    let m = BinaryMatrix::new(n, words).ok()?;
                    (m.rank() == k).then(|| Code::from_generator(&m).ok()).flatten()
                },
            )
        })
    })
}

fn order_strategy(n: usize) -> impl Strategy<Value = TermOrder> {
    (any::<bool>(), Just((0..n).collect::<Vec<usize>>()).prop_shuffle()).prop_map(|(deg, perm)| {
        let kind = if deg { OrderKind::Deglex } else { OrderKind::Degrevlex };
        TermOrder::new(kind, perm).unwrap()
    })
}

fn code_and_order(lens: std::ops::RangeInclusive<usize>, max_k: usize) -> impl Strategy<Value = (Code, TermOrder)> {
    code_strategy(lens, max_k).prop_flat_map(|c| {
        let n = c.len();
        (Just(c), order_strategy(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resolution_route_equals_oracle(c in code_strategy(3..=10, 6)) {
        prop_assert_eq!(ghw_via_resolution(&c).unwrap(), c.ghw_hierarchy());
    }

    #[test]
    fn hierarchy_bounds(c in code_strategy(2..=10, 6)) {
        let g = c.ghw_hierarchy();
        prop_assert!(g.check_bounds(c.len(), c.dimension()).is_ok(), "{}", g);
        if c.is_nondegenerate() {
            prop_assert_eq!(g.get(c.dimension()), Some(c.len()));
        }
    }

    #[test]
    fn test_set_first_two_weights((c, o) in code_and_order(3..=10, 6)) {
        let (gb, _) = reduced_groebner_basis(&c, &o).unwrap();
        let ts = gb.test_set();
        let supports = c.minimal_support_codewords();
        prop_assert!(ts.iter().all(|w| supports.binary_search(w).is_ok()));
        let g = c.ghw_hierarchy();
        prop_assert_eq!(ts.iter().map(|w| w.weight()).min(), g.get(1));
        if c.dimension() >= 2 {
            prop_assert_eq!(d2_from_testset(&c, &o).ok(), g.get(2));
        }
        prop_assert!(gb.standard_form_violations().is_empty());
        prop_assert!(gb.check_reduced().is_ok());
    }

    #[test]
    fn test_set_shifts_bound_the_hierarchy((c, o) in code_and_order(3..=9, 6)) {
        let (gb, _) = reduced_groebner_basis(&c, &o).unwrap();
        let m = MonomialIdeal::from_supports(c.len(), gb.test_set()).unwrap();
        let table = betti_table_hochster(&m).unwrap();
        let shifts = table.min_shifts();
        let g = c.ghw_hierarchy();
        prop_assert!(table.projective_dimension() <= c.dimension());
        for (i, &s) in shifts.iter().enumerate() {
            prop_assert!(g.values[i] <= s);
            if i < 2 {
                prop_assert_eq!(g.values[i], s);
            }
        }
        if m.generators().len() >= 2 {
            prop_assert_eq!(Some(taylor_pair_minimum(&m).unwrap()), shifts.get(1).copied());
        }
    }

    #[test]
    fn witness_invariants((c, o) in code_and_order(4..=10, 6)) {
        prop_assume!(c.dimension() >= 2);
        let w = second_weight_witness(&c, &o).unwrap();
        let (gb, _) = reduced_groebner_basis(&c, &o).unwrap();
        prop_assert!(w.satisfies_overlap_bound());
        prop_assert!(gb.has_support(w.i));
        prop_assert!(gb.has_support(w.j));
        prop_assert_eq!(Some((w.i | w.j).weight()), c.ghw_hierarchy().get(2));
    }

    #[test]
    fn leaders_have_minimum_weight((c, o) in code_and_order(2..=9, 5), word in any::<u32>()) {
        let (_, table) = reduced_groebner_basis(&c, &o).unwrap();
        let w = BitWord::from_bits(c.len(), word);
        let leader = table.normal_form(w).unwrap();
        prop_assert!(c.contains(w ^ leader));
        let best = c.codewords().map(|cw| (cw ^ w).weight()).min().unwrap();
        prop_assert_eq!(leader.weight(), best);
        prop_assert_eq!(table.normal_form(leader).unwrap(), leader);
    }

    #[test]
    fn all_proven_checks_pass((c, o) in code_and_order(3..=9, 5)) {
        let profile = CodeProfile::new(c, Characteristic::TWO).unwrap();
        let report = verify_with_profile(&profile, &o, "prop").unwrap();
        prop_assert!(report.ensure_proven().is_ok(), "{:?}", report.failed_proven());
    }

    #[test]
    fn circuits_match_minimal_supports(c in code_strategy(2..=10, 7)) {
        prop_assert_eq!(c.matroid_circuits(), c.minimal_support_codewords());
    }

    #[test]
    fn lemma_holds(n in 1usize..=20, a in any::<u32>(), b in any::<u32>()) {
        let (a, b) = (BitWord::from_bits(n, a), BitWord::from_bits(n, b));
        if let Some(holds) = symmetric_difference_lemma(a, b) {
            prop_assert!(holds);
        }
    }

    #[test]
    fn order_serde_round_trip(o in (1usize..=8).prop_flat_map(order_strategy)) {
        let json = serde_json::to_string(&o).unwrap();
        prop_assert_eq!(serde_json::from_str::<TermOrder>(&json).unwrap(), o);
    }

    #[test]
    fn betti_table_serde_round_trip(c in code_strategy(3..=8, 4)) {
        let t = betti_table_hochster(&MonomialIdeal::from_supports(c.len(), c.minimal_support_codewords()).unwrap()).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<ghw_core::BettiTable>(&json).unwrap(), t.clone());
        prop_assert_eq!(ghw_core::BettiTable::parse_diagram(&t.render()).unwrap(), t);
    }
}
