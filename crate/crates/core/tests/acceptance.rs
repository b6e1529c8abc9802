//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use ghw_core::analysis::{
    counterexample_search, d2_from_testset, ghw_via_resolution, sample_symmetric_difference_lemma,
    second_weight_witness, stanley_reisner_ideal, test_set_ideal, union_testsets, verify_code, SearchConfig,
};
use ghw_core::resolution::{betti_table_hochster_with, HochsterStats};
use ghw_core::{
    betti_table_hochster, reduced_groebner_basis, BettiTable, BitWord, Characteristic, MonomialIdeal, OrderKind,
    TermOrder,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn expect_table(what: &str, got: &BettiTable, literal: &str) {
    let want = diagram(literal);
    assert_eq!(got, &want, "{what} Betti diagram\n got:\n{got}\n want:\n{want}");
}

fn hochster(ideal: &MonomialIdeal) -> (BettiTable, HochsterStats) {
    betti_table_hochster_with(ideal, Characteristic::TWO).unwrap()
}

fn criterion_1() {
    let c = load("toy_6_3.txt");
    assert_eq!(c.minimal_support_codewords(), words(&["100001", "100110", "011010", "000111", "111100", "011101"]));
    expect_table("toy I_Δ", &betti_table_hochster(&stanley_reisner_ideal(&c).unwrap()).unwrap(), TOY_SR);
    let o = TermOrder::natural(OrderKind::Degrevlex, 6);
    assert_eq!(c.ghw_hierarchy().values, vec![2, 4, 6]);
    assert_eq!(ghw_via_resolution(&c).unwrap().values, vec![2, 4, 6]);
    let m = betti_table_hochster(&test_set_ideal(&c, &o).unwrap()).unwrap();
    assert_eq!(m.min_shifts(), vec![2, 4, 6]);
}

fn criterion_2() {
    let c = load("toy_6_3.txt");
    let o = TermOrder::natural(OrderKind::Degrevlex, 6);
    let (gb, _) = reduced_groebner_basis(&c, &o).unwrap();
    assert_eq!(gb.total_len(), 14);
    assert_eq!(gb.test_set(), words(&["100001", "011010", "000111", "011101"]));
    let m = betti_table_hochster(&test_set_ideal(&c, &o).unwrap()).unwrap();
    let alternating: i64 =
        m.row_sums().iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    println!("    computed R/M: β_1 = {}, alternating sum {alternating}", m.row_sums()[1]);
    expect_table("toy R/M", &m, TOY_TESTSET);
}

fn criterion_3() {
    let c = load("code_14_9.txt");
    let ideal = stanley_reisner_ideal(&c).unwrap();
    assert_eq!(ideal.generators().len(), 147);
    let (sr, stats) = hochster(&ideal);
    assert_eq!(stats.euler_violations, 0);
    expect_table("[14,9] I_Δ", &sr, CODE_14_9_SR);
    let ghw = vec![2, 4, 6, 7, 9, 10, 12, 13, 14];
    assert_eq!(sr.min_shifts(), ghw);
    assert_eq!(c.ghw_hierarchy().values, ghw);
    // The order is stated as deglex; both kinds are reported, only deglex is
    // asserted.
    let mut results = Vec::new();
    for kind in [OrderKind::Deglex, OrderKind::Degrevlex] {
        let o = TermOrder::natural(kind, 14);
        let (gb, _) = reduced_groebner_basis(&c, &o).unwrap();
        let (m, stats) = hochster(&MonomialIdeal::from_supports(14, gb.test_set()).unwrap());
        assert_eq!(stats.euler_violations, 0);
        let matches = m == diagram(CODE_14_9_TESTSET);
        println!(
            "    {kind} x1 > ... > x14: test set {} elements, R/M diagram {}, shifts {:?}",
            gb.test_set().len(),
            if matches { "matches" } else { "differs" },
            m.min_shifts()
        );
        results.push((gb.test_set().len(), m));
    }
    let (size, m) = &results[0];
    assert_eq!(m.min_shifts(), ghw);
    assert_eq!(*size, 24, "deglex test set size");
    expect_table("[14,9] R/M", m, CODE_14_9_TESTSET);
}

fn criterion_4() {
    let c = load("counterexample_10_7.txt");
    let ideal = stanley_reisner_ideal(&c).unwrap();
    assert_eq!(ideal.generators().len(), 42);
    expect_table("[10,7] I_Δ", &betti_table_hochster(&ideal).unwrap(), CODE_10_7_SR);
    let o = TermOrder::natural(OrderKind::Degrevlex, 10);
    let report = verify_code(&c, &o).unwrap();
    assert_eq!(report.test_set.len(), 10);
    expect_table("[10,7] R/M", &report.testset_betti, CODE_10_7_TESTSET);
    assert_eq!(report.ghw.values, vec![2, 4, 5, 6, 8, 9, 10]);
    assert_eq!(report.minshift_testset, vec![2, 4, 5, 7, 8, 9]);
    assert_eq!((report.pd_testset, report.k), (6, 7));
    assert_eq!(report.first_mismatch(), Some(4));
    assert!(report.check("testset_shifts_exact_low").unwrap().passed);
}

fn criterion_5() {
    let c = load("hamming_7_4.txt");
    let supports = c.minimal_support_codewords();
    assert_eq!(supports.len(), 14);
    assert_eq!(supports.iter().filter(|w| w.weight() == 3).count(), 7);
    assert_eq!(supports.iter().filter(|w| w.weight() == 4).count(), 7);
    assert_eq!(c.ghw_hierarchy().values, vec![3, 5, 6, 7]);
    let orders = TermOrder::all(7);
    assert_eq!(orders.len(), 10080);
    let union = union_testsets(&c, &orders).unwrap();
    let weight3: Vec<BitWord> = supports.iter().copied().filter(|w| w.weight() == 3).collect();
    assert_eq!(union.generators(), weight3.as_slice());
    let table = betti_table_hochster(&union).unwrap();
    expect_table("Hamming union", &table, HAMMING_UNION);
    assert_eq!(table.min_shifts(), vec![3, 5, 6, 7]);
}

fn criterion_6() {
    let c = load("worked_6_3.txt");
    let cases = [
        (TermOrder::natural(OrderKind::Degrevlex, 6), ("001011", "010101"), ["x5x6 - x3", "x4x6 - x2"]),
        (TermOrder::reversed(OrderKind::Degrevlex, 6), ("111000", "100110"), ["x1x2 - x3", "x1x4 - x5"]),
    ];
    for (o, (m1, m2), named) in cases {
        let (gb, _) = reduced_groebner_basis(&c, &o).unwrap();
        assert_eq!(gb.total_len(), 20, "{o}");
        let rendered: Vec<String> = gb.binomials().iter().map(ToString::to_string).collect();
        for b in named {
            assert!(rendered.iter().any(|r| r == b), "{b} missing under {o}");
        }
        let w = second_weight_witness(&c, &o).unwrap();
        assert_eq!((w.m1.to_string(), w.m2.to_string()), (m1.to_string(), m2.to_string()));
        assert!(gb.has_support(w.i) && gb.has_support(w.j));
        assert_eq!((w.i | w.j).weight(), 5);
        assert_eq!(d2_from_testset(&c, &o).unwrap(), 5);
    }
}

fn criterion_7() {
    let shapes = [(6, 2), (6, 3), (7, 3), (7, 4), (8, 3), (8, 4), (8, 5), (9, 4), (9, 6), (10, 4), (10, 5), (10, 6)];
    let mut examined = 0;
    let mut runs = 0;
    for (idx, &(n, k)) in shapes.iter().enumerate() {
        let config = SearchConfig {
            n,
            k,
            trials: 36,
            seed: 0xacce_0000 + idx as u64,
            orders: vec![],
            random_orders: 3,
            fixtures: vec![],
        };
        // Proven failures surface as errors.
        let report = counterexample_search(&config).unwrap_or_else(|e| panic!("[{n},{k}]: {e}"));
        examined += report.codes_examined;
        runs += report.runs;
    }
    assert!(examined >= 200, "only {examined} codes examined");
    assert!(runs >= 3 * examined);
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e33a);
    for n in [6, 10, 16, 24] {
        let (tested, violations) = sample_symmetric_difference_lemma(n, 10_000, &mut rng);
        assert_eq!((tested, violations), (10_000, 0), "lemma at n = {n}");
    }
    println!("    {examined} codes, {runs} (code, order) runs, lemma on 4 x 10^4 pairs");
}

fn main() {
    let criteria: [(&str, fn(), Duration); 7] = [
        ("1 toy [6,3] minimal supports, I_Δ diagram, GHW by three routes", criterion_1, Duration::from_secs(1)),
        ("2 toy [6,3] Gröbner basis, test set, R/M diagram", criterion_2, Duration::from_secs(1)),
        ("3 [14,9] I_Δ and R/M diagrams, GHW, test set", criterion_3, Duration::from_secs(15 * 60)),
        ("4 [10,7] counterexample diagrams and mismatch at i = 4", criterion_4, Duration::from_secs(120)),
        ("5 [7,4] Hamming union over all orders", criterion_5, Duration::from_secs(300)),
        ("6 worked [6,3] bases, witnesses, named binomials", criterion_6, Duration::from_secs(1)),
        ("7 seeded property suite", criterion_7, Duration::from_secs(600)),
    ];
    panic::set_hook(Box::new(|info| println!("    {info}")));
    let mut failures = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(()) if elapsed <= limit => "PASS",
            Ok(()) => "FAIL (time limit)",
            Err(_) => "FAIL",
        };
        if verdict != "PASS" {
            failures += 1;
        }
        println!("criterion {name}: {verdict} [{:.2?} / limit {:?}]", elapsed, limit);
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
