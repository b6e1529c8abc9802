//! Cross-checks between the three routes to the weight hierarchy, the
//! second-weight witness construction, and randomized searches over codes and
//! orders.
//!
//! Checks come in two kinds. [`CheckKind::Proven`] checks are theorems: a
//! failure means a bug in this crate and [`VerificationReport::ensure_proven`]
//! turns it into an error. [`CheckKind::Open`] checks record evidence about
//! open questions and never abort.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{BinaryMatrix, BitWord};
use crate::code::{Code, GhwSequence};
use crate::error::{Error, Result};
use crate::groebner::reduced_groebner_basis;
use crate::order::TermOrder;
use crate::resolution::{betti_table_hochster_with, BettiTable, Characteristic, HochsterStats, MonomialIdeal};

/// Largest length for which the union of test sets runs over every order by
/// default.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 7;

/// Stanley–Reisner ideal of the code's matroid, generated by the supports of
/// the minimal-support codewords.
pub fn stanley_reisner_ideal(code: &Code) -> Result<MonomialIdeal> {
    MonomialIdeal::from_supports(code.len(), code.minimal_support_codewords())
}

/// Weight hierarchy read off the minimal shifts of the Stanley–Reisner Betti
/// table.
pub fn ghw_via_resolution(code: &Code) -> Result<GhwSequence> {
    let table = crate::resolution::betti_table_hochster(&stanley_reisner_ideal(code)?)?;
    Ok(GhwSequence::new(table.min_shifts()))
}

/// Monomial ideal generated by the supports of a test set.
pub fn test_set_ideal(code: &Code, order: &TermOrder) -> Result<MonomialIdeal> {
    let (gb, _) = reduced_groebner_basis(code, order)?;
    MonomialIdeal::from_supports(code.len(), gb.test_set())
}

/// The codewords `m1`, `m2` spanning a minimum-support 2-dimensional subcode,
/// chosen ≺-minimally, and their supports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub m1: BitWord,
    pub m2: BitWord,
    /// `supp(m1)`.
    pub i: BitWord,
    /// `supp(m2)`.
    pub j: BitWord,
    pub order: TermOrder,
}

impl WitnessPair {
    /// `|I ∩ J| <= |I|/2 <= |J|/2`, in integers.
    #[must_use]
    pub fn satisfies_overlap_bound(&self) -> bool {
        let inter = (self.i & self.j).weight();
        2 * inter <= self.i.weight() && self.i.weight() <= self.j.weight()
    }
}

/// Builds the witness pair: `m1` is the ≺-least codeword lying in some
/// 2-dimensional subcode of support size `d_2`, and `m2` the ≺-least partner
/// of `m1` reaching that size. Codewords are compared through their support
/// monomials.
pub fn second_weight_witness(code: &Code, order: &TermOrder) -> Result<WitnessPair> {
    let k = code.dimension();
    if k < 2 {
        return Err(Error::DimensionTooSmall { k });
    }
    let d2 = code.ghw_bruteforce(2);
    let words: Vec<BitWord> = code.codewords().filter(|w| !w.is_zero()).collect();
    let partners = |m: BitWord| words.iter().copied().filter(move |&p| p != m && (m | p).weight() == d2);
    let m1 = words
        .iter()
        .copied()
        .filter(|&m| partners(m).next().is_some())
        .min_by_key(|&m| order.key(m))
        .expect("d_2 is attained by some pair");
    let m2 = partners(m1).min_by_key(|&m| order.key(m)).expect("m1 has a partner");
    Ok(WitnessPair { m1, m2, i: m1, j: m2, order: order.clone() })
}

/// `min |supp(a) ∪ supp(b)|` over unordered pairs of distinct test-set words.
pub fn d2_from_testset(code: &Code, order: &TermOrder) -> Result<usize> {
    let (gb, _) = reduced_groebner_basis(code, order)?;
    pair_union_minimum(&gb.test_set())
}

fn pair_union_minimum(words: &[BitWord]) -> Result<usize> {
    if words.len() < 2 {
        return Err(Error::TooFewGenerators { found: words.len() });
    }
    Ok(words
        .iter()
        .enumerate()
        .flat_map(|(a, &wa)| words[a + 1..].iter().map(move |&wb| (wa | wb).weight()))
        .min()
        .expect("at least one pair"))
}

/// The three conclusions of the symmetric-difference lemma for `A`, `B` with
/// `|A ∩ B| > |A|/2`. Returns `None` when the hypothesis fails.
#[must_use]
pub fn symmetric_difference_lemma(a: BitWord, b: BitWord) -> Option<bool> {
    if 2 * (a & b).weight() <= a.weight() {
        return None;
    }
    let c = a ^ b;
    Some((a | b) == (a | c) && 2 * (a & c).weight() < a.weight() && c.weight() < b.weight())
}

/// Checks the lemma on `samples` random pairs of subsets of `[n]` meeting its
/// hypothesis. Returns `(tested, violations)`.
pub fn sample_symmetric_difference_lemma<R: Rng + ?Sized>(n: usize, samples: usize, rng: &mut R) -> (usize, usize) {
    let (mut tested, mut violations) = (0, 0);
    let mut attempts = 0usize;
    while tested < samples && attempts < samples.saturating_mul(64) {
        attempts += 1;
        let a = BitWord::from_bits(n, rng.gen());
        let b = BitWord::from_bits(n, rng.gen());
        if let Some(holds) = symmetric_difference_lemma(a, b) {
            tested += 1;
            violations += usize::from(!holds);
        }
    }
    (tested, violations)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// A theorem; failure is a bug.
    Proven,
    /// Evidence about an open question or a refuted conjecture.
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
}

/// Order-independent data for one code: the oracle hierarchy, minimal
/// supports and the Stanley–Reisner Betti table.
#[derive(Clone, Debug)]
pub struct CodeProfile {
    pub code: Code,
    pub ghw: GhwSequence,
    pub minimal_supports: Vec<BitWord>,
    pub stanley_reisner: BettiTable,
    pub stanley_reisner_stats: HochsterStats,
    pub characteristic: Characteristic,
}

impl CodeProfile {
    pub fn new(code: Code, characteristic: Characteristic) -> Result<Self> {
        let ghw = code.ghw_hierarchy();
        let minimal_supports = code.minimal_support_codewords();
        let ideal = MonomialIdeal::from_supports(code.len(), minimal_supports.iter().copied())?;
        let (stanley_reisner, stanley_reisner_stats) = betti_table_hochster_with(&ideal, characteristic)?;
        Ok(Self { code, ghw, minimal_supports, stanley_reisner, stanley_reisner_stats, characteristic })
    }
}

/// Everything [`verify_code`] learned about one code under one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub code_id: String,
    pub n: usize,
    pub k: usize,
    pub order: TermOrder,
    pub ghw: GhwSequence,
    pub minshift_full: Vec<usize>,
    pub pd_full: usize,
    pub minshift_testset: Vec<usize>,
    pub pd_testset: usize,
    pub basis_size: usize,
    pub test_set: Vec<BitWord>,
    pub testset_betti: BettiTable,
    pub witness: Option<WitnessPair>,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    #[must_use]
    pub fn failed_proven(&self) -> Vec<&CheckOutcome> {
        self.checks.iter().filter(|c| c.kind == CheckKind::Proven && !c.passed).collect()
    }

    /// Errors on the first failed proven check.
    pub fn ensure_proven(&self) -> Result<()> {
        match self.failed_proven().first() {
            Some(c) => Err(Error::ProvenViolation {
                check: c.name.clone(),
                detail: format!("{} [code {}, order {}]", c.detail, self.code_id, self.order),
            }),
            None => Ok(()),
        }
    }

    /// Whether the test-set minimal shifts reproduce the whole hierarchy.
    #[must_use]
    pub fn testset_matches_ghw(&self) -> bool {
        self.minshift_testset == self.ghw.values
    }

    /// First 1-based index where the test-set shifts differ from the
    /// hierarchy (a missing shift counts as different).
    #[must_use]
    pub fn first_mismatch(&self) -> Option<usize> {
        (0..self.ghw.len()).find(|&i| self.minshift_testset.get(i) != self.ghw.values.get(i)).map(|i| i + 1)
    }

    #[must_use]
    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Checks(Vec<CheckOutcome>);

impl Checks {
    fn push(&mut self, name: &str, kind: CheckKind, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckOutcome { name: name.into(), kind, passed, detail: detail.into() });
    }

    fn proven(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.push(name, CheckKind::Proven, passed, detail);
    }

    fn open(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.push(name, CheckKind::Open, passed, detail);
    }
}

fn join(words: &[BitWord]) -> String {
    words.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Number of random set pairs used for the sampled lemma check per report.
pub const LEMMA_SAMPLES: usize = 256;

/// Runs every check for one order against a precomputed profile. Proven
/// failures are recorded in the report, not raised.
pub fn verify_with_profile(profile: &CodeProfile, order: &TermOrder, code_id: &str) -> Result<VerificationReport> {
    let code = &profile.code;
    let (n, k) = (code.len(), code.dimension());
    let ghw = &profile.ghw;
    let mut checks = Checks(Vec::new());

    let (gb, _) = reduced_groebner_basis(code, order)?;
    let test_set = gb.test_set();

    // Test-set words are minimal-support codewords, one of weight d_1.
    let outside: Vec<BitWord> =
        test_set.iter().copied().filter(|w| profile.minimal_supports.binary_search(w).is_err()).collect();
    checks.proven("testset_minimal_supports", outside.is_empty(), format!("outside: [{}]", join(&outside)));
    let min_weight = test_set.iter().map(|w| w.weight()).min();
    checks.proven(
        "testset_min_weight",
        min_weight == ghw.get(1),
        format!("min weight {min_weight:?}, d_1 = {:?}", ghw.get(1)),
    );
    checks.proven("basis_reduced", gb.check_reduced().is_ok(), gb.check_reduced().err().unwrap_or_default());
    let nonstandard = gb.standard_form_violations();
    checks.proven(
        "basis_standard_form",
        nonstandard.is_empty(),
        nonstandard.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
    );

    let witness = if k >= 2 {
        let w = second_weight_witness(code, order)?;
        let d2 = ghw.get(2).expect("k >= 2");
        checks.proven("witness_spans_d2", (w.i | w.j).weight() == d2, format!("|I ∪ J| = {}", (w.i | w.j).weight()));
        checks.proven(
            "witness_overlap_bound",
            w.satisfies_overlap_bound(),
            format!("|I∩J| = {}, |I| = {}, |J| = {}", (w.i & w.j).weight(), w.i.weight(), w.j.weight()),
        );
        checks.proven("basis_has_support_i", gb.has_support(w.i), format!("I = {}", w.i));
        checks.proven("basis_has_support_j", gb.has_support(w.j), format!("J = {}", w.j));
        let pairs = pair_union_minimum(&test_set).ok();
        checks.proven("testset_pairs_give_d2", pairs == Some(d2), format!("pair minimum {pairs:?}, d_2 = {d2}"));
        Some(w)
    } else {
        None
    };

    let m_ideal = MonomialIdeal::from_supports(n, test_set.iter().copied())?;
    let (testset_betti, m_stats) = betti_table_hochster_with(&m_ideal, profile.characteristic)?;
    let minshift_testset = testset_betti.min_shifts();
    let pd_testset = testset_betti.projective_dimension();
    checks.proven("pd_testset_at_most_k", pd_testset <= k, format!("pd(R/M) = {pd_testset}, k = {k}"));
    let bound_failures: Vec<usize> =
        (3..=minshift_testset.len()).filter(|&i| ghw.get(i).map_or(true, |d| d > minshift_testset[i - 1])).collect();
    checks.proven("testset_shifts_bound_ghw", bound_failures.is_empty(), format!("failing i: {bound_failures:?}"));
    let exact = k.min(2);
    let low_match = (0..exact).all(|i| minshift_testset.get(i) == ghw.values.get(i));
    checks.proven(
        "testset_shifts_exact_low",
        low_match,
        format!("shifts {minshift_testset:?} vs ghw {ghw} for i <= {exact}"),
    );
    if m_ideal.generators().len() >= 2 {
        let taylor = crate::resolution::taylor_pair_minimum(&m_ideal)?;
        let second = minshift_testset.get(1).copied();
        checks.proven("taylor_second_step", Some(taylor) == second, format!("taylor {taylor}, β_2 shift {second:?}"));
    }

    let minshift_full = profile.stanley_reisner.min_shifts();
    let pd_full = profile.stanley_reisner.projective_dimension();
    checks.proven(
        "resolution_matches_ghw",
        minshift_full == ghw.values,
        format!("shifts {minshift_full:?} vs ghw {ghw}"),
    );
    checks.proven("pd_full_equals_k", pd_full == k, format!("pd(R/I) = {pd_full}, k = {k}"));
    let bounds = ghw.check_bounds(n, k);
    checks.proven("ghw_monotone_singleton", bounds.is_ok(), bounds.err().unwrap_or_default());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1e33a);
    let (tested, violations) = sample_symmetric_difference_lemma(n, LEMMA_SAMPLES, &mut rng);
    checks.proven("symmetric_difference_lemma", violations == 0, format!("{violations} of {tested} sampled pairs"));
    let euler = profile.stanley_reisner_stats.euler_violations + m_stats.euler_violations;
    checks.proven(
        "euler_consistency",
        euler == 0,
        format!("{euler} of {} restricted complexes", profile.stanley_reisner_stats.complexes + m_stats.complexes),
    );

    let full_match = minshift_testset == ghw.values;
    checks.open("testset_determines_ghw", full_match, format!("shifts {minshift_testset:?} vs ghw {ghw}"));
    if k >= 3 {
        let third = minshift_testset.get(2).copied();
        checks.open(
            "third_weight_from_testset",
            third == ghw.get(3),
            format!("shift {third:?}, d_3 = {:?}", ghw.get(3)),
        );
    }
    checks.open(
        "full_pd_implies_match",
        pd_testset != k || full_match,
        format!("pd(R/M) = {pd_testset}, k = {k}, match = {full_match}"),
    );

    Ok(VerificationReport {
        code_id: code_id.into(),
        n,
        k,
        order: order.clone(),
        ghw: ghw.clone(),
        minshift_full,
        pd_full,
        minshift_testset,
        pd_testset,
        basis_size: gb.total_len(),
        test_set,
        testset_betti,
        witness,
        checks: checks.0,
    })
}

/// Full verification of one code under one order, failing on any proven
/// check.
pub fn verify_code(code: &Code, order: &TermOrder) -> Result<VerificationReport> {
    let profile = CodeProfile::new(code.clone(), Characteristic::TWO)?;
    let report = verify_with_profile(&profile, order, "input")?;
    report.ensure_proven()?;
    Ok(report)
}

/// Union of the test sets over `orders`, as a monomial ideal.
pub fn union_testsets(code: &Code, orders: &[TermOrder]) -> Result<MonomialIdeal> {
    let mut words: Vec<BitWord> = orders
        .par_iter()
        .map(|o| reduced_groebner_basis(code, o).map(|(gb, _)| gb.test_set()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    words.sort_unstable();
    words.dedup();
    MonomialIdeal::from_supports(code.len(), words)
}

/// Every order of both kinds for `n <= EXHAUSTIVE_ORDER_LIMIT`, otherwise
/// `samples` seeded random orders.
#[must_use]
pub fn union_order_inventory(n: usize, samples: usize, seed: u64) -> Vec<TermOrder> {
    if n <= EXHAUSTIVE_ORDER_LIMIT {
        TermOrder::all(n)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).map(|_| TermOrder::random(n, &mut rng)).collect()
    }
}

/// Parameters of a randomized search.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n: usize,
    pub k: usize,
    pub trials: usize,
    pub seed: u64,
    /// Orders applied to every code.
    pub orders: Vec<TermOrder>,
    /// Extra random orders drawn per code.
    pub random_orders: usize,
    /// Generator matrices examined before the random trials.
    #[serde(default)]
    pub fixtures: Vec<BinaryMatrix>,
}

impl Serialize for BinaryMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinaryMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<BitWord>::deserialize(d)?;
        let cols = rows.first().map_or(0, |r| r.len());
        BinaryMatrix::new(cols, rows).map_err(serde::de::Error::custom)
    }
}

/// A (code, order) pair whose test-set shifts miss the hierarchy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlaggedCode {
    pub source: String,
    /// The generator matrix exactly as sampled or supplied.
    pub generator: BinaryMatrix,
    pub order: TermOrder,
    pub k: usize,
    pub ghw: GhwSequence,
    pub minshift_testset: Vec<usize>,
    pub pd_testset: usize,
    pub first_mismatch: usize,
    pub third_weight_matches: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub trials: usize,
    pub seed: u64,
    pub codes_examined: usize,
    pub rejected_rank_deficient: usize,
    pub skipped_degenerate: usize,
    pub runs: usize,
    pub mismatches: usize,
    pub mismatches_pd_below_k: usize,
    pub mismatches_pd_equal_k: usize,
    pub third_weight_failures: usize,
    pub flagged: Vec<FlaggedCode>,
}

enum Sample {
    RankDeficient,
    Degenerate,
    Code(BinaryMatrix, Code, Vec<TermOrder>),
}

fn sample_trial(config: &SearchConfig, trial: usize) -> Result<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial as u64);
    let rows: Vec<BitWord> = (0..config.k).map(|_| BitWord::from_bits(config.n, rng.gen())).collect();
    let matrix = BinaryMatrix::new(config.n, rows)?;
    if matrix.rank() < config.k {
        return Ok(Sample::RankDeficient);
    }
    let code = Code::from_generator(&matrix)?;
    if !code.is_nondegenerate() {
        return Ok(Sample::Degenerate);
    }
    let mut orders = config.orders.clone();
    orders.extend((0..config.random_orders).map(|_| TermOrder::random(config.n, &mut rng)));
    Ok(Sample::Code(matrix, code, orders))
}

fn examine(source: String, matrix: BinaryMatrix, code: Code, orders: &[TermOrder]) -> Result<Vec<VerificationReport>> {
    let profile = CodeProfile::new(code, Characteristic::TWO)?;
    orders
        .iter()
        .map(|o| {
            let report = verify_with_profile(&profile, o, &source)?;
            report.ensure_proven().map_err(|e| match e {
                Error::ProvenViolation { check, detail } => {
                    Error::ProvenViolation { check, detail: format!("{detail}; generator [{}]", join(matrix.rows())) }
                }
                other => other,
            })?;
            Ok(report)
        })
        .collect()
}

/// Samples random full-rank `k × n` generator matrices and verifies each code
/// under the configured orders. Each trial seeds its own stream from
/// `(seed, trial)`, so the report does not depend on scheduling. Proven
/// failures abort the search.
pub fn counterexample_search(config: &SearchConfig) -> Result<SearchReport> {
    let mut report =
        SearchReport { n: config.n, k: config.k, trials: config.trials, seed: config.seed, ..SearchReport::default() };

    let mut jobs: Vec<(String, BinaryMatrix, Code, Vec<TermOrder>)> = Vec::new();
    for (idx, m) in config.fixtures.iter().enumerate() {
        let code = Code::from_generator(m)?;
        let orders = if config.orders.is_empty() {
            vec![TermOrder::natural(crate::order::OrderKind::Degrevlex, code.len())]
        } else {
            config.orders.clone()
        };
        jobs.push((format!("fixture {idx}"), m.clone(), code, orders));
    }
    let samples = (0..config.trials).into_par_iter().map(|t| sample_trial(config, t)).collect::<Result<Vec<_>>>()?;
    for (t, s) in samples.into_iter().enumerate() {
        match s {
            Sample::RankDeficient => report.rejected_rank_deficient += 1,
            Sample::Degenerate => report.skipped_degenerate += 1,
            Sample::Code(m, c, o) => jobs.push((format!("trial {t}"), m, c, o)),
        }
    }

    let results = jobs
        .par_iter()
        .map(|(source, m, c, o)| examine(source.clone(), m.clone(), c.clone(), o))
        .collect::<Result<Vec<_>>>()?;

    for ((source, matrix, _, _), reports) in jobs.iter().zip(results) {
        report.codes_examined += 1;
        for r in reports {
            report.runs += 1;
            let Some(first_mismatch) = r.first_mismatch() else {
                continue;
            };
            report.mismatches += 1;
            if r.pd_testset < r.k {
                report.mismatches_pd_below_k += 1;
            } else {
                report.mismatches_pd_equal_k += 1;
            }
            let third = r.k < 3 || r.minshift_testset.get(2).copied() == r.ghw.get(3);
            if !third {
                report.third_weight_failures += 1;
            }
            report.flagged.push(FlaggedCode {
                source: source.clone(),
                generator: matrix.clone(),
                order: r.order.clone(),
                k: r.k,
                ghw: r.ghw.clone(),
                minshift_testset: r.minshift_testset.clone(),
                pd_testset: r.pd_testset,
                first_mismatch,
                third_weight_matches: third,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderKind;

    fn code(rows: &[&str]) -> Code {
        Code::from_generator(&BinaryMatrix::from_strs(rows).unwrap()).unwrap()
    }

    fn w(s: &str) -> BitWord {
        BitWord::parse(s).unwrap()
    }

    fn worked() -> Code {
        code(&["100110", "010101", "001011"])
    }

    #[test]
    fn witness_under_both_orders() {
        let o1 = TermOrder::natural(OrderKind::Degrevlex, 6);
        let wp = second_weight_witness(&worked(), &o1).unwrap();
        assert_eq!((wp.m1, wp.m2), (w("001011"), w("010101")));
        let o2 = TermOrder::reversed(OrderKind::Degrevlex, 6);
        let wp = second_weight_witness(&worked(), &o2).unwrap();
        assert_eq!((wp.m1, wp.m2), (w("111000"), w("100110")));
        assert!(wp.satisfies_overlap_bound());
    }

    #[test]
    fn witness_needs_two_dimensions() {
        let o = TermOrder::natural(OrderKind::Deglex, 3);
        assert!(matches!(second_weight_witness(&code(&["111"]), &o), Err(Error::DimensionTooSmall { k: 1 })));
    }

    #[test]
    fn dimension_two_witness_covers_everything() {
        let c = code(&["110100", "011011"]);
        let o = TermOrder::natural(OrderKind::Deglex, 6);
        let wp = second_weight_witness(&c, &o).unwrap();
        assert_eq!((wp.i | wp.j).weight(), 6);
    }

    #[test]
    fn d2_from_pairs() {
        let o = TermOrder::natural(OrderKind::Degrevlex, 6);
        assert_eq!(d2_from_testset(&worked(), &o).unwrap(), 5);
        assert_eq!(d2_from_testset(&code(&["100001", "011010", "000111"]), &o).unwrap(), 4);
        let rep = code(&["111"]);
        assert!(matches!(
            d2_from_testset(&rep, &TermOrder::natural(OrderKind::Deglex, 3)),
            Err(Error::TooFewGenerators { found: 1 })
        ));
    }

    #[test]
    fn lemma_on_examples() {
        assert_eq!(symmetric_difference_lemma(w("1110"), w("1101")), Some(true));
        assert_eq!(symmetric_difference_lemma(w("1100"), w("0011")), None);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (tested, violations) = sample_symmetric_difference_lemma(10, 1000, &mut rng);
        assert_eq!((tested, violations), (1000, 0));
    }

    #[test]
    fn toy_verification() {
        let r =
            verify_code(&code(&["100001", "011010", "000111"]), &TermOrder::natural(OrderKind::Degrevlex, 6)).unwrap();
        assert_eq!(r.ghw.values, vec![2, 4, 6]);
        assert_eq!(r.minshift_testset, vec![2, 4, 6]);
        assert_eq!(r.pd_testset, 3);
        assert!(r.testset_matches_ghw());
    }

    #[test]
    fn empty_search() {
        let config =
            SearchConfig { n: 8, k: 4, trials: 0, seed: 7, orders: vec![], random_orders: 3, fixtures: vec![] };
        let r = counterexample_search(&config).unwrap();
        assert_eq!(r.codes_examined, 0);
        assert!(r.flagged.is_empty());
    }

    #[test]
    fn single_order_union_is_its_test_set() {
        let c = code(&["100001", "011010", "000111"]);
        let o = TermOrder::natural(OrderKind::Degrevlex, 6);
        let u = union_testsets(&c, std::slice::from_ref(&o)).unwrap();
        let (gb, _) = reduced_groebner_basis(&c, &o).unwrap();
        assert_eq!(u.generators(), gb.test_set().as_slice());
    }
}
