//! One function per subcommand. Each returns a [`ResultDocument`]; printing
//! and exit codes are left to the binary.

use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use ghw_core::analysis::{
    counterexample_search, union_order_inventory, union_testsets, verify_with_profile, CodeProfile, SearchConfig,
    EXHAUSTIVE_ORDER_LIMIT,
};
use ghw_core::matrix_file::parse_matrix;
use ghw_core::resolution::betti_table_hochster_with;
use ghw_core::{reduced_groebner_basis, BitWord, Characteristic, Code, MonomialIdeal, OrderKind, TermOrder};

use crate::document::{BettiSection, CodeInfo, DecodeSection, GroebnerSection, ResultDocument, WeightEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Oracle,
    Resolution,
    Testset,
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Self::Oracle => "oracle",
            Self::Resolution => "resolution",
            Self::Testset => "testset",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdealKind {
    StanleyReisner,
    Testset,
    UnionTestsets,
}

impl IdealKind {
    fn name(self) -> &'static str {
        match self {
            Self::StanleyReisner => "stanley-reisner",
            Self::Testset => "testset",
            Self::UnionTestsets => "union-testsets",
        }
    }
}

/// Reads a matrix file, or standard input for `-`.
pub fn load_code(path: &Path) -> Result<Code> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let matrix = parse_matrix(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Code::from_generator(&matrix)?)
}

/// Builds an order from a kind and an optional 1-based priority list such as
/// `"6,5,4,3,2,1"`; the default priority is `x_1 > … > x_n`.
pub fn build_order(kind: OrderKind, vars: Option<&str>, n: usize) -> Result<TermOrder> {
    let Some(vars) = vars else {
        return Ok(TermOrder::natural(kind, n));
    };
    let parsed = vars
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().with_context(|| format!("bad variable index {s:?} in --vars")))
        .collect::<Result<Vec<_>>>()?;
    if parsed.len() != n {
        bail!("--vars lists {} variables, the code has length {n}", parsed.len());
    }
    Ok(TermOrder::from_one_based(kind, &parsed)?)
}

/// Parses `KIND` or `KIND:VARS`, e.g. `degrevlex:6,5,4,3,2,1`.
pub fn parse_order_spec(spec: &str, n: usize) -> Result<TermOrder> {
    let (kind, vars) = match spec.split_once(':') {
        Some((k, v)) => (k, Some(v)),
        None => (spec, None),
    };
    build_order(kind.parse()?, vars, n)
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn base(command: &str, code: &Code, p: Characteristic) -> ResultDocument {
    let mut doc = ResultDocument::new(command, p.get());
    doc.code = Some(CodeInfo::from(code));
    doc
}

pub fn cmd_ghw(code: &Code, route: Route, order: &TermOrder, p: Characteristic) -> Result<ResultDocument> {
    let start = Instant::now();
    let mut doc = base("ghw", code, p);
    doc.route = Some(route.name().into());
    let exact = |values: Vec<usize>| {
        values.into_iter().enumerate().map(|(i, value)| WeightEntry { i: i + 1, value, exact: true }).collect()
    };
    match route {
        Route::Oracle => doc.weights = Some(exact(code.ghw_hierarchy().values)),
        Route::Resolution => {
            let ideal = MonomialIdeal::from_supports(code.len(), code.minimal_support_codewords())?;
            let (table, _) = betti_table_hochster_with(&ideal, p)?;
            doc.weights = Some(exact(table.min_shifts()));
            doc.betti = Some(BettiSection::new(IdealKind::StanleyReisner.name(), ideal.generators().to_vec(), &table));
        }
        Route::Testset => {
            let (gb, _) = reduced_groebner_basis(code, order)?;
            let ideal = MonomialIdeal::from_supports(code.len(), gb.test_set())?;
            let (table, _) = betti_table_hochster_with(&ideal, p)?;
            let shifts = table.min_shifts();
            doc.weights = Some(
                shifts.iter().enumerate().map(|(i, &value)| WeightEntry { i: i + 1, value, exact: i < 2 }).collect(),
            );
            let (pd, k) = (table.projective_dimension(), code.dimension());
            if pd < k {
                doc.notes.push(format!("pd(R/M) = {pd} < k = {k}: no bound for d_{} and above", pd + 1));
            }
            doc.order = Some(order.clone());
            doc.test_set = Some(gb.test_set());
            doc.betti = Some(BettiSection::new(IdealKind::Testset.name(), ideal.generators().to_vec(), &table));
        }
    }
    doc.timings.insert("total".into(), ms(start));
    Ok(doc)
}

/// Orders used by `betti --ideal union-testsets`.
#[derive(Clone, Debug)]
pub struct UnionOrders {
    pub explicit: Vec<TermOrder>,
    pub samples: usize,
    pub seed: u64,
}

pub fn cmd_betti(
    code: &Code,
    ideal_kind: IdealKind,
    order: &TermOrder,
    union: &UnionOrders,
    p: Characteristic,
) -> Result<ResultDocument> {
    let start = Instant::now();
    let mut doc = base("betti", code, p);
    let n = code.len();
    let ideal = match ideal_kind {
        IdealKind::StanleyReisner => MonomialIdeal::from_supports(n, code.minimal_support_codewords())?,
        IdealKind::Testset => {
            let (gb, _) = reduced_groebner_basis(code, order)?;
            doc.order = Some(order.clone());
            doc.test_set = Some(gb.test_set());
            MonomialIdeal::from_supports(n, gb.test_set())?
        }
        IdealKind::UnionTestsets => {
            let orders = if union.explicit.is_empty() {
                if n > EXHAUSTIVE_ORDER_LIMIT {
                    doc.seed = Some(union.seed);
                    doc.notes.push(format!("{} sampled orders (length {n} > {EXHAUSTIVE_ORDER_LIMIT})", union.samples));
                } else {
                    doc.notes.push(format!("all {} deglex/degrevlex priority orders", 2 * (1..=n).product::<usize>()));
                }
                union_order_inventory(n, union.samples, union.seed)
            } else {
                doc.notes.push(format!("{} explicit orders", union.explicit.len()));
                union.explicit.clone()
            };
            let ideal = union_testsets(code, &orders)?;
            doc.test_set = Some(ideal.generators().to_vec());
            ideal
        }
    };
    doc.timings.insert("ideal".into(), ms(start));
    let sweep = Instant::now();
    let (table, stats) = betti_table_hochster_with(&ideal, p)?;
    doc.timings.insert("hochster".into(), ms(sweep));
    if stats.euler_violations > 0 {
        doc.notes.push(format!("{} restricted complexes failed the Euler check", stats.euler_violations));
    }
    doc.betti = Some(BettiSection::new(ideal_kind.name(), ideal.generators().to_vec(), &table));
    doc.timings.insert("total".into(), ms(start));
    Ok(doc)
}

pub fn cmd_gb(code: &Code, order: &TermOrder) -> Result<ResultDocument> {
    let start = Instant::now();
    let mut doc = base("gb", code, Characteristic::TWO);
    let (gb, _) = reduced_groebner_basis(code, order)?;
    doc.order = Some(order.clone());
    doc.groebner = Some(GroebnerSection::from(&gb));
    doc.test_set = Some(gb.test_set());
    doc.timings.insert("total".into(), ms(start));
    Ok(doc)
}

pub fn cmd_decode(code: &Code, word: &str, order: &TermOrder) -> Result<ResultDocument> {
    let start = Instant::now();
    let mut doc = base("decode", code, Characteristic::TWO);
    let word = BitWord::parse(word)?;
    if word.len() != code.len() {
        return Err(ghw_core::Error::LengthMismatch { expected: code.len(), found: word.len() }.into());
    }
    let (_, table) = reduced_groebner_basis(code, order)?;
    let leader = table.normal_form(word)?;
    doc.order = Some(order.clone());
    doc.decode = Some(DecodeSection { word, leader, codeword: word ^ leader, error_weight: leader.weight() });
    doc.timings.insert("total".into(), ms(start));
    Ok(doc)
}

/// Runs every check; proven failures are left in the report for the caller.
pub fn cmd_verify(code: &Code, order: &TermOrder, p: Characteristic) -> Result<ResultDocument> {
    let start = Instant::now();
    let mut doc = base("verify", code, p);
    let profile = CodeProfile::new(code.clone(), p)?;
    let report = verify_with_profile(&profile, order, "input")?;
    doc.order = Some(order.clone());
    doc.weights = Some(
        report.ghw.values.iter().enumerate().map(|(i, &value)| WeightEntry { i: i + 1, value, exact: true }).collect(),
    );
    doc.test_set = Some(report.test_set.clone());
    doc.betti = Some(BettiSection::new(IdealKind::Testset.name(), report.test_set.clone(), &report.testset_betti));
    doc.verification = Some(report);
    doc.timings.insert("total".into(), ms(start));
    Ok(doc)
}

pub fn cmd_search(config: &SearchConfig) -> Result<ResultDocument> {
    let start = Instant::now();
    let mut doc = ResultDocument::new("search", 2);
    doc.seed = Some(config.seed);
    let report = counterexample_search(config)?;
    doc.notes.push(format!(
        "{} codes, {} runs, {} mismatches ({} with pd < k, {} with pd = k), {} failures at i = 3",
        report.codes_examined,
        report.runs,
        report.mismatches,
        report.mismatches_pd_below_k,
        report.mismatches_pd_equal_k,
        report.third_weight_failures
    ));
    doc.search = Some(report);
    doc.timings.insert("total".into(), ms(start));
    Ok(doc)
}

/// Process exit status for an error: 2 for size caps, 3 for a violated
/// theorem, 1 otherwise.
#[must_use]
pub fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<ghw_core::Error>() {
            return match e {
                ghw_core::Error::LengthCapExceeded { .. } | ghw_core::Error::CapExceeded { .. } => 2,
                ghw_core::Error::ProvenViolation { .. } => 3,
                _ => 1,
            };
        }
    }
    1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_error_kind() {
        let proven = anyhow::Error::from(ghw_core::Error::ProvenViolation { check: "x".into(), detail: "y".into() });
        assert_eq!(exit_code(&proven), 3);
        assert_eq!(exit_code(&proven.context("while verifying")), 3);
        let cap = anyhow::Error::from(ghw_core::Error::LengthCapExceeded { n: 30, cap: 24 });
        assert_eq!(exit_code(&cap), 2);
        assert_eq!(exit_code(&anyhow::anyhow!("plain")), 1);
    }

    #[test]
    fn order_specs() {
        let o = parse_order_spec("degrevlex:6,5,4,3,2,1", 6).unwrap();
        assert_eq!(o, TermOrder::reversed(OrderKind::Degrevlex, 6));
        assert_eq!(parse_order_spec("deglex", 3).unwrap(), TermOrder::natural(OrderKind::Deglex, 3));
        assert!(parse_order_spec("lex", 3).is_err());
        assert!(build_order(OrderKind::Deglex, Some("1 2 2"), 3).is_err());
        assert!(build_order(OrderKind::Deglex, Some("1,2"), 3).is_err());
    }
}
