//! The structured result written by every subcommand.

use std::collections::BTreeMap;

use ghw_core::analysis::{SearchReport, VerificationReport};
use ghw_core::resolution::BettiEntry;
use ghw_core::{BettiTable, BitWord, Code, GroebnerBasis, TermOrder};
use serde::{Deserialize, Serialize};

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<CodeInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<TermOrder>,
    pub field_char: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<WeightEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub test_set: Option<Vec<BitWord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groebner: Option<GroebnerSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decode: Option<DecodeSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall-clock milliseconds per phase. Not part of the determinism
    /// contract.
    #[serde(default)]
    pub timings: BTreeMap<String, f64>,
}

impl ResultDocument {
    #[must_use]
    pub fn new(command: &str, field_char: u32) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            code: None,
            route: None,
            order: None,
            field_char,
            seed: None,
            weights: None,
            betti: None,
            test_set: None,
            groebner: None,
            decode: None,
            verification: None,
            search: None,
            notes: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self).map(|s| s + "\n")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// The document with timings cleared, for comparisons.
    #[must_use]
    pub fn without_timings(mut self) -> Self {
        self.timings.clear();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeInfo {
    pub n: usize,
    pub k: usize,
    pub nondegenerate: bool,
    /// Reduced row echelon generator rows.
    pub generator: Vec<BitWord>,
}

impl From<&Code> for CodeInfo {
    fn from(c: &Code) -> Self {
        Self {
            n: c.len(),
            k: c.dimension(),
            nondegenerate: c.is_nondegenerate(),
            generator: c.generator().rows().to_vec(),
        }
    }
}

/// `d_i`, or an upper bound on it when `exact` is false.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEntry {
    pub i: usize,
    pub value: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSection {
    pub ideal: String,
    pub generators: Vec<BitWord>,
    /// Nonzero `β_{i,j}`, sorted by `(i, j)`, including `β_{0,0} = 1`.
    pub entries: Vec<BettiEntry>,
    pub diagram: String,
    pub projective_dimension: usize,
    pub min_shifts: Vec<usize>,
    pub pure: bool,
    pub linear: bool,
}

impl BettiSection {
    #[must_use]
    pub fn new(ideal: &str, generators: Vec<BitWord>, table: &BettiTable) -> Self {
        Self {
            ideal: ideal.into(),
            generators,
            entries: table.entries(),
            diagram: table.render(),
            projective_dimension: table.projective_dimension(),
            min_shifts: table.min_shifts(),
            pure: table.is_pure(),
            linear: table.is_linear(),
        }
    }

    #[must_use]
    pub fn table(&self) -> BettiTable {
        BettiTable::from_entries(self.entries.iter().map(|e| ((e.i, e.j), e.beta)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerSection {
    /// `(lead, trail)` in increasing leading-term order.
    pub binomials: Vec<(BitWord, BitWord)>,
    pub rendered: Vec<String>,
    pub quadrics: usize,
    pub total: usize,
}

impl From<&GroebnerBasis> for GroebnerSection {
    fn from(gb: &GroebnerBasis) -> Self {
        Self {
            binomials: gb.binomials().iter().map(|b| (b.lead, b.trail)).collect(),
            rendered: gb.binomials().iter().map(ToString::to_string).collect(),
            quadrics: gb.quadric_count(),
            total: gb.total_len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeSection {
    pub word: BitWord,
    pub leader: BitWord,
    pub codeword: BitWord,
    pub error_weight: usize,
}
