//! Degree-compatible term orders on square-free monomials.
//!
//! A [`TermOrder`] is a kind (deglex or degrevlex) plus a priority permutation
//! listing the variables from highest to lowest. Comparisons go through a
//! `u64` sort key: total degree in the high half, then a tie-break value that
//! orders words of equal degree.

use std::cmp::Ordering;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{low_mask, BitWord};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    /// Degree, then lexicographic from the highest-priority variable: the word
    /// holding the first differing variable is larger.
    Deglex,
    /// Degree, then reverse lexicographic from the lowest-priority variable:
    /// the word holding the first differing variable is smaller.
    Degrevlex,
}

impl OrderKind {
    pub const ALL: [Self; 2] = [Self::Deglex, Self::Degrevlex];
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Deglex => "deglex",
            Self::Degrevlex => "degrevlex",
        })
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "deglex" | "grlex" => Ok(Self::Deglex),
            "degrevlex" | "grevlex" => Ok(Self::Degrevlex),
            other => Err(Error::InvalidOrder(format!("unknown order kind {other:?}"))),
        }
    }
}

/// A degree-compatible monomial order on `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    /// 0-based variables from highest to lowest priority.
    priority: Vec<usize>,
    /// `rank[v]` = position of variable `v` in `priority`.
    rank: Vec<usize>,
}

impl TermOrder {
    /// Validates that `priority` is a permutation of `0..n`.
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        if n > crate::bits::MAX_WORD_LEN {
            return Err(Error::InvalidOrder(format!("{n} variables exceed the word size")));
        }
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in priority.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::InvalidOrder(format!("priority list is not a permutation of 1..{n}")));
            }
            rank[v] = pos;
        }
        Ok(Self { kind, priority, rank })
    }

    /// Priority `x_1 > x_2 > … > x_n`.
    #[must_use]
    pub fn natural(kind: OrderKind, n: usize) -> Self {
        Self::new(kind, (0..n).collect()).expect("identity permutation")
    }

    /// Priority `x_n > … > x_1`.
    #[must_use]
    pub fn reversed(kind: OrderKind, n: usize) -> Self {
        Self::new(kind, (0..n).rev().collect()).expect("reversed permutation")
    }

    /// Builds an order from 1-based variable indices, highest priority first.
    pub fn from_one_based(kind: OrderKind, vars: &[usize]) -> Result<Self> {
        if vars.contains(&0) {
            return Err(Error::InvalidOrder("variables are numbered from 1".into()));
        }
        Self::new(kind, vars.iter().map(|v| v - 1).collect())
    }

    /// A uniformly random kind and priority permutation.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let kind = if rng.gen::<bool>() { OrderKind::Deglex } else { OrderKind::Degrevlex };
        let mut priority: Vec<usize> = (0..n).collect();
        priority.shuffle(rng);
        Self::new(kind, priority).expect("shuffled permutation")
    }

    /// Every priority permutation under both kinds: `2 · n!` orders.
    #[must_use]
    pub fn all(n: usize) -> Vec<Self> {
        use itertools::Itertools;
        OrderKind::ALL
            .iter()
            .flat_map(|&kind| (0..n).permutations(n).map(move |p| Self::new(kind, p).expect("permutation")))
            .collect()
    }

    #[must_use]
    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.priority.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.priority.is_empty()
    }

    /// 0-based variables, highest priority first.
    #[must_use]
    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// 1-based variables, highest priority first.
    #[must_use]
    pub fn priority_one_based(&self) -> Vec<usize> {
        self.priority.iter().map(|v| v + 1).collect()
    }

    /// Sort key: comparing keys as integers compares the words under this
    /// order.
    #[must_use]
    pub fn key(&self, w: BitWord) -> u64 {
        debug_assert_eq!(w.len(), self.len());
        let n = self.len();
        let tie = match self.kind {
            // Highest-priority variable in the most significant position.
            OrderKind::Deglex => w.iter_ones().fold(0u32, |acc, v| acc | 1 << (n - 1 - self.rank[v])),
            // Lowest-priority variable in the most significant position,
            // complemented: the word holding the deciding variable is smaller.
            OrderKind::Degrevlex => !w.iter_ones().fold(0u32, |acc, v| acc | 1 << self.rank[v]) & low_mask(n),
        };
        (u64::from(w.weight() as u32) << 32) | u64::from(tie)
    }

    #[must_use]
    pub fn compare(&self, a: BitWord, b: BitWord) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// Builds a lookup table of keys for every word of length `n`.
    #[must_use]
    pub fn key_table(&self) -> Vec<u64> {
        let n = self.len();
        (0..1u32 << n).map(|m| self.key(BitWord::from_bits(n, m))).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct OrderRepr {
    kind: OrderKind,
    /// 1-based variables, highest priority first.
    priority: Vec<usize>,
}

impl Serialize for TermOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OrderRepr { kind: self.kind, priority: self.priority_one_based() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TermOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = OrderRepr::deserialize(d)?;
        Self::from_one_based(repr.kind, &repr.priority).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.priority.iter().map(|v| format!("x{}", v + 1)).collect();
        write!(f, "{} {}", self.kind, vars.join(" > "))
    }
}
