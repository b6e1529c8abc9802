//! Binary linear codes and the combinatorial generalized-Hamming-weight
//! oracle.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{low_mask, rank_of_words, BinaryMatrix, BitWord};
use crate::error::{Error, Result};

/// A binary linear `[n, k]` code.
///
/// The stored generator and parity-check matrices are both in reduced row
/// echelon form, so two codes with the same row space compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    n: usize,
    k: usize,
    generator: BinaryMatrix,
    parity: BinaryMatrix,
    nondegenerate: bool,
}

impl Code {
    /// Builds the code spanned by the rows of `m`. Dependent and zero rows are
    /// allowed.
    pub fn from_generator(m: &BinaryMatrix) -> Result<Self> {
        let n = m.col_count();
        let cap = crate::error::size_cap();
        if n > cap {
            return Err(Error::LengthCapExceeded { n, cap });
        }
        let rref = m.rref();
        if rref.rank == 0 {
            return Err(Error::ZeroCode);
        }
        let generator = rref.matrix;
        let parity = generator.kernel_basis().rref().matrix;
        let covered = generator.rows().iter().fold(BitWord::zero(n), |acc, r| acc | *r);
        Ok(Self { n, k: rref.rank, nondegenerate: covered == BitWord::full(n), generator, parity })
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[must_use]
    pub fn dimension(&self) -> usize {
        self.k
    }

    #[must_use]
    pub fn generator(&self) -> &BinaryMatrix {
        &self.generator
    }

    #[must_use]
    pub fn parity(&self) -> &BinaryMatrix {
        &self.parity
    }

    /// True when no coordinate vanishes on the whole code.
    #[must_use]
    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    /// Syndrome `H wᵀ`, with row `r` of the parity matrix in bit `r`.
    #[must_use]
    pub fn syndrome(&self, w: BitWord) -> u32 {
        self.parity.mul_vec(w)
    }

    #[must_use]
    pub fn contains(&self, w: BitWord) -> bool {
        w.len() == self.n && self.syndrome(w) == 0
    }

    /// All `2^k` codewords in binary-reflected Gray-code order, starting at 0.
    #[must_use]
    pub fn codewords(&self) -> Codewords<'_> {
        Codewords { rows: self.generator.rows(), index: 0, total: 1u64 << self.k, current: BitWord::zero(self.n) }
    }

    /// Nonzero codewords whose support strictly contains no other nonzero
    /// codeword's support, sorted by packed bits.
    #[must_use]
    pub fn minimal_support_codewords(&self) -> Vec<BitWord> {
        let mut words: Vec<BitWord> = self.codewords().filter(|w| !w.is_zero()).collect();
        words.sort_unstable_by_key(|w| (w.weight(), w.bits()));
        // A non-minimal support strictly contains some minimal support, which
        // is strictly lighter and therefore already kept.
        let mut minimal: Vec<BitWord> = Vec::new();
        for w in words {
            if !minimal.iter().any(|m| m.is_subset_of(w)) {
                minimal.push(w);
            }
        }
        minimal.sort_unstable();
        minimal
    }

    /// Dimension of `{v ∈ C : supp(v) ⊆ s}`, i.e. `k` minus the rank of the
    /// generator columns outside `s`.
    #[must_use]
    pub fn subcode_dim_within(&self, s: BitWord) -> usize {
        let outside = !s;
        self.k - rank_of_words(self.generator.rows().iter().map(|r| r.bits() & outside.bits()))
    }

    /// `d_h`: the smallest `|S|` carrying an `h`-dimensional subcode. Subsets
    /// are scanned by increasing size with early exit.
    ///
    /// # Panics
    /// Panics unless `1 <= h <= k`.
    #[must_use]
    pub fn ghw_bruteforce(&self, h: usize) -> usize {
        assert!((1..=self.k).contains(&h), "h = {h} outside 1..={}", self.k);
        (h..=self.n)
            .find(|&size| {
                subsets_of_size(self.n, size).any(|s| self.subcode_dim_within(BitWord::from_bits(self.n, s)) >= h)
            })
            .expect("the full coordinate set carries the whole code")
    }

    /// The whole hierarchy `(d_1, …, d_k)` from one size-ordered scan.
    #[must_use]
    pub fn ghw_hierarchy(&self) -> GhwSequence {
        let mut values = vec![usize::MAX; self.k];
        let mut found = 0;
        for size in 0..=self.n {
            let subsets: Vec<u32> = subsets_of_size(self.n, size).collect();
            let best =
                subsets.par_iter().map(|&s| self.subcode_dim_within(BitWord::from_bits(self.n, s))).max().unwrap_or(0);
            while found < best {
                values[found] = size;
                found += 1;
            }
            if found == self.k {
                break;
            }
        }
        GhwSequence { values }
    }

    /// Circuits of the column matroid of the parity-check matrix: minimal sets
    /// of dependent columns. Over GF(2) a minimal dependency uses every column
    /// with coefficient 1, so circuits are the zero-sum sets containing no
    /// smaller dependent set.
    #[must_use]
    pub fn matroid_circuits(&self) -> Vec<BitWord> {
        let n = self.n;
        let cols: Vec<u32> = (0..n).map(|c| self.parity.column_bits(c)).collect();
        let size = 1usize << n;
        let mut sum = vec![0u32; size];
        let mut dependent = vec![false; size];
        let mut circuits = Vec::new();
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            sum[mask] = sum[mask & (mask - 1)] ^ cols[low];
            let mut rest = mask;
            let mut sub_dependent = false;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if dependent[mask ^ bit] {
                    sub_dependent = true;
                    break;
                }
                rest ^= bit;
            }
            let zero_sum = sum[mask] == 0;
            dependent[mask] = sub_dependent || zero_sum;
            if zero_sum && !sub_dependent {
                circuits.push(BitWord::from_bits(n, mask as u32));
            }
        }
        circuits.sort_unstable();
        circuits
    }
}

/// Iterator over codewords in Gray-code order.
pub struct Codewords<'a> {
    rows: &'a [BitWord],
    index: u64,
    total: u64,
    current: BitWord,
}

impl Iterator for Codewords<'_> {
    type Item = BitWord;

    fn next(&mut self) -> Option<BitWord> {
        if self.index >= self.total {
            return None;
        }
        if self.index > 0 {
            self.current ^= self.rows[self.index.trailing_zeros() as usize];
        }
        self.index += 1;
        Some(self.current)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords<'_> {}

/// All `size`-subsets of `[n]` as packed masks, in increasing numeric order
/// (Gosper's hack).
pub fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u32> {
    let limit = low_mask(n);
    let mut next = if size > n {
        None
    } else if size == 0 {
        Some(0u32)
    } else {
        Some(low_mask(size))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 || r > limit {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                (nxt <= limit).then_some(nxt)
            }
        };
        Some(cur)
    })
}

/// A generalized-Hamming-weight hierarchy `(d_1, …, d_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GhwSequence {
    pub values: Vec<usize>,
}

impl GhwSequence {
    #[must_use]
    pub fn new(values: Vec<usize>) -> Self {
        Self { values }
    }

    /// `d_h` with 1-based `h`.
    #[must_use]
    pub fn get(&self, h: usize) -> Option<usize> {
        h.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Checks `1 <= d_1 < d_2 < … <= n` and the generalized Singleton bound
    /// `d_h <= n - k + h`. Returns a description of the first failure.
    pub fn check_bounds(&self, n: usize, k: usize) -> Result<(), String> {
        if self.values.len() != k {
            return Err(format!("expected {k} weights, found {}", self.values.len()));
        }
        if self.values.first().is_some_and(|&d| d < 1) {
            return Err("d_1 < 1".into());
        }
        for (i, pair) in self.values.windows(2).enumerate() {
            if pair[0] >= pair[1] {
                return Err(format!("d_{} = {} is not below d_{} = {}", i + 1, pair[0], i + 2, pair[1]));
            }
        }
        for (i, &d) in self.values.iter().enumerate() {
            let h = i + 1;
            if d + k > n + h {
                return Err(format!("d_{h} = {d} exceeds the Singleton bound {}", n - k + h));
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for GhwSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn code(rows: &[&str]) -> Code {
        Code::from_generator(&BinaryMatrix::from_strs(rows).unwrap()).unwrap()
    }

    fn toy() -> Code {
        code(&["100001", "011010", "000111"])
    }

    fn words(ws: &[&str]) -> Vec<BitWord> {
        let mut v: Vec<BitWord> = ws.iter().map(|w| BitWord::parse(w).unwrap()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn toy_parameters() {
        let c = toy();
        assert_eq!((c.len(), c.dimension()), (6, 3));
        assert!(c.is_nondegenerate());
        assert_eq!(c.codewords().count(), 8);
    }

    #[test]
    fn identity_code() {
        let c = Code::from_generator(&BinaryMatrix::identity(4)).unwrap();
        assert_eq!((c.len(), c.dimension()), (4, 4));
        assert_eq!(c.parity().row_count(), 0);
    }

    #[test]
    fn dependent_row_dropped() {
        let c = code(&["110100", "011010", "101110", "000111"]);
        assert_eq!(c.dimension(), 3);
    }

    #[test]
    fn zero_code_rejected() {
        let m = BinaryMatrix::from_strs(&["0000", "0000"]).unwrap();
        assert!(matches!(Code::from_generator(&m), Err(Error::ZeroCode)));
    }

    #[test]
    fn repetition_code() {
        let c = code(&["111"]);
        let all: BTreeSet<String> = c.codewords().map(|w| w.to_string()).collect();
        assert_eq!(all, ["000", "111"].iter().map(ToString::to_string).collect());
        assert_eq!(c.minimal_support_codewords(), words(&["111"]));
        assert_eq!(c.matroid_circuits(), words(&["111"]));
    }

    #[test]
    fn codewords_closed_under_addition() {
        let c = toy();
        let set: BTreeSet<BitWord> = c.codewords().collect();
        assert_eq!(set.len(), 8);
        for &a in &set {
            for &b in &set {
                assert!(set.contains(&(a ^ b)));
            }
        }
    }

    #[test]
    fn toy_minimal_supports() {
        let expected = words(&["100001", "100110", "011010", "000111", "111100", "011101"]);
        assert_eq!(toy().minimal_support_codewords(), expected);
        assert_eq!(toy().matroid_circuits(), expected);
    }

    #[test]
    fn subcode_dimensions() {
        let c = toy();
        assert_eq!(c.subcode_dim_within(BitWord::full(6)), 3);
        assert_eq!(c.subcode_dim_within(BitWord::zero(6)), 0);
        let s = BitWord::parse("011111").unwrap();
        let brute = c.codewords().filter(|w| w.is_subset_of(s)).count();
        assert_eq!(brute, 4);
        assert_eq!(c.subcode_dim_within(s), 2);
    }

    #[test]
    fn toy_ghw() {
        let c = toy();
        assert_eq!(c.ghw_hierarchy().values, vec![2, 4, 6]);
        assert_eq!((1..=3).map(|h| c.ghw_bruteforce(h)).collect::<Vec<_>>(), vec![2, 4, 6]);
    }

    #[test]
    fn gosper_enumeration_counts() {
        for n in 0..=8usize {
            for s in 0..=n + 1 {
                let subsets: Vec<u32> = subsets_of_size(n, s).collect();
                let expected = (0u32..(1 << n)).filter(|m| m.count_ones() as usize == s).count();
                assert_eq!(subsets.len(), expected, "n={n} s={s}");
                assert!(subsets.iter().all(|m| m.count_ones() as usize == s));
            }
        }
    }

    #[test]
    fn singleton_bound_detection() {
        let seq = GhwSequence::new(vec![2, 2]);
        assert!(seq.check_bounds(4, 2).is_err());
        let seq = GhwSequence::new(vec![4, 6]);
        assert!(seq.check_bounds(5, 2).is_err());
        assert!(GhwSequence::new(vec![4, 5]).check_bounds(5, 2).is_ok());
        assert!(GhwSequence::new(vec![2, 4, 6]).check_bounds(6, 3).is_ok());
    }
}
