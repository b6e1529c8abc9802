//! Exact linear algebra over GF(2).
//!
//! A [`BitWord`] is a length-`n` vector over GF(2) packed into a `u32`. The same
//! value is used as a codeword, as the exponent vector of a square-free
//! monomial and as a subset of coordinates. Coordinate `i` (0-based) lives in
//! bit `i`; when printed, coordinate 1 is the leftmost character, so the word
//! with bits 0 and 5 set prints as `100001`.
//!
//! Row reduction always scans columns left to right (coordinate 1 first), so
//! echelon forms and kernel bases are deterministic.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, BitXorAssign, Not};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Hard limit imposed by the packed representation.
pub const MAX_WORD_LEN: usize = 30;

/// A vector of GF(2)^n, `n <= MAX_WORD_LEN`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    len: u8,
    bits: u32,
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl BitWord {
    /// # Panics
    /// Panics if `n > MAX_WORD_LEN`.
    #[must_use]
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_WORD_LEN, "word length {n} exceeds {MAX_WORD_LEN}");
        Self { len: n as u8, bits: 0 }
    }

    /// Builds a word from packed bits; bits above `n` are discarded.
    #[must_use]
    pub fn from_bits(n: usize, bits: u32) -> Self {
        let mut w = Self::zero(n);
        w.bits = bits & low_mask(n);
        w
    }

    /// The all-ones word.
    #[must_use]
    pub fn full(n: usize) -> Self {
        Self::from_bits(n, u32::MAX)
    }

    /// Builds a word from 0-based coordinates.
    ///
    /// # Panics
    /// Panics if a coordinate is out of range.
    #[must_use]
    pub fn from_support(n: usize, coords: &[usize]) -> Self {
        let mut w = Self::zero(n);
        for &c in coords {
            assert!(c < n, "coordinate {c} out of range for length {n}");
            w.bits |= 1 << c;
        }
        w
    }

    #[inline]
    #[must_use]
    pub fn len(self) -> usize {
        self.len as usize
    }

    #[inline]
    #[must_use]
    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    #[inline]
    #[must_use]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    #[must_use]
    pub fn weight(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    #[must_use]
    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    #[inline]
    #[must_use]
    pub fn get(self, i: usize) -> bool {
        i < self.len() && (self.bits >> i) & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        assert!(i < self.len(), "coordinate {i} out of range");
        Self { len: self.len, bits: self.bits | (1 << i) }
    }

    /// 0-based coordinates of the set bits, increasing.
    #[must_use]
    pub fn support(self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    pub fn iter_ones(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Subset test on supports.
    #[inline]
    #[must_use]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Inner product over GF(2).
    #[inline]
    #[must_use]
    pub fn dot(self, other: Self) -> bool {
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// Parses a bitstring such as `100001` (coordinate 1 leftmost).
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > MAX_WORD_LEN {
            return Err(Error::LengthCapExceeded { n: s.len(), cap: MAX_WORD_LEN });
        }
        let mut w = Self::zero(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => w.bits |= 1 << i,
                other => return Err(Error::InvalidBitstring(format!("unexpected character {other:?} in {s:?}"))),
            }
        }
        Ok(w)
    }
}

impl serde::Serialize for BitWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for BitWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl BitXor for BitWord {
    type Output = Self;

    fn bitxor(self, rhs: Self) -> Self {
        debug_assert_eq!(self.len, rhs.len);
        Self { len: self.len, bits: self.bits ^ rhs.bits }
    }
}

impl BitXorAssign for BitWord {
    fn bitxor_assign(&mut self, rhs: Self) {
        debug_assert_eq!(self.len, rhs.len);
        self.bits ^= rhs.bits;
    }
}

impl BitAnd for BitWord {
    type Output = Self;

    fn bitand(self, rhs: Self) -> Self {
        debug_assert_eq!(self.len, rhs.len);
        Self { len: self.len, bits: self.bits & rhs.bits }
    }
}

impl BitOr for BitWord {
    type Output = Self;

    fn bitor(self, rhs: Self) -> Self {
        debug_assert_eq!(self.len, rhs.len);
        Self { len: self.len, bits: self.bits | rhs.bits }
    }
}

impl Not for BitWord {
    type Output = Self;

    fn not(self) -> Self {
        Self::from_bits(self.len(), !self.bits)
    }
}

/// Row-major matrix over GF(2), each row a [`BitWord`] of length `cols`.
///
/// Zero-row matrices are allowed so that, for example, the parity-check
/// matrix of the full space can be represented.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<BitWord>,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: BinaryMatrix,
    pub rank: usize,
    /// 0-based pivot columns, one per nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl BinaryMatrix {
    pub fn new(cols: usize, rows: Vec<BitWord>) -> Result<Self> {
        if cols > MAX_WORD_LEN {
            return Err(Error::LengthCapExceeded { n: cols, cap: MAX_WORD_LEN });
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::RaggedRows { row: i + 1, expected: cols, found: r.len() });
        }
        Ok(Self { cols, rows })
    }

    /// Builds a matrix from bitstrings, one per row.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let words = rows.iter().map(|r| BitWord::parse(r)).collect::<Result<Vec<_>>>()?;
        let cols = words.first().map_or(0, |w| w.len());
        Self::new(cols, words)
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| BitWord::from_support(n, &[i])).collect();
        Self { cols: n, rows }
    }

    #[must_use]
    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    #[must_use]
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn col_count(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    #[must_use]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row].get(col)
    }

    /// `M · wᵀ`, packed with row `r` in bit `r`.
    #[must_use]
    pub fn mul_vec(&self, w: BitWord) -> u32 {
        debug_assert!(self.rows.len() <= 32);
        self.rows.iter().enumerate().fold(0, |acc, (r, row)| acc | (u32::from(row.dot(w)) << r))
    }

    /// Column `c` as a packed word with row `r` in bit `r`.
    #[must_use]
    pub fn column_bits(&self, c: usize) -> u32 {
        debug_assert!(self.rows.len() <= 32);
        self.rows.iter().enumerate().fold(0, |acc, (r, row)| acc | (u32::from(row.get(c)) << r))
    }

    /// Reduced row echelon form over GF(2).
    #[must_use]
    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            let pivot = rows[next];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    *row ^= pivot;
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        let rank = pivots.len();
        rows.truncate(rank);
        Rref { matrix: Self { cols: self.cols, rows }, rank, pivots }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        rank_of_words(self.rows.iter().map(|r| r.bits()))
    }

    /// Basis of the right null space `{v : M vᵀ = 0}`, one basis vector per
    /// free column of the echelon form.
    #[must_use]
    pub fn kernel_basis(&self) -> Self {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitWord::from_support(self.cols, &[f]);
                for (r, &p) in pivots.iter().enumerate() {
                    if matrix.rows[r].get(f) {
                        v = v.with(p);
                    }
                }
                v
            })
            .collect();
        Self { cols: self.cols, rows }
    }

    /// Rank of the submatrix formed by the columns in `cols`.
    #[must_use]
    pub fn rank_of_columns(&self, cols: BitWord) -> usize {
        rank_of_words(self.rows.iter().map(|r| r.bits() & cols.bits()))
    }

    /// Whether both matrices have the same row space.
    #[must_use]
    pub fn same_row_space(&self, other: &Self) -> bool {
        self.cols == other.cols && self.rref().matrix == other.rref().matrix
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        assert!(self.rows.len() <= MAX_WORD_LEN);
        let n = self.rows.len();
        let rows = (0..self.cols).map(|c| BitWord::from_bits(n, self.column_bits(c))).collect();
        Self { cols: n, rows }
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter().map(ToString::to_string)).finish()
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<&str> = (0..self.cols).map(|c| if row.get(c) { "1" } else { "0" }).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Rank of a family of packed words (XOR basis keyed by highest set bit).
pub fn rank_of_words(words: impl IntoIterator<Item = u32>) -> usize {
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for mut w in words {
        while w != 0 {
            let top = 31 - w.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = w;
                rank += 1;
                break;
            }
            w ^= basis[top];
        }
    }
    rank
}

/// Incremental rank computation for arbitrary-length packed rows.
///
/// Each inserted row is reduced against the stored pivots, keyed by the lowest
/// set bit. Stored rows have no bits below their pivot, so XORs only touch the
/// words from the pivot word onwards.
#[derive(Debug, Default)]
pub struct PackedEliminator {
    pivots: Vec<Option<Vec<u64>>>,
    rank: usize,
}

impl PackedEliminator {
    #[must_use]
    pub fn new(width_bits: usize) -> Self {
        Self { pivots: vec![None; width_bits], rank: 0 }
    }

    /// Reduces `row` and stores it if independent. Returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        let mut start = 0;
        loop {
            let Some(offset) = row[start..].iter().position(|&w| w != 0) else {
                return false;
            };
            let word = start + offset;
            let bit = word * 64 + row[word].trailing_zeros() as usize;
            match &self.pivots[bit] {
                Some(p) => {
                    for (dst, src) in row[word..].iter_mut().zip(&p[word..]) {
                        *dst ^= *src;
                    }
                    start = word;
                }
                None => {
                    self.pivots[bit] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Number of `u64` words needed for `bits` bits.
#[inline]
#[must_use]
pub fn packed_len(bits: usize) -> usize {
    bits.div_ceil(64)
}
