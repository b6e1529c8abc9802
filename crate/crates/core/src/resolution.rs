//! Square-free monomial ideals and their graded Betti numbers.
//!
//! Betti numbers of `R/I` for a square-free monomial ideal `I` come from
//! Hochster's formula
//!
//! ```text
//! β_{i,j}(R/I) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ|_W)
//! ```
//!
//! where `Δ` is the simplicial complex whose non-faces are the supersets of
//! generator supports and `Δ|_W` its restriction to the vertex set `W`. When
//! some vertex of `W` lies in no generator contained in `W`, that vertex is a
//! cone point of `Δ|_W` and the restriction is acyclic, so only unions of
//! generator supports are visited.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{packed_len, BitWord, PackedEliminator};
use crate::error::{check_cap, Error, Result};

/// A square-free monomial ideal, stored by its inclusion-minimal generator
/// supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<BitWord>,
}

impl MonomialIdeal {
    /// Keeps the inclusion-minimal supports among `supports`, sorted.
    ///
    /// # Panics
    /// Panics if a support does not have length `n`.
    pub fn from_supports(n: usize, supports: impl IntoIterator<Item = BitWord>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        let mut all: Vec<BitWord> = supports.into_iter().collect();
        assert!(all.iter().all(|s| s.len() == n), "support length differs from {n}");
        all.sort_unstable_by_key(|s| (s.weight(), s.bits()));
        all.dedup();
        let mut gens: Vec<BitWord> = Vec::with_capacity(all.len());
        for s in all {
            if !gens.iter().any(|g| g.is_subset_of(s)) {
                gens.push(s);
            }
        }
        gens.sort_unstable();
        Ok(Self { n, gens })
    }

    #[must_use]
    pub fn ambient(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn generators(&self) -> &[BitWord] {
        &self.gens
    }

    /// Whether `X^w` lies in the ideal.
    #[must_use]
    pub fn contains(&self, w: BitWord) -> bool {
        self.gens.iter().any(|g| g.is_subset_of(w))
    }

    #[must_use]
    pub fn complex(&self) -> SimplicialComplexView<'_> {
        SimplicialComplexView { ideal: self }
    }
}

/// The Stanley–Reisner complex of an ideal: `σ` is a face iff `X^σ ∉ I`.
#[derive(Clone, Copy, Debug)]
pub struct SimplicialComplexView<'a> {
    ideal: &'a MonomialIdeal,
}

impl SimplicialComplexView<'_> {
    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.ideal.n
    }

    #[must_use]
    pub fn is_face(&self, sigma: BitWord) -> bool {
        !self.ideal.contains(sigma)
    }

    /// Faces of `Δ|_W` grouped by size (`by_size[s]` holds the faces of
    /// dimension `s - 1`).
    #[must_use]
    pub fn restricted_faces(&self, w: BitWord) -> RestrictedFaces {
        let n = self.ideal.n;
        RestrictedFaces::collect(w.bits(), |s| self.is_face(BitWord::from_bits(n, s)))
    }
}

/// Faces of a restricted complex, packed masks grouped by size and sorted
/// within each group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RestrictedFaces {
    pub by_size: Vec<Vec<u32>>,
}

impl RestrictedFaces {
    fn collect(w: u32, is_face: impl Fn(u32) -> bool) -> Self {
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); w.count_ones() as usize + 1];
        // Submasks of w in increasing numeric order.
        let mut s = 0u32;
        loop {
            if is_face(s) {
                by_size[s.count_ones() as usize].push(s);
            }
            if s == w {
                break;
            }
            s = (s.wrapping_sub(w)) & w;
        }
        while by_size.last().is_some_and(Vec::is_empty) {
            by_size.pop();
        }
        Self { by_size }
    }

    /// `f_{s-1}` for `s = 0..`: face counts by size.
    #[must_use]
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_size.iter().map(Vec::len).collect()
    }

    #[must_use]
    pub fn is_void(&self) -> bool {
        self.by_size.iter().all(Vec::is_empty)
    }

    /// Reduced Euler characteristic `Σ_d (-1)^d f_d`, starting at `d = -1`.
    #[must_use]
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.by_size
            .iter()
            .enumerate()
            .map(|(s, faces)| if s % 2 == 1 { faces.len() as i64 } else { -(faces.len() as i64) })
            .sum()
    }
}

/// Coefficient field characteristic for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Characteristic(u32);

impl Characteristic {
    pub const TWO: Self = Self(2);

    pub fn new(p: u32) -> Result<Self> {
        let prime = (2..65536).contains(&p) && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if prime {
            Ok(Self(p))
        } else {
            Err(Error::UnsupportedCharacteristic(p))
        }
    }

    #[must_use]
    pub fn get(self) -> u32 {
        self.0
    }
}

impl Default for Characteristic {
    fn default() -> Self {
        Self::TWO
    }
}

/// Nonzero reduced homology dimensions keyed by homological degree (`-1..`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyDims {
    pub dims: BTreeMap<i32, usize>,
}

impl HomologyDims {
    #[must_use]
    pub fn get(&self, d: i32) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    #[must_use]
    pub fn is_acyclic(&self) -> bool {
        self.dims.is_empty()
    }

    #[must_use]
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().map(|(&d, &h)| if d.rem_euclid(2) == 0 { h as i64 } else { -(h as i64) }).sum()
    }
}

fn face_index(faces: &[u32], face: u32) -> usize {
    faces.binary_search(&face).expect("boundary face of a face is a face")
}

/// Rank of the boundary map from faces of size `s` to faces of size `s - 1`.
fn boundary_rank(faces: &RestrictedFaces, s: usize, p: Characteristic) -> usize {
    let upper = &faces.by_size[s];
    let lower = &faces.by_size[s - 1];
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    if p.get() == 2 {
        let width = packed_len(lower.len());
        let mut elim = PackedEliminator::new(lower.len());
        for &sigma in upper {
            let mut row = vec![0u64; width];
            let mut rest = sigma;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                let idx = face_index(lower, sigma ^ bit);
                row[idx / 64] |= 1 << (idx % 64);
                rest ^= bit;
            }
            elim.insert(row);
        }
        elim.rank()
    } else {
        let q = p.get();
        let rows: Vec<Vec<u32>> = upper
            .iter()
            .map(|&sigma| {
                let mut row = vec![0u32; lower.len()];
                let mut rest = sigma;
                let mut j = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    row[face_index(lower, sigma ^ bit)] = if j % 2 == 0 { 1 } else { q - 1 };
                    rest ^= bit;
                    j += 1;
                }
                row
            })
            .collect();
        rank_mod_p(rows, q)
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2).
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Dense Gaussian elimination over GF(p).
#[must_use]
pub fn rank_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let p64 = u64::from(p);
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = inv_mod(u64::from(rows[rank][c]), p64);
        for x in rows[rank].iter_mut() {
            *x = (u64::from(*x) * inv % p64) as u32;
        }
        let pivot = rows[rank].clone();
        for r in (rank + 1)..rows.len() {
            let factor = u64::from(rows[r][c]);
            if factor == 0 {
                continue;
            }
            for (x, &y) in rows[r].iter_mut().zip(&pivot).skip(c) {
                *x = ((u64::from(*x) + p64 - factor * u64::from(y) % p64) % p64) as u32;
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced simplicial homology of the augmented chain complex, where the
/// empty face spans the degree `-1` chains. The complex `{∅}` has
/// `H̃_{-1} = 1`; the void complex has no homology.
#[must_use]
pub fn reduced_homology_dims(faces: &RestrictedFaces, p: Characteristic) -> HomologyDims {
    let f = faces.f_vector();
    let mut ranks = vec![0usize; f.len() + 1];
    for s in 1..f.len() {
        ranks[s] = boundary_rank(faces, s, p);
    }
    let mut dims = BTreeMap::new();
    for s in 0..f.len() {
        let h = f[s] - ranks[s] - ranks[s + 1];
        if h > 0 {
            dims.insert(s as i32 - 1, h);
        }
    }
    HomologyDims { dims }
}

/// Sparse graded Betti table `(i, j) -> β_{i,j}` of a quotient ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

/// Serialized as the sorted list of nonzero `{i, j, beta}` entries.
impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<BettiEntry>::deserialize(d)?;
        Ok(Self::from_entries(entries.into_iter().map(|e| ((e.i, e.j), e.beta))))
    }
}

/// One `β_{i,j}` entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub beta: u64,
}

impl BettiTable {
    #[must_use]
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        Self { entries: entries.into_iter().filter(|&(_, b)| b > 0).collect() }
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    /// Nonzero entries sorted by `(i, j)`.
    #[must_use]
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries.iter().map(|(&(i, j), &beta)| BettiEntry { i, j, beta }).collect()
    }

    /// Projective dimension: the largest `i` with a nonzero entry.
    #[must_use]
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `(i, min{j : β_{i,j} ≠ 0})` for `i = 1..=pd`, skipping empty columns.
    #[must_use]
    pub fn min_shift_sequence(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &(i, j) in self.entries.keys() {
            if i >= 1 && out.last().map_or(true, |&(last, _)| last != i) {
                out.push((i, j));
            }
        }
        out
    }

    /// The minimum shifts alone, in order of `i`.
    #[must_use]
    pub fn min_shifts(&self) -> Vec<usize> {
        self.min_shift_sequence().into_iter().map(|(_, j)| j).collect()
    }

    /// `Σ_j β_{i,j}` for `i = 0..=pd`: the ranks of the free modules.
    #[must_use]
    pub fn row_sums(&self) -> Vec<u64> {
        let mut sums = vec![0u64; self.projective_dimension() + 1];
        for (&(i, _), &b) in &self.entries {
            sums[i] += b;
        }
        sums
    }

    /// Coefficients of the K-polynomial `Σ_{i,j} (-1)^i β_{i,j} t^j`, the
    /// numerator of the Hilbert series over `(1 - t)^n`.
    #[must_use]
    pub fn k_polynomial(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut coeffs = vec![0i64; top + 1];
        for (&(i, j), &b) in &self.entries {
            let b = b as i64;
            coeffs[j] += if i % 2 == 0 { b } else { -b };
        }
        coeffs
    }

    /// Every homological degree has a single shift.
    #[must_use]
    pub fn is_pure(&self) -> bool {
        let seq = self.min_shift_sequence();
        self.entries.keys().filter(|&&(i, _)| i >= 1).all(|&(i, j)| seq.iter().any(|&(si, sj)| si == i && sj == j))
    }

    /// All entries past the origin lie in one row of the diagram.
    #[must_use]
    pub fn is_linear(&self) -> bool {
        let mut rows = self.entries.keys().filter(|&&(i, _)| i >= 1).map(|&(i, j)| j - i);
        match rows.next() {
            Some(r) => rows.all(|x| x == r),
            None => true,
        }
    }

    /// Diagram with columns `i = 0..=pd`, rows `r = j - i`, entry
    /// `β_{i, r + i}`; zeros printed as `0`.
    #[must_use]
    pub fn render(&self) -> String {
        let pd = self.projective_dimension();
        let rows = self.entries.keys().map(|&(i, j)| j.saturating_sub(i)).max().unwrap_or(0);
        let width = self
            .entries
            .values()
            .map(|b| b.to_string().len())
            .chain(std::iter::once(pd.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = rows.to_string().len();
        let mut out = String::new();
        let header: Vec<String> = (0..=pd).map(|i| format!("{i:>width$}")).collect();
        out.push_str(&format!("{:label$} | {}\n", "", header.join(" ")));
        out.push_str(&format!("{}-+-{}\n", "-".repeat(label), "-".repeat(header.join(" ").len())));
        for r in 0..=rows {
            let cells: Vec<String> = (0..=pd).map(|i| format!("{:>width$}", self.get(i, r + i))).collect();
            out.push_str(&format!("{r:>label$} | {}\n", cells.join(" ")));
        }
        out
    }

    /// Parses the output of [`BettiTable::render`].
    pub fn parse_diagram(text: &str) -> Result<Self> {
        let mut table = Self::default();
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let bad = |line: usize, message: &str| Error::Parse { line: line + 1, message: message.into() };
        let (hline, header) = lines.next().ok_or_else(|| bad(0, "empty diagram"))?;
        let (_, cols) = header.split_once('|').ok_or_else(|| bad(hline, "missing '|' in header"))?;
        let col_ids = cols
            .split_whitespace()
            .map(|c| c.parse::<usize>().map_err(|_| bad(hline, "bad column label")))
            .collect::<Result<Vec<_>>>()?;
        for (lno, line) in lines {
            if line.trim_start().starts_with('-') {
                continue;
            }
            let (row, cells) = line.split_once('|').ok_or_else(|| bad(lno, "missing '|'"))?;
            let r: usize = row.trim().parse().map_err(|_| bad(lno, "bad row label"))?;
            let values: Vec<&str> = cells.split_whitespace().collect();
            if values.len() != col_ids.len() {
                return Err(bad(lno, "row width differs from header"));
            }
            for (&i, v) in col_ids.iter().zip(values) {
                let beta: u64 = v.parse().map_err(|_| bad(lno, "bad entry"))?;
                table.add(i, r + i, beta);
            }
        }
        Ok(table)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Counters from a Hochster sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HochsterStats {
    /// Restricted complexes whose homology was computed.
    pub complexes: u64,
    /// Restrictions skipped because some vertex is a cone point.
    pub cones_skipped: u64,
    /// Restricted complexes whose homology disagreed with their face counts.
    pub euler_violations: u64,
}

/// Graded Betti numbers of `R / ideal` over a field of characteristic `p`.
pub fn betti_table_hochster_with(ideal: &MonomialIdeal, p: Characteristic) -> Result<(BettiTable, HochsterStats)> {
    let n = ideal.n;
    check_cap("betti table", n)?;
    let size = 1usize << n;
    // Face table by DP: σ is a non-face iff it is a generator or drops to a
    // non-face after removing one vertex.
    let mut nonface = vec![false; size];
    for g in &ideal.gens {
        nonface[g.bits() as usize] = true;
    }
    for m in 1..size {
        if nonface[m] {
            continue;
        }
        let mut rest = m;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if nonface[m ^ bit] {
                nonface[m] = true;
                break;
            }
            rest ^= bit;
        }
    }
    let gens: Vec<u32> = ideal.gens.iter().map(|g| g.bits()).collect();
    let width = n + 1;

    let (cells, stats) = (0..size as u32)
        .into_par_iter()
        .fold(
            || (vec![0u64; width * width], HochsterStats::default()),
            |(mut cells, mut stats), w| {
                let covered = gens.iter().filter(|&&g| g & !w == 0).fold(0u32, |acc, &g| acc | g);
                if covered != w {
                    stats.cones_skipped += 1;
                    return (cells, stats);
                }
                let faces = RestrictedFaces::collect(w, |s| !nonface[s as usize]);
                let homology = reduced_homology_dims(&faces, p);
                stats.complexes += 1;
                if homology.euler_characteristic() != faces.reduced_euler_characteristic() {
                    stats.euler_violations += 1;
                }
                let j = w.count_ones() as usize;
                for (&d, &h) in &homology.dims {
                    let i = (j as i32 - d - 1) as usize;
                    cells[i * width + j] += h as u64;
                }
                (cells, stats)
            },
        )
        .reduce(
            || (vec![0u64; width * width], HochsterStats::default()),
            |(mut a, sa), (b, sb)| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                (
                    a,
                    HochsterStats {
                        complexes: sa.complexes + sb.complexes,
                        cones_skipped: sa.cones_skipped + sb.cones_skipped,
                        euler_violations: sa.euler_violations + sb.euler_violations,
                    },
                )
            },
        );
    let table = BettiTable::from_entries(cells.into_iter().enumerate().map(|(idx, b)| ((idx / width, idx % width), b)));
    Ok((table, stats))
}

/// Graded Betti numbers of `R / ideal` over GF(2).
pub fn betti_table_hochster(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_table_hochster_with(ideal, Characteristic::TWO).map(|(t, _)| t)
}

/// Smallest second-step shift of the Taylor resolution:
/// `min_{a<b} |supp(g_a) ∪ supp(g_b)|`.
pub fn taylor_pair_minimum(ideal: &MonomialIdeal) -> Result<usize> {
    let gens = &ideal.gens;
    if gens.len() < 2 {
        return Err(Error::TooFewGenerators { found: gens.len() });
    }
    Ok(gens
        .iter()
        .enumerate()
        .flat_map(|(a, &ga)| gens[a + 1..].iter().map(move |&gb| (ga | gb).weight()))
        .min()
        .expect("at least one pair"))
}
