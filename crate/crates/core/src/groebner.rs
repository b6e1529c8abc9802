//! Reduced Gröbner bases of binary code ideals.
//!
//! For a binary code `C` of length `n` the code ideal is generated by the
//! binomials `X^a - X^b` with `a + b ∈ C` together with the quadrics
//! `x_i² - 1`. Under a degree-compatible order every non-square-free monomial
//! is divisible by some `x_i²`, so only the `2^n` square-free monomials matter
//! and the quadrics are kept implicit.
//!
//! The basis is found by walking the square-free monomials in increasing
//! order. A monomial divisible by a recorded leading term is skipped. Any other
//! monomial is either the first (hence smallest) member of its coset, which
//! makes it a coset leader, or it is a minimal generator of the initial ideal
//! whose normal form is the already recorded leader of its coset.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{BinaryMatrix, BitWord};
use crate::code::Code;
use crate::error::{check_cap, Result};
use crate::order::TermOrder;

/// `X^lead - X^trail` with `lead ≻ trail`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub lead: BitWord,
    pub trail: BitWord,
}

impl Binomial {
    /// `supp(X^A - X^B) = A ∪ B`.
    #[must_use]
    pub fn support(&self) -> BitWord {
        self.lead | self.trail
    }

    /// The codeword `A + B`.
    #[must_use]
    pub fn codeword(&self) -> BitWord {
        self.lead ^ self.trail
    }

    /// `A ∩ B = ∅`.
    #[must_use]
    pub fn is_standard_form(&self) -> bool {
        (self.lead & self.trail).is_zero()
    }
}

fn monomial(w: BitWord) -> String {
    if w.is_zero() {
        "1".into()
    } else {
        w.iter_ones().map(|i| format!("x{}", i + 1)).collect()
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", monomial(self.lead), monomial(self.trail))
    }
}

/// Square-free part of a reduced Gröbner basis. The quadrics `x_i² - 1` are
/// implicit: one for every variable that is not itself a leading term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: TermOrder,
    binomials: Vec<Binomial>,
    quadrics: usize,
}

impl GroebnerBasis {
    #[must_use]
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Square-free binomials in increasing leading-term order.
    #[must_use]
    pub fn binomials(&self) -> &[Binomial] {
        &self.binomials
    }

    #[must_use]
    pub fn quadric_count(&self) -> usize {
        self.quadrics
    }

    /// Number of basis elements including the quadrics.
    #[must_use]
    pub fn total_len(&self) -> usize {
        self.binomials.len() + self.quadrics
    }

    /// The test set: distinct codewords `lead + trail`, sorted.
    #[must_use]
    pub fn test_set(&self) -> Vec<BitWord> {
        let mut words: Vec<BitWord> = self.binomials.iter().map(Binomial::codeword).collect();
        words.sort_unstable();
        words.dedup();
        words
    }

    /// Binomials not in standard form. Expected empty; reported, not fixed.
    #[must_use]
    pub fn standard_form_violations(&self) -> Vec<Binomial> {
        self.binomials.iter().copied().filter(|b| !b.is_standard_form()).collect()
    }

    /// Whether some basis binomial has exactly this support.
    #[must_use]
    pub fn has_support(&self, support: BitWord) -> bool {
        self.binomials.iter().any(|b| b.support() == support)
    }

    /// Checks reducedness by direct subset scans: leading terms pairwise
    /// non-dividing, trailing terms outside the initial ideal, leads above
    /// trails.
    pub fn check_reduced(&self) -> Result<(), String> {
        for (i, a) in self.binomials.iter().enumerate() {
            if self.order.compare(a.lead, a.trail) != std::cmp::Ordering::Greater {
                return Err(format!("{a}: leading term is not the larger one"));
            }
            for (j, b) in self.binomials.iter().enumerate() {
                if i != j && b.lead.is_subset_of(a.lead) {
                    return Err(format!("leading term of {b} divides that of {a}"));
                }
                if b.lead.is_subset_of(a.trail) {
                    return Err(format!("leading term of {b} divides the trailing term of {a}"));
                }
            }
        }
        Ok(())
    }
}

/// Map from syndrome to the ≺-minimal word of the corresponding coset.
#[derive(Clone, Debug)]
pub struct CosetTable {
    order: TermOrder,
    parity: BinaryMatrix,
    leaders: Vec<BitWord>,
}

impl CosetTable {
    #[must_use]
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Leaders indexed by syndrome; `2^(n-k)` entries.
    #[must_use]
    pub fn leaders(&self) -> &[BitWord] {
        &self.leaders
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.leaders.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.leaders.is_empty()
    }

    /// The canonical coset leader of `w + C`.
    pub fn normal_form(&self, w: BitWord) -> Result<BitWord> {
        let n = self.parity.col_count();
        if w.len() != n {
            return Err(crate::error::Error::LengthMismatch { expected: n, found: w.len() });
        }
        Ok(self.leaders[self.parity.mul_vec(w) as usize])
    }

    /// `w` minus its coset leader: a nearest codeword.
    pub fn decode(&self, w: BitWord) -> Result<BitWord> {
        Ok(w ^ self.normal_form(w)?)
    }
}

/// Reduced Gröbner basis and coset-leader table of the code ideal of `code`.
pub fn reduced_groebner_basis(code: &Code, order: &TermOrder) -> Result<(GroebnerBasis, CosetTable)> {
    let n = code.len();
    check_cap("groebner basis", n)?;
    if order.len() != n {
        return Err(crate::error::Error::InvalidOrder(format!(
            "order has {} variables, code has length {n}",
            order.len()
        )));
    }
    let size = 1usize << n;
    let parity = code.parity().clone();
    let cols: Vec<u32> = (0..n).map(|c| parity.column_bits(c)).collect();

    let mut syndrome = vec![0u32; size];
    for m in 1..size {
        syndrome[m] = syndrome[m & (m - 1)] ^ cols[m.trailing_zeros() as usize];
    }

    let keys = order.key_table();
    let mut walk: Vec<u32> = (0..size as u32).collect();
    walk.sort_unstable_by_key(|&m| keys[m as usize]);

    const UNSEEN: u32 = u32::MAX;
    let mut leader = vec![UNSEEN; 1usize << parity.row_count()];
    let mut in_initial = vec![false; size];
    let mut binomials = Vec::new();
    for &m in &walk {
        let mi = m as usize;
        // Every proper divisor precedes m, so one-step divisors settle
        // membership in the initial ideal.
        let mut rest = m;
        let mut divisible = false;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if in_initial[(m ^ bit) as usize] {
                divisible = true;
                break;
            }
            rest ^= bit;
        }
        if divisible {
            in_initial[mi] = true;
            continue;
        }
        let slot = &mut leader[syndrome[mi] as usize];
        if *slot == UNSEEN {
            *slot = m;
        } else {
            binomials.push(Binomial { lead: BitWord::from_bits(n, m), trail: BitWord::from_bits(n, *slot) });
            in_initial[mi] = true;
        }
    }

    let linear_leads = binomials.iter().filter(|b| b.lead.weight() == 1).count();
    let leaders = leader.into_iter().map(|m| BitWord::from_bits(n, m)).collect();
    Ok((
        GroebnerBasis { order: order.clone(), binomials, quadrics: n - linear_leads },
        CosetTable { order: order.clone(), parity, leaders },
    ))
}
