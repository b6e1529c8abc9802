//! Generalized Hamming weights of binary linear codes, computed three ways:
//! an exhaustive subcode oracle, graded Betti numbers of the Stanley–Reisner
//! ideal of the code's matroid, and Gröbner test sets of the binomial code
//! ideal.
//!
//! Coordinates are 0-based in the API and 1-based wherever they are printed.

pub mod analysis;
pub mod bits;
pub mod code;
pub mod error;
pub mod groebner;
pub mod matrix_file;
pub mod order;
pub mod resolution;

pub use bits::{BinaryMatrix, BitWord};
pub use code::{Code, GhwSequence};
pub use error::{Error, Result};
pub use groebner::{reduced_groebner_basis, Binomial, CosetTable, GroebnerBasis};
pub use order::{OrderKind, TermOrder};
pub use resolution::{betti_table_hochster, BettiTable, Characteristic, MonomialIdeal};
