//! Fixture codes shared by the benchmarks.

use ghw_core::{BinaryMatrix, Code};

pub const CODE_14_9: [&str; 9] = [
    "11010000010000",
    "11110100110001",
    "00100111110110",
    "11011100110001",
    "01111001001011",
    "00110110100101",
    "00101110111010",
    "01011010110110",
    "11111101000010",
];

pub const CODE_10_7: [&str; 7] =
    ["1000100111", "1111011111", "1001011000", "0011101001", "1010011001", "0011011100", "0011000111"];

#[must_use]
pub fn code(rows: &[&str]) -> Code {
    Code::from_generator(&BinaryMatrix::from_strs(rows).expect("valid rows")).expect("nonzero code")
}
