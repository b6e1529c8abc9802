#![allow(dead_code)]

use std::path::PathBuf;

use ghw_core::matrix_file::parse_matrix;
use ghw_core::{BettiTable, BitWord, Code};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

pub fn load(name: &str) -> Code {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture exists");
    Code::from_generator(&parse_matrix(&text).expect("fixture parses")).expect("fixture is a code")
}

pub fn words(ws: &[&str]) -> Vec<BitWord> {
    let mut v: Vec<BitWord> = ws.iter().map(|s| BitWord::parse(s).unwrap()).collect();
    v.sort_unstable();
    v
}

pub fn diagram(text: &str) -> BettiTable {
    BettiTable::parse_diagram(text).expect("diagram literal parses")
}

pub const TOY_SR: &str = "
  | 0 1 2 3
--+--------
0 | 1 0 0 0
1 | 0 1 0 0
2 | 0 3 2 0
3 | 0 2 7 4
";

pub const TOY_TESTSET: &str = "
  | 0 1 2 3
--+--------
0 | 1 0 0 0
1 | 0 1 0 0
2 | 0 2 1 0
3 | 0 4 4 2
";

pub const CODE_14_9_SR: &str = "
  |  0  1    2    3     4     5     6     7    8   9
--+-------------------------------------------------
0 |  1  0    0    0     0     0     0     0    0   0
1 |  0  2    0    0     0     0     0     0    0   0
2 |  0  8    5    0     0     0     0     0    0   0
3 |  0 34   82   48     8     0     0     0    0   0
4 |  0 52  441  897   753   289    42     0    0   0
5 |  0 51 1345 7410 18309 25248 21008 10579 2990 366
";

pub const CODE_14_9_TESTSET: &str = "
  | 0  1  2   3    4    5    6   7  8 9
--+------------------------------------
0 | 1  0  0   0    0    0    0   0  0 0
1 | 0  2  0   0    0    0    0   0  0 0
2 | 0  6  3   0    0    0    0   0  0 0
3 | 0 13 38  17    2    0    0   0  0 0
4 | 0  3 92 194  130   35    3   0  0 0
5 | 0  0 83 599 1410 1621 1040 378 71 5
6 | 0  0  0   0    2    5    4   1  0 0
";

pub const CODE_10_7_SR: &str = "
  | 0  1   2   3   4   5   6  7
--+----------------------------
0 | 1  0   0   0   0   0   0  0
1 | 0  4   0   0   0   0   0  0
2 | 0 18  48  32   7   0   0  0
3 | 0 20 214 637 874 637 242 38
";

pub const CODE_10_7_TESTSET: &str = "
  | 0 1  2  3  4  5 6
--+------------------
0 | 1 0  0  0  0  0 0
1 | 0 4  0  0  0  0 0
2 | 0 4 14  5  0  0 0
3 | 0 2 23 56 48 17 2
";

pub const HAMMING_UNION: &str = "
  | 0 1  2  3 4
--+------------
0 | 1 0  0  0 0
1 | 0 0  0  0 0
2 | 0 7  0  0 0
3 | 0 0 21 21 6
";
