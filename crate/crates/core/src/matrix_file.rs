//! Plain-text matrix files: one row per line, entries `0`/`1` separated by
//! whitespace. Blank lines and `#` comments are ignored.

use crate::bits::{BinaryMatrix, BitWord, MAX_WORD_LEN};
use crate::error::{Error, Result};

pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    let mut rows = Vec::new();
    let mut cols = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut entries = Vec::new();
        for tok in line.split_whitespace() {
            match tok {
                "0" => entries.push(false),
                "1" => entries.push(true),
                other => {
                    return Err(Error::Parse { line: line_no, message: format!("entry {other:?} is not 0 or 1") });
                }
            }
        }
        match cols {
            None => {
                if entries.len() > MAX_WORD_LEN {
                    return Err(Error::LengthCapExceeded { n: entries.len(), cap: MAX_WORD_LEN });
                }
                cols = Some(entries.len());
            }
            Some(c) if c != entries.len() => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("row has {} entries, expected {c}", entries.len()),
                });
            }
            Some(_) => {}
        }
        let coords: Vec<usize> = entries.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
        rows.push(BitWord::from_support(entries.len(), &coords));
    }
    let Some(cols) = cols else {
        return Err(Error::Parse { line: text.lines().count().max(1), message: "no matrix rows found".into() });
    };
    BinaryMatrix::new(cols, rows)
}

#[must_use]
pub fn render_matrix(m: &BinaryMatrix) -> String {
    m.to_string()
}
