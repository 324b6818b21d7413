//! Plain-text generator matrices.
//!
//! One row per line, written as `0`/`1` characters with optional single
//! spaces between them. Lines whose first non-blank character is `#` are
//! comments; blank lines are skipped. All rows must have the same length.
//! Column `i` of the file is coordinate `i` of the word (0-based).

use thiserror::Error;

use super::BitWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number in the input.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    BadCharacter(char),
    #[error("spaces must separate single characters")]
    BadSpacing,
    #[error("row has length {found}, expected {expected}")]
    RaggedRow { expected: usize, found: usize },
    #[error("no data rows")]
    Empty,
}

pub fn parse_generator_matrix(text: &str) -> Result<Vec<BitWord>, ParseError> {
    let mut rows: Vec<BitWord> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = parse_row(line).map_err(|kind| ParseError {
            line: line_no,
            kind,
        })?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::RaggedRow {
                        expected: first.len(),
                        found: row.len(),
                    },
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError {
            line: last_line.max(1),
            kind: ParseErrorKind::Empty,
        });
    }
    Ok(rows)
}

fn parse_row(line: &str) -> Result<BitWord, ParseErrorKind> {
    let chars: Vec<char> = line.chars().collect();
    let mut bits = Vec::with_capacity(chars.len());
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '0' => bits.push(false),
            '1' => bits.push(true),
            ' ' => {
                // trimmed, so a space always has neighbours
                if chars[i - 1] == ' ' || chars[i + 1] == ' ' {
                    return Err(ParseErrorKind::BadSpacing);
                }
            }
            other => return Err(ParseErrorKind::BadCharacter(other)),
        }
    }
    Ok(BitWord::from_bits(bits))
}

/// Renders rows in the canonical compact form accepted by the parser.
pub fn format_generator_matrix(rows: &[BitWord]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}
