//! Plain-text Cayley table files.
//!
//! ```text
//! # optional comment lines
//! 3
//! 0 0 0
//! 0 1 2
//! 0 2 1
//! ```
//!
//! The first token is the order `n`, followed by `n²` 0-based entries in
//! row-major order, separated by arbitrary whitespace.

use std::fmt;

use moufang_core::Magma;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(text: &str) -> impl Iterator<Item = Token<'_>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .flat_map(|(ln, line)| {
            let mut out = Vec::new();
            let mut start = None;
            for (col, (byte, ch)) in line.char_indices().enumerate() {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some((byte, col)),
                    (true, Some((b, c))) => {
                        out.push(Token {
                            text: &line[b..byte],
                            line: ln + 1,
                            column: c + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some((b, c)) = start {
                out.push(Token {
                    text: &line[b..],
                    line: ln + 1,
                    column: c + 1,
                });
            }
            out
        })
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_table(text: &str) -> Result<Magma, ParseError> {
    let mut toks = tokens(text);
    let end_line = text.lines().count().max(1);
    let first = toks
        .next()
        .ok_or_else(|| err(end_line, 1, "missing order"))?;
    let order: usize = first.text.parse().map_err(|_| {
        err(
            first.line,
            first.column,
            format!("invalid order `{}`", first.text),
        )
    })?;
    if order == 0 {
        return Err(err(first.line, first.column, "order must be at least 1"));
    }
    let expected = order
        .checked_mul(order)
        .ok_or_else(|| err(first.line, first.column, "order too large"))?;
    let mut entries = Vec::with_capacity(expected);
    for tok in toks {
        if entries.len() == expected {
            return Err(err(
                tok.line,
                tok.column,
                format!(
                    "unexpected extra entry `{}` (expected {expected} entries)",
                    tok.text
                ),
            ));
        }
        let value: usize = tok.text.parse().map_err(|_| {
            err(
                tok.line,
                tok.column,
                format!("invalid entry `{}`", tok.text),
            )
        })?;
        if value >= order {
            return Err(err(
                tok.line,
                tok.column,
                format!("entry {value} is outside [0, {order})"),
            ));
        }
        entries.push(value);
    }
    if entries.len() < expected {
        return Err(err(
            end_line,
            1,
            format!("expected {expected} entries, found {}", entries.len()),
        ));
    }
    Ok(Magma::new(order, &entries).expect("entries validated"))
}

/// Canonical text form: the order, then one line per row, `\n`-terminated.
pub fn write_table(magma: &Magma) -> String {
    let mut out = format!("{}\n", magma.order());
    for row in magma.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let m = parse_table("# chain\n# k = 2\n2\n0 0\n0 1\n").unwrap();
        assert_eq!(m.entries(), vec![0, 0, 0, 1]);
        let m = parse_table("1 0").unwrap();
        assert_eq!(m.order(), 1);
    }

    #[test]
    fn writes_canonical_text() {
        let m = Magma::new(2, &[0, 0, 0, 1]).unwrap();
        assert_eq!(write_table(&m), "2\n0 0\n0 1\n");
    }

    #[test]
    fn error_positions() {
        let e = parse_table("2\n0 x\n0 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_table("2\n0 0\n0 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse_table("2\n0 0\n0 1 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 5));
        let e = parse_table("# only a comment\n").unwrap_err();
        assert_eq!(e.message, "missing order");
        let e = parse_table("  0\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        let e = parse_table("2\n0 0 0\n").unwrap_err();
        assert!(e.message.contains("expected 4 entries"));
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..6, seed in prop::collection::vec(0usize..1000, 36)) {
            let entries: Vec<usize> = seed.iter().take(n * n).map(|v| v % n).collect();
            let m = Magma::new(n, &entries).unwrap();
            prop_assert_eq!(parse_table(&write_table(&m)).unwrap(), m);
        }
    }
}
