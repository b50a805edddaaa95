//! Parsing and rendering of the two on-disk ideal formats.
//!
//! Textual format: a header line `n=<INT>`, then one monomial per line; blank
//! lines and lines starting with `#` are skipped. Monomials follow the grammar
//!
//! ```text
//! monomial := "1" | factor ("*" factor)*
//! factor   := "x" INT ("^" INT)?
//! INT      := [1-9][0-9]*
//! ```
//!
//! with whitespace ignored around tokens; variable indices are 1-based and
//! must not exceed the header count; a repeated variable multiplies, so
//! `x1*x1` equals `x1^2`.
//!
//! Structured format: a JSON document `{"n": <count>, "gens": [[e1..en], ..]}`
//! with one exponent vector per generator. Both formats round-trip through
//! [`render_ideal_text`] and [`render_ideal_json`].

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, EXP_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Star,
    Caret,
    X,
    Int(u64),
}

/// Tokens of one line, each with its 1-based column.
fn lex(line: &str, line_no: usize) -> Result<Vec<(Tok, usize)>, Error> {
    let err = |column: usize, message: String| Error::Parse {
        line: line_no,
        column,
        message,
    };
    let mut toks = Vec::new();
    let mut chars = line.chars().peekable();
    let mut col = 0usize;
    while let Some(c) = chars.next() {
        col += 1;
        match c {
            c if c.is_whitespace() => {}
            '*' => toks.push((Tok::Star, col)),
            '^' => toks.push((Tok::Caret, col)),
            'x' => toks.push((Tok::X, col)),
            '1'..='9' => {
                let start = col;
                let mut value = u64::from(c as u8 - b'0');
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    chars.next();
                    col += 1;
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(u64::from(d as u8 - b'0')))
                        .ok_or_else(|| err(start, "number too large".to_string()))?;
                }
                toks.push((Tok::Int(value), start));
            }
            '0' => return Err(err(col, "number may not start with 0".to_string())),
            other => return Err(err(col, format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

fn parse_monomial_line(line: &str, n: usize, line_no: usize) -> Result<Monomial, Error> {
    let err = |column: usize, message: String| Error::Parse {
        line: line_no,
        column,
        message,
    };
    let toks = lex(line, line_no)?;
    let end_col = line.chars().count() + 1;
    if toks.is_empty() {
        return Err(err(end_col, "empty monomial".to_string()));
    }
    if let (Tok::Int(value), col) = toks[0] {
        if toks.len() == 1 && value == 1 {
            return Ok(Monomial::one(n));
        }
        return Err(err(
            col,
            "a bare integer monomial must be exactly \"1\"".to_string(),
        ));
    }

    let mut exps = vec![0u32; n];
    let mut pos = 0usize;
    loop {
        // factor := "x" INT ("^" INT)?
        match toks.get(pos) {
            Some(&(Tok::X, _)) => pos += 1,
            Some(&(tok, col)) => {
                return Err(err(col, format!("expected 'x', found {}", describe(tok))))
            }
            None => return Err(err(end_col, "expected 'x'".to_string())),
        }
        let index = match toks.get(pos) {
            Some(&(Tok::Int(value), col)) => {
                pos += 1;
                if value as usize > n || value == 0 {
                    return Err(err(
                        col,
                        format!("variable index {value} out of range 1..={n}"),
                    ));
                }
                value as usize
            }
            Some(&(tok, col)) => {
                return Err(err(
                    col,
                    format!("expected variable index, found {}", describe(tok)),
                ))
            }
            None => return Err(err(end_col, "expected variable index".to_string())),
        };
        let mut exponent = 1u64;
        if let Some(&(Tok::Caret, _)) = toks.get(pos) {
            pos += 1;
            match toks.get(pos) {
                Some(&(Tok::Int(value), col)) => {
                    pos += 1;
                    if value > u64::from(EXP_CAP) {
                        return Err(err(col, format!("exponent exceeds cap {EXP_CAP}")));
                    }
                    exponent = value;
                }
                Some(&(tok, col)) => {
                    return Err(err(
                        col,
                        format!("expected exponent, found {}", describe(tok)),
                    ))
                }
                None => return Err(err(end_col, "expected exponent".to_string())),
            }
        }
        let slot = &mut exps[index - 1];
        let total = u64::from(*slot) + exponent;
        if total > u64::from(EXP_CAP) {
            return Err(err(
                toks[pos - 1].1,
                format!("accumulated exponent of x{index} exceeds cap {EXP_CAP}"),
            ));
        }
        *slot = total as u32;

        match toks.get(pos) {
            None => break,
            Some(&(Tok::Star, _)) => pos += 1,
            Some(&(tok, col)) => {
                return Err(err(col, format!("expected '*', found {}", describe(tok))))
            }
        }
    }
    Ok(Monomial::new(exps))
}

fn describe(tok: Tok) -> String {
    match tok {
        Tok::Star => "'*'".to_string(),
        Tok::Caret => "'^'".to_string(),
        Tok::X => "'x'".to_string(),
        Tok::Int(v) => format!("number {v}"),
    }
}

/// Parses a single monomial in `n` variables from the textual grammar.
pub fn parse_monomial(input: &str, n: usize) -> Result<Monomial, Error> {
    parse_monomial_line(input, n, 1)
}

fn parse_header(line: &str, line_no: usize) -> Result<usize, Error> {
    let err = |message: String| Error::Parse {
        line: line_no,
        column: 1,
        message,
    };
    let trimmed = line.trim();
    let digits = trimmed
        .strip_prefix("n=")
        .ok_or_else(|| err("expected header line \"n=<count>\"".to_string()))?;
    if digits.is_empty()
        || digits.starts_with('0')
        || !digits.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(err(format!(
            "invalid variable count \"{digits}\" in header"
        )));
    }
    digits
        .parse::<usize>()
        .map_err(|_| err(format!("variable count \"{digits}\" too large")))
}

/// Parses the textual ideal format. Blank lines and `#` comments are
/// ignored everywhere, including before the header.
pub fn parse_ideal_text(input: &str) -> Result<MonomialIdeal, Error> {
    let mut lines = input
        .lines()
        .enumerate()
        .filter(|(_, line)| {
            let trimmed = line.trim();
            !trimmed.is_empty() && !trimmed.starts_with('#')
        });
    let (header_idx, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing header line \"n=<count>\"".to_string(),
    })?;
    let n = parse_header(header, header_idx + 1)?;
    let mut gens = Vec::new();
    for (idx, line) in lines {
        gens.push(parse_monomial_line(line, n, idx + 1)?);
    }
    MonomialIdeal::new(n, gens)
}

#[derive(Serialize, Deserialize)]
struct IdealDoc {
    n: usize,
    gens: Vec<Vec<u32>>,
}

/// Parses the structured (JSON) ideal format.
pub fn parse_ideal_json(input: &str) -> Result<MonomialIdeal, Error> {
    let doc: IdealDoc = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    for row in &doc.gens {
        if row.iter().any(|&e| e > EXP_CAP) {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("exponent exceeds cap {EXP_CAP}"),
            });
        }
    }
    MonomialIdeal::new(doc.n, doc.gens.into_iter().map(Monomial::new).collect())
}

/// Parses either on-disk format, deciding by the leading character: documents
/// starting with `{` are treated as JSON, anything else as text.
pub fn parse_ideal(input: &str) -> Result<MonomialIdeal, Error> {
    if input.trim_start().starts_with('{') {
        parse_ideal_json(input)
    } else {
        parse_ideal_text(input)
    }
}

/// Renders the textual format; [`parse_ideal_text`] inverts this exactly.
pub fn render_ideal_text(ideal: &MonomialIdeal) -> String {
    ideal.to_string()
}

/// Renders the structured format; [`parse_ideal_json`] inverts this exactly.
pub fn render_ideal_json(ideal: &MonomialIdeal) -> String {
    let doc = IdealDoc {
        n: ideal.num_vars(),
        gens: ideal
            .gens()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("ideal document serializes");
    out.push('\n');
    out
}
