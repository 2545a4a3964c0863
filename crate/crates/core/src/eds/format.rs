//! Text format: seeds are runs of letters, symbols are `{alt,alt,...}`.
//!
//! Whitespace (including newlines and carriage returns) is ignored anywhere
//! in the input. An alternative may be empty (`{a,}`), braces do not nest,
//! and `{}` is rejected.

use std::fmt;

use thiserror::Error;

use super::{is_permitted_letter, DegenerateSymbol, EdsText};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnclosedBrace,
    UnmatchedCloseBrace,
    CommaOutsideBraces,
    NestedBrace,
    EmptySymbol,
    InvalidLetter(u8),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnclosedBrace => f.write_str("unclosed '{'"),
            Self::UnmatchedCloseBrace => f.write_str("'}' without matching '{'"),
            Self::CommaOutsideBraces => f.write_str("',' outside of a symbol"),
            Self::NestedBrace => f.write_str("nested '{'"),
            Self::EmptySymbol => f.write_str("symbol '{}' has no alternatives"),
            Self::InvalidLetter(b) if b.is_ascii_graphic() => {
                write!(f, "invalid letter '{}'", *b as char)
            }
            Self::InvalidLetter(b) => write!(f, "invalid byte 0x{b:02x}"),
        }
    }
}

/// A syntax error with the byte offset (0-based) it was detected at.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at byte offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(offset: usize, kind: ParseErrorKind) -> Self {
        Self { offset, kind }
    }
}

pub fn parse_eds(input: &[u8]) -> Result<EdsText, ParseError> {
    let mut seeds = Vec::new();
    let mut symbols = Vec::new();
    let mut seed = Vec::new();
    // Some((open offset, finished alternatives, current alternative)) while inside braces.
    let mut open: Option<(usize, Vec<Vec<u8>>, Vec<u8>)> = None;

    for (offset, &b) in input.iter().enumerate() {
        if b.is_ascii_whitespace() {
            continue;
        }
        match (b, &mut open) {
            (b'{', None) => {
                seeds.push(std::mem::take(&mut seed));
                open = Some((offset, Vec::new(), Vec::new()));
            }
            (b'{', Some(_)) => return Err(ParseError::new(offset, ParseErrorKind::NestedBrace)),
            (b'}', None) => {
                return Err(ParseError::new(offset, ParseErrorKind::UnmatchedCloseBrace))
            }
            (b'}', Some((start, alts, current))) => {
                if alts.is_empty() && current.is_empty() {
                    return Err(ParseError::new(*start, ParseErrorKind::EmptySymbol));
                }
                alts.push(std::mem::take(current));
                let alternatives = std::mem::take(alts);
                symbols.push(DegenerateSymbol { alternatives });
                open = None;
            }
            (b',', None) => {
                return Err(ParseError::new(offset, ParseErrorKind::CommaOutsideBraces))
            }
            (b',', Some((_, alts, current))) => alts.push(std::mem::take(current)),
            (b, _) if !is_permitted_letter(b) => {
                return Err(ParseError::new(offset, ParseErrorKind::InvalidLetter(b)))
            }
            (b, None) => seed.push(b),
            (b, Some((_, _, current))) => current.push(b),
        }
    }
    if let Some((start, ..)) = open {
        return Err(ParseError::new(start, ParseErrorKind::UnclosedBrace));
    }
    seeds.push(seed);

    // Letters are validated above, and `{}` is the only spelling of a lone
    // empty alternative.
    Ok(EdsText::new(seeds, symbols).expect("parser output is a valid text"))
}

/// Writes the canonical form: no whitespace, no trailing newline.
pub fn serialize_eds(text: &EdsText) -> Vec<u8> {
    let mut out = Vec::with_capacity(text.total_size() + 3 * text.symbols().len());
    for (i, seed) in text.seeds().iter().enumerate() {
        out.extend_from_slice(seed);
        if let Some(symbol) = text.symbols().get(i) {
            out.push(b'{');
            for (j, alt) in symbol.alternatives().iter().enumerate() {
                if j > 0 {
                    out.push(b',');
                }
                out.extend_from_slice(alt);
            }
            out.push(b'}');
        }
    }
    out
}

impl fmt::Display for EdsText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Letters are ASCII by construction.
        f.write_str(&String::from_utf8_lossy(&serialize_eds(self)))
    }
}
