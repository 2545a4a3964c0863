//! Building a text from a linear reference and a list of variant sites.

use thiserror::Error;

use super::{first_invalid_letter, DegenerateSymbol, EdsText};

/// A variant site: `reference[pos..pos + ref_allele.len()]` may be replaced
/// by any of `alts`. `pos` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variant {
    pub pos: usize,
    pub ref_allele: Vec<u8>,
    pub alts: Vec<Vec<u8>>,
}

impl Variant {
    pub fn new(pos: usize, ref_allele: impl Into<Vec<u8>>, alts: Vec<Vec<u8>>) -> Self {
        Self {
            pos,
            ref_allele: ref_allele.into(),
            alts,
        }
    }

    fn end(&self) -> usize {
        self.pos + self.ref_allele.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VariantError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid letter 0x{byte:02x} in {context}")]
    InvalidLetter { byte: u8, context: String },
    #[error("variant at {pos}: empty reference allele")]
    EmptyRef { pos: usize },
    #[error("variant at {pos} extends past the end of the reference (length {len})")]
    OutOfRange { pos: usize, len: usize },
    #[error("variant at {pos} is not sorted after the variant at {prev}")]
    Unsorted { pos: usize, prev: usize },
    #[error("variant at {pos} overlaps the variant at {prev}")]
    Overlap { pos: usize, prev: usize },
    #[error("variant at {pos}: reference allele {expected:?} does not match reference {found:?}")]
    RefMismatch {
        pos: usize,
        expected: String,
        found: String,
    },
}

fn check(s: &[u8], context: impl FnOnce() -> String) -> Result<(), VariantError> {
    match first_invalid_letter(s) {
        None => Ok(()),
        Some(i) => Err(VariantError::InvalidLetter {
            byte: s[i],
            context: context(),
        }),
    }
}

/// Turns every variant into a symbol `{ref, alt1, ...}`; the reference
/// stretches around them become seeds.
pub fn from_reference_and_variants(
    reference: &[u8],
    variants: &[Variant],
) -> Result<EdsText, VariantError> {
    check(reference, || "reference".into())?;

    let mut seeds = Vec::with_capacity(variants.len() + 1);
    let mut symbols = Vec::with_capacity(variants.len());
    // 1-based position of the first reference letter not yet emitted.
    let mut cursor = 1;
    let mut prev: Option<&Variant> = None;

    for v in variants {
        if v.ref_allele.is_empty() {
            return Err(VariantError::EmptyRef { pos: v.pos });
        }
        if v.pos == 0 || v.end() - 1 > reference.len() {
            return Err(VariantError::OutOfRange {
                pos: v.pos,
                len: reference.len(),
            });
        }
        if let Some(p) = prev {
            if v.pos < p.pos {
                return Err(VariantError::Unsorted {
                    pos: v.pos,
                    prev: p.pos,
                });
            }
            if v.pos < p.end() {
                return Err(VariantError::Overlap {
                    pos: v.pos,
                    prev: p.pos,
                });
            }
        }
        let found = &reference[v.pos - 1..v.end() - 1];
        if found != v.ref_allele.as_slice() {
            return Err(VariantError::RefMismatch {
                pos: v.pos,
                expected: String::from_utf8_lossy(&v.ref_allele).into_owned(),
                found: String::from_utf8_lossy(found).into_owned(),
            });
        }
        for alt in &v.alts {
            check(alt, || format!("alternative of the variant at {}", v.pos))?;
        }

        seeds.push(reference[cursor - 1..v.pos - 1].to_vec());
        let mut alternatives = Vec::with_capacity(v.alts.len() + 1);
        alternatives.push(v.ref_allele.clone());
        alternatives.extend(v.alts.iter().cloned());
        symbols.push(DegenerateSymbol::new(alternatives).expect("reference allele is non-empty"));
        cursor = v.end();
        prev = Some(v);
    }
    seeds.push(reference[cursor - 1..].to_vec());

    Ok(EdsText::new(seeds, symbols).expect("letters validated"))
}

/// Reads a single-record reference: lines starting with `>` are skipped,
/// the rest are concatenated with surrounding whitespace removed.
pub fn parse_reference(input: &[u8]) -> Result<Vec<u8>, VariantError> {
    let mut out = Vec::with_capacity(input.len());
    for line in input.split(|&b| b == b'\n') {
        let line = line.trim_ascii();
        if line.starts_with(b">") {
            continue;
        }
        out.extend_from_slice(line);
    }
    check(&out, || "reference".into())?;
    Ok(out)
}

/// Reads `pos<TAB>ref<TAB>alt1[,alt2,...]` lines. Blank lines and lines
/// starting with `#` are skipped. Alternatives may be empty (deletions).
pub fn parse_variants(input: &[u8]) -> Result<Vec<Variant>, VariantError> {
    let mut out = Vec::new();
    for (i, raw) in input.split(|&b| b == b'\n').enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix(b"\r").unwrap_or(raw);
        if line.trim_ascii().is_empty() || line.starts_with(b"#") {
            continue;
        }
        let syntax = |message: String| VariantError::Syntax {
            line: line_no,
            message,
        };
        let fields: Vec<&[u8]> = line.split(|&b| b == b'\t').collect();
        let [pos, ref_allele, alts] = fields.as_slice() else {
            return Err(syntax(format!(
                "expected 3 tab-separated fields, got {}",
                fields.len()
            )));
        };
        let pos = std::str::from_utf8(pos)
            .ok()
            .and_then(|p| p.trim().parse::<usize>().ok())
            .filter(|&p| p > 0)
            .ok_or_else(|| syntax("position must be a positive integer".into()))?;
        let ref_allele = ref_allele.to_vec();
        check(&ref_allele, || format!("line {line_no}"))?;
        let alts: Vec<Vec<u8>> = alts.split(|&b| b == b',').map(<[u8]>::to_vec).collect();
        for alt in &alts {
            check(alt, || format!("line {line_no}"))?;
        }
        out.push(Variant {
            pos,
            ref_allele,
            alts,
        });
    }
    Ok(out)
}
