//! C ABI over `edsmatch`.
//!
//! Texts and match results are opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns
//! an [`EdmStatus`]; on failure a message is kept per thread and can be read
//! with [`edm_last_error_message`]. Byte inputs are `(pointer, length)` pairs
//! and need not be NUL-terminated.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use edsmatch::eds::{parse_eds, serialize_eds, EdsText, Occurrence};
use edsmatch::matcher::{eds_matches_solid, search, validate_pattern};
use edsmatch::naive::{naive_occurrences, ExpansionBudget};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdmStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    InvalidPattern = 3,
    BudgetExceeded = 4,
    OutOfRange = 5,
    Panic = 6,
}

/// Size measures of a text.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EdmStats {
    /// Length: seed letters plus one position per symbol.
    pub n: usize,
    /// Seed letters plus every alternative's letters.
    pub total_size: usize,
    /// Number of seeds.
    pub k: usize,
    /// Largest number of alternatives in a symbol.
    pub alpha: usize,
}

/// A `(head, tail)` pair of 1-based positions.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EdmOccurrence {
    pub head: usize,
    pub tail: usize,
}

/// Opaque parsed text.
pub struct EdmText(EdsText);

/// Opaque list of occurrences, sorted by `(head, tail)`.
pub struct EdmMatches {
    occurrences: Vec<EdmOccurrence>,
    gamma: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl ToString) {
    let msg = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: EdmStatus, msg: impl ToString) -> EdmStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning a panic into [`EdmStatus::Panic`].
fn guard(f: impl FnOnce() -> EdmStatus) -> EdmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(EdmStatus::Panic, format!("panic: {msg}"))
        }
    }
}

unsafe fn bytes<'a>(data: *const u8, len: usize) -> Option<&'a [u8]> {
    if len == 0 {
        Some(&[])
    } else if data.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(data, len))
    }
}

fn into_matches(occurrences: &[Occurrence], gamma: usize) -> *mut EdmMatches {
    Box::into_raw(Box::new(EdmMatches {
        occurrences: occurrences
            .iter()
            .map(|o| EdmOccurrence {
                head: o.head,
                tail: o.tail,
            })
            .collect(),
        gamma,
    }))
}

/// Message for the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn edm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a text in brace notation and stores a new handle in `*out`.
#[no_mangle]
pub unsafe extern "C" fn edm_text_parse(
    data: *const u8,
    len: usize,
    out: *mut *mut EdmText,
) -> EdmStatus {
    guard(|| {
        if out.is_null() {
            return fail(EdmStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let Some(input) = bytes(data, len) else {
            return fail(EdmStatus::NullPointer, "data is null");
        };
        match parse_eds(input) {
            Ok(text) => {
                *out = Box::into_raw(Box::new(EdmText(text)));
                EdmStatus::Ok
            }
            Err(e) => fail(EdmStatus::ParseError, e),
        }
    })
}

/// Releases a text. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn edm_text_free(text: *mut EdmText) {
    if !text.is_null() {
        drop(Box::from_raw(text));
    }
}

#[no_mangle]
pub unsafe extern "C" fn edm_text_stats(text: *const EdmText, out: *mut EdmStats) -> EdmStatus {
    guard(|| {
        let (Some(text), false) = (text.as_ref(), out.is_null()) else {
            return fail(EdmStatus::NullPointer, "text or out is null");
        };
        let s = text.0.stats();
        *out = EdmStats {
            n: s.n,
            total_size: s.total_size,
            k: s.k,
            alpha: s.alpha,
        };
        EdmStatus::Ok
    })
}

/// Canonical brace notation as a NUL-terminated string; free it with
/// [`edm_string_free`].
#[no_mangle]
pub unsafe extern "C" fn edm_text_serialize(
    text: *const EdmText,
    out: *mut *mut c_char,
) -> EdmStatus {
    guard(|| {
        let (Some(text), false) = (text.as_ref(), out.is_null()) else {
            return fail(EdmStatus::NullPointer, "text or out is null");
        };
        // Letters are printable ASCII, so there is never an interior NUL.
        let s = CString::new(serialize_eds(&text.0)).expect("serialized text has no NUL");
        *out = s.into_raw();
        EdmStatus::Ok
    })
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn edm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Finds every occurrence of `pattern` in `text`.
#[no_mangle]
pub unsafe extern "C" fn edm_search(
    text: *const EdmText,
    pattern: *const u8,
    pattern_len: usize,
    out: *mut *mut EdmMatches,
) -> EdmStatus {
    guard(|| {
        if out.is_null() {
            return fail(EdmStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let (Some(text), Some(pattern)) = (text.as_ref(), bytes(pattern, pattern_len)) else {
            return fail(EdmStatus::NullPointer, "text or pattern is null");
        };
        match search(pattern, &text.0) {
            Ok(report) => {
                *out = into_matches(&report.occurrences, report.gamma);
                EdmStatus::Ok
            }
            Err(e) => fail(EdmStatus::InvalidPattern, e),
        }
    })
}

/// Brute-force search over every spelling of `text`, refused with
/// [`EdmStatus::BudgetExceeded`] when the expansion is too large. A zero
/// limit selects the default.
#[no_mangle]
pub unsafe extern "C" fn edm_naive_occurrences(
    text: *const EdmText,
    pattern: *const u8,
    pattern_len: usize,
    max_strings: u64,
    max_total_letters: u64,
    out: *mut *mut EdmMatches,
) -> EdmStatus {
    guard(|| {
        if out.is_null() {
            return fail(EdmStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let (Some(text), Some(pattern)) = (text.as_ref(), bytes(pattern, pattern_len)) else {
            return fail(EdmStatus::NullPointer, "text or pattern is null");
        };
        if let Err(e) = validate_pattern(pattern) {
            return fail(EdmStatus::InvalidPattern, e);
        }
        let defaults = ExpansionBudget::default();
        let budget = ExpansionBudget {
            max_strings: if max_strings == 0 {
                defaults.max_strings
            } else {
                max_strings
            },
            max_total_letters: if max_total_letters == 0 {
                defaults.max_total_letters
            } else {
                max_total_letters
            },
        };
        match naive_occurrences(pattern, &text.0, budget) {
            Ok(occ) => {
                let gamma = occ
                    .iter()
                    .map(|o| text.0.symbols_between(o.head, o.tail))
                    .max()
                    .unwrap_or(0);
                *out = into_matches(&occ, gamma);
                EdmStatus::Ok
            }
            Err(e) => fail(EdmStatus::BudgetExceeded, e),
        }
    })
}

/// Number of occurrences; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn edm_matches_len(matches: *const EdmMatches) -> usize {
    matches.as_ref().map_or(0, |m| m.occurrences.len())
}

/// Largest number of symbol positions spanned by one occurrence; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn edm_matches_gamma(matches: *const EdmMatches) -> usize {
    matches.as_ref().map_or(0, |m| m.gamma)
}

#[no_mangle]
pub unsafe extern "C" fn edm_matches_get(
    matches: *const EdmMatches,
    index: usize,
    out: *mut EdmOccurrence,
) -> EdmStatus {
    guard(|| {
        let (Some(m), false) = (matches.as_ref(), out.is_null()) else {
            return fail(EdmStatus::NullPointer, "matches or out is null");
        };
        match m.occurrences.get(index) {
            Some(&occ) => {
                *out = occ;
                EdmStatus::Ok
            }
            None => fail(
                EdmStatus::OutOfRange,
                format!(
                    "index {index} out of range for {} occurrences",
                    m.occurrences.len()
                ),
            ),
        }
    })
}

/// Releases a match list. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn edm_matches_free(matches: *mut EdmMatches) {
    if !matches.is_null() {
        drop(Box::from_raw(matches));
    }
}

/// Sets `*out` to whether `y` is one spelling of `text`.
#[no_mangle]
pub unsafe extern "C" fn edm_matches_solid(
    text: *const EdmText,
    y: *const u8,
    y_len: usize,
    out: *mut bool,
) -> EdmStatus {
    guard(|| {
        let (Some(text), Some(y), false) = (text.as_ref(), bytes(y, y_len), out.is_null()) else {
            return fail(EdmStatus::NullPointer, "text, y or out is null");
        };
        *out = eds_matches_solid(&text.0, y);
        EdmStatus::Ok
    })
}

/// Static name of a status code, e.g. `"EDM_STATUS_OK"`.
#[no_mangle]
pub extern "C" fn edm_status_name(status: EdmStatus) -> *const c_char {
    let name: &'static CStr = match status {
        EdmStatus::Ok => c"EDM_STATUS_OK",
        EdmStatus::NullPointer => c"EDM_STATUS_NULL_POINTER",
        EdmStatus::ParseError => c"EDM_STATUS_PARSE_ERROR",
        EdmStatus::InvalidPattern => c"EDM_STATUS_INVALID_PATTERN",
        EdmStatus::BudgetExceeded => c"EDM_STATUS_BUDGET_EXCEEDED",
        EdmStatus::OutOfRange => c"EDM_STATUS_OUT_OF_RANGE",
        EdmStatus::Panic => c"EDM_STATUS_PANIC",
    };
    name.as_ptr()
}
