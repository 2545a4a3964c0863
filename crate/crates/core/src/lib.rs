//! Exact matching of a solid pattern against an elastic-degenerate text.
//!
//! ```
//! use edsmatch::{eds::parse_eds, matcher::search};
//!
//! let text = parse_eds(b"aacabbcbbc{a,aab,acca}bb{c,acabbcbb,cba}bacabbc{b,cabb,bbc,aacabb}cbc")?;
//! let report = search(b"cabbcb", &text)?;
//! assert_eq!(report.occurrences.first().map(|o| (o.head, o.tail)), Some((3, 8)));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cli;
pub mod eds;
pub mod kmp;
pub mod lce;
pub mod matcher;
pub mod naive;

pub use eds::{parse_eds, serialize_eds, EdsText, Occurrence};
pub use matcher::{search, MatchReport};
