//! Search and verification of optimal cyclic and shortened cyclic
//! single-burst-correcting binary codes.
//!
//! An `[n, k, <b, ell>]` code corrects any single non-wrapping burst of
//! length up to `b` and any single wrap-around burst of length up to `ell`.
//! For a burst length `b` and guard space `g`, [`search::Searcher::best_for_guard`]
//! finds, for every `ell` in `1..=b`, the largest `k` with an
//! `[g + ell, k, <b, ell>]` shortened cyclic code and picks the best rate.
//!
//! The fast path ([`search`], [`scanner`], [`bursts`]) is checked against
//! the brute-force [`oracle`], which shares no code with it beyond the
//! polynomial type.

pub mod binmat;
pub mod bursts;
pub mod cli;
pub mod error;
pub mod gf2poly;
pub mod graycode;
pub mod oracle;
pub mod scanner;
pub mod search;

pub use binmat::BitMatrix;
pub use bursts::{BurstPattern, Syndrome, SyndromeSet};
pub use error::{Error, Result};
pub use gf2poly::Gf2Poly;
pub use graycode::GrayTable;
pub use scanner::Verdict;
pub use search::{CodeSpec, GuardResult, SearchResult, Searcher};
