//! GF(2) words and linear codes: arithmetic, duals, weight analytics,
//! projections, and the Griesmer bound.

mod code;
mod enumerate;
mod griesmer;
pub mod matrix_format;
mod word;

use thiserror::Error;

pub use code::{LinearCode, Projection};
pub use enumerate::{
    Codewords, EnumerationLimit, ParityClass, WeightDistribution, DEFAULT_MAX_DIMENSION,
};
pub use griesmer::{griesmer_max_dim, griesmer_min_length};
pub use word::BitWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("incompatible ambient spaces: lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("coordinate {index} out of range for length {length}")]
    IndexOutOfRange { index: usize, length: usize },
    #[error("invalid character {found:?} at position {position}; expected '0' or '1'")]
    InvalidBit { position: usize, found: char },
    #[error("cannot infer the code length from an empty row list")]
    EmptyRows,
    #[error("refusing to enumerate 2^{dimension} codewords: dimension cap is {cap}")]
    DimensionAboveCap { dimension: usize, cap: usize },
    #[error("the zero code has no nonzero codewords")]
    NoNonzeroWords,
    #[error("word is not a codeword of the code")]
    NotACodeword,
    #[error("Griesmer bound needs 1 <= d <= n (got n = {n}, d = {d})")]
    InvalidGriesmerArguments { n: u64, d: u64 },
}
