//! Error type shared by the whole crate.
//!
//! Malformed inputs and violated preconditions are errors; *axiom failures on
//! well-formed tables* are not — those are reported through
//! [`VerificationReport`](crate::tables::VerificationReport) so the caller can
//! inspect the witnesses.

use thiserror::Error;

use crate::tables::VerificationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A table row does not have exactly `n` entries.
    #[error("table row {row} has {width} entries, expected {n}")]
    NonSquareTable { n: usize, row: usize, width: usize },

    /// A table entry is not an element index in `0..n`.
    #[error("entry {value} at row {row}, column {col} is out of range for order {n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    /// Two tables that must share an order do not.
    #[error("operation tables have different orders: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    /// A structure was requested with zero elements.
    #[error("order must be positive")]
    ZeroOrder,

    /// A family parameter must be invertible modulo `n` and is not.
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: usize, modulus: usize },

    /// An element index does not fit the carrier `0..n`.
    #[error("element {value} is out of range for order {n}")]
    ElementOutOfRange { value: usize, n: usize },

    /// An image sequence is not a bijection of `0..n`.
    #[error("images do not form a permutation: {reason}")]
    NotAPermutation { reason: String },

    /// A sequence has the wrong length.
    #[error("expected {expected} items, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// A permutation acts on the wrong number of points.
    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    /// A table failed the quandle axioms where a valid quandle was required.
    #[error("quandle axioms violated: {0}")]
    InvalidQuandle(VerificationReport),

    /// Tables failed the biquandle axioms where a valid biquandle was required.
    #[error("biquandle axioms violated: {0}")]
    InvalidBiquandle(VerificationReport),

    /// A table failed the group axioms where a valid group was required.
    #[error("group axioms violated: {0}")]
    InvalidGroup(VerificationReport),

    /// A beta family failed the structure conditions where a valid structure
    /// was required.
    #[error("structure conditions violated: {0}")]
    InvalidStructure(VerificationReport),

    /// The given map is not an automorphism of the base object.
    #[error("map is not an automorphism of the base quandle")]
    NotAnAutomorphism,

    /// The given permutation is not a member of the group.
    #[error("permutation does not belong to the group")]
    NotInGroup,

    /// An element set is not closed under composition and inverse.
    #[error("elements do not form a group: {reason}")]
    NotAGroup { reason: String },

    /// A search would exceed a configured bound; pass explicit limits to
    /// override.
    #[error("{what} = {actual} exceeds the configured cap {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// The centralizer formula for dihedral biquandles needs `s + 1`
    /// invertible; outside that case use the general automorphism search.
    #[error(
        "s + 1 = {sum} is not a unit modulo {n}; no closed form applies, \
         compute the group with biquandle_aut_group instead"
    )]
    NoCentralizerForm { n: usize, sum: usize },

    /// A text input could not be parsed.
    #[error("line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    /// A derived object failed a check it is guaranteed to satisfy. This
    /// indicates a bug in the crate, never bad user input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
