//! Exact census of connected induced subgraphs of sizes 3, 4 and 5 in
//! directed graphs, grouped by isomorphism class.
//!
//! Instead of enumerating subgraphs one by one, the census anchors every
//! induced subgraph at a small core (a vertex, an edge, or a connected
//! triple), partitions the core's neighborhood into disjoint sets, and reads
//! the per-class frequencies off closed-form sums over set sizes and
//! inter-set edge counters. Multiplicity across anchors is removed by a
//! per-class correction divisor at the end.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `motifcensus-cli` crate.

#![no_std]

extern crate alloc;

pub mod canon;
pub mod census;
pub mod graph;
pub mod hist;
pub mod lookup;
pub mod motif3;
pub mod motif4;
pub mod motif5;
pub mod nullmodel;
pub mod oracle;

use core::fmt;

/// Errors surfaced by census and verification runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CensusError {
    /// A 64-bit frequency counter overflowed.
    CounterOverflow,
    /// An intermediate frequency went negative or a pre-correction sum was
    /// not divisible by its class divisor. Indicates a bug, never bad input.
    Inconsistency(&'static str),
    /// The brute-force oracle hit its enumeration budget.
    BudgetExceeded { budget: u64 },
    /// An ensemble of fewer than two graphs has no defined stddev.
    EnsembleTooSmall,
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::CounterOverflow => write!(f, "frequency counter overflow"),
            CensusError::Inconsistency(what) => write!(f, "internal consistency error: {what}"),
            CensusError::BudgetExceeded { budget } => {
                write!(f, "oracle enumeration budget of {budget} subgraphs exceeded")
            }
            CensusError::EnsembleTooSmall => {
                write!(f, "ensemble size must be at least 2")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, CensusError>;
