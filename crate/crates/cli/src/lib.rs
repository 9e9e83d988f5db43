//! IO, output formatting and parallel drivers around `motifcensus-core`.

pub mod engine;
pub mod io;
pub mod report;
