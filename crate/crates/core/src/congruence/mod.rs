//! Congruence claims evaluated as cells, grouped into reports.

pub mod cell;
pub mod claims;
pub mod scan;
pub mod suite;

pub use cell::{ClaimClass, CongruenceCell, CongruenceReport, Params, Summary};
pub use claims::*;
pub use scan::{diagonal_grid, scan_b, ScanReport};
pub use suite::{run_suite, SuiteConfig, SuiteOutcome, SuiteReport, BATTERIES};
