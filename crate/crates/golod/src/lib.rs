//! File formats, reports and the command-line driver for `golod-core`.

pub mod cli;
pub mod format;
pub mod parallel;
pub mod report;

pub use golod_core as core;
