//! File formats, multi-threaded counting and the `dompoly` command-line tool
//! on top of [`dompoly_core`].

pub mod cli;
pub mod corpus;
pub mod formats;
pub mod parallel;

pub use dompoly_core as core;
