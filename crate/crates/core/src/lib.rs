//! Exact domination polynomials of finite simple graphs.
//!
//! `D(G, x) = sum_i d(G, i) x^i` where `d(G, i)` is the number of dominating
//! sets of size `i`. This crate holds the pure algorithmic parts: the graph
//! type, big-integer polynomials, two independent subset-counting backends,
//! a path/cycle dynamic program, closed forms for structured families, a
//! small graph-expression language with a rewrite evaluator, and a verifier
//! for the coefficient identities these polynomials satisfy.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, threading and
//! the command-line tool live in the `dompoly` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod closed_forms;
pub mod count;
pub mod expr;
pub mod generate;
pub mod graph;
pub mod poly;
pub mod verify;

pub use count::{CountError, Limits, Method, PathOrCycle};
pub use expr::{EvalError, GraphExpr, ParseError, Strategy, TraceStep};
pub use graph::{CoeffStats, Graph, GraphError, VertexSet};
pub use poly::{DomPoly, ModeReport};
pub use verify::{CheckRecord, CheckStatus, Value, VerifyReport};

/// Hard limit imposed by the word-sized vertex sets.
pub const HARD_MAX_N: usize = 32;

/// Default enumeration cap.
pub const DEFAULT_MAX_N: usize = 26;
