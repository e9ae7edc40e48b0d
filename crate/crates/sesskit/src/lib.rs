//! Session processes and the type systems that keep them deadlock-free.
//!
//! The crate implements three process dialects over one AST (binary sessions,
//! the linear-logic calculus with forwarders, and the standard pi-calculus
//! with variants), a checker for each associated type system, the encodings
//! connecting them, an exhaustive reducer that decides deadlock freedom for
//! the finite fragment, and the degree-of-sharing classification with its
//! rewriting procedure into the logic-typed class.

pub mod check_ch;
pub mod check_kb;
pub mod check_st;
pub mod corpus;
pub mod hierarchy;
pub mod selftest;
pub mod semantics;
pub mod syntax;
pub mod transform;
pub mod types;

pub use syntax::{
    alpha_equiv, free_names, normal_form, parse_process, render, substitute, Dialect, Name,
    Process, Value,
};
pub use types::{CType, Level, SessionType, Usage, UsageType};
