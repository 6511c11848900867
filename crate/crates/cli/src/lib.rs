//! Expression parsing, evaluation, and the verification harness behind the
//! `skein` binary.

pub mod eval;
pub mod expr;
pub mod suite;
