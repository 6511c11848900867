//! The presented algebra of the torus: generators `D[x]` indexed by curve
//! classes, normal forms on unordered words, the GL2(Z) action, and
//! certificates replaying the inductive proof of the commutation relations.

mod cert;
mod collapse;
mod curve;
mod element;

use thiserror::Error;

use crate::coeff::CoeffError;

pub use cert::{
    diophantine_split, split_child_pairs, BaseKind, CertError, CertNode, Certificate,
};
pub use collapse::coefficient_collapse_check;
pub use curve::{det, det_pair, CurveClass, GL2Matrix};
pub use element::{relation_rhs, word_normal_form, RewriteStrategy, SkeinElement, Word};

pub(crate) use element::fmt_terms as element_fmt;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("the zero vector does not index a generator")]
    ZeroVector,
    #[error("matrix has determinant {0}, not a unit")]
    NotUnimodular(i64),
    #[error("diophantine split needs coprime 0 < q < p with p > 1, got p = {p}, q = {q}")]
    DiophantineDomain { p: i64, q: i64 },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("malformed JSON: {0}")]
    Json(&'static str),
}
