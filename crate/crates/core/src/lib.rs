//! Exact symbolic computation in the Kauffman (BMW) skein algebra of the
//! thickened torus.
//!
//! The crate is organized around five subsystems:
//!
//! - [`coeff`]: the base field Q(s,v) as canonical fractions of two-variable
//!   Laurent polynomials, plus the quantum-integer constants.
//! - [`torus`]: the presented torus algebra with generators `D[x]` indexed by
//!   curve classes, normal forms on unordered words, the GL2(Z) action, and
//!   machine-checkable certificates that replay the inductive proof of the
//!   commutation relations.
//! - [`annulus`]: the hook-basis fragment of the annulus skein, the meridian
//!   eigenaction, and torus-curve projections onto the empty link.
//! - [`bmw2`]: the three-dimensional two-strand BMW algebra with basis
//!   `{1, sigma, h}` and its symmetrizer identities.
//! - [`bracket`]: the Kauffman-bracket torus algebra with generators `e[x]`,
//!   Chebyshev polynomials, and the comparison map from the torus algebra.
//!
//! All values are immutable; every operation is a pure function, so elements
//! can be shared freely across threads.

pub mod annulus;
pub mod bmw2;
pub mod bracket;
pub mod coeff;
pub mod sampling;
pub mod torus;
