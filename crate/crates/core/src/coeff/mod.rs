//! Exact arithmetic in the base field Q(s,v) and the named scalar constants.

mod laurent;
mod ratfunc;

use num_rational::BigRational;
use thiserror::Error;

pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation point has s = 0 or v = 0")]
    ZeroEvalPoint,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("denominator vanishes identically under v = -s^-3")]
    SpecializationPole,
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("malformed JSON: {0}")]
    Json(&'static str),
}

/// The quantum integer `{n} = s^n - s^-n`.
pub fn brace(n: i64) -> RatFunc {
    &RatFunc::monomial(n, 0) - &RatFunc::monomial(-n, 0)
}

/// `{n}+ = s^n + s^-n`.
pub fn brace_plus(n: i64) -> RatFunc {
    &RatFunc::monomial(n, 0) + &RatFunc::monomial(-n, 0)
}

/// The balanced quantum integer `[n] = {n}/{1}`; always a Laurent polynomial.
pub fn bracket(n: i64) -> RatFunc {
    if n == 0 {
        return RatFunc::zero();
    }
    brace(n).checked_div(&brace(1)).expect("{1} is nonzero")
}

/// The unknot value `delta = 1 - (v - v^-1)/(s - s^-1)`.
pub fn delta() -> RatFunc {
    let vdiff = &RatFunc::v() - &RatFunc::monomial(0, -1);
    &RatFunc::one() - &vdiff.checked_div(&brace(1)).expect("{1} is nonzero")
}

/// The symmetrizer-recursion constant `beta_n = (1 - s^2)/(s^(2n-1) v^-1 - 1)`
/// for `n >= 1`; with `barred` the image under the mirror map.
pub fn beta(n: i64, barred: bool) -> Result<RatFunc, CoeffError> {
    if n < 1 {
        return Err(CoeffError::Domain("beta requires n >= 1"));
    }
    let num = &RatFunc::one() - &RatFunc::monomial(2, 0);
    let den = &RatFunc::monomial(2 * n - 1, -1) - &RatFunc::one();
    let b = num.checked_div(&den)?;
    Ok(if barred { b.bar() } else { b })
}

/// Convenience: the rational constant `p/q` as a field element.
pub fn rational(p: i64, q: i64) -> RatFunc {
    RatFunc::from_rational(BigRational::new(p.into(), q.into()))
}
