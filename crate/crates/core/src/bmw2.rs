//! The two-strand BMW algebra: a commutative three-dimensional algebra with
//! basis `{1, sigma, h}`.
//!
//! Structure constants, derived from the skein relations together with the
//! unknot value `delta`:
//!
//! ```text
//! sigma - sigma^-1 = (s - s^-1)(1 - h)
//! sigma h = h sigma = v h
//! h^2 = delta h
//! ```
//!
//! so `sigma^2 = 1 + (s - s^-1)(sigma - v h)`. These three relations are the
//! unique assignment compatible with associativity: had the curl absorbed as
//! `v^-1`, the product `(sigma sigma) h` would disagree with
//! `sigma (sigma h)`. The associativity test below pins this down.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};
use thiserror::Error;

use crate::coeff::{brace, brace_plus, delta, CoeffError, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Bmw2Error {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// An element `c1 * 1 + cs * sigma + ch * h` of the two-strand algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BMW2Element {
    pub c1: RatFunc,
    pub cs: RatFunc,
    pub ch: RatFunc,
}

impl BMW2Element {
    pub fn new(c1: RatFunc, cs: RatFunc, ch: RatFunc) -> Self {
        Self { c1, cs, ch }
    }

    pub fn zero() -> Self {
        Self::new(RatFunc::zero(), RatFunc::zero(), RatFunc::zero())
    }

    pub fn one() -> Self {
        Self::new(RatFunc::one(), RatFunc::zero(), RatFunc::zero())
    }

    pub fn sigma() -> Self {
        Self::new(RatFunc::zero(), RatFunc::one(), RatFunc::zero())
    }

    pub fn h() -> Self {
        Self::new(RatFunc::zero(), RatFunc::zero(), RatFunc::one())
    }

    /// The braid inverse `sigma^-1 = sigma - (s - s^-1)(1 - h)`.
    pub fn sigma_inverse() -> Self {
        Self::new(-brace(1), RatFunc::one(), brace(1))
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::new(c, RatFunc::zero(), RatFunc::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.cs.is_zero() && self.ch.is_zero()
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        Self::new(&self.c1 * k, &self.cs * k, &self.ch * k)
    }

    /// True if the element is a multiple of `h`.
    pub fn is_h_multiple(&self) -> bool {
        self.c1.is_zero() && self.cs.is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "one": self.c1.to_json(),
            "sigma": self.cs.to_json(),
            "h": self.ch.to_json(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, Bmw2Error> {
        let get = |k: &'static str| -> Result<RatFunc, Bmw2Error> {
            Ok(RatFunc::from_json(v.get(k).ok_or(Bmw2Error::Coeff(
                CoeffError::Json("missing coefficient"),
            ))?)?)
        };
        Ok(Self::new(get("one")?, get("sigma")?, get("h")?))
    }
}

impl Add for &BMW2Element {
    type Output = BMW2Element;
    fn add(self, rhs: &BMW2Element) -> BMW2Element {
        BMW2Element::new(&self.c1 + &rhs.c1, &self.cs + &rhs.cs, &self.ch + &rhs.ch)
    }
}

impl Sub for &BMW2Element {
    type Output = BMW2Element;
    fn sub(self, rhs: &BMW2Element) -> BMW2Element {
        BMW2Element::new(&self.c1 - &rhs.c1, &self.cs - &rhs.cs, &self.ch - &rhs.ch)
    }
}

impl Neg for &BMW2Element {
    type Output = BMW2Element;
    fn neg(self) -> BMW2Element {
        BMW2Element::new(-&self.c1, -&self.cs, -&self.ch)
    }
}

impl Mul for &BMW2Element {
    type Output = BMW2Element;
    fn mul(self, rhs: &BMW2Element) -> BMW2Element {
        bmw2_mul(self, rhs)
    }
}

impl fmt::Display for BMW2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*sigma + ({})*h", self.c1, self.cs, self.ch)
    }
}

/// Bilinear product expanded through the structure constants.
pub fn bmw2_mul(x: &BMW2Element, y: &BMW2Element) -> BMW2Element {
    let br = brace(1);
    let v = RatFunc::v();
    let ss = &x.cs * &y.cs;
    let sh = &(&x.cs * &y.ch) + &(&x.ch * &y.cs);
    let hh = &x.ch * &y.ch;
    // sigma^2 = 1 + {1} sigma - {1} v h;  sigma h = v h;  h^2 = delta h.
    let c1 = &(&x.c1 * &y.c1) + &ss;
    let cs = &(&(&x.c1 * &y.cs) + &(&x.cs * &y.c1)) + &(&br * &ss);
    let ch_plain = &(&x.c1 * &y.ch) + &(&x.ch * &y.c1);
    let ch = &(&ch_plain + &(&v * &sh)) + &(&(&delta() * &hh) - &(&(&br * &v) * &ss));
    BMW2Element::new(c1, cs, ch)
}

/// The idempotent `p1+ = 1 - delta^-1 h`.
pub fn p1_plus() -> BMW2Element {
    let dinv = delta().inverse().expect("delta is nonzero");
    BMW2Element::new(RatFunc::one(), RatFunc::zero(), -&dinv)
}

/// The section of the Hecke quotient at two strands: `x -> p1+ x p1+`.
///
/// The input must have no `h` component (it represents a Hecke element);
/// the image is independent of the chosen lift because `p1+` kills the
/// cup-cap ideal.
pub fn section_s2(x: &BMW2Element) -> Result<BMW2Element, Bmw2Error> {
    if !x.ch.is_zero() {
        return Err(Bmw2Error::Domain(
            "section input must have no h component",
        ));
    }
    let p = p1_plus();
    Ok(&(&p * x) * &p)
}

/// The Hecke power sum on two strands, `(sigma + sigma^-1)/(s + s^-1)` with
/// the Hecke inverse `sigma - (s - s^-1)`.
pub fn hecke_p2() -> BMW2Element {
    let inv = brace_plus(1).inverse().expect("{1}+ is nonzero");
    BMW2Element::new(&-&brace(1) * &inv, &RatFunc::from_int(2) * &inv, RatFunc::zero())
}

/// The Hecke symmetrizer on two strands, `(1 + s sigma)/(s^2 + 1)`.
pub fn hecke_z2() -> BMW2Element {
    let den = (&RatFunc::monomial(2, 0) + &RatFunc::one())
        .inverse()
        .expect("s^2 + 1 is nonzero");
    BMW2Element::new(den.clone(), &RatFunc::s() * &den, RatFunc::zero())
}

/// The BMW power sum `B2 = s2(P2)`, in closed form
/// `(2 sigma - {1} + delta^-1({1} - 2v) h) / {1}+`.
pub fn b2() -> BMW2Element {
    section_s2(&hecke_p2()).expect("P2 has no h component")
}

/// The BMW symmetrizer `f2 = s2(z2)`, in closed form
/// `(1 + s sigma - delta^-1 (1 + s v) h)/(s^2 + 1)`.
pub fn f2() -> BMW2Element {
    section_s2(&hecke_z2()).expect("z2 has no h component")
}

/// Exact checks of the defining symmetrizer properties:
/// `f2^2 = f2`, `f2 sigma = sigma f2 = s f2`, `f2 h = h f2 = 0`.
pub fn f2_checks() -> bool {
    let f = f2();
    let s = BMW2Element::sigma();
    let h = BMW2Element::h();
    let sf = f.scale(&RatFunc::s());
    (&f * &f) == f
        && &f * &s == sf
        && &s * &f == sf
        && (&f * &h).is_zero()
        && (&h * &f).is_zero()
}
