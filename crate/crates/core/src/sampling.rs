//! Seeded random generators for elements of every subsystem.
//!
//! The verification harness and the randomized tests draw from these through
//! a ChaCha8 stream seeded with a single 64-bit value, so reports are
//! reproducible across platforms.

use num_rational::BigRational;
use rand::Rng;

use crate::coeff::{LaurentPoly, RatFunc};
use crate::torus::{CurveClass, SkeinElement, Word};

/// A nonzero canonical curve class with coordinates in `[-bound, bound]`.
pub fn curve_class<R: Rng>(rng: &mut R, bound: i64) -> CurveClass {
    loop {
        let a = rng.gen_range(-bound..=bound);
        let b = rng.gen_range(-bound..=bound);
        if let Ok(x) = CurveClass::new(a, b) {
            return x;
        }
    }
}

/// A nonzero raw integer pair with coordinates in `[-bound, bound]`.
pub fn nonzero_pair<R: Rng>(rng: &mut R, bound: i64) -> (i64, i64) {
    loop {
        let p = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if p != (0, 0) {
            return p;
        }
    }
}

/// A word of up to `max_len` generators (possibly empty).
pub fn word<R: Rng>(rng: &mut R, max_len: usize, bound: i64) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_gens((0..len).map(|_| curve_class(rng, bound)).collect())
}

/// A Laurent polynomial with up to `max_terms` terms, exponents in
/// `[-exp_bound, exp_bound]` and small integer coefficients.
pub fn laurent<R: Rng>(rng: &mut R, max_terms: usize, exp_bound: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for _ in 0..rng.gen_range(0..=max_terms) {
        let c = BigRational::from_integer(rng.gen_range(-4i64..=4).into());
        p = &p
            + &LaurentPoly::monomial(
                c,
                rng.gen_range(-exp_bound..=exp_bound),
                rng.gen_range(-exp_bound..=exp_bound),
            );
    }
    p
}

/// A nonzero Laurent polynomial.
pub fn laurent_nonzero<R: Rng>(rng: &mut R, max_terms: usize, exp_bound: i64) -> LaurentPoly {
    loop {
        let p = laurent(rng, max_terms, exp_bound);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random field element (denominator kept small to keep GCDs cheap).
pub fn ratfunc<R: Rng>(rng: &mut R, max_terms: usize, exp_bound: i64) -> RatFunc {
    let num = laurent(rng, max_terms, exp_bound);
    let den = laurent_nonzero(rng, 2, 1);
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// A torus element with up to `terms` words of length up to `max_len`.
pub fn skein_element<R: Rng>(
    rng: &mut R,
    terms: usize,
    max_len: usize,
    bound: i64,
) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for _ in 0..terms {
        let w = word(rng, max_len, bound);
        let c = RatFunc::from_poly(laurent_nonzero(rng, 3, 2));
        out = &out + &SkeinElement::from_word(w, c);
    }
    out
}
