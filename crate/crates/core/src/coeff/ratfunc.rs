//! Canonical fractions of Laurent polynomials: the base field Q(s,v).
//!
//! Every `RatFunc` is kept in a canonical form, so structural equality
//! decides field equality:
//!
//! - the fraction is reduced by the polynomial GCD of the monomial-free parts,
//! - all monomial (unit) factors live in the numerator, so the denominator has
//!   minimum exponent zero in each variable,
//! - the denominator has coprime integer coefficients and its leading term
//!   (lex order on `(es, ev)`) has positive coefficient.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::laurent::LaurentPoly;
use super::CoeffError;

/// An element of Q(s,v) as a canonical fraction `num / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    /// Build `num / den` in canonical form. Errors if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if den.is_one() {
            return Ok(Self {
                num,
                den: LaurentPoly::one(),
            });
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let ((ns, nv), n0) = num.extract_monomial();
        let ((ds, dv), d0) = den.extract_monomial();
        let g = n0.gcd(&d0);
        let (mut n1, mut d1) = if g.is_one() {
            (n0, d0)
        } else {
            (n0.div_exact(&g), d0.div_exact(&g))
        };
        let c = d1.normalizing_scalar().expect("nonzero denominator");
        let inv = c.recip();
        d1 = d1.scale(&inv);
        n1 = n1.scale(&inv).shift(ns - ds, nv - dv);
        Ok(Self { num: n1, den: d1 })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// The monomial `s^es * v^ev`.
    pub fn monomial(es: i64, ev: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(BigRational::one(), es, ev))
    }

    pub fn s() -> Self {
        Self::monomial(1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(0, 1)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if the reduced fraction involves only `s`.
    pub fn is_v_free(&self) -> bool {
        self.num.is_v_free() && self.den.is_v_free()
    }

    pub fn inverse(&self) -> Result<Self, CoeffError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn pow(&self, e: i64) -> Result<Self, CoeffError> {
        if e == 0 {
            return Ok(Self::one());
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// The mirror map on scalars: `s -> s^-1`, `v -> v^-1`. An involutive
    /// field automorphism.
    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar()).expect("bar preserves nonzero denominators")
    }

    /// Substitute `v = -s^-3` (the scalar part of the map onto the Kauffman
    /// bracket skein). Errors if the denominator vanishes identically.
    pub fn specialize_bracket(&self) -> Result<Self, CoeffError> {
        let den = self.den.substitute_bracket();
        if den.is_zero() {
            return Err(CoeffError::SpecializationPole);
        }
        Self::new(self.num.substitute_bracket(), den)
    }

    /// Exact evaluation at a rational point with `s0, v0` nonzero and the
    /// denominator not vanishing there.
    pub fn eval(&self, s0: &BigRational, v0: &BigRational) -> Result<BigRational, CoeffError> {
        let d = self.den.eval(s0, v0)?;
        if d.is_zero() {
            return Err(CoeffError::PoleAtPoint);
        }
        Ok(self.num.eval(s0, v0)? / d)
    }

    /// JSON form `{"num": [[es, ev, "p/q"], ...], "den": [...]}`.
    pub fn to_json(&self) -> Value {
        let dump = |p: &LaurentPoly| -> Value {
            Value::Array(
                p.terms()
                    .map(|(&(es, ev), c)| json!([es, ev, c.to_string()]))
                    .collect(),
            )
        };
        json!({ "num": dump(&self.num), "den": dump(&self.den) })
    }

    pub fn from_json(v: &Value) -> Result<Self, CoeffError> {
        let parse_poly = |v: &Value| -> Result<LaurentPoly, CoeffError> {
            let arr = v
                .as_array()
                .ok_or(CoeffError::Json("polynomial must be an array of terms"))?;
            let mut out = LaurentPoly::zero();
            for t in arr {
                let t = t
                    .as_array()
                    .filter(|t| t.len() == 3)
                    .ok_or(CoeffError::Json("term must be [es, ev, coeff]"))?;
                let es = t[0].as_i64().ok_or(CoeffError::Json("bad exponent"))?;
                let ev = t[1].as_i64().ok_or(CoeffError::Json("bad exponent"))?;
                let c: BigRational = t[2]
                    .as_str()
                    .ok_or(CoeffError::Json("coefficient must be a string"))?
                    .parse()
                    .map_err(|_| CoeffError::Json("bad rational coefficient"))?;
                out.insert_add((es, ev), c);
            }
            Ok(out)
        };
        let num = parse_poly(v.get("num").ok_or(CoeffError::Json("missing num"))?)?;
        let den = parse_poly(v.get("den").ok_or(CoeffError::Json("missing den"))?)?;
        Self::new(num, den)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num + &rhs.num);
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        // Knuth's scheme: with both inputs reduced, any common factor of the
        // cross numerator and the combined denominator divides g = gcd(d1,
        // d2), so reducing against g suffices and no large-by-large GCD is
        // taken.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            return RatFunc {
                num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                den: &self.den * &rhs.den,
            };
        }
        let dl = self.den.div_exact(&g);
        let dr = rhs.den.div_exact(&g);
        let t = &(&self.num * &dr) + &(&rhs.num * &dl);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let g2 = t.gcd(&g);
        if g2.is_one() {
            RatFunc {
                num: t,
                den: &self.den * &dr,
            }
        } else {
            RatFunc {
                num: t.div_exact(&g2),
                den: &self.den.div_exact(&g2) * &dr,
            }
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Both sides are reduced, so after the two cross-cancellations the
        // product is already in lowest terms (Gauss's lemma keeps the
        // denominator integer-primitive with positive leading term), and no
        // large-by-large GCD is ever taken.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_exact(&g1)
        };
        let n2 = if g2.is_one() {
            rhs.num.clone()
        } else {
            rhs.num.div_exact(&g2)
        };
        let d1 = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2)
        };
        let d2 = if g1.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.div_exact(&g1)
        };
        RatFunc {
            num: &n1 * &n2,
            den: &d1 * &d2,
        }
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] when the divisor
/// may vanish.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_value_ops {
    ($($t:ident :: $m:ident),*) => {$(
        impl $t for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{brace, brace_plus};

    fn s() -> RatFunc {
        RatFunc::s()
    }

    fn si() -> RatFunc {
        RatFunc::monomial(-1, 0)
    }

    #[test]
    fn add_s_and_s_inverse() {
        assert_eq!(&s() + &si(), brace_plus(1));
    }

    #[test]
    fn difference_of_squares() {
        // (s - s^-1)(s + s^-1) = s^2 - s^-2
        assert_eq!(&brace(1) * &brace_plus(1), brace(2));
    }

    #[test]
    fn division_verified_by_multiplying_back() {
        let q = brace(2).checked_div(&brace(1)).unwrap();
        assert_eq!(q, brace_plus(1));
        assert_eq!(&q * &brace(1), brace(2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            s().checked_div(&RatFunc::zero()),
            Err(CoeffError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_a_minus_a_is_structurally_zero() {
        let a = RatFunc::new(
            (&s() + &RatFunc::v()).num().clone(),
            (&brace(1) * &RatFunc::v()).num().clone(),
        )
        .unwrap();
        assert!((&a - &a).is_zero());
        assert_eq!(&a - &a, RatFunc::zero());
    }

    #[test]
    fn denominator_is_monomial_free_and_positive() {
        // 1 / (s^-1 v^-2)  canonicalizes to  s v^2 / 1.
        let f = RatFunc::one()
            .checked_div(&RatFunc::monomial(-1, -2))
            .unwrap();
        assert_eq!(f, RatFunc::monomial(1, 2));
        // (1 - s^2)/(s v^-1 - 1): den lex-leading term must be positive.
        let num = &RatFunc::one() - &RatFunc::monomial(2, 0);
        let den = &RatFunc::monomial(1, -1) - &RatFunc::one();
        let f = num.checked_div(&den).unwrap();
        let lead = f.den().leading().unwrap();
        assert!(lead.1 > &BigRational::zero());
        assert_eq!(f.den().min_exps(), Some((0, 0)));
    }

    #[test]
    fn bar_is_an_involution() {
        let f = RatFunc::new(
            (&s() + &RatFunc::from_int(2)).num().clone(),
            (&RatFunc::v() - &si()).num().clone(),
        )
        .unwrap();
        assert_eq!(f.bar().bar(), f);
        // bar(s^2 v) = s^-2 v^-1
        assert_eq!(
            RatFunc::monomial(2, 1).bar(),
            RatFunc::monomial(-2, -1)
        );
    }

    #[test]
    fn pow_and_inverse() {
        let f = &s() + &si();
        assert_eq!(f.pow(0).unwrap(), RatFunc::one());
        assert_eq!(f.pow(2).unwrap(), &f * &f);
        assert_eq!(&f.pow(-1).unwrap() * &f, RatFunc::one());
        assert!(RatFunc::zero().pow(-1).is_err());
    }

    #[test]
    fn eval_frozen_values() {
        let two = BigRational::from_integer(2.into());
        let one = BigRational::from_integer(1.into());
        // {2} at s=2: 4 - 1/4 = 15/4
        assert_eq!(
            brace(2).eval(&two, &one).unwrap(),
            BigRational::new(15.into(), 4.into())
        );
        assert_eq!(
            RatFunc::zero().eval(&two, &two).unwrap(),
            BigRational::zero()
        );
        // pole: 1/(s - 2) at s=2
        let pole = RatFunc::one()
            .checked_div(&(&s() - &RatFunc::from_int(2)))
            .unwrap();
        assert_eq!(pole.eval(&two, &one), Err(CoeffError::PoleAtPoint));
    }

    #[test]
    fn specialize_bracket_examples() {
        // v^-1 -> -s^3
        assert_eq!(
            RatFunc::monomial(0, -1).specialize_bracket().unwrap(),
            -RatFunc::monomial(3, 0)
        );
        // no v present: unchanged
        assert_eq!(brace(5).specialize_bracket().unwrap(), brace(5));
        // vanishing denominator: 1/(v + s^-3)
        let den = &RatFunc::v() + &RatFunc::monomial(-3, 0);
        let f = RatFunc::one().checked_div(&den).unwrap();
        assert_eq!(f.specialize_bracket(), Err(CoeffError::SpecializationPole));
    }

    #[test]
    fn json_round_trip() {
        let f = RatFunc::new(
            (&s() - &si()).num().clone(),
            (&RatFunc::v() + &RatFunc::from_int(3)).num().clone(),
        )
        .unwrap();
        let j = f.to_json();
        assert_eq!(RatFunc::from_json(&j).unwrap(), f);
    }

    #[test]
    fn display_examples() {
        assert_eq!(brace(2).to_string(), "s^2 - s^-2");
        let beta1 = crate::coeff::beta(1, false).unwrap();
        // (1 - s^2)/(s v^-1 - 1) == (v - s^2 v)/(s - v) in canonical form
        assert_eq!(beta1.to_string(), "(-s^2*v + v)/(s - v)");
    }
}
