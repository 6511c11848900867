//! The Kauffman bracket (Frohman-Gelca) torus algebra and the comparison
//! map from the presented Kauffman algebra.
//!
//! The bracket algebra is spanned by the generators `e[x]` themselves, with
//! the closed product law `e[x] e[y] = s^d e[x+y] + s^-d e[x-y]` for
//! `d = det[x y]`; a degenerate `e[0]` contributes the scalar 2 (the value
//! `T_0` of the Chebyshev normalization). Scalars here live in Q(s).

mod cheb;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};
use thiserror::Error;

use crate::coeff::{CoeffError, RatFunc};
use crate::torus::{element_fmt, CurveClass, SkeinElement, TorusError};

pub use cheb::{cheb, cheb_log_identity_check, ChebKind, ChebPoly};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error("malformed JSON: {0}")]
    Json(&'static str),
}

/// An element of the bracket algebra: a scalar multiple of the unit plus a
/// combination of curve generators, all with v-free coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BracketElement {
    unit: RatFunc,
    curves: BTreeMap<CurveClass, RatFunc>,
}

impl BracketElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::unit(RatFunc::one())
    }

    pub fn unit(c: RatFunc) -> Self {
        debug_assert!(c.is_v_free());
        Self {
            unit: c,
            curves: BTreeMap::new(),
        }
    }

    /// The generator `e[x]`.
    pub fn generator(x: CurveClass) -> Self {
        let mut out = Self::zero();
        out.insert_add(x, RatFunc::one());
        out
    }

    pub fn unit_coeff(&self) -> &RatFunc {
        &self.unit
    }

    pub fn curve_coeff(&self, x: &CurveClass) -> RatFunc {
        self.curves.get(x).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn curves(&self) -> impl Iterator<Item = (&CurveClass, &RatFunc)> {
        self.curves.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.curves.is_empty()
    }

    fn insert_add(&mut self, x: CurveClass, c: RatFunc) {
        debug_assert!(c.is_v_free());
        if c.is_zero() {
            return;
        }
        match self.curves.entry(x) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            unit: &self.unit * c,
            curves: self.curves.iter().map(|(x, a)| (*x, a * c)).collect(),
        }
    }

    /// The bilinear extension of the closed product law.
    pub fn multiply(&self, rhs: &Self) -> Self {
        let mut out = Self::unit(&self.unit * &rhs.unit);
        for (x, c) in &self.curves {
            out.insert_add(*x, c * &rhs.unit);
        }
        for (y, c) in &rhs.curves {
            out.insert_add(*y, c * &self.unit);
        }
        for (x, cx) in &self.curves {
            for (y, cy) in &rhs.curves {
                let c = cx * cy;
                let d = crate::torus::det(x, y);
                let s_pos = &RatFunc::monomial(d, 0) * &c;
                let s_neg = &RatFunc::monomial(-d, 0) * &c;
                match CurveClass::new(x.a() + y.a(), x.b() + y.b()) {
                    Ok(g) => out.insert_add(g, s_pos),
                    // e[0] is the scalar 2.
                    Err(_) => out.unit = &out.unit + &(&s_pos * &RatFunc::from_int(2)),
                }
                match CurveClass::new(x.a() - y.a(), x.b() - y.b()) {
                    Ok(g) => out.insert_add(g, s_neg),
                    Err(_) => out.unit = &out.unit + &(&s_neg * &RatFunc::from_int(2)),
                }
            }
        }
        out
    }

    /// `[self, rhs]` under the product law.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.multiply(rhs) - &rhs.multiply(self)
    }

    /// JSON form `{"unit": ..., "terms": [{"curve": [a,b], "coeff": ...}]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "unit": self.unit.to_json(),
            "terms": self.curves.iter().map(|(x, c)| json!({
                "curve": [x.a(), x.b()], "coeff": c.to_json(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, BracketError> {
        let unit = RatFunc::from_json(v.get("unit").ok_or(BracketError::Json("missing unit"))?)?;
        let mut out = Self::unit(unit);
        for t in v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or(BracketError::Json("missing terms"))?
        {
            let c = t
                .get("curve")
                .and_then(Value::as_array)
                .filter(|a| a.len() == 2)
                .ok_or(BracketError::Json("bad curve"))?;
            let a = c[0].as_i64().ok_or(BracketError::Json("bad curve"))?;
            let b = c[1].as_i64().ok_or(BracketError::Json("bad curve"))?;
            let coeff =
                RatFunc::from_json(t.get("coeff").ok_or(BracketError::Json("missing coeff"))?)?;
            out.insert_add(CurveClass::new(a, b)?, coeff);
        }
        Ok(out)
    }
}

impl Add for &BracketElement {
    type Output = BracketElement;
    fn add(self, rhs: &BracketElement) -> BracketElement {
        let mut out = self.clone();
        out.unit = &out.unit + &rhs.unit;
        for (x, c) in &rhs.curves {
            out.insert_add(*x, c.clone());
        }
        out
    }
}

impl Sub for &BracketElement {
    type Output = BracketElement;
    fn sub(self, rhs: &BracketElement) -> BracketElement {
        self + &(-rhs)
    }
}

impl Neg for &BracketElement {
    type Output = BracketElement;
    fn neg(self) -> BracketElement {
        BracketElement {
            unit: -&self.unit,
            curves: self.curves.iter().map(|(x, c)| (*x, -c)).collect(),
        }
    }
}

impl Mul for &BracketElement {
    type Output = BracketElement;
    fn mul(self, rhs: &BracketElement) -> BracketElement {
        self.multiply(rhs)
    }
}

impl fmt::Display for BracketElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = if self.unit.is_zero() {
            None
        } else {
            Some(("1".to_string(), &self.unit))
        };
        element_fmt(
            f,
            self.curves
                .iter()
                .map(|(x, c)| (format!("e{x}"), c))
                .chain(unit),
        )
    }
}

/// The comparison homomorphism: specialize every coefficient along
/// `v = -s^-3` and send each word `D[x1] ... D[xk]` to the product
/// `e[x1] ... e[xk]` evaluated left to right.
pub fn phi_map(p: &SkeinElement) -> Result<BracketElement, BracketError> {
    let mut out = BracketElement::zero();
    for (word, coeff) in p.terms() {
        let c = coeff.specialize_bracket()?;
        let mut acc = BracketElement::one();
        for x in word.gens() {
            acc = acc.multiply(&BracketElement::generator(*x));
        }
        out = &out + &acc.scale(&c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::brace;

    fn cc(a: i64, b: i64) -> CurveClass {
        CurveClass::new(a, b).unwrap()
    }

    fn e(a: i64, b: i64) -> BracketElement {
        BracketElement::generator(cc(a, b))
    }

    #[test]
    fn product_law_basic() {
        // e[1,0] e[0,1] = s e[1,1] + s^-1 e[1,-1]
        let p = e(1, 0).multiply(&e(0, 1));
        assert_eq!(p.curve_coeff(&cc(1, 1)), RatFunc::s());
        assert_eq!(p.curve_coeff(&cc(1, -1)), RatFunc::monomial(-1, 0));
        assert!(p.unit_coeff().is_zero());
    }

    #[test]
    fn square_uses_e0_convention() {
        // e[x]^2 = e[2x] + 2
        let p = e(1, 2).multiply(&e(1, 2));
        assert_eq!(p.curve_coeff(&cc(2, 4)), RatFunc::one());
        assert_eq!(p.unit_coeff(), &RatFunc::from_int(2));
    }

    #[test]
    fn commutator_matches_presentation_image() {
        for (x, y) in [((1, 0), (0, 1)), ((2, 1), (1, -1)), ((3, 0), (0, 2))] {
            let (cx, cy) = (cc(x.0, x.1), cc(y.0, y.1));
            let d = crate::torus::det(&cx, &cy);
            let lhs = e(x.0, x.1).commutator(&e(y.0, y.1));
            let brace_d = brace(d);
            let mut rhs = BracketElement::zero();
            if let Ok(g) = CurveClass::new(cx.a() + cy.a(), cx.b() + cy.b()) {
                rhs = &rhs + &BracketElement::generator(g).scale(&brace_d);
            }
            if let Ok(g) = CurveClass::new(cx.a() - cy.a(), cx.b() - cy.b()) {
                rhs = &rhs - &BracketElement::generator(g).scale(&brace_d);
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn parallel_curves_multiply_like_chebyshev() {
        // e[m x0] e[n x0] = e[(m+n) x0] + e[|m-n| x0], with e[0] = 2.
        let x0 = (1i64, 1i64);
        for m in 1..=4i64 {
            for n in 1..=4i64 {
                let p = e(m * x0.0, m * x0.1).multiply(&e(n * x0.0, n * x0.1));
                let mut expect = BracketElement::zero();
                expect.insert_add(cc((m + n) * x0.0, (m + n) * x0.1), RatFunc::one());
                let k = (m - n).abs();
                if k == 0 {
                    expect = &expect + &BracketElement::unit(RatFunc::from_int(2));
                } else {
                    expect.insert_add(cc(k * x0.0, k * x0.1), RatFunc::one());
                }
                assert_eq!(p, expect, "m = {m}, n = {n}");
            }
        }
    }

    #[test]
    fn phi_sends_generators_to_generators() {
        let d = SkeinElement::generator(cc(2, -3));
        assert_eq!(phi_map(&d).unwrap(), e(2, -3));
    }

    #[test]
    fn phi_is_a_homomorphism_on_samples() {
        let p = SkeinElement::generator(cc(1, 0)).multiply(&SkeinElement::generator(cc(0, 1)));
        let q = SkeinElement::generator(cc(1, -2));
        let lhs = phi_map(&p.multiply(&q)).unwrap();
        let rhs = phi_map(&p).unwrap().multiply(&phi_map(&q).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_commutator_compatibility() {
        // phi([D_x, D_y]) = (s^d - s^-d)(e[x+y] - e[x-y])
        let x = cc(2, 1);
        let y = cc(0, 1);
        let comm = SkeinElement::generator(x).commutator(&SkeinElement::generator(y));
        let lhs = phi_map(&comm).unwrap();
        let rhs = e(2, 1).commutator(&e(0, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip() {
        let p = &e(1, 0).multiply(&e(0, 1)) + &BracketElement::unit(brace(2));
        assert_eq!(BracketElement::from_json(&p.to_json()).unwrap(), p);
    }
}
