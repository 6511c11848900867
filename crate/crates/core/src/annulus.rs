//! The hook-basis fragment of the skein of the annulus.
//!
//! Elements here live in the span of the empty link and the closed hook
//! idempotents `Q[a|b]`. That span is exactly what the torus algebra's
//! meridian action and empty-link projections reach, so no general products
//! of hooks are defined.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde_json::{json, Value};
use thiserror::Error;

use crate::coeff::{brace, delta, CoeffError, RatFunc};
use crate::torus::element_fmt;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AnnulusError {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("malformed JSON: {0}")]
    Json(&'static str),
}

/// A hook partition `(arm | leg)` of size `arm + leg + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hook {
    pub arm: u32,
    pub leg: u32,
}

impl Hook {
    pub fn new(arm: u32, leg: u32) -> Self {
        Self { arm, leg }
    }

    pub fn size(&self) -> u32 {
        self.arm + self.leg + 1
    }
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}|{}]", self.arm, self.leg)
    }
}

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, AnnulusError> {
        if parts.contains(&0) {
            return Err(AnnulusError::Domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AnnulusError::Domain(
                "partition parts must be weakly decreasing",
            ));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_hook(h: Hook) -> Self {
        let mut parts = vec![h.arm + 1];
        parts.extend(std::iter::repeat_n(1, h.leg as usize));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Cell contents `j - i` over all cells, rows and columns 1-based.
    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &len)| {
            (1..=len as i64).map(move |j| j - (i as i64 + 1))
        })
    }
}

/// A linear combination of hooks plus a multiple of the empty link.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AnnulusElement {
    unit: RatFunc,
    hooks: BTreeMap<Hook, RatFunc>,
}

impl AnnulusElement {
    pub fn zero() -> Self {
        Self {
            unit: RatFunc::zero(),
            hooks: BTreeMap::new(),
        }
    }

    pub fn unit(c: RatFunc) -> Self {
        Self {
            unit: c,
            hooks: BTreeMap::new(),
        }
    }

    pub fn hook(h: Hook, c: RatFunc) -> Self {
        let mut out = Self::zero();
        out.insert_add(h, c);
        out
    }

    pub fn unit_coeff(&self) -> &RatFunc {
        &self.unit
    }

    pub fn hook_coeff(&self, h: &Hook) -> RatFunc {
        self.hooks.get(h).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn hooks(&self) -> impl Iterator<Item = (&Hook, &RatFunc)> {
        self.hooks.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.hooks.is_empty()
    }

    fn insert_add(&mut self, h: Hook, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.hooks.entry(h) {
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
            hooks: self.hooks.iter().map(|(h, a)| (*h, a * c)).collect(),
        }
    }

    /// JSON form `{"unit": ..., "hooks": [{"arm": a, "leg": b, "coeff": ...}]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "unit": self.unit.to_json(),
            "hooks": self.hooks.iter().map(|(h, c)| json!({
                "arm": h.arm, "leg": h.leg, "coeff": c.to_json(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, AnnulusError> {
        let unit = RatFunc::from_json(v.get("unit").ok_or(AnnulusError::Json("missing unit"))?)?;
        let mut out = Self::unit(unit);
        for h in v
            .get("hooks")
            .and_then(Value::as_array)
            .ok_or(AnnulusError::Json("missing hooks"))?
        {
            let arm = h
                .get("arm")
                .and_then(Value::as_u64)
                .ok_or(AnnulusError::Json("bad arm"))? as u32;
            let leg = h
                .get("leg")
                .and_then(Value::as_u64)
                .ok_or(AnnulusError::Json("bad leg"))? as u32;
            let coeff =
                RatFunc::from_json(h.get("coeff").ok_or(AnnulusError::Json("missing coeff"))?)?;
            out.insert_add(Hook::new(arm, leg), coeff);
        }
        Ok(out)
    }
}

impl Add for &AnnulusElement {
    type Output = AnnulusElement;
    fn add(self, rhs: &AnnulusElement) -> AnnulusElement {
        let mut out = self.clone();
        out.unit = &out.unit + &rhs.unit;
        for (h, c) in &rhs.hooks {
            out.insert_add(*h, c.clone());
        }
        out
    }
}

impl Sub for &AnnulusElement {
    type Output = AnnulusElement;
    fn sub(self, rhs: &AnnulusElement) -> AnnulusElement {
        self + &(-rhs)
    }
}

impl Neg for &AnnulusElement {
    type Output = AnnulusElement;
    fn neg(self) -> AnnulusElement {
        AnnulusElement {
            unit: -&self.unit,
            hooks: self.hooks.iter().map(|(h, c)| (*h, -c)).collect(),
        }
    }
}

impl fmt::Display for AnnulusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = if self.unit.is_zero() {
            None
        } else {
            Some(("1".to_string(), &self.unit))
        };
        element_fmt(
            f,
            self.hooks
                .iter()
                .map(|(h, c)| (h.to_string(), c))
                .chain(unit),
        )
    }
}

/// The constant `c_k`: zero for odd `k`, `-1` for even `k`.
pub fn c_constant(k: u32) -> Result<RatFunc, AnnulusError> {
    if k < 1 {
        return Err(AnnulusError::Domain("c_k requires k >= 1"));
    }
    Ok(if k.is_multiple_of(2) {
        -RatFunc::one()
    } else {
        RatFunc::zero()
    })
}

/// The hook expansion of the annulus power-sum element:
/// `D_k = sum over i+j+1=k of (-1)^j Q[i|j], plus c_k`.
pub fn hook_expansion(k: u32) -> Result<AnnulusElement, AnnulusError> {
    let mut out = AnnulusElement::unit(c_constant(k)?);
    for i in 0..k {
        let j = k - 1 - i;
        let sign = if j.is_multiple_of(2) {
            RatFunc::one()
        } else {
            -RatFunc::one()
        };
        out.insert_add(Hook::new(i, j), sign);
    }
    Ok(out)
}

/// Eigenvalue of the meridian action on the closed idempotent of `lam`:
/// `delta + (s - s^-1)(v^-1 sum s^(2 cn) - v sum s^(-2 cn))` over the cell
/// contents. The empty partition gives `delta`.
pub fn meridian_eigenvalue(lam: &Partition) -> RatFunc {
    let mut pos = RatFunc::zero();
    let mut neg = RatFunc::zero();
    for c in lam.contents() {
        pos = &pos + &RatFunc::monomial(2 * c, 0);
        neg = &neg + &RatFunc::monomial(-2 * c, 0);
    }
    let vterm = &(&RatFunc::monomial(0, -1) * &pos) - &(&RatFunc::v() * &neg);
    &delta() + &(&brace(1) * &vterm)
}

/// Closed form of the hook eigenvalue:
/// `delta + v^-1 {n} s^(a-b) - v {n} s^(b-a)` with `n` the hook size.
pub fn hook_eigenvalue_closed(h: Hook) -> RatFunc {
    let n = h.size() as i64;
    let e = h.arm as i64 - h.leg as i64;
    let pos = &RatFunc::monomial(e, -1) * &brace(n);
    let neg = &RatFunc::monomial(-e, 1) * &brace(n);
    &(&delta() + &pos) - &neg
}

/// Diagonal action of the meridian `D[1,0]`: each hook is scaled by its
/// eigenvalue, the empty link by `delta`.
pub fn act_meridian(e: &AnnulusElement) -> AnnulusElement {
    let mut out = AnnulusElement::unit(&delta() * e.unit_coeff());
    for (h, c) in e.hooks() {
        out.insert_add(*h, &meridian_eigenvalue(&Partition::from_hook(*h)) * c);
    }
    out
}

/// Projection of the torus curve `D[(M, N)]` onto the empty link of the
/// annulus embedded along `(0, 1)`:
/// `c_k + sum over a+b+1 = N of v^-M s^(M(a-b)) (-1)^b Q[a|b]` with
/// `k = gcd(M, N)` (and `gcd(0, N) = N`). Requires `N >= 1`.
pub fn project_empty(x: (i64, i64)) -> Result<AnnulusElement, AnnulusError> {
    let (m_big, n_big) = x;
    if n_big < 1 {
        return Err(AnnulusError::Domain("project_empty requires N >= 1"));
    }
    let k = if m_big == 0 {
        n_big
    } else {
        num_integer::gcd(m_big, n_big)
    };
    let mut out = AnnulusElement::unit(c_constant(k as u32)?);
    let n = n_big as u32;
    for a in 0..n {
        let b = n - 1 - a;
        let e = m_big * (a as i64 - b as i64);
        let mut c = RatFunc::monomial(e, -m_big);
        if b % 2 == 1 {
            c = -&c;
        }
        out.insert_add(Hook::new(a, b), c);
    }
    Ok(out)
}

/// The expansion `{n} sum (v^-2 s^(2(a-b)) - 1)(-1)^b Q[a|b]` that both sides
/// of the angled relation acquire after acting on the empty link.
pub fn angled_expansion(n: u32) -> AnnulusElement {
    let mut out = AnnulusElement::zero();
    let bn = brace(n as i64);
    for a in 0..n {
        let b = n - 1 - a;
        let e = 2 * (a as i64 - b as i64);
        let mut c = &(&RatFunc::monomial(e, -2) - &RatFunc::one()) * &bn;
        if b % 2 == 1 {
            c = -&c;
        }
        out.insert_add(Hook::new(a, b), c);
    }
    out
}

/// Check the angled relation after acting on the empty link:
/// `[D[1,0], D[1,n]] applied to the empty link equals
/// {n}(D[2,n] - D[0,n]) applied to the empty link`, both equal to
/// [`angled_expansion`]. The left side uses that the meridian acts on
/// `D[1,n] . empty` diagonally while `D[1,n]` acts on `delta . empty`
/// by scaling.
pub fn angled_on_empty_check(n: u32) -> Result<bool, AnnulusError> {
    if n < 1 {
        return Err(AnnulusError::Domain("angled check requires n >= 1"));
    }
    let p1n = project_empty((1, n as i64))?;
    let lhs = &act_meridian(&p1n) - &p1n.scale(&delta());
    let rhs = (&project_empty((2, n as i64))? - &project_empty((0, n as i64))?)
        .scale(&brace(n as i64));
    Ok(lhs == rhs && lhs == angled_expansion(n))
}
