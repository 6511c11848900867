//! Sparse Laurent polynomials in `s` and `v` over the rationals.
//!
//! This is the coefficient engine behind [`crate::coeff::RatFunc`]. Monomials
//! are ordered lexicographically on the exponent pair `(es, ev)`, with `s`
//! before `v`; "leading term" always refers to the maximum in that order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CoeffError;

/// Raise a nonzero rational to an integer (possibly negative) power by
/// square-and-multiply.
pub(crate) fn rat_pow(base: &BigRational, exp: i64) -> BigRational {
    let mut p = BigRational::one();
    let mut b = base.clone();
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            p *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    if exp < 0 {
        p = p.recip();
    }
    p
}

/// A Laurent polynomial in `s` and `v` with rational coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// The single term `c * s^es * v^ev` (zero if `c` is zero).
    pub fn monomial(c: BigRational, es: i64, ev: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((es, ev), c);
        }
        Self { terms }
    }

    pub fn s_pow(es: i64) -> Self {
        Self::monomial(BigRational::one(), es, 0)
    }

    pub fn v_pow(ev: i64) -> Self {
        Self::monomial(BigRational::one(), 0, ev)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigRational)> {
        self.terms.iter()
    }

    /// True if no monomial involves `v`.
    pub fn is_v_free(&self) -> bool {
        self.terms.keys().all(|&(_, ev)| ev == 0)
    }

    pub(crate) fn insert_add(&mut self, key: (i64, i64), c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (*k, a * c))
                .collect(),
        }
    }

    /// Multiply by the monomial `s^es * v^ev`.
    pub fn shift(&self, es: i64, ev: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + es, b + ev), c.clone()))
                .collect(),
        }
    }

    /// The mirror substitution `s -> s^-1`, `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((-a, -b), c.clone()))
                .collect(),
        }
    }

    /// The substitution `v -> -s^-3` into the Kauffman bracket variable.
    pub fn substitute_bracket(&self) -> Self {
        let mut out = Self::zero();
        for (&(es, ev), c) in &self.terms {
            let sign = if ev.rem_euclid(2) == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            out.insert_add((es - 3 * ev, 0), sign);
        }
        out
    }

    /// Exact evaluation at a point with `s0, v0` nonzero.
    pub fn eval(&self, s0: &BigRational, v0: &BigRational) -> Result<BigRational, CoeffError> {
        if s0.is_zero() || v0.is_zero() {
            return Err(CoeffError::ZeroEvalPoint);
        }
        let mut acc = BigRational::zero();
        for (&(es, ev), c) in &self.terms {
            acc += c * rat_pow(s0, es) * rat_pow(v0, ev);
        }
        Ok(acc)
    }

    /// Leading term under lex order on `(es, ev)`.
    pub fn leading(&self) -> Option<((i64, i64), &BigRational)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    /// Per-variable minimum exponents over all terms.
    pub fn min_exps(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            return None;
        }
        let mut ms = i64::MAX;
        let mut mv = i64::MAX;
        for &(es, ev) in self.terms.keys() {
            ms = ms.min(es);
            mv = mv.min(ev);
        }
        Some((ms, mv))
    }

    /// Split off the monomial content: returns `((es, ev), p)` with
    /// `self = s^es v^ev * p` and `p` an ordinary polynomial whose minimum
    /// exponent in each variable is zero. The zero polynomial splits as
    /// `((0,0), 0)`.
    pub fn extract_monomial(&self) -> ((i64, i64), LaurentPoly) {
        match self.min_exps() {
            None => ((0, 0), Self::zero()),
            Some((ms, mv)) => ((ms, mv), self.shift(-ms, -mv)),
        }
    }

    /// The positive rational `c` (carrying the sign of the leading term) such
    /// that `self / c` has coprime integer coefficients and positive leading
    /// coefficient.
    pub fn normalizing_scalar(&self) -> Option<BigRational> {
        let (_, lead) = self.leading()?;
        let mut denom_lcm: BigInt = One::one();
        for c in self.terms.values() {
            denom_lcm = Integer::lcm(&denom_lcm, c.denom());
        }
        let mut numer_gcd: BigInt = Zero::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            numer_gcd = Integer::gcd(&numer_gcd, &scaled);
        }
        let mut scalar = BigRational::new(numer_gcd, denom_lcm);
        if lead.is_negative() {
            scalar = -scalar;
        }
        Some(scalar)
    }

    /// Exact division; panics if `d` does not divide `self` in `Q[s,v]` (up
    /// to monomial units). Intended for dividing out a GCD.
    pub fn div_exact(&self, d: &LaurentPoly) -> LaurentPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        if d.is_one() {
            return self.clone();
        }
        let ((ns, nv), n0) = self.extract_monomial();
        let ((ds, dv), d0) = d.extract_monomial();
        let (n_int, n_scale) = to_integer_poly(&n0);
        let (d_int, d_scale) = to_integer_poly(&d0);
        // Split the divisor into signed content and primitive part; the
        // primitive part divides exactly over the integers (Gauss), the
        // content is handled as a scalar and a Z[v] factor.
        let ct = d_int.content();
        let d_prim = d_int.primitive();
        let ct_signed = if d_int.lc().sign_negative() {
            ct.neg()
        } else {
            ct
        };
        let mut c_int = ct_signed.content();
        if ct_signed.sign_negative() {
            c_int = -c_int;
        }
        let c_prim_v = ct_signed.scale_div(&c_int);
        let mut q = n_int.div_exact(&d_prim);
        if !RingElem::is_one(&c_prim_v) {
            q = q.scale_div(&c_prim_v);
        }
        let scalar = BigRational::new(d_scale, n_scale * c_int);
        from_integer_poly(&q)
            .scale(&scalar)
            .shift(ns - ds, nv - dv)
    }

    /// GCD of the polynomial parts, ignoring monomial (unit) factors.
    ///
    /// The result has minimum exponent zero in each variable, coprime integer
    /// coefficients, and positive leading coefficient; `gcd(0, p)` is the
    /// normalized polynomial part of `p`.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        let (_, a) = self.extract_monomial();
        let (_, b) = other.extract_monomial();
        let g = if a.is_zero() {
            b
        } else if b.is_zero() {
            a
        } else if a.is_one() || b.is_one() || provably_coprime(&a, &b) {
            LaurentPoly::one()
        } else {
            from_integer_poly(&to_integer_poly(&a).0.gcd(&to_integer_poly(&b).0))
        };
        if g.is_zero() {
            return g;
        }
        let c = g.normalizing_scalar().expect("nonzero");
        g.scale(&c.recip())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.insert_add((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

fn fmt_coeff_factor(
    f: &mut fmt::Formatter<'_>,
    c: &BigRational,
    has_vars: bool,
) -> fmt::Result {
    if !has_vars {
        return write!(f, "{}", c);
    }
    if c.is_one() {
        return Ok(());
    }
    write!(f, "{}*", c)
}

fn fmt_var(f: &mut fmt::Formatter<'_>, name: &str, e: i64, lead: bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !lead {
        write!(f, "*")?;
    }
    if e == 1 {
        write!(f, "{}", name)
    } else {
        write!(f, "{}^{}", name, e)
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders like `s^2 - s^-2` or `2*s*v^-1 + 1/2`, descending in the
    /// monomial order. Output parses back through the CLI grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(es, ev), c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let has_vars = es != 0 || ev != 0;
            fmt_coeff_factor(f, &mag, has_vars)?;
            fmt_var(f, "s", es, true)?;
            fmt_var(f, "v", ev, es == 0)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Generic dense polynomial engine used only for GCD and exact division.
// Coefficients form a GCD domain; instantiating at BigInt gives Z[v], and at
// Poly<BigInt> gives Z[v][s] (s is the outer, main variable). GCDs use the
// subresultant pseudo-remainder sequence, which keeps intermediate
// coefficients polynomially bounded where a naive PRS explodes.
// ---------------------------------------------------------------------------

/// Coefficient ring operations needed by the polynomial engine.
trait RingElem: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn one() -> Self;
    fn is_one(&self) -> bool;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    /// Exact division; panics if inexact.
    fn div_exact(&self, other: &Self) -> Self;
    fn gcd(&self, other: &Self) -> Self;
    /// Sign of the canonical orientation (true when flipping the sign would
    /// normalize the element).
    fn sign_negative(&self) -> bool;

    fn pow(&self, mut n: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl RingElem for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn one() -> Self {
        One::one()
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = Integer::div_rem(self, other);
        assert!(Zero::is_zero(&r), "inexact integer division");
        q
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn sign_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Dense univariate polynomial over `C`, ascending degree; zero is empty.
#[derive(Clone, Debug, PartialEq)]
struct Poly<C: RingElem> {
    c: Vec<C>,
}

impl<C: RingElem> Poly<C> {
    fn zero() -> Self {
        Self { c: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.c.len() - 1
    }

    fn trim(mut self) -> Self {
        while self.c.last().map(C::is_zero).unwrap_or(false) {
            self.c.pop();
        }
        self
    }

    fn lc(&self) -> &C {
        self.c.last().expect("nonzero polynomial")
    }

    fn sub(&self, other: &Self) -> Self {
        let mut c: Vec<C> = vec![C::zero(); self.c.len().max(other.c.len())];
        for (i, a) in self.c.iter().enumerate() {
            c[i] = a.clone();
        }
        for (i, b) in other.c.iter().enumerate() {
            c[i] = c[i].sub(b);
        }
        Self { c }.trim()
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c: Vec<C> = vec![C::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] = c[i + j].sub(&a.mul(b).neg());
            }
        }
        Self { c }.trim()
    }

    fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            c: self.c.iter().map(|x| x.mul(k)).collect(),
        }
        .trim()
    }

    /// Multiply by the variable to the `k`-th power.
    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![C::zero(); k];
        c.extend(self.c.iter().cloned());
        Self { c }
    }

    fn scale_div(&self, k: &C) -> Self {
        Self {
            c: self.c.iter().map(|x| x.div_exact(k)).collect(),
        }
        .trim()
    }

    /// Content: the coefficient GCD.
    fn content(&self) -> C {
        let mut g = C::zero();
        for x in &self.c {
            if x.is_zero() {
                continue;
            }
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and orient the leading coefficient.
    fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut ct = self.content();
        if self.lc().sign_negative() {
            ct = ct.neg();
        }
        if ct.is_one() {
            return self.clone();
        }
        self.scale_div(&ct)
    }

    /// The exact pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    fn prem_exact(&self, d: &Self) -> Self {
        let db = d.deg();
        let lb = d.lc().clone();
        let delta = self.deg() - db;
        let mut r = self.clone();
        let mut steps = 0usize;
        while !r.is_zero() && r.deg() >= db {
            let la = r.lc().clone();
            let k = r.deg() - db;
            r = r.scale(&lb).sub(&d.shift(k).scale(&la));
            steps += 1;
        }
        // Pad with the missing powers of lc(d) so the subresultant division
        // factors stay exact.
        for _ in steps..=delta {
            r = r.scale(&lb);
        }
        r
    }

    /// Subresultant PRS GCD, primitive in the outer variable.
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let cont = self.content().gcd(&other.content());
        let mut p = self.primitive();
        let mut q = other.primitive();
        if p.deg() < q.deg() {
            std::mem::swap(&mut p, &mut q);
        }
        let mut g = C::one();
        let mut h = C::one();
        loop {
            let delta = p.deg() - q.deg();
            let r = p.prem_exact(&q);
            if r.is_zero() {
                break;
            }
            if q.deg() == 0 {
                // Nonzero remainder against a constant: coprime.
                q = Self { c: vec![C::one()] };
                break;
            }
            let divisor = g.mul(&h.pow(delta));
            p = q;
            q = r.scale_div(&divisor);
            g = p.lc().clone();
            h = if delta == 0 {
                h
            } else {
                g.pow(delta).div_exact(&h.pow(delta - 1))
            };
        }
        q.primitive().scale(&cont)
    }

    /// Exact division (panics if inexact).
    fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let mut r = self.clone();
        let mut q: Vec<C> = vec![C::zero(); self.c.len() - d.c.len() + 1];
        while !r.is_zero() {
            assert!(r.deg() >= d.deg(), "inexact polynomial division");
            let k = r.deg() - d.deg();
            let coef = r.lc().div_exact(d.lc());
            r = r.sub(&d.shift(k).scale(&coef));
            q[k] = coef;
        }
        Self { c: q }.trim()
    }
}

impl RingElem for Poly<BigInt> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn one() -> Self {
        Poly {
            c: vec![BigInt::from(1)],
        }
    }
    fn is_one(&self) -> bool {
        self.c.len() == 1 && RingElem::is_one(&self.c[0])
    }
    fn neg(&self) -> Self {
        Poly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        Poly::div_exact(self, other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Poly::gcd(self, other)
    }
    fn sign_negative(&self) -> bool {
        !self.is_zero() && self.lc().sign_negative()
    }
}

/// Z[v][s] with `s` as the main variable.
type ZPoly2 = Poly<Poly<BigInt>>;

/// Clear denominators of an ordinary Laurent polynomial (all exponents
/// nonnegative) into the integer engine, returning the scalar multiplier
/// used: `result = scale * p`.
fn to_integer_poly(p: &LaurentPoly) -> (ZPoly2, BigInt) {
    let mut denom_lcm = BigInt::from(1);
    for (_, c) in p.terms() {
        denom_lcm = Integer::lcm(&denom_lcm, c.denom());
    }
    let mut rows: Vec<Poly<BigInt>> = Vec::new();
    for (&(es, ev), coef) in p.terms() {
        assert!(es >= 0 && ev >= 0, "negative exponent in polynomial part");
        let (es, ev) = (es as usize, ev as usize);
        if rows.len() <= es {
            rows.resize(es + 1, Poly::zero());
        }
        if rows[es].c.len() <= ev {
            rows[es].c.resize(ev + 1, Zero::zero());
        }
        rows[es].c[ev] = coef.numer() * (&denom_lcm / coef.denom());
    }
    (
        Poly {
            c: rows.into_iter().map(Poly::trim).collect(),
        }
        .trim(),
        denom_lcm,
    )
}

// ---------------------------------------------------------------------------
// Modular Kronecker coprimality filter.
//
// Substituting s -> t, v -> t^K with K exceeding both s-degrees maps distinct
// monomials to distinct t-degrees, so the image of a nonconstant divisor is
// nonconstant over Z, and its leading coefficient divides the leading image
// coefficients. If the univariate images have a constant GCD mod a prime that
// does not kill either leading coefficient, the original pair is coprime.
// A negative answer is inconclusive and falls through to the full GCD.
// ---------------------------------------------------------------------------

const FILTER_PRIME: u64 = (1 << 61) - 1;

fn mod_mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % FILTER_PRIME as u128) as u64
}

fn mod_pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, b);
        }
        b = mod_mul(b, b);
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64) -> u64 {
    mod_pow(a, FILTER_PRIME - 2)
}

fn rational_mod(c: &BigRational) -> Option<u64> {
    let p = BigInt::from(FILTER_PRIME);
    let num = ((c.numer() % &p) + &p) % &p;
    let den = ((c.denom() % &p) + &p) % &p;
    let num: u64 = num.try_into().ok()?;
    let den: u64 = den.try_into().ok()?;
    if den == 0 {
        return None;
    }
    Some(mod_mul(num, mod_inv(den)))
}

/// Image of an ordinary polynomial in the kept variable after substituting
/// `point` for the other one, mod the filter prime. Returns `None` when the
/// true leading coefficient dies under the substitution, which would make the
/// test unsound.
fn eval_image(p: &LaurentPoly, keep_s: bool, point: u64) -> Option<Vec<u64>> {
    let deg = p
        .terms()
        .map(|(&(es, ev), _)| if keep_s { es } else { ev })
        .max()?;
    let mut img = vec![0u64; deg as usize + 1];
    for (&(es, ev), c) in p.terms() {
        let (kept, other) = if keep_s { (es, ev) } else { (ev, es) };
        let term = mod_mul(rational_mod(c)?, mod_pow(point, other as u64));
        let idx = kept as usize;
        img[idx] = (img[idx] + term) % FILTER_PRIME;
    }
    if img[deg as usize] == 0 {
        return None;
    }
    Some(img)
}

fn mod_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lb_inv = mod_inv(*b.last().unwrap());
        while a.len() >= b.len() {
            let k = a.len() - b.len();
            let c = mod_mul(*a.last().unwrap(), lb_inv);
            for (i, x) in b.iter().enumerate() {
                let sub = mod_mul(c, *x);
                let idx = k + i;
                a[idx] = (a[idx] + FILTER_PRIME - sub) % FILTER_PRIME;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Sound one-sided coprimality test for ordinary polynomials: a common factor
/// G survives substitution of either variable (its degree is preserved when
/// the leading coefficients survive), so constant univariate GCDs in both
/// variables force G to be constant. A `false` answer is inconclusive.
fn provably_coprime(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    'var: for keep_s in [true, false] {
        for point in [3u64, 65537, 1_000_003] {
            let (Some(ia), Some(ib)) = (
                eval_image(a, keep_s, point),
                eval_image(b, keep_s, point),
            ) else {
                continue;
            };
            if mod_gcd_degree(ia, ib) == 0 {
                continue 'var;
            }
        }
        return false;
    }
    true
}

fn from_integer_poly(p: &ZPoly2) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (es, vc) in p.c.iter().enumerate() {
        for (ev, coef) in vc.c.iter().enumerate() {
            out.insert_add(
                (es as i64, ev as i64),
                BigRational::from_integer(coef.clone()),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> LaurentPoly {
        LaurentPoly::s_pow(1)
    }

    fn v() -> LaurentPoly {
        LaurentPoly::v_pow(1)
    }

    #[test]
    fn arithmetic_basics() {
        let p = &(&s() + &v()) * &(&s() - &v());
        let expect = &(&s() * &s()) - &(&v() * &v());
        assert_eq!(p, expect);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn extract_monomial_and_leading() {
        // s^-1 v^2 + s v^2  =  s^-1 v^2 (1 + s^2)
        let p = &LaurentPoly::monomial(BigRational::one(), -1, 2)
            + &LaurentPoly::monomial(BigRational::one(), 1, 2);
        let ((es, ev), q) = p.extract_monomial();
        assert_eq!((es, ev), (-1, 2));
        assert_eq!(q.min_exps(), Some((0, 0)));
        assert_eq!(p.leading().unwrap().0, (1, 2));
    }

    #[test]
    fn gcd_cancels_common_factor() {
        // gcd((s^2 - v^2), (s - v)) = s - v
        let a = &(&s() + &v()) * &(&s() - &v());
        let b = &s() - &v();
        let g = a.gcd(&b);
        assert_eq!(g, b);
        assert_eq!(a.div_exact(&g), &s() + &v());
    }

    #[test]
    fn gcd_univariate_in_s() {
        // gcd(s^2 - 1, s^2 - 2s + 1) = s - 1
        let s2m1 = &(&s() * &s()) - &LaurentPoly::one();
        let sm1 = &s() - &LaurentPoly::one();
        let sq = &sm1 * &sm1;
        assert_eq!(s2m1.gcd(&sq), sm1);
    }

    #[test]
    fn gcd_ignores_monomial_units() {
        // s^-3 (s - v) and v^-1 (s - v) share the factor s - v.
        let base = &s() - &v();
        let a = base.shift(-3, 0);
        let b = base.shift(0, -1);
        assert_eq!(a.gcd(&b), base);
    }

    #[test]
    fn substitute_bracket_on_v() {
        // v^-1 -> -s^3
        let p = LaurentPoly::v_pow(-1).substitute_bracket();
        assert_eq!(p, LaurentPoly::monomial(-BigRational::one(), 3, 0));
    }

    #[test]
    fn eval_rejects_zero_point() {
        let p = s();
        assert!(p.eval(&BigRational::zero(), &BigRational::one()).is_err());
    }

    #[test]
    fn display_descending() {
        let p = &s() - &LaurentPoly::s_pow(-1);
        assert_eq!(p.to_string(), "s - s^-1");
        let q = &LaurentPoly::monomial(BigRational::new(1.into(), 2.into()), 1, -1)
            + &LaurentPoly::from_int(3);
        assert_eq!(q.to_string(), "1/2*s*v^-1 + 3");
    }
}
