//! Normal forms in the presented torus algebra.
//!
//! The algebra is spanned by unordered words in the generators `D[x]`, so a
//! normal form is a linear combination of sorted words. Reordering an
//! adjacent out-of-order pair uses the defining relation
//!
//! ```text
//! D[y] D[x] = D[x] D[y] - {d(x,y)} (D[x+y] - D[x-y])
//! ```
//!
//! whose correction terms are strictly shorter words, so rewriting terminates
//! with measure (word length, inversion count). Confluence is not assumed; it
//! is exercised by the strategy-independence and associativity tests.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::coeff::{brace, CoeffError, RatFunc};

use super::curve::{add_pair, det, sub_pair, CurveClass, GL2Matrix};
use super::TorusError;

/// A sorted multiset of curve classes; the empty word is the algebra unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<CurveClass>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Build from generators in any order; sorts into the canonical form.
    pub fn from_gens(mut gens: Vec<CurveClass>) -> Self {
        gens.sort();
        Self(gens)
    }

    pub fn single(x: CurveClass) -> Self {
        Self(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn gens(&self) -> &[CurveClass] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "D{}", self.0[i])?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Rewrite order for reducing a word to normal form. Both must produce the
/// same element; the tests check this.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    LeftmostFirst,
    RightmostFirst,
}

/// An element of the torus algebra in normal form: a finite linear
/// combination of sorted words with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SkeinElement {
    terms: BTreeMap<Word, RatFunc>,
}

impl SkeinElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::empty(), RatFunc::one())
    }

    /// The generator `D[x]`.
    pub fn generator(x: CurveClass) -> Self {
        Self::from_word(Word::single(x), RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::from_word(Word::empty(), c)
    }

    pub fn from_word(w: Word, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a word (zero if absent).
    pub fn coeff(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Length of the longest word in the support.
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    fn insert_add(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    /// Normal form of the product, multiplying words pairwise and rewriting.
    pub fn multiply(&self, rhs: &Self) -> Self {
        self.multiply_with(rhs, RewriteStrategy::LeftmostFirst)
    }

    pub fn multiply_with(&self, rhs: &Self, strategy: RewriteStrategy) -> Self {
        normal_form_many(
            self.terms.iter().flat_map(|(wl, cl)| {
                rhs.terms.iter().map(move |(wr, cr)| {
                    let mut gens = Vec::with_capacity(wl.len() + wr.len());
                    gens.extend_from_slice(wl.gens());
                    gens.extend_from_slice(wr.gens());
                    (gens, cl * cr)
                })
            }),
            strategy,
        )
    }

    /// `[self, rhs] = self * rhs - rhs * self` in normal form.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.multiply(rhs) - &rhs.multiply(self)
    }

    /// Apply `g` in GL2(Z): generators map to `D[g x]`; determinant -1
    /// elements reverse words (anti-automorphism) before renormalizing.
    pub fn gl2_apply(&self, g: &GL2Matrix) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut gens: Vec<CurveClass> = w
                .gens()
                .iter()
                .map(|x| {
                    let (a, b) = g.apply(x.pair());
                    CurveClass::new(a, b).expect("GL2 image of a nonzero vector is nonzero")
                })
                .collect();
            if g.det() == -1 {
                gens.reverse();
            }
            out = &out + &word_normal_form(gens, c.clone(), RewriteStrategy::LeftmostFirst);
        }
        out
    }

    /// JSON form `{"terms": [{"word": [[a,b],...], "coeff": ...}, ...]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                json!({
                    "word": w.gens().iter().map(|x| json!([x.a(), x.b()])).collect::<Vec<_>>(),
                    "coeff": c.to_json(),
                })
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self, TorusError> {
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or(CoeffError::Json("missing terms array"))
            .map_err(TorusError::Coeff)?;
        let mut out = Self::zero();
        for t in terms {
            let word = t
                .get("word")
                .and_then(Value::as_array)
                .ok_or(TorusError::Coeff(CoeffError::Json("missing word")))?;
            let mut gens = Vec::with_capacity(word.len());
            for g in word {
                let g = g
                    .as_array()
                    .filter(|g| g.len() == 2)
                    .ok_or(TorusError::Coeff(CoeffError::Json("bad generator")))?;
                let a = g[0]
                    .as_i64()
                    .ok_or(TorusError::Coeff(CoeffError::Json("bad generator")))?;
                let b = g[1]
                    .as_i64()
                    .ok_or(TorusError::Coeff(CoeffError::Json("bad generator")))?;
                gens.push(CurveClass::new(a, b)?);
            }
            let coeff = t
                .get("coeff")
                .ok_or(TorusError::Coeff(CoeffError::Json("missing coeff")))?;
            out.insert_add(Word::from_gens(gens), RatFunc::from_json(coeff)?);
        }
        Ok(out)
    }
}

impl Add for &SkeinElement {
    type Output = SkeinElement;
    fn add(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = self.clone(); // basis-wise addition
        for (w, c) in &rhs.terms {
            out.insert_add(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SkeinElement {
    type Output = SkeinElement;
    fn sub(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.insert_add(w.clone(), -c);
        }
        out
    }
}

impl Neg for &SkeinElement {
    type Output = SkeinElement;
    fn neg(self) -> SkeinElement {
        SkeinElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SkeinElement {
    type Output = SkeinElement;
    fn mul(self, rhs: &SkeinElement) -> SkeinElement {
        self.multiply(rhs)
    }
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter().map(|(w, c)| (w.to_string(), c)))
    }
}

/// Shared pretty-printer for linear combinations: renders `c1*B1 + c2*B2`
/// with sign folding; basis string "1" stands for the unit and is dropped
/// next to a coefficient.
pub(crate) fn fmt_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a RatFunc)>,
{
    let mut wrote = false;
    for (basis, c) in terms {
        if c.is_zero() {
            continue;
        }
        let (sign_neg, mag) = split_sign(c);
        if wrote {
            write!(f, " {} ", if sign_neg { "-" } else { "+" })?;
        } else if sign_neg {
            write!(f, "-")?;
        }
        wrote = true;
        let unit = basis == "1";
        if mag.is_one() {
            write!(f, "{}", basis)?;
        } else if unit {
            // A bare fraction is self-delimiting; a polynomial sum under a
            // minus sign is not and needs grouping.
            if sign_neg && mag.den().is_one() && mag.num().num_terms() > 1 {
                write!(f, "({})", mag)?;
            } else {
                write!(f, "{}", mag)?;
            }
        } else {
            write!(f, "{}*{}", render_coeff(&mag), basis)?;
        }
    }
    if !wrote {
        write!(f, "0")?;
    }
    Ok(())
}

/// Split a nonzero coefficient into (is_negative, magnitude) using the sign
/// of the numerator's leading term.
fn split_sign(c: &RatFunc) -> (bool, RatFunc) {
    use num_traits::Signed;
    let neg = c
        .num()
        .leading()
        .map(|(_, lead)| lead.is_negative())
        .unwrap_or(false);
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

/// Render a coefficient so it can prefix `*basis`: parenthesized when it is a
/// sum or a fraction.
fn render_coeff(c: &RatFunc) -> String {
    if c.den().is_one() && c.num().num_terms() == 1 {
        c.to_string()
    } else {
        format!("({})", c)
    }
}

/// Normal form of a single (possibly unsorted) word with coefficient.
///
/// Corrections from the defining relation are strictly shorter, and each swap
/// lowers the inversion count, so the work list terminates. Pending words are
/// coalesced by key and drained longest-first, which collapses the
/// exponentially many duplicate rewrite paths into one entry each.
pub fn word_normal_form(
    gens: Vec<CurveClass>,
    coeff: RatFunc,
    strategy: RewriteStrategy,
) -> SkeinElement {
    normal_form_many(std::iter::once((gens, coeff)), strategy)
}

/// Reduce a batch of weighted words to normal form over one shared work list.
fn normal_form_many(
    items: impl Iterator<Item = (Vec<CurveClass>, RatFunc)>,
    strategy: RewriteStrategy,
) -> SkeinElement {
    let mut out = SkeinElement::zero();
    let mut pending: BTreeMap<(usize, Vec<CurveClass>), RatFunc> = BTreeMap::new();
    let add = |pending: &mut BTreeMap<(usize, Vec<CurveClass>), RatFunc>,
               w: Vec<CurveClass>,
               c: RatFunc| {
        if c.is_zero() {
            return;
        }
        match pending.entry((w.len(), w)) {
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
    };
    for (gens, coeff) in items {
        add(&mut pending, gens, coeff);
    }
    while let Some(((_, w), c)) = pending.pop_last() {
        let inversion = match strategy {
            RewriteStrategy::LeftmostFirst => (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]),
            RewriteStrategy::RightmostFirst => {
                (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] > w[i + 1])
            }
        };
        let Some(i) = inversion else {
            out.insert_add(Word(w), c);
            continue;
        };
        // w[i] = y > x = w[i+1]:  D[y] D[x] = D[x] D[y] - {d(x,y)}(D[x+y] - D[x-y])
        let y = w[i];
        let x = w[i + 1];
        let d = det(&x, &y);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        if d != 0 {
            let factor = &c * &brace(d);
            // Distinct canonical classes never sum or cancel to zero, so both
            // correction generators exist.
            let sum = CurveClass::new(x.a() + y.a(), x.b() + y.b()).expect("x + y nonzero");
            let diff = CurveClass::new(x.a() - y.a(), x.b() - y.b()).expect("x - y nonzero");
            let mut w_sum = Vec::with_capacity(w.len() - 1);
            w_sum.extend_from_slice(&w[..i]);
            w_sum.push(sum);
            w_sum.extend_from_slice(&w[i + 2..]);
            let mut w_diff = w_sum.clone();
            w_diff[i] = diff;
            add(&mut pending, w_sum, -&factor);
            add(&mut pending, w_diff, factor);
        }
        add(&mut pending, swapped, c);
    }
    out
}

/// The closed-form right-hand side `{d(x,y)} (D[x+y] - D[x-y])` of the
/// defining relation, with canonicalization and zero-vector terms dropped
/// (their coefficient is necessarily zero).
pub fn relation_rhs(x: &CurveClass, y: &CurveClass) -> SkeinElement {
    let d = det(x, y);
    if d == 0 {
        return SkeinElement::zero();
    }
    let c = brace(d);
    let mut out = SkeinElement::zero();
    let sum = add_pair(x.pair(), y.pair());
    if let Ok(g) = CurveClass::new(sum.0, sum.1) {
        out = &out + &SkeinElement::from_word(Word::single(g), c.clone());
    }
    let diff = sub_pair(x.pair(), y.pair());
    if let Ok(g) = CurveClass::new(diff.0, diff.1) {
        out = &out - &SkeinElement::from_word(Word::single(g), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cc(a: i64, b: i64) -> CurveClass {
        CurveClass::new(a, b).unwrap()
    }

    fn gen(a: i64, b: i64) -> SkeinElement {
        SkeinElement::generator(cc(a, b))
    }

    #[test]
    fn generator_identities() {
        assert_eq!(gen(1, 0), gen(-1, 0));
        assert_eq!(gen(1, 0).coeff(&Word::single(cc(1, 0))), RatFunc::one());
    }

    #[test]
    fn multiply_one_rewrite_step() {
        // D[1,0] * D[0,1] = word[(0,1),(1,0)] + {1}(D[1,1] - D[1,-1])
        let p = gen(1, 0).multiply(&gen(0, 1));
        let sorted = Word::from_gens(vec![cc(0, 1), cc(1, 0)]);
        assert_eq!(p.coeff(&sorted), RatFunc::one());
        assert_eq!(p.coeff(&Word::single(cc(1, 1))), brace(1));
        assert_eq!(p.coeff(&Word::single(cc(1, -1))), -brace(1));
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn square_of_a_generator_has_no_correction() {
        for (a, b) in [(1, 0), (2, 3), (0, 2)] {
            let p = gen(a, b).multiply(&gen(a, b));
            assert_eq!(p.num_terms(), 1);
            assert_eq!(
                p.coeff(&Word::from_gens(vec![cc(a, b), cc(a, b)])),
                RatFunc::one()
            );
        }
    }

    #[test]
    fn unit_is_neutral() {
        let p = gen(2, -1).multiply(&gen(0, 3));
        assert_eq!(SkeinElement::one().multiply(&p), p);
        assert_eq!(p.multiply(&SkeinElement::one()), p);
    }

    #[test]
    fn commutator_matches_relation_rhs() {
        let x = cc(1, 0);
        for n in 1..=6 {
            let y = cc(0, n);
            let lhs = gen(1, 0).commutator(&SkeinElement::generator(y));
            assert_eq!(lhs, relation_rhs(&x, &y), "n = {n}");
            // explicit form {n}(D[1,n] - D[1,-n])
            let rhs = &SkeinElement::from_word(Word::single(cc(1, n)), brace(n))
                - &SkeinElement::from_word(Word::single(cc(1, -n)), brace(n));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn relation_rhs_degenerate_cases() {
        assert!(relation_rhs(&cc(1, 0), &cc(1, 0)).is_zero());
        let r = relation_rhs(&cc(2, 0), &cc(0, 1));
        assert_eq!(r.coeff(&Word::single(cc(2, 1))), brace(2));
        assert_eq!(r.coeff(&Word::single(cc(2, -1))), -brace(2));
    }

    #[test]
    fn commutator_is_antisymmetric() {
        let p = &gen(1, 2).multiply(&gen(2, -1)) + &gen(0, 1).scale(&brace(3));
        assert!(p.commutator(&p).is_zero());
    }

    #[test]
    fn strategies_agree_on_a_hard_word() {
        let gens = vec![cc(2, 1), cc(1, -1), cc(1, 2), cc(0, 1)];
        let l = word_normal_form(gens.clone(), RatFunc::one(), RewriteStrategy::LeftmostFirst);
        let r = word_normal_form(gens, RatFunc::one(), RewriteStrategy::RightmostFirst);
        assert_eq!(l, r);
    }

    #[test]
    fn gl2_action_on_generators() {
        let id = GL2Matrix::identity();
        let p = &gen(1, 2).multiply(&gen(2, -1)) + &gen(0, 1);
        assert_eq!(p.gl2_apply(&id), p);
        // tau = [[1,0],[0,-1]] sends D[a,b] to D[a,-b]
        let tau = GL2Matrix::new([[1, 0], [0, -1]]).unwrap();
        assert_eq!(gen(2, 3).gl2_apply(&tau), gen(2, -3));
    }

    #[test]
    fn gl2_determinant_one_is_an_algebra_map() {
        let g = GL2Matrix::new([[1, 1], [0, 1]]).unwrap();
        let p = gen(1, 0);
        let q = gen(0, 1);
        let lhs = p.multiply(&q).gl2_apply(&g);
        let rhs = p.gl2_apply(&g).multiply(&q.gl2_apply(&g));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gl2_determinant_minus_one_reverses_products() {
        let tau = GL2Matrix::new([[0, 1], [1, 0]]).unwrap();
        let p = gen(1, 0);
        let q = gen(1, 2);
        let lhs = p.multiply(&q).gl2_apply(&tau);
        let rhs = q.gl2_apply(&tau).multiply(&p.gl2_apply(&tau));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_and_json_round_trip() {
        let p = &gen(1, 0).multiply(&gen(0, 1)) + &SkeinElement::scalar(brace(2));
        let j = p.to_json();
        assert_eq!(SkeinElement::from_json(&j).unwrap(), p);
        let shown = p.to_string();
        assert!(shown.contains("D[0,1]*D[1,0]"), "got {shown}");
    }
}
