//! Chebyshev-type polynomials and the logarithmic generating identity.
//!
//! Both families satisfy the three-term recurrence `P_{n+1} = x P_n - P_{n-1}`;
//! the seeds distinguish them:
//!
//! - `T`: `T_0 = 2`, `T_1 = x`, characterized by `T_n(X + X^-1) = X^n + X^-n`;
//! - `S`: `S_0 = 1`, `S_1 = x`, with `S_n(X + X^-1) = (X^(n+1) - X^-(n+1))/(X - X^-1)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coeff::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebKind {
    T,
    S,
}

/// An integer polynomial in one variable, dense in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebPoly {
    coeffs: Vec<BigInt>,
}

impl ChebPoly {
    fn trim(mut v: Vec<BigInt>) -> Self {
        while v.last().map(Zero::is_zero).unwrap_or(false) {
            v.pop();
        }
        Self { coeffs: v }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(n: i64) -> Self {
        Self::trim(vec![BigInt::from(n)])
    }

    pub fn x() -> Self {
        Self::trim(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul_x(&self) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero()];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut v = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            v[i] -= c;
        }
        Self::trim(v)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut v = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            v[i] += c;
        }
        Self::trim(v)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::trim(v)
    }

    /// Substitute `x = X + X^-1`, landing in the Laurent ring (reusing the
    /// two-variable type with the second variable unused).
    pub fn eval_symmetric(&self) -> LaurentPoly {
        let x = &LaurentPoly::s_pow(1) + &LaurentPoly::s_pow(-1);
        let mut acc = LaurentPoly::zero();
        let mut pow = LaurentPoly::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                pow = &pow * &x;
            }
            if !c.is_zero() {
                acc = &acc + &pow.scale(&BigRational::from_integer(c.clone()));
            }
        }
        acc
    }
}

impl fmt::Display for ChebPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            wrote = true;
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// The `n`-th Chebyshev polynomial of the requested kind, by the three-term
/// recurrence.
pub fn cheb(n: u32, kind: ChebKind) -> ChebPoly {
    let mut prev = match kind {
        ChebKind::T => ChebPoly::constant(2),
        ChebKind::S => ChebPoly::constant(1),
    };
    if n == 0 {
        return prev;
    }
    let mut cur = ChebPoly::x();
    for _ in 1..n {
        let next = cur.mul_x().sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Truncated power series with polynomial coefficients over Q, used to check
/// the identity `sum T_k(x)/k t^k = ln(1 + sum S_j(x) t^j)` through order `N`.
fn poly_to_rational(p: &ChebPoly) -> Vec<BigRational> {
    p.coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn qpoly_add(a: &mut Vec<BigRational>, b: &[BigRational], scale: &BigRational) {
    if a.len() < b.len() {
        a.resize(b.len(), BigRational::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i] += c * scale;
    }
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

fn qpoly_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map(Zero::is_zero).unwrap_or(false) {
        v.pop();
    }
    v
}

/// Check `sum_{k=1..N} T_k(x)/k t^k == ln(1 + sum_{j=1..N} S_j(x) t^j)`
/// through order `t^N`, with the formal expansion
/// `ln(1 + u) = sum (-1)^(m+1) u^m / m`.
pub fn cheb_log_identity_check(n: u32) -> bool {
    let n = n as usize;
    if n < 1 {
        return false;
    }
    // u has zero constant term; coefficient of t^j is S_j.
    let u: Vec<Vec<BigRational>> = (0..=n)
        .map(|j| {
            if j == 0 {
                Vec::new()
            } else {
                poly_to_rational(&cheb(j as u32, ChebKind::S))
            }
        })
        .collect();
    // Accumulate ln(1 + u) truncated at t^n.
    let mut log: Vec<Vec<BigRational>> = vec![Vec::new(); n + 1];
    // power = u^m, recomputed incrementally.
    let mut power = u.clone();
    for m in 1..=n {
        let sign = if m % 2 == 1 {
            BigRational::new(BigInt::one(), BigInt::from(m))
        } else {
            BigRational::new(-BigInt::one(), BigInt::from(m))
        };
        for (t, coeff) in power.iter().enumerate().take(n + 1) {
            qpoly_add(&mut log[t], coeff, &sign);
        }
        if m < n {
            // power = power * u, truncated.
            let mut next: Vec<Vec<BigRational>> = vec![Vec::new(); n + 1];
            for (t1, c1) in power.iter().enumerate().take(n + 1) {
                if c1.is_empty() {
                    continue;
                }
                for (t2, c2) in u.iter().enumerate().take(n + 1 - t1) {
                    if c2.is_empty() {
                        continue;
                    }
                    let prod = qpoly_mul(c1, c2);
                    qpoly_add(&mut next[t1 + t2], &prod, &BigRational::one());
                }
            }
            power = next;
        }
    }
    for (k, actual) in log.iter().enumerate().take(n + 1).skip(1) {
        let mut expect = poly_to_rational(&cheb(k as u32, ChebKind::T));
        let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
        for c in &mut expect {
            *c *= &inv_k;
        }
        if qpoly_trim(expect) != qpoly_trim(actual.clone()) {
            return false;
        }
    }
    true
}
