//! Curve classes on the torus and the GL2(Z) symmetry.

use std::fmt;

use num_integer::Integer;

use super::TorusError;

/// A nonzero vector in Z^2 modulo `x ~ -x`, stored as the canonical
/// representative with `a > 0`, or `a = 0 && b > 0`.
///
/// The total order (lex on `(a, b)`) fixes the word basis of the torus
/// algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveClass {
    a: i64,
    b: i64,
}

impl CurveClass {
    /// Canonicalize `(a, b)`; the zero vector is rejected.
    pub fn new(a: i64, b: i64) -> Result<Self, TorusError> {
        if a == 0 && b == 0 {
            return Err(TorusError::ZeroVector);
        }
        if a > 0 || (a == 0 && b > 0) {
            Ok(Self { a, b })
        } else {
            Ok(Self { a: -a, b: -b })
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn pair(&self) -> (i64, i64) {
        (self.a, self.b)
    }

    /// `d(x) = gcd(a, b) > 0`.
    pub fn gcd(&self) -> i64 {
        self.a.gcd(&self.b)
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// `d(x, y) = det[x y]` on raw integer pairs, computed in 128 bits so large
/// coordinates fail loudly instead of wrapping.
pub fn det_pair(x: (i64, i64), y: (i64, i64)) -> i64 {
    let d = x.0 as i128 * y.1 as i128 - x.1 as i128 * y.0 as i128;
    i64::try_from(d).expect("determinant exceeds i64")
}

/// `d(x, y)` on canonical representatives.
pub fn det(x: &CurveClass, y: &CurveClass) -> i64 {
    det_pair(x.pair(), y.pair())
}

pub(crate) fn add_pair(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 + y.0, x.1 + y.1)
}

pub(crate) fn sub_pair(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 - y.0, x.1 - y.1)
}

pub(crate) fn gcd_pair(x: (i64, i64)) -> i64 {
    x.0.gcd(&x.1)
}

/// An element of GL2(Z): a 2x2 integer matrix with determinant +1 or -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GL2Matrix {
    e: [[i64; 2]; 2],
}

impl GL2Matrix {
    pub fn new(e: [[i64; 2]; 2]) -> Result<Self, TorusError> {
        let d = e[0][0] as i128 * e[1][1] as i128 - e[0][1] as i128 * e[1][0] as i128;
        if d != 1 && d != -1 {
            let clamped = d.clamp(i64::MIN as i128, i64::MAX as i128) as i64;
            return Err(TorusError::NotUnimodular(clamped));
        }
        Ok(Self { e })
    }

    pub fn identity() -> Self {
        Self {
            e: [[1, 0], [0, 1]],
        }
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        self.e
    }

    pub fn det(&self) -> i64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    /// Matrix-vector product on a column vector.
    pub fn apply(&self, x: (i64, i64)) -> (i64, i64) {
        let dot = |r: [i64; 2]| {
            let v = r[0] as i128 * x.0 as i128 + r[1] as i128 * x.1 as i128;
            i64::try_from(v).expect("matrix application exceeds i64")
        };
        (dot(self.e[0]), dot(self.e[1]))
    }

    /// `self * rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Self {
        let a = self.e;
        let b = rhs.e;
        let mul = |i: usize, j: usize| {
            let v = a[i][0] as i128 * b[0][j] as i128 + a[i][1] as i128 * b[1][j] as i128;
            i64::try_from(v).expect("matrix product exceeds i64")
        };
        Self {
            e: [[mul(0, 0), mul(0, 1)], [mul(1, 0), mul(1, 1)]],
        }
    }
}

impl fmt::Display for GL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}
