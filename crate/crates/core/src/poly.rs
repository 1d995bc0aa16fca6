//! Dense univariate polynomials over [`Rat`].
//!
//! This is the brute-force oracle substrate: falling factorials are expanded
//! by explicit multiplication, higher derivatives are taken one formal
//! derivative at a time, and factors are removed by synthetic division. None
//! of it shares algebra with the closed forms elsewhere in the crate, which
//! is the point.

use crate::rational::{rat, Rat};
use crate::Error;
use num::{One, Zero};
use once_cell::sync::Lazy;
use std::sync::Mutex;

/// Dense polynomial; `coeffs[j]` is the coefficient of `x^j`. Canonical:
/// the vector is empty for the zero polynomial and otherwise ends in a
/// nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `x - root`.
    pub fn linear(root: &Rat) -> Self {
        Poly::from_coeffs(vec![-root.clone(), Rat::one()])
    }

    /// Builds from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Integer coefficients, ascending degree. Test and table convenience.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial, which has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^j`, zero beyond the stored length.
    pub fn coeff(&self, j: usize) -> Rat {
        self.coeffs.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| self.coeff(j) + other.coeff(j)).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    fn derivative_once(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * rat(j as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// The `l`-th formal derivative, computed as `l` successive first
    /// derivatives rather than a factorial-ratio shortcut.
    pub fn differentiate(&self, l: usize) -> Poly {
        let mut p = self.clone();
        for _ in 0..l {
            p = p.derivative_once();
        }
        p
    }

    /// Horner evaluation at `x`.
    pub fn evaluate(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Synthetic division by the monic linear factor `x - root`:
    /// `self = quotient * (x - root) + remainder`, exactly.
    pub fn divide_linear(&self, root: &Rat) -> Result<(Poly, Rat), Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        let n = self.coeffs.len();
        let mut quotient = vec![Rat::zero(); n - 1];
        let mut carry = Rat::zero();
        for j in (0..n).rev() {
            let b = &self.coeffs[j] + &carry;
            if j == 0 {
                return Ok((Poly::from_coeffs(quotient), b));
            }
            carry = &b * root;
            quotient[j - 1] = b;
        }
        unreachable!()
    }
}

static FALLING_FACTORIALS: Lazy<Mutex<Vec<Poly>>> = Lazy::new(|| Mutex::new(vec![Poly::one()]));

/// The monic degree-`n` polynomial `x(x-1)...(x-n+1)`; the constant 1 for
/// `n = 0`. Cached, since every oracle path starts here.
pub fn falling_factorial_poly(n: usize) -> Poly {
    let mut cache = FALLING_FACTORIALS.lock().unwrap();
    while cache.len() <= n {
        let last = cache.last().unwrap();
        let next = last.mul(&Poly::linear(&rat(cache.len() as i64 - 1)));
        cache.push(next);
    }
    cache[n].clone()
}
