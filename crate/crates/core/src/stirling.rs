//! Stirling numbers of both kinds, extended to negative row parameters, plus
//! the A-coefficient triangle, r-Stirling numbers of the first kind, and
//! elementary/complete-homogeneous symmetric polynomial evaluation.
//!
//! First-kind numbers are stored SIGNED (Riordan convention); take absolute
//! values at call sites where a sign-less quantity is wanted.

use crate::rational::{binomial, factorial, neg_one_pow, rat, rat_pow, Rat};
use num::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// Column-0 convention used when a first-kind row index is negative.
///
/// The recurrence `s(n+1,k) = s(n,k-1) - n*s(n,k)` extends to negative rows
/// once a column-0 boundary is chosen, and the correct choice depends on the
/// direction the columns are generated in. Marching toward positive k needs
/// `s(n,0) = 1/(-n)!` for `n <= 0` and produces the negative-positive
/// numbers (rationals); the all-zero boundary `s(n,0) = [n = 0]` instead
/// produces the negative-negative family, whose nonzero values live at
/// negative columns and mirror the second kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    NegativePositive,
    NegativeNegative,
}

static S1_CACHE: Lazy<Mutex<HashMap<(i64, i64, Boundary), Rat>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Signed Stirling number of the first kind under the negative-positive
/// boundary (the convention every formula in this crate sums with).
pub fn stirling1(row: i64, col: i64) -> Rat {
    stirling1_with(row, col, Boundary::NegativePositive)
}

/// Signed Stirling number of the first kind, any row, under an explicit
/// column-0 boundary. Columns out of a family's support return 0, so sums
/// may safely run over rectangular ranges.
pub fn stirling1_with(row: i64, col: i64, boundary: Boundary) -> Rat {
    // the classic triangle is shared by both boundaries
    let boundary = if row >= 0 && col >= 0 {
        Boundary::NegativePositive
    } else {
        boundary
    };
    let key = (row, col, boundary);
    if let Some(v) = S1_CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = compute_stirling1(row, col, boundary);
    S1_CACHE.lock().unwrap().insert(key, v.clone());
    v
}

fn compute_stirling1(row: i64, col: i64, boundary: Boundary) -> Rat {
    if col < 0 {
        return match boundary {
            // positive-direction generation never reaches negative columns
            Boundary::NegativePositive => Rat::zero(),
            // march k downward: s(n,k-1) = s(n+1,k) + n*s(n,k)
            Boundary::NegativeNegative => {
                stirling1_with(row + 1, col + 1, boundary)
                    + rat(row) * stirling1_with(row, col + 1, boundary)
            }
        };
    }
    if row >= 0 {
        // classic triangle: s(n,k) = s(n-1,k-1) - (n-1)*s(n-1,k)
        if col > row {
            return Rat::zero();
        }
        if row == 0 {
            return if col == 0 { Rat::one() } else { Rat::zero() };
        }
        if col == 0 {
            return Rat::zero();
        }
        return stirling1_with(row - 1, col - 1, boundary)
            - rat(row - 1) * stirling1_with(row - 1, col, boundary);
    }
    // negative row
    match boundary {
        Boundary::NegativePositive => {
            if col == 0 {
                factorial((-row) as usize).recip()
            } else {
                // rearranged recurrence, marching in the +k direction:
                // s(n,k) = (s(n,k-1) - s(n+1,k)) / n
                (stirling1_with(row, col - 1, boundary) - stirling1_with(row + 1, col, boundary))
                    / rat(row)
            }
        }
        Boundary::NegativeNegative => Rat::zero(),
    }
}

/// Stirling number of the second kind from the finite alternating-binomial
/// sum (plus the Iverson term at the origin), which stays meaningful for
/// negative rows.
///
/// Note the sum's own value at row 0, column k >= 1 is `(-1)^(k+1)/k!`
/// rather than the classic 0; the extension to negative rows is only
/// compatible with the formula, not with the triangle recurrence, at that
/// edge.
pub fn stirling2(row: i64, col: usize) -> Rat {
    let mut acc = Rat::zero();
    for j in 1..=col {
        acc += neg_one_pow((col - j) as i64) * binomial(col, j) * rat_pow(&rat(j as i64), row);
    }
    acc /= factorial(col);
    if row == 0 && col == 0 {
        acc += Rat::one();
    }
    acc
}

static A_CACHE: Lazy<Mutex<HashMap<(usize, usize), Rat>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// A-coefficient triangle: `A(r,0) = 1`, `A(0,k) = 0` for `k >= 1`, else
/// `A(r,k) = A(r-1,k) + A(r,k-1)/r`. Column 1 holds the harmonic numbers.
pub fn a_coefficient(r: usize, k: usize) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    if r == 0 {
        return Rat::zero();
    }
    let key = (r, k);
    if let Some(v) = A_CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = a_coefficient(r - 1, k) + a_coefficient(r, k - 1) / rat(r as i64);
    A_CACHE.lock().unwrap().insert(key, v.clone());
    v
}

/// Closed form `sum_{j=1..r} (-1)^(j+1) C(r,j) / j^k`; agrees with
/// [`a_coefficient`] for `r >= 1` (at `r = 0` the empty sum misses
/// `A(0,0) = 1`).
pub fn a_coefficient_closed(r: usize, k: usize) -> Rat {
    let mut acc = Rat::zero();
    for j in 1..=r {
        acc += neg_one_pow(j as i64 + 1) * binomial(r, j) / rat_pow(&rat(j as i64), k as i64);
    }
    acc
}

/// Elementary symmetric polynomial `e_k` of the given values, by the column
/// recurrence `e_k(v.., w) = e_k(v..) + w * e_(k-1)(v..)`.
pub fn elementary_symmetric(k: usize, values: &[Rat]) -> Rat {
    if k > values.len() {
        return Rat::zero();
    }
    let mut e = vec![Rat::zero(); k + 1];
    e[0] = Rat::one();
    for v in values {
        for i in (1..=k).rev() {
            let t = &e[i - 1] * v;
            e[i] += t;
        }
    }
    e.pop().unwrap()
}

/// Complete homogeneous symmetric polynomial `h_k` (multisets allowed);
/// `h_0 = 1` even over an empty value list.
pub fn complete_homogeneous(k: usize, values: &[Rat]) -> Rat {
    let mut h = vec![Rat::zero(); k + 1];
    h[0] = Rat::one();
    for v in values {
        for i in 1..=k {
            let t = &h[i - 1] * v;
            h[i] += t;
        }
    }
    h.pop().unwrap()
}

/// Unsigned r-Stirling number of the first kind, via its symmetric-function
/// description `e_k(r, r+1, .., n)`. Out-of-range arguments fall out of the
/// empty-selection conventions as 0 (or 1 for `k = 0`).
pub fn r_stirling1(n: usize, k: usize, r: usize) -> Rat {
    let values: Vec<Rat> = (r..=n).map(|v| rat(v as i64)).collect();
    elementary_symmetric(k, &values)
}

/// `|s(row, col)|` convenience for sign-less uses.
pub fn stirling1_abs(row: i64, col: i64) -> Rat {
    num::Signed::abs(&stirling1(row, col))
}
