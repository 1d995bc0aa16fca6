//! Falling factorials with missing factors and their generalized first-kind
//! coefficients.
//!
//! Theta(missing; x) is the product of `(x - j)` over the universe with the
//! listed factors removed: a monic polynomial of degree `n - l`, total in x.
//! Removing the factor (rather than dividing it out) is what makes pointwise
//! evaluation safe at the removed roots. Two construction routes exist: long
//! division of the full falling factorial, and a coefficient recursion that
//! bottoms out on the classic Stirling triangle; they must agree.

use crate::combinations::MissingFactorSet;
use crate::poly::{falling_factorial_poly, Poly};
use crate::rational::{rat, Rat};
use crate::stirling::stirling1;
use num::Zero;

/// Monic polynomial of degree `n - l` obtained by removing the missing
/// factors from the order-`n` falling factorial, computed by repeated
/// synthetic division (each missing member is a root, so every remainder is
/// exactly zero).
pub fn theta_poly(missing: &MissingFactorSet) -> Poly {
    let mut p = falling_factorial_poly(missing.universe());
    for &k in missing.members() {
        let (q, rem) = p
            .divide_linear(&rat(k as i64))
            .expect("falling factorial is never the zero polynomial");
        debug_assert!(rem.is_zero(), "member {k} must be a root");
        p = q;
    }
    p
}

/// Coefficient vector of Theta by the level recursion: level 0 is the
/// Stirling row `s(n, j)`, and appending a missing member `k` maps
/// `new[j] = sum_i old[i + j + 1] * k^i`. Independent of the long-division
/// route above (its base values come from the Stirling triangle, not from a
/// polynomial expansion).
pub fn theta_coefficients(missing: &MissingFactorSet) -> Vec<Rat> {
    let n = missing.universe();
    let mut coeffs: Vec<Rat> = (0..=n).map(|j| stirling1(n as i64, j as i64)).collect();
    for &k in missing.members() {
        let k = rat(k as i64);
        let mut next = vec![Rat::zero(); coeffs.len() - 1];
        for (j, slot) in next.iter_mut().enumerate() {
            let mut power = rat(1);
            for old in &coeffs[j + 1..] {
                *slot += old * &power;
                power *= &k;
            }
        }
        coeffs = next;
    }
    coeffs
}

/// Coefficient of `x^j` in Theta, from the recursion route; 0 beyond the
/// degree `n - l`.
pub fn vartheta(missing: &MissingFactorSet, j: usize) -> Rat {
    theta_coefficients(missing)
        .get(j)
        .cloned()
        .unwrap_or_else(Rat::zero)
}

/// Theta evaluated at `x` through the polynomial route, which is total; in
/// particular it is safe at the removed factors, where dividing the full
/// falling factorial would hit 0/0.
pub fn theta_eval(missing: &MissingFactorSet, x: &Rat) -> Rat {
    theta_poly(missing).evaluate(x)
}
