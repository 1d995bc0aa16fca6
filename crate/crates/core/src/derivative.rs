//! Higher derivatives of the falling factorial at integer points, by four
//! independent routes that must agree exactly:
//!
//! * `Oracle` — expand the falling factorial and differentiate formally,
//!   one derivative at a time;
//! * `Symbolic` — l! times the sum of all order-n falling factorials with
//!   l missing factors, assembled over the lexicographic enumeration;
//! * `Harmonic` — closed forms in elementary symmetric harmonic sums, with
//!   the reflection around (n-1)/2 covering the points the direct forms
//!   cannot reach;
//! * `Stirling` — the single-line weighted product of two first-kind rows,
//!   using negative-parameter values where the row index goes negative.

use crate::combinations::enumerate_subsets;
use crate::harmonic::esh;
use crate::poly::{falling_factorial_poly, Poly};
use crate::rational::{binomial, factorial, falling_power_int, neg_one_pow, rat, rat_pow, Rat};
use crate::stirling::{r_stirling1, stirling1};
use crate::Error;
use num::Zero;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// Evaluation strategy for [`deriv_at`]. `Stirling` is the default route:
/// it is a single total formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Oracle,
    Symbolic,
    Harmonic,
    Stirling,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::Oracle,
        Route::Symbolic,
        Route::Harmonic,
        Route::Stirling,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Route::Oracle => "oracle",
            Route::Symbolic => "symbolic",
            Route::Harmonic => "harmonic",
            Route::Stirling => "stirling",
        }
    }
}

/// The l-th derivative of the order-n falling factorial as a polynomial,
/// by formal differentiation of the expansion.
pub fn deriv_poly_oracle(n: usize, l: usize) -> Poly {
    falling_factorial_poly(n).differentiate(l)
}

static SYMBOLIC_CACHE: Lazy<Mutex<HashMap<(usize, usize), Poly>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The same polynomial assembled as `l! * sum of Theta(missing; x)` over
/// every l-subset of missing factors; the zero polynomial when `n < l`.
pub fn deriv_poly_symbolic(n: usize, l: usize) -> Poly {
    if n < l {
        return Poly::zero();
    }
    let key = (n, l);
    if let Some(p) = SYMBOLIC_CACHE.lock().unwrap().get(&key) {
        return p.clone();
    }
    let mut sum = Poly::zero();
    for missing in enumerate_subsets(n, l).expect("l <= n checked") {
        sum = sum.add(&crate::missing_factor::theta_poly(&missing));
    }
    let p = sum.scale(&factorial(l));
    SYMBOLIC_CACHE.lock().unwrap().insert(key, p.clone());
    p
}

/// Harmonic closed form for points `m >= n`: `l! * (m falling n) * H(m,l,m-n)`.
fn harmonic_high(n: usize, l: usize, m: i64) -> Rat {
    debug_assert!(m >= n as i64);
    factorial(l) * falling_power_int(m, n) * esh(m as usize, l as i64, (m - n as i64) as usize, 1)
}

/// Harmonic closed form for the upper-middle points `(n-1)/2 <= m < n`,
/// where the paired factors cancel and only the squared-reciprocal terms
/// survive.
fn harmonic_middle(n: usize, l: usize, m: i64) -> Rat {
    debug_assert!(0 <= m && (m as usize) < n && 2 * m as usize >= n - 1);
    let m = m as usize;
    let gap = n - m - 1;
    let mut sum = Rat::zero();
    let mut k = 0usize;
    while 2 * k + 1 <= l {
        sum += neg_one_pow(k as i64)
            * esh(gap, k as i64, 0, 2)
            * esh(m, (l - 2 * k - 1) as i64, gap, 1);
        k += 1;
    }
    neg_one_pow(gap as i64) * factorial(l) * factorial(m) * factorial(gap) * sum
}

fn deriv_harmonic(n: usize, l: usize, m: i64) -> Rat {
    if m >= n as i64 {
        harmonic_high(n, l, m)
    } else if m >= 0 && 2 * m >= n as i64 - 1 {
        harmonic_middle(n, l, m)
    } else {
        // reflect around (n-1)/2 into one of the regions above
        neg_one_pow(n as i64 - l as i64) * deriv_harmonic(n, l, n as i64 - m - 1)
    }
}

/// Single-line Stirling form, total in m:
/// `l! * sum_k (-1)^(m+k+1) s(n-m, l-k+1) s(m+1, k)`.
fn deriv_stirling(n: usize, l: usize, m: i64) -> Rat {
    let mut sum = Rat::zero();
    for k in 0..=(l as i64 + 1) {
        sum += neg_one_pow(m + k + 1)
            * stirling1(n as i64 - m, l as i64 - k + 1)
            * stirling1(m + 1, k);
    }
    factorial(l) * sum
}

/// The reflected twin of the Stirling form:
/// `l! * sum_k (-1)^(m+l+k) s(m+1, l-k+1) s(n-m, k)`.
pub fn deriv_stirling_alt(n: usize, l: usize, m: i64) -> Rat {
    let mut sum = Rat::zero();
    for k in 0..=(l as i64 + 1) {
        sum += neg_one_pow(m + l as i64 + k)
            * stirling1(m + 1, l as i64 - k + 1)
            * stirling1(n as i64 - m, k);
    }
    factorial(l) * sum
}

/// Exact value of the l-th derivative of the order-n falling factorial at
/// the integer point m, by the requested route. The reflection
/// `F(m) = (-1)^(n-l) F(n-m-1)` ties the routes' regions together; over-
/// differentiation (`l > n`) gives 0 on every route.
pub fn deriv_at(n: usize, l: usize, m: i64, route: Route) -> Rat {
    match route {
        Route::Oracle => deriv_poly_oracle(n, l).evaluate(&rat(m)),
        Route::Symbolic => deriv_poly_symbolic(n, l).evaluate(&rat(m)),
        Route::Harmonic => deriv_harmonic(n, l, m),
        Route::Stirling => deriv_stirling(n, l, m),
    }
}

/// Default-route value (Stirling form).
pub fn deriv_at_default(n: usize, l: usize, m: i64) -> Rat {
    deriv_at(n, l, m, Route::Stirling)
}

/// Non-central Stirling number: the l-th derivative at m divided by l!.
pub fn noncentral_stirling(n: usize, l: usize, m: i64) -> Rat {
    deriv_at_default(n, l, m) / factorial(l)
}

/// r-Stirling form `l! * e_(n-l)(m-n+1, .., m)`, valid for `m >= n`.
pub fn r_stirling_form(n: usize, l: usize, m: i64) -> Result<Rat, Error> {
    if m < n as i64 {
        return Err(Error::RequiresLargePoint { n, m });
    }
    if l > n {
        return Ok(Rat::zero());
    }
    let r = (m - n as i64 + 1) as usize;
    Ok(factorial(l) * r_stirling1(m as usize, n - l, r))
}

/// Translates derivative data at `m` to the point `m_prime` through the
/// Taylor expansion:
/// `l'! * sum_(l >= l') C(l,l') F^(l)(m) (m'-m)^(l-l') / l!`,
/// which must equal the l'-th derivative at `m_prime`.
pub fn taylor_translate(n: usize, l_prime: usize, m: i64, m_prime: i64) -> Rat {
    let mut sum = Rat::zero();
    for l in l_prime..=n.max(l_prime) {
        sum += binomial(l, l_prime) * deriv_at_default(n, l, m) / factorial(l)
            * rat_pow(&rat(m_prime - m), (l - l_prime) as i64);
    }
    factorial(l_prime) * sum
}
