//! Elementary symmetric harmonic sums H(n,l,r), their power-v
//! generalization, the lookup-matrix builder, and the polynomial-in-r
//! extension.
//!
//! H(n,l,r) is the elementary symmetric polynomial e_l evaluated at the
//! reciprocals 1/(r+1), .., 1/n; H(n,1,0) is the harmonic number H_n. The
//! power-v variant evaluates at v-th-power reciprocals. Out-of-domain keys
//! (l < 0, or n - l < r) are 0 by convention rather than errors, so identity
//! sums can run over rectangular ranges.

use crate::poly::Poly;
use crate::rational::{binomial, falling_power, rat, rat_pow, Rat};
use crate::Error;
use num::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

static ESH_CACHE: Lazy<Mutex<HashMap<(usize, usize, usize, u32), Rat>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Elementary symmetric harmonic sum of power `v`:
/// `e_l(1/(r+1)^v, .., 1/n^v)`, with the zero conventions above.
pub fn esh(n: usize, l: i64, r: usize, v: u32) -> Rat {
    if l < 0 || (n as i64 - l) < r as i64 {
        return Rat::zero();
    }
    let l = l as usize;
    if l == 0 {
        return Rat::one();
    }
    let key = (n, l, r, v);
    if let Some(cached) = ESH_CACHE.lock().unwrap().get(&key) {
        return cached.clone();
    }
    // column recurrence in n: H(n,l,r) = H(n-1,l,r) + H(n-1,l-1,r)/n^v
    let value = esh(n - 1, l as i64, r, v)
        + esh(n - 1, l as i64 - 1, r, v) / rat_pow(&rat(n as i64), v as i64);
    ESH_CACHE.lock().unwrap().insert(key, value.clone());
    value
}

/// Lookup matrix of H(n,l,r) values for fixed `r` and `v`, indexed
/// `[row n][column l]`.
#[derive(Clone, Debug)]
pub struct HarmonicMatrix {
    r: usize,
    v: u32,
    grid: Vec<Vec<Rat>>,
}

impl HarmonicMatrix {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn n_max(&self) -> usize {
        self.grid.len() - 1
    }

    pub fn at(&self, n: usize, l: usize) -> &Rat {
        &self.grid[n][l]
    }
}

/// Builds the lookup matrix by the documented fill order, never calling
/// [`esh`]: ones in column l = 0 (for rows n >= r), the boundary diagonal
/// n - l = r from the closed form 1/(n falling l)^v, the interior from the
/// column recurrence, zeros in the remaining upper-right triangle.
pub fn esh_matrix(n_max: usize, r: usize, v: u32) -> HarmonicMatrix {
    let mut grid = vec![vec![Rat::zero(); n_max + 1]; n_max + 1];
    for n in r..=n_max {
        grid[n][0] = Rat::one();
    }
    for l in 0..=n_max.saturating_sub(r) {
        let n = l + r;
        grid[n][l] = rat_pow(&falling_power(&rat(n as i64), l), v as i64).recip();
    }
    for n in (r + 1)..=n_max {
        for l in 1..n - r {
            let step = &grid[n - 1][l - 1] / rat_pow(&rat(n as i64), v as i64);
            grid[n][l] = &grid[n - 1][l] + step;
        }
    }
    HarmonicMatrix { r, v, grid }
}

/// The bracketed polynomial in r behind the rational-r extension of H:
/// coefficient of `r^(l - l')` is `C(l,l') * H(n+m, l, m)` for
/// `l = l', .., n`. The rational prefactor is applied by
/// [`esh_poly_eval`].
pub fn esh_poly(n: usize, l_prime: usize, m: usize) -> Poly {
    if l_prime > n {
        return Poly::zero();
    }
    let coeffs = (l_prime..=n)
        .map(|l| binomial(l, l_prime) * esh(n + m, l as i64, m, 1))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Evaluates the rational-r extension of H(n,l',m) at `r`:
/// prefactor `(n+m) falling n / (n+m+r) falling n` times the bracketed
/// polynomial. Errors when the prefactor denominator vanishes.
pub fn esh_poly_eval(n: usize, l_prime: usize, m: usize, r: &Rat) -> Result<Rat, Error> {
    let numer = falling_power(&rat((n + m) as i64), n);
    let denom = falling_power(&(rat((n + m) as i64) + r), n);
    if denom.is_zero() {
        return Err(Error::PrefactorPole);
    }
    Ok(esh_poly(n, l_prime, m).evaluate(r) * numer / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinations::enumerate_subsets;
    use crate::rational::rat_frac;

    /// Unrolled-sum oracle: sum over strictly increasing index tuples of
    /// products of reciprocals, driven by the subset enumerator.
    fn esh_brute(n: usize, l: i64, r: usize, v: u32) -> Rat {
        if l < 0 || (n as i64 - l) < r as i64 {
            return rat(0);
        }
        let values: Vec<Rat> = (r + 1..=n)
            .map(|k| rat_pow(&rat(k as i64), v as i64).recip())
            .collect();
        let mut acc = rat(0);
        for subset in enumerate_subsets(values.len(), l as usize).unwrap() {
            let mut prod = rat(1);
            for &i in subset.members() {
                prod *= &values[i];
            }
            acc += prod;
        }
        acc
    }

    #[test]
    fn esh_examples() {
        assert_eq!(esh(3, 1, 0, 1), rat_frac(11, 6));
        assert_eq!(esh(5, 2, 3, 1), rat_frac(1, 20));
        assert_eq!(esh(3, 2, 1, 1), rat_frac(1, 6));
        assert_eq!(esh(4, -1, 2, 1), rat(0));
        assert_eq!(esh(3, 2, 2, 1), rat(0));
        assert_eq!(esh(3, 0, 3, 2), rat(1));
        assert_eq!(esh(2, 0, 3, 1), rat(0));
        assert_eq!(esh(2, 1, 1, 2), rat_frac(1, 4));
    }

    #[test]
    fn esh_matches_unrolled_sum() {
        for n in 0..=12usize {
            for l in 0..=n as i64 {
                for r in 0..=3usize {
                    for v in 1..=2u32 {
                        assert_eq!(
                            esh(n, l, r, v),
                            esh_brute(n, l, r, v),
                            "n={n} l={l} r={r} v={v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn harmonic_numbers() {
        for v in 1..=3u32 {
            let mut partial = rat(0);
            for n in 1..=20usize {
                partial += rat_pow(&rat(n as i64), v as i64).recip();
                assert_eq!(esh(n, 1, 0, v), partial, "H_{n}^({v})");
            }
        }
    }

    #[test]
    fn boundary_diagonal_is_reciprocal_falling_power() {
        for n in 0..=12usize {
            for l in 0..=n {
                for v in 1..=3u32 {
                    assert_eq!(
                        esh(n, l as i64, n - l, v),
                        rat_pow(&falling_power(&rat(n as i64), l), v as i64).recip()
                    );
                }
            }
        }
    }

    #[test]
    fn recurrences() {
        for n in 1..=12usize {
            for l in 0..=n as i64 {
                for r in 0..=4usize {
                    // the l = 0 column is pinned to 1 on n >= r and cannot
                    // telescope past its own boundary; skip that corner
                    let corner = l == 0 && n == r;
                    for v in (1..=3u32).filter(|_| !corner) {
                        // r direction
                        assert_eq!(
                            esh(n, l, r, v),
                            esh(n, l, r + 1, v)
                                + esh(n, l - 1, r + 1, v) / rat_pow(&rat(r as i64 + 1), v as i64)
                        );
                        // n direction
                        assert_eq!(
                            esh(n, l, r, v),
                            esh(n - 1, l, r, v)
                                + esh(n - 1, l - 1, r, v) / rat_pow(&rat(n as i64), v as i64)
                        );
                    }
                    // mixed, v = 1
                    assert_eq!(
                        esh(n + 1, l, r + 1, 1) - esh(n, l, r, 1),
                        (rat_frac(1, n as i64 + 1) - rat_frac(1, r as i64 + 1))
                            * esh(n, l - 1, r + 1, 1)
                    );
                }
            }
        }
    }

    #[test]
    fn matrix_row_example() {
        let m = esh_matrix(3, 0, 1);
        let row3: Vec<Rat> = (0..=3).map(|l| m.at(3, l).clone()).collect();
        assert_eq!(row3, vec![rat(1), rat_frac(11, 6), rat(1), rat_frac(1, 6)]);
    }

    #[test]
    fn matrix_matches_direct_values() {
        for r in 0..=4usize {
            for v in 1..=2u32 {
                let m = esh_matrix(12, r, v);
                for n in 0..=12usize {
                    for l in 0..=12usize {
                        assert_eq!(
                            m.at(n, l),
                            &esh(n, l as i64, r, v),
                            "r={r} v={v} n={n} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_shape_invariants() {
        let m = esh_matrix(8, 0, 1);
        for n in 0..=8usize {
            assert_eq!(m.at(n, 0), &rat(1));
            assert_eq!(m.at(n, n), &falling_power(&rat(n as i64), n).recip());
            for l in n + 1..=8 {
                assert_eq!(m.at(n, l), &rat(0));
            }
        }
    }

    #[test]
    fn poly_extension_examples() {
        // constant case: l' = n leaves the single l = n term
        let p = esh_poly(3, 3, 1);
        assert_eq!(p.coeffs(), &[esh(4, 3, 1, 1)]);

        // r = 0 collapses to the l = l' term with unit prefactor
        assert_eq!(esh_poly_eval(2, 0, 0, &rat(0)).unwrap(), rat(1));

        // natural r slides the parameters: H(2,1,1)(1) = H(4,1,2)
        assert_eq!(esh_poly_eval(2, 1, 1, &rat(1)).unwrap(), rat_frac(7, 12));
        assert_eq!(esh(4, 1, 2, 1), rat_frac(7, 12));

        assert_eq!(esh_poly_eval(2, 0, 0, &rat(-1)), Err(Error::PrefactorPole));
    }
}
