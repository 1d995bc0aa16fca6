//! Cross-module checks through the public API: the product rule that the
//! whole missing-factor construction rests on, the reflection symmetry at
//! rational (not just integer) points, and the division route off the poles.

use ffcalc::combinations::enumerate_subsets;
use ffcalc::derivative::{deriv_at, noncentral_stirling, Route};
use ffcalc::missing_factor::{theta_eval, theta_poly};
use ffcalc::poly::falling_factorial_poly;
use ffcalc::rational::{factorial, falling_power, neg_one_pow, rat, rat_frac, Rat};
use ffcalc::MissingFactorSet;
use proptest::prelude::*;

#[test]
fn differentiation_removes_one_factor_at_a_time() {
    // d/dx Theta(S; x) = sum over k outside S of Theta(S + {k}; x)
    for n in 0..=9usize {
        for l in 0..=n {
            for missing in enumerate_subsets(n, l).unwrap() {
                let mut sum = ffcalc::Poly::zero();
                for k in (0..n).filter(|&k| !missing.contains(k)) {
                    let mut members = missing.members().to_vec();
                    members.push(k);
                    members.sort();
                    let grown = MissingFactorSet::new(n, members).unwrap();
                    sum = sum.add(&theta_poly(&grown));
                }
                assert_eq!(
                    theta_poly(&missing).differentiate(1),
                    sum,
                    "n={n} missing={:?}",
                    missing.members()
                );
            }
        }
    }
}

#[test]
fn noncentral_values_divide_the_derivative() {
    for n in 0..=8usize {
        for l in 0..=n + 1 {
            for m in -4..=10i64 {
                assert_eq!(
                    noncentral_stirling(n, l, m) * factorial(l),
                    deriv_at(n, l, m, Route::Oracle)
                );
            }
        }
    }
}

fn arb_rational() -> impl Strategy<Value = Rat> {
    (-60i64..=60, 1i64..=12).prop_map(|(p, q)| rat_frac(p, q))
}

proptest! {
    // the reflection x -> n-1-x flips the falling factorial by (-1)^n at
    // every rational point, not just the integer grid
    #[test]
    fn reflection_holds_at_rational_points(n in 0usize..=10, x in arb_rational()) {
        let p = falling_factorial_poly(n);
        let reflected = rat(n as i64 - 1) - &x;
        prop_assert_eq!(p.evaluate(&x), neg_one_pow(n as i64) * p.evaluate(&reflected));
    }

    // off the removed factors, evaluating Theta agrees with dividing the
    // factors out of the full falling power
    #[test]
    fn division_route_agrees_at_rational_points(
        n in 1usize..=9,
        mask in 0u32..512,
        x in arb_rational(),
    ) {
        let members: Vec<usize> = (0..n).filter(|&k| mask >> k & 1 == 1).collect();
        let missing = MissingFactorSet::new(n, members).unwrap();
        prop_assume!(missing.members().iter().all(|&k| x != rat(k as i64)));
        let mut divided = falling_power(&x, n);
        for &k in missing.members() {
            divided /= &x - rat(k as i64);
        }
        prop_assert_eq!(theta_eval(&missing, &x), divided);
    }

    // the symbolic polynomial evaluates identically to the oracle at
    // rational points too
    #[test]
    fn symbolic_route_matches_oracle_at_rational_points(
        n in 0usize..=9,
        l in 0usize..=10,
        x in arb_rational(),
    ) {
        prop_assert_eq!(
            ffcalc::derivative::deriv_poly_symbolic(n, l).evaluate(&x),
            falling_factorial_poly(n).differentiate(l).evaluate(&x)
        );
    }
}
