//! Exact scalar arithmetic: arbitrary-precision integers and rationals, plus
//! the handful of combinatorial scalar functions everything else consumes.
//!
//! All computation in this crate is exact; floating point never appears on a
//! computation path. Decimal strings are produced only at print time by
//! [`decimal_sig`].

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, always kept canonical (gcd-reduced,
/// positive denominator) by construction.
pub type Rat = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// `(-1)^e` for any signed exponent.
pub fn neg_one_pow(e: i64) -> Rat {
    if e.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// `n!` as an exact rational (integer-valued).
pub fn factorial(n: usize) -> Rat {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    Rat::from_integer(acc)
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`, matching the summation
/// convention where out-of-range terms vanish.
pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..k {
        num *= Int::from(n - i);
        den *= Int::from(i + 1);
    }
    Rat::new(num, den)
}

/// Falling power `x(x-1)...(x-n+1)`; the empty product 1 for `n = 0`.
pub fn falling_power(x: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..n {
        acc *= x - rat(i as i64);
    }
    acc
}

/// Falling power at an integer point.
pub fn falling_power_int(m: i64, n: usize) -> Rat {
    falling_power(&rat(m), n)
}

/// 1 at zero, 0 everywhere else.
pub fn kronecker_delta(n: usize) -> Rat {
    if n == 0 {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// Exact power `x^e` for a signed integer exponent. Panics on `0^e` with
/// `e < 0`.
pub fn rat_pow(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num::pow::pow(x.clone(), e as usize)
    } else {
        num::pow::pow(x.clone(), (-e) as usize).recip()
    }
}

/// Renders `v` to `sig` significant decimal digits, half rounded away from
/// zero. Values exactly representable in fewer digits drop the trailing
/// zeros (`3/4` renders as `0.75`, not `0.750`); everything else keeps all
/// `sig` digits (`415/3456` renders as `0.120`). Magnitudes below 0.1 or at
/// 10^6 and above switch to scientific notation (`1/720` is `1.39e-3`).
pub fn decimal_sig(v: &Rat, sig: u32) -> String {
    assert!(sig >= 1);
    if v.is_zero() {
        return "0".to_string();
    }
    let neg = v.is_negative();
    let a = v.abs();

    // exponent e with 10^e <= a < 10^(e+1)
    let ten = Int::from(10);
    let mut e: i64 = 0;
    if a >= Rat::one() {
        let mut p = Int::one();
        while Rat::from_integer(&p * &ten) <= a {
            p *= &ten;
            e += 1;
        }
    } else {
        let mut scaled = a.clone();
        while scaled < Rat::one() {
            scaled *= rat(10);
            e -= 1;
        }
    }

    // d = round(a * 10^(sig-1-e)), sig digits, half away from zero
    let shift = sig as i64 - 1 - e;
    let scaled = &a * rat_pow(&rat(10), shift);
    let mut d: Int = (scaled.numer() * 2 + scaled.denom()) / (scaled.denom() * 2);
    if d == ten.pow(sig) {
        d /= &ten;
        e += 1;
    }

    let rounded = Rat::new(d.clone(), Int::one()) * rat_pow(&rat(10), e - sig as i64 + 1);
    let exact = rounded == a;
    let mut digits = d.to_str_radix(10);
    if exact {
        while digits.len() > 1 && digits.ends_with('0') {
            digits.pop();
        }
    }

    let sign = if neg { "-" } else { "" };
    if e <= -2 || e >= 6 {
        let mantissa = if digits.len() == 1 {
            digits
        } else {
            format!("{}.{}", &digits[..1], &digits[1..])
        };
        format!("{sign}{mantissa}e{e}")
    } else if e < 0 {
        format!("{sign}0.{}", digits)
    } else if (e as usize) + 1 >= digits.len() {
        let zeros = "0".repeat(e as usize + 1 - digits.len());
        format!("{sign}{digits}{zeros}")
    } else {
        let (int_part, frac_part) = digits.split_at(e as usize + 1);
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Formats a rational as `p/q`, with `/q` omitted when the denominator is 1.
pub fn format_exact(v: &Rat) -> String {
    v.to_string()
}

/// Parses `p/q` (or a bare integer) back into a rational.
pub fn parse_rat(s: &str) -> Result<Rat, crate::Error> {
    s.parse::<Rat>()
        .map_err(|_| crate::Error::BadRational(s.to_string()))
}

/// Sign of an integer-valued rational as -1, 0, or 1.
pub fn signum(v: &Rat) -> i32 {
    match v.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), rat(1));
        assert_eq!(factorial(5), rat(120));
        // oracle: repeated multiplication
        let mut acc = rat(1);
        for i in 1..=12 {
            acc *= rat(i);
        }
        assert_eq!(factorial(12), acc);
        assert_eq!(factorial(12), rat(479_001_600));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 3), rat(10));
        assert_eq!(binomial(7, 0), rat(1));
        assert_eq!(binomial(12, 6), rat(924));
        assert_eq!(binomial(4, 9), rat(0));
    }

    #[test]
    fn binomial_pascal_identity() {
        // oracle: Pascal triangle built by addition only
        let mut row: Vec<Rat> = vec![rat(1)];
        for n in 1..=30usize {
            let mut next = vec![rat(1)];
            for k in 1..n {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(rat(1));
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k), v, "C({n},{k})");
            }
        }
    }

    #[test]
    fn falling_power_values() {
        assert_eq!(falling_power(&rat(3), 3), rat(6));
        assert_eq!(falling_power(&rat_frac(1, 2), 2), rat_frac(-1, 4));
        assert_eq!(falling_power(&rat(-2), 3), rat(-24));
        assert_eq!(falling_power(&rat(17), 0), rat(1));
    }

    #[test]
    fn falling_power_step() {
        for m in -10..=10i64 {
            let x = rat(m);
            for n in 0..12usize {
                assert_eq!(
                    falling_power(&x, n + 1),
                    falling_power(&x, n) * (&x - rat(n as i64))
                );
            }
        }
    }

    #[test]
    fn kronecker() {
        assert_eq!(kronecker_delta(0), rat(1));
        assert_eq!(kronecker_delta(1), rat(0));
        assert_eq!(kronecker_delta(7), rat(0));
    }

    #[test]
    fn canonical_form() {
        let v = rat_frac(6, -8);
        assert_eq!(v.numer(), &Int::from(-3));
        assert_eq!(v.denom(), &Int::from(4));
        assert_eq!(format_exact(&v), "-3/4");
    }

    #[test]
    fn exact_roundtrip() {
        for s in ["-3/4", "12", "0", "479001600", "85/216"] {
            let v = parse_rat(s).unwrap();
            assert_eq!(format_exact(&v), s);
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_sig(&rat(0), 3), "0");
        assert_eq!(decimal_sig(&rat(1), 3), "1");
        assert_eq!(decimal_sig(&rat(-50), 3), "-50");
        assert_eq!(decimal_sig(&rat(35), 3), "35");
        assert_eq!(decimal_sig(&rat_frac(-3, 4), 3), "-0.75");
        assert_eq!(decimal_sig(&rat_frac(1, 2), 3), "0.5");
        assert_eq!(decimal_sig(&rat_frac(1, 6), 3), "0.167");
        assert_eq!(decimal_sig(&rat_frac(-15, 16), 3), "-0.938");
        assert_eq!(decimal_sig(&rat_frac(31, 32), 3), "0.969");
        assert_eq!(decimal_sig(&rat_frac(1, 720), 3), "1.39e-3");
        assert_eq!(decimal_sig(&rat_frac(-137, 7200), 3), "-1.90e-2");
        assert_eq!(decimal_sig(&rat_frac(415, 3456), 3), "0.120");
        assert_eq!(decimal_sig(&rat_frac(-25, 288), 3), "-8.68e-2");
        assert_eq!(decimal_sig(&rat(479_001_600), 3), "4.79e8");
        // carry across a power of ten: 0.09996 rounds up into the fixed range
        assert_eq!(decimal_sig(&rat_frac(9996, 100_000), 3), "0.100");
    }
}
