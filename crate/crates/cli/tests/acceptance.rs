//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test -p ffcalc-cli --test acceptance -- --nocapture` to
//! see them). Every comparison is exact; there are no tolerances anywhere.

use ffcalc::combinations::{enumerate_subsets, rank_value};
use ffcalc::derivative::{deriv_at, Route};
use ffcalc::harmonic::esh;
use ffcalc::poly::Poly;
use ffcalc::rational::{
    binomial, decimal_sig, factorial, falling_power_int, kronecker_delta, neg_one_pow, rat,
    rat_pow, Rat,
};
use ffcalc::stirling::stirling1_abs;
use num::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::process::{Command, Output};
use std::time::Instant;

fn criterion(number: u32, description: &str, body: impl FnOnce()) {
    let started = Instant::now();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!(
            "criterion {number}: PASS ({:.1}s) - {description}",
            started.elapsed().as_secs_f64()
        ),
        Err(panic) => {
            println!("criterion {number}: FAIL - {description}");
            resume_unwind(panic);
        }
    }
}

fn ffcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_1_four_route_agreement() {
    criterion(
        1,
        "oracle, symbolic, harmonic, and stirling routes agree on 0<=n<=12, 0<=l<=n+2, -6<=m<=18",
        || {
            let mut tuples = 0usize;
            for n in 0..=12usize {
                for l in 0..=n + 2 {
                    for m in -6..=18i64 {
                        let oracle = deriv_at(n, l, m, Route::Oracle);
                        for route in [Route::Symbolic, Route::Harmonic, Route::Stirling] {
                            assert_eq!(
                                deriv_at(n, l, m, route),
                                oracle,
                                "n={n} l={l} m={m} route={}",
                                route.name()
                            );
                        }
                        tuples += 1;
                    }
                }
            }
            assert_eq!(tuples, 2925);
        },
    );
}

/// The printed extended-values grid being reproduced, rows -5..5, columns
/// 0..5, exactly as published (including its three known misprints).
const PUBLISHED_GRID: [[&str; 6]; 11] = [
    [
        "1.39e-3", "-1.90e-2", "2.78e-2", "-3.38e-2", "3.73e-2", "-3.94e-2",
    ],
    ["8.33e-3", "-8.68e-2", "0.120", "-0.141", "0.153", "-0.160"],
    ["4.17e-2", "-0.306", "0.394", "-0.444", "0.471", "-0.485"],
    ["0.167", "-0.75", "0.875", "-0.938", "0.969", "-0.984"],
    ["0.5", "-1", "1", "-1", "1", "-1"],
    ["1", "0", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0", "0"],
    ["0", "-1", "1", "0", "0", "0"],
    ["0", "2", "-3", "1", "0", "0"],
    ["0", "-6", "11", "-6", "1", "0"],
    ["0", "24", "-50", "36", "-10", "1"],
];

/// Parses a plain or scientific decimal literal into an exact rational.
fn parse_decimal(s: &str) -> Rat {
    let (mantissa, exponent) = match s.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap()),
        None => (s, 0),
    };
    let (mantissa, frac_digits) = match mantissa.split_once('.') {
        Some((int_part, frac_part)) => (format!("{int_part}{frac_part}"), frac_part.len() as i64),
        None => (mantissa.to_string(), 0),
    };
    let digits: i64 = mantissa.parse().unwrap();
    rat(digits) * rat_pow(&rat(10), exponent - frac_digits)
}

#[test]
fn criterion_2_published_grid_and_enumeration() {
    criterion(
        2,
        "enum 5 3 lists the published 10 tuples in order; --paper-table reproduces the \
         extended grid with its three misprints corrected and footnoted",
        || {
            let out = ffcalc(&["enum", "--n", "5", "--l", "3"]);
            assert!(out.status.success());
            assert_eq!(
                String::from_utf8(out.stdout).unwrap(),
                "0,1,2\n0,1,3\n0,1,4\n0,2,3\n0,2,4\n0,3,4\n1,2,3\n1,2,4\n1,3,4\n2,3,4\n"
            );

            let out = ffcalc(&["table", "stirling1", "--paper-table"]);
            assert!(out.status.success());
            let text = String::from_utf8(out.stdout).unwrap();
            let mut cells = std::collections::HashMap::new();
            let mut notes = 0;
            for line in text.lines().skip(1) {
                if line.starts_with('#') {
                    notes += 1;
                    continue;
                }
                let fields: Vec<&str> = line.split(',').collect();
                let n: i64 = fields[0].parse().unwrap();
                let k: i64 = fields[1].parse().unwrap();
                cells.insert((n, k), (fields[2].to_string(), fields[3].to_string()));
            }
            assert_eq!(cells.len(), 66);
            assert_eq!(notes, 3, "three corrections must be footnoted");

            for (row, published_row) in PUBLISHED_GRID.iter().enumerate() {
                let n = row as i64 - 5;
                for (col, published) in published_row.iter().enumerate() {
                    let k = col as i64;
                    let (exact, decimal) = &cells[&(n, k)];
                    if n >= 0 {
                        // integer region: exact agreement, except the (5,3)
                        // cell where the expansion forces 35 over the
                        // published 36
                        if (n, k) == (5, 3) {
                            assert_eq!(exact, "35");
                            assert_eq!(*published, "36");
                        } else {
                            assert_eq!(exact, published, "({n},{k})");
                        }
                    } else if k == 0 {
                        // boundary column: 1/(-n)!, not the published
                        // column, which carries 1/(1-n)! (shifted one row)
                        assert_eq!(
                            parse_rat(exact),
                            factorial((-n) as usize).recip(),
                            "({n},0)"
                        );
                        let shifted = factorial((1 - n) as usize).recip();
                        assert_eq!(
                            parse_decimal(published),
                            parse_decimal(&decimal_sig(&shifted, 3)),
                            "shift check ({n},0)"
                        );
                    } else if (n, k) == (-4, 5) {
                        // misrounded publication: the exact value rounds to
                        // -0.159, not the published -0.160
                        assert_eq!(decimal, "-0.159");
                        assert_eq!(*published, "-0.160");
                        let v = parse_rat(exact);
                        assert!((parse_decimal(published) - &v).abs() < rat(1) / rat(1000));
                    } else {
                        // rational region: agreement at 3 significant figures
                        assert_eq!(
                            parse_decimal(decimal),
                            parse_decimal(published),
                            "({n},{k}): {decimal} vs {published}"
                        );
                    }
                }
            }
        },
    );
}

fn parse_rat(s: &str) -> Rat {
    ffcalc::rational::parse_rat(s).unwrap()
}

#[test]
fn criterion_3_identity_suite() {
    criterion(
        3,
        "verify --max-n 8 runs the >=30-identity catalog with zero failures",
        || {
            let reports = ffcalc::identities::run_all(8);
            assert!(reports.len() >= 30);
            for report in &reports {
                assert!(
                    report.is_pass(),
                    "{} failed at {:?}",
                    report.id,
                    report.first_failure
                );
            }
            let out = ffcalc(&["verify", "--max-n", "8"]);
            assert!(out.status.success(), "verify exit code");
            let text = String::from_utf8(out.stdout).unwrap();
            assert!(text.contains(", 0 failed"), "{text}");
        },
    );
}

#[test]
fn criterion_4_oracle_bridges() {
    criterion(
        4,
        "complete-sum, first-derivative, and row-sum bridges hold on their stated ranges",
        || {
            // H(n,l,0) * n! = |s(n+1, l+1)| for n <= 30
            for n in 0..=30usize {
                for l in 0..=n {
                    assert_eq!(
                        esh(n, l as i64, 0, 1) * factorial(n),
                        stirling1_abs(n as i64 + 1, l as i64 + 1),
                        "n={n} l={l}"
                    );
                }
            }
            // F'(m) = (H_m - H_(m-n)) (m falling n) for n <= 12, n+1 <= m <= 20
            for n in 0..=12usize {
                for m in (n as i64 + 1)..=20 {
                    assert_eq!(
                        deriv_at(n, 1, m, Route::Oracle),
                        (esh(m as usize, 1, 0, 1) - esh((m - n as i64) as usize, 1, 0, 1))
                            * falling_power_int(m, n),
                        "n={n} m={m}"
                    );
                }
            }
            // row sums for n, m <= 10, including both delta branches
            for n in 0..=10i64 {
                for m in 0..=10i64 {
                    let h = |l: i64| esh((n + m) as usize, l, m as usize, 1);
                    let plain: Rat = (0..=n).map(h).sum();
                    assert_eq!(plain, rat(n + m + 1) / rat(m + 1), "plain n={n} m={m}");

                    let alternating: Rat = (0..=n).map(|l| neg_one_pow(l) * h(l)).sum();
                    let expect = if m >= 1 {
                        rat(m) / rat(n + m)
                    } else {
                        kronecker_delta(n as usize)
                    };
                    assert_eq!(alternating, expect, "alternating n={n} m={m}");

                    let weighted: Rat = (0..=n).map(|l| h(l) * rat_pow(&rat(-m), l)).sum();
                    assert_eq!(
                        weighted,
                        binomial((n + m) as usize, n as usize).recip(),
                        "weighted n={n} m={m}"
                    );

                    let collapsed: Rat = (0..=n).map(|l| h(l) * rat_pow(&rat(-m - 1), l)).sum();
                    assert_eq!(
                        collapsed,
                        kronecker_delta(n as usize),
                        "collapsed n={n} m={m}"
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_5_structural_invariants() {
    criterion(
        5,
        "enumeration counts and rank monotonicity for n <= 12; 500 fixed-seed division round-trips",
        || {
            for n in 0..=12usize {
                for l in 0..=n {
                    let mut count = 0usize;
                    let mut previous = None;
                    for subset in enumerate_subsets(n, l).unwrap() {
                        let rank = rank_value(&subset);
                        if let Some(prev) = previous {
                            assert!(rank > prev, "rank not increasing at n={n} l={l}");
                        }
                        previous = Some(rank);
                        count += 1;
                    }
                    assert_eq!(rat(count as i64), binomial(n, l), "count n={n} l={l}");
                }
            }

            let mut rng = ChaCha8Rng::seed_from_u64(42);
            let mut done = 0;
            while done < 500 {
                let degree = rng.gen_range(0..=20usize);
                let coeffs: Vec<Rat> = (0..=degree)
                    .map(|_| rat(rng.gen_range(-100..=100i64)))
                    .collect();
                let p = Poly::from_coeffs(coeffs);
                if p.is_zero() {
                    continue;
                }
                let root = rat(rng.gen_range(-50..=50i64));
                let (q, rem) = p.divide_linear(&root).unwrap();
                let back = q.mul(&Poly::linear(&root)).add(&Poly::constant(rem));
                assert_eq!(back, p);
                done += 1;
            }
        },
    );
}

#[test]
fn criterion_6_golden_outputs_are_stable() {
    criterion(
        6,
        "paper-table CSV/JSON and the enumeration listing are byte-identical across runs \
         and match the committed golden files",
        || {
            let cases: [(&[&str], &str); 3] = [
                (
                    &["table", "stirling1", "--paper-table"],
                    include_str!("golden/paper_table.csv"),
                ),
                (
                    &["table", "stirling1", "--paper-table", "--format", "json"],
                    include_str!("golden/paper_table.json"),
                ),
                (
                    &["enum", "--n", "5", "--l", "3"],
                    include_str!("golden/enum_5_3.txt"),
                ),
            ];
            for (args, golden) in cases {
                let first = ffcalc(args);
                let second = ffcalc(args);
                assert!(first.status.success());
                assert_eq!(first.stdout, second.stdout, "two runs differ for {args:?}");
                assert_eq!(
                    String::from_utf8(first.stdout).unwrap(),
                    golden,
                    "golden mismatch for {args:?}"
                );
            }
        },
    );
}
