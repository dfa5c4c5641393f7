//! One test per acceptance criterion. Each prints a `[PASS]` or `[FAIL]`
//! line; run with `-- --nocapture --test-threads=1` to see them in order.
//!
//! All randomness is seeded, all comparisons are exact rational equality
//! unless a tolerance is stated, and time limits are pinned below.

mod common;

use std::cmp::Ordering;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use hahnfield::explog::{
    base_log, exp_small, full_exp, full_log, in_left_log_image, left_log_h, log1p, witness_not_in_image, CrossSection,
    LogMode, LogValue,
};
use hahnfield::hahnseries::{
    flatten, minus_w, nested_cmp, regroup, s_add, s_cmp, s_invert, s_mul, s_neg, s_sub, s_val, Cutoff, Series,
};
use hahnfield::lexprod::{builtin_oracle, lex_cmp, refute_convexity_traced, Witness};
use hahnfield::ordgroup::{group_add, ConvexLevel, GroupElement};
use hahnfield::{cli, Error, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use common::*;

const LIMIT_FIELD: Duration = Duration::from_secs(10);
const LIMIT_MINUS_W: Duration = Duration::from_secs(5);
const LIMIT_WITNESS: Duration = Duration::from_secs(5);
const LIMIT_REFUTER: Duration = Duration::from_secs(2);
/// Dyadic precision and tolerance `2^-PRECISION` for the constant logarithm.
const PRECISION: u32 = 20;

fn report(n: u32, title: &str, check: impl FnOnce() -> String) {
    match catch_unwind(AssertUnwindSafe(check)) {
        Ok(detail) => println!("[PASS] criterion {n}: {title} ({detail})"),
        Err(e) => {
            println!("[FAIL] criterion {n}: {title}");
            resume_unwind(e);
        }
    }
}

fn within(limit: Duration, start: Instant) -> String {
    let elapsed = start.elapsed();
    assert!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
    format!("{:.2}s < {}s", elapsed.as_secs_f64(), limit.as_secs())
}

fn one_below(rank: usize, k: &GroupElement) -> Series {
    Series::one(rank).truncate(&Cutoff::Finite(k.clone())).unwrap()
}

fn e_r(rank: usize) -> GroupElement {
    GroupElement::unit(rank, rank)
}

#[test]
fn criterion_1_field_and_valuation() {
    report(1, "field axioms, valuation, inverse to 10 terms on 500 series", || {
        let start = Instant::now();
        let mut rng = rng(1);
        for _ in 0..500 {
            let rank = rng.gen_range(1..=3);
            let a = series(&mut rng, rank, 0, 6);
            let b = series(&mut rng, rank, 0, 6);
            let c = series(&mut rng, rank, 0, 6);
            let (zero, one) = (Series::zero(rank), Series::one(rank));
            let add = |x: &Series, y: &Series| s_add(x, y).unwrap();
            let mul = |x: &Series, y: &Series| s_mul(x, y).unwrap();

            assert_eq!(add(&a, &b), add(&b, &a));
            assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
            assert_eq!(add(&a, &zero), a);
            assert!(add(&a, &s_neg(&a)).is_exact_zero());
            assert_eq!(mul(&a, &b), mul(&b, &a));
            assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
            assert_eq!(mul(&a, &one), a);
            assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));

            if !a.is_exact_zero() && !b.is_exact_zero() {
                let (wa, wb) = (s_val(&a).unwrap(), s_val(&b).unwrap());
                assert_eq!(s_val(&mul(&a, &b)).unwrap(), group_add(&wa, &wb).unwrap());
                let sum = add(&a, &b);
                if !sum.is_exact_zero() {
                    assert!(s_val(&sum).unwrap() >= wa.clone().min(wb));
                }
            }

            if a.is_exact_zero() {
                assert_eq!(s_invert(&a, &Cutoff::Infinity), Err(Error::ZeroDivision));
                continue;
            }
            // a = c t^g (1 + eps); the inverse is taken to depth 10 w(eps)
            let (g, lc) = a.lead().map(|(g, c)| (g.clone(), c.clone())).unwrap();
            let eps = s_sub(&a.scale(&lc.recip()).shift(&-&g).unwrap(), &one).unwrap();
            if eps.is_exact_zero() {
                assert!(mul(&a, &s_invert(&a, &Cutoff::Infinity).unwrap()) == one);
                continue;
            }
            let depth = s_val(&eps).unwrap().scale(&Rational::from_integer(10.into()));
            let inv = s_invert(&a, &Cutoff::Finite(&depth - &g)).unwrap();
            assert_eq!(mul(&a, &inv), one_below(rank, &depth));
        }
        within(LIMIT_FIELD, start)
    });
}

#[test]
fn criterion_2_minus_w() {
    report(2, "-w(a) = w(a^-1), homomorphism and monotonicity on 200 positive series", || {
        let start = Instant::now();
        let mut rng = rng(2);
        for _ in 0..200 {
            let rank = rng.gen_range(1..=3);
            let a = positive_series(&mut rng, rank, 6);
            let b = positive_series(&mut rng, rank, 6);
            let ma = minus_w(&a).unwrap();
            let inv = s_invert(&a, &Cutoff::Finite(&ma + &e_r(rank))).unwrap();
            assert_eq!(ma, s_val(&inv).unwrap());
            let mb = minus_w(&b).unwrap();
            assert_eq!(minus_w(&s_mul(&a, &b).unwrap()).unwrap(), &ma + &mb);
            match s_cmp(&a, &b).unwrap() {
                Ordering::Less | Ordering::Equal => assert!(ma <= mb),
                Ordering::Greater => assert!(ma >= mb),
            }
            // a and a + (a smaller positive element) share a value
            let bumped = s_add(&a, &Series::monomial(Rational::one(), &s_val(&a).unwrap() + &e_r(rank))).unwrap();
            assert_eq!(minus_w(&bumped).unwrap(), ma);
        }
        within(LIMIT_MINUS_W, start)
    });
}

fn random_cross_section(rng: &mut rand_chacha::ChaCha8Rng, rank: usize) -> CrossSection {
    let reps = (1..=rank)
        .map(|i| {
            let mut coords = vec![Rational::zero(); rank];
            coords[i - 1] =
                -Rational::new(BigInt::from(rng.gen_range(1i64..=4)), BigInt::from(rng.gen_range(1i64..=3)));
            for c in coords.iter_mut().skip(i) {
                *c = small_rational(rng);
            }
            GroupElement::new(coords)
        })
        .collect();
    let scales = (0..rank)
        .map(|_| Rational::new(BigInt::from(rng.gen_range(1i64..=9)), BigInt::from(rng.gen_range(1i64..=9))))
        .collect();
    CrossSection::new(reps, scales).unwrap()
}

#[test]
fn criterion_3_cross_section() {
    report(3, "h additive, strictly increasing, w(h(g)) < 0 on 500 elements per rank", || {
        let mut rng = rng(3);
        let mut checked = 0;
        for rank in 1..=3 {
            let sections = [CrossSection::standard(rank), random_cross_section(&mut rng, rank)];
            for cs in &sections {
                assert!(left_log_h(cs, &GroupElement::zero(rank)).unwrap().is_exact_zero());
                for _ in 0..500 {
                    let g = exponent(&mut rng, rank);
                    let g2 = exponent(&mut rng, rank);
                    let (hg, hg2) = (left_log_h(cs, &g).unwrap(), left_log_h(cs, &g2).unwrap());
                    assert_eq!(left_log_h(cs, &(&g + &g2)).unwrap(), s_add(&hg, &hg2).unwrap());
                    assert_eq!(s_cmp(&hg, &hg2).unwrap(), g.cmp(&g2));
                    if !g.is_zero() {
                        assert!(s_val(&hg).unwrap().is_negative());
                    }
                    checked += 1;
                }
            }
        }
        format!("{checked} elements, standard and random sections")
    });
}

#[test]
fn criterion_4_log_exp_round_trip() {
    report(4, "log1p and exp_small invert each other mod t^(8 w(eps)); log is a morphism", || {
        let mut rng = rng(4);
        for _ in 0..100 {
            let rank = rng.gen_range(1..=3);
            let eps = infinitesimal(&mut rng, rank, 3);
            let depth = Cutoff::Finite(s_val(&eps).unwrap().scale(&Rational::from_integer(8.into())));
            let one = Series::one(rank);

            let e = s_sub(&exp_small(&eps, &depth).unwrap(), &one).unwrap();
            let back = log1p(&e, &depth).unwrap();
            assert_eq!(back.cutoff(), &depth);
            assert!(s_sub(&back, &eps).unwrap().is_empty());

            let l = log1p(&eps, &depth).unwrap();
            let back = s_sub(&exp_small(&l, &depth).unwrap(), &one).unwrap();
            assert_eq!(back.cutoff(), &depth);
            assert!(s_sub(&back, &eps).unwrap().is_empty());
        }
        for _ in 0..100 {
            let rank = rng.gen_range(1..=3);
            let cs = CrossSection::standard(rank);
            let target = Cutoff::Finite(e_r(rank).scale(&Rational::from_integer(8.into())));
            let lead_one = |rng: &mut rand_chacha::ChaCha8Rng| {
                let tail = s_add(&Series::one(rank), &infinitesimal(rng, rank, 3)).unwrap();
                s_mul(&Series::monomial(Rational::one(), exponent(rng, rank)), &tail).unwrap()
            };
            let (a, b) = (lead_one(&mut rng), lead_one(&mut rng));
            let lab = full_log(&cs, &s_mul(&a, &b).unwrap(), &target, LogMode::Symbolic).unwrap();
            let sum = full_log(&cs, &a, &target, LogMode::Symbolic)
                .unwrap()
                .combine(&full_log(&cs, &b, &target, LogMode::Symbolic).unwrap())
                .unwrap();
            assert_eq!(lab.infinite_part, sum.infinite_part);
            assert_eq!((&lab.const_part, &sum.const_part), (&LogValue::ExactZero, &LogValue::ExactZero));
            assert_eq!(lab.small_part.cutoff(), &target);
            assert!(s_sub(&lab.small_part, &sum.small_part).unwrap().is_empty());
        }
        "100 infinitesimals, 100 products".into()
    });
}

#[test]
fn criterion_5_non_surjectivity() {
    report(5, "the witness is outside the image of log", || {
        let start = Instant::now();
        let mut witnesses = Vec::new();
        for rank in 1..=3 {
            let cs = CrossSection::standard(rank);
            let w = witness_not_in_image(&cs);
            assert!(!in_left_log_image(&cs, &w).unwrap());
            let target = cli::SessionConfig::standard_cutoff(rank);
            assert_eq!(full_exp(&cs, &w, &target), Err(Error::NotInLogDomain));
            let mut cfg = cli::SessionConfig::new(rank);
            cfg.default_cutoff = target;
            let out = cli::run_command(&cli::Command::Exp(w.to_string()), &cfg);
            assert_eq!(out.status, 1);
            assert!(out.text.contains("not in log domain"), "{}", out.text);
            witnesses.push(w);
        }
        let mut rng = rng(5);
        for _ in 0..1000 {
            let rank = rng.gen_range(1..=3);
            let cs = CrossSection::standard(rank);
            let a = positive_series(&mut rng, rank, 3);
            let log = full_log(&cs, &a, &cli::SessionConfig::standard_cutoff(rank), LogMode::Symbolic).unwrap();
            assert_ne!(log.infinite_part, witnesses[rank - 1]);
            assert!(in_left_log_image(&cs, &log.infinite_part).unwrap());
        }
        within(LIMIT_WITNESS, start)
    });
}

#[test]
fn criterion_6_refuter() {
    report(6, "gaps for honest oracles within 5 queries, exact chains for the liar", || {
        let start = Instant::now();
        for name in ["shifted-singleton", "moving-support", "stutter"] {
            let mut oracle = builtin_oracle(name, None).unwrap();
            let (witness, records) = refute_convexity_traced(oracle.as_mut(), 10).unwrap();
            assert!(!records.is_empty() && records.len() <= 5, "{name}: {} queries", records.len());
            for r in &records {
                assert!(r.monotone && r.sandwiched, "{name}: {r:?}");
                assert_eq!(lex_cmp(&r.lower, &r.middle), Ordering::Less);
                assert_eq!(lex_cmp(&r.middle, &r.upper), Ordering::Less);
                if r.stage > 1 {
                    assert!(r.set.len() > 1);
                    assert_eq!(lex_cmp(&r.previous, &r.middle), Ordering::Less);
                }
            }
            let Witness::NotConvex { lower, middle, upper, lower_pre, upper_pre } = &witness else {
                panic!("{name}: no gap found");
            };
            assert_eq!(lex_cmp(lower, middle), Ordering::Less);
            assert_eq!(lex_cmp(middle, upper), Ordering::Less);
            // re-check against a fresh oracle
            let mut fresh = builtin_oracle(name, None).unwrap();
            assert_eq!(&fresh.forward(*lower_pre), lower);
            assert_eq!(&fresh.forward(*upper_pre), upper);
            assert_eq!(fresh.inverse(middle), None);
            assert!(witness.verify(fresh.as_mut()));
        }
        for max_steps in [1, 2, 5, 10] {
            let mut liar = builtin_oracle("liar", None).unwrap();
            let (witness, records) = refute_convexity_traced(liar.as_mut(), max_steps).unwrap();
            let Witness::ChainExhausted { chain, steps } = &witness else {
                panic!("the liar produced a gap");
            };
            assert_eq!(chain.len(), max_steps);
            assert!(chain.windows(2).all(|w| lex_cmp(&w[0], &w[1]) == Ordering::Less));
            assert_eq!(*steps, records.len());
            assert!(records.iter().all(|r| r.monotone && r.sandwiched));
        }
        within(LIMIT_REFUTER, start)
    });
}

#[test]
fn criterion_7_regroup() {
    report(7, "flatten . regroup = id and order preservation, every split level", || {
        let mut rng = rng(7);
        let mut pairs = 0;
        for rank in [2, 3] {
            for _ in 0..300 {
                let a = series(&mut rng, rank, 0, 6);
                let a = maybe_truncated(&mut rng, a);
                let b = series(&mut rng, rank, 0, 6);
                // share a prefix half the time so inner series decide
                let b = if rng.gen_bool(0.5) { s_add(&b, &a).unwrap() } else { b };
                for j in 1..rank {
                    let (na, nb) = (regroup(&a, ConvexLevel(j)).unwrap(), regroup(&b, ConvexLevel(j)).unwrap());
                    assert_eq!(flatten(&na), a);
                    assert_eq!(flatten(&nb), b);
                    assert_eq!(nested_cmp(&na, &nb), s_cmp(&a, &b), "{a} vs {b} at level {j}");
                    pairs += 1;
                }
            }
        }
        format!("{pairs} regroupings")
    });
}

/// `exp(x)` for rational `x >= 0` enclosed by `terms` Taylor terms and the
/// ratio bound on the tail (valid while `x < terms + 1`).
fn exp_enclosure(x: &Rational, terms: u32) -> (Rational, Rational) {
    let (mut sum, mut term) = (Rational::zero(), Rational::one());
    for k in 0..terms {
        sum += &term;
        term = term * x / Rational::from_integer((k + 1).into());
    }
    let ratio = x / Rational::from_integer((terms + 1).into());
    assert!(ratio < Rational::one());
    let tail = &term / (Rational::one() - ratio);
    (sum.clone(), sum + tail)
}

/// Sign of `exp(x) - c`, refining the enclosure until it decides. Never
/// loops for `x != 0` since `e^x` is irrational there.
fn exp_vs(x: &Rational, c: &Rational) -> Ordering {
    let mut terms = 40;
    loop {
        let (lo, hi) = exp_enclosure(&x.abs(), terms);
        // exp(-y) = 1/exp(y) reverses the enclosure
        let (lo, hi) = if x.is_negative() { (hi.recip(), lo.recip()) } else { (lo, hi) };
        if &hi < c {
            return Ordering::Less;
        }
        if &lo > c {
            return Ordering::Greater;
        }
        terms *= 2;
    }
}

/// Bisection on `exp` for `ln c`: an interval of width `2^-bits` that
/// provably contains it.
fn ln_oracle(c: &Rational, bits: u32) -> (Rational, Rational) {
    let (mut lo, mut hi) = (Rational::from_integer((-4).into()), Rational::from_integer(4.into()));
    assert_eq!(exp_vs(&lo, c), Ordering::Less);
    assert_eq!(exp_vs(&hi, c), Ordering::Greater);
    let width = Rational::new(BigInt::one(), BigInt::one() << bits);
    while &hi - &lo > width {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        match exp_vs(&mid, c) {
            Ordering::Less => lo = mid,
            _ => hi = mid,
        }
    }
    (lo, hi)
}

fn decimal(s: &str) -> Rational {
    let (neg, s) = s.strip_prefix('-').map_or((false, s), |r| (true, r));
    let (int, frac) = s.split_once('.').unwrap();
    let q = Rational::new(format!("{int}{frac}").parse().unwrap(), BigInt::from(10u32).pow(frac.len() as u32));
    if neg {
        -q
    } else {
        q
    }
}

#[test]
fn criterion_8_dyadic_log() {
    report(8, "dyadic ln c within 2^-20 of an independent oracle", || {
        // published 40-digit values, as a cross-check on the bisection oracle
        let published = [
            ((2, 1), "0.6931471805599453094172321214581765680755"),
            ((3, 1), "1.0986122886681096913952452369225257046475"),
            ((10, 1), "2.3025850929940456840179914546843642076011"),
            ((1, 2), "-0.6931471805599453094172321214581765680755"),
        ];
        let tol = Rational::new(BigInt::one(), BigInt::one() << PRECISION);
        let mut worst = Rational::zero();
        for ((n, d), digits) in published {
            let c = Rational::new(n.into(), d.into());
            let (lo, hi) = ln_oracle(&c, 48);
            let reference = decimal(digits);
            assert!(lo <= reference && reference <= hi, "oracle disagrees with the published ln {c}");
            let LogValue::Dyadic { approx, precision } = base_log(&c, LogMode::Dyadic(PRECISION)).unwrap() else {
                panic!("expected a dyadic value");
            };
            assert_eq!(precision, PRECISION);
            // the distance to every point of [lo, hi] is at most 2^-p
            let err = (&approx - &lo).abs().max((&approx - &hi).abs());
            assert!(err <= tol, "ln {c}: error {err} exceeds 2^-{PRECISION}");
            worst = worst.max(err);
        }
        let worst_bits = -(num_traits::ToPrimitive::to_f64(&worst).unwrap().log2());
        format!("worst error 2^-{worst_bits:.1}")
    });
}

#[test]
fn criterion_9_cli() {
    report(9, "parse . print round trip on 500 series, golden outputs", || {
        let mut rng = rng(9);
        for _ in 0..500 {
            let rank = rng.gen_range(1..=3);
            let s = series(&mut rng, rank, 0, 6);
            let s = maybe_truncated(&mut rng, s);
            let text = s.to_string();
            assert_eq!(cli::parse_expr(&text, rank).unwrap(), s, "{text}");
        }
        let bless = std::env::var_os("HAHN_BLESS").is_some();
        let cases = load_golden(&golden_dir());
        assert!(cases.len() >= 30);
        for case in &cases {
            let got = render(&case.args, &case.stdin);
            assert_eq!(got, render(&case.args, &case.stdin), "nondeterministic: {}", case.path.display());
            if bless {
                let mut text = format!("$ hahn {}\n", quote(&case.args));
                for line in case.stdin.lines() {
                    text.push_str(&format!("< {line}\n"));
                }
                text.push_str(&got);
                std::fs::write(&case.path, text).unwrap();
            } else {
                assert_eq!(got, case.expected, "{}", case.path.display());
            }
        }
        format!("{} golden files", cases.len())
    });
}

fn quote(args: &[String]) -> String {
    let quoted: Vec<String> = args
        .iter()
        .map(|a| if a.contains(' ') || a.contains('^') || a.contains('*') { format!("\"{a}\"") } else { a.clone() })
        .collect();
    quoted.join(" ")
}
