//! Acceptance suite. Every criterion runs at its pinned tolerance and prints
//! one PASS/FAIL line; the test fails if any criterion fails.
//!
//! Run with `cargo test -p zcz --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::f64::consts::{PI, TAU};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use zcz::{
    auto_profile, build_frank_sequence, build_zcz_array, build_zcz_sequence, check_condition1,
    check_condition2, closed_form_offpeak, gaussian_sum, CorrelationMethod, RoundingVariant,
    Sequence, Tolerance,
};

const FLOOR: RoundingVariant = RoundingVariant::Floor;
/// Relative zero threshold: `1e-9 * L` for sequences, `1e-9 * R` for columns.
const REL_TOL: f64 = 1e-9;
/// Absolute agreement between measured values and the closed form.
const CLOSED_FORM_TOL: f64 = 1e-6;
const ASYMPTOTE_TOL_N100: f64 = 1e-5;
const GAUSS_REL_TOL: f64 = 1e-10;
const CRITERION1_BUDGET: Duration = Duration::from_secs(5);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn unit(n: u64) -> usize {
    (2 * n + 1) as usize
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn zero_zone_structure() -> Outcome {
    let start = Instant::now();
    for n in 0..=10u64 {
        let s = build_zcz_sequence(n, FLOOR).map_err(|e| e.to_string())?;
        let l = s.period();
        let tol = REL_TOL * l as f64;
        let p = auto_profile(&s, CorrelationMethod::Direct);
        let special = [6 * unit(n), 18 * unit(n)];
        for (tau, v) in p.values().iter().enumerate().skip(1) {
            if special.contains(&tau) {
                check(v.norm() >= 1.0, || {
                    format!("n={n} tau={tau}: |theta|={} < 1", v.norm())
                })?;
            } else {
                check(v.norm() < tol, || {
                    format!("n={n} tau={tau}: |theta|={:e} >= {tol:e}", v.norm())
                })?;
            }
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < CRITERION1_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("n=0..10, {elapsed:.2?}"))
}

fn closed_form_value() -> Outcome {
    let mut worst = 0.0f64;
    for n in 0..=10u64 {
        let s = build_zcz_sequence(n, FLOOR).map_err(|e| e.to_string())?;
        let l = s.period() as f64;
        let p = auto_profile(&s, CorrelationMethod::Direct);
        let a = p.values()[6 * unit(n)];
        let b = p.values()[18 * unit(n)];
        let expected = (if n % 2 == 0 { -1.0 } else { 1.0 })
            * 12.0
            * unit(n) as f64
            * (PI / (6.0 * unit(n) as f64)).sin();
        check((closed_form_offpeak(n) - expected).abs() < 1e-12, || {
            format!("n={n}: formula")
        })?;
        for v in [a, b] {
            let dev = (v.re - expected).abs();
            worst = worst.max(dev);
            check(dev < CLOSED_FORM_TOL, || {
                format!("n={n}: {v} vs {expected}")
            })?;
            check(v.im.abs() < REL_TOL * l, || {
                format!("n={n}: imaginary part {:e}", v.im)
            })?;
        }
        check((a - b).norm() < REL_TOL * l, || {
            format!("n={n}: values differ {a} {b}")
        })?;
    }
    Ok(format!("max |measured - closed form| = {worst:.2e}"))
}

fn asymptote() -> Outcome {
    let mut prev = f64::INFINITY;
    for n in 0..=100u64 {
        let v = closed_form_offpeak(n);
        let dev = v.abs() - TAU;
        check(dev < 0.0, || {
            format!("n={n}: |value| {} not below 2pi", v.abs())
        })?;
        check(dev.abs() < prev, || {
            format!("n={n}: deviation not decreasing")
        })?;
        prev = dev.abs();
        let expected_sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        check(v.signum() == expected_sign, || format!("n={n}: sign {v}"))?;
        // Taylor bound: 2pi - 2N sin(pi/N) <= pi^3 / (3 N^2).
        let big_n = 6.0 * unit(n) as f64;
        check(dev.abs() <= PI.powi(3) / (3.0 * big_n * big_n), || {
            format!("n={n}: above Taylor bound")
        })?;
    }
    let dev100 = (closed_form_offpeak(100).abs() - TAU).abs();
    check(dev100 < ASYMPTOTE_TOL_N100, || {
        format!("deviation at n=100 is {dev100:e}")
    })?;
    Ok(format!("deviation at n=100 = {dev100:.3e}"))
}

fn aop_condition1() -> Outcome {
    for n in 0..=10u64 {
        let a = build_zcz_array(n, FLOOR).map_err(|e| e.to_string())?;
        let v = check_condition1(&a, Tolerance::Relative(REL_TOL));
        check(v.is_empty(), || {
            format!("n={n}: {} violations, first {:?}", v.len(), v.first())
        })?;
    }
    Ok("n=0..10 all column cross-correlations vanish".into())
}

fn aop_condition2() -> Outcome {
    for n in 0..=10u64 {
        let a = build_zcz_array(n, FLOOR).map_err(|e| e.to_string())?;
        let kappas: Vec<usize> = check_condition2(&a, Tolerance::Relative(REL_TOL))
            .iter()
            .map(|e| e.kappa)
            .collect();
        check(kappas == vec![3 * unit(n), 9 * unit(n)], || {
            format!("n={n}: exceptions {kappas:?}")
        })?;
        check(!kappas.contains(&(6 * unit(n))), || {
            format!("n={n}: kappa=6(2n+1) is an exception")
        })?;
    }
    Ok("exceptions exactly {3(2n+1), 9(2n+1)} for n=0..10".into())
}

fn shift_mapping_consistency() -> Outcome {
    for n in 0..=3u64 {
        let s = build_zcz_sequence(n, FLOOR).map_err(|e| e.to_string())?;
        let tol = REL_TOL * s.period() as f64;
        let p = auto_profile(&s, CorrelationMethod::Direct);
        let seq_shifts: BTreeSet<usize> =
            p.nonzero_shifts().into_iter().filter(|&t| t != 0).collect();
        let a = build_zcz_array(n, FLOOR).map_err(|e| e.to_string())?;
        let mapped: BTreeSet<usize> = check_condition2(&a, Tolerance::Relative(REL_TOL))
            .iter()
            .map(|e| 2 * e.kappa)
            .collect();
        check(seq_shifts == mapped, || {
            format!("n={n}: {seq_shifts:?} vs {mapped:?}")
        })?;
        for tau in (1..s.period()).step_by(2) {
            check(p.values()[tau].norm() < tol, || {
                format!("n={n}: odd tau={tau} non-zero")
            })?;
        }
    }
    Ok("n=0..3".into())
}

fn oracle_agreement() -> Outcome {
    for d in 1..=16usize {
        let f = build_frank_sequence(d).map_err(|e| e.to_string())?;
        let l = (d * d) as f64;
        let p = auto_profile(&f, CorrelationMethod::Direct);
        check(
            (p.values()[0] - Complex64::new(l, 0.0)).norm() < REL_TOL * l,
            || format!("d={d}: peak"),
        )?;
        for (tau, v) in p.values().iter().enumerate().skip(1) {
            check(v.norm() < REL_TOL * l, || {
                format!("d={d} tau={tau}: {:e}", v.norm())
            })?;
        }
    }
    Ok("Frank d=1..16 perfect".into())
}

fn max_elementwise_gap(s: &Sequence) -> f64 {
    let direct = auto_profile(s, CorrelationMethod::Direct);
    let fast = auto_profile(s, CorrelationMethod::Transform);
    direct
        .values()
        .iter()
        .zip(fast.values())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

fn engine_cross_check() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_2c2c);
    let mut worst_ratio = 0.0f64;
    for trial in 0..100 {
        let len = rng.gen_range(1..=4096usize);
        let modulus = rng.gen_range(1..=1024u64);
        let exps = (0..len).map(|_| rng.gen_range(0..modulus)).collect();
        let s = Sequence::new(modulus, exps).map_err(|e| e.to_string())?;
        let gap = max_elementwise_gap(&s);
        worst_ratio = worst_ratio.max(gap / len as f64);
        check(gap < REL_TOL * len as f64, || {
            format!("trial {trial} L={len}: gap {gap:e}")
        })?;
    }
    for n in 0..=10u64 {
        for variant in [RoundingVariant::Floor, RoundingVariant::Ceiling] {
            let s = build_zcz_sequence(n, variant).map_err(|e| e.to_string())?;
            let gap = max_elementwise_gap(&s);
            check(gap < REL_TOL * s.period() as f64, || {
                format!("n={n} {variant}: gap {gap:e}")
            })?;
        }
    }
    Ok(format!("worst gap / L = {worst_ratio:.2e}"))
}

fn gaussian_sum_property() -> Outcome {
    for modulus in 1..=64u64 {
        let tol = GAUSS_REL_TOL * modulus as f64;
        for q in 0..=2 * modulus as i64 {
            let g = gaussian_sum(q, modulus);
            if q % modulus as i64 != 0 {
                check(g.norm() < tol, || format!("N={modulus} q={q}: {g}"))?;
            } else {
                check(
                    (g - Complex64::new(modulus as f64, 0.0)).norm() < tol,
                    || format!("N={modulus} q={q}: {g}"),
                )?;
            }
        }
    }
    Ok("N=1..64, q=0..2N".into())
}

fn ceiling_variant() -> Outcome {
    let mut values = Vec::new();
    for n in 0..=5u64 {
        let s = build_zcz_sequence(n, RoundingVariant::Ceiling).map_err(|e| e.to_string())?;
        let p = auto_profile(&s, CorrelationMethod::Direct);
        let shifts: Vec<usize> = p.nonzero_shifts().into_iter().filter(|&t| t != 0).collect();
        check(shifts == vec![6 * unit(n), 18 * unit(n)], || {
            format!("n={n}: {shifts:?}")
        })?;
        values.push(format!("n={n}:{:+.6}", p.values()[6 * unit(n)].re));
    }
    Ok(format!("measured {}", values.join(" ")))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("1 zero-zone structure", zero_zone_structure),
        ("2 closed-form value", closed_form_value),
        ("3 asymptote", asymptote),
        ("4 AOP condition 1", aop_condition1),
        ("5 AOP condition 2", aop_condition2),
        ("6 shift-mapping consistency", shift_mapping_consistency),
        ("7 Frank oracle agreement", oracle_agreement),
        ("8 engine cross-check", engine_cross_check),
        ("9 Gaussian-sum property", gaussian_sum_property),
        ("10 ceiling variant", ceiling_variant),
    ];
    let mut failures = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
