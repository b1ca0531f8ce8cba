//! Acceptance criteria. Runs as a plain binary (`harness = false`) and prints
//! one line per criterion; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torsionlab::algebra::{LaurentPolynomial, Matrix, RootOfUnity};
use torsionlab::groups::{verify_relations, Presentation};
use torsionlab::invariants::{
    a_poly_specialized, alexander_torus, cycle_products, eigenvalue_indices, leading_coefficient_sequence, limit_set,
    ExactLimit, TwistKnotParam,
};
use torsionlab::reps::{
    graph_manifold_rep, is_abelian, is_irreducible, metabelian_rep, metabelian_u, random_sl2, sym_power,
    torus_knot_abelian_rep, Rep,
};
use torsionlab::torsion::{
    abelian_knot_torsion, fox_oracle_torsion_auto, generic_torsion, klein_bottle_complex, klein_bottle_torsion,
    torus_torsion_check,
};
use torsionlab::{Error, Result};

const TESTED_N: [i64; 5] = [1, 2, 3, -2, -3];

const LIMIT_TOL: f64 = 1e-9;
const LIMIT_BUDGET: Duration = Duration::from_secs(5);
const KLEIN_TOL: f64 = 1e-10;
const ORACLE_REL_TOL: f64 = 1e-9;
const RELATOR_TOL: f64 = 1e-12;
const SYM_POWER_TOL: f64 = 1e-10;
const CYCLE_TOL: f64 = 1e-9;
const TORUS_TOL: f64 = 1e-10;
const VERIFY_BUDGET: Duration = Duration::from_secs(60);

struct Outcome {
    passed: bool,
    detail: String,
}

fn within(errors: impl IntoIterator<Item = f64>, tol: f64) -> Outcome {
    let max = errors.into_iter().fold(0.0f64, f64::max);
    Outcome {
        passed: max < tol,
        detail: format!("max error {max:.2e} < {tol:.0e}"),
    }
}

fn klein(n: i64, j: i64) -> Result<Rep<f64>> {
    graph_manifold_rep::<f64>(n, j)?.restrict(Arc::new(Presentation::klein_bottle()), &["x", "y"])
}

fn limit_reproduction() -> Result<Outcome> {
    let start = Instant::now();
    let mut errs = Vec::new();
    for n in TESTED_N {
        for idx in eigenvalue_indices(n)? {
            let big_n = 10 * idx.pk() as u64;
            let report = leading_coefficient_sequence::<f64>(n, idx.j(), big_n)?;
            let last = report.rows.last().expect("nonempty sweep");
            let exact = ((2 * n + 1).abs() as f64).ln() - 2f64.ln();
            errs.push(last.abs_error.max((last.limit - exact / idx.pk() as f64).abs()));
        }
    }
    let elapsed = start.elapsed();
    let mut o = within(errs, LIMIT_TOL);
    o.passed &= elapsed < LIMIT_BUDGET;
    o.detail = format!("{} in {:.2} s < {} s", o.detail, elapsed.as_secs_f64(), LIMIT_BUDGET.as_secs());
    Ok(o)
}

fn limit_set_reproduction() -> Result<Outcome> {
    let set = limit_set(2)?;
    let expected = vec![ExactLimit { log_arg: 5, denom: 3 }, ExactLimit { log_arg: 5, denom: 9 }];
    let mut passed = set.limits == expected && set.realized;
    for n in TESTED_N {
        let s = limit_set(n)?;
        passed &= s.minimum == ExactLimit { log_arg: (2 * n + 1).abs(), denom: (4 * n + 1).abs() };
    }
    let shown: Vec<String> = set.limits.iter().map(ToString::to_string).collect();
    Ok(Outcome {
        passed,
        detail: format!("n = 2: {{{}}}, minimum formula checked for {} values of n", shown.join(", "), TESTED_N.len()),
    })
}

fn klein_bottle() -> Result<Outcome> {
    let mut errs = Vec::new();
    let mut engine_runs = 0;
    for n in TESTED_N {
        for idx in eigenvalue_indices(n)? {
            let kb = klein(n, idx.j())?;
            for big_n in 1..=10 {
                let closed = klein_bottle_torsion(&kb, big_n)?;
                errs.push(closed.distance_from_one());
                if big_n <= 3 {
                    let engine = generic_torsion(&klein_bottle_complex(&kb, big_n)?)?;
                    errs.push(engine.distance_from_one());
                    errs.push(engine.relative_error(&closed));
                    engine_runs += 1;
                }
            }
        }
    }
    let mut o = within(errs, KLEIN_TOL);
    o.detail = format!("{}, {engine_runs} engine runs", o.detail);
    Ok(o)
}

fn oracle_equivalence() -> Result<Outcome> {
    let undefined = |e: &Error| matches!(e, Error::NotAcyclic { .. } | Error::TorsionUndefined(_));
    let mut errs = Vec::new();
    let mut both_undefined = 0;
    for n in [1, 2] {
        let delta = alexander_torus(n)?;
        for xi in [RootOfUnity::minus_one(), RootOfUnity::new(1, 5), RootOfUnity::new(1, 9)] {
            let rep = torus_knot_abelian_rep::<f64>(n, xi)?;
            for big_n in 1..=4 {
                let fox = fox_oracle_torsion_auto(rep.presentation(), &rep, big_n);
                let closed = abelian_knot_torsion::<f64>(&delta, xi, big_n as u64);
                match (fox, closed) {
                    (Ok(a), Ok(b)) => errs.push(a.relative_error(&b)),
                    (Err(a), Err(b)) if undefined(&a) && undefined(&b) => both_undefined += 1,
                    (a, b) => {
                        return Ok(Outcome {
                            passed: false,
                            detail: format!("n = {n}, xi = {xi}, N = {big_n}: {a:?} vs {b:?}"),
                        })
                    }
                }
            }
        }
    }
    let compared = errs.len();
    let mut o = within(errs, ORACLE_REL_TOL);
    o.detail = format!("{} over {compared} pairs, {both_undefined} undefined on both sides", o.detail);
    Ok(o)
}

fn representation_certification() -> Result<Outcome> {
    let mut residuals = Vec::new();
    let mut counts_ok = true;
    let mut restrictions_ok = true;
    for n in TESTED_N {
        let p = TwistKnotParam::new(n)?;
        let expected = ((4 * n + 1).abs() - 1) / 2;
        let mut us = Vec::new();
        for k in 1..=p.num_classes() {
            let rep = metabelian_rep::<f64>(n, k)?;
            residuals.push(verify_relations(&rep, rep.presentation())?.max_residual());
            us.push(metabelian_u::<f64>(n, k));
        }
        us.sort_by(f64::total_cmp);
        us.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        let js = eigenvalue_indices(n)?;
        counts_ok &= us.len() as i64 == expected && js.len() as i64 == expected;
        for idx in js {
            let rep = graph_manifold_rep::<f64>(n, idx.j())?;
            residuals.push(verify_relations(&rep, rep.presentation())?.max_residual());
            let ab = rep.restrict(Arc::new(Presentation::torus_knot(n)), &["a", "b"])?;
            restrictions_ok &= is_abelian(&ab) && is_irreducible(&klein(n, idx.j())?);
        }
    }
    let mut o = within(residuals, RELATOR_TOL);
    o.passed &= counts_ok && restrictions_ok;
    o.detail = format!("residual {}, class counts {counts_ok}, restrictions {restrictions_ok}", o.detail);
    Ok(o)
}

fn symmetric_powers() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut errs = Vec::new();
    for _ in 0..100 {
        let (a, b) = (random_sl2::<f64, _>(&mut rng), random_sl2::<f64, _>(&mut rng));
        for d in (2..=12).step_by(2) {
            let lhs = sym_power(&(&a * &b), d)?;
            let rhs = &sym_power(&a, d)? * &sym_power(&b, d)?;
            errs.push(lhs.max_diff(&rhs) / lhs.max_norm().max(1.0));
        }
    }
    let mut eigen_ok = true;
    for n in TESTED_N {
        for idx in eigenvalue_indices(n)? {
            let xi: Complex<f64> = idx.xi().to_complex();
            for big_n in 1..=6 {
                let s = sym_power(&Matrix::from_diagonal(&[xi, xi.inv()]), 2 * big_n)?;
                let mut diag: Vec<Complex<f64>> = (0..2 * big_n).map(|i| s[(i, i)]).collect();
                eigen_ok &= s.is_diagonal(1e-14);
                for i in 1..=big_n as i32 {
                    for e in [xi.powi(2 * i - 1), xi.powi(1 - 2 * i)] {
                        match diag.iter().position(|x| (x - e).norm() < 1e-12) {
                            Some(p) => {
                                diag.swap_remove(p);
                            }
                            None => eigen_ok = false,
                        }
                    }
                }
            }
        }
    }
    let mut o = within(errs, SYM_POWER_TOL);
    o.passed &= eigen_ok;
    o.detail = format!("homomorphism {} (relative to entry size), eigenvalue multisets {eigen_ok}", o.detail);
    Ok(o)
}

fn a_polynomial() -> Result<Outcome> {
    let m_plus = LaurentPolynomial::from_terms([(1, 1), (-1, 1)]);
    let mut mismatched = Vec::new();
    for n in [1, 2, -2, -3] {
        let (shift, power) = if n > 0 { (-8 * n, 2 * n) } else { (8 * n + 3, -2 * n - 1) };
        let mut direct = LaurentPolynomial::monomial(1, shift);
        for _ in 0..power {
            direct = &direct * &m_plus;
        }
        if a_poly_specialized(n)? != direct {
            mismatched.push(n);
        }
    }
    Ok(Outcome {
        passed: mismatched.is_empty(),
        detail: format!("coefficient-exact for n in {{1, 2, -2, -3}}, mismatches {mismatched:?}"),
    })
}

fn full_cycle_identities() -> Result<Outcome> {
    let mut errs = Vec::new();
    for n in TESTED_N {
        for idx in eigenvalue_indices(n)? {
            let (num, den) = cycle_products::<f64>(n, idx.j())?;
            errs.push((num - (2 * n + 1).abs() as f64).abs());
            errs.push((den - 2.0).abs());
        }
    }
    Ok(within(errs, CYCLE_TOL))
}

fn torus_torsion() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let pres = Arc::new(Presentation::torus());
    let diag = |z: RootOfUnity| Matrix::from_diagonal(&[z.to_complex(), z.inv().to_complex()]);
    let mut errs = Vec::new();
    let mut skipped = 0;
    for _ in 0..20 {
        let z1 = RootOfUnity::new(rng.gen_range(1..30), rng.gen_range(2..16));
        let z2 = RootOfUnity::new(rng.gen_range(1..30), rng.gen_range(2..16));
        let rep = Rep::new(pres.clone(), vec![diag(z1), diag(z2)])?;
        match torus_torsion_check(&rep, rng.gen_range(1..=4)) {
            Ok(t) => errs.push(t.distance_from_one()),
            Err(Error::TorsionUndefined(_)) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    let acyclic = errs.len();
    let mut o = within(errs, TORUS_TOL);
    o.detail = format!("{} over {acyclic} acyclic choices, {skipped} non-acyclic", o.detail);
    Ok(o)
}

fn verify_budget() -> Result<Outcome> {
    let start = Instant::now();
    let report = torsionlab::verify::run_suite(&TESTED_N, 0)?;
    let elapsed = start.elapsed();
    let failed: Vec<String> = report.failures().map(|c| format!("{}::{}", c.module, c.check)).collect();
    Ok(Outcome {
        passed: failed.is_empty() && elapsed < VERIFY_BUDGET,
        detail: format!(
            "{} checks in {:.2} s < {} s, failures {failed:?}",
            report.checks.len(),
            elapsed.as_secs_f64(),
            VERIFY_BUDGET.as_secs()
        ),
    })
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Result<Outcome>); 10] = [
        ("1", "limit reproduction at N = 10 p_k", limit_reproduction),
        ("2", "limit set for n = 2 and minimum formula", limit_set_reproduction),
        ("3", "Klein-bottle torsion = 1, engine agrees", klein_bottle),
        ("4", "Fox oracle = closed form on T(2,3), T(2,5)", oracle_equivalence),
        ("5", "representation certification", representation_certification),
        ("6", "symmetric-power homomorphism and eigenvalues", symmetric_powers),
        ("7", "A-polynomial expansion", a_polynomial),
        ("8", "full-cycle identities", full_cycle_identities),
        ("9", "torus torsion = 1 when acyclic", torus_torsion),
        ("verify", "full verify suite within budget", verify_budget),
    ];
    let mut all = true;
    for (id, name, f) in criteria {
        let o = f().unwrap_or_else(|e| Outcome {
            passed: false,
            detail: format!("error: {e}"),
        });
        all &= o.passed;
        println!("[{}] {id:>6} {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
