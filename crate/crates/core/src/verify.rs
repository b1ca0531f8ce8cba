//! The verification suite behind `torsionlab verify`.
//!
//! Every check is deterministic given the seed. Parameter-independent checks
//! run once (`n = None`); the rest run once per requested `n`.

use std::sync::Arc;

use num_complex::Complex;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{LaurentPolynomial, Matrix, RootOfUnity};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::groups::{evaluate_word, fox_derivative, verify_relations, Letter, Presentation, Word};
use crate::invariants::{
    a_poly_specialized, alexander_torus, cycle_products, divisors, eigenvalue_indices, leading_coefficient_sequence,
    limit_set, detect_period, order_coprime_to_torus_determinant, EigenvalueIndex, ExactLimit, TwistKnotParam,
};
use crate::reps::{
    graph_manifold_rep, graph_manifold_rep_with_sign, is_abelian, is_irreducible, klein_irreducible_rep,
    metabelian_rep, random_sl2, sym_power, torus_knot_abelian_rep, Lift, Rep, XSign,
};
use crate::torsion::{
    abelian_knot_torsion, fox_oracle_torsion_auto, generic_torsion, generic_torsion_with, graph_manifold_torsion,
    klein_bottle_complex, klein_bottle_torsion, presentation_complex, torus_torsion_check, LiftSelection, TorsionValue,
};

/// One line of the check matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub module: &'static str,
    pub check: &'static str,
    pub n: Option<i64>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub n_values: Vec<i64>,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Outcome = Result<(bool, String)>;

fn check(module: &'static str, name: &'static str, n: Option<i64>, outcome: Outcome) -> Check {
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    Check {
        module,
        check: name,
        n,
        passed,
        detail,
    }
}

fn max_within(errors: impl IntoIterator<Item = f64>, tol: f64) -> (bool, String) {
    let max = errors.into_iter().fold(0.0f64, f64::max);
    (max <= tol, format!("max error {max:.3e} (tol {tol:.0e})"))
}

/// Runs the suite. Invalid `n` values are rejected before anything runs.
pub fn run_suite(n_values: &[i64], seed: u64) -> Result<VerifyReport> {
    for &n in n_values {
        TwistKnotParam::new(n)?;
    }
    let mut checks = global_checks(seed);
    let per_n: Vec<Vec<Check>> = std::thread::scope(|s| {
        let handles: Vec<_> = n_values
            .iter()
            .map(|&n| s.spawn(move || parameter_checks(n, seed)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("verify worker panicked")).collect()
    });
    checks.extend(per_n.into_iter().flatten());
    Ok(VerifyReport {
        seed,
        n_values: n_values.to_vec(),
        checks,
    })
}

fn global_checks(seed: u64) -> Vec<Check> {
    vec![
        check("algebra", "det_multiplicative", None, det_multiplicative(seed)),
        check("algebra", "root_of_unity_exact", None, root_of_unity_exact(seed)),
        check("algebra", "laurent_eval_multiplicative", None, laurent_eval_multiplicative(seed)),
        check("algebra", "a_poly_expansion", None, a_poly_expansion()),
        check("groups", "fox_product_rule", None, fox_product_rule(seed)),
        check("groups", "word_eval_homomorphism", None, word_eval_homomorphism(seed)),
        check("reps", "sym_power_homomorphism", None, sym_power_homomorphism(seed)),
        check("torsion", "fox_oracle_torus_knots", None, fox_oracle_torus_knots()),
        check("torsion", "torus_torsion_random", None, torus_torsion_random(seed)),
    ]
}

fn parameter_checks(n: i64, seed: u64) -> Vec<Check> {
    let s = Some(n);
    let seed = seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    vec![
        check("groups", "relations_conjugation_stable", s, relations_conjugation_stable(n, seed)),
        check("reps", "graph_manifold_relations", s, graph_manifold_relations(n)),
        check("reps", "metabelian_reps", s, metabelian_reps(n)),
        check("reps", "class_count", s, class_count(n)),
        check("reps", "sym_power_eigenvalues", s, sym_power_eigenvalues(n, seed)),
        check("reps", "restrictions", s, restrictions(n)),
        check("torsion", "chain_condition", s, chain_condition(n)),
        check("torsion", "lift_independence", s, lift_independence(n, seed)),
        check("torsion", "klein_oracle_triangle", s, klein_oracle_triangle(n)),
        check("torsion", "fox_oracle_pair", s, fox_oracle_pair(n)),
        check("torsion", "gluing", s, gluing(n)),
        check("torsion", "periodicity", s, periodicity(n)),
        check("torsion", "jsj_torus", s, jsj_torus(n)),
        check("invariants", "limit_at_multiples", s, limit_at_multiples(n)),
        check("invariants", "pk_realizes_divisors", s, pk_realizes_divisors(n)),
        check("invariants", "cycle_products", s, cycle_product_check(n)),
        check("invariants", "gcd_coprime", s, gcd_coprime(n)),
        check("invariants", "limit_set_minimum", s, limit_set_minimum(n)),
    ]
}

fn random_c<R: Rng>(rng: &mut R) -> Complex<f64> {
    Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn random_matrix<R: Rng>(rng: &mut R, dim: usize) -> Matrix<f64> {
    let mut m = Matrix::zeros(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            m[(r, c)] = random_c(rng);
        }
    }
    m
}

fn random_word<R: Rng>(rng: &mut R, gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| Letter {
        gen: rng.gen_range(0..gens),
        inverse: rng.gen(),
    }))
}

fn det_multiplicative(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..60 {
        let dim = rng.gen_range(1..=12);
        let (a, b) = (random_matrix(&mut rng, dim), random_matrix(&mut rng, dim));
        let (da, db) = (a.det(), b.det());
        let err = ((&a * &b).det() - da * db).norm() / <f64 as Real>::tolerance(dim) / (da * db).norm().max(1.0);
        worst = worst.max(err);
    }
    Ok(max_within([worst], 1.0))
}

fn root_of_unity_exact(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = RootOfUnity::new(rng.gen_range(1..40), rng.gen_range(2..60));
    let mut acc = RootOfUnity::one();
    for _ in 0..1_000_000 {
        acc = acc * r;
    }
    let exact = RootOfUnity::new(r.numer() * 1_000_000, r.denom());
    let pow_ok = (0..200).all(|_| {
        let k = rng.gen_range(-10_000i64..10_000);
        r.pow(k) == RootOfUnity::new(k * r.numer(), r.denom())
    });
    Ok((acc == exact && acc == r.pow(1_000_000) && pow_ok, format!("{r} ^ 10^6 = {acc}")))
}

fn laurent_eval_multiplicative(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_poly = |rng: &mut ChaCha8Rng| {
        let lo = rng.gen_range(-5..=5);
        let len = rng.gen_range(1..=8);
        LaurentPolynomial::from_terms((0..len).map(|i| (lo + i, rng.gen_range(-9i64..=9))))
    };
    let mut errs = Vec::new();
    for _ in 0..100 {
        let (p, q) = (random_poly(&mut rng), random_poly(&mut rng));
        let z = Complex::from_polar(rng.gen_range(0.5..1.5), rng.gen_range(0.0..std::f64::consts::TAU));
        let (pz, qz) = (p.eval(z), q.eval(z));
        errs.push(((&p * &q).eval(z) - pz * qz).norm() / (pz * qz).norm().max(1.0));
    }
    Ok(max_within(errs, 1e-10))
}

fn a_poly_expansion() -> Outcome {
    let m_plus = LaurentPolynomial::from_terms([(1, 1), (-1, 1)]);
    let mut bad = Vec::new();
    for n in [1, 2, 3, -2, -3] {
        let (shift, power) = if n > 0 { (-8 * n, 2 * n) } else { (-8 * -n + 3, -2 * n - 1) };
        let mut direct = LaurentPolynomial::monomial(1, shift);
        for _ in 0..power {
            direct = &direct * &m_plus;
        }
        if a_poly_specialized(n)? != direct {
            bad.push(n);
        }
    }
    Ok((bad.is_empty(), format!("mismatched n: {bad:?}")))
}

fn fox_product_rule(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..1000 {
        let (u, v) = (random_word(&mut rng, 4, 10), random_word(&mut rng, 4, 10));
        let uv = &u * &v;
        for g in 0..4 {
            let rhs = &fox_derivative(&u, g) + &fox_derivative(&v, g).left_mul(&u);
            if fox_derivative(&uv, g) != rhs {
                failures += 1;
            }
        }
    }
    Ok((failures == 0, format!("{failures} failures over 1000 pairs")))
}

fn word_eval_homomorphism(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = ["g0", "g1", "g2", "g3"].iter().map(|s| s.to_string()).collect();
    let pres = Arc::new(Presentation::new(gens, vec![])?);
    let images = (0..4).map(|_| random_sl2::<f64, _>(&mut rng)).collect();
    let rep = Rep::new(pres, images)?;
    let mut errs = Vec::new();
    for _ in 0..200 {
        let (u, v) = (random_word(&mut rng, 4, 8), random_word(&mut rng, 4, 8));
        let lhs = evaluate_word(&rep, &(&u * &v), Lift::None)?;
        let rhs = &evaluate_word(&rep, &u, Lift::None)? * &evaluate_word(&rep, &v, Lift::None)?;
        errs.push(lhs.max_diff(&rhs) / lhs.max_norm().max(1.0));
    }
    Ok(max_within(errs, 1e-10))
}

fn sym_power_homomorphism(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut errs = Vec::new();
    for _ in 0..100 {
        let (a, b) = (random_sl2::<f64, _>(&mut rng), random_sl2::<f64, _>(&mut rng));
        for d in (2..=12).step_by(2) {
            let lhs = sym_power(&(&a * &b), d)?;
            let rhs = &sym_power(&a, d)? * &sym_power(&b, d)?;
            errs.push(lhs.max_diff(&rhs) / lhs.max_norm().max(1.0));
        }
    }
    Ok(max_within(errs, 1e-10))
}

/// Both sides undefined counts as agreement.
fn compare(a: Result<TorsionValue<f64>>, b: Result<TorsionValue<f64>>) -> Result<Option<f64>> {
    let undefined = |e: &Error| matches!(e, Error::NotAcyclic { .. } | Error::TorsionUndefined(_));
    match (a, b) {
        (Ok(a), Ok(b)) => Ok(Some(a.relative_error(&b))),
        (Err(a), Err(b)) if undefined(&a) && undefined(&b) => Ok(None),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

fn fox_vs_closed(n: i64, xi: RootOfUnity, big_n: usize) -> Result<Option<f64>> {
    let rep = torus_knot_abelian_rep::<f64>(n, xi)?;
    let fox = fox_oracle_torsion_auto(rep.presentation(), &rep, big_n);
    let closed = abelian_knot_torsion::<f64>(&alexander_torus(n)?, xi, big_n as u64);
    compare(fox, closed)
}

fn fox_oracle_torus_knots() -> Outcome {
    let mut errs = Vec::new();
    let mut undefined = 0;
    for n in [1, 2] {
        for xi in [RootOfUnity::minus_one(), RootOfUnity::new(1, 5), RootOfUnity::new(1, 9)] {
            for big_n in 1..=4 {
                match fox_vs_closed(n, xi, big_n)? {
                    Some(e) => errs.push(e),
                    None => undefined += 1,
                }
            }
        }
    }
    let (ok, detail) = max_within(errs, 1e-9);
    Ok((ok, format!("{detail}, {undefined} undefined on both sides")))
}

fn diag(z: RootOfUnity) -> Matrix<f64> {
    Matrix::from_diagonal(&[z.to_complex(), z.inv().to_complex()])
}

fn torus_torsion_random(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pres = Arc::new(Presentation::torus());
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
    let (ok, detail) = max_within(errs, 1e-10);
    Ok((ok, format!("{detail}, {skipped} non-acyclic skipped")))
}

fn relations_conjugation_stable(n: i64, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = loop {
        let p = random_sl2::<f64, _>(&mut rng);
        let pinv = p.inverse().expect("SL2 is invertible");
        if p.max_norm() * pinv.max_norm() * 2.0 < 1e3 {
            break p;
        }
    };
    let mut stable = true;
    let mut worst = 0.0f64;
    let mut reps = Vec::new();
    for idx in eigenvalue_indices(n)? {
        reps.push(metabelian_rep::<f64>(n, idx.j())?);
        reps.push(graph_manifold_rep::<f64>(n, idx.j())?);
    }
    for rep in &reps {
        let before = verify_relations(rep, rep.presentation())?;
        let conj = rep.conjugate(&p)?;
        let after = verify_relations(&conj, conj.presentation())?;
        stable &= before.passes(1e-8) == after.passes(1e-8);
        worst = worst.max(after.max_residual());
    }
    Ok((stable, format!("max residual after conjugation {worst:.3e}")))
}

fn graph_manifold_relations(n: i64) -> Outcome {
    let mut errs = Vec::new();
    for idx in eigenvalue_indices(n)? {
        for sign in [XSign::Plus, XSign::Minus] {
            let rep = graph_manifold_rep_with_sign::<f64>(n, idx.j(), sign)?;
            errs.push(verify_relations(&rep, rep.presentation())?.max_residual());
        }
    }
    Ok(max_within(errs, 1e-12))
}

fn metabelian_reps(n: i64) -> Outcome {
    let p = TwistKnotParam::new(n)?;
    let mut errs = Vec::new();
    let mut tagged = true;
    for k in 1..=p.num_classes() {
        let rep = metabelian_rep::<f64>(n, k)?;
        errs.push(verify_relations(&rep, rep.presentation())?.max_residual());
        let t = rep.tags();
        tagged &= t.irreducible && t.metabelian == Some(true);
    }
    let (ok, detail) = max_within(errs, 1e-12);
    Ok((ok && tagged, format!("{detail}, irreducible+metabelian: {tagged}")))
}

fn class_count(n: i64) -> Outcome {
    let p = TwistKnotParam::new(n)?;
    let mut us: Vec<f64> = (1..=p.num_classes()).map(|k| crate::reps::metabelian_u::<f64>(n, k)).collect();
    us.sort_by(f64::total_cmp);
    us.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    let expected = ((4 * n + 1).abs() - 1) / 2;
    let js = eigenvalue_indices(n)?.len() as i64;
    Ok((
        us.len() as i64 == expected && js == expected,
        format!("{} distinct u_k, {js} eigenvalue classes, expected {expected}", us.len()),
    ))
}

fn random_su2<R: Rng>(rng: &mut R) -> Matrix<f64> {
    let (a, b) = (random_c(rng), random_c(rng));
    let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let (a, b) = (a / r, b / r);
    Matrix::from_2x2(a, -b.conj(), b, a.conj())
}

/// Power sums `tr(S^m)`, `m = 1..=d`, determine the eigenvalue multiset.
fn sym_power_eigenvalues(n: i64, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut errs = Vec::new();
    for idx in eigenvalue_indices(n)? {
        let xi: Complex<f64> = idx.xi().to_complex();
        let p = random_su2(&mut rng);
        let pinv = p.inverse().expect("SU2 is invertible");
        let a = &(&pinv * &Matrix::from_diagonal(&[xi, xi.inv()])) * &p;
        for big_n in 1..=6 {
            let d = 2 * big_n;
            let s = sym_power(&a, d)?;
            let expected: Vec<Complex<f64>> =
                (1..=big_n).flat_map(|i| [xi.powi(2 * i as i32 - 1), xi.powi(1 - 2 * i as i32)]).collect();
            let mut power = Matrix::identity(d);
            for m in 1..=d {
                power = &power * &s;
                let sum: Complex<f64> = expected.iter().map(|l| l.powi(m as i32)).sum();
                errs.push((power.trace() - sum).norm() / d as f64);
            }
            let sd = sym_power(&Matrix::from_diagonal(&[xi, xi.inv()]), d)?;
            let mut diag_entries: Vec<Complex<f64>> = (0..d).map(|i| sd[(i, i)]).collect();
            for e in &expected {
                let pos = diag_entries
                    .iter()
                    .position(|x| (x - e).norm() < 1e-12)
                    .ok_or_else(|| Error::Classification(format!("eigenvalue {e} missing at 2N = {d}")))?;
                diag_entries.swap_remove(pos);
            }
        }
    }
    Ok(max_within(errs, 1e-9))
}

fn restrictions(n: i64) -> Outcome {
    let mut ok = true;
    for idx in eigenvalue_indices(n)? {
        let rep = graph_manifold_rep::<f64>(n, idx.j())?;
        let ab = rep.restrict(Arc::new(Presentation::torus_knot(n)), &["a", "b"])?;
        let kb = rep.restrict(Arc::new(Presentation::klein_bottle()), &["x", "y"])?;
        ok &= is_abelian(&ab) && is_irreducible(&kb);
    }
    Ok((ok, "<a,b> abelian and <x,y> irreducible for every j".into()))
}

fn klein_rep(n: i64, j: i64) -> Result<Rep<f64>> {
    graph_manifold_rep::<f64>(n, j)?.restrict(Arc::new(Presentation::klein_bottle()), &["x", "y"])
}

fn chain_condition(n: i64) -> Outcome {
    let mut errs = Vec::new();
    for idx in eigenvalue_indices(n)? {
        let kb = klein_rep(n, idx.j())?;
        let ab = torus_knot_abelian_rep::<f64>(n, idx.xi())?;
        for big_n in 1..=4 {
            errs.push(klein_bottle_complex(&kb, big_n)?.chain_defect());
            errs.push(presentation_complex(ab.presentation(), &ab, big_n)?.chain_defect());
        }
    }
    Ok(max_within(errs, 1e-12))
}

fn lift_independence(n: i64, seed: u64) -> Outcome {
    let mut errs = Vec::new();
    let idx = EigenvalueIndex::new(TwistKnotParam::new(n)?, 1)?;
    let mut complexes = vec![klein_bottle_complex(&klein_rep(n, 1)?, 2)?];
    let ab = torus_knot_abelian_rep::<f64>(n, idx.xi())?;
    complexes.push(presentation_complex(ab.presentation(), &ab, 2)?);
    for cx in &complexes {
        let base = match generic_torsion(cx) {
            Ok(t) => t,
            Err(Error::NotAcyclic { .. }) => continue,
            Err(e) => return Err(e),
        };
        for i in 0..10 {
            let t = generic_torsion_with(cx, LiftSelection::Random(seed.wrapping_add(i)))?;
            errs.push(t.relative_error(&base));
        }
    }
    Ok(max_within(errs, 1e-10))
}

fn klein_oracle_triangle(n: i64) -> Outcome {
    let mut errs = Vec::new();
    for idx in eigenvalue_indices(n)? {
        let kb = klein_rep(n, idx.j())?;
        let eta = idx.xi().inv().to_complex();
        for big_n in 1..=3 {
            let closed = klein_bottle_torsion(&kb, big_n)?;
            let engine = generic_torsion(&klein_bottle_complex(&kb, big_n)?)?;
            let normal = klein_bottle_torsion(&klein_irreducible_rep(eta), big_n)?;
            errs.extend([closed.distance_from_one(), engine.distance_from_one(), normal.distance_from_one()]);
        }
        for big_n in 4..=10 {
            errs.push(klein_bottle_torsion(&kb, big_n)?.distance_from_one());
        }
    }
    Ok(max_within(errs, 1e-10))
}

fn fox_oracle_pair(n: i64) -> Outcome {
    let mut errs = Vec::new();
    let mut undefined = 0;
    for idx in eigenvalue_indices(n)? {
        for big_n in 1..=4 {
            match fox_vs_closed(n, idx.xi(), big_n)? {
                Some(e) => errs.push(e),
                None => undefined += 1,
            }
        }
    }
    let (ok, detail) = max_within(errs, 1e-9);
    Ok((ok, format!("{detail}, {undefined} undefined on both sides")))
}

fn gluing(n: i64) -> Outcome {
    let delta = alexander_torus(n)?;
    let mut errs = Vec::new();
    for idx in eigenvalue_indices(n)? {
        for big_n in (1..=8).chain([20, 40]) {
            let whole = graph_manifold_torsion::<f64>(n, idx.j(), big_n)?;
            let piece = abelian_knot_torsion::<f64>(&delta, idx.xi(), big_n)?;
            errs.push((whole.log_magnitude - piece.log_magnitude).abs() / piece.log_magnitude.abs().max(1.0));
        }
    }
    Ok(max_within(errs, 1e-10))
}

fn periodicity(n: i64) -> Outcome {
    let delta = alexander_torus(n)?;
    let mut bad = Vec::new();
    for idx in eigenvalue_indices(n)? {
        let xi = idx.xi();
        let pk = idx.pk() as usize;
        let seq: Vec<f64> = (1..=3 * pk as i64)
            .map(|i| {
                let z = xi.pow(2 * i - 1);
                let num: Complex<f64> = delta.eval_root(z);
                num.norm().ln() - (z.to_complex::<f64>() - Complex::one()).norm().ln()
            })
            .collect();
        let found = detect_period(&seq, 1e-9);
        if found != Some(pk) {
            bad.push((idx.j(), pk, found));
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { "period = p_k for every j".into() } else { format!("(j, p_k, found): {bad:?}") }))
}

fn jsj_torus(n: i64) -> Outcome {
    let mut errs = Vec::new();
    let torus = Arc::new(Presentation::torus());
    for idx in eigenvalue_indices(n)? {
        let rep = graph_manifold_rep::<f64>(n, idx.j())?;
        let (a, b) = (Word::gen(0), Word::gen(1));
        let mu = b.pow(-n).concat(&a);
        let t = rep.pullback(torus.clone(), &[mu, a.pow(2)])?;
        for big_n in 1..=4 {
            errs.push(torus_torsion_check(&t, big_n)?.distance_from_one());
        }
    }
    Ok(max_within(errs, 1e-10))
}

fn limit_at_multiples(n: i64) -> Outcome {
    let mut errs = Vec::new();
    for idx in eigenvalue_indices(n)? {
        let report = leading_coefficient_sequence::<f64>(n, idx.j(), 10 * idx.pk() as u64)?;
        errs.push(report.max_error_at_multiples.unwrap_or(f64::INFINITY));
    }
    Ok(max_within(errs, 1e-9))
}

fn pk_realizes_divisors(n: i64) -> Outcome {
    let p = TwistKnotParam::new(n)?.p();
    let mut pks: Vec<i64> = eigenvalue_indices(n)?.iter().map(|i| i.pk()).collect();
    pks.sort_unstable();
    pks.dedup();
    let divs: Vec<i64> = divisors(p).into_iter().filter(|&d| d > 1).collect();
    Ok((pks == divs, format!("p_k values {pks:?}, divisors > 1 of {p}: {divs:?}")))
}

fn cycle_product_check(n: i64) -> Outcome {
    let mut errs = Vec::new();
    let target = (2 * n + 1).abs() as f64;
    for idx in eigenvalue_indices(n)? {
        let (num, den) = cycle_products::<f64>(n, idx.j())?;
        errs.push((num - target).abs());
        errs.push((den - 2.0).abs());
    }
    Ok(max_within(errs, 1e-9))
}

fn gcd_coprime(n: i64) -> Outcome {
    let mut ok = true;
    for idx in eigenvalue_indices(n)? {
        ok &= order_coprime_to_torus_determinant(n, idx.j())?;
    }
    Ok((ok, "gcd(2 p_k, 2n+1) = 1 for every j".into()))
}

fn limit_set_minimum(n: i64) -> Outcome {
    let set = limit_set(n)?;
    let expected = ExactLimit {
        log_arg: (2 * n + 1).abs(),
        denom: (4 * n + 1).abs(),
    };
    let min_value = set.limits.iter().map(|l| l.value::<f64>()).fold(f64::INFINITY, f64::min);
    let ok = set.minimum == expected && set.realized && (min_value - expected.value::<f64>()).abs() < 1e-15;
    Ok((ok, format!("minimum {}", set.minimum)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_for_trefoil_side() {
        let report = run_suite(&[1], 0).unwrap();
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(report.checks.iter().any(|c| c.n == Some(1)));
    }

    #[test]
    fn rejects_excluded_parameters() {
        assert_eq!(run_suite(&[1, 0], 0).unwrap_err(), Error::ExcludedTwist(0));
        assert_eq!(run_suite(&[-1], 0).unwrap_err(), Error::ExcludedTwist(-1));
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        assert_eq!(run_suite(&[2], 3).unwrap(), run_suite(&[2], 3).unwrap());
    }
}
