use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use torsionlab::groups::{verify_relations, Presentation, Word};
use torsionlab::invariants::{
    eigenvalue_indices, leading_coefficient_sequence, limit_set, AsymptoticsReport, EigenvalueIndex, ExactLimit,
    TwistKnotParam,
};
use torsionlab::reps::{graph_manifold_rep, metabelian_rep, Rep, RepRecord};
use torsionlab::torsion::{
    abelian_knot_torsion, fox_oracle_torsion_auto, generic_torsion_with, graph_manifold_klein_factor,
    graph_manifold_torsion, klein_bottle_complex, presentation_complex, torus_torsion_check, LiftSelection,
    Provenance, TorsionRecord, TorsionValue, ENGINE_DIM_CAP,
};
use torsionlab::invariants::alexander_torus;
use torsionlab::reps::torus_knot_abelian_rep;
use torsionlab::verify::run_suite;
use torsionlab::{Error, Real};

use crate::report::{Cell, Report};
use crate::CliError;

/// Oracle agreement threshold.
pub const ORACLE_TOL: f64 = 1e-9;
/// Oracles run for `N` up to this (the generic engine's dimension cap).
pub const ORACLE_MAX_N: u64 = (ENGINE_DIM_CAP / 8) as u64;

#[derive(Serialize)]
struct MetabelianRow {
    k: i64,
    u: f64,
    max_residual: f64,
    irreducible: bool,
    metabelian: Option<bool>,
    rep: RepRecord,
}

#[derive(Serialize)]
struct GraphManifoldRow {
    j: i64,
    xi: String,
    pk: i64,
    max_residual: f64,
    irreducible: bool,
    rep: RepRecord,
}

#[derive(Serialize)]
struct RepsJson {
    n: i64,
    num_classes: i64,
    metabelian: Vec<MetabelianRow>,
    graph_manifold: Vec<GraphManifoldRow>,
}

fn load_presentation(path: &Path) -> Result<Presentation, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(Presentation::parse(&text)?)
}

fn residual<T: Real>(rep: &Rep<T>, custom: Option<&Presentation>) -> Result<f64, CliError> {
    let pres = match custom {
        Some(p) if p.num_generators() == rep.presentation().num_generators() => p,
        _ => rep.presentation(),
    };
    Ok(verify_relations(rep, pres)?.max_residual().to_f64_lossy())
}

pub fn reps<T: Real>(n: i64, k: Option<i64>, j: Option<i64>, file: Option<&Path>) -> Result<Report, CliError> {
    let param = TwistKnotParam::new(n)?;
    let custom = file.map(load_presentation).transpose()?;
    if let Some(p) = &custom {
        if p.num_generators() != 2 && p.num_generators() != 4 {
            return Err(CliError::Invalid(format!(
                "presentation file has {} generators; expected 2 (knot group) or 4 (graph manifold)",
                p.num_generators()
            )));
        }
    }
    let ks: Vec<i64> = k.map_or_else(|| (1..=param.num_classes()).collect(), |k| vec![k]);
    let js: Vec<i64> = j.map_or_else(|| (1..=param.num_classes()).collect(), |j| vec![j]);
    let mut metabelian = Vec::new();
    for k in ks {
        let rep = metabelian_rep::<T>(n, k)?;
        let tags = rep.tags();
        metabelian.push(MetabelianRow {
            k,
            u: torsionlab::reps::metabelian_u::<T>(n, k).to_f64_lossy(),
            max_residual: residual(&rep, custom.as_ref())?,
            irreducible: tags.irreducible,
            metabelian: tags.metabelian,
            rep: RepRecord::from(&rep),
        });
    }
    let mut graph = Vec::new();
    for j in js {
        let idx = EigenvalueIndex::new(param, j)?;
        let rep = graph_manifold_rep::<T>(n, j)?;
        graph.push(GraphManifoldRow {
            j,
            xi: idx.xi().to_string(),
            pk: idx.pk(),
            max_residual: residual(&rep, custom.as_ref())?,
            irreducible: rep.tags().irreducible,
            rep: RepRecord::from(&rep),
        });
    }
    let json = RepsJson {
        n,
        num_classes: param.num_classes(),
        metabelian,
        graph_manifold: graph,
    };
    let mut report = Report::new(&json, &["family", "index", "u", "xi", "pk", "max_residual", "irreducible"]);
    for m in &json.metabelian {
        report
            .rows
            .push(vec!["metabelian".into(), m.k.into(), m.u.into(), Cell::Empty, Cell::Empty, m.max_residual.into(), m.irreducible.into()]);
    }
    for g in &json.graph_manifold {
        report.rows.push(vec![
            "graph-manifold".into(),
            g.j.into(),
            Cell::Empty,
            g.xi.clone().into(),
            g.pk.into(),
            g.max_residual.into(),
            g.irreducible.into(),
        ]);
    }
    report.notes.push(format!("n = {n}: {} conjugacy classes", param.num_classes()));
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleRow {
    pub oracle: &'static str,
    pub reference: &'static str,
    pub status: String,
    pub delta: Option<f64>,
}

impl OracleRow {
    fn disagrees(&self) -> bool {
        self.status == "disagree"
    }
}

#[derive(Serialize)]
struct TorsionJson {
    #[serde(flatten)]
    record: TorsionRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracles: Option<Vec<OracleRow>>,
}

fn undefined(e: &Error) -> bool {
    matches!(e, Error::NotAcyclic { .. } | Error::TorsionUndefined(_))
}

fn compare<T: Real>(
    oracle: &'static str,
    reference: &'static str,
    got: Result<TorsionValue<T>, Error>,
    want: Result<TorsionValue<T>, Error>,
) -> Result<OracleRow, CliError> {
    let (status, delta) = match (got, want) {
        (Ok(a), Ok(b)) => {
            let d = a.relative_error(&b).to_f64_lossy();
            (if d <= ORACLE_TOL { "agree" } else { "disagree" }.to_string(), Some(d))
        }
        (Err(a), Err(b)) if undefined(&a) && undefined(&b) => ("both-undefined".into(), None),
        (Err(Error::EngineTooLarge { cap, got }), _) => (format!("skipped: dimension {got} > {cap}"), None),
        (Err(e), _) | (_, Err(e)) if undefined(&e) => ("disagree".into(), None),
        (Err(e), _) | (_, Err(e)) => return Err(e.into()),
    };
    Ok(OracleRow {
        oracle,
        reference,
        status,
        delta,
    })
}

fn oracles<T: Real>(n: i64, j: i64, big_n: u64, seed: u64, closed: &TorsionValue<T>) -> Result<Vec<OracleRow>, CliError> {
    if big_n > ORACLE_MAX_N {
        return Ok(vec![OracleRow {
            oracle: "all",
            reference: "-",
            status: format!("skipped: N > {ORACLE_MAX_N}"),
            delta: None,
        }]);
    }
    let idx = EigenvalueIndex::new(TwistKnotParam::new(n)?, j)?;
    let d = big_n as usize;
    let abelian = abelian_knot_torsion::<T>(&alexander_torus(n)?, idx.xi(), big_n);
    let knot = torus_knot_abelian_rep::<T>(n, idx.xi())?;
    let fox = fox_oracle_torsion_auto(knot.presentation(), &knot, d);
    let engine_knot = presentation_complex(knot.presentation(), &knot, d).and_then(|c| generic_torsion_with(&c, LiftSelection::Random(seed)));
    let kb = graph_manifold_rep::<T>(n, j)?.restrict(Arc::new(Presentation::klein_bottle()), &["x", "y"])?;
    let one = Ok(TorsionValue::one(Provenance::ClosedForm));
    let engine_klein = klein_bottle_complex(&kb, d).and_then(|c| generic_torsion_with(&c, LiftSelection::Random(seed)));
    let klein_closed = graph_manifold_klein_factor::<T>(n, j, big_n);
    let rep = graph_manifold_rep::<T>(n, j)?;
    let (a, b) = (Word::gen(0), Word::gen(1));
    let torus = rep.pullback(Arc::new(Presentation::torus()), &[b.pow(-n).concat(&a), a.pow(2)])?;
    let torus_t = torus_torsion_check(&torus, d);
    let product = match (&fox, &engine_klein) {
        (Ok(f), Ok(k)) => Ok(f.times(k, Provenance::ProductOfPieces)),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    let rows = vec![
        compare("fox-oracle", "closed-form torus-knot factor", fox, abelian.clone())?,
        compare("generic-engine", "closed-form torus-knot factor", engine_knot, abelian)?,
        compare("generic-engine", "Klein-bottle factor = 1", engine_klein.clone(), one.clone())?,
        compare("closed-form", "Klein-bottle factor = 1", klein_closed, one.clone())?,
        compare("torus-check", "JSJ torus torsion = 1", torus_t, one)?,
        compare("fox-oracle x generic-engine", "graph-manifold torsion", product, Ok(*closed))?,
    ];
    Ok(rows)
}

pub fn torsion<T: Real>(n: i64, j: i64, big_n: u64, oracle: bool, seed: u64) -> Result<(Report, bool), CliError> {
    let t = graph_manifold_torsion::<T>(n, j, big_n)?;
    let record = TorsionRecord::new(n, j, big_n, &t);
    let oracle_rows = if oracle && big_n > 0 { Some(oracles(n, j, big_n, seed, &t)?) } else { None };
    let failed = oracle_rows.as_ref().is_some_and(|rows| rows.iter().any(OracleRow::disagrees));
    let json = TorsionJson {
        record: record.clone(),
        oracles: oracle_rows.clone(),
    };
    let mut report = Report::new(&json, &["n", "j", "N", "log_magnitude", "value_re", "value_im", "provenance"]);
    report.rows.push(vec![
        n.into(),
        j.into(),
        big_n.into(),
        record.log_magnitude.into(),
        record.value_re.into(),
        record.value_im.into(),
        record.provenance.as_str().into(),
    ]);
    for r in oracle_rows.iter().flatten() {
        let delta = r.delta.map_or_else(String::new, |d| format!(" delta = {d:.3e}"));
        report.notes.push(format!("{} vs {}: {}{delta}", r.oracle, r.reference, r.status));
    }
    Ok((report, failed))
}

pub fn asymptotics<T: Real>(n: i64, j: Option<i64>, n_max: u64) -> Result<Report, CliError> {
    let js: Vec<i64> = match j {
        Some(j) => vec![j],
        None => eigenvalue_indices(n)?.iter().map(|i| i.j()).collect(),
    };
    let reports: Vec<AsymptoticsReport> = js
        .par_iter()
        .map(|&j| leading_coefficient_sequence::<T>(n, j, n_max))
        .collect::<Result<_, _>>()?;
    let mut report = Report::new(&reports, &["j", "pk", "N", "seq", "limit", "abs_error"]);
    for r in &reports {
        for row in &r.rows {
            report
                .rows
                .push(vec![r.j.into(), r.pk.into(), row.big_n.into(), row.seq.into(), row.limit.into(), row.abs_error.into()]);
        }
        let alpha = r.decay_exponent.map_or_else(|| "n/a".into(), crate::report::sig12);
        report.notes.push(format!("j = {}: limit {} = {}, decay exponent {alpha}", r.j, r.exact_limit, crate::report::sig12(r.predicted_limit)));
    }
    Ok(report)
}

#[derive(Serialize)]
struct LimitRow {
    exact: String,
    log_arg: i64,
    denom: i64,
    value: f64,
}

impl LimitRow {
    fn new<T: Real>(l: &ExactLimit) -> Self {
        LimitRow {
            exact: l.to_string(),
            log_arg: l.log_arg,
            denom: l.denom,
            value: l.value::<T>().to_f64_lossy(),
        }
    }
}

#[derive(Serialize)]
struct LimitsJson {
    n: i64,
    limits: Vec<LimitRow>,
    minimum: LimitRow,
    realized: bool,
}

pub fn limits<T: Real>(n: i64) -> Result<Report, CliError> {
    let set = limit_set(n)?;
    let json = LimitsJson {
        n,
        limits: set.limits.iter().map(LimitRow::new::<T>).collect(),
        minimum: LimitRow::new::<T>(&set.minimum),
        realized: set.realized,
    };
    let mut report = Report::new(&json, &["exact", "log_arg", "denom", "value", "minimum"]);
    for (l, row) in set.limits.iter().zip(&json.limits) {
        report.rows.push(vec![
            row.exact.clone().into(),
            row.log_arg.into(),
            row.denom.into(),
            row.value.into(),
            (*l == set.minimum).into(),
        ]);
    }
    report.notes.push(format!("minimum: {} = {}", json.minimum.exact, crate::report::sig12(json.minimum.value)));
    Ok(report)
}

pub fn verify(ns: &[i64], seed: u64) -> Result<(Report, Vec<String>), CliError> {
    let suite = run_suite(ns, seed)?;
    let failures: Vec<String> = suite
        .failures()
        .map(|c| {
            let at = c.n.map_or_else(String::new, |n| format!(" (n = {n})"));
            format!("{}::{}{at}: {}", c.module, c.check, c.detail)
        })
        .collect();
    let mut report = Report::new(&suite, &["module", "check", "all"]);
    report.headers.extend(ns.iter().map(|n| format!("n={n}")));
    let mut keys: Vec<(&str, &str)> = Vec::new();
    for c in &suite.checks {
        if !keys.contains(&(c.module, c.check)) {
            keys.push((c.module, c.check));
        }
    }
    let status = |module: &str, check: &str, n: Option<i64>| -> Cell {
        suite
            .checks
            .iter()
            .find(|c| c.module == module && c.check == check && c.n == n)
            .map_or(Cell::Text("-".into()), |c| Cell::Text(if c.passed { "PASS" } else { "FAIL" }.into()))
    };
    for (module, check) in keys {
        let mut row = vec![module.into(), check.into(), status(module, check, None)];
        row.extend(ns.iter().map(|&n| status(module, check, Some(n))));
        report.rows.push(row);
    }
    report.notes.push(format!(
        "{} of {} checks passed",
        suite.checks.len() - failures.len(),
        suite.checks.len()
    ));
    Ok((report, failures))
}
