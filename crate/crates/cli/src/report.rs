//! JSON and CSV renderings of library results.

use serde_json::{json, Map, Value};

use qgwalk_core::dual::{DualLabel, EpsilonVector};
use qgwalk_core::idempotents::{IdempotentSpec, VerifiedIdempotent};
use qgwalk_core::walks::{CutoffRow, EvidenceStatus, LimitClassification, Outcome, WalkReport};

use crate::error::Result;

pub fn spec_json(spec: &IdempotentSpec) -> Map<String, Value> {
    let v = match spec {
        IdempotentSpec::Haar => json!({"outcome": "haar"}),
        IdempotentSpec::HGamma(g) => json!({
            "outcome": "h_gamma",
            "generators": g.generators(),
            "order": g.order(),
        }),
        IdempotentSpec::HGammaL { q, l } => json!({"outcome": "h_gamma_l", "q": q, "l": l}),
        IdempotentSpec::HGammaLTau { p, q, l, tau } => json!({
            "outcome": "h_gamma_l_tau",
            "p": p,
            "q": q,
            "l": l,
            "tau": tau.entries(),
        }),
        IdempotentSpec::Pal(i) => json!({"outcome": "pal", "index": i}),
    };
    match v {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

fn epsilon_json(eps: &EpsilonVector) -> Value {
    let ones: Vec<[usize; 2]> = eps.ones().map(|(i, j)| [i, j]).collect();
    json!({"ones": ones, "xhat": eps.get(DualLabel::XHat)})
}

pub fn outcome_json(outcome: &Outcome) -> Map<String, Value> {
    match outcome {
        Outcome::ConvergesToHaar => spec_json(&IdempotentSpec::Haar),
        Outcome::ConvergesTo(spec) => spec_json(spec),
        Outcome::ConvergesToDual(eps) => {
            let mut m = Map::new();
            m.insert("outcome".into(), "dual_idempotent".into());
            m.insert("epsilon".into(), epsilon_json(eps));
            m
        }
        Outcome::Diverges { period } => {
            let mut m = Map::new();
            m.insert("outcome".into(), "diverges".into());
            m.insert("period".into(), json!(period));
            m
        }
    }
}

pub fn classification_json(c: &LimitClassification) -> Value {
    let mut m = outcome_json(&c.outcome);
    let evidence: Vec<Value> = c
        .evidence
        .iter()
        .map(|e| {
            json!({
                "label": e.label,
                "ratio_modulus": e.ratio.norm(),
                "equals_one": e.status == EvidenceStatus::EqualsOne,
                "status": e.status.to_string(),
            })
        })
        .collect();
    m.insert("evidence".into(), evidence.into());
    m.insert("branch".into(), c.branch.clone().into());
    m.insert("notes".into(), json!(c.notes));
    Value::Object(m)
}

/// Sidecar metadata for a trace: group, steps, tolerance and the outcome.
pub fn meta_json(report: &WalkReport, tol: f64) -> Value {
    let mut m = outcome_json(&report.classification.outcome);
    m.insert("group".into(), report.group.clone().into());
    if let Some(n) = report.n {
        m.insert("n".into(), n.into());
    }
    m.insert("k_max".into(), report.steps.len().into());
    m.insert("tol".into(), tol.into());
    m.insert("branch".into(), report.classification.branch.clone().into());
    m.insert("notes".into(), json!(report.classification.notes));
    Value::Object(m)
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("ASCII output"))
}

pub fn trace_csv(report: &WalkReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "qtv", "lower", "upper"])?;
    for s in &report.steps {
        w.write_record([
            s.k.to_string(),
            s.qtv.to_string(),
            s.lower.to_string(),
            s.upper.to_string(),
        ])?;
    }
    finish(w)
}

pub fn cutoff_csv(rows: &[CutoffRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "c",
        "k",
        "qtv",
        "lower",
        "upper_sharp",
        "upper_theorem",
    ])?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.c.to_string(),
            r.k.to_string(),
            r.qtv.to_string(),
            r.bounds.lower.to_string(),
            r.bounds.upper_sharp.to_string(),
            r.bounds.upper_theorem.to_string(),
        ])?;
    }
    finish(w)
}

pub fn idempotents_json(n: usize, list: &[VerifiedIdempotent]) -> Value {
    let entries: Vec<Value> = list
        .iter()
        .map(|v| {
            let mut m = spec_json(&v.spec);
            let kind = m.remove("outcome").expect("tagged");
            m.insert("type".into(), kind);
            m.insert("idempotent".into(), v.idempotent.into());
            m.insert("central".into(), v.central.into());
            Value::Object(m)
        })
        .collect();
    json!({"n": n, "count": entries.len(), "idempotents": entries})
}
