//! Text and JSON rendering of check reports.

use pickylab::report::{CheckReport, Verdict};
use serde_json::{json, Map, Value};

/// A check together with whether its verdict is the expected one.
pub struct Outcome {
    pub report: CheckReport,
    pub expected: bool,
}

/// Strong-form failures are expected exactly on bad classes; conjectures stated as questions
/// report failures as findings.
pub fn expected(r: &CheckReport, has_bad: bool) -> bool {
    match r.verdict {
        Verdict::Holds | Verdict::VacuousPass | Verdict::Skipped => true,
        Verdict::HoldsNonstrictOnly => r.failures().iter().all(|i| match i.kind.as_deref() {
            Some(k) => k == "bad",
            None => has_bad,
        }),
        Verdict::Fails => r.name == "mixed-order",
    }
}

pub fn print_text(o: &Outcome) {
    let r = &o.report;
    let tag = if o.expected { "" } else { " (unexpected)" };
    println!("{} {}: {}{tag}", r.name, r.target, r.verdict);
    for i in &r.items {
        let mark = if i.passed { "ok  " } else { "FAIL" };
        let kind = i
            .kind
            .as_deref()
            .map(|k| format!(" [{k}]"))
            .unwrap_or_default();
        let status = match i.status {
            Some(s) if !i.passed => format!(" ({s})"),
            _ => String::new(),
        };
        if i.detail.is_empty() {
            println!("  {mark} {}{kind}{status}", i.label);
        } else {
            println!("  {mark} {}{kind}{status}: {}", i.label, i.detail);
        }
    }
    for f in &r.findings {
        println!("  finding: {f}");
    }
    for n in &r.notes {
        println!("  note: {n}");
    }
}

fn check_json(o: &Outcome) -> Value {
    let r = &o.report;
    let mut m = Map::new();
    m.insert("name".into(), json!(r.name));
    m.insert("target".into(), json!(r.target));
    m.insert("verdict".into(), json!(r.verdict));
    m.insert("expected".into(), json!(o.expected));
    let with_matching: Vec<_> = r.items.iter().filter_map(|i| i.matching.as_ref()).collect();
    if let Some(w) = with_matching.iter().find_map(|m| m.witness.as_ref()) {
        m.insert("witness".into(), json!(w));
    }
    if let Some(c) = with_matching.iter().find_map(|m| m.certificate.as_ref()) {
        m.insert("certificate".into(), json!(c));
    }
    m.insert("items".into(), json!(r.items));
    m.insert("findings".into(), json!(r.findings));
    m.insert("notes".into(), json!(r.notes));
    Value::Object(m)
}

pub fn report_json(
    spec: &str,
    prime: Option<u64>,
    outcomes: &[Outcome],
    determinism: Value,
    data: Option<Value>,
) -> Value {
    let mut top = Map::new();
    top.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    top.insert("spec".into(), json!(spec));
    top.insert("prime".into(), json!(prime));
    top.insert(
        "checks".into(),
        Value::Array(outcomes.iter().map(check_json).collect()),
    );
    top.insert("determinism".into(), determinism);
    if let Some(d) = data {
        top.insert("data".into(), d);
    }
    Value::Object(top)
}
