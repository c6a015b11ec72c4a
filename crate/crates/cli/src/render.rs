use std::fmt::Write;

use coms_core::axioms::{AxiomReport, Witness};
use coms_core::{CovectorPoset, FPolynomial, SignSystem};
use serde_json::{json, Value};

fn describe(system: &SignSystem, witness: &Witness) -> String {
    match witness {
        Witness::Pair { x, y } => format!("X = {x}, Y = {y}"),
        Witness::Elimination { x, y, element } => {
            format!("X = {x}, Y = {y}, e = {}", system.ground().label(*element))
        }
        Witness::Single(x) => format!("X = {x}"),
        Witness::MissingZero => "zero vector missing".into(),
    }
}

fn answer(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn check_text(system: &SignSystem, report: &AxiomReport, om: bool) -> String {
    let mut out = format!(
        "elements: {}\ncovectors: {}\n\naxiom  holds  witness\n",
        system.ground().labels().join(","),
        system.len()
    );
    for check in report.checks() {
        let witness = check.witness.as_ref().map(|w| describe(system, w));
        let _ = writeln!(
            out,
            "{:<6} {:<6} {}",
            check.axiom.short_name(),
            answer(check.holds()),
            witness.as_deref().unwrap_or("-")
        );
    }
    let _ = write!(
        out,
        "\nCOM: {}\nOM: {}\n",
        answer(report.is_com()),
        answer(om)
    );
    out
}

fn witness_json(system: &SignSystem, witness: &Witness) -> Value {
    let vectors: Vec<Vec<i8>> = witness.vectors().iter().map(|x| x.to_i8s()).collect();
    let mut value = json!({ "vectors": vectors });
    if let Some(e) = witness.element() {
        value["element"] = json!(system.ground().label(e));
    }
    value
}

pub fn check_json(system: &SignSystem, report: &AxiomReport, om: bool) -> String {
    let axioms: Vec<Value> = report
        .checks()
        .iter()
        .map(|c| {
            json!({
                "axiom": c.axiom,
                "holds": c.holds(),
                "witness": c.witness.as_ref().map(|w| witness_json(system, w)),
            })
        })
        .collect();
    let doc = json!({
        "elements": system.ground().labels(),
        "covectors": system.len(),
        "axioms": axioms,
        "com": report.is_com(),
        "om": om,
    });
    format!("{doc}\n")
}

pub fn poset_text(p: &CovectorPoset) -> String {
    let system = p.system();
    let mut out = format!(
        "elements: {}\nsystem rank: {}{}\n\n",
        system.ground().labels().join(","),
        p.system_rank(),
        if p.is_graded() {
            ""
        } else {
            " (not graded; ranks are chain heights)"
        }
    );
    for (i, x) in p.elements().iter().enumerate() {
        let _ = writeln!(out, "{i}\t{x}\trank {}", p.rank_at(i));
    }
    out.push('\n');
    for &(lo, hi) in p.hasse() {
        let _ = writeln!(out, "{lo} < {hi}");
    }
    out
}

pub fn poset_json(p: &CovectorPoset) -> String {
    let covectors: Vec<Vec<i8>> = p.elements().iter().map(|x| x.to_i8s()).collect();
    let doc = json!({
        "elements": p.system().ground().labels(),
        "covectors": covectors,
        "ranks": p.ranks(),
        "hasse": p.hasse(),
        "graded": p.is_graded(),
        "system_rank": p.system_rank(),
    });
    format!("{doc}\n")
}

pub fn fpoly_json(f: &FPolynomial) -> String {
    let doc = json!({ "coefficients": f.terms(), "rendered": f.render() });
    format!("{doc}\n")
}
