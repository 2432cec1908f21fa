//! Serialization of objects and reports. Labels are 1-based throughout.

use std::fmt::Write as _;

use backedge_core::format::{ordered_to_text, tournament_to_text};
use backedge_core::{Object, OrderedGraph, Tournament};
use serde_json::{json, Value};

use crate::error::AppError;
use crate::report::{Status, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

pub fn tournament_json(t: &Tournament) -> Value {
    let arcs: Vec<[usize; 2]> = t.arcs().map(|(a, b)| [a + 1, b + 1]).collect();
    json!({ "kind": "tournament", "n": t.n(), "arcs": arcs })
}

pub fn ordered_json(g: &OrderedGraph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges_1based().into_iter().map(|(a, b)| [a, b]).collect();
    json!({ "kind": "ordered", "n": g.n(), "edges": edges })
}

pub fn object_json(o: &Object) -> Value {
    match o {
        Object::Tournament(t) => tournament_json(t),
        Object::Ordered(g) => ordered_json(g),
    }
}

pub fn tournament_dot(t: &Tournament) -> String {
    let mut s = String::from("digraph T {\n");
    for v in 1..=t.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (a, b) in t.arcs() {
        let _ = writeln!(s, "  {} -> {};", a + 1, b + 1);
    }
    s.push_str("}\n");
    s
}

/// Positions are pinned left to right so viewers keep the order.
pub fn ordered_dot(g: &OrderedGraph) -> String {
    let mut s = String::from("graph B {\n  rankdir=LR;\n  { rank=same;");
    for v in 1..=g.n() {
        let _ = write!(s, " {v};");
    }
    s.push_str(" }\n");
    for v in 1..g.n() {
        let _ = writeln!(s, "  {} -- {} [style=invis];", v, v + 1);
    }
    for (a, b) in g.edges_1based() {
        let _ = writeln!(s, "  {a} -- {b};");
    }
    s.push_str("}\n");
    s
}

pub fn emit_object(o: &Object, f: Format) -> String {
    match (o, f) {
        (_, Format::Json) => pretty(&object_json(o)),
        (Object::Tournament(t), Format::Text) => tournament_to_text(t),
        (Object::Ordered(g), Format::Text) => ordered_to_text(g),
        (Object::Tournament(t), Format::Dot) => tournament_dot(t),
        (Object::Ordered(g), Format::Dot) => ordered_dot(g),
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn emit_report(r: &VerificationReport, f: Format) -> Result<String, AppError> {
    match f {
        Format::Json => Ok(pretty(&serde_json::to_value(r).expect("reports serialize"))),
        Format::Text => {
            let mut s = format!("suite {} (version {}, seed {})\n", r.suite, r.version, r.seed);
            for c in &r.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                let _ = writeln!(s, "{tag} {} {}", c.id, c.statement);
                if c.status == Status::Fail {
                    let _ = writeln!(s, "     {}", c.witness);
                }
            }
            let _ = writeln!(s, "{}", if r.passed() { "suite passed" } else { "suite failed" });
            Ok(s)
        }
        Format::Dot => Err(AppError::UnsupportedFormat("dot output of a report".into())),
    }
}
