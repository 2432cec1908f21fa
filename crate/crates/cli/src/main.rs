use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use backedge_cli::emit::{
    emit_object, emit_report, ordered_dot, ordered_json, pretty, tournament_dot, tournament_json,
    Format,
};
use backedge_cli::{input, run_suite, Options, SUITES};
use backedge_core::blockade::{
    check_support_invariance, find_uniform_minor, is_support_uniform, trace, Host, PatternKey,
};
use backedge_core::catalog::{self, NAMES};
use backedge_core::construct::{build_counterexample, build_verified, Construction, ConstructionParams};
use backedge_core::enumerate::{all_tournaments, backedge_census};
use backedge_core::format::{ordered_to_text, tournament_to_text};
use backedge_core::optimal::{
    forest_numbering, interval_violations, min_backedge_numbering, optimal_numberings,
    transitive_bipartition,
};
use backedge_core::patterns::{find_srseh_certificate, verify_certificate};
use backedge_core::search::{
    backedge_to_pure, contains_ordered, contains_subtournament, max_graph_pure_pair,
    max_pure_pair, pure_to_backedge, PurePair,
};
use backedge_core::{backedge_graph, Error, Object};
use clap::{Parser, Subcommand};
use num_rational::Ratio;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "backedge", version, about = "Tournaments, backedge graphs, pure pairs and blockades")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Search budget (certificate subset checks, trace tuples, contractions).
    #[arg(long, global = true, default_value_t = 1 << 22)]
    budget: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a named object, or list the names.
    Catalog { name: Option<String> },
    /// Isomorphism classes of tournaments on n vertices.
    Enumerate {
        n: usize,
        #[arg(long)]
        count: bool,
    },
    /// Backedge graph under a numbering, or every distinct backedge graph.
    Backedges {
        tournament: String,
        /// 1-based labels in order, e.g. 3,1,2.
        #[arg(long)]
        numbering: Option<String>,
    },
    /// A numbering with the fewest backedges.
    OptimalNumbering {
        tournament: String,
        #[arg(long)]
        all: bool,
    },
    /// A numbering whose backedge graph is a forest, and a transitive split.
    ForestNumbering { tournament: String },
    /// Induced copy of a pattern: subtournament or order-preserving.
    Contains { host: String, pattern: String },
    /// Largest pure pair, and its translations under a numbering.
    Purepair {
        tournament: String,
        #[arg(long)]
        numbering: Option<String>,
    },
    /// Search and verify a certificate from numberings and templates.
    Certificate { tournament: String },
    /// Width, respectfulness, uniformity and invariance of a blockade.
    Blockade {
        host: String,
        /// `K:W` for K consecutive blocks of width W, or a blockade file.
        #[arg(long)]
        blocks: String,
        #[arg(long, default_value_t = 2)]
        tau: usize,
        #[arg(long, default_value = "1/2")]
        kappa: String,
        /// Search for a minor of this length.
        #[arg(long)]
        minor: Option<usize>,
        /// Report the trace of this pattern.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Build and verify the blockaded counterexample.
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: String,
        #[arg(long)]
        width: usize,
        /// Resample up to this many times until every required check passes.
        #[arg(long, default_value_t = 1)]
        attempts: usize,
        #[arg(long, value_enum)]
        emit: Option<Format>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-check wall-clock times.
        #[arg(long)]
        timings: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn out(fmt: Format, v: &Value, text: impl FnOnce() -> String) -> Result<()> {
    match fmt {
        Format::Json => print!("{}", pretty(v)),
        Format::Text => print!("{}", text()),
        Format::Dot => bail!(backedge_cli::AppError::UnsupportedFormat(
            "dot is only available for single graphs".into()
        )),
    }
    Ok(())
}

fn labels(mask: u64) -> Vec<usize> {
    (0..64).filter(|v| mask >> v & 1 == 1).map(|v| v + 1).collect()
}

fn pair_json(p: &PurePair) -> Value {
    json!({ "a": labels(p.a), "b": labels(p.b), "kind": p.kind, "order": p.order() })
}

fn parse_ratio(s: &str) -> Result<Ratio<u64>> {
    match s.parse::<Ratio<u64>>() {
        Ok(r) => Ok(r),
        Err(_) => bail!("`{s}` is not a fraction like 1/3"),
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let fmt = cli.format;
    match &cli.cmd {
        Cmd::Catalog { name: None } => out(fmt, &json!(NAMES), || NAMES.join("\n") + "\n")?,
        Cmd::Catalog { name: Some(name) } => print!("{}", emit_object(&catalog::catalog(name)?, fmt)),
        Cmd::Enumerate { n, count } => {
            let all = all_tournaments(*n)?;
            if *count {
                out(fmt, &json!({ "n": n, "count": all.len() }), || format!("{}\n", all.len()))?;
            } else {
                let v = json!({ "n": n, "count": all.len(), "tournaments": all.iter().map(tournament_json).collect::<Vec<_>>() });
                out(fmt, &v, || all.iter().map(tournament_to_text).collect::<Vec<_>>().join("\n"))?;
            }
        }
        Cmd::Backedges { tournament, numbering: Some(nu) } => {
            let t = input::tournament(tournament)?;
            let g = backedge_graph(&t, &input::numbering(nu)?)?;
            print!("{}", emit_object(&Object::Ordered(g), fmt));
        }
        Cmd::Backedges { tournament, numbering: None } => {
            let census = backedge_census(&input::tournament(tournament)?)?;
            let v = json!({ "count": census.len(), "graphs": census.iter().map(ordered_json).collect::<Vec<_>>() });
            out(fmt, &v, || {
                let mut s = format!("{} distinct backedge graphs\n", census.len());
                for g in &census {
                    s.push('\n');
                    s.push_str(&ordered_to_text(g));
                }
                s
            })?;
        }
        Cmd::OptimalNumbering { tournament, all } => {
            let t = input::tournament(tournament)?;
            let r = min_backedge_numbering(&t)?;
            let g = backedge_graph(&t, &r.numbering)?;
            let every = if *all { Some(optimal_numberings(&t)?) } else { None };
            let violations = interval_violations(&t, &r.numbering)?;
            let v = json!({
                "numbering": r.numbering.to_1based(),
                "backedges": r.backedge_count,
                "optimal": r.optimal,
                "backedge_graph": ordered_json(&g),
                "interval_violations": violations,
                "all": every.as_ref().map(|e| e.iter().map(|n| n.to_1based()).collect::<Vec<_>>()),
            });
            out(fmt, &v, || {
                let mut s = format!(
                    "numbering {:?}\nbackedges {}\nedges {:?}\n",
                    r.numbering.to_1based(),
                    r.backedge_count,
                    g.edges_1based()
                );
                if let Some(e) = &every {
                    s.push_str(&format!("{} optimal numberings\n", e.len()));
                    for n in e {
                        s.push_str(&format!("{:?}\n", n.to_1based()));
                    }
                }
                s
            })?;
        }
        Cmd::ForestNumbering { tournament } => {
            let t = input::tournament(tournament)?;
            let f = forest_numbering(&t)?;
            let split = transitive_bipartition(&t)?;
            let v = json!({
                "numbering": f.as_ref().map(|n| n.to_1based()),
                "transitive_bipartition": split.map(|(a, b)| json!({ "a": labels(a), "b": labels(b) })),
            });
            out(fmt, &v, || {
                format!(
                    "forest numbering: {}\ntransitive split: {}\n",
                    f.as_ref().map_or("none".into(), |n| format!("{:?}", n.to_1based())),
                    split.map_or("none".into(), |(a, b)| format!("{:?} {:?}", labels(a), labels(b)))
                )
            })?;
        }
        Cmd::Contains { host, pattern } => {
            let found = match (input::load(host)?, input::load(pattern)?) {
                (Object::Tournament(g), Object::Tournament(h)) => contains_subtournament(&g, &h),
                (Object::Ordered(g), Object::Ordered(h)) => contains_ordered(&g, &h),
                _ => bail!("host and pattern must both be tournaments or both ordered graphs"),
            };
            let map = found.map(|m| m.iter().map(|v| v + 1).collect::<Vec<_>>());
            out(fmt, &json!({ "found": map.is_some(), "map": map }), || {
                map.as_ref().map_or("none\n".into(), |m| format!("{m:?}\n"))
            })?;
        }
        Cmd::Purepair { tournament, numbering } => {
            let t = input::tournament(tournament)?;
            let p = max_pure_pair(&t)?;
            let mut v = json!({ "pure_pair": p.as_ref().map(pair_json) });
            if let Some(nu) = numbering {
                let nu = input::numbering(nu)?;
                let b = backedge_graph(&t, &nu)?;
                let forward = p.as_ref().map(|p| pure_to_backedge(&t, &nu, p)).transpose()?;
                let graph_pair = max_graph_pure_pair(&b)?;
                let back = graph_pair.as_ref().map(|q| backedge_to_pure(&t, &nu, q)).transpose()?;
                v["to_backedge_positions"] = json!(forward.as_ref().map(pair_json));
                v["backedge_pure_pair_positions"] = json!(graph_pair.as_ref().map(pair_json));
                v["to_tournament"] = json!(back.as_ref().map(pair_json));
            }
            out(fmt, &v, || pretty(&v))?;
        }
        Cmd::Certificate { tournament } => {
            let t = input::tournament(tournament)?;
            let c = find_srseh_certificate(&t, cli.budget)?;
            let failures = c.as_ref().map(|c| verify_certificate(&t, c));
            let v = json!({ "certificate": c, "verification_failures": failures });
            out(fmt, &v, || match &c {
                None => "no certificate (search complete)\n".into(),
                Some(c) => {
                    let mut s = String::new();
                    for (nu, g) in c.numberings.iter().zip(&c.graphs) {
                        s.push_str(&format!("numbering {:?} edges {:?}\n", nu.to_1based(), g.edges_1based()));
                    }
                    for r in &c.assignment {
                        s.push_str(&format!("components {:?} -> {}\n", r.components, r.template.id()));
                    }
                    let f = failures.clone().unwrap_or_default();
                    s.push_str(if f.is_empty() { "verified\n" } else { "NOT verified\n" });
                    s
                }
            })?;
            return Ok(failures.is_none_or(|f| f.is_empty()));
        }
        Cmd::Blockade { host, blocks, tau, kappa, minor, pattern } => {
            let h = match input::load(host)? {
                Object::Tournament(t) => Host::Tournament(t),
                Object::Ordered(g) => Host::Ordered(g),
            };
            let b = input::blockade(blocks, h.n())?;
            let kappa = parse_ratio(kappa)?;
            let uniform = is_support_uniform(&h, &b, *tau, cli.budget)?;
            let invariance = check_support_invariance(&h, &b, kappa, *tau, cli.budget, cli.seed)?;
            let mut v = json!({
                "length": b.len(),
                "width": b.width(),
                "respectful": b.is_respectful(),
                "uniform": uniform.is_ok(),
                "uniformity_violation": uniform.as_ref().err().map(|u| json!({
                    "pattern": key_json(&u.pattern, &h),
                    "missing_support": labels(u.missing),
                })),
                "invariance": invariance,
            });
            if let Some(p) = pattern {
                let j = match input::load(p)? {
                    Object::Tournament(t) => Host::Tournament(t),
                    Object::Ordered(g) => Host::Ordered(g),
                };
                let tr = trace(&h, &b, &j)?;
                v["trace"] = json!(tr.iter().map(|&s| labels(s)).collect::<Vec<_>>());
            }
            if let Some(k) = minor {
                v["minor"] = match find_uniform_minor(&h, &b, *k, *tau, kappa, cli.budget) {
                    Ok(m) => json!({ "blockade": m.blockade.to_text(), "rounds": m.rounds, "invariance": m.invariance }),
                    Err(e @ Error::SearchFailed { .. }) => json!({ "failed": e.to_string() }),
                    Err(e) => return Err(e.into()),
                };
            }
            out(fmt, &v, || pretty(&v))?;
        }
        Cmd::Construct { k, c, width, attempts, emit } => {
            let params = ConstructionParams::new(*k, parse_ratio(c)?, *width, cli.seed)?;
            let (con, tries) = if *attempts > 1 {
                match build_verified(&params, *attempts) {
                    Ok(v) => (v.construction, v.attempts),
                    Err(Error::VerificationFailed { .. }) => (build_counterexample(&params)?, *attempts),
                    Err(e) => return Err(e.into()),
                }
            } else {
                (build_counterexample(&params)?, 1)
            };
            emit_construction(&con, tries, emit.unwrap_or(fmt))?;
            return Ok(con.report.passed());
        }
        Cmd::Verify { suite, out: path, timings } => {
            let opts = Options { seed: cli.seed, jobs: cli.jobs, budget: cli.budget, timings: *timings };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let reports = names
                .iter()
                .map(|s| run_suite(s, &opts))
                .collect::<Result<Vec<_>, _>>()?;
            let text = match fmt {
                Format::Json if reports.len() == 1 => emit_report(&reports[0], fmt)?,
                Format::Json => pretty(&serde_json::to_value(&reports)?),
                _ => reports.iter().map(|r| emit_report(r, fmt)).collect::<Result<Vec<_>, _>>()?.join("\n"),
            };
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => print!("{text}"),
            }
            return Ok(reports.iter().all(|r| r.passed()));
        }
    }
    Ok(true)
}

fn key_json(k: &PatternKey, host: &Host) -> Value {
    match k.pattern(matches!(host, Host::Tournament(_))) {
        Host::Tournament(t) => tournament_json(&t),
        Host::Ordered(g) => ordered_json(&g),
    }
}

fn emit_construction(c: &Construction, attempts: usize, fmt: Format) -> Result<()> {
    match fmt {
        Format::Json => {
            let v = json!({
                "attempts": attempts,
                "j": ordered_json(&c.j),
                "blockade": c.blockade.blocks().iter().map(|&b| labels(b)).collect::<Vec<_>>(),
                "g": tournament_json(&c.g),
                "report": c.report,
            });
            print!("{}", pretty(&v));
        }
        Format::Dot => {
            print!("{}", ordered_dot(&c.j));
            print!("{}", tournament_dot(&c.g));
        }
        Format::Text => {
            print!("{}", ordered_to_text(&c.j));
            print!("{}", c.blockade.to_text());
            print!("{}", tournament_to_text(&c.g));
            for chk in &c.report.checks {
                println!("{:?} {} {}: {}", chk.status, chk.id, chk.statement, chk.witness);
            }
            println!("attempts {attempts}; {}", if c.report.passed() { "passed" } else { "failed" });
        }
    }
    Ok(())
}
