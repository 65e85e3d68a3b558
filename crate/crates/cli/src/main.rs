use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cornerideal::betti::betti_koszul;
use cornerideal::combinatorics::{cycle_binomial, enumerate_cycles, toric_ideal, Cycle, IntervalGraph, MinorCollection};
use cornerideal::fibers::{certify_connected, fiber_connected, ContingencyTable, MoveBasis};
use cornerideal::hilbert::corner_interval_hilbert_formula;
use cornerideal::primes::{is_radical_corner, minimal_primes_with, MinimalPrimeOptions};
use cornerideal::verify::{run_check, CHECKS, DEFAULT_SEED};
use cornerideal::{Caps, Error, Polynomial, Ring};

#[derive(Parser)]
#[command(name = "cornerideal", version, about = "Binomial ideals of corner-interval 2-minors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// JSON file with caps (degreeCap, pairCap, bfsCap, memoryCap, ...).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    cap_degree: Option<usize>,
    #[arg(long, global = true)]
    cap_pairs: Option<usize>,
    #[arg(long, global = true)]
    cap_bfs: Option<usize>,
    #[arg(long, global = true)]
    cap_memory: Option<usize>,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Intervals, interval graph, chordless cycles, I(C) and J_C.
    Analyze {
        #[arg(long)]
        input: PathBuf,
    },
    /// Minimal primes P_W with their generators.
    Primes {
        #[arg(long)]
        input: PathBuf,
        /// Test every admissible set instead of the corner shortcut.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Radicality of a corner collection, with a witnessing cycle.
    Radical {
        #[arg(long)]
        input: PathBuf,
    },
    /// Hilbert numerator formula for all corner-interval minors of m×n.
    Hilbert {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Graded Betti table and regularity of S/I(C).
    Betti {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_hom: Option<usize>,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Fiber connectivity of two tables under the moves of C.
    Connect {
        #[arg(long)]
        input: PathBuf,
        /// JSON {"u": {"cells": [[i, j, v], ...]}, "v": {"cells": [...]}}.
        #[arg(long)]
        tables: PathBuf,
    },
    /// Run the acceptance checks and print a pass/fail matrix.
    Verify {
        /// Restrict to these check ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

enum Failure {
    Engine(Error),
    Io(String),
    Checks(Vec<u8>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Validation(_) | Error::NotAdmissible(_) => 2,
        Error::ResourceCap { .. } | Error::MemoryCap { .. } => 3,
        _ => 4,
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn caps(g: &Global) -> Result<Caps, Failure> {
    let mut caps = match &g.config {
        Some(p) => serde_json::from_str(&read(p)?).map_err(|e| Error::Parse(format!("config: {e}")))?,
        None => Caps::default(),
    };
    let set = |slot: &mut usize, v: Option<usize>| {
        if let Some(v) = v {
            *slot = v;
        }
    };
    set(&mut caps.degree_cap, g.cap_degree);
    set(&mut caps.pair_cap, g.cap_pairs);
    set(&mut caps.bfs_cap, g.cap_bfs);
    set(&mut caps.memory_cap, g.cap_memory);
    caps.validate()?;
    Ok(caps)
}

fn collection(path: &Path) -> Result<MinorCollection, Failure> {
    Ok(MinorCollection::parse_json(&read(path)?)?)
}

fn render_gens(ring: &Ring, gens: &[Polynomial]) -> Vec<String> {
    let order = ring.grevlex();
    let mut out: Vec<String> = gens.iter().map(|g| ring.render(&g.monic(&order), &order)).collect();
    out.sort();
    out
}

fn cycle_label(s: &Cycle) -> String {
    s.h.iter()
        .zip(&s.v)
        .map(|(h, v)| format!("H{} V{}", h + 1, v + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn analyze(c: &MinorCollection, caps: &Caps) -> Result<Value, Failure> {
    let g = IntervalGraph::new(c);
    let ring = c.ring();
    let interval = |iv: &cornerideal::combinatorics::Interval| iv.cells.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let longest = 2 * g.h.len().min(g.v.len());
    let cycles = if longest >= 4 {
        enumerate_cycles(&g, longest, true, caps)?
    } else {
        Vec::new()
    };
    let j = toric_ideal(c, None, caps)?;
    Ok(json!({
        "collection": c.to_json(),
        "vertical": g.v.iter().map(interval).collect::<Vec<_>>(),
        "horizontal": g.h.iter().map(interval).collect::<Vec<_>>(),
        "edges": g.edges().iter().map(|&(i, j, x)| json!([format!("H{}", i + 1), format!("V{}", j + 1), x.to_string()])).collect::<Vec<_>>(),
        "chordlessCycles": cycles.iter().map(|s| json!({
            "nodes": cycle_label(s),
            "binomial": render_gens(&ring, &[cycle_binomial(s, &g, &ring)])[0],
        })).collect::<Vec<_>>(),
        "ideal": render_gens(&ring, c.ideal().gens()),
        "toric": render_gens(&ring, j.gens()),
    }))
}

fn analyze_text(v: &Value) -> String {
    let list = |key: &str| v[key].as_array().cloned().unwrap_or_default();
    let mut out = String::new();
    out.push_str(&format!("vertical intervals: {}\n", list("vertical").len()));
    for (k, iv) in list("vertical").iter().enumerate() {
        out.push_str(&format!("  V{}: {}\n", k + 1, join(iv)));
    }
    out.push_str(&format!("horizontal intervals: {}\n", list("horizontal").len()));
    for (k, iv) in list("horizontal").iter().enumerate() {
        out.push_str(&format!("  H{}: {}\n", k + 1, join(iv)));
    }
    out.push_str("interval graph edges:\n");
    for e in list("edges") {
        out.push_str(&format!("  {} - {} at {}\n", str_of(&e[0]), str_of(&e[1]), str_of(&e[2])));
    }
    out.push_str(&format!("chordless cycles: {}\n", list("chordlessCycles").len()));
    for s in list("chordlessCycles") {
        out.push_str(&format!("  {}: {}\n", str_of(&s["nodes"]), str_of(&s["binomial"])));
    }
    out.push_str(&format!("I(C): {}\n", join(&v["ideal"])));
    out.push_str(&format!("J_C: {}\n", join(&v["toric"])));
    out
}

fn str_of(v: &Value) -> String {
    v.as_str().map(String::from).unwrap_or_else(|| v.to_string())
}

fn join(v: &Value) -> String {
    v.as_array().map(|a| a.iter().map(str_of).collect::<Vec<_>>().join(", ")).unwrap_or_default()
}

fn primes(c: &MinorCollection, exhaustive: bool, caps: &Caps) -> Result<Value, Failure> {
    let ring = c.ring();
    let opts = MinimalPrimeOptions {
        corner_shortcut: !exhaustive,
    };
    let ps = minimal_primes_with(c, caps, opts)?;
    Ok(json!({
        "count": ps.len(),
        "components": ps.iter().map(|p| json!({
            "w": p.w.cells().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "variableFree": p.w.is_empty(),
            "variableIdeal": p.is_variable_ideal(),
            "generators": render_gens(&ring, p.generators.gens()),
        })).collect::<Vec<_>>(),
    }))
}

fn primes_text(v: &Value) -> String {
    let mut out = format!("minimal primes: {}\n", v["count"]);
    for p in v["components"].as_array().into_iter().flatten() {
        let tag = if p["variableFree"] == json!(true) { " (toric component J_C)" } else { "" };
        out.push_str(&format!("W = {{{}}}{tag}\n  {}\n", join(&p["w"]), join(&p["generators"])));
    }
    out
}

fn radical(c: &MinorCollection, caps: &Caps) -> Result<Value, Failure> {
    let radical = is_radical_corner(c)?;
    let mut witness = Value::Null;
    if !radical {
        let g = IntervalGraph::new(c);
        let (h1, v1) = (g.h1(), g.v1());
        let longest = 2 * g.h.len().min(g.v.len());
        let cycle = enumerate_cycles(&g, longest, true, caps)?
            .into_iter()
            .filter(|s| h1.is_none_or(|h| !s.meets_h(h)) && v1.is_none_or(|v| !s.meets_v(v)))
            .min_by_key(|s| (s.len(), s.clone()));
        if let Some(s) = cycle {
            witness = json!({
                "nodes": cycle_label(&s),
                "cells": s.cells(&g).iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            });
        }
    }
    Ok(json!({ "radical": radical, "witness": witness }))
}

fn radical_text(v: &Value) -> String {
    if v["radical"] == json!(true) {
        "radical: yes\n".into()
    } else {
        format!(
            "radical: no\nwitness cycle: {} ({})\n",
            str_of(&v["witness"]["nodes"]),
            join(&v["witness"]["cells"])
        )
    }
}

fn connect(c: &MinorCollection, tables: &str, caps: &Caps) -> Result<Value, Failure> {
    let doc: Value = serde_json::from_str(tables).map_err(|e| Error::Parse(format!("tables: {e}")))?;
    let table = |k: &str| -> Result<ContingencyTable, Failure> {
        let part = doc.get(k).ok_or_else(|| Error::Parse(format!("tables: missing \"{k}\"")))?;
        Ok(ContingencyTable::parse_json(&part.to_string())?)
    };
    let (u, v) = (table("u")?, table("v")?);
    let b = MoveBasis::new(c);
    let fiber = fiber_connected(&u, &v, &b, caps.bfs_cap)?;
    let certificate = if c.is_corner() {
        serde_json::to_value(certify_connected(&u, &v, c, caps)?).expect("serializable")
    } else {
        Value::Null
    };
    Ok(json!({ "fiber": fiber, "certificate": certificate }))
}

fn connect_text(v: &Value) -> String {
    let mut out = format!("verdict: {}\n", str_of(&v["fiber"]["verdict"]));
    if let Some(w) = v["fiber"]["witness"].as_array() {
        out.push_str(&format!(
            "witness: {} move(s) [{}]\n",
            w.len(),
            w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        ));
    }
    if let Some(r) = v["fiber"]["reason"].as_str() {
        out.push_str(&format!("reason: {r}\n"));
    }
    out.push_str(&format!("explored: {}\n", v["fiber"]["explored"]));
    if !v["certificate"].is_null() {
        out.push_str(&format!("certificate: {}\n", str_of(&v["certificate"]["verdict"])));
    }
    out
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let caps = caps(&cli.global)?;
    let json_out = cli.global.format == Format::Json;
    let (value, text): (Value, String) = match &cli.command {
        Command::Analyze { input } => {
            let v = analyze(&collection(input)?, &caps)?;
            let t = analyze_text(&v);
            (v, t)
        }
        Command::Primes { input, exhaustive } => {
            let v = primes(&collection(input)?, *exhaustive, &caps)?;
            let t = primes_text(&v);
            (v, t)
        }
        Command::Radical { input } => {
            let v = radical(&collection(input)?, &caps)?;
            let t = radical_text(&v);
            (v, t)
        }
        Command::Hilbert { m, n } => {
            let r = corner_interval_hilbert_formula(*m, *n, &caps)?;
            let t = format!(
                "lhs: {}\nrhs: {}\nequal: {}\nrhs with corrected tail: {}\nequal with corrected tail: {}\n{}",
                r.lhs,
                r.rhs,
                r.holds,
                r.rhs_sequence,
                r.sequence_holds,
                r.note.as_deref().map(|s| format!("note: {s}\n")).unwrap_or_default()
            );
            (serde_json::to_value(&r).expect("serializable"), t)
        }
        Command::Betti { input, max_hom, max_degree } => {
            let c = collection(input)?;
            let t = betti_koszul(&c.ideal(), *max_hom, *max_degree, &caps)?;
            let text = format!(
                "{}regularity: {}{}\n",
                t.render(),
                t.regularity(),
                if t.truncated { " (truncated)" } else { "" }
            );
            (t.to_json(), text)
        }
        Command::Connect { input, tables } => {
            let v = connect(&collection(input)?, &read(tables)?, &caps)?;
            let t = connect_text(&v);
            (v, t)
        }
        Command::Verify { only } => {
            let mut rows = Vec::new();
            let mut failed = Vec::new();
            let mut text = String::new();
            for (id, _, _) in CHECKS {
                if !only.is_empty() && !only.contains(&id) {
                    continue;
                }
                let out = run_check(id, &caps, cli.global.seed)?;
                if !json_out {
                    println!("{out}");
                }
                if !out.pass {
                    failed.push(id);
                }
                rows.push(out);
            }
            text.push_str(&format!("{}/{} checks pass\n", rows.len() - failed.len(), rows.len()));
            let v = serde_json::to_value(&rows).expect("serializable");
            emit(json_out, &v, &text);
            return if failed.is_empty() { Ok(()) } else { Err(Failure::Checks(failed)) };
        }
    };
    emit(json_out, &value, &text);
    Ok(())
}

fn emit(json_out: bool, v: &Value, text: &str) {
    if json_out {
        println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
    } else {
        print!("{text}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Checks(ids)) => {
            eprintln!("failing checks: {ids:?}");
            ExitCode::from(1)
        }
    }
}
