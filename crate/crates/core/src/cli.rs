//! Command-line front end. Every command builds a canonical JSON document;
//! CSV and pretty output are rendered from that document.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chars::{
    alt_class_polys, char_table, class_polys, sigma, sign_base, tau_char_general, Convention,
};
use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::hecke::{a_elem, b_elem, HeckeElem};
use crate::scalars::json::{ratfunc_from_json, ratfunc_to_json, tower_from_json, tower_to_json};
use crate::scalars::pretty::render_tower;
use crate::specht::{char_alt, char_split, char_t, SplitSign};
use crate::symgroup::{format_word, parse_word, Permutation, StepKind};
use crate::verify::{run_suite, VerifyOptions};

/// Largest `n` accepted without `--force`.
pub const MAX_N: usize = 12;

/// Directory for persisted documents.
pub const CACHE_ENV: &str = "ALT_HECKE_CACHE";

#[derive(Parser, Debug)]
#[command(
    name = "alt-hecke",
    version,
    about = "Irreducible characters of alternating Hecke algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Sign normalisation of τ-characters: `oracle` or `paper`.
    #[arg(long, global = true, default_value = "oracle")]
    pub convention: Convention,
    /// Allow n above the resource guard.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    T,
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character table of the alternating Hecke algebra.
    Table {
        /// Degree n of the symmetric group S_n.
        #[arg(short)]
        n: usize,
    },
    /// `χ^λ` on `T_w`, `A_w` or `B_w`; with `--sign`, the split characters.
    Char {
        /// Partition, e.g. `3,2,1`.
        #[arg(long)]
        shape: String,
        /// 1-based generator word, e.g. `1,2,1`.
        #[arg(long, default_value = "")]
        word: String,
        /// Basis element the character is evaluated on.
        #[arg(long, value_enum, default_value_t = BasisKind::T)]
        basis: BasisKind,
        /// Split character(s) for a self-conjugate shape.
        #[arg(long, value_enum)]
        sign: Option<SignArg>,
    },
    /// `χ^λ(T_w τ)` for self-conjugate `λ`, with the recursion path.
    TauChar {
        /// Partition, e.g. `3,2,1`.
        #[arg(long)]
        shape: String,
        /// 1-based generator word, e.g. `1,2,1`.
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Class polynomials of `w`, and the alternating ones for even `w`.
    Classpoly {
        /// Degree n of the symmetric group S_n.
        #[arg(short)]
        n: usize,
        /// 1-based generator word, e.g. `1,2,1`.
        #[arg(long, default_value = "")]
        word: String,
    },
    /// The A- or B-basis in T-coordinates.
    Basis {
        /// Degree n of the symmetric group S_n.
        #[arg(short)]
        n: usize,
        /// Which basis to expand.
        #[arg(long, value_enum, default_value_t = BasisKind::B)]
        which: BasisKind,
    },
    /// Runs verification suites; exit status 0 iff every check passes.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest n the suites sweep (each suite caps it further).
        #[arg(short, default_value_t = 5)]
        n: usize,
        /// Random cases for the Greene suite.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        /// RNG seed for random cases.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A rendered document and whether every requested check passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn guard(n: usize, force: bool) -> Result<()> {
    if n > MAX_N && !force {
        return Err(Error::ResourceGuard { n, max: MAX_N });
    }
    Ok(())
}

fn meta(cli: &Cli, command: &str, extra: Value) -> Value {
    let mut m = json!({
        "command": command,
        "convention": cli.convention.name(),
        "zeta": sign_base(cli.convention),
    });
    if let (Value::Object(m), Value::Object(e)) = (&mut m, extra) {
        m.extend(e);
    }
    m
}

fn perm_json(w: &Permutation) -> Value {
    json!({ "one_line": w.one_line(), "word": format_word(&w.reduced_word()) })
}

fn parse_shape_word(shape: &str, word: &str, force: bool) -> Result<(Partition, Permutation)> {
    let lam = Partition::parse(shape)?;
    guard(lam.size(), force)?;
    let w = Permutation::from_word(lam.size(), &parse_word(word)?)?;
    Ok((lam, w))
}

/// Reads `key` from the cache directory, or builds and stores it.
fn cached_document(key: &str, build: impl FnOnce() -> Result<Value>) -> Result<Value> {
    let Some(dir) = std::env::var_os(CACHE_ENV).map(PathBuf::from) else {
        return build();
    };
    let path = dir.join(format!("{key}.json"));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(v) = serde_json::from_str(&text) {
            return Ok(v);
        }
    }
    let doc = build()?;
    std::fs::create_dir_all(&dir).map_err(|e| Error::Io(e.to_string()))?;
    std::fs::write(&path, canonical(&doc)).map_err(|e| Error::Io(e.to_string()))?;
    Ok(doc)
}

fn canonical(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serialisable document");
    s.push('\n');
    s
}

fn csv_text(records: &[Vec<String>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    for r in records {
        w.write_record(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

fn tower_text(v: &Value) -> Result<String> {
    Ok(render_tower(&tower_from_json(v)?))
}

fn str_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn table_doc(cli: &Cli, n: usize) -> Result<Value> {
    let key = format!("table-n{n}-{}", cli.convention.name());
    cached_document(&key, || {
        let t = char_table(n, cli.convention)?;
        let cols: Vec<Value> = t
            .cols
            .iter()
            .map(|(c, w)| json!({ "label": c.to_string(), "rep": perm_json(w) }))
            .collect();
        let rows: Vec<Value> = t
            .rows
            .iter()
            .zip(&t.cells)
            .map(|(r, cells)| json!({ "label": r.to_string(), "cells": cells.iter().map(tower_to_json).collect::<Vec<_>>() }))
            .collect();
        Ok(json!({ "meta": meta(cli, "table", json!({ "n": n })), "columns": cols, "rows": rows }))
    })
}

fn render_table(doc: &Value, format: Format) -> Result<String> {
    let cols: Vec<String> = doc["columns"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|c| str_of(&c["label"]))
        .collect();
    let mut records = vec![std::iter::once("character".to_string())
        .chain(cols.iter().cloned())
        .collect::<Vec<_>>()];
    for row in doc["rows"].as_array().into_iter().flatten() {
        let mut rec = vec![str_of(&row["label"])];
        for cell in row["cells"].as_array().into_iter().flatten() {
            rec.push(tower_text(cell)?);
        }
        records.push(rec);
    }
    match format {
        Format::Csv => csv_text(&records),
        _ => {
            let mut out = format!("# {}\n", doc["meta"]);
            for rec in &records[1..] {
                for (col, v) in cols.iter().zip(&rec[1..]) {
                    out.push_str(&format!("χ{} at {col} = {v}\n", rec[0]));
                }
            }
            Ok(out)
        }
    }
}

fn char_doc(
    cli: &Cli,
    shape: &str,
    word: &str,
    basis: BasisKind,
    sign: Option<SignArg>,
) -> Result<Value> {
    let (lam, w) = parse_shape_word(shape, word, cli.force)?;
    let x: HeckeElem = match basis {
        BasisKind::T => HeckeElem::t(&w),
        BasisKind::A => (*a_elem(&w)).clone(),
        BasisKind::B => (*b_elem(&w)).clone(),
    };
    let basis_name = format!("{basis:?}");
    let mut values = serde_json::Map::new();
    match sign {
        None if basis == BasisKind::T => {
            values.insert("chi".into(), tower_to_json(&char_t(&lam, &w)?));
        }
        None => {
            values.insert("chi_alt".into(), tower_to_json(&char_alt(&lam, &x)?));
        }
        Some(s) => {
            for (name, sg) in [("plus", SplitSign::Plus), ("minus", SplitSign::Minus)] {
                if s == SignArg::Both || (s == SignArg::Plus) == (sg == SplitSign::Plus) {
                    values.insert(name.into(), tower_to_json(&char_split(&lam, sg, &x)?));
                }
            }
        }
    }
    let extra = json!({
        "n": lam.size(),
        "shape": lam.to_string(),
        "input_word": word,
        "element": perm_json(&w),
        "basis": basis_name,
    });
    Ok(json!({ "meta": meta(cli, "char", extra), "values": values }))
}

fn tau_doc(cli: &Cli, shape: &str, word: &str) -> Result<Value> {
    let (lam, w) = parse_shape_word(shape, word, cli.force)?;
    let t = tau_char_general(&lam, &w, cli.convention)?;
    let (_, d) = lam.diagonal_hooks()?;
    let m = (lam.size() - d) / 2;
    let path: Vec<Value> = t
        .path
        .iter()
        .map(|st| {
            let kind = match st.kind {
                StepKind::Drop2 => "drop2",
                StepKind::Flat { .. } => "flat",
            };
            json!({ "s": st.s, "kind": kind, "from": perm_json(&st.from), "to": perm_json(&st.to) })
        })
        .collect();
    let extra = json!({
        "n": lam.size(),
        "shape": lam.to_string(),
        "input_word": word,
        "element": perm_json(&w),
        "sigma": sigma(cli.convention, m),
    });
    Ok(json!({
        "meta": meta(cli, "tau-char", extra),
        "value": tower_to_json(&t.value),
        "a": ratfunc_to_json(&t.a),
        "reached_composition": t.sigma,
        "path": path,
    }))
}

fn classpoly_doc(cli: &Cli, n: usize, word: &str) -> Result<Value> {
    guard(n, cli.force)?;
    let w = Permutation::from_word(n, &parse_word(word)?)?;
    let f: Vec<Value> = class_polys(&w)
        .iter()
        .map(|(ct, c)| json!({ "class": ct, "coeff": ratfunc_to_json(c) }))
        .collect();
    let mut doc = json!({ "meta": meta(cli, "classpoly", json!({ "n": n, "element": perm_json(&w) })), "f": f });
    if w.is_even() && n >= 2 {
        let g: Vec<Value> = alt_class_polys(&w)?
            .iter()
            .map(|(c, v)| json!({ "class": c.to_string(), "coeff": ratfunc_to_json(v) }))
            .collect();
        doc["g"] = Value::Array(g);
    }
    Ok(doc)
}

fn basis_doc(cli: &Cli, n: usize, which: BasisKind) -> Result<Value> {
    guard(n, cli.force)?;
    let key = format!("basis-{which:?}-n{n}");
    cached_document(&key, || {
        let mut order = Permutation::all(n);
        order.sort_by_key(Permutation::length);
        let elems: Vec<Value> = order
            .iter()
            .map(|z| {
                let x = match which {
                    BasisKind::T => HeckeElem::t(z),
                    BasisKind::A => (*a_elem(z)).clone(),
                    BasisKind::B => (*b_elem(z)).clone(),
                };
                let terms: Vec<Value> = x
                    .sorted_terms()
                    .into_iter()
                    .map(|(y, c)| json!({ "y": perm_json(y), "coeff": ratfunc_to_json(c) }))
                    .collect();
                json!({ "z": perm_json(z), "terms": terms })
            })
            .collect();
        Ok(
            json!({ "meta": meta(cli, "basis", json!({ "n": n, "which": format!("{which:?}") })), "elements": elems }),
        )
    })
}

fn render_basis(doc: &Value, format: Format) -> Result<String> {
    let which = str_of(&doc["meta"]["which"]);
    let mut records = vec![vec!["z".to_string(), "y".to_string(), "coeff".to_string()]];
    let mut pretty = format!("# {}\n", doc["meta"]);
    for e in doc["elements"].as_array().into_iter().flatten() {
        let z = str_of(&e["z"]["word"]);
        let mut parts = Vec::new();
        for t in e["terms"].as_array().into_iter().flatten() {
            let y = str_of(&t["y"]["word"]);
            let c = ratfunc_from_json(&t["coeff"])?.to_string();
            parts.push(format!("({c})·T[{y}]"));
            records.push(vec![z.clone(), y, c]);
        }
        pretty.push_str(&format!("{which}[{z}] = {}\n", parts.join(" + ")));
    }
    match format {
        Format::Csv => csv_text(&records),
        _ => Ok(pretty),
    }
}

fn verify_doc(cli: &Cli, suite: &str, n: usize, cases: usize, seed: u64) -> Result<(Value, bool)> {
    guard(n, cli.force)?;
    let reports = run_suite(suite, &VerifyOptions { n, cases, seed })?;
    let ok = reports.iter().all(|r| r.passed());
    let extra = json!({ "suite": suite, "n": n, "cases": cases, "seed": seed });
    let doc = json!({
        "meta": meta(cli, "verify", extra),
        "passed": ok,
        "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    Ok((doc, ok))
}

fn render_verify(doc: &Value, format: Format) -> Result<String> {
    let reports = doc["reports"].as_array().cloned().unwrap_or_default();
    if format == Format::Csv {
        let mut records = vec![vec![
            "suite".into(),
            "checks".into(),
            "failed".into(),
            "passed".into(),
        ]];
        for r in &reports {
            records.push(
                ["suite", "checks", "failed", "passed"]
                    .iter()
                    .map(|k| str_of(&r[*k]))
                    .collect(),
            );
        }
        return csv_text(&records);
    }
    let mut out = String::new();
    for r in &reports {
        let status = if r["passed"] == json!(true) {
            "PASS"
        } else {
            "FAIL"
        };
        out.push_str(&format!(
            "{status} {}: {} checks, {} failed\n",
            str_of(&r["suite"]),
            r["checks"],
            r["failed"]
        ));
        for f in r["failures"].as_array().into_iter().flatten() {
            out.push_str(&format!("  failure: {}\n", str_of(f)));
        }
        for nt in r["notes"].as_array().into_iter().flatten() {
            out.push_str(&format!("  note: {}\n", str_of(nt)));
        }
    }
    Ok(out)
}

/// Renders a document of `char`, `tau-char` or `classpoly` as key-value
/// lines, with tower and rational values pretty-printed.
fn render_flat(doc: &Value, format: Format) -> Result<String> {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<Vec<String>>) -> Result<()> {
        let is_tower = v.get("terms").is_some();
        let is_ratfunc = v.get("num").is_some() && v.get("den").is_some();
        if is_tower {
            out.push(vec![prefix.to_string(), tower_text(v)?]);
        } else if is_ratfunc {
            out.push(vec![prefix.to_string(), ratfunc_from_json(v)?.to_string()]);
        } else if let Value::Object(m) = v {
            for (k, x) in m {
                walk(
                    &format!("{prefix}{}{k}", if prefix.is_empty() { "" } else { "." }),
                    x,
                    out,
                )?;
            }
        } else if let (Value::Array(a), true) = (
            v,
            v.as_array().is_some_and(|a| a.iter().any(Value::is_object)),
        ) {
            for (k, x) in a.iter().enumerate() {
                walk(&format!("{prefix}[{k}]"), x, out)?;
            }
        } else {
            out.push(vec![prefix.to_string(), str_of(v)]);
        }
        Ok(())
    }
    let mut records = Vec::new();
    walk("", doc, &mut records)?;
    match format {
        Format::Csv => csv_text(
            &[vec!["key".into(), "value".into()]]
                .into_iter()
                .chain(records)
                .collect::<Vec<_>>(),
        ),
        _ => Ok(records
            .iter()
            .map(|r| format!("{} = {}\n", r[0], r[1]))
            .collect()),
    }
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    let mut ok = true;
    let doc = match &cli.command {
        Command::Table { n } => {
            guard(*n, cli.force)?;
            table_doc(cli, *n)?
        }
        Command::Char {
            shape,
            word,
            basis,
            sign,
        } => char_doc(cli, shape, word, *basis, *sign)?,
        Command::TauChar { shape, word } => tau_doc(cli, shape, word)?,
        Command::Classpoly { n, word } => classpoly_doc(cli, *n, word)?,
        Command::Basis { n, which } => basis_doc(cli, *n, *which)?,
        Command::Verify {
            suite,
            n,
            cases,
            seed,
        } => {
            let (doc, passed) = verify_doc(cli, suite, *n, *cases, *seed)?;
            ok = passed;
            doc
        }
    };
    let text = match (fmt, &cli.command) {
        (Format::Json, _) => canonical(&doc),
        (_, Command::Table { .. }) => render_table(&doc, fmt)?,
        (_, Command::Basis { .. }) => render_basis(&doc, fmt)?,
        (_, Command::Verify { .. }) => render_verify(&doc, fmt)?,
        (_, Command::TauChar { .. }) if fmt == Format::Pretty => {
            let lam = str_of(&doc["meta"]["shape"]);
            let word = str_of(&doc["meta"]["element"]["word"]);
            format!(
                "χ^{lam}(T[{word}]τ) = {}\n{}",
                tower_text(&doc["value"])?,
                render_flat(&doc, fmt)?
            )
        }
        _ => render_flat(&doc, fmt)?,
    };
    Ok(Outcome { text, ok })
}

/// Entry point of the binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
