//! `declat`: command-line front end for the lattice toolkit.
//!
//! Exit codes: 0 success (all checks hold or are inapplicable), 1 property
//! failure (theorem counterexample, failed decomposition, search hits),
//! 2 invalid input or usage.

mod render;

use clap::{Parser, Subcommand};
use declat_core::decomp::{self, DecompError, Decomposability};
use declat_core::gen;
use declat_core::ideals::SpectrumReport;
use declat_core::iso;
use declat_core::theorems;
use declat_core::Lattice;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "declat",
    version,
    about = "Finite distributive lattices: ideal spectra, decomposability, theorem sweeps"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Suppress informational headers
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a lattice and summarize its basic classification
    Validate {
        /// Path to a lattice JSON file, or a catalog name (prefix with
        /// "catalog:" to force catalog lookup)
        input: String,
    },
    /// Compute the ideal spectrum (primes, values, specials, polars, ...)
    Spectrum { input: String },
    /// Split an element into disjoint special parts, one per value
    Decompose {
        input: String,
        /// Element label
        element: String,
    },
    /// Run theorem checkers (one id, or the full registry)
    Check {
        input: String,
        /// Theorem id such as T3.1; the whole registry when omitted
        theorem: Option<String>,
        /// Run the whole registry (default when no id is given)
        #[arg(long)]
        all: bool,
        /// Evaluate guarded checkers even on non-decomposable lattices
        #[arg(long)]
        force: bool,
    },
    /// Enumerate distributive lattices and run checkers or a search
    Sweep {
        /// Largest lattice size to enumerate
        #[arg(long = "max-n")]
        max_n: usize,
        /// Restrict the sweep to one theorem id
        #[arg(long, conflicts_with = "search")]
        theorem: Option<String>,
        /// Search for failures of one implication, e.g. "T3.1:(2)=>(1)"
        #[arg(long)]
        search: Option<String>,
    },
    /// Write the Hasse diagram as a DOT digraph
    ExportDot {
        input: String,
        /// Output path; stdout if omitted
        out: Option<PathBuf>,
    },
}

/// Errors carry the exit code they map to.
struct CmdError {
    code: i32,
    message: String,
}

impl CmdError {
    fn invalid(message: impl Into<String>) -> CmdError {
        CmdError { code: 2, message: message.into() }
    }

    fn failure(message: impl Into<String>) -> CmdError {
        CmdError { code: 1, message: message.into() }
    }

    fn silent(code: i32) -> CmdError {
        CmdError { code, message: String::new() }
    }
}

fn load_lattice(input: &str) -> Result<Lattice, CmdError> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return gen::catalog_entry(name)
            .map(|e| e.lattice.clone())
            .ok_or_else(|| {
                CmdError::invalid(format!(
                    "no catalog entry named {name:?} (known: {})",
                    gen::catalog_names().join(", ")
                ))
            });
    }
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CmdError::invalid(format!("cannot read {input}: {e}")))?;
        return Lattice::from_json_str(&text)
            .map_err(|e| CmdError::invalid(format!("{input}: {e}")));
    }
    gen::catalog_entry(input)
        .map(|e| e.lattice.clone())
        .ok_or_else(|| {
            CmdError::invalid(format!(
                "{input}: no such file and no catalog entry with that name"
            ))
        })
}

fn decomposability(l: &Lattice) -> Option<(bool, Option<(usize, usize)>)> {
    match decomp::is_decomposable(l) {
        Err(_) => None,
        Ok(Decomposability::Decomposable(_)) => Some((true, None)),
        Ok(Decomposability::NotDecomposable { failing_pair }) => {
            Some((false, Some(failing_pair)))
        }
    }
}

fn cmd_validate(l: &Lattice, json: bool) -> Result<(), CmdError> {
    let dec = decomposability(l);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&render::validate_json(l, dec)).expect("valid json")
        );
    } else {
        print!("{}", render::validate_text(l, dec));
    }
    Ok(())
}

fn cmd_spectrum(l: &Lattice, json: bool) -> Result<(), CmdError> {
    let report = SpectrumReport::compute(l)
        .map_err(|e| CmdError::invalid(format!("{}: {e}", l.name())))?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json(l)).expect("valid json")
        );
    } else {
        print!("{}", render::spectrum_text(l, &report));
    }
    Ok(())
}

fn cmd_decompose(l: &Lattice, element: &str, json: bool) -> Result<(), CmdError> {
    let e = l
        .index_of(element)
        .ok_or_else(|| CmdError::invalid(format!("no element labeled {element:?}")))?;
    match decomp::decompose_special(l, e) {
        Ok(d) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&render::decompose_json(l, &d))
                        .expect("valid json")
                );
            } else {
                print!("{}", render::decompose_text(l, &d));
            }
            Ok(())
        }
        Err(e @ DecompError::NotDistributive) => {
            Err(CmdError::invalid(format!("{}: {e}", l.name())))
        }
        Err(e) => Err(CmdError::failure(format!("{}: {e}", l.name()))),
    }
}

fn cmd_check(
    l: &Lattice,
    theorem: Option<&str>,
    force: bool,
    json: bool,
) -> Result<(), CmdError> {
    let verdicts = match theorem {
        Some(id) => vec![theorems::check_with(l, id, force).map_err(|e| {
            CmdError::invalid(format!(
                "{e} (known ids: {})",
                theorems::theorem_ids().join(", ")
            ))
        })?],
        None => theorems::check_all_with(l, force),
    };
    if json {
        let arr: Vec<serde_json::Value> = verdicts.iter().map(|v| v.to_json()).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::Value::Array(arr)).expect("valid json")
        );
    } else {
        for v in &verdicts {
            println!("{}", render::verdict_line(v));
        }
    }
    if verdicts.iter().any(|v| v.failed()) {
        Err(CmdError::silent(1))
    } else {
        Ok(())
    }
}

/// Name an enumerated lattice, tagging it with the isomorphic catalog
/// entry when one exists.
fn sweep_display_name(l: &Lattice) -> String {
    for e in gen::catalog() {
        if e.lattice.len() == l.len() && iso::lattices_isomorphic(&e.lattice, l) {
            return format!("{} ({})", l.name(), e.name);
        }
    }
    l.name().to_string()
}

fn cmd_sweep(
    max_n: usize,
    theorem: Option<&str>,
    search: Option<&str>,
    quiet: bool,
    json: bool,
) -> Result<(), CmdError> {
    if let Some(id) = theorem {
        if !theorems::theorem_ids().contains(&id) {
            return Err(CmdError::invalid(format!(
                "unknown theorem id {id:?} (known: {})",
                theorems::theorem_ids().join(", ")
            )));
        }
    }
    if let Some(implication) = search {
        let hits = theorems::search_counterexamples(implication, max_n)
            .map_err(|e| CmdError::invalid(e.to_string()))?;
        let total = gen::enumerate_distributive(max_n)
            .map_err(|e| CmdError::invalid(e.to_string()))?
            .count();
        if json {
            let arr: Vec<serde_json::Value> = hits
                .iter()
                .map(|h| {
                    serde_json::json!({
                        "lattice": sweep_display_name(&h.lattice),
                        "witness": h.counterexample.description,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "search": implication,
                    "max_n": max_n,
                    "lattices": total,
                    "hits": arr,
                }))
                .expect("valid json")
            );
        } else {
            if !quiet {
                println!(
                    "search {implication} over distributive lattices with <= {max_n} elements"
                );
            }
            for h in &hits {
                println!(
                    "hit: {}: {}",
                    sweep_display_name(&h.lattice),
                    h.counterexample.description
                );
            }
            println!("lattices: {total}, hits: {}", hits.len());
        }
        return if hits.is_empty() {
            Ok(())
        } else {
            Err(CmdError::silent(1))
        };
    }

    let lattices = gen::enumerate_distributive(max_n)
        .map_err(|e| CmdError::invalid(e.to_string()))?;
    let mut total = 0usize;
    let mut decomposable_count = 0usize;
    let mut checks = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for l in lattices {
        total += 1;
        if !decomp::decomposable(&l) {
            continue;
        }
        decomposable_count += 1;
        let verdicts = match theorem {
            Some(id) => vec![theorems::check_with(&l, id, false).expect("id validated")],
            None => theorems::check_all(&l),
        };
        for v in verdicts {
            checks += 1;
            if v.failed() {
                let ce = v
                    .counterexample
                    .as_ref()
                    .map(|c| c.description.clone())
                    .unwrap_or_default();
                failures.push(format!(
                    "{} on {}: {}",
                    v.theorem_id,
                    sweep_display_name(&l),
                    ce
                ));
            }
        }
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "max_n": max_n,
                "lattices": total,
                "decomposable": decomposable_count,
                "checks": checks,
                "failures": failures,
            }))
            .expect("valid json")
        );
    } else {
        if !quiet {
            println!("sweep over distributive lattices with <= {max_n} elements");
        }
        for f in &failures {
            println!("FAIL {f}");
        }
        println!(
            "lattices: {total}, decomposable: {decomposable_count}, checks: {checks}, failures: {}",
            failures.len()
        );
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CmdError::silent(1))
    }
}

fn cmd_export_dot(l: &Lattice, out: Option<&Path>) -> Result<(), CmdError> {
    let text = render::dot(l);
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CmdError::invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CmdError> {
    match &cli.command {
        Command::Validate { input } => cmd_validate(&load_lattice(input)?, cli.json),
        Command::Spectrum { input } => cmd_spectrum(&load_lattice(input)?, cli.json),
        Command::Decompose { input, element } => {
            cmd_decompose(&load_lattice(input)?, element, cli.json)
        }
        Command::Check { input, theorem, all: _, force } => {
            cmd_check(&load_lattice(input)?, theorem.as_deref(), *force, cli.json)
        }
        Command::Sweep { max_n, theorem, search } => cmd_sweep(
            *max_n,
            theorem.as_deref(),
            search.as_deref(),
            cli.quiet,
            cli.json,
        ),
        Command::ExportDot { input, out } => {
            cmd_export_dot(&load_lattice(input)?, out.as_deref())
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("error: {}", e.message);
            }
            std::process::exit(e.code);
        }
    }
}
