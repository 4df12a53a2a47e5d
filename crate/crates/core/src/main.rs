use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nsg_core::betti;
use nsg_core::harness::{fixtures, report, sweep, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
use nsg_core::semigroup::{NumericalSemigroup, MAX_GENERATOR};

/// Factorization invariants of numerical semigroups.
#[derive(Parser, Debug)]
#[command(name = "nsg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classical and factorization invariants of one semigroup.
    Invariants {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
        #[arg(long)]
        json: bool,
        /// Betti scan bound (dimension != 3) and Delta-set scan stop.
        #[arg(long)]
        scan_bound: Option<i64>,
    },
    /// Run the built-in fixtures and print a pass/fail table.
    Examples {
        #[arg(long)]
        json: bool,
        /// Run with a deliberately broken fixture (harness self-test).
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Check every closed form on all triples with n3 <= MAX_N3.
    Verify {
        max_n3: i64,
        /// Write records here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
    },
    /// Betti elements with their factorization data.
    Betti {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        scan_bound: Option<i64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FilterArg {
    Minimal,
    All,
}

fn generator_cap() -> Result<i64, String> {
    match std::env::var("NSG_MAX_GEN") {
        Ok(v) => v
            .trim()
            .parse::<i64>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| format!("NSG_MAX_GEN must be a positive integer, got {v:?}")),
        Err(_) => Ok(MAX_GENERATOR),
    }
}

fn semigroup(generators: &[i64]) -> Result<NumericalSemigroup, String> {
    NumericalSemigroup::with_generator_cap(generators, generator_cap()?).map_err(|e| e.to_string())
}

fn usage(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn emit_json<T: serde::Serialize>(value: &T) -> i32 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if serde_json::to_writer_pretty(&mut out, value).is_err() || writeln!(out).is_err() {
        return EXIT_VIOLATION;
    }
    EXIT_OK
}

fn invariants(generators: &[i64], json: bool, scan_bound: Option<i64>) -> i32 {
    let s = match semigroup(generators) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    match report::build(&s, scan_bound) {
        Ok(r) if json => emit_json(&r),
        Ok(r) => {
            print!("{}", report::render_text(&r));
            EXIT_OK
        }
        Err(e @ nsg_core::Error::ScanBoundTooSmall { .. }) => usage(e),
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_VIOLATION
        }
    }
}

fn examples(json: bool, corrupt: bool) -> i32 {
    let set = if corrupt {
        fixtures::corrupted()
    } else {
        fixtures::all()
    };
    let outcomes = fixtures::run_all(&set);
    let passed = outcomes.iter().filter(|o| o.passed).count();
    if json {
        emit_json(&outcomes);
    } else {
        for o in &outcomes {
            println!("{} {}", if o.passed { "PASS" } else { "FAIL" }, o.name);
            if !o.passed {
                println!("  expected: {}", o.expected);
                println!("  actual:   {}", o.actual);
            }
        }
        println!("{passed}/{} pass", outcomes.len());
    }
    if passed == outcomes.len() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn verify(max_n3: i64, csv: Option<PathBuf>, parallel: usize, filter: FilterArg) -> i32 {
    if max_n3 < 5 {
        return usage(format!("MAX_N3 must be at least 5, got {max_n3}"));
    }
    if max_n3 > generator_cap().unwrap_or(MAX_GENERATOR) {
        return usage(format!("MAX_N3 {max_n3} exceeds the generator cap"));
    }
    let outcome = sweep::run(sweep::SweepOptions {
        parallel,
        ..sweep::SweepOptions::new(max_n3)
    });
    let filter = match filter {
        FilterArg::Minimal => sweep::Filter::Minimal,
        FilterArg::All => sweep::Filter::All,
    };
    let written = match &csv {
        Some(path) => match File::create(path) {
            Ok(f) => sweep::write_csv(BufWriter::new(f), outcome.filtered(filter)),
            Err(e) => return usage(format!("cannot create {}: {e}", path.display())),
        },
        None => sweep::write_csv(io::stdout().lock(), outcome.filtered(filter)),
    };
    if let Err(e) = written {
        eprintln!("error: writing CSV: {e}");
        return EXIT_VIOLATION;
    }
    let summary = format!(
        "checked {} triples with n3 <= {max_n3}: {} violations",
        outcome.records.len() + outcome.violations.len(),
        outcome.violations.len()
    );
    // keep stdout pure CSV when it carries the records
    if csv.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    match outcome.first_violation() {
        None => EXIT_OK,
        Some(v) => {
            let [a, b, c] = v.generators;
            eprintln!("counterexample <{a},{b},{c}>: {}", v.message);
            EXIT_VIOLATION
        }
    }
}

fn betti_cmd(generators: &[i64], json: bool, scan_bound: Option<i64>) -> i32 {
    let s = match semigroup(generators) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    if s.is_whole_naturals() {
        if json {
            return emit_json(
                &serde_json::json!({ "generators": [1], "betti_elements": [], "per_element": [] }),
            );
        }
        println!("S=<1> has no Betti elements");
        return EXIT_OK;
    }
    let r = match betti::betti_report(&s, scan_bound) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VIOLATION;
        }
    };
    if json {
        return emit_json(&serde_json::json!({
            "generators": s.generators(),
            "betti_elements": r.betti_elements,
            "presentation_cardinality": r.presentation_cardinality,
            "per_element": r.per_element,
        }));
    }
    let mut out = String::new();
    out.push_str(&format!("S={s}\n"));
    report::render_elements(&mut out, &r.per_element);
    print!("{out}");
    EXIT_OK
}

fn main() -> ExitCode {
    // clap exits with status 2 on parse errors
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Invariants {
            generators,
            json,
            scan_bound,
        } => invariants(&generators, json, scan_bound),
        Command::Examples { json, corrupt } => examples(json, corrupt),
        Command::Verify {
            max_n3,
            csv,
            parallel,
            filter,
        } => verify(max_n3, csv, parallel, filter),
        Command::Betti {
            generators,
            json,
            scan_bound,
        } => betti_cmd(&generators, json, scan_bound),
    };
    ExitCode::from(code as u8)
}
