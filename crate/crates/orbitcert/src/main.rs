use std::io::Write;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use orbitcert::{builtin_catalog, emit_catalog, oracle, parse_catalog, run_checks, CatalogEntry};
use orbitstats::{constants, gamma_exception_table};

/// Verifier for orbit-size and character-degree bounds of finite solvable
/// groups.
#[derive(Parser)]
#[command(name = "orbitcert", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks over a catalog and emit a JSONL report.
    Verify {
        /// Group file (JSONL); the builtin catalog when omitted.
        #[arg(long)]
        catalog: Option<String>,
        /// Comma-separated check names; all checks when omitted.
        #[arg(long)]
        checks: Option<String>,
        /// Seed for sampled certificates (exhaustive ones ignore it).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the report rows to this path.
        #[arg(long)]
        report: Option<String>,
    },
    /// Emit computed tables.
    Table {
        #[command(subcommand)]
        table: TableCommand,
    },
    /// Answer a question about a catalog group by exhaustive enumeration.
    Oracle {
        #[arg(long)]
        group: String,
        #[arg(long)]
        question: String,
        #[arg(long)]
        catalog: Option<String>,
    },
    /// Print the bound constants to 30 digits with the analytic identity
    /// checks.
    Constants,
    /// Write the builtin catalog as JSONL.
    Catalog {
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum TableCommand {
    /// The exceptional-region sweep for the semilinear case inequality.
    GammaExceptions {
        /// Write CSV rows (p, n, lhs_log, rhs_log, holds) to this path.
        #[arg(long)]
        csv: Option<String>,
    },
}

fn load_catalog(path: &Option<String>) -> anyhow::Result<Vec<CatalogEntry>> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {p}"))?,
        None => emit_catalog(&builtin_catalog()),
    };
    Ok(parse_catalog(&text)?)
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            catalog,
            checks,
            seed,
            report,
        } => {
            let entries = load_catalog(&catalog)?;
            let selection: Vec<String> = match checks {
                Some(list) => {
                    let names: Vec<String> =
                        list.split(',').map(|s| s.trim().to_string()).collect();
                    if names.is_empty() || names.iter().all(|n| n.is_empty()) {
                        bail!("empty check selection");
                    }
                    for n in &names {
                        if !orbitcert::ALL_CHECKS.contains(&n.as_str()) {
                            bail!(
                                "unknown check {n:?}; available: {}",
                                orbitcert::ALL_CHECKS.join(", ")
                            );
                        }
                    }
                    names
                }
                None => orbitcert::ALL_CHECKS.iter().map(|s| s.to_string()).collect(),
            };
            let rows = run_checks(&entries, &selection, seed);
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for row in &rows {
                writeln!(out, "{}", serde_json::to_string(row)?)?;
            }
            if let Some(path) = report {
                let mut file = std::fs::File::create(&path)
                    .with_context(|| format!("creating {path}"))?;
                for row in &rows {
                    writeln!(file, "{}", serde_json::to_string(row)?)?;
                }
            }
            let failures = orbitcert::proven_failures(&rows);
            let (passes, tights, skips) = rows.iter().fold((0, 0, 0), |(p, t, s), r| {
                match r.status.as_str() {
                    "pass" => (p + 1, t, s),
                    "tight" => (p, t + 1, s),
                    "skip" => (p, t, s + 1),
                    _ => (p, t, s),
                }
            });
            eprintln!(
                "{} rows: {passes} pass, {tights} tight, {failures} failed proven bounds, {skips} skipped",
                rows.len()
            );
            if failures > 0 {
                std::process::exit(1);
            }
        }
        Command::Table {
            table: TableCommand::GammaExceptions { csv },
        } => {
            let t = gamma_exception_table();
            let mut csv_text = String::from("p,n,lhs_log,rhs_log,holds\n");
            for row in &t.rows {
                csv_text.push_str(&format!(
                    "{},{},{:.12},{:.12},{}\n",
                    row.p, row.n, row.lhs_log, row.rhs_log, row.holds
                ));
            }
            match csv {
                Some(path) => std::fs::write(&path, &csv_text)
                    .with_context(|| format!("writing {path}"))?,
                None => print!("{csv_text}"),
            }
            eprintln!("failure regions (largest failing n per field size):");
            for (p, n) in &t.regions {
                if *n > 0 {
                    eprintln!("  p = {p}: n <= {n}");
                } else {
                    eprintln!("  p = {p}: none");
                }
            }
            eprintln!("{}", t.note);
        }
        Command::Oracle {
            group,
            question,
            catalog,
        } => {
            let entries = load_catalog(&catalog)?;
            let entry = entries
                .iter()
                .find(|e| e.record.id == group)
                .with_context(|| format!("no group {group:?} in the catalog"))?;
            let value = oracle::answer(&entry.record, &question)?;
            println!("{}", serde_json::to_string(&value)?);
        }
        Command::Constants => {
            let c = constants();
            println!("lambda = {}", c.lambda.to_decimal_string(30));
            println!("alpha  = {}", c.alpha.to_decimal_string(30));
            println!("beta   = {}", c.beta.to_decimal_string(30));
            let (r1, r2) = c.identity_residuals();
            println!(
                "identity lambda^3 = 24: residual {} ({})",
                r1.to_decimal_string(42),
                if c.identities_hold() { "holds" } else { "VIOLATED" }
            );
            println!(
                "identity 3^alpha = 6 lambda: residual {} ({})",
                r2.to_decimal_string(42),
                if c.identities_hold() { "holds" } else { "VIOLATED" }
            );
            if !c.identities_hold() {
                std::process::exit(1);
            }
        }
        Command::Catalog { out } => {
            let text = emit_catalog(&builtin_catalog());
            match out {
                Some(path) => std::fs::write(&path, &text)
                    .with_context(|| format!("writing {path}"))?,
                None => print!("{text}"),
            }
        }
    }
    Ok(())
}
