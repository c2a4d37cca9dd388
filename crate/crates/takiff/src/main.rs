use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use takiff::report_json::{report_table, report_to_json};
use takiff::{resolve, to_json_string, AlgebraFile, FamilyFile, Input, WallClock};
use takiff_core::report::{Clock, NoClock};
use takiff_core::verify::{self, VerifyOptions};
use takiff_core::{catalog, family, nilfiber, takiff as tk, Report, Status};

/// Takiff algebras, their symmetric invariants, and checks of their
/// structure in exact rational arithmetic.
#[derive(Parser)]
#[command(name = "takiff", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build q<m> or q<m1,...,mr> and write it as an algebra file.
    Build {
        #[command(flatten)]
        depth: Depth,
        /// Algebra file or catalog name.
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand the basic invariants into the family F_i^j on q<m>.
    Invariants {
        #[arg(long)]
        m: usize,
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the structure theorem on q<m> or a multi-current algebra.
    Verify {
        #[command(flatten)]
        depth: Depth,
        #[command(flatten)]
        run: RunArgs,
        input: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Degree-sum, Frobenius and semi-invariant diagnostics for q itself.
    Diagnose {
        #[command(flatten)]
        run: RunArgs,
        input: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Null-fibre stratification and equidimensionality run on a catalog entry.
    Nilfiber {
        #[arg(long, default_value_t = 3)]
        levels: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        entry: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Built-in algebras.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List entry names with summaries.
    List,
    /// Write an entry as an algebra file.
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Depth {
    /// Truncation depth m >= 1.
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated depths for a multi-current algebra.
    #[arg(long, value_delimiter = ',')]
    multi: Option<Vec<usize>>,
}

impl Depth {
    fn degrees(&self) -> Vec<usize> {
        match (&self.m, &self.multi) {
            (Some(m), _) => vec![*m],
            (None, Some(list)) => list.clone(),
            (None, None) => unreachable!("clap requires one of --m and --multi"),
        }
    }
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Record wall-clock milliseconds per check; reports are then no longer
    /// byte-reproducible.
    #[arg(long)]
    timings: bool,
}

fn clock(timings: bool) -> Box<dyn Clock> {
    if timings {
        Box::new(WallClock::start())
    } else {
        Box::new(NoClock)
    }
}

fn write_or_print(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_report(report: &Report, path: Option<&PathBuf>) -> Result<ExitCode> {
    print!("{}", report_table(report));
    if let Some(path) = path {
        std::fs::write(path, report_to_json(report))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(match report.summary() {
        Status::Fail => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    })
}

fn check_degrees(degrees: &[usize]) -> Result<()> {
    if degrees.is_empty() {
        bail!("--multi needs at least one depth");
    }
    if let Some(m) = degrees.iter().find(|&&m| m == 0) {
        bail!("truncation depth must be at least 1, got {m}");
    }
    Ok(())
}

fn build(input: &Input, degrees: &[usize]) -> Result<AlgebraFile> {
    check_degrees(degrees)?;
    let mut algebra = input.algebra.clone();
    let mut invariants = input.invariants.clone();
    for &m in degrees {
        let lm = tk::takiff(&algebra, m)?;
        let fam = family::build_family(&lm, &invariants)?;
        invariants = fam.to_invariant_set(&lm)?;
        algebra = lm;
    }
    let label = format!(
        "{}<{}>",
        input.algebra.label(),
        degrees
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    let algebra = algebra.with_label(label);
    Ok(AlgebraFile::from_algebra(
        &algebra,
        invariants.polys(),
        input.flags,
    ))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build { depth, input, out } => {
            let input = resolve(&input)?;
            let file = build(&input, &depth.degrees())?;
            write_or_print(out.as_ref(), &to_json_string(&file)?)?;
            if out.is_some() {
                println!(
                    "built {}: dim {}, {} invariants",
                    file.label,
                    file.basis.len(),
                    file.invariants.len()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { m, input, out } => {
            check_degrees(&[m])?;
            let input = resolve(&input)?;
            let lm = tk::takiff(&input.algebra, m)?;
            let fam = family::build_family(&lm, &input.invariants)?;
            let file = FamilyFile::new(&input.algebra, &lm, &fam);
            if out.is_some() {
                for e in &file.entries {
                    println!("F_{}^{} (deg {}) = {}", e.i + 1, e.j, e.degree, e.poly);
                }
            }
            write_or_print(out.as_ref(), &to_json_string(&file)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            depth,
            run,
            input,
            report,
        } => {
            let degrees = depth.degrees();
            check_degrees(&degrees)?;
            let input = resolve(&input)?;
            let options = VerifyOptions {
                trials: run.trials,
                ..VerifyOptions::with_seed(run.seed)
            };
            let clock = clock(run.timings);
            let r = verify::verify_multi_current_with(
                &input.algebra,
                &input.invariants,
                &degrees,
                &options,
                &*clock,
            );
            emit_report(&r, report.as_ref())
        }
        Command::Diagnose { run, input, report } => {
            let input = resolve(&input)?;
            let mut r = verify::wonderful_diagnostic(
                &input.algebra,
                &input.invariants,
                run.trials,
                run.seed,
            );
            r.title = format!("diagnose {}", input.algebra.label());
            r.extend(verify::frobenius_check(&input.algebra, run.trials, run.seed).1);
            r.push(verify::semi_invariant_note(
                input.flags.no_proper_semiinvariants,
            ));
            print!("{}", report_table(&r));
            if let Some(path) = &report {
                std::fs::write(path, report_to_json(&r))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nilfiber {
            levels,
            seed,
            entry,
            report,
        } => {
            let entry = catalog::load(&entry).with_context(|| {
                format!(
                    "`{entry}`: the null-fibre run needs a catalog entry with parametrized strata"
                )
            })?;
            let (r, outcomes) = nilfiber::run_nilfiber(&entry, levels, seed)?;
            let code = emit_report(&r, report.as_ref())?;
            for o in &outcomes {
                println!(
                    "level {} ({}, dim {}, l = {}): {}",
                    o.level,
                    o.algebra_label,
                    o.dim,
                    o.rank,
                    o.verdict.as_str()
                );
            }
            Ok(code)
        }
        Command::Catalog(CatalogCommand::List) => {
            for (name, summary) in catalog::list() {
                println!("{name:<12} {summary}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog(CatalogCommand::Export { name, out }) => {
            let e = catalog::load(&name)?;
            let file = AlgebraFile::from_algebra(&e.algebra, e.invariants.polys(), e.flags);
            write_or_print(out.as_ref(), &to_json_string(&file)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
