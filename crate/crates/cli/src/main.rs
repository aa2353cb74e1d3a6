//! `gstar`: analyze finite permutation groups and run theorem-style
//! verification campaigns over the builtin corpus.
//!
//! Exit codes: 0 all pass, 1 at least one inequivalence, 2 usage error,
//! 3 a budget/skip occurred with no failures.

mod campaign;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use gstar_core::group::DEFAULT_ELEMENT_BUDGET;
use gstar_core::{builtin_corpus, load_group_file, CorpusEntry, Error, StatementId};

#[derive(Parser)]
#[command(
    name = "gstar",
    version,
    about = "Finite-group calculator for the coprime commutator calculus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Md,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report for one group: order, series, γ*/δ* subgroup orders
    Analyze {
        /// Builtin corpus name (e.g. "S4") or path to a group JSON file
        group: String,
        /// Largest coprime-commutator level to report
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Element budget for the closure
        #[arg(long, default_value_t = DEFAULT_ELEMENT_BUDGET)]
        budget: usize,
    },
    /// Run statement verdicts over the corpus and print a campaign report
    Verify {
        /// Statements to check (default: all)
        statements: Vec<String>,
        /// Comma-separated statements, merged with the positional list
        #[arg(long = "statements", value_delimiter = ',')]
        statement_flags: Vec<String>,
        /// Level range "A..B" (inclusive) or a single level "K"
        #[arg(long, default_value = "2..3")]
        k: String,
        /// Only corpus groups up to this order
        #[arg(long, default_value_t = 1000)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Include witness details in the report
        #[arg(long)]
        witnesses: bool,
        /// Reproducible output: zeroes elapsed timings
        #[arg(long)]
        stable: bool,
        /// Worker threads for processing groups in parallel
        #[arg(long)]
        jobs: Option<usize>,
        /// Restrict the builtin corpus to these names (comma-separated)
        #[arg(long, value_delimiter = ',')]
        groups: Vec<String>,
        /// Additional group JSON files to include
        #[arg(long = "group-file")]
        group_files: Vec<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            group,
            max_k,
            format,
            budget,
        } => match cmd_analyze(&group, max_k, format, budget) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                match e {
                    Error::ClosureBudget { .. } | Error::WordBudget { .. } => ExitCode::from(3),
                    _ => ExitCode::from(2),
                }
            }
        },
        Command::Verify {
            statements,
            statement_flags,
            k,
            max_order,
            format,
            witnesses,
            stable,
            jobs,
            groups,
            group_files,
        } => {
            match cmd_verify(VerifyArgs {
                statements,
                statement_flags,
                k,
                max_order,
                format,
                witnesses,
                stable,
                jobs,
                groups,
                group_files,
            }) {
                Ok(code) => ExitCode::from(code),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}

struct VerifyArgs {
    statements: Vec<String>,
    statement_flags: Vec<String>,
    k: String,
    max_order: usize,
    format: Format,
    witnesses: bool,
    stable: bool,
    jobs: Option<usize>,
    groups: Vec<String>,
    group_files: Vec<PathBuf>,
}

fn parse_k_range(text: &str) -> gstar_core::Result<(usize, usize)> {
    let bad = || Error::Precondition(format!("invalid k range '{text}', expected A..B"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok((lo, hi))
    } else {
        let k: usize = text.trim().parse().map_err(|_| bad())?;
        Ok((k, k))
    }
}

fn cmd_verify(args: VerifyArgs) -> gstar_core::Result<u8> {
    let (k_min, k_max) = parse_k_range(&args.k)?;

    let mut requested: Vec<StatementId> = Vec::new();
    for text in args.statements.iter().chain(&args.statement_flags) {
        let id = StatementId::from_str(text)?;
        if !requested.contains(&id) {
            requested.push(id);
        }
    }
    if requested.is_empty() {
        requested = StatementId::ALL.to_vec();
    }

    let mut entries: Vec<CorpusEntry> = builtin_corpus()
        .into_iter()
        .filter(|e| e.expected_order.unwrap_or(usize::MAX) <= args.max_order)
        .filter(|e| args.groups.is_empty() || args.groups.contains(&e.name))
        .collect();
    for name in &args.groups {
        if !entries.iter().any(|e| &e.name == name) {
            return Err(Error::UnknownGroup(name.clone()));
        }
    }
    for path in &args.group_files {
        entries.push(load_group_file(path)?);
    }

    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    }

    let plan = campaign::Plan {
        statements: requested.clone(),
        k_min,
        k_max,
        entries,
    };
    let started = Instant::now();
    let verdicts = campaign::run(&plan);
    let config = report::ConfigEcho {
        statements: requested.iter().map(|s| s.name().to_string()).collect(),
        k_min,
        k_max,
        max_order: args.max_order,
        groups: if args.groups.is_empty() {
            None
        } else {
            Some(args.groups.clone())
        },
        group_files: args
            .group_files
            .iter()
            .map(|p| p.display().to_string())
            .collect(),
        witnesses: args.witnesses,
        stable: args.stable,
        format: format!("{:?}", args.format).to_lowercase(),
    };
    let report = report::CampaignReport::new(config, verdicts, started.elapsed());
    debug_assert!(report::consistent(&report));
    match args.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Md => print!("{}", report.to_markdown()),
    }
    Ok(report.exit_code())
}

fn resolve_group(name_or_path: &str, budget: usize) -> gstar_core::Result<(CorpusEntry, gstar_core::GroupTable)> {
    let entry = if std::path::Path::new(name_or_path).is_file() {
        load_group_file(std::path::Path::new(name_or_path))?
    } else {
        gstar_core::find_builtin(name_or_path)?
    };
    let table = gstar_core::GroupTable::close_with_budget(entry.degree, &entry.generators, budget)?;
    if let Some(expected) = entry.expected_order {
        if table.order() != expected {
            return Err(Error::OrderMismatch {
                expected,
                actual: table.order(),
            });
        }
    }
    Ok((entry, table))
}

fn cmd_analyze(group: &str, max_k: usize, format: Format, budget: usize) -> gstar_core::Result<()> {
    let (entry, g) = resolve_group(group, budget)?;

    let lower_central = g.lower_central_series();
    let derived = g.derived_series();
    let fitting_series = g.lower_fitting_series();
    let nilpotent = g.is_nilpotent();
    let soluble = g.is_soluble();
    let gamma_orders: Vec<(usize, usize)> = (2..=max_k.max(2))
        .map(|k| (k, g.gamma_star_subgroup(k).map(|s| s.len()).unwrap_or(0)))
        .collect();
    let delta_orders: Vec<(usize, usize)> = (1..=max_k.max(1))
        .map(|k| (k, g.delta_star_subgroup(k).len()))
        .collect();

    match format {
        Format::Json => {
            let value = serde_json::json!({
                "name": entry.name,
                "degree": g.degree(),
                "order": g.order(),
                "primes": g.group_primes(),
                "abelian": g.is_abelian(),
                "nilpotent": nilpotent,
                "soluble": soluble,
                "simple": g.is_simple(),
                "perfect": g.is_perfect(),
                "nilpotency_class": if nilpotent { lower_central.length_to_trivial } else { None },
                "fitting_height": g.fitting_height().ok(),
                "nilpotent_residual_order": g.nilpotent_residual().len(),
                "fitting_subgroup_order": g.fitting_subgroup().len(),
                "center_order": g.center().len(),
                "lower_central_orders": lower_central.term_orders(),
                "derived_orders": derived.term_orders(),
                "lower_fitting_orders": fitting_series.term_orders(),
                "gamma_star_subgroup_orders": gamma_orders,
                "delta_star_subgroup_orders": delta_orders,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Md => {
            println!("# {}", entry.name);
            println!("- order: {} (degree {})", g.order(), g.degree());
            println!(
                "- primes: {{{}}}",
                g.group_primes()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!(
                "- abelian: {}, nilpotent: {}, soluble: {}, simple: {}, perfect: {}",
                g.is_abelian(),
                nilpotent,
                soluble,
                g.is_simple(),
                g.is_perfect()
            );
            match (nilpotent, lower_central.length_to_trivial) {
                (true, Some(class)) => println!("- nilpotency class: {class}"),
                _ => println!("- nilpotency class: undefined (not nilpotent)"),
            }
            match g.fitting_height() {
                Ok(h) => println!("- fitting height: {h}"),
                Err(_) => println!("- fitting height: undefined (not soluble)"),
            }
            println!("- nilpotent residual order: {}", g.nilpotent_residual().len());
            println!("- fitting subgroup order: {}", g.fitting_subgroup().len());
            println!("- center order: {}", g.center().len());
            println!("- lower central series orders: {:?}", lower_central.term_orders());
            println!("- derived series orders: {:?}", derived.term_orders());
            println!("- lower fitting series orders: {:?}", fitting_series.term_orders());
            for (k, n) in &gamma_orders {
                println!("- gamma_star subgroup order, k={k}: {n}");
            }
            for (k, n) in &delta_orders {
                println!("- delta_star subgroup order, k={k}: {n}");
            }
        }
    }
    Ok(())
}
