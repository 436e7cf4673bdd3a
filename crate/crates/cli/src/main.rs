use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use minrank_core::bounds::{
    clique_cover_number, combine_with, derive_forbidden_list, zero_forcing_number, BoundContext, BoundRegistry,
    BoundsRow,
};
use minrank_core::catalog::{
    self, compute_all, diff, format_table_row, known_ranks, load_atlas, load_fixtures, load_forbidden, render_table,
    Atlas,
};
use minrank_core::graph::{from_graph6, to_graph6, Graph};
use minrank_core::witness::{parse_witness_file, verify_all};
use minrank_core::Error;

#[derive(Parser)]
#[command(
    name = "minrank",
    version,
    about = "Minimum-rank bounds and certificates for small graphs"
)]
struct Cli {
    #[command(flatten)]
    paths: DataPaths,

    /// Emit JSON instead of TSV
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for per-graph computation (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Comma-separated bound strategies for LB/UB (default: all; see `strategies`)
    #[arg(long, global = true, value_delimiter = ',')]
    strategies: Option<Vec<String>>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DataPaths {
    #[arg(long, global = true, default_value = catalog::DEFAULT_ATLAS)]
    atlas_file: PathBuf,
    #[arg(long, global = true, default_value = catalog::DEFAULT_FIXTURES)]
    fixtures: PathBuf,
    #[arg(long, global = true, default_value = catalog::DEFAULT_WITNESSES)]
    witnesses: PathBuf,
    #[arg(long, global = true, default_value = catalog::DEFAULT_FORBIDDEN)]
    forbidden: PathBuf,
    /// Output file (default: standard output)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Atlas number (1-based)
    #[arg(long)]
    atlas: Option<usize>,
    /// graph6 string
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Bounds row for one graph
    Bounds(Target),
    /// Bounds rows for the whole atlas corpus
    Table,
    /// Compare computed rows with the transcribed table
    Diff,
    /// Verify the certificate matrices
    VerifyWitnesses,
    /// Derive the minimal forbidden subgraphs for minimum rank 2
    DeriveForbidden,
    /// Zero forcing number
    Zf(Target),
    /// Edge clique cover number
    Cc(Target),
    /// Diameter
    Diam(Target),
    /// List the registered bound strategies
    Strategies,
}

/// Checks ran and something did not hold.
struct Failed;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<std::result::Result<(), Failed>> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    let registry = match &cli.strategies {
        Some(names) => BoundRegistry::select(names).map_err(anyhow::Error::msg)?,
        None => BoundRegistry::standard(),
    };
    let p = &cli.paths;
    match &cli.command {
        Command::Bounds(t) => {
            let (label, g) = resolve(t, p)?;
            let forbidden = load_forbidden(&p.forbidden)?;
            let row = combine_with(&g, &registry, &BoundContext::new(&forbidden));
            if cli.json {
                emit(p, &serde_json::to_string_pretty(&row)?)?;
            } else {
                emit(p, &bounds_line(&label, &row))?;
            }
        }
        Command::Table => {
            let atlas = load_atlas(&p.atlas_file)?;
            let forbidden = load_forbidden(&p.forbidden)?;
            let rows = compute_all(&atlas, &registry, &forbidden);
            if cli.json {
                emit(p, &serde_json::to_string_pretty(&rows)?)?;
            } else {
                emit(p, render_table(&rows).trim_end())?;
            }
        }
        Command::Diff => {
            let atlas = load_atlas(&p.atlas_file)?;
            let fixtures = load_fixtures(&p.fixtures)?;
            let forbidden = load_forbidden(&p.forbidden)?;
            let rows = compute_all(&atlas, &registry, &forbidden);
            let report = diff(&fixtures, &rows)?;
            if cli.json {
                emit(p, &serde_json::to_string_pretty(&report)?)?;
            } else {
                let mut text: String = report.mismatches.iter().map(|m| format!("{m}\n")).collect();
                text.push_str(&report.summary());
                emit(p, &text)?;
            }
            if !report.is_clean() {
                return Ok(Err(Failed));
            }
        }
        Command::VerifyWitnesses => {
            let atlas = load_atlas(&p.atlas_file)?;
            let fixtures = load_fixtures(&p.fixtures)?;
            let claims: BTreeMap<usize, usize> = fixtures.iter().map(|f| (f.atlas_number, f.lb)).collect();
            let text =
                fs::read_to_string(&p.witnesses).with_context(|| format!("reading {}", p.witnesses.display()))?;
            let records = parse_witness_file(&text, &p.witnesses.display().to_string(), |k| claims.get(&k).copied())?;
            let reports = verify_all(&records, |k| atlas.graph(k).ok().cloned())?;
            if cli.json {
                emit(p, &serde_json::to_string_pretty(&reports)?)?;
            } else {
                let lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
                emit(p, &lines.join("\n"))?;
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            eprintln!("{passed}/{} certificates verified", reports.len());
            if passed != reports.len() {
                return Ok(Err(Failed));
            }
        }
        Command::DeriveForbidden => {
            let atlas = load_atlas(&p.atlas_file)?;
            let fixtures = load_fixtures(&p.fixtures)?;
            let list = match derive_forbidden_list(&atlas.numbered(), &known_ranks(&fixtures)) {
                Ok(list) => list,
                Err(Error::FixtureGap(gaps)) => {
                    eprintln!("cannot derive the list, fixture rows missing: {gaps}");
                    return Ok(Err(Failed));
                }
                Err(e) => return Err(e.into()),
            };
            let orders: Vec<String> = list.patterns().iter().map(|g| g.order().to_string()).collect();
            eprintln!("{} patterns, orders {}", list.len(), orders.join(" "));
            emit(p, list.to_text().trim_end())?;
        }
        Command::Zf(t) => {
            let (_, g) = resolve(t, p)?;
            emit(p, &zero_forcing_number(&g).to_string())?;
        }
        Command::Cc(t) => {
            let (_, g) = resolve(t, p)?;
            emit(p, &clique_cover_number(&g).to_string())?;
        }
        Command::Diam(t) => {
            let (_, g) = resolve(t, p)?;
            emit(p, &g.diameter()?.to_string())?;
        }
        Command::Strategies => {
            let lines: Vec<String> = registry
                .iter()
                .map(|s| format!("{}\t{}\t{}", s.name(), s.sense(), s.description()))
                .collect();
            emit(p, &lines.join("\n"))?;
        }
    }
    Ok(Ok(()))
}

/// Label for the first column plus the graph itself.
fn resolve(t: &Target, p: &DataPaths) -> Result<(String, Graph)> {
    match (t.atlas, &t.graph6) {
        (Some(k), _) => {
            let atlas: Atlas = load_atlas(&p.atlas_file)?;
            let g = atlas.graph(k)?.clone();
            Ok((k.to_string(), g))
        }
        (None, Some(s)) => {
            let g = from_graph6(s.trim())?;
            Ok((to_graph6(&g), g))
        }
        (None, None) => bail!("either --atlas or --graph6 is required"),
    }
}

fn bounds_line(label: &str, row: &BoundsRow) -> String {
    // format_table_row expects a number in the first column; swap in the label
    let line = format_table_row(0, row);
    let rest = line.split_once('\t').map(|(_, r)| r).unwrap_or("");
    format!("{label}\t{rest}")
}

fn emit(p: &DataPaths, text: &str) -> Result<()> {
    match &p.out {
        Some(path) => write_file(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            match writeln!(stdout, "{text}") {
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                other => other.context("writing to standard output"),
            }
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display()))
}
