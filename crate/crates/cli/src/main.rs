//! `graph-energy`: batch energy bounds for graph corpora.

mod input;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use graph_energy::{
    analyze, bound_sweep, generate, write_graph6, AnalyzeOptions, FamilySpec, Graph, Tolerances,
};
use rayon::prelude::*;

use input::{for_each_batch, Job, Source};
use output::{
    analyze_row, sweep_row, Format, TableWriter, ANALYZE_COLUMNS, LP_COLUMNS, SWEEP_COLUMNS,
};

const EXIT_VIOLATION: u8 = 2;
const MAX_LP_DEGREE: usize = 16;

#[derive(Parser, Debug)]
#[command(
    name = "graph-energy",
    version,
    about = "Exact graph energy and spectral-moment bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One report row per input graph.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Append LP upper and lower bounds of this even degree.
        #[arg(long, value_parser = parse_even_degree)]
        lp_degree: Option<usize>,
    },
    /// Write the graph6 encoding of a generator spec.
    Generate {
        /// e.g. `complete:5`, `rook:4`, `gnp:12:0.3:42`, `union:complete:2,complete:2`
        spec: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<String>,
    },
    /// LP bounds for every even degree up to `--max-degree`.
    Sweep {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_parser = parse_even_degree)]
        max_degree: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// graph6 file (one graph per line) or edge-list file; `-` for stdin.
    #[arg(long = "in", value_name = "FILE")]
    path: Option<String>,
    /// Generator spec; repeat for several graphs.
    #[arg(long = "gen", value_name = "SPEC")]
    specs: Vec<String>,
}

#[derive(Args, Debug)]
struct CommonArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
    /// Exit with status 2 when any bound misses the exact energy.
    #[arg(long)]
    fail_on_violation: bool,
    /// Multiplies every default tolerance.
    #[arg(long, env = "ME_TOLERANCE_SCALE", default_value_t = 1.0, value_parser = parse_scale)]
    tolerance_scale: f64,
}

/// Everything one analyze or sweep run needs.
#[derive(Debug)]
struct RunConfig {
    source: Source,
    format: Format,
    out: Option<String>,
    lp_max_degree: Option<usize>,
    tolerances: Tolerances,
    fail_on_violation: bool,
}

impl RunConfig {
    fn new(input: InputArgs, common: CommonArgs, lp_max_degree: Option<usize>) -> Self {
        let source = match input.path {
            Some(p) => Source::Path(p),
            None => Source::Specs(input.specs),
        };
        RunConfig {
            source,
            format: common.format,
            out: common.out,
            lp_max_degree,
            tolerances: Tolerances::default().scaled(common.tolerance_scale),
            fail_on_violation: common.fail_on_violation,
        }
    }

    fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).with_context(|| format!("cannot create {path}"))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

fn parse_even_degree(s: &str) -> Result<usize, String> {
    let d: usize = s.parse().map_err(|_| format!("{s:?} is not a degree"))?;
    if d < 2 || d % 2 == 1 || d > MAX_LP_DEGREE {
        return Err(format!("degree must be even and in 2..={MAX_LP_DEGREE}"));
    }
    Ok(d)
}

fn parse_scale(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("{s:?} is not a positive tolerance scale")),
    }
}

fn describe(line: Option<usize>, g: &Graph) -> String {
    match (line, g.label()) {
        (Some(l), _) => format!("line {l}"),
        (None, Some(label)) => label.to_owned(),
        (None, None) => "input graph".to_owned(),
    }
}

/// Decodes and processes one batch on the worker pool, keeping input order.
fn process<T: Send>(batch: Vec<Job>, f: impl Fn(&Graph) -> Result<T> + Sync) -> Vec<Result<T>> {
    batch
        .into_par_iter()
        .map(|job| {
            let line = match &job {
                Job::Graph6 { line, .. } => Some(*line),
                Job::Ready(_) => None,
            };
            let g = job.graph()?;
            f(&g).with_context(|| describe(line, &g))
        })
        .collect()
}

/// `Ok(false)` when a bound was violated under `--fail-on-violation`.
fn cmd_analyze(cfg: &RunConfig) -> Result<bool> {
    let opts = AnalyzeOptions {
        tolerances: cfg.tolerances,
        lp_degree: cfg.lp_max_degree,
    };
    let with_lp = cfg.lp_max_degree.is_some();
    let mut columns = ANALYZE_COLUMNS.to_vec();
    if with_lp {
        columns.extend(LP_COLUMNS);
    }
    let mut table = TableWriter::new(cfg.writer()?, cfg.format, columns)?;
    let mut all_sound = true;
    for_each_batch(&cfg.source, |batch| {
        for result in process(batch, |g| Ok(analyze(g, &opts)?)) {
            let report = result?;
            all_sound &= report.sound;
            table.write(&analyze_row(&report, with_lp))?;
        }
        Ok(())
    })?;
    table.finish()?;
    Ok(all_sound || !cfg.fail_on_violation)
}

fn cmd_sweep(cfg: &RunConfig) -> Result<bool> {
    let max_degree = cfg
        .lp_max_degree
        .ok_or_else(|| anyhow!("sweep needs --max-degree"))?;
    let opts = AnalyzeOptions {
        tolerances: cfg.tolerances,
        lp_degree: None,
    };
    let slack = cfg.tolerances.lp_bracket;
    let mut table = TableWriter::new(cfg.writer()?, cfg.format, SWEEP_COLUMNS.to_vec())?;
    let mut all_sound = true;
    let mut index = 0;
    for_each_batch(&cfg.source, |batch| {
        let results = process(batch, |g| {
            Ok((analyze(g, &opts)?, bound_sweep(g, max_degree)?))
        });
        for result in results {
            let (report, rows) = result?;
            let e = report.energy;
            let tol = slack * e.max(1.0);
            all_sound &= report.sound;
            for row in &rows {
                all_sound &= row.certified && row.lower <= e + tol && row.upper >= e - tol;
                table.write(&sweep_row(
                    index,
                    row,
                    report.theorem1_bound,
                    e,
                    report.connected,
                ))?;
            }
            index += 1;
        }
        Ok(())
    })?;
    table.finish()?;
    Ok(all_sound || !cfg.fail_on_violation)
}

fn cmd_generate(spec: &str, out: Option<&str>) -> Result<()> {
    let parsed: FamilySpec = spec
        .parse()
        .map_err(|e| anyhow!("bad spec {spec:?}: {e}"))?;
    let g = generate(&parsed)?;
    let mut text = write_graph6(&g)?;
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {path}"))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze {
            input,
            common,
            lp_degree,
        } => cmd_analyze(&RunConfig::new(input, common, lp_degree)),
        Command::Sweep {
            input,
            common,
            max_degree,
        } => cmd_sweep(&RunConfig::new(input, common, Some(max_degree))),
        Command::Generate { spec, out } => {
            if spec.is_empty() {
                bail!("empty spec");
            }
            cmd_generate(&spec, out.as_deref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: at least one bound violated its soundness check");
            ExitCode::from(EXIT_VIOLATION)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
