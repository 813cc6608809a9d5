//! Batch command-line front end.
//!
//! Every subcommand reads a graph (or, for `ensemble`, a config) as JSON from
//! `--input` or stdin and writes JSON to `--output` or stdout. Exit codes:
//! 0 on success, 1 on bad input, 2 on an internal consistency fault.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::crossing::{coefficients, degree_support, ray_crossings};
use crate::discriminants::{cycle_minor, degenerate_point, discriminant2, factorize, forest_sum_2, gap};
use crate::ensemble::{run, summarize, write_csv, EnsembleConfig};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};
use crate::graph::{parse_graph, SignedGraph};
use crate::spectral::{eigenvalues, index_limits, inertia, laplacian, tau};
use crate::stability::{certify, thresholds};

#[derive(Debug, Parser)]
#[command(name = "signlap", version, about = "Signed graph Laplacian analysis")]
pub struct Cli {
    /// Input file (graph JSON, or ensemble config); stdin when absent or "-".
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Output file; stdout when absent or "-".
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Master seed for `ensemble`, overriding the config.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for `ensemble`.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sizes, component counts, tau, index limits, and the index at --t.
    Analyze {
        /// Red magnitudes, comma separated rationals.
        #[arg(long)]
        t: Option<String>,
    },
    /// Crossing polynomial coefficients and their degree support.
    Coeffs,
    /// Discriminant, gap and related quantities for two red edges.
    Disc,
    /// Linear factorization of the crossing polynomial, or null.
    Factorize,
    /// Thresholds, and the certificate at --t when given.
    Stability {
        #[arg(long)]
        t: Option<String>,
    },
    /// Positive crossings along the ray t * alpha (default alpha = 1).
    Crossings {
        #[arg(long)]
        ray: Option<String>,
    },
    /// Monte Carlo ensemble; CSV to --output, summary JSON to --summary.
    Ensemble {
        /// Summary path; defaults to `<output>.summary.json` when --output is a file.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
}

/// Parses arguments, runs, reports errors on stderr and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("signlap: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    main_with_args(std::env::args_os())
}

fn is_std(p: &Option<PathBuf>) -> bool {
    p.as_deref().is_none_or(|p| p == Path::new("-"))
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    let mut s = String::new();
    if is_std(path) {
        io::stdin().read_to_string(&mut s).map_err(|e| Error::io("<stdin>", e))?;
    } else {
        let p = path.as_ref().unwrap();
        s = fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
    }
    Ok(s)
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    if is_std(path) {
        return Ok(Box::new(io::stdout().lock()));
    }
    let p = path.as_ref().unwrap();
    Ok(Box::new(io::BufWriter::new(fs::File::create(p).map_err(|e| Error::io(p, e))?)))
}

fn write_json(path: &Option<PathBuf>, v: &Value) -> Result<()> {
    let mut out = open_output(path)?;
    let name = path.clone().unwrap_or_else(|| "<stdout>".into());
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out).and_then(|_| out.flush()).map_err(|e| Error::io(name, e))
}

/// Comma-separated rationals; an empty string is the empty vector.
pub fn parse_vector(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| parse_rational(x.trim())).collect()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn analyze(g: &SignedGraph, t: Option<&str>) -> Result<Value> {
    let cc = g.component_counts();
    let connected = cc.whole == 1;
    let mut report = json!({
        "N": g.n(),
        "B": g.black_count(),
        "R": g.red_count(),
        "components": cc,
        "tau": if connected { Some(tau(g)?) } else { None },
        "index_limits": if connected { Some(index_limits(g)?) } else { None },
    });
    if let Some(t) = t {
        let t = parse_vector(t)?;
        let m = laplacian(g, &t)?;
        report["t"] = json!(strings(&t));
        report["index"] = json!(inertia(&m)?);
        report["eigenvalues"] = json!(eigenvalues(&m));
    }
    Ok(report)
}

fn coeffs(g: &SignedGraph) -> Result<Value> {
    let p = coefficients(g)?;
    let support = if g.is_connected() { Some(degree_support(&p, g)?) } else { None };
    Ok(json!({ "R": p.red_count(), "coefficients": p, "degree_support": support }))
}

fn disc(g: &SignedGraph) -> Result<Value> {
    let p = coefficients(g)?;
    let delta = discriminant2(&p)?;
    let sigma = forest_sum_2(g)?;
    if &sigma * &sigma != num::Signed::abs(&delta) {
        return Err(Error::ConsistencyFault(format!(
            "forest sum {sigma} does not square to |discriminant| = |{delta}|"
        )));
    }
    Ok(json!({
        "coefficients": p,
        "delta": delta.to_string(),
        "gap": gap(&p)?,
        "degenerate_point": degenerate_point(&p)?.map(|(x, y)| [x.to_string(), y.to_string()]),
        "forest_sum": sigma.to_string(),
        "cycle_minor": cycle_minor(g)?.map(|m| m.to_string()),
    }))
}

fn stability(g: &SignedGraph, t: Option<&str>) -> Result<Value> {
    match t {
        Some(t) => Ok(serde_json::to_value(certify(g, &parse_vector(t)?)?)?),
        None => {
            let w = thresholds(g)?;
            Ok(json!({ "thresholds": w.iter().map(|x| x.as_ref().map(ToString::to_string)).collect::<Vec<_>>() }))
        }
    }
}

fn crossings(g: &SignedGraph, ray: Option<&str>) -> Result<Value> {
    let p = coefficients(g)?;
    let alpha = match ray {
        Some(r) => parse_vector(r)?,
        None => vec![Rational::from_integer(1.into()); p.red_count()],
    };
    Ok(serde_json::to_value(ray_crossings(&p, &alpha)?)?)
}

fn ensemble(cli: &Cli, summary: &Option<PathBuf>) -> Result<()> {
    let mut config: EnsembleConfig = serde_json::from_str(&read_input(&cli.input)?)?;
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if cli.threads == Some(0) {
        return Err(Error::InvalidArgument("--threads must be positive".into()));
    }
    let records = run(&config, cli.threads)?;
    let name = cli.output.clone().unwrap_or_else(|| "<stdout>".into());
    let mut out = open_output(&cli.output)?;
    write_csv(&records, &mut out)?;
    out.flush().map_err(|e| Error::io(&name, e))?;

    let summary_path = summary.clone().or_else(|| {
        (!is_std(&cli.output)).then(|| {
            let mut s = cli.output.clone().unwrap().into_os_string();
            s.push(".summary.json");
            PathBuf::from(s)
        })
    });
    if let Some(path) = summary_path {
        write_json(&Some(path), &serde_json::to_value(summarize(&records)?)?)?;
    }
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<()> {
    if let Command::Ensemble { summary } = &cli.command {
        return ensemble(cli, summary);
    }
    let g = parse_graph(&read_input(&cli.input)?)?;
    let v = match &cli.command {
        Command::Analyze { t } => analyze(&g, t.as_deref())?,
        Command::Coeffs => coeffs(&g)?,
        Command::Disc => disc(&g)?,
        Command::Factorize => serde_json::to_value(factorize(&coefficients(&g)?)?)?,
        Command::Stability { t } => stability(&g, t.as_deref())?,
        Command::Crossings { ray } => crossings(&g, ray.as_deref())?,
        Command::Ensemble { .. } => unreachable!(),
    };
    write_json(&cli.output, &v)
}
