//! The `token-spectra` command line: `build`, `spectrum` and `verify`.
//!
//! Exit codes are 0 on success, 1 when verification records a FAIL and 2
//! for configuration errors or refused sizes.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bounds::{BoundsError, Tolerances};
use crate::graph::{parse_edge_list, write_edge_list, Family, Graph, GraphError};
use crate::spectra::{
    eigenvectors_csv, extremal_eigenvalues, format_value, laplacian_spectrum, spectrum_csv, EigenError,
    ExtremalOptions, DEFAULT_DENSE_CAP,
};
use crate::token::{binomial, elements_of, TokenError, TokenGraph, DEFAULT_VERTEX_CAP};
use crate::verify::{
    verify_fixtures, verify_graph, Report, VerifyError, VerifyOptions, DEFAULT_RANDOM_VECTORS, DEFAULT_SEED,
};

/// Overrides the default vertex cap of every subcommand.
pub const CAP_ENV: &str = "TOKEN_SPECTRA_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("F_{k} of a {n}-vertex graph has C({n},{k}) = {vertices} vertices, above the cap of {cap} (raise it with --cap or {CAP_ENV})")]
    TooLarge { n: usize, k: usize, vertices: usize, cap: usize },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Token(#[from] TokenError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Debug, Parser)]
#[command(name = "token-spectra", version, about = "Token graphs, Laplacian spectra and eigenvalue bound checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write F_k(G) as an edge list, with a rank map sidecar.
    Build(BuildArgs),
    /// Laplacian spectrum of F_k(G) as `index,eigenvalue` lines.
    Spectrum(SpectrumArgs),
    /// Run the check battery and write a report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct Input {
    /// Named family, e.g. `cycle:7`, `hamming:2,3`, `petersen`.
    #[arg(long)]
    pub family: Option<Family>,
    /// Edge-list file: `n m` header then `u v` lines, 1-based.
    #[arg(long, value_name = "PATH")]
    pub edge_list: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub k: usize,
    /// Largest C(n,k) to construct [default: 20000].
    #[arg(long)]
    pub cap: Option<usize>,
    /// Edge-list output; stdout when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Rank map output [default: <out>.map when --out is given].
    #[arg(long, value_name = "PATH")]
    pub map: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub k: usize,
    /// Largest C(n,k) to diagonalize [default: 3000; 20000 with --extremal].
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Also write the eigenvectors as a dense CSV matrix.
    #[arg(long, value_name = "PATH", conflicts_with = "extremal")]
    pub vectors: Option<PathBuf>,
    /// Only λ_2 and λ_N, by iteration, without a dense decomposition.
    #[arg(long)]
    pub extremal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: Input,
    /// Run the standard fixture set instead of one graph.
    #[arg(long, conflicts_with_all = ["family", "edge_list", "k"])]
    pub fixtures: bool,
    /// `a` or `a..b` [default: 1..n/2].
    #[arg(long, value_parser = parse_k_range)]
    pub k: Option<(usize, usize)>,
    /// `name=value` with name one of matching, equality, bound, identity,
    /// lift_residual, lift_threshold, embedding. Repeatable.
    #[arg(long, value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
    /// Largest C(n,k) to diagonalize [default: 3000].
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Random vectors per instance for the P/Q/R/S checks.
    #[arg(long, default_value_t = DEFAULT_RANDOM_VECTORS)]
    pub random_vectors: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

pub fn parse_k_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("expected `a` or `a..b`, got `{s}`"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty k range `{s}`"));
            }
            Ok((a, b))
        }
        None => num(s).map(|k| (k, k)),
    }
}

fn parse_tolerances(overrides: &[String]) -> Result<Tolerances, CliError> {
    let mut t = Tolerances::default();
    for o in overrides {
        let (name, value) =
            o.split_once('=').ok_or_else(|| CliError::Config(format!("--tol expects NAME=VALUE, got `{o}`")))?;
        let value: f64 = value
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite() && *v >= 0.0)
            .ok_or_else(|| CliError::Config(format!("--tol {name}: `{value}` is not a non-negative number")))?;
        let slot = match name {
            "matching" => &mut t.matching,
            "equality" => &mut t.equality,
            "bound" => &mut t.bound,
            "identity" => &mut t.identity,
            "lift_residual" => &mut t.lift_residual,
            "lift_threshold" => &mut t.lift_threshold,
            "embedding" => &mut t.embedding,
            _ => return Err(CliError::Config(format!("--tol: unknown tolerance `{name}`"))),
        };
        *slot = value;
    }
    Ok(t)
}

fn env_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(CAP_ENV) {
        Ok(s) => {
            s.trim().parse().map(Some).map_err(|_| CliError::Config(format!("{CAP_ENV}=`{s}` is not a vertex count")))
        }
        Err(_) => Ok(None),
    }
}

fn resolve_cap(flag: Option<usize>, default: usize) -> Result<usize, CliError> {
    Ok(match flag {
        Some(c) => c,
        None => env_cap()?.unwrap_or(default),
    })
}

impl Input {
    fn load(&self) -> Result<(String, Graph), CliError> {
        match (&self.family, &self.edge_list) {
            (Some(f), None) => Ok((f.to_string(), f.build()?)),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|source| io_err(path, source))?;
                Ok((path.display().to_string(), parse_edge_list(&text)?))
            }
            _ => Err(CliError::Config("give exactly one of --family or --edge-list".into())),
        }
    }
}

fn io_err(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io { path: path.display().to_string(), source }
}

fn check_size(g: &Graph, k: usize, cap: usize) -> Result<(), CliError> {
    let n = g.order();
    if k == 0 || k > n {
        return Err(TokenError::KOutOfRange { k, n }.into());
    }
    let vertices = binomial(n, k);
    if vertices > cap {
        return Err(CliError::TooLarge { n, k, vertices, cap });
    }
    Ok(())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| io_err(path, source)),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

/// `rank: {e1,e2,...}` per token vertex, rank 0-based and elements 1-based.
/// Vertex `rank + 1` of the edge list is the subset on line `rank`.
pub fn rank_map(t: &TokenGraph) -> String {
    let mut s = String::new();
    for (rank, &mask) in t.index().masks().iter().enumerate() {
        let elements: Vec<String> = elements_of(mask).iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "{rank}: {{{}}}", elements.join(","));
    }
    s
}

fn build(args: &BuildArgs) -> Result<(), CliError> {
    let (_, g) = args.input.load()?;
    let cap = resolve_cap(args.cap, DEFAULT_VERTEX_CAP)?;
    check_size(&g, args.k, cap)?;
    let t = TokenGraph::with_cap(&g, args.k, cap)?;
    emit(args.out.as_deref(), &write_edge_list(t.graph()))?;
    let map = args.map.clone().or_else(|| {
        args.out.as_ref().map(|p| {
            let mut s = p.clone().into_os_string();
            s.push(".map");
            PathBuf::from(s)
        })
    });
    if let Some(path) = map {
        emit(Some(&path), &rank_map(&t))?;
    }
    Ok(())
}

fn spectrum(args: &SpectrumArgs) -> Result<(), CliError> {
    let (_, g) = args.input.load()?;
    let default = if args.extremal { DEFAULT_VERTEX_CAP } else { DEFAULT_DENSE_CAP };
    let cap = resolve_cap(args.cap, default)?;
    check_size(&g, args.k, cap)?;
    let t = TokenGraph::with_cap(&g, args.k, cap)?;
    if args.extremal {
        let e = extremal_eigenvalues(t.graph(), ExtremalOptions::default())?;
        let text = format!(
            "2,{}\n{},{}\n",
            format_value(e.algebraic_connectivity),
            t.graph().order(),
            format_value(e.largest)
        );
        return emit(args.out.as_deref(), &text);
    }
    let s = laplacian_spectrum(t.graph())?;
    emit(args.out.as_deref(), &spectrum_csv(&s))?;
    if let Some(path) = &args.vectors {
        emit(Some(path), &eigenvectors_csv(&s))?;
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> Result<bool, CliError> {
    let opts = VerifyOptions {
        tolerances: parse_tolerances(&args.tol)?,
        cap: resolve_cap(args.cap, DEFAULT_DENSE_CAP)?,
        random_vectors: args.random_vectors,
        seed: args.seed,
    };
    let report = if args.fixtures {
        verify_fixtures(&opts)?
    } else {
        let (id, g) = args.input.load()?;
        let n = g.order();
        let (lo, hi) = args.k.unwrap_or((1, (n / 2).max(1)));
        if lo == 0 || hi > n {
            return Err(CliError::Config(format!("k range {lo}..{hi} is outside 1..{n}")));
        }
        if let Some(k) = (1..=hi).find(|&k| binomial(n, k) > opts.cap) {
            return Err(CliError::TooLarge { n, k, vertices: binomial(n, k), cap: opts.cap });
        }
        Report { instances: verify_graph(&id, &g, lo..=hi, &opts)? }
    };
    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(!report.has_failures())
}

/// Runs a parsed command; `Ok(false)` means verification found a FAIL.
pub fn execute(cli: &Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::Build(a) => build(a).map(|_| true),
        Command::Spectrum(a) => spectrum(a).map(|_| true),
        Command::Verify(a) => verify(a),
    }
}

/// Parses `std::env::args`, runs, and maps the outcome to an exit code.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
