//! `lalpha`: build graphs, compute `L_α` spectra and characteristic
//! polynomials, sweep α, and run the verification suite.
//!
//! Exit codes: 0 success, 1 verification failure or I/O error, 2 parse or
//! parameter error, 3 α outside its domain, 4 graph too large for `charpoly`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use lalpha::graph::{
    cartesian, coalesce, direct, join, make_core_satellite, make_h_graph, make_kk_graph, make_named,
    make_pineapple, make_splitting, read_edge_list, strong, union, write_edge_list, Family, Graph,
    VertexId,
};
use lalpha::matrix::{a_alpha_matrix, char_poly, eigen_sym, eigen_sym_values, l_alpha_matrix, AlphaParam};
use lalpha::theorems::TheoremId;
use lalpha::verify::{default_corpus, run_suite, GraphSpec, VerificationCase};
use lalpha::Error;

/// Largest order accepted by `charpoly`.
const CHARPOLY_MAX_ORDER: usize = 20;

#[derive(Parser)]
#[command(name = "lalpha", version, about = "Spectra of L_alpha(G) = alpha*D(G) + (alpha-1)*A(G)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph, or combine two edge-list files, and write an edge list.
    Construct(ConstructArgs),
    /// Eigenvalues with multiplicities at one alpha.
    Spectrum(SpectrumArgs),
    /// Sorted eigenvalues over an alpha grid, as CSV.
    Sweep(SweepArgs),
    /// Characteristic polynomial coefficients, highest degree first.
    Charpoly(CharpolyArgs),
    /// Check closed forms against the eigensolver.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Complete,
    Path,
    Cycle,
    CompleteBipartite,
    Star,
    Empty,
    Pineapple,
    H,
    Kk,
    CoreSatellite,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpName {
    Union,
    Join,
    Cartesian,
    Direct,
    Strong,
    Coalesce,
    Splitting,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, conflicts_with = "op", required_unless_present = "op")]
    family: Option<FamilyName>,
    #[arg(long)]
    op: Option<OpName>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    eta: Option<usize>,
    /// First operand: edge-list file or a name such as `k4`, `c5`, `p3`.
    #[arg(long)]
    g: Option<String>,
    /// Second operand (binary operations).
    #[arg(long)]
    h: Option<String>,
    /// Vertex of G identified by `coalesce`.
    #[arg(long, default_value_t = 0)]
    u: usize,
    /// Vertex of H identified by `coalesce`.
    #[arg(long, default_value_t = 0)]
    v: usize,
    /// Output file; the edge list goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    /// `αD + (α − 1)A`.
    LAlpha,
    /// `αD + (1 − α)A`.
    AAlpha,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Edge-list file or a graph name such as `k5`.
    #[arg(long)]
    graph: String,
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, value_enum, default_value_t = MatrixKind::LAlpha)]
    matrix: MatrixKind,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    graph: String,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha_start: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    alpha_end: f64,
    #[arg(long, default_value_t = 11)]
    steps: usize,
    /// Output CSV file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CharpolyArgs {
    #[arg(long)]
    graph: String,
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// `default`, or a JSON file holding a list of cases.
    #[arg(long, conflicts_with = "theorem", required_unless_present = "theorem")]
    suite: Option<String>,
    /// Run a single theorem instead of a suite.
    #[arg(long)]
    theorem: Option<TheoremId>,
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    h: Option<String>,
    /// Identified vertices for `coalescence`, as `u,v`.
    #[arg(long, value_parser = parse_anchors)]
    anchors: Option<(usize, usize)>,
    /// Number of evenly spaced alpha values in [0, 1].
    #[arg(long)]
    alpha_grid: Option<usize>,
    /// Overrides the per-theorem tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Print the JSON report instead of the table.
    #[arg(long)]
    json: bool,
}

fn parse_anchors(s: &str) -> Result<(usize, usize), String> {
    let (u, v) = s.split_once(',').ok_or("expected u,v")?;
    Ok((u.trim().parse().map_err(|e| format!("{e}"))?, v.trim().parse().map_err(|e| format!("{e}"))?))
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::AlphaOutOfRange(_) | Error::AlphaBoundary(_) => 3,
            Error::ParameterOutOfRange(_)
            | Error::InvalidVertex { .. }
            | Error::InvalidEdge { .. }
            | Error::Parse { .. }
            | Error::InvalidPartition(_)
            | Error::NotRegular(_)
            | Error::NotConnected => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Sweep(a) => sweep(a),
        Command::Charpoly(a) => charpoly(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// An existing file is read as an edge list; anything else must be a graph name.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    if Path::new(arg).exists() {
        return Ok(read_edge_list(arg)?);
    }
    match arg.parse::<GraphSpec>() {
        Ok(spec) => Ok(spec.build()?),
        Err(_) => Err(usage(format!("'{arg}' is neither a readable edge-list file nor a graph name"))),
    }
}

fn graph_spec_arg(arg: &str) -> Result<GraphSpec, Failure> {
    if Path::new(arg).exists() {
        return Ok(GraphSpec::from_graph(&read_edge_list(arg)?));
    }
    arg.parse::<GraphSpec>().map_err(|_| usage(format!("'{arg}' is neither a readable edge-list file nor a graph name")))
}

fn required(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| usage(format!("--{flag} is required for this family")))
}

/// Rounds to 12 significant digits and clears negative zero.
fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Like [`round12`], but values below the 12th significant digit of `scale`
/// (eigensolver noise around a zero eigenvalue) print as 0.
fn round12_scaled(x: f64, scale: f64) -> f64 {
    let quantum = 10f64.powi(scale.abs().max(1.0).log10().floor() as i32 - 11);
    if x.abs() < 0.5 * quantum {
        0.0
    } else {
        round12(x)
    }
}

fn spectral_scale(values: &[f64]) -> f64 {
    values.iter().fold(1.0, |m, v| m.max(v.abs()))
}

fn format12(x: f64) -> String {
    serde_json::to_string(&x).unwrap_or_else(|_| x.to_string())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure { code: 1, message: format!("cannot write {}: {e}", path.display()) }),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn construct(a: ConstructArgs) -> Result<u8, Failure> {
    let g = if let Some(family) = a.family {
        match family {
            FamilyName::Complete => make_named(Family::Complete { n: required(a.n, "n")? })?,
            FamilyName::Path => make_named(Family::Path { n: required(a.n, "n")? })?,
            FamilyName::Cycle => make_named(Family::Cycle { n: required(a.n, "n")? })?,
            FamilyName::CompleteBipartite => {
                make_named(Family::CompleteBipartite { p: required(a.p, "p")?, q: required(a.q, "q")? })?
            }
            FamilyName::Star => make_named(Family::Star { n: required(a.n, "n")? })?,
            FamilyName::Empty => make_named(Family::Empty { n: required(a.n, "n")? })?,
            FamilyName::Pineapple => make_pineapple(required(a.p, "p")?, required(a.q, "q")?)?,
            FamilyName::H => make_h_graph(required(a.n, "n")?, required(a.l, "l")?)?,
            FamilyName::Kk => make_kk_graph(required(a.n, "n")?, required(a.l, "l")?)?,
            FamilyName::CoreSatellite => {
                make_core_satellite(required(a.c, "c")?, required(a.s, "s")?, required(a.eta, "eta")?)?
            }
        }
    } else {
        let op = a.op.expect("clap requires --family or --op");
        let g = load_graph(a.g.as_deref().ok_or_else(|| usage("--g is required with --op"))?)?;
        if let OpName::Splitting = op {
            make_splitting(&g)
        } else {
            let h = load_graph(a.h.as_deref().ok_or_else(|| usage("--h is required for binary operations"))?)?;
            match op {
                OpName::Union => union(&g, &h),
                OpName::Join => join(&g, &h),
                OpName::Cartesian => cartesian(&g, &h),
                OpName::Direct => direct(&g, &h),
                OpName::Strong => strong(&g, &h),
                OpName::Coalesce => coalesce(&g, VertexId(a.u), &h, VertexId(a.v))?,
                OpName::Splitting => unreachable!(),
            }
        }
    };
    let edges = write_edge_list(&g);
    let regular = match g.regular_degree() {
        Some(k) => format!("{k}-regular"),
        None => "no".to_string(),
    };
    let summary = format!(
        "n={} m={} regular={} bipartite={}",
        g.order(),
        g.size(),
        regular,
        if g.is_bipartite() { "yes" } else { "no" }
    );
    match &a.out {
        Some(path) => {
            emit(Some(path), &edges)?;
            println!("{summary}");
        }
        None => {
            emit(None, &edges)?;
            eprintln!("{summary}");
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct SpectrumEntry {
    value: f64,
    multiplicity: usize,
}

#[derive(Serialize)]
struct SpectrumOutput {
    alpha: f64,
    spectrum: Vec<SpectrumEntry>,
}

fn spectrum(a: SpectrumArgs) -> Result<u8, Failure> {
    let alpha = AlphaParam::new(a.alpha)?;
    let g = load_graph(&a.graph)?;
    let m = match a.matrix {
        MatrixKind::LAlpha => l_alpha_matrix(&g, alpha),
        MatrixKind::AAlpha => a_alpha_matrix(&g, alpha),
    };
    let spec = eigen_sym(&m)?;
    let scale = spectral_scale(&spec.values());
    match a.format {
        Format::Json => {
            let out = SpectrumOutput {
                alpha: alpha.value(),
                spectrum: spec
                    .groups()
                    .iter()
                    .map(|e| SpectrumEntry { value: round12_scaled(e.value, scale), multiplicity: e.multiplicity })
                    .collect(),
            };
            println!("{}", serde_json::to_string(&out).expect("plain data serializes"));
        }
        Format::Table => {
            println!("alpha = {}", alpha.value());
            println!("{:>20}  multiplicity", "eigenvalue");
            for e in spec.groups() {
                println!("{:>20}  {}", format12(round12_scaled(e.value, scale)), e.multiplicity);
            }
        }
    }
    Ok(0)
}

fn sweep(a: SweepArgs) -> Result<u8, Failure> {
    let grid = AlphaParam::grid(a.alpha_start, a.alpha_end, a.steps)?;
    let g = load_graph(&a.graph)?;
    let rows: Vec<Result<Vec<f64>, Error>> =
        grid.par_iter().map(|&alpha| eigen_sym_values(&l_alpha_matrix(&g, alpha))).collect();
    let mut csv = String::from("alpha");
    for i in 1..=g.order() {
        csv.push_str(&format!(",lambda_{i}"));
    }
    csv.push('\n');
    for (alpha, row) in grid.iter().zip(rows) {
        let row = row?;
        let scale = spectral_scale(&row);
        csv.push_str(&format12(round12(alpha.value())));
        for v in row {
            csv.push(',');
            csv.push_str(&format12(round12_scaled(v, scale)));
        }
        csv.push('\n');
    }
    emit(a.out.as_deref(), &csv)?;
    Ok(0)
}

fn charpoly(a: CharpolyArgs) -> Result<u8, Failure> {
    let alpha = AlphaParam::new(a.alpha)?;
    let g = load_graph(&a.graph)?;
    if g.order() > CHARPOLY_MAX_ORDER {
        return Err(Failure {
            code: 4,
            message: format!("charpoly supports graphs of order at most {CHARPOLY_MAX_ORDER}, got {}", g.order()),
        });
    }
    let p = char_poly(l_alpha_matrix(&g, alpha).as_dense())?;
    let coeffs: Vec<f64> = p.descending().into_iter().map(round12).collect();
    println!("{}", serde_json::to_string(&coeffs).expect("plain data serializes"));
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8, Failure> {
    let mut cases = if let Some(theorem) = a.theorem {
        let g = graph_spec_arg(a.g.as_deref().ok_or_else(|| usage("--g is required with --theorem"))?)?;
        let mut case = VerificationCase::new(theorem, g);
        if let Some(h) = &a.h {
            case = case.with_h(graph_spec_arg(h)?);
        }
        if let Some((u, v)) = a.anchors {
            case = case.with_anchors(u, v);
        }
        if let Some(steps) = a.alpha_grid {
            let grid = AlphaParam::grid(0.0, 1.0, steps)?;
            case = case.with_grid(grid.into_iter().map(AlphaParam::value).collect());
        }
        vec![case]
    } else {
        match a.suite.as_deref() {
            Some("default") | None => default_corpus(),
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| usage(format!("cannot read suite {path}: {e}")))?;
                serde_json::from_str::<Vec<VerificationCase>>(&text)
                    .map_err(|e| usage(format!("invalid suite {path}: {e}")))?
            }
        }
    };
    if let Some(tol) = a.tol {
        if tol.is_nan() || tol <= 0.0 {
            return Err(usage(format!("--tol must be positive, got {tol}")));
        }
        for c in &mut cases {
            c.tolerance = tol;
        }
    }
    let report = run_suite(&cases);
    if a.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.table());
    }
    Ok(if report.ok() { 0 } else { 1 })
}
