//! The `cheeger` command-line tool.
//!
//! ```text
//! cheeger solve    --catalog reuleaux_polygon --param k=5
//! cheeger symmetry --input body.json --k 3 --svg fig.svg
//! cheeger oracle   --catalog disk --grid 1024 --pgm disk.pgm
//! cheeger render   --catalog rectangle --param w=2 --k 2 --svg rect.svg
//! cheeger catalog  [--catalog NAME [--param k=v]...]
//! ```
//!
//! Exit codes: 0 success, 1 invalid input, 2 numeric failure, 3 symmetry
//! rejected.

use crate::error::{Error, Result};
use crate::geometry::{Body, CatalogShape, Point, ShapeName};
use crate::json::{self, OracleJson, ResultJson};
use crate::oracle::{oracle_cheeger_raster, rasterize};
use crate::solver::{solve_with_contact_tol, CheegerResult, SolverConfig};
use crate::svg::{self, Figure};
use crate::symmetry::{
    detect_symmetry, dots_and_edges, regularity_report, Detection, RegularityReport,
    CONTACT_REL_TOL, SYM_REL_TOL,
};
use clap::{Parser, ValueEnum};
use std::path::{Path, PathBuf};

/// Largest relative error of the grid oracle counted as agreement.
pub const ORACLE_REL_TOL: f64 = 0.02;
/// Smallest grid at which the oracle is expected to agree.
pub const ORACLE_MIN_GRID: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Cheeger constant and Cheeger set.
    Solve,
    /// Rotational symmetry and Cheeger-regularity report (needs --k).
    Symmetry,
    /// Compare against the grid oracle.
    Oracle,
    /// Draw the body, inner parallel set and Cheeger set (needs --svg).
    Render,
    /// List catalog shapes, or print one as a constraint body.
    Catalog,
}

#[derive(Debug, Parser)]
#[command(
    name = "cheeger",
    version,
    about = "Cheeger constants and Cheeger sets of planar convex bodies"
)]
pub struct Args {
    pub command: Command,
    /// Body JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Catalog shape name.
    #[arg(long)]
    pub catalog: Option<String>,
    /// Catalog parameter, `name=value` (repeatable).
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
    /// Symmetry order.
    #[arg(long)]
    pub k: Option<usize>,
    /// Absolute root tolerance on s.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Absolute contact tolerance (default: 1e-9 x diameter for solve,
    /// 1e-7 x diameter for edge contacts).
    #[arg(long)]
    pub contact_tol: Option<f64>,
    /// Absolute symmetry tolerance (default: 1e-8 x diameter).
    #[arg(long)]
    pub sym_tol: Option<f64>,
    /// Oracle grid resolution.
    #[arg(long, default_value_t = 1024)]
    pub grid: usize,
    /// Write JSON here instead of standard output.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Write an SVG figure here.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Write the oracle distance field here as a binary PGM image.
    #[arg(long)]
    pub pgm: Option<PathBuf>,
}

/// Why a command did not succeed.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error(transparent)]
    Error(#[from] Error),
    #[error("no {k}-fold rotational symmetry: residual {residual:e} exceeds {tol:e}")]
    SymmetryRejected { k: usize, residual: f64, tol: f64 },
    #[error("oracle disagrees: relative error {rel_err:e} at n = {n}")]
    OracleMismatch { rel_err: f64, n: usize },
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Error(e) => e.exit_code(),
            Failure::SymmetryRejected { .. } => 3,
            Failure::OracleMismatch { .. } => 2,
        }
    }
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::invalid(format!(
            "--{name} must be positive, got {v}"
        )))
    }
}

fn parse_params(raw: &[String]) -> Result<Vec<(String, f64)>> {
    raw.iter()
        .map(|p| {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("--param expects name=value, got '{p}'")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("--param {k}: '{v}' is not a number")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn catalog_shape(name: &str, params: &[String]) -> Result<CatalogShape> {
    let mut shape = CatalogShape::new(name.parse::<ShapeName>()?);
    for (k, v) in parse_params(params)? {
        shape = shape.with(&k, v);
    }
    Ok(shape)
}

fn load_body(args: &Args) -> Result<Body> {
    match (&args.input, &args.catalog) {
        (Some(path), None) => {
            if !args.params.is_empty() {
                return Err(Error::invalid("--param only applies to --catalog"));
            }
            Body::from_path(path)
        }
        (None, Some(name)) => Body::from_catalog(&catalog_shape(name, &args.params)?),
        _ => Err(Error::invalid("give exactly one of --input and --catalog")),
    }
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
}

fn emit(args: &Args, text: &str, out: &mut String) -> Result<()> {
    match &args.json {
        Some(p) => write_text(p, text),
        None => {
            out.push_str(text);
            Ok(())
        }
    }
}

fn config(args: &Args) -> Result<SolverConfig> {
    Ok(SolverConfig {
        root_tol: positive("tol", args.tol)?,
        ..SolverConfig::default()
    })
}

fn solve_body(args: &Args, body: &Body) -> Result<CheegerResult> {
    let cfg = config(args)?;
    let tol = match args.contact_tol {
        Some(t) => positive("contact-tol", t)?,
        None => cfg.containment_tol * body.chain.diameter(),
    };
    solve_with_contact_tol(&body.spec, &cfg, tol)
}

fn symmetry_report(
    args: &Args,
    body: &Body,
    result: &CheegerResult,
) -> std::result::Result<RegularityReport, Failure> {
    let k = args.k.ok_or_else(|| Error::invalid("--k is required"))?;
    let diam = body.chain.diameter();
    let sym_tol = match args.sym_tol {
        Some(t) => positive("sym-tol", t)?,
        None => SYM_REL_TOL * diam,
    };
    let sym = match detect_symmetry(&body.chain, k, sym_tol)? {
        Detection::Accepted(s) => s,
        Detection::Rejected { k, residual, tol } => {
            return Err(Failure::SymmetryRejected { k, residual, tol })
        }
    };
    let contact_tol = match args.contact_tol {
        Some(t) => positive("contact-tol", t)?,
        None => CONTACT_REL_TOL * diam,
    };
    let de = dots_and_edges(&body.chain, &sym)?;
    Ok(regularity_report(&sym, &de, result, contact_tol))
}

fn figure_svg(body: &Body, result: &CheegerResult, report: Option<&RegularityReport>) -> String {
    let witnesses: Vec<Point> = report
        .map(|r| r.edge_contacts.iter().filter_map(|c| c.witness).collect())
        .unwrap_or_default();
    svg::render(&Figure {
        body: Some(&body.chain),
        inner: Some(&result.inner_set),
        cheeger: Some(&result.cheeger_set),
        dots: report.map(|r| r.dots.as_slice()).unwrap_or(&[]),
        witnesses: &witnesses,
    })
}

fn catalog_listing() -> String {
    let mut s = String::new();
    for name in ShapeName::ALL {
        let ps: Vec<String> = name
            .parameters()
            .iter()
            .map(|(k, d)| match d {
                Some(v) => format!("{k}={v}"),
                None => format!("{k}=auto"),
            })
            .collect();
        s.push_str(&format!("{name} {}\n", ps.join(" ")));
    }
    s
}

/// Runs one command, appending standard output to `out`.
pub fn execute(args: &Args, out: &mut String) -> std::result::Result<(), Failure> {
    match args.command {
        Command::Catalog => {
            if args.input.is_some() {
                return Err(Error::invalid("catalog takes --catalog, not --input").into());
            }
            match &args.catalog {
                None => out.push_str(&catalog_listing()),
                Some(_) => {
                    let body = load_body(args)?;
                    emit(args, &json::to_string(&body.to_input())?, out)?;
                }
            }
        }
        Command::Solve => {
            let body = load_body(args)?;
            let result = solve_body(args, &body)?;
            emit(args, &json::to_string(&ResultJson::new(&result))?, out)?;
            if let Some(p) = &args.svg {
                write_text(p, &figure_svg(&body, &result, None))?;
            }
        }
        Command::Symmetry => {
            let body = load_body(args)?;
            if args.k.is_none() {
                return Err(Error::invalid("symmetry needs --k").into());
            }
            let result = solve_body(args, &body)?;
            let report = symmetry_report(args, &body, &result)?;
            emit(args, &json::to_string(&report)?, out)?;
            if let Some(p) = &args.svg {
                write_text(p, &figure_svg(&body, &result, Some(&report)))?;
            }
        }
        Command::Render => {
            let path = args
                .svg
                .as_ref()
                .ok_or_else(|| Error::invalid("render needs --svg"))?;
            let body = load_body(args)?;
            let result = solve_body(args, &body)?;
            let report = match args.k {
                Some(_) => Some(symmetry_report(args, &body, &result)?),
                None => None,
            };
            write_text(path, &figure_svg(&body, &result, report.as_ref()))?;
        }
        Command::Oracle => {
            let body = load_body(args)?;
            let h_exact = 1.0 / crate::solver::solve_s(&body.spec, &config(args)?)?;
            let raster = rasterize(&body.spec, args.grid)?;
            if let Some(p) = &args.pgm {
                let file = std::fs::File::create(p)
                    .map_err(|e| Error::invalid(format!("cannot write {}: {e}", p.display())))?;
                raster.write_pgm(std::io::BufWriter::new(file))?;
            }
            let h_oracle = oracle_cheeger_raster(&raster)?.h;
            let rel_err = (h_oracle - h_exact).abs() / h_exact;
            let report = OracleJson {
                h_exact,
                h_oracle,
                rel_err,
                n: args.grid,
            };
            emit(args, &json::to_string(&report)?, out)?;
            if !(rel_err <= ORACLE_REL_TOL && args.grid >= ORACLE_MIN_GRID) {
                return Err(Failure::OracleMismatch {
                    rel_err,
                    n: args.grid,
                });
            }
        }
    }
    Ok(())
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut out = String::new();
    let res = execute(&args, &mut out);
    print!("{out}");
    match res {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
    }
}
