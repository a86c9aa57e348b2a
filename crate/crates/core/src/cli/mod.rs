//! The `polycover` command line.
//!
//! Every subcommand prints `key=value` lines (or one JSON object with
//! `--json`) and exits with 0 on success, 1 when a verification finds a
//! counterexample, 2 on bad input and 3 on internal or degenerate failures.

mod io;
mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::BigRational;
use crate::bounds::{bounds_table, heptagon_report, BoundsError};
use crate::geom::{random_convex_ngon, regular_ngon, ConvexPolygon, GeomError};
use crate::hexagon::{circumscribe_hexagon, final_identity_check, HexagonError};
use crate::oracle::{min_area_ngon, OracleError};
use crate::pentagon::{certificate_check, circumscribe_pentagon, PentagonError};
use crate::search::{search_extremal, SearchError};

pub use io::{parse_polygon, polygon_io, write_polygon, PolygonFile};
pub use svg::{svg_emit, svg_string};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invalid polygon: {0}")]
    Geometry(#[from] GeomError),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Input(_) | CliError::Geometry(_) => 2,
            CliError::Io(_) | CliError::Internal(_) => 3,
        }
    }
}

impl From<PentagonError> for CliError {
    fn from(e: PentagonError) -> Self {
        match e {
            PentagonError::WrongVertexCount(_) => CliError::Input(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<HexagonError> for CliError {
    fn from(e: HexagonError) -> Self {
        match e {
            HexagonError::WrongVertexCount(_) => CliError::Input(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BadSideCount { .. } => CliError::Input(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::BadSideCount { .. } => CliError::Input(e.to_string()),
            BoundsError::Oracle(o) => o.into(),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BadParameters { .. } => CliError::Input(e.to_string()),
            SearchError::Oracle(o) => o.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Report,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunSummary {
    pub command: String,
    pub status: Status,
    pub metrics: Vec<(String, Value)>,
    pub counterexample: Option<PolygonFile>,
}

impl RunSummary {
    fn new(command: &str, status: Status) -> Self {
        RunSummary {
            command: command.to_string(),
            status,
            metrics: Vec::new(),
            counterexample: None,
        }
    }

    fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.metrics.push((key.to_string(), value.into()));
        self
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Fail => 1,
            _ => 0,
        }
    }

    pub fn to_lines(&self) -> String {
        let mut out = format!("command={}\nstatus={}\n", self.command, status_text(self.status));
        for (k, v) in &self.metrics {
            match v {
                Value::String(s) => out.push_str(&format!("{k}={s}\n")),
                other => out.push_str(&format!("{k}={other}\n")),
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let metrics: serde_json::Map<String, Value> = self.metrics.iter().cloned().collect();
        let obj = json!({
            "command": self.command,
            "status": self.status,
            "metrics": metrics,
            "counterexample": self.counterexample,
        });
        serde_json::to_string_pretty(&obj).expect("json values serialize")
    }
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Report => "report",
    }
}

#[derive(Parser, Debug)]
#[command(name = "polycover", version, about = "Small polygons around convex polygons")]
struct Cli {
    /// Print one JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Shape {
    Pentagon,
    Hexagon,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Circumscribe an n-gon around the polygon in a file.
    Circumscribe {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        sides: usize,
        /// Also draw the result.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Build the construction in exact rational arithmetic.
        #[arg(long)]
        exact: bool,
    },
    /// Check the construction bound on random convex polygons.
    Verify {
        #[arg(value_enum)]
        shape: Shape,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Check the polynomial certificate exactly.
    Certify {
        #[arg(value_enum)]
        shape: Shape,
    },
    /// Tabulate bounds and regular-polygon ratios.
    Bounds {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Write a regular polygon as JSON.
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        area: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Search for m-gons with a large smallest circumscribing n-gon.
    Search {
        #[arg(long)]
        inner: usize,
        #[arg(long)]
        outer: usize,
        #[arg(long, default_value_t = 10_000)]
        iters: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Smallest circumscribing n-gon by enumeration.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        sides: usize,
    },
}

fn polygon_json(p: &ConvexPolygon) -> Value {
    json!(PolygonFile::from_polygon(p).vertices)
}

fn circumscribe(input: &Path, sides: usize, svg: Option<&Path>, exact: bool) -> Result<RunSummary, CliError> {
    let p = polygon_io(input)?;
    let m = p.len();
    let mut s = RunSummary::new("circumscribe", Status::Report);
    s.put("vertices", m as u64).put("sides", sides as u64);
    let (method, result) = match (m, sides) {
        (5, 4) if exact => {
            let c = circumscribe_pentagon(&p.to_exact::<BigRational>())?;
            s.put("ratio_exact", c.ratio.to_string());
            ("pentagon-construction", c.to_f64())
        }
        (6, 5) if exact => {
            let c = circumscribe_hexagon(&p.to_exact::<BigRational>())?;
            s.put("ratio_exact", c.ratio.to_string());
            ("hexagon-construction", c.to_f64())
        }
        _ if exact => {
            return Err(CliError::Input(
                "--exact needs a pentagon with --sides 4 or a hexagon with --sides 5".into(),
            ))
        }
        (5, 4) => ("pentagon-construction", circumscribe_pentagon(&p)?),
        (6, 5) => ("hexagon-construction", circumscribe_hexagon(&p)?),
        _ => ("oracle", min_area_ngon(&p, sides)?.best),
    };
    s.put("method", method)
        .put("ratio", result.ratio)
        .put("area", p.area())
        .put("cover_area", result.area())
        .put("labeling", result.labeling as u64)
        .put("cover", polygon_json(&result.cover));
    if let Some(path) = svg {
        svg_emit(&p, &result.cover, path)?;
        s.put("svg", path.display().to_string());
    }
    Ok(s)
}

fn verify(shape: Shape, samples: u64, seed: u64) -> Result<RunSummary, CliError> {
    let (m, bound, name) = match shape {
        Shape::Pentagon => (5, 3.0 / 5f64.sqrt(), "pentagon"),
        Shape::Hexagon => (6, 7.0 / 6.0, "hexagon"),
    };
    let check = |i: u64| -> (f64, Option<(u64, ConvexPolygon)>) {
        let sample_seed = seed.wrapping_add(i);
        let p = random_convex_ngon(m, sample_seed).expect("m >= 3");
        let ratio = match shape {
            Shape::Pentagon => circumscribe_pentagon(&p).map(|c| (c.ratio, c.cover)).ok(),
            Shape::Hexagon => circumscribe_hexagon(&p).map(|c| (c.ratio, c.cover)).ok(),
        };
        match ratio {
            Some((r, cover)) if r <= bound + 1e-12 && cover.contains_polygon(&p, &(1e-9 * p.diameter())) => (r, None),
            Some((r, _)) => (r, Some((sample_seed, p))),
            None => (f64::NAN, Some((sample_seed, p))),
        }
    };
    let results: Vec<(f64, Option<(u64, ConvexPolygon)>)> = (0..samples).into_par_iter().map(check).collect();
    let failures = results.iter().filter(|r| r.1.is_some()).count();
    let max_ratio = results.iter().map(|r| r.0).fold(f64::NEG_INFINITY, f64::max);
    let mut s = RunSummary::new("verify", if failures == 0 { Status::Pass } else { Status::Fail });
    s.put("shape", name)
        .put("samples", samples)
        .put("seed", seed)
        .put("bound", bound)
        .put("max_ratio", max_ratio)
        .put("failures", failures as u64);
    if let Some((sample_seed, p)) = results.into_iter().find_map(|r| r.1) {
        let path = PathBuf::from(format!("counterexample-{name}-seed{sample_seed}.json"));
        write_polygon(&path, &p)?;
        s.put("counterexample_file", path.display().to_string());
        s.counterexample = Some(PolygonFile::from_polygon(&p));
    }
    Ok(s)
}

fn certify(shape: Shape) -> Result<RunSummary, CliError> {
    let mut s = RunSummary::new("certify", Status::Pass);
    match shape {
        Shape::Pentagon => {
            let r = certificate_check()?;
            s.put("shape", "pentagon")
                .put("residual", r.residual_terms as u64)
                .put("nonnegative_coefficients", format!("{}/{}", r.nonnegative, r.groups))
                .put("g_at_1_1_1_1", r.g_unit.to_string())
                .put("g_at_phi_phi_1_1", r.g_golden.to_string());
        }
        Shape::Hexagon => {
            let r = final_identity_check()?;
            s.put("shape", "hexagon")
                .put("residual", r.residual.num_terms() as u64)
                .put("monomials", r.monomials as u64)
                .put("nonnegative_coefficients", format!("{}/{}", r.nonnegative, r.monomials));
        }
    }
    Ok(s)
}

fn opt(x: Option<f64>) -> Value {
    x.map_or(Value::String("-".into()), Value::from)
}

fn bounds(max_n: usize) -> Result<RunSummary, CliError> {
    if !(3..=64).contains(&max_n) {
        return Err(CliError::Input(format!("--max-n must be in 3..=64, got {max_n}")));
    }
    let mut s = RunSummary::new("bounds", Status::Report);
    for row in bounds_table(max_n)? {
        let n = row.n;
        s.put(&format!("n{n}.chakerian"), row.chakerian)
            .put(&format!("n{n}.ismailescu"), row.ismailescu)
            .put(&format!("n{n}.ft_lower"), opt(row.ft_lower))
            .put(&format!("n{n}.ft_upper"), opt(row.ft_upper))
            .put(&format!("n{n}.conjecture"), opt(row.conjecture))
            .put(&format!("n{n}.oracle_regular"), opt(row.oracle_regular))
            .put(&format!("n{n}.conflict"), row.conflict());
    }
    if max_n >= 7 {
        let h = heptagon_report(&[0, 1, 2])?;
        s.put("heptagon.oracle", h.oracle)
            .put("heptagon.printed", h.printed)
            .put("heptagon.formula", h.formula)
            .put("heptagon.seed_spread", h.spread);
    }
    Ok(s)
}

fn regular(n: usize, area: f64, out: &Path) -> Result<RunSummary, CliError> {
    let p = regular_ngon(n, area).map_err(|e| CliError::Input(e.to_string()))?;
    write_polygon(out, &p)?;
    let mut s = RunSummary::new("regular", Status::Report);
    s.put("n", n as u64).put("area", p.area()).put("out", out.display().to_string());
    Ok(s)
}

fn search(inner: usize, outer: usize, iters: usize, seed: u64) -> Result<RunSummary, CliError> {
    let r = search_extremal(inner, outer, iters, seed)?;
    let mut s = RunSummary::new("search", Status::Report);
    s.put("inner", inner as u64)
        .put("outer", outer as u64)
        .put("iters", r.iterations as u64)
        .put("restarts", r.restarts as u64)
        .put("seed", seed)
        .put("best_ratio", r.best_ratio)
        .put("target_source", r.comparison.source)
        .put("target", r.comparison.target)
        .put("gap", r.comparison.gap)
        .put("best_polygon", polygon_json(&r.best_polygon));
    Ok(s)
}

fn oracle(input: &Path, sides: usize) -> Result<RunSummary, CliError> {
    let p = polygon_io(input)?;
    let r = min_area_ngon(&p, sides)?;
    let mut s = RunSummary::new("oracle", Status::Report);
    s.put("sides", sides as u64)
        .put("ratio", r.best.ratio)
        .put("cover_area", r.best.area())
        .put("method", format!("{:?}", r.method).to_lowercase())
        .put("candidates", r.candidates_examined as u64)
        .put("enumerated_area", r.enumerated_area)
        .put("refined_area", opt(r.refined_area));
    if let Some(a) = &r.assignment {
        s.put("flush_edges", json!(a.flush_edges));
        if let Some((_, fs)) = &a.free_side {
            s.put("free_side_vertex", fs.vertex as u64);
        }
    }
    s.put("cover", polygon_json(&r.best.cover));
    Ok(s)
}

fn dispatch(cli: Cli) -> Result<RunSummary, CliError> {
    match cli.command {
        Command::Circumscribe { input, sides, svg, exact } => circumscribe(&input, sides, svg.as_deref(), exact),
        Command::Verify { shape, samples, seed } => verify(shape, samples, seed),
        Command::Certify { shape } => certify(shape),
        Command::Bounds { max_n } => bounds(max_n),
        Command::Regular { n, area, out } => regular(n, area, &out),
        Command::Search { inner, outer, iters, seed } => search(inner, outer, iters, seed),
        Command::Oracle { input, sides } => oracle(&input, sides),
    }
}

/// Runs the command line, writing the summary to `out` and diagnostics to
/// `err`; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let json = cli.json;
    match dispatch(cli) {
        Ok(summary) => {
            let text = if json { summary.to_json() + "\n" } else { summary.to_lines() };
            if out.write_all(text.as_bytes()).is_err() {
                return 3;
            }
            summary.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}
