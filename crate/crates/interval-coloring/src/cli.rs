//! Library side of the command-line interface: certificate/bounds/search
//! runners, the parameter-grid batch driver, and the run manifest. The
//! binary in `main.rs` only parses arguments and dispatches here.
//!
//! Exit-code contract: 0 valid/found, 1 invalid/exhausted, 2 inconclusive,
//! 64 usage or malformed input.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::{family_values, upper_bound, BoundReport};
use crate::certificate::{to_dot, write_atomic, Certificate};
use crate::construct::{
    complete_bipartite_coloring, cylinder_minimal, cylinder_widest, grid_widest,
    hypercube_minimal_coloring, hypercube_widest_coloring, torus_widest,
    widest_even_cycle_coloring, widest_path_coloring, Construction,
};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::search::{
    compute_w_max, compute_w_min, exists_interval_t, spectrum_profile, Decision, SearchConfig,
    SearchStatus, ValueOutcome,
};
use crate::verify::verify_interval;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable overriding the search node budget.
pub const BUDGET_ENV: &str = "INTERVAL_BUDGET_NODES";

/// Record of one CLI invocation; identical manifests produce byte-identical
/// outputs (all commands are deterministic and seed-free).
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub family: Option<String>,
    pub params: Option<String>,
    pub mode: Option<String>,
    pub deterministic: bool,
    pub outputs: Vec<PathBuf>,
}

impl RunManifest {
    pub fn write(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        write_atomic(path, text.as_bytes())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Minimal,
    Widest,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "minimal" => Ok(Mode::Minimal),
            "widest" => Ok(Mode::Widest),
            other => Err(Error::Unsupported(format!(
                "mode {other:?} (expected minimal|widest)"
            ))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Minimal => "minimal",
            Mode::Widest => "widest",
        })
    }
}

/// Dispatches a (family, params, mode) triple to its constructor.
pub fn construct_dispatch(family: &str, params: &[usize], mode: Mode) -> Result<Construction> {
    let unsupported = |supported: &str| {
        Err(Error::Unsupported(format!(
            "no {mode} construction for family {family:?}; supported: {supported}"
        )))
    };
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::invalid_parameter(
                "params",
                format!("{family} takes {k} parameter(s), got {}", params.len()),
            ))
        }
    };
    match (family, mode) {
        ("path", Mode::Widest) => {
            arity(1)?;
            widest_path_coloring(params[0])
        }
        ("cycle", Mode::Widest) => {
            arity(1)?;
            if params[0] % 2 == 1 {
                return Err(Error::Unsupported(
                    "odd cycles are not interval colorable".into(),
                ));
            }
            widest_even_cycle_coloring(params[0] / 2)
        }
        ("complete-bipartite", Mode::Widest) => {
            arity(2)?;
            complete_bipartite_coloring(params[0], params[1])
        }
        ("grid", Mode::Widest) => {
            arity(2)?;
            grid_widest(params[0], params[1])
        }
        ("cylinder", Mode::Widest) => {
            arity(2)?;
            cylinder_widest(params[0], params[1])
        }
        ("cylinder", Mode::Minimal) => {
            arity(2)?;
            cylinder_minimal(params[0], params[1])
        }
        ("torus", Mode::Widest) => {
            arity(2)?;
            torus_widest(params[0], params[1])
        }
        ("hypercube", Mode::Widest) => {
            arity(1)?;
            hypercube_widest_coloring(params[0])
        }
        ("hypercube", Mode::Minimal) => {
            arity(1)?;
            hypercube_minimal_coloring(params[0])
        }
        ("path" | "cycle" | "complete-bipartite" | "grid" | "torus", Mode::Minimal) => {
            unsupported("mode widest")
        }
        _ => unsupported(
            "path/cycle/complete-bipartite/grid/torus widest; cylinder/hypercube minimal+widest",
        ),
    }
}

pub fn parse_params(params: &str) -> Result<Vec<usize>> {
    params
        .split(',')
        .map(|p| {
            p.trim().parse().map_err(|e| Error::Parse {
                line: 1,
                message: format!("bad parameter {p:?}: {e}"),
            })
        })
        .collect()
}

/// `gen`: realize a family and emit its edge-list text.
pub fn run_gen(family: &str, params: &str, out: Option<&Path>) -> Result<i32> {
    let spec = FamilySpec::parse(family, params)?;
    let graph = spec.realize()?;
    emit(out, graph.to_edge_list_string().as_bytes())?;
    Ok(EXIT_OK)
}

/// `construct`: run a constructor, verify the output, emit the certificate.
/// Exits nonzero when the certificate is invalid.
pub fn run_construct(
    family: &str,
    params: &str,
    mode: Mode,
    out: Option<&Path>,
    dot_out: Option<&Path>,
    manifest_out: Option<&Path>,
) -> Result<i32> {
    let values = parse_params(params)?;
    let construction = construct_dispatch(family, &values, mode)?;
    let cert = Certificate::from_coloring(&construction.coloring, construction.claimed_t);
    emit(out, cert.to_json()?.as_bytes())?;
    if let Some(dot_path) = dot_out {
        write_atomic(dot_path, to_dot(&construction.coloring).as_bytes())?;
    }
    if let Some(manifest_path) = manifest_out {
        let manifest = RunManifest {
            command: "construct".into(),
            family: Some(family.into()),
            params: Some(params.into()),
            mode: Some(mode.to_string()),
            deterministic: true,
            outputs: [out, dot_out]
                .iter()
                .flatten()
                .map(|p| p.to_path_buf())
                .collect(),
        };
        manifest.write(manifest_path)?;
    }
    if cert.verdict == "valid" {
        Ok(EXIT_OK)
    } else {
        eprintln!(
            "constructed coloring failed verification: {}",
            cert.reason.as_deref().unwrap_or("unknown")
        );
        Ok(EXIT_INVALID)
    }
}

/// `verify`: re-check a certificate file. Exit 0 iff valid.
pub fn run_verify(path: &Path) -> Result<i32> {
    let cert = Certificate::read(path)?;
    let coloring = cert.to_coloring()?;
    let report = verify_interval(&coloring, cert.t);
    match &report.verdict {
        crate::verify::Verdict::Valid => {
            println!("valid interval {}-coloring", cert.t);
            Ok(EXIT_OK)
        }
        crate::verify::Verdict::Invalid(reason) => {
            println!("invalid: {reason}");
            Ok(EXIT_INVALID)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchRecord {
    pub status: String,
    pub t: Option<u32>,
    pub nodes: u64,
    pub seconds: f64,
}

pub enum SearchAction {
    Exists(u32),
    Stat(StatKind),
    Profile(u32, u32),
}

#[derive(Debug, Clone, Copy)]
pub enum StatKind {
    Least,
    Greatest,
}

impl std::str::FromStr for StatKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<StatKind> {
        match s {
            "w" => Ok(StatKind::Least),
            "W" => Ok(StatKind::Greatest),
            other => Err(Error::Unsupported(format!("stat {other:?} (expected w|W)"))),
        }
    }
}

pub struct SearchInput {
    pub graph: Arc<Graph>,
    pub label: String,
}

pub fn load_graph(
    family: Option<&str>,
    params: Option<&str>,
    input: Option<&Path>,
) -> Result<SearchInput> {
    match (family, input) {
        (Some(name), None) => {
            let spec = FamilySpec::parse(name, params.unwrap_or(""))?;
            Ok(SearchInput {
                graph: Arc::new(spec.realize()?),
                label: spec.to_string(),
            })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            Ok(SearchInput {
                graph: Arc::new(Graph::from_edge_list_str(&text)?),
                label: path.display().to_string(),
            })
        }
        _ => Err(Error::Unsupported(
            "provide exactly one graph source: --family or --input".into(),
        )),
    }
}

pub fn search_config(max_nodes: Option<u64>, time_budget_secs: Option<f64>) -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if let Some(nodes) = max_nodes {
        cfg.node_budget = nodes;
    } else if let Ok(env) = std::env::var(BUDGET_ENV) {
        if let Ok(nodes) = env.parse::<u64>() {
            cfg.node_budget = nodes;
        }
    }
    cfg.time_budget = time_budget_secs.map(Duration::from_secs_f64);
    cfg
}

/// `search`: decide a single t, compute w/W, or profile a t-range.
pub fn run_search(
    source: SearchInput,
    action: SearchAction,
    cfg: &SearchConfig,
    cert_out: Option<&Path>,
    record_out: Option<&Path>,
) -> Result<i32> {
    let start = Instant::now();
    let (record, witness, exit) = match action {
        SearchAction::Exists(t) => {
            let outcome = exists_interval_t(&source.graph, t, cfg)?;
            let (status, witness, exit) = match outcome.status {
                SearchStatus::Found(c) => ("found", Some(c), EXIT_OK),
                SearchStatus::Exhausted => ("exhausted", None, EXIT_INVALID),
                SearchStatus::BudgetExceeded => ("budget-exceeded", None, EXIT_INCONCLUSIVE),
            };
            println!("{}: t={t} {status}", source.label);
            (
                SearchRecord {
                    status: status.into(),
                    t: Some(t),
                    nodes: outcome.nodes_explored,
                    seconds: start.elapsed().as_secs_f64(),
                },
                witness,
                exit,
            )
        }
        SearchAction::Stat(kind) => {
            let result = match kind {
                StatKind::Least => compute_w_min(&source.graph, cfg)?,
                StatKind::Greatest => compute_w_max(&source.graph, cfg)?,
            };
            let name = match kind {
                StatKind::Least => "w",
                StatKind::Greatest => "W",
            };
            let (status, t, exit) = match &result.outcome {
                ValueOutcome::Value(t) => {
                    println!("{}: {name} = {t}", source.label);
                    ("found", Some(*t), EXIT_OK)
                }
                ValueOutcome::NotColorable => {
                    println!("{}: not interval colorable", source.label);
                    ("exhausted", None, EXIT_INVALID)
                }
                ValueOutcome::Inconclusive { undecided_t } => {
                    println!("{}: inconclusive at t={undecided_t}", source.label);
                    ("budget-exceeded", Some(*undecided_t), EXIT_INCONCLUSIVE)
                }
            };
            (
                SearchRecord {
                    status: status.into(),
                    t,
                    nodes: result.nodes_explored,
                    seconds: start.elapsed().as_secs_f64(),
                },
                result.witness,
                exit,
            )
        }
        SearchAction::Profile(lo, hi) => {
            let profile = spectrum_profile(&source.graph, lo, hi, cfg)?;
            let mut all_conclusive = true;
            for (t, decision) in &profile.decisions {
                let word = match decision {
                    Decision::Exists => "yes",
                    Decision::NotExists => "no",
                    Decision::Inconclusive => {
                        all_conclusive = false;
                        "inconclusive"
                    }
                };
                println!("{}: t={t} {word}", source.label);
            }
            let exit = if all_conclusive {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            };
            (
                SearchRecord {
                    status: if all_conclusive {
                        "profiled"
                    } else {
                        "budget-exceeded"
                    }
                    .into(),
                    t: None,
                    nodes: profile.nodes_explored,
                    seconds: start.elapsed().as_secs_f64(),
                },
                None,
                exit,
            )
        }
    };
    if let Some(path) = record_out {
        let mut text = serde_json::to_string_pretty(&record)?;
        text.push('\n');
        write_atomic(path, text.as_bytes())?;
    }
    if let (Some(path), Some(coloring)) = (cert_out, witness.as_ref()) {
        Certificate::from_coloring(coloring, record.t.unwrap_or(coloring.max_color()))
            .write(path)?;
    }
    Ok(exit)
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsRecord {
    pub family: String,
    pub w_exact: Option<(String, u32)>,
    pub w_max_exact: Option<(String, u32)>,
    pub lower_bounds: Vec<(String, u32)>,
    pub upper_bounds: Vec<(String, u32)>,
    pub not_colorable: Option<String>,
    pub contiguous_spectrum: bool,
}

impl From<&BoundReport> for BoundsRecord {
    fn from(report: &BoundReport) -> Self {
        let pair = |b: &crate::bounds::BoundEntry| (b.source.to_string(), b.value);
        BoundsRecord {
            family: report.family_label.clone(),
            w_exact: report.w_exact.as_ref().map(pair),
            w_max_exact: report.w_max_exact.as_ref().map(pair),
            lower_bounds: report.lower_bounds.iter().map(pair).collect(),
            upper_bounds: report.upper_bounds.iter().map(pair).collect(),
            not_colorable: report.not_colorable.clone(),
            contiguous_spectrum: report.contiguous_spectrum,
        }
    }
}

/// `bounds`: print the aligned bound table for one family instance and
/// optionally write the machine-readable record.
pub fn run_bounds(family: &str, params: &str, record_out: Option<&Path>) -> Result<i32> {
    let spec = FamilySpec::parse(family, params)?;
    let report = family_values(&spec)?;
    print_bound_table(&report);
    if let Some(path) = record_out {
        let record = BoundsRecord::from(&report);
        let mut text = serde_json::to_string_pretty(&record)?;
        text.push('\n');
        write_atomic(path, text.as_bytes())?;
    }
    Ok(EXIT_OK)
}

fn print_bound_table(report: &BoundReport) {
    println!("family       {}", report.family_label);
    if let Some(reason) = &report.not_colorable {
        println!("colorable    no ({reason})");
        return;
    }
    if let Some(w) = &report.w_exact {
        println!("w exact      {:<6} [{}]", w.value, w.source);
    }
    if let Some(w) = &report.w_max_exact {
        println!("W exact      {:<6} [{}]", w.value, w.source);
    }
    for b in &report.lower_bounds {
        println!("W lower      {:<6} [{}]", b.value, b.source);
    }
    for b in &report.upper_bounds {
        println!("W upper      {:<6} [{}]", b.value, b.source);
    }
    if report.contiguous_spectrum {
        println!("spectrum     every t between w and W is achievable");
    }
}

/// Inclusive integer range with optional step: `2..12`, `4..16:2`, or `7`.
pub fn parse_range(text: &str) -> Result<Vec<usize>> {
    let (span, step) = match text.split_once(':') {
        Some((span, step)) => {
            let step = step.parse().map_err(|e| Error::Parse {
                line: 1,
                message: format!("bad step {step:?}: {e}"),
            })?;
            (span, step)
        }
        None => (text, 1),
    };
    if step == 0 {
        return Err(Error::invalid_parameter("step", "must be positive"));
    }
    let parse = |s: &str| -> Result<usize> {
        s.parse().map_err(|e| Error::Parse {
            line: 1,
            message: format!("bad range bound {s:?}: {e}"),
        })
    };
    match span.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            Ok((lo..=hi).step_by(step).collect())
        }
        None => Ok(vec![parse(span)?]),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixRow {
    pub family: String,
    pub params: Vec<usize>,
    pub t: u32,
    pub verdict: String,
    pub upper_bound: u32,
    pub within_upper: bool,
    pub ok: bool,
}

/// `matrix`: construct + verify + bound-check every instance of a parameter
/// grid; one row per instance. Returns the rows so callers can assert on
/// them; the binary prints them and exits nonzero if any row fails.
pub fn matrix_rows(family: &str, mode: Mode, ranges: &[Vec<usize>]) -> Result<Vec<MatrixRow>> {
    let mut rows = Vec::new();
    let mut index = vec![0usize; ranges.len()];
    loop {
        let params: Vec<usize> = index.iter().zip(ranges).map(|(&i, r)| r[i]).collect();
        rows.push(matrix_row(family, mode, &params)?);
        // odometer increment
        let mut k = ranges.len();
        loop {
            if k == 0 {
                return Ok(rows);
            }
            k -= 1;
            index[k] += 1;
            if index[k] < ranges[k].len() {
                break;
            }
            index[k] = 0;
        }
    }
}

fn matrix_row(family: &str, mode: Mode, params: &[usize]) -> Result<MatrixRow> {
    let construction = construct_dispatch(family, params, mode)?;
    let report = verify_interval(&construction.coloring, construction.claimed_t);
    let upper = upper_bound(construction.coloring.graph())?;
    let within = construction.claimed_t <= upper.value;
    let valid = report.is_valid();
    Ok(MatrixRow {
        family: family.into(),
        params: params.to_vec(),
        t: construction.claimed_t,
        verdict: if valid {
            "valid".into()
        } else {
            "invalid".into()
        },
        upper_bound: upper.value,
        within_upper: within,
        ok: valid && within,
    })
}

pub fn run_matrix(
    family: &str,
    mode: Mode,
    ranges_text: &str,
    record_out: Option<&Path>,
) -> Result<i32> {
    let ranges = ranges_text
        .split(',')
        .map(parse_range)
        .collect::<Result<Vec<_>>>()?;
    let rows = matrix_rows(family, mode, &ranges)?;
    let mut all_ok = true;
    for row in &rows {
        let params: Vec<String> = row.params.iter().map(|p| p.to_string()).collect();
        println!(
            "{} {:<12} t={:<4} upper={:<4} {} {}",
            row.family,
            params.join(","),
            row.t,
            row.upper_bound,
            row.verdict,
            if row.ok { "ok" } else { "FAIL" }
        );
        all_ok &= row.ok;
    }
    if let Some(path) = record_out {
        let mut text = String::new();
        for row in &rows {
            text.push_str(&serde_json::to_string(row)?);
            text.push('\n');
        }
        write_atomic(path, text.as_bytes())?;
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_INVALID })
}

/// `export-dot`: re-emit a certificate as a DOT document.
pub fn run_export_dot(cert_path: &Path, out: Option<&Path>) -> Result<i32> {
    let cert = Certificate::read(cert_path)?;
    let coloring = cert.to_coloring()?;
    emit(out, to_dot(&coloring).as_bytes())?;
    Ok(EXIT_OK)
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, bytes),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_range("3..11:2").unwrap(), vec![3, 5, 7, 9, 11]);
        assert_eq!(parse_range("7").unwrap(), vec![7]);
        assert!(parse_range("2..x").is_err());
        assert!(parse_range("2..8:0").is_err());
    }

    #[test]
    fn dispatch_rejects_unsupported_modes() {
        assert!(matches!(
            construct_dispatch("grid", &[3, 4], Mode::Minimal),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            construct_dispatch("cycle", &[5], Mode::Widest),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn matrix_grid_small() {
        let ranges = vec![parse_range("2..4").unwrap(), parse_range("2..4").unwrap()];
        let rows = matrix_rows("grid", Mode::Widest, &ranges).unwrap();
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|r| r.ok));
        let g34 = rows
            .iter()
            .find(|r| r.params == vec![3, 4])
            .expect("3x4 grid row");
        assert_eq!(g34.t, 8);
    }
}
