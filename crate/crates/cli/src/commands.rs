use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use walkreg_core::algebra::RealQuadratic;
use walkreg_core::search::{
    feasible_multiplicities, search_integer_triples, third_eigenvalue_with, EigenTriple, FeasibilityInput,
};
use walkreg_core::swr::{swr_params_direct, swr_params_spectral, verify_identity, SwrParams};
use walkreg_core::{parse_graph6, write_graph6, Family, Graph, SwrError};

use crate::record::{AnalysisRecord, ParamRow};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_DISAGREEMENT: u8 = 3;

/// Where command output goes.
pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

fn read_input(path: &Path) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

/// Graph6 records of a file with their 1-based line numbers. Blank lines and
/// `#` comments are skipped.
pub fn records(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .collect()
}

fn json_line<T: Serialize>(io: &mut Io, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *io.out, value)?;
    writeln!(io.out)
}

/// Reads and parses every record; reports parse failures on stderr.
fn load(io: &mut Io, path: &Path) -> io::Result<Result<(Vec<(usize, String, Graph)>, bool), u8>> {
    let text = match read_input(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(io.err, "error: cannot read {}: {e}", path.display())?;
            return Ok(Err(EXIT_PARSE));
        }
    };
    let mut graphs = Vec::new();
    let mut failed = false;
    for (line, rec) in records(&text) {
        match parse_graph6(rec) {
            Ok(g) => graphs.push((line, rec.to_string(), g)),
            Err(e) => {
                failed = true;
                writeln!(io.err, "line {line}: {e}")?;
            }
        }
    }
    Ok(Ok((graphs, failed)))
}

pub struct AnalyzeOptions {
    pub ells: Vec<u32>,
    pub scan_bound: u32,
    pub json: bool,
}

pub fn analyze(io: &mut Io, path: &Path, opts: &AnalyzeOptions) -> io::Result<u8> {
    let (graphs, failed) = match load(io, path)? {
        Ok(x) => x,
        Err(code) => return Ok(code),
    };
    let records: Vec<AnalysisRecord> = graphs
        .par_iter()
        .map(|(line, g6, g)| AnalysisRecord::analyze(*line, g6, g, &opts.ells, opts.scan_bound))
        .collect();
    for r in &records {
        if opts.json {
            json_line(io, r)?;
        } else {
            write!(io.out, "{}", r.to_text())?;
        }
    }
    Ok(if failed { EXIT_PARSE } else { EXIT_OK })
}

#[derive(Serialize)]
struct VerifyRecord {
    index: usize,
    graph6: String,
    #[serde(flatten)]
    row: ParamRow,
    identity: Option<bool>,
    spectral: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn verify_one(line: usize, g6: &str, g: &Graph, ell: u32) -> VerifyRecord {
    let direct = swr_params_direct(g, ell).expect("length is validated");
    let mut rec = VerifyRecord {
        index: line,
        graph6: g6.to_string(),
        row: ParamRow::new(ell, &direct),
        identity: None,
        spectral: "skipped",
        error: None,
    };
    let mut canonical: Option<SwrParams> = direct.as_ref().ok().cloned();
    if g.is_regular().is_some() && g.is_connected() {
        match swr_params_spectral(g, ell) {
            Ok(spectral) => match (&direct, &spectral) {
                (Ok(d), Some(s)) if d.agrees_with(s) => {
                    rec.spectral = "agree";
                    canonical = Some(s.clone());
                }
                (Err(_), None) => rec.spectral = "agree",
                _ => {
                    rec.spectral = "disagree";
                    rec.error = Some(format!(
                        "direct route {}, spectral route {}",
                        direct.as_ref().map_or("fails".to_string(), |p| p.to_string()),
                        spectral.as_ref().map_or("fails".to_string(), |p| p.to_string())
                    ));
                }
            },
            Err(SwrError::SingleEigenvalue) => {}
            Err(e) => {
                rec.spectral = "disagree";
                rec.error = Some(e.to_string());
            }
        }
    }
    if let Some(p) = canonical {
        let report = verify_identity(g, &p);
        rec.identity = Some(report.passed());
        if let Some((i, j, lhs, rhs)) = report.violation {
            rec.error = Some(format!("identity fails at ({i},{j}): {lhs} != {rhs}"));
        }
    }
    rec
}

pub fn verify(io: &mut Io, path: &Path, ell: u32, json: bool) -> io::Result<u8> {
    let (graphs, failed) = match load(io, path)? {
        Ok(x) => x,
        Err(code) => return Ok(code),
    };
    let results: Vec<VerifyRecord> = graphs
        .par_iter()
        .map(|(line, g6, g)| verify_one(*line, g6, g, ell))
        .collect();
    let mut disagreement = false;
    for r in &results {
        if let Some(e) = &r.error {
            disagreement = true;
            writeln!(io.err, "line {}: internal disagreement: {e}", r.index)?;
        }
        if json {
            json_line(io, r)?;
        } else {
            let verdict = if r.row.swr { "pass" } else { "fail:" };
            writeln!(io.out, "#{} {} l={ell}: {verdict} {}", r.index, r.graph6, r.row.text())?;
        }
    }
    Ok(if disagreement {
        EXIT_DISAGREEMENT
    } else if failed {
        EXIT_PARSE
    } else {
        EXIT_OK
    })
}

pub fn construct(io: &mut Io, tokens: &[String], output: Option<&Path>) -> io::Result<u8> {
    let graph = Family::parse(tokens).and_then(|f| f.build());
    let g = match graph {
        Ok(g) => g,
        Err(e) => {
            writeln!(io.err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let line = match write_graph6(&g) {
        Ok(s) => s,
        Err(e) => {
            writeln!(io.err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    match output {
        Some(path) => {
            if let Err(e) = fs::write(path, format!("{line}\n")) {
                writeln!(io.err, "error: cannot write {}: {e}", path.display())?;
                return Ok(EXIT_USAGE);
            }
        }
        None => writeln!(io.out, "{line}")?,
    }
    Ok(EXIT_OK)
}

pub fn search(io: &mut Io, ell: u32, lo: i64, hi: i64, negative_only: bool, json: bool) -> io::Result<u8> {
    let triples = match search_integer_triples(ell, lo, hi, negative_only) {
        Ok(t) => t,
        Err(e) => {
            writeln!(io.err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    for [a, b, c] in &triples {
        if json {
            json_line(io, &json!({ "ell": ell, "theta": [a, b, c] }))?;
        } else {
            writeln!(io.out, "({a}, {b}, {c})")?;
        }
    }
    if !json {
        writeln!(io.out, "# {} triple(s) in [{lo}, {hi}] at l={ell}", triples.len())?;
    }
    Ok(EXIT_OK)
}

/// Parses `3`, `-3/2`, `0.001` or `1e-9` as an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    if let Ok(RealQuadratic::Rational(r)) = text.parse::<RealQuadratic>() {
        return Some(r);
    }
    let x: f64 = text.parse().ok()?;
    x.is_finite().then(|| BigRational::from_float(x)).flatten()
}

pub struct SolveOptions {
    pub ell: u32,
    pub theta2: String,
    pub theta3: String,
    pub tol: String,
    pub max_denominator: u32,
    pub json: bool,
}

pub fn solve_third(io: &mut Io, opts: &SolveOptions) -> io::Result<u8> {
    let mut parsed = Vec::new();
    for (name, text) in [("theta2", &opts.theta2), ("theta3", &opts.theta3), ("tol", &opts.tol)] {
        match parse_rational(text) {
            Some(r) => parsed.push(r),
            None => {
                writeln!(io.err, "error: --{name}: `{text}` is not a rational number")?;
                return Ok(EXIT_USAGE);
            }
        }
    }
    let [t2, t3, tol] = <[BigRational; 3]>::try_from(parsed).expect("three values");
    let root = match third_eigenvalue_with(opts.ell, &t2, &t3, &tol, opts.max_denominator) {
        Ok(r) => r,
        Err(e) => {
            writeln!(io.err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let show = |r: &BigRational| RealQuadratic::Rational(r.clone()).to_string();
    if opts.json {
        json_line(
            io,
            &json!({
                "ell": opts.ell,
                "theta2": show(&t2),
                "theta3": show(&t3),
                "approx": root.approx(),
                "interval": [show(&root.interval.lo), show(&root.interval.hi)],
                "exact": root.exact.as_ref().map(show),
                "degenerate": root.degenerate,
            }),
        )?;
    } else {
        writeln!(io.out, "theta1 ~ {:.10}", root.approx())?;
        writeln!(io.out, "interval: [{}, {}]", show(&root.interval.lo), show(&root.interval.hi))?;
        match &root.exact {
            Some(r) => writeln!(io.out, "exact: {}", show(r))?,
            None => writeln!(io.out, "exact: no")?,
        }
        writeln!(io.out, "degenerate: {}", if root.degenerate { "yes" } else { "no" })?;
    }
    Ok(EXIT_OK)
}

pub fn feasible(io: &mut Io, v: usize, k: usize, thetas: &[String], json: bool) -> io::Result<u8> {
    let mut values = Vec::new();
    for t in thetas {
        match t.parse::<RealQuadratic>() {
            Ok(x) => values.push(x),
            Err(e) => {
                writeln!(io.err, "error: {e}")?;
                return Ok(EXIT_USAGE);
            }
        }
    }
    let Ok(values) = <[RealQuadratic; 3]>::try_from(values) else {
        writeln!(io.err, "error: exactly three eigenvalues are required")?;
        return Ok(EXIT_USAGE);
    };
    let result = EigenTriple::new(values).and_then(|triple| {
        let input = FeasibilityInput { v, k, triple };
        feasible_multiplicities(&input).map(|m| (input.triple, m))
    });
    let (triple, m) = match result {
        Ok(x) => x,
        Err(e) => {
            writeln!(io.err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    if json {
        let theta: Vec<String> = triple.values().iter().map(ToString::to_string).collect();
        json_line(io, &json!({ "v": v, "k": k, "theta": theta, "multiplicities": m }))?;
    } else {
        match m {
            Some([a, b, c]) => writeln!(io.out, "({a}, {b}, {c})")?,
            None => writeln!(io.out, "infeasible")?,
        }
    }
    Ok(EXIT_OK)
}
