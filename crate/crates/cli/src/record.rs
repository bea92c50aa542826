//! Per-graph analysis results and their text and JSON renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;
use walkreg_core::algebra::spectrum::{min_poly, spectrum, Eigenvalue};
use walkreg_core::swr::{classify, swr_params_direct, swr_profile, Classification, SwrParams, SwrProfile, Witness};
use walkreg_core::{BigMatrix, Graph, QuadraticSurd};

fn big(x: &Option<BigInt>) -> Option<String> {
    x.as_ref().map(BigInt::to_string)
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EigenvalueJson {
    Rational { value: String },
    Surd(QuadraticSurd),
    /// All roots of a polynomial, coefficients from the constant term up.
    RootsOf { coefficients: Vec<String> },
}

impl From<&Eigenvalue> for EigenvalueJson {
    fn from(e: &Eigenvalue) -> Self {
        match e {
            Eigenvalue::Rational(_) => EigenvalueJson::Rational { value: e.to_string() },
            Eigenvalue::Surd(s) => EigenvalueJson::Surd(s.clone()),
            Eigenvalue::Unresolved(p) => EigenvalueJson::RootsOf {
                coefficients: p.coeffs().iter().map(BigInt::to_string).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumItem {
    pub value: EigenvalueJson,
    /// Human-readable form of `value`.
    pub text: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub srg: Option<[usize; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isolated: Option<usize>,
    pub text: String,
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> Self {
        let mut out = ClassificationJson {
            kind: c.name(),
            srg: None,
            edges: None,
            isolated: None,
            text: c.to_string(),
        };
        match *c {
            Classification::StronglyRegular { v, k, lambda, mu } => out.srg = Some([v, k, lambda, mu]),
            Classification::BipartiteUnionSameEdgeCount { edges, isolated } => {
                out.edges = Some(edges);
                out.isolated = Some(isolated);
            }
            // the spectrum is reported alongside
            Classification::RegularFourEigenvalue(_) => out.text = c.name().to_string(),
            _ => {}
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub text: String,
}

impl From<&SwrProfile> for ProfileJson {
    fn from(p: &SwrProfile) -> Self {
        let mut out = ProfileJson {
            kind: "",
            ell: None,
            bound: None,
            reason: None,
            text: p.to_string(),
        };
        out.kind = match p {
            SwrProfile::AllEll => "AllEll",
            SwrProfile::AllOddEll => "AllOddEll",
            SwrProfile::SingleEll(l) => {
                out.ell = Some(*l);
                "SingleEll"
            }
            SwrProfile::NoneUpTo(b) => {
                out.bound = Some(*b);
                "NoneUpTo"
            }
            SwrProfile::NotApplicable(r) => {
                out.reason = Some(r.clone());
                "NotApplicable"
            }
        };
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub class: String,
    /// `[i, j, walks]`.
    pub first: (usize, usize, String),
    pub second: (usize, usize, String),
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        let conv = |(i, j, c): &(usize, usize, BigInt)| (*i, *j, c.to_string());
        WitnessJson {
            class: w.class.to_string(),
            first: conv(&w.first),
            second: conv(&w.second),
        }
    }
}

/// Outcome of the direct test at one length. Counts are decimal strings;
/// `null` marks an unconstrained count (its vertex-pair class is empty).
#[derive(Clone, Debug, Serialize)]
pub struct ParamRow {
    pub ell: u32,
    pub swr: bool,
    pub lambda: Option<String>,
    pub mu: Option<String>,
    pub nu: Option<String>,
    pub witness: Option<WitnessJson>,
}

impl ParamRow {
    pub fn new(ell: u32, outcome: &Result<SwrParams, Witness>) -> Self {
        match outcome {
            Ok(p) => ParamRow {
                ell,
                swr: true,
                lambda: big(&p.lambda),
                mu: big(&p.mu),
                nu: big(&p.nu),
                witness: None,
            },
            Err(w) => ParamRow {
                ell,
                swr: false,
                lambda: None,
                mu: None,
                nu: None,
                witness: Some(w.into()),
            },
        }
    }

    /// `(lambda, mu, nu)` with `*` for unconstrained counts, or the witness.
    pub fn text(&self) -> String {
        let show = |x: &Option<String>| x.clone().unwrap_or_else(|| "*".into());
        match &self.witness {
            None => format!("({}, {}, {})", show(&self.lambda), show(&self.mu), show(&self.nu)),
            Some(w) => format!(
                "{} pairs ({},{}) and ({},{}) have {} and {} walks",
                w.class, w.first.0, w.first.1, w.second.0, w.second.1, w.first.2, w.second.2
            ),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisRecord {
    /// 1-based line number in the input.
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub regular: bool,
    pub k: Option<usize>,
    pub connected: bool,
    pub distinct_eigenvalues: usize,
    pub spectrum: Vec<SpectrumItem>,
    pub classification: ClassificationJson,
    pub profile: ProfileJson,
    pub params: Vec<ParamRow>,
}

impl AnalysisRecord {
    pub fn analyze(index: usize, graph6: &str, g: &Graph, ells: &[u32], scan_bound: u32) -> Self {
        let k = g.is_regular();
        let spec = spectrum(g);
        AnalysisRecord {
            index,
            graph6: graph6.to_string(),
            n: g.n(),
            regular: k.is_some(),
            k,
            connected: g.is_connected(),
            distinct_eigenvalues: min_poly(&BigMatrix::adjacency(g)).degree().unwrap_or(0),
            spectrum: spec
                .entries()
                .iter()
                .map(|e| SpectrumItem {
                    value: (&e.value).into(),
                    text: e.value.to_string(),
                    multiplicity: e.multiplicity,
                })
                .collect(),
            classification: (&classify(g)).into(),
            profile: (&swr_profile(g, scan_bound)).into(),
            params: ells
                .iter()
                .map(|&l| ParamRow::new(l, &swr_params_direct(g, l).expect("lengths are validated")))
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut s = String::new();
        let _ = writeln!(s, "#{} {}", self.index, self.graph6);
        let _ = writeln!(s, "  n: {}", self.n);
        match self.k {
            Some(k) => {
                let _ = writeln!(s, "  regular: yes (k = {k})");
            }
            None => {
                let _ = writeln!(s, "  regular: no");
            }
        }
        let _ = writeln!(s, "  connected: {}", yes(self.connected));
        let _ = writeln!(s, "  distinct eigenvalues: {}", self.distinct_eigenvalues);
        let spectrum: Vec<String> = self
            .spectrum
            .iter()
            .map(|e| match e.value {
                EigenvalueJson::Rational { .. } => format!("{}^{}", e.text, e.multiplicity),
                _ => format!("[{}]^{}", e.text, e.multiplicity),
            })
            .collect();
        let _ = writeln!(s, "  spectrum: {{{}}}", spectrum.join(", "));
        let _ = writeln!(s, "  classification: {}", self.classification.text);
        let _ = writeln!(s, "  profile: {}", self.profile.text);
        for row in &self.params {
            let verdict = if row.swr { "" } else { "no, " };
            let _ = writeln!(s, "  l={}: {verdict}{}", row.ell, row.text());
        }
        s
    }
}
