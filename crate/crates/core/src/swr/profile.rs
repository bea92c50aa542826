//! Which walk lengths a graph is strongly walk-regular for, and which of the
//! known structural families it falls into.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::recurrence::{alpha, HoffmanCubic};
use super::{swr_params_direct, SwrParams};
use crate::algebra::spectrum::{min_poly, spectrum};
use crate::algebra::{BigMatrix, IntPoly, Spectrum};
use crate::error::SwrError;
use crate::graph::Graph;

pub const DEFAULT_SCAN_BOUND: u32 = 99;

/// Lengths up to which the structural verdict for disconnected or
/// non-regular graphs is cross-checked against the direct test.
const CONFIRM_UP_TO: u32 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SwrProfile {
    /// Every `l >= 2`.
    AllEll,
    /// Every odd `l >= 3` and no even one.
    AllOddEll,
    /// Exactly one length, found by the scan.
    SingleEll(u32),
    /// No length up to the given odd bound. Says nothing beyond it.
    NoneUpTo(u32),
    NotApplicable(String),
}

impl SwrProfile {
    /// Whether the profile asserts the property at `ell`. `None` when the
    /// profile cannot tell (beyond the scan bound).
    pub fn holds_at(&self, ell: u32) -> Option<bool> {
        match self {
            SwrProfile::AllEll => Some(ell >= 2),
            SwrProfile::AllOddEll => Some(ell >= 3 && ell % 2 == 1),
            SwrProfile::SingleEll(l) => Some(ell == *l),
            SwrProfile::NoneUpTo(bound) if ell % 2 == 0 || ell <= *bound => Some(false),
            SwrProfile::NoneUpTo(_) => None,
            SwrProfile::NotApplicable(_) => Some(false),
        }
    }
}

impl fmt::Display for SwrProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwrProfile::AllEll => f.write_str("AllEll"),
            SwrProfile::AllOddEll => f.write_str("AllOddEll"),
            SwrProfile::SingleEll(l) => write!(f, "SingleEll({l})"),
            SwrProfile::NoneUpTo(b) => write!(f, "NoneUpTo({b})"),
            SwrProfile::NotApplicable(reason) => write!(f, "NotApplicable({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Empty,
    Complete,
    StronglyRegular {
        v: usize,
        k: usize,
        lambda: usize,
        mu: usize,
    },
    /// At least two components, all complete of the same order.
    CompleteMultiKnSameOrder,
    /// Every component with an edge is complete bipartite, all with the same
    /// number of edges; the rest are isolated vertices.
    BipartiteUnionSameEdgeCount {
        edges: usize,
        isolated: usize,
    },
    RegularFourEigenvalue(Spectrum),
    Other,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Empty => "Empty",
            Classification::Complete => "Complete",
            Classification::StronglyRegular { .. } => "StronglyRegular",
            Classification::CompleteMultiKnSameOrder => "CompleteMultiKnSameOrder",
            Classification::BipartiteUnionSameEdgeCount { .. } => "BipartiteUnionSameEdgeCount",
            Classification::RegularFourEigenvalue(_) => "RegularFourEigenvalue",
            Classification::Other => "Other",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::StronglyRegular { v, k, lambda, mu } => {
                write!(f, "StronglyRegular({v},{k},{lambda},{mu})")
            }
            Classification::BipartiteUnionSameEdgeCount { edges, isolated } => {
                write!(f, "BipartiteUnionSameEdgeCount({edges}, isolated={isolated})")
            }
            Classification::RegularFourEigenvalue(s) => write!(f, "RegularFourEigenvalue({s})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Shapes that can carry the property with `mu = 0` or without being
/// connected and regular.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mu0Shape {
    /// Components all complete of one order (including edgeless graphs).
    EqualCliques { components: usize },
    BipartiteUnion { edges: usize, isolated: usize },
    Neither,
}

fn mu0_shape(g: &Graph) -> Mu0Shape {
    let comps = g.components();
    if let Some(first) = comps.first() {
        if comps.iter().all(|c| c.n() == first.n() && c.is_complete()) {
            return Mu0Shape::EqualCliques {
                components: comps.len(),
            };
        }
    } else {
        return Mu0Shape::EqualCliques { components: 0 };
    }
    let mut edges = None;
    let mut isolated = 0;
    for c in &comps {
        if c.n() == 1 {
            isolated += 1;
            continue;
        }
        let Some((a, b)) = c.complete_bipartite_parts() else {
            return Mu0Shape::Neither;
        };
        match edges {
            None => edges = Some(a * b),
            Some(e) if e != a * b => return Mu0Shape::Neither,
            Some(_) => {}
        }
    }
    match edges {
        Some(edges) => Mu0Shape::BipartiteUnion { edges, isolated },
        None => Mu0Shape::Neither,
    }
}

/// Spectral data for a connected regular graph.
struct RegularData {
    k: usize,
    min_poly: IntPoly,
}

impl RegularData {
    fn of(g: &Graph) -> Option<Self> {
        let k = g.is_regular()?;
        if !g.is_connected() {
            return None;
        }
        Some(RegularData {
            k,
            min_poly: min_poly(&BigMatrix::adjacency(g)),
        })
    }

    fn distinct(&self) -> usize {
        self.min_poly.degree().unwrap_or(0)
    }

    fn hoffman(&self) -> IntPoly {
        self.min_poly
            .div_exact(&IntPoly::linear(&BigInt::from(self.k)))
            .expect("minimal polynomial is monic")
            .expect("valency is an eigenvalue")
    }
}

pub fn classify(g: &Graph) -> Classification {
    if g.edge_count() == 0 {
        return Classification::Empty;
    }
    if g.is_complete() {
        return Classification::Complete;
    }
    let regular = RegularData::of(g);
    if let Some(data) = &regular {
        if data.distinct() == 3 {
            let p = swr_params_direct(g, 2)
                .expect("l = 2 is allowed")
                .expect("a graph with three eigenvalues is strongly regular");
            let get = |x: Option<BigInt>| x.and_then(|x| x.to_usize()).expect("both pair classes are populated");
            return Classification::StronglyRegular {
                v: g.n(),
                k: data.k,
                lambda: get(p.lambda),
                mu: get(p.mu),
            };
        }
    }
    match mu0_shape(g) {
        Mu0Shape::EqualCliques { components } if components >= 2 => {
            return Classification::CompleteMultiKnSameOrder
        }
        Mu0Shape::BipartiteUnion { edges, isolated } => {
            return Classification::BipartiteUnionSameEdgeCount { edges, isolated }
        }
        _ => {}
    }
    match regular {
        Some(data) if data.distinct() == 4 => Classification::RegularFourEigenvalue(spectrum(g)),
        _ => Classification::Other,
    }
}

/// Decides for which lengths `g` is strongly walk-regular. Odd lengths up to
/// `scan_bound` are searched when the answer is not structural.
pub fn swr_profile(g: &Graph, scan_bound: u32) -> SwrProfile {
    let Some(data) = RegularData::of(g) else {
        let profile = match mu0_shape(g) {
            Mu0Shape::EqualCliques { .. } => SwrProfile::AllEll,
            Mu0Shape::BipartiteUnion { .. } => SwrProfile::AllOddEll,
            Mu0Shape::Neither => SwrProfile::NotApplicable(
                if g.is_regular().is_some() {
                    "disconnected and not a union of equal cliques or equal complete bipartite graphs"
                } else {
                    "not regular and not a union of equal complete bipartite graphs"
                }
                .into(),
            ),
        };
        confirm_directly(g, &profile);
        return profile;
    };
    match data.distinct() {
        0..=3 => SwrProfile::AllEll,
        4 => {
            let h = HoffmanCubic::from_poly(&data.hoffman()).expect("four eigenvalues leave a monic cubic");
            if h.is_odd_symmetric() {
                return SwrProfile::AllOddEll;
            }
            (3..=scan_bound)
                .step_by(2)
                .find(|&ell| alpha(&h, ell).is_zero())
                .map_or(SwrProfile::NoneUpTo(scan_bound), SwrProfile::SingleEll)
        }
        d => SwrProfile::NotApplicable(format!("{d} distinct eigenvalues")),
    }
}

fn confirm_directly(g: &Graph, profile: &SwrProfile) {
    for ell in 2..=CONFIRM_UP_TO {
        let direct = swr_params_direct(g, ell).expect("l >= 2").is_ok();
        assert_eq!(
            Some(direct),
            profile.holds_at(ell),
            "profile {profile} contradicts the direct test at l = {ell}"
        );
    }
}

/// Tests `A^l = lambda A + nu I` for odd `l`, i.e. strong walk-regularity with
/// `mu = 0`.
pub fn check_mu0(g: &Graph, ell: u32) -> Result<Option<SwrParams>, SwrError> {
    if ell % 2 == 0 {
        return Err(SwrError::EvenLength(ell));
    }
    if ell < 3 {
        return Err(SwrError::ExcludedLength(ell));
    }
    Ok(match swr_params_direct(g, ell)? {
        Ok(p) if p.mu.as_ref().map_or(true, Zero::is_zero) => Some(SwrParams {
            mu: Some(BigInt::zero()),
            ..p
        }),
        _ => None,
    })
}
