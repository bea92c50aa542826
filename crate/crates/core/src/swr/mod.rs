//! Strongly walk-regular decision procedures.
//!
//! Two independent routes decide whether a graph is strongly
//! `l`-walk-regular:
//!
//! * [`swr_params_direct`] counts walks: it inspects every entry of `A^l`.
//! * [`spectral::swr_params_spectral`] works on the Hoffman polynomial `h` of
//!   a connected regular graph: the graph qualifies iff `h` divides some
//!   `x^l + e x + f`, which is decided by reducing `x^l` modulo `h`.
//!
//! For four distinct eigenvalues the divisibility condition collapses to the
//! vanishing of one term of an integer linear recurrence ([`recurrence`]),
//! which is what [`profile::swr_profile`] scans.

pub mod profile;
pub mod recurrence;
pub mod spectral;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::BigMatrix;
use crate::error::SwrError;
use crate::graph::Graph;

pub use profile::{check_mu0, classify, swr_profile, Classification, SwrProfile, DEFAULT_SCAN_BOUND};
pub use recurrence::{alpha, HoffmanCubic};
pub use spectral::{divides_trinomial, hoffman_poly, params_from_tail, swr_params_spectral, TrinomialTail};

/// Walk counts of a strongly `l`-walk-regular graph. A count is `None` when
/// its vertex-pair class is empty (no edges, no distinct non-adjacent pairs,
/// or no vertices) and the value is therefore unconstrained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwrParams {
    pub ell: u32,
    /// Walks between adjacent vertices.
    pub lambda: Option<BigInt>,
    /// Walks between distinct non-adjacent vertices.
    pub mu: Option<BigInt>,
    /// Closed walks at a vertex.
    pub nu: Option<BigInt>,
}

impl SwrParams {
    pub fn new(ell: u32, lambda: Option<BigInt>, mu: Option<BigInt>, nu: Option<BigInt>) -> Self {
        SwrParams { ell, lambda, mu, nu }
    }

    /// Constrained fields agree; an unconstrained field matches anything.
    pub fn agrees_with(&self, other: &SwrParams) -> bool {
        let same = |a: &Option<BigInt>, b: &Option<BigInt>| match (a, b) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        };
        self.ell == other.ell
            && same(&self.lambda, &other.lambda)
            && same(&self.mu, &other.mu)
            && same(&self.nu, &other.nu)
    }

    fn resolved(&self) -> (BigInt, BigInt, BigInt) {
        // An empty class makes its coefficient irrelevant: with no edges A = 0,
        // with no distinct non-adjacent pairs J = A + I and mu = 0 is valid.
        let get = |x: &Option<BigInt>| x.clone().unwrap_or_else(BigInt::zero);
        (get(&self.lambda), get(&self.mu), get(&self.nu))
    }
}

impl fmt::Display for SwrParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: &Option<BigInt>| x.as_ref().map_or_else(|| "*".to_string(), BigInt::to_string);
        write!(f, "({}, {}, {})", show(&self.lambda), show(&self.mu), show(&self.nu))
    }
}

/// Which kind of vertex pair an entry of `A^l` belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairClass {
    Identical,
    Adjacent,
    NonAdjacent,
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairClass::Identical => "identical",
            PairClass::Adjacent => "adjacent",
            PairClass::NonAdjacent => "non-adjacent",
        })
    }
}

/// Two vertex pairs of the same class with different walk counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub class: PairClass,
    pub first: (usize, usize, BigInt),
    pub second: (usize, usize, BigInt),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, x) = &self.first;
        let (c, d, y) = &self.second;
        write!(f, "{} pairs ({a},{b}) and ({c},{d}) have {x} and {y} walks", self.class)
    }
}

/// `A^l` (the identity for `l = 0`).
pub fn walk_matrix(g: &Graph, ell: u32) -> BigMatrix {
    BigMatrix::adjacency(g).pow(ell as u64)
}

/// Combinatorial test: are the entries of `A^l` constant on each pair class?
pub fn swr_params_direct(g: &Graph, ell: u32) -> Result<Result<SwrParams, Witness>, SwrError> {
    if ell < 2 {
        return Err(SwrError::ExcludedLength(ell));
    }
    Ok(params_from_power(g, ell, &walk_matrix(g, ell)))
}

/// The direct test against a precomputed `power = A^l`.
pub fn params_from_power(g: &Graph, ell: u32, power: &BigMatrix) -> Result<SwrParams, Witness> {
    let mut seen: [Option<(usize, usize)>; 3] = [None; 3];
    for i in 0..g.n() {
        for j in i..g.n() {
            let class = if i == j {
                PairClass::Identical
            } else if g.has_edge(i, j) {
                PairClass::Adjacent
            } else {
                PairClass::NonAdjacent
            };
            let slot = &mut seen[class as usize];
            match *slot {
                None => *slot = Some((i, j)),
                Some((a, b)) if power[(a, b)] != power[(i, j)] => {
                    return Err(Witness {
                        class,
                        first: (a, b, power[(a, b)].clone()),
                        second: (i, j, power[(i, j)].clone()),
                    })
                }
                Some(_) => {}
            }
        }
    }
    let value = |class: PairClass| seen[class as usize].map(|(a, b)| power[(a, b)].clone());
    Ok(SwrParams {
        ell,
        lambda: value(PairClass::Adjacent),
        mu: value(PairClass::NonAdjacent),
        nu: value(PairClass::Identical),
    })
}

/// Outcome of checking `A^l + (mu - lambda) A + (mu - nu) I = mu J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    /// First violating entry `(i, j, lhs, rhs)`, if any.
    pub violation: Option<(usize, usize, BigInt, BigInt)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks the matrix identity entrywise. Unconstrained fields are taken as
/// zero, which is valid because their pair class is empty.
pub fn verify_identity(g: &Graph, params: &SwrParams) -> IdentityReport {
    let a = BigMatrix::adjacency(g);
    let power = a.pow(params.ell as u64);
    verify_identity_with(g, &power, params)
}

/// [`verify_identity`] against a precomputed `power = A^l`.
pub fn verify_identity_with(g: &Graph, power: &BigMatrix, params: &SwrParams) -> IdentityReport {
    let (lambda, mu, nu) = params.resolved();
    let e = &mu - &lambda;
    let f = &mu - &nu;
    for i in 0..g.n() {
        for j in 0..g.n() {
            let mut lhs = power[(i, j)].clone();
            if i == j {
                lhs += &f;
            } else if g.has_edge(i, j) {
                lhs += &e;
            }
            if lhs != mu {
                return IdentityReport {
                    violation: Some((i, j, lhs, mu)),
                };
            }
        }
    }
    IdentityReport { violation: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::construct_family;

    fn graph(spec: &str) -> Graph {
        construct_family(&spec.split_whitespace().collect::<Vec<_>>()).unwrap()
    }

    fn int(x: i64) -> Option<BigInt> {
        Some(BigInt::from(x))
    }

    /// Walk counts by explicit enumeration of vertex sequences.
    fn brute_walks(g: &Graph, ell: u32) -> Vec<Vec<u64>> {
        let n = g.n();
        let mut counts = vec![vec![0u64; n]; n];
        fn extend(g: &Graph, start: usize, at: usize, left: u32, counts: &mut [Vec<u64>]) {
            if left == 0 {
                counts[start][at] += 1;
                return;
            }
            for &w in g.neighbors(at) {
                extend(g, start, w, left - 1, counts);
            }
        }
        for s in 0..n {
            extend(g, s, s, ell, &mut counts);
        }
        counts
    }

    #[test]
    fn walk_matrices_match_enumeration() {
        for spec in ["petersen", "path 5", "cycle 6", "complete-bipartite 2 3", "paley 5"] {
            let g = graph(spec);
            for ell in 0..=5 {
                let m = walk_matrix(&g, ell);
                let brute = brute_walks(&g, ell);
                for i in 0..g.n() {
                    for j in 0..g.n() {
                        assert_eq!(m[(i, j)], BigInt::from(brute[i][j]), "{spec} l={ell}");
                    }
                }
            }
        }
    }

    #[test]
    fn c4_cubed() {
        let g = graph("cycle 4");
        let m = walk_matrix(&g, 3);
        for i in 0..4 {
            for j in 0..4 {
                let expected = if g.has_edge(i, j) { 4 } else { 0 };
                assert_eq!(m[(i, j)], BigInt::from(expected));
            }
        }
        assert_eq!(walk_matrix(&g, 0), BigMatrix::identity(4));
    }

    #[test]
    fn petersen_walks_of_length_three() {
        let m = walk_matrix(&graph("petersen"), 3);
        assert_eq!(m[(0, 0)], BigInt::from(0));
        // vertices 0 = {0,1} and 7 = {2,3} are disjoint
        assert_eq!(m[(0, 7)], BigInt::from(5));
        assert_eq!(m[(0, 1)], BigInt::from(2));
    }

    #[test]
    fn direct_examples() {
        let p = swr_params_direct(&graph("petersen"), 2).unwrap().unwrap();
        assert_eq!(p, SwrParams::new(2, int(0), int(1), int(3)));

        let w = swr_params_direct(&graph("path 3"), 2).unwrap().unwrap_err();
        assert_eq!(w.class, PairClass::Identical);
        assert_eq!(w.first, (0, 0, BigInt::from(1)));
        assert_eq!(w.second, (1, 1, BigInt::from(2)));

        let k33 = swr_params_direct(&graph("complete-bipartite 3 3"), 3).unwrap().unwrap();
        assert_eq!(k33, SwrParams::new(3, int(9), int(0), int(0)));

        assert_eq!(swr_params_direct(&graph("petersen"), 1), Err(SwrError::ExcludedLength(1)));
    }

    #[test]
    fn empty_classes_are_unconstrained() {
        let k4 = swr_params_direct(&graph("complete 4"), 2).unwrap().unwrap();
        assert_eq!(k4, SwrParams::new(2, int(2), None, int(3)));
        let e3 = swr_params_direct(&Graph::empty(3), 3).unwrap().unwrap();
        assert_eq!(e3, SwrParams::new(3, None, int(0), int(0)));
        let null = swr_params_direct(&Graph::empty(0), 2).unwrap().unwrap();
        assert_eq!(null, SwrParams::new(2, None, None, None));
    }

    #[test]
    fn identity_examples() {
        let g = graph("petersen");
        assert!(verify_identity(&g, &SwrParams::new(3, int(5), int(2), int(0))).passed());
        let bad = verify_identity(&g, &SwrParams::new(3, int(5), int(2), int(1)));
        let (i, j, _, _) = bad.violation.unwrap();
        assert_eq!(i, j);

        let h = graph("complement-kmm-km 2");
        assert!(verify_identity(&h, &SwrParams::new(3, int(10), int(6), int(6))).passed());

        let k4 = graph("complete 4");
        assert!(verify_identity(&k4, &SwrParams::new(2, int(2), None, int(3))).passed());
    }
}
