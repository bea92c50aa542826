//! The eigenvalue side of the four-eigenvalue case.
//!
//! A connected `k`-regular graph with distinct eigenvalues
//! `k > t1 > t2 > t3` is strongly `l`-walk-regular iff
//!
//! ```text
//! (t2 - t3) t1^l + (t3 - t1) t2^l + (t1 - t2) t3^l = 0.
//! ```
//!
//! This module searches integer solutions, solves for `t1` given the other
//! two, counts real roots of trinomials, and checks whether a candidate
//! spectrum admits integral multiplicities.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::roots::{count_distinct_real_roots, div_exact_rational, isolate_real_roots, refine, RootInterval};
use crate::algebra::{IntPoly, QuadraticSurd, RealQuadratic};
use crate::error::SearchError;
use crate::swr::{alpha, HoffmanCubic};

/// Largest denominator tried when recognising a rational third root.
pub const DEFAULT_MAX_DENOMINATOR: u32 = 64;

/// Three distinct eigenvalues in strictly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenTriple([RealQuadratic; 3]);

impl EigenTriple {
    pub fn new(values: [RealQuadratic; 3]) -> Result<Self, SearchError> {
        let [a, b, c] = &values;
        if a.exact_cmp(b) == Ordering::Equal || b.exact_cmp(c) == Ordering::Equal || a.exact_cmp(c) == Ordering::Equal {
            return Err(SearchError::Coincident);
        }
        if a.exact_cmp(b) != Ordering::Greater || b.exact_cmp(c) != Ordering::Greater {
            return Err(SearchError::BadInput("eigenvalues must be listed in decreasing order".into()));
        }
        Ok(EigenTriple(values))
    }

    pub fn from_integers(t1: i64, t2: i64, t3: i64) -> Result<Self, SearchError> {
        let r = |x: i64| RealQuadratic::Rational(BigRational::from_integer(x.into()));
        Self::new([r(t1), r(t2), r(t3)])
    }

    pub fn values(&self) -> &[RealQuadratic; 3] {
        &self.0
    }

    /// All three values as rationals, if they are.
    pub fn rationals(&self) -> Option<[BigRational; 3]> {
        let get = |x: &RealQuadratic| match x {
            RealQuadratic::Rational(r) => Some(r.clone()),
            RealQuadratic::Surd(_) => None,
        };
        Some([get(&self.0[0])?, get(&self.0[1])?, get(&self.0[2])?])
    }
}

impl fmt::Display for EigenTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Left-hand side of the eigenvalue condition for a rational triple.
pub fn eq3_value(t: &[BigRational; 3], ell: u32) -> BigRational {
    let [p, q, r] = t;
    let pow = |x: &BigRational| num_traits::pow(x.clone(), ell as usize);
    (q - r) * pow(p) + (r - p) * pow(q) + (p - q) * pow(r)
}

fn check_odd_length(ell: u32) -> Result<(), SearchError> {
    if ell < 3 {
        return Err(SearchError::LengthTooSmall { min: 3, found: ell });
    }
    if ell % 2 == 0 {
        return Err(SearchError::EvenLength(ell));
    }
    Ok(())
}

/// Every integer triple `hi >= t1 > t2 > t3 >= lo` satisfying the condition
/// at odd `ell`, in lexicographic order. With `negative_only`, only triples
/// with `t3 < 0` are considered (a graph with an edge has a negative
/// eigenvalue).
pub fn search_integer_triples(ell: u32, lo: i64, hi: i64, negative_only: bool) -> Result<Vec<[i64; 3]>, SearchError> {
    check_odd_length(ell)?;
    if lo >= hi {
        return Err(SearchError::EmptyRange { lo, hi });
    }
    let t3_max = if negative_only { hi.min(-1) } else { hi };
    let mut found: Vec<[i64; 3]> = (lo..=t3_max)
        .into_par_iter()
        .flat_map_iter(|t3| {
            (t3 + 1..=hi).flat_map(move |t2| {
                (t2 + 1..=hi).filter_map(move |t1| {
                    let h = HoffmanCubic::from_roots(&t1.into(), &t2.into(), &t3.into());
                    alpha(&h, ell).is_zero().then_some([t1, t2, t3])
                })
            })
        })
        .collect();
    found.sort_unstable();
    Ok(found)
}

/// The remaining root `t1` for given `t2`, `t3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThirdRoot {
    /// Isolating interval narrower than the requested tolerance.
    pub interval: RootInterval,
    /// The root itself when it was recognised as a rational.
    pub exact: Option<BigRational>,
    /// The root coincides with `t2` or `t3`.
    pub degenerate: bool,
}

impl ThirdRoot {
    pub fn approx(&self) -> f64 {
        match &self.exact {
            Some(r) => r.to_f64().unwrap_or(f64::NAN),
            None => self.interval.approx(),
        }
    }
}

/// The condition as a polynomial in `t1`, with integer coefficients.
fn condition_poly(ell: u32, t2: &BigRational, t3: &BigRational) -> IntPoly {
    let pow = |x: &BigRational| num_traits::pow(x.clone(), ell as usize);
    let mut c = vec![BigRational::zero(); ell as usize + 1];
    c[ell as usize] = t2 - t3;
    c[1] = pow(t3) - pow(t2);
    c[0] = t3 * pow(t2) - t2 * pow(t3);
    integer_poly(&c)
}

fn integer_poly(c: &[BigRational]) -> IntPoly {
    let lcm = c.iter().fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    IntPoly::new(c.iter().map(|x| (x * BigRational::from(lcm.clone())).to_integer()).collect()).primitive_part()
}

fn linear_factor(r: &BigRational) -> IntPoly {
    IntPoly::new(vec![-r.numer().clone(), r.denom().clone()])
}

/// Solves the condition for `t1` at odd `ell` after removing the trivial
/// roots `t2` and `t3`. `tol` bounds the width of the reported interval.
pub fn third_eigenvalue(ell: u32, t2: &BigRational, t3: &BigRational, tol: &BigRational) -> Result<ThirdRoot, SearchError> {
    third_eigenvalue_with(ell, t2, t3, tol, DEFAULT_MAX_DENOMINATOR)
}

/// [`third_eigenvalue`] with a custom bound on recognised denominators.
pub fn third_eigenvalue_with(
    ell: u32,
    t2: &BigRational,
    t3: &BigRational,
    tol: &BigRational,
    max_denominator: u32,
) -> Result<ThirdRoot, SearchError> {
    check_odd_length(ell)?;
    if t2 == t3 {
        return Err(SearchError::Coincident);
    }
    if !tol.is_positive() {
        return Err(SearchError::BadTolerance);
    }
    let p = condition_poly(ell, t2, t3);
    let trivial = &linear_factor(t2) * &linear_factor(t3);
    let q = div_exact_rational(&p, &trivial).expect("t2 and t3 are roots of the condition");

    let roots = isolate_real_roots(&q);
    assert_eq!(roots.len(), 1, "an odd-degree deflation with at most one real root");
    let degenerate = [t2, t3].into_iter().any(|t| q.sign_at(t) == 0);

    // rationals with denominators up to N are at least 1/N^2 apart
    let n = BigInt::from(max_denominator.max(1));
    let separation = BigRational::new(BigInt::one(), &n * &n * 2);
    let width = if tol < &separation { tol.clone() } else { separation };
    let interval = refine(&q, &roots[0], &width);

    let exact = if interval.is_exact() {
        Some(interval.lo.clone())
    } else {
        let mid = interval.midpoint();
        (1..=max_denominator).find_map(|d| {
            let d = BigInt::from(d);
            let numer = (&mid * BigRational::from(d.clone())).round().to_integer();
            let candidate = BigRational::new(numer, d);
            (q.sign_at(&candidate) == 0).then_some(candidate)
        })
    };
    Ok(ThirdRoot {
        interval,
        exact,
        degenerate,
    })
}

/// Number of distinct real roots of `x^l + e x + f`.
pub fn count_real_roots_trinomial(ell: u32, e: &BigRational, f: &BigRational) -> Result<usize, SearchError> {
    if ell < 2 {
        return Err(SearchError::LengthTooSmall { min: 2, found: ell });
    }
    let odd = ell % 2 == 1;
    if odd && !e.is_negative() {
        // strictly increasing
        return Ok(1);
    }
    // The critical value has magnitude m with
    // m^(l-1) = (|e| (l-1)/l)^(l-1) * |e|/l.
    let l = BigRational::from_integer(ell.into());
    let abs_e = e.abs();
    let base = &abs_e * (&l - BigRational::one()) / &l;
    let m_pow = num_traits::pow(base, ell as usize - 1) * &abs_e / &l;
    let count = if odd {
        // local max f + m, local min f - m
        match num_traits::pow(f.abs(), ell as usize - 1).cmp(&m_pow) {
            Ordering::Less => 3,
            Ordering::Equal => 2,
            Ordering::Greater => 1,
        }
    } else if !f.is_positive() {
        // global min f - m
        if f.is_zero() && e.is_zero() {
            1
        } else {
            2
        }
    } else {
        match num_traits::pow(f.clone(), ell as usize - 1).cmp(&m_pow) {
            Ordering::Less => 2,
            Ordering::Equal => 1,
            Ordering::Greater => 0,
        }
    };
    assert!(count <= if odd { 3 } else { 2 });
    Ok(count)
}

/// Distinct real roots of `x^l + e x + f` by Sturm sequence.
pub fn count_real_roots_sturm(ell: u32, e: &BigRational, f: &BigRational) -> usize {
    let mut c = vec![BigRational::zero(); ell as usize + 1];
    c[ell as usize] = BigRational::one();
    c[1] += e;
    c[0] += f;
    count_distinct_real_roots(&integer_poly(&c))
}

/// Candidate spectrum `k^1, t1^m1, t2^m2, t3^m3` on `v` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityInput {
    pub v: usize,
    pub k: usize,
    pub triple: EigenTriple,
}

/// Multiplicities `(m1, m2, m3)` solving
/// `1 + sum m = v`, `k + sum m t = 0`, `k^2 + sum m t^2 = v k`,
/// when they are all positive integers. Two of the values may be a
/// conjugate pair of surds, which then receive equal multiplicities.
pub fn feasible_multiplicities(input: &FeasibilityInput) -> Result<Option<[usize; 3]>, SearchError> {
    let FeasibilityInput { v, k, triple } = input;
    if *v < 5 {
        return Err(SearchError::BadInput(format!("need at least 5 vertices, got {v}")));
    }
    if k >= v {
        return Err(SearchError::BadInput(format!("valency {k} must be below {v}")));
    }
    let kq = BigRational::from_integer((*k).into());
    let rhs = [
        BigRational::from_integer((v - 1).into()),
        -kq.clone(),
        BigRational::from_integer((v * k).into()) - &kq * &kq,
    ];
    let solution = match triple.rationals() {
        Some(t) => solve_rational(&t, &rhs),
        None => solve_with_pair(triple, &rhs)?,
    };
    Ok(solution.and_then(|m| {
        let mut out = [0usize; 3];
        for (slot, x) in out.iter_mut().zip(&m) {
            if !x.is_integer() || !x.is_positive() {
                return None;
            }
            *slot = x.to_integer().to_usize()?;
        }
        Some(out)
    }))
}

/// Solves the Vandermonde system by Cramer's rule.
fn solve_rational(t: &[BigRational; 3], rhs: &[BigRational; 3]) -> Option<[BigRational; 3]> {
    let row = |x: &BigRational| [BigRational::one(), x.clone(), x * x];
    let cols = [row(&t[0]), row(&t[1]), row(&t[2])];
    let det = |c: &[[BigRational; 3]; 3]| {
        let m = |i: usize, j: usize| &c[j][i];
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    };
    let d = det(&cols);
    if d.is_zero() {
        return None;
    }
    let mut out: [BigRational; 3] = Default::default();
    for (j, slot) in out.iter_mut().enumerate() {
        let mut replaced = cols.clone();
        replaced[j] = rhs.clone();
        *slot = det(&replaced) / &d;
    }
    Some(out)
}

fn solve_with_pair(triple: &EigenTriple, rhs: &[BigRational; 3]) -> Result<Option<[BigRational; 3]>, SearchError> {
    let values = triple.values();
    let surds: Vec<(usize, &QuadraticSurd)> = values
        .iter()
        .enumerate()
        .filter_map(|(i, x)| match x {
            RealQuadratic::Surd(s) => Some((i, s)),
            RealQuadratic::Rational(_) => None,
        })
        .collect();
    let [(i, s), (j, t)] = surds[..] else {
        return Err(SearchError::BadInput("irrational eigenvalues must form one conjugate pair".into()));
    };
    if s.conjugate() != *t {
        return Err(SearchError::BadInput(format!("{s} and {t} are not conjugate")));
    }
    let r = 3 - i - j;
    let RealQuadratic::Rational(theta) = &values[r] else {
        unreachable!("exactly two surds");
    };
    // m_r + 2m = v - 1 and m_r theta + 2 m a = -k, then check the squares.
    let a = s.rational_part();
    let two = BigRational::from_integer(2.into());
    let det = &two * a - &two * theta;
    let m = (&rhs[1] - theta * &rhs[0]) / &det;
    let m_r = &rhs[0] - &two * &m;
    let sq_pair = &two * (a * a + s.surd_coefficient() * s.surd_coefficient() * BigRational::from(s.radicand().clone()));
    if &m_r * theta * theta + &m * sq_pair != rhs[2] {
        return Ok(None);
    }
    let mut out: [BigRational; 3] = Default::default();
    out[i] = m.clone();
    out[j] = m;
    out[r] = m_r;
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn qq(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn triple(a: i64, b: i64, c: i64) -> [BigRational; 3] {
        [q(a), q(b), q(c)]
    }

    #[test]
    fn eq3_examples() {
        assert_eq!(eq3_value(&triple(2, 0, -2), 5), q(0));
        assert_eq!(eq3_value(&triple(7, 3, -11), 1), q(0));
        assert_eq!(eq3_value(&triple(1, -1, -2), 3), q(-12));
    }

    #[test]
    fn cubes_need_zero_sum() {
        let found = search_integer_triples(3, -5, 5, true).unwrap();
        let mut expected = Vec::new();
        for t1 in -5..=5i64 {
            for t2 in -5..t1 {
                for t3 in -5..t2 {
                    if t1 + t2 + t3 == 0 {
                        expected.push([t1, t2, t3]);
                    }
                }
            }
        }
        expected.sort_unstable();
        assert_eq!(found, expected);
        assert!(found.contains(&[4, 1, -5]) && found.contains(&[3, -1, -2]));
    }

    #[test]
    fn fifth_powers_only_symmetric() {
        let found = search_integer_triples(5, -6, 6, true).unwrap();
        let expected: Vec<[i64; 3]> = (1..=6).map(|t| [t, 0, -t]).collect();
        assert_eq!(found, expected);
        assert!(search_integer_triples(5, 0, 3, false).unwrap().is_empty());
    }

    #[test]
    fn search_arguments() {
        assert_eq!(search_integer_triples(4, -3, 3, true), Err(SearchError::EvenLength(4)));
        assert_eq!(
            search_integer_triples(1, -3, 3, true),
            Err(SearchError::LengthTooSmall { min: 3, found: 1 })
        );
        assert_eq!(search_integer_triples(3, 3, 3, true), Err(SearchError::EmptyRange { lo: 3, hi: 3 }));
    }

    #[test]
    fn third_root_examples() {
        let tol = qq(1, 1000);
        let r = third_eigenvalue(3, &q(2), &q(-3), &tol).unwrap();
        assert_eq!(r.exact, Some(q(1)));
        assert!(!r.degenerate);

        let r = third_eigenvalue(5, &q(-1), &q(-2), &tol).unwrap();
        assert_eq!(r.exact, None);
        assert!((r.approx() - 2.5565).abs() < 1e-3);
        assert!(r.interval.width() < tol);

        let r = third_eigenvalue(3, &q(1), &q(-2), &tol).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.exact, Some(q(1)));
    }

    #[test]
    fn third_root_recognises_fractions() {
        // t2 + t3 = -5/3 at l = 3 gives t1 = 5/3
        let r = third_eigenvalue(3, &qq(1, 3), &q(-2), &qq(1, 10)).unwrap();
        assert_eq!(r.exact, Some(qq(5, 3)));
        let r = third_eigenvalue(3, &qq(1, 97), &q(-2), &qq(1, 10)).unwrap();
        assert_eq!(r.exact, None);
        let r = third_eigenvalue_with(3, &qq(1, 97), &q(-2), &qq(1, 10), 100).unwrap();
        assert_eq!(r.exact, Some(qq(193, 97)));
    }

    #[test]
    fn third_root_arguments() {
        let tol = qq(1, 10);
        assert_eq!(third_eigenvalue(3, &q(1), &q(1), &tol), Err(SearchError::Coincident));
        assert_eq!(third_eigenvalue(4, &q(1), &q(0), &tol), Err(SearchError::EvenLength(4)));
        assert_eq!(third_eigenvalue(3, &q(1), &q(0), &q(0)), Err(SearchError::BadTolerance));
    }

    #[test]
    fn trinomial_examples() {
        assert_eq!(count_real_roots_trinomial(3, &q(-3), &q(2)).unwrap(), 2);
        assert_eq!(count_real_roots_trinomial(2, &q(0), &q(1)).unwrap(), 0);
        assert_eq!(count_real_roots_trinomial(5, &q(-16), &q(0)).unwrap(), 3);
        assert_eq!(count_real_roots_trinomial(4, &q(0), &q(0)).unwrap(), 1);
        assert_eq!(count_real_roots_trinomial(3, &q(0), &q(0)).unwrap(), 1);
        assert!(count_real_roots_trinomial(1, &q(0), &q(0)).is_err());
    }

    #[test]
    fn feasibility_examples() {
        let input = |v, k, t: [i64; 3]| FeasibilityInput {
            v,
            k,
            triple: EigenTriple::from_integers(t[0], t[1], t[2]).unwrap(),
        };
        assert_eq!(feasible_multiplicities(&input(8, 4, [2, 0, -2])).unwrap(), Some([1, 3, 3]));
        assert_eq!(feasible_multiplicities(&input(27, 6, [3, 0, -3])).unwrap(), Some([6, 12, 8]));
        assert_eq!(feasible_multiplicities(&input(10, 3, [2, 0, -2])).unwrap(), None);
        assert!(feasible_multiplicities(&input(4, 2, [1, 0, -1])).is_err());
        assert!(feasible_multiplicities(&input(8, 8, [1, 0, -1])).is_err());
    }

    #[test]
    fn feasibility_with_a_conjugate_pair() {
        // line graph of the Heawood graph: 4^1, (1+sqrt2)^6, (1-sqrt2)^6, -2^8
        let values: [RealQuadratic; 3] = ["1 + sqrt(2)", "1 - sqrt(2)", "-2"].map(|s| s.parse().unwrap());
        let input = FeasibilityInput {
            v: 21,
            k: 4,
            triple: EigenTriple::new(values.clone()).unwrap(),
        };
        assert_eq!(feasible_multiplicities(&input).unwrap(), Some([6, 6, 8]));
        let wrong = FeasibilityInput { v: 20, ..input };
        assert_eq!(feasible_multiplicities(&wrong).unwrap(), None);

        let unpaired: [RealQuadratic; 3] = ["1 + sqrt(2)", "0", "1 - sqrt(3)"].map(|s| s.parse().unwrap());
        let input = FeasibilityInput {
            v: 21,
            k: 4,
            triple: EigenTriple::new(unpaired).unwrap(),
        };
        assert!(feasible_multiplicities(&input).is_err());
    }

    #[test]
    fn triples_must_decrease() {
        assert_eq!(EigenTriple::from_integers(1, 1, 0), Err(SearchError::Coincident));
        assert!(matches!(EigenTriple::from_integers(0, 1, 2), Err(SearchError::BadInput(_))));
    }
}
