//! Exact adjacency spectra.
//!
//! The characteristic polynomial is split into integer roots, conjugate
//! pairs of quadratic surds, and whatever is left over. Leftover factors are
//! carried symbolically together with their multiplicity; no eigenvalue is
//! ever replaced by a floating-point approximation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::BigMatrix;
use super::poly::{squarefree_part, IntPoly};
use super::roots::{isolate_real_roots, refine, root_bound, RootInterval};
use super::surd::{QuadraticSurd, RealQuadratic};
use crate::graph::Graph;

/// One distinct eigenvalue, or a block of eigenvalues that could not be
/// expressed with at most one square root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eigenvalue {
    Rational(BigRational),
    Surd(QuadraticSurd),
    /// Every root of this monic factor, which has degree >= 3 and no rational
    /// or quadratic factor among the ones tried.
    Unresolved(IntPoly),
}

impl Eigenvalue {
    /// Number of distinct eigenvalues this entry stands for.
    pub fn width(&self) -> usize {
        match self {
            Eigenvalue::Unresolved(p) => p.degree().unwrap_or(0),
            _ => 1,
        }
    }

    pub fn approx(&self) -> Option<f64> {
        match self {
            Eigenvalue::Rational(r) => r.to_f64(),
            Eigenvalue::Surd(s) => Some(s.to_f64()),
            Eigenvalue::Unresolved(_) => None,
        }
    }

    fn as_quadratic(&self) -> Option<RealQuadratic> {
        match self {
            Eigenvalue::Rational(r) => Some(RealQuadratic::Rational(r.clone())),
            Eigenvalue::Surd(s) => Some(RealQuadratic::Surd(s.clone())),
            Eigenvalue::Unresolved(_) => None,
        }
    }
}

impl std::fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Eigenvalue::Rational(r) => write!(f, "{}", RealQuadratic::Rational(r.clone())),
            Eigenvalue::Surd(s) => write!(f, "{s}"),
            Eigenvalue::Unresolved(p) => write!(f, "roots({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub value: Eigenvalue,
    pub multiplicity: usize,
}

/// Distinct eigenvalues with multiplicities, sorted in decreasing order with
/// unresolved blocks last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Total number of eigenvalues counted with multiplicity.
    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|e| e.value.width() * e.multiplicity).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.iter().map(|e| e.value.width()).sum()
    }

    pub fn is_resolved(&self) -> bool {
        self.entries.iter().all(|e| !matches!(e.value, Eigenvalue::Unresolved(_)))
    }

    /// Sum of `theta^power * multiplicity` over resolved eigenvalues. Conjugate
    /// surds are summed pairwise so the result is rational.
    pub fn power_sum(&self, power: u32) -> BigRational {
        let mut total = BigRational::zero();
        for e in &self.entries {
            let m = BigRational::from_integer(e.multiplicity.into());
            match &e.value {
                Eigenvalue::Rational(r) => total += num_traits::pow(r.clone(), power as usize) * m,
                Eigenvalue::Surd(s) => {
                    // irrational parts of a conjugate pair cancel
                    let (sum, _) = surd_power(s, power);
                    total += sum * m;
                }
                Eigenvalue::Unresolved(_) => {}
            }
        }
        total
    }
}

impl std::fmt::Display for Spectrum {
    /// `{3^1, 1^5, -2^4}`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            match &e.value {
                Eigenvalue::Rational(_) => write!(f, "{}^{}", e.value, e.multiplicity)?,
                other => write!(f, "[{other}]^{}", e.multiplicity)?,
            }
        }
        f.write_str("}")
    }
}

/// Rational part of `(a + b sqrt d)^p`, i.e. half the conjugate power sum,
/// and the coefficient of `sqrt d`.
fn surd_power(s: &QuadraticSurd, p: u32) -> (BigRational, BigRational) {
    let d = BigRational::from(s.radicand().clone());
    let (a, b) = (s.rational_part(), s.surd_coefficient());
    let mut x = BigRational::one();
    let mut y = BigRational::zero();
    for _ in 0..p {
        let nx = &x * a + &y * b * &d;
        let ny = &x * b + &y * a;
        x = nx;
        y = ny;
    }
    (x, y)
}

/// Minimal polynomial of a symmetric integer matrix.
pub fn min_poly(a: &BigMatrix) -> IntPoly {
    squarefree_part(&a.char_poly()).expect("characteristic polynomial is monic")
}

/// Exact spectrum of a graph's adjacency matrix.
pub fn spectrum(g: &Graph) -> Spectrum {
    spectrum_of_symmetric(&BigMatrix::adjacency(g), Some(g.max_degree()))
}

/// Exact spectrum of a symmetric integer matrix. `abs_bound` bounds the
/// absolute value of every eigenvalue (the maximum degree, for a graph); a
/// root bound is used when it is absent.
pub fn spectrum_of_symmetric(a: &BigMatrix, abs_bound: Option<usize>) -> Spectrum {
    let cp = a.char_poly();
    let mut rest = squarefree_part(&cp).expect("characteristic polynomial is monic");
    let bound = match abs_bound {
        Some(b) => BigInt::from(b),
        None if rest.degree().unwrap_or(0) == 0 => BigInt::zero(),
        None => root_bound(&rest).ceil().to_integer(),
    };

    let mut values = Vec::new();
    let mut factors = Vec::new();

    // integer roots: divisors of the constant term within the bound
    let mut t = bound.clone();
    while t >= -&bound && rest.degree().unwrap_or(0) > 0 {
        let c0 = rest.coeff(0);
        let candidate = if t.is_zero() { c0.is_zero() } else { (&c0 % &t).is_zero() };
        if candidate && rest.eval(&t).is_zero() {
            let lin = IntPoly::linear(&t);
            rest = rest.div_exact(&lin).unwrap().unwrap();
            values.push(Eigenvalue::Rational(BigRational::from(t.clone())));
            factors.push(lin);
        }
        t -= 1;
    }

    // conjugate surd pairs among the remaining (irrational) roots
    if rest.degree().unwrap_or(0) >= 2 {
        let (pairs, leftover) = split_quadratics(&rest);
        for quad in pairs {
            let (hi, lo) = QuadraticSurd::roots_of_monic_quadratic(&quad.coeff(1), &quad.coeff(0));
            for r in [hi, lo] {
                match r {
                    RealQuadratic::Surd(s) => values.push(Eigenvalue::Surd(s)),
                    RealQuadratic::Rational(_) => unreachable!("rational roots were removed"),
                }
            }
            factors.push(quad);
        }
        rest = leftover;
    }

    let mut entries: Vec<SpectrumEntry> = Vec::new();
    let mut cofactor = cp;
    let mut idx = 0;
    for f in &factors {
        let mut mult = 0;
        while let Some(q) = cofactor.div_exact(f).unwrap() {
            cofactor = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        let members = f.degree().unwrap();
        for v in &values[idx..idx + members] {
            entries.push(SpectrumEntry {
                value: v.clone(),
                multiplicity: mult,
            });
        }
        idx += members;
    }

    // what is left of the characteristic polynomial consists of the leftover
    // factors; group them by multiplicity
    if rest.degree().unwrap_or(0) > 0 {
        let mut layers = Vec::new();
        let mut r = cofactor;
        while r.degree().unwrap_or(0) > 0 {
            let s = squarefree_part(&r).unwrap();
            r = r.div_exact(&s).unwrap().expect("squarefree part divides");
            layers.push(s);
        }
        for (i, layer) in layers.iter().enumerate() {
            let next = layers.get(i + 1).cloned().unwrap_or_else(IntPoly::one);
            let exact = layer.div_exact(&next).unwrap().expect("layers are nested");
            if exact.degree().unwrap_or(0) > 0 {
                for block in split_cubics(&exact) {
                    entries.push(SpectrumEntry {
                        value: Eigenvalue::Unresolved(block),
                        multiplicity: i + 1,
                    });
                }
            }
        }
    }

    entries.sort_by(|x, y| match (x.value.as_quadratic(), y.value.as_quadratic()) {
        (Some(a), Some(b)) => b.exact_cmp(&a),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    });
    Spectrum { entries }
}

fn refined_midpoints(p: &IntPoly) -> Vec<(RootInterval, BigRational)> {
    let width = BigRational::new(BigInt::one(), BigInt::one() << 48);
    isolate_real_roots(p)
        .into_iter()
        .map(|iv| {
            let r = refine(p, &iv, &width);
            let m = r.midpoint();
            (r, m)
        })
        .collect()
}

fn contains(iv: &RootInterval, x: &RealQuadratic) -> bool {
    let lo = RealQuadratic::Rational(iv.lo.clone());
    let hi = RealQuadratic::Rational(iv.hi.clone());
    x.exact_cmp(&lo) != Ordering::Less && x.exact_cmp(&hi) != Ordering::Greater
}

/// Monic quadratic factors of a squarefree, real-rooted polynomial without
/// rational roots, found by pairing isolated roots whose sum and product
/// round to integers and confirming by exact division.
fn split_quadratics(p: &IntPoly) -> (Vec<IntPoly>, IntPoly) {
    let roots = refined_midpoints(p);
    let mut used = vec![false; roots.len()];
    let mut rest = p.clone();
    let mut found = Vec::new();
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        for j in i + 1..roots.len() {
            if used[j] {
                continue;
            }
            let s = (&roots[i].1 + &roots[j].1).round().to_integer();
            let q = (&roots[i].1 * &roots[j].1).round().to_integer();
            let quad = IntPoly::new(vec![q.clone(), -s.clone(), BigInt::one()]);
            let disc: BigInt = &s * &s - BigInt::from(4) * &q;
            if !disc.is_positive() {
                continue;
            }
            let (hi, lo) = QuadraticSurd::roots_of_monic_quadratic(&-s, &q);
            if !contains(&roots[j].0, &hi) || !contains(&roots[i].0, &lo) {
                continue;
            }
            if let Some(quot) = rest.div_exact(&quad).unwrap() {
                rest = quot;
                used[i] = true;
                used[j] = true;
                found.push(quad);
                break;
            }
        }
    }
    (found, rest)
}

/// Splits off monic cubic factors by the same rounding-and-division scheme;
/// whatever remains is returned as one block.
fn split_cubics(p: &IntPoly) -> Vec<IntPoly> {
    let deg = p.degree().unwrap_or(0);
    if deg <= 3 || deg > 24 {
        return vec![p.clone()];
    }
    let roots = refined_midpoints(p);
    let n = roots.len();
    let mut used = vec![false; n];
    let mut rest = p.clone();
    let mut out = Vec::new();
    'outer: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if used[i] || used[j] || used[k] {
                    continue;
                }
                let (x, y, z) = (&roots[i].1, &roots[j].1, &roots[k].1);
                let e1 = (x + y + z).round().to_integer();
                let e2 = (x * y + x * z + y * z).round().to_integer();
                let e3 = (x * y * z).round().to_integer();
                let cubic = IntPoly::new(vec![-e3, e2, -e1, BigInt::one()]);
                if let Some(q) = rest.div_exact(&cubic).unwrap() {
                    rest = q;
                    used[i] = true;
                    used[j] = true;
                    used[k] = true;
                    out.push(cubic);
                    if rest.degree().unwrap_or(0) <= 3 {
                        break 'outer;
                    }
                }
            }
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest);
    }
    out
}
