//! Real root isolation for integer polynomials by Sturm sequences and
//! bisection over exact rationals.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPoly;

/// An isolating interval for one real root. `lo == hi` marks an exactly
/// located rational root; otherwise the root lies strictly inside and the
/// polynomial changes sign across the interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn approx(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// Squarefree part of an arbitrary nonzero integer polynomial, primitive with
/// positive leading coefficient.
pub fn squarefree_primitive(p: &IntPoly) -> IntPoly {
    let p = p.primitive_part();
    let g = p.gcd(&p.derivative());
    if g.degree().unwrap_or(0) == 0 {
        return p;
    }
    div_exact_rational(&p, &g)
        .expect("gcd divides p")
        .primitive_part()
}

/// Exact division over the rationals; `None` when `q` does not divide `p` or
/// the quotient has non-integer coefficients.
pub fn div_exact_rational(p: &IntPoly, q: &IntPoly) -> Option<IntPoly> {
    let dq = q.degree()?;
    let Some(dp) = p.degree() else {
        return Some(IntPoly::zero());
    };
    if dp < dq {
        return None;
    }
    let lc = BigRational::from(q.leading()?.clone());
    let mut rem: Vec<BigRational> = p.coeffs().iter().cloned().map(BigRational::from).collect();
    let mut quot = vec![BigRational::zero(); dp - dq + 1];
    for i in (0..=dp - dq).rev() {
        let t = &rem[i + dq] / &lc;
        for (j, c) in q.coeffs().iter().enumerate() {
            rem[i + j] -= &t * BigRational::from(c.clone());
        }
        quot[i] = t;
    }
    if rem.iter().any(|c| !c.is_zero()) || quot.iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(IntPoly::new(quot.into_iter().map(|c| c.to_integer()).collect()))
}

// Positive multiple of -rem(a, b).
fn neg_pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().unwrap();
    let lc = b.leading().unwrap();
    // invariant: r = lc^steps * a mod b
    let mut r = a.clone();
    let mut steps = 0u32;
    while let Some(d) = r.degree().filter(|&d| d >= db) {
        let lead = r.leading().unwrap().clone();
        r = &r.scale(lc) - &(&IntPoly::monomial(d - db) * &b.scale(&lead));
        steps += 1;
    }
    let r = if lc.is_negative() && steps % 2 == 1 { r } else { -&r };
    let c = r.content();
    if c.is_zero() {
        r
    } else {
        IntPoly::new(r.coeffs().iter().map(|x| x / &c).collect())
    }
}

/// Sturm sequence `p, p', -rem(p, p'), ...` with positive rescaling.
pub fn sturm_sequence(p: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = neg_pseudo_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn variations(seq: &[IntPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in seq.iter().map(|q| q.sign_at(x)) {
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

fn variations_at_infinity(seq: &[IntPoly], positive: bool) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for q in seq {
        let lead = q.leading().map_or(0, |c| if c.is_positive() { 1 } else { -1 });
        let s = if !positive && q.degree().unwrap_or(0) % 2 == 1 { -lead } else { lead };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots.
pub fn count_distinct_real_roots(p: &IntPoly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let seq = sturm_sequence(p);
    variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true)
}

/// Cauchy bound: every root has absolute value below `1 + max|c_i| / |lc|`.
pub fn root_bound(p: &IntPoly) -> BigRational {
    let lc = p.leading().expect("nonzero").abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::one() + BigRational::new(max, lc)
}

/// Disjoint isolating intervals for the distinct real roots of `p`, in
/// increasing order.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<RootInterval> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf = squarefree_primitive(p);
    let seq = sturm_sequence(&sf);
    let bound = root_bound(&sf);
    let mut out = Vec::new();
    bisect(&sf, &seq, -bound.clone(), bound, &mut out);
    out
}

// Roots in the half-open interval (lo, hi].
fn bisect(p: &IntPoly, seq: &[IntPoly], lo: BigRational, hi: BigRational, out: &mut Vec<RootInterval>) {
    let count = variations(seq, &lo) - variations(seq, &hi);
    match count {
        0 => {}
        1 if p.sign_at(&hi) == 0 => out.push(RootInterval {
            lo: hi.clone(),
            hi,
        }),
        1 => out.push(RootInterval { lo, hi }),
        _ => {
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            bisect(p, seq, lo, mid.clone(), out);
            bisect(p, seq, mid, hi, out);
        }
    }
}

/// Shrinks an isolating interval of the squarefree polynomial `p` until its
/// width is below `width`.
pub fn refine(p: &IntPoly, root: &RootInterval, width: &BigRational) -> RootInterval {
    let mut r = root.clone();
    if r.is_exact() {
        return r;
    }
    // p(hi) != 0 for an inexact interval; p(lo) may vanish at a neighbouring root
    let hi_sign = p.sign_at(&r.hi);
    while &r.width() >= width {
        let mid = r.midpoint();
        match p.sign_at(&mid) {
            0 => {
                return RootInterval {
                    lo: mid.clone(),
                    hi: mid,
                }
            }
            s if s == hi_sign => r.hi = mid,
            _ => r.lo = mid,
        }
    }
    r
}
