//! The Hoffman-polynomial route for connected regular graphs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::SwrParams;
use crate::algebra::spectrum::min_poly;
use crate::algebra::{polymod_pow, BigMatrix, IntPoly};
use crate::error::{AlgebraError, SwrError};
use crate::graph::Graph;

/// `(e, f)` such that the Hoffman polynomial divides `x^l + e x + f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrinomialTail {
    pub e: BigInt,
    pub f: BigInt,
}

fn regular_connected(g: &Graph) -> Result<usize, SwrError> {
    let k = g.is_regular().ok_or(SwrError::NotRegular)?;
    if !g.is_connected() {
        return Err(SwrError::NotConnected);
    }
    Ok(k)
}

/// Monic polynomial whose roots are the distinct eigenvalues other than the
/// valency `k`. Before returning, checks `v h(A) = h(k) J` exactly.
pub fn hoffman_poly(g: &Graph) -> Result<IntPoly, SwrError> {
    let k = BigInt::from(regular_connected(g)?);
    let a = BigMatrix::adjacency(g);
    let m = min_poly(&a);
    if m.degree() < Some(2) {
        return Err(SwrError::SingleEigenvalue);
    }
    let h = m
        .div_exact(&IntPoly::linear(&k))?
        .ok_or_else(|| SwrError::Internal("valency is not a root of the minimal polynomial".into()))?;

    let v = BigInt::from(g.n());
    let lhs = a.eval_poly(&h).scale(&v);
    let rhs = BigMatrix::ones(g.n()).scale(&h.eval(&k));
    if lhs != rhs {
        return Err(SwrError::Internal("v h(A) != h(k) J".into()));
    }
    Ok(h)
}

/// Reads `(e, f)` off `x^l mod h` when that remainder is at most linear.
fn tail_from_remainder(ell: u32, h: &IntPoly) -> Result<Option<TrinomialTail>, AlgebraError> {
    let r = polymod_pow(ell as u64, h)?;
    Ok((r.degree().unwrap_or(0) <= 1).then(|| TrinomialTail {
        e: -r.coeff(1),
        f: -r.coeff(0),
    }))
}

/// Does `h` (monic, degree 1 to 3) divide a trinomial `x^l + e x + f`?
/// Always true when `deg h <= 2`.
pub fn divides_trinomial(h: &IntPoly, ell: u32) -> Result<Option<TrinomialTail>, SwrError> {
    if ell < 2 {
        return Err(SwrError::ExcludedLength(ell));
    }
    match h.degree() {
        Some(d @ 1..=3) => {
            let tail = tail_from_remainder(ell, h)?;
            debug_assert!(d == 3 || tail.is_some());
            Ok(tail)
        }
        found => Err(AlgebraError::DegreeOutOfRange {
            min: 1,
            max: 3,
            found: found.unwrap_or(0),
        }
        .into()),
    }
}

/// Walk counts from a trinomial tail: `mu = (k^l + e k + f) / v`,
/// `lambda = mu - e`, `nu = mu - f`. For complete graphs `mu` is reported as
/// unconstrained since there are no distinct non-adjacent pairs.
pub fn params_from_tail(g: &Graph, ell: u32, tail: &TrinomialTail) -> Result<SwrParams, SwrError> {
    let k = BigInt::from(regular_connected(g)?);
    let v = BigInt::from(g.n());
    let numerator = k.pow(ell) + &tail.e * &k + &tail.f;
    let (mu, rem) = numerator.div_rem(&v);
    if !rem.is_zero() {
        return Err(SwrError::Internal(format!("{numerator} is not divisible by {v}")));
    }
    let lambda = &mu - &tail.e;
    let nu = &mu - &tail.f;
    if mu.is_negative() || lambda.is_negative() || nu.is_negative() {
        return Err(SwrError::Internal(format!("negative walk count ({lambda}, {mu}, {nu})")));
    }
    let complete = g.is_complete();
    Ok(SwrParams {
        ell,
        lambda: Some(lambda),
        mu: (!complete).then_some(mu),
        nu: Some(nu),
    })
}

/// Spectral decision for a connected regular graph: `Some(params)` iff the
/// graph is strongly `l`-walk-regular. Works for any number of distinct
/// eigenvalues, so it can serve as an oracle for the direct test.
pub fn swr_params_spectral(g: &Graph, ell: u32) -> Result<Option<SwrParams>, SwrError> {
    if ell < 2 {
        return Err(SwrError::ExcludedLength(ell));
    }
    regular_connected(g)?;
    if g.n() == 1 {
        return Ok(Some(SwrParams::new(ell, None, None, Some(BigInt::zero()))));
    }
    let h = hoffman_poly(g)?;
    match tail_from_remainder(ell, &h)? {
        Some(tail) => params_from_tail(g, ell, &tail).map(Some),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::construct_family;

    fn graph(spec: &str) -> Graph {
        construct_family(&spec.split_whitespace().collect::<Vec<_>>()).unwrap()
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn tail(e: i64, f: i64) -> TrinomialTail {
        TrinomialTail {
            e: e.into(),
            f: f.into(),
        }
    }

    #[test]
    fn hoffman_examples() {
        assert_eq!(hoffman_poly(&graph("petersen")).unwrap(), poly(&[-2, 1, 1]));
        assert_eq!(hoffman_poly(&graph("complete 4")).unwrap(), poly(&[1, 1]));
        assert_eq!(hoffman_poly(&graph("line-graph heawood")).unwrap(), poly(&[-2, -5, 0, 1]));
    }

    #[test]
    fn hoffman_preconditions() {
        assert_eq!(hoffman_poly(&graph("path 3")), Err(SwrError::NotRegular));
        let two_triangles = Graph::disjoint_union([&graph("complete 3"), &graph("complete 3")]);
        assert_eq!(hoffman_poly(&two_triangles), Err(SwrError::NotConnected));
        assert_eq!(hoffman_poly(&Graph::empty(1)), Err(SwrError::SingleEigenvalue));
    }

    #[test]
    fn trinomial_examples() {
        assert_eq!(divides_trinomial(&poly(&[-2, 1, 1]), 3).unwrap(), Some(tail(-3, 2)));
        let h = poly(&[-2, -5, 0, 1]);
        assert_eq!(divides_trinomial(&h, 3).unwrap(), Some(tail(-5, -2)));
        assert_eq!(divides_trinomial(&h, 5).unwrap(), None);
        assert_eq!(divides_trinomial(&poly(&[0, -9, 0, 1]), 7).unwrap(), Some(tail(-729, 0)));
    }

    #[test]
    fn trinomial_degree_guard() {
        assert!(matches!(
            divides_trinomial(&poly(&[1, 0, 0, 0, 1]), 3),
            Err(SwrError::Algebra(AlgebraError::DegreeOutOfRange { found: 4, .. }))
        ));
        assert!(divides_trinomial(&poly(&[3]), 3).is_err());
        assert_eq!(divides_trinomial(&poly(&[1, 1]), 1), Err(SwrError::ExcludedLength(1)));
    }

    #[test]
    fn params_from_tail_examples() {
        let int = |x: i64| Some(BigInt::from(x));
        let p = params_from_tail(&graph("petersen"), 3, &tail(-3, 2)).unwrap();
        assert_eq!(p, SwrParams::new(3, int(5), int(2), int(0)));

        let p = params_from_tail(&graph("complement-kmm-km 2"), 5, &tail(-16, 0)).unwrap();
        assert_eq!(p, SwrParams::new(5, int(136), int(120), int(120)));

        let k4 = graph("complete 4");
        let t = divides_trinomial(&hoffman_poly(&k4).unwrap(), 2).unwrap().unwrap();
        let p = params_from_tail(&k4, 2, &t).unwrap();
        assert_eq!(p, SwrParams::new(2, int(2), None, int(3)));
    }

    #[test]
    fn inconsistent_tail_is_an_internal_error() {
        assert!(matches!(
            params_from_tail(&graph("petersen"), 3, &tail(-3, 3)),
            Err(SwrError::Internal(_))
        ));
    }

    #[test]
    fn spectral_route_on_single_vertex() {
        let p = swr_params_spectral(&Graph::empty(1), 4).unwrap().unwrap();
        assert_eq!(p, SwrParams::new(4, None, None, Some(BigInt::zero())));
    }
}
