use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use crate::graph::Graph;

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl BigMatrix {
    pub fn zeros(n: usize) -> Self {
        BigMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    /// The all-ones matrix `J`.
    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, |_, _| BigInt::one())
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        BigMatrix { n, data }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| rows[i][j].clone().into())
    }

    pub fn adjacency(g: &Graph) -> Self {
        let mut m = Self::zeros(g.n());
        for (i, j) in g.edges() {
            m[(i, j)] = BigInt::one();
            m[(j, i)] = BigInt::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| &self[(i, i)]).sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        BigMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Adds `c` to every diagonal entry.
    pub fn add_scalar(mut self, c: &BigInt) -> Self {
        for i in 0..self.n {
            self.data[i * self.n + i] += c;
        }
        self
    }

    /// `self^exp` by binary powering.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `I, A, A^2, ...` by repeated multiplication with `A`.
    pub fn powers(&self) -> impl Iterator<Item = BigMatrix> + '_ {
        std::iter::successors(Some(Self::identity(self.n)), move |prev| Some(prev * self))
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_poly(&self, p: &IntPoly) -> Self {
        let mut acc = Self::zeros(self.n);
        for c in p.coeffs().iter().rev() {
            acc = (&acc * self).add_scalar(c);
        }
        acc
    }

    /// Monic characteristic polynomial `det(xI - A)` by the Faddeev–LeVerrier
    /// recurrence. Every division in the recurrence is exact over the integers.
    pub fn char_poly(&self) -> IntPoly {
        let n = self.n;
        // coeffs[k] multiplies x^k
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = Self::zeros(n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
            m = (self * &m).add_scalar(&coeffs[n - k + 1]);
            let t = (self * &m).trace();
            let (q, r) = t.div_rem(&BigInt::from(k));
            debug_assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
            coeffs[n - k] = -q;
        }
        IntPoly::new(coeffs)
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }
}

impl Index<(usize, usize)> for BigMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for BigMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &BigMatrix {
    type Output = BigMatrix;
    fn mul(self, rhs: &BigMatrix) -> BigMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = BigMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &BigMatrix {
    type Output = BigMatrix;
    fn add(self, rhs: &BigMatrix) -> BigMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        BigMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &BigMatrix {
    type Output = BigMatrix;
    fn sub(self, rhs: &BigMatrix) -> BigMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        BigMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::construct_family;
    use proptest::prelude::*;

    fn adj(spec: &str) -> BigMatrix {
        let tokens: Vec<_> = spec.split_whitespace().collect();
        BigMatrix::adjacency(&construct_family(&tokens).unwrap())
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn k2_squared_is_identity() {
        assert_eq!(adj("complete 2").pow(2), BigMatrix::identity(2));
        assert_eq!(adj("complete 2").pow(0), BigMatrix::identity(2));
    }

    #[test]
    fn c4_cubed_is_four_times_c4() {
        let a = adj("cycle 4");
        assert_eq!(a.pow(3), a.scale(&BigInt::from(4)));
    }

    #[test]
    fn char_polys_of_small_graphs() {
        assert_eq!(adj("complete 3").char_poly(), poly(&[-2, -3, 0, 1]));
        assert_eq!(BigMatrix::zeros(2).char_poly(), poly(&[0, 0, 1]));
        assert_eq!(adj("complete 2").char_poly(), poly(&[-1, 0, 1]));
        assert_eq!(BigMatrix::zeros(0).char_poly(), poly(&[1]));
    }

    #[test]
    fn cayley_hamilton_on_petersen() {
        let a = adj("petersen");
        assert!(a.eval_poly(&a.char_poly()).is_zero());
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = BigMatrix> {
        proptest::collection::vec(-9i64..=9, n * n)
            .prop_map(move |v| BigMatrix::from_fn(n, |i, j| BigInt::from(v[i * n + j])))
    }

    proptest! {
        #[test]
        fn power_routes_agree(a in arb_matrix(5), l in 0u64..=6) {
            let iterated: Vec<_> = a.powers().take(l as usize + 2).collect();
            prop_assert_eq!(&iterated[l as usize + 1], &(&a.pow(l) * &a));
            prop_assert_eq!(&iterated[l as usize], &a.pow(l));
        }

        #[test]
        fn cayley_hamilton_random(a in arb_matrix(4)) {
            prop_assert!(a.eval_poly(&a.char_poly()).is_zero());
        }
    }
}
