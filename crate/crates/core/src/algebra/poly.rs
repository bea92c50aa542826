use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree with no trailing zeros. The zero polynomial has
/// no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// `x - r`.
    pub fn linear(r: &BigInt) -> Self {
        Self::new(vec![-r, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero above the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    /// Sign of `p(x)` at a rational point, computed on the cleared numerator
    /// `den^deg * p(num/den)` so that no fractions are formed.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // sum c_i num^i den^(deg-i), by Horner in num with den powers accumulated
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        // den > 0 so the cleared value has the sign of p(x)
        sign(&acc)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Greatest common divisor of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Division by a monic divisor: `self = q * quotient + remainder` with
    /// `deg(remainder) < deg(q)`.
    pub fn div_rem(&self, q: &IntPoly) -> Result<(IntPoly, IntPoly), AlgebraError> {
        let dq = q.degree().ok_or(AlgebraError::ZeroPolynomial)?;
        if !q.is_monic() {
            return Err(AlgebraError::NotMonic);
        }
        let Some(dp) = self.degree().filter(|&d| d >= dq) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for i in (0..=dp - dq).rev() {
            let lead = std::mem::take(&mut rem[i + dq]);
            if lead.is_zero() {
                continue;
            }
            for (j, c) in q.coeffs[..dq].iter().enumerate() {
                rem[i + j] -= &lead * c;
            }
            quot[i] = lead;
        }
        rem.truncate(dq);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient by a monic divisor; `None` if the remainder is nonzero.
    pub fn div_exact(&self, q: &IntPoly) -> Result<Option<IntPoly>, AlgebraError> {
        let (quot, rem) = self.div_rem(q)?;
        Ok(rem.is_zero().then_some(quot))
    }

    /// Pseudo-remainder: remainder of `lc(q)^(deg p - deg q + 1) * p` by `q`.
    fn pseudo_rem(&self, q: &IntPoly) -> IntPoly {
        let dq = q.degree().expect("nonzero divisor");
        let lc = q.leading().unwrap();
        let mut rem = self.coeffs.clone();
        while rem.len() > dq && !rem.is_empty() {
            let d = rem.len() - 1;
            let lead = rem[d].clone();
            for c in rem.iter_mut() {
                *c *= lc;
            }
            for (j, c) in q.coeffs.iter().enumerate() {
                rem[d - dq + j] -= &lead * c;
            }
            debug_assert!(rem[d].is_zero());
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Self::new(rem)
    }

    /// Primitive greatest common divisor with positive leading coefficient,
    /// by the primitive polynomial remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// `x^exp mod self` by repeated squaring. `self` must be monic of degree >= 1.
    pub fn pow_x_mod(&self, exp: u64) -> Result<IntPoly, AlgebraError> {
        match self.degree() {
            None => return Err(AlgebraError::ZeroPolynomial),
            Some(0) => return Err(AlgebraError::DegreeOutOfRange { min: 1, max: usize::MAX, found: 0 }),
            Some(_) => {}
        }
        if !self.is_monic() {
            return Err(AlgebraError::NotMonic);
        }
        let reduce = |p: IntPoly| p.div_rem(self).map(|(_, r)| r);
        let mut result = reduce(Self::one())?;
        let mut base = reduce(Self::monomial(1))?;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = reduce(&result * &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = reduce(&base * &base)?;
            }
        }
        Ok(result)
    }
}

fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Quotient and remainder of `p` by the monic polynomial `q`.
pub fn poly_divmod(p: &IntPoly, q: &IntPoly) -> Result<(IntPoly, IntPoly), AlgebraError> {
    p.div_rem(q)
}

/// `p / gcd(p, p')`: the product of the distinct irreducible factors of a
/// monic `p`, itself monic. For the characteristic polynomial of a symmetric
/// matrix this is the minimal polynomial.
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(AlgebraError::NotMonic);
    }
    let g = p.gcd(&p.derivative());
    // g is primitive and divides a monic polynomial, so it is monic too.
    debug_assert!(g.is_zero() || g.is_monic());
    if g.is_zero() {
        // p is constant 1
        return Ok(p.clone());
    }
    let q = p.div_exact(&g)?.expect("gcd divides p");
    Ok(q)
}

/// Remainder of `x^exp` modulo the monic polynomial `h` (degree >= 1).
pub fn polymod_pow(exp: u64, h: &IntPoly) -> Result<IntPoly, AlgebraError> {
    h.pow_x_mod(exp)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    /// Renders as e.g. `x^3 - 5*x - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 if show_coeff => write!(f, "*x")?,
                1 => write!(f, "x")?,
                _ if show_coeff => write!(f, "*x^{i}")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, -5, 0, 1]).to_string(), "x^3 - 5*x - 2");
        assert_eq!(p(&[340, -83, -2, 1]).to_string(), "x^3 - 2*x^2 - 83*x + 340");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = poly_divmod(&p(&[2, -3, 0, 1]), &p(&[-2, 1, 1])).unwrap();
        assert_eq!((q, r), (p(&[-1, 1]), IntPoly::zero()));

        let f = p(&[7, 3, -4, 2]);
        let (_, r) = poly_divmod(&f, &p(&[0, 1])).unwrap();
        assert_eq!(r, p(&[7]));

        let (_, r) = poly_divmod(&IntPoly::monomial(5), &p(&[-2, -5, 0, 1])).unwrap();
        assert_eq!(r, p(&[10, 25, 2]));
    }

    #[test]
    fn divmod_rejects_bad_divisors() {
        assert_eq!(poly_divmod(&p(&[1]), &IntPoly::zero()), Err(AlgebraError::ZeroPolynomial));
        assert_eq!(poly_divmod(&p(&[1]), &p(&[1, 2])), Err(AlgebraError::NotMonic));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&p(&[-2, -3, 0, 1])).unwrap(), p(&[-2, -1, 1]));
        assert_eq!(squarefree_part(&p(&[0, 0, 1])).unwrap(), p(&[0, 1]));
        // (x-3)(x-1)^5(x+2)^4
        let mut petersen = p(&[-3, 1]);
        for _ in 0..5 {
            petersen = &petersen * &p(&[-1, 1]);
        }
        for _ in 0..4 {
            petersen = &petersen * &p(&[2, 1]);
        }
        assert_eq!(squarefree_part(&petersen).unwrap(), p(&[6, -5, -2, 1]));
        assert_eq!(squarefree_part(&IntPoly::zero()), Err(AlgebraError::ZeroPolynomial));
        assert_eq!(squarefree_part(&IntPoly::one()).unwrap(), IntPoly::one());
    }

    #[test]
    fn polymod_pow_examples() {
        assert_eq!(polymod_pow(3, &p(&[-2, 1, 1])).unwrap(), p(&[-2, 3]));
        assert_eq!(polymod_pow(1, &p(&[5, 0, 1])).unwrap(), p(&[0, 1]));
        assert_eq!(polymod_pow(5, &p(&[-2, -5, 0, 1])).unwrap(), p(&[10, 25, 2]));
        assert_eq!(polymod_pow(0, &p(&[-2, -5, 0, 1])).unwrap(), p(&[1]));
        assert_eq!(polymod_pow(0, &p(&[0, 1])).unwrap(), IntPoly::one());
        assert_eq!(polymod_pow(2, &p(&[0, 1])).unwrap(), IntPoly::zero());
        assert!(polymod_pow(3, &p(&[4])).is_err());
        assert_eq!(polymod_pow(3, &p(&[4, 2])), Err(AlgebraError::NotMonic));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        assert_eq!(p(&[1, 1]).gcd(&p(&[-1, 1])), IntPoly::one());
        assert_eq!(p(&[2, 4]).gcd(&p(&[3, 6])), p(&[1, 2]));
    }

    #[test]
    fn sign_at_matches_rational_eval() {
        let f = p(&[-30, -31, 0, 0, 0, 1]);
        for (n, d) in [(5i64, 2i64), (-3, 7), (0, 1), (-1, 1), (256, 100)] {
            let x = BigRational::new(n.into(), d.into());
            let v = f.eval_rational(&x);
            let s = if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
            assert_eq!(f.sign_at(&x), s);
        }
    }

    fn arb_monic(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-6i64..=6, 0..max_deg).prop_map(|mut c| {
            c.push(1);
            IntPoly::from_i64(&c)
        })
    }

    proptest! {
        #[test]
        fn polymod_pow_matches_long_division(h in arb_monic(5), l in 0u64..=64) {
            prop_assume!(h.degree() >= Some(1));
            let (_, r) = poly_divmod(&IntPoly::monomial(l as usize), &h).unwrap();
            prop_assert_eq!(polymod_pow(l, &h).unwrap(), r);
        }

        #[test]
        fn divmod_reconstructs(f in proptest::collection::vec(-20i64..=20, 0..9), h in arb_monic(4)) {
            let f = IntPoly::from_i64(&f);
            let (q, r) = poly_divmod(&f, &h).unwrap();
            prop_assert_eq!(&(&(&h * &q) + &r), &f);
            prop_assert!(r.degree() < h.degree());
        }
    }
}
