//! The linear recurrence behind the four-eigenvalue case.
//!
//! With `h = x^3 + a x^2 + b x + c`, write `x^i mod h = alpha_i x^2 + ...`.
//! Then `alpha_0 = alpha_1 = 0`, `alpha_2 = 1` and
//! `alpha_i + a alpha_{i-1} + b alpha_{i-2} + c alpha_{i-3} = 0`, and `h`
//! divides a trinomial `x^l + e x + f` exactly when `alpha_l = 0`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::IntPoly;
use crate::error::AlgebraError;

/// `h(x) = x^3 + a x^2 + b x + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoffmanCubic {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl HoffmanCubic {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        HoffmanCubic {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn from_poly(h: &IntPoly) -> Result<Self, AlgebraError> {
        if h.degree() != Some(3) {
            return Err(AlgebraError::DegreeOutOfRange {
                min: 3,
                max: 3,
                found: h.degree().unwrap_or(0),
            });
        }
        if !h.is_monic() {
            return Err(AlgebraError::NotMonic);
        }
        Ok(HoffmanCubic::new(h.coeff(2), h.coeff(1), h.coeff(0)))
    }

    /// `(x - t1)(x - t2)(x - t3)`.
    pub fn from_roots(t1: &BigInt, t2: &BigInt, t3: &BigInt) -> Self {
        HoffmanCubic {
            a: -(t1 + t2 + t3),
            b: t1 * t2 + t1 * t3 + t2 * t3,
            c: -(t1 * t2 * t3),
        }
    }

    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(vec![self.c.clone(), self.b.clone(), self.a.clone(), BigInt::one()])
    }

    /// `-h(-x)`: the cubic whose roots are the negated roots.
    pub fn negated(&self) -> Self {
        HoffmanCubic {
            a: -self.a.clone(),
            b: self.b.clone(),
            c: -self.c.clone(),
        }
    }

    /// Roots of the form `t, 0, -t`, for which every odd power reduces to a
    /// multiple of `x`.
    pub fn is_odd_symmetric(&self) -> bool {
        self.a.is_zero() && self.c.is_zero()
    }

    /// `alpha_0, alpha_1, ...` without end.
    pub fn alphas(&self) -> Alphas<'_> {
        Alphas {
            h: self,
            window: [BigInt::zero(), BigInt::zero(), BigInt::one()],
        }
    }
}

/// Iterator over the recurrence terms.
#[derive(Clone, Debug)]
pub struct Alphas<'a> {
    h: &'a HoffmanCubic,
    window: [BigInt; 3],
}

impl Iterator for Alphas<'_> {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let [x0, x1, x2] = &self.window;
        let next = -(&self.h.a * x2 + &self.h.b * x1 + &self.h.c * x0);
        let out = std::mem::replace(&mut self.window[0], BigInt::zero());
        self.window.rotate_left(1);
        self.window[2] = next;
        Some(out)
    }
}

/// `alpha_l`, the `x^2` coefficient of `x^l mod h`.
pub fn alpha(h: &HoffmanCubic, ell: u32) -> BigInt {
    h.alphas().nth(ell as usize).expect("alphas never ends")
}
