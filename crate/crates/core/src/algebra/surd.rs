use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// A real quadratic irrational `a + b*sqrt(d)` with `a, b` rational,
/// `b != 0` and `d >= 2` squarefree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

/// Writes `radicand = s^2 * d` with `d` squarefree, by trial division.
fn split_square(radicand: &BigInt) -> (BigInt, BigInt) {
    let mut rest = radicand.clone();
    let mut square_root = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let pp = &p * &p;
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            square_root *= &p;
        }
        p += 1;
    }
    (square_root, rest)
}

/// Either a rational or a quadratic surd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealQuadratic {
    Rational(BigRational),
    Surd(QuadraticSurd),
}

impl QuadraticSurd {
    /// Normalizes `a + b*sqrt(radicand)`. Returns a rational when the
    /// radicand is a perfect square or `b == 0`. Panics on a negative radicand.
    pub fn new(a: BigRational, b: BigRational, radicand: BigInt) -> RealQuadratic {
        assert!(!radicand.is_negative(), "radicand must be nonnegative");
        let (s, d) = split_square(&radicand);
        if b.is_zero() || d.is_zero() {
            return RealQuadratic::Rational(a);
        }
        if d.is_one() {
            return RealQuadratic::Rational(a + b * BigRational::from(s));
        }
        RealQuadratic::Surd(QuadraticSurd {
            a,
            b: b * BigRational::from(s),
            d,
        })
    }

    /// The two roots of the monic quadratic `x^2 + p*x + q`, larger first.
    pub fn roots_of_monic_quadratic(p: &BigInt, q: &BigInt) -> (RealQuadratic, RealQuadratic) {
        let disc: BigInt = p * p - BigInt::from(4) * q;
        let a = BigRational::new(-p, BigInt::from(2));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        (
            Self::new(a.clone(), half.clone(), disc.clone()),
            Self::new(a, -half, disc),
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_coefficient(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn conjugate(&self) -> QuadraticSurd {
        QuadraticSurd {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * d.sqrt()
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        sign_of(&(&self.a - r), &self.b, &self.d)
    }

    /// Minimal polynomial `x^2 - 2a x + (a^2 - b^2 d)` as rational coefficients
    /// `[c0, c1]` of the monic quadratic.
    pub fn min_poly(&self) -> (BigRational, BigRational) {
        let c1 = -(&self.a * BigRational::from_integer(2.into()));
        let c0 = &self.a * &self.a - &self.b * &self.b * BigRational::from(self.d.clone());
        (c0, c1)
    }
}

/// Sign of `x + y*sqrt(d)` for rational `x`, `y` and positive `d`.
fn sign_of(x: &BigRational, y: &BigRational, d: &BigInt) -> Ordering {
    let sx = x.cmp(&BigRational::zero());
    let sy = y.cmp(&BigRational::zero());
    if sx == sy || sy == Ordering::Equal {
        return sx;
    }
    if sx == Ordering::Equal {
        return sy;
    }
    // opposite signs: compare x^2 with y^2 d
    let lhs = x * x;
    let rhs = y * y * BigRational::from(d.clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => sx,
        Ordering::Less => sy,
        Ordering::Equal => Ordering::Equal,
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadraticSurd {
    /// `a + b*sqrt(d)`, e.g. `1/2 + 3/2*sqrt(5)` or `1 - sqrt(2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mag = self.b.abs();
        let coeff = if mag.is_one() {
            String::new()
        } else {
            format!("{}*", fmt_rational(&mag))
        };
        let sign = if self.b.is_negative() { '-' } else { '+' };
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coeff}sqrt({})", self.d)
        } else {
            write!(f, "{} {sign} {coeff}sqrt({})", fmt_rational(&self.a), self.d)
        }
    }
}

impl Serialize for QuadraticSurd {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuadraticSurd", 3)?;
        st.serialize_field("a", &fmt_rational(&self.a))?;
        st.serialize_field("b", &fmt_rational(&self.b))?;
        match self.d.to_u64() {
            Some(d) => st.serialize_field("d", &d)?,
            None => st.serialize_field("d", &self.d.to_string())?,
        }
        st.end()
    }
}

impl RealQuadratic {
    pub fn to_f64(&self) -> f64 {
        match self {
            RealQuadratic::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            RealQuadratic::Surd(s) => s.to_f64(),
        }
    }

    /// Exact ordering; surds with different radicands are compared through
    /// the sign of their difference after squaring.
    pub fn exact_cmp(&self, other: &RealQuadratic) -> Ordering {
        use RealQuadratic::*;
        match (self, other) {
            (Rational(x), Rational(y)) => x.cmp(y),
            (Surd(s), Rational(r)) => s.cmp_rational(r),
            (Rational(r), Surd(s)) => s.cmp_rational(r).reverse(),
            (Surd(s), Surd(t)) if s.d == t.d => sign_of(&(&s.a - &t.a), &(&s.b - &t.b), &s.d),
            (Surd(s), Surd(t)) => {
                // s - t = (a1 - a2) + b1 sqrt(d1) - b2 sqrt(d2); d1 != d2 squarefree,
                // so the difference is nonzero; decide by refining with rationals.
                let mut scale = BigInt::from(1u64 << 20);
                loop {
                    let (lo1, hi1) = s.bracket(&scale);
                    let (lo2, hi2) = t.bracket(&scale);
                    if hi1 < lo2 {
                        return Ordering::Less;
                    }
                    if hi2 < lo1 {
                        return Ordering::Greater;
                    }
                    scale *= BigInt::from(1u64 << 20);
                }
            }
        }
    }
}

impl QuadraticSurd {
    /// Rational bracket `[lo, hi]` of the value using `floor(sqrt(d) * scale)`.
    fn bracket(&self, scale: &BigInt) -> (BigRational, BigRational) {
        let root = (&self.d * scale * scale).sqrt();
        let lo = BigRational::new(root.clone(), scale.clone());
        let hi = BigRational::new(root + 1, scale.clone());
        let (x, y) = (&self.a + &self.b * &lo, &self.a + &self.b * &hi);
        if x <= y {
            (x, y)
        } else {
            (y, x)
        }
    }
}

impl fmt::Display for RealQuadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealQuadratic::Rational(r) => write!(f, "{}", fmt_rational(r)),
            RealQuadratic::Surd(s) => write!(f, "{s}"),
        }
    }
}

/// Failure parsing a number of the form `a + b*sqrt(d)`.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as a rational or `a + b*sqrt(d)`")]
pub struct ParseQuadraticError(String);

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!d.is_zero()).then(|| BigRational::new(n, d))
}

impl std::str::FromStr for RealQuadratic {
    type Err = ParseQuadraticError;

    /// Accepts `3`, `-3/2`, `sqrt(5)`, `-2*sqrt(5)`, `1/2 + 3/2*sqrt(5)`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || ParseQuadraticError(text.to_string());
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(open) = s.find("sqrt(") else {
            return parse_rational(&s).map(RealQuadratic::Rational).ok_or_else(err);
        };
        let radicand = s[open + 5..].strip_suffix(')').ok_or_else(err)?;
        let radicand: BigInt = radicand.parse().map_err(|_| err())?;
        if radicand.is_negative() {
            return Err(err());
        }
        let head = &s[..open];
        // split the head into the rational part and the signed coefficient
        let (head, has_coeff) = match head.strip_suffix('*') {
            Some(h) => (h, true),
            None => (head, false),
        };
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (a_text, b_text) = match (split, has_coeff) {
            (Some(i), true) => (&head[..i], &head[i..]),
            (None, true) => ("", head),
            (_, false) => match head.char_indices().last() {
                Some((i, c)) if c == '+' || c == '-' => (&head[..i], &head[i..]),
                Some(_) => return Err(err()),
                None => ("", ""),
            },
        };
        let a = if a_text.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(a_text).ok_or_else(err)?
        };
        let b = match b_text {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_rational(t.strip_prefix('+').unwrap_or(t)).ok_or_else(err)?,
        };
        Ok(QuadraticSurd::new(a, b, radicand))
    }
}
