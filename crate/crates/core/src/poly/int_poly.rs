use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rat;
use crate::error::{Error, Result};

/// Dense univariate polynomial in t with integer coefficients, index = degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly {
    #[serde(with = "big_vec")]
    coeffs: Vec<BigInt>,
}

mod big_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|c| c.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect()
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
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

    /// c·t^k
    pub fn monomial(k: usize, c: i64) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    /// 1 − t^k
    pub fn one_minus_t_pow(k: usize) -> Self {
        &Self::one() - &Self::monomial(k, 1)
    }

    /// 1 + t^k
    pub fn one_plus_t_pow(k: usize) -> Self {
        &Self::one() + &Self::monomial(k, 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Lowest nonzero coefficient.
    pub fn lowest(&self) -> BigInt {
        self.coeffs.iter().find(|c| !c.is_zero()).cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// Substitutes t ↦ t^k.
    pub fn compose_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Content removed, leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Pseudo-remainder of self by d: lc(d)^k · self mod d.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lc = d.leading();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading();
            r = &r.scale(&lc) - &d.scale(&c).shift(rd - dd);
        }
        r
    }

    /// Primitive gcd with positive leading coefficient (gcd over Q up to a unit).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
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

    /// Exact quotient self / d; fails if d does not divide self over Z.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let dd = d.degree().ok_or(Error::DivByZero)?;
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::NonIntegral(format!("{self} is not divisible by {d}")))
            };
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd];
            if c.is_zero() {
                continue;
            }
            let (qc, rem) = c.div_rem(&lc);
            if !rem.is_zero() {
                return Err(Error::NonIntegral(format!("{self} is not divisible by {d}")));
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] -= &qc * dj;
            }
            q[k] = qc;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonIntegral(format!("{self} is not divisible by {d}")));
        }
        Ok(Self::new(q))
    }

    /// Keeps the terms of degree < n.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + Rat::from_integer(c.clone()))
    }

    /// Converts a rational-coefficient vector into (integer polynomial, common denominator).
    pub fn from_rats(c: &[Rat]) -> (Self, BigInt) {
        let den = c.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let v = c.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        (Self::new(v), den)
    }
}

fn add_vecs(a: &[BigInt], b: &[BigInt], neg: bool) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_default();
            match b.get(k) {
                Some(y) if neg => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_vecs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_vecs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { (&self).$m(&rhs) }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |a, b| &a * &b)
    }
}

/// Ascending powers of t, e.g. `1-t^6-t^8+t^14`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    write!(f, "t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn display_and_trim() {
        assert_eq!(p(&[1, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1]).to_string(), "1-t^6-t^8+t^14");
        assert_eq!(p(&[0, -2, 3, 0, 0]).to_string(), "-2t+3t^2");
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn gcd_and_division() {
        let a = IntPoly::one_minus_t_pow(4);
        let b = IntPoly::one_minus_t_pow(2);
        assert_eq!(a.gcd(&b), p(&[-1, 0, 1]));
        assert_eq!(a.div_exact(&b).unwrap(), p(&[1, 0, 1]));
        assert!(b.div_exact(&p(&[2, 1])).is_err());
        assert_eq!(p(&[4, 6]).content(), BigInt::from(2));
    }

    proptest! {
        #[test]
        fn mul_then_divide(a in prop::collection::vec(-9i64..10, 0..6), b in prop::collection::vec(-9i64..10, 1..6)) {
            let (a, b) = (p(&a), p(&b));
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn gcd_divides_both(a in prop::collection::vec(-5i64..6, 1..5), b in prop::collection::vec(-5i64..6, 1..5), c in prop::collection::vec(-5i64..6, 1..4)) {
            let (a, b, c) = (p(&a), p(&b), p(&c));
            prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
            let (x, y) = (&a * &c, &b * &c);
            let g = x.gcd(&y);
            prop_assert!(x.scale(&g.leading().pow(8)).div_exact(&g).is_ok());
            prop_assert!(y.scale(&g.leading().pow(8)).div_exact(&g).is_ok());
            prop_assert!(g.degree() >= c.degree());
        }
    }
}
