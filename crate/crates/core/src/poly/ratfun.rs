use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{IntPoly, Series};
use crate::arith::Rat;
use crate::error::{Error, Result};

/// A rational function num/den in t, kept in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatFun {
    num: IntPoly,
    den: IntPoly,
}

/// Builds the canonical form of num/den.
pub fn ratfun_normalize(num: IntPoly, den: IntPoly) -> Result<RatFun> {
    RatFun::new(num, den)
}

impl RatFun {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivByZero);
        }
        if num.is_zero() {
            return Ok(RatFun { num, den: IntPoly::one() });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let c = num.content().gcd(&den.content());
        let mut c = if c.is_one() { BigInt::one() } else { c };
        if den.lowest().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = IntPoly::new(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPoly::new(den.coeffs().iter().map(|x| x / &c).collect());
        }
        Ok(RatFun { num, den })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::new(p, IntPoly::one()).expect("unit denominator")
    }

    pub fn from_rat(q: &Rat) -> Self {
        Self::new(IntPoly::constant(q.numer().clone()), IntPoly::constant(q.denom().clone()))
            .expect("nonzero denominator")
    }

    /// Quotient of two polynomials with rational coefficients.
    pub fn from_rat_coeffs(num: &[Rat], den: &[Rat]) -> Result<Self> {
        let (n, dn) = IntPoly::from_rats(num);
        let (d, dd) = IntPoly::from_rats(den);
        Self::new(n.scale(&dd), d.scale(&dn))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, q: &Rat) -> Self {
        Self::new(self.num.scale(q.numer()), self.den.scale(q.denom())).expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    /// Truncated Taylor expansion at t = 0.
    pub fn expand(&self, order: usize) -> Result<Series> {
        series_expand(self, order)
    }
}

/// Power-series expansion of f to `order` terms by exact long division.
pub fn series_expand(f: &RatFun, order: usize) -> Result<Series> {
    let d0 = f.den.coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtZero);
    }
    let d0 = Rat::from_integer(d0);
    let den: Vec<Rat> = f.den.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect();
    let mut out: Vec<Rat> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = Rat::from_integer(f.num.coeff(k));
        for j in 1..den.len().min(k + 1) {
            if !den[j].is_zero() {
                acc -= &den[j] * &out[k - j];
            }
        }
        out.push(acc / &d0);
    }
    Ok(Series::new(out))
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        RatFun::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

/// `(num) / (den)` with ascending powers.
impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn ints(s: &Series) -> Vec<i64> {
        s.to_i64s().unwrap()
    }

    #[test]
    fn normalize_examples() {
        let f = ratfun_normalize(IntPoly::one_minus_t_pow(4), IntPoly::one_minus_t_pow(2)).unwrap();
        assert_eq!(f.num(), &p(&[1, 0, 1]));
        assert!(f.den().is_one());
        let f = ratfun_normalize(p(&[2, 2]), p(&[4])).unwrap();
        assert_eq!((f.num(), f.den()), (&p(&[1, 1]), &p(&[2])));
        assert_eq!(ratfun_normalize(p(&[1]), IntPoly::zero()), Err(Error::DivByZero));
        let (a, b, h) = (4, 4, 6);
        let lhs = ratfun_normalize(
            IntPoly::one_plus_t_pow(h) * IntPoly::one_minus_t_pow(2),
            IntPoly::one_minus_t_pow(a) * IntPoly::one_minus_t_pow(b) * IntPoly::one_minus_t_pow(2),
        )
        .unwrap();
        let rhs = ratfun_normalize(IntPoly::one_plus_t_pow(h), IntPoly::one_minus_t_pow(a) * IntPoly::one_minus_t_pow(b)).unwrap();
        assert_eq!(lhs, rhs);
        let neg = ratfun_normalize(p(&[-1]), p(&[0, -3, 1])).unwrap();
        assert_eq!(neg.to_string(), "(1) / (3t-t^2)");
    }

    #[test]
    fn expansion_examples() {
        let f = RatFun::new(IntPoly::one_plus_t_pow(2), IntPoly::one_minus_t_pow(2).pow(2)).unwrap();
        assert_eq!(ints(&f.expand(10).unwrap()), vec![1, 0, 3, 0, 5, 0, 7, 0, 9, 0]);
        let g = RatFun::new(p(&[1]), IntPoly::one_minus_t_pow(1)).unwrap();
        assert_eq!(ints(&g.expand(4).unwrap()), vec![1, 1, 1, 1]);
        let h = RatFun::new(IntPoly::one_plus_t_pow(12), IntPoly::one_minus_t_pow(6) * IntPoly::one_minus_t_pow(8)).unwrap();
        let mut want = vec![0; 19];
        for (k, v) in [(0, 1), (6, 1), (8, 1), (12, 2), (14, 1), (16, 1), (18, 2)] {
            want[k] = v;
        }
        assert_eq!(ints(&h.expand(19).unwrap()), want);
        // 1+t^12 and 1-t^8 share the factor 1+t^4.
        assert_eq!(h.to_string(), "(1-t^4+t^8) / (1-t^4-t^6+t^10)");
        let pole = RatFun::new(p(&[1]), p(&[0, 1])).unwrap();
        assert_eq!(pole.expand(3), Err(Error::PoleAtZero));
    }

    proptest! {
        #[test]
        fn expansion_times_den(num in prop::collection::vec(-6i64..7, 0..9), den in prop::collection::vec(-6i64..7, 1..9), d0 in 1i64..4) {
            let mut den = den;
            den[0] = d0;
            let f = RatFun::new(p(&num), p(&den)).unwrap();
            let n = 30;
            let s = f.expand(n).unwrap();
            let q = f.den().coeffs();
            for k in 0..(n - q.len() + 1) {
                let mut acc = Rat::zero();
                for (j, c) in q.iter().enumerate() {
                    if j <= k {
                        acc += Rat::from_integer(c.clone()) * &s.coeffs()[k - j];
                    }
                }
                prop_assert_eq!(acc, Rat::from_integer(f.num().coeff(k)));
            }
        }
    }
}
