use std::ops::{Add, Mul, Sub};

use super::IntPoly;
use crate::arith::{CycloNum, Rat};
use crate::error::{Error, Result};

/// Polynomial in t with cyclotomic coefficients, index = degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloPoly {
    coeffs: Vec<CycloNum>,
}

impl CycloPoly {
    pub fn new(mut coeffs: Vec<CycloNum>) -> Self {
        while coeffs.last().is_some_and(CycloNum::is_zero) {
            coeffs.pop();
        }
        CycloPoly { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![CycloNum::one()])
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        Self::new(p.coeffs().iter().map(|c| CycloNum::from_rat(Rat::from_integer(c.clone()))).collect())
    }

    pub fn coeffs(&self) -> &[CycloNum] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> CycloNum {
        self.coeffs.get(k).cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Rational coefficients, or None if any coefficient is irrational.
    pub fn to_rats(&self) -> Option<Vec<Rat>> {
        self.coeffs.iter().map(CycloNum::to_rational).collect()
    }

    /// Integer polynomial view; NonIntegral unless every coefficient is an integer.
    pub fn to_int_poly(&self) -> Result<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.to_integer().ok_or_else(|| Error::NonIntegral(format!("coefficient {c}"))))
            .collect::<Result<Vec<_>>>()
            .map(IntPoly::new)
    }
}

impl Add for &CycloPoly {
    type Output = CycloPoly;
    fn add(self, rhs: &CycloPoly) -> CycloPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CycloPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &CycloPoly {
    type Output = CycloPoly;
    fn sub(self, rhs: &CycloPoly) -> CycloPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CycloPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &CycloPoly {
    type Output = CycloPoly;
    fn mul(self, rhs: &CycloPoly) -> CycloPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return CycloPoly::zero();
        }
        let mut v = vec![CycloNum::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = &v[i + j] + &(a * b);
                }
            }
        }
        CycloPoly::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_quadratic_product_is_rational() {
        // (1 - ζ₅t)(1 - ζ₅⁴t) = 1 - (ζ₅+ζ₅⁴)t + t²
        let f = |k| CycloPoly::new(vec![CycloNum::one(), -CycloNum::zeta(5, k)]);
        let prod = &f(1) * &f(4);
        assert!(prod.to_rats().is_none());
        let all = &(&prod * &f(2)) * &f(3);
        assert_eq!(all.to_int_poly().unwrap(), IntPoly::from_i64s(&[1, 1, 1, 1, 1]));
    }
}
