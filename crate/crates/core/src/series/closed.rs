use num_bigint::BigInt;
use num_traits::One;

use crate::arith::CycloNum;
use crate::error::{Error, Result};
use crate::groups::PairSpec;
use crate::mckay::AffineType;
use crate::poly::{CycloPoly, IntPoly, RatFun};

/// Which exponent list of an affine type to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentSet {
    Affine,
    Finite,
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn one_plus_t2() -> IntPoly {
    IntPoly::one_plus_t_pow(2)
}

fn one_minus_t2() -> IntPoly {
    IntPoly::one_minus_t_pow(2)
}

/// (1+t^h) / ((1−t^a)(1−t^b)) with the tabulated a, b, h.
pub fn closed_form_invariants(ty: &AffineType) -> RatFun {
    let r = ty.coxeter;
    let den = &IntPoly::one_minus_t_pow(r.a as usize) * &IntPoly::one_minus_t_pow(r.b as usize);
    RatFun::new(IntPoly::one_plus_t_pow(r.h as usize), den).expect("nonzero denominator")
}

/// Uncancelled text of [`closed_form_invariants`], e.g. "(1+t^12)/((1-t^6)(1-t^8))".
pub fn closed_form_text(ty: &AffineType) -> String {
    let r = ty.coxeter;
    format!("(1+t^{})/((1-t^{})(1-t^{}))", r.h, r.a, r.b)
}

/// (1−t^{2p})(1−t^{2q})(1−t^{2r}) / (1−t²).
pub fn closed_form_cartan_det(ty: &AffineType) -> RatFun {
    let num: IntPoly = ty.coxeter.pqr_doubled.iter().map(|&e| IntPoly::one_minus_t_pow(e as usize)).product();
    RatFun::new(num, one_minus_t2()).expect("nonzero denominator")
}

/// Π_m (1 + t² − (ζ_{2h}^m + ζ_{2h}^{−m}) t), exact in Q(ζ_{2h}).
pub fn exponent_product_raw(exponents: &[u32], h: u32) -> Result<IntPoly> {
    if h == 0 {
        return Err(Error::InvalidSpec("Coxeter number 0".into()));
    }
    let mut acc = CycloPoly::one();
    for &m in exponents {
        let c = CycloNum::two_cos(2 * h, m as i64);
        acc = &acc * &CycloPoly::new(vec![CycloNum::one(), -c, CycloNum::one()]);
    }
    acc.to_int_poly()
}

pub fn exponent_product(ty: &AffineType, which: ExponentSet) -> Result<IntPoly> {
    match which {
        ExponentSet::Affine => match (&ty.affine_exponents, ty.affine_h) {
            (Some(e), Some(h)) => exponent_product_raw(e, h),
            _ => Err(Error::InvalidSpec(format!("no affine exponents tabulated for {}", ty.tag))),
        },
        ExponentSet::Finite => exponent_product_raw(&ty.finite_exponents, ty.finite_h),
    }
}

/// Finite-exponent product over affine-exponent product; None without tabulated affine exponents.
pub fn exponent_closed_form(ty: &AffineType) -> Option<Result<RatFun>> {
    ty.affine_exponents.as_ref()?;
    Some((|| {
        let num = exponent_product(ty, ExponentSet::Finite)?;
        let den = exponent_product(ty, ExponentSet::Affine)?;
        RatFun::new(num, den)
    })())
}

/// Σ_{i≤n/2} C(n,2i)(1+t²)^{n−2i}(1−t²)^{2i}, which is 2^{n−1} c_{n−1}(t).
pub(crate) fn c_sum(n: u64) -> IntPoly {
    let mut acc = IntPoly::zero();
    for i in 0..=n / 2 {
        let term = &one_plus_t2().pow((n - 2 * i) as u32) * &one_minus_t2().pow(2 * i as u32);
        acc = &acc + &term.scale(&binomial(n, 2 * i));
    }
    acc
}

/// Σ_{i≤m/2} (−1)^i C(m−i,i) t^{2i}(1+t²)^{m−2i}, which is a_m(t).
pub(crate) fn a_sum(m: u64) -> IntPoly {
    let mut acc = IntPoly::zero();
    for i in 0..=m / 2 {
        let mut c = binomial(m - i, i);
        if i % 2 == 1 {
            c = -c;
        }
        let term = one_plus_t2().pow((m - 2 * i) as u32).shift(2 * i as usize);
        acc = &acc + &term.scale(&c);
    }
    acc
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

/// Binomial-sum closed form of the trivial series for the dihedral pair families.
pub fn dihedral_closed_forms(pair: &PairSpec) -> Option<RatFun> {
    let (num, den) = match *pair {
        PairSpec::DihedralInDihedral(k) if k >= 2 => {
            let n = k as u64 + 1;
            let quartic = IntPoly::from_i64s(&[1, 0, -1, 0, -1, 0, 1]);
            (c_sum(n), (&quartic * &a_sum(n - 2)).scale(&pow2(n - 1)))
        }
        PairSpec::CyclicInDihedral(n) | PairSpec::CyclicInDoubleDihedral(n) if n >= 1 => {
            let n = n as u64;
            (c_sum(n), (&one_minus_t2().pow(2) * &a_sum(n - 1)).scale(&pow2(n - 1)))
        }
        _ => return None,
    };
    Some(RatFun::new(num, den).expect("nonzero denominator"))
}

/// Uniform closed form for the cyclic group of order n ≥ 1.
pub fn cyclic_closed_form(n: u64) -> RatFun {
    let num = a_sum(n - 1).scale(&pow2(n - 1));
    let den = &c_sum(n) - &IntPoly::monomial(n as usize, 1).scale(&pow2(n));
    RatFun::new(num, den).expect("nonzero denominator")
}

/// Closed form for the binary dihedral group of order 4n, n ≥ 1.
pub fn dicyclic_closed_form(n: u64) -> RatFun {
    let num = &c_sum(n + 1) * &one_plus_t2();
    let den = (&IntPoly::one_minus_t_pow(4).pow(2) * &a_sum(n - 1)).scale(&pow2(n));
    RatFun::new(num, den).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::{affine_type, AffineFamily};

    #[test]
    fn table_two_rows() {
        let f4 = affine_type(AffineFamily::F4);
        let expect = RatFun::new(
            IntPoly::one_plus_t_pow(12),
            &IntPoly::one_minus_t_pow(6) * &IntPoly::one_minus_t_pow(8),
        )
        .unwrap();
        assert_eq!(closed_form_invariants(&f4), expect);
        assert_eq!(closed_form_text(&f4), "(1+t^12)/((1-t^6)(1-t^8))");
        let a1 = affine_type(AffineFamily::A1(1));
        assert_eq!(
            closed_form_invariants(&a1),
            RatFun::new(IntPoly::from_i64s(&[1, 0, 1]), IntPoly::from_i64s(&[1, 0, -2, 0, 1])).unwrap()
        );
        assert_eq!(closed_form_cartan_det(&a1), RatFun::from_poly(one_minus_t2().pow(2)));
        let g2 = affine_type(AffineFamily::G2);
        assert_eq!(closed_form_cartan_det(&g2), RatFun::from_poly(&IntPoly::one_minus_t_pow(4) * &one_minus_t2()));
        let e8 = affine_type(AffineFamily::E8);
        let e8_det: IntPoly = [10, 6, 4].iter().map(|&k| IntPoly::one_minus_t_pow(k)).product();
        assert_eq!(closed_form_cartan_det(&e8), RatFun::new(e8_det, one_minus_t2()).unwrap());
    }

    #[test]
    fn exponent_products() {
        assert_eq!(exponent_product_raw(&[0], 5).unwrap(), IntPoly::from_i64s(&[1, -2, 1]));
        // (1−t)²(1+t²)(1+t)²
        let g2 = affine_type(AffineFamily::G2);
        let expect = &one_minus_t2().pow(2) * &one_plus_t2();
        assert_eq!(exponent_product(&g2, ExponentSet::Affine).unwrap(), expect);
        // finite C_n exponents give c_{n−1}
        for n in 1..8u64 {
            let odd: Vec<u32> = (1..=n as u32).map(|i| 2 * i - 1).collect();
            let c = exponent_product_raw(&odd, 2 * n as u32).unwrap();
            assert_eq!(c.scale(&pow2(n - 1)), c_sum(n));
        }
    }

    #[test]
    fn small_closed_forms() {
        // C_1: 1/(1−t)²
        assert_eq!(cyclic_closed_form(1), RatFun::new(IntPoly::one(), IntPoly::from_i64s(&[1, -2, 1])).unwrap());
        // binary dihedral of order 4 is cyclic of order 4
        assert_eq!(dicyclic_closed_form(1), cyclic_closed_form(4));
        assert_eq!(binomial(10, 3), BigInt::from(120));
    }
}
