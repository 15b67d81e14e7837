use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::closed::{a_sum, binomial, c_sum, exponent_product_raw};
use crate::arith::{CycloNum, Rat};
use crate::error::{Error, Result};
use crate::mckay::CheckLine;
use crate::poly::{polymat_det, CycloPoly, IntPoly, PolyMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TchebKind {
    T,
    U,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tcheb {
    pub kind: TchebKind,
    pub n: usize,
    pub poly: IntPoly,
}

/// T_n or U_n by the three-term recurrence.
pub fn tcheb(kind: TchebKind, n: usize) -> Tcheb {
    let two_t = IntPoly::monomial(1, 2);
    let mut prev = IntPoly::one();
    let mut cur = match kind {
        TchebKind::T => IntPoly::monomial(1, 1),
        TchebKind::U => two_t.clone(),
    };
    if n == 0 {
        cur = prev.clone();
    }
    for _ in 1..n {
        let next = &(&two_t * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Tcheb { kind, n, poly: cur }
}

/// k·tⁿ·p((t + t⁻¹)/2) for deg p ≤ n, as an integer polynomial.
pub fn chebyshev_at_joukowski(p: &IntPoly, n: usize, k: i64) -> Result<IntPoly> {
    let deg = p.degree().unwrap_or(0);
    if deg > n {
        return Err(Error::InvalidSpec(format!("degree {deg} exceeds {n}")));
    }
    // Σ_k p_k 2^{n−k} t^{n−k}(1+t²)^k, then divide by 2ⁿ
    let mut acc = IntPoly::zero();
    for (j, c) in p.coeffs().iter().enumerate() {
        let term = IntPoly::one_plus_t_pow(2).pow(j as u32).shift(n - j);
        acc = &acc + &term.scale(&(c * (BigInt::one() << (n - j))));
    }
    let acc = acc.scale(&BigInt::from(k));
    let d = BigInt::one() << n;
    if acc.coeffs().iter().any(|c| c % &d != BigInt::from(0)) {
        return Err(Error::NonIntegral("Joukowski substitution".into()));
    }
    Ok(IntPoly::new(acc.coeffs().iter().map(|c| c / &d).collect()))
}

fn recurrence(first: IntPoly, second: IntPoly, n: usize) -> IntPoly {
    let (mut a, mut b) = (first, second);
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        let next = &(&IntPoly::one_plus_t_pow(2) * &b) - &a.shift(2);
        a = b;
        b = next;
    }
    b
}

/// c_n: quantum determinant of the finite C_{n+1} diagram, c_0 = 1+t², c_1 = 1+t⁴.
pub fn c_poly(n: usize) -> IntPoly {
    recurrence(IntPoly::from_i64s(&[1, 0, 1]), IntPoly::from_i64s(&[1, 0, 0, 0, 1]), n)
}

/// a_n: quantum determinant of the finite A_n diagram, a_0 = 1, a_1 = 1+t².
pub fn a_poly(n: usize) -> IntPoly {
    recurrence(IntPoly::one(), IntPoly::from_i64s(&[1, 0, 1]), n)
}

/// d_n: quantum determinant of the finite D_{n+2} diagram.
fn d_poly(n: usize) -> IntPoly {
    recurrence(IntPoly::from_i64s(&[1, 0, 2, 0, 1]), IntPoly::from_i64s(&[1, 0, 1, 0, 1, 0, 1]), n)
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut x = vec![vec![0; n]; n];
    for i in 1..n {
        x[i - 1][i] = 1;
        x[i][i - 1] = 1;
    }
    x
}

fn quantum_det(x: &[Vec<i64>]) -> IntPoly {
    let labels = (0..x.len()).map(|i| i.to_string()).collect();
    polymat_det(&PolyMatrix::quantum_cartan(labels, x).expect("square"))
}

fn finite_c(n: usize) -> Vec<Vec<i64>> {
    let mut x = chain(n);
    if n >= 2 {
        x[n - 2][n - 1] = 2;
    }
    x
}

fn finite_d(m: usize) -> Vec<Vec<i64>> {
    let mut x = vec![vec![0; m]; m];
    if m >= 3 {
        let c = chain(m - 1);
        for i in 0..m - 1 {
            x[i][..m - 1].copy_from_slice(&c[i]);
        }
        x[m - 1][m - 3] = 1;
        x[m - 3][m - 1] = 1;
    }
    x
}

/// 2^k Π_{i} (t − cos θ_i) with 2cos θ_i = ζ_m^{e_i} + ζ_m^{−e_i}.
fn cos_product(lead_pow2: usize, m: u32, exps: &[i64]) -> Result<IntPoly> {
    let half = Rat::new(1.into(), 2.into());
    let mut acc = CycloPoly::new(vec![CycloNum::from_rat(Rat::from_integer(BigInt::one() << lead_pow2))]);
    for &e in exps {
        let c = CycloNum::two_cos(m, e).scale(&half);
        acc = &acc * &CycloPoly::new(vec![-c, CycloNum::one()]);
    }
    acc.to_int_poly()
}

fn line(name: String, ok: bool) -> CheckLine {
    CheckLine::new(name, ok, "")
}

/// Exact polynomial identities for the Tchebychev polynomials (0 ≤ n ≤ 24) and the
/// quantum determinants a_n, c_n, d_n built from them.
pub fn tcheb_identity_suite() -> Vec<CheckLine> {
    let mut out = Vec::new();
    let t = |n| tcheb(TchebKind::T, n).poly;
    let u = |n| tcheb(TchebKind::U, n).poly;
    for n in 0..=24usize {
        let cf3 = (0..=n / 2).fold(IntPoly::zero(), |acc, i| {
            let term = IntPoly::from_i64s(&[-1, 0, 1]).pow(i as u32).shift(n - 2 * i);
            &acc + &term.scale(&binomial(n as u64, 2 * i as u64))
        });
        out.push(line(format!("T_{n} additive form"), cf3 == t(n)));
        let cf4 = (0..=n / 2).fold(IntPoly::zero(), |acc, i| {
            let mut c = binomial((n - i) as u64, i as u64) * (BigInt::one() << (n - 2 * i));
            if i % 2 == 1 {
                c = -c;
            }
            &acc + &IntPoly::monomial(n - 2 * i, 1).scale(&c)
        });
        out.push(line(format!("U_{n} additive form"), cf4 == u(n)));
        if n >= 1 {
            let roots: Vec<i64> = (1..=n as i64).map(|i| 2 * i - 1).collect();
            let cf5 = cos_product(n - 1, 4 * n as u32, &roots);
            out.push(line(format!("T_{n} product form"), cf5.ok() == Some(t(n))));
            let roots: Vec<i64> = (1..=n as i64).collect();
            let cf6 = cos_product(n, 2 * (n as u32 + 1), &roots);
            out.push(line(format!("U_{n} product form"), cf6.ok() == Some(u(n))));
            out.push(line(format!("T_{n} = U_{n} - tU_{}", n - 1), t(n) == &u(n) - &u(n - 1).shift(1)));
        }
        if n >= 2 {
            out.push(line(format!("2T_{n} = U_{n} - U_{}", n - 2), t(n).scale(&2.into()) == &u(n) - &u(n - 2)));
        }
    }
    for n in 1..=12usize {
        let c = c_poly(n - 1);
        let via_t = chebyshev_at_joukowski(&t(n), n, 2);
        out.push(line(format!("c_{} = 2t^{n} T_{n}((t+1/t)/2)", n - 1), via_t.ok() == Some(c.clone())));
        out.push(line(format!("c_{} = det of quantum C_{n}", n - 1), quantum_det(&finite_c(n)) == c));
        out.push(line(format!("c_{} binomial sum", n - 1), c.scale(&(BigInt::one() << (n - 1))) == c_sum(n as u64)));
        let odd: Vec<u32> = (1..=n as u32).map(|i| 2 * i - 1).collect();
        out.push(line(format!("c_{} cosine product", n - 1), exponent_product_raw(&odd, 2 * n as u32).ok() == Some(c)));
    }
    for n in 0..=12usize {
        let a = a_poly(n);
        out.push(line(format!("a_{n} = t^{n} U_{n}((t+1/t)/2)"), chebyshev_at_joukowski(&u(n), n, 1).ok() == Some(a.clone())));
        out.push(line(format!("a_{n} = det of quantum A_{n}"), quantum_det(&chain(n)) == a));
        out.push(line(format!("a_{n} binomial sum"), a_sum(n as u64) == a));
        let exps: Vec<u32> = (1..=n as u32).collect();
        out.push(line(format!("a_{n} cosine product"), exponent_product_raw(&exps, n as u32 + 1).ok() == Some(a)));
    }
    for n in 0..=10usize {
        let d = d_poly(n);
        let via_t = chebyshev_at_joukowski(&t(n + 1), n + 1, 2).map(|p| &p * &IntPoly::one_plus_t_pow(2));
        out.push(line(format!("d_{n} = 2t^{} (1+t^2) T_{}((t+1/t)/2)", n + 1, n + 1), via_t.ok() == Some(d.clone())));
        out.push(line(format!("d_{n} = det of quantum D_{}", n + 2), quantum_det(&finite_d(n + 2)) == d));
        let sum = &c_sum(n as u64 + 1) * &IntPoly::one_plus_t_pow(2);
        out.push(line(format!("d_{n} binomial sum"), d.scale(&(BigInt::one() << n)) == sum));
    }
    out
}
