use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::CycloNum;

/// Square matrix over a cyclotomic field, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mat {
    n: usize,
    entries: Vec<CycloNum>,
}

/// Exact hash key of a matrix at a fixed conductor.
pub type MatKey = Vec<(Vec<BigInt>, BigInt)>;

impl Mat {
    pub fn new(n: usize, entries: Vec<CycloNum>) -> Self {
        assert_eq!(entries.len(), n * n, "matrix shape");
        Mat { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(vec![CycloNum::one(); n])
    }

    pub fn diag(d: Vec<CycloNum>) -> Self {
        let n = d.len();
        let mut e = vec![CycloNum::zero(); n * n];
        for (i, x) in d.into_iter().enumerate() {
            e[i * n + i] = x;
        }
        Mat { n, entries: e }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNum {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[CycloNum] {
        &self.entries
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.n;
        let mut e = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CycloNum::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                e.push(acc);
            }
        }
        Mat { n, entries: e }
    }

    pub fn trace(&self) -> CycloNum {
        (0..self.n).fold(CycloNum::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn det(&self) -> CycloNum {
        match self.n {
            0 => CycloNum::one(),
            1 => self.get(0, 0).clone(),
            _ => (0..self.n).fold(CycloNum::zero(), |acc, j| {
                let term = self.get(0, j) * &self.minor(0, j).det();
                if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                }
            }),
        }
    }

    fn minor(&self, r: usize, c: usize) -> Mat {
        let n = self.n;
        let e = (0..n)
            .filter(|&i| i != r)
            .flat_map(|i| (0..n).filter(move |&j| j != c).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Mat { n: n - 1, entries: e }
    }

    /// Inverse by the adjugate; the caller guarantees an invertible matrix.
    pub fn inverse(&self) -> Mat {
        let n = self.n;
        let d = self.det().inverse().expect("singular group matrix");
        if n == 1 {
            return Mat { n, entries: vec![d] };
        }
        let mut e = vec![CycloNum::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let c = &self.minor(j, i).det() * &d;
                e[i * n + j] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        Mat { n, entries: e }
    }

    /// Coefficients of det(I − t·g) in ascending powers of t.
    pub fn char_poly_reversed(&self) -> Vec<CycloNum> {
        // det(I - tg) = Σ (-1)^r e_r t^r, with e_r the sum of principal r-minors.
        let n = self.n;
        let mut out = vec![CycloNum::one()];
        for r in 1..=n {
            let mut e = CycloNum::zero();
            for subset in subsets(n, r) {
                let sub = Mat {
                    n: r,
                    entries: subset.iter().flat_map(|&i| subset.iter().map(move |&j| (i, j))).map(|(i, j)| self.get(i, j).clone()).collect(),
                };
                e = &e + &sub.det();
            }
            out.push(if r % 2 == 0 { e } else { -e });
        }
        out
    }

    pub fn key(&self, conductor: u32) -> MatKey {
        self.entries.iter().map(|x| x.key_at(conductor)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.n)
    }
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// SU(2) image of the quaternion a + bi + cj + dk, with ι = ζ₄.
pub fn quaternion(a: &CycloNum, b: &CycloNum, c: &CycloNum, d: &CycloNum) -> Mat {
    let iota = CycloNum::zeta(4, 1);
    let bi = b * &iota;
    let di = d * &iota;
    Mat::new(2, vec![a + &bi, c + &di, &(-c) + &di, a - &bi])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_units_multiply() {
        let (o, z) = (CycloNum::one(), CycloNum::zero());
        let i = quaternion(&z, &o, &z, &z);
        let j = quaternion(&z, &z, &o, &z);
        let k = quaternion(&z, &z, &z, &o);
        assert_eq!(i.mul(&j), k);
        assert_eq!(i.mul(&i), quaternion(&-o.clone(), &z, &z, &z));
        assert!(k.det().is_one());
        assert!(k.mul(&k.inverse()).is_identity());
    }

    #[test]
    fn reversed_char_poly() {
        let g = Mat::diag(vec![CycloNum::zeta(3, 1), CycloNum::zeta(3, 2)]);
        // det(I - tg) = 1 + t + t²
        let c = g.char_poly_reversed();
        assert_eq!(c, vec![CycloNum::one(), CycloNum::one(), CycloNum::one()]);
    }
}
