use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::error::{Error, Result};

/// Square matrix over Z[t] whose rows and columns share one label list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMatrix {
    labels: Vec<String>,
    rows: Vec<Vec<IntPoly>>,
}

impl PolyMatrix {
    pub fn new(labels: Vec<String>, rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let n = labels.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch(format!("expected {n}x{n} matrix")));
        }
        let uniq: HashSet<_> = labels.iter().collect();
        if uniq.len() != n {
            return Err(Error::LabelError("duplicate labels".into()));
        }
        Ok(PolyMatrix { labels, rows })
    }

    /// Labels "0", "1", … for anonymous matrices.
    pub fn unlabeled(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let labels = (0..rows.len()).map(|i| i.to_string()).collect();
        Self::new(labels, rows)
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let n = labels.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { IntPoly::one() } else { IntPoly::zero() }).collect())
            .collect();
        PolyMatrix { labels, rows }
    }

    /// (1+t²)I − tX for an integer adjacency-type matrix X.
    pub fn quantum_cartan(labels: Vec<String>, x: &[Vec<i64>]) -> Result<Self> {
        let n = x.len();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let diag = if i == j { 1 } else { 0 };
                        IntPoly::from_i64s(&[diag, -x[i][j], diag])
                    })
                    .collect()
            })
            .collect();
        Self::new(labels, rows)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> &IntPoly {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<IntPoly>] {
        &self.rows
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        let rows = (0..n).map(|i| (0..n).map(|j| self.rows[j][i].clone()).collect()).collect();
        PolyMatrix { labels: self.labels.clone(), rows }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.size();
        if other.size() != n {
            return Err(Error::SizeMismatch("matrix product".into()));
        }
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(IntPoly::zero(), |acc, k| &acc + &(&self.rows[i][k] * &other.rows[k][j])))
                    .collect()
            })
            .collect();
        Ok(PolyMatrix { labels: self.labels.clone(), rows })
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::LabelError(format!("unknown label {label:?}")))
    }

    /// Copy with column `col` replaced by the unit vector at row 0.
    pub fn with_unit_column(&self, col: usize) -> Self {
        let mut m = self.clone();
        for (r, row) in m.rows.iter_mut().enumerate() {
            row[col] = if r == 0 { IntPoly::one() } else { IntPoly::zero() };
        }
        m
    }
}

/// Fraction-free Gaussian elimination; exact over Z[t].
pub fn det_bareiss(m: &PolyMatrix) -> IntPoly {
    let n = m.size();
    if n == 0 {
        return IntPoly::one();
    }
    let mut a = m.rows.clone();
    let mut prev = IntPoly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = IntPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &PolyMatrix) -> IntPoly {
    fn rec(rows: &[Vec<IntPoly>], cols: &[usize]) -> IntPoly {
        let r = rows.len() - cols.len();
        if cols.is_empty() {
            return IntPoly::one();
        }
        let mut acc = IntPoly::zero();
        for (k, &c) in cols.iter().enumerate() {
            if rows[r][c].is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = &rows[r][c] * &rec(rows, &rest);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let cols: Vec<usize> = (0..m.size()).collect();
    rec(&m.rows, &cols)
}

/// Exact determinant: cofactor expansion up to 4×4, Bareiss beyond.
pub fn polymat_det(m: &PolyMatrix) -> IntPoly {
    if m.size() <= 4 {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

/// det of M with the column labelled `label` replaced by δ = (1, 0, …, 0)ᵀ.
pub fn cramer_replace_det(m: &PolyMatrix, label: &str) -> Result<IntPoly> {
    let i = m.label_index(label)?;
    Ok(polymat_det(&m.with_unit_column(i)))
}

/// All Cramer numerators det(M^i), in label order.
pub fn cramer_all(m: &PolyMatrix) -> Vec<IntPoly> {
    (0..m.size()).map(|i| polymat_det(&m.with_unit_column(i))).collect()
}

/// Evaluates each entry at t = 1.
pub fn eval_at_one(m: &PolyMatrix) -> Vec<Vec<BigInt>> {
    m.rows
        .iter()
        .map(|r| r.iter().map(|p| p.coeffs().iter().fold(BigInt::zero(), |a, c| a + c)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn affine_a1_quantum_cartan() {
        let m = PolyMatrix::unlabeled(vec![vec![p(&[1, 0, 1]), p(&[0, -2])], vec![p(&[0, -2]), p(&[1, 0, 1])]]).unwrap();
        assert_eq!(polymat_det(&m), IntPoly::one_minus_t_pow(2).pow(2));
        assert_eq!(det_bareiss(&m), polymat_det(&m));
        assert_eq!(cramer_replace_det(&m, "1").unwrap(), p(&[0, 2]));
        assert!(matches!(cramer_replace_det(&m, "x"), Err(Error::LabelError(_))));
    }

    #[test]
    fn identities() {
        for n in 1..7 {
            let labels = (0..n).map(|i| format!("v{i}")).collect::<Vec<_>>();
            let id = PolyMatrix::identity(labels.clone());
            assert!(polymat_det(&id).is_one());
            for l in &labels {
                assert_eq!(cramer_replace_det(&id, l).unwrap(), if l == "v0" { IntPoly::one() } else { IntPoly::zero() });
            }
        }
        assert!(PolyMatrix::new(vec!["a".into(), "a".into()], vec![vec![p(&[1]); 2]; 2]).is_err());
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
        prop::collection::vec(prop::collection::vec(-3i64..4, 0..3), n * n).prop_map(move |v| {
            let rows = v.chunks(n).map(|r| r.iter().map(|c| p(c)).collect()).collect();
            PolyMatrix::unlabeled(rows).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn bareiss_matches_cofactor(m in arb_matrix(4)) {
            prop_assert_eq!(det_bareiss(&m), det_cofactor(&m));
        }

        #[test]
        fn det_multiplicative(a in arb_matrix(3), b in arb_matrix(3)) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(polymat_det(&ab), &polymat_det(&a) * &polymat_det(&b));
            prop_assert_eq!(det_bareiss(&ab), det_cofactor(&ab));
        }
    }
}
