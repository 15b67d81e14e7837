use crate::arith::CycloNum;
use crate::error::{Error, Result};
use crate::groups::{exterior_power_character, natural_character, MatrixGroup};
use crate::mckay::TensorMatrix;
use crate::poly::{cramer_all, polymat_det, CycloPoly, IntPoly, PolyMatrix, RatFun};

use super::{Method, SeriesBundle};

/// Whether the tensor matrices enter the Cramer system as stored or transposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Direct,
    Transposed,
}

/// Fixed by agreement with the Molien oracle on C2<D2 (see tests).
pub const ORIENTATION: Orientation = Orientation::Direct;

/// P = (1 + (−1)ⁿtⁿ)I + Σ_{r=1}^{n−1} (−1)^r t^r X_{n−r}.
pub fn cramer_system(n: usize, mats: &[TensorMatrix], orientation: Orientation) -> Result<PolyMatrix> {
    if n < 2 || mats.len() != n - 1 {
        return Err(Error::SizeMismatch(format!("need {} tensor matrices for dimension {n}", n.saturating_sub(1))));
    }
    let size = mats[0].size();
    if mats.iter().any(|m| m.size() != size || m.entries.iter().any(|r| r.len() != size)) {
        return Err(Error::SizeMismatch("tensor matrices differ in size".into()));
    }
    let corner = if n.is_multiple_of(2) { 1 } else { -1 };
    let mut rows = vec![vec![IntPoly::zero(); size]; size];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut c = vec![0i64; n + 1];
            if i == j {
                c[0] = 1;
                c[n] = corner;
            }
            for (r, slot) in c.iter_mut().enumerate().take(n).skip(1) {
                let x = &mats[n - r - 1];
                let v = match orientation {
                    Orientation::Direct => x.entries[i][j],
                    Orientation::Transposed => x.entries[j][i],
                } as i64;
                *slot += if r % 2 == 0 { v } else { -v };
            }
            *cell = IntPoly::from_i64s(&c);
        }
    }
    PolyMatrix::new(mats[0].labels.clone(), rows)
}

/// Solves P·s = δ by Cramer's rule with the frozen orientation.
pub fn series_by_determinant(n: usize, mats: &[TensorMatrix]) -> Result<SeriesBundle> {
    series_with_orientation(n, mats, ORIENTATION)
}

pub fn series_with_orientation(n: usize, mats: &[TensorMatrix], orientation: Orientation) -> Result<SeriesBundle> {
    let p = cramer_system(n, mats, orientation)?;
    let det = polymat_det(&p);
    let series = cramer_all(&p)
        .into_iter()
        .map(|num| RatFun::new(num, det.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(SeriesBundle { labels: p.labels().to_vec(), series, method: Method::Determinant })
}

/// Π_{g} (1 + Σ_{r=1}^{n−1} (−1)^r χ_{∧^{n−r}V}(g) t^r + (−1)ⁿtⁿ) over the given classes.
pub fn denominator_by_characters(h: &MatrixGroup, classes: &[usize]) -> Result<IntPoly> {
    let n = h.dim();
    let chi = natural_character(h);
    let wedges = (0..=n).map(|r| exterior_power_character(&chi, r, h)).collect::<Result<Vec<_>>>()?;
    let mut acc = CycloPoly::one();
    for &c in classes {
        let mut f = vec![CycloNum::zero(); n + 1];
        f[0] = CycloNum::one();
        f[n] = CycloNum::from_int(if n.is_multiple_of(2) { 1 } else { -1 });
        for (r, slot) in f.iter_mut().enumerate().take(n).skip(1) {
            let v = &wedges[n - r].values[c];
            *slot = if r % 2 == 0 { v.clone() } else { -v };
        }
        acc = &acc * &CycloPoly::new(f);
    }
    acc.to_int_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::PairData;
    use crate::series::molien_bundle;

    #[test]
    fn orientation_fixed_by_c2_in_d2() {
        let p = PairData::build(&"C2<D2".parse().unwrap()).unwrap();
        let oracle = molien_bundle(&p.rest, &p.table_n).unwrap();
        let direct = series_with_orientation(2, &p.rest.mats, Orientation::Direct).unwrap();
        let trans = series_with_orientation(2, &p.rest.mats, Orientation::Transposed).unwrap();
        assert_eq!(direct.series, oracle.series);
        assert_ne!(trans.series, oracle.series);
        // s¹ = 4t/(1−t²)²
        assert_eq!(
            direct.series[1],
            RatFun::new(IntPoly::from_i64s(&[0, 4]), IntPoly::from_i64s(&[1, 0, -2, 0, 1])).unwrap()
        );
        assert_eq!(
            trans.series[1],
            RatFun::new(IntPoly::from_i64s(&[0, 1]), IntPoly::from_i64s(&[1, 0, -2, 0, 1])).unwrap()
        );
    }

    #[test]
    fn identity_only_denominator() {
        let g = crate::groups::build_group(&crate::groups::GroupSpec::Cyclic(1)).unwrap();
        assert_eq!(denominator_by_characters(&g, &[0]).unwrap(), IntPoly::from_i64s(&[1, -2, 1]));
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(cramer_system(3, &[], Orientation::Direct), Err(Error::SizeMismatch(_))));
    }
}
