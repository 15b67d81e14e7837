use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{CycloNum, Rat};
use crate::error::{Error, Result};
use crate::groups::{inner_product, ClassFunction, MatrixGroup};

/// Which module set a tensor matrix decomposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// N-restrictions of G-irreducibles (B_r).
    Restriction,
    /// G-inductions of N-irreducibles (D_r).
    Induction,
    /// Irreducibles of a single group (A_r).
    Plain,
}

impl Side {
    pub fn short(&self) -> &'static str {
        match self {
            Side::Restriction => "rest",
            Side::Induction => "ind",
            Side::Plain => "plain",
        }
    }
}

/// Row j, column i: multiplicity of module i in (multiplier ⊗ module j).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorMatrix {
    pub labels: Vec<String>,
    pub degrees: Vec<u64>,
    pub side: Side,
    pub r: usize,
    pub entries: Vec<Vec<u64>>,
}

impl TensorMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn transpose(&self) -> Vec<Vec<u64>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect()
    }

    pub fn as_i64(&self) -> Vec<Vec<i64>> {
        self.entries.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
    }
}

fn normalized_pairing(h: &MatrixGroup, x: &ClassFunction, m: &ClassFunction, norm: &CycloNum) -> Result<u64> {
    let v = inner_product(h, x, m).checked_div(norm)?;
    v.to_integer()
        .and_then(|z| z.to_u64())
        .ok_or_else(|| Error::NonIntegralMultiplicity(format!("pairing {v}")))
}

/// Decomposes multiplier ⊗ module_j over the module set, normalizing by ⟨m_i, m_i⟩.
pub fn tensor_matrix(
    modules: &[ClassFunction],
    multiplier: &ClassFunction,
    h: &MatrixGroup,
    side: Side,
    r: usize,
    labels: Vec<String>,
) -> Result<TensorMatrix> {
    if labels.len() != modules.len() {
        return Err(Error::SizeMismatch("labels vs modules".into()));
    }
    let norms: Vec<CycloNum> = modules.iter().map(|m| inner_product(h, m, m)).collect();
    let mut entries = Vec::with_capacity(modules.len());
    for mj in modules {
        let x = multiplier.mul(mj);
        let row = modules
            .iter()
            .zip(&norms)
            .map(|(mi, n)| normalized_pairing(h, &x, mi, n))
            .collect::<Result<Vec<_>>>()?;
        entries.push(row);
    }
    let degrees = modules
        .iter()
        .map(|m| m.degree_u64().ok_or_else(|| Error::NonIntegral("module degree".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(TensorMatrix { labels, degrees, side, r, entries })
}

/// Same matrix from a sum over raw group elements, with the multiplier taken as the
/// trace of each element matrix; an independent check of the class-based pairing.
pub fn tensor_matrix_elementwise(modules: &[ClassFunction], h: &MatrixGroup) -> Result<Vec<Vec<u64>>> {
    let order = Rat::new(1.into(), h.order().into());
    let at = |m: &ClassFunction, x: usize| m.values[h.class_of(x)].clone();
    let mut out = Vec::new();
    for mj in modules {
        let mut row = Vec::new();
        for mi in modules {
            let mut num = CycloNum::zero();
            let mut den = CycloNum::zero();
            for x in 0..h.order() {
                let tr = h.element(x).trace();
                num = &num + &(&(&tr * &at(mj, x)) * &at(mi, x).conj());
                den = &den + &(&at(mi, x) * &at(mi, x).conj());
            }
            let v = num.scale(&order).checked_div(&den.scale(&order))?;
            row.push(
                v.to_integer()
                    .and_then(|z| z.to_u64())
                    .ok_or_else(|| Error::NonIntegralMultiplicity(format!("pairing {v}")))?,
            );
        }
        out.push(row);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, character_table, natural_character, GroupSpec};

    #[test]
    fn cyclic_circulant() {
        let g = build_group(&GroupSpec::Cyclic(5)).unwrap();
        let t = character_table(&g).unwrap();
        let m = tensor_matrix(&t.irreducibles, &natural_character(&g), &g, Side::Plain, 1, t.labels.clone()).unwrap();
        for row in &m.entries {
            assert_eq!(row.iter().sum::<u64>(), 2);
            assert!(row.iter().all(|&x| x <= 1));
        }
        assert_eq!(m.entries, m.transpose());
        let id = tensor_matrix(&t.irreducibles, &t.irreducibles[0], &g, Side::Plain, 1, t.labels.clone()).unwrap();
        for (i, row) in id.entries.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, (i == j) as u64);
            }
        }
        assert_eq!(tensor_matrix_elementwise(&t.irreducibles, &g).unwrap(), m.entries);
    }
}
