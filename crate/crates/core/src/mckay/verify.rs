use serde::{Deserialize, Serialize};

use super::system::ModuleSystem;
use crate::arith::CycloNum;

/// One named check with its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckLine { name: name.into(), ok, detail: detail.into() }
    }
}

/// A_r = A_{n−r}ᵀ for 1 ≤ r ≤ n−1 (full character tables).
pub fn verify_transpose_symmetry(sys: &ModuleSystem) -> Vec<CheckLine> {
    let n = sys.dim();
    (1..n)
        .map(|r| {
            let a = &sys.mats[r - 1];
            let b = &sys.mats[n - r - 1];
            let ok = a.entries == b.transpose();
            CheckLine::new(format!("{} A_{r} = A_{}^T", sys.name, n - r), ok, "")
        })
        .collect()
}

/// For every g in Υ the vector v_g = (χ_i(g))_i satisfies X_r v_g = χ_{∧^r V}(g) v_g,
/// equivalently (χ_{∧^r V}(1) I − X_r) v_g = (χ_{∧^r V}(1) − χ_{∧^r V}(g)) v_g.
pub fn verify_eigen_structure(sys: &ModuleSystem, r: usize) -> Vec<CheckLine> {
    let x = &sys.mats[r - 1];
    let wedge = &sys.exterior[r];
    let d = wedge.values[0].clone();
    let n = x.size();
    let mut out = Vec::new();
    for &c in &sys.upsilon {
        let v: Vec<CycloNum> = sys.modules.iter().map(|m| m.values[c].clone()).collect();
        let lambda = &d - &wedge.values[c];
        let ok = (0..n).all(|j| {
            let lhs = (0..n).fold(&d * &v[j], |acc, i| &acc - &v[i].scale(&crate::arith::Rat::from_integer(x.entries[j][i].into())));
            lhs == &lambda * &v[j]
        });
        out.push(CheckLine::new(
            format!("{} r={r} class {c}", sys.name),
            ok,
            format!("eigenvalue {lambda}"),
        ));
    }
    out
}

/// The degree vector is annihilated by χ_V(1)·I − X_1.
pub fn degree_null_vector(sys: &ModuleSystem) -> CheckLine {
    let x = sys.first();
    let dim = sys.dim() as i64;
    let ok = (0..x.size()).all(|j| {
        let s: i64 = (0..x.size()).map(|i| x.entries[j][i] as i64 * x.degrees[i] as i64).sum();
        s == dim * x.degrees[j] as i64
    });
    CheckLine::new(format!("{} degree null vector", sys.name), ok, "")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;
    use crate::mckay::GroupData;

    #[test]
    fn cyclic_three_eigenvalues() {
        let g = GroupData::build(&GroupSpec::Cyclic(3)).unwrap();
        let lines = verify_eigen_structure(&g.system, 1);
        assert!(lines.iter().all(|l| l.ok));
        assert_eq!(lines[0].detail, "eigenvalue 0");
        assert_eq!(lines[1].detail, "eigenvalue 3");
        assert!(degree_null_vector(&g.system).ok);
    }

    #[test]
    fn sl3_transpose() {
        let g = GroupData::build(&"C7[1,2,4]".parse().unwrap()).unwrap();
        assert!(verify_transpose_symmetry(&g.system).iter().all(|l| l.ok));
        let t = GroupData::build(&GroupSpec::Cyclic(1)).unwrap();
        assert!(verify_transpose_symmetry(&t.system).iter().all(|l| l.ok));
    }
}
