use crate::error::Result;
use crate::groups::{
    build_group, build_pair, character_table, exterior_power_character, induce_characters, natural_character,
    restrict_characters, upsilon, CharTable, ClassFunction, GroupSpec, MatrixGroup, PairSpec, Subgroup,
};

use super::affine::{identify_cartan, AffineType};
use super::tensor::{tensor_matrix, Side, TensorMatrix};

/// A set of modules over one group, closed under tensoring with ∧^r V,
/// together with the tensor matrices and the class set used in denominators.
#[derive(Clone, Debug)]
pub struct ModuleSystem {
    pub name: String,
    pub side: Side,
    pub group: MatrixGroup,
    pub modules: Vec<ClassFunction>,
    pub labels: Vec<String>,
    /// Characters of ∧^r V on `group`, r = 0..=dim.
    pub exterior: Vec<ClassFunction>,
    /// Tensor matrices X_r for r = 1..dim−1 (index r−1).
    pub mats: Vec<TensorMatrix>,
    /// Classes of `group`, one per ambient class in Υ (or Υ(N)).
    pub upsilon: Vec<usize>,
    /// [G:N] for pair systems, 1 otherwise.
    pub index: usize,
}

impl ModuleSystem {
    fn assemble(
        name: String,
        side: Side,
        group: MatrixGroup,
        modules: Vec<ClassFunction>,
        labels: Vec<String>,
        upsilon: Vec<usize>,
        index: usize,
    ) -> Result<Self> {
        let chi = natural_character(&group);
        let exterior = (0..=group.dim())
            .map(|r| exterior_power_character(&chi, r, &group))
            .collect::<Result<Vec<_>>>()?;
        let mats = (1..group.dim())
            .map(|r| tensor_matrix(&modules, &exterior[r], &group, side, r, labels.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleSystem { name, side, group, modules, labels, exterior, mats, upsilon, index })
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    /// The r = 1 tensor matrix.
    pub fn first(&self) -> &TensorMatrix {
        &self.mats[0]
    }

    /// Natural character values on the Υ classes.
    pub fn upsilon_values(&self) -> Vec<crate::arith::CycloNum> {
        self.upsilon.iter().map(|&c| self.exterior[1].values[c].clone()).collect()
    }

    /// Affine type of the r = 1 matrix (SL₂ systems).
    pub fn classify(&self) -> Result<AffineType> {
        classify_affine_type(self.first())
    }
}

/// Matches 2I − Mᵀ against the stored affine Cartan matrices.
pub fn classify_affine_type(m: &TensorMatrix) -> Result<AffineType> {
    Ok(identify_cartan(&cartan_of(m))?.0)
}

/// 2I − Mᵀ as an integer matrix.
pub fn cartan_of(m: &TensorMatrix) -> Vec<Vec<i64>> {
    let n = m.size();
    (0..n)
        .map(|i| (0..n).map(|j| 2 * (i == j) as i64 - m.entries[j][i] as i64).collect())
        .collect()
}

/// A single group with its full character table.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub spec: GroupSpec,
    pub table: CharTable,
    pub system: ModuleSystem,
}

impl GroupData {
    pub fn build(spec: &GroupSpec) -> Result<Self> {
        let g = build_group(spec)?;
        let table = character_table(&g)?;
        let ups = (0..g.num_classes()).collect();
        let system = ModuleSystem::assemble(
            spec.to_string(),
            Side::Plain,
            g,
            table.irreducibles.clone(),
            table.labels.clone(),
            ups,
            1,
        )?;
        Ok(GroupData { spec: spec.clone(), table, system })
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.system.group
    }
}

/// A normal pair with both module systems.
#[derive(Clone, Debug)]
pub struct PairData {
    pub spec: PairSpec,
    pub g: MatrixGroup,
    pub n: Subgroup,
    pub table_g: CharTable,
    pub table_n: CharTable,
    /// N-restrictions of G-irreducibles (over N).
    pub rest: ModuleSystem,
    /// G-inductions of N-irreducibles (over G).
    pub ind: ModuleSystem,
}

impl PairData {
    pub fn build(spec: &PairSpec) -> Result<Self> {
        let (g, n) = build_pair(spec)?;
        let table_g = character_table(&g)?;
        let table_n = character_table(&n.group)?;
        let res = restrict_characters(&g, &table_g, &n)?;
        let ind = induce_characters(&g, &n, &table_n)?;
        let ups_g = upsilon(&g, &n);
        // one N-class inside each ambient class of Υ(N)
        let ups_n: Vec<usize> = ups_g
            .iter()
            .map(|&c| {
                let h = n.embedding.iter().position(|&x| g.class_of(x) == c).expect("class meets N");
                n.group.class_of(h)
            })
            .collect();
        let index = n.index_in(&g);
        let res_labels = (0..res.len()).map(|i| format!("res{i}")).collect();
        let ind_labels = (0..ind.len()).map(|i| format!("ind{i}")).collect();
        let rest = ModuleSystem::assemble(
            format!("{spec} rest"),
            Side::Restriction,
            n.group.clone(),
            res,
            res_labels,
            ups_n,
            index,
        )?;
        let ind = ModuleSystem::assemble(format!("{spec} ind"), Side::Induction, g.clone(), ind, ind_labels, ups_g, index)?;
        Ok(PairData { spec: *spec, g, n, table_g, table_n, rest, ind })
    }

    pub fn side(&self, side: Side) -> &ModuleSystem {
        match side {
            Side::Induction => &self.ind,
            _ => &self.rest,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_in_d2_matrices() {
        let p = PairData::build(&"C2<D2".parse().unwrap()).unwrap();
        assert_eq!(p.rest.first().entries, vec![vec![0, 1], vec![4, 0]]);
        assert_eq!(p.ind.first().entries, vec![vec![0, 2], vec![2, 0]]);
        assert_eq!(p.rest.classify().unwrap().tag, "A2^(2)");
        assert_eq!(p.ind.classify().unwrap().tag, "A1^(1)");
    }

    #[test]
    fn exceptional_pairs_classify() {
        let p = PairData::build(&"T<O".parse().unwrap()).unwrap();
        assert_eq!(p.rest.classify().unwrap().tag, "E6^(2)");
        assert_eq!(p.ind.classify().unwrap().tag, "F4^(1)");
        let p = PairData::build(&"D2<T".parse().unwrap()).unwrap();
        assert_eq!(p.rest.classify().unwrap().tag, "D4^(3)");
        assert_eq!(p.ind.classify().unwrap().tag, "G2^(1)");
        let g = GroupData::build(&GroupSpec::BinaryIcosahedral).unwrap();
        assert_eq!(g.system.classify().unwrap().tag, "E8^(1)");
    }
}
