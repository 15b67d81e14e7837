//! Built catalog entries and the series engines run on them.

use crate::catalog::Target;
use crate::error::Result;
use crate::groups::{CharTable, GroupSpec, PairSpec};
use crate::mckay::{AffineType, GroupData, ModuleSystem, PairData, Side};
use crate::poly::{polymat_det, IntPoly, RatFun};
use crate::series::{
    cramer_system, cyclic_closed_form, denominator_by_characters, dicyclic_closed_form, dihedral_closed_forms,
    molien_bundle, series_by_determinant, SeriesBundle, ORIENTATION,
};

/// A catalog target with its groups, tables and module systems.
#[derive(Clone, Debug)]
pub enum Built {
    Group(Box<GroupData>),
    Pair(Box<PairData>),
}

impl Built {
    pub fn build(t: &Target) -> Result<Built> {
        Ok(match t {
            Target::Group(g) => Built::Group(Box::new(GroupData::build(g)?)),
            Target::Pair(p) => Built::Pair(Box::new(PairData::build(p)?)),
        })
    }

    /// Builds every target, one thread per target, keeping input order.
    pub fn build_all(ts: &[Target]) -> Result<Vec<Built>> {
        std::thread::scope(|s| {
            let handles: Vec<_> = ts.iter().map(|t| s.spawn(move || Built::build(t))).collect();
            handles.into_iter().map(|h| h.join().expect("build thread")).collect()
        })
    }

    pub fn target(&self) -> Target {
        match self {
            Built::Group(g) => Target::Group(g.spec.clone()),
            Built::Pair(p) => Target::Pair(p.spec),
        }
    }

    /// Each module system with the character table of the group it lives on.
    pub fn systems(&self) -> Vec<(&ModuleSystem, &CharTable)> {
        match self {
            Built::Group(g) => vec![(&g.system, &g.table)],
            Built::Pair(p) => vec![(&p.rest, &p.table_n), (&p.ind, &p.table_g)],
        }
    }

    pub fn system(&self, side: Side) -> (&ModuleSystem, &CharTable) {
        match (self, side) {
            (Built::Group(g), _) => (&g.system, &g.table),
            (Built::Pair(p), Side::Induction) => (&p.ind, &p.table_g),
            (Built::Pair(p), _) => (&p.rest, &p.table_n),
        }
    }

    /// The family-specific binomial closed form of the trivial series, if one exists.
    pub fn family_closed(&self) -> Option<(String, RatFun)> {
        match self {
            Built::Group(g) => match g.spec {
                GroupSpec::Cyclic(n) => Some(("cyclic uniform formula".into(), cyclic_closed_form(n as u64))),
                GroupSpec::BinaryDihedral(n) => Some(("binary dihedral formula".into(), dicyclic_closed_form(n as u64))),
                _ => None,
            },
            Built::Pair(p) => match p.spec {
                PairSpec::TetrahedralInOctahedral | PairSpec::QuaternionInTetrahedral => None,
                spec => dihedral_closed_forms(&spec).map(|f| ("dihedral binomial sums".into(), f)),
            },
        }
    }
}

/// Every engine's output on one module system.
#[derive(Clone, Debug)]
pub struct Engines {
    pub ty: Option<AffineType>,
    pub det: SeriesBundle,
    pub molien: SeriesBundle,
    /// det(P) of the Cramer system.
    pub det_p: IntPoly,
    pub denominator: IntPoly,
}

pub fn engines(sys: &ModuleSystem, table: &CharTable) -> Result<Engines> {
    let n = sys.dim();
    let det = series_by_determinant(n, &sys.mats)?;
    let molien = molien_bundle(sys, table)?;
    let det_p = polymat_det(&cramer_system(n, &sys.mats, ORIENTATION)?);
    let denominator = denominator_by_characters(&sys.group, &sys.upsilon)?;
    let ty = if n == 2 { sys.classify().ok() } else { None };
    Ok(Engines { ty, det, molien, det_p, denominator })
}
