//! The fixed catalog of groups and normal pairs, and name resolution.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{GroupSpec, PairSpec};

/// A group or a pair, as named on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "name", rename_all = "lowercase")]
pub enum Target {
    Group(GroupSpec),
    Pair(PairSpec),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Group(g) => write!(f, "group:{g}"),
            Target::Pair(p) => write!(f, "pair:{p}"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    /// `group:X`, `pair:N<G`, or a bare name (pairs contain `<`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = |e: Error| {
            let msg = match e {
                Error::InvalidSpec(m) => m,
                e => e.to_string(),
            };
            Error::InvalidSpec(format!("{msg}; catalog: {}", catalog_names().join(" ")))
        };
        if let Some(g) = s.strip_prefix("group:") {
            return g.parse().map(Target::Group).map_err(unknown);
        }
        if s.starts_with("pair:") || s.contains('<') {
            return s.parse().map(Target::Pair).map_err(unknown);
        }
        s.parse().map(Target::Group).map_err(unknown)
    }
}

/// SL₂ groups, then the SL₃ abelian examples.
pub fn groups() -> Vec<GroupSpec> {
    let mut v: Vec<GroupSpec> = (1..=8).map(GroupSpec::Cyclic).collect();
    v.extend((1..=8).map(GroupSpec::BinaryDihedral));
    v.extend([GroupSpec::BinaryTetrahedral, GroupSpec::BinaryOctahedral, GroupSpec::BinaryIcosahedral]);
    v.extend(sl3_groups());
    v
}

pub fn sl3_groups() -> Vec<GroupSpec> {
    [(3, [1, 1, 1]), (4, [1, 1, 2]), (5, [1, 2, 2]), (7, [1, 2, 4])]
        .into_iter()
        .map(|(m, weights)| GroupSpec::SL3Cyclic { m, weights })
        .collect()
}

pub fn pairs() -> Vec<PairSpec> {
    let mut v: Vec<PairSpec> = (2..=7).map(PairSpec::DihedralInDihedral).collect();
    v.extend((2..=8).map(PairSpec::CyclicInDihedral));
    v.extend((1..=8).map(PairSpec::CyclicInDoubleDihedral));
    v.extend([PairSpec::TetrahedralInOctahedral, PairSpec::QuaternionInTetrahedral]);
    v
}

pub fn targets() -> Vec<Target> {
    groups().into_iter().map(Target::Group).chain(pairs().into_iter().map(Target::Pair)).collect()
}

pub fn catalog_names() -> Vec<String> {
    targets().iter().map(Target::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse_back() {
        for t in targets() {
            assert_eq!(t.to_string().parse::<Target>().unwrap(), t);
        }
        assert_eq!("T<O".parse::<Target>().unwrap(), Target::Pair(PairSpec::TetrahedralInOctahedral));
        assert_eq!("I".parse::<Target>().unwrap(), Target::Group(GroupSpec::BinaryIcosahedral));
        let e = "pair:C3<D5".parse::<Target>().unwrap_err().to_string();
        assert!(e.contains("group:C1"));
    }
}
