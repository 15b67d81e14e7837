use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite subgroup of SL₂ or SL₃ from the built-in families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupSpec {
    /// Cyclic group of order n in SL₂, generated by diag(ζ_n⁻¹, ζ_n).
    Cyclic(u32),
    /// Binary dihedral group of order 4n.
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    /// ⟨diag(ζ_m^a, ζ_m^b, ζ_m^c)⟩ ⊂ SL₃ with a+b+c ≡ 0 mod m.
    SL3Cyclic { m: u32, weights: [u32; 3] },
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(0) | GroupSpec::BinaryDihedral(0) => {
                Err(Error::InvalidSpec(format!("{self}: parameter must be at least 1")))
            }
            GroupSpec::SL3Cyclic { m, weights } => {
                if *m == 0 {
                    return Err(Error::InvalidSpec("SL3 cyclic group needs m >= 1".into()));
                }
                if weights.iter().map(|&w| w as u64).sum::<u64>() % *m as u64 != 0 {
                    return Err(Error::InvalidSpec(format!("{self}: weights must sum to 0 mod {m}")));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            GroupSpec::SL3Cyclic { .. } => 3,
            _ => 2,
        }
    }

    pub fn expected_order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n as usize,
            GroupSpec::BinaryDihedral(n) => 4 * *n as usize,
            GroupSpec::BinaryTetrahedral => 24,
            GroupSpec::BinaryOctahedral => 48,
            GroupSpec::BinaryIcosahedral => 120,
            GroupSpec::SL3Cyclic { m, weights } => {
                let g = weights.iter().fold(*m, |g, &w| num_integer::gcd(g, w));
                (*m / g) as usize
            }
        }
    }

    /// Conductor of the cyclotomic field holding all matrix entries.
    pub fn conductor(&self) -> u32 {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::BinaryDihedral(n) => num_integer::lcm(2 * n, 4),
            GroupSpec::BinaryTetrahedral => 4,
            GroupSpec::BinaryOctahedral => 8,
            GroupSpec::BinaryIcosahedral => 20,
            GroupSpec::SL3Cyclic { m, .. } => *m,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::BinaryDihedral(n) => write!(f, "D{n}"),
            GroupSpec::BinaryTetrahedral => write!(f, "T"),
            GroupSpec::BinaryOctahedral => write!(f, "O"),
            GroupSpec::BinaryIcosahedral => write!(f, "I"),
            GroupSpec::SL3Cyclic { m, weights: [a, b, c] } => write!(f, "C{m}[{a},{b},{c}]"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `C5`, `D3`, `T`, `O`, `I`, `C3[1,1,1]`, optionally prefixed by `group:`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix("group:").unwrap_or(s);
        let bad = || Error::InvalidSpec(format!("cannot parse group name {s:?}"));
        let spec = match s {
            "T" => GroupSpec::BinaryTetrahedral,
            "O" => GroupSpec::BinaryOctahedral,
            "I" => GroupSpec::BinaryIcosahedral,
            _ => {
                let (head, rest) = s.split_at(1.min(s.len()));
                let (num, weights) = match rest.find('[') {
                    Some(p) => (&rest[..p], Some(&rest[p..])),
                    None => (rest, None),
                };
                let n: u32 = num.parse().map_err(|_| bad())?;
                match (head, weights) {
                    ("C", None) => GroupSpec::Cyclic(n),
                    ("D", None) => GroupSpec::BinaryDihedral(n),
                    ("C", Some(w)) => {
                        let inner = w.strip_prefix('[').and_then(|w| w.strip_suffix(']')).ok_or_else(bad)?;
                        let ws: Vec<u32> = inner
                            .split(',')
                            .map(|x| x.trim().parse::<u32>())
                            .collect::<std::result::Result<_, _>>()
                            .map_err(|_| bad())?;
                        let weights: [u32; 3] = ws.try_into().map_err(|_| bad())?;
                        GroupSpec::SL3Cyclic { m: n, weights }
                    }
                    _ => return Err(bad()),
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// How the normal subgroup sits inside the ambient group's generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairSpec {
    /// D_k ⊲ D_2k, N = ⟨x², y⟩ inside BinaryDihedral(2k); k ≥ 2.
    DihedralInDihedral(u32),
    /// C_2n ⊲ D_n, N = ⟨x⟩ inside BinaryDihedral(n); n ≥ 2.
    CyclicInDihedral(u32),
    /// C_2n ⊲ D_2n, N = ⟨x²⟩ inside BinaryDihedral(2n); n ≥ 1.
    CyclicInDoubleDihedral(u32),
    /// T ⊲ O.
    TetrahedralInOctahedral,
    /// D₂ ⊲ T, N = ⟨i, j⟩.
    QuaternionInTetrahedral,
}

impl PairSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            PairSpec::DihedralInDihedral(k) => *k >= 2,
            PairSpec::CyclicInDihedral(n) => *n >= 2,
            PairSpec::CyclicInDoubleDihedral(n) => *n >= 1,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!("pair {self} is outside its family range")))
        }
    }

    pub fn ambient(&self) -> GroupSpec {
        match self {
            PairSpec::DihedralInDihedral(k) => GroupSpec::BinaryDihedral(2 * k),
            PairSpec::CyclicInDihedral(n) => GroupSpec::BinaryDihedral(*n),
            PairSpec::CyclicInDoubleDihedral(n) => GroupSpec::BinaryDihedral(2 * n),
            PairSpec::TetrahedralInOctahedral => GroupSpec::BinaryOctahedral,
            PairSpec::QuaternionInTetrahedral => GroupSpec::BinaryTetrahedral,
        }
    }

    /// The abstract isomorphism type of the normal subgroup.
    pub fn sub(&self) -> GroupSpec {
        match self {
            PairSpec::DihedralInDihedral(k) => GroupSpec::BinaryDihedral(*k),
            PairSpec::CyclicInDihedral(n) => GroupSpec::Cyclic(2 * n),
            PairSpec::CyclicInDoubleDihedral(n) => GroupSpec::Cyclic(2 * n),
            PairSpec::TetrahedralInOctahedral => GroupSpec::BinaryTetrahedral,
            PairSpec::QuaternionInTetrahedral => GroupSpec::BinaryDihedral(2),
        }
    }

    /// Family name used in reports.
    pub fn family(&self) -> &'static str {
        match self {
            PairSpec::DihedralInDihedral(_) => "D_k<D_2k",
            PairSpec::CyclicInDihedral(_) => "C_2n<D_n",
            PairSpec::CyclicInDoubleDihedral(_) => "C_2n<D_2n",
            PairSpec::TetrahedralInOctahedral => "T<O",
            PairSpec::QuaternionInTetrahedral => "D2<T",
        }
    }
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}<{}", self.sub(), self.ambient())
    }
}

impl FromStr for PairSpec {
    type Err = Error;

    /// Accepts `N<G`, optionally prefixed by `pair:`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix("pair:").unwrap_or(s);
        let bad = || Error::InvalidSpec(format!("no catalog pair named {s:?}"));
        let (n, g) = s.split_once('<').ok_or_else(bad)?;
        let n: GroupSpec = n.parse()?;
        let g: GroupSpec = g.parse()?;
        use GroupSpec::*;
        let pair = match (n, g) {
            (BinaryTetrahedral, BinaryOctahedral) => PairSpec::TetrahedralInOctahedral,
            (BinaryDihedral(2), BinaryTetrahedral) => PairSpec::QuaternionInTetrahedral,
            (BinaryDihedral(k), BinaryDihedral(m)) if m == 2 * k => PairSpec::DihedralInDihedral(k),
            (Cyclic(c), BinaryDihedral(m)) if c == 2 * m => PairSpec::CyclicInDihedral(m),
            (Cyclic(c), BinaryDihedral(m)) if c == m && c % 2 == 0 => PairSpec::CyclicInDoubleDihedral(c / 2),
            _ => return Err(bad()),
        };
        pair.validate()?;
        Ok(pair)
    }
}
