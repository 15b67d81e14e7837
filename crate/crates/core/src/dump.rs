//! Machine-readable JSON view of a catalog entry.

use serde::{Deserialize, Serialize};

use crate::analysis::{engines, Built};
use crate::arith::CycloNum;
use crate::catalog::Target;
use crate::error::{Error, Result};
use crate::groups::{natural_character, CharTable, Mat, MatrixGroup};
use crate::mckay::{quiver, ModuleSystem, Quiver, Side, TensorMatrix};
use crate::poly::{IntPoly, RatFun};
use crate::series::{closed_form_text, proportionality_check, Proportionality};

pub const SCHEMA: &str = "slodowy.dump/1";
/// Number of series coefficients written per module.
pub const DUMP_ORDER: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dump {
    pub schema: String,
    pub target: String,
    pub groups: Vec<GroupDump>,
    pub systems: Vec<SystemDump>,
    pub proportionality: Option<Proportionality>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDump {
    pub size: usize,
    pub element_order: u32,
    pub representative: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterDump {
    pub label: String,
    pub degree: u64,
    pub values: Vec<CycloNum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDump {
    pub name: String,
    pub order: usize,
    pub dim: usize,
    pub conductor: u32,
    pub generators: Vec<Mat>,
    pub classes: Vec<ClassDump>,
    pub natural_character: Vec<CycloNum>,
    pub characters: Vec<CharacterDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDump {
    pub label: String,
    pub ratfun: RatFun,
    pub text: String,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDump {
    pub name: String,
    pub side: Side,
    pub group: String,
    pub labels: Vec<String>,
    pub degrees: Vec<u64>,
    /// Class indices (of `group`) of the class set used in the denominator.
    pub upsilon: Vec<usize>,
    pub modules: Vec<Vec<CycloNum>>,
    /// X_r for r = 1..dim−1.
    pub tensor_matrices: Vec<TensorMatrix>,
    pub affine_type: Option<String>,
    pub finite_type: Option<String>,
    pub closed_form: Option<String>,
    pub quiver: Quiver,
    pub denominator: IntPoly,
    pub series: Vec<SeriesDump>,
}

fn group_dump(g: &MatrixGroup, t: &CharTable) -> GroupDump {
    GroupDump {
        name: g.name().to_string(),
        order: g.order(),
        dim: g.dim(),
        conductor: g.conductor(),
        generators: g.generators().to_vec(),
        classes: g
            .classes()
            .iter()
            .map(|c| ClassDump { size: c.size(), element_order: g.element_order(c.rep), representative: g.element(c.rep).clone() })
            .collect(),
        natural_character: natural_character(g).values,
        characters: t
            .irreducibles
            .iter()
            .zip(&t.labels)
            .zip(&t.degrees)
            .map(|((x, l), &d)| CharacterDump { label: l.clone(), degree: d, values: x.values.clone() })
            .collect(),
    }
}

fn system_dump(sys: &ModuleSystem, t: &CharTable) -> Result<SystemDump> {
    let e = engines(sys, t)?;
    let series = e
        .det
        .labels
        .iter()
        .zip(&e.det.series)
        .map(|(l, f)| {
            let s = f.expand(DUMP_ORDER)?;
            Ok(SeriesDump {
                label: l.clone(),
                ratfun: f.clone(),
                text: f.to_string(),
                coefficients: s.coeffs().iter().map(|c| c.to_string()).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SystemDump {
        name: sys.name.clone(),
        side: sys.side,
        group: sys.group.name().to_string(),
        labels: sys.labels.clone(),
        degrees: sys.first().degrees.clone(),
        upsilon: sys.upsilon.clone(),
        modules: sys.modules.iter().map(|m| m.values.clone()).collect(),
        tensor_matrices: sys.mats.clone(),
        affine_type: e.ty.as_ref().map(|t| t.tag.clone()),
        finite_type: e.ty.as_ref().map(|t| t.finite_tag.clone()),
        closed_form: e.ty.as_ref().map(closed_form_text),
        quiver: quiver(sys.first()),
        denominator: e.det_p,
        series,
    })
}

pub fn dump(b: &Built) -> Result<Dump> {
    let (groups, systems, proportionality) = match b {
        Built::Group(g) => (vec![group_dump(g.group(), &g.table)], vec![system_dump(&g.system, &g.table)?], None),
        Built::Pair(p) => {
            let rest = system_dump(&p.rest, &p.table_n)?;
            let ind = system_dump(&p.ind, &p.table_g)?;
            let r = engines(&p.rest, &p.table_n)?;
            let i = engines(&p.ind, &p.table_g)?;
            let prop = proportionality_check(p, &r.det, &i.det)?;
            (vec![group_dump(&p.g, &p.table_g), group_dump(&p.n.group, &p.table_n)], vec![rest, ind], Some(prop))
        }
    };
    Ok(Dump { schema: SCHEMA.into(), target: b.target().to_string(), groups, systems, proportionality })
}

pub fn dump_target(t: &Target) -> Result<Dump> {
    dump(&Built::build(t)?)
}

/// Canonical JSON text (pretty, fields in declaration order, trailing newline).
pub fn to_json(d: &Dump) -> Result<String> {
    serde_json::to_string_pretty(d).map(|s| s + "\n").map_err(|e| Error::Json(e.to_string()))
}

pub fn from_json(s: &str) -> Result<Dump> {
    let d: Dump = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    if d.schema != SCHEMA {
        return Err(Error::Json(format!("unsupported schema {:?}", d.schema)));
    }
    Ok(d)
}

/// Reloads a dump and recomputes its target; both must reproduce the text exactly.
pub fn round_trip(s: &str) -> Result<bool> {
    let d = from_json(s)?;
    let again = to_json(&d)?;
    let target: Target = d.target.parse()?;
    let fresh = to_json(&dump_target(&target)?)?;
    Ok(again == s && fresh == s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_round_trip() {
        let t: Target = "pair:D2<T".parse().unwrap();
        let text = to_json(&dump_target(&t).unwrap()).unwrap();
        assert!(round_trip(&text).unwrap());
        let d = from_json(&text).unwrap();
        assert_eq!(d.systems[0].affine_type.as_deref(), Some("D4^(3)"));
        assert_eq!(d.systems[1].affine_type.as_deref(), Some("G2^(1)"));
    }

    #[test]
    fn rejects_other_schema() {
        assert!(from_json("{\"schema\":\"x\"}").is_err());
    }
}
