use num_bigint::BigInt;

use crate::arith::{CycloNum, Rat};
use crate::error::{Error, Result};
use crate::groups::{CharTable, ClassFunction, MatrixGroup};
use crate::mckay::ModuleSystem;
use crate::poly::{CycloPoly, RatFun, Series};

use super::{Method, SeriesBundle};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolienResult {
    pub series: Series,
    pub ratfun: RatFun,
}

/// (1/|H|) Σ_g conj(target(g)) / det(I − tg), assembled over the product of the
/// distinct det(I − tg) and checked to be rational with integer coefficients.
pub fn molien_series(h: &MatrixGroup, table: &CharTable, target: &ClassFunction, order: usize) -> Result<MolienResult> {
    let ratfun = molien_ratfun(h, table, target)?;
    let series = ratfun.expand(order)?;
    if !series.is_nonneg_integral() {
        return Err(Error::NonIntegral("Molien coefficients".into()));
    }
    Ok(MolienResult { series, ratfun })
}

fn molien_ratfun(h: &MatrixGroup, table: &CharTable, target: &ClassFunction) -> Result<RatFun> {
    table.check_character(h, target)?;
    let dets: Vec<CycloPoly> = h
        .classes()
        .iter()
        .map(|c| CycloPoly::new(h.element(c.rep).char_poly_reversed()))
        .collect();
    let mut distinct: Vec<CycloPoly> = Vec::new();
    let which: Vec<usize> = dets
        .iter()
        .map(|d| match distinct.iter().position(|x| x == d) {
            Some(i) => i,
            None => {
                distinct.push(d.clone());
                distinct.len() - 1
            }
        })
        .collect();
    // cofactor[i] = product of all distinct factors except the i-th
    let k = distinct.len();
    let mut prefix = vec![CycloPoly::one(); k + 1];
    let mut suffix = vec![CycloPoly::one(); k + 1];
    for i in 0..k {
        prefix[i + 1] = &prefix[i] * &distinct[i];
        suffix[k - 1 - i] = &suffix[k - i] * &distinct[k - 1 - i];
    }
    let cofactor: Vec<CycloPoly> = (0..k).map(|i| &prefix[i] * &suffix[i + 1]).collect();
    let mut num = CycloPoly::zero();
    for (c, class) in h.classes().iter().enumerate() {
        let w = target.values[c].conj().scale(&Rat::from_integer(BigInt::from(class.size())));
        num = &num + &cofactor[which[c]].scale(&w);
    }
    let num = num.scale(&CycloNum::from_rat(Rat::new(1.into(), BigInt::from(h.order()))));
    let num = num.to_rats().ok_or_else(|| Error::NonIntegral("Molien numerator is not rational".into()))?;
    let den = prefix[k].to_rats().ok_or_else(|| Error::NonIntegral("Molien denominator is not rational".into()))?;
    RatFun::from_rat_coeffs(&num, &den)
}

/// Molien series of every module of a system, in label order.
pub fn molien_bundle(sys: &ModuleSystem, table: &CharTable) -> Result<SeriesBundle> {
    let series = sys
        .modules
        .iter()
        .map(|m| molien_ratfun(&sys.group, table, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(SeriesBundle { labels: sys.labels.clone(), series, method: Method::Molien })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, character_table, GroupSpec};
    use crate::poly::IntPoly;

    fn trivial_series(spec: GroupSpec, order: usize) -> MolienResult {
        let g = build_group(&spec).unwrap();
        let t = character_table(&g).unwrap();
        molien_series(&g, &t, &ClassFunction::trivial(&g), order).unwrap()
    }

    #[test]
    fn trivial_group() {
        let r = trivial_series(GroupSpec::Cyclic(1), 6);
        assert_eq!(r.ratfun, RatFun::new(IntPoly::one(), IntPoly::from_i64s(&[1, -2, 1])).unwrap());
        assert_eq!(r.series.to_i64s().unwrap(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn cyclic_two_by_hand() {
        // (1/2)(1/(1−t)² + 1/(1+t)²) = (1+t²)/(1−t²)²
        let r = trivial_series(GroupSpec::Cyclic(2), 8);
        assert_eq!(r.ratfun, RatFun::new(IntPoly::from_i64s(&[1, 0, 1]), IntPoly::from_i64s(&[1, 0, -2, 0, 1])).unwrap());
    }

    #[test]
    fn icosahedral_invariants() {
        let r = trivial_series(GroupSpec::BinaryIcosahedral, 21);
        let c = r.series.to_i64s().unwrap();
        let nonzero: Vec<usize> = (0..=20).filter(|&k| c[k] != 0).collect();
        assert_eq!(nonzero, vec![0, 12, 20]);
    }

    #[test]
    fn rejects_virtual_character() {
        let g = build_group(&GroupSpec::Cyclic(3)).unwrap();
        let t = character_table(&g).unwrap();
        let neg = t.irreducibles[1].sub(&t.irreducibles[0]);
        assert!(matches!(molien_series(&g, &t, &neg, 4), Err(Error::NonCharacter(_))));
    }
}
