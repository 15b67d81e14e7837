use serde::{Deserialize, Serialize};

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::groups::PairSpec;
use crate::mckay::{cartan_of, PairData};

use super::SeriesBundle;

/// One restriction vertex paired with an induction vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMatch {
    pub rest: String,
    pub ind: String,
    /// Squared length of the induction-side root, shortest = 1.
    pub ind_length: String,
    pub factor: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Proportionality {
    pub pair: String,
    pub index: u64,
    pub matches: Vec<VertexMatch>,
}

/// Squared root lengths |α_j|² = |α_i|²·C_ij/C_ji, scaled so the shortest is 1.
pub fn root_lengths(c: &[Vec<i64>]) -> Vec<Rat> {
    let n = c.len();
    if n == 0 {
        return Vec::new();
    }
    let mut len: Vec<Option<Rat>> = vec![None; n];
    len[0] = Some(Rat::from_integer(1.into()));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && c[i][j] != 0 && len[j].is_none() {
                let li = len[i].clone().expect("visited");
                len[j] = Some(li * Rat::new(c[i][j].into(), c[j][i].into()));
                stack.push(j);
            }
        }
    }
    let len: Vec<Rat> = len.into_iter().map(|l| l.unwrap_or_else(|| Rat::from_integer(1.into()))).collect();
    let min = len.iter().min().cloned().expect("nonempty");
    len.into_iter().map(|l| l / &min).collect()
}

/// Expected ratio š^i / ŝ^{i′} at each induction vertex.
fn expected_factors(pair: &PairData) -> Vec<u64> {
    let index = pair.rest.index as u64;
    let lengths = root_lengths(&cartan_of(pair.ind.first()));
    if let PairSpec::CyclicInDoubleDihedral(_) = pair.spec {
        return (0..lengths.len()).map(|j| if j == 0 { 1 } else { 2 }).collect();
    }
    let max = lengths.iter().max().cloned().expect("nonempty");
    lengths.iter().map(|l| if *l == max { 1 } else { index }).collect()
}

/// Finds a bijection i ↔ i′ with š^i = f(i′)·ŝ^{i′}, where f is 1 on long induction roots and
/// [G:N] on short ones (2 off the affine vertex for C_{2n} in D_{2n}), by exhaustive search.
pub fn proportionality_check(pair: &PairData, rest: &SeriesBundle, ind: &SeriesBundle) -> Result<Proportionality> {
    let n = rest.series.len();
    if ind.series.len() != n {
        return Err(Error::NoMatching(format!("{}: {} restriction vs {} induction series", pair.spec, n, ind.series.len())));
    }
    let factors = expected_factors(pair);
    let lengths = root_lengths(&cartan_of(pair.ind.first()));
    let ok: Vec<Vec<bool>> = rest
        .series
        .iter()
        .map(|s| {
            ind.series
                .iter()
                .zip(&factors)
                .map(|(h, &f)| *s == h.scale(&Rat::from_integer(f.into())))
                .collect()
        })
        .collect();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !search(0, &ok, &mut assign, &mut used) {
        return Err(Error::NoMatching(pair.spec.to_string()));
    }
    let matches = (0..n)
        .map(|i| VertexMatch {
            rest: rest.labels[i].clone(),
            ind: ind.labels[assign[i]].clone(),
            ind_length: lengths[assign[i]].to_string(),
            factor: factors[assign[i]],
        })
        .collect();
    Ok(Proportionality { pair: pair.spec.to_string(), index: pair.rest.index as u64, matches })
}

fn search(i: usize, ok: &[Vec<bool>], assign: &mut [usize], used: &mut [bool]) -> bool {
    if i == ok.len() {
        return true;
    }
    for j in 0..ok.len() {
        if ok[i][j] && !used[j] {
            used[j] = true;
            assign[i] = j;
            if search(i + 1, ok, assign, used) {
                return true;
            }
            used[j] = false;
        }
    }
    false
}

/// The trivial series agree on both sides.
pub fn trivial_agree(rest: &SeriesBundle, ind: &SeriesBundle) -> bool {
    rest.series.first() == ind.series.first()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::series_by_determinant;

    fn check(s: &str) -> Proportionality {
        let p = PairData::build(&s.parse().unwrap()).unwrap();
        let r = series_by_determinant(2, &p.rest.mats).unwrap();
        let i = series_by_determinant(2, &p.ind.mats).unwrap();
        assert!(trivial_agree(&r, &i));
        proportionality_check(&p, &r, &i).unwrap()
    }

    #[test]
    fn c2_in_d2_doubles() {
        let m = check("C2<D2");
        assert_eq!(m.matches[0].factor, 1);
        assert_eq!(m.matches[1].factor, 2);
    }

    #[test]
    fn t_in_o_short_roots() {
        let m = check("T<O");
        assert_eq!(m.index, 2);
        assert_eq!(m.matches.iter().filter(|v| v.factor == 2).count(), 2);
        assert!(m.matches.iter().all(|v| (v.factor == 2) == (v.ind_length == "1")));
    }

    #[test]
    fn lengths_of_g2() {
        let p = PairData::build(&"D2<T".parse().unwrap()).unwrap();
        let l = root_lengths(&cartan_of(p.ind.first()));
        assert_eq!(l.iter().filter(|x| **x == Rat::from_integer(3.into())).count(), 2);
    }
}
