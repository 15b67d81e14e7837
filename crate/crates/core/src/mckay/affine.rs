//! Affine Dynkin data: generalized Cartan matrices, the closed-form parameters
//! (a, b, h, p, q, r), and exponent tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Affine diagram family; the parameter is the usual rank subscript.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AffineFamily {
    /// A_l^(1); l = 0 stands for the trivial group's 1×1 diagram.
    A1(u32),
    D1(u32),
    E6,
    E7,
    E8,
    B1(u32),
    C1(u32),
    F4,
    G2,
    /// A_{2l}^(2), l ≥ 1 (l = 1 is A_2^(2)).
    A2Even(u32),
    /// A_{2l-1}^(2), l ≥ 3.
    A2Odd(u32),
    /// D_{l+1}^(2), l ≥ 2.
    D2(u32),
    E6Twisted,
    D4Twisted,
}

/// The closed-form parameters; p, q, r are stored doubled since A_l^(1) has half-integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterRow {
    pub a: u32,
    pub b: u32,
    pub h: u32,
    pub pqr_doubled: [u32; 3],
}

/// One affine diagram with its Cartan matrix and tabulated data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineType {
    pub family: AffineFamily,
    pub tag: String,
    /// Generalized Cartan matrix, a_ij = 2(α_i, α_j)/(α_i, α_i).
    pub cartan: Vec<Vec<i64>>,
    pub coxeter: CoxeterRow,
    /// Affine exponents and Coxeter number as tabulated, if listed.
    pub affine_exponents: Option<Vec<u32>>,
    pub affine_h: Option<u32>,
    pub finite_tag: String,
    pub finite_exponents: Vec<u32>,
    pub finite_h: u32,
}

impl AffineType {
    pub fn nodes(&self) -> usize {
        self.cartan.len()
    }

    pub fn is_twisted(&self) -> bool {
        matches!(
            self.family,
            AffineFamily::A2Even(_) | AffineFamily::A2Odd(_) | AffineFamily::D2(_) | AffineFamily::E6Twisted | AffineFamily::D4Twisted
        )
    }
}

/// Builds a Cartan matrix from squared root lengths and the symmetric form on edges.
fn from_form(lengths: &[i64], edges: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let n = lengths.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
    }
    for &(i, j, b) in edges {
        assert!((2 * b) % lengths[i] == 0 && (2 * b) % lengths[j] == 0, "non-integral Cartan entry");
        c[i][j] = 2 * b / lengths[i];
        c[j][i] = 2 * b / lengths[j];
    }
    c
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

fn chain(lengths: &[i64], bonds: &[i64]) -> Vec<Vec<i64>> {
    let edges: Vec<_> = bonds.iter().enumerate().map(|(i, &b)| (i, i + 1, b)).collect();
    from_form(lengths, &edges)
}

fn cartan(family: AffineFamily) -> Vec<Vec<i64>> {
    use AffineFamily::*;
    match family {
        A1(0) => vec![vec![0]],
        A1(1) => vec![vec![2, -2], vec![-2, 2]],
        A1(l) => {
            let n = l as usize + 1;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, -1)).collect();
            from_form(&vec![2; n], &edges)
        }
        D1(l) => {
            let l = l as usize;
            let mut edges = vec![(0, 2, -1), (1, 2, -1)];
            edges.extend((2..l - 1).map(|i| (i, i + 1, -1)));
            edges.push((l - 2, l, -1));
            from_form(&vec![2; l + 1], &edges)
        }
        E6 => from_form(&[2; 7], &[(0, 1, -1), (1, 2, -1), (2, 3, -1), (3, 4, -1), (2, 5, -1), (5, 6, -1)]),
        E7 => from_form(
            &[2; 8],
            &[(0, 1, -1), (1, 2, -1), (2, 3, -1), (3, 4, -1), (4, 5, -1), (5, 6, -1), (3, 7, -1)],
        ),
        E8 => from_form(
            &[2; 9],
            &[(0, 1, -1), (1, 2, -1), (2, 3, -1), (3, 4, -1), (4, 5, -1), (5, 6, -1), (6, 7, -1), (5, 8, -1)],
        ),
        B1(l) => {
            let l = l as usize;
            let mut lengths = vec![2; l + 1];
            lengths[l] = 1;
            let mut edges = vec![(0, 2, -1), (1, 2, -1)];
            edges.extend((2..l).map(|i| (i, i + 1, -1)));
            from_form(&lengths, &edges)
        }
        C1(l) => {
            let l = l as usize;
            let mut lengths = vec![2; l + 1];
            lengths[0] = 4;
            lengths[l] = 4;
            let mut bonds = vec![-1; l];
            bonds[0] = -2;
            bonds[l - 1] = -2;
            chain(&lengths, &bonds)
        }
        F4 => chain(&[4, 4, 4, 2, 2], &[-2, -2, -2, -1]),
        G2 => chain(&[6, 6, 2], &[-3, -3]),
        A2Even(1) => vec![vec![2, -4], vec![-1, 2]],
        A2Even(l) => {
            let l = l as usize;
            let mut lengths = vec![2; l + 1];
            lengths[0] = 1;
            lengths[l] = 4;
            let mut bonds = vec![-1; l];
            bonds[l - 1] = -2;
            chain(&lengths, &bonds)
        }
        A2Odd(l) => transpose(&cartan(B1(l))),
        D2(l) => transpose(&cartan(C1(l))),
        E6Twisted => transpose(&cartan(F4)),
        D4Twisted => transpose(&cartan(G2)),
    }
}

fn tag(family: AffineFamily) -> String {
    use AffineFamily::*;
    match family {
        A1(l) => format!("A{l}^(1)"),
        D1(l) => format!("D{l}^(1)"),
        E6 => "E6^(1)".into(),
        E7 => "E7^(1)".into(),
        E8 => "E8^(1)".into(),
        B1(l) => format!("B{l}^(1)"),
        C1(l) => format!("C{l}^(1)"),
        F4 => "F4^(1)".into(),
        G2 => "G2^(1)".into(),
        A2Even(l) => format!("A{}^(2)", 2 * l),
        A2Odd(l) => format!("A{}^(2)", 2 * l - 1),
        D2(l) => format!("D{}^(2)", l + 1),
        E6Twisted => "E6^(2)".into(),
        D4Twisted => "D4^(3)".into(),
    }
}

fn coxeter(family: AffineFamily) -> CoxeterRow {
    use AffineFamily::*;
    let row = |a, b, h, p, q, r| CoxeterRow { a, b, h, pqr_doubled: [p, q, r] };
    match family {
        A1(l) => row(2, l + 1, l + 1, l + 1, l + 1, 2),
        D1(l) => row(4, 2 * l - 4, 2 * l - 2, 2 * (l - 2), 4, 4),
        E6 => row(6, 8, 12, 6, 6, 4),
        E7 => row(8, 12, 18, 8, 6, 4),
        E8 => row(12, 20, 30, 10, 6, 4),
        A2Even(1) => row(2, 2, 2, 2, 2, 2),
        A2Even(l) => row(2, 2 * l, 2 * l, 2 * l, 2, 2),
        B1(l) | A2Odd(l) => row(4, 2 * l - 2, 2 * l, 2 * (l - 1), 4, 2),
        C1(l) | D2(l) => row(2, 2 * l, 2 * l, 2 * l, 2, 2),
        F4 | E6Twisted => row(6, 8, 12, 6, 4, 2),
        G2 | D4Twisted => row(4, 4, 6, 4, 2, 2),
    }
}

/// Affine exponents and Coxeter number exactly as tabulated (None where not listed).
fn tabulated_exponents(family: AffineFamily) -> Option<(Vec<u32>, u32)> {
    use AffineFamily::*;
    let range = |a: u32, b: u32| (a..=b).collect::<Vec<u32>>();
    let sorted = |mut v: Vec<u32>| {
        v.sort_unstable();
        v
    };
    Some(match family {
        A1(1) => (vec![0, 1], 1),
        A1(l) if l % 2 == 1 => {
            let ell = (l - 1) / 2;
            let mut v = vec![0, ell + 1];
            for m in 1..=ell {
                v.extend([m, m]);
            }
            (sorted(v), ell + 1)
        }
        A1(_) => return None,
        D1(l) if l % 2 == 1 => {
            let ell = (l - 1) / 2;
            let mut v: Vec<u32> = (0..=2 * ell - 1).map(|k| 2 * k).collect();
            v.extend([2 * ell - 1, 2 * ell - 1]);
            (sorted(v), 2 * (2 * ell - 1))
        }
        D1(l) => {
            let ell = l / 2;
            let mut v = range(0, 2 * ell - 2);
            v.extend([ell - 1, ell - 1]);
            (sorted(v), 2 * ell - 2)
        }
        E6 => (vec![0, 2, 2, 3, 4, 4, 6], 6),
        E7 => (vec![0, 3, 4, 6, 6, 8, 9, 12], 12),
        E8 => (vec![0, 6, 10, 12, 15, 18, 20, 24, 30], 30),
        A2Even(1) => (vec![0, 2], 2),
        A2Even(l) => (range(0, l), l),
        B1(l) | A2Odd(l) if l % 2 == 1 => {
            let ell = (l - 1) / 2;
            let mut v = range(0, 2 * ell);
            v.push(ell);
            (sorted(v), 2 * ell)
        }
        B1(l) | A2Odd(l) => {
            let ell = l / 2;
            let mut v: Vec<u32> = (0..=2 * ell - 1).map(|k| 2 * k).collect();
            v.push(2 * ell - 1);
            (sorted(v), 2 * (2 * ell - 1))
        }
        C1(l) | D2(l) => (range(0, l), l),
        F4 | E6Twisted => (vec![0, 2, 3, 4, 6], 6),
        G2 | D4Twisted => (vec![0, 1, 2], 2),
    })
}

/// The finite diagram left after removing the affine node, with exponents and Coxeter number.
fn finite(family: AffineFamily) -> (String, Vec<u32>, u32) {
    use AffineFamily::*;
    let odd = |n: u32| (1..=n).map(|i| 2 * i - 1).collect::<Vec<u32>>();
    match family {
        A1(0) => ("A0".into(), vec![], 1),
        A1(l) => (format!("A{l}"), (1..=l).collect(), l + 1),
        A2Even(1) => ("A1".into(), vec![1], 2),
        D1(l) => {
            let mut v: Vec<u32> = (1..l).map(|i| 2 * i - 1).collect();
            v.push(l - 1);
            v.sort_unstable();
            (format!("D{l}"), v, 2 * l - 2)
        }
        E6 => ("E6".into(), vec![1, 4, 5, 7, 8, 11], 12),
        E7 => ("E7".into(), vec![1, 5, 7, 9, 11, 13, 17], 18),
        E8 => ("E8".into(), vec![1, 7, 11, 13, 17, 19, 23, 29], 30),
        B1(l) | D2(l) => (format!("B{l}"), odd(l), 2 * l),
        C1(l) | A2Even(l) | A2Odd(l) => (format!("C{l}"), odd(l), 2 * l),
        F4 | E6Twisted => ("F4".into(), vec![1, 5, 7, 11], 12),
        G2 | D4Twisted => ("G2".into(), vec![1, 5], 6),
    }
}

pub fn affine_type(family: AffineFamily) -> AffineType {
    let (affine_exponents, affine_h) = match tabulated_exponents(family) {
        Some((e, h)) => (Some(e), Some(h)),
        None => (None, None),
    };
    let (finite_tag, finite_exponents, finite_h) = finite(family);
    AffineType {
        family,
        tag: tag(family),
        cartan: cartan(family),
        coxeter: coxeter(family),
        affine_exponents,
        affine_h,
        finite_tag,
        finite_exponents,
        finite_h,
    }
}

/// All affine types whose diagram has exactly `nodes` vertices.
pub fn types_with_nodes(nodes: usize) -> Vec<AffineType> {
    use AffineFamily::*;
    let l = nodes as u32 - 1;
    let mut fams = vec![A1(l), A2Even(l)];
    if l >= 4 {
        fams.push(D1(l));
    }
    if l >= 3 {
        fams.extend([B1(l), A2Odd(l)]);
    }
    if l >= 2 {
        fams.extend([C1(l), D2(l)]);
    }
    match nodes {
        3 => fams.extend([G2, D4Twisted]),
        5 => fams.extend([F4, E6Twisted]),
        7 => fams.push(E6),
        8 => fams.push(E7),
        9 => fams.push(E8),
        _ => {}
    }
    if nodes == 1 {
        fams = vec![A1(0)];
    }
    fams.into_iter().map(affine_type).collect()
}

/// Finds π with m[i][j] = t[π(i)][π(j)] by backtracking.
pub fn match_permutation(m: &[Vec<i64>], t: &[Vec<i64>]) -> Option<Vec<usize>> {
    let n = m.len();
    if t.len() != n {
        return None;
    }
    let sig = |a: &[Vec<i64>], i: usize| {
        let mut row: Vec<i64> = a[i].clone();
        let mut col: Vec<i64> = (0..n).map(|k| a[k][i]).collect();
        row.sort_unstable();
        col.sort_unstable();
        (a[i][i], row, col)
    };
    let sm: Vec<_> = (0..n).map(|i| sig(m, i)).collect();
    let st: Vec<_> = (0..n).map(|i| sig(t, i)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        m: &[Vec<i64>],
        t: &[Vec<i64>],
        sm: &[(i64, Vec<i64>, Vec<i64>)],
        st: &[(i64, Vec<i64>, Vec<i64>)],
        perm: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = m.len();
        if i == n {
            return true;
        }
        for c in 0..n {
            if used[c] || sm[i] != st[c] {
                continue;
            }
            if (0..i).any(|k| m[i][k] != t[c][perm[k]] || m[k][i] != t[perm[k]][c]) {
                continue;
            }
            perm[i] = c;
            used[c] = true;
            if go(i + 1, m, t, sm, st, perm, used) {
                return true;
            }
            used[c] = false;
        }
        false
    }
    go(0, m, t, &sm, &st, &mut perm, &mut used).then_some(perm)
}

/// Identifies a generalized Cartan matrix, returning the type and the node permutation.
pub fn identify_cartan(c: &[Vec<i64>]) -> Result<(AffineType, Vec<usize>)> {
    for ty in types_with_nodes(c.len()) {
        if let Some(p) = match_permutation(c, &ty.cartan) {
            return Ok((ty, p));
        }
    }
    Err(Error::Unclassified(format!("{c:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn null_vector_exists(c: &[Vec<i64>]) -> bool {
        // An affine Cartan matrix has corank 1; compute det by fraction-free elimination.
        let n = c.len();
        let mut a: Vec<Vec<i128>> = c.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let mut prev = 1i128;
        for k in 0..n.saturating_sub(1) {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => a.swap(i, k),
                    None => return true,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        a[n - 1][n - 1] == 0
    }

    #[test]
    fn templates_are_singular_and_consistent() {
        for nodes in 2..12 {
            for ty in types_with_nodes(nodes) {
                assert_eq!(ty.nodes(), nodes, "{}", ty.tag);
                assert!(null_vector_exists(&ty.cartan), "{} not singular", ty.tag);
                let t = ty.coxeter;
                assert_eq!(t.a + t.b, t.h + 2, "{}", ty.tag);
                if let Some(e) = &ty.affine_exponents {
                    assert_eq!(e.len(), nodes, "{}", ty.tag);
                }
                assert_eq!(ty.finite_exponents.len(), nodes - 1, "{}", ty.tag);
            }
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(cartan(AffineFamily::G2), vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -3, 2]]);
        assert_eq!(cartan(AffineFamily::C1(2)), vec![vec![2, -1, 0], vec![-2, 2, -2], vec![0, -1, 2]]);
        let (ty, _) = identify_cartan(&transpose(&cartan(AffineFamily::F4))).unwrap();
        assert_eq!(ty.tag, "E6^(2)");
        assert!(identify_cartan(&[vec![2, -3], vec![-3, 2]]).is_err());
    }
}
