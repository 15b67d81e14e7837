use std::collections::VecDeque;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::group::{MatrixGroup, Subgroup};
use crate::arith::{CycloNum, Rat};
use crate::error::{Error, Result};

/// Values of a class function, one per conjugacy class in the group's class order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassFunction {
    pub values: Vec<CycloNum>,
}

impl ClassFunction {
    pub fn new(values: Vec<CycloNum>) -> Self {
        ClassFunction { values }
    }

    pub fn trivial(g: &MatrixGroup) -> Self {
        Self::new(vec![CycloNum::one(); g.num_classes()])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &CycloNum {
        &self.values[0]
    }

    pub fn degree_u64(&self) -> Option<u64> {
        self.values[0].to_integer()?.to_u64()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycloNum::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        Self::new(self.values.iter().map(|a| a * c).collect())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.values.iter().map(CycloNum::conj).collect())
    }

    pub fn galois(&self, k: u32) -> Self {
        Self::new(self.values.iter().map(|a| a.galois(k)).collect())
    }
}

/// ⟨α, β⟩ = (1/|G|) Σ_g α(g) conj(β(g)).
pub fn inner_product(g: &MatrixGroup, a: &ClassFunction, b: &ClassFunction) -> CycloNum {
    let mut acc = CycloNum::zero();
    for (c, class) in g.classes().iter().enumerate() {
        let term = &a.values[c] * &b.values[c].conj();
        acc = &acc + &term.scale(&Rat::from_integer(class.size().into()));
    }
    acc.scale(&Rat::new(1.into(), g.order().into()))
}

/// Irreducible characters, trivial first, then by degree, then by values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTable {
    pub labels: Vec<String>,
    pub irreducibles: Vec<ClassFunction>,
    pub degrees: Vec<u64>,
}

impl CharTable {
    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    /// Multiplicities ⟨χ, χ_i⟩ of each irreducible in χ.
    pub fn decompose(&self, g: &MatrixGroup, chi: &ClassFunction) -> Vec<CycloNum> {
        self.irreducibles.iter().map(|x| inner_product(g, chi, x)).collect()
    }

    /// Checks that χ is a nonnegative integer combination of irreducibles.
    pub fn check_character(&self, g: &MatrixGroup, chi: &ClassFunction) -> Result<Vec<u64>> {
        self.decompose(g, chi)
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                m.to_integer()
                    .filter(|v| !v.is_negative())
                    .and_then(|v| v.to_u64())
                    .ok_or_else(|| Error::NonCharacter(format!("multiplicity of {} is {m}", self.labels[i])))
            })
            .collect()
    }
}

/// Character of the defining representation: the trace of each class representative.
pub fn natural_character(g: &MatrixGroup) -> ClassFunction {
    ClassFunction::new(g.classes().iter().map(|c| g.element(c.rep).trace()).collect())
}

/// Character of ∧^r of a representation with character χ, via Newton's identities
/// e_r = (1/r) Σ_{i=1}^r (−1)^{i−1} e_{r−i} p_i with p_i(g) = χ(g^i).
pub fn exterior_power_character(chi: &ClassFunction, r: usize, g: &MatrixGroup) -> Result<ClassFunction> {
    if r > g.dim() {
        return Err(Error::ExteriorRange { r, n: g.dim() });
    }
    let k = g.num_classes();
    let power = |i: usize| -> ClassFunction {
        ClassFunction::new((0..k).map(|c| chi.values[g.power_class(c, i as u32)].clone()).collect())
    };
    let p: Vec<ClassFunction> = (0..=r).map(|i| if i == 0 { ClassFunction::trivial(g) } else { power(i) }).collect();
    let mut e = vec![ClassFunction::trivial(g)];
    for m in 1..=r {
        let mut acc = ClassFunction::new(vec![CycloNum::zero(); k]);
        for i in 1..=m {
            let term = e[m - i].mul(&p[i]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        e.push(acc.scale(&CycloNum::from_rat(Rat::new(1.into(), m.into()))));
    }
    Ok(e.pop().expect("nonempty"))
}

/// All one-dimensional characters, found by assigning roots of unity to the generators
/// and propagating along the generator multiplication table.
pub fn linear_characters(g: &MatrixGroup) -> Vec<ClassFunction> {
    let e = g.exponent();
    let ngen = g.generators().len();
    let gen_idx: Vec<usize> = (0..ngen).map(|s| g.gen_mul()[0][s]).collect();
    let steps: Vec<u32> = gen_idx.iter().map(|&s| e / g.element_order(s)).collect();
    let counts: Vec<u32> = gen_idx.iter().map(|&s| g.element_order(s)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0u32; ngen];
    loop {
        let ks: Vec<u32> = choice.iter().zip(&steps).map(|(c, s)| c * s).collect();
        if let Some(vals) = propagate(g, &ks, e) {
            out.push(ClassFunction::new(
                g.classes().iter().map(|c| CycloNum::zeta(e, vals[c.rep] as i64)).collect(),
            ));
        }
        // odometer over the generator images
        let mut pos = 0;
        loop {
            if pos == ngen {
                return out;
            }
            choice[pos] += 1;
            if choice[pos] < counts[pos] {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn propagate(g: &MatrixGroup, ks: &[u32], e: u32) -> Option<Vec<u32>> {
    let n = g.order();
    let mut v: Vec<Option<u32>> = vec![None; n];
    v[0] = Some(0);
    for x in 0..n {
        let vx = v[x]?;
        for (s, &y) in g.gen_mul()[x].iter().enumerate() {
            let val = (vx + ks[s]) % e;
            match v[y] {
                None => v[y] = Some(val),
                Some(w) if w != val => return None,
                _ => {}
            }
        }
    }
    v.into_iter().collect()
}

/// Exact character table by peeling tensor products against known irreducibles.
pub fn character_table(g: &MatrixGroup) -> Result<CharTable> {
    let order = g.order() as u64;
    let chi_v = natural_character(g);
    let linear = linear_characters(g);
    let field = num_integer::lcm(g.exponent(), g.conductor());
    let units: Vec<u32> = (2..field).filter(|k| k.gcd(&field) == 1).collect();
    let squares: Vec<usize> = (0..g.num_classes()).map(|c| g.power_class(c, 2)).collect();

    let mut irr: Vec<ClassFunction> = Vec::new();
    let mut queue: VecDeque<ClassFunction> = VecDeque::new();
    let mut pending: Vec<ClassFunction> = Vec::new();
    let sum_sq = |irr: &[ClassFunction]| -> u64 { irr.iter().map(|x| x.degree_u64().unwrap_or(0).pow(2)).sum() };

    let admit = |x: ClassFunction, irr: &mut Vec<ClassFunction>, queue: &mut VecDeque<ClassFunction>| {
        if irr.contains(&x) {
            return;
        }
        queue.push_back(chi_v.mul(&x));
        queue.push_back(x.conj());
        for &k in &units {
            queue.push_back(x.galois(k));
        }
        for l in &linear {
            queue.push_back(l.mul(&x));
        }
        let sq = ClassFunction::new(squares.iter().map(|&c| x.values[c].clone()).collect());
        let x2 = x.mul(&x);
        let half = CycloNum::from_rat(Rat::new(1.into(), 2.into()));
        queue.push_back(x2.add(&sq).scale(&half));
        queue.push_back(x2.sub(&sq).scale(&half));
        irr.push(x);
    };

    for l in linear.iter().cloned() {
        admit(l, &mut irr, &mut queue);
    }
    // χ_V may be reducible (SL₃ diagonal groups); the reduction below handles it.
    if inner_product(g, &chi_v, &chi_v).is_one() {
        admit(chi_v.clone(), &mut irr, &mut queue);
    } else {
        queue.push_back(chi_v.clone());
    }

    let reduce = |x: &ClassFunction, irr: &[ClassFunction]| -> ClassFunction {
        let mut rem = x.clone();
        for y in irr {
            let m = inner_product(g, &rem, y);
            if !m.is_zero() {
                rem = rem.sub(&y.scale(&m));
            }
        }
        rem
    };

    while sum_sq(&irr) < order {
        let mut progress = false;
        while let Some(c) = queue.pop_front() {
            if sum_sq(&irr) == order {
                break;
            }
            let rem = reduce(&c, &irr);
            if rem.is_zero() {
                continue;
            }
            let norm = inner_product(g, &rem, &rem);
            if norm.is_one() && rem.degree_u64().is_some_and(|d| d > 0) {
                admit(rem, &mut irr, &mut queue);
                progress = true;
            } else if !pending.contains(&rem) {
                pending.push(rem);
            }
        }
        // Re-reduce stored remainders against the enlarged list.
        let old = std::mem::take(&mut pending);
        for p in old {
            let rem = reduce(&p, &irr);
            if rem.is_zero() {
                continue;
            }
            if inner_product(g, &rem, &rem).is_one() && rem.degree_u64().is_some_and(|d| d > 0) {
                admit(rem, &mut irr, &mut queue);
                progress = true;
            } else {
                pending.push(rem);
            }
        }
        if !progress && queue.is_empty() {
            // Differences of overlapping remainders can isolate a constituent.
            let mut split = false;
            'outer: for a in 0..pending.len() {
                for b in 0..pending.len() {
                    if a == b {
                        continue;
                    }
                    let d = pending[a].sub(&pending[b]);
                    if !d.is_zero() && inner_product(g, &d, &d).is_one() && d.degree_u64().is_some_and(|x| x > 0) {
                        admit(d, &mut irr, &mut queue);
                        split = true;
                        break 'outer;
                    }
                }
            }
            if !split {
                break;
            }
        }
    }

    let found = sum_sq(&irr);
    if found != order {
        return Err(Error::IncompleteTable { found, order });
    }
    let trivial = ClassFunction::trivial(g);
    irr.sort_by(|a, b| {
        (a != &trivial)
            .cmp(&(b != &trivial))
            .then(a.degree_u64().cmp(&b.degree_u64()))
            .then_with(|| a.values.cmp(&b.values))
    });
    let degrees = irr.iter().map(|x| x.degree_u64().expect("integral degree")).collect();
    let labels = (0..irr.len()).map(|i| format!("r{i}")).collect();
    Ok(CharTable { labels, irreducibles: irr, degrees })
}

/// Restrictions of G's irreducibles to N's classes, deduplicated, in G's table order.
pub fn restrict_characters(g: &MatrixGroup, table: &CharTable, n: &Subgroup) -> Result<Vec<ClassFunction>> {
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    let mut out: Vec<ClassFunction> = Vec::new();
    for chi in &table.irreducibles {
        let r = ClassFunction::new(
            n.group
                .classes()
                .iter()
                .map(|c| chi.values[g.class_of(n.embedding[c.rep])].clone())
                .collect(),
        );
        if !out.contains(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Frobenius induction of a class function of N to G:
/// Ind φ(g) = [G:N]/|cl(g)| · Σ_{h ∈ cl(g) ∩ N} φ(h).
pub fn induce(g: &MatrixGroup, n: &Subgroup, phi: &ClassFunction) -> ClassFunction {
    let mut acc = vec![CycloNum::zero(); g.num_classes()];
    for (h, &amb) in n.embedding.iter().enumerate() {
        let c = g.class_of(amb);
        acc[c] = &acc[c] + &phi.values[n.group.class_of(h)];
    }
    let index = n.index_in(g);
    ClassFunction::new(
        acc.into_iter()
            .zip(g.classes())
            .map(|(v, c)| v.scale(&Rat::new(index.into(), c.size().into())))
            .collect(),
    )
}

/// Induced characters of N's irreducibles, deduplicated, in N's table order.
pub fn induce_characters(g: &MatrixGroup, n: &Subgroup, table: &CharTable) -> Result<Vec<ClassFunction>> {
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    let mut out: Vec<ClassFunction> = Vec::new();
    for phi in &table.irreducibles {
        let r = induce(g, n, phi);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Ambient classes meeting N: the index set Υ(N).
pub fn upsilon(g: &MatrixGroup, n: &Subgroup) -> Vec<usize> {
    n.ambient_classes(g)
}

/// Column orthogonality: Σ_i χ_i(a) conj χ_i(b) = δ_ab |C_G(a)|.
pub fn column_orthogonal(g: &MatrixGroup, table: &CharTable) -> bool {
    let k = g.num_classes();
    (0..k).all(|a| {
        (0..k).all(|b| {
            let s = table
                .irreducibles
                .iter()
                .fold(CycloNum::zero(), |acc, x| &acc + &(&x.values[a] * &x.values[b].conj()));
            let want = if a == b { (g.order() / g.classes()[a].size()) as i64 } else { 0 };
            s == CycloNum::from_int(want)
        })
    })
}

/// Row orthogonality ⟨χ_i, χ_j⟩ = δ_ij.
pub fn row_orthogonal(g: &MatrixGroup, table: &CharTable) -> bool {
    let irr = &table.irreducibles;
    (0..irr.len()).all(|i| {
        (0..irr.len()).all(|j| inner_product(g, &irr[i], &irr[j]) == CycloNum::from_int((i == j) as i64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, build_pair, GroupSpec, PairSpec};

    fn table_of(s: &str) -> (MatrixGroup, CharTable) {
        let g = build_group(&s.parse::<GroupSpec>().unwrap()).unwrap();
        let t = character_table(&g).unwrap();
        (g, t)
    }

    #[test]
    fn catalog_tables_are_orthogonal() {
        for s in ["C1", "C2", "C5", "D1", "D2", "D3", "D5", "T", "O", "I", "C3[1,1,1]", "C7[1,2,4]"] {
            let (g, t) = table_of(s);
            assert_eq!(t.len(), g.num_classes(), "{s}");
            assert!(row_orthogonal(&g, &t), "{s}");
            assert!(column_orthogonal(&g, &t), "{s}");
            assert_eq!(t.degrees.iter().map(|d| d * d).sum::<u64>(), g.order() as u64);
            assert_eq!(t.irreducibles[0], ClassFunction::trivial(&g));
        }
    }

    #[test]
    fn natural_character_values() {
        let g = build_group(&GroupSpec::Cyclic(6)).unwrap();
        let chi = natural_character(&g);
        for c in g.classes() {
            // the class of x^i is the single element x^i
            let i = (0..6).find(|&i| g.pow_idx(g.gen_mul()[0][0], i) == c.rep).unwrap();
            assert_eq!(chi.values[g.class_of(c.rep)], CycloNum::two_cos(6, i as i64));
        }
        let d = build_group(&GroupSpec::BinaryDihedral(4)).unwrap();
        let chi = natural_character(&d);
        let y = d.gen_mul()[0][1];
        assert!(chi.values[d.class_of(y)].is_zero());
        assert_eq!(chi.values[0], CycloNum::from_int(2));
    }

    #[test]
    fn exterior_powers_sl2() {
        let (g, _) = table_of("O");
        let chi = natural_character(&g);
        assert_eq!(exterior_power_character(&chi, 2, &g).unwrap(), ClassFunction::trivial(&g));
        assert_eq!(exterior_power_character(&chi, 1, &g).unwrap(), chi);
        assert!(exterior_power_character(&chi, 3, &g).is_err());
    }

    #[test]
    fn restriction_and_induction_counts() {
        for p in ["C2<D2", "T<O", "D2<T", "C6<D3", "D3<D6"] {
            let pair: PairSpec = p.parse().unwrap();
            let (g, n) = build_pair(&pair).unwrap();
            let tg = character_table(&g).unwrap();
            let tn = character_table(&n.group).unwrap();
            let res = restrict_characters(&g, &tg, &n).unwrap();
            let ind = induce_characters(&g, &n, &tn).unwrap();
            let ups = upsilon(&g, &n).len();
            assert_eq!(res.len(), ups, "{p}");
            assert_eq!(ind.len(), ups, "{p}");
            for (phi, ind_phi) in tn.irreducibles.iter().zip(tn.irreducibles.iter().map(|x| induce(&g, &n, x))) {
                assert_eq!(ind_phi.degree(), &phi.degree().scale(&Rat::from_integer(n.index_in(&g).into())));
            }
        }
        let (g, n) = build_pair(&"T<O".parse().unwrap()).unwrap();
        assert_eq!(upsilon(&g, &n).len(), 5);
    }
}
