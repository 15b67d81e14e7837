use std::collections::{HashMap, VecDeque};

use num_integer::Integer;

use super::matrix::{quaternion, Mat, MatKey};
use super::spec::{GroupSpec, PairSpec};
use crate::arith::{rat, CycloNum, Rat};
use crate::error::{Error, Result};

/// A conjugacy class: minimal member index plus all member indices (sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub rep: usize,
    pub members: Vec<usize>,
}

impl Class {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite matrix group with its full element list and class structure.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    name: String,
    dim: usize,
    conductor: u32,
    generators: Vec<Mat>,
    elements: Vec<Mat>,
    /// `gen_mul[x][s]` is the index of elements[x] · generators[s].
    gen_mul: Vec<Vec<usize>>,
    index: HashMap<MatKey, usize>,
    inverse: Vec<usize>,
    orders: Vec<u32>,
    classes: Vec<Class>,
    class_of: Vec<usize>,
}

impl MatrixGroup {
    /// Closes the generators under multiplication; `expected` bounds the search.
    pub fn generate(name: &str, dim: usize, conductor: u32, generators: Vec<Mat>, expected: usize) -> Result<Self> {
        let limit = 10 * expected.max(1);
        let id = Mat::identity(dim);
        let mut index = HashMap::new();
        index.insert(id.key(conductor), 0);
        let mut elements = vec![id];
        let mut gen_mul: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mut row = Vec::with_capacity(generators.len());
            for g in &generators {
                let y = elements[x].mul(g);
                let key = y.key(conductor);
                let idx = match index.get(&key) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= limit {
                            return Err(Error::BadGenerators(limit));
                        }
                        let i = elements.len();
                        index.insert(key, i);
                        elements.push(y);
                        queue.push_back(i);
                        i
                    }
                };
                row.push(idx);
            }
            if gen_mul.len() <= x {
                gen_mul.resize(x + 1, Vec::new());
            }
            gen_mul[x] = row;
        }
        let mut group = MatrixGroup {
            name: name.to_string(),
            dim,
            conductor,
            generators,
            elements,
            gen_mul,
            index,
            inverse: Vec::new(),
            orders: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        group.inverse = (0..group.order())
            .map(|i| group.lookup(&group.elements[i].inverse()).expect("inverse lies in the group"))
            .collect();
        group.orders = (0..group.order()).map(|i| group.compute_order(i)).collect();
        group.compute_classes();
        Ok(group)
    }

    fn compute_order(&self, i: usize) -> u32 {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.mul_idx(cur, i);
            k += 1;
        }
        k
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let gen_idx: Vec<usize> = (0..self.generators.len()).map(|s| self.gen_mul[0][s]).collect();
        let mut class_id = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_id[start] != usize::MAX {
                continue;
            }
            let c = raw.len();
            let mut members = vec![start];
            class_id[start] = c;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for &s in &gen_idx {
                    let y = self.mul_idx(self.mul_idx(s, x), self.inverse[s]);
                    if class_id[y] == usize::MAX {
                        class_id[y] = c;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            raw.push(members);
        }
        raw.sort_by_key(|m| (self.orders[m[0]], m[0]));
        self.class_of = vec![0; n];
        for (c, m) in raw.iter().enumerate() {
            for &x in m {
                self.class_of[x] = c;
            }
        }
        self.classes = raw.into_iter().map(|members| Class { rep: members[0], members }).collect();
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Mat {
        &self.elements[i]
    }

    pub fn gen_mul(&self) -> &[Vec<usize>] {
        &self.gen_mul
    }

    pub fn element_order(&self, i: usize) -> u32 {
        self.orders[i]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1, |l, &o| l.lcm(&o))
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Class::size).collect()
    }

    pub fn lookup(&self, m: &Mat) -> Option<usize> {
        self.index.get(&m.key(self.conductor)).copied()
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.lookup(&self.elements[a].mul(&self.elements[b])).expect("group is closed")
    }

    pub fn pow_idx(&self, a: usize, k: u32) -> usize {
        let k = k % self.orders[a];
        let mut cur = 0;
        for _ in 0..k {
            cur = self.mul_idx(cur, a);
        }
        cur
    }

    /// Class containing g^k for g in class c.
    pub fn power_class(&self, c: usize, k: u32) -> usize {
        self.class_of[self.pow_idx(self.classes[c].rep, k)]
    }

    /// Class containing the inverses of class c.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of[self.inverse[self.classes[c].rep]]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }
}

/// A subgroup whose elements are literally matrices of the ambient group.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: MatrixGroup,
    /// `embedding[i]` is the ambient index of the subgroup's element i.
    pub embedding: Vec<usize>,
}

impl Subgroup {
    pub fn new(ambient: &MatrixGroup, name: &str, generators: Vec<Mat>, expected: usize) -> Result<Self> {
        let group = MatrixGroup::generate(name, ambient.dim(), ambient.conductor(), generators, expected)?;
        let embedding = group
            .elements()
            .iter()
            .map(|m| ambient.lookup(m).ok_or(Error::NotASubgroup))
            .collect::<Result<Vec<_>>>()?;
        let sub = Subgroup { group, embedding };
        if !sub.is_normal_in(ambient) {
            return Err(Error::NotNormal);
        }
        Ok(sub)
    }

    /// Every ambient conjugate g n g⁻¹ stays inside the subgroup.
    pub fn is_normal_in(&self, ambient: &MatrixGroup) -> bool {
        let members: std::collections::HashSet<usize> = self.embedding.iter().copied().collect();
        let gens: Vec<usize> = (0..ambient.generators().len()).map(|s| ambient.gen_mul()[0][s]).collect();
        self.embedding.iter().all(|&n| {
            gens.iter().all(|&g| {
                let c = ambient.mul_idx(ambient.mul_idx(g, n), ambient.inverse_of(g));
                members.contains(&c)
            })
        })
    }

    pub fn index_in(&self, ambient: &MatrixGroup) -> usize {
        ambient.order() / self.group.order()
    }

    /// Ambient classes that meet the subgroup, in ambient class order.
    pub fn ambient_classes(&self, ambient: &MatrixGroup) -> Vec<usize> {
        let mut cs: Vec<usize> = self.embedding.iter().map(|&g| ambient.class_of(g)).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }
}

fn half() -> Rat {
    Rat::new(1.into(), 2.into())
}

fn quat_units() -> (Mat, Mat, Mat) {
    let (o, z) = (CycloNum::one(), CycloNum::zero());
    let i = quaternion(&z, &o, &z, &z);
    let j = quaternion(&z, &z, &o, &z);
    // ω = (−1 + i + j + k)/2, of order 3.
    let h = CycloNum::from_rat(half());
    let omega = quaternion(&-h.clone(), &h, &h, &h);
    (i, j, omega)
}

/// Generators of the matrix realization for a catalog spec.
pub fn generators(spec: &GroupSpec) -> Vec<Mat> {
    match spec {
        GroupSpec::Cyclic(n) => vec![Mat::diag(vec![CycloNum::zeta(*n, -1), CycloNum::zeta(*n, 1)])],
        GroupSpec::BinaryDihedral(n) => {
            let x = Mat::diag(vec![CycloNum::zeta(2 * n, -1), CycloNum::zeta(2 * n, 1)]);
            let i = CycloNum::zeta(4, 1);
            let y = Mat::new(2, vec![CycloNum::zero(), i.clone(), i, CycloNum::zero()]);
            vec![x, y]
        }
        GroupSpec::BinaryTetrahedral => {
            let (i, j, w) = quat_units();
            vec![i, j, w]
        }
        GroupSpec::BinaryOctahedral => {
            let (i, j, w) = quat_units();
            // (1 + i)/√2 with √2 = ζ₈ + ζ₈⁷.
            let s = CycloNum::two_cos(8, 1).scale(&half());
            let z = CycloNum::zero();
            vec![i, j, w, quaternion(&s, &s, &z, &z)]
        }
        GroupSpec::BinaryIcosahedral => {
            let (i, j, w) = quat_units();
            // (φ + φ⁻¹ i + j)/2 with φ⁻¹ = ζ₅ + ζ₅⁴, φ = 1 + φ⁻¹.
            let phi_inv = CycloNum::two_cos(5, 1);
            let phi = &CycloNum::one() + &phi_inv;
            let h = half();
            let g = quaternion(&phi.scale(&h), &phi_inv.scale(&h), &CycloNum::from_rat(h.clone()), &CycloNum::zero());
            vec![i, j, w, g]
        }
        GroupSpec::SL3Cyclic { m, weights } => {
            vec![Mat::diag(weights.iter().map(|&w| CycloNum::zeta(*m, w as i64)).collect())]
        }
    }
}

/// Builds the matrix group of a catalog spec and checks its order.
pub fn build_group(spec: &GroupSpec) -> Result<MatrixGroup> {
    spec.validate()?;
    let expected = spec.expected_order();
    let g = MatrixGroup::generate(&spec.to_string(), spec.dim(), spec.conductor(), generators(spec), expected)?;
    if g.order() != expected {
        return Err(Error::BadGenerators(g.order()));
    }
    Ok(g)
}

/// Builds the ambient group and the normal subgroup, realized inside the ambient matrices.
pub fn build_pair(pair: &PairSpec) -> Result<(MatrixGroup, Subgroup)> {
    pair.validate()?;
    let g = build_group(&pair.ambient())?;
    let gens = g.generators().to_vec();
    let sub_gens = match pair {
        PairSpec::DihedralInDihedral(_) => vec![gens[0].mul(&gens[0]), gens[1].clone()],
        PairSpec::CyclicInDihedral(_) => vec![gens[0].clone()],
        PairSpec::CyclicInDoubleDihedral(_) => vec![gens[0].mul(&gens[0])],
        PairSpec::TetrahedralInOctahedral => gens[..3].to_vec(),
        PairSpec::QuaternionInTetrahedral => gens[..2].to_vec(),
    };
    let sub_spec = pair.sub();
    let n = Subgroup::new(&g, &sub_spec.to_string(), sub_gens, sub_spec.expected_order())?;
    if n.group.order() != sub_spec.expected_order() {
        return Err(Error::BadGenerators(n.group.order()));
    }
    Ok((g, n))
}

/// Sanity helper for tests: every element has determinant one.
pub fn all_unimodular(g: &MatrixGroup) -> bool {
    g.elements().iter().all(|m| m.det() == CycloNum::from_rat(rat(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_class_counts() {
        let cases = [
            (GroupSpec::Cyclic(5), 5, 5),
            (GroupSpec::BinaryDihedral(2), 8, 5),
            (GroupSpec::BinaryDihedral(3), 12, 6),
            (GroupSpec::BinaryTetrahedral, 24, 7),
            (GroupSpec::BinaryOctahedral, 48, 8),
            (GroupSpec::BinaryIcosahedral, 120, 9),
            (GroupSpec::SL3Cyclic { m: 3, weights: [1, 1, 1] }, 3, 3),
        ];
        for (spec, order, classes) in cases {
            let g = build_group(&spec).unwrap();
            assert_eq!(g.order(), order, "{spec}");
            assert_eq!(g.num_classes(), classes, "{spec}");
            assert_eq!(g.class_sizes().iter().sum::<usize>(), order);
            assert!(all_unimodular(&g));
            assert_eq!(g.classes()[0].rep, 0);
            for c in g.classes() {
                assert_eq!(c.rep, *c.members.iter().min().unwrap());
            }
        }
    }

    #[test]
    fn bad_generators_detected() {
        // An element of infinite order: diag(2, 1/2).
        let two = CycloNum::from_int(2);
        let m = Mat::diag(vec![two.clone(), two.inverse().unwrap()]);
        assert!(matches!(MatrixGroup::generate("bad", 2, 1, vec![m], 4), Err(Error::BadGenerators(_))));
    }

    #[test]
    fn pairs_are_normal() {
        for p in ["D2<D4", "C4<D2", "C2<D2", "C6<D6", "T<O", "D2<T"] {
            let pair: PairSpec = p.parse().unwrap();
            let (g, n) = build_pair(&pair).unwrap();
            assert!(n.is_normal_in(&g));
            assert_eq!(n.group.order() * n.index_in(&g), g.order());
        }
    }
}
