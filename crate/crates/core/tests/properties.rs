use proptest::prelude::*;

use slodowy::analysis::{engines, Built};
use slodowy::catalog::Target;
use slodowy::groups::GroupSpec;
use slodowy::mckay::{verify_transpose_symmetry, Side};
use slodowy::poly::IntPoly;
use slodowy::series::{a_poly, c_poly, chebyshev_at_joukowski, cyclic_closed_form, dicyclic_closed_form, tcheb, TchebKind};

fn group(spec: GroupSpec) -> Built {
    Built::build(&Target::Group(spec)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cyclic_three_routes(n in 1u32..=16) {
        let b = group(GroupSpec::Cyclic(n));
        let (sys, table) = b.system(Side::Plain);
        let e = engines(sys, table).unwrap();
        prop_assert_eq!(e.det.trivial(), e.molien.trivial());
        prop_assert_eq!(e.det.trivial(), &cyclic_closed_form(n as u64));
    }

    #[test]
    fn dicyclic_three_routes(n in 1u32..=10) {
        let b = group(GroupSpec::BinaryDihedral(n));
        let (sys, table) = b.system(Side::Plain);
        let e = engines(sys, table).unwrap();
        prop_assert_eq!(e.det.trivial(), e.molien.trivial());
        prop_assert_eq!(e.det.trivial(), &dicyclic_closed_form(n as u64));
    }

    #[test]
    fn sl3_cyclic_invariants(m in 1u32..=9, a in 0u32..9, b in 0u32..9) {
        let (a, b) = (a % m, b % m);
        let c = (2 * m - a - b) % m;
        let b = group(GroupSpec::SL3Cyclic { m, weights: [a, b, c] });
        let (sys, table) = b.system(Side::Plain);
        prop_assert!(verify_transpose_symmetry(sys).iter().all(|l| l.ok));
        let e = engines(sys, table).unwrap();
        for (x, y) in e.det.series.iter().zip(&e.molien.series) {
            prop_assert_eq!(x, y);
        }
        // graded pieces of C[x,y,z] have dimension C(k+2,2)
        let coeffs: Vec<Vec<i64>> = e.det.series.iter().map(|f| f.expand(16).unwrap().to_i64s().unwrap()).collect();
        for k in 0..16 {
            let total: i64 = coeffs.iter().zip(&sys.first().degrees).map(|(s, &d)| s[k] * d as i64).sum();
            prop_assert_eq!(total, ((k + 1) * (k + 2) / 2) as i64);
        }
    }

    #[test]
    fn chebyshev_joukowski(n in 1usize..40) {
        let t = chebyshev_at_joukowski(&tcheb(TchebKind::T, n).poly, n, 2).unwrap();
        prop_assert_eq!(t, c_poly(n - 1));
        let u = chebyshev_at_joukowski(&tcheb(TchebKind::U, n).poly, n, 1).unwrap();
        prop_assert_eq!(&u, &a_poly(n));
        // a_n is palindromic of degree 2n
        let mut rev = u.coeffs().to_vec();
        rev.reverse();
        prop_assert_eq!(IntPoly::new(rev), u);
    }
}
