//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest harness.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use slodowy::analysis::{engines, Built, Engines};
use slodowy::catalog::{self, Target};
use slodowy::groups::{GroupSpec, PairSpec};
use slodowy::mckay::Side;
use slodowy::poly::{IntPoly, RatFun};
use slodowy::report::{Context, Status, Suite};
use slodowy::series::{
    closed_form_cartan_det, closed_form_invariants, dihedral_closed_forms, molien_bundle, proportionality_check,
    root_lengths, series_by_determinant,
};

type Q = BigRational;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass() -> Outcome {
    Outcome { ok: true, detail: String::new() }
}

fn fail(d: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: d.into() }
}

fn expand(f: &RatFun, order: usize) -> Vec<i64> {
    f.expand(order).unwrap().to_i64s().unwrap()
}

fn dense(terms: &[(usize, i64)], order: usize) -> Vec<i64> {
    let mut v = vec![0; order];
    for &(k, c) in terms {
        v[k] = c;
    }
    v
}

fn built(t: &str) -> Built {
    Built::build(&t.parse::<Target>().unwrap()).unwrap()
}

fn both_engines(b: &Built, side: Side) -> Engines {
    let (sys, table) = b.system(side);
    engines(sys, table).unwrap()
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    let mut golden = |name: &str, side: Side, want: Vec<i64>| {
        let b = built(name);
        let e = both_engines(&b, side);
        for (engine, f) in [("determinant", e.det.trivial()), ("molien", e.molien.trivial())] {
            let got = expand(f, want.len());
            if got != want {
                bad.push(format!("{name} {engine}: {got:?}"));
            }
        }
    };
    let t_o = dense(&[(0, 1), (6, 1), (8, 1), (12, 2), (14, 1), (16, 1), (18, 2)], 19);
    golden("pair:T<O", Side::Restriction, t_o.clone());
    golden("pair:T<O", Side::Induction, t_o.clone());
    let d2_t = dense(&[(0, 1), (4, 2), (6, 1), (8, 3), (10, 2), (12, 4), (14, 3), (16, 5), (18, 4)], 19);
    golden("pair:D2<T", Side::Restriction, d2_t.clone());
    golden("pair:D2<T", Side::Induction, d2_t);
    let c2_d2: Vec<(usize, i64)> = (0..10).map(|k| (2 * k, 2 * k as i64 + 1)).collect();
    golden("pair:C2<D2", Side::Restriction, dense(&c2_d2, 19));
    golden("pair:C2<D2", Side::Induction, dense(&c2_d2, 19));
    golden("group:T", Side::Plain, t_o);
    golden("group:O", Side::Plain, dense(&[(0, 1), (8, 1), (12, 1), (16, 1), (18, 1)], 19));
    golden("group:I", Side::Plain, dense(&[(0, 1), (12, 1), (20, 1)], 21));
    // displayed quotients for the exceptional groups
    let quotients = [
        ("group:T", [1, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 1].as_slice(), [1, 0, 1, 0, 0, 0, -2, 0, -2, 0, 0, 0, 1, 0, 1].as_slice()),
        ("group:O", &[1, 0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1], &[1, 0, 1, 0, 0, 0, -1, 0, -2, 0, -1, 0, 0, 0, 1, 0, 1]),
        ("group:I", &[1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1], &[1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1]),
    ];
    for (name, num, den) in quotients {
        let want = RatFun::new(IntPoly::from_i64s(num), IntPoly::from_i64s(den)).unwrap();
        let e = both_engines(&built(name), Side::Plain);
        if *e.det.trivial() != want {
            bad.push(format!("{name} quotient {}", e.det.trivial()));
        }
    }
    if bad.is_empty() {
        pass()
    } else {
        fail(bad.join("; "))
    }
}

fn sl2_targets() -> Vec<Target> {
    catalog::targets()
        .into_iter()
        .filter(|t| !matches!(t, Target::Group(GroupSpec::SL3Cyclic { .. })))
        .collect()
}

fn criterion_2(ctx: &Context) -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (b, sys, _, e) in ctx.systems() {
        if matches!(b.target(), Target::Group(GroupSpec::SL3Cyclic { .. })) {
            continue;
        }
        let Some(ty) = sys.classify().ok() else {
            bad.push(format!("{} unclassified", sys.name));
            continue;
        };
        let det = series_by_determinant(2, &sys.mats).unwrap();
        count += 1;
        if *det.trivial() != closed_form_invariants(&ty) || det.trivial() != e.det.trivial() {
            bad.push(format!("{} ({})", sys.name, ty.tag));
        }
    }
    let expected = sl2_targets().iter().map(|t| if matches!(t, Target::Pair(_)) { 2 } else { 1 }).sum::<usize>();
    if count != expected {
        bad.push(format!("checked {count} of {expected} systems"));
    }
    if bad.is_empty() {
        Outcome { ok: true, detail: format!("{count} systems") }
    } else {
        fail(bad.join("; "))
    }
}

fn suite_outcome(ctx: &Context, suites: &[Suite]) -> Outcome {
    let mut fails = Vec::new();
    let mut notes = 0;
    let mut passes = 0;
    for &s in suites {
        for o in ctx.run(s).outcomes {
            match o.status {
                Status::Pass => passes += 1,
                Status::Annotated => notes += 1,
                Status::Fail => fails.push(o.to_string()),
            }
        }
    }
    if fails.is_empty() {
        Outcome { ok: true, detail: format!("{passes} checks, {notes} annotated") }
    } else {
        fail(fails.join("; "))
    }
}

/// Determinant at a rational point by exact Gaussian elimination.
fn det_at(m: &[Vec<i64>], t: &Q) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = Q::from_integer(BigInt::from(2 * (i == j) as i64 - m[i][j]));
                    let diag = if i == j { Q::one() + t * t } else { Q::zero() };
                    diag - t * x
                })
                .collect()
        })
        .collect();
    let mut det = Q::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return Q::zero() };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

fn eval(p: &IntPoly, t: &Q) -> Q {
    p.coeffs().iter().rev().fold(Q::zero(), |acc, c| acc * t + Q::from_integer(c.clone()))
}

fn criterion_4(ctx: &Context) -> Outcome {
    let mut bad = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (_, _, _, e) in ctx.systems() {
        let Some(ty) = &e.ty else { continue };
        if !seen.insert(ty.tag.clone()) {
            continue;
        }
        let closed = closed_form_cartan_det(ty);
        if !closed.den().is_one() {
            bad.push(format!("{}: closed form not a polynomial", ty.tag));
            continue;
        }
        // degrees are at most 2·nodes, so 2·nodes+1 points determine the polynomial
        let points = 2 * ty.nodes() + 3;
        let agree = (1..=points as i64).all(|k| {
            let t = Q::new(BigInt::from(k), BigInt::from(7));
            det_at(&ty.cartan, &t) == eval(closed.num(), &t)
        });
        if !agree {
            bad.push(ty.tag.clone());
        }
    }
    if bad.is_empty() {
        Outcome { ok: true, detail: format!("{} affine types", seen.len()) }
    } else {
        fail(bad.join("; "))
    }
}

fn proportionality_pairs() -> Vec<PairSpec> {
    let mut v: Vec<PairSpec> = (2..=6).map(PairSpec::DihedralInDihedral).collect();
    v.extend((2..=6).map(PairSpec::CyclicInDihedral));
    v.extend((1..=6).map(PairSpec::CyclicInDoubleDihedral));
    v.extend([PairSpec::TetrahedralInOctahedral, PairSpec::QuaternionInTetrahedral]);
    v
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let mut short = 0;
    for spec in proportionality_pairs() {
        let Built::Pair(p) = Built::build(&Target::Pair(spec)).unwrap() else { unreachable!() };
        // Molien bundles: independent of the Cramer system
        let rest = molien_bundle(&p.rest, &p.table_n).unwrap();
        let ind = molien_bundle(&p.ind, &p.table_g).unwrap();
        match proportionality_check(&p, &rest, &ind) {
            Ok(m) => {
                let index = (p.g.order() / p.n.group.order()) as u64;
                let lengths = root_lengths(&slodowy::mckay::cartan_of(p.ind.first()));
                let max = lengths.iter().max().unwrap().to_string();
                for v in &m.matches {
                    let long = v.ind_length == max;
                    let want = match spec {
                        PairSpec::CyclicInDoubleDihedral(_) => if v.ind == "ind0" { 1 } else { 2 },
                        _ => if long { 1 } else { index },
                    };
                    if v.factor != want {
                        bad.push(format!("{spec} {}", v.rest));
                    }
                    if v.factor != 1 {
                        short += 1;
                    }
                }
                if m.matches[0].rest != "res0" || m.matches[0].ind != "ind0" || m.matches[0].factor != 1 {
                    bad.push(format!("{spec}: trivial labels"));
                }
            }
            Err(e) => bad.push(e.to_string()),
        }
    }
    if bad.is_empty() {
        Outcome { ok: true, detail: format!("{} pairs, {short} scaled vertices", proportionality_pairs().len()) }
    } else {
        fail(bad.join("; "))
    }
}

fn criterion_8(ctx: &Context) -> Outcome {
    let tcheb = suite_outcome(ctx, &[Suite::Tcheb]);
    if !tcheb.ok {
        return tcheb;
    }
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 3..=8u32 {
        let mut specs = vec![PairSpec::CyclicInDihedral(n), PairSpec::CyclicInDoubleDihedral(n)];
        specs.push(PairSpec::DihedralInDihedral(n - 1));
        for spec in specs {
            let b = Built::build(&Target::Pair(spec)).unwrap();
            let e = both_engines(&b, Side::Restriction);
            count += 1;
            if dihedral_closed_forms(&spec).as_ref() != Some(e.det.trivial()) {
                bad.push(spec.to_string());
            }
        }
    }
    if bad.is_empty() {
        Outcome { ok: true, detail: format!("{}; {count} dihedral closed forms", tcheb.detail) }
    } else {
        fail(bad.join("; "))
    }
}

fn criterion_9(ctx: &Context) -> Outcome {
    const K: usize = 40;
    let mut bad = Vec::new();
    let mut count = 0;
    for (b, sys, table, _) in ctx.systems() {
        if !matches!(b, Built::Group(_)) {
            continue;
        }
        count += 1;
        let bundle = molien_bundle(sys, table).unwrap();
        let series: Vec<Vec<i64>> = bundle.series.iter().map(|f| expand(f, K + 1)).collect();
        let n = sys.dim() as i64;
        for k in 0..=K as i64 {
            let total: i64 = series.iter().zip(&sys.first().degrees).map(|(s, &d)| s[k as usize] * d as i64).sum();
            let want = if n == 2 { k + 1 } else { (k + 1) * (k + 2) / 2 };
            if total != want {
                bad.push(format!("{} k={k}: {total}", sys.name));
                break;
            }
        }
    }
    if bad.is_empty() {
        Outcome { ok: true, detail: format!("{count} groups, k <= {K}") }
    } else {
        fail(bad.join("; "))
    }
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if took > budget {
        o.ok = false;
        o.detail = format!("{} over budget {budget:?}", o.detail);
    }
    (o, took)
}

fn main() {
    let start = Instant::now();
    let ctx = Context::catalog().expect("catalog builds");
    let build = start.elapsed();
    let secs = Duration::from_secs;
    let results = vec![
        ("1 golden coefficients", timed(secs(5), criterion_1)),
        ("2 Coxeter closed forms", timed(secs(30), || criterion_2(&ctx))),
        ("3 four-way engine agreement", timed(secs(60), || suite_outcome(&ctx, &[Suite::Fourway]))),
        ("4 quantum affine Cartan determinants", timed(secs(60), || criterion_4(&ctx))),
        ("5 lemma suites", timed(secs(60), || suite_outcome(&ctx, &[Suite::Orthogonality, Suite::Eigen, Suite::Transpose]))),
        ("6 exponent realization", timed(secs(60), || suite_outcome(&ctx, &[Suite::Exponents]))),
        ("7 proportionality", timed(secs(60), criterion_7)),
        ("8 Tchebychev and dihedral closed forms", timed(secs(60), || criterion_8(&ctx))),
        ("9 dimension sum rule", timed(secs(60), || criterion_9(&ctx))),
    ];
    println!("catalog built in {:.2}s", build.as_secs_f64());
    let mut failed = 0;
    for (name, (o, took)) in &results {
        let word = if o.ok { "PASS" } else { "FAIL" };
        if !o.ok {
            failed += 1;
        }
        println!("{word} criterion {name} [{:.2}s] {}", took.as_secs_f64(), o.detail);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
