//! Tchebychev polynomials evaluated at (t + 1/t)/2 and the identity suite.

use slodowy::series::{a_poly, c_poly, chebyshev_at_joukowski, tcheb, tcheb_identity_suite, TchebKind};

fn main() -> slodowy::Result<()> {
    for n in 1..=6 {
        let t = tcheb(TchebKind::T, n);
        let u = tcheb(TchebKind::U, n);
        println!("T_{n} = {}   U_{n} = {}", t.poly, u.poly);
        println!("  2t^{n} T_{n}(J) = {}", chebyshev_at_joukowski(&t.poly, n, 2)?);
        println!("  c_{} = {}   a_{n} = {}", n - 1, c_poly(n - 1), a_poly(n));
    }
    let lines = tcheb_identity_suite();
    let failed = lines.iter().filter(|l| !l.ok).count();
    println!("{} identities checked, {failed} failed", lines.len());
    Ok(())
}
