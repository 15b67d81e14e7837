//! Cyclic subgroups of SL3: tensor matrices for both exterior powers and their series.

use slodowy::analysis::{engines, Built};
use slodowy::catalog::{sl3_groups, Target};
use slodowy::mckay::verify_transpose_symmetry;

fn main() -> slodowy::Result<()> {
    for spec in sl3_groups() {
        let b = Built::build(&Target::Group(spec))?;
        let (sys, table) = b.systems()[0];
        let transpose = verify_transpose_symmetry(sys).iter().all(|l| l.ok);
        let e = engines(sys, table)?;
        println!("{} order {}: A_1 = A_2^T {transpose}", sys.name, sys.group.order());
        println!("  invariants {}", e.det.trivial());
        println!("  expanded   {}", e.det.trivial().expand(13)?.pretty());
        println!("  molien agrees {}", e.det.series == e.molien.series);
    }
    Ok(())
}
