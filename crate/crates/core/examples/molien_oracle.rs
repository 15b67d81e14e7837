//! Cross-checks the determinant route against Molien's formula on both sides of each pair.

use slodowy::analysis::{engines, Built};
use slodowy::catalog::pairs;
use slodowy::catalog::Target;

fn main() -> slodowy::Result<()> {
    for spec in pairs() {
        let b = Built::build(&Target::Pair(spec))?;
        for (sys, table) in b.systems() {
            let e = engines(sys, table)?;
            let agree = e.det.series == e.molien.series;
            println!("{:<16} {:<5} {}", sys.name, if agree { "agree" } else { "DIFFER" }, e.det.trivial());
        }
    }
    Ok(())
}
