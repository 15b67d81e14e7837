//! Poincaré series of every module of the binary icosahedral group, by the determinant route.

use slodowy::mckay::GroupData;
use slodowy::series::series_by_determinant;

fn main() -> slodowy::Result<()> {
    let g = GroupData::build(&"I".parse()?)?;
    let bundle = series_by_determinant(2, &g.system.mats)?;
    for (label, f) in bundle.labels.iter().zip(&bundle.series) {
        println!("{label:>4}: {}", f.expand(31)?.pretty());
    }
    println!("invariants: {}", bundle.trivial());
    Ok(())
}
