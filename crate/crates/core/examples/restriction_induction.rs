//! Tensor matrices of the restricted and induced module systems for T inside O.

use slodowy::mckay::PairData;

fn main() -> slodowy::Result<()> {
    let p = PairData::build(&"T<O".parse()?)?;
    for sys in [&p.rest, &p.ind] {
        let ty = sys.classify()?;
        println!("{} ({} modules, type {})", sys.name, sys.modules.len(), ty.tag);
        let m = sys.first();
        for ((label, deg), row) in m.labels.iter().zip(&m.degrees).zip(&m.entries) {
            println!("  {label:>5} deg {deg:>2}: {row:?}");
        }
    }
    Ok(())
}
