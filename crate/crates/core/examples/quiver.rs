//! DOT quivers for a few McKay graphs. Pipe into `dot -Tsvg` to draw them.

use slodowy::mckay::{quiver_emit, GroupData, PairData, Side};

fn main() -> slodowy::Result<()> {
    let e8 = GroupData::build(&"I".parse()?)?;
    print!("{}", quiver_emit(e8.system.first(), "I"));
    let g2 = PairData::build(&"D2<T".parse()?)?;
    for side in [Side::Restriction, Side::Induction] {
        let sys = g2.side(side);
        print!("{}", quiver_emit(sys.first(), &sys.name));
    }
    Ok(())
}
