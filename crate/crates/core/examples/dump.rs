//! Writes the JSON dump of a target (default pair:D2<T) and checks that it round-trips.

use slodowy::dump::{dump_target, round_trip, to_json};

fn main() -> slodowy::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "pair:D2<T".into());
    let json = to_json(&dump_target(&name.parse()?)?)?;
    eprintln!("round trip ok: {}", round_trip(&json)?);
    print!("{json}");
    Ok(())
}
