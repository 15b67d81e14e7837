//! Runs every verification suite over the catalog and prints a summary per suite.

use slodowy::report::{Context, Suite};

fn main() -> slodowy::Result<()> {
    let ctx = Context::catalog()?;
    for suite in Suite::ALL {
        let report = ctx.run(suite);
        println!("{:<16} {}", suite.name(), report.summary());
        for o in report.failures() {
            println!("  {o}");
        }
    }
    Ok(())
}
