//! Matches restricted and induced series up to the scale factors 1 and [G:N].

use slodowy::analysis::Built;
use slodowy::catalog::{pairs, Target};
use slodowy::series::{proportionality_check, series_by_determinant};

fn main() -> slodowy::Result<()> {
    for spec in pairs() {
        let Built::Pair(p) = Built::build(&Target::Pair(spec))? else { unreachable!() };
        let rest = series_by_determinant(2, &p.rest.mats)?;
        let ind = series_by_determinant(2, &p.ind.mats)?;
        let m = proportionality_check(&p, &rest, &ind)?;
        let pairs: Vec<String> = m.matches.iter().map(|v| format!("{}~{}x{}", v.rest, v.ind, v.factor)).collect();
        println!("{spec:<10} index {}: {}", m.index, pairs.join(" "));
    }
    Ok(())
}
