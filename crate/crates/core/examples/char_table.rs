//! Character table of the binary octahedral group, with both orthogonality relations.

use slodowy::groups::{build_group, character_table, column_orthogonal, row_orthogonal, GroupSpec};

fn main() -> slodowy::Result<()> {
    let g = build_group(&GroupSpec::BinaryOctahedral)?;
    let table = character_table(&g)?;
    println!("order {}, {} classes", g.order(), g.num_classes());
    for (label, chi) in table.labels.iter().zip(&table.irreducibles) {
        let row: Vec<String> = chi.values.iter().map(|v| v.to_string()).collect();
        println!("{label:>4}: {}", row.join("  "));
    }
    let sum: u64 = table.degrees.iter().map(|d| d * d).sum();
    println!("sum of squared degrees {sum}");
    println!("rows orthogonal {}, columns orthogonal {}", row_orthogonal(&g, &table), column_orthogonal(&g, &table));
    Ok(())
}
