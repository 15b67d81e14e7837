//! Closed forms for the affine types: invariants, quantum Cartan determinants and exponent products.

use slodowy::mckay::{affine_type, types_with_nodes, AffineFamily};
use slodowy::series::{closed_form_cartan_det, closed_form_text, exponent_closed_form};

fn main() -> slodowy::Result<()> {
    for n in 2..=9 {
        for ty in types_with_nodes(n) {
            let exps = match exponent_closed_form(&ty) {
                Some(f) => f?.to_string(),
                None => "-".into(),
            };
            println!("{:<8} {:<28} det {}  exps {exps}", ty.tag, closed_form_text(&ty), closed_form_cartan_det(&ty));
        }
    }
    let e8 = affine_type(AffineFamily::E8);
    println!("{} finite exponents {:?}, h = {}", e8.finite_tag, e8.finite_exponents, e8.finite_h);
    Ok(())
}
