//! Degree d-1 forms through the inverse system, compared with hand-written ones.

use togliatti::togliatti::{certificate_form, compare_with_printed, kernel_dimension};
use togliatti::MonomialIdeal;

fn main() -> togliatti::Result<()> {
    let quadric = MonomialIdeal::parse_inline(
        "x0^3,x0^2*x1,x0*x1^2,x1^3,x2^3,x2^2*x3,x2*x3^2,x3^3",
        None,
    )?;
    println!("kernel dimension {}", kernel_dimension(&quadric));
    println!("Q = {}", certificate_form(&quadric)?);

    let cubic = MonomialIdeal::parse_inline("x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2", None)?;
    let f = certificate_form(&cubic)?;
    let given = "(x0+x1-3x2)(3x0^2-10x0x1+3x1^2-4x0x2-4x1x2+x2^2)";
    let cmp = compare_with_printed(&f, given)?;
    println!("F = {f}");
    println!("relabelling {:?}, sign {}, {} mismatches", cmp.permutation, cmp.sign, cmp.mismatches.len());
    for m in &cmp.mismatches {
        println!("  {}: computed {}, given {}", m.monomial, m.computed, m.printed);
    }
    Ok(())
}
