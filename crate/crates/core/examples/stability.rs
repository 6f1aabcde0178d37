//! Syzygy bundle slopes and the subset-gcd stability test.

use togliatti::stability::{slope, stability_class, stability_oracle, subsheaf_slope};
use togliatti::MonomialIdeal;

fn main() -> togliatti::Result<()> {
    let i = MonomialIdeal::parse_inline("x0^5,x1^5,x2^5,x0^4*x1", None)?;
    // The two generators divisible by x0^4.
    let j: Vec<_> = i.generators().iter().filter(|g| g.exponents()[0] >= 4).cloned().collect();
    println!("slope of E = {}, slope of the subsheaf = {}", slope(&i)?, subsheaf_slope(&i, &j)?);

    for spec in [
        "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2",
        "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^3*x2,x0*x1*x2^3",
        "x0^5,x1^5,x2^5,x0^4*x1,x0^4*x2",
    ] {
        let ideal = MonomialIdeal::parse_inline(spec, None)?;
        let fast = stability_class(&ideal)?;
        let full = stability_oracle(&ideal)?;
        assert_eq!(fast.verdict, full.verdict);
        println!("{ideal}: {:?}, min value {:?}", fast.verdict, fast.min_value());
    }
    Ok(())
}
