//! Ranks of multiplication by x0 + ... + xn, degree by degree.

use togliatti::lefschetz::{hyperplane_dependence, wlp_report};
use togliatti::togliatti::kernel_dimension;
use togliatti::MonomialIdeal;

fn main() -> togliatti::Result<()> {
    for spec in ["x0^3,x1^3,x2^3,x0*x1*x2", "x0^3,x1^3,x2^3,x0^2*x1", "x0^4,x1^4,x2^4,x3^4,x0^3*x1,x0^3*x2,x0^3*x3"] {
        let ideal = MonomialIdeal::parse_inline(spec, None)?;
        let w = wlp_report(&ideal);
        println!("{ideal}");
        for r in &w.degrees {
            println!(
                "  j={} dims {} -> {} rank {}{}",
                r.j,
                r.dim_source,
                r.dim_target,
                r.rank,
                if r.maximal { "" } else { "  (not maximal)" }
            );
        }
        println!(
            "  evaluation kernel {}, restriction dependence {}",
            kernel_dimension(&ideal),
            hyperplane_dependence(&ideal).is_some()
        );
    }
    Ok(())
}
