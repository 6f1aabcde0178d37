//! Smoothness of the toric surface of a plane system, with an SVG of the polygon.
//!
//!     cargo run --example smoothness_polygon -- out.svg

use togliatti::smoothness::{is_smooth, polygon_svg};
use togliatti::MonomialIdeal;

fn main() -> togliatti::Result<()> {
    let smooth = MonomialIdeal::parse_inline("x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^3*x2,x0*x1*x2^3", None)?;
    let singular = MonomialIdeal::parse_inline("x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2", None)?;
    for ideal in [&smooth, &singular] {
        let r = is_smooth(ideal);
        println!("{ideal}: smooth = {}, {} vertices", r.is_smooth, r.num_vertices);
        for f in &r.failures {
            println!("  {:?}: {}", f.condition, f.detail);
        }
    }
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, polygon_svg(&singular)?)?;
        println!("wrote {path}");
    }
    Ok(())
}
