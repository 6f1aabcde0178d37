//! Full report for an ideal given on the command line.
//!
//!     cargo run --example analyze_ideal -- "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2"

use togliatti::report::{analyze, Checks};
use togliatti::MonomialIdeal;

fn main() -> togliatti::Result<()> {
    let spec = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2".to_string());
    let ideal = MonomialIdeal::parse_inline(&spec, None)?;
    print!("{}", analyze(&ideal, Checks::ALL).to_text());
    Ok(())
}
