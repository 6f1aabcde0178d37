//! Orbit representatives of minimal smooth systems of plane quintics with six generators.

use togliatti::monomial::is_trivial;
use togliatti::survey::{enumerate, raw_subset_count, EnumerationConfig, Filter};

fn main() -> togliatti::Result<()> {
    let (n, d, extra) = (2, 5, 3);
    println!("{} raw subsets", raw_subset_count(n, d, extra));
    let found = enumerate(n, d, extra, &[Filter::Minimal, Filter::Smooth], &EnumerationConfig::default())?;
    for ideal in &found {
        let kind = if is_trivial(ideal).is_some() { "trivial" } else { "non-trivial" };
        println!("{ideal}  {kind}");
    }
    Ok(())
}
