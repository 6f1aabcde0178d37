//! Runs registered classification targets by name (default: a quick subset).
//!
//!     cargo run --release --example reproduce -- gap-2n3-n3d4

use togliatti::survey::reproduce;

fn main() -> togliatti::Result<()> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["certificate-f3", "thm-3-main-n2d5", "interval-n2d6"].map(String::from).to_vec();
    }
    for name in names {
        let v = reproduce(&name)?;
        println!("{} {}", if v.passed { "PASS" } else { "FAIL" }, v.name);
        for diff in v.checks.iter().flat_map(|c| &c.diffs) {
            println!("  {diff}");
        }
    }
    Ok(())
}
