//! Known values of the least and largest generator counts, checked by search where cheap.

use togliatti::survey::bounds::{cubic_partition_minimum, printed_cubic_expression, verify_bounds};
use togliatti::survey::{mu_bounds, EnumerationConfig};

fn main() -> togliatti::Result<()> {
    for (n, d) in [(2, 5), (3, 4), (4, 2), (4, 3)] {
        let mut b = mu_bounds(n, d)?;
        let found = verify_bounds(&mut b, &EnumerationConfig::default())?;
        println!("(n, d) = ({n}, {d}): {}", serde_json::to_string(&b)?);
        println!("  by search: {found:?}");
    }
    if let Some((v, parts)) = cubic_partition_minimum(4) {
        println!("cubic minimum at n = 4: {v} from {parts:?}; displayed expression gives {}", printed_cubic_expression(4));
    }
    Ok(())
}
