//! Known values of `mu(n,d) <= mu_s(n,d) <= rho_s(n,d) <= rho(n,d)`: the
//! least and largest number of generators of a minimal (smooth) monomial
//! Togliatti system of degree-`d` forms in `n+1` variables.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::binomial;
use crate::survey::enumerate::{enumerate, raw_subset_count, EnumerationConfig, Filter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A closed form from the literature, not recomputed here.
    PaperAsserted,
    /// Recomputed by exhaustive enumeration.
    Verified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    pub value: u64,
    pub provenance: Provenance,
}

impl BoundValue {
    fn asserted(value: u64) -> Option<BoundValue> {
        Some(BoundValue {
            value,
            provenance: Provenance::PaperAsserted,
        })
    }
}

/// `None` means unknown, or undefined because the class is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuBounds {
    pub n: usize,
    pub d: u32,
    pub mu: Option<BoundValue>,
    pub mu_s: Option<BoundValue>,
    pub rho_s: Option<BoundValue>,
    pub rho: Option<BoundValue>,
    /// `C(n+d-1, n-1)`, the largest possible number of generators.
    pub generator_bound: u64,
}

fn c(n: usize, k: usize) -> u64 {
    binomial(n as u64, k as u64) as u64
}

/// Minimum over partitions `n+1 = a_1 + ... + a_s` with `1 <= a_i <= n-1` of
/// `sum C(a_i+2, 3) + sum_{i<j<k} a_i a_j a_k`.
pub fn cubic_partition_minimum(n: usize) -> Option<(u64, Vec<usize>)> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, best: &mut Option<(u64, Vec<usize>)>) {
        if left == 0 {
            let v = cubic_partition_value(cur);
            if best.as_ref().is_none_or(|(b, _)| v < *b) {
                *best = Some((v, cur.clone()));
            }
            return;
        }
        for a in (1..=max.min(left)).rev() {
            cur.push(a);
            rec(left - a, a, cur, best);
            cur.pop();
        }
    }
    if n < 2 {
        return None;
    }
    let mut best = None;
    rec(n + 1, n - 1, &mut Vec::new(), &mut best);
    best
}

/// Generator count of the cubic system attached to a partition of the
/// variables into blocks of the given sizes.
pub fn cubic_partition_value(parts: &[usize]) -> u64 {
    let singles: u64 = parts.iter().map(|&a| c(a + 2, 3)).sum();
    let mut triples = 0u64;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for k in j + 1..parts.len() {
                triples += (parts[i] * parts[j] * parts[k]) as u64;
            }
        }
    }
    singles + triples
}

/// `mu_s(n, 2)` for `n >= 3` and `mu_s(n, 3)` for `n >= 4`; for cubics the
/// partition minimum is used.
pub fn closed_form_mu_s(n: usize, d: u32) -> Result<u64> {
    match (d, n) {
        (2, n) if n >= 3 => {
            let l = (n / 2) as u64;
            Ok(if n % 2 == 0 { l * l + 2 * l + 1 } else { l * l + 3 * l + 2 })
        }
        (3, n) if n >= 4 => Ok(cubic_partition_minimum(n).expect("n >= 4").0),
        _ => Err(Error::InvalidArgument(format!(
            "closed form needs d = 2 with n >= 3 or d = 3 with n >= 4, got n = {n}, d = {d}"
        ))),
    }
}

/// The second closed expression printed alongside the partition minimum for
/// cubics. It disagrees with the minimum (24 against 13 at `n = 4`) and is
/// kept only to document that.
pub fn printed_cubic_expression(n: usize) -> u64 {
    let l = n / 2;
    if n % 2 == 1 {
        2 * c(l + 3, 3)
    } else {
        c(l + 2, 3) + 2 * c(l + 3, 3)
    }
}

pub fn mu_bounds(n: usize, d: u32) -> Result<MuBounds> {
    if d < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 2 and d >= 2, got n = {n}, d = {d}")));
    }
    let generator_bound = c(n + d as usize - 1, n - 1);
    let twice = 2 * n as u64 + 1;
    let (mu, mu_s, rho_s, rho) = match d {
        2 if n == 2 => (None, None, None, None),
        2 => {
            let mu = if n == 3 { 6 } else { twice };
            let ms = closed_form_mu_s(n, 2)?;
            (Some(mu), Some(ms), Some(c(n, 2) + 3), None)
        }
        3 => match n {
            2 => (Some(4), Some(4), Some(4), None),
            3 => (Some(twice), Some(8), Some(8), None),
            _ => (
                Some(twice),
                Some(closed_form_mu_s(n, 3)?),
                Some(c(n + 1, 3) + n as u64 + 1),
                None,
            ),
        },
        _ => {
            let rho_s = (n == 2).then_some(d as u64 + 1);
            (Some(twice), Some(twice), rho_s, Some(generator_bound))
        }
    };
    Ok(MuBounds {
        n,
        d,
        mu: mu.and_then(BoundValue::asserted),
        mu_s: mu_s.and_then(BoundValue::asserted),
        rho_s: rho_s.and_then(BoundValue::asserted),
        rho: rho.and_then(BoundValue::asserted),
        generator_bound,
    })
}

/// Least number of generators of a system passing `filters`, found by
/// walking `extra = 0, 1, ...` up to `max_total` generators. `None` if the
/// budget runs out first or nothing is found.
pub fn least_generators(n: usize, d: u32, filters: &[Filter], max_total: usize, config: &EnumerationConfig) -> Result<Option<u64>> {
    for total in n + 1..=max_total {
        let extra = total - (n + 1);
        if raw_subset_count(n, d, extra) > config.budget {
            return Ok(None);
        }
        if !enumerate(n, d, extra, filters, config)?.is_empty() {
            return Ok(Some(total as u64));
        }
    }
    Ok(None)
}

/// Recomputes `mu` and `mu_s` by enumeration where the budget allows and
/// marks agreeing values as verified. Returns the recomputed values.
pub fn verify_bounds(bounds: &mut MuBounds, config: &EnumerationConfig) -> Result<(Option<u64>, Option<u64>)> {
    let (n, d) = (bounds.n, bounds.d);
    let limit = bounds.generator_bound as usize;
    let mu = least_generators(n, d, &[Filter::Togliatti], limit, config)?;
    let mu_s = least_generators(n, d, &[Filter::Minimal, Filter::Smooth], limit, config)?;
    for (slot, found) in [(&mut bounds.mu, mu), (&mut bounds.mu_s, mu_s)] {
        if let (Some(b), Some(v)) = (slot.as_mut(), found) {
            if b.value == v {
                b.provenance = Provenance::Verified;
            }
        }
    }
    Ok((mu, mu_s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(b: &MuBounds) -> [Option<u64>; 4] {
        [b.mu, b.mu_s, b.rho_s, b.rho].map(|v| v.map(|x| x.value))
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_mu_s(4, 3).unwrap(), 13);
        assert_eq!(closed_form_mu_s(3, 2).unwrap(), 6);
        assert_eq!(closed_form_mu_s(4, 2).unwrap(), 9);
        assert!(closed_form_mu_s(3, 3).is_err());
        assert!(closed_form_mu_s(4, 4).is_err());
        assert_eq!(cubic_partition_minimum(4).unwrap(), (13, vec![2, 2, 1]));
        assert_eq!(printed_cubic_expression(4), 24);
    }

    #[test]
    fn table_values() {
        assert_eq!(values(&mu_bounds(2, 5).unwrap()), [Some(5), Some(5), Some(6), Some(6)]);
        let b = mu_bounds(3, 4).unwrap();
        assert_eq!((b.mu.unwrap().value, b.mu_s.unwrap().value, b.rho.unwrap().value), (7, 7, 15));
        let b = mu_bounds(4, 2).unwrap();
        assert_eq!((b.mu_s.unwrap().value, b.rho_s.unwrap().value), (9, 9));
        assert_eq!(values(&mu_bounds(2, 2).unwrap()), [None; 4]);
        assert_eq!(mu_bounds(4, 3).unwrap().rho_s.unwrap().value, 15);
        assert!(mu_bounds(2, 1).is_err());
    }

    #[test]
    fn plane_quartics_verified() {
        let mut b = mu_bounds(2, 4).unwrap();
        let found = verify_bounds(&mut b, &EnumerationConfig::default()).unwrap();
        assert_eq!(found, (Some(5), Some(5)));
        assert_eq!(b.mu.unwrap().provenance, Provenance::Verified);
        assert_eq!(b.rho_s.unwrap().provenance, Provenance::PaperAsserted);
    }
}
