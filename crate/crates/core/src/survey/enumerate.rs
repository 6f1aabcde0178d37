//! Orbit-pruned enumeration of `(x0^d, ..., xn^d) + (extra monomials)`.
//!
//! Subsets of the non-pure monomials are index sets into the descending
//! monomial list. A subset is canonical when no variable permutation maps it
//! to a lexicographically smaller sorted index set; that representative is
//! the same ideal [`canonical_form`](crate::monomial::canonical_form) picks.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{binomial, is_trivial, monomials, permutations, Monomial, MonomialIdeal};
use crate::smoothness::is_smooth;
use crate::togliatti::{is_minimal, is_togliatti};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Filter {
    Togliatti,
    Minimal,
    Smooth,
    Trivial,
    Nontrivial,
}

impl Filter {
    pub const ALL: [Filter; 5] = [
        Filter::Togliatti,
        Filter::Minimal,
        Filter::Smooth,
        Filter::Trivial,
        Filter::Nontrivial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Filter::Togliatti => "togliatti",
            Filter::Minimal => "minimal",
            Filter::Smooth => "smooth",
            Filter::Trivial => "trivial",
            Filter::Nontrivial => "nontrivial",
        }
    }

    /// Parses a comma-separated list such as `minimal,smooth`.
    pub fn parse_list(text: &str) -> Result<Vec<Filter>> {
        let mut out: Vec<Filter> = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(Filter::from_str)
            .collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Filter::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown filter `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    /// Largest number of raw subsets the enumeration may walk.
    pub budget: u128,
    /// Emit one representative per orbit instead of every subset.
    pub up_to_symmetry: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            budget: DEFAULT_BUDGET,
            up_to_symmetry: true,
            threads: None,
        }
    }
}

/// Number of degree-`d` monomials that are not pure powers.
pub fn non_pure_count(n: usize, d: u32) -> u128 {
    binomial(n as u64 + d as u64, n as u64) - (n as u128 + 1)
}

/// `C(C(n+d, n) - (n+1), extra)`.
pub fn raw_subset_count(n: usize, d: u32, extra: usize) -> u128 {
    binomial(non_pure_count(n, d) as u64, extra as u64)
}

/// The non-pure monomials and, for each non-identity permutation, where it
/// sends each of them.
struct Pool {
    n: usize,
    d: u32,
    monomials: Vec<Monomial>,
    images: Vec<Vec<usize>>,
}

impl Pool {
    fn new(n: usize, d: u32) -> Pool {
        let monomials: Vec<Monomial> = monomials(n + 1, d).into_iter().filter(|m| !m.is_pure_power()).collect();
        let index = |m: &Monomial| monomials.binary_search_by(|x| m.cmp(x)).expect("permutation preserves purity");
        let images = permutations(n + 1)
            .into_iter()
            .skip(1)
            .map(|perm| monomials.iter().map(|m| index(&m.permuted(&perm))).collect())
            .collect();
        Pool { n, d, monomials, images }
    }

    fn is_canonical(&self, subset: &[usize], scratch: &mut Vec<usize>) -> bool {
        for image in &self.images {
            scratch.clear();
            scratch.extend(subset.iter().map(|&i| image[i]));
            scratch.sort_unstable();
            if scratch.as_slice() < subset {
                return false;
            }
        }
        true
    }

    fn ideal(&self, subset: &[usize]) -> MonomialIdeal {
        let extra = subset.iter().map(|&i| self.monomials[i].clone()).collect();
        MonomialIdeal::with_pure_powers(self.n, self.d, extra).expect("valid by construction")
    }
}

/// True when `ideal` passes every filter. Cheap tests run first.
pub fn passes(ideal: &MonomialIdeal, filters: &[Filter]) -> bool {
    let has = |f| filters.contains(&f);
    if has(Filter::Trivial) || has(Filter::Nontrivial) {
        let trivial = is_trivial(ideal).is_some();
        if (has(Filter::Trivial) && !trivial) || (has(Filter::Nontrivial) && trivial) {
            return false;
        }
    }
    if has(Filter::Minimal) {
        match is_minimal(ideal) {
            Ok(r) if r.is_minimal => {}
            _ => return false,
        }
    } else if has(Filter::Togliatti) && !is_togliatti(ideal) {
        return false;
    }
    !has(Filter::Smooth) || is_smooth(ideal).is_smooth
}

fn check_args(n: usize, d: u32, extra: usize, config: &EnumerationConfig) -> Result<()> {
    if n < 1 || d < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 1 and d >= 2, got n = {n}, d = {d}")));
    }
    let needed = raw_subset_count(n, d, extra);
    if needed > config.budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget: config.budget,
        });
    }
    Ok(())
}

fn in_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(job()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
            Ok(pool.install(job))
        }
    }
}

/// Ideals `(x0^d, ..., xn^d) + (m_1, ..., m_extra)` passing `filters`.
///
/// Output is ordered by the sorted index set of the extra generators, which
/// does not depend on the number of workers.
pub fn enumerate(n: usize, d: u32, extra: usize, filters: &[Filter], config: &EnumerationConfig) -> Result<Vec<MonomialIdeal>> {
    check_args(n, d, extra, config)?;
    let pool = Pool::new(n, d);
    let m = pool.monomials.len();
    if extra == 0 {
        let i = pool.ideal(&[]);
        return Ok(if passes(&i, filters) { vec![i] } else { Vec::new() });
    }
    if extra > m {
        return Ok(Vec::new());
    }
    let job = || -> Vec<MonomialIdeal> {
        (0..=m - extra)
            .into_par_iter()
            .map(|first| {
                let mut scratch = Vec::with_capacity(extra);
                let mut out = Vec::new();
                for rest in (first + 1..m).combinations(extra - 1) {
                    let mut subset = Vec::with_capacity(extra);
                    subset.push(first);
                    subset.extend(rest);
                    if config.up_to_symmetry && !pool.is_canonical(&subset, &mut scratch) {
                        continue;
                    }
                    let ideal = pool.ideal(&subset);
                    if passes(&ideal, filters) {
                        out.push(ideal);
                    }
                }
                out
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    in_pool(config.threads, job)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::canonical_form;
    use std::collections::BTreeSet;

    fn all(up_to_symmetry: bool) -> EnumerationConfig {
        EnumerationConfig {
            up_to_symmetry,
            ..Default::default()
        }
    }

    #[test]
    fn raw_counts() {
        assert_eq!(raw_subset_count(2, 5, 2), 153);
        assert_eq!(raw_subset_count(3, 4, 5), 169_911);
        assert_eq!(non_pure_count(4, 3), 30);
    }

    #[test]
    fn representatives_are_canonical_forms() {
        for (n, d, extra) in [(2, 4, 2), (2, 5, 2), (2, 4, 3), (3, 3, 2)] {
            let pruned = enumerate(n, d, extra, &[], &all(true)).unwrap();
            let full = enumerate(n, d, extra, &[], &all(false)).unwrap();
            assert_eq!(full.len() as u128, raw_subset_count(n, d, extra));
            let from_full: BTreeSet<MonomialIdeal> = full.iter().map(canonical_form).collect();
            let pruned_set: BTreeSet<MonomialIdeal> = pruned.iter().cloned().collect();
            assert_eq!(pruned_set.len(), pruned.len());
            assert_eq!(from_full, pruned_set, "({n},{d},{extra})");
            for i in &pruned {
                assert_eq!(&canonical_form(i), i);
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let config = EnumerationConfig {
            budget: 100,
            ..Default::default()
        };
        match enumerate(2, 5, 2, &[], &config) {
            Err(Error::BudgetExceeded { needed, budget }) => assert_eq!((needed, budget), (153, 100)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn filters_parse() {
        assert_eq!(
            Filter::parse_list("smooth, minimal").unwrap(),
            vec![Filter::Minimal, Filter::Smooth]
        );
        assert!(Filter::parse_list("smoth").is_err());
    }

    #[test]
    fn quartic_plane_minimal_orbits() {
        let found = enumerate(2, 4, 2, &[Filter::Minimal], &all(true)).unwrap();
        let inline: Vec<String> = found.iter().map(|i| i.to_inline()).collect();
        assert_eq!(found.len(), 2, "{inline:?}");
        let exception = canonical_form(&MonomialIdeal::parse_inline("x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2", None).unwrap());
        assert!(found.contains(&exception));
        assert!(found.iter().any(|i| is_trivial(i).is_some()));
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let one = EnumerationConfig {
            threads: Some(1),
            ..Default::default()
        };
        let three = EnumerationConfig {
            threads: Some(3),
            ..Default::default()
        };
        assert_eq!(
            enumerate(2, 5, 3, &[Filter::Togliatti], &one).unwrap(),
            enumerate(2, 5, 3, &[Filter::Togliatti], &three).unwrap()
        );
    }
}
