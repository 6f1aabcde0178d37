//! Slope stability of the syzygy bundle of a monomial ideal through the
//! subset-gcd criterion: for every proper subset `J` of at least two
//! generators, with `s = |J|` and `d_J` the degree of their gcd, the
//! equal-degree quantity `(d - d_J) r + d_J - s d` must be positive
//! (stable) or nonnegative (semistable).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{monomials, Monomial, MonomialIdeal};

/// Degree of the gcd of a nonempty set of monomials.
pub fn gcd_degree(j: &[Monomial]) -> Result<u32> {
    let (first, rest) = j
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("gcd of an empty set".into()))?;
    Ok(rest.iter().fold(first.clone(), |g, m| g.gcd(m)).degree())
}

/// `(d - d_J) r + d_J - s d` for a subset of the generators.
pub fn subset_value(ideal: &MonomialIdeal, j: &[Monomial]) -> Result<i64> {
    if j.len() < 2 {
        return Err(Error::InvalidArgument(format!("need at least two generators, got {}", j.len())));
    }
    if let Some(m) = j.iter().find(|m| !ideal.contains_generator(m)) {
        return Err(Error::InvalidArgument(format!("{m} is not a generator")));
    }
    Ok(value(ideal.d() as i64, ideal.num_generators() as i64, j.len() as i64, gcd_degree(j)? as i64))
}

fn value(d: i64, r: i64, s: i64, dj: i64) -> i64 {
    (d - dj) * r + dj - s * d
}

/// Both sides of the mixed-degree inequality
/// `(d_J - sum_J d_i) / (s - 1) <= -(sum d_i) / (r - 1)` for generators of
/// arbitrary degrees: returns `(subsheaf slope, bundle slope)`.
pub fn mixed_degree_sides(degrees: &[u32], subset_degrees: &[u32], d_j: u32) -> Result<(BigRational, BigRational)> {
    let (r, s) = (degrees.len(), subset_degrees.len());
    if r < 2 || s < 2 {
        return Err(Error::InvalidArgument("need r >= 2 and s >= 2".into()));
    }
    let total: i64 = degrees.iter().map(|&x| x as i64).sum();
    let part: i64 = subset_degrees.iter().map(|&x| x as i64).sum();
    Ok((
        BigRational::new((d_j as i64 - part).into(), (s as i64 - 1).into()),
        BigRational::new((-total).into(), (r as i64 - 1).into()),
    ))
}

/// `c_1(E) / rk(E) = -r d / (r - 1)`.
pub fn slope(ideal: &MonomialIdeal) -> Result<BigRational> {
    slope_of(ideal.num_generators(), ideal.d())
}

pub fn slope_of(r: usize, d: u32) -> Result<BigRational> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("slope needs r >= 2, got {r}")));
    }
    Ok(BigRational::new(
        BigInt::from(-(r as i64) * d as i64),
        BigInt::from(r as i64 - 1),
    ))
}

/// Slope `(d_J - s d) / (s - 1)` of the syzygy sheaf of a subset.
pub fn subsheaf_slope(ideal: &MonomialIdeal, j: &[Monomial]) -> Result<BigRational> {
    if j.len() < 2 {
        return Err(Error::InvalidArgument("need at least two generators".into()));
    }
    let s = j.len() as i64;
    Ok(BigRational::new(
        BigInt::from(gcd_degree(j)? as i64 - s * ideal.d() as i64),
        BigInt::from(s - 1),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityVerdict {
    Stable,
    ProperlySemistable,
    Unstable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetWitness {
    pub subset: Vec<Monomial>,
    pub s: usize,
    pub d_j: u32,
    pub value: i64,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub subsheaf_slope: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub slope_of_e: BigRational,
    pub verdict: StabilityVerdict,
    /// A subset of minimal value.
    pub witness: Option<SubsetWitness>,
    /// A subset of value zero, for properly semistable bundles.
    pub equality_witness: Option<SubsetWitness>,
}

impl StabilityReport {
    pub fn min_value(&self) -> Option<i64> {
        self.witness.as_ref().map(|w| w.value)
    }
}

fn check_rank(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.num_generators() < 3 {
        return Err(Error::InvalidArgument(format!(
            "stability needs at least 3 generators (a bundle of rank >= 2), got {}",
            ideal.num_generators()
        )));
    }
    Ok(())
}

fn report(ideal: &MonomialIdeal, candidates: impl Iterator<Item = Vec<Monomial>>) -> Result<StabilityReport> {
    let (d, r) = (ideal.d() as i64, ideal.num_generators() as i64);
    let mut witness: Option<SubsetWitness> = None;
    let mut equality: Option<SubsetWitness> = None;
    for subset in candidates {
        let dj = gcd_degree(&subset)?;
        let w = SubsetWitness {
            subsheaf_slope: subsheaf_slope(ideal, &subset)?,
            s: subset.len(),
            d_j: dj,
            value: value(d, r, subset.len() as i64, dj as i64),
            subset,
        };
        if w.value == 0 && equality.is_none() {
            equality = Some(w.clone());
        }
        if witness.as_ref().is_none_or(|b| w.value < b.value) {
            witness = Some(w);
        }
    }
    let min = witness.as_ref().map_or(i64::MAX, |w| w.value);
    let verdict = match min {
        v if v > 0 => StabilityVerdict::Stable,
        0 => StabilityVerdict::ProperlySemistable,
        _ => StabilityVerdict::Unstable,
    };
    Ok(StabilityReport {
        slope_of_e: slope(ideal)?,
        verdict,
        witness,
        equality_witness: if verdict == StabilityVerdict::ProperlySemistable { equality } else { None },
    })
}

/// Candidate subsets of the pruned scan.
///
/// For a subset with gcd `g` of positive degree, the set `S_g` of all
/// generators divisible by `g` has the same gcd and is at least as large,
/// so its value is no larger. Subsets with trivial gcd have value
/// `d (r - s) >= d`, attained by dropping a single generator.
pub fn divisor_candidates(ideal: &MonomialIdeal) -> Vec<Vec<Monomial>> {
    let gens = ideal.generators();
    let mut by_gcd: BTreeSet<Vec<Monomial>> = BTreeSet::new();
    for e in 1..ideal.d() {
        for g in monomials(ideal.num_vars(), e) {
            let s: Vec<Monomial> = gens.iter().filter(|m| g.divides(m)).cloned().collect();
            if s.len() >= 2 {
                by_gcd.insert(s);
            }
        }
    }
    let mut out: Vec<Vec<Monomial>> = by_gcd.into_iter().collect();
    // One gcd-free proper subset: every generator except the last.
    let rest: Vec<Monomial> = gens[..gens.len() - 1].to_vec();
    if rest.len() >= 2 {
        out.push(rest);
    }
    out
}

/// Verdict from the divisor-induced candidate subsets.
pub fn stability_class(ideal: &MonomialIdeal) -> Result<StabilityReport> {
    check_rank(ideal)?;
    report(ideal, divisor_candidates(ideal).into_iter())
}

pub const STABILITY_ORACLE_LIMIT: usize = 14;

/// Verdict from every proper subset with at least two generators.
pub fn stability_oracle(ideal: &MonomialIdeal) -> Result<StabilityReport> {
    check_rank(ideal)?;
    let r = ideal.num_generators();
    if r > STABILITY_ORACLE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "number of generators",
            actual: r,
            limit: STABILITY_ORACLE_LIMIT,
        });
    }
    let gens = ideal.generators();
    let subsets = (0u32..(1 << r) - 1)
        .filter(|mask| mask.count_ones() >= 2)
        .map(|mask| (0..r).filter(|i| mask >> i & 1 == 1).map(|i| gens[i].clone()).collect());
    report(ideal, subsets)
}

/// True when `gcd(r d, r - 1) = 1`, in which case semistable bundles are
/// automatically stable.
pub fn coprime_rank_and_degree(ideal: &MonomialIdeal) -> bool {
    let r = ideal.num_generators() as i64;
    (r * ideal.d() as i64).gcd(&(r - 1)) == 1
}
