//! Registered reproduction targets: each is a list of checks with expected
//! outcomes stored in `fixtures/targets.json`.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{canonical_form, is_trivial, monomials, Monomial, MonomialIdeal};
use crate::smoothness::{is_smooth, trivial_smoothness_classifier, trivial_system};
use crate::stability::{slope, stability_class, subset_value, subsheaf_slope, StabilityVerdict};
use crate::survey::bounds::{closed_form_mu_s, mu_bounds, verify_bounds};
use crate::survey::enumerate::{enumerate, EnumerationConfig, Filter};
use crate::survey::families::Family;
use crate::togliatti::{certificate_form, compare_with_printed, is_minimal};

const FIXTURES: &str = include_str!("../../fixtures/targets.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedOrbit {
    pub ideal: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smooth: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Check {
    /// Certificate of a one-dimensional Togliatti kernel against printed
    /// text; `expected_mismatches` lists the monomials expected to differ.
    Certificate {
        n: usize,
        ideal: String,
        printed: String,
        expected_mismatches: Vec<String>,
    },
    /// The orbits with `mu` generators passing `filters` are exactly these.
    Orbits {
        n: usize,
        d: u32,
        mu: usize,
        filters: Vec<Filter>,
        expected: Vec<ExpectedOrbit>,
    },
    /// Every member of the `n = 2` interval family for this `d` holds its
    /// claims, and the largest one meets the generator bound.
    IntervalRange { d: u32 },
    Family { family: Family },
    /// For `n = 3`, every `r` in `[d+6, 2d+2]` is reached by a smooth
    /// minimal member of the range family.
    ExampleRange { n: usize, d: u32 },
    ClosedForm {
        n: usize,
        d: u32,
        value: u64,
        #[serde(default)]
        partition: Option<Vec<usize>>,
    },
    /// Least generator counts recomputed by enumeration agree with the
    /// closed forms.
    Bounds { n: usize, d: u32 },
    TrivialSmoothness { n: usize, d: u32 },
    Slopes {
        n: usize,
        ideal: String,
        subset: String,
        slope: String,
        subsheaf_slope: String,
        value: i64,
    },
    Stability { n: usize, ideal: String, verdict: StabilityVerdict },
    /// Every smooth minimal system with `n+3..=max_mu` generators in these
    /// degrees is stable iff listed in `stable`, properly semistable iff
    /// listed in `semistable`, and unstable otherwise.
    StabilitySurvey {
        n: usize,
        degrees: Vec<u32>,
        max_mu: usize,
        stable: Vec<String>,
        semistable: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproductionTarget {
    pub name: String,
    pub description: String,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckVerdict {
    pub check: String,
    pub passed: bool,
    pub expected: String,
    pub observed: String,
    pub diffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetVerdict {
    pub name: String,
    pub description: String,
    pub passed: bool,
    pub checks: Vec<CheckVerdict>,
}

pub fn targets() -> &'static [ReproductionTarget] {
    static TARGETS: OnceLock<Vec<ReproductionTarget>> = OnceLock::new();
    TARGETS.get_or_init(|| serde_json::from_str(FIXTURES).expect("bundled fixtures parse"))
}

pub fn target_names() -> Vec<String> {
    targets().iter().map(|t| t.name.clone()).collect()
}

pub fn target(name: &str) -> Result<&'static ReproductionTarget> {
    targets().iter().find(|t| t.name == name).ok_or_else(|| Error::UnknownTarget {
        name: name.to_string(),
        valid: target_names(),
    })
}

pub fn reproduce(name: &str) -> Result<TargetVerdict> {
    reproduce_with(name, &EnumerationConfig::default())
}

pub fn reproduce_with(name: &str, config: &EnumerationConfig) -> Result<TargetVerdict> {
    run_target(target(name)?, config)
}

pub fn run_target(t: &ReproductionTarget, config: &EnumerationConfig) -> Result<TargetVerdict> {
    let checks = t.checks.iter().map(|c| run_check(c, config)).collect::<Result<Vec<_>>>()?;
    Ok(TargetVerdict {
        name: t.name.clone(),
        description: t.description.clone(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn parse(text: &str, n: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::parse_inline(text, Some(n))
}

fn verdict(check: String, expected: String, observed: String, diffs: Vec<String>) -> CheckVerdict {
    CheckVerdict {
        check,
        passed: diffs.is_empty(),
        expected,
        observed,
        diffs,
    }
}

fn list(ideals: &BTreeSet<MonomialIdeal>) -> String {
    if ideals.is_empty() {
        return "none".into();
    }
    ideals.iter().map(|i| format!("({})", i.to_inline())).collect::<Vec<_>>().join(" ")
}

pub fn run_check(check: &Check, config: &EnumerationConfig) -> Result<CheckVerdict> {
    match check {
        Check::Certificate {
            n,
            ideal,
            printed,
            expected_mismatches,
        } => {
            let i = parse(ideal, *n)?;
            let f = certificate_form(&i)?;
            let cmp = compare_with_printed(&f, printed)?;
            let found: BTreeSet<String> = cmp.mismatches.iter().map(|m| m.monomial.clone()).collect();
            let want: BTreeSet<String> = expected_mismatches.iter().cloned().collect();
            let mut diffs = Vec::new();
            for m in found.symmetric_difference(&want) {
                diffs.push(format!("mismatch set differs at {m}"));
            }
            let detail: Vec<String> = cmp
                .mismatches
                .iter()
                .map(|m| {
                    let tag = if m.foreign_variable { " (variable outside the ring)" } else { "" };
                    format!("{}: computed {}, printed {}{tag}", m.monomial, m.computed, m.printed)
                })
                .collect();
            Ok(verdict(
                format!("certificate of ({ideal})"),
                format!("mismatches at {{{}}}", expected_mismatches.join(", ")),
                format!(
                    "{f}; relabelling {:?}, sign {}; {}",
                    cmp.permutation,
                    cmp.sign,
                    if detail.is_empty() { "all coefficients agree".into() } else { detail.join("; ") }
                ),
                diffs,
            ))
        }
        Check::Orbits {
            n,
            d,
            mu,
            filters,
            expected,
        } => {
            let extra = mu.checked_sub(n + 1).ok_or_else(|| Error::InvalidArgument(format!("mu = {mu} is below n+1")))?;
            let found: BTreeSet<MonomialIdeal> = enumerate(*n, *d, extra, filters, config)?.into_iter().collect();
            let mut want = BTreeSet::new();
            let mut diffs = Vec::new();
            for e in expected {
                let c = canonical_form(&parse(&e.ideal, *n)?);
                if let Some(s) = e.smooth {
                    if is_smooth(&c).is_smooth != s {
                        diffs.push(format!("({}) expected smooth = {s}", e.ideal));
                    }
                }
                if let Some(t) = e.trivial {
                    if is_trivial(&c).is_some() != t {
                        diffs.push(format!("({}) expected trivial = {t}", e.ideal));
                    }
                }
                want.insert(c);
            }
            for i in found.difference(&want) {
                diffs.push(format!("unexpected ({})", i.to_inline()));
            }
            for i in want.difference(&found) {
                diffs.push(format!("missing ({})", i.to_inline()));
            }
            let names: Vec<&str> = filters.iter().map(|f| f.name()).collect();
            Ok(verdict(
                format!("(n, d) = ({n}, {d}), {mu} generators, filters [{}]", names.join(",")),
                format!("{} orbit(s): {}", want.len(), list(&want)),
                format!("{} orbit(s): {}", found.len(), list(&found)),
                diffs,
            ))
        }
        Check::IntervalRange { d } => {
            let mut diffs = Vec::new();
            let top = *d as usize + 1;
            for r in 5..=top {
                diffs.extend(family_diffs(&Family::Interval { d: *d, r })?);
            }
            let largest = Family::Interval { d: *d, r: top }.build()?;
            if largest.generator_bound() != top {
                diffs.push(format!("generator bound is {}, not d+1", largest.generator_bound()));
            }
            Ok(verdict(
                format!("interval family, d = {d}"),
                format!("r = 5..={top} all smooth minimal; bound {top}"),
                format!("{} member(s) checked; bound {}", top - 4, largest.generator_bound()),
                diffs,
            ))
        }
        Check::Family { family } => {
            let i = family.build()?;
            let diffs = family_diffs(family)?;
            Ok(verdict(
                format!("family {}", serde_json::to_string(family)?),
                format!("{:?}", family.claims()),
                format!("({}) with {} generators", i.to_inline(), i.num_generators()),
                diffs,
            ))
        }
        Check::ExampleRange { n, d } => {
            let (n, d) = (*n, *d);
            let mut reached = BTreeSet::new();
            let mut diffs = Vec::new();
            for h in 2..=d + 1 - n as u32 {
                for m in monomials(n - 1, h) {
                    let mut e = m.exponents().to_vec();
                    e.extend([0, 0]);
                    let f = Family::ExampleRange { n, d, h, m: e };
                    let i = f.build()?;
                    let r = i.num_generators();
                    let fails = family_diffs(&f)?;
                    if fails.is_empty() {
                        reached.insert(r);
                    }
                    diffs.extend(fails);
                }
            }
            let low = crate::monomial::binomial((d as usize + n - 2) as u64, (n - 2) as u64) as usize;
            let range: BTreeSet<usize> = (low + n + 2..=low + d as usize + 1).collect();
            for r in range.difference(&reached) {
                diffs.push(format!("r = {r} not reached"));
            }
            Ok(verdict(
                format!("range family, (n, d) = ({n}, {d})"),
                format!("every r in [{}, {}]", low + n + 2, low + d as usize + 1),
                format!("reached {reached:?}"),
                diffs,
            ))
        }
        Check::ClosedForm { n, d, value, partition } => {
            let got = closed_form_mu_s(*n, *d)?;
            let mut diffs = Vec::new();
            if got != *value {
                diffs.push(format!("closed form gives {got}"));
            }
            let mut observed = format!("{got}");
            if let Some(parts) = partition {
                let f = Family::CubicPartition { parts: parts.clone() };
                let i = f.build()?;
                observed += &format!("; partition {parts:?} gives {} generators", i.num_generators());
                if i.num_generators() as u64 != *value {
                    diffs.push(format!("partition {parts:?} gives {} generators", i.num_generators()));
                }
                diffs.extend(family_diffs(&f)?);
            }
            Ok(verdict(format!("closed form at (n, d) = ({n}, {d})"), value.to_string(), observed, diffs))
        }
        Check::Bounds { n, d } => {
            let mut b = mu_bounds(*n, *d)?;
            let asserted = (b.mu.map(|v| v.value), b.mu_s.map(|v| v.value));
            let found = verify_bounds(&mut b, config)?;
            let diffs = if found == asserted {
                Vec::new()
            } else {
                vec![format!("enumeration found {found:?}")]
            };
            Ok(verdict(
                format!("least generator counts at (n, d) = ({n}, {d})"),
                format!("mu, mu_s = {asserted:?}"),
                format!("mu, mu_s = {found:?}"),
                diffs,
            ))
        }
        Check::TrivialSmoothness { n, d } => {
            let mut diffs = Vec::new();
            let all = monomials(n + 1, d - 1);
            for m in &all {
                let i = trivial_system(*n, *d, m)?;
                let by_polytope = is_smooth(&i).is_smooth;
                let closed = trivial_smoothness_classifier(*n, *d, m)?;
                if by_polytope != closed {
                    diffs.push(format!("m = {m}: polytope {by_polytope}, closed form {closed}"));
                }
            }
            Ok(verdict(
                format!("trivial systems at (n, d) = ({n}, {d})"),
                "closed form agrees with the polytope test".into(),
                format!("{} monomial(s) checked", all.len()),
                diffs,
            ))
        }
        Check::Slopes {
            n,
            ideal,
            subset,
            slope: want_slope,
            subsheaf_slope: want_sub,
            value,
        } => {
            let i = parse(ideal, *n)?;
            let j: Vec<Monomial> = parse_monomials(subset, *n)?;
            let s = slope(&i)?;
            let t = subsheaf_slope(&i, &j)?;
            let v = subset_value(&i, &j)?;
            let mut diffs = Vec::new();
            let ws = BigRational::from_str(want_slope).map_err(|e| Error::InvalidArgument(e.to_string()))?;
            let wt = BigRational::from_str(want_sub).map_err(|e| Error::InvalidArgument(e.to_string()))?;
            if s != ws {
                diffs.push(format!("slope {s}"));
            }
            if t != wt {
                diffs.push(format!("subsheaf slope {t}"));
            }
            if v != *value {
                diffs.push(format!("value {v}"));
            }
            Ok(verdict(
                format!("slopes of ({ideal}) and ({subset})"),
                format!("{want_slope}, {want_sub}, value {value}"),
                format!("{s}, {t}, value {v}"),
                diffs,
            ))
        }
        Check::Stability { n, ideal, verdict: want } => {
            let got = stability_class(&parse(ideal, *n)?)?.verdict;
            let diffs = if got == *want { Vec::new() } else { vec![format!("got {got:?}")] };
            Ok(verdict(format!("stability of ({ideal})"), format!("{want:?}"), format!("{got:?}"), diffs))
        }
        Check::StabilitySurvey {
            n,
            degrees,
            max_mu,
            stable,
            semistable,
        } => {
            let canon = |v: &[String]| -> Result<BTreeSet<MonomialIdeal>> {
                v.iter().map(|s| Ok(canonical_form(&parse(s, *n)?))).collect()
            };
            let (stable, semistable) = (canon(stable)?, canon(semistable)?);
            let mut seen = BTreeSet::new();
            let mut diffs = Vec::new();
            let mut counts = [0usize; 3];
            for &d in degrees {
                for extra in 0..=max_mu - (n + 1) {
                    for i in enumerate(*n, d, extra, &[Filter::Minimal, Filter::Smooth], config)? {
                        if i.num_generators() < 3 {
                            continue;
                        }
                        let got = stability_class(&i)?.verdict;
                        let want = if stable.contains(&i) {
                            StabilityVerdict::Stable
                        } else if semistable.contains(&i) {
                            StabilityVerdict::ProperlySemistable
                        } else {
                            StabilityVerdict::Unstable
                        };
                        counts[got as usize] += 1;
                        if got != want {
                            diffs.push(format!("({}) is {got:?}, expected {want:?}", i.to_inline()));
                        }
                        seen.insert(i);
                    }
                }
            }
            for i in stable.union(&semistable) {
                if !seen.contains(i) {
                    diffs.push(format!("({}) not found among smooth minimal systems", i.to_inline()));
                }
            }
            Ok(verdict(
                format!("stability of smooth minimal systems, n = {n}, d in {degrees:?}, at most {max_mu} generators"),
                format!("{} stable, {} properly semistable, the rest unstable", stable.len(), semistable.len()),
                format!(
                    "{} stable, {} properly semistable, {} unstable",
                    counts[0], counts[1], counts[2]
                ),
                diffs,
            ))
        }
    }
}

fn parse_monomials(text: &str, n: usize) -> Result<Vec<Monomial>> {
    text.split(',')
        .map(|t| {
            let f = crate::polynomial::Form::parse(t, n + 1)?;
            let terms: Vec<Monomial> = f.terms().map(|(m, _)| m.clone()).collect();
            match terms.as_slice() {
                [m] => Ok(m.clone()),
                _ => Err(Error::InvalidArgument(format!("`{t}` is not a monomial"))),
            }
        })
        .collect()
}

/// Differences between a family member and its claims.
pub fn family_diffs(f: &Family) -> Result<Vec<String>> {
    let i = f.build()?;
    let c = f.claims();
    let label = format!("{} ({})", f.name(), i.to_inline());
    let mut diffs = Vec::new();
    if let Some(g) = c.generators {
        if i.num_generators() != g {
            diffs.push(format!("{label}: {} generators, claimed {g}", i.num_generators()));
        }
    }
    match is_minimal(&i) {
        Ok(r) => {
            if c.minimal && !r.is_minimal {
                diffs.push(format!("{label}: not minimal"));
            }
        }
        Err(_) => {
            if c.togliatti {
                diffs.push(format!("{label}: not a Togliatti system"));
            }
        }
    }
    if let Some(s) = c.smooth {
        if is_smooth(&i).is_smooth != s {
            diffs.push(format!("{label}: smooth is not {s}"));
        }
    }
    Ok(diffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_load_and_names_are_unique() {
        let names = target_names();
        let set: BTreeSet<&String> = names.iter().collect();
        assert_eq!(set.len(), names.len());
        assert!(names.contains(&"stability-thm".to_string()));
    }

    #[test]
    fn fixture_ideals_parse() {
        for t in targets() {
            for c in &t.checks {
                if let Check::Orbits { n, d, expected, .. } = c {
                    for e in expected {
                        let i = parse(&e.ideal, *n).unwrap();
                        assert_eq!(i.d(), *d, "{}", t.name);
                    }
                }
            }
        }
    }

    #[test]
    fn unknown_target() {
        match reproduce("unknown-name") {
            Err(Error::UnknownTarget { valid, .. }) => assert!(valid.contains(&"gap-2n3-n3d4".to_string())),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_targets_pass() {
        for name in ["certificate-ex35", "certificate-f3", "certificate-f4", "thm-3-main-n2d4"] {
            let v = reproduce(name).unwrap();
            assert!(v.passed, "{v:#?}");
        }
    }

    #[test]
    fn stability_survey_finds_one_extra_stable_orbit() {
        let v = reproduce("stability-thm").unwrap();
        assert!(!v.passed);
        let diffs: Vec<&String> = v.checks.iter().flat_map(|c| &c.diffs).collect();
        assert_eq!(
            diffs,
            ["(x0^7,x0^4*x1^2*x2,x0^2*x1*x2^4,x0*x1^4*x2^2,x1^7,x2^7) is Stable, expected Unstable"]
        );
    }
}
