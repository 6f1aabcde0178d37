//! Named constructions of Togliatti systems, each with the properties it is
//! claimed to have.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{monomials, Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// `n = 2`: `x0^{d-1}(x1, x2)` for `r = 5`, otherwise
    /// `x0^{d-r+3} x1 x2 (x0^{r-5}, x0^{r-6} x1, ..., x1^{r-5}, x2^{r-5})`.
    Interval { d: u32, r: usize },
    /// `x1(x1..xn)^{d-1} + ... + x_{n-2}(x_{n-2}, x_{n-1}, x_n)^{d-1}
    /// + x0^3 (x_{n-1}, x_n)^{d-3}`, with `C(n+d-1, n-1)` generators.
    RhoMax { n: usize, d: u32 },
    /// `(x0, x1)^4 + (x2, x3)^4`.
    D4R10,
    /// The `n = 3` systems with `r` generators: `r = 7, 8, 9` for any
    /// `d >= 4`, and `r = 10..=15` for `d = 4`.
    ThreefoldRange { d: u32, r: usize },
    /// `(x0, ..., xn) m`.
    Trivial { n: usize, d: u32, m: Vec<u32> },
    /// `x0^{d-1}(x0, ..., xn)`, the trivial system with `2n+1` generators.
    TrivialNormalForm { n: usize, d: u32 },
    /// `x0 (x1, ..., xn)^{d-1}`: every non-pure generator divisible by `x0`.
    TrivialTypeB { n: usize, d: u32 },
    /// `(x0, ..., x_{n-2})^d + (x_{n-1}, x_n)^{d-h} m'` with `m'` of degree
    /// `h` in `x0..x_{n-2}`, given by its exponents.
    ExampleRange { n: usize, d: u32, h: u32, m: Vec<u32> },
    /// Cubics attached to a partition of the variables into consecutive
    /// blocks: all cubics inside a block plus all products of variables
    /// from three distinct blocks.
    CubicPartition { parts: Vec<usize> },
}

/// Properties a family member is claimed to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Claims {
    pub generators: Option<usize>,
    pub togliatti: bool,
    pub minimal: bool,
    /// `None` when smoothness is not asserted either way.
    pub smooth: Option<bool>,
}

fn invalid(msg: String) -> Error {
    Error::InvalidArgument(msg)
}

fn mono(e: Vec<u32>) -> Monomial {
    Monomial::new(e)
}

/// `m * (all degree-k monomials in the listed variables)`.
fn times_power(num_vars: usize, m: &Monomial, vars: &[usize], k: u32) -> Vec<Monomial> {
    monomials(vars.len(), k)
        .into_iter()
        .map(|small| {
            let mut e = vec![0; num_vars];
            for (&v, &a) in vars.iter().zip(small.exponents()) {
                e[v] = a;
            }
            m.mul(&Monomial::new(e))
        })
        .collect()
}

fn var_power(num_vars: usize, i: usize, k: u32) -> Monomial {
    Monomial::pure_power(num_vars, i, k)
}

/// Builds the ideal from pure powers plus extras, dropping extras that are
/// pure powers themselves.
fn with_extras(n: usize, d: u32, extra: Vec<Monomial>) -> Result<MonomialIdeal> {
    let mut extra: Vec<Monomial> = extra.into_iter().filter(|m| !m.is_pure_power()).collect();
    extra.sort();
    extra.dedup();
    MonomialIdeal::with_pure_powers(n, d, extra)
}

fn parse(text: &str) -> MonomialIdeal {
    MonomialIdeal::parse_inline(text, Some(3)).expect("fixed family member")
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Interval { .. } => "interval",
            Family::RhoMax { .. } => "rho-max",
            Family::D4R10 => "d4-r10",
            Family::ThreefoldRange { .. } => "threefold-range",
            Family::Trivial { .. } => "trivial",
            Family::TrivialNormalForm { .. } => "trivial-normal-form",
            Family::TrivialTypeB { .. } => "trivial-type-b",
            Family::ExampleRange { .. } => "example-range",
            Family::CubicPartition { .. } => "cubic-partition",
        }
    }

    pub fn build(&self) -> Result<MonomialIdeal> {
        match self {
            Family::Interval { d, r } => {
                let (d, r) = (*d, *r);
                if d < 4 || r < 5 || r > d as usize + 1 {
                    return Err(invalid(format!("interval needs d >= 4 and 5 <= r <= d+1, got d = {d}, r = {r}")));
                }
                let extra = if r == 5 {
                    vec![mono(vec![d - 1, 1, 0]), mono(vec![d - 1, 0, 1])]
                } else {
                    let k = r as u32 - 5;
                    let base = mono(vec![d + 3 - r as u32, 1, 1]);
                    let mut e = times_power(3, &base, &[0, 1], k);
                    e.push(base.mul(&var_power(3, 2, k)));
                    e
                };
                with_extras(2, d, extra)
            }
            Family::RhoMax { n, d } => {
                let (n, d) = (*n, *d);
                if n < 2 || d < 4 {
                    return Err(invalid(format!("rho-max needs n >= 2 and d >= 4, got n = {n}, d = {d}")));
                }
                let k = n + 1;
                let mut extra = Vec::new();
                for i in 1..n - 1 {
                    let vars: Vec<usize> = (i..=n).collect();
                    extra.extend(times_power(k, &var_power(k, i, 1), &vars, d - 1));
                }
                extra.extend(times_power(k, &var_power(k, 0, 3), &[n - 1, n], d - 3));
                with_extras(n, d, extra)
            }
            Family::D4R10 => Ok(parse(
                "x0^4,x0^3*x1,x0^2*x1^2,x0*x1^3,x1^4,x2^4,x2^3*x3,x2^2*x3^2,x2*x3^3,x3^4",
            )),
            Family::ThreefoldRange { d, r } => {
                let (d, r) = (*d, *r);
                let k = 4;
                match (d, r) {
                    (d, 7) if d >= 4 => with_extras(3, d, (1..4).map(|i| var_power(k, 0, d - 1).mul_var(i)).collect()),
                    (d, 8) if d >= 4 => {
                        let base = mono(vec![d - 2, 1, 0, 0]);
                        with_extras(3, d, (0..4).map(|i| base.mul_var(i)).collect())
                    }
                    (d, 9) if d >= 4 => {
                        let base = var_power(k, 0, d - 2);
                        let q = [[0, 2, 0, 0], [1, 1, 0, 0], [0, 0, 2, 0], [0, 0, 1, 1], [0, 0, 0, 2]];
                        with_extras(3, d, q.iter().map(|e| base.mul(&mono(e.to_vec()))).collect())
                    }
                    (4, 10) => Family::D4R10.build(),
                    (4, 11) => Ok(parse(
                        "x0^4,x0^3*x1,x0^2*x1^2,x0*x1^3,x1^4,x2^4,x2^3*x3,x2^2*x3^2,x3^4,x0*x2*x3^2,x1*x2*x3^2",
                    )),
                    (4, 12) => Ok(parse(
                        "x0^4,x0^3*x1,x0^2*x1^2,x0*x1^3,x1^4,x2^4,x2^3*x3,x2*x3^3,x3^4,x0^2*x3^2,x0*x1*x3^2,x1^2*x3^2",
                    )),
                    (4, 13) => Ok(parse(
                        "x0^4,x0^3*x1,x0^2*x1^2,x0*x1^3,x1^4,x2^4,x2^3*x3,x2*x3^3,x3^4,x0^3*x3,x0^2*x1*x3,x0*x1^2*x3,x1^3*x3",
                    )),
                    (4, 14) => Family::TrivialTypeB { n: 3, d: 4 }.build(),
                    (4, 15) => Family::RhoMax { n: 3, d: 4 }.build(),
                    _ => Err(invalid(format!(
                        "threefold-range covers r = 7, 8, 9 for d >= 4 and r = 10..=15 for d = 4, got d = {d}, r = {r}"
                    ))),
                }
            }
            Family::Trivial { n, d, m } => {
                let m = Monomial::new(m.clone());
                if m.num_vars() != n + 1 || m.degree() + 1 != *d {
                    return Err(invalid(format!("trivial needs a monomial of degree d-1 in {} variables", n + 1)));
                }
                with_extras(*n, *d, (0..=*n).map(|i| m.mul_var(i)).collect())
            }
            Family::TrivialNormalForm { n, d } => {
                let mut e = vec![0; n + 1];
                e[0] = d - 1;
                Family::Trivial { n: *n, d: *d, m: e }.build()
            }
            Family::TrivialTypeB { n, d } => {
                let (n, d) = (*n, *d);
                // n+1 pure powers plus C(n+d-2, n-1) others fit under the
                // generator bound only from n = 3 on.
                if n < 3 || d < 2 {
                    return Err(invalid(format!("trivial-type-b needs n >= 3 and d >= 2, got n = {n}, d = {d}")));
                }
                let vars: Vec<usize> = (1..=n).collect();
                with_extras(n, d, times_power(n + 1, &var_power(n + 1, 0, 1), &vars, d - 1))
            }
            Family::ExampleRange { n, d, h, m } => {
                let (n, d, h) = (*n, *d, *h);
                if n < 3 || d <= n as u32 || h < 2 || h > d + 1 - n as u32 {
                    return Err(invalid(format!(
                        "example-range needs d > n >= 3 and 2 <= h <= d-n+1, got n = {n}, d = {d}, h = {h}"
                    )));
                }
                let m = Monomial::new(m.clone());
                if m.num_vars() != n + 1 || m.degree() != h || m.exponents()[n - 1] != 0 || m.exponents()[n] != 0 {
                    return Err(invalid(format!("m' must have degree {h} in x0..x{}", n - 2)));
                }
                let k = n + 1;
                let low: Vec<usize> = (0..n - 1).collect();
                let mut extra = times_power(k, &Monomial::one(k), &low, d);
                extra.extend(times_power(k, &m, &[n - 1, n], d - h));
                with_extras(n, d, extra)
            }
            Family::CubicPartition { parts } => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(invalid("cubic-partition needs positive parts".into()));
                }
                let k: usize = parts.iter().sum();
                if k < 3 {
                    return Err(invalid("cubic-partition needs at least three variables".into()));
                }
                let mut block = Vec::with_capacity(k);
                for (b, &a) in parts.iter().enumerate() {
                    block.extend(std::iter::repeat_n(b, a));
                }
                let extra = monomials(k, 3)
                    .into_iter()
                    .filter(|m| {
                        let mut blocks: Vec<usize> = m.support().map(|i| block[i]).collect();
                        blocks.dedup();
                        let distinct = blocks.iter().collect::<std::collections::BTreeSet<_>>().len();
                        distinct == 1 || (distinct == 3 && m.exponents().iter().all(|&e| e <= 1))
                    })
                    .collect();
                with_extras(k - 1, 3, extra)
            }
        }
    }

    pub fn claims(&self) -> Claims {
        let count = |v: u64| Some(v as usize);
        match self {
            Family::Interval { r, .. } => Claims {
                generators: Some(*r),
                togliatti: true,
                minimal: true,
                smooth: Some(true),
            },
            Family::RhoMax { n, d } => Claims {
                generators: count(crate::monomial::binomial((n + *d as usize - 1) as u64, (n - 1) as u64) as u64),
                togliatti: true,
                minimal: true,
                smooth: None,
            },
            Family::D4R10 => Claims {
                generators: Some(10),
                togliatti: true,
                minimal: true,
                smooth: Some(true),
            },
            Family::ThreefoldRange { r, .. } => Claims {
                generators: Some(*r),
                togliatti: true,
                minimal: true,
                smooth: None,
            },
            Family::Trivial { .. } | Family::TrivialNormalForm { .. } | Family::TrivialTypeB { .. } => Claims {
                generators: None,
                togliatti: true,
                minimal: true,
                smooth: None,
            },
            Family::ExampleRange { n, d, h, .. } => {
                let (n, d) = (*n, *d as usize);
                let low = crate::monomial::binomial((d + n - 2) as u64, (n - 2) as u64) as usize;
                Claims {
                    generators: Some(low + 2 + d - *h as usize + 1),
                    togliatti: true,
                    minimal: true,
                    smooth: Some(true),
                }
            }
            Family::CubicPartition { parts } => Claims {
                generators: count(super::bounds::cubic_partition_value(parts)),
                togliatti: true,
                minimal: true,
                smooth: Some(true),
            },
        }
    }
}

fn get(params: &[(&str, u32)], key: &str) -> Result<u32> {
    params
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| invalid(format!("missing parameter `{key}`")))
}

pub const FAMILY_NAMES: [&str; 6] = [
    "interval",
    "rho-max",
    "d4-r10",
    "threefold-range",
    "trivial-normal-form",
    "trivial-type-b",
];

/// Builds a family member from integer parameters, e.g.
/// `family("interval", &[("d", 6), ("r", 5)])`. Families whose parameters
/// are not plain integers are built through [`Family`] directly.
pub fn family(name: &str, params: &[(&str, u32)]) -> Result<MonomialIdeal> {
    let n = || get(params, "n").map(|v| v as usize);
    let d = || get(params, "d");
    let r = || get(params, "r").map(|v| v as usize);
    let f = match name {
        "interval" => Family::Interval { d: d()?, r: r()? },
        "rho-max" => Family::RhoMax { n: n()?, d: d()? },
        "d4-r10" => Family::D4R10,
        "threefold-range" => Family::ThreefoldRange { d: d()?, r: r()? },
        "trivial-normal-form" => Family::TrivialNormalForm { n: n()?, d: d()? },
        "trivial-type-b" => Family::TrivialTypeB { n: n()?, d: d()? },
        _ => {
            return Err(invalid(format!(
                "unknown family `{name}`; valid families: {}",
                FAMILY_NAMES.join(", ")
            )))
        }
    };
    f.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smoothness::is_smooth;
    use crate::togliatti::is_minimal;

    fn check(f: &Family) {
        let i = f.build().unwrap();
        let c = f.claims();
        if let Some(g) = c.generators {
            assert_eq!(i.num_generators(), g, "{f:?}");
        }
        let t = is_minimal(&i).unwrap_or_else(|e| panic!("{f:?}: {e}"));
        assert!(t.is_minimal, "{f:?}");
        if let Some(s) = c.smooth {
            assert_eq!(is_smooth(&i).is_smooth, s, "{f:?}");
        }
    }

    #[test]
    fn interval_first_member() {
        let i = family("interval", &[("d", 6), ("r", 5)]).unwrap();
        assert_eq!(i.to_inline(), "x0^6,x0^5*x1,x0^5*x2,x1^6,x2^6");
        assert!(family("interval", &[("d", 6), ("r", 8)]).is_err());
        assert!(family("interval", &[("d", 6)]).is_err());
    }

    #[test]
    fn interval_members_hold() {
        for d in 4..=6 {
            for r in 5..=d as usize + 1 {
                check(&Family::Interval { d, r });
            }
        }
    }

    #[test]
    fn rho_max_count() {
        assert_eq!(family("rho-max", &[("n", 3), ("d", 4)]).unwrap().num_generators(), 15);
        assert_eq!(family("rho-max", &[("n", 2), ("d", 6)]).unwrap().num_generators(), 7);
        check(&Family::RhoMax { n: 3, d: 4 });
    }

    #[test]
    fn threefold_range_d4() {
        for r in 7..=15 {
            check(&Family::ThreefoldRange { d: 4, r });
        }
        check(&Family::D4R10);
        assert!(family("threefold-range", &[("d", 5), ("r", 11)]).is_err());
    }

    #[test]
    fn cubic_partitions() {
        let i = Family::CubicPartition { parts: vec![2, 2] }.build().unwrap();
        assert_eq!(i.num_generators(), 8);
        check(&Family::CubicPartition { parts: vec![2, 2] });
        check(&Family::CubicPartition { parts: vec![2, 2, 1] });
    }

    #[test]
    fn unknown_family() {
        assert!(family("nope", &[]).is_err());
    }
}
