//! Exponent-vector monomials, single-degree artinian monomial ideals and
//! their inverse systems viewed as lattice points of the dilated simplex.
//!
//! Monomials are ordered graded-lexicographically with `x0 > x1 > ... > xn`.
//! Every list produced here (simplex points, generators, inverse systems) is
//! sorted in *descending* order, so `x0^d` always comes first.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x0^a0 * ... * xn^an`, stored as its exponent vector.
///
/// The same vector doubles as a lattice point of the dilated simplex.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial::new(vec![0; num_vars])
    }

    /// The pure power `x_i^degree` in `num_vars` variables.
    pub fn pure_power(num_vars: usize, i: usize, degree: u32) -> Self {
        let mut exponents = vec![0; num_vars];
        exponents[i] = degree;
        Monomial::new(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Index of the variable if this is a pure power of positive degree.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut support = self.support();
        match (support.next(), support.next()) {
            (Some(i), None) => Some(i),
            _ => None,
        }
    }

    pub fn is_pure_power(&self) -> bool {
        self.pure_power_var().is_some()
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `x_i * self`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[i] += 1;
        Monomial::new(exponents)
    }

    /// Greatest common divisor (componentwise minimum of exponents).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Image under the substitution `x_i -> x_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exponents = vec![0; self.exponents.len()];
        for (i, &a) in self.exponents.iter().enumerate() {
            exponents[perm[i]] = a;
        }
        Monomial::new(exponents)
    }

    /// Value of the monomial at an integer point.
    pub fn evaluate(&self, point: &[u32]) -> i64 {
        self.exponents
            .iter()
            .zip(point)
            .map(|(&e, &p)| (p as i64).pow(e))
            .product()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.exponents.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match a {
                1 => write!(f, "x{i}")?,
                _ => write!(f, "x{i}^{a}")?,
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All monomials of the given degree in `num_vars` variables, descending.
pub fn monomials(num_vars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for a in (0..=left).rev() {
            cur[pos] = a;
            rec(pos + 1, left - a, cur, out);
        }
    }
    let mut out = Vec::new();
    if num_vars == 0 {
        if degree == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(0, degree, &mut vec![0; num_vars], &mut out);
    out
}

/// Binomial coefficient as `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// A set of degree-`d` lattice points of `d * Delta_n`, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePointSet {
    pub n: usize,
    pub d: u32,
    pub points: Vec<Monomial>,
}

impl LatticePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.points.binary_search_by(|p| m.cmp(p)).is_ok()
    }
}

/// Lattice points of `d * Delta_n`: all `C(n+d, n)` monomials of degree `d`
/// in `n + 1` variables.
pub fn simplex_points(n: usize, d: u32) -> Result<LatticePointSet> {
    if n < 1 || d < 1 {
        return Err(Error::InvalidArgument(format!(
            "simplex_points needs n >= 1 and d >= 1, got n={n}, d={d}"
        )));
    }
    Ok(LatticePointSet {
        n,
        d,
        points: monomials(n + 1, d),
    })
}

/// An artinian monomial ideal generated in a single degree `d`, in the
/// polynomial ring on `x0, ..., xn`.
///
/// Generators are distinct, of degree exactly `d`, include every pure power
/// `x_i^d`, and are kept sorted in descending graded-lex order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    n: usize,
    d: u32,
    generators: Vec<Monomial>,
}

/// Serialized form: `{"n": 2, "d": 3, "generators": [[3,0,0], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub d: u32,
    pub generators: Vec<Vec<u32>>,
}

impl MonomialIdeal {
    /// Validates and builds an ideal from raw exponent vectors.
    pub fn new(n: usize, d: u32, generators: Vec<Vec<u32>>) -> Result<Self> {
        Self::from_monomials(n, d, generators.into_iter().map(Monomial::new).collect())
    }

    pub fn from_monomials(n: usize, d: u32, mut generators: Vec<Monomial>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument(format!("need n >= 1, got {n}")));
        }
        if d < 2 {
            return Err(Error::InvalidArgument(format!("need d >= 2, got {d}")));
        }
        for g in &generators {
            if g.num_vars() != n + 1 {
                return Err(Error::InvalidArgument(format!(
                    "exponent vector {:?} has length {}, expected {}",
                    g.exponents(),
                    g.num_vars(),
                    n + 1
                )));
            }
            if g.degree() != d {
                return Err(Error::Inhomogeneous {
                    monomial: g.to_string(),
                    expected: d,
                    found: g.degree(),
                });
            }
        }
        generators.sort_unstable_by(|a, b| b.cmp(a));
        if let Some((a, _)) = generators.iter().tuple_windows().find(|(a, b)| a == b) {
            return Err(Error::Duplicate(a.to_string()));
        }
        for i in 0..=n {
            let p = Monomial::pure_power(n + 1, i, d);
            if generators.binary_search_by(|g| p.cmp(g)).is_err() {
                return Err(Error::NotArtinian {
                    missing: i,
                    degree: d,
                });
            }
        }
        Ok(MonomialIdeal { n, d, generators })
    }

    /// `(x0^d, ..., xn^d)` plus the given extra monomials.
    pub fn with_pure_powers(n: usize, d: u32, extra: Vec<Monomial>) -> Result<Self> {
        let mut gens: Vec<Monomial> = (0..=n).map(|i| Monomial::pure_power(n + 1, i, d)).collect();
        for m in extra {
            if !gens.contains(&m) {
                gens.push(m);
            }
        }
        Self::from_monomials(n, d, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn num_vars(&self) -> usize {
        self.n + 1
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Number of minimal generators `r`.
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Generators other than the pure powers.
    pub fn extra_generators(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().filter(|g| !g.is_pure_power())
    }

    /// Is the degree-`d` monomial `m` a generator?
    pub fn contains_generator(&self, m: &Monomial) -> bool {
        self.generators.binary_search_by(|g| m.cmp(g)).is_ok()
    }

    /// Does `m` (of any degree) lie in the ideal?
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `C(n+d-1, n-1)`, the largest `r` for which a WLP failure in degree
    /// `d-1` is not forced by dimension count alone.
    pub fn generator_bound(&self) -> usize {
        binomial((self.n as u64) + self.d as u64 - 1, self.n as u64 - 1) as usize
    }

    pub fn satisfies_generator_bound(&self) -> bool {
        self.num_generators() <= self.generator_bound()
    }

    /// Image under the variable substitution `x_i -> x_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> MonomialIdeal {
        let mut generators: Vec<Monomial> = self.generators.iter().map(|g| g.permuted(perm)).collect();
        generators.sort_unstable_by(|a, b| b.cmp(a));
        MonomialIdeal {
            n: self.n,
            d: self.d,
            generators,
        }
    }

    /// The ideal with one generator removed; `None` if that would break
    /// artinianness or the generator is absent.
    pub fn without(&self, m: &Monomial) -> Option<MonomialIdeal> {
        if m.is_pure_power() || !self.contains_generator(m) {
            return None;
        }
        Some(MonomialIdeal {
            n: self.n,
            d: self.d,
            generators: self.generators.iter().filter(|g| *g != m).cloned().collect(),
        })
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            n: self.n,
            d: self.d,
            generators: self.generators.iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }

    /// Parses the JSON ideal format, reporting syntax errors with position.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: IdealJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::try_from(raw)
    }

    /// Parses inline syntax such as `x0^5,x1^5,x2^5,x0^3*x1*x2`.
    ///
    /// `n` defaults to the largest variable index that occurs and `d` to the
    /// degree of the first monomial.
    pub fn parse_inline(text: &str, n: Option<usize>) -> Result<Self> {
        let monos = parse_monomial_list(text)?;
        if monos.is_empty() {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "empty generator list".into(),
            });
        }
        let max_var = monos
            .iter()
            .flat_map(|m| m.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i))
            .max()
            .unwrap_or(0);
        let n = n.unwrap_or(max_var.max(1));
        if max_var > n {
            return Err(Error::InvalidArgument(format!(
                "variable x{max_var} out of range for n={n}"
            )));
        }
        let gens: Vec<Vec<u32>> = monos
            .into_iter()
            .map(|mut m| {
                m.resize(n + 1, 0);
                m
            })
            .collect();
        let d = gens[0].iter().sum();
        Self::new(n, d, gens)
    }

    /// Inline rendering accepted by [`MonomialIdeal::parse_inline`].
    pub fn to_inline(&self) -> String {
        self.generators.iter().map(|g| g.to_string()).join(",")
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(raw: IdealJson) -> Result<Self> {
        MonomialIdeal::new(raw.n, raw.d, raw.generators)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = IdealJson::deserialize(de)?;
        MonomialIdeal::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generators.iter().join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(n={}, d={}, {self})", self.n, self.d)
    }
}

// Exponent vectors indexed by variable, untrimmed.
fn parse_monomial_list(text: &str) -> Result<Vec<Vec<u32>>> {
    let err = |pos: usize, message: String| {
        let line = text[..pos].matches('\n').count() + 1;
        let column = pos - text[..pos].rfind('\n').map_or(0, |p| p + 1) + 1;
        Error::Parse {
            line,
            column,
            message,
        }
    };
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    let mut seen_factor = false;
    let mut i = 0;
    let read_int = |i: &mut usize| -> Option<u32> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        text[start..*i].parse().ok()
    };
    loop {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i >= bytes.len() || bytes[i] == b',' {
            if !seen_factor {
                return Err(err(i, "expected a monomial".into()));
            }
            out.push(std::mem::take(&mut cur));
            seen_factor = false;
            if i >= bytes.len() {
                break;
            }
            i += 1;
            continue;
        }
        match bytes[i] {
            b'*' if seen_factor => {
                i += 1;
                if bytes.get(i) != Some(&b'x') {
                    return Err(err(i, "expected a variable after `*`".into()));
                }
            }
            b'1' if !seen_factor => {
                i += 1;
                seen_factor = true;
            }
            b'x' => {
                i += 1;
                if i < bytes.len() && bytes[i] == b'_' {
                    i += 1;
                }
                let var_pos = i;
                let var = read_int(&mut i)
                    .ok_or_else(|| err(var_pos, "expected a variable index after `x`".into()))?
                    as usize;
                let mut exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let exp_pos = i;
                    exp = read_int(&mut i).ok_or_else(|| err(exp_pos, "expected an exponent".into()))?;
                }
                if cur.len() <= var {
                    cur.resize(var + 1, 0);
                }
                cur[var] += exp;
                seen_factor = true;
            }
            c => return Err(err(i, format!("unexpected character `{}`", c as char))),
        }
    }
    Ok(out)
}

/// All permutations of `0..k`, in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    (0..k).permutations(k).collect()
}

/// Inverse system in degree `d`: the lattice points of `d * Delta_n` that
/// are not generators, i.e. the monomials spanning `(I^{-1})_d`.
pub fn inverse_system(ideal: &MonomialIdeal) -> LatticePointSet {
    let points = monomials(ideal.num_vars(), ideal.d())
        .into_iter()
        .filter(|m| !ideal.contains_generator(m))
        .collect();
    LatticePointSet {
        n: ideal.n(),
        d: ideal.d(),
        points,
    }
}

/// Representative of the orbit of `ideal` under permutations of the
/// variables, together with a permutation mapping `ideal` onto it.
///
/// The representative is the image whose descending generator list is
/// lexicographically largest, which puts the heaviest exponents on `x0`.
pub fn canonical_form_with_perm(ideal: &MonomialIdeal) -> (MonomialIdeal, Vec<usize>) {
    let mut best = ideal.clone();
    let mut best_perm: Vec<usize> = (0..ideal.num_vars()).collect();
    for perm in (0..ideal.num_vars()).permutations(ideal.num_vars()) {
        let image = ideal.permuted(&perm);
        if image.generators > best.generators {
            best = image;
            best_perm = perm;
        }
    }
    (best, best_perm)
}

pub fn canonical_form(ideal: &MonomialIdeal) -> MonomialIdeal {
    canonical_form_with_perm(ideal).0
}

/// A degree-`(d-1)` monomial `F` with `x_i * F` a generator for every `i`.
///
/// For a monomial ideal a form witness exists exactly when a monomial one
/// does, so only monomials are tried. Returns the largest such `F`.
pub fn is_trivial(ideal: &MonomialIdeal) -> Option<Monomial> {
    monomials(ideal.num_vars(), ideal.d() - 1)
        .into_iter()
        .find(|f| (0..ideal.num_vars()).all(|i| ideal.contains_generator(&f.mul_var(i))))
}

/// Smallest variable index dividing every non-pure-power generator.
///
/// `None` when there is no such variable or when the ideal has no
/// generators beyond the pure powers.
pub fn is_trivial_type_b(ideal: &MonomialIdeal) -> Option<usize> {
    let extra: Vec<&Monomial> = ideal.extra_generators().collect();
    if extra.is_empty() {
        return None;
    }
    (0..ideal.num_vars()).find(|&j| extra.iter().all(|m| m.exponents()[j] >= 1))
}

/// Distinct ideals in the orbit of `ideal`.
pub fn orbit(ideal: &MonomialIdeal) -> Vec<MonomialIdeal> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for perm in permutations(ideal.num_vars()) {
        let image = ideal.permuted(&perm);
        if seen.insert(image.clone()) {
            out.push(image);
        }
    }
    out
}
