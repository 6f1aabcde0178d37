//! Togliatti systems through the lattice points of the inverse system: an
//! ideal with few enough generators is Togliatti exactly when some form of
//! degree `d-1` vanishes on every point of `A_I`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lefschetz::fails_wlp_in_degree;
use crate::linalg::{evaluation_matrix, IntMatrix};
use crate::monomial::{inverse_system, monomials, permutations, Monomial, MonomialIdeal};
use crate::polynomial::Form;

/// Forms of degree `d-1` vanishing on `A_I`, as coprime integer coefficient
/// vectors over the descending monomial basis of that degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypersurfaceSpace {
    pub n: usize,
    pub d: u32,
    pub degree: u32,
    pub dimension: usize,
    #[serde(serialize_with = "crate::serde_util::bigint_vecs")]
    pub basis: Vec<Vec<BigInt>>,
}

impl HypersurfaceSpace {
    pub fn monomial_basis(&self) -> Vec<Monomial> {
        monomials(self.n + 1, self.degree)
    }

    pub fn forms(&self) -> Vec<Form> {
        let mb = self.monomial_basis();
        self.basis.iter().map(|v| Form::from_coefficients(&mb, v)).collect()
    }
}

/// Evaluation matrix of the degree-`(d-1)` monomials at the points of `A_I`.
pub fn inverse_system_matrix(ideal: &MonomialIdeal) -> IntMatrix {
    evaluation_matrix(&inverse_system(ideal), ideal.d() - 1)
}

pub fn togliatti_kernel(ideal: &MonomialIdeal) -> HypersurfaceSpace {
    let basis = inverse_system_matrix(ideal).kernel_basis();
    HypersurfaceSpace {
        n: ideal.n(),
        d: ideal.d(),
        degree: ideal.d() - 1,
        dimension: basis.len(),
        basis,
    }
}

/// Dimension of the certificate space, without computing a basis.
pub fn kernel_dimension(ideal: &MonomialIdeal) -> usize {
    inverse_system_matrix(ideal).kernel_dim()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum TogliattiStatus {
    Togliatti,
    NotTogliatti,
    /// More than `C(n+d-1, n-1)` generators; WLP failure in degree `d-1` is
    /// then forced by dimensions and says nothing.
    ExceedsGeneratorBound { fails_wlp: bool },
}

pub fn togliatti_status(ideal: &MonomialIdeal) -> TogliattiStatus {
    if !ideal.satisfies_generator_bound() {
        return TogliattiStatus::ExceedsGeneratorBound {
            fails_wlp: fails_wlp_in_degree(ideal, ideal.d() - 1),
        };
    }
    if kernel_dimension(ideal) > 0 {
        TogliattiStatus::Togliatti
    } else {
        TogliattiStatus::NotTogliatti
    }
}

pub fn is_togliatti(ideal: &MonomialIdeal) -> bool {
    togliatti_status(ideal) == TogliattiStatus::Togliatti
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TogliattiReport {
    pub satisfies_generator_bound: bool,
    pub is_togliatti: bool,
    /// Number of independent Laplace equations of order `d-1`.
    pub kernel_dimension: usize,
    pub is_minimal: bool,
    pub blocking_points: Vec<Monomial>,
    #[serde(serialize_with = "crate::serde_util::opt_bigint_vec")]
    pub certificate: Option<Vec<BigInt>>,
    pub certificate_text: Option<String>,
}

/// Minimality by point augmentation.
///
/// Adding a point `p` to `A_I` cuts the certificate space `K` down to the
/// forms in `K` vanishing at `p`. So `p` blocks minimality iff `dim K >= 2`
/// or the unique certificate vanishes at `p`. Only non-vertex points of
/// `d * Delta_n` outside `A_I` are tried; pure powers cannot be dropped.
pub fn is_minimal(ideal: &MonomialIdeal) -> Result<TogliattiReport> {
    if !ideal.satisfies_generator_bound() {
        return Err(Error::NotTogliatti);
    }
    let space = togliatti_kernel(ideal);
    if space.dimension == 0 {
        return Err(Error::NotTogliatti);
    }
    let candidates: Vec<Monomial> = ideal.extra_generators().cloned().collect();
    let (blocking_points, certificate) = if space.dimension == 1 {
        let cert = space.basis[0].clone();
        let form = Form::from_coefficients(&space.monomial_basis(), &cert);
        let blocking = candidates
            .into_iter()
            .filter(|p| form.evaluate(&point_i64(p)).is_zero())
            .collect();
        (blocking, Some(cert))
    } else {
        (candidates, None)
    };
    let certificate_text = certificate
        .as_ref()
        .map(|c| Form::from_coefficients(&space.monomial_basis(), c).to_string());
    Ok(TogliattiReport {
        satisfies_generator_bound: true,
        is_togliatti: true,
        kernel_dimension: space.dimension,
        is_minimal: blocking_points.is_empty(),
        blocking_points,
        certificate,
        certificate_text,
    })
}

/// Minimality by literally augmenting the evaluation matrix with each
/// candidate point and recomputing its rank.
pub fn blocking_points_by_rank(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let m = inverse_system_matrix(ideal);
    let cols = monomials(ideal.num_vars(), ideal.d() - 1);
    ideal
        .extra_generators()
        .filter(|p| {
            let row = crate::linalg::evaluation_row(p.exponents(), &cols);
            m.with_row(&row).kernel_dim() > 0
        })
        .cloned()
        .collect()
}

/// Report for any ideal; non-Togliatti inputs get `is_togliatti = false`.
pub fn togliatti_report(ideal: &MonomialIdeal) -> TogliattiReport {
    match is_minimal(ideal) {
        Ok(r) => r,
        Err(_) => TogliattiReport {
            satisfies_generator_bound: ideal.satisfies_generator_bound(),
            is_togliatti: false,
            kernel_dimension: kernel_dimension(ideal),
            is_minimal: false,
            blocking_points: Vec::new(),
            certificate: None,
            certificate_text: None,
        },
    }
}

pub const MINIMALITY_ORACLE_LIMIT: usize = 16;

/// Minimality from the definition: no ideal obtained by dropping one
/// non-pure generator fails the WLP in degree `d-1`.
///
/// Uses the multiplication-map rank rather than the evaluation kernel, so it
/// is independent of [`is_minimal`].
pub fn minimality_oracle(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.num_generators() > MINIMALITY_ORACLE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "number of generators",
            actual: ideal.num_generators(),
            limit: MINIMALITY_ORACLE_LIMIT,
        });
    }
    let d = ideal.d();
    if !ideal.satisfies_generator_bound() || !fails_wlp_in_degree(ideal, d - 1) {
        return Err(Error::NotTogliatti);
    }
    Ok(ideal
        .extra_generators()
        .all(|g| !fails_wlp_in_degree(&ideal.without(g).expect("extra generator"), d - 1)))
}

/// The certificate when the space is one-dimensional.
pub fn certificate_polynomial(ideal: &MonomialIdeal) -> Result<Vec<BigInt>> {
    let space = togliatti_kernel(ideal);
    if space.dimension != 1 {
        return Err(Error::CertificateDimension(space.dimension));
    }
    Ok(space.basis.into_iter().next().expect("one basis vector"))
}

pub fn certificate_form(ideal: &MonomialIdeal) -> Result<Form> {
    let c = certificate_polynomial(ideal)?;
    Ok(Form::from_coefficients(&monomials(ideal.num_vars(), ideal.d() - 1), &c))
}

fn point_i64(p: &Monomial) -> Vec<i64> {
    p.exponents().iter().map(|&x| x as i64).collect()
}

/// Coefficient-level comparison between a computed form and a printed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedComparison {
    /// Permutation applied to the computed form's variables.
    pub permutation: Vec<usize>,
    /// `+1` or `-1`: the printed form is compared against `sign * computed`.
    pub sign: i32,
    pub mismatches: Vec<CoefficientMismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientMismatch {
    pub monomial: String,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub computed: BigInt,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub printed: BigInt,
    /// The printed monomial uses a variable the ring does not have.
    pub foreign_variable: bool,
}

impl PrintedComparison {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `computed` (in `k` variables) with printed text, over every
/// relabelling of variables and both signs, keeping the labelling with the
/// fewest mismatched coefficients (first in lexicographic order on ties).
///
/// The printed text may mention variables beyond `x_{k-1}`; such monomials
/// are reported as mismatches flagged `foreign_variable`.
pub fn compare_with_printed(computed: &Form, printed: &str) -> Result<PrintedComparison> {
    let k = computed.num_vars();
    let wide = k + 8;
    let printed = Form::parse(printed, wide)?;
    let mut best: Option<PrintedComparison> = None;
    for perm in permutations(k) {
        let image = computed.permuted(&perm);
        for sign in [1, -1] {
            let signed = if sign > 0 { image.clone() } else { image.neg() };
            let mismatches = diff_forms(&signed, &printed, k);
            if best.as_ref().is_none_or(|b| mismatches.len() < b.mismatches.len()) {
                best = Some(PrintedComparison {
                    permutation: perm.clone(),
                    sign,
                    mismatches,
                });
            }
        }
    }
    Ok(best.expect("at least one permutation"))
}

fn widen(m: &Monomial, wide: usize) -> Monomial {
    let mut e = m.exponents().to_vec();
    e.resize(wide, 0);
    Monomial::new(e)
}

fn diff_forms(computed: &Form, printed: &Form, k: usize) -> Vec<CoefficientMismatch> {
    let wide = printed.num_vars();
    let mut keys: Vec<Monomial> = computed.terms().map(|(m, _)| widen(m, wide)).collect();
    keys.extend(printed.terms().map(|(m, _)| m.clone()));
    keys.sort_by(|a, b| b.cmp(a));
    keys.dedup();
    keys.into_iter()
        .filter_map(|m| {
            let foreign = m.exponents()[k..].iter().any(|&e| e > 0);
            let c = if foreign {
                BigInt::zero()
            } else {
                computed.coefficient(&Monomial::new(m.exponents()[..k].to_vec()))
            };
            let p = printed.coefficient(&m);
            (c != p).then(|| CoefficientMismatch {
                monomial: m.to_string(),
                computed: c,
                printed: p,
                foreign_variable: foreign,
            })
        })
        .collect()
}

/// True when two coefficient vectors agree up to a nonzero scalar.
pub fn proportional(a: &[BigInt], b: &[BigInt]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return b.iter().all(|x| x.is_zero());
    };
    if b[i].is_zero() {
        return false;
    }
    a.iter().zip(b).all(|(x, y)| x * &b[i] == y * &a[i])
}

/// Sign-normalized primitive coefficients of a form of the given degree.
pub fn primitive_coefficients(f: &Form, degree: u32) -> Vec<BigInt> {
    let mut c = f.coefficients(degree);
    crate::linalg::normalize_primitive(&mut c);
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::parse_inline(text, None).unwrap()
    }

    fn ex35() -> MonomialIdeal {
        let gens = monomials(4, 3)
            .into_iter()
            .filter(|m| m.exponents()[2] + m.exponents()[3] == 0 || m.exponents()[0] + m.exponents()[1] == 0)
            .collect();
        MonomialIdeal::from_monomials(3, 3, gens).unwrap()
    }

    #[test]
    fn ex35_quadric() {
        let i = ex35();
        let space = togliatti_kernel(&i);
        assert_eq!(space.dimension, 1);
        let q = Form::parse("2(x0^2+x1^2+x2^2+x3^2)+4(x0x1+x2x3)-5(x0x2+x0x3+x1x2+x1x3)", 4).unwrap();
        assert!(proportional(&space.basis[0], &q.coefficients(2)));
        let r = is_minimal(&i).unwrap();
        assert!(r.is_minimal);
        assert!(minimality_oracle(&i).unwrap());
    }

    #[test]
    fn togliatti_cubic_certificate() {
        let i = ideal("x0^3,x1^3,x2^3,x0*x1*x2");
        let c = certificate_polynomial(&i).unwrap();
        let expected = Form::parse("2(x0^2+x1^2+x2^2)-5(x0x1+x0x2+x1x2)", 3).unwrap();
        assert!(proportional(&c, &expected.coefficients(2)));
        assert!(c[0].is_positive());
    }

    #[test]
    fn pure_powers_have_no_certificate() {
        for (n, d) in [(2, 3), (2, 5), (3, 4)] {
            let i = MonomialIdeal::with_pure_powers(n, d, vec![]).unwrap();
            assert_eq!(togliatti_kernel(&i).dimension, 0);
            assert!(!is_togliatti(&i));
            assert!(matches!(is_minimal(&i), Err(Error::NotTogliatti)));
            assert!(matches!(certificate_polynomial(&i), Err(Error::CertificateDimension(0))));
        }
    }

    #[test]
    fn theorem_exceptions_are_minimal() {
        for text in ["x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2", "x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2"] {
            let i = ideal(text);
            assert!(is_togliatti(&i));
            let r = is_minimal(&i).unwrap();
            assert!(r.is_minimal && r.kernel_dimension == 1);
            assert!(minimality_oracle(&i).unwrap());
        }
    }

    #[test]
    fn removable_generator_blocks() {
        let i = ideal("x0^3,x1^3,x2^3,x3^3,x0^2*x1,x0^2*x2,x0^2*x3,x1^2*x2");
        let r = is_minimal(&i).unwrap();
        assert!(!r.is_minimal);
        assert!(r.blocking_points.contains(&Monomial::new(vec![0, 2, 1, 0])));
        assert!(!minimality_oracle(&i).unwrap());
        assert_eq!(r.blocking_points, blocking_points_by_rank(&i));
    }

    #[test]
    fn bound_is_reported_separately() {
        // Thirteen generators exceed C(4,1) = 4 for n = 2, d = 3.
        let i = MonomialIdeal::with_pure_powers(2, 3, monomials(3, 3)).unwrap();
        assert!(matches!(togliatti_status(&i), TogliattiStatus::ExceedsGeneratorBound { .. }));
        assert!(!is_togliatti(&i));
    }

    #[test]
    fn f3_certificate() {
        let i = ideal("x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2");
        let f = certificate_form(&i).unwrap();
        let printed = Form::parse("(x0+x1-3x2)(3x0^2-10x0x1+3x1^2-4x0x2-4x1x2+x2^2)", 3).unwrap();
        assert!(proportional(&f.coefficients(3), &printed.coefficients(3)));
        let cmp = compare_with_printed(&f, "(x0+x1-3x2)(3x0^2-10x0x1+3x1^2-4x0x2-4x1x2+x2^2)").unwrap();
        assert!(cmp.agrees());
    }
}
