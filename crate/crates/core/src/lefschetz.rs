//! Weak Lefschetz property for artinian monomial ideals, tested with the
//! linear form `L = x0 + ... + xn`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::linalg::IntMatrix;
use crate::monomial::{monomials, Monomial, MonomialIdeal};

/// Monomial basis of `(R/I)_j`, descending.
pub fn standard_monomials(ideal: &MonomialIdeal, j: u32) -> Vec<Monomial> {
    let all = monomials(ideal.num_vars(), j);
    if j < ideal.d() {
        return all;
    }
    all.into_iter().filter(|m| !ideal.contains(m)).collect()
}

/// Highest degree in which `R/I` is nonzero: `(n+1)(d-1)`, the degree of the
/// socle monomial `(x0...xn)^(d-1)`.
pub fn top_degree(ideal: &MonomialIdeal) -> u32 {
    ideal.num_vars() as u32 * (ideal.d() - 1)
}

/// Matrix of `x L : (R/I)_j -> (R/I)_{j+1}`; rows index the target basis,
/// columns the source basis.
pub fn multiplication_matrix(ideal: &MonomialIdeal, j: u32) -> IntMatrix {
    let source = standard_monomials(ideal, j);
    let target = standard_monomials(ideal, j + 1);
    multiplication_matrix_between(&source, &target)
}

fn multiplication_matrix_between(source: &[Monomial], target: &[Monomial]) -> IntMatrix {
    let mut m = IntMatrix::zeros(target.len(), source.len());
    for (c, s) in source.iter().enumerate() {
        for i in 0..s.num_vars() {
            let t = s.mul_var(i);
            // Targets are sorted descending.
            if let Ok(r) = target.binary_search_by(|x| t.cmp(x)) {
                m.set(r, c, 1);
            }
        }
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRecord {
    pub j: u32,
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: usize,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WlpReport {
    pub has_wlp: bool,
    pub failing_degrees: Vec<u32>,
    pub degrees: Vec<DegreeRecord>,
}

pub fn degree_record(ideal: &MonomialIdeal, j: u32) -> DegreeRecord {
    let source = standard_monomials(ideal, j);
    let target = standard_monomials(ideal, j + 1);
    let rank = if source.is_empty() || target.is_empty() {
        0
    } else {
        multiplication_matrix_between(&source, &target).rank()
    };
    DegreeRecord {
        j,
        dim_source: source.len(),
        dim_target: target.len(),
        rank,
        maximal: rank == source.len().min(target.len()),
    }
}

/// Checks every degree `j` with `(R/I)_{j+1} != 0`.
pub fn wlp_report(ideal: &MonomialIdeal) -> WlpReport {
    let degrees: Vec<DegreeRecord> = (0..top_degree(ideal)).map(|j| degree_record(ideal, j)).collect();
    let failing_degrees: Vec<u32> = degrees.iter().filter(|r| !r.maximal).map(|r| r.j).collect();
    WlpReport {
        has_wlp: failing_degrees.is_empty(),
        failing_degrees,
        degrees,
    }
}

/// `x L` is neither injective nor surjective in degree `j`.
pub fn fails_wlp_in_degree(ideal: &MonomialIdeal, j: u32) -> bool {
    !degree_record(ideal, j).maximal
}

fn factorial(k: u32) -> i64 {
    (1..=k as i64).product()
}

/// Coefficient matrix of the generators restricted to the hyperplane
/// `x0 = -(x1 + ... + xn)`: rows are the degree-`d` monomials in
/// `x1..xn`, columns the generators.
pub fn hyperplane_restriction_matrix(ideal: &MonomialIdeal) -> IntMatrix {
    let rows = monomials(ideal.n(), ideal.d());
    let mut m = IntMatrix::zeros(rows.len(), ideal.num_generators());
    for (c, g) in ideal.generators().iter().enumerate() {
        let a0 = g.exponents()[0];
        let rest = &g.exponents()[1..];
        let sign = if a0 % 2 == 0 { 1 } else { -1 };
        for (r, target) in rows.iter().enumerate() {
            let t = target.exponents();
            if t.iter().zip(rest).any(|(x, y)| x < y) {
                continue;
            }
            // Multinomial a0! / prod (t_i - rest_i)!
            let denom: i64 = t.iter().zip(rest).map(|(x, y)| factorial(x - y)).product();
            m.set(r, c, sign * factorial(a0) / denom);
        }
    }
    m
}

/// A nonzero linear dependence among the generators after restriction to
/// `x0 + ... + xn = 0`, as coprime integer coefficients in generator order.
pub fn hyperplane_dependence(ideal: &MonomialIdeal) -> Option<Vec<BigInt>> {
    let m = hyperplane_restriction_matrix(ideal);
    if m.rank() == m.cols() {
        return None;
    }
    m.kernel_basis().into_iter().next()
}
