//! Exact linear algebra: rank and kernels by fraction-free elimination,
//! Smith normal form over the integers, and monomial evaluation matrices.
//!
//! Hot paths work on small-integer matrices ([`IntMatrix`]) and first try a
//! rank computation modulo a large prime. A modular rank can only
//! underestimate the rational rank, so a full-rank answer is already exact;
//! anything else falls back to BigInt Bareiss elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::monomial::{monomials, LatticePointSet};

/// Dense matrix of reduced rationals.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Rows scaled by the lcm of their denominators.
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// `M * v`.
    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn rank(&self) -> usize {
        bareiss_echelon(self.to_integer_rows(), self.cols).pivots.len()
    }

    /// Basis of the right kernel, each vector scaled to coprime integers
    /// with positive leading coefficient.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        kernel_from_integer_rows(self.to_integer_rows(), self.cols)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense matrix of machine integers; the workhorse for evaluation and
/// multiplication maps, whose entries stay far below `i64` range.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols: c,
            entries: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Appends a row in place.
    pub fn push_row(&mut self, row: &[i64]) {
        assert!(self.rows == 0 || row.len() == self.cols);
        if self.rows == 0 {
            self.cols = row.len();
        }
        self.entries.extend_from_slice(row);
        self.rows += 1;
    }

    /// Copy with one extra row.
    pub fn with_row(&self, row: &[i64]) -> IntMatrix {
        let mut m = self.clone();
        m.push_row(row);
        m
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        }
    }

    fn to_bigint_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let full = self.rows.min(self.cols);
        if full == 0 {
            return 0;
        }
        let rp = rank_mod_p(self);
        if rp == full {
            return rp;
        }
        bareiss_echelon(self.to_bigint_rows(), self.cols).pivots.len()
    }

    /// Rank computed only with exact BigInt elimination (no modular shortcut).
    pub fn rank_exact(&self) -> usize {
        bareiss_echelon(self.to_bigint_rows(), self.cols).pivots.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        kernel_from_integer_rows(self.to_bigint_rows(), self.cols)
    }

    /// `M * v` over the integers.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, b)| b * a).sum())
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn rank_mod_p(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<u64> = m.entries.iter().map(|&x| x.rem_euclid(P as i64) as u64).collect();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let inv = powmod(a[rank * cols + c], P - 2);
        for r in rank + 1..rows {
            let f = a[r * cols + c];
            if f == 0 {
                continue;
            }
            let f = mulmod(f, inv);
            for j in c..cols {
                let sub = mulmod(f, a[rank * cols + j]);
                let v = a[r * cols + j];
                a[r * cols + j] = if v >= sub { v - sub } else { v + P - sub };
            }
        }
        rank += 1;
    }
    rank
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// Pivot column of each of the first `pivots.len()` rows.
    pivots: Vec<usize>,
}

/// Fraction-free (Bareiss) forward elimination to row echelon form.
fn bareiss_echelon(mut a: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: a, pivots }
}

fn kernel_from_integer_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let ech = bareiss_echelon(rows, cols);
    let mut is_pivot = vec![false; cols];
    for &c in &ech.pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![BigRational::zero(); cols];
        x[free] = BigRational::one();
        for (i, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[i];
            let s: BigRational = (pc + 1..cols)
                .filter(|&j| !row[j].is_zero() && !x[j].is_zero())
                .map(|j| &x[j] * BigRational::from_integer(row[j].clone()))
                .sum();
            x[pc] = -s / BigRational::from_integer(row[pc].clone());
        }
        basis.push(primitive_integer_vector(&x));
    }
    basis
}

/// Scales a nonzero rational vector to coprime integers with positive first
/// nonzero entry.
pub fn primitive_integer_vector(x: &[BigRational]) -> Vec<BigInt> {
    let l = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<BigInt> = x.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    normalize_primitive(&mut ints);
    ints
}

/// Divides by the content and fixes the sign of the first nonzero entry.
pub fn normalize_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if neg {
            *x = -&*x;
        }
    }
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    prev * sign
}

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d_1 | d_2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnfResult {
    /// The `min(rows, cols)` diagonal entries, nonnegative.
    pub diagonal: Vec<BigInt>,
    pub left: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
}

impl SnfResult {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// True when every nonzero invariant factor is 1, i.e. the row lattice
    /// is saturated in its rational span.
    pub fn is_saturated(&self) -> bool {
        self.diagonal.iter().all(|d| d.is_zero() || d.is_one())
    }
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> SnfResult {
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
    smith_normal_form_big(big)
}

fn identity_big(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn smith_normal_form_big(mut a: Vec<Vec<BigInt>>) -> SnfResult {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut u = identity_big(rows);
    let mut v = identity_big(cols);

    let swap_cols = |m: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    };
    // col_j -= q * col_i
    let sub_col = |m: &mut Vec<Vec<BigInt>>, j: usize, i: usize, q: &BigInt| {
        for row in m.iter_mut() {
            let t = &row[i] * q;
            row[j] -= t;
        }
    };
    let sub_row = |m: &mut Vec<Vec<BigInt>>, j: usize, i: usize, q: &BigInt| {
        let src = m[i].clone();
        for (x, s) in m[j].iter_mut().zip(src) {
            *x -= s * q;
        }
    };

    for t in 0..rows.min(cols) {
        // Pick the smallest nonzero entry in the remaining block as pivot.
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                break;
            };
            a.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    sub_row(&mut a, i, t, &q);
                    sub_row(&mut u, i, t, &q);
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    sub_col(&mut a, j, t, &q);
                    sub_col(&mut v, j, t, &q);
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the rest of the block.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            match bad {
                Some((i, _)) => {
                    // row_t += row_i, then reduce again.
                    let q = -BigInt::one();
                    sub_row(&mut a, t, i, &q);
                    sub_row(&mut u, t, i, &q);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    let diagonal = (0..rows.min(cols)).map(|i| a[i][i].clone()).collect();
    SnfResult {
        diagonal,
        left: u,
        right: v,
    }
}

/// Rows indexed by the points, columns by the degree-`e` monomials in
/// `n + 1` variables (descending graded-lex); entry = monomial evaluated at
/// the point's coordinates.
pub fn evaluation_matrix(points: &LatticePointSet, e: u32) -> IntMatrix {
    let cols = monomials(points.n + 1, e);
    let mut m = IntMatrix::zeros(0, cols.len());
    for p in &points.points {
        m.push_row(&evaluation_row(p.exponents(), &cols));
    }
    m
}

/// One row of an evaluation matrix.
pub fn evaluation_row(point: &[u32], cols: &[crate::monomial::Monomial]) -> Vec<i64> {
    cols.iter().map(|c| c.evaluate(point)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{inverse_system, Monomial, MonomialIdeal};

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(5).rank(), 5);
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(RationalMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        let m = RationalMatrix::from_rows(vec![vec![BigRational::new(1.into(), 2.into()), q(1)], vec![q(1), q(2)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(RationalMatrix::identity(4).kernel_basis().is_empty());
        assert_eq!(RationalMatrix::from_i64_rows(&[vec![1, 1]]).kernel_basis(), vec![big(&[1, -1])]);
        let m = IntMatrix::from_rows(&[vec![2, 4, 6], vec![1, 2, 3]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn modular_rank_agrees_with_exact() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_exact(), 2);
        let m = IntMatrix::from_rows(&[vec![1, 0, -3], vec![0, 5, 6], vec![7, 8, 10]]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_normal_form(&[vec![2, 0], vec![0, 3]]).diagonal, big(&[1, 6]));
        assert_eq!(smith_normal_form(&[vec![2, 4], vec![6, 8]]).diagonal, big(&[2, 4]));
        assert_eq!(smith_normal_form(&[vec![0, 0, 0], vec![0, 0, 0]]).diagonal, big(&[0, 0]));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&[vec![2, 4], vec![6, 8]]), BigInt::from(-8));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
    }

    #[test]
    fn evaluation_matrix_examples() {
        let single = LatticePointSet {
            n: 2,
            d: 3,
            points: vec![Monomial::new(vec![1, 1, 1])],
        };
        assert_eq!(evaluation_matrix(&single, 2).row(0), &[1; 6]);

        let gens = monomials(4, 3)
            .into_iter()
            .filter(|m| m.exponents()[2] + m.exponents()[3] == 0 || m.exponents()[0] + m.exponents()[1] == 0)
            .collect();
        let ideal = MonomialIdeal::from_monomials(3, 3, gens).unwrap();
        let m = evaluation_matrix(&inverse_system(&ideal), 2);
        assert_eq!((m.rows(), m.cols()), (12, 10));
        assert_eq!(m.rank(), 9);
        assert_eq!(m.to_rational().rank(), 9);
    }

    #[test]
    fn vertex_rows_have_one_nonzero() {
        let d = 4;
        let verts = LatticePointSet {
            n: 2,
            d,
            points: (0..3).map(|i| Monomial::pure_power(3, i, d)).collect(),
        };
        let m = evaluation_matrix(&verts, d - 1);
        for i in 0..3 {
            let nz: Vec<i64> = m.row(i).iter().copied().filter(|&x| x != 0).collect();
            assert_eq!(nz, vec![(d as i64).pow(d - 1)]);
        }
    }
}
