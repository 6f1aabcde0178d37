//! The lattice polytope `P_I = conv(A_I)`, its face lattice, and the
//! combinatorial smoothness test for the toric variety of `A_I`.
//!
//! All computations happen in exact integer coordinates of the lattice
//! `Z^{n+1} ∩ Aff(P_I)`, obtained from a Smith normal form of the difference
//! vectors, so lower-dimensional hulls need no special casing.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use itertools::Itertools;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::monomial::{inverse_system, monomials, Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub dim: usize,
    /// Indices into [`LatticePolytope::points`].
    pub points: Vec<usize>,
    /// Indices into [`LatticePolytope::vertices`].
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticePolytope {
    pub n: usize,
    pub d: u32,
    pub points: Vec<Monomial>,
    /// Indices into `points`.
    pub vertices: Vec<usize>,
    pub dim: usize,
    /// Every nonempty face, the polytope itself included, by dimension.
    pub faces: Vec<Face>,
    /// Outer facet normals `a` with `a . x <= b` on the polytope, in
    /// reduced coordinates.
    #[serde(skip)]
    pub facet_inequalities: Vec<(Vec<i64>, i64)>,
    #[serde(skip)]
    coords: Vec<Vec<i64>>,
}

impl LatticePolytope {
    pub fn vertex_points(&self) -> Vec<&Monomial> {
        self.vertices.iter().map(|&i| &self.points[i]).collect()
    }

    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == dim)
    }

    /// `f_j` counts for `j = 0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim).map(|j| self.faces_of_dim(j).count()).collect()
    }

    /// Coordinates of a point in the reduced lattice `Z^dim`.
    pub fn reduced_coordinates(&self, i: usize) -> &[i64] {
        &self.coords[i]
    }

    pub fn contains_point(&self, m: &Monomial) -> Option<usize> {
        self.points.iter().position(|p| p == m)
    }

    fn edges_at(&self, v: usize) -> Vec<&Face> {
        self.faces_of_dim(1).filter(|f| f.points.contains(&v)).collect()
    }

    /// Vertices in cyclic order, for a two-dimensional polytope.
    pub fn cyclic_vertices(&self) -> Vec<usize> {
        if self.dim != 2 {
            return self.vertices.clone();
        }
        let edges: Vec<(usize, usize)> = self
            .faces_of_dim(1)
            .map(|e| (self.vertices[e.vertices[0]], self.vertices[e.vertices[1]]))
            .collect();
        let mut order = vec![self.vertices[0]];
        while order.len() < self.vertices.len() {
            let cur = *order.last().unwrap();
            let prev = if order.len() > 1 { Some(order[order.len() - 2]) } else { None };
            let next = edges
                .iter()
                .filter_map(|&(a, b)| match (a == cur, b == cur) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
                .find(|&w| Some(w) != prev)
                .expect("polygon edges form a cycle");
            order.push(next);
        }
        order
    }
}

fn as_i64(m: &Monomial) -> Vec<i64> {
    m.exponents().iter().map(|&x| x as i64).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Small exact determinant (Bareiss in `i128`).
fn det_small(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * prev
}

/// Affine dimension of a set of points given by coordinates.
fn affine_dim(coords: &[&[i64]]) -> usize {
    if coords.len() <= 1 {
        return 0;
    }
    let rows: Vec<Vec<i64>> = coords[1..].iter().map(|c| sub(c, coords[0])).collect();
    IntMatrix::from_rows(&rows).rank()
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Integer coordinates of `points` in the saturated lattice of their affine
/// span, relative to the first point.
fn reduce_coordinates(points: &[Vec<i64>]) -> (Vec<Vec<i64>>, usize) {
    let base = &points[0];
    let diffs: Vec<Vec<i64>> = points[1..].iter().map(|p| sub(p, base)).collect();
    if diffs.is_empty() {
        return (vec![Vec::new()], 0);
    }
    let snf = smith_normal_form(&diffs);
    let k = snf.rank();
    let v: Vec<Vec<i64>> = snf
        .right
        .iter()
        .map(|row| row.iter().map(|x| x.to_i64().expect("small transform")).collect())
        .collect();
    let coords = points
        .iter()
        .map(|p| {
            let diff = sub(p, base);
            (0..k).map(|j| diff.iter().zip(&v).map(|(x, row)| x * row[j]).sum()).collect()
        })
        .collect();
    (coords, k)
}

fn facets(coords: &[Vec<i64>], k: usize) -> Vec<(Vec<i64>, i64)> {
    let m = coords.len();
    let mut found: BTreeSet<(Vec<i64>, i64)> = BTreeSet::new();
    if k == 1 {
        let lo = coords.iter().map(|c| c[0]).min().unwrap();
        let hi = coords.iter().map(|c| c[0]).max().unwrap();
        found.insert((vec![-1], -lo));
        found.insert((vec![1], hi));
        return found.into_iter().collect();
    }
    for subset in (0..m).combinations(k) {
        let base = &coords[subset[0]];
        let w: Vec<Vec<i64>> = subset[1..].iter().map(|&i| sub(&coords[i], base)).collect();
        // Cofactor expansion gives a vector orthogonal to all rows of w.
        let mut normal: Vec<i64> = (0..k)
            .map(|j| {
                let minor: Vec<Vec<i64>> = w
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let det = det_small(&minor) as i64;
                if j % 2 == 0 {
                    det
                } else {
                    -det
                }
            })
            .collect();
        let g = gcd_all(&normal);
        if g == 0 {
            continue;
        }
        normal.iter_mut().for_each(|x| *x /= g);
        let b = dot(&normal, base);
        let (mut above, mut below) = (false, false);
        for c in coords {
            let v = dot(&normal, c);
            above |= v > b;
            below |= v < b;
            if above && below {
                break;
            }
        }
        match (above, below) {
            (false, _) => {
                found.insert((normal, b));
            }
            (true, false) => {
                found.insert((normal.iter().map(|x| -x).collect(), -b));
            }
            _ => {}
        }
    }
    found.into_iter().collect()
}

/// Convex hull of `A_I` with its full face lattice.
pub fn polytope_of(ideal: &MonomialIdeal) -> Result<LatticePolytope> {
    let points = inverse_system(ideal).points;
    polytope_of_points(ideal.n(), ideal.d(), points)
}

pub fn polytope_of_points(n: usize, d: u32, points: Vec<Monomial>) -> Result<LatticePolytope> {
    if points.is_empty() {
        return Err(Error::InvalidArgument("empty point set has no polytope".into()));
    }
    let raw: Vec<Vec<i64>> = points.iter().map(as_i64).collect();
    let (coords, k) = reduce_coordinates(&raw);
    let all: Vec<usize> = (0..points.len()).collect();

    let facet_inequalities = if k == 0 { Vec::new() } else { facets(&coords, k) };
    let facet_sets: Vec<Vec<usize>> = facet_inequalities
        .iter()
        .map(|(a, b)| all.iter().copied().filter(|&i| dot(a, &coords[i]) == *b).collect())
        .collect();

    let mut sets: BTreeSet<Vec<usize>> = facet_sets.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = sets.iter().cloned().collect();
    while let Some(f) = frontier.pop() {
        for g in &facet_sets {
            let h = intersect(&f, g);
            if !h.is_empty() && sets.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    sets.insert(all);

    let mut faces: Vec<Face> = sets
        .into_iter()
        .map(|pts| {
            let cs: Vec<&[i64]> = pts.iter().map(|&i| coords[i].as_slice()).collect();
            Face {
                dim: affine_dim(&cs),
                points: pts,
                vertices: Vec::new(),
            }
        })
        .collect();
    let mut vertices: Vec<usize> = faces.iter().filter(|f| f.dim == 0).map(|f| f.points[0]).collect();
    vertices.sort_unstable();
    let vpos: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    for f in &mut faces {
        f.vertices = f.points.iter().filter_map(|p| vpos.get(p).copied()).collect();
    }
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.points.cmp(&b.points)));

    Ok(LatticePolytope {
        n,
        d,
        points,
        vertices,
        dim: k,
        faces,
        facet_inequalities,
        coords,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// A vertex is not simple or its primitive edge directions do not form a
    /// lattice basis.
    VertexBasis,
    /// A lattice point on an edge is missing from `A_I`.
    EdgeSaturation,
    /// The points of a face generate a proper sublattice of the lattice of
    /// its affine span.
    FaceLattice,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessFailure {
    pub face_dim: usize,
    pub face_vertices: Vec<Monomial>,
    pub condition: Condition,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub is_smooth: bool,
    pub dimension: usize,
    pub num_vertices: usize,
    pub failures: Vec<SmoothnessFailure>,
    /// Set when the verdict relies on the criterion as implemented rather
    /// than on a statement known for this number of variables.
    pub caveat: Option<String>,
}

pub fn is_smooth(ideal: &MonomialIdeal) -> SmoothnessReport {
    match polytope_of(ideal) {
        Ok(p) => smoothness_of_polytope(&p),
        Err(_) => SmoothnessReport {
            is_smooth: true,
            dimension: 0,
            num_vertices: 0,
            failures: Vec::new(),
            caveat: Some("empty inverse system".into()),
        },
    }
}

pub fn smoothness_of_polytope(p: &LatticePolytope) -> SmoothnessReport {
    let mut failures = Vec::new();
    let k = p.dim;
    let face_vertices = |f: &Face| f.vertices.iter().map(|&v| p.points[p.vertices[v]].clone()).collect();

    for &v in &p.vertices {
        if k == 0 {
            break;
        }
        let edges = p.edges_at(v);
        let here = vec![p.points[v].clone()];
        if edges.len() != k {
            failures.push(SmoothnessFailure {
                face_dim: 0,
                face_vertices: here,
                condition: Condition::VertexBasis,
                detail: format!("{} edges at a vertex of a {k}-dimensional polytope", edges.len()),
            });
            continue;
        }
        let dirs: Vec<Vec<i64>> = edges
            .iter()
            .map(|e| {
                let other = e.points.iter().find(|&&u| u != v).expect("edge has two points");
                let diff = sub(&p.coords[*other], &p.coords[v]);
                let g = gcd_all(&diff);
                diff.iter().map(|x| x / g).collect()
            })
            .collect();
        let det = det_small(&dirs);
        if det.abs() != 1 {
            failures.push(SmoothnessFailure {
                face_dim: 0,
                face_vertices: here,
                condition: Condition::VertexBasis,
                detail: format!("primitive edge directions have determinant {det}"),
            });
        }
    }

    for e in p.faces_of_dim(1) {
        let a = p.vertices[e.vertices[0]];
        let b = p.vertices[e.vertices[1]];
        let lattice_len = gcd_all(&sub(&p.coords[b], &p.coords[a]));
        let present = e.points.len() as i64;
        if present != lattice_len + 1 {
            failures.push(SmoothnessFailure {
                face_dim: 1,
                face_vertices: face_vertices(e),
                condition: Condition::EdgeSaturation,
                detail: format!("{} of {} lattice points on the edge lie in A_I", present, lattice_len + 1),
            });
        }
    }

    for f in p.faces.iter().filter(|f| f.dim >= 2 && f.dim < k) {
        let base = &p.coords[f.points[0]];
        let diffs: Vec<Vec<i64>> = f.points[1..].iter().map(|&i| sub(&p.coords[i], base)).collect();
        let snf = smith_normal_form(&diffs);
        if !snf.is_saturated() {
            let factors = snf.diagonal.iter().filter(|x| !x.is_zero()).map(|x| x.to_string()).join(",");
            failures.push(SmoothnessFailure {
                face_dim: f.dim,
                face_vertices: face_vertices(f),
                condition: Condition::FaceLattice,
                detail: format!("invariant factors {factors}"),
            });
        }
    }

    SmoothnessReport {
        is_smooth: failures.is_empty(),
        dimension: k,
        num_vertices: p.vertices.len(),
        failures,
        caveat: (p.n >= 4).then(|| "criterion-as-implemented for n >= 4".to_string()),
    }
}

/// Closed-form smoothness verdict for `(x0, ..., xn) m + (x0^d, ..., xn^d)`.
pub fn trivial_smoothness_classifier(n: usize, d: u32, m: &Monomial) -> Result<bool> {
    if n < 2 || d < 2 || m.num_vars() != n + 1 || m.degree() != d - 1 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 2, d >= 2 and a monomial of degree {} in {} variables",
            d.saturating_sub(1),
            n + 1
        )));
    }
    let mut e = m.exponents().to_vec();
    e.sort_unstable_by(|a, b| b.cmp(a));
    Ok(match d {
        2 => n == 2 || n == 3,
        3 => n == 2 && e[0] == 2,
        _ => e[0] == d - 1 || e[2] > 0,
    })
}

/// The trivial system `(x0, ..., xn) m + (x0^d, ..., xn^d)`.
pub fn trivial_system(n: usize, d: u32, m: &Monomial) -> Result<MonomialIdeal> {
    MonomialIdeal::with_pure_powers(n, d, (0..=n).map(|i| m.mul_var(i)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OsculationReport {
    pub vertex: Monomial,
    pub s: u32,
    /// Every point `v + a e1 + b e2` with `a + b <= s` lies in `A_I`.
    pub full: bool,
    /// Points of that triangle missing from `A_I` (outside it or not lattice
    /// points of the simplex at all).
    pub missing: Vec<Vec<i64>>,
}

/// Lattice-level osculation test at a vertex of a polygon: with the first
/// lattice points along the two edges at `v` as basis `e1, e2`, the
/// `s`-osculating space at the corresponding fixed point has full dimension
/// iff all `v + a e1 + b e2` with `a + b <= s` are in `A_I`.
pub fn vertex_osculation(ideal: &MonomialIdeal, vertex: &Monomial, s: u32) -> Result<OsculationReport> {
    if ideal.n() != 2 {
        return Err(Error::InvalidArgument("vertex osculation is implemented for n = 2 only".into()));
    }
    if s < 1 || s >= ideal.d() {
        return Err(Error::InvalidArgument(format!("need 1 <= s <= d-1, got s={s}")));
    }
    let p = polytope_of(ideal)?;
    let v = p
        .contains_point(vertex)
        .filter(|i| p.vertices.contains(i))
        .ok_or_else(|| Error::InvalidArgument(format!("{vertex} is not a vertex of the polytope")))?;
    let edges = p.edges_at(v);
    if p.dim != 2 || edges.len() != 2 {
        return Err(Error::InvalidArgument("the polytope is not a polygon".into()));
    }
    let base = as_i64(&p.points[v]);
    let dirs: Vec<Vec<i64>> = edges
        .iter()
        .map(|e| {
            let other = e.points.iter().find(|&&u| u != v).unwrap();
            let diff = sub(&as_i64(&p.points[*other]), &base);
            let g = gcd_all(&diff);
            diff.iter().map(|x| x / g).collect()
        })
        .collect();
    let mut missing = Vec::new();
    for a in 0..=s as i64 {
        for b in 0..=(s as i64 - a) {
            let q: Vec<i64> = (0..3).map(|i| base[i] + a * dirs[0][i] + b * dirs[1][i]).collect();
            let inside = q.iter().all(|&x| x >= 0)
                && p.contains_point(&Monomial::new(q.iter().map(|&x| x as u32).collect())).is_some();
            if !inside {
                missing.push(q);
            }
        }
    }
    Ok(OsculationReport {
        vertex: vertex.clone(),
        s,
        full: missing.is_empty(),
        missing,
    })
}

pub fn vertex_osculation_defect(ideal: &MonomialIdeal, vertex: &Monomial, s: u32) -> Result<bool> {
    Ok(!vertex_osculation(ideal, vertex, s)?.full)
}

/// SVG drawing of `d * Delta_2` with `A_I` as dots, the generators as
/// crosses and the polygon `P_I` outlined.
pub fn polygon_svg(ideal: &MonomialIdeal) -> Result<String> {
    if ideal.n() != 2 {
        return Err(Error::InvalidArgument("SVG output is available for n = 2 only".into()));
    }
    let d = ideal.d() as f64;
    let scale = 40.0;
    let margin = 30.0;
    let h = 3f64.sqrt() / 2.0;
    let pos = |m: &Monomial| {
        let e = m.exponents();
        let x = margin + scale * (e[1] as f64 + e[2] as f64 / 2.0);
        let y = margin + scale * h * (e[0] as f64);
        (x, y)
    };
    let width = 2.0 * margin + scale * d;
    let height = 2.0 * margin + scale * h * d;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    if let Ok(p) = polytope_of(ideal) {
        let pts: Vec<String> = p
            .cyclic_vertices()
            .iter()
            .map(|&i| {
                let (x, y) = pos(&p.points[i]);
                format!("{x:.1},{y:.1}")
            })
            .collect();
        writeln!(
            out,
            r##"  <polygon points="{}" fill="#dde8f5" stroke="#2a5d9f" stroke-width="2"/>"##,
            pts.join(" ")
        )
        .unwrap();
    }
    for m in monomials(3, ideal.d()) {
        let (x, y) = pos(&m);
        if ideal.contains_generator(&m) {
            writeln!(
                out,
                r#"  <path d="M{:.1},{:.1} L{:.1},{:.1} M{:.1},{:.1} L{:.1},{:.1}" stroke="black" stroke-width="2"><title>{m}</title></path>"#,
                x - 5.0,
                y - 5.0,
                x + 5.0,
                y + 5.0,
                x - 5.0,
                y + 5.0,
                x + 5.0,
                y - 5.0
            )
            .unwrap();
        } else {
            writeln!(out, r#"  <circle cx="{x:.1}" cy="{y:.1}" r="4" fill="black"><title>{m}</title></circle>"#).unwrap();
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::parse_inline(text, None).unwrap()
    }

    #[test]
    fn togliatti_cubic_hexagon() {
        let p = polytope_of(&ideal("x0^3,x1^3,x2^3,x0*x1*x2")).unwrap();
        assert_eq!((p.dim, p.vertices.len()), (2, 6));
        assert_eq!(p.f_vector(), vec![6, 6, 1]);
        assert!(is_smooth(&ideal("x0^3,x1^3,x2^3,x0*x1*x2")).is_smooth);
    }

    #[test]
    fn degenerate_hull_is_a_point() {
        let i = ideal("x0^2,x1^2,x2^2,x0*x1,x0*x2");
        let p = polytope_of(&i).unwrap();
        assert_eq!((p.dim, p.vertices.len()), (0, 1));
        assert!(is_smooth(&i).is_smooth);
    }

    #[test]
    fn theorem_exceptions() {
        let r = is_smooth(&ideal("x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2"));
        assert!(r.is_smooth, "{r:?}");
        let r = is_smooth(&ideal("x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2"));
        assert!(!r.is_smooth);
    }

    #[test]
    fn edge_saturation_failure() {
        for d in 4..8 {
            let t = format!("x0^{d},x1^{d},x2^{d},x0^{a}*x1^2,x0^{a}*x1*x2,x0^{a}*x2^2", a = d - 2);
            let r = is_smooth(&ideal(&t));
            assert!(!r.is_smooth);
            assert!(r.failures.iter().any(|f| f.condition == Condition::EdgeSaturation), "{r:?}");
        }
    }

    #[test]
    fn two_disjoint_quartic_blocks_are_smooth() {
        let gens = monomials(4, 4)
            .into_iter()
            .filter(|m| m.exponents()[2] + m.exponents()[3] == 0 || m.exponents()[0] + m.exponents()[1] == 0)
            .collect();
        let i = MonomialIdeal::from_monomials(3, 4, gens).unwrap();
        let r = is_smooth(&i);
        assert!(r.is_smooth, "{r:?}");
    }

    #[test]
    fn trivial_classifier_small_cases() {
        for d in 4..7 {
            let m = Monomial::pure_power(3, 0, d - 1);
            assert!(trivial_smoothness_classifier(2, d, &m).unwrap());
            assert!(is_smooth(&trivial_system(2, d, &m).unwrap()).is_smooth);
            let m = Monomial::new(vec![d - 2, 1, 0]);
            assert!(!trivial_smoothness_classifier(2, d, &m).unwrap());
            assert!(!is_smooth(&trivial_system(2, d, &m).unwrap()).is_smooth);
        }
    }

    #[test]
    fn euler_characteristic_of_boundary() {
        for t in ["x0^3,x1^3,x2^3,x0*x1*x2", "x0^4,x1^4,x2^4,x3^4,x0^3*x1,x0^3*x2,x0^3*x3"] {
            let p = polytope_of(&ideal(t)).unwrap();
            let f = p.f_vector();
            let chi: i64 = (0..p.dim).map(|j| if j % 2 == 0 { f[j] as i64 } else { -(f[j] as i64) }).sum();
            let sphere = if p.dim.is_multiple_of(2) { 0 } else { 2 };
            assert_eq!(chi, sphere, "{t}: {f:?}");
        }
    }

    #[test]
    fn osculation_at_vertices() {
        let i = ideal("x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2");
        let p = polytope_of(&i).unwrap();
        let verts: Vec<Monomial> = p.vertex_points().into_iter().cloned().collect();
        for v in &verts {
            assert!(vertex_osculation(&i, v, 1).unwrap().full);
        }
        let flex = verts
            .iter()
            .any(|v| (2..=3).any(|s| vertex_osculation_defect(&i, v, s).unwrap()));
        assert!(flex);
        assert!(vertex_osculation(&ideal("x0^3,x1^3,x2^3,x3^3,x0*x1*x2"), &Monomial::new(vec![2, 1, 0, 0]), 1).is_err());
    }

    #[test]
    fn svg_mentions_every_point() {
        let svg = polygon_svg(&ideal("x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2")).unwrap();
        assert_eq!(svg.matches("<title>").count(), 21);
        assert!(svg.contains("<polygon"));
    }
}
