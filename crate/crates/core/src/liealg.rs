//! Lie algebras of matrices: the algebra of a quadric intersection,
//! structure constants, Killing form, radical, Levi subalgebra, and the
//! splitting of a six-dimensional semisimple algebra into two ideals.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::arith::{rational_sqrt, rational_squarefree};
use crate::algebra::{independent_subset, ExactMatrix, ExactScalar, MultiPoly, SpanSolver, Vector};
use crate::error::{Error, Result};
use crate::quadrics::{quadric_coeffs, QuadricSpace};

/// A Lie subalgebra of `gl_n` with its structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    /// Size `n` of the ambient matrices.
    pub ambient_dim: usize,
    pub basis: Vec<ExactMatrix>,
    /// `structure_constants[i][j]` holds the coordinates of `[b_i, b_j]`.
    pub structure_constants: Vec<Vec<Vector>>,
    pub killing: ExactMatrix,
}

impl LieAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `[u, v]` for coordinate vectors `u`, `v`.
    pub fn bracket_coords(&self, u: &[ExactScalar], v: &[ExactScalar]) -> Vector {
        let d = self.dim();
        let mut out = vec![ExactScalar::zero(); d];
        for i in 0..d {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if v[j].is_zero() || i == j {
                    continue;
                }
                let s = &u[i] * &v[j];
                for (o, c) in out.iter_mut().zip(&self.structure_constants[i][j]) {
                    if !c.is_zero() {
                        *o += &(&s * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_{b_i}` on the basis (column `j` holds `[b_i, b_j]`).
    pub fn ad(&self, i: usize) -> ExactMatrix {
        ExactMatrix::from_columns(&self.structure_constants[i])
    }

    pub fn ad_of(&self, u: &[ExactScalar]) -> ExactMatrix {
        let d = self.dim();
        let cols: Vec<Vector> = (0..d)
            .map(|j| {
                let mut e = vec![ExactScalar::zero(); d];
                e[j] = ExactScalar::one();
                self.bracket_coords(u, &e)
            })
            .collect();
        ExactMatrix::from_columns(&cols)
    }

    /// The matrix `Σ u_i b_i`.
    pub fn element(&self, u: &[ExactScalar]) -> ExactMatrix {
        let n = self.ambient_dim;
        let mut m = ExactMatrix::zeros(n, n);
        for (c, b) in u.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&b.scale(c));
            }
        }
        m
    }

    pub fn killing_value(&self, u: &[ExactScalar], v: &[ExactScalar]) -> ExactScalar {
        let kv = self.killing.mul_vec(v);
        u.iter().zip(&kv).fold(ExactScalar::zero(), |acc, (a, b)| &acc + &(a * b))
    }

    pub fn is_semisimple(&self) -> bool {
        self.killing.rank() == self.dim()
    }

    pub fn field_disc(&self) -> Option<i64> {
        self.basis.iter().find_map(|b| b.entries().iter().find_map(ExactScalar::disc))
    }
}

/// Structure constants and Killing form of the span of `basis`, which must
/// be linearly independent and closed under the commutator.
pub fn structure_constants(basis: Vec<ExactMatrix>) -> Result<LieAlgebra> {
    let d = basis.len();
    let n = basis.first().map_or(0, ExactMatrix::rows);
    let solver = SpanSolver::try_new(basis.iter().map(ExactMatrix::flatten).collect())
        .ok_or_else(|| Error::Unsupported("basis is linearly dependent".into()))?;
    let zero = vec![ExactScalar::zero(); d];
    let mut structure = vec![vec![zero.clone(); d]; d];
    for i in 0..d {
        for j in i + 1..d {
            let c = solver.coordinates(&basis[i].bracket(&basis[j]).flatten()).ok_or(Error::NotClosedUnderBracket)?;
            structure[j][i] = c.iter().map(|x| -x).collect();
            structure[i][j] = c;
        }
    }
    let mut alg = LieAlgebra { ambient_dim: n, basis, structure_constants: structure, killing: ExactMatrix::zeros(d, d) };
    alg.killing = killing_form(&alg);
    Ok(alg)
}

/// Gram matrix of `B(x, y) = Trace(ad_x ∘ ad_y)`.
pub fn killing_form(l: &LieAlgebra) -> ExactMatrix {
    let d = l.dim();
    let ads: Vec<ExactMatrix> = (0..d).map(|i| l.ad(i)).collect();
    let mut k = ExactMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let v = ads[i].mul(&ads[j]).trace();
            k[(j, i)] = v.clone();
            k[(i, j)] = v;
        }
    }
    k
}

fn unit_matrix(n: usize, k: usize, l: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    m[(k, l)] = ExactScalar::one();
    m
}

/// All trace-zero `M` whose derivation `Σ_k ∂f/∂x_k (Mx)_k` maps every
/// generator `f` into the span of the quadrics, as one kernel computation.
pub fn lie_algebra_of_quadrics(q: &QuadricSpace) -> Result<LieAlgebra> {
    let n = q.nvars();
    let qvecs = q.coefficient_vectors();
    let annihilator = if qvecs.is_empty() {
        // every quadric direction must vanish
        let s = n * (n + 1) / 2;
        (0..s)
            .map(|i| {
                let mut e = vec![ExactScalar::zero(); s];
                e[i] = ExactScalar::one();
                e
            })
            .collect()
    } else {
        ExactMatrix::from_rows(qvecs).kernel()
    };
    let x: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(n, i)).collect();
    // column (k, l): the image of E_kl applied to each generator
    let mut cols: Vec<Vec<Vector>> = Vec::with_capacity(n * n);
    let grads: Vec<Vec<MultiPoly>> = q.basis.iter().map(|f| (0..n).map(|k| f.partial(k)).collect()).collect();
    for k in 0..n {
        for l in 0..n {
            let per_gen: Vec<Vector> =
                grads.iter().map(|g| quadric_coeffs(&g[k].mul(&x[l]), n)).collect();
            cols.push(per_gen);
        }
    }
    let mut rows: Vec<Vector> = Vec::new();
    for gi in 0..q.basis.len() {
        for a in &annihilator {
            let row: Vector = cols
                .iter()
                .map(|c| c[gi].iter().zip(a).fold(ExactScalar::zero(), |acc, (u, v)| &acc + &(u * v)))
                .collect();
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    let mut trace = vec![ExactScalar::zero(); n * n];
    for k in 0..n {
        trace[k * n + k] = ExactScalar::one();
    }
    rows.push(trace);
    let ker = ExactMatrix::from_rows(rows).kernel();
    let basis: Vec<ExactMatrix> = ker
        .into_iter()
        .map(|v| {
            let mut m = ExactMatrix::zeros(n, n);
            for k in 0..n {
                for l in 0..n {
                    if !v[k * n + l].is_zero() {
                        m = m.add(&unit_matrix(n, k, l).scale(&v[k * n + l]));
                    }
                }
            }
            m
        })
        .collect();
    if basis.is_empty() {
        return Ok(LieAlgebra { ambient_dim: n, basis, structure_constants: Vec::new(), killing: ExactMatrix::zeros(0, 0) });
    }
    structure_constants(basis)
}

fn span_of(vectors: Vec<Vector>) -> Vec<Vector> {
    let idx = independent_subset(&vectors);
    idx.into_iter().map(|i| vectors[i].clone()).collect()
}

/// Coordinates of `[L, L]`.
fn derived_coords(l: &LieAlgebra) -> Vec<Vector> {
    let d = l.dim();
    span_of((0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).map(|(i, j)| l.structure_constants[i][j].clone()).collect())
}

/// Coordinates of the Killing-orthogonal complement of `[L, L]`.
pub fn radical_coords(l: &LieAlgebra) -> Vec<Vector> {
    let d = l.dim();
    if d == 0 {
        return Vec::new();
    }
    let derived = derived_coords(l);
    if derived.is_empty() {
        return unit_vectors(d);
    }
    let rows: Vec<Vector> = derived.iter().map(|v| l.killing.mul_vec(v)).collect();
    ExactMatrix::from_rows(rows).kernel()
}

fn unit_vectors(d: usize) -> Vec<Vector> {
    (0..d)
        .map(|i| {
            let mut e = vec![ExactScalar::zero(); d];
            e[i] = ExactScalar::one();
            e
        })
        .collect()
}

/// Basis of the solvable radical.
pub fn solvable_radical(l: &LieAlgebra) -> Vec<ExactMatrix> {
    radical_coords(l).iter().map(|v| l.element(v)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct LeviDecomposition {
    pub levi: LieAlgebra,
    pub radical: Vec<ExactMatrix>,
}

fn bracket_span(l: &LieAlgebra, a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    span_of(a.iter().flat_map(|u| b.iter().map(move |v| l.bracket_coords(u, v))).collect())
}

/// Linear functionals (as row vectors) vanishing exactly on `span`.
fn annihilator(span: &[Vector], d: usize) -> Vec<Vector> {
    if span.is_empty() {
        return unit_vectors(d);
    }
    ExactMatrix::from_rows(span.to_vec()).kernel()
}

fn dot(a: &[ExactScalar], b: &[ExactScalar]) -> ExactScalar {
    a.iter().zip(b).fold(ExactScalar::zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { &acc + &(x * y) })
}

fn axpy(y: &mut [ExactScalar], a: &ExactScalar, x: &[ExactScalar]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(a * xi);
        }
    }
}

/// Levi subalgebra by lifting a complement of the radical through the
/// derived series of the radical, one exact linear system per layer.
pub fn levi_subalgebra(l: &LieAlgebra) -> Result<LeviDecomposition> {
    let d = l.dim();
    let rad = radical_coords(l);
    let radical: Vec<ExactMatrix> = rad.iter().map(|v| l.element(v)).collect();
    if rad.len() == d {
        let levi = LieAlgebra { ambient_dim: l.ambient_dim, basis: Vec::new(), structure_constants: Vec::new(), killing: ExactMatrix::zeros(0, 0) };
        return Ok(LeviDecomposition { levi, radical });
    }
    if rad.is_empty() {
        return Ok(LeviDecomposition { levi: l.clone(), radical });
    }
    // complement of the radical from coordinate vectors
    let mut all = rad.clone();
    all.extend(unit_vectors(d));
    let picked = independent_subset(&all);
    let mut ys: Vec<Vector> = picked.into_iter().filter(|&i| i >= rad.len()).map(|i| all[i].clone()).collect();
    let s = ys.len();
    // structure constants of L/R in the basis ys
    let mut full = ys.clone();
    full.extend(rad.iter().cloned());
    let coords = SpanSolver::new(full);
    let quotient: Vec<Vec<Vector>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| coords.coordinates(&l.bracket_coords(&ys[i], &ys[j])).expect("inside L")[..s].to_vec())
                .collect()
        })
        .collect();
    // derived series of the radical
    let mut series = vec![rad.clone()];
    loop {
        let last = series.last().unwrap();
        if last.is_empty() {
            break;
        }
        let next = bracket_span(l, last, last);
        if next.len() == last.len() {
            return Err(Error::NotExpectedShape("radical is not solvable".into()));
        }
        series.push(next);
    }
    for layer in 0..series.len() - 1 {
        let ri = &series[layer];
        let ann = annihilator(&series[layer + 1], d);
        let m = ri.len();
        // unknowns α[k][t]: z_k = Σ_t α[k][t] r_t
        let nunk = s * m;
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vector = Vec::new();
        let brackets_y_r: Vec<Vec<Vector>> = ys.iter().map(|y| ri.iter().map(|r| l.bracket_coords(y, r)).collect()).collect();
        for i in 0..s {
            for j in i + 1..s {
                // defect [y_i, y_j] − Σ c_ij^k y_k
                let mut defect = l.bracket_coords(&ys[i], &ys[j]);
                for k in 0..s {
                    axpy(&mut defect, &-&quotient[i][j][k], &ys[k]);
                }
                for a in &ann {
                    let mut row = vec![ExactScalar::zero(); nunk];
                    for t in 0..m {
                        // [y_i, z_j] and [z_i, y_j] = −[y_j, z_i]
                        row[j * m + t] += &dot(a, &brackets_y_r[i][t]);
                        row[i * m + t] -= &dot(a, &brackets_y_r[j][t]);
                        for k in 0..s {
                            let c = &quotient[i][j][k];
                            if !c.is_zero() {
                                row[k * m + t] -= &(c * &dot(a, &ri[t]));
                            }
                        }
                    }
                    rows.push(row);
                    rhs.push(-dot(a, &defect));
                }
            }
        }
        if rows.is_empty() {
            continue;
        }
        let sol = ExactMatrix::from_rows(rows)
            .solve(&rhs)
            .ok_or_else(|| Error::NotExpectedShape("Levi lifting system inconsistent".into()))?;
        for (k, y) in ys.iter_mut().enumerate() {
            for t in 0..m {
                axpy(y, &sol[k * m + t], &ri[t]);
            }
        }
    }
    let levi = structure_constants(ys.iter().map(|y| l.element(y)).collect())?;
    Ok(LeviDecomposition { levi, radical })
}

/// Result of splitting a six-dimensional semisimple algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealSplit {
    pub ideals: (LieAlgebra, LieAlgebra),
    /// Squarefree `d` when the ideals are only defined over `k(√d)`.
    pub extension: Option<i64>,
}

/// Commutant of all `ad` matrices.
pub fn centroid(s: &LieAlgebra) -> Vec<ExactMatrix> {
    let d = s.dim();
    let ads: Vec<ExactMatrix> = (0..d).map(|i| s.ad(i)).collect();
    let mut rows: Vec<Vector> = Vec::new();
    for a in &ads {
        // (C A − A C)_{pq} as a linear form in the entries of C
        for p in 0..d {
            for q in 0..d {
                let mut row = vec![ExactScalar::zero(); d * d];
                for r in 0..d {
                    row[p * d + r] += &a[(r, q)];
                    row[r * d + q] -= &a[(p, r)];
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    ExactMatrix::from_rows(rows).kernel().into_iter().map(|v| ExactMatrix::from_flat(d, d, v)).collect()
}

fn ideal_from(s: &LieAlgebra, kernel: Vec<Vector>) -> Result<LieAlgebra> {
    structure_constants(kernel.iter().map(|v| s.element(v)).collect())
}

/// The two simple ideals of a six-dimensional semisimple algebra, read off
/// the eigenspaces of a non-scalar centroid element.
pub fn split_semisimple_ideals(s: &LieAlgebra) -> Result<IdealSplit> {
    let d = s.dim();
    if d != 6 || !s.is_semisimple() {
        return Err(Error::NotSumOfTwoSimpleIdeals(0));
    }
    let cent = centroid(s);
    if cent.len() != 2 {
        return Err(Error::NotSumOfTwoSimpleIdeals(cent.len()));
    }
    let id = ExactMatrix::identity(d);
    let c = cent
        .into_iter()
        .find(|m| independent_subset(&[id.flatten(), m.flatten()]).len() == 2)
        .expect("two-dimensional centroid has a non-scalar element");
    let mu = c.minimal_polynomial();
    if mu.degree() != Some(2) {
        return Err(Error::NotSumOfTwoSimpleIdeals(2));
    }
    let (a, b, cc) = (mu.coeff(2), mu.coeff(1), mu.coeff(0));
    let disc = &(&b * &b) - &(&(&a * &cc) * &ExactScalar::from_i64(4));
    let disc_q = disc.to_rational().ok_or_else(|| Error::Unsupported("centroid over an extension".into()))?;
    let two_a = &a * &ExactScalar::from_i64(2);
    let (roots, extension) = if let Some(r) = rational_sqrt(&disc_q.abs()).filter(|_| !disc_q.is_negative()) {
        let r = ExactScalar::from_rational(r);
        let r1 = &(&-&b - &r) / &two_a;
        let r2 = &(&-&b + &r) / &two_a;
        ((r1, r2), None)
    } else {
        let (k, dd) = rational_squarefree(&disc_q)?;
        if let Some(e) = s.field_disc().filter(|&e| e != dd) {
            return Err(Error::Unsupported(format!("second extension sqrt({dd}) over sqrt({e})")));
        }
        let root = ExactScalar::quadratic(BigRational::zero(), k, dd);
        let r1 = &(&-&b + &root) / &two_a;
        let r2 = &(&-&b - &root) / &two_a;
        ((r1, r2), Some(dd))
    };
    let k1 = c.sub(&id.scale(&roots.0)).kernel();
    let k2 = c.sub(&id.scale(&roots.1)).kernel();
    if k1.len() != 3 || k2.len() != 3 {
        return Err(Error::NotSumOfTwoSimpleIdeals(2));
    }
    Ok(IdealSplit { ideals: (ideal_from(s, k1)?, ideal_from(s, k2)?), extension })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_poly;

    fn quadrics(n: usize, qs: &[&str]) -> QuadricSpace {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        QuadricSpace { ambient_dim: n - 1, basis: qs.iter().map(|s| parse_poly(s, &refs).unwrap()).collect() }
    }

    pub(crate) fn sl2() -> Vec<ExactMatrix> {
        vec![
            ExactMatrix::from_i64(&[&[1, 0], &[0, -1]]),
            ExactMatrix::from_i64(&[&[0, 1], &[0, 0]]),
            ExactMatrix::from_i64(&[&[0, 0], &[1, 0]]),
        ]
    }

    fn s(n: i64) -> ExactScalar {
        ExactScalar::from_i64(n)
    }

    fn assert_jacobi(l: &LieAlgebra) {
        let d = l.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let e = |t: usize| unit_vectors(d)[t].clone();
                    let a = l.bracket_coords(&e(i), &l.bracket_coords(&e(j), &e(k)));
                    let b = l.bracket_coords(&e(j), &l.bracket_coords(&e(k), &e(i)));
                    let c = l.bracket_coords(&e(k), &l.bracket_coords(&e(i), &e(j)));
                    for t in 0..d {
                        assert!((&(&a[t] + &b[t]) + &c[t]).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn sl2_structure_and_killing() {
        let l = structure_constants(sl2()).unwrap();
        assert_eq!(l.structure_constants[0][1], vec![s(0), s(2), s(0)]);
        assert_eq!(l.structure_constants[0][2], vec![s(0), s(0), s(-2)]);
        assert_eq!(l.structure_constants[1][2], vec![s(1), s(0), s(0)]);
        assert_eq!(l.killing, ExactMatrix::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
        assert_jacobi(&l);
        assert!(solvable_radical(&l).is_empty());
    }

    #[test]
    fn abelian_and_single() {
        let a = structure_constants(vec![
            ExactMatrix::from_i64(&[&[1, 0], &[0, -1]]),
            ExactMatrix::from_i64(&[&[2, 0], &[0, 3]]),
        ])
        .unwrap();
        assert!(a.killing.is_zero());
        assert!(a.structure_constants.iter().flatten().flatten().all(ExactScalar::is_zero));
        let one = structure_constants(vec![ExactMatrix::from_i64(&[&[0, 1], &[0, 0]])]).unwrap();
        assert!(one.structure_constants[0][0].iter().all(ExactScalar::is_zero));
    }

    #[test]
    fn solvable_two_dimensional() {
        let l = structure_constants(vec![
            ExactMatrix::from_i64(&[&[1, 0], &[0, -1]]),
            ExactMatrix::from_i64(&[&[0, 1], &[0, 0]]),
        ])
        .unwrap();
        assert_eq!(l.killing.rank(), 1);
        assert_eq!(solvable_radical(&l).len(), 2);
        let lv = levi_subalgebra(&l).unwrap();
        assert_eq!(lv.levi.dim(), 0);
    }

    #[test]
    fn not_closed() {
        let r = structure_constants(vec![
            ExactMatrix::from_i64(&[&[0, 1], &[0, 0]]),
            ExactMatrix::from_i64(&[&[0, 0], &[1, 0]]),
        ]);
        assert_eq!(r, Err(Error::NotClosedUnderBracket));
    }

    #[test]
    fn model_dimensions() {
        let s11 = quadrics(4, &["x0*x3 - x1*x2"]);
        assert_eq!(lie_algebra_of_quadrics(&s11).unwrap().dim(), 6);
        let cubic = quadrics(4, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        assert_eq!(lie_algebra_of_quadrics(&cubic).unwrap().dim(), 3);
        // Veronese surface: 2x2 minors of the symmetric matrix [[x0,x1,x2],[x1,x3,x4],[x2,x4,x5]]
        let ver = quadrics(
            6,
            &["x0*x3 - x1^2", "x0*x4 - x1*x2", "x0*x5 - x2^2", "x1*x4 - x2*x3", "x1*x5 - x2*x4", "x3*x5 - x4^2"],
        );
        let l = lie_algebra_of_quadrics(&ver).unwrap();
        assert_eq!(l.dim(), 8);
        assert!(l.is_semisimple());
    }

    #[test]
    fn s11_algebra_is_the_orthogonal_algebra() {
        // M preserves x0 x3 − x1 x2 up to scalar and has trace 0: Mᵀ G + G M = 0
        let q = quadrics(4, &["x0*x3 - x1*x2"]);
        let l = lie_algebra_of_quadrics(&q).unwrap();
        let g = ExactMatrix::from_i64(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]]);
        for m in &l.basis {
            assert!(m.transpose().mul(&g).add(&g.mul(m)).is_zero());
        }
        assert_jacobi(&l);
    }

    #[test]
    fn derivation_membership() {
        let q = quadrics(5, &["x0*x2 - x1^2", "x0*x4 - x1*x3", "x1*x4 - x2*x3"]);
        let l = lie_algebra_of_quadrics(&q).unwrap();
        let span = SpanSolver::new(q.coefficient_vectors());
        for m in &l.basis {
            for f in &q.basis {
                let mut p = MultiPoly::zero(5);
                for k in 0..5 {
                    let mut mx = MultiPoly::zero(5);
                    for j in 0..5 {
                        mx = mx.add(&MultiPoly::var(5, j).scale(&m[(k, j)]));
                    }
                    p = p.add(&f.partial(k).mul(&mx));
                }
                assert!(span.contains(&quadric_coeffs(&p, 5)));
            }
        }
    }

    #[test]
    fn scroll_21_levi() {
        let q = quadrics(5, &["x0*x2 - x1^2", "x0*x4 - x1*x3", "x1*x4 - x2*x3"]);
        let l = lie_algebra_of_quadrics(&q).unwrap();
        let rad = solvable_radical(&l);
        assert_eq!(rad.len(), l.dim() - 3);
        let lv = levi_subalgebra(&l).unwrap();
        assert_eq!(lv.levi.dim(), 3);
        assert!(lv.levi.is_semisimple());
    }

    #[test]
    fn block_sl2_pair_splits() {
        let mut basis = Vec::new();
        for off in [0, 2] {
            for b in sl2() {
                let mut m = ExactMatrix::zeros(4, 4);
                for i in 0..2 {
                    for j in 0..2 {
                        m[(off + i, off + j)] = b[(i, j)].clone();
                    }
                }
                basis.push(m);
            }
        }
        // mix the basis so the ideals are not visible
        let mixed: Vec<ExactMatrix> = (0..6).map(|i| basis[i].add(&basis[(i + 3) % 6].scale(&s(i as i64 + 1)))).collect();
        let l = structure_constants(mixed).unwrap();
        let sp = split_semisimple_ideals(&l).unwrap();
        assert_eq!(sp.extension, None);
        let (a, b) = &sp.ideals;
        for x in &a.basis {
            for y in &b.basis {
                assert!(x.bracket(y).is_zero());
            }
        }
        let blocks = |m: &ExactMatrix| (0..2).all(|i| (2..4).all(|j| m[(i, j)].is_zero() && m[(j, i)].is_zero()));
        assert!(a.basis.iter().all(blocks) && b.basis.iter().all(blocks));
    }

    #[test]
    fn orthogonal_split_and_twist() {
        let split = lie_algebra_of_quadrics(&quadrics(4, &["x0*x3 - x1*x2"])).unwrap();
        let sp = split_semisimple_ideals(&split).unwrap();
        assert_eq!(sp.extension, None);
        for id in [&sp.ideals.0, &sp.ideals.1] {
            assert_eq!(id.dim(), 3);
            assert!(id.is_semisimple());
        }
        // anisotropic over the rationals: discriminant 2·3·5·7 is not a square
        let aniso = lie_algebra_of_quadrics(&quadrics(4, &["x0^2 + 2*x1^2 + 3*x2^2 + 35*x3^2"])).unwrap();
        let tw = split_semisimple_ideals(&aniso).unwrap();
        let d = tw.extension.expect("twisted");
        assert_eq!(d, 210);
        let (a, b) = &tw.ideals;
        for x in &a.basis {
            for y in &b.basis {
                assert!(x.bracket(y).is_zero());
            }
        }
    }
}
