//! Dense exact matrices with fraction-free elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::modular::modular_rref;
use super::scalar::ExactScalar;
use super::upoly::UPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>,
}

/// Entry count from which rational eliminations go through `modular_rref`.
const MODULAR_THRESHOLD: usize = 400;

/// Column vector helper type used by kernels and solves.
pub type Vector = Vec<ExactScalar>;

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![ExactScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ExactScalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| ExactScalar::from_i64(v)).collect()).collect())
    }

    pub fn from_columns(cols: &[Vector]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn diagonal(d: &[ExactScalar]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn column_vector(v: &[ExactScalar]) -> Self {
        Self::from_columns(&[v.to_vec()])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ExactScalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = ExactScalar::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * k).collect() }
    }

    /// Matrix commutator `AB − BA`.
    pub fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> ExactScalar {
        assert!(self.is_square());
        let mut t = ExactScalar::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// Row-major flattening, used when matrices are treated as vectors.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vector) -> Self {
        assert_eq!(data.len(), rows * cols);
        ExactMatrix { rows, cols, data }
    }

    pub fn map(&self, f: impl Fn(&ExactScalar) -> ExactScalar) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn conjugate(&self) -> Self {
        self.map(ExactScalar::conjugate)
    }

    /// Stack vertically.
    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        ExactMatrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut rows = self.to_rows();
        // clear denominators row by row so the fraction-free pass stays integral
        for row in rows.iter_mut() {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(&x.denom_lcm()));
            if !l.is_one() {
                for x in row.iter_mut() {
                    *x = x.scale_int(&l);
                }
            }
        }
        if rows.len() * self.cols >= MODULAR_THRESHOLD && rows.iter().flatten().all(ExactScalar::is_rational) {
            let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|x| x.to_integer().expect("scaled")).collect()).collect();
            if let Some((red, pivots)) = modular_rref(&ints, self.cols) {
                let m = if red.is_empty() { ExactMatrix::zeros(0, self.cols) } else { ExactMatrix::from_rows(red) };
                return (m, pivots);
            }
        }
        let pivots = bareiss_echelon(&mut rows, self.cols);
        // back substitution into reduced form
        for (r, &c) in pivots.iter().enumerate().rev() {
            let inv = rows[r][c].inv();
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            for i in 0..r {
                let f = rows[i][c].clone();
                if f.is_zero() {
                    continue;
                }
                let pr = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pr).skip(c) {
                    if !p.is_zero() {
                        *x -= &(&f * p);
                    }
                }
            }
        }
        let m = if rows.is_empty() { ExactMatrix::zeros(0, self.cols) } else { ExactMatrix::from_rows(rows) };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        bareiss_echelon(&mut rows, self.cols).len()
    }

    /// Basis of the right null space; one vector per free column, with that
    /// free coordinate equal to 1.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![ExactScalar::zero(); self.cols];
            v[free] = ExactScalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(row, free)];
            }
            out.push(v);
        }
        out
    }

    /// One solution of `A·x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[ExactScalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = ExactMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![ExactScalar::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = ExactScalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> ExactScalar {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return ExactScalar::one();
        }
        let mut a = self.to_rows();
        let mut sign = false;
        let mut prev = ExactScalar::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return ExactScalar::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    /// Characteristic polynomial `det(t·I − M)` via Hessenberg reduction.
    pub fn charpoly(&self) -> UPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.to_rows();
        // similarity reduction to upper Hessenberg form
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let piv = h[m][m - 1].clone();
            for i in m + 1..n {
                let u = &h[i][m - 1] / &piv;
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &u * &h[m][j];
                    h[i][j] -= &t;
                }
                for row in h.iter_mut() {
                    let t = &u * &row[i];
                    row[m] += &t;
                }
            }
        }
        // recurrence for the characteristic polynomials of leading blocks
        let t = UPoly::x();
        let mut p: Vec<UPoly> = vec![UPoly::one()];
        for m in 0..n {
            let mut next = t.sub(&UPoly::constant(h[m][m].clone())).mul(&p[m]);
            let mut prod = ExactScalar::one();
            for i in (0..m).rev() {
                prod = &prod * &h[i + 1][i];
                if prod.is_zero() {
                    break;
                }
                let c = &prod * &h[i][m];
                next = next.sub(&p[i].scale(&c));
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    /// Minimal polynomial (monic) by Krylov dependence of powers of M.
    pub fn minimal_polynomial(&self) -> UPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut powers: Vec<Vector> = vec![ExactMatrix::identity(n).flatten()];
        let mut cur = ExactMatrix::identity(n);
        loop {
            cur = cur.mul(self);
            let target = cur.flatten();
            let a = ExactMatrix::from_columns(&powers);
            if let Some(c) = a.solve(&target) {
                let mut coeffs: Vec<ExactScalar> = c.into_iter().map(|x| -x).collect();
                coeffs.push(ExactScalar::one());
                return UPoly::new(coeffs);
            }
            powers.push(target);
        }
    }
}

/// Fraction-free forward elimination in place; returns pivot columns.
fn bareiss_echelon(rows: &mut [Vector], cols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut prev = ExactScalar::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let (head, tail) = rows.split_at_mut(r + 1);
        let prow = &head[r];
        let pv = &prow[c];
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let a = &row[j];
                let v = if f.is_zero() {
                    if a.is_zero() {
                        continue;
                    }
                    pv * a
                } else {
                    &(pv * a) - &(&f * &prow[j])
                };
                row[j] = if prev.is_one() { v } else { &v / &prev };
            }
            row[c] = ExactScalar::zero();
        }
        prev = pv.clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Kernel as column matrices.
pub fn mat_kernel(m: &ExactMatrix) -> Vec<ExactMatrix> {
    m.kernel().iter().map(|v| ExactMatrix::column_vector(v)).collect()
}

/// Integer eigenvalues of `m` with multiplicities, and whether the
/// characteristic polynomial splits completely over the integers.
pub fn charpoly_integer_roots(m: &ExactMatrix) -> (Vec<(BigInt, usize)>, bool) {
    let cp = m.charpoly();
    let roots = cp.integer_roots().unwrap_or_default();
    let total: usize = roots.iter().map(|r| r.1).sum();
    let splits = total == m.rows();
    (roots, splits)
}

/// Coordinates with respect to a fixed family of independent vectors.
///
/// The family is reduced once; later membership tests and coordinate
/// extraction cost a single small solve.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    basis: Vec<Vector>,
    // rows of the basis matrix where it is invertible, and that inverse
    pivot_rows: Vec<usize>,
    inv: ExactMatrix,
}

impl SpanSolver {
    /// `basis` must be linearly independent.
    pub fn new(basis: Vec<Vector>) -> Self {
        Self::try_new(basis).expect("span basis is not independent")
    }

    /// `None` when `basis` is linearly dependent.
    pub fn try_new(basis: Vec<Vector>) -> Option<Self> {
        let k = basis.len();
        if k == 0 {
            return Some(SpanSolver { basis, pivot_rows: Vec::new(), inv: ExactMatrix::zeros(0, 0) });
        }
        let b = ExactMatrix::from_columns(&basis);
        let (_, pivot_rows) = b.transpose().rref();
        if pivot_rows.len() != k {
            return None;
        }
        let sub = ExactMatrix::from_rows(pivot_rows.iter().map(|&r| b.row(r)).collect());
        let inv = sub.inverse().expect("pivot block invertible");
        Some(SpanSolver { basis, pivot_rows, inv })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Coordinates of `v` if it lies in the span.
    pub fn coordinates(&self, v: &[ExactScalar]) -> Option<Vector> {
        if self.basis.is_empty() {
            return v.iter().all(ExactScalar::is_zero).then(Vec::new);
        }
        let rhs: Vector = self.pivot_rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.mul_vec(&rhs);
        let mut recon = vec![ExactScalar::zero(); v.len()];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (r, x) in recon.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r += &(ci * x);
                }
            }
        }
        (recon == v).then_some(c)
    }

    pub fn contains(&self, v: &[ExactScalar]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// Extract an independent subfamily (keeps the first occurrence order).
pub fn independent_subset(vectors: &[Vector]) -> Vec<usize> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = ExactMatrix::from_columns(vectors);
    m.rref().1
}

/// Basis of the intersection of two subspaces given by spanning families.
pub fn span_intersection(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut cols: Vec<Vector> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x).collect()));
    let m = ExactMatrix::from_columns(&cols);
    let n = a[0].len();
    let out: Vec<Vector> = m
        .kernel()
        .into_iter()
        .map(|k| {
            let mut v = vec![ExactScalar::zero(); n];
            for (c, av) in k.iter().zip(a) {
                for (x, y) in v.iter_mut().zip(av) {
                    *x += &(c * y);
                }
            }
            v
        })
        .collect();
    let keep = independent_subset(&out);
    keep.into_iter().map(|i| out[i].clone()).collect()
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = ExactScalar;
    fn index(&self, (i, j): (usize, usize)) -> &ExactScalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}
