//! Resultants, subresultants, pseudo-division and gcds of multivariate
//! polynomials.

use crate::error::{Error, Result};

use super::poly::MultiPoly;
use super::scalar::ExactScalar;

/// Determinant of a square matrix of polynomials, fraction-free.
pub fn poly_determinant(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::one(nvars);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return MultiPoly::zero(nvars);
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MultiPoly::zero(nvars);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

fn sylvester_rows(f: &[MultiPoly], g: &[MultiPoly], width: usize, nf: usize, ng: usize, nvars: usize) -> Vec<Vec<MultiPoly>> {
    // coefficient lists are ascending; columns are descending powers
    let mut rows = Vec::new();
    let df = f.len() - 1;
    let dg = g.len() - 1;
    for i in 0..nf {
        let mut row = vec![MultiPoly::zero(nvars); width];
        for (k, c) in f.iter().enumerate() {
            row[i + (df - k)] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..ng {
        let mut row = vec![MultiPoly::zero(nvars); width];
        for (k, c) in g.iter().enumerate() {
            row[i + (dg - k)] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Sylvester resultant of `f` and `g` with respect to `var`.
pub fn resultant_eliminate(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<MultiPoly> {
    let df = f.degree_in(var).unwrap_or(0) as usize;
    let dg = g.degree_in(var).unwrap_or(0) as usize;
    if df == 0 || dg == 0 {
        return Err(Error::NothingToEliminate(var));
    }
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let rows = sylvester_rows(&fc, &gc, df + dg, dg, df, f.nvars());
    Ok(poly_determinant(&rows, f.nvars()))
}

/// First subresultant `S₁ = a·var + b` of `f` and `g`, returned as `(a, b)`.
///
/// When `f` and `g` share exactly one root in `var` (generically), that root
/// is `−b/a`.
pub fn first_subresultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<(MultiPoly, MultiPoly)> {
    let df = f.degree_in(var).unwrap_or(0) as usize;
    let dg = g.degree_in(var).unwrap_or(0) as usize;
    if df == 0 || dg == 0 {
        return Err(Error::NothingToEliminate(var));
    }
    let nv = f.nvars();
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    if df + dg < 2 {
        return Err(Error::NothingToEliminate(var));
    }
    // rows: var^{dg-2}·f … f, var^{df-2}·g … g, over columns var^{df+dg-2} … var^0
    let width = df + dg - 1;
    let nf = dg.saturating_sub(1);
    let ng = df.saturating_sub(1);
    let rows = sylvester_rows(&fc, &gc, width, nf, ng, nv);
    let size = nf + ng;
    // keep the first size-1 columns, then the column of var^j
    let pick = |j: usize| -> MultiPoly {
        let col = width - 1 - j;
        let m: Vec<Vec<MultiPoly>> = rows
            .iter()
            .map(|r| {
                let mut v: Vec<MultiPoly> = r[..size - 1].to_vec();
                v.push(r[col].clone());
                v
            })
            .collect();
        poly_determinant(&m, nv)
    };
    Ok((pick(1), pick(0)))
}

/// Pseudo-remainder of `a` by `b` in `var`, scaled by `lc(b)^(deg a − deg b + 1)`.
pub fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let db = b.degree_in(var).unwrap_or(0);
    let da = match a.degree_in(var) {
        Some(d) if !a.is_zero() => d,
        _ => return a.clone(),
    };
    if da < db {
        return a.clone();
    }
    pseudo_remainder_fixed(a, b, var, da - db + 1)
}

/// `lc(b)^k · a mod b` in `var` for a fixed exponent `k`; linear in `a`.
pub fn pseudo_remainder_fixed(a: &MultiPoly, b: &MultiPoly, var: usize, k: u32) -> MultiPoly {
    let db = b.degree_in(var).unwrap_or(0);
    let lb = b.lead_in(var);
    let nv = a.nvars();
    let mut r = a.clone();
    let mut steps = 0;
    while !r.is_zero() {
        let dr = r.degree_in(var).unwrap_or(0);
        if dr < db {
            break;
        }
        let lr = r.lead_in(var);
        let mut e = vec![0; nv];
        e[var] = dr - db;
        let shifted = b.mul_monomial(&e, &ExactScalar::one()).mul(&lr);
        r = r.mul(&lb).sub(&shifted);
        steps += 1;
    }
    assert!(steps <= k, "fixed pseudo-remainder exponent too small");
    r.mul(&lb.pow(k - steps))
}

/// Remainder of `p` modulo `f` in `var`; the leading coefficient of `f` in
/// `var` must be a nonzero constant.
pub fn reduce_normal_form(p: &MultiPoly, f: &MultiPoly, var: usize) -> Result<MultiPoly> {
    let df = f.degree_in(var).unwrap_or(0);
    let lead = f.lead_in(var);
    let c = match lead.constant_value() {
        Some(c) if df > 0 && !c.is_zero() => c,
        _ => return Err(Error::NonConstantLeading(var)),
    };
    let monic = f.scale(&c.inv());
    let nv = p.nvars();
    let mut r = p.clone();
    loop {
        let dr = match r.degree_in(var) {
            Some(d) if d >= df && !r.is_zero() => d,
            _ => break,
        };
        let lr = r.coeffs_in(var).pop().unwrap();
        let mut e = vec![0; nv];
        e[var] = dr - df;
        r = r.sub(&monic.mul_monomial(&e, &ExactScalar::one()).mul(&lr));
    }
    Ok(r)
}

/// Greatest common divisor, normalized to a monic lexicographic leading term.
pub fn mpoly_gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let nv = f.nvars();
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let Some(var) = (0..nv).rev().find(|&v| f.involves(v) || g.involves(v)) else {
        return MultiPoly::one(nv);
    };
    let cf = content_in(f, var);
    let cg = content_in(g, var);
    let c = mpoly_gcd(&cf, &cg);
    let mut a = f.div_exact(&cf).expect("content divides");
    let mut b = g.div_exact(&cg).expect("content divides");
    if a.degree_in(var) < b.degree_in(var) {
        std::mem::swap(&mut a, &mut b);
    }
    let prim = loop {
        if b.degree_in(var).unwrap_or(0) == 0 {
            break MultiPoly::one(nv);
        }
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            break primitive_part(&b, var);
        }
        a = b;
        b = primitive_part(&r, var);
    };
    c.mul(&prim).monic()
}

/// Gcd of the coefficients with respect to `var`.
pub fn content_in(f: &MultiPoly, var: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(f.nvars());
    for c in f.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        g = mpoly_gcd(&g, &c);
        if g.is_constant() {
            return MultiPoly::one(f.nvars());
        }
    }
    if g.is_zero() {
        MultiPoly::one(f.nvars())
    } else {
        g
    }
}

pub fn primitive_part(f: &MultiPoly, var: usize) -> MultiPoly {
    if f.is_zero() {
        return f.clone();
    }
    f.div_exact(&content_in(f, var)).expect("content divides")
}
