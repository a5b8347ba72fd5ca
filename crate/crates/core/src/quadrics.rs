//! The space of quadrics containing a canonical curve.

use crate::algebra::{independent_subset, pseudo_remainder_fixed, ExactMatrix, ExactScalar, MultiPoly, UPoly, Vector};
use crate::curves::{CanonicalCurve, CanonicalModel};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct QuadricSpace {
    pub ambient_dim: usize,
    /// Linearly independent quadratic forms in `ambient_dim + 1` variables.
    pub basis: Vec<MultiPoly>,
}

impl QuadricSpace {
    pub fn nvars(&self) -> usize {
        self.ambient_dim + 1
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coefficient_vectors(&self) -> Vec<Vector> {
        self.basis.iter().map(|q| quadric_coeffs(q, self.nvars())).collect()
    }
}

/// Index pairs `(k, l)` with `k ≤ l`, in lexicographic order; the
/// coordinates of `Sym²`.
pub fn sym2_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|k| (k..n).map(move |l| (k, l))).collect()
}

fn pair_exponent(n: usize, k: usize, l: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[k] += 1;
    e[l] += 1;
    e
}

/// Coefficients of a quadratic form on the `Sym²` basis `x_k x_l`.
pub fn quadric_coeffs(q: &MultiPoly, n: usize) -> Vector {
    sym2_pairs(n).into_iter().map(|(k, l)| q.coeff(&pair_exponent(n, k, l))).collect()
}

pub fn quadric_from_coeffs(v: &[ExactScalar], n: usize) -> MultiPoly {
    MultiPoly::from_terms(n, sym2_pairs(n).into_iter().zip(v).map(|((k, l), c)| (pair_exponent(n, k, l), c.clone())))
}

/// Scale a rational polynomial to coprime integer coefficients with a
/// positive leading term; polynomials over an extension are made monic.
pub fn primitive_integer(p: &MultiPoly) -> MultiPoly {
    use num_integer::Integer;
    use num_traits::{Signed, Zero};
    if p.disc().is_some() || p.is_zero() {
        return p.monic();
    }
    let mut lcm = num_bigint::BigInt::from(1);
    for (_, c) in p.terms() {
        lcm = lcm.lcm(&c.denom_lcm());
    }
    let q = p.map_coeffs(|c| c.scale_int(&lcm));
    let mut g = num_bigint::BigInt::zero();
    for (_, c) in q.terms() {
        g = g.gcd(&c.to_integer().expect("integral after scaling"));
    }
    let lead_neg = q.lead_term().is_some_and(|(_, c)| c.to_integer().is_some_and(|v| v.is_negative()));
    if lead_neg {
        g = -g;
    }
    q.map_coeffs(|c| c / &ExactScalar::from_bigint(g.clone()))
}

/// Products `form_k · form_l` in `Sym²` order.
fn products(forms: &[MultiPoly]) -> Vec<MultiPoly> {
    sym2_pairs(forms.len()).into_iter().map(|(k, l)| forms[k].mul(&forms[l])).collect()
}

/// Linear functionals given as polynomials in the unknown coefficient
/// index: rows indexed by monomials, one column per product.
fn monomial_matrix(images: &[MultiPoly]) -> ExactMatrix {
    let mut keys: Vec<Vec<u32>> = images.iter().flat_map(|p| p.terms().map(|(e, _)| e.clone())).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vector> = keys.iter().map(|e| images.iter().map(|p| p.coeff(e)).collect()).collect();
    if rows.is_empty() {
        return ExactMatrix::zeros(0, images.len());
    }
    ExactMatrix::from_rows(rows)
}

fn elimination_var(f: &MultiPoly) -> Result<usize> {
    [1, 0]
        .into_iter()
        .find(|&v| f.degree_in(v).unwrap_or(0) > 0)
        .ok_or_else(|| Error::Unsupported("source curve is a union of lines through a point".into()))
}

/// Kernel of `Sym²(forms) → k[x,y,z]/⟨f⟩`, through pseudo-remainders with
/// a fixed exponent so that the map stays linear.
fn algebraic_kernel(forms: &[MultiPoly], f: &MultiPoly) -> Result<Vec<Vector>> {
    let var = elimination_var(f)?;
    let df = f.degree_in(var).unwrap();
    let prods = products(forms);
    let top = prods.iter().filter_map(|p| p.degree_in(var)).max().unwrap_or(0);
    let k = (top + 1).saturating_sub(df);
    let reduced: Vec<MultiPoly> = prods.iter().map(|p| pseudo_remainder_fixed(p, f, var, k)).collect();
    Ok(monomial_matrix(&reduced).kernel())
}

/// Conditions imposed by the fibres of the projection from the point
/// eliminated: on the line `x = c·z` the products are reduced modulo
/// `f(c, y, 1)`, one condition per fibre point.
fn sampled_kernel(forms: &[MultiPoly], f: &MultiPoly, points: usize, start: i64) -> Result<Vec<Vector>> {
    let var = elimination_var(f)?;
    let other = 1 - var;
    let df = f.degree_in(var).unwrap() as usize;
    let prods = products(forms);
    let univ = |p: &MultiPoly, c: &ExactScalar| -> UPoly {
        let q = p.substitute_scalar(other, c).substitute_scalar(2, &ExactScalar::one());
        q.to_upoly(var).expect("univariate after specialization")
    };
    let mut rows: Vec<Vector> = Vec::new();
    let mut c = start;
    let mut lines = 0;
    while lines * df < points {
        let cs = ExactScalar::from_i64(c);
        c += 1;
        let fiber = univ(f, &cs);
        if fiber.degree() != Some(df) {
            continue;
        }
        let rems: Vec<UPoly> = prods.iter().map(|p| univ(p, &cs).rem(&fiber)).collect();
        for i in 0..df {
            rows.push(rems.iter().map(|r| r.coeff(i)).collect());
        }
        lines += 1;
    }
    Ok(ExactMatrix::from_rows(rows).kernel())
}

fn to_quadrics(kernel: &[Vector], n: usize) -> Vec<MultiPoly> {
    kernel.iter().map(|v| primitive_integer(&quadric_from_coeffs(v, n))).collect()
}

/// Quadrics through the canonical image, computed by normal forms modulo
/// the source curve and cross-checked by fibre sampling.
pub fn quadric_relations(k: &CanonicalCurve) -> Result<QuadricSpace> {
    let n = k.ambient_dim + 1;
    match &k.model {
        CanonicalModel::Quadrics(qs) => {
            let vecs: Vec<Vector> = qs.iter().map(|q| quadric_coeffs(q, n)).collect();
            let basis = independent_subset(&vecs).into_iter().map(|i| qs[i].clone()).collect();
            Ok(QuadricSpace { ambient_dim: k.ambient_dim, basis })
        }
        CanonicalModel::Forms { forms, source } => {
            let alg = algebraic_kernel(forms, &source.f)?;
            let g = forms.len();
            let base = n * (n + 1) / 2 + 4 * (g - 1) + 5;
            let mut sampled = sampled_kernel(forms, &source.f, base, 1)?.len();
            if sampled != alg.len() {
                // redraw on fresh lines with twice the sample count
                sampled = sampled_kernel(forms, &source.f, 2 * base, 1000)?.len();
            }
            if sampled != alg.len() {
                return Err(Error::SamplingInsufficient { algebraic: alg.len(), sampled });
            }
            Ok(QuadricSpace { ambient_dim: k.ambient_dim, basis: to_quadrics(&alg, n) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SpanSolver;
    use crate::curves::{canonical_system, generate_on_scroll, generate_on_scroll_with, PlaneCurve};
    use crate::format::parse_poly;

    fn plane(s: &str) -> PlaneCurve {
        PlaneCurve::new(parse_poly(s, &["x", "y", "z"]).unwrap())
    }

    #[test]
    fn plane_quartic_has_no_quadrics() {
        let k = canonical_system(&plane("x^4 + y^4 + z^4 + x*y*z^2")).unwrap();
        assert_eq!(quadric_relations(&k).unwrap().dim(), 0);
    }

    #[test]
    fn genus_four_has_one_quadric() {
        let (k, _) = generate_on_scroll(1, 1, 3, 1).unwrap();
        assert_eq!(quadric_relations(&k).unwrap().dim(), 1);
    }

    #[test]
    fn genus_five_has_three_quadrics() {
        let (k, _) = generate_on_scroll(2, 1, 3, 2).unwrap();
        assert_eq!(quadric_relations(&k).unwrap().dim(), 3);
    }

    #[test]
    fn model_scroll_curve_lies_on_scroll_minors() {
        let (k, _) = generate_on_scroll_with(2, 1, 3, 4, false).unwrap();
        let q = quadric_relations(&k).unwrap();
        // x0 x2 - x1^2, x0 x4 - x1 x3, x1 x4 - x2 x3
        let names = ["x0", "x1", "x2", "x3", "x4"];
        let minors = ["x0*x2 - x1^2", "x0*x4 - x1*x3", "x1*x4 - x2*x3"];
        let span = SpanSolver::new(q.coefficient_vectors());
        for m in minors {
            assert!(span.contains(&quadric_coeffs(&parse_poly(m, &names).unwrap(), 5)));
        }
    }

    #[test]
    fn quadrics_vanish_on_source() {
        let (k, _) = generate_on_scroll(2, 2, 3, 9).unwrap();
        let q = quadric_relations(&k).unwrap();
        let forms = k.forms().unwrap();
        let f = &k.source().unwrap().f;
        assert_eq!(q.dim(), 6);
        for b in &q.basis {
            assert!(crate::algebra::pseudo_remainder(&b.compose(forms), f, 1).is_zero());
            assert!(b.compose(forms).div_exact(f).is_some());
        }
    }

    #[test]
    fn direct_quadrics_reduced_to_independent_subset() {
        let n = ["x0", "x1", "x2", "x3"];
        let qs: Vec<MultiPoly> =
            ["x0*x3 - x1*x2", "2*x0*x3 - 2*x1*x2", "x0^2 + x3^2"].iter().map(|s| parse_poly(s, &n).unwrap()).collect();
        let k = CanonicalCurve::from_quadrics(3, qs);
        assert_eq!(quadric_relations(&k).unwrap().dim(), 2);
    }

    #[test]
    fn coordinate_change_transports_quadrics() {
        let (k, _) = generate_on_scroll(2, 1, 3, 6).unwrap();
        let q = quadric_relations(&k).unwrap();
        let t = ExactMatrix::from_i64(&[
            &[1, 1, 0, 0, 0],
            &[0, 1, 0, 2, 0],
            &[0, 0, 1, 0, 0],
            &[1, 0, 0, 1, 0],
            &[0, 0, -1, 0, 1],
        ]);
        let forms = k.forms().unwrap();
        let moved: Vec<MultiPoly> = (0..5)
            .map(|r| (0..5).fold(MultiPoly::zero(3), |acc, c| acc.add(&forms[c].scale(&t[(r, c)]))))
            .collect();
        let k2 = CanonicalCurve::from_forms(moved, k.source().unwrap().clone());
        let q2 = quadric_relations(&k2).unwrap();
        // q(x) vanishes on the old image iff q(T⁻¹ y) vanishes on the new one
        let inv = t.inverse().unwrap();
        let images: Vec<MultiPoly> = (0..5)
            .map(|r| (0..5).fold(MultiPoly::zero(5), |acc, c| acc.add(&MultiPoly::var(5, c).scale(&inv[(r, c)]))))
            .collect();
        let span = SpanSolver::new(q2.coefficient_vectors());
        for b in &q.basis {
            assert!(span.contains(&quadric_coeffs(&b.compose(&images), 5)));
        }
        assert_eq!(q.dim(), q2.dim());
    }

    #[test]
    fn sym2_order() {
        assert_eq!(sym2_pairs(3), vec![(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]);
    }

    #[test]
    fn primitive_integer_normalizes() {
        let p = parse_poly("-1/2*x^2 + 3/4*y*z", &["x", "y", "z"]).unwrap();
        assert_eq!(primitive_integer(&p).to_string(), "2*x^2 - 3*y*z");
    }
}
