//! Newton polygons of affine plane curves and the nondegeneracy certificate
//! under which the interior lattice points give the genus and a basis of
//! regular differentials.

use crate::algebra::{resultant_eliminate, ExactScalar, MultiPoly, UPoly};

/// Lattice point `(i, j)` standing for the monomial `x^i y^j`.
pub type LatticePoint = (i64, i64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Hull vertices in counterclockwise order.
    pub vertices: Vec<LatticePoint>,
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

impl NewtonPolygon {
    /// Convex hull of the support of `f` in the variables `x = 0`, `y = 1`;
    /// every other variable is ignored.
    pub fn of(f: &MultiPoly) -> Self {
        let pts: Vec<LatticePoint> = f.terms().map(|(e, _)| (e[0] as i64, e[1] as i64)).collect();
        Self::hull(pts)
    }

    pub fn hull(mut pts: Vec<LatticePoint>) -> Self {
        pts.sort_unstable();
        pts.dedup();
        if pts.len() < 3 {
            return NewtonPolygon { vertices: pts };
        }
        let mut lower: Vec<LatticePoint> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<LatticePoint> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        NewtonPolygon { vertices: lower }
    }

    pub fn is_two_dimensional(&self) -> bool {
        self.vertices.len() >= 3
    }

    pub fn edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.vertices.len();
        (0..n).map(|k| (self.vertices[k], self.vertices[(k + 1) % n])).collect()
    }

    fn strictly_inside(&self, p: LatticePoint) -> bool {
        self.is_two_dimensional() && self.edges().iter().all(|&(a, b)| cross(a, b, p) > 0)
    }

    /// Interior lattice points ordered by `(j, i)`.
    pub fn interior_points(&self) -> Vec<LatticePoint> {
        if !self.is_two_dimensional() {
            return Vec::new();
        }
        let (imin, imax) = minmax(self.vertices.iter().map(|v| v.0));
        let (jmin, jmax) = minmax(self.vertices.iter().map(|v| v.1));
        let mut out = Vec::new();
        for j in jmin..=jmax {
            for i in imin..=imax {
                if self.strictly_inside((i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

fn minmax(it: impl Iterator<Item = i64> + Clone) -> (i64, i64) {
    (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// Restriction of `f` to the edge `a → b`, as a polynomial in the step
/// parameter along the primitive edge direction.
pub fn edge_polynomial(f: &MultiPoly, a: LatticePoint, b: LatticePoint) -> UPoly {
    let steps = gcd_i64(b.0 - a.0, b.1 - a.1);
    let (di, dj) = ((b.0 - a.0) / steps, (b.1 - a.1) / steps);
    let nv = f.nvars();
    let coeffs = (0..=steps)
        .map(|k| {
            let mut e = vec![0u32; nv];
            e[0] = (a.0 + k * di) as u32;
            e[1] = (a.1 + k * dj) as u32;
            f.coeff(&e)
        })
        .collect();
    UPoly::new(coeffs)
}

/// `Res_var(f, g)`, with the convention `Res(f, c) = c^deg f` when `g` is
/// free of `var`.
fn resultant_or_power(f: &MultiPoly, g: &MultiPoly, var: usize) -> Option<MultiPoly> {
    let df = f.degree_in(var).unwrap_or(0);
    let dg = g.degree_in(var).unwrap_or(0);
    match (df, dg) {
        (0, 0) => None,
        (_, 0) => Some(g.pow(df)),
        (0, _) => Some(f.pow(dg)),
        _ => resultant_eliminate(f, g, var).ok(),
    }
}

/// Squarefree part of a univariate polynomial, with factors of the variable
/// removed (roots outside the torus are irrelevant).
fn torus_part(p: &UPoly) -> UPoly {
    if p.is_zero() {
        return p.clone();
    }
    let (q, _) = p.strip_x();
    let g = q.gcd(&q.derivative());
    q.divrem(&g).0.monic()
}

fn univariate(p: &MultiPoly, var: usize) -> Option<UPoly> {
    p.to_upoly(var)
}

/// Candidate `var`-coordinates of torus singular points, as a squarefree
/// polynomial whose roots contain all of them.
fn singular_projection(f: &MultiPoly, fx: &MultiPoly, fy: &MultiPoly, keep: usize) -> Option<UPoly> {
    let elim = 1 - keep;
    let r1 = univariate(&resultant_or_power(f, fy, elim)?, keep)?;
    let r2 = univariate(&resultant_or_power(f, fx, elim)?, keep)?;
    if r1.is_zero() || r2.is_zero() {
        return None;
    }
    Some(torus_part(&r1.gcd(&r2)))
}

/// True when the affine curve `f(x, y) = 0` (variables 0 and 1) is proven
/// free of singular points with both coordinates nonzero.
pub fn torus_smooth(f: &MultiPoly) -> bool {
    let fx = f.partial(0);
    let fy = f.partial(1);
    let Some(gx) = singular_projection(f, &fx, &fy, 0) else {
        return false;
    };
    if gx.degree() == Some(0) {
        return true;
    }
    // Spurious roots of gx come from vanishing leading coefficients in y.
    // Every singular point has its x-coordinate among the roots of gx, and
    // gx has constant leading coefficient, so eliminating x against it is
    // exact.
    let nv = f.nvars();
    let g = MultiPoly::from_upoly(nv, 0, &gx);
    let mut acc: Option<UPoly> = None;
    for h in [f, &fx, &fy] {
        let Some(r) = resultant_or_power(h, &g, 0).and_then(|r| univariate(&r, 1)) else {
            return false;
        };
        if r.is_zero() {
            return false;
        }
        acc = Some(match acc {
            None => r,
            Some(a) => a.gcd(&r),
        });
    }
    torus_part(&acc.unwrap()).degree() == Some(0)
}

/// Interior lattice points of the Newton polygon of the affine curve
/// `f(x, y, 1)`, provided the curve is certified Newton-nondegenerate:
/// smooth in the torus and with squarefree edge polynomials.
pub fn certified_interior_points(affine: &MultiPoly) -> Option<Vec<LatticePoint>> {
    let poly = NewtonPolygon::of(affine);
    if !poly.is_two_dimensional() {
        return None;
    }
    for (a, b) in poly.edges() {
        let e = edge_polynomial(affine, a, b);
        if !e.is_squarefree() {
            return None;
        }
    }
    if !torus_smooth(affine) {
        return None;
    }
    Some(poly.interior_points())
}

/// The dehomogenized curve `f(x, y, 1)`, kept in three variables.
pub fn affine_chart(f: &MultiPoly) -> MultiPoly {
    f.substitute_scalar(2, &ExactScalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(terms: &[(u32, u32, i64)]) -> MultiPoly {
        MultiPoly::from_terms(3, terms.iter().map(|&(i, j, c)| (vec![i, j, 0], ExactScalar::from_i64(c))))
    }

    #[test]
    fn full_triangle_interior_count() {
        let f = xy(&[(4, 0, 1), (0, 4, 1), (0, 0, 1)]);
        let p = NewtonPolygon::of(&f);
        assert_eq!(p.vertices.len(), 3);
        assert_eq!(p.interior_points(), vec![(1, 1), (2, 1), (1, 2)]);
    }

    #[test]
    fn fermat_quartic_certified() {
        let f = xy(&[(4, 0, 1), (0, 4, 1), (0, 0, 1)]);
        assert_eq!(certified_interior_points(&f).map(|v| v.len()), Some(3));
    }

    #[test]
    fn rectangle_interior() {
        let p = NewtonPolygon::hull(vec![(0, 0), (3, 0), (3, 3), (0, 3), (1, 1)]);
        assert_eq!(p.interior_points().len(), 4);
    }

    #[test]
    fn torus_node_detected() {
        // (y-1)^2 = (x-1)^2 (x+1) has a node at (1,1)
        let y1 = xy(&[(0, 1, 1), (0, 0, -1)]);
        let x1 = xy(&[(1, 0, 1), (0, 0, -1)]);
        let xp = xy(&[(1, 0, 1), (0, 0, 1)]);
        let f = y1.pow(2).sub(&x1.pow(2).mul(&xp));
        assert!(!torus_smooth(&f));
        assert!(certified_interior_points(&f).is_none());
    }

    #[test]
    fn smooth_hyperelliptic_certified() {
        // y^2 = x^7 + 2x + 3 (squarefree, nonzero constant)
        let f = xy(&[(0, 2, 1), (7, 0, -1), (1, 0, -2), (0, 0, -3)]);
        assert_eq!(certified_interior_points(&f), Some(vec![(1, 1), (2, 1), (3, 1)]));
    }

    #[test]
    fn repeated_edge_root_rejected() {
        // bottom edge polynomial (x-1)^2 (x+2)
        let f = xy(&[(0, 3, 1), (3, 0, 1), (1, 0, -3), (0, 0, 2), (1, 1, 5)]);
        assert!(certified_interior_points(&f).is_none());
    }

    #[test]
    fn edge_polynomial_along_diagonal() {
        let f = xy(&[(2, 0, 1), (1, 1, -3), (0, 2, 2)]);
        let e = edge_polynomial(&f, (2, 0), (0, 2));
        assert_eq!(e, UPoly::from_i64(&[1, -3, 2]));
    }
}
