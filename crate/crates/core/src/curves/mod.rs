//! Plane and canonical curve models, genus, canonical systems and random
//! trigonal-curve generators.

mod generate;
pub mod newton;

pub use generate::{
    generate_complete_intersection, generate_degy3, generate_hyperelliptic, generate_on_scroll, generate_on_scroll_with,
    generate_resultant, random_invertible, scroll_pair_supported,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ExactMatrix, ExactScalar, MultiPoly, Vector};
use crate::error::{Error, Result};
use newton::{affine_chart, certified_interior_points};

pub type ProjPoint = Vec<ExactScalar>;

/// A homogeneous plane curve `f(x, y, z) = 0` with its ordinary nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneCurve {
    pub f: MultiPoly,
    pub nodes: Vec<ProjPoint>,
    /// A birational plane model with at worst the listed ordinary nodes,
    /// used instead of `f` for genus and canonical computations.
    pub model: Option<Box<PlaneCurve>>,
}

impl PlaneCurve {
    pub fn new(f: MultiPoly) -> Self {
        PlaneCurve { f, nodes: Vec::new(), model: None }
    }

    pub fn with_nodes(f: MultiPoly, nodes: Vec<ProjPoint>) -> Self {
        PlaneCurve { f, nodes, model: None }
    }

    pub fn degree(&self) -> u32 {
        self.f.total_degree().unwrap_or(0)
    }

    /// The curve on which genus and differentials are computed.
    pub fn working_model(&self) -> &PlaneCurve {
        match &self.model {
            Some(m) => m.working_model(),
            None => self,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CanonicalModel {
    /// `g` forms of equal degree on a plane curve.
    Forms { forms: Vec<MultiPoly>, source: PlaneCurve },
    /// Quadrics cutting out the image directly, in `ambient_dim + 1` variables.
    Quadrics(Vec<MultiPoly>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalCurve {
    pub ambient_dim: usize,
    pub model: CanonicalModel,
}

impl CanonicalCurve {
    pub fn from_forms(forms: Vec<MultiPoly>, source: PlaneCurve) -> Self {
        CanonicalCurve { ambient_dim: forms.len() - 1, model: CanonicalModel::Forms { forms, source } }
    }

    pub fn from_quadrics(ambient_dim: usize, quadrics: Vec<MultiPoly>) -> Self {
        CanonicalCurve { ambient_dim, model: CanonicalModel::Quadrics(quadrics) }
    }

    pub fn genus(&self) -> usize {
        self.ambient_dim + 1
    }

    pub fn source(&self) -> Option<&PlaneCurve> {
        match &self.model {
            CanonicalModel::Forms { source, .. } => Some(source),
            CanonicalModel::Quadrics(_) => None,
        }
    }

    pub fn forms(&self) -> Option<&[MultiPoly]> {
        match &self.model {
            CanonicalModel::Forms { forms, .. } => Some(forms),
            CanonicalModel::Quadrics(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Degy3,
    Resultant,
    OnScroll,
}

/// A known degree-3 map `p/q` on `curve`, recorded by a generator.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigonalWitness {
    pub construction: Construction,
    pub curve: PlaneCurve,
    pub map: (MultiPoly, MultiPoly),
}

fn check_plane(c: &PlaneCurve) -> Result<u32> {
    let f = &c.f;
    if f.nvars() != 3 || !f.is_homogeneous() || f.is_zero() {
        return Err(Error::Unsupported("plane curve must be a nonzero homogeneous form in x, y, z".into()));
    }
    let d = c.degree();
    if d < 3 {
        return Err(Error::Unsupported(format!("plane curve of degree {d} < 3")));
    }
    Ok(d)
}

fn validate_nodes(c: &PlaneCurve) -> Result<()> {
    let grads: Vec<MultiPoly> = (0..3).map(|v| c.f.partial(v)).collect();
    for p in &c.nodes {
        if p.len() != 3 || p.iter().all(ExactScalar::is_zero) {
            return Err(Error::SingularityDataInconsistent("node is not a projective point".into()));
        }
        if !c.f.eval(p).is_zero() || grads.iter().any(|g| !g.eval(p).is_zero()) {
            return Err(Error::SingularityDataInconsistent(format!("{} is not a singular point", fmt_point(p))));
        }
        let hess: Vec<Vec<ExactScalar>> =
            grads.iter().map(|g| (0..3).map(|v| g.partial(v).eval(p)).collect()).collect();
        if ExactMatrix::from_rows(hess).rank() != 2 {
            return Err(Error::SingularityDataInconsistent(format!("{} is not an ordinary node", fmt_point(p))));
        }
    }
    Ok(())
}

pub fn fmt_point(p: &[ExactScalar]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(" : "))
}

/// Result of certifying a nodeless plane curve through its Newton polygon,
/// possibly after a projective change of coordinates `T`.
struct ToricData {
    interior: Vec<(i64, i64)>,
    /// `T⁻¹` as linear images of `x, y, z`, when coordinates were changed.
    back: Option<Vec<MultiPoly>>,
    degree: u32,
}

const TORIC_ATTEMPTS: u64 = 6;

fn linear_images(t: &ExactMatrix) -> Vec<MultiPoly> {
    (0..3)
        .map(|i| {
            let mut p = MultiPoly::zero(3);
            for k in 0..3 {
                p = p.add(&MultiPoly::var(3, k).scale(&t[(i, k)]));
            }
            p
        })
        .collect()
}

fn toric_data(f: &MultiPoly) -> Option<ToricData> {
    let degree = f.total_degree()?;
    if let Some(interior) = certified_interior_points(&affine_chart(f)) {
        return Some(ToricData { interior, back: None, degree });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    for _ in 0..TORIC_ATTEMPTS {
        let t = loop {
            let rows: Vec<Vec<ExactScalar>> = (0..3)
                .map(|_| (0..3).map(|_| ExactScalar::from_i64(rng.gen_range(-3..=3))).collect())
                .collect();
            let m = ExactMatrix::from_rows(rows);
            if !m.determinant().is_zero() {
                break m;
            }
        };
        let g = f.compose(&linear_images(&t));
        if let Some(interior) = certified_interior_points(&affine_chart(&g)) {
            let inv = t.inverse().expect("invertible");
            return Some(ToricData { interior, back: Some(linear_images(&inv)), degree });
        }
    }
    None
}

/// Genus of the plane curve: from the node count when nodes are listed,
/// otherwise from a certified Newton polygon.
pub fn genus_plane_curve(c: &PlaneCurve) -> Result<usize> {
    let c = c.working_model();
    let d = check_plane(c)? as i64;
    if !c.nodes.is_empty() {
        validate_nodes(c)?;
        let g = (d - 1) * (d - 2) / 2 - c.nodes.len() as i64;
        if g < 0 {
            return Err(Error::SingularityDataInconsistent(format!("{} nodes on a curve of degree {d}", c.nodes.len())));
        }
        return Ok(g as usize);
    }
    toric_data(&c.f)
        .map(|t| t.interior.len())
        .ok_or_else(|| Error::NonOrdinarySingularities("Newton-polygon certificate failed".into()))
}

/// Monomials of degree `deg` in `nvars` variables, in lexicographic order.
pub fn monomials(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == nvars {
            let mut e = prefix.clone();
            e.push(deg);
            out.push(e);
            return;
        }
        for k in (0..=deg).rev() {
            prefix.push(k);
            rec(nvars, deg - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(nvars, deg, &mut Vec::new(), &mut out);
    }
    out
}

/// Basis of regular differentials as forms on the plane model.
///
/// Listed nodes select the adjoint route (degree `d−3` forms through every
/// node); nodeless curves must pass the Newton-polygon certificate, whose
/// interior points `(i, j)` give the forms `x^(i−1) y^(j−1) z^(d−1−i−j)`.
pub fn canonical_system(c: &PlaneCurve) -> Result<CanonicalCurve> {
    let c = c.working_model();
    let d = check_plane(c)?;
    let forms = if c.nodes.is_empty() {
        let t = toric_data(&c.f)
            .ok_or_else(|| Error::NonOrdinarySingularities("Newton-polygon certificate failed".into()))?;
        if t.interior.len() < 3 {
            return Err(Error::HyperellipticByGenus(t.interior.len()));
        }
        let forms: Vec<MultiPoly> = t
            .interior
            .iter()
            .map(|&(i, j)| {
                let e = vec![(i - 1) as u32, (j - 1) as u32, t.degree - (i + j) as u32 - 1];
                MultiPoly::monomial(3, e, ExactScalar::one())
            })
            .collect();
        match &t.back {
            None => forms,
            Some(back) => forms.iter().map(|m| m.compose(back)).collect(),
        }
    } else {
        let g = genus_plane_curve(c)?;
        if g < 3 {
            return Err(Error::HyperellipticByGenus(g));
        }
        let mons = monomials(3, d - 3);
        let rows: Vec<Vector> = c
            .nodes
            .iter()
            .map(|p| mons.iter().map(|e| MultiPoly::monomial(3, e.clone(), ExactScalar::one()).eval(p)).collect())
            .collect();
        let ker = ExactMatrix::from_rows(rows).kernel();
        if ker.len() != g {
            return Err(Error::NonOrdinarySingularities(format!(
                "adjoint space has dimension {} but the genus is {g}",
                ker.len()
            )));
        }
        ker.iter()
            .map(|v| MultiPoly::from_terms(3, mons.iter().cloned().zip(v.iter().cloned())))
            .collect()
    };
    Ok(CanonicalCurve::from_forms(forms, c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        crate::format::parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    fn pt(v: [i64; 3]) -> ProjPoint {
        v.iter().map(|&a| ExactScalar::from_i64(a)).collect()
    }

    #[test]
    fn smooth_quartic_genus_and_forms() {
        let c = PlaneCurve::new(p("x^4 + y^4 + z^4 + x*y*z^2"));
        assert_eq!(genus_plane_curve(&c).unwrap(), 3);
        let k = canonical_system(&c).unwrap();
        let mut forms: Vec<String> = k.forms().unwrap().iter().map(|f| f.to_string()).collect();
        forms.sort();
        assert_eq!(forms, vec!["x", "y", "z"]);
    }

    #[test]
    fn quartic_tangent_to_axis_still_certified() {
        // z = 0 is tangent: f(x, y, 0) = (x - y)^2 (x^2 + y^2) + ...
        let c = PlaneCurve::new(p("(x-y)^2*(x^2+y^2) + z^4 + 3*x*z^3 - y^3*z"));
        assert_eq!(genus_plane_curve(&c).unwrap(), 3);
        assert_eq!(canonical_system(&c).unwrap().forms().unwrap().len(), 3);
    }

    #[test]
    fn smooth_quintic_has_six_quadratic_forms() {
        let c = PlaneCurve::new(p("x^5 + y^5 + z^5 + 2*x^2*y^2*z"));
        let k = canonical_system(&c).unwrap();
        assert_eq!(k.ambient_dim, 5);
        assert!(k.forms().unwrap().iter().all(|f| f.total_degree() == Some(2)));
    }

    #[test]
    fn nodal_cubic_genus_zero() {
        let c = PlaneCurve::with_nodes(p("y^2*z - x^3 - x^2*z"), vec![pt([0, 0, 1])]);
        assert_eq!(genus_plane_curve(&c).unwrap(), 0);
        assert_eq!(canonical_system(&c), Err(Error::HyperellipticByGenus(0)));
    }

    #[test]
    fn bogus_node_rejected() {
        let c = PlaneCurve::with_nodes(p("x^4 + y^4 + z^4"), vec![pt([0, 0, 1])]);
        assert!(matches!(genus_plane_curve(&c), Err(Error::SingularityDataInconsistent(_))));
    }

    #[test]
    fn cusp_is_not_a_node() {
        let c = PlaneCurve::with_nodes(p("y^2*z^2 - x^3*z + x^4 + y^4"), vec![pt([0, 0, 1])]);
        assert!(matches!(genus_plane_curve(&c), Err(Error::SingularityDataInconsistent(_))));
    }

    #[test]
    fn unlisted_node_in_torus_reported() {
        let c = PlaneCurve::new(p("(y-z)^2*z^2 - (x-z)^2*(x+z)*z + (x-z)^2*(y-z)^2"));
        assert!(matches!(genus_plane_curve(&c), Err(Error::NonOrdinarySingularities(_))));
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials(3, 1), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(monomials(3, 3).len(), 10);
        assert_eq!(monomials(4, 2).len(), 10);
    }
}
