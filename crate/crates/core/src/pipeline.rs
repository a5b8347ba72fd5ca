//! End-to-end classification: canonical model, quadrics, Lie algebra, Levi
//! part, representation and structure map, then the degree-3 map on the
//! source curve.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{primitive_part, ExactMatrix, ExactScalar, MultiPoly, UPoly};
use crate::curves::{canonical_system, CanonicalCurve, PlaneCurve, ProjPoint};
use crate::error::{Error, Result};
use crate::format::CurveFile;
use crate::liealg::{levi_subalgebra, lie_algebra_of_quadrics, split_semisimple_ideals, LieAlgebra};
use crate::quadrics::{quadric_relations, QuadricSpace};
use crate::scroll::{block_structure, induce_rep, ruling_rep, structure_map_of_ruling, structure_map_unequal, AmbientRep, StructureMap};
use crate::sl2::{chevalley_basis_with, DEFAULT_SEARCH_BOUND};

/// Height bound for the rational-point search on genus-3 curves.
pub const POINT_SEARCH_HEIGHT: i64 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    TrigonalScroll,
    Genus3Trigonal,
    Hyperelliptic,
    PlaneQuintic,
    CutOutByQuadrics,
}

impl Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Case::TrigonalScroll => "trigonal_scroll",
            Case::Genus3Trigonal => "genus3_trigonal",
            Case::Hyperelliptic => "hyperelliptic",
            Case::PlaneQuintic => "plane_quintic",
            Case::CutOutByQuadrics => "cut_out_by_quadrics",
        }
    }

    pub fn is_trigonal(self) -> bool {
        matches!(self, Case::TrigonalScroll | Case::Genus3Trigonal)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationResult {
    pub case: Case,
    pub genus: usize,
    /// Dimension of the Levi subalgebra of `L(X)`.
    pub lsa_dim: Option<usize>,
    pub quadric_count: usize,
    pub scroll_params: Option<(usize, usize)>,
    pub structure_map: Option<StructureMap>,
    /// Degree-3 map `p/q` on the source plane curve, or on the ambient
    /// coordinates for curves given by quadrics.
    pub trigonal_map: Option<(MultiPoly, MultiPoly)>,
    pub extension: Option<i64>,
    /// Point used for the pencil of lines in genus 3.
    pub base_point: Option<ProjPoint>,
}

impl ClassificationResult {
    fn new(case: Case, genus: usize, quadric_count: usize) -> Self {
        ClassificationResult {
            case,
            genus,
            lsa_dim: None,
            quadric_count,
            scroll_params: None,
            structure_map: None,
            trigonal_map: None,
            extension: None,
            base_point: None,
        }
    }

    /// `key: value` report lines.
    pub fn report(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "none".into());
        let mut out = String::new();
        out.push_str(&format!("case: {}\n", self.case));
        out.push_str(&format!("trigonal: {}\n", self.case.is_trigonal()));
        out.push_str(&format!("genus: {}\n", self.genus));
        out.push_str(&format!("quadrics: {}\n", self.quadric_count));
        out.push_str(&format!("lsa_dim: {}\n", opt(self.lsa_dim.map(|d| d.to_string()))));
        out.push_str(&format!("m: {}\n", opt(self.scroll_params.map(|p| p.0.to_string()))));
        out.push_str(&format!("n: {}\n", opt(self.scroll_params.map(|p| p.1.to_string()))));
        out.push_str(&format!("extension: {}\n", opt(self.extension.map(|d| format!("sqrt({d})")))));
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassifyOptions {
    pub search_bound: u64,
    pub allow_extension: bool,
    /// Rational point for the genus-3 pencil, on the curve carrying the forms.
    pub point: Option<ProjPoint>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { search_bound: DEFAULT_SEARCH_BOUND, allow_extension: true, point: None }
    }
}

pub fn classify_curve(input: &CurveFile, opts: &ClassifyOptions) -> Result<ClassificationResult> {
    match input {
        CurveFile::Plane(c) => classify_plane(c, opts),
        CurveFile::Canonical(k) => classify_canonical(k, opts),
    }
}

pub fn classify_plane(c: &PlaneCurve, opts: &ClassifyOptions) -> Result<ClassificationResult> {
    let k = canonical_system(c)?;
    classify_canonical(&k, opts)
}

/// Outcome of the Lie-algebra stage on the quadric intersection.
#[derive(Clone, Debug, PartialEq)]
pub struct LieStage {
    pub case: Case,
    pub lsa_dim: usize,
    pub block_dims: Vec<usize>,
    pub scroll_params: Option<(usize, usize)>,
    pub structure_map: Option<StructureMap>,
    pub extension: Option<i64>,
    pub algebra: LieAlgebra,
    pub levi: LieAlgebra,
    /// Ambient representation of the `sl₂` used for the structure map.
    pub rep: Option<AmbientRep>,
}

/// Dispatch on the Levi dimension of `L(X)` for `X` cut out by `q`.
pub fn analyze_quadrics(q: &QuadricSpace, opts: &ClassifyOptions) -> Result<LieStage> {
    let l = lie_algebra_of_quadrics(q)?;
    let levi = levi_subalgebra(&l)?.levi;
    let stage = |case, lsa_dim| LieStage {
        case,
        lsa_dim,
        block_dims: Vec::new(),
        scroll_params: None,
        structure_map: None,
        extension: None,
        algebra: l.clone(),
        levi: levi.clone(),
        rep: None,
    };
    match levi.dim() {
        0 => Ok(stage(Case::CutOutByQuadrics, 0)),
        3 => {
            let cb = chevalley_basis_with(&levi, opts.search_bound, opts.allow_extension)?;
            let rep = induce_rep(&cb);
            let blocks = block_structure(&rep)?;
            match blocks.block_dims.len() {
                1 => Ok(LieStage { block_dims: blocks.block_dims, extension: cb.extension, rep: Some(rep), ..stage(Case::Hyperelliptic, 3) }),
                2 => {
                    let map = structure_map_unequal(&rep)?;
                    Ok(LieStage {
                        scroll_params: blocks.scroll_params(),
                        block_dims: blocks.block_dims,
                        extension: map.extension.or(cb.extension),
                        structure_map: Some(map),
                        rep: Some(rep),
                        ..stage(Case::TrigonalScroll, 3)
                    })
                }
                _ => Err(Error::InconsistentBlockData),
            }
        }
        6 => {
            let split = split_semisimple_ideals(&levi)?;
            if split.extension.is_some() && !opts.allow_extension {
                return Err(Error::Unsupported(format!("ruling defined over sqrt({})", split.extension.unwrap())));
            }
            let (i1, i2): (&LieAlgebra, &LieAlgebra) = (&split.ideals.0, &split.ideals.1);
            let (rep, ext) = ruling_rep(i1, i2)?;
            let map = structure_map_of_ruling(&rep, ext)?;
            let m = (q.nvars() - 2) / 2;
            Ok(LieStage {
                scroll_params: Some((m, m)),
                block_dims: vec![m + 1, m + 1],
                extension: split.extension.or(map.extension),
                structure_map: Some(map),
                rep: Some(rep),
                ..stage(Case::TrigonalScroll, 6)
            })
        }
        8 => Ok(stage(Case::PlaneQuintic, 8)),
        d => Err(Error::ClassificationImpossible(d)),
    }
}

pub fn classify_canonical(k: &CanonicalCurve, opts: &ClassifyOptions) -> Result<ClassificationResult> {
    classify_canonical_detailed(k, opts).map(|(r, _)| r)
}

/// As `classify_canonical`, also returning the Lie-algebra stage when the
/// quadric step ran.
pub fn classify_canonical_detailed(k: &CanonicalCurve, opts: &ClassifyOptions) -> Result<(ClassificationResult, Option<LieStage>)> {
    let g = k.genus();
    if g < 3 {
        return Err(Error::GenusTooSmall(g));
    }
    let q = quadric_relations(k)?;
    if g == 3 && q.dim() == 0 {
        let mut res = ClassificationResult::new(Case::Genus3Trigonal, g, 0);
        let (map, point) = genus3_map(k, opts)?;
        res.extension = map.0.disc().or(map.1.disc());
        res.trigonal_map = Some(map);
        res.base_point = Some(point);
        return Ok((res, None));
    }
    let stage = analyze_quadrics(&q, opts)?;
    let mut res = ClassificationResult::new(stage.case, g, q.dim());
    res.lsa_dim = Some(stage.lsa_dim);
    res.scroll_params = stage.scroll_params;
    res.extension = stage.extension;
    res.structure_map = stage.structure_map.clone();
    if res.case == Case::PlaneQuintic && g != 6 {
        return Err(Error::ClassificationImpossible(8));
    }
    if res.case == Case::TrigonalScroll {
        let map = trigonal_map(&res, k)?;
        if let Some(src) = k.source() {
            let deg = verify_degree3(src, &map)?;
            if deg != 3 {
                return Err(Error::NotExpectedShape(format!("recovered map has degree {deg}")));
            }
        }
        res.trigonal_map = Some(map);
    }
    Ok((res, Some(stage)))
}

/// The structure map pulled back along the canonical forms, or the bare
/// linear forms when the curve is given by quadrics.
pub fn trigonal_map(res: &ClassificationResult, k: &CanonicalCurve) -> Result<(MultiPoly, MultiPoly)> {
    if res.case == Case::Genus3Trigonal {
        return res.trigonal_map.clone().ok_or(Error::RationalPointRequired);
    }
    let sm = res.structure_map.as_ref().ok_or_else(|| Error::NotExpectedShape("no structure map".into()))?;
    let (w, v) = sm.linear_forms();
    Ok(match k.forms() {
        Some(forms) => (w.compose(forms), v.compose(forms)),
        None => (w, v),
    })
}

/// Rational roots of a univariate polynomial with rational coefficients.
pub fn rational_roots(p: &UPoly) -> Vec<BigRational> {
    let Some(ints) = p.integer_coeffs() else { return Vec::new() };
    let n = ints.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    // a_n^{n−1} p(Y / a_n) is monic with integer coefficients
    let lead = ints[n].clone();
    // coefficient i of the scaled polynomial is a_i a_n^{n−1−i}
    let mut scaled = vec![BigInt::zero(); n + 1];
    let mut pw = BigInt::from(1);
    for i in (0..n).rev() {
        scaled[i] = &ints[i] * &pw;
        pw *= &lead;
    }
    scaled[n] = BigInt::from(1);
    let up = UPoly::new(scaled.into_iter().map(ExactScalar::from_bigint).collect());
    let roots = up.integer_roots().unwrap_or_default();
    roots.into_iter().map(|(r, _)| BigRational::new(r, lead.clone())).collect()
}

/// Rational points on `f` from the lines `x = a z`, `y = b z` and `z = 0`
/// with `|a|, |b| ≤ height`.
pub fn small_rational_points(f: &MultiPoly, height: i64) -> Vec<ProjPoint> {
    let mut pts: Vec<ProjPoint> = Vec::new();
    let mut push = |p: ProjPoint| {
        let norm = normalize_point(&p);
        if !pts.contains(&norm) {
            pts.push(norm);
        }
    };
    let sc = ExactScalar::from_rational;
    let one = ExactScalar::one();
    // points at infinity
    let at_inf = f.substitute_scalar(2, &ExactScalar::zero());
    if let Some(u) = at_inf.substitute_scalar(0, &one).to_upoly(1) {
        for r in rational_roots(&u) {
            push(vec![one.clone(), sc(r), ExactScalar::zero()]);
        }
    }
    if at_inf.substitute_scalar(0, &ExactScalar::zero()).substitute_scalar(1, &one).is_zero() {
        push(vec![ExactScalar::zero(), one.clone(), ExactScalar::zero()]);
    }
    for a in order_by_height(height) {
        let av = ExactScalar::from_i64(a);
        let line = f.substitute_scalar(2, &one).substitute_scalar(0, &av);
        if let Some(u) = line.to_upoly(1) {
            for r in rational_roots(&u) {
                push(vec![av.clone(), sc(r), one.clone()]);
            }
        }
        let line = f.substitute_scalar(2, &one).substitute_scalar(1, &av);
        if let Some(u) = line.to_upoly(0) {
            for r in rational_roots(&u) {
                push(vec![sc(r), av.clone(), one.clone()]);
            }
        }
    }
    pts
}

fn order_by_height(h: i64) -> Vec<i64> {
    let mut v = vec![0];
    for k in 1..=h {
        v.push(k);
        v.push(-k);
    }
    v
}

fn normalize_point(p: &[ExactScalar]) -> ProjPoint {
    let lead = p.iter().rev().find(|c| !c.is_zero()).cloned().unwrap_or_else(ExactScalar::one);
    let inv = lead.inv();
    p.iter().map(|c| c * &inv).collect()
}

/// Pencil of lines through the image of a rational point of the source
/// curve, pulled back along the canonical forms.
pub fn genus3_map(k: &CanonicalCurve, opts: &ClassifyOptions) -> Result<((MultiPoly, MultiPoly), ProjPoint)> {
    let (Some(forms), Some(src)) = (k.forms(), k.source()) else {
        return Err(Error::RationalPointRequired);
    };
    let candidates = match &opts.point {
        Some(p) => {
            if p.len() != 3 || !src.f.eval(p).is_zero() {
                return Err(Error::Unsupported("supplied point is not on the curve".into()));
            }
            vec![p.clone()]
        }
        None => small_rational_points(&src.f, POINT_SEARCH_HEIGHT),
    };
    for p in candidates {
        let image: Vec<ExactScalar> = forms.iter().map(|f| f.eval(&p)).collect();
        if image.iter().all(ExactScalar::is_zero) {
            continue;
        }
        let ker = ExactMatrix::from_rows(vec![image]).kernel();
        let lin = |c: &Vec<ExactScalar>| {
            c.iter().zip(forms).fold(MultiPoly::zero(3), |acc, (a, f)| if a.is_zero() { acc } else { acc.add(&f.scale(a)) })
        };
        let map = (lin(&ker[0]), lin(&ker[1]));
        if verify_degree3(src, &map).ok() == Some(3) {
            return Ok((map, p));
        }
    }
    Err(Error::RationalPointRequired)
}

fn dehomogenized(p: &MultiPoly) -> MultiPoly {
    p.substitute_scalar(2, &ExactScalar::one())
}

/// Degree of the map in one elimination order: eliminate `elim` from the
/// curve and `t·q − p` (with `t` in the slot of `z`), strip factors free of
/// `t`, and read the degree in `keep`.
///
/// `R = Res_elim` has `t`-degree at most `deg_elim f`, so its values at
/// that many plus one parameters determine it; the gcd of those
/// specializations is its content over `Q[keep]` and the largest degree is
/// its degree. Each specialization is interpolated from formal-degree
/// Sylvester determinants at `deg f · deg g + 1` values of `keep`.
fn fibre_count(f: &MultiPoly, g: &MultiPoly, elim: usize, keep: usize) -> Result<usize> {
    let (df, dg) = (f.degree_in(elim).unwrap_or(0), g.degree_in(elim).unwrap_or(0));
    if df == 0 {
        return Ok(usize::MAX);
    }
    if dg == 0 {
        // R = g^df
        let r = primitive_part(&primitive_part(&g.pow(df), 2), keep);
        return Ok(r.degree_in(keep).unwrap_or(0) as usize);
    }
    let plane_degree = |p: &MultiPoly| p.terms().map(|(e, _)| e[0] + e[1]).max().unwrap_or(0);
    let bound = (plane_degree(f) * plane_degree(g)) as i64;
    let xs: Vec<ExactScalar> = (0..=bound).map(ExactScalar::from_i64).collect();
    let fx: Vec<UPoly> = xs.iter().map(|x| f.substitute_scalar(keep, x).to_upoly(elim).expect("bivariate curve")).collect();
    let mut specs = Vec::new();
    for j in 0..=df as i64 {
        let gt = g.substitute_scalar(2, &ExactScalar::from_i64(j));
        let values: Vec<ExactScalar> = xs
            .iter()
            .zip(&fx)
            .map(|(x, fi)| {
                let gi = gt.substitute_scalar(keep, x).to_upoly(elim).expect("bivariate map");
                sylvester(fi, df as usize, &gi, dg as usize).determinant()
            })
            .collect();
        specs.push(interpolate(&xs, &values));
    }
    if specs.iter().all(UPoly::is_zero) {
        return Err(Error::MapDegenerate);
    }
    let degree = specs.iter().filter_map(UPoly::degree).max().unwrap_or(0);
    let content = specs.iter().filter(|r| !r.is_zero()).fold(UPoly::zero(), |acc, r| acc.gcd(r));
    Ok(degree - content.degree().unwrap_or(0))
}

/// Sylvester matrix of `a`, `b` with formal degrees `m`, `n`.
fn sylvester(a: &UPoly, m: usize, b: &UPoly, n: usize) -> ExactMatrix {
    let size = m + n;
    let mut s = ExactMatrix::zeros(size, size);
    for i in 0..n {
        for k in 0..=m {
            s[(i, i + k)] = a.coeff(m - k);
        }
    }
    for i in 0..m {
        for k in 0..=n {
            s[(n + i, i + k)] = b.coeff(n - k);
        }
    }
    s
}

/// The polynomial of degree below `xs.len()` through the given values.
fn interpolate(xs: &[ExactScalar], ys: &[ExactScalar]) -> UPoly {
    // Newton divided differences, then Horner expansion
    let mut c: Vec<ExactScalar> = ys.to_vec();
    for k in 1..xs.len() {
        for i in (k..xs.len()).rev() {
            let num = &c[i] - &c[i - 1];
            let den = &xs[i] - &xs[i - k];
            c[i] = &num * &den.inv();
        }
    }
    let mut p = UPoly::zero();
    for i in (0..xs.len()).rev() {
        p = p.mul(&UPoly::new(vec![-&xs[i], ExactScalar::one()])).add(&UPoly::constant(c[i].clone()));
    }
    p
}

/// Degree of `[k(C) : k(p/q)]` as the number of affine fibre points, the
/// smaller of the counts through `x` and through `y`.
pub fn verify_degree3(c: &PlaneCurve, map: &(MultiPoly, MultiPoly)) -> Result<usize> {
    let f = dehomogenized(&c.f);
    let (p, q) = (dehomogenized(&map.0), dehomogenized(&map.1));
    let g = MultiPoly::var(3, 2).mul(&q).sub(&p);
    if !g.involves(2) {
        return Err(Error::MapDegenerate);
    }
    let via_x = fibre_count(&f, &g, 1, 0)?;
    let via_y = fibre_count(&f, &g, 0, 1)?;
    let d = via_x.min(via_y);
    if d == 0 {
        return Err(Error::MapDegenerate);
    }
    Ok(d)
}

/// Whether `m2 = M ∘ m1` for a Möbius transformation `M`, i.e. both maps
/// have the same fibres. Tested by reducing modulo `f(x₀, y)` at sampled
/// rational `x₀`, where the four products must satisfy one common
/// nondegenerate linear relation.
pub fn maps_equivalent(c: &PlaneCurve, m1: &(MultiPoly, MultiPoly), m2: &(MultiPoly, MultiPoly)) -> Result<bool> {
    let f = dehomogenized(&c.f);
    let dy = f.degree_in(1).unwrap_or(0);
    if dy == 0 {
        return Err(Error::Unsupported("curve must involve y".into()));
    }
    let (p1, q1) = (dehomogenized(&m1.0), dehomogenized(&m1.1));
    let (p2, q2) = (dehomogenized(&m2.0), dehomogenized(&m2.1));
    // p2 (γ p1 + δ q1) − q2 (α p1 + β q1) ≡ 0 on the curve
    let basis = [q2.mul(&p1).neg(), q2.mul(&q1).neg(), p2.mul(&p1), p2.mul(&q1)];
    let deg_bound = basis.iter().filter_map(MultiPoly::total_degree).max().unwrap_or(0) + f.total_degree().unwrap_or(0);
    let samples = 4 + 2 * deg_bound as i64;
    let mut rows: Vec<Vec<ExactScalar>> = Vec::new();
    let mut used = 0;
    let mut x0 = 0i64;
    while used < samples {
        x0 += 1;
        let xv = ExactScalar::from_i64(x0);
        let fx = f.substitute_scalar(0, &xv).to_upoly(1).expect("univariate");
        if fx.degree() != Some(dy as usize) || !fx.is_squarefree() {
            continue;
        }
        used += 1;
        let rems: Vec<UPoly> = basis.iter().map(|b| b.substitute_scalar(0, &xv).to_upoly(1).expect("univariate").rem(&fx)).collect();
        for k in 0..dy as usize {
            rows.push(rems.iter().map(|r| r.coeff(k)).collect());
        }
    }
    let ker = ExactMatrix::from_rows(rows).kernel();
    if ker.len() != 1 {
        return Ok(false);
    }
    let v = &ker[0];
    let det = &(&v[0] * &v[3]) - &(&v[1] * &v[2]);
    Ok(!det.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{generate_degy3, generate_on_scroll, generate_on_scroll_with, generate_resultant};
    use crate::format::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    fn plane(s: &str) -> PlaneCurve {
        PlaneCurve::new(p(s))
    }

    fn opts() -> ClassifyOptions {
        ClassifyOptions::default()
    }

    #[test]
    fn degree_of_simple_maps() {
        let c = plane("y^3*z - x^4 - x*z^3 - z^4");
        assert_eq!(verify_degree3(&c, &(p("x"), p("z"))).unwrap(), 3);
        let h = plane("y^2*z^5 - x^7 - x*z^6 - z^7");
        assert_eq!(verify_degree3(&h, &(p("x"), p("z"))).unwrap(), 2);
        let conic = plane("y*z - x^2");
        assert_eq!(verify_degree3(&conic, &(p("x"), p("z"))).unwrap(), 1);
        assert_eq!(verify_degree3(&c, &(p("z"), p("z"))), Err(Error::MapDegenerate));
    }

    /// Symbolic route: full resultant in `keep` and `t`, then primitive parts.
    fn symbolic_count(f: &MultiPoly, g: &MultiPoly, elim: usize, keep: usize) -> usize {
        let r = crate::algebra::resultant_eliminate(f, g, elim).unwrap();
        primitive_part(&primitive_part(&r, 2), keep).degree_in(keep).unwrap_or(0) as usize
    }

    #[test]
    fn interpolated_counts_match_symbolic_resultants() {
        let curves = ["y^3*z - x^4 - x*z^3 - z^4", "y^3 + x^2*y - x*z^2 + z^3", "y^2*z^3 - x^5 - 2*x*z^4 - z^5"];
        let maps = [("x", "z"), ("x*y", "z^2"), ("x + 2*y", "x - z"), ("y^2 + x*z", "x*y")];
        for c in curves {
            let f = dehomogenized(&p(c));
            for (a, b) in maps {
                let g = MultiPoly::var(3, 2).mul(&dehomogenized(&p(b))).sub(&dehomogenized(&p(a)));
                for (elim, keep) in [(1, 0), (0, 1)] {
                    if f.degree_in(elim).unwrap_or(0) == 0 || g.degree_in(elim).unwrap_or(0) == 0 {
                        continue;
                    }
                    assert_eq!(fibre_count(&f, &g, elim, keep).unwrap(), symbolic_count(&f, &g, elim, keep), "{c} / {a} : {b}");
                }
            }
        }
    }

    #[test]
    fn degy3_is_trigonal_scroll() {
        let (c, w) = generate_degy3(3, 8, 1).unwrap();
        let r = classify_plane(&c, &opts()).unwrap();
        assert_eq!(r.case, Case::TrigonalScroll);
        assert_eq!(r.genus, 4);
        assert!(matches!(r.lsa_dim, Some(3) | Some(6)));
        let map = r.trigonal_map.unwrap();
        assert_eq!(verify_degree3(&c, &map).unwrap(), 3);
        assert!(maps_equivalent(&w.curve, &w.map, &map).unwrap());
    }

    #[test]
    fn smooth_quartic_pencil() {
        let c = plane("x^4 + y^4 + x^2*z^2 + y*z^3");
        let r = classify_plane(&c, &opts()).unwrap();
        assert_eq!(r.case, Case::Genus3Trigonal);
        assert_eq!((r.genus, r.quadric_count), (3, 0));
        let pt = r.base_point.unwrap();
        assert!(c.f.eval(&pt).is_zero());
        let map = r.trigonal_map.unwrap();
        assert_eq!(verify_degree3(&c, &map).unwrap(), 3);
        // lines through (0:0:1)
        assert!(maps_equivalent(&c, &(p("x"), p("y")), &map).unwrap());
    }

    #[test]
    fn genus3_without_points_needs_one() {
        // no rational points: x^4 + y^4 + z^4 > 0
        let c = plane("x^4 + y^4 + z^4");
        assert_eq!(classify_plane(&c, &opts()), Err(Error::RationalPointRequired));
    }

    #[test]
    fn hyperelliptic_plane_models() {
        let h3 = plane("y^2*z^5 - x^7 - 2*x^3*z^4 - x*z^6 - 3*z^7");
        let r = classify_plane(&h3, &opts()).unwrap();
        assert_eq!(r.case, Case::Hyperelliptic);
        assert_eq!((r.genus, r.lsa_dim), (3, Some(3)));
        let h4 = plane("y^2*z^7 - x^9 + x^4*z^5 - z^9");
        let r = classify_plane(&h4, &opts()).unwrap();
        assert_eq!(r.case, Case::Hyperelliptic);
        assert_eq!((r.genus, r.lsa_dim), (4, Some(3)));
    }

    #[test]
    fn plane_quintic() {
        let c = plane("x^5 + y^5 + z^5 + x^2*y^2*z");
        let r = classify_plane(&c, &opts()).unwrap();
        assert_eq!(r.case, Case::PlaneQuintic);
        assert_eq!((r.genus, r.lsa_dim), (6, Some(8)));
    }

    #[test]
    fn complete_intersection_of_quadrics() {
        let names = ["x0", "x1", "x2", "x3", "x4"];
        let qs = ["x0^2 + x1*x2 - x3*x4", "x1^2 - x0*x3 + 2*x2*x4", "x2^2 + x3^2 - x4^2 + x0*x1"];
        let k = CanonicalCurve::from_quadrics(4, qs.iter().map(|q| parse_poly(q, &names).unwrap()).collect());
        let r = classify_canonical(&k, &opts()).unwrap();
        assert_eq!(r.case, Case::CutOutByQuadrics);
        assert_eq!((r.genus, r.lsa_dim, r.quadric_count), (5, Some(0), 3));
    }

    #[test]
    fn scroll_curves() {
        for (m, n) in [(1, 1), (2, 1), (2, 0), (2, 2)] {
            let (k, w) = generate_on_scroll(m, n, 3, 5).unwrap();
            let r = classify_canonical(&k, &opts()).unwrap();
            assert_eq!(r.case, Case::TrigonalScroll, "({m},{n})");
            assert_eq!(r.scroll_params, Some((m as usize, n as usize)));
            assert_eq!(r.lsa_dim, Some(if m == n { 6 } else { 3 }));
            assert!(maps_equivalent(&w.curve, &w.map, r.trigonal_map.as_ref().unwrap()).unwrap(), "({m},{n})");
        }
    }

    #[test]
    fn model_scroll_curve_map_is_s() {
        let (k, w) = generate_on_scroll_with(2, 1, 3, 2, false).unwrap();
        let r = classify_canonical(&k, &opts()).unwrap();
        let map = r.trigonal_map.unwrap();
        assert!(maps_equivalent(&w.curve, &w.map, &map).unwrap());
    }

    #[test]
    fn resultant_curve() {
        let (c, w) = generate_resultant(4, 2, 3).unwrap();
        let r = classify_plane(&c, &opts()).unwrap();
        assert!(r.case.is_trigonal());
        let map = r.trigonal_map.unwrap();
        assert_eq!(verify_degree3(c.working_model(), &map).unwrap(), 3);
        if r.case == Case::TrigonalScroll {
            assert!(maps_equivalent(&w.curve, &w.map, &map).unwrap());
        }
    }

    #[test]
    fn low_genus_rejected() {
        assert_eq!(classify_plane(&plane("x^3 + y^3 + z^3"), &opts()), Err(Error::HyperellipticByGenus(1)));
    }

    #[test]
    fn rational_root_finder() {
        let u = UPoly::from_i64(&[-3, 1, 6]);
        assert!(rational_roots(&u).iter().all(|r| u.eval(&ExactScalar::from_rational(r.clone())).is_zero()));
        let v = UPoly::from_i64(&[-1, 0, 4]);
        let mut rs = rational_roots(&v);
        rs.sort();
        assert_eq!(rs, vec![BigRational::new((-1).into(), 2.into()), BigRational::new(1.into(), 2.into())]);
    }

    #[test]
    fn equivalence_detects_different_fibrations() {
        let c = plane("y^3*z - x^4 - x*z^3 - z^4");
        assert!(maps_equivalent(&c, &(p("x"), p("z")), &(p("2*x + z"), p("x - z"))).unwrap());
        assert!(!maps_equivalent(&c, &(p("x"), p("z")), &(p("y"), p("z"))).unwrap());
    }
}
