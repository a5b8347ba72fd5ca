//! Random trigonal curves: plane curves of degree 3 in `y`, resultant curves
//! of a cubic extension, and canonical curves drawn on a model scroll.

use num_bigint::{BigInt, Sign};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::newton::certified_interior_points;
use super::{CanonicalCurve, Construction, PlaneCurve, TrigonalWitness};
use crate::algebra::{resultant_eliminate, ExactMatrix, ExactScalar, MultiPoly, UPoly};
use crate::error::{Error, Result};

const MAX_DRAWS: usize = 10_000;

/// Uniform integer with `|c| < 2^bits`.
pub(crate) fn random_bits(rng: &mut impl RngCore, bits: u32) -> BigInt {
    let nbytes = bits.div_ceil(8) as usize;
    let mut buf = vec![0u8; nbytes];
    rng.fill_bytes(&mut buf);
    let excess = nbytes as u32 * 8 - bits;
    if let Some(top) = buf.first_mut() {
        *top &= 0xff >> excess;
    }
    let sign = if rng.gen::<bool>() { Sign::Minus } else { Sign::Plus };
    BigInt::from_bytes_be(sign, &buf)
}

/// Random integer matrix with entries in `[-bound, bound]` and nonzero
/// determinant.
pub fn random_invertible(rng: &mut impl RngCore, n: usize, bound: i64) -> ExactMatrix {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| ExactScalar::from_i64(rng.gen_range(-bound..=bound))).collect())
            .collect();
        let m = ExactMatrix::from_rows(rows);
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

fn xy_monomial(i: u32, j: u32, c: ExactScalar) -> MultiPoly {
    MultiPoly::monomial(3, vec![i, j, 0], c)
}

/// Homogenize a polynomial in `x, y` (stored with three variables and no `z`)
/// to its total degree.
fn close_up(affine: &MultiPoly) -> MultiPoly {
    let d = affine.total_degree().unwrap_or(0);
    affine.dehomogenize(2).homogenize(d)
}

fn projection_witness(construction: Construction, curve: PlaneCurve) -> TrigonalWitness {
    let map = (MultiPoly::var(3, 0), MultiPoly::var(3, 2));
    TrigonalWitness { construction, curve, map }
}

/// Plane curve `Σ c_ij x^i y^j` with `i ≤ d`, `j ≤ 3`, `|c_ij| < 2^height`,
/// redrawn until its Newton rectangle is certified, so that the genus is
/// exactly `2(d−1)`. The witness is the projection `(x : z)`.
pub fn generate_degy3(d: u32, height: u32, seed: u64) -> Result<(PlaneCurve, TrigonalWitness)> {
    if d < 3 {
        return Err(Error::Unsupported(format!("x-degree {d} < 3 gives genus below 3")));
    }
    if height == 0 {
        return Err(Error::Unsupported("height must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let mut f = MultiPoly::zero(3);
        for j in 0..=3 {
            for i in 0..=d {
                let corner = (i == 0 || i == d) && (j == 0 || j == 3);
                let c = nonzero_if(&mut rng, height, corner);
                f = f.add(&xy_monomial(i, j, ExactScalar::from_bigint(c)));
            }
        }
        if f.degree_in(1) != Some(3) || f.degree_in(0) != Some(d) {
            continue;
        }
        match certified_interior_points(&f) {
            Some(pts) if pts.len() == 2 * (d as usize - 1) => {}
            _ => continue,
        }
        let curve = PlaneCurve::new(close_up(&f));
        return Ok((curve.clone(), projection_witness(Construction::Degy3, curve)));
    }
    Err(Error::SearchBudget("no nondegenerate draw".into()))
}

fn nonzero_if(rng: &mut impl RngCore, bits: u32, required: bool) -> BigInt {
    loop {
        let c = random_bits(rng, bits);
        if !required || c.sign() != Sign::NoSign {
            return c;
        }
    }
}

fn random_upoly_in(rng: &mut impl RngCore, var: usize, deg: u32, height: i64) -> MultiPoly {
    let mut p = MultiPoly::zero(3);
    for k in 0..=deg {
        let c = loop {
            let c = rng.gen_range(-height..=height);
            if k < deg || c != 0 {
                break c;
            }
        };
        let mut e = vec![0; 3];
        e[var] = k;
        p = p.add(&MultiPoly::monomial(3, e, ExactScalar::from_i64(c)));
    }
    p
}

/// Resultant curve `Res_u(x³ − a₁x − a₂, y − a₃ − a₄x − a₅x²)` with random
/// `a_i` of degree `deg_a` and coefficients in `[−height, height]`.
///
/// The returned curve carries the birational model `x³ − a₁(y)x − a₂(y) = 0`
/// (the function `u` renamed `y`), drawn until that model is certified with
/// genus at least 3; the witness map `(y : z)` lives on the model.
pub fn generate_resultant(deg_a: u32, height: u32, seed: u64) -> Result<(PlaneCurve, TrigonalWitness)> {
    if deg_a == 0 || height == 0 {
        return Err(Error::Unsupported("degree and height must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (x, y) = (MultiPoly::var(3, 0), MultiPoly::var(3, 1));
    for _ in 0..MAX_DRAWS {
        // variables (x, y, u)
        let a: Vec<MultiPoly> = (0..5).map(|_| random_upoly_in(&mut rng, 2, deg_a, height as i64)).collect();
        let big_f = x.pow(3).sub(&a[0].mul(&x)).sub(&a[1]);
        let g = y.sub(&a[2]).sub(&a[3].mul(&x)).sub(&a[4].mul(&x.pow(2)));
        let model_aff = big_f.remap(3, &[0, 2, 1]);
        match certified_interior_points(&model_aff) {
            Some(pts) if pts.len() >= 3 => {}
            _ => continue,
        }
        let r = resultant_eliminate(&big_f, &g, 2)?;
        if r.is_zero() || r.degree_in(1).unwrap_or(0) == 0 {
            continue;
        }
        let model = PlaneCurve::new(close_up(&model_aff));
        let curve = PlaneCurve { f: close_up(&r), nodes: Vec::new(), model: Some(Box::new(model.clone())) };
        let witness = TrigonalWitness {
            construction: Construction::Resultant,
            curve: model,
            map: (MultiPoly::var(3, 1), MultiPoly::var(3, 2)),
        };
        return Ok((curve, witness));
    }
    Err(Error::SearchBudget("no nondegenerate draw".into()))
}

/// Whether a trigonal canonical curve lies on `S_{m,n}`; the coefficient of
/// `t³` has degree `2n − m + 2`, which must be nonnegative.
pub fn scroll_pair_supported(m: u32, n: u32) -> bool {
    m >= n && m + n >= 2 && m <= 2 * n + 2
}

/// Plane model `y²z^(deg−2) = P(x, z)` of a hyperelliptic curve, with `P`
/// squarefree of degree `deg` and coefficients in `[−height, height]`.
pub fn generate_hyperelliptic(deg: u32, height: i64, seed: u64) -> Result<PlaneCurve> {
    if deg < 3 || height <= 0 {
        return Err(Error::Unsupported("degree at least 3 and positive height required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let cs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-height..=height)).collect();
        if cs[deg as usize] == 0 || !UPoly::from_i64(&cs).is_squarefree() {
            continue;
        }
        let mut f = MultiPoly::monomial(3, vec![0, 2, deg - 2], ExactScalar::one());
        for (i, &c) in cs.iter().enumerate() {
            f = f.sub(&MultiPoly::monomial(3, vec![i as u32, 0, deg - i as u32], ExactScalar::from_i64(c)));
        }
        return Ok(PlaneCurve::new(f));
    }
    Err(Error::SearchBudget("no squarefree draw".into()))
}

/// Three random quadrics in `P⁴` with coefficients in `[−height, height]`,
/// redrawn until independent.
pub fn generate_complete_intersection(height: i64, seed: u64) -> Result<CanonicalCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|k| (k..5).map(move |l| (k, l))).collect();
    for _ in 0..MAX_DRAWS {
        let rows: Vec<Vec<ExactScalar>> =
            (0..3).map(|_| pairs.iter().map(|_| ExactScalar::from_i64(rng.gen_range(-height..=height))).collect()).collect();
        if ExactMatrix::from_rows(rows.clone()).rank() < 3 {
            continue;
        }
        let quadrics = rows
            .iter()
            .map(|r| {
                MultiPoly::from_terms(
                    5,
                    pairs.iter().zip(r).map(|(&(k, l), c)| {
                        let mut e = vec![0; 5];
                        e[k] += 1;
                        e[l] += 1;
                        (e, c.clone())
                    }),
                )
            })
            .collect();
        return Ok(CanonicalCurve::from_quadrics(4, quadrics));
    }
    Err(Error::SearchBudget("no independent draw".into()))
}

/// Canonical trigonal curve on `S_{m,n}` conjugated by a random invertible
/// integer matrix.
pub fn generate_on_scroll(m: u32, n: u32, height: u32, seed: u64) -> Result<(CanonicalCurve, TrigonalWitness)> {
    generate_on_scroll_with(m, n, height, seed, true)
}

/// Curve `Σ_j c_j(s) t^j = 0` with `deg c_j ≤ 2m − n + 2 − j(m − n)`, whose
/// canonical forms are the scroll coordinates `s^a` (`a ≤ m`) and `s^b t`
/// (`b ≤ n`). Without `conjugate` the image lies on the model scroll.
pub fn generate_on_scroll_with(
    m: u32,
    n: u32,
    height: u32,
    seed: u64,
    conjugate: bool,
) -> Result<(CanonicalCurve, TrigonalWitness)> {
    if !scroll_pair_supported(m, n) {
        return Err(Error::Unsupported(format!("no trigonal canonical curve lies on S_({m},{n})")));
    }
    if height == 0 {
        return Err(Error::Unsupported("height must be positive".into()));
    }
    let k = (m - n) as i64;
    let top = (2 * m - n + 2) as i64;
    let g = (m + n + 2) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let mut f = MultiPoly::zero(3);
        for j in 0..=3i64 {
            let deg = top - j * k;
            for i in 0..=deg {
                let c = nonzero_if(&mut rng, height, i == 0 || i == deg);
                f = f.add(&xy_monomial(i as u32, j as u32, ExactScalar::from_bigint(c)));
            }
        }
        let Some(pts) = certified_interior_points(&f) else { continue };
        if pts.len() != g {
            continue;
        }
        let d = f.total_degree().unwrap();
        let base: Vec<MultiPoly> = pts
            .iter()
            .map(|&(i, j)| MultiPoly::monomial(3, vec![(i - 1) as u32, (j - 1) as u32, d - (i + j) as u32 - 1], ExactScalar::one()))
            .collect();
        let t = if conjugate { random_invertible(&mut rng, g, 2) } else { ExactMatrix::identity(g) };
        let forms: Vec<MultiPoly> = (0..g)
            .map(|r| (0..g).fold(MultiPoly::zero(3), |acc, c| acc.add(&base[c].scale(&t[(r, c)]))))
            .collect();
        let curve = PlaneCurve::new(close_up(&f));
        let witness = projection_witness(Construction::OnScroll, curve.clone());
        return Ok((CanonicalCurve::from_forms(forms, curve), witness));
    }
    Err(Error::SearchBudget("no nondegenerate draw".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{canonical_system, genus_plane_curve};

    #[test]
    fn degy3_shape_and_genus() {
        for d in 3..=5 {
            let (c, w) = generate_degy3(d, 8, d as u64).unwrap();
            assert!(c.f.is_homogeneous());
            assert_eq!(c.degree(), d + 3);
            assert_eq!(c.f.degree_in(1), Some(3));
            assert_eq!(c.f.degree_in(0), Some(d));
            assert_eq!(genus_plane_curve(&c).unwrap(), 2 * (d as usize - 1));
            assert_eq!(w.construction, Construction::Degy3);
        }
    }

    #[test]
    fn degy3_height_one_coefficients() {
        let (c, _) = generate_degy3(3, 1, 7).unwrap();
        for (_, v) in c.f.terms() {
            let n = v.to_integer().unwrap();
            assert!(n >= BigInt::from(-1) && n <= BigInt::from(1));
        }
    }

    #[test]
    fn degy3_deterministic() {
        assert_eq!(generate_degy3(4, 8, 11).unwrap(), generate_degy3(4, 8, 11).unwrap());
    }

    #[test]
    fn resultant_curve_shape() {
        for seed in 0..4 {
            let (c, w) = generate_resultant(4, 2, seed).unwrap();
            let g = genus_plane_curve(&c).unwrap();
            assert!((3..=4).contains(&g), "genus {g}");
            let d = c.degree();
            assert!((12..=20).contains(&d), "degree {d}");
            assert_eq!(w.curve.f.degree_in(0), Some(3));
        }
    }

    #[test]
    fn resultant_vanishes_on_parametrized_points() {
        // (x, u) on F = 0 maps to (x, a3 + a4 x + a5 x^2) on the resultant curve;
        // check through the model instead: its x-degree is the cubic
        let (_, w) = generate_resultant(5, 2, 3).unwrap();
        assert_eq!(w.curve.f.degree_in(0), Some(3));
        assert!((3..=6).contains(&genus_plane_curve(&w.curve).unwrap()));
    }

    #[test]
    fn scroll_pairs() {
        let ok: Vec<(u32, u32)> =
            (0..=6).flat_map(|m| (0..=m).map(move |n| (m, n))).filter(|&(m, n)| m + n <= 6 && scroll_pair_supported(m, n)).collect();
        assert_eq!(ok, vec![(1, 1), (2, 0), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)]);
        assert!(generate_on_scroll(3, 0, 4, 1).is_err());
    }

    #[test]
    fn on_scroll_forms_are_scroll_coordinates() {
        let (k, _) = generate_on_scroll_with(2, 1, 4, 5, false).unwrap();
        assert_eq!(k.ambient_dim, 4);
        let forms = k.forms().unwrap();
        let d = k.source().unwrap().degree();
        let expect = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)];
        for (f, &(a, b)) in forms.iter().zip(&expect) {
            assert_eq!(*f, MultiPoly::monomial(3, vec![a, b, d - 3 - a - b], ExactScalar::one()));
        }
        // the same forms come out of the general canonical system
        let again = canonical_system(k.source().unwrap()).unwrap();
        assert_eq!(again.forms().unwrap(), forms);
    }
}
