//! Recognition of `sl2`, rational points on conics, and Chevalley bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::arith::{lcm_all, squarefree_split, trial_factor};
use crate::algebra::{ExactMatrix, ExactScalar, Vector};
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;

pub const DEFAULT_SEARCH_BOUND: u64 = 50;

/// A ternary quadratic form given by its symmetric Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ConicForm {
    pub gram: ExactMatrix,
}

impl ConicForm {
    pub fn new(gram: ExactMatrix) -> Self {
        assert!(gram.rows() == 3 && gram.cols() == 3, "ternary form");
        ConicForm { gram }
    }

    pub fn eval(&self, v: &[ExactScalar]) -> ExactScalar {
        let gv = self.gram.mul_vec(v);
        v.iter().zip(&gv).fold(ExactScalar::zero(), |a, (x, y)| &a + &(x * y))
    }

    fn integer_gram(&self) -> Vec<Vec<BigInt>> {
        let l = lcm_all(self.gram.entries().iter().map(|e| e.to_rational().expect("rational form").denom().clone()).collect::<Vec<_>>().iter());
        (0..3)
            .map(|i| (0..3).map(|j| (self.gram[(i, j)].to_rational().unwrap() * BigRational::from_integer(l.clone())).to_integer()).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ConicSolution {
    /// Primitive integer vector with `vᵀ Q v = 0`.
    Point(Vec<BigInt>),
    /// No rational point; `point` is isotropic over `Q(√d)`.
    Extension { d: i64, point: Vector },
}

fn ivec(v: &[BigInt]) -> Vector {
    v.iter().map(|c| ExactScalar::from_bigint(c.clone())).collect()
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
    let mut out: Vec<BigInt> = v.into_iter().map(|c| c / &g).collect();
    if out.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
        out.iter_mut().for_each(|c| *c = -&*c);
    }
    out
}

fn rational_to_primitive(v: &[BigRational]) -> Vec<BigInt> {
    let l = lcm_all(v.iter().map(|q| q.denom().clone()).collect::<Vec<_>>().iter());
    primitive(v.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect())
}

/// Full-support vectors of height `h`, by absolute values lexicographically,
/// then sign patterns with positive signs first.
fn brute_search(g: &[Vec<i128>], bound: i64) -> Option<[i64; 3]> {
    let eval = |v: [i64; 3]| -> i128 {
        let mut s = 0i128;
        for i in 0..3 {
            for j in 0..3 {
                s += g[i][j] * v[i] as i128 * v[j] as i128;
            }
        }
        s
    };
    for h in 1..=bound {
        for a in 1..=h {
            for b in 1..=h {
                for c in 1..=h {
                    if a.max(b).max(c) != h {
                        continue;
                    }
                    for signs in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let v = [a, signs.0 * b, signs.1 * c];
                        if eval(v) == 0 {
                            return Some(v);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Orthogonal basis `b_i` for the form, or an isotropic basis vector met on
/// the way.
fn diagonalize(q: &ConicForm) -> std::result::Result<(Vec<Vector>, Vec<ExactScalar>), Vector> {
    let mut basis: Vec<Vector> = (0..3)
        .map(|i| (0..3).map(|j| if i == j { ExactScalar::one() } else { ExactScalar::zero() }).collect())
        .collect();
    let bil = |u: &Vector, v: &Vector| -> ExactScalar {
        let gv = q.gram.mul_vec(v);
        u.iter().zip(&gv).fold(ExactScalar::zero(), |a, (x, y)| &a + &(x * y))
    };
    let mut diag = Vec::new();
    for i in 0..3 {
        if let Some(k) = (i..3).find(|&k| !bil(&basis[k], &basis[k]).is_zero()) {
            basis.swap(i, k);
        } else {
            // every remaining vector is isotropic
            return Err(basis[i].clone());
        }
        let bi = basis[i].clone();
        let nii = bil(&bi, &bi);
        for k in i + 1..3 {
            let c = &bil(&basis[k], &bi) / &nii;
            for t in 0..3 {
                let delta = &c * &bi[t];
                basis[k][t] -= &delta;
            }
        }
        diag.push(nii);
    }
    Ok((basis, diag))
}

fn mod_pow(b: &BigInt, e: &BigInt, m: &BigInt) -> BigInt {
    b.modpow(e, m)
}

/// Square root of `a` modulo an odd prime `p`, if `a` is a residue.
fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Some(BigInt::zero());
    }
    let two = BigInt::from(2);
    if *p == two {
        return Some(a);
    }
    let half = (p - 1u32) / &two;
    if mod_pow(&a, &half, p) != BigInt::one() {
        return None;
    }
    // Tonelli–Shanks
    let mut q = p - 1u32;
    let mut s = 0u32;
    while q.is_even() {
        q /= 2u32;
        s += 1;
    }
    let mut z = two.clone();
    while mod_pow(&z, &half, p) == BigInt::one() {
        z += 1u32;
    }
    let mut m = s;
    let mut c = mod_pow(&z, &q, p);
    let mut t = mod_pow(&a, &q, p);
    let mut r = mod_pow(&a, &((&q + 1u32) / &two), p);
    while !t.is_one() {
        let mut i = 0u32;
        let mut tt = t.clone();
        while !tt.is_one() {
            tt = (&tt * &tt) % p;
            i += 1;
        }
        let b = mod_pow(&c, &BigInt::from(1u64 << (m - i - 1)), p);
        m = i;
        c = (&b * &b) % p;
        t = (&t * &c) % p;
        r = (&r * &b) % p;
    }
    Some(r)
}

/// `r` with `r² ≡ a (mod |b|)` for squarefree `b`, via CRT over its primes.
fn sqrt_mod_squarefree(a: &BigInt, b: &BigInt) -> Result<Option<BigInt>> {
    let m = b.abs();
    let mut r = BigInt::zero();
    let mut modulus = BigInt::one();
    for (p, _) in trial_factor(&m)? {
        let Some(rp) = sqrt_mod_prime(a, &p) else { return Ok(None) };
        // combine r mod modulus with rp mod p
        let inv = BigInt::from(modulus.extended_gcd(&p).x).mod_floor(&p);
        let k = ((&rp - &r) * inv).mod_floor(&p);
        r += &modulus * k;
        modulus *= &p;
    }
    let r = r.mod_floor(&m);
    // balanced representative keeps the descent shrinking
    Ok(Some(if &r * 2u32 > m { r - &m } else { r }))
}

/// A nonzero solution of `x² = A y² + B z²` for squarefree nonzero `A`, `B`.
fn lagrange(a: &BigInt, b: &BigInt) -> Result<Option<[BigInt; 3]>> {
    let one = BigInt::one();
    if *a == one {
        return Ok(Some([one.clone(), one, BigInt::zero()]));
    }
    if *b == one {
        return Ok(Some([one.clone(), BigInt::zero(), one]));
    }
    if a.is_negative() && b.is_negative() {
        return Ok(None);
    }
    if a.abs() > b.abs() {
        return Ok(lagrange(b, a)?.map(|[x, y, z]| [x, z, y]));
    }
    lagrange_general(a, b)
}

fn lagrange_general(a: &BigInt, b: &BigInt) -> Result<Option<[BigInt; 3]>> {
    let Some(r) = sqrt_mod_squarefree(a, b)? else { return Ok(None) };
    let t = (&r * &r - a) / b;
    if t.is_zero() {
        return Ok(Some([r, BigInt::one(), BigInt::zero()]));
    }
    let (k, t1) = squarefree_split(&t)?;
    let Some([x1, y1, z1]) = lagrange(a, &t1)? else { return Ok(None) };
    let x = &r * &x1 + a * &y1;
    let y = &x1 + &r * &y1;
    let z = &t1 * &k * &z1;
    Ok(Some([x, y, z]))
}

/// Isotropic vector of a nondegenerate rational ternary form: brute search
/// up to `search_bound`, then Lagrange descent on the diagonalized form.
pub fn conic_point(q: &ConicForm, search_bound: u64) -> Result<ConicSolution> {
    let g = q.integer_gram();
    if let Some(gi) = g.iter().map(|r| r.iter().map(|c| c.to_i64().filter(|c| c.abs() < 1 << 60).map(i128::from)).collect::<Option<Vec<i128>>>()).collect::<Option<Vec<_>>>() {
        if let Some(v) = brute_search(&gi, search_bound.min(i64::MAX as u64) as i64) {
            return Ok(ConicSolution::Point(primitive(v.iter().map(|&c| BigInt::from(c)).collect())));
        }
    }
    let (basis, diag) = match diagonalize(q) {
        Ok(x) => x,
        Err(iso) => {
            let r: Vec<BigRational> = iso.iter().map(|c| c.to_rational().unwrap()).collect();
            return Ok(ConicSolution::Point(rational_to_primitive(&r)));
        }
    };
    let d: Vec<BigRational> = diag.iter().map(|c| c.to_rational().unwrap()).collect();
    // a1 X² + a2 Y² + a3 Z² = 0 ⇔ (a3 Z)² = −a1 a3 X² − a2 a3 Y²
    let an = -&d[0] * &d[2];
    let bn = -&d[1] * &d[2];
    let split = |q: &BigRational| -> Result<(BigRational, BigInt)> {
        crate::algebra::arith::rational_squarefree_big(q)
    };
    let (ra, sa) = split(&an)?;
    let (rb, sb) = split(&bn)?;
    // an X² = sa (ra X)²
    match lagrange(&sa, &sb)? {
        Some([x, y, z]) => {
            let xq = BigRational::from_integer(y) / &ra;
            let yq = BigRational::from_integer(z) / &rb;
            let zq = BigRational::from_integer(x) / &d[2];
            let coords = [xq, yq, zq];
            let v: Vec<BigRational> = (0..3)
                .map(|t| coords.iter().zip(&basis).fold(BigRational::zero(), |acc, (c, b)| acc + c * b[t].to_rational().unwrap()))
                .collect();
            let p = rational_to_primitive(&v);
            debug_assert!(q.eval(&ivec(&p)).is_zero());
            Ok(ConicSolution::Point(p))
        }
        None => {
            let (k, dd) = crate::algebra::arith::rational_squarefree(&(-&d[0] * &d[1]))?;
            // a1 (k√dd)² + a2 a1² = 0 with the ratio −a1 a2 = k² dd
            let root = ExactScalar::quadratic(BigRational::zero(), k, dd);
            let a1 = ExactScalar::from_rational(d[0].clone());
            let point: Vector = (0..3).map(|t| &(&root * &basis[0][t]) + &(&a1 * &basis[1][t])).collect();
            debug_assert!(q.eval(&point).is_zero());
            Ok(ConicSolution::Extension { d: dd, point })
        }
    }
}

/// Chevalley triple `[h,x] = 2x`, `[h,y] = −2y`, `[x,y] = h`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChevalleyBasis {
    pub h: ExactMatrix,
    pub x: ExactMatrix,
    pub y: ExactMatrix,
    /// Coordinates of `h`, `x`, `y` in the input basis.
    pub coords: [Vector; 3],
    /// Set when the basis needed `√d` beyond the input field.
    pub extension: Option<i64>,
}

impl ChevalleyBasis {
    pub fn is_valid(&self) -> bool {
        self.h.bracket(&self.x) == self.x.scale(&ExactScalar::from_i64(2))
            && self.h.bracket(&self.y) == self.y.scale(&ExactScalar::from_i64(-2))
            && self.x.bracket(&self.y) == self.h
    }
}

fn killing_is_rational(l: &LieAlgebra) -> bool {
    l.killing.entries().iter().all(ExactScalar::is_rational)
}

/// Small vectors over `Z[√e]` isotropic for an irrational Killing form.
fn search_over_extension(l: &LieAlgebra, e: i64, bound: i64) -> Option<Vector> {
    let root = ExactScalar::sqrt_of(e);
    let vals: Vec<ExactScalar> = (-bound..=bound)
        .flat_map(|a| (-bound..=bound).map(move |b| (a, b)))
        .map(|(a, b)| &ExactScalar::from_i64(a) + &root.scale_int(&b.into()))
        .collect();
    for u in &vals {
        for v in &vals {
            for w in &vals {
                let x = vec![u.clone(), v.clone(), w.clone()];
                if x.iter().any(|c| !c.is_zero()) && l.killing_value(&x, &x).is_zero() {
                    return Some(x);
                }
            }
        }
    }
    None
}

fn check_three_semisimple(l: &LieAlgebra) -> Result<()> {
    if l.dim() != 3 {
        return Err(Error::NotExpectedShape(format!("expected a 3-dimensional algebra, got {}", l.dim())));
    }
    if !l.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    Ok(())
}

/// True iff the algebra is split `sl2` over its field of definition.
pub fn is_sl2(l: &LieAlgebra) -> Result<bool> {
    check_three_semisimple(l)?;
    Ok(isotropic_vector(l, DEFAULT_SEARCH_BOUND, false)?.is_some())
}

/// Nonzero Killing-isotropic coordinate vector, optionally over a new
/// quadratic extension; `None` when the form is anisotropic over the field.
fn isotropic_vector(l: &LieAlgebra, bound: u64, allow_extension: bool) -> Result<Option<(Vector, Option<i64>)>> {
    for i in 0..3 {
        if l.killing[(i, i)].is_zero() {
            let mut e = vec![ExactScalar::zero(); 3];
            e[i] = ExactScalar::one();
            return Ok(Some((e, None)));
        }
    }
    if killing_is_rational(l) {
        return match conic_point(&ConicForm::new(l.killing.clone()), bound)? {
            ConicSolution::Point(p) => Ok(Some((ivec(&p), None))),
            ConicSolution::Extension { d, point } => Ok(allow_extension.then_some((point, Some(d)))),
        };
    }
    let e = l.field_disc().expect("irrational Killing form lives in an extension");
    Ok(search_over_extension(l, e, 3).map(|v| (v, None)))
}

/// Chevalley basis through a nilpotent Killing-isotropic element.
pub fn chevalley_basis(l: &LieAlgebra) -> Result<ChevalleyBasis> {
    chevalley_basis_with(l, DEFAULT_SEARCH_BOUND, true)
}

pub fn chevalley_basis_with(l: &LieAlgebra, bound: u64, allow_extension: bool) -> Result<ChevalleyBasis> {
    check_three_semisimple(l)?;
    let (e, extension) = match isotropic_vector(l, bound, allow_extension)? {
        Some(x) => x,
        None if killing_is_rational(l) => return Err(Error::NotExpectedShape("Killing form anisotropic".into())),
        None => return Err(Error::SearchBudget("isotropic vector over the quadratic extension".into())),
    };
    let ad_e = l.ad_of(&e);
    // ad_e² f' = −2e, h = [e, f']
    let rhs: Vector = e.iter().map(|c| c.scale_int(&BigInt::from(-2))).collect();
    let fp = ad_e.mul(&ad_e).solve(&rhs).ok_or_else(|| Error::NotExpectedShape("isotropic element is not nilpotent".into()))?;
    let h = ad_e.mul_vec(&fp);
    let ad_h = l.ad_of(&h);
    // [e, f] = h and (ad_h + 2) f = 0
    let two = ExactScalar::from_i64(2);
    let shifted = ad_h.add(&ExactMatrix::identity(3).scale(&two));
    let system = ad_e.vstack(&shifted);
    let mut b = h.clone();
    b.extend(vec![ExactScalar::zero(); 3]);
    let f = system.solve(&b).ok_or_else(|| Error::NotExpectedShape("no Chevalley partner".into()))?;
    let cb = ChevalleyBasis { h: l.element(&h), x: l.element(&e), y: l.element(&f), coords: [h, e, f], extension };
    assert!(cb.is_valid(), "Chevalley relations");
    Ok(cb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::structure_constants;
    use proptest::prelude::*;

    fn sl2_basis() -> Vec<ExactMatrix> {
        vec![
            ExactMatrix::from_i64(&[&[1, 0], &[0, -1]]),
            ExactMatrix::from_i64(&[&[0, 1], &[0, 0]]),
            ExactMatrix::from_i64(&[&[0, 0], &[1, 0]]),
        ]
    }

    fn form(d: [i64; 3]) -> ConicForm {
        ConicForm::new(ExactMatrix::from_i64(&[&[d[0], 0, 0], &[0, d[1], 0], &[0, 0, d[2]]]))
    }

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn pythagorean_and_unit_points() {
        assert_eq!(conic_point(&form([1, 1, -1]), 50).unwrap(), ConicSolution::Point(b(&[3, 4, 5])));
        assert_eq!(conic_point(&form([2, 3, -5]), 50).unwrap(), ConicSolution::Point(b(&[1, 1, 1])));
    }

    #[test]
    fn definite_form_needs_i() {
        match conic_point(&form([1, 1, 1]), 50).unwrap() {
            ConicSolution::Extension { d, point } => {
                assert_eq!(d, -1);
                assert!(form([1, 1, 1]).eval(&point).is_zero());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn descent_beyond_brute_bound() {
        // x² + y² = 1009·z² has no small solution within bound 2
        let q = form([1, 1, -1009]);
        let ConicSolution::Point(p) = conic_point(&q, 2).unwrap() else { panic!() };
        assert!(q.eval(&ivec(&p)).is_zero());
        // 3x² + 5y² − 7·11·z²  is anisotropic at 3 (−5·77 is not a square mod 3 ... checked by descent)
        let r = conic_point(&form([3, 5, -77]), 2).unwrap();
        match r {
            ConicSolution::Point(p) => assert!(form([3, 5, -77]).eval(&ivec(&p)).is_zero()),
            ConicSolution::Extension { point, .. } => assert!(form([3, 5, -77]).eval(&point).is_zero()),
        }
    }

    #[test]
    fn descent_matches_brute_existence() {
        for a in [1i64, 2, 3, 5, 6, 7] {
            for bb in [1i64, 2, 3, 5, 7, 10] {
                for c in [-1i64, -2, -3, -5, -7, -11, -13] {
                    let q = form([a, bb, c]);
                    let brute = conic_point(&q, 40).unwrap();
                    let descent = conic_point(&q, 0).unwrap();
                    assert_eq!(matches!(brute, ConicSolution::Point(_)), matches!(descent, ConicSolution::Point(_)), "{a} {bb} {c}");
                    for s in [brute, descent] {
                        match s {
                            ConicSolution::Point(p) => assert!(q.eval(&ivec(&p)).is_zero()),
                            ConicSolution::Extension { point, .. } => assert!(q.eval(&point).is_zero()),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_budget_reported() {
        // c = −(2^31 − 1)(2^61 − 1)(2^89 − 1) must be split to take square roots
        let m = |e: u32| (BigInt::one() << e) - BigInt::one();
        let c = -(m(31) * m(61) * m(89));
        let mut g = ExactMatrix::zeros(3, 3);
        g[(0, 0)] = ExactScalar::one();
        g[(1, 1)] = ExactScalar::one();
        g[(2, 2)] = ExactScalar::from_bigint(c);
        let r = conic_point(&ConicForm::new(g), 0);
        assert!(matches!(r, Err(Error::FactorizationBudget(_))), "{r:?}");
    }

    #[test]
    fn recognition() {
        let sl2 = structure_constants(sl2_basis()).unwrap();
        assert!(is_sl2(&sl2).unwrap());
        // so(3): [L1,L2]=L3 and cyclic
        let so3 = structure_constants(vec![
            ExactMatrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
            ExactMatrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
            ExactMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
        ])
        .unwrap();
        assert_eq!(so3.killing, ExactMatrix::from_i64(&[&[-2, 0, 0], &[0, -2, 0], &[0, 0, -2]]));
        assert!(!is_sl2(&so3).unwrap());
        let heis = structure_constants(vec![
            ExactMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
            ExactMatrix::from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
            ExactMatrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),
        ])
        .unwrap();
        assert_eq!(is_sl2(&heis), Err(Error::NotSemisimple));
    }

    #[test]
    fn standard_basis_recovered() {
        let l = structure_constants(sl2_basis()).unwrap();
        let cb = chevalley_basis(&l).unwrap();
        assert!(cb.is_valid());
        assert_eq!(cb.x, sl2_basis()[1]);
        assert_eq!(cb.h, sl2_basis()[0]);
        assert_eq!(cb.y, sl2_basis()[2]);
    }

    #[test]
    fn scaled_basis() {
        let five = ExactScalar::from_i64(5);
        let l = structure_constants(sl2_basis().iter().map(|m| m.scale(&five)).collect()).unwrap();
        let cb = chevalley_basis(&l).unwrap();
        assert!(cb.is_valid());
        assert_eq!(cb.extension, None);
    }

    #[test]
    fn so3_split_over_extension() {
        let so3 = structure_constants(vec![
            ExactMatrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
            ExactMatrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
            ExactMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
        ])
        .unwrap();
        let cb = chevalley_basis(&so3).unwrap();
        assert_eq!(cb.extension, Some(-1));
        assert!(cb.is_valid());
        assert!(chevalley_basis_with(&so3, 50, false).is_err());
    }

    fn conjugated(entries: &[i64]) -> Option<LieAlgebra> {
        let g = ExactMatrix::from_i64(&[&entries[0..2], &entries[2..4]]);
        let gi = g.inverse()?;
        structure_constants(sl2_basis().iter().map(|m| g.mul(m).mul(&gi)).collect()).ok()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn chevalley_on_conjugates(entries in proptest::collection::vec(-9i64..=9, 4), mix in proptest::collection::vec(-5i64..=5, 9)) {
            let Some(l) = conjugated(&entries) else { return Ok(()) };
            // random change of basis of the algebra itself
            let m = ExactMatrix::from_i64(&[&mix[0..3], &mix[3..6], &mix[6..9]]);
            prop_assume!(!m.determinant().is_zero());
            let basis: Vec<ExactMatrix> = (0..3).map(|i| l.element(&m.row(i))).collect();
            let l = structure_constants(basis).unwrap();
            let cb = chevalley_basis(&l).unwrap();
            prop_assert!(cb.is_valid());
            prop_assert_eq!(cb.extension, None);
        }

        #[test]
        fn conic_solutions_are_isotropic(a in 1i64..30, b in 1i64..30, c in -30i64..-1) {
            let q = form([a, b, c]);
            match conic_point(&q, 10).unwrap() {
                ConicSolution::Point(p) => prop_assert!(q.eval(&ivec(&p)).is_zero()),
                ConicSolution::Extension { point, .. } => prop_assert!(q.eval(&point).is_zero()),
            }
        }
    }
}
