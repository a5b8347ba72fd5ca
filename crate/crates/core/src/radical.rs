//! Parametrization by radicals of a curve with a map of degree at most 3,
//! and high-precision complex evaluation of the resulting expressions.

use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{first_subresultant, primitive_part, resultant_eliminate, ExactScalar, MultiPoly};
use crate::curves::PlaneCurve;
use crate::error::{Error, Result};
use crate::pipeline::verify_degree3;

/// Fractional bits of the fixed-point evaluator; above 50 decimal digits.
pub const PRECISION_BITS: u64 = 192;

/// Parameter values closer than this to a branch point are rejected.
pub const BRANCH_TOLERANCE: f64 = 1e-10;

/// Complex number with real and imaginary parts scaled by `2^PRECISION_BITS`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cx {
    re: BigInt,
    im: BigInt,
}

fn shift_one() -> BigInt {
    BigInt::one() << PRECISION_BITS
}

fn big_to_f64(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        n.to_f64().unwrap_or(0.0) / 2f64.powi(PRECISION_BITS as i32)
    } else {
        let s = bits - 1000;
        (n >> s).to_f64().unwrap_or(0.0) * 2f64.powi(s as i32 - PRECISION_BITS as i32)
    }
}

fn f64_to_fixed(x: f64) -> BigInt {
    if x == 0.0 || !x.is_finite() {
        return BigInt::zero();
    }
    let (m, e) = frexp(x);
    // x = m · 2^e with m an integer of 53 bits
    let mant = BigInt::from(m);
    let shift = e + PRECISION_BITS as i64;
    if shift >= 0 {
        mant << shift as u64
    } else {
        mant >> (-shift) as u64
    }
}

fn frexp(x: f64) -> (i64, i64) {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 0 { 1 } else { -1 };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = (bits & ((1u64 << 52) - 1)) as i64;
    if exp == 0 {
        (sign * frac, -1074)
    } else {
        (sign * (frac | (1i64 << 52)), exp - 1075)
    }
}

impl Cx {
    pub fn zero() -> Self {
        Cx { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn one() -> Self {
        Cx { re: shift_one(), im: BigInt::zero() }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Cx { re: f64_to_fixed(re), im: f64_to_fixed(im) }
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        Cx { re: (num << PRECISION_BITS) / den, im: BigInt::zero() }
    }

    pub fn from_scalar(c: &ExactScalar) -> Self {
        let base = Cx::from_ratio(c.base().numer(), c.base().denom());
        match c.disc() {
            None => base,
            Some(d) => {
                let e = c.ext_coeff();
                let r = Cx::from_ratio(&BigInt::from(d), &BigInt::one()).root(2).expect("nonzero");
                base.add(&Cx::from_ratio(e.numer(), e.denom()).mul(&r))
            }
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (big_to_f64(&self.re), big_to_f64(&self.im))
    }

    pub fn abs_f64(&self) -> f64 {
        let (a, b) = self.to_f64_pair();
        a.hypot(b)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn neg(&self) -> Cx {
        Cx { re: -&self.re, im: -&self.im }
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        Cx { re: re >> PRECISION_BITS, im: im >> PRECISION_BITS }
    }

    pub fn div(&self, o: &Cx) -> Option<Cx> {
        let n2 = &o.re * &o.re + &o.im * &o.im;
        if n2.is_zero() {
            return None;
        }
        let re = (&self.re * &o.re + &self.im * &o.im) << PRECISION_BITS;
        let im = (&self.im * &o.re - &self.re * &o.im) << PRECISION_BITS;
        Some(Cx { re: re / &n2, im: im / &n2 })
    }

    pub fn pow(&self, e: u32) -> Cx {
        (0..e).fold(Cx::one(), |acc, _| acc.mul(self))
    }

    /// Principal `k`-th root: an `f64` seed on the principal branch refined
    /// by Newton steps, which stay in the seed's basin.
    pub fn root(&self, k: u32) -> Option<Cx> {
        if self.is_zero() {
            return Some(Cx::zero());
        }
        let (a, b) = self.to_f64_pair();
        let r = a.hypot(b).powf(1.0 / k as f64);
        let th = b.atan2(a) / k as f64;
        let mut z = Cx::from_f64(r * th.cos(), r * th.sin());
        let kc = Cx::from_ratio(&BigInt::from(k), &BigInt::one());
        let km1 = Cx::from_ratio(&BigInt::from(k - 1), &BigInt::one());
        for _ in 0..8 {
            let step = self.div(&z.pow(k - 1))?;
            z = km1.mul(&z).add(&step).div(&kc)?;
        }
        Some(z)
    }
}

/// Expression tree over constants, the parameter `t`, field operations and
/// `k`-th roots.
#[derive(Clone, Debug, PartialEq)]
pub enum RadicalExpression {
    Const(ExactScalar),
    Param,
    Add(Rc<RadicalExpression>, Rc<RadicalExpression>),
    Sub(Rc<RadicalExpression>, Rc<RadicalExpression>),
    Mul(Rc<RadicalExpression>, Rc<RadicalExpression>),
    Div(Rc<RadicalExpression>, Rc<RadicalExpression>),
    Root(u32, Rc<RadicalExpression>),
}

use RadicalExpression as E;

type Ex = Rc<RadicalExpression>;

fn cst(c: ExactScalar) -> Ex {
    Rc::new(E::Const(c))
}

fn is_const(e: &Ex, v: i64) -> bool {
    matches!(&**e, E::Const(c) if *c == ExactScalar::from_i64(v))
}

fn add(a: Ex, b: Ex) -> Ex {
    if is_const(&a, 0) {
        b
    } else if is_const(&b, 0) {
        a
    } else {
        Rc::new(E::Add(a, b))
    }
}

fn sub(a: Ex, b: Ex) -> Ex {
    if is_const(&b, 0) {
        a
    } else {
        Rc::new(E::Sub(a, b))
    }
}

fn mul(a: Ex, b: Ex) -> Ex {
    if is_const(&a, 0) || is_const(&b, 0) {
        cst(ExactScalar::zero())
    } else if is_const(&a, 1) {
        b
    } else if is_const(&b, 1) {
        a
    } else {
        Rc::new(E::Mul(a, b))
    }
}

fn div(a: Ex, b: Ex) -> Ex {
    if is_const(&b, 1) || is_const(&a, 0) {
        a
    } else {
        Rc::new(E::Div(a, b))
    }
}

fn root(k: u32, a: Ex) -> Ex {
    Rc::new(E::Root(k, a))
}

impl RadicalExpression {
    pub fn eval(&self, t: &Cx) -> Option<Cx> {
        Some(match self {
            E::Const(c) => Cx::from_scalar(c),
            E::Param => t.clone(),
            E::Add(a, b) => a.eval(t)?.add(&b.eval(t)?),
            E::Sub(a, b) => a.eval(t)?.sub(&b.eval(t)?),
            E::Mul(a, b) => a.eval(t)?.mul(&b.eval(t)?),
            E::Div(a, b) => {
                let d = b.eval(t)?;
                if d.abs_f64() < BRANCH_TOLERANCE {
                    return None;
                }
                a.eval(t)?.div(&d)?
            }
            E::Root(k, a) => a.eval(t)?.root(*k)?,
        })
    }

    /// Largest root index in the tree, 1 when there is none.
    pub fn max_root_index(&self) -> u32 {
        match self {
            E::Const(_) | E::Param => 1,
            E::Add(a, b) | E::Sub(a, b) | E::Mul(a, b) | E::Div(a, b) => a.max_root_index().max(b.max_root_index()),
            E::Root(k, a) => (*k).max(a.max_root_index()),
        }
    }

    pub fn root_indices(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_roots(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_roots(&self, out: &mut Vec<u32>) {
        match self {
            E::Const(_) | E::Param => {}
            E::Add(a, b) | E::Sub(a, b) | E::Mul(a, b) | E::Div(a, b) => {
                a.collect_roots(out);
                b.collect_roots(out);
            }
            E::Root(k, a) => {
                out.push(*k);
                a.collect_roots(out);
            }
        }
    }
}

impl fmt::Display for RadicalExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            E::Const(c) => write!(f, "{c}"),
            E::Param => f.write_str("t"),
            E::Add(a, b) => write!(f, "({a} + {b})"),
            E::Sub(a, b) => write!(f, "({a} - {b})"),
            E::Mul(a, b) => write!(f, "({a} * {b})"),
            E::Div(a, b) => write!(f, "({a} / {b})"),
            E::Root(k, a) => write!(f, "root({k}, {a})"),
        }
    }
}

/// Horner form of a polynomial in `t` (variable 2 of 3).
fn t_poly_expr(p: &MultiPoly) -> Ex {
    let cs = p.coeffs_in(2);
    let mut acc = cst(ExactScalar::zero());
    for c in cs.iter().rev() {
        let c0 = c.constant_value().unwrap_or_else(ExactScalar::zero);
        acc = add(mul(acc, Rc::new(E::Param)), cst(c0));
    }
    acc
}

/// Horner form in `u` (variable 0) with coefficients in `t`.
fn ut_poly_expr(p: &MultiPoly, u: &Ex) -> Ex {
    let cs = p.coeffs_in(0);
    let mut acc = cst(ExactScalar::zero());
    for c in cs.iter().rev() {
        acc = add(mul(acc, u.clone()), t_poly_expr(c));
    }
    acc
}

/// `num/den` in `u, t`, divided out when `den` is constant.
fn quotient_expr(num: &MultiPoly, den: &MultiPoly, u: Option<&Ex>) -> Ex {
    let zero = cst(ExactScalar::zero());
    let u = u.unwrap_or(&zero);
    match den.constant_value() {
        Some(c) => ut_poly_expr(&num.scale(&c.inv()), u),
        None => div(ut_poly_expr(num, u), ut_poly_expr(den, u)),
    }
}

/// Complex value of a polynomial at a point.
pub fn eval_poly_cx(p: &MultiPoly, pt: &[Cx]) -> Cx {
    let mut acc = Cx::zero();
    for (e, c) in p.terms() {
        let mut term = Cx::from_scalar(c);
        for (x, &k) in pt.iter().zip(e.iter()) {
            if k > 0 {
                term = term.mul(&x.pow(k));
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// `x(t), y(t)` on the affine chart `z = 1` of a plane curve.
#[derive(Clone, Debug)]
pub struct RadicalParametrization {
    pub x: RadicalExpression,
    pub y: RadicalExpression,
    /// The linear form in `x, y` used as primitive element.
    pub primitive: (i64, i64),
    pub degree: usize,
    /// Polynomial in `t` (variable 2) whose zeros are branch points or
    /// poles of the formulas.
    pub discriminant: MultiPoly,
    pub leading: MultiPoly,
}

impl RadicalParametrization {
    /// Curve point over `t`, or `None` near a branch point.
    pub fn point_at(&self, t: &Cx) -> Option<(Cx, Cx)> {
        let tp = [Cx::zero(), Cx::zero(), t.clone()];
        if eval_poly_cx(&self.discriminant, &tp).abs_f64() < BRANCH_TOLERANCE
            || eval_poly_cx(&self.leading, &tp).abs_f64() < BRANCH_TOLERANCE
        {
            return None;
        }
        Some((self.x.eval(t)?, self.y.eval(t)?))
    }

    /// `|f(x(t), y(t), 1)|`.
    pub fn residual(&self, f: &MultiPoly, t: &Cx) -> Option<f64> {
        let (x, y) = self.point_at(t)?;
        Some(eval_poly_cx(f, &[x, y, Cx::one()]).abs_f64())
    }
}

const PRIMITIVE_ATTEMPTS: [(i64, i64); 5] = [(1, 0), (0, 1), (1, 1), (1, 2), (1, -1)];

fn sample_t() -> [ExactScalar; 3] {
    [ExactScalar::from_ratio(7, 3), ExactScalar::from_ratio(-11, 5), ExactScalar::from_ratio(13, 2)]
}

/// Cubic `c₃u³ + c₂u² + c₁u + c₀` solved by Cardano after depression, with
/// the second cube root tied to the first through `UV = −P/3`.
fn cardano(c: &[MultiPoly]) -> (Ex, MultiPoly) {
    let (c0, c1, c2, c3) = (&c[0], &c[1], &c[2], &c[3]);
    let k = |n: i64| ExactScalar::from_i64(n);
    // P = (3c₁c₃ − c₂²)/(3c₃²), Q = (2c₂³ − 9c₃c₂c₁ + 27c₃²c₀)/(27c₃³)
    let pn = c1.mul(c3).scale(&k(3)).sub(&c2.pow(2));
    let pd = c3.pow(2).scale(&k(3));
    let qn = c2.pow(3).scale(&k(2)).sub(&c3.mul(c2).mul(c1).scale(&k(9))).add(&c3.pow(2).mul(c0).scale(&k(27)));
    let qd = c3.pow(3).scale(&k(27));
    // Q²/4 + P³/27 = −disc/(108 c₃⁴)
    let disc = c2.pow(2).mul(&c1.pow(2)).sub(&c3.mul(&c1.pow(3)).scale(&k(4))).sub(&c2.pow(3).mul(c0).scale(&k(4)))
        .sub(&c3.pow(2).mul(&c0.pow(2)).scale(&k(27)))
        .add(&c3.mul(c2).mul(c1).mul(c0).scale(&k(18)));
    let shift = div(t_poly_expr(c2), t_poly_expr(&c3.scale(&k(3))));
    let half_q = div(t_poly_expr(&qn), t_poly_expr(&qd.scale(&k(2))));
    let s = if pn.is_zero() {
        root(3, sub(cst(k(0)), mul(cst(k(2)), half_q)))
    } else {
        let inner = div(t_poly_expr(&disc.neg()), t_poly_expr(&c3.pow(4).scale(&k(108))));
        let big_u = root(3, add(sub(cst(k(0)), half_q), root(2, inner)));
        let p = div(t_poly_expr(&pn), t_poly_expr(&pd));
        let big_v = div(sub(cst(k(0)), p), mul(cst(k(3)), big_u.clone()));
        add(big_u, big_v)
    };
    (sub(s, shift), disc)
}

fn solve_low_degree(cs: &[MultiPoly]) -> Option<(Ex, MultiPoly)> {
    let k = |n: i64| ExactScalar::from_i64(n);
    match cs.len() - 1 {
        1 => Some((quotient_expr(&cs[0].neg(), &cs[1], None), MultiPoly::one(3))),
        2 => {
            let disc = cs[1].pow(2).sub(&cs[2].mul(&cs[0]).scale(&k(4)));
            let num = add(t_poly_expr(&cs[1].neg()), root(2, t_poly_expr(&disc)));
            Some((div(num, t_poly_expr(&cs[2].scale(&k(2)))), disc))
        }
        3 => Some(cardano(cs)),
        _ => None,
    }
}

/// One primitive-element attempt with `u = a·x + b·y`; variables of the
/// working polynomials are `(u, w, t)` where `w` is the other coordinate.
fn attempt(f: &MultiPoly, p: &MultiPoly, q: &MultiPoly, (a, b): (i64, i64), deg: usize) -> Option<RadicalParametrization> {
    let (u, w, one) = (MultiPoly::var(3, 0), MultiPoly::var(3, 1), MultiPoly::one(3));
    let ks = |n: i64| ExactScalar::from_i64(n);
    // (x, y) in terms of (u, w): w is y when a ≠ 0, else x
    let images = if a != 0 {
        let x = u.sub(&w.scale(&ks(b))).scale(&ExactScalar::from_ratio(1, a));
        vec![x, w.clone(), one.clone()]
    } else {
        let y = u.scale(&ExactScalar::from_ratio(1, b));
        vec![w.clone(), y, one.clone()]
    };
    let f2 = f.compose(&images);
    let g2 = MultiPoly::var(3, 2).mul(&q.compose(&images)).sub(&p.compose(&images));
    let dw = f2.degree_in(1).unwrap_or(0);
    let r = match (dw, g2.degree_in(1).unwrap_or(0)) {
        (0, _) => return None,
        (_, 0) => g2.pow(dw),
        _ => resultant_eliminate(&f2, &g2, 1).ok()?,
    };
    if r.is_zero() {
        return None;
    }
    let r = primitive_part(&primitive_part(&r, 0), 2);
    if r.degree_in(0).unwrap_or(0) as usize != deg {
        return None;
    }
    let squarefree = sample_t().iter().any(|t0| {
        r.substitute_scalar(2, t0).to_upoly(0).is_some_and(|up| up.degree() == Some(deg) && up.is_squarefree())
    });
    if !squarefree {
        return None;
    }
    let cs = r.coeffs_in(0);
    let (u_expr, disc) = solve_low_degree(&cs)?;
    // w from the first subresultant, or from f when g is free of w
    let (sa, sb) = if g2.involves(1) {
        first_subresultant(&f2, &g2, 1).ok()?
    } else if dw == 1 {
        let c = f2.coeffs_in(1);
        (c[1].clone(), c[0].clone())
    } else {
        return None;
    };
    if sa.is_zero() {
        return None;
    }
    let w_expr = quotient_expr(&sb.neg(), &sa, Some(&u_expr));
    let (x, y) = if a != 0 {
        let x = div(sub(u_expr.clone(), mul(cst(ks(b)), w_expr.clone())), cst(ks(a)));
        (x, w_expr)
    } else {
        (w_expr, div(u_expr.clone(), cst(ks(b))))
    };
    Some(RadicalParametrization {
        x: (*x).clone(),
        y: (*y).clone(),
        primitive: (a, b),
        degree: deg,
        discriminant: disc,
        leading: cs[deg].clone(),
    })
}

/// Radical formulas for the affine coordinates over `t = p/q`, for maps of
/// degree at most 3.
pub fn radical_parametrization(c: &PlaneCurve, map: &(MultiPoly, MultiPoly)) -> Result<RadicalParametrization> {
    let deg = verify_degree3(c, map)?;
    if deg > 3 {
        return Err(Error::Unsupported(format!("map of degree {deg}")));
    }
    let one = ExactScalar::one();
    let f = c.f.substitute_scalar(2, &one);
    let (p, q) = (map.0.substitute_scalar(2, &one), map.1.substitute_scalar(2, &one));
    PRIMITIVE_ATTEMPTS
        .iter()
        .find_map(|&ab| attempt(&f, &p, &q, ab, deg))
        .ok_or(Error::PrimitiveElementNotFound)
}

/// Residuals `|f(x(t), y(t))|` at parameter values `t = k/7` for
/// `k = start, start+1, …`, skipping branch points, until `count` are found.
pub fn sample_residuals(c: &PlaneCurve, rp: &RadicalParametrization, start: i64, count: usize) -> Vec<(i64, f64)> {
    let f = c.f.substitute_scalar(2, &ExactScalar::one());
    let mut out = Vec::new();
    let mut k = start;
    while out.len() < count && k < start + 50 * count as i64 + 50 {
        let t = Cx::from_ratio(&BigInt::from(k), &BigInt::from(7));
        if let Some(r) = rp.residual(&f, &t) {
            out.push((k, r));
        }
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{generate_degy3, generate_resultant};
    use crate::format::parse_poly;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    fn close(a: &Cx, re: f64, im: f64) -> bool {
        let (x, y) = a.to_f64_pair();
        (x - re).abs() < 1e-12 && (y - im).abs() < 1e-12
    }

    #[test]
    fn fixed_point_arithmetic() {
        let two = Cx::from_f64(2.0, 0.0);
        assert!(close(&two.root(2).unwrap().pow(2), 2.0, 0.0));
        let m8 = Cx::from_f64(-8.0, 0.0);
        // principal cube root of −8 is 1 + i√3
        assert!(close(&m8.root(3).unwrap(), 1.0, 3f64.sqrt()));
        let i = Cx::from_f64(0.0, 1.0);
        assert!(close(&i.mul(&i), -1.0, 0.0));
        assert!(close(&Cx::one().div(&i).unwrap(), 0.0, -1.0));
        let s = Cx::from_scalar(&ExactScalar::sqrt_of(-3));
        assert!(close(&s, 0.0, 3f64.sqrt()));
    }

    #[test]
    fn precision_beyond_fifty_digits() {
        let two = Cx::from_ratio(&BigInt::from(2), &BigInt::one());
        let r = two.root(2).unwrap();
        let err = r.mul(&r).sub(&two);
        // |err| < 10⁻⁵⁰
        let bound = BigInt::one() << (PRECISION_BITS - 166);
        assert!(err.re.abs() < bound && err.im.abs() < bound);
    }

    #[test]
    fn hyperelliptic_square_root() {
        let c = PlaneCurve::new(p("y^2*z^5 - x^7 - x*z^6 - z^7"));
        let rp = radical_parametrization(&c, &(p("x"), p("z"))).unwrap();
        assert_eq!(rp.degree, 2);
        assert_eq!(rp.x.to_string(), "t");
        assert_eq!(rp.y.root_indices(), vec![2]);
        for (_, r) in sample_residuals(&c, &rp, 1, 10) {
            assert!(r < 1e-20, "{r}");
        }
    }

    #[test]
    fn pure_cube_root() {
        let c = PlaneCurve::new(p("y^3*z - x^4 - x*z^3 - z^4"));
        let rp = radical_parametrization(&c, &(p("x"), p("z"))).unwrap();
        assert_eq!(rp.degree, 3);
        assert_eq!(rp.primitive, (0, 1));
        assert_eq!(rp.x.to_string(), "t");
        assert_eq!(rp.y.root_indices(), vec![3]);
        assert!(rp.y.to_string().starts_with("root(3, "));
        let res = sample_residuals(&c, &rp, -5, 10);
        assert_eq!(res.len(), 10);
        assert!(res.iter().all(|&(_, r)| r < 1e-20));
    }

    #[test]
    fn full_cardano_nesting() {
        let c = PlaneCurve::new(p("y^3*z + x^2*y*z - 2*y*z^3 + x^4 - 3*z^4"));
        let rp = radical_parametrization(&c, &(p("x"), p("z"))).unwrap();
        assert_eq!(rp.y.root_indices(), vec![2, 3]);
        let s = rp.y.to_string();
        assert!(s.contains("root(3, ") && s.contains("root(2, "));
        assert!(sample_residuals(&c, &rp, 1, 10).iter().all(|&(_, r)| r < 1e-20));
    }

    #[test]
    fn birational_coordinate() {
        let c = PlaneCurve::new(p("y*z - x^2"));
        let rp = radical_parametrization(&c, &(p("x"), p("z"))).unwrap();
        assert_eq!(rp.degree, 1);
        assert_eq!(rp.x.max_root_index(), 1);
        assert_eq!(rp.y.max_root_index(), 1);
        assert!(sample_residuals(&c, &rp, 1, 5).iter().all(|&(_, r)| r < 1e-30));
    }

    #[test]
    fn parameter_coordinate_is_skipped() {
        // with t = y the first coordinate x already generates
        let c = PlaneCurve::new(p("x^3*z - y^4 - y*z^3 - z^4"));
        let rp = radical_parametrization(&c, &(p("y"), p("z"))).unwrap();
        assert_eq!(rp.primitive, (1, 0));
        assert_eq!(rp.y.to_string(), "t");
        assert!(sample_residuals(&c, &rp, 1, 10).iter().all(|&(_, r)| r < 1e-20));
    }

    #[test]
    fn generated_fixtures() {
        let (c, w) = generate_degy3(3, 5, 2).unwrap();
        let rp = radical_parametrization(&c, &w.map).unwrap();
        assert!(rp.x.max_root_index() <= 3 && rp.y.max_root_index() <= 3);
        assert!(sample_residuals(&c, &rp, 1, 10).iter().all(|&(_, r)| r < 1e-20));
        let (_, w) = generate_resultant(4, 2, 4).unwrap();
        let rp = radical_parametrization(&w.curve, &w.map).unwrap();
        assert!(sample_residuals(&w.curve, &rp, 1, 10).iter().all(|&(_, r)| r < 1e-20));
    }

    #[test]
    fn constant_map_is_degenerate() {
        let c = PlaneCurve::new(p("y^3*z - x^4 - z^4"));
        assert_eq!(radical_parametrization(&c, &(p("z"), p("z"))).err(), Some(Error::MapDegenerate));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn cubic_in_y_satisfied(a in -3i64..=3, b in -3i64..=3, c0 in 1i64..=4) {
            let f = p(&format!("y^3*z^2 + ({a})*x^2*y*z^2 + ({b})*x*y*z^3 + x^5 - {c0}*z^5"));
            let curve = PlaneCurve::new(f);
            let rp = radical_parametrization(&curve, &(p("x"), p("z"))).unwrap();
            for (_, r) in sample_residuals(&curve, &rp, 1, 10) {
                prop_assert!(r < 1e-20);
            }
        }
    }
}
