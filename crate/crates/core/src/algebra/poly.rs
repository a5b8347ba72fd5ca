//! Sparse multivariate polynomials over [`ExactScalar`].
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order is
//! lexicographic with variable 0 most significant. Zero coefficients are never
//! stored.

use std::collections::BTreeMap;
use std::fmt;

use super::scalar::ExactScalar;
use super::upoly::UPoly;

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, ExactScalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars > 0, "polynomials need at least one variable");
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, ExactScalar::one())
    }

    pub fn constant(nvars: usize, c: ExactScalar) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, ExactScalar::one())
    }

    pub fn monomial(nvars: usize, exp: Exponent, c: ExactScalar) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, ExactScalar)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> ExactScalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<ExactScalar> {
        self.is_constant().then(|| self.coeff(&vec![0; self.nvars]))
    }

    pub fn add_term(&mut self, e: Exponent, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), &-c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, &(c1 * c2));
            }
        }
        r
    }

    pub fn mul_monomial(&self, exp: &[u32], c: &ExactScalar) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, k) in &self.terms {
            let e2: Exponent = e.iter().zip(exp).map(|(a, b)| a + b).collect();
            r.add_term(e2, &(k * c));
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut b = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    pub fn eval(&self, pt: &[ExactScalar]) -> ExactScalar {
        assert_eq!(pt.len(), self.nvars);
        let mut acc = ExactScalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in pt.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k);
                }
            }
            acc += &t;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            r.add_term(e2, &(c * &ExactScalar::from_i64(e[var] as i64)));
        }
        r
    }

    /// Substitute polynomial `images[i]` for variable `i` (all images share an
    /// arbitrary common variable count).
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let nv = images[0].nvars;
        let maxdeg: Vec<u32> = (0..self.nvars).map(|v| self.degree_in(v).unwrap_or(0)).collect();
        let powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .zip(&maxdeg)
            .map(|(img, &d)| {
                let mut ps = vec![MultiPoly::one(nv)];
                for k in 1..=d as usize {
                    let next = ps[k - 1].mul(img);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut r = MultiPoly::zero(nv);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(nv, c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&powers[v][k as usize]);
                }
            }
            r = r.add(&t);
        }
        r
    }

    pub fn substitute(&self, var: usize, val: &MultiPoly) -> MultiPoly {
        let images: Vec<MultiPoly> =
            (0..self.nvars).map(|i| if i == var { val.clone() } else { MultiPoly::var(self.nvars, i) }).collect();
        self.compose(&images)
    }

    pub fn substitute_scalar(&self, var: usize, val: &ExactScalar) -> MultiPoly {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[var] = 0;
            r.add_term(e2, &(c * &val.pow(e[var])));
        }
        r
    }

    /// Coefficients with respect to `var`: entry `k` multiplies `var^k`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(self.nvars); if self.is_zero() { 0 } else { d + 1 }];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[var] as usize;
            e2[var] = 0;
            out[k].add_term(e2, c);
        }
        out
    }

    pub fn from_coeffs_in(var: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let nv = coeffs[0].nvars;
        let mut r = MultiPoly::zero(nv);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, v) in &c.terms {
                let mut e2 = e.clone();
                e2[var] += k as u32;
                r.add_term(e2, v);
            }
        }
        r
    }

    /// Leading coefficient with respect to `var` (a polynomial free of `var`).
    pub fn lead_in(&self, var: usize) -> MultiPoly {
        self.coeffs_in(var).pop().unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    /// Lexicographically largest term.
    pub fn lead_term(&self) -> Option<(&Exponent, &ExactScalar)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (de, dc) = d.lead_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let dinv = dc.inv();
        let mut r = self.clone();
        let mut q = MultiPoly::zero(self.nvars);
        while let Some((e, c)) = r.lead_term().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Exponent = e.iter().zip(&de).map(|(a, b)| a - b).collect();
            let qc = &c * &dinv;
            r = r.sub(&d.mul_monomial(&qe, &qc));
            q.add_term(qe, &qc);
        }
        Some(q)
    }

    /// Scale so the lexicographically leading coefficient is 1.
    pub fn monic(&self) -> MultiPoly {
        match self.lead_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Homogenize with a new last variable, to degree `deg` (at least the
    /// total degree).
    pub fn homogenize(&self, deg: u32) -> MultiPoly {
        let mut r = MultiPoly::zero(self.nvars + 1);
        for (e, c) in &self.terms {
            let s: u32 = e.iter().sum();
            assert!(s <= deg, "homogenization degree below total degree");
            let mut e2 = e.clone();
            e2.push(deg - s);
            r.add_term(e2, c);
        }
        r
    }

    /// Set variable `var` to 1 and drop it.
    pub fn dehomogenize(&self, var: usize) -> MultiPoly {
        assert!(self.nvars > 1);
        let mut r = MultiPoly::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.remove(var);
            r.add_term(e2, c);
        }
        r
    }

    /// Re-embed into a ring with more variables; `map[i]` is the new index of
    /// old variable `i`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> MultiPoly {
        let mut r = MultiPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            r.add_term(e2, c);
        }
        r
    }

    /// View as a univariate polynomial in `var`; all other variables must be
    /// absent.
    pub fn to_upoly(&self, var: usize) -> Option<UPoly> {
        let cs = self.coeffs_in(var);
        let mut out = Vec::with_capacity(cs.len());
        for c in cs {
            out.push(c.constant_value()?);
        }
        Some(UPoly::new(out))
    }

    pub fn from_upoly(nvars: usize, var: usize, p: &UPoly) -> MultiPoly {
        let mut r = MultiPoly::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[var] = k as u32;
            r.add_term(e, c);
        }
        r
    }

    pub fn map_coeffs(&self, f: impl Fn(&ExactScalar) -> ExactScalar) -> MultiPoly {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Largest field discriminant appearing in any coefficient.
    pub fn disc(&self) -> Option<i64> {
        self.terms.values().find_map(ExactScalar::disc)
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { names[v].to_string() } else { format!("{}^{k}", names[v]) })
                .collect();
            let (neg, mag) = match c.rational_cmp_zero() {
                Some(std::cmp::Ordering::Less) => (true, -c),
                _ => (false, c.clone()),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", mag, mono.join("*")));
            }
        }
        out
    }

    pub fn default_names(&self) -> Vec<String> {
        match self.nvars {
            1 => vec!["t".into()],
            2 => vec!["x".into(), "y".into()],
            3 => vec!["x".into(), "y".into(), "z".into()],
            n => (0..n).map(|i| format!("x{i}")).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.default_names();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.fmt_with(&refs))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
