//! Text formats for polynomials and curve files.
//!
//! Plane curve file:
//!
//! ```text
//! vars: x,y,z
//! f = y^3*z^2 - x^5 + 2*x*z^4
//! node: (0 : 0 : 1)
//! ```
//!
//! Canonical curve file: `ambient: N`, then either `form_i = …` lines over a
//! source curve given by `vars:`/`f =`/`node:` lines, or `quadric_j = …`
//! lines in the variables `x0 … xN`. Blank lines and `#` comments are
//! ignored. A plane curve may carry a birational model line `model = …`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{ExactScalar, MultiPoly};
use crate::curves::{CanonicalCurve, PlaneCurve, ProjPoint};
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 64;
const MAX_TERMS: usize = 200_000;
const MAX_DEPTH: usize = 200;
const MAX_DIGITS: usize = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> std::result::Result<Vec<Tok>, String> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            if i - st > MAX_DIGITS {
                return Err("numeral too long".into());
            }
            let digits: String = cs[st..i].iter().collect();
            out.push(Tok::Num(digits.parse().expect("decimal digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [&'a str],
    disc: Option<i64>,
    depth: usize,
}

type PResult<T> = std::result::Result<T, String>;

impl Parser<'_> {
    fn nv(&self) -> usize {
        self.names.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> PResult<()> {
        if self.eat(op) {
            Ok(())
        } else {
            Err(format!("expected '{op}'"))
        }
    }

    fn checked(&self, p: MultiPoly) -> PResult<MultiPoly> {
        if p.num_terms() > MAX_TERMS {
            Err("polynomial too large".into())
        } else {
            Ok(p)
        }
    }

    fn expr(&mut self) -> PResult<MultiPoly> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err("expression nested too deeply".into());
        }
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> PResult<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let r = self.unary()?;
                if acc.num_terms().saturating_mul(r.num_terms()) > MAX_TERMS {
                    return Err("polynomial too large".into());
                }
                acc = self.checked(acc.mul(&r))?;
            } else if self.eat('/') {
                let r = self.unary()?;
                let c = r.constant_value().ok_or("division by a non-constant")?;
                if c.is_zero() {
                    return Err("division by zero".into());
                }
                acc = acc.scale(&c.inv());
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> PResult<MultiPoly> {
        if self.eat('-') {
            self.depth += 1;
            if self.depth > MAX_DEPTH {
                return Err("expression nested too deeply".into());
            }
            let v = self.unary()?.neg();
            self.depth -= 1;
            return Ok(v);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> PResult<MultiPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = match self.peek() {
            Some(Tok::Num(n)) => n.clone(),
            _ => return Err("exponent must be a nonnegative integer".into()),
        };
        self.pos += 1;
        let e: u32 = u32::try_from(&e).ok().filter(|&e| e <= MAX_EXPONENT).ok_or("exponent too large")?;
        if base.num_terms() > 1 && power_size_bound(&base, e) > MAX_TERMS as f64 {
            return Err("polynomial too large".into());
        }
        self.checked(base.pow(e))
    }

    fn atom(&mut self) -> PResult<MultiPoly> {
        let nv = self.nv();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(nv, ExactScalar::from_bigint(n)))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Ident(name)) if name == "sqrt" => {
                self.pos += 1;
                self.expect('(')?;
                let neg = self.eat('-');
                let n = match self.peek() {
                    Some(Tok::Num(n)) => n.clone(),
                    _ => return Err("sqrt takes an integer".into()),
                };
                self.pos += 1;
                self.expect(')')?;
                let n = if neg { -n } else { n };
                Ok(MultiPoly::constant(nv, self.sqrt(n)?))
            }
            Some(Tok::Ident(name)) => {
                let v = self.names.iter().position(|&s| s == name).ok_or_else(|| format!("unknown variable {name}"))?;
                self.pos += 1;
                Ok(MultiPoly::var(nv, v))
            }
            Some(Tok::Op(c)) => Err(format!("unexpected '{c}'")),
            None => Err("unexpected end of expression".into()),
        }
    }

    fn sqrt(&mut self, n: BigInt) -> PResult<ExactScalar> {
        if n.is_zero() {
            return Ok(ExactScalar::zero());
        }
        let n: i64 = i64::try_from(&n).ok().filter(|v| v.abs() < 1 << 40).ok_or("sqrt argument too large")?;
        let (k, d) = split_square(n);
        if d == 1 {
            return Ok(ExactScalar::from_i64(k));
        }
        match self.disc {
            Some(e) if e != d => return Err("only one square root extension is supported".into()),
            _ => self.disc = Some(d),
        }
        Ok(ExactScalar::quadratic(BigRational::zero(), BigRational::from_integer(k.into()), d))
    }
}

/// Upper bound on the number of terms of `p^e`.
fn power_size_bound(p: &MultiPoly, e: u32) -> f64 {
    let deg = p.total_degree().unwrap_or(0) as f64 * e as f64;
    let mut binom = 1.0;
    for k in 1..=p.nvars() {
        binom *= (deg + k as f64) / k as f64;
    }
    binom.min((p.num_terms() as f64).powf(e as f64))
}

/// `n = k²·d` with `d` squarefree.
fn split_square(n: i64) -> (i64, i64) {
    let sign = n.signum();
    let mut d = n.abs();
    let mut k = 1;
    let mut p = 2;
    while p * p <= d {
        while d % (p * p) == 0 {
            d /= p * p;
            k *= p;
        }
        p += 1;
    }
    (k, sign * d)
}

/// Parse a polynomial in the given variable names.
pub fn parse_poly(s: &str, names: &[&str]) -> std::result::Result<MultiPoly, String> {
    parse_poly_in(s, names, &mut None)
}

/// Parse keeping track of the one square-root extension shared by a file.
fn parse_poly_in(s: &str, names: &[&str], disc: &mut Option<i64>) -> std::result::Result<MultiPoly, String> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err("empty expression".into());
    }
    let mut p = Parser { toks, pos: 0, names, disc: *disc, depth: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err("trailing input".into());
    }
    *disc = p.disc;
    Ok(v)
}

/// A parsed curve file.
#[derive(Clone, Debug, PartialEq)]
pub enum CurveFile {
    Plane(PlaneCurve),
    Canonical(CanonicalCurve),
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_point(s: &str, line: usize, disc: &mut Option<i64>) -> Result<ProjPoint> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| err(line, "point must be written (p0 : p1 : p2)"))?;
    let parts: Vec<&str> = inner.split(':').collect();
    if parts.len() != 3 {
        return Err(err(line, "point must have three coordinates"));
    }
    parts
        .iter()
        .map(|p| {
            let v = parse_poly_in(p, &["$"], disc).map_err(|m| err(line, m))?;
            v.constant_value().ok_or_else(|| err(line, "coordinate is not a constant"))
        })
        .collect()
}

/// Parse a curve file (plane or canonical).
pub fn parse_curve_file(text: &str) -> Result<CurveFile> {
    let mut vars: Option<Vec<String>> = None;
    let mut f: Option<MultiPoly> = None;
    let mut model: Option<MultiPoly> = None;
    let mut nodes = Vec::new();
    let mut ambient: Option<usize> = None;
    let mut forms: Vec<(usize, MultiPoly)> = Vec::new();
    let mut quadrics: Vec<(usize, MultiPoly)> = Vec::new();
    let mut disc = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vars:") {
            let names: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
            let valid = |s: &String| {
                s.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                    && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    && s != "sqrt"
            };
            if names.len() != 3 || !names.iter().all(valid) {
                return Err(err(line, "vars must list three identifiers"));
            }
            if names[0] == names[1] || names[1] == names[2] || names[0] == names[2] {
                return Err(err(line, "duplicate variable names"));
            }
            vars = Some(names);
        } else if let Some(rest) = content.strip_prefix("node:") {
            nodes.push(parse_point(rest, line, &mut disc)?);
        } else if let Some(rest) = content.strip_prefix("ambient:") {
            let n: usize = rest.trim().parse().map_err(|_| err(line, "ambient dimension must be an integer"))?;
            if !(1..=64).contains(&n) {
                return Err(err(line, "ambient dimension out of range"));
            }
            ambient = Some(n);
        } else if let Some((lhs, rhs)) = content.split_once('=') {
            let lhs = lhs.trim();
            let plane_names = || -> Result<Vec<String>> {
                vars.clone().ok_or_else(|| err(line, "vars line must come first"))
            };
            if lhs == "f" || lhs == "model" {
                let names = plane_names()?;
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                let p = parse_poly_in(rhs, &refs, &mut disc).map_err(|m| err(line, m))?;
                if lhs == "f" {
                    f = Some(p);
                } else {
                    model = Some(p);
                }
            } else if let Some(i) = lhs.strip_prefix("form_") {
                let i: usize = i.parse().map_err(|_| err(line, "bad form index"))?;
                let names = plane_names()?;
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                forms.push((i, parse_poly_in(rhs, &refs, &mut disc).map_err(|m| err(line, m))?));
            } else if let Some(j) = lhs.strip_prefix("quadric_") {
                let j: usize = j.parse().map_err(|_| err(line, "bad quadric index"))?;
                let n = ambient.ok_or_else(|| err(line, "ambient line must precede quadrics"))?;
                let names: Vec<String> = (0..=n).map(|k| format!("x{k}")).collect();
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                let q = parse_poly_in(rhs, &refs, &mut disc).map_err(|m| err(line, m))?;
                if !q.is_zero() && (q.total_degree() != Some(2) || !q.is_homogeneous()) {
                    return Err(err(line, "quadric must be a homogeneous form of degree 2"));
                }
                quadrics.push((j, q));
            } else {
                return Err(err(line, format!("unknown key {lhs:?}")));
            }
        } else {
            return Err(err(line, "expected `key: value` or `name = polynomial`"));
        }
    }
    let last = text.lines().count().max(1);
    let plane = |f: MultiPoly, model: Option<MultiPoly>, nodes: Vec<ProjPoint>| -> Result<PlaneCurve> {
        if f.is_zero() || !f.is_homogeneous() {
            return Err(err(last, "f must be a nonzero homogeneous polynomial"));
        }
        let model = match model {
            None => None,
            Some(m) if !m.is_zero() && m.is_homogeneous() => Some(Box::new(PlaneCurve::new(m))),
            Some(_) => return Err(err(last, "model must be a nonzero homogeneous polynomial")),
        };
        Ok(PlaneCurve { f, nodes, model })
    };
    match ambient {
        None => {
            if !forms.is_empty() || !quadrics.is_empty() {
                return Err(err(last, "forms or quadrics need an ambient line"));
            }
            let f = f.ok_or_else(|| err(last, "missing f line"))?;
            Ok(CurveFile::Plane(plane(f, model, nodes)?))
        }
        Some(n) => {
            if !forms.is_empty() && !quadrics.is_empty() {
                return Err(err(last, "give either forms or quadrics, not both"));
            }
            if !quadrics.is_empty() {
                quadrics.sort_by_key(|(j, _)| *j);
                let qs = quadrics.into_iter().map(|(_, q)| q).collect();
                return Ok(CurveFile::Canonical(CanonicalCurve::from_quadrics(n, qs)));
            }
            forms.sort_by_key(|(i, _)| *i);
            if forms.len() != n + 1 {
                return Err(err(last, format!("expected {} forms, found {}", n + 1, forms.len())));
            }
            let degs: Vec<Option<u32>> = forms.iter().map(|(_, p)| p.total_degree()).collect();
            if forms.iter().any(|(_, p)| p.is_zero() || !p.is_homogeneous()) || degs.windows(2).any(|w| w[0] != w[1]) {
                return Err(err(last, "forms must be nonzero homogeneous of equal degree"));
            }
            let f = f.ok_or_else(|| err(last, "forms need a source curve line f = …"))?;
            let source = plane(f, model, nodes)?;
            let forms = forms.into_iter().map(|(_, p)| p).collect();
            Ok(CurveFile::Canonical(CanonicalCurve::from_forms(forms, source)))
        }
    }
}

const XYZ: [&str; 3] = ["x", "y", "z"];

fn write_plane_lines(c: &PlaneCurve, out: &mut String) {
    out.push_str("vars: x,y,z\n");
    out.push_str(&format!("f = {}\n", c.f.fmt_with(&XYZ)));
    if let Some(m) = &c.model {
        out.push_str(&format!("model = {}\n", m.f.fmt_with(&XYZ)));
    }
    for p in &c.nodes {
        out.push_str(&format!("node: {}\n", crate::curves::fmt_point(p)));
    }
}

pub fn write_plane_curve(c: &PlaneCurve) -> String {
    let mut out = String::new();
    write_plane_lines(c, &mut out);
    out
}

pub fn write_canonical_curve(k: &CanonicalCurve) -> String {
    let mut out = format!("ambient: {}\n", k.ambient_dim);
    match &k.model {
        crate::curves::CanonicalModel::Forms { forms, source } => {
            write_plane_lines(source, &mut out);
            for (i, f) in forms.iter().enumerate() {
                out.push_str(&format!("form_{i} = {}\n", f.fmt_with(&XYZ)));
            }
        }
        crate::curves::CanonicalModel::Quadrics(qs) => {
            let names: Vec<String> = (0..=k.ambient_dim).map(|i| format!("x{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            for (j, q) in qs.iter().enumerate() {
                out.push_str(&format!("quadric_{j} = {}\n", q.fmt_with(&refs)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_basic_polynomial() {
        let p = parse_poly("x^2 - 3*y + 1", &XYZ).unwrap();
        assert_eq!(p.to_string(), "x^2 - 3*y + 1");
    }

    #[test]
    fn parses_fractions_and_roots() {
        let p = parse_poly("1/2*x + sqrt(8)*y", &XYZ).unwrap();
        assert_eq!(p.coeff(&[1, 0, 0]), ExactScalar::from_ratio(1, 2));
        assert_eq!(p.coeff(&[0, 1, 0]), ExactScalar::sqrt_of(2).scale_int(&2.into()));
        assert_eq!(parse_poly("sqrt(9)", &XYZ).unwrap().constant_value(), Some(ExactScalar::from_i64(3)));
    }

    #[test]
    fn rejects_two_extensions() {
        assert!(parse_poly("sqrt(2) + sqrt(3)", &XYZ).is_err());
        assert!(parse_poly("sqrt(2) + sqrt(8)", &XYZ).is_ok());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "x +", "x ^ y", "(x", "x / y", "1/0", "w", "x^100000", "2 3", "x $ y"] {
            assert!(parse_poly(s, &XYZ).is_err(), "{s}");
        }
    }

    #[test]
    fn plane_file_roundtrip() {
        let text = "vars: x,y,z\nf = y^2*z - x^3 - x^2*z\nnode: (0 : 0 : 1)\n";
        let CurveFile::Plane(c) = parse_curve_file(text).unwrap() else { panic!() };
        assert_eq!(c.nodes.len(), 1);
        assert_eq!(parse_curve_file(&write_plane_curve(&c)).unwrap(), CurveFile::Plane(c));
    }

    #[test]
    fn custom_variable_names() {
        let text = "vars: s,t,u\nf = t^3*u - s^4 - u^4\n";
        let CurveFile::Plane(c) = parse_curve_file(text).unwrap() else { panic!() };
        assert_eq!(c.f.to_string(), "-x^4 + y^3*z - z^4");
    }

    #[test]
    fn canonical_quadrics_file() {
        let text = "ambient: 3\n# S(1,1)\nquadric_0 = x0*x3 - x1*x2\n";
        let CurveFile::Canonical(k) = parse_curve_file(text).unwrap() else { panic!() };
        assert_eq!(k.ambient_dim, 3);
        assert_eq!(parse_curve_file(&write_canonical_curve(&k)).unwrap(), CurveFile::Canonical(k));
    }

    #[test]
    fn canonical_forms_file() {
        let text = "ambient: 2\nvars: x,y,z\nf = x^4 + y^4 + z^4\nform_0 = x\nform_1 = y\nform_2 = z\n";
        let CurveFile::Canonical(k) = parse_curve_file(text).unwrap() else { panic!() };
        assert_eq!(k.forms().unwrap().len(), 3);
        assert_eq!(parse_curve_file(&write_canonical_curve(&k)).unwrap(), CurveFile::Canonical(k));
    }

    #[test]
    fn malformed_files() {
        for (text, line) in [
            ("f = x^3\n", 1),
            ("vars: x,y\nf = x\n", 1),
            ("vars: x,y,z\nf = x^3 + y\n", 2),
            ("vars: x,y,z\nf = x^3 + y^3 + z^3\nnode: (1 : 2)\n", 3),
            ("ambient: 2\nquadric_0 = x0^3\n", 2),
            ("vars: x,y,z\nbogus = 1\n", 2),
        ] {
            match parse_curve_file(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), -50i64..50, 1i64..6), 0..8).prop_map(|ts| {
            MultiPoly::from_terms(
                3,
                ts.into_iter().map(|((a, b, c), n, d)| (vec![a, b, c], ExactScalar::from_ratio(n, d))),
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(p in arb_poly()) {
            let back = parse_poly(&p.to_string(), &XYZ).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn parser_never_panics(s in "[xyz0-9+*/^() sqrt-]{0,40}") {
            let _ = parse_poly(&s, &XYZ);
        }
    }
}
