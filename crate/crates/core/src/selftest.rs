//! The acceptance suite, shared by the `selftest` command and the
//! `acceptance` test target. Each criterion yields one PASS/FAIL line.
//!
//! Checks here avoid the code path under test where a cheap independent
//! route exists: brackets are matrix commutators, fibres are checked on
//! sampled scroll points, and radical formulas are checked numerically.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{independent_subset, ExactMatrix, ExactScalar, MultiPoly};
use crate::curves::{
    canonical_system, generate_complete_intersection, generate_degy3, generate_hyperelliptic, generate_on_scroll,
    generate_resultant, random_invertible, CanonicalCurve, PlaneCurve, TrigonalWitness,
};
use crate::error::Result;
use crate::format::parse_poly;
use crate::liealg::{levi_subalgebra, lie_algebra_of_quadrics, split_semisimple_ideals, structure_constants, LieAlgebra};
use crate::pipeline::{
    analyze_quadrics, classify_canonical_detailed, maps_equivalent, verify_degree3, Case, ClassificationResult, ClassifyOptions,
    LieStage,
};
use crate::quadrics::{quadric_relations, QuadricSpace};
use crate::radical::{radical_parametrization, Cx};
use crate::scroll::{block_structure, model_scroll_point, model_scroll_quadrics, rep_h_weights, substitute_linear, AmbientRep};
use crate::sl2::{chevalley_basis, conic_point, ConicForm, ConicSolution, DEFAULT_SEARCH_BOUND};

/// Supported pairs with `m + n ≤ 6` for curves on scrolls.
pub const CURVE_SCROLL_PAIRS: [(u32, u32); 9] = [(1, 1), (2, 0), (2, 1), (3, 1), (2, 2), (4, 1), (3, 2), (3, 3), (4, 2)];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub per_class: usize,
    pub intersections: usize,
    pub conjugations: usize,
    pub chevalley_trials: usize,
    pub conic_trials: usize,
    pub levi_trials: usize,
    pub min_certified_maps: usize,
    pub radical_fixtures: usize,
    pub radical_parameters: usize,
    pub time_limit: Duration,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn full() -> Self {
        SuiteConfig {
            per_class: 25,
            intersections: 10,
            conjugations: 10,
            chevalley_trials: 100,
            conic_trials: 100,
            levi_trials: 50,
            min_certified_maps: 50,
            radical_fixtures: 20,
            radical_parameters: 10,
            time_limit: Duration::from_secs(60),
            seed: 2008,
        }
    }

    /// Reduced counts for a fast smoke run; thresholds scale with them.
    pub fn quick() -> Self {
        SuiteConfig {
            per_class: 3,
            intersections: 2,
            conjugations: 2,
            chevalley_trials: 10,
            conic_trials: 10,
            levi_trials: 5,
            min_certified_maps: 6,
            radical_fixtures: 3,
            radical_parameters: 10,
            time_limit: Duration::from_secs(60),
            seed: 2008,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {} ({:.1} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureClass {
    Degy3,
    Resultant,
    OnScroll,
    Hyperelliptic,
    Quintic,
    Intersection,
}

impl FixtureClass {
    fn expected(self) -> (Case, &'static [usize]) {
        match self {
            FixtureClass::Degy3 | FixtureClass::Resultant | FixtureClass::OnScroll => (Case::TrigonalScroll, &[3, 6]),
            FixtureClass::Hyperelliptic => (Case::Hyperelliptic, &[3]),
            FixtureClass::Quintic => (Case::PlaneQuintic, &[8]),
            FixtureClass::Intersection => (Case::CutOutByQuadrics, &[0]),
        }
    }
}

/// One classified fixture of the dispatch corpus.
pub struct Instance {
    pub class: FixtureClass,
    pub label: String,
    pub outcome: Result<(ClassificationResult, Option<LieStage>)>,
    pub witness: Option<TrigonalWitness>,
    /// Curve carrying the recovered map.
    pub map_curve: Option<PlaneCurve>,
    /// Scroll parameters known from the construction.
    pub known_params: Option<(usize, usize)>,
    pub elapsed: Duration,
}

impl Instance {
    pub fn result(&self) -> Option<&ClassificationResult> {
        self.outcome.as_ref().ok().map(|(r, _)| r)
    }

    pub fn stage(&self) -> Option<&LieStage> {
        self.outcome.as_ref().ok().and_then(|(_, s)| s.as_ref())
    }
}

fn run_instance(
    class: FixtureClass,
    label: String,
    input: impl FnOnce() -> Result<(CanonicalCurve, Option<TrigonalWitness>)>,
    known_params: Option<(usize, usize)>,
) -> Instance {
    let start = Instant::now();
    let mut witness = None;
    let mut map_curve = None;
    let outcome = input().and_then(|(k, w)| {
        witness = w;
        map_curve = k.source().cloned();
        classify_canonical_detailed(&k, &ClassifyOptions::default())
    });
    Instance { class, label, outcome, witness, map_curve, known_params, elapsed: start.elapsed() }
}

fn plane_input(c: Result<PlaneCurve>, w: Option<TrigonalWitness>) -> Result<(CanonicalCurve, Option<TrigonalWitness>)> {
    let c = c?;
    Ok((canonical_system(&c)?, w))
}

pub const SMOOTH_QUINTIC: &str = "x^5 + y^5 + z^5 + x^2*y^2*z";
pub const SMOOTH_QUARTIC: &str = "x^4 + y^4 + x^2*z^2 + y*z^3";

pub fn plane(s: &str) -> PlaneCurve {
    PlaneCurve::new(parse_poly(s, &["x", "y", "z"]).expect("fixture parses"))
}

/// The classification corpus of the dispatch criterion.
pub fn build_corpus(cfg: &SuiteConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    for i in 0..cfg.per_class {
        let d = 3 + (i % 3) as u32;
        let seed = cfg.seed + i as u64;
        out.push(run_instance(
            FixtureClass::Degy3,
            format!("degy3 d={d} seed={seed}"),
            || {
                let (c, w) = generate_degy3(d, 8, seed)?;
                plane_input(Ok(c), Some(w))
            },
            None,
        ));
    }
    for i in 0..cfg.per_class {
        let seed = cfg.seed + i as u64;
        out.push(run_instance(
            FixtureClass::Resultant,
            format!("resultant deg=4 height=2 seed={seed}"),
            || {
                let (c, w) = generate_resultant(4, 2, seed)?;
                plane_input(Ok(c), Some(w))
            },
            None,
        ));
    }
    for i in 0..cfg.per_class {
        let (m, n) = CURVE_SCROLL_PAIRS[i % CURVE_SCROLL_PAIRS.len()];
        let seed = cfg.seed + i as u64;
        out.push(run_instance(
            FixtureClass::OnScroll,
            format!("on_scroll ({m},{n}) seed={seed}"),
            || generate_on_scroll(m, n, 3, seed).map(|(k, w)| (k, Some(w))),
            Some((m as usize, n as usize)),
        ));
    }
    for i in 0..cfg.per_class {
        let deg = if i % 2 == 0 { 7 } else { 9 };
        let seed = cfg.seed + i as u64;
        out.push(run_instance(
            FixtureClass::Hyperelliptic,
            format!("y^2 = P_{deg}(x) seed={seed}"),
            || plane_input(generate_hyperelliptic(deg, 5, seed), None),
            None,
        ));
    }
    out.push(run_instance(FixtureClass::Quintic, SMOOTH_QUINTIC.to_string(), || plane_input(Ok(plane(SMOOTH_QUINTIC)), None), None));
    for i in 0..cfg.intersections {
        let seed = cfg.seed + i as u64;
        out.push(run_instance(
            FixtureClass::Intersection,
            format!("(2,2,2) in P^4 seed={seed}"),
            || generate_complete_intersection(3, seed).map(|k| (k, None)),
            None,
        ));
    }
    out
}

fn report(id: usize, title: &'static str, start: Instant, failures: &[String], summary: String) -> CriterionReport {
    let detail = if failures.is_empty() {
        summary
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        format!("{summary}; {} failure(s): {}", failures.len(), shown.join("; "))
    };
    CriterionReport { id, title, passed: failures.is_empty(), detail, elapsed: start.elapsed() }
}

pub fn criterion_dispatch(corpus: &[Instance], cfg: &SuiteConfig) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for inst in corpus {
        let (case, dims) = inst.class.expected();
        match &inst.outcome {
            Err(e) => failures.push(format!("{}: {e}", inst.label)),
            Ok((r, stage)) => {
                if r.case != case || !r.lsa_dim.is_some_and(|d| dims.contains(&d)) {
                    failures.push(format!("{}: got {} lsa {:?}", inst.label, r.case, r.lsa_dim));
                }
                if r.case == Case::Hyperelliptic {
                    let single = stage.as_ref().and_then(|s| s.rep.as_ref()).and_then(|rep| block_structure(rep).ok());
                    if single.map(|b| b.block_dims.len()) != Some(1) {
                        failures.push(format!("{}: hyperelliptic without a single block", inst.label));
                    }
                }
                if r.genus <= 8 {
                    slowest = slowest.max(inst.elapsed);
                    if inst.elapsed > cfg.time_limit {
                        failures.push(format!("{}: {:.1} s", inst.label, inst.elapsed.as_secs_f64()));
                    }
                }
            }
        }
    }
    let summary = format!("{} fixtures, slowest {:.1} s", corpus.len(), slowest.as_secs_f64());
    report(1, "classification dispatch", start, &failures, summary)
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn quadrics(n: usize, qs: &[&str]) -> QuadricSpace {
    let owned = names(n);
    let refs: Vec<&str> = owned.iter().map(String::as_str).collect();
    QuadricSpace { ambient_dim: n - 1, basis: qs.iter().map(|q| parse_poly(q, &refs).expect("fixture parses")).collect() }
}

pub fn twisted_cubic_quadrics() -> QuadricSpace {
    quadrics(4, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"])
}

/// 2×2 minors of the symmetric matrix `[[x0,x1,x2],[x1,x3,x4],[x2,x4,x5]]`.
pub fn veronese_quadrics() -> QuadricSpace {
    quadrics(
        6,
        &["x0*x3 - x1^2", "x0*x4 - x1*x2", "x0*x5 - x2^2", "x1*x4 - x2*x3", "x1*x5 - x2*x4", "x3*x5 - x4^2"],
    )
}

pub fn criterion_model_dims() -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let cases: [(&str, QuadricSpace, usize); 3] =
        [("S_(1,1)", model_scroll_quadrics(1, 1), 6), ("twisted cubic", twisted_cubic_quadrics(), 3), ("Veronese", veronese_quadrics(), 8)];
    let mut got = Vec::new();
    for (name, q, want) in cases {
        match lie_algebra_of_quadrics(&q) {
            Err(e) => failures.push(format!("{name}: {e}")),
            Ok(l) => {
                got.push(l.dim());
                if l.dim() != want {
                    failures.push(format!("{name}: dim {} != {want}", l.dim()));
                }
                // sl2+sl2, sl2, sl3: semisimple, and S_(1,1) splits into two ideals
                if !l.is_semisimple() {
                    failures.push(format!("{name}: not semisimple"));
                }
                if want == 6 && split_semisimple_ideals(&l).map(|s| (s.ideals.0.dim(), s.ideals.1.dim())).ok() != Some((3, 3)) {
                    failures.push(format!("{name}: no splitting into two 3-dimensional ideals"));
                }
            }
        }
    }
    report(2, "Lie algebra dimensions of models", start, &failures, format!("dims {got:?}"))
}

/// All `m ≥ n ≥ 0` with `2 ≤ m + n ≤ 6`.
pub fn model_scroll_pairs() -> Vec<(usize, usize)> {
    (2..=6).flat_map(|s| (0..=s / 2).rev().map(move |n| (s - n, n))).collect()
}

fn cross_zero(a: &(ExactScalar, ExactScalar), b: &(ExactScalar, ExactScalar)) -> bool {
    (&a.0 * &b.1 - &a.1 * &b.0).is_zero()
}

/// Fibres of the structure map along model lines: three points where the
/// map is defined span a line, the value is constant on it, and distinct
/// lines give distinct values. The map is a ratio of linear forms, so a
/// fibre can lie in its base locus or meet it in one point; such points
/// are skipped.
fn fibre_check(stage: &LieStage, m: usize, n: usize, t: &ExactMatrix, swap: bool) -> std::result::Result<(), String> {
    let sm = stage.structure_map.as_ref().ok_or("no structure map")?;
    let mut values: Vec<(ExactScalar, ExactScalar)> = Vec::new();
    for fi in [-2i64, 0, 1, 3, 5, -1, 2, 4, 7] {
        if values.len() == 5 {
            break;
        }
        let mut pts = Vec::new();
        let mut vals: Vec<(ExactScalar, ExactScalar)> = Vec::new();
        for k in [-1i64, 2, 7, 11, -5] {
            if pts.len() == 3 {
                break;
            }
            let (s, u) = if swap { (k, fi) } else { (fi, k) };
            let p = t.mul_vec(&model_scroll_point(m, n, &ExactScalar::from_i64(s), &ExactScalar::from_i64(u)));
            let v = sm.eval(&p);
            if !(v.0.is_zero() && v.1.is_zero()) {
                pts.push(p);
                vals.push(v);
            }
        }
        if pts.len() < 3 {
            continue;
        }
        if ExactMatrix::from_rows(pts).rank() != 2 {
            return Err(format!("fibre s={fi} not of rank 2"));
        }
        if !vals.windows(2).all(|w| cross_zero(&w[0], &w[1])) {
            return Err(format!("map not constant on fibre s={fi}"));
        }
        if values.iter().any(|v| cross_zero(v, &vals[0])) {
            return Err(format!("fibre s={fi} repeats a value"));
        }
        values.push(vals[0].clone());
    }
    if values.len() < 5 {
        return Err(format!("only {} fibres outside the base locus", values.len()));
    }
    Ok(())
}

/// Stages of the conjugated model scrolls, with their known parameters.
pub struct ModelRun {
    pub params: (usize, usize),
    pub stage: Result<LieStage>,
    pub conjugation: ExactMatrix,
}

pub fn model_runs(cfg: &SuiteConfig) -> Vec<ModelRun> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for (m, n) in model_scroll_pairs() {
        let q = model_scroll_quadrics(m, n);
        for _ in 0..cfg.conjugations {
            let t = random_invertible(&mut rng, m + n + 2, 3);
            let tinv = t.inverse().expect("invertible");
            let qt = QuadricSpace { ambient_dim: q.ambient_dim, basis: q.basis.iter().map(|f| substitute_linear(f, &tinv)).collect() };
            out.push(ModelRun { params: (m, n), stage: analyze_quadrics(&qt, &ClassifyOptions::default()), conjugation: t });
        }
    }
    out
}

pub fn criterion_fibres(runs: &[ModelRun]) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    for run in runs {
        let (m, n) = run.params;
        let res = match &run.stage {
            Err(e) => Err(e.to_string()),
            Ok(stage) => {
                let first = fibre_check(stage, m, n, &run.conjugation, false);
                // S_(1,1) has two rulings, either is a structure map
                if first.is_err() && (m, n) == (1, 1) {
                    fibre_check(stage, m, n, &run.conjugation, true)
                } else {
                    first
                }
            }
        };
        if let Err(e) = res {
            failures.push(format!("S_({m},{n}): {e}"));
        }
    }
    report(3, "structure-map fibre property", start, &failures, format!("{} conjugated model scrolls", runs.len()))
}

fn expected_weights(m: usize, n: usize) -> Vec<i64> {
    let mut w: Vec<i64> = [m, n].iter().flat_map(|&k| (0..=k as i64).map(move |i| k as i64 - 2 * i)).collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

fn weight_check(rep: Option<&AmbientRep>, params: Option<(usize, usize)>, label: &str, failures: &mut Vec<String>) {
    let (Some(rep), Some((m, n))) = (rep, params) else {
        failures.push(format!("{label}: no representation"));
        return;
    };
    match rep_h_weights(rep) {
        Ok(w) if w == expected_weights(m, n) => {}
        Ok(w) => failures.push(format!("{label}: weights {w:?}")),
        Err(e) => failures.push(format!("{label}: {e}")),
    }
}

pub fn criterion_weights(corpus: &[Instance], runs: &[ModelRun]) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for inst in corpus.iter().filter(|i| i.result().is_some_and(|r| r.case == Case::TrigonalScroll)) {
        count += 1;
        let params = inst.known_params.or(inst.result().and_then(|r| r.scroll_params));
        if inst.known_params.is_some() && inst.result().and_then(|r| r.scroll_params) != inst.known_params {
            failures.push(format!("{}: parameters {:?}", inst.label, inst.result().and_then(|r| r.scroll_params)));
        }
        weight_check(inst.stage().and_then(|s| s.rep.as_ref()), params, &inst.label, &mut failures);
    }
    for run in runs {
        count += 1;
        let label = format!("model S_({},{})", run.params.0, run.params.1);
        match &run.stage {
            Ok(stage) => weight_check(stage.rep.as_ref(), Some(run.params), &label, &mut failures),
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }
    report(4, "representation shape", start, &failures, format!("{count} scroll fixtures"))
}

/// `Sym^k` of the standard representation: `H = diag(k − 2i)`.
pub fn sym_rep(k: usize) -> [ExactMatrix; 3] {
    let d = k + 1;
    let mut h = ExactMatrix::zeros(d, d);
    let mut x = ExactMatrix::zeros(d, d);
    let mut y = ExactMatrix::zeros(d, d);
    for i in 0..d {
        h[(i, i)] = ExactScalar::from_i64(k as i64 - 2 * i as i64);
        if i > 0 {
            x[(i - 1, i)] = ExactScalar::from_i64(i as i64);
            y[(i, i - 1)] = ExactScalar::from_i64((k - i + 1) as i64);
        }
    }
    [h, x, y]
}

fn mix(rng: &mut ChaCha8Rng, basis: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let m = random_invertible(rng, basis.len(), 2);
    (0..basis.len())
        .map(|i| {
            let first = basis[0].scale(&m[(i, 0)]);
            (1..basis.len()).fold(first, |acc, j| acc.add(&basis[j].scale(&m[(i, j)])))
        })
        .collect()
}

fn conjugate_all(basis: &[ExactMatrix], t: &ExactMatrix) -> Vec<ExactMatrix> {
    let tinv = t.inverse().expect("invertible");
    basis.iter().map(|b| t.mul(b).mul(&tinv)).collect()
}

fn commutator_checks(h: &ExactMatrix, x: &ExactMatrix, y: &ExactMatrix) -> bool {
    let two = ExactScalar::from_i64(2);
    let comm = |a: &ExactMatrix, b: &ExactMatrix| a.mul(b).sub(&b.mul(a));
    comm(h, x) == x.scale(&two) && comm(h, y) == y.scale(&ExactScalar::from_i64(-2)) && comm(x, y) == *h
}

/// A form `vᵀGv` with integer Gram entries in `[−height, height]`, nonzero
/// determinant, and a hidden isotropic vector.
pub fn random_isotropic_form(rng: &mut ChaCha8Rng, height: i64) -> ExactMatrix {
    loop {
        let v = [if rng.gen::<bool>() { 1 } else { -1 }, rng.gen_range(-4i64..=4), rng.gen_range(-4i64..=4)];
        let mut g = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in i..3 {
                let c = rng.gen_range(-height..=height);
                g[i][j] = c;
                g[j][i] = c;
            }
        }
        let q = |g: &[[i64; 3]; 3]| (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| g[i][j] * v[i] * v[j]).sum::<i64>();
        // v₀² = 1, so lowering G₀₀ by Q(v) makes v isotropic
        g[0][0] -= q(&g);
        if g[0][0].abs() > height {
            continue;
        }
        let m = ExactMatrix::from_rows(g.iter().map(|r| r.iter().map(|&c| ExactScalar::from_i64(c)).collect()).collect());
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

pub fn criterion_chevalley(cfg: &SuiteConfig) -> CriterionReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut failures = Vec::new();
    for trial in 0..cfg.chevalley_trials {
        let k = 1 + trial % 3;
        let t = random_invertible(&mut rng, k + 1, 3);
        let basis = mix(&mut rng, &conjugate_all(&sym_rep(k), &t));
        let ok = structure_constants(basis).and_then(|l| chevalley_basis(&l)).map(|cb| commutator_checks(&cb.h, &cb.x, &cb.y));
        match ok {
            Ok(true) => {}
            Ok(false) => failures.push(format!("sl2 trial {trial}: brackets fail")),
            Err(e) => failures.push(format!("sl2 trial {trial}: {e}")),
        }
    }
    for trial in 0..cfg.conic_trials {
        let g = random_isotropic_form(&mut rng, 30);
        let form = ConicForm::new(g);
        match conic_point(&form, DEFAULT_SEARCH_BOUND) {
            Ok(ConicSolution::Point(p)) => {
                let v: Vec<ExactScalar> = p.iter().cloned().map(ExactScalar::from_bigint).collect();
                if v.iter().all(ExactScalar::is_zero) || !form.eval(&v).is_zero() {
                    failures.push(format!("conic trial {trial}: bad point"));
                }
            }
            Ok(ConicSolution::Extension { .. }) => failures.push(format!("conic trial {trial}: isotropic form reported anisotropic")),
            Err(e) => failures.push(format!("conic trial {trial}: {e}")),
        }
    }
    let summary = format!("{} conjugated sl2, {} isotropic conics", cfg.chevalley_trials, cfg.conic_trials);
    report(5, "Chevalley property suite", start, &failures, summary)
}

fn span_rank(ms: &[ExactMatrix]) -> usize {
    if ms.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(ms.iter().map(ExactMatrix::flatten).collect()).rank()
}

fn comm(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.mul(b).sub(&b.mul(a))
}

/// The four decomposition invariants, checked on matrices.
pub fn levi_invariants(l: &LieAlgebra) -> std::result::Result<(usize, usize), String> {
    let dec = levi_subalgebra(l).map_err(|e| e.to_string())?;
    let (levi, rad) = (&dec.levi.basis, &dec.radical);
    let all: Vec<ExactMatrix> = levi.iter().chain(rad).cloned().collect();
    if all.len() != l.dim() || span_rank(&all) != l.dim() {
        return Err("levi and radical do not form a direct sum equal to L".into());
    }
    let r = span_rank(rad);
    for a in &l.basis {
        for b in rad {
            let mut ext = rad.clone();
            ext.push(comm(a, b));
            if span_rank(&ext) != r {
                return Err("radical is not an ideal".into());
            }
        }
    }
    let mut d = rad.clone();
    let mut steps = 0;
    while span_rank(&d) > 0 {
        if steps >= rad.len() {
            return Err("radical is not solvable".into());
        }
        let next: Vec<ExactMatrix> = d.iter().flat_map(|a| d.iter().map(move |b| comm(a, b))).collect();
        let idx = independent_subset(&next.iter().map(ExactMatrix::flatten).collect::<Vec<_>>());
        d = idx.into_iter().map(|i| next[i].clone()).collect();
        steps += 1;
    }
    if !levi.is_empty() {
        let s = structure_constants(levi.clone()).map_err(|e| e.to_string())?;
        if s.killing.determinant().is_zero() {
            return Err("levi part has a degenerate Killing form".into());
        }
    }
    Ok((levi.len(), rad.len()))
}

/// `sl₂ ⋉ V` for `V` a sum of `Sym^k` modules, as block matrices
/// `[[ρ(A), v], [0, 0]]`, with mixed basis and conjugated.
pub fn semidirect_sum(rng: &mut ChaCha8Rng) -> (Vec<ExactMatrix>, usize) {
    // the first module is nontrivial so that sl₂ acts faithfully
    let mut parts = vec![rng.gen_range(1..=2)];
    parts.extend((0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..=2usize)));
    let dv: usize = parts.iter().map(|k| k + 1).sum();
    let size = dv + 1;
    let mut gens = vec![ExactMatrix::zeros(size, size), ExactMatrix::zeros(size, size), ExactMatrix::zeros(size, size)];
    let mut off = 0;
    for &k in &parts {
        for (g, r) in gens.iter_mut().zip(sym_rep(k)) {
            for i in 0..=k {
                for j in 0..=k {
                    g[(off + i, off + j)] = r[(i, j)].clone();
                }
            }
        }
        off += k + 1;
    }
    for i in 0..dv {
        let mut e = ExactMatrix::zeros(size, size);
        e[(i, dv)] = ExactScalar::one();
        gens.push(e);
    }
    let t = random_invertible(rng, size, 2);
    (mix(rng, &conjugate_all(&gens, &t)), dv)
}

pub fn criterion_levi(corpus: &[Instance], runs: &[ModelRun], cfg: &SuiteConfig) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut algebras: Vec<(String, &LieAlgebra)> = Vec::new();
    for inst in corpus {
        if let Some(s) = inst.stage() {
            algebras.push((inst.label.clone(), &s.algebra));
        }
    }
    for run in runs {
        if let Ok(s) = &run.stage {
            algebras.push((format!("model S_({},{})", run.params.0, run.params.1), &s.algebra));
        }
    }
    let computed = algebras.len();
    for (label, l) in algebras {
        if let Err(e) = levi_invariants(l) {
            failures.push(format!("{label}: {e}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for trial in 0..cfg.levi_trials {
        let (basis, dv) = semidirect_sum(&mut rng);
        match structure_constants(basis).map_err(|e| e.to_string()).and_then(|l| levi_invariants(&l)) {
            Ok((3, r)) if r == dv => {}
            Ok(dims) => failures.push(format!("semidirect trial {trial}: dims {dims:?}, radical {dv}")),
            Err(e) => failures.push(format!("semidirect trial {trial}: {e}")),
        }
    }
    let summary = format!("{computed} computed L(X), {} semidirect sums", cfg.levi_trials);
    report(6, "Levi decomposition suite", start, &failures, summary)
}

pub fn criterion_degree(corpus: &[Instance], cfg: &SuiteConfig) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut certified = 0;
    for inst in corpus.iter().filter(|i| i.witness.is_some()) {
        let Some(r) = inst.result() else { continue };
        let (Some(map), Some(curve), Some(w)) = (&r.trigonal_map, &inst.map_curve, &inst.witness) else {
            failures.push(format!("{}: no recovered map", inst.label));
            continue;
        };
        match verify_degree3(curve, map) {
            Ok(3) => {}
            Ok(d) => {
                failures.push(format!("{}: degree {d}", inst.label));
                continue;
            }
            Err(e) => {
                failures.push(format!("{}: {e}", inst.label));
                continue;
            }
        }
        // S_(1,1) carries two g^1_3; the bidegree-(3,3) witnesses have (y : z) as the other ruling.
        let other = (MultiPoly::var(3, 1), MultiPoly::var(3, 2));
        let matches = maps_equivalent(&w.curve, &w.map, map).and_then(|same| {
            if same || r.scroll_params != Some((1, 1)) {
                return Ok(same);
            }
            Ok(verify_degree3(&w.curve, &other)? == 3 && maps_equivalent(&w.curve, &other, map)?)
        });
        match matches {
            Ok(true) => certified += 1,
            Ok(false) => failures.push(format!("{}: fibration differs from the witness", inst.label)),
            Err(e) => failures.push(format!("{}: {e}", inst.label)),
        }
    }
    if certified < cfg.min_certified_maps {
        failures.push(format!("only {certified} certified maps"));
    }
    report(7, "degree-3 certification", start, &failures, format!("{certified} maps of degree 3 matching the witness fibration"))
}

pub fn criterion_radical(corpus: &[Instance], cfg: &SuiteConfig) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut fixtures: Vec<&Instance> = Vec::new();
    for class in [FixtureClass::Degy3, FixtureClass::Resultant, FixtureClass::OnScroll] {
        let share = cfg.radical_fixtures.div_ceil(3);
        fixtures.extend(corpus.iter().filter(|i| i.class == class && i.result().is_some_and(|r| r.trigonal_map.is_some())).take(share));
    }
    fixtures.truncate(cfg.radical_fixtures);
    let mut worst = 0f64;
    for inst in &fixtures {
        let (curve, map) = (inst.map_curve.as_ref().unwrap(), inst.result().unwrap().trigonal_map.as_ref().unwrap());
        let rp = match radical_parametrization(curve, map) {
            Ok(rp) => rp,
            Err(e) => {
                failures.push(format!("{}: {e}", inst.label));
                continue;
            }
        };
        if rp.x.max_root_index() > 3 || rp.y.max_root_index() > 3 {
            failures.push(format!("{}: root index above 3", inst.label));
        }
        let f = curve.f.substitute_scalar(2, &ExactScalar::one());
        let mut found = 0;
        for _ in 0..50 * cfg.radical_parameters {
            if found == cfg.radical_parameters {
                break;
            }
            let t = Cx::from_ratio(&rng.gen_range(-400i64..=400).into(), &rng.gen_range(1i64..=60).into());
            if let Some(r) = rp.residual(&f, &t) {
                found += 1;
                worst = worst.max(r);
                if r >= 1e-20 {
                    failures.push(format!("{}: residual {r:.2e}", inst.label));
                }
            }
        }
        if found < cfg.radical_parameters {
            failures.push(format!("{}: only {found} non-branch parameters", inst.label));
        }
    }
    if fixtures.len() < cfg.radical_fixtures {
        failures.push(format!("only {} fixtures available", fixtures.len()));
    }
    let summary = format!("{} fixtures, worst residual {worst:.2e}", fixtures.len());
    report(8, "radical parametrization", start, &failures, summary)
}

pub fn criterion_quadric_counts(cfg: &SuiteConfig) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    let fixtures: Vec<(String, Result<CanonicalCurve>)> = vec![
        ("quartic".into(), canonical_system(&plane(SMOOTH_QUARTIC))),
        ("degy3 d=3".into(), generate_degy3(3, 8, cfg.seed).and_then(|(c, _)| canonical_system(&c))),
        ("resultant".into(), generate_resultant(4, 2, cfg.seed).and_then(|(c, _)| canonical_system(&c))),
        ("on_scroll (2,1)".into(), generate_on_scroll(2, 1, 3, cfg.seed).map(|(k, _)| k)),
        ("(2,2,2) in P^4".into(), generate_complete_intersection(3, cfg.seed)),
    ];
    for (label, k) in fixtures {
        match k.and_then(|k| quadric_relations(&k).map(|q| (k.genus(), q.dim()))) {
            Ok((g, d)) => {
                let want = match g {
                    3 => 0,
                    4 => 1,
                    5 => 3,
                    _ => usize::MAX,
                };
                rows.push(format!("g={g}:{d}"));
                if d != want {
                    failures.push(format!("{label}: genus {g} with {d} quadrics"));
                }
            }
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }
    report(9, "quadric counts by genus", start, &failures, rows.join(" "))
}

/// Every criterion, in order.
pub fn run_suite(cfg: &SuiteConfig, mut progress: impl FnMut(&CriterionReport)) -> Vec<CriterionReport> {
    let mut out = Vec::new();
    let mut emit = |r: CriterionReport, out: &mut Vec<CriterionReport>| {
        progress(&r);
        out.push(r);
    };
    let corpus = build_corpus(cfg);
    emit(criterion_dispatch(&corpus, cfg), &mut out);
    emit(criterion_model_dims(), &mut out);
    let runs = model_runs(cfg);
    emit(criterion_fibres(&runs), &mut out);
    emit(criterion_weights(&corpus, &runs), &mut out);
    emit(criterion_chevalley(cfg), &mut out);
    emit(criterion_levi(&corpus, &runs, cfg), &mut out);
    emit(criterion_degree(&corpus, cfg), &mut out);
    emit(criterion_radical(&corpus, cfg), &mut out);
    emit(criterion_quadric_counts(cfg), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_cover_small_scrolls() {
        let p = model_scroll_pairs();
        assert_eq!(p.len(), 14);
        assert!(p.contains(&(1, 1)) && p.contains(&(6, 0)) && p.contains(&(3, 3)));
        assert!(p.iter().all(|&(m, n)| m >= n && (2..=6).contains(&(m + n))));
    }

    #[test]
    fn sym_rep_is_sl2() {
        for k in 0..4 {
            let [h, x, y] = sym_rep(k);
            assert!(commutator_checks(&h, &x, &y));
        }
    }

    #[test]
    fn isotropic_forms_are_isotropic_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let g = random_isotropic_form(&mut rng, 30);
            assert!(g.entries().iter().all(|c| c.to_integer().is_some_and(|n| n.magnitude() <= &30u32.into())));
            assert!(!g.determinant().is_zero());
        }
    }

    #[test]
    fn weights_formula() {
        assert_eq!(expected_weights(2, 1), vec![2, 1, 0, -1, -2]);
        assert_eq!(expected_weights(1, 1), vec![1, 1, -1, -1]);
    }

    #[test]
    fn quick_model_criteria() {
        let cfg = SuiteConfig { conjugations: 1, ..SuiteConfig::quick() };
        assert!(criterion_model_dims().passed);
        let runs = model_runs(&cfg);
        let r = criterion_fibres(&runs);
        assert!(r.passed, "{r}");
        let r = criterion_weights(&[], &runs);
        assert!(r.passed, "{r}");
    }
}
