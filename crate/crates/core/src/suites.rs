//! Named verification suites and the deterministic report they produce.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dyncalc::{self, order_of, Expect, IdentityReport};
use crate::elements::{self, Recipe};
use crate::error::{Error, Result};
use crate::qhyper;
use crate::qscalar::{Agreement, Anchor};

/// Suites run by `all`, in report order.
pub const SUITES: &[&str] =
    &["algebra", "qexp", "ybe", "twist", "products", "coboundary", "vertex-irf", "prop1", "prop2", "lemma", "weyl", "grouplike", "hyper"];

/// Suites that must be named explicitly. `printed` re-checks formulas
/// exactly as typeset where they differ from the validated readings.
pub const EXTRA_SUITES: &[&str] = &["printed"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suites: Vec<String>,
    /// Largest single module `V_p`.
    pub max_dim: u32,
    /// Largest leg of a pair; also capped by `max_dim`.
    pub pair_dim: u32,
    /// Largest leg of a triple; also capped by `max_dim`.
    pub triple_dim: u32,
    /// Largest truncation `K` of infinite products.
    pub trunc: u32,
    /// Expansion cap `L` in powers of `y`.
    pub expand_order: u32,
    pub format: Format,
    pub out: Option<String>,
    /// Keep measured runtimes; otherwise they are zeroed so reports are byte-stable.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: vec!["all".into()],
            max_dim: 4,
            pair_dim: 4,
            triple_dim: 3,
            trunc: 8,
            expand_order: 40,
            format: Format::Json,
            out: None,
            timing: false,
        }
    }
}

impl SuiteConfig {
    /// Rejects unknown suites and out-of-range values before any computation.
    pub fn validate(&self) -> Result<()> {
        if self.expand_order < 1 {
            return Err(Error::Invalid("expansion order must be at least 1".into()));
        }
        if self.suites.is_empty() {
            return Err(Error::Invalid("no suite selected".into()));
        }
        for s in &self.suites {
            if s != "all" && !SUITES.contains(&s.as_str()) && !EXTRA_SUITES.contains(&s.as_str()) {
                return Err(Error::UnknownSuite(s.clone()));
            }
        }
        Ok(())
    }

    /// Selected suites in canonical order, without duplicates.
    pub fn selected(&self) -> Vec<&'static str> {
        let all = self.suites.iter().any(|s| s == "all");
        SUITES
            .iter()
            .chain(EXTRA_SUITES)
            .copied()
            .filter(|name| self.suites.iter().any(|s| s == name) || (all && SUITES.contains(name)))
            .collect()
    }

    fn pair_max(&self) -> u32 {
        self.pair_dim.min(self.max_dim)
    }

    fn triple_max(&self) -> u32 {
        self.triple_dim.min(self.max_dim)
    }

    /// Powers of two up to `K`, starting at `from`.
    fn ladder(&self, from: u32) -> Vec<u32> {
        std::iter::successors(Some(from.max(1)), |k| Some(k * 2)).take_while(|&k| k <= self.trunc).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub results: Vec<IdentityReport>,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// `0` when every case passes, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        exit_code(&self.results)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per case followed by the summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let legs: Vec<String> = r.legs.iter().map(|p| p.to_string()).collect();
            let mut line = format!("{:<11} {:<44} [{}]", r.suite, r.identity, legs.join(","));
            if let Some(k) = r.truncation {
                line.push_str(&format!(" K={k}"));
            }
            line.push_str(&format!(" {}", serde_json::to_value(r.verdict).expect("verdict serializes").as_str().unwrap_or("")));
            if let Some(o) = r.order {
                line.push_str(&format!(" order={o}"));
            }
            if self.config.timing {
                line.push_str(&format!(" {}ms", r.runtime_ms));
            }
            if let Some(w) = &r.witness {
                line.push_str(&format!(" at ({}, {}): {} vs {}", w.row, w.col, w.lhs, w.rhs));
            }
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!("pass {} fail {}\n", self.summary.pass, self.summary.fail));
        out
    }
}

pub fn exit_code(results: &[IdentityReport]) -> i32 {
    if results.iter().all(IdentityReport::passed) {
        0
    } else {
        1
    }
}

type Case = Box<dyn Fn() -> Vec<IdentityReport> + Send + Sync>;

fn case(f: impl Fn() -> Vec<IdentityReport> + Send + Sync + 'static) -> Case {
    Box::new(f)
}

fn one(f: impl Fn() -> IdentityReport + Send + Sync + 'static) -> Case {
    Box::new(move || vec![f()])
}

fn pairs(max: u32) -> Vec<[u32; 2]> {
    (0..=max).flat_map(|a| (0..=max).map(move |b| [a, b])).collect()
}

fn triples(max: u32) -> Vec<[u32; 3]> {
    (0..=max).flat_map(|a| (0..=max).flat_map(move |b| (0..=max).map(move |c| [a, b, c]))).collect()
}

/// Legs `[1,1]` and `[2,2]` used by the convergence ladders, within `max`.
fn ladder_legs(max: u32) -> Vec<[u32; 2]> {
    [[1, 1], [2, 2]].into_iter().filter(|l| l[0] <= max).collect()
}

/// Runs `step` over `ks`, failing any step whose agreement does not beat the
/// previous one (`strict`) or at least match it.
fn ladder(ks: &[u32], strict: bool, step: impl Fn(u32) -> IdentityReport) -> Vec<IdentityReport> {
    let mut prev: Option<Agreement> = None;
    ks.iter()
        .map(|&k| {
            let rep = step(k);
            if !rep.passed() {
                return rep;
            }
            let cur = order_of(&rep);
            let ok = match prev {
                None => true,
                Some(p) if cur == Agreement::Exact => p == Agreement::Exact || cur.rank() > p.rank(),
                Some(p) if strict => cur.rank() > p.rank(),
                Some(p) => cur.rank() >= p.rank(),
            };
            prev = Some(cur);
            rep.holds(ok, || format!("agreement {cur} does not improve on the previous truncation"))
        })
        .collect()
}

fn order(anchor: Anchor, cap: u32, min_order: u32) -> Expect {
    Expect::Order { anchor, cap, min_order }
}

fn suite_cases(name: &'static str, c: &SuiteConfig) -> Vec<Case> {
    let (p1, p2, p3, cap) = (c.max_dim, c.pair_max(), c.triple_max(), c.expand_order);
    let mut out: Vec<Case> = Vec::new();
    match name {
        "algebra" => {
            for p in 0..=p1 {
                out.push(case(move || dyncalc::check_algebra(name, &[p], &[0])));
            }
            for l in pairs(p2) {
                out.push(case(move || dyncalc::check_algebra(name, &l, &[0, 1])));
            }
            for l in triples(p3.min(2)) {
                out.push(one(move || dyncalc::check_coassociativity(name, l)));
            }
        }
        "qexp" => {
            for p in 0..=p3 {
                out.push(case(move || dyncalc::check_qexp(name, p)));
            }
        }
        "ybe" => {
            for l in triples(p3) {
                out.push(one(move || dyncalc::check_ybe(name, &elements::rmat(), l)));
            }
        }
        "twist" => {
            for l in pairs(p2) {
                out.push(one(move || dyncalc::check_zero_weight(name, &elements::f_series(), &l, None)));
            }
            for l in triples(p3) {
                out.push(one(move || dyncalc::check_cocycle(name, &elements::f_series(), l, None, Expect::Exact)));
            }
            for l in triples(p3) {
                out.push(one(move || dyncalc::check_dybe(name, &elements::f_series(), l, None, Expect::Exact)));
            }
            for l in pairs(p2) {
                out.push(one(move || dyncalc::check_abrr(name, &elements::f_series(), l, None, Expect::Exact)));
            }
        }
        "products" => {
            let ks = c.ladder(1);
            for l in ladder_legs(p2) {
                for (label, anchor) in [("F_prod_large", Anchor::Infinity), ("F_prod_small", Anchor::Zero)] {
                    let ks = ks.clone();
                    out.push(case(move || {
                        ladder(&ks, true, |k| {
                            let prod = if anchor == Anchor::Infinity { elements::f_prod_large(k) } else { elements::f_prod_small(k) };
                            let g = [vec![0], vec![1]];
                            let mut rep = dyncalc::check_equal(name, &format!("products.{label}_vs_F_series"), &l, (&prod, &g), (&elements::f_series(), &g), order(anchor, cap, 1));
                            rep.truncation = Some(k);
                            rep
                        })
                    }));
                }
            }
        }
        "coboundary" => {
            for l in pairs(p2) {
                out.push(one(move || dyncalc::check_delta(name, "coboundary.delta_M", &elements::m_babelon(), &elements::f_series(), l, None, Expect::Exact)));
            }
            for l in pairs(p2) {
                out.push(one(move || dyncalc::check_coboundary(name, &elements::m_babelon(), &elements::f_series(), l, None, Expect::Exact)));
            }
        }
        "vertex-irf" => {
            for l in pairs(p3) {
                out.push(one(move || dyncalc::check_vertex_irf(name, &elements::m_babelon(), &elements::f_series(), l)));
            }
        }
        "prop1" => {
            let ks = c.ladder(2);
            for l in ladder_legs(p2) {
                let ks = ks.clone();
                out.push(case(move || {
                    ladder(&ks, false, |k| {
                        dyncalc::check_delta(name, "prop1.delta_N_vs_F_series", &elements::n_full(k), &elements::f_series(), l, Some(k), order(Anchor::Infinity, cap, 1))
                    })
                }));
            }
        }
        "prop2" => {
            for p in 0..=p1 {
                out.push(case(move || dyncalc::check_reordering(name, p)));
            }
            for p in 0..=p3 {
                for r in -(p as i32)..=p as i32 {
                    out.push(case(move || dyncalc::weight_component_identity(name, r, p)));
                }
            }
            for l in pairs(p3) {
                let scaled = elements::pochh_q2x2().then(&elements::m_babelon());
                out.push(one(move || dyncalc::check_delta(name, "prop2.delta_pochh_M", &scaled, &elements::f_series(), l, None, Expect::Exact)));
            }
            let mut ks = vec![0];
            ks.extend(c.ladder(1));
            for p in 1..=p1 {
                let ks = ks.clone();
                out.push(case(move || {
                    ladder(&ks, false, |k| {
                        let g = [vec![0]];
                        let mut rep = dyncalc::check_equal(
                            name,
                            "prop2.N_minus_vs_tildeN_minus",
                            &[p],
                            (&elements::n_minus(k), &g),
                            (&elements::tilde_n_minus(), &g),
                            order(Anchor::Infinity, cap, 4 * k + 2),
                        );
                        rep.truncation = Some(k);
                        rep
                    })
                }));
            }
        }
        "lemma" => {
            for l in [[1, 1], [1, 2]] {
                if l[1] <= p2 {
                    let p_max = if l == [1, 1] { 6 } else { 0 };
                    out.push(case(move || dyncalc::lemma_recursion(name, &Recipe::identity(), p_max, l, cap)));
                }
            }
        }
        "weyl" => {
            for p in 0..=p1 {
                out.push(case(move || dyncalc::check_weyl_single(name, p)));
            }
            for l in pairs(p3) {
                out.push(case(move || dyncalc::check_weyl_pair(name, l)));
            }
        }
        "grouplike" => {
            for l in pairs(p3) {
                out.push(one(move || dyncalc::check_grouplike(name, "B", &elements::big_b(), l)));
                out.push(one(move || dyncalc::check_grouplike(name, "pochh_h", &elements::pochh_h(), l)));
                out.push(one(move || dyncalc::check_conjugation(name, "B.M", &elements::big_b(), &elements::m_babelon(), l)));
                out.push(one(move || dyncalc::check_conjugation(name, "pochh_h.M", &elements::pochh_h(), &elements::m_babelon(), l)));
            }
        }
        "hyper" => {
            for (i, pt) in qhyper::sample_points().into_iter().enumerate() {
                out.push(one(move || qhyper::check_transform(name, &format!("sample[{i:02}]"), &pt, qhyper::Convention::GasperRahman)));
            }
            out.push(one(move || qhyper::check_transform(name, "powers", &qhyper::POWER_POINT, qhyper::Convention::GasperRahman)));
            for p in 0..=p3 {
                for k in 0..=p {
                    for r in 0..=k {
                        out.push(one(move || qhyper::check_transform_action(name, p, k, r, qhyper::ACTION_X, qhyper::ACTION_Q, qhyper::Convention::GasperRahman)));
                    }
                }
            }
            out.push(case(move || qhyper::resolve_convention(name, p3, qhyper::ACTION_X, qhyper::ACTION_Q).0));
        }
        "printed" => {
            for l in [[2, 2], [2, 3]].into_iter().filter(|l| l[1] <= p2) {
                out.push(one(move || {
                    let mut rep = dyncalc::check_abrr(name, &elements::f_series_printed(), l, None, Expect::Exact);
                    rep.identity = "printed.abrr_F_series".into();
                    rep
                }));
            }
            for p in 1..=p3 {
                out.push(one(move || dyncalc::check_qexp_product_trailing_y(name, p)));
            }
        }
        _ => unreachable!("suite names are validated"),
    }
    out
}

/// Runs the selected suites. Cases run concurrently on `jobs` threads (all
/// cores when `None`); results keep the canonical case order.
pub fn run(config: &SuiteConfig, jobs: Option<usize>) -> Result<Report> {
    config.validate()?;
    let cases: Vec<Case> = config.selected().into_iter().flat_map(|s| suite_cases(s, config)).collect();
    let exec = || cases.par_iter().map(|c| c()).collect::<Vec<_>>();
    let nested = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?
            .install(exec),
        None => exec(),
    };
    let mut results: Vec<IdentityReport> = nested.into_iter().flatten().collect();
    if !config.timing {
        results.iter_mut().for_each(|r| r.runtime_ms = 0);
    }
    let pass = results.iter().filter(|r| r.passed()).count();
    let fail = results.len() - pass;
    Ok(Report { config: config.clone(), results, summary: Summary { pass, fail } })
}
