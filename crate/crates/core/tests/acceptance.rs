//! Acceptance criteria 1 to 13, one line each. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use uqdyn::dyncalc::{IdentityReport, Verdict};
use uqdyn::qhyper::{self, Convention};
use uqdyn::suites::{self, Report, SuiteConfig};

struct Outcome {
    ok: bool,
    detail: String,
}

fn config(suites: &[&str]) -> SuiteConfig {
    SuiteConfig { suites: suites.iter().map(|s| s.to_string()).collect(), timing: true, ..Default::default() }
}

fn run(c: &SuiteConfig) -> (Report, Duration) {
    let start = Instant::now();
    let r = suites::run(c, None).expect("valid config");
    (r, start.elapsed())
}

fn failures(r: &Report) -> Vec<String> {
    r.results.iter().filter(|x| !x.passed()).map(|x| format!("{} {:?}", x.identity, x.legs)).collect()
}

fn all_exact(r: &Report) -> bool {
    r.results.iter().all(|x| x.verdict == Verdict::Exact)
}

fn orders(r: &Report, identity: &str, legs: &[u32]) -> Vec<Option<u32>> {
    r.results.iter().filter(|x| x.identity == identity && x.legs == legs).map(|x| x.order).collect()
}

fn max_leg(r: &Report, n_legs: usize, f: impl Fn(&IdentityReport) -> bool) -> u32 {
    r.results.iter().filter(|x| x.legs.len() == n_legs && f(x)).flat_map(|x| x.legs.iter().copied()).max().unwrap_or(0)
}

fn exact_suite(name: &str, c: SuiteConfig, limit: Duration, extra: impl Fn(&Report) -> Option<String>) -> Outcome {
    let (r, t) = run(&c);
    let mut problems = failures(&r);
    if !all_exact(&r) {
        problems.push("non-exact verdict".into());
    }
    if let Some(e) = extra(&r) {
        problems.push(e);
    }
    if t > limit {
        problems.push(format!("runtime {t:?} over {limit:?}"));
    }
    Outcome { ok: problems.is_empty(), detail: format!("{name}: {} cases exact in {t:.2?}{}", r.results.len(), render(&problems)) }
}

fn render(problems: &[String]) -> String {
    if problems.is_empty() {
        String::new()
    } else {
        format!("; problems: {}", problems.join(", "))
    }
}

fn ladder(r: &Report, identity: &str, legs: &[u32], pinned: &[u32], strict: bool) -> Option<String> {
    let got = orders(r, identity, legs);
    let want: Vec<Option<u32>> = pinned.iter().map(|&o| Some(o)).collect();
    if got != want {
        return Some(format!("{identity} {legs:?} orders {got:?}, pinned {pinned:?}"));
    }
    let monotone = pinned.windows(2).all(|w| if strict { w[1] > w[0] } else { w[1] >= w[0] });
    (!monotone || pinned[0] == 0).then(|| format!("{identity} {legs:?} not increasing"))
}

fn criterion(n: u32) -> Outcome {
    let sec = Duration::from_secs;
    match n {
        1 => {
            let c = SuiteConfig { max_dim: 6, ..config(&["algebra"]) };
            exact_suite("algebra", c, sec(10), |r| {
                let single = max_leg(r, 1, |_| true);
                let pair = max_leg(r, 2, |_| true);
                (single < 6 || pair < 4).then(|| format!("coverage single {single}, pair {pair}"))
            })
        }
        2 => exact_suite("qexp", config(&["qexp"]), sec(10), |r| {
            let names = ["qexp.commutation", "qexp.inverse", "qexp.sum", "qexp.product", "qexp.series"];
            let missing: Vec<&str> = names.iter().copied().filter(|n| !r.results.iter().any(|x| x.identity == *n && x.legs == [3, 3])).collect();
            (!missing.is_empty()).then(|| format!("missing {missing:?} at p = 3"))
        }),
        3 => exact_suite("ybe", config(&["ybe"]), sec(30), |r| (r.results.len() != 64).then(|| "expected all 64 triples".into())),
        4 => exact_suite("twist", config(&["twist"]), sec(180), |r| {
            let count = |id: &str| r.results.iter().filter(|x| x.identity == id).count();
            (count("cocycle") != 64 || count("dybe") != 64 || count("abrr") != 25 || count("zero_weight") != 25).then(|| "case counts".into())
        }),
        5 => {
            let (r, t) = run(&config(&["products"]));
            let mut problems = failures(&r);
            for legs in [[1, 1], [2, 2]] {
                problems.extend(ladder(&r, "products.F_prod_large_vs_F_series", &legs, &[8, 12, 20, 36], true));
                problems.extend(ladder(&r, "products.F_prod_small_vs_F_series", &legs, &[12, 16, 24, 40], true));
            }
            if t > sec(60) {
                problems.push(format!("runtime {t:?}"));
            }
            Outcome { ok: problems.is_empty(), detail: format!("products: large 8,12,20,36 / small 12,16,24,40(cap) at K=1,2,4,8 in {t:.2?}{}", render(&problems)) }
        }
        6 => exact_suite("coboundary + vertex-irf", config(&["coboundary", "vertex-irf"]), sec(120), |r| {
            let pair = max_leg(r, 2, |x| x.identity == "coboundary.delta_M");
            let irf = max_leg(r, 2, |x| x.identity == "vertex_irf");
            (pair < 4 || irf < 3).then(|| format!("coverage {pair}/{irf}"))
        }),
        7 => {
            let (r, t) = run(&config(&["prop1"]));
            let mut problems = failures(&r);
            for legs in [[1, 1], [2, 2]] {
                problems.extend(ladder(&r, "prop1.delta_N_vs_F_series", &legs, &[12, 20, 36], false));
            }
            if t > sec(120) {
                problems.push(format!("runtime {t:?}"));
            }
            Outcome { ok: problems.is_empty(), detail: format!("prop1: δN(K) vs F orders 12,20,36 at K=2,4,8 in {t:.2?}{}", render(&problems)) }
        }
        8 => {
            let (r, t) = run(&config(&["prop2"]));
            let mut problems = failures(&r);
            let exact_ids = r.results.iter().filter(|x| x.identity != "prop2.N_minus_vs_tildeN_minus").all(|x| x.verdict == Verdict::Exact);
            if !exact_ids {
                problems.push("non-exact algebraic case".into());
            }
            if r.results.iter().any(|x| x.identity.contains("qinv_factorial")) {
                problems.push("symmetric factorial reading needed a fallback".into());
            }
            for p in 1..=4 {
                problems.extend(ladder(&r, "prop2.N_minus_vs_tildeN_minus", &[p], &[6, 10, 14, 22, 38], false));
            }
            if t > sec(120) {
                problems.push(format!("runtime {t:?}"));
            }
            Outcome { ok: problems.is_empty(), detail: format!("prop2: {} cases, N_minus(K) vs tildeN_minus orders 6,10,14,22,38 at K=0,1,2,4,8 in {t:.2?}{}", r.results.len(), render(&problems)) }
        }
        9 => {
            let (r, t) = run(&config(&["lemma"]));
            let mut problems = failures(&r);
            problems.extend(ladder(&r, "lemma.tower_vs_F_series", &[1, 1], &[4, 8, 12, 16, 20, 24], true));
            for legs in [[1, 1], [1, 2]] {
                for id in ["lemma.F0_is_identity", "lemma.F1_is_rhat_inverse", "lemma.G_is_rhat_inverse", "lemma.commutation_hypothesis", "lemma.commutation_derived"] {
                    if !r.results.iter().any(|x| x.identity == id && x.legs == legs && x.verdict == Verdict::Exact) {
                        problems.push(format!("{id} {legs:?}"));
                    }
                }
            }
            if t > sec(180) {
                problems.push(format!("runtime {t:?}"));
            }
            Outcome { ok: problems.is_empty(), detail: format!("lemma: exact identities on [1,1], [1,2]; tower orders 4..24 for p=1..6 in {t:.2?}{}", render(&problems)) }
        }
        10 => exact_suite("weyl", config(&["weyl"]), sec(120), |r| {
            let single = max_leg(r, 1, |_| true);
            let pair = max_leg(r, 2, |_| true);
            (single < 4 || pair < 3).then(|| format!("coverage {single}/{pair}"))
        }),
        11 => exact_suite("grouplike", config(&["grouplike"]), sec(60), |r| (r.results.len() != 64).then(|| "expected 4 checks on 16 pairs".into())),
        12 => {
            let (r, t) = run(&config(&["hyper"]));
            let mut problems = failures(&r);
            let transform = r.results.iter().filter(|x| x.identity.starts_with("hyper.transform")).collect::<Vec<_>>();
            let action = r.results.iter().filter(|x| x.identity.starts_with("hyper.action")).collect::<Vec<_>>();
            if transform.len() != 25 + 1 + 20 || transform.iter().any(|x| x.order.unwrap_or(0) < qhyper::TRANSFORM_TOL_DIGITS) {
                problems.push("transformation coverage or tolerance".into());
            }
            if action.len() != 20 || action.iter().any(|x| !x.identity.ends_with("[gr]") || x.order.unwrap_or(0) < qhyper::ACTION_TOL_DIGITS) {
                problems.push("action cross-check coverage, tolerance or convention".into());
            }
            let (_, conv) = qhyper::resolve_convention("acceptance", 3, qhyper::ACTION_X, qhyper::ACTION_Q);
            if conv != Some(Convention::GasperRahman) {
                problems.push(format!("validated convention {conv:?}"));
            }
            if t > sec(60) {
                problems.push(format!("runtime {t:?}"));
            }
            Outcome {
                ok: problems.is_empty(),
                detail: format!("hyper: 46 transforms ≥ 1e-25, 20 action cross-checks ≥ 1e-20, Gasper–Rahman convention, in {t:.2?}{}", render(&problems)),
            }
        }
        13 => {
            let c = SuiteConfig { timing: false, ..SuiteConfig::default() };
            let (a, t) = run(&c);
            let b = suites::run(&SuiteConfig { timing: false, ..SuiteConfig::default() }, Some(1)).expect("valid config");
            let mut problems = Vec::new();
            if a.to_json() != b.to_json() {
                problems.push("JSON differs between runs".into());
            }
            if a.exit_code() != 0 {
                problems.push(format!("full run exit {}", a.exit_code()));
            }
            let printed = suites::run(&config(&["printed"]), None).expect("valid config");
            if printed.exit_code() != 1 {
                problems.push("printed readings did not yield exit 1".into());
            }
            let unknown = SuiteConfig { suites: vec!["nosuch".into()], ..Default::default() };
            if unknown.validate().is_ok() {
                problems.push("unknown suite accepted".into());
            }
            Outcome {
                ok: problems.is_empty(),
                detail: format!("determinism: {} cases byte-identical across runs ({t:.2?}); exit 0 on pass, 1 on failure, unknown suite rejected{}", a.results.len(), render(&problems)),
            }
        }
        _ => unreachable!(),
    }
}

fn main() {
    let mut failed = 0;
    for n in 1..=13 {
        let o = criterion(n);
        println!("criterion {n:>2}: {} {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", 13 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
