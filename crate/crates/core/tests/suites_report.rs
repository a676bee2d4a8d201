use proptest::prelude::*;
use uqdyn::dyncalc::{IdentityReport, Verdict, Witness};
use uqdyn::suites::{self, exit_code, Format, SuiteConfig};

fn report(verdict: Verdict) -> IdentityReport {
    let mut r = IdentityReport::new("s", "case", &[1]);
    r.verdict = verdict;
    if verdict == Verdict::Fail {
        r.witness = Some(Witness { row: 0, col: 1, lhs: "1 / 1".into(), rhs: "0 / 1".into() });
    }
    r
}

#[test]
fn json_schema() {
    let c = SuiteConfig { suites: vec!["algebra".into()], max_dim: 0, ..Default::default() };
    let r = suites::run(&c, Some(1)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["summary"]["pass"], 11);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["config"]["max_dim"], 0);
    let first = &v["results"][0];
    for key in ["suite", "identity", "legs", "truncation", "verdict", "order", "witness", "runtime_ms"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    assert_eq!(first["verdict"], "exact");
    assert_eq!(first["runtime_ms"], 0);
    assert!(first["truncation"].is_null() && first["witness"].is_null());
}

#[test]
fn text_format() {
    let c = SuiteConfig { suites: vec!["products".into()], trunc: 2, format: Format::Text, ..Default::default() };
    let text = suites::run(&c, None).unwrap().to_text();
    assert!(text.contains("products.F_prod_large_vs_F_series            [1,1] K=2 order order=12\n"));
    assert!(text.ends_with("pass 8 fail 0\n"));
}

#[test]
fn failing_suite_reports_witnesses() {
    let r = suites::run(&SuiteConfig { suites: vec!["printed".into()], ..Default::default() }, None).unwrap();
    assert_eq!(r.exit_code(), 1);
    assert_eq!(r.summary.pass, 0);
    assert!(r.results.iter().all(|x| x.verdict == Verdict::Fail && x.witness.is_some()));
}

#[test]
fn small_configurations() {
    let c = SuiteConfig { max_dim: 1, trunc: 0, ..Default::default() };
    let r = suites::run(&c, None).unwrap();
    assert!(r.passed(), "{:?}", r.results.iter().filter(|x| !x.passed()).collect::<Vec<_>>());
    assert!(r.results.iter().all(|x| x.legs.iter().all(|&p| p <= 1) || x.suite == "lemma"));
}

proptest! {
    #[test]
    fn exit_code_contract(verdicts in proptest::collection::vec(prop_oneof![Just(Verdict::Exact), Just(Verdict::Order), Just(Verdict::Fail)], 0..20)) {
        let reports: Vec<IdentityReport> = verdicts.iter().map(|&v| report(v)).collect();
        let expected = if verdicts.contains(&Verdict::Fail) { 1 } else { 0 };
        prop_assert_eq!(exit_code(&reports), expected);
    }
}
