use uqdyn::dyncalc::{self, check_abrr, check_cocycle, check_coboundary, check_dybe, check_vertex_irf, delta, order_of, Expect, Verdict};
use uqdyn::elements::{self, Factorial, Recipe};
use uqdyn::qscalar::{qfactorial_sym, QScalar};
use uqdyn::repr::{build_irrep, Operator, RepSpace};
use uqdyn::{Agreement, Anchor};

fn exact(r: &dyncalc::IdentityReport) {
    assert_eq!(r.verdict, Verdict::Exact, "{} {:?}: {:?}", r.identity, r.legs, r.witness);
}

#[test]
fn coboundary_operator() {
    assert!(delta(&Recipe::identity(), 1, 2).unwrap().is_identity());
    assert!(delta(&elements::big_b(), 1, 1).unwrap().is_identity());
    let f = elements::f_series().eval(&RepSpace::new(&[1, 1]), &[vec![0], vec![1]]).unwrap();
    assert_eq!(delta(&elements::m_babelon(), 1, 1).unwrap(), f);
}

#[test]
fn cocycle_and_dybe() {
    let f = elements::f_series();
    for legs in [[0, 1, 2], [2, 0, 1], [1, 1, 1], [1, 1, 2]] {
        exact(&check_cocycle("t", &f, legs, None, Expect::Exact));
        exact(&check_dybe("t", &f, legs, None, Expect::Exact));
    }
    let expect = Expect::Order { anchor: Anchor::Infinity, cap: 40, min_order: 1 };
    let k2 = check_cocycle("t", &elements::f_prod_large(2), [1, 1, 1], Some(2), expect);
    let k6 = check_cocycle("t", &elements::f_prod_large(6), [1, 1, 1], Some(6), expect);
    assert!(k2.passed() && k6.passed());
    assert!(order_of(&k6).rank() >= order_of(&k2).rank());
}

#[test]
fn linear_equation() {
    let f = elements::f_series();
    for legs in [[0, 3], [1, 1], [2, 3]] {
        exact(&check_abrr("t", &f, legs, None, Expect::Exact));
    }
}

#[test]
fn coboundary_equation() {
    exact(&check_coboundary("t", &Recipe::identity(), &Recipe::identity(), [0, 0], None, Expect::Exact));
    for legs in [[1, 1], [1, 3], [2, 2]] {
        exact(&check_coboundary("t", &elements::m_babelon(), &elements::f_series(), legs, None, Expect::Exact));
    }
    let expect = Expect::Order { anchor: Anchor::Infinity, cap: 40, min_order: 1 };
    let mut prev = 0;
    for k in [2, 4, 8] {
        let r = check_coboundary("t", &elements::n_full(k), &elements::f_series(), [1, 1], Some(k), expect);
        let Agreement::Order(o) = order_of(&r) else { panic!("truncated N cannot be exact") };
        assert!(r.passed() && o >= prev);
        prev = o;
    }
}

#[test]
fn vertex_irf() {
    for legs in [[0, 0], [1, 1], [1, 2]] {
        exact(&check_vertex_irf("t", &elements::m_babelon(), &elements::f_series(), legs));
    }
}

#[test]
fn lemma_instance() {
    let reps = dyncalc::lemma_recursion("t", &Recipe::identity(), 6, [1, 1], 40);
    let by = |name: &str| reps.iter().filter(|r| r.identity == name).collect::<Vec<_>>();
    for name in ["lemma.F0_is_identity", "lemma.F1_is_rhat_inverse", "lemma.G_is_rhat_inverse", "lemma.commutation_hypothesis", "lemma.commutation_derived"] {
        exact(by(name)[0]);
    }
    let tower: Vec<u64> = by("lemma.tower_vs_F_series").iter().map(|r| order_of(r).rank()).collect();
    assert_eq!(tower.len(), 6);
    assert!(tower[5] > tower[1]);
    assert!(tower.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn weyl_relations() {
    for r in dyncalc::check_weyl_single("t", 0) {
        exact(&r);
    }
    let single = dyncalc::check_weyl_single("t", 2);
    exact(single.iter().find(|r| r.identity == "weyl.w_h").unwrap());
    let pair = dyncalc::check_weyl_pair("t", [1, 1]);
    exact(pair.iter().find(|r| r.identity == "weyl.delta_w").unwrap());
}

/// The `n = m` part of `M(x)` on `V_1`, summed straight from its defining series.
fn weight_zero_oracle() -> Operator {
    let g = build_irrep(1);
    let space = RepSpace::single(1);
    let (x, q) = (QScalar::y_pow(2), |a: i32| QScalar::q_pow(a));
    let one_one = qfactorial_sym(1).unwrap().mul(&qfactorial_sym(1).unwrap());
    let den = x.mul(&q(1)).sub(&QScalar::y_pow(-2).mul(&q(-1))).mul(&one_one);
    let c = x.neg().div(&den).unwrap();
    let qh = Operator::diag(&space, vec![q(1), q(-1)]).unwrap();
    let term = Operator::product(&[g.eplus.clone(), g.eminus.clone(), qh]).unwrap().scale(&c);
    Operator::identity(&space).add(&term).unwrap()
}

#[test]
fn weight_components() {
    let g = [vec![0]];
    let v1 = RepSpace::single(1);
    for r in [-2, 2, 3] {
        assert!(elements::weight_component_left(r).eval(&v1, &g).unwrap().is_zero());
        assert!(elements::weight_component_right(r, Factorial::Symmetric).eval(&v1, &g).unwrap().is_zero());
    }
    let oracle = weight_zero_oracle();
    assert_eq!(elements::weight_component_left(0).eval(&v1, &g).unwrap(), oracle);
    assert_eq!(elements::weight_component_right(0, Factorial::Symmetric).eval(&v1, &g).unwrap(), oracle);

    for p in 0..=3 {
        for r in -(p as i32)..=p as i32 {
            let reps = dyncalc::weight_component_identity("t", r, p);
            assert_eq!(reps.len(), 1, "symmetric factorial reading failed at r={r}, p={p}");
            exact(&reps[0]);
        }
    }
    for r in dyncalc::check_reordering("t", 4) {
        exact(&r);
    }
}

#[test]
fn printed_readings_fail() {
    for legs in [[2, 2], [2, 3], [3, 3]] {
        let r = check_abrr("t", &elements::f_series_printed(), legs, None, Expect::Exact);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.is_some());
    }
    // The two readings coincide while only k ≤ 1 contributes.
    exact(&check_abrr("t", &elements::f_series_printed(), [1, 3], None, Expect::Exact));
    for p in 1..=3 {
        assert_eq!(dyncalc::check_qexp_product_trailing_y("t", p).verdict, Verdict::Fail);
    }
}

#[test]
fn order_verdicts() {
    let legs = [1, 1];
    let g = [vec![0], vec![1]];
    let lhs = elements::f_prod_large(1);
    let rhs = elements::f_series();
    let weak = dyncalc::check_equal("t", "x", &legs, (&lhs, &g), (&rhs, &g), Expect::Order { anchor: Anchor::Infinity, cap: 40, min_order: 1 });
    assert_eq!((weak.verdict, weak.order), (Verdict::Order, Some(8)));
    let strict = dyncalc::check_equal("t", "x", &legs, (&lhs, &g), (&rhs, &g), Expect::Order { anchor: Anchor::Infinity, cap: 40, min_order: 9 });
    assert_eq!(strict.verdict, Verdict::Fail);
    assert!(strict.witness.is_some());
}
