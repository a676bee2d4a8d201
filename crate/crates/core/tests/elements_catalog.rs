use uqdyn::dyncalc::{check_grouplike, delta, Verdict};
use uqdyn::elements::{self, element, evaluate, Recipe, CATALOG};
use uqdyn::qscalar::{qfactorial, Base, QScalar};
use uqdyn::repr::{build_irrep, Operator, RepSpace};
use uqdyn::{Agreement, Anchor, Error};

fn s(text: &str) -> QScalar {
    QScalar::parse(text).unwrap()
}

fn pair_groups() -> Vec<Vec<usize>> {
    vec![vec![0], vec![1]]
}

/// Literal summation of the twist series on `V_{p1} ⊗ V_{p2}`, with the
/// `k`-th denominator read at the weight `h₂` reached after `f^k`, shifted by `k - 1`.
fn twist_series_oracle(p1: u32, p2: u32) -> Operator {
    let space = RepSpace::new(&[p1, p2]);
    let (g1, g2) = (build_irrep(p1), build_irrep(p2));
    let q = |a: i32| QScalar::q_pow(a);
    let mut total = Operator::identity(&space);
    for k in 1..=p1.min(p2) as i32 {
        let ef = Operator::kron(&g1.e.pow(k as u32).unwrap(), &g2.f.pow(k as u32).unwrap());
        let sign = QScalar::from_int(if k % 2 == 0 { 1 } else { -1 });
        let c = sign.mul(&q(1).sub(&q(-1)).pow(k).unwrap()).mul(&q(k * (1 - k))).div(&qfactorial(k as i64, Base::QInv).unwrap()).unwrap();
        let den = Operator::from_fn(&space, |r, col| {
            if r != col {
                return QScalar::zero();
            }
            let h2 = space.leg_weight(r, 1);
            (1..=k).fold(QScalar::one(), |acc, j| acc.mul(&QScalar::one().sub(&QScalar::y_pow(-4).mul(&q(-2 * j - 2 * (h2 + k - 1))))))
        });
        total = total.add(&den.invert().unwrap().mul(&ef).unwrap().scale(&c)).unwrap();
    }
    total
}

#[test]
fn r_matrices() {
    for p in 0..=3 {
        let space = RepSpace::new(&[0, p]);
        assert!(elements::rhat().eval(&space, &pair_groups()).unwrap().is_identity());
        assert!(elements::rmat().eval(&space, &pair_groups()).unwrap().is_identity());
    }
    let rhat = evaluate("rhat", &[1, 1], 0).unwrap();
    let mut expected = Operator::identity(rhat.space());
    expected.set(1, 2, s("t^4 - t^-4"));
    assert_eq!(rhat, expected);

    let r = evaluate("r", &[1, 1], 0).unwrap();
    let qhh = Operator::diag(r.space(), vec![s("t^2"), s("t^-2"), s("t^-2"), s("t^2")]).unwrap();
    assert_eq!(r, qhh.mul(&rhat).unwrap());
}

#[test]
fn diagonal_elements() {
    assert!(evaluate("B", &[0], 0).unwrap().is_identity());
    let b = evaluate("B", &[1], 0).unwrap();
    assert_eq!(b, Operator::diag(b.space(), vec![s("t^2*y^2"), s("t^2*y^-2")]).unwrap());
    let small = evaluate("b", &[2], 0).unwrap();
    assert_eq!(small.get(0, 0), &s("t^4*y^2"));
    assert!(small.get(1, 1).is_one());
}

#[test]
fn weyl_elements() {
    for name in ["u", "v", "w"] {
        assert!(evaluate(name, &[0], 0).unwrap().is_identity(), "{name}");
    }
    let u = evaluate("u", &[1], 0).unwrap();
    assert_eq!(u, Operator::identity(u.space()).add(&build_irrep(1).e).unwrap());
}

#[test]
fn twist_series() {
    for p in 0..=3 {
        assert!(evaluate("F_series", &[0, p], 0).unwrap().is_identity());
        assert!(evaluate("F_series", &[p, 0], 0).unwrap().is_identity());
    }
    let f11 = evaluate("F_series", &[1, 1], 0).unwrap();
    assert!(f11.sub(&Operator::identity(f11.space())).unwrap().entries().iter().enumerate().all(|(i, c)| i == 6 || c.is_zero()));
    assert_eq!(f11.get(1, 2), &s("-t^4*y^4 + t^-4*y^4 / y^4 - 1"));
    for (p1, p2) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)] {
        assert_eq!(evaluate("F_series", &[p1, p2], 0).unwrap(), twist_series_oracle(p1, p2), "({p1},{p2})");
    }
}

#[test]
fn twist_products() {
    for k in [0, 3] {
        for name in ["F_prod_large", "F_prod_small"] {
            assert!(evaluate(name, &[0, 2], k).unwrap().is_identity());
        }
    }
    let large0 = evaluate("F_prod_large", &[1, 1], 0).unwrap();
    assert_eq!(large0, elements::rhat_inv().eval(large0.space(), &pair_groups()).unwrap());
    let fs = evaluate("F_series", &[1, 1], 0).unwrap();
    match large0.agreement(&fs, Anchor::Infinity, 40).unwrap() {
        Agreement::Order(k) => assert!(k > 0),
        Agreement::Exact => panic!("a single factor cannot be exact"),
    }
}

#[test]
fn coboundary_elements() {
    for name in ["M", "N_plus", "N_minus", "tildeN_minus", "N", "pochh_h"] {
        assert!(evaluate(name, &[0], 4).unwrap().is_identity(), "{name}");
    }
    let np = evaluate("N_plus", &[1], 0).unwrap();
    let expected = Operator::identity(np.space()).sub(&build_irrep(1).e.scale(&QScalar::y_pow(2))).unwrap();
    assert_eq!(np, expected);

    let target = evaluate("tildeN_minus", &[2], 0).unwrap();
    let mut prev = 0;
    for k in 0..=4 {
        let nm = evaluate("N_minus", &[2], k).unwrap();
        match nm.agreement(&target, Anchor::Infinity, 40).unwrap() {
            Agreement::Order(o) => {
                assert!(o > 0 && o >= prev);
                prev = o;
            }
            Agreement::Exact => panic!("truncated product cannot be exact"),
        }
    }
}

#[test]
fn grouplike_examples() {
    let one = check_grouplike("t", "one", &Recipe::identity(), [1, 1]);
    assert_eq!(one.verdict, Verdict::Exact);
    assert_eq!(check_grouplike("t", "B", &elements::big_b(), [1, 1]).verdict, Verdict::Exact);
    assert_eq!(check_grouplike("t", "pochh_h", &elements::pochh_h(), [1, 2]).verdict, Verdict::Exact);
    assert!(delta(&elements::big_b(), 2, 3).unwrap().is_identity());
    // M itself is not group-like: δM = F ≠ 1.
    assert!(!delta(&elements::m_babelon(), 1, 1).unwrap().is_identity());
}

#[test]
fn catalog_lookup() {
    for name in CATALOG {
        let el = element(name, 2).unwrap();
        let dims = vec![1; el.arity];
        assert!(evaluate(name, &dims, 2).is_ok(), "{name}");
    }
    assert!(matches!(element("nosuch", 0), Err(Error::UnknownElement(_))));
    assert!(matches!(evaluate("B", &[1, 1], 0), Err(Error::Arity { expected: 1, got: 2 })));
}

#[test]
fn rendering_is_stable() {
    let text = elements::render("B", &[1], 0).unwrap();
    assert_eq!(text, "B on V_1 (dim 2)\n[0,0] t^2*y^2 / 1\n[1,1] t^2*y^-2 / 1\n");
    let rhat = elements::render("rhat", &[1, 1], 0).unwrap();
    assert!(rhat.contains("[1,2] t^4 - t^-4 / 1\n"));
    assert_eq!(rhat, elements::render("rhat", &[1, 1], 0).unwrap());
}
