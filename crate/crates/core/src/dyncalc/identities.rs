//! Exact algebraic identities: generator relations, q-exponential rules,
//! quantum Weyl group relations and the reordering of `M(x)`.

use super::{check_equal, legs1, legs2, run, Expect, IdentityReport};
use crate::elements::{self, Factorial, Gen, Recipe};
use crate::error::Result;
use crate::qscalar::{qnum, Base, QScalar};
use crate::repr::{h_diagonal, Operator, RepSpace, SlotGenerators};

fn relation(rep: IdentityReport, lhs: Result<Operator>, rhs: Result<Operator>) -> Result<IdentityReport> {
    rep.compare(&lhs?, &rhs?, Expect::Exact)
}

/// `[h, E±] = ±2E±`, `[E₊, E₋] = [h]_q`, `e = q^{h/2}E₊`, `f = E₋q^{-h/2}`
/// for the generators acting on `slots`.
pub fn check_algebra(suite: &str, legs: &[u32], slots: &[usize]) -> Vec<IdentityReport> {
    let space = RepSpace::new(legs);
    let g = match SlotGenerators::new(&space, slots) {
        Ok(g) => g,
        Err(e) => return vec![IdentityReport::new(suite, "generators", legs).error(&e)],
    };
    let two = QScalar::from_int(2);
    let k_inv = g.k.invert();
    let cases: Vec<(&str, Result<Operator>, Result<Operator>)> = vec![
        ("h_eplus", g.h.commutator(&g.eplus), Ok(g.eplus.scale(&two))),
        ("h_eminus", g.h.commutator(&g.eminus), Ok(g.eminus.scale(&two).neg())),
        ("eplus_eminus", g.eplus.commutator(&g.eminus), h_diagonal(&space, slots, |w| qnum(w.iter().sum::<i32>() as i64))),
        ("e_from_eplus", Ok(g.e.clone()), g.k.mul(&g.eplus)),
        ("f_from_eminus", Ok(g.f.clone()), k_inv.and_then(|ki| g.eminus.mul(&ki))),
    ];
    cases
        .into_iter()
        .map(|(name, l, r)| run(IdentityReport::new(suite, &format!("algebra.{name}"), legs), |rep| relation(rep, l, r)))
        .collect()
}

/// `(Δ ⊗ id)Δ(X) = (id ⊗ Δ)Δ(X)` for `X ∈ {E₊, E₋}` on three legs.
pub fn check_coassociativity(suite: &str, legs: [u32; 3]) -> IdentityReport {
    run(IdentityReport::new(suite, "algebra.coassociativity", &legs), |rep| {
        let space = RepSpace::new(&legs);
        let all = SlotGenerators::new(&space, &[0, 1, 2])?;
        let x = Recipe::gen(0, Gen::EPlus).then(&Recipe::gen(1, Gen::K)).then(&Recipe::gen(2, Gen::K));
        let y = Recipe::gen(0, Gen::K).inverse().then(&Recipe::gen(1, Gen::EPlus)).then(&Recipe::gen(2, Gen::K));
        let z = Recipe::gen(0, Gen::K).inverse().then(&Recipe::gen(1, Gen::K).inverse()).then(&Recipe::gen(2, Gen::EPlus));
        let g3 = vec![vec![0], vec![1], vec![2]];
        let expand = Recipe::sum(vec![x, y, z]).eval(&space, &g3)?;
        rep.compare(&all.eplus, &expand, Expect::Exact)
    })
}

/// `X = e ⊗ q^h` and `Y = 1 ⊗ e`, so `XY = q² YX`.
fn qexp_pair() -> (Recipe, Recipe) {
    let x = Recipe::gen(0, Gen::E).then(&Recipe::hfun(1, "q^h", |mu| QScalar::q_pow(mu)));
    (x, Recipe::gen(1, Gen::E))
}

/// The q-exponential rules on `V_p ⊗ V_p`, with `exp_q(X)exp_q(Y)` reordered as
/// `exp_q(Y) exp_q((1 - q^{-2})XY) exp_q(X)`.
pub fn check_qexp(suite: &str, p: u32) -> Vec<IdentityReport> {
    let legs = [p, p];
    let g = legs2(&[0], &[1]);
    let (x, y) = qexp_pair();
    let q2 = QScalar::q_pow(2);
    let ex = |r: &Recipe| r.qexp(Base::Q);
    let mut out = vec![
        check_equal(suite, "qexp.commutation", &legs, (&x.then(&y), &g), (&y.then(&x).scale(q2.clone()), &g), Expect::Exact),
        check_equal(suite, "qexp.inverse", &legs, (&ex(&x).then(&x.scale(QScalar::from_int(-1)).qexp(Base::QInv)), &g), (&Recipe::identity(), &g), Expect::Exact),
        check_equal(suite, "qexp.sum", &legs, (&ex(&Recipe::sum(vec![x.clone(), y.clone()])), &g), (&ex(&y).then(&ex(&x)), &g), Expect::Exact),
    ];
    let c = QScalar::one().sub(&q2.inv().expect("nonzero"));
    let middle = ex(&x.then(&y).scale(c));
    out.push(check_equal(
        suite,
        "qexp.product",
        &legs,
        (&ex(&x).then(&ex(&y)), &g),
        (&Recipe::product(vec![ex(&y), middle, ex(&x)]), &g),
        Expect::Exact,
    ));
    out.push(run(IdentityReport::new(suite, "qexp.series", &legs), |rep| {
        let space = RepSpace::new(&legs);
        let a = x.eval(&space, &g)?;
        let mut terms = vec![Operator::identity(&space)];
        let mut power = a.clone();
        for n in 1..=space.dim() as i64 {
            let c = crate::qscalar::qfactorial_inv(n, Base::Q)?;
            terms.push(power.scale(&c));
            power = power.mul(&a)?;
        }
        rep.compare(&a.qexp_nilpotent(Base::Q)?, &Operator::sum(&space, &terms)?, Expect::Exact)
    }));
    out
}

/// The reordering rule with a trailing `exp_q(Y)` in place of `exp_q(X)`.
pub fn check_qexp_product_trailing_y(suite: &str, p: u32) -> IdentityReport {
    let legs = [p, p];
    let g = legs2(&[0], &[1]);
    let (x, y) = qexp_pair();
    let ex = |r: &Recipe| r.qexp(Base::Q);
    let c = QScalar::one().sub(&QScalar::q_pow(-2));
    let rhs = Recipe::product(vec![ex(&y), ex(&x.then(&y).scale(c)), ex(&y)]);
    check_equal(suite, "qexp.product_trailing_y", &legs, (&ex(&x).then(&ex(&y)), &g), (&rhs, &g), Expect::Exact)
}

/// Quantum Weyl group relations on a single module `V_p`.
pub fn check_weyl_single(suite: &str, p: u32) -> Vec<IdentityReport> {
    let legs = [p];
    let g = legs1(&[0]);
    let w = elements::w_elem();
    let wi = w.inverse();
    let h = Recipe::gen(0, Gen::H);
    let e = Recipe::gen(0, Gen::E);
    let f = Recipe::gen(0, Gen::F);
    let u = elements::u_elem();
    let ui = u.inverse();
    let conj = |x: &Recipe| Recipe::product(vec![w.clone(), x.clone(), wi.clone()]);
    let minus = QScalar::from_int(-1);
    let cases: Vec<(&str, Recipe, Recipe)> = vec![
        ("weyl.w_two_expressions", w.clone(), elements::w_alt()),
        ("weyl.w_h", conj(&h), h.scale(minus.clone())),
        ("weyl.w_e", conj(&e), Recipe::hfun(0, "q^{-h-1}", |mu| QScalar::q_pow(-mu - 1)).then(&f).scale(minus.clone())),
        ("weyl.w_f", conj(&f), e.then(&Recipe::hfun(0, "q^{h+1}", |mu| QScalar::q_pow(mu + 1))).scale(minus)),
        (
            "weyl.wuw",
            Recipe::product(vec![w.clone(), u.clone(), w.clone()]),
            Recipe::product(vec![ui.clone(), elements::q_h2_quarter(0, -2), w.clone(), ui]),
        ),
        ("weyl.v_from_w", elements::v_from_w(), elements::v_elem()),
    ];
    cases.iter().map(|(name, l, r)| check_equal(suite, name, &legs, (l, &g), (r, &g), Expect::Exact)).collect()
}

/// Coproduct relations of `u`, `v`, `w` on `V_{p1} ⊗ V_{p2}`.
pub fn check_weyl_pair(suite: &str, legs: [u32; 2]) -> Vec<IdentityReport> {
    let delta = legs1(&[0, 1]);
    let g = legs2(&[0], &[1]);
    let on = |r: &Recipe, slot: usize| r.relabel(&[slot]);
    let (u, v, w) = (elements::u_elem(), elements::v_elem(), elements::w_elem());
    let p = elements::q_hh(1, 2);
    let pi = elements::q_hh(-1, 2);
    let v2i = on(&v, 1).inverse();
    let cases: Vec<(&str, Recipe, Recipe)> = vec![
        ("weyl.delta_w", w.clone(), Recipe::product(vec![elements::rhat_inv(), on(&w, 0), on(&w, 1)])),
        ("weyl.delta_u", u.clone(), Recipe::product(vec![on(&u, 1), p.clone(), on(&u, 0), pi.clone()])),
        ("weyl.delta_v", v.clone(), Recipe::product(vec![p.clone(), on(&v, 1), pi.clone(), on(&v, 0)])),
    ];
    let mut out: Vec<IdentityReport> =
        cases.iter().map(|(name, l, r)| check_equal(suite, name, &legs, (l, &delta), (r, &g), Expect::Exact)).collect();
    let lhs = Recipe::product(vec![
        on(&u, 0),
        elements::q_h2_quarter(0, 1),
        elements::rmat().inverse(),
        elements::q_h2_quarter(0, -1),
        v2i.clone(),
    ]);
    let rhs = Recipe::product(vec![pi.clone(), v2i, p, on(&u, 0), pi]);
    out.push(check_equal(suite, "weyl.pentagon", &legs, (&lhs, &g), (&rhs, &g), Expect::Exact));
    out
}

/// Weight-`r` components of the two orderings of `M(x)` on `V_p`. When the
/// symmetric factorial reading fails, the `(k)_{q^{-1}}!` reading is tried and
/// reported under its own name.
pub fn weight_component_identity(suite: &str, r: i32, p: u32) -> Vec<IdentityReport> {
    let legs = [p];
    let g = legs1(&[0]);
    let left = elements::weight_component_left(r);
    let first = check_equal(
        suite,
        &format!("prop2.weight_component[{r}]"),
        &legs,
        (&left, &g),
        (&elements::weight_component_right(r, Factorial::Symmetric), &g),
        Expect::Exact,
    );
    if first.passed() {
        return vec![first];
    }
    let alt = check_equal(
        suite,
        &format!("prop2.weight_component_qinv_factorial[{r}]"),
        &legs,
        (&left, &g),
        (&elements::weight_component_right(r, Factorial::QInv), &g),
        Expect::Exact,
    );
    vec![first, alt]
}

/// `M = Σ_r (weight-r part)`, `M = (Σ_k … f^k) N₊` and `Ñ₋ N₊ = (q²x²;q²)_h M` on `V_p`.
pub fn check_reordering(suite: &str, p: u32) -> Vec<IdentityReport> {
    let legs = [p];
    let g = legs1(&[0]);
    let m = elements::m_babelon();
    let parts = Recipe::sum((-(p as i32)..=p as i32).map(elements::weight_component_left).collect());
    vec![
        check_equal(suite, "prop2.weight_decomposition", &legs, (&m, &g), (&parts, &g), Expect::Exact),
        check_equal(suite, "prop2.reordered_M", &legs, (&m, &g), (&elements::m_reordered_minus().then(&elements::n_plus()), &g), Expect::Exact),
        check_equal(
            suite,
            "prop2.tildeN_minus_N_plus",
            &legs,
            (&elements::tilde_n_minus().then(&elements::n_plus()), &g),
            (&elements::pochh_q2x2().then(&m), &g),
            Expect::Exact,
        ),
    ]
}
