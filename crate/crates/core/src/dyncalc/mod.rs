//! Shifted arguments, the coboundary operator `δ`, and checkers for the
//! functional identities of dynamical twists.
//!
//! A two-slot recipe evaluated with groups `[[0], [1]]` is `Q₁₂`; with
//! `[[0, 1], [2]]` it is `(Δ ⊗ id)(Q)`. `Q₁(xq^{h₂})` is the evaluation on
//! `[[0]]` followed by [`Operator::shift`] along leg `1`.

mod identities;
mod report;

pub use identities::*;

pub use report::{Expect, IdentityReport, Verdict, Witness};

use crate::elements::{self, Evaluator, Recipe};
use crate::error::Result;
use crate::qscalar::{Agreement, Anchor};
use crate::repr::{Operator, RepSpace};

pub(crate) fn legs1(g: &[usize]) -> Vec<Vec<usize>> {
    vec![g.to_vec()]
}

pub(crate) fn legs2(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    vec![a.to_vec(), b.to_vec()]
}

/// Blockwise substitution `x -> x q^{μ}` with `μ` the weight of `shifting`.
pub fn shift(op: &Operator, shifting: &[usize]) -> Result<Operator> {
    op.shift(shifting)
}

/// `δQ = Δ(Q) Q₂^{-1} Q₁(xq^{h₂})^{-1}` on `V_{p1} ⊗ V_{p2}`.
pub fn delta(q: &Recipe, p1: u32, p2: u32) -> Result<Operator> {
    let space = RepSpace::new(&[p1, p2]);
    let mut ev = Evaluator::new(&space);
    delta_in(&mut ev, q)
}

fn delta_in(ev: &mut Evaluator, q: &Recipe) -> Result<Operator> {
    let dq = ev.eval(q, &legs1(&[0, 1]))?;
    let q2 = ev.eval(q, &legs1(&[1]))?;
    let q1s = ev.eval(q, &legs1(&[0]))?.shift(&[1])?;
    Operator::product(&[dq, q2.invert()?, q1s.invert()?])
}

/// `R(x) = F₂₁(x)^{-1} R F₁₂(x)`.
pub fn dynamical_r(f: &Recipe) -> Recipe {
    Recipe::product(vec![f.relabel(&[1, 0]).inverse(), elements::rmat(), f.clone()])
}

/// Runs a checker body, turning errors into failures and recording the runtime.
pub fn run(report: IdentityReport, body: impl FnOnce(IdentityReport) -> Result<IdentityReport>) -> IdentityReport {
    let start = std::time::Instant::now();
    let fallback = report.clone();
    let mut out = body(report).unwrap_or_else(|e| fallback.error(&e));
    out.runtime_ms = start.elapsed().as_millis() as u64;
    out
}

/// Dynamical cocycle `F₁₂,₃(x) F₁₂(xq^{h₃}) = F₁,₂₃(x) F₂₃(x)`.
pub fn check_cocycle(suite: &str, f: &Recipe, legs: [u32; 3], trunc: Option<u32>, expect: Expect) -> IdentityReport {
    run(IdentityReport::new(suite, "cocycle", &legs).with_truncation(trunc), |rep| {
        let mut ev = Evaluator::new(&RepSpace::new(&legs));
        let lhs = ev.eval(f, &legs2(&[0, 1], &[2]))?.mul(&ev.eval(f, &legs2(&[0], &[1]))?.shift(&[2])?)?;
        let rhs = ev.eval(f, &legs2(&[0], &[1, 2]))?.mul(&ev.eval(f, &legs2(&[1], &[2]))?)?;
        rep.compare(&lhs, &rhs, expect)
    })
}

/// Dynamical Yang–Baxter equation for `R(x) = F₂₁^{-1} R F₁₂`:
/// `R₁₂(x) R₁₃(xq^{h₂}) R₂₃(x) = R₂₃(xq^{h₁}) R₁₃(x) R₁₂(xq^{h₃})`.
pub fn check_dybe(suite: &str, f: &Recipe, legs: [u32; 3], trunc: Option<u32>, expect: Expect) -> IdentityReport {
    run(IdentityReport::new(suite, "dybe", &legs).with_truncation(trunc), |rep| {
        let rx = dynamical_r(f);
        let mut ev = Evaluator::new(&RepSpace::new(&legs));
        let r12 = ev.eval(&rx, &legs2(&[0], &[1]))?;
        let r13 = ev.eval(&rx, &legs2(&[0], &[2]))?;
        let r23 = ev.eval(&rx, &legs2(&[1], &[2]))?;
        let lhs = Operator::product(&[r12.clone(), r13.shift(&[1])?, r23.clone()])?;
        let rhs = Operator::product(&[r23.shift(&[0])?, r13, r12.shift(&[2])?])?;
        rep.compare(&lhs, &rhs, expect)
    })
}

/// Yang–Baxter equation `R₁₂ R₁₃ R₂₃ = R₂₃ R₁₃ R₁₂` for a constant two-slot element.
pub fn check_ybe(suite: &str, r: &Recipe, legs: [u32; 3]) -> IdentityReport {
    run(IdentityReport::new(suite, "ybe", &legs), |rep| {
        let mut ev = Evaluator::new(&RepSpace::new(&legs));
        let r12 = ev.eval(r, &legs2(&[0], &[1]))?;
        let r13 = ev.eval(r, &legs2(&[0], &[2]))?;
        let r23 = ev.eval(r, &legs2(&[1], &[2]))?;
        let lhs = Operator::product(&[r12.clone(), r13.clone(), r23.clone()])?;
        let rhs = Operator::product(&[r23, r13, r12])?;
        rep.compare(&lhs, &rhs, Expect::Exact)
    })
}

/// Linear equation `F(x) B₂(x) = R̂^{-1} B₂(x) F(x)`.
pub fn check_abrr(suite: &str, f: &Recipe, legs: [u32; 2], trunc: Option<u32>, expect: Expect) -> IdentityReport {
    run(IdentityReport::new(suite, "abrr", &legs).with_truncation(trunc), |rep| {
        let mut ev = Evaluator::new(&RepSpace::new(&legs));
        let g = legs2(&[0], &[1]);
        let fx = ev.eval(f, &g)?;
        let b2 = ev.eval(&elements::big_b_pow(1, 1), &g)?;
        let ri = ev.eval(&elements::rhat_inv(), &g)?;
        rep.compare(&fx.mul(&b2)?, &Operator::product(&[ri, b2, fx])?, expect)
    })
}

/// Zero weight: `[F, Δ(h)] = 0`.
pub fn check_zero_weight(suite: &str, f: &Recipe, legs: &[u32], trunc: Option<u32>) -> IdentityReport {
    run(IdentityReport::new(suite, "zero_weight", legs).with_truncation(trunc), |rep| {
        let groups: Vec<Vec<usize>> = (0..legs.len()).map(|i| vec![i]).collect();
        let op = f.eval(&RepSpace::new(legs), &groups)?;
        Ok(rep.holds(op.is_zero_weight(), || "operator does not commute with the total weight".into()))
    })
}

/// Coboundary equation `F(x) Q₁(xq^{h₂}) Q₂(x) = Δ(Q(x))`.
pub fn check_coboundary(suite: &str, q: &Recipe, f: &Recipe, legs: [u32; 2], trunc: Option<u32>, expect: Expect) -> IdentityReport {
    run(IdentityReport::new(suite, "coboundary", &legs).with_truncation(trunc), |rep| {
        let mut ev = Evaluator::new(&RepSpace::new(&legs));
        let fx = ev.eval(f, &legs2(&[0], &[1]))?;
        let q1s = ev.eval(q, &legs1(&[0]))?.shift(&[1])?;
        let q2 = ev.eval(q, &legs1(&[1]))?;
        let dq = ev.eval(q, &legs1(&[0, 1]))?;
        rep.compare(&Operator::product(&[fx, q1s, q2])?, &dq, expect)
    })
}

/// `δQ = F`, the solved form of the coboundary equation.
pub fn check_delta(suite: &str, identity: &str, q: &Recipe, f: &Recipe, legs: [u32; 2], trunc: Option<u32>, expect: Expect) -> IdentityReport {
    run(IdentityReport::new(suite, identity, &legs).with_truncation(trunc), |rep| {
        let mut ev = Evaluator::new(&RepSpace::new(&legs));
        let d = delta_in(&mut ev, q)?;
        let fx = ev.eval(f, &legs2(&[0], &[1]))?;
        rep.compare(&d, &fx, expect)
    })
}

/// Vertex–IRF relation `R(x) M₁(xq^{h₂}) M₂(x) = M₂(xq^{h₁}) M₁(x) R`.
pub fn check_vertex_irf(suite: &str, m: &Recipe, f: &Recipe, legs: [u32; 2]) -> IdentityReport {
    run(IdentityReport::new(suite, "vertex_irf", &legs), |rep| {
        let mut ev = Evaluator::new(&RepSpace::new(&legs));
        let g = legs2(&[0], &[1]);
        let rx = ev.eval(&dynamical_r(f), &g)?;
        let r = ev.eval(&elements::rmat(), &g)?;
        let m1 = ev.eval(m, &legs1(&[0]))?;
        let m2 = ev.eval(m, &legs1(&[1]))?;
        let lhs = Operator::product(&[rx, m1.shift(&[1])?, m2.clone()])?;
        let rhs = Operator::product(&[m2.shift(&[0])?, m1, r])?;
        rep.compare(&lhs, &rhs, Expect::Exact)
    })
}

/// Two recipes agree, each evaluated with its own slot binding.
pub fn check_equal(suite: &str, identity: &str, legs: &[u32], lhs: (&Recipe, &[Vec<usize>]), rhs: (&Recipe, &[Vec<usize>]), expect: Expect) -> IdentityReport {
    run(IdentityReport::new(suite, identity, legs), |rep| {
        let mut ev = Evaluator::new(&RepSpace::new(legs));
        let a = ev.eval(lhs.0, lhs.1)?;
        let b = ev.eval(rhs.0, rhs.1)?;
        rep.compare(&a, &b, expect)
    })
}

/// Group-like property `δg = 1`.
pub fn check_grouplike(suite: &str, name: &str, g: &Recipe, legs: [u32; 2]) -> IdentityReport {
    run(IdentityReport::new(suite, &format!("grouplike.{name}"), &legs), |rep| {
        let d = delta(g, legs[0], legs[1])?;
        rep.compare(&d, &Operator::identity(&RepSpace::new(&legs)), Expect::Exact)
    })
}

/// `δ(gQ) = Δ(g) δQ Δ(g)^{-1}` for a group-like `g`.
pub fn check_conjugation(suite: &str, name: &str, g: &Recipe, q: &Recipe, legs: [u32; 2]) -> IdentityReport {
    run(IdentityReport::new(suite, &format!("conjugation.{name}"), &legs), |rep| {
        let mut ev = Evaluator::new(&RepSpace::new(&legs));
        let lhs = delta_in(&mut ev, &g.then(q))?;
        let dg = ev.eval(g, &legs1(&[0, 1]))?;
        let rhs = Operator::product(&[dg.clone(), delta_in(&mut ev, q)?, dg.invert()?])?;
        rep.compare(&lhs, &rhs, Expect::Exact)
    })
}

/// Lemma tower at `𝒥`: `F^{(p)} = Δ(M^{(p)}) 𝒥 M^{(p)}₂^{-1} M^{(p)}₁(xq^{h₂})^{-1}`.
pub fn lemma_f(ev: &mut Evaluator, p: u32, j: &Recipe) -> Result<Operator> {
    let m = elements::m_tower(p);
    let dm = ev.eval(&m, &legs1(&[0, 1]))?;
    let jj = ev.eval(j, &legs2(&[0], &[1]))?;
    let m2 = ev.eval(&m, &legs1(&[1]))?;
    let m1s = ev.eval(&m, &legs1(&[0]))?.shift(&[1])?;
    Operator::product(&[dm, jj, m2.invert()?, m1s.invert()?])
}

/// `G = F^{(0)-1} Δ(B)^{-1} F^{(1)} Δ(B)`.
pub fn lemma_g(ev: &mut Evaluator, j: &Recipe) -> Result<Operator> {
    let f0 = lemma_f(ev, 0, j)?;
    let f1 = lemma_f(ev, 1, j)?;
    let db = ev.eval(&elements::big_b(), &legs1(&[0, 1]))?;
    Operator::product(&[f0.invert()?, db.invert()?, f1, db])
}

/// The commutator `[G v(xq^{h₂})₁ B(xq^{h₂})₁^{-1}, M⁰(xq^{h₂})₁ X₂ M⁰(xq^{h₂})₁^{-1}]`
/// with `X = v(x) B(x)^{-1}` (`inverted = false`) or `X = B(x) v(x)^{-1}`.
pub fn lemma_commutator(ev: &mut Evaluator, j: &Recipe, inverted: bool) -> Result<Operator> {
    let g = lemma_g(ev, j)?;
    let vb = elements::v_x().then(&elements::big_b_pow(0, -1));
    let vb1s = ev.eval(&vb, &legs1(&[0]))?.shift(&[1])?;
    let x2 = if inverted { vb.inverse() } else { vb };
    let x2 = ev.eval(&x2, &legs1(&[1]))?;
    let m0s = ev.eval(&elements::m_tower(0), &legs1(&[0]))?.shift(&[1])?;
    let a = g.mul(&vb1s)?;
    let c = Operator::product(&[m0s.clone(), x2, m0s.invert()?])?;
    a.commutator(&c)
}

/// Checks the lemma at the instance `v(x) = b^{-1} v b`, `u(x) = x^{h/2} u x^{-h/2}`.
pub fn lemma_recursion(suite: &str, j: &Recipe, p_max: u32, legs: [u32; 2], cap: u32) -> Vec<IdentityReport> {
    let space = RepSpace::new(&legs);
    let g2 = legs2(&[0], &[1]);
    let mut out = vec![
        run(IdentityReport::new(suite, "lemma.F0_is_identity", &legs), |rep| {
            let f0 = lemma_f(&mut Evaluator::new(&space), 0, j)?;
            rep.compare(&f0, &Operator::identity(&space), Expect::Exact)
        }),
        run(IdentityReport::new(suite, "lemma.F1_is_rhat_inverse", &legs), |rep| {
            let mut ev = Evaluator::new(&space);
            let f1 = lemma_f(&mut ev, 1, j)?;
            rep.compare(&f1, &ev.eval(&elements::rhat_inv(), &g2)?, Expect::Exact)
        }),
        run(IdentityReport::new(suite, "lemma.G_is_rhat_inverse", &legs), |rep| {
            let mut ev = Evaluator::new(&space);
            let g = lemma_g(&mut ev, j)?;
            rep.compare(&g, &ev.eval(&elements::rhat_inv(), &g2)?, Expect::Exact)
        }),
        run(IdentityReport::new(suite, "lemma.commutation_hypothesis", &legs), |rep| {
            let c = lemma_commutator(&mut Evaluator::new(&space), j, false)?;
            rep.compare(&c, &Operator::zero(&space), Expect::Exact)
        }),
        run(IdentityReport::new(suite, "lemma.commutation_derived", &legs), |rep| {
            let c = lemma_commutator(&mut Evaluator::new(&space), j, true)?;
            rep.compare(&c, &Operator::zero(&space), Expect::Exact)
        }),
        run(IdentityReport::new(suite, "lemma.asymptotic_F0", &legs), |rep| {
            let mut ev = Evaluator::new(&space);
            let f0 = lemma_f(&mut ev, 0, j)?;
            let db = ev.eval(&elements::big_b(), &legs1(&[0, 1]))?;
            let conj = Operator::product(&[db.pow(3)?, f0, db.invert()?.pow(3)?])?;
            rep.compare(&conj, &Operator::identity(&space), Expect::Exact)
        }),
        run(IdentityReport::new(suite, "lemma.asymptotic_G", &legs), |rep| {
            let mut ev = Evaluator::new(&space);
            let g = lemma_g(&mut ev, j)?;
            let db = ev.eval(&elements::big_b(), &legs1(&[0, 1]))?;
            let conj = Operator::product(&[db.pow(3)?, g, db.invert()?.pow(3)?])?;
            rep.compare(&conj, &ev.eval(&elements::rhat_inv(), &g2)?, Expect::Exact)
        }),
    ];
    // B^k v(x)^{-1} B^{-k} -> 1 at large x, tested on the first leg alone.
    let single = RepSpace::single(legs[0]);
    let mut prev: Option<Agreement> = None;
    for k in [1u32, 2, 4] {
        out.push(run(IdentityReport::new(suite, "lemma.asymptotic_v", &legs[..1]).with_truncation(Some(k)), |rep| {
            let ki = k as i32;
            let r = Recipe::product(vec![elements::big_b_pow(0, ki), elements::v_x().inverse(), elements::big_b_pow(0, -ki)]);
            let op = r.eval(&single, &legs1(&[0]))?;
            let rep = rep.compare(&op, &Operator::identity(&single), Expect::Order { anchor: Anchor::Infinity, cap, min_order: 1 })?;
            let cur = order_of(&rep);
            let ok = prev.is_none_or(|p| cur.rank() >= p.rank());
            prev = Some(cur);
            Ok(rep.holds(ok, || "agreement order decreased".into()))
        }));
    }
    let mut prev: Option<Agreement> = None;
    for p in 1..=p_max {
        out.push(run(IdentityReport::new(suite, "lemma.tower_vs_F_series", &legs).with_truncation(Some(p)), |rep| {
            let mut ev = Evaluator::new(&space);
            let fp = lemma_f(&mut ev, p, j)?;
            let fs = ev.eval(&elements::f_series(), &g2)?;
            let rep = rep.compare(&fp, &fs, Expect::Order { anchor: Anchor::Infinity, cap, min_order: 1 })?;
            let cur = order_of(&rep);
            let ok = prev.is_none_or(|pr| cur.rank() > pr.rank() || cur == Agreement::Exact);
            prev = Some(cur);
            Ok(rep.holds(ok, || "agreement order did not increase".into()))
        }));
    }
    out
}

/// Agreement recorded in a report.
pub fn order_of(rep: &IdentityReport) -> Agreement {
    match (rep.verdict, rep.order) {
        (Verdict::Exact, _) => Agreement::Exact,
        (_, Some(k)) => Agreement::Order(k),
        _ => Agreement::Order(0),
    }
}
