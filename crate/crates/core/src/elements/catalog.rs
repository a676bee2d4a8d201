//! Named elements as recipes.
//!
//! Scalars use `t = q^{1/4}` and `y = x^{1/2}`: `q^a` is `t^{4a}`, `x^a` is
//! `y^{2a}`.

use serde::Serialize;

use super::recipe::{Gen, Recipe};
use crate::error::{Error, Result};
use crate::qscalar::{qfactorial_inv, qfactorial_sym_inv, qpochhammer, qpochhammer_inv, Base, QScalar};

fn q(a: i32) -> QScalar {
    QScalar::q_pow(a)
}

fn x(a: i32) -> QScalar {
    QScalar::y_pow(2 * a)
}

fn q_minus_qinv() -> QScalar {
    q(1).sub(&q(-1))
}

fn sign(k: u32) -> QScalar {
    QScalar::from_int(if k % 2 == 0 { 1 } else { -1 })
}

/// `(q²x²;q²)_n`.
pub fn pochh_q2x2_scalar(n: i64) -> Result<QScalar> {
    qpochhammer(&q(2).mul(&x(2)), &q(2), n)
}

/// `1 / (q²x²;q²)_n`.
pub fn pochh_q2x2_inv(n: i64) -> Result<QScalar> {
    qpochhammer_inv(&q(2).mul(&x(2)), &q(2), n)
}

/// `(x;q)_n`.
pub fn pochh_x_scalar(n: i64) -> Result<QScalar> {
    qpochhammer(&x(1), &q(1), n)
}

/// `R̂ = exp_{q^{-1}}((q - q^{-1}) e ⊗ f)`.
pub fn rhat() -> Recipe {
    Recipe::gen(0, Gen::E).then(&Recipe::gen(1, Gen::F)).scale(q_minus_qinv()).qexp(Base::QInv)
}

/// `R̂^{-1} = exp_q(-(q - q^{-1}) e ⊗ f)`.
pub fn rhat_inv() -> Recipe {
    Recipe::gen(0, Gen::E).then(&Recipe::gen(1, Gen::F)).scale(q_minus_qinv().neg()).qexp(Base::Q)
}

/// `q^{h ⊗ h / 2}`.
pub fn q_hh(num: i32, den: i32) -> Recipe {
    Recipe::diag(&[0, 1], "q^{h⊗h}", move |w| Ok(QScalar::t_pow(4 * num * w[0] * w[1] / den)))
}

/// `R = q^{h⊗h/2} R̂`.
pub fn rmat() -> Recipe {
    q_hh(1, 2).then(&rhat())
}

/// `B(x)^k = x^{kh} q^{kh²/2}`.
pub fn big_b_pow(slot: usize, k: i32) -> Recipe {
    Recipe::hfun(slot, "B^k", move |mu| QScalar::monomial(1, 2 * k * mu * mu, 2 * k * mu))
}

pub fn big_b() -> Recipe {
    big_b_pow(0, 1)
}

/// `b(x) = q^{h²/4} x^{h/2}`.
pub fn small_b() -> Recipe {
    Recipe::hfun(0, "b", |mu| QScalar::monomial(1, mu * mu, mu))
}

/// `q^{c h²/4}`.
pub fn q_h2_quarter(slot: usize, c: i32) -> Recipe {
    Recipe::hfun(slot, "q^{h²/4}", move |mu| QScalar::t_pow(c * mu * mu))
}

/// `x^{c h/2}`.
pub fn x_h_half(slot: usize, c: i32) -> Recipe {
    Recipe::hfun(slot, "x^{h/2}", move |mu| QScalar::y_pow(c * mu))
}

/// `u = exp_q(e)`.
pub fn u_elem() -> Recipe {
    Recipe::gen(0, Gen::E).qexp(Base::Q)
}

/// `v = exp_{q^{-1}}(f)`.
pub fn v_elem() -> Recipe {
    Recipe::gen(0, Gen::F).qexp(Base::QInv)
}

/// `w = v q^{-h²/4} u^{-1} q^{-h²/4} v`.
pub fn w_elem() -> Recipe {
    let v = v_elem();
    let s = q_h2_quarter(0, -1);
    Recipe::product(vec![v.clone(), s.clone(), u_elem().inverse(), s, v])
}

/// `w = u^{-1} q^{-h²/4} v q^{-h²/4} u^{-1}`.
pub fn w_alt() -> Recipe {
    let ui = u_elem().inverse();
    let s = q_h2_quarter(0, -1);
    Recipe::product(vec![ui.clone(), s.clone(), v_elem(), s, ui])
}

/// `q^{-h²/4} w u^{-1} w^{-1} q^{h²/4}`, which reconstructs `v`.
pub fn v_from_w() -> Recipe {
    let w = w_elem();
    Recipe::product(vec![q_h2_quarter(0, -1), w.clone(), u_elem().inverse(), w.inverse(), q_h2_quarter(0, 1)])
}

/// Scalar part `(-1)^k (q-q^{-1})^k q^{k(1-k)} / (k)_{q^{-1}}!` of the
/// `k`-th term of the twist series.
fn twist_coefficient(k: u32) -> Result<QScalar> {
    let k_i = k as i32;
    Ok(sign(k).mul(&q_minus_qinv().pow(k_i)?).mul(&q(k_i * (1 - k_i))).mul(&qfactorial_inv(k as i64, Base::QInv)?))
}

/// The twist series. Its `k`-th denominator
/// `∏_{j=1}^k (1 - x^{-2} q^{-2j-2(h₂+k-1)})` stands left of `e^k ⊗ f^k`,
/// so `h₂` is the weight of the second factor after `f^k` acts.
pub fn f_series() -> Recipe {
    f_series_with_offset(true)
}

/// The twist series with denominator `∏_{j=1}^k (1 - x^{-2} q^{-2j-2h₂})`
/// left of `e^k ⊗ f^k`. Kept to document that it fails the twist equations
/// for `k ≥ 2`.
pub fn f_series_printed() -> Recipe {
    f_series_with_offset(false)
}

fn f_series_with_offset(shifted: bool) -> Recipe {
    Recipe::index_sum("F_series", &[0, 1], move |k| {
        let c = twist_coefficient(k)?;
        let off = if shifted { k as i32 - 1 } else { 0 };
        let den = Recipe::diag(&[1], "F_series denominator", move |w| {
            let mut d = QScalar::one();
            for j in 1..=k as i32 {
                d = d.mul(&QScalar::one().sub(&x(-2).mul(&q(-2 * j - 2 * (w[0] + off)))).inv()?);
            }
            Ok(d)
        });
        let ef = Recipe::gen(0, Gen::E).pow(k).then(&Recipe::gen(1, Gen::F).pow(k));
        Ok(Some(den.then(&ef).scale(c)))
    })
}

/// `∏_{k=0}^{K} B₂^k R̂^{-1} B₂^{-k}`, leftmost factor `k = 0`.
pub fn f_prod_large(trunc: u32) -> Recipe {
    let ri = rhat_inv();
    Recipe::product((0..=trunc as i32).map(|k| Recipe::product(vec![big_b_pow(1, k), ri.clone(), big_b_pow(1, -k)])).collect())
}

/// `∏_{k=0}^{K} B₂^{-k-1} R̂ B₂^{k+1}`, leftmost factor `k = 0`.
pub fn f_prod_small(trunc: u32) -> Recipe {
    let r = rhat();
    Recipe::product((0..=trunc as i32).map(|k| Recipe::product(vec![big_b_pow(1, -k - 1), r.clone(), big_b_pow(1, k + 1)])).collect())
}

/// `1 / ∏_{j=1}^n (x q^j - x^{-1} q^{-j})`.
fn m_denominator_inv(n: u32) -> Result<QScalar> {
    (1..=n as i32).try_fold(QScalar::one(), |acc, j| Ok(acc.mul(&x(1).mul(&q(j)).sub(&x(-1).mul(&q(-j))).inv()?)))
}

/// The coboundary element
/// `M(x) = Σ_{n,m} (-1)^m x^m q^{n(n-1)/2 + m(n-m)} / ([m]![n]! ∏_{j=1}^n (xq^j - x^{-1}q^{-j})) E₊^n E₋^m q^{(n+m)h/2}`.
pub fn m_babelon() -> Recipe {
    Recipe::index_sum("M.n", &[0], |n| {
        Ok(Some(Recipe::index_sum("M.m", &[0], move |m| {
            let (ni, mi) = (n as i32, m as i32);
            let c = sign(m)
                .mul(&x(mi))
                .mul(&q(ni * (ni - 1) / 2 + mi * (ni - mi)))
                .mul(&qfactorial_sym_inv(m as i64)?)
                .mul(&qfactorial_sym_inv(n as i64)?)
                .mul(&m_denominator_inv(n)?);
            let body = Recipe::product(vec![
                Recipe::gen(0, Gen::EPlus).pow(n),
                Recipe::gen(0, Gen::EMinus).pow(m),
                Recipe::hfun(0, "q^{(n+m)h/2}", move |mu| QScalar::t_pow(2 * (ni + mi) * mu)),
            ]);
            Ok(Some(body.scale(c)))
        })))
    })
}

/// `N₊ = exp_{q^{-1}}(-x e)`.
pub fn n_plus() -> Recipe {
    Recipe::gen(0, Gen::E).scale(x(1).neg()).qexp(Base::QInv)
}

/// `∏_{k=K}^{0} exp_{q^{-1}}(q^{-(2k+1)(h+1)} x^{-2k-1} f)`, leftmost factor `k = K`.
pub fn n_minus(trunc: u32) -> Recipe {
    Recipe::product(
        (0..=trunc as i32)
            .rev()
            .map(|k| {
                let pre = Recipe::hfun(0, "q^{-(2k+1)(h+1)}", move |mu| q(-(2 * k + 1) * (mu + 1)).mul(&x(-2 * k - 1)));
                pre.then(&Recipe::gen(0, Gen::F)).qexp(Base::QInv)
            })
            .collect(),
    )
}

/// `(q²x²;q²)_h`.
pub fn pochh_q2x2() -> Recipe {
    Recipe::diag(&[0], "(q²x²;q²)_h", |w| pochh_q2x2_scalar(w[0] as i64))
}

/// `(x;q)_h`.
pub fn pochh_h() -> Recipe {
    Recipe::diag(&[0], "(x;q)_h", |w| pochh_x_scalar(w[0] as i64))
}

/// Factorial used in the reordered sum over `f^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Factorial {
    /// `[k]_q!`.
    Symmetric,
    /// `(k)_{q^{-1}}!`.
    QInv,
}

impl Factorial {
    fn eval_inv(self, k: u32) -> Result<QScalar> {
        match self {
            Factorial::Symmetric => qfactorial_sym_inv(k as i64),
            Factorial::QInv => qfactorial_inv(k as i64, Base::QInv),
        }
    }
}

/// `Σ_k q^{k(k+1)/2} (-x)^k q^{kh} / ((q²x²;q²)_{h+k} k!) f^k`, with the
/// `h`-dependent factor left of `f^k`. Multiplied on the right by `N₊` it
/// reproduces `M(x)`.
pub fn m_reordered_minus_with(fac: Factorial) -> Recipe {
    Recipe::index_sum("m_reordered_minus", &[0], move |k| {
        let ki = k as i32;
        let c = q(ki * (ki + 1) / 2).mul(&x(ki)).mul(&sign(k)).mul(&fac.eval_inv(k)?);
        let d = Recipe::diag(&[0], "q^{kh}/(q²x²;q²)_{h+k}", move |w| Ok(q(ki * w[0]).mul(&pochh_q2x2_inv((w[0] + ki) as i64)?)));
        Ok(Some(d.then(&Recipe::gen(0, Gen::F).pow(k)).scale(c)))
    })
}

pub fn m_reordered_minus() -> Recipe {
    m_reordered_minus_with(Factorial::Symmetric)
}

/// `Ñ₋ = (q²x²;q²)_h · Σ_k …`, the limit of [`n_minus`].
pub fn tilde_n_minus() -> Recipe {
    pochh_q2x2().then(&m_reordered_minus())
}

/// `N = N₋ N₊` with `N₋` truncated at `K`.
pub fn n_full(trunc: u32) -> Recipe {
    n_minus(trunc).then(&n_plus())
}

/// Weight-`r` part of `M(x)` written with `e` left of `f`:
/// `Σ_n (-x)^m q^{-n} q^{m(m+1)/2} / ([m]![n]! ∏_{j=1}^n (xq^j - x^{-1}q^{-j})) q^{mh} e^n f^m`, `m = n - r`.
pub fn weight_component_left(r: i32) -> Recipe {
    Recipe::index_sum("leftweight", &[0], move |n| {
        let m = n as i32 - r;
        if m < 0 {
            return Ok(None);
        }
        let ni = n as i32;
        let c = sign(m as u32)
            .mul(&x(m))
            .mul(&q(-ni + m * (m + 1) / 2))
            .mul(&qfactorial_sym_inv(m as i64)?)
            .mul(&qfactorial_sym_inv(n as i64)?)
            .mul(&m_denominator_inv(n)?);
        let body = Recipe::product(vec![
            Recipe::hfun(0, "q^{mh}", move |mu| q(m * mu)),
            Recipe::gen(0, Gen::E).pow(n),
            Recipe::gen(0, Gen::F).pow(m as u32),
        ]);
        Ok(Some(body.scale(c)))
    })
}

/// Weight-`r` part of `M(x)` written with `f` left of `e`:
/// `Σ_k q^{k(k+1)/2} (-x)^k / k! · (-x)^l / (l)_{q^{-1}}! · q^{kh} / (q²x²;q²)_{h+k} f^k e^l`, `l = k + r`.
pub fn weight_component_right(r: i32, fac: Factorial) -> Recipe {
    Recipe::index_sum("rightweight", &[0], move |k| {
        let ki = k as i32;
        let l = ki + r;
        if l < 0 {
            return Ok(None);
        }
        let c = q(ki * (ki + 1) / 2)
            .mul(&sign(k))
            .mul(&x(ki))
            .mul(&sign(l as u32))
            .mul(&x(l))
            .mul(&fac.eval_inv(k)?)
            .mul(&qfactorial_inv(l as i64, Base::QInv)?);
        let d = Recipe::diag(&[0], "q^{kh}/(q²x²;q²)_{h+k}", move |w| Ok(q(ki * w[0]).mul(&pochh_q2x2_inv((w[0] + ki) as i64)?)));
        let body = Recipe::product(vec![d, Recipe::gen(0, Gen::F).pow(k), Recipe::gen(0, Gen::E).pow(l as u32)]);
        Ok(Some(body.scale(c)))
    })
}

/// `v(x) = b(x)^{-1} v b(x)`.
pub fn v_x() -> Recipe {
    let b = small_b();
    Recipe::product(vec![b.inverse(), v_elem(), b])
}

/// `u(x) = x^{h/2} u x^{-h/2}`.
pub fn u_x() -> Recipe {
    Recipe::product(vec![x_h_half(0, 1), u_elem(), x_h_half(0, -1)])
}

/// `M^{(p)} = ∏_{k=p}^{1} B^k v(x) B^{-k} · u(x)^{-1}`, leftmost factor `k = p`.
pub fn m_tower(p: u32) -> Recipe {
    let vx = v_x();
    let mut items: Vec<Recipe> =
        (1..=p as i32).rev().map(|k| Recipe::product(vec![big_b_pow(0, k), vx.clone(), big_b_pow(0, -k)])).collect();
    items.push(u_x().inverse());
    Recipe::product(items)
}

/// A catalog entry.
#[derive(Clone, Debug)]
pub struct Element {
    pub name: String,
    pub arity: usize,
    pub truncation: Option<u32>,
    pub recipe: Recipe,
}

/// Stable identifiers accepted by [`element`].
pub const CATALOG: &[&str] =
    &["rhat", "r", "B", "b", "u", "v", "w", "F_series", "F_prod_large", "F_prod_small", "M", "N_plus", "N_minus", "tildeN_minus", "N", "pochh_h"];

/// Looks up a catalog element; `trunc` is used by truncated products.
pub fn element(name: &str, trunc: u32) -> Result<Element> {
    let (arity, truncation, recipe) = match name {
        "rhat" => (2, None, rhat()),
        "r" => (2, None, rmat()),
        "B" => (1, None, big_b()),
        "b" => (1, None, small_b()),
        "u" => (1, None, u_elem()),
        "v" => (1, None, v_elem()),
        "w" => (1, None, w_elem()),
        "F_series" => (2, None, f_series()),
        "F_prod_large" => (2, Some(trunc), f_prod_large(trunc)),
        "F_prod_small" => (2, Some(trunc), f_prod_small(trunc)),
        "M" => (1, None, m_babelon()),
        "N_plus" => (1, None, n_plus()),
        "N_minus" => (1, Some(trunc), n_minus(trunc)),
        "tildeN_minus" => (1, None, tilde_n_minus()),
        "N" => (1, Some(trunc), n_full(trunc)),
        "pochh_h" => (1, None, pochh_h()),
        _ => return Err(Error::UnknownElement(name.into())),
    };
    Ok(Element { name: name.into(), arity, truncation, recipe })
}

/// Evaluates a catalog element on `V_{dims[0]} ⊗ ...`, one slot per leg.
pub fn evaluate(name: &str, dims: &[u32], trunc: u32) -> Result<crate::repr::Operator> {
    let el = element(name, trunc)?;
    if dims.len() != el.arity {
        return Err(Error::Arity { expected: el.arity, got: dims.len() });
    }
    let groups: Vec<Vec<usize>> = (0..dims.len()).map(|i| vec![i]).collect();
    el.recipe.eval(&crate::repr::RepSpace::new(dims), &groups)
}

/// Text form of [`evaluate`]: a header, then `[row,col] entry` for each
/// nonzero entry in row-major order.
pub fn render(name: &str, dims: &[u32], trunc: u32) -> Result<String> {
    let op = evaluate(name, dims, trunc)?;
    let legs: Vec<String> = dims.iter().map(|p| format!("V_{p}")).collect();
    let n = op.space().dim();
    let mut out = format!("{name} on {} (dim {n})\n", legs.join(" ⊗ "));
    for r in 0..n {
        for c in 0..n {
            let v = op.get(r, c);
            if !v.is_zero() {
                out.push_str(&format!("[{r},{c}] {}\n", v.canonical_string()));
            }
        }
    }
    Ok(out)
}
