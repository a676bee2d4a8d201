//! Basic hypergeometric `₂φ₂` series in arbitrary precision and the
//! transformation identity relating two of them.
//!
//! `₂φ₂(a, b; c, d; q)(z) = Σ_n (a;q)_n (b;q)_n / ((q;q)_n (c;q)_n (d;q)_n) · s_n · z^n`
//! where `s_n = (-1)^n q^{n(n-1)/2}` in the Gasper–Rahman convention and
//! `s_n = 1` in the plain one.

use dashu_float::ops::SquareRoot;
use dashu_float::DBig;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dyncalc::{run, IdentityReport, Verdict, Witness};
use crate::elements;
use crate::error::{Error, Result};
use crate::qscalar::QScalar;
use crate::repr::RepSpace;

/// Working precision in decimal digits.
pub const PRECISION: usize = 50;
/// Relative tolerance of the transformation check.
pub const TRANSFORM_TOL_DIGITS: u32 = 25;
/// Relative tolerance of the three-way action check.
pub const ACTION_TOL_DIGITS: u32 = 20;
/// Terms below this magnitude end a series.
pub const TAIL_DIGITS: u32 = 35;
/// Seed of the sampled parameter points.
pub const SAMPLE_SEED: u64 = 0x2f22_5eed;
/// Number of sampled parameter points.
pub const SAMPLE_COUNT: usize = 25;

/// Dynamical parameter `x` of the action checks.
pub const ACTION_X: (i64, i64) = (1, 5);
/// Quantum parameter `q` of the action checks.
pub const ACTION_Q: (i64, i64) = (1, 3);
/// `(a, b, c, d) = (q², q³, q⁵, q⁷)` at `q = 1/3`.
pub const POWER_POINT: SamplePoint = SamplePoint { a: (1, 9), b: (1, 27), c: (1, 243), d: (1, 2187), q: (1, 3) };

const MAX_TERMS: usize = 10_000;

/// Arbitrary-precision real with a fixed number of decimal digits.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct BigReal(DBig);

impl BigReal {
    fn wrap(x: DBig) -> Self {
        BigReal(x.with_precision(PRECISION).value())
    }

    pub fn from_int(n: i64) -> Self {
        Self::wrap(DBig::from(n))
    }

    pub fn from_big(n: &BigInt) -> Self {
        Self::wrap(n.to_string().parse::<DBig>().expect("integer literal"))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_int(n).div(&Self::from_int(d))
    }

    /// `10^{-k}`.
    pub fn ten_pow_neg(k: u32) -> Self {
        Self::wrap(DBig::from_parts(1.into(), -(k as isize)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::wrap(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::wrap(&self.0 - &o.0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::wrap(&self.0 * &o.0)
    }

    pub fn div(&self, o: &Self) -> Self {
        Self::wrap(&self.0 / &o.0)
    }

    pub fn neg(&self) -> Self {
        BigReal(-&self.0)
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0 == DBig::ZERO
    }

    /// Zero up to the last few working digits, as left by rounding.
    pub fn is_negligible(&self) -> bool {
        self.abs() < Self::ten_pow_neg(PRECISION as u32 - 5)
    }

    pub fn is_negative(&self) -> bool {
        self.0 < DBig::ZERO
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.0.sqrt())
    }

    pub fn powi(&self, n: i64) -> Result<Self> {
        if n < 0 {
            if self.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(Self::one().div(&self.powi(-n)?));
        }
        let (mut acc, mut base, mut e) = (Self::one(), self.clone(), n as u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// Decimal digits of agreement `⌊-log10 |self|⌋`, capped at the precision.
    pub fn digits_below_one(&self) -> u32 {
        let a = self.abs();
        (0..PRECISION as u32).take_while(|&k| a < Self::ten_pow_neg(k + 1)).count() as u32
    }
}

impl std::fmt::Display for BigReal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Series convention of `₂φ₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// With the factor `(-1)^n q^{n(n-1)/2}`.
    GasperRahman,
    /// Without it.
    Plain,
}

impl Convention {
    pub fn tag(self) -> &'static str {
        match self {
            Convention::GasperRahman => "gr",
            Convention::Plain => "plain",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Phi22Params {
    pub a: BigReal,
    pub b: BigReal,
    pub c: BigReal,
    pub d: BigReal,
    pub q: BigReal,
    pub z: BigReal,
}

fn check_base(q: &BigReal) -> Result<()> {
    if q.abs() >= BigReal::one() {
        return Err(Error::Invalid(format!("|q| must be below 1, got {q}")));
    }
    Ok(())
}

/// `(a; q)_n`, with `1 / ∏_{j=1}^{-n} (1 - a q^{-j})` for negative `n`.
pub fn pochhammer(a: &BigReal, q: &BigReal, n: i64) -> Result<BigReal> {
    let one = BigReal::one();
    if n >= 0 {
        let (mut acc, mut pw) = (one.clone(), a.clone());
        for _ in 0..n {
            acc = acc.mul(&one.sub(&pw));
            pw = pw.mul(q);
        }
        return Ok(acc);
    }
    let mut den = one.clone();
    for j in 1..=-n {
        den = den.mul(&one.sub(&a.mul(&q.powi(-j)?)));
    }
    if den.is_negligible() {
        return Err(Error::Pole(format!("({a}; {q})_{n}")));
    }
    Ok(one.div(&den))
}

/// `(a; q)_∞`, stopping once `|a q^j| < tol (1 - |q|)`.
pub fn pochhammer_inf(a: &BigReal, q: &BigReal, tol_digits: u32) -> Result<BigReal> {
    check_base(q)?;
    let one = BigReal::one();
    let cutoff = BigReal::ten_pow_neg(tol_digits).mul(&one.sub(&q.abs()));
    let (mut acc, mut pw) = (one.clone(), a.clone());
    for _ in 0..MAX_TERMS {
        if pw.abs() < cutoff {
            return Ok(acc);
        }
        acc = acc.mul(&one.sub(&pw));
        pw = pw.mul(q);
    }
    Err(Error::Invalid("infinite product did not converge".into()))
}

/// Sums the series until the geometric tail bound `|t_n| / (1 - |t_n/t_{n-1}|)`
/// falls below `10^{-tol_digits}`. Past the first few terms the ratio tends
/// monotonically to its limit, which is `0` under the Gasper–Rahman
/// convention and `z` under the plain one.
pub fn phi22(p: &Phi22Params, tol_digits: u32, conv: Convention) -> Result<BigReal> {
    check_base(&p.q)?;
    let one = BigReal::one();
    let tol = BigReal::ten_pow_neg(tol_digits);
    let mut sum = one.clone();
    let mut term = one.clone();
    let mut qn = one.clone();
    for n in 0..MAX_TERMS {
        let den = one.sub(&qn.mul(&p.q)).mul(&one.sub(&p.c.mul(&qn))).mul(&one.sub(&p.d.mul(&qn)));
        if den.is_negligible() {
            return Err(Error::Pole(format!("denominator Pochhammer vanishes at n = {n}")));
        }
        let mut ratio = one.sub(&p.a.mul(&qn)).mul(&one.sub(&p.b.mul(&qn))).mul(&p.z).div(&den);
        if conv == Convention::GasperRahman {
            ratio = ratio.mul(&qn).neg();
        }
        term = term.mul(&ratio);
        sum = sum.add(&term);
        let rho = ratio.abs();
        if term.is_zero() || (rho < one && term.abs().div(&one.sub(&rho)) < tol) {
            return Ok(sum);
        }
        qn = qn.mul(&p.q);
    }
    Err(Error::Invalid("series did not converge".into()))
}

/// Both sides of
/// `₂φ₂(a,b;c,d;q)(cd/ab) = (cd/ab;q)_∞ / (d;q)_∞ · ₂φ₂(c/a,c/b;c,cd/ab;q)(d)`.
pub fn transform_sides(a: &BigReal, b: &BigReal, c: &BigReal, d: &BigReal, q: &BigReal, conv: Convention) -> Result<(BigReal, BigReal)> {
    let z = c.mul(d).div(&a.mul(b));
    let lhs = phi22(&Phi22Params { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone(), q: q.clone(), z: z.clone() }, TAIL_DIGITS, conv)?;
    let pre = pochhammer_inf(&z, q, TAIL_DIGITS)?.div(&pochhammer_inf(d, q, TAIL_DIGITS)?);
    let rhs = phi22(&Phi22Params { a: c.div(a), b: c.div(b), c: c.clone(), d: z, q: q.clone(), z: d.clone() }, TAIL_DIGITS, conv)?;
    Ok((lhs, pre.mul(&rhs)))
}

/// `|x - y| / max(|x|, |y|)`, or zero when both vanish.
pub fn relative_difference(x: &BigReal, y: &BigReal) -> BigReal {
    let scale = if x.abs() > y.abs() { x.abs() } else { y.abs() };
    if scale.is_zero() {
        return BigReal::zero();
    }
    x.sub(y).abs().div(&scale)
}

fn numeric_report(mut rep: IdentityReport, values: &[(&str, &BigReal)], min_digits: u32) -> IdentityReport {
    let mut digits = PRECISION as u32;
    let mut worst = (0, 1);
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let d = relative_difference(values[i].1, values[j].1).digits_below_one();
            if d < digits {
                digits = d;
                worst = (i, j);
            }
        }
    }
    rep.order = Some(digits);
    if digits >= min_digits {
        rep.verdict = Verdict::Order;
    } else {
        rep.verdict = Verdict::Fail;
        let (i, j) = worst;
        rep.witness = Some(Witness { row: i, col: j, lhs: format!("{}={}", values[i].0, values[i].1), rhs: format!("{}={}", values[j].0, values[j].1) });
    }
    rep
}

/// One admissible parameter point `(a, b, c, d, q)` given as rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplePoint {
    pub a: (i64, i64),
    pub b: (i64, i64),
    pub c: (i64, i64),
    pub d: (i64, i64),
    pub q: (i64, i64),
}

impl SamplePoint {
    fn lift(&self) -> [BigReal; 5] {
        let r = |(n, d): (i64, i64)| BigReal::ratio(n, d);
        [r(self.a), r(self.b), r(self.c), r(self.d), r(self.q)]
    }
}

/// The fixed-seed sample: parameters in `(-0.9, 0.9)` with step `1/1000`,
/// `q` in `[0.1, 0.5]`, and `|cd/ab| ≤ 0.95` so the right side stays admissible.
pub fn sample_points() -> Vec<SamplePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut out = Vec::with_capacity(SAMPLE_COUNT);
    while out.len() < SAMPLE_COUNT {
        let mut draw = || loop {
            let k: i64 = rng.gen_range(-900..=900);
            if k.abs() >= 50 {
                return (k, 1000);
            }
        };
        let (a, b, c, d) = (draw(), draw(), draw(), draw());
        let q = (rng.gen_range(100..=500), 1000);
        let z = (c.0 * d.0) as f64 / (a.0 * b.0) as f64;
        if z.abs() <= 0.95 {
            out.push(SamplePoint { a, b, c, d, q });
        }
    }
    out
}

/// Checks the transformation at one rational point.
pub fn check_transform(suite: &str, label: &str, pt: &SamplePoint, conv: Convention) -> IdentityReport {
    let rep = IdentityReport::new(suite, &format!("hyper.transform.{label}[{}]", conv.tag()), &[]);
    run(rep, |rep| {
        let [a, b, c, d, q] = pt.lift();
        let (l, r) = transform_sides(&a, &b, &c, &d, &q, conv)?;
        Ok(numeric_report(rep, &[("lhs", &l), ("rhs", &r)], TRANSFORM_TOL_DIGITS))
    })
}

/// `(a, b; c, d)` of the left side arising from `M(x)` on `V_p`, weight `r`,
/// column `k`, in base `q²`: `(q^{2(k+1)}, q^{2(k-p)}; q^{2(r+1)}, x² q^{2(r+1)})`.
pub fn action_parameters(p: u32, k: u32, r: u32, x: &BigReal, q: &BigReal) -> Result<[BigReal; 5]> {
    let (p, k, r) = (p as i64, k as i64, r as i64);
    let q2 = q.mul(q);
    Ok([q2.powi(k + 1)?, q2.powi(k - p)?, q2.powi(r + 1)?, x.mul(x).mul(&q2.powi(r + 1)?), q2])
}

/// Transformation at the specialization `(p, k, r)` with quantum parameter
/// `q` and dynamical parameter `x`.
pub fn check_transform_action(suite: &str, p: u32, k: u32, r: u32, x: (i64, i64), q: (i64, i64), conv: Convention) -> IdentityReport {
    let rep = IdentityReport::new(suite, &format!("hyper.transform.prop2[p={p},k={k},r={r}][{}]", conv.tag()), &[p]);
    run(rep, |rep| {
        let [a, b, c, d, base] = action_parameters(p, k, r, &BigReal::ratio(x.0, x.1), &BigReal::ratio(q.0, q.1))?;
        let (l, r) = transform_sides(&a, &b, &c, &d, &base, conv)?;
        Ok(numeric_report(rep, &[("lhs", &l), ("rhs", &r)], TRANSFORM_TOL_DIGITS))
    })
}

/// Evaluates an exact scalar at `t = q^{1/4}`, `y = x^{1/2}`.
pub fn eval_scalar(s: &QScalar, q: &BigReal, x: &BigReal) -> Result<BigReal> {
    let t = q.sqrt().sqrt();
    let y = x.sqrt();
    let (num, den) = s.num_den();
    let ev = |p: &crate::qscalar::ZPoly| -> Result<BigReal> {
        let mut acc = BigReal::zero();
        for ((a, b), c) in p.terms() {
            acc = acc.add(&BigReal::from_big(&c.to_big()).mul(&t.powi(*a as i64)?).mul(&y.powi(*b as i64)?));
        }
        Ok(acc)
    };
    let d = ev(&den)?;
    if d.is_zero() {
        return Err(Error::Pole(format!("{s} at the chosen point")));
    }
    Ok(ev(&num)?.div(&d))
}

/// `[n]_q!` at a numeric `q`.
fn qfact_sym(n: i64, q: &BigReal) -> Result<BigReal> {
    let mut acc = BigReal::one();
    for j in 1..=n {
        let num = q.powi(j)?.sub(&q.powi(-j)?);
        acc = acc.mul(&num.div(&q.sub(&BigReal::one().div(q))));
    }
    Ok(acc)
}

/// The two displayed coefficients of `v_{k-r}` in `M(x) v_k` for the weight-`r`
/// part, each written with a `₂φ₂`.
pub fn action_coefficients(p: u32, k: u32, r: u32, x: &BigReal, q: &BigReal, conv: Convention) -> Result<(BigReal, BigReal)> {
    let (pi, ki, ri) = (p as i64, k as i64, r as i64);
    let q2 = q.mul(q);
    let x2 = x.mul(x);
    let pre = qfact_sym(pi - ki + ri, q)?.div(&qfact_sym(pi - ki, q)?.mul(&qfact_sym(ri, q)?));
    let mut prod = BigReal::one();
    for j in 1..=ri {
        prod = prod.mul(&x.mul(&q.powi(j)?).sub(&BigReal::one().div(&x.mul(&q.powi(j)?))));
    }
    let arg = x2.mul(&q2.powi(pi - 2 * ki + 2 * ri + 1)?);
    let lphi = phi22(
        &Phi22Params { a: q2.powi(ki + 1)?, b: q2.powi(ki - pi)?, c: q2.powi(ri + 1)?, d: x2.mul(&q2.powi(ri + 1)?), q: q2.clone(), z: arg.clone() },
        TAIL_DIGITS,
        conv,
    )?;
    let lhs = pre.mul(&q.powi(-ri)?).div(&prod).mul(&lphi);
    let rphi = phi22(
        &Phi22Params { a: q2.powi(pi + ri - ki + 1)?, b: q2.powi(ri - ki)?, c: q2.powi(ri + 1)?, d: arg, q: q2.clone(), z: x2.mul(&q2.powi(ri + 1)?) },
        TAIL_DIGITS,
        conv,
    )?;
    let sign = if r % 2 == 0 { BigReal::one() } else { BigReal::from_int(-1) };
    let rpre = pre.mul(&sign).mul(&x.powi(ri)?).mul(&q.powi(ri * (ri - 1) / 2)?).div(&pochhammer(&q2.mul(&x2), &q2, pi - 2 * ki + 2 * ri)?);
    Ok((lhs, rpre.mul(&rphi)))
}

/// Exact matrix element `⟨v_{k-r}| M_r(x) |v_k⟩` of the weight-`r` part of `M(x)` on `V_p`.
pub fn exact_action(p: u32, k: u32, r: u32) -> Result<QScalar> {
    let op = elements::weight_component_left(r as i32).eval(&RepSpace::single(p), &[vec![0]])?;
    Ok(op.get((k - r) as usize, k as usize).clone())
}

/// Three-way agreement of both displayed coefficients and the exact element.
pub fn cross_check_action(suite: &str, p: u32, k: u32, r: u32, x: (i64, i64), q: (i64, i64), conv: Convention) -> IdentityReport {
    let rep = IdentityReport::new(suite, &format!("hyper.action[k={k},r={r}][{}]", conv.tag()), &[p]);
    if r > k || k > p {
        return rep.error(&Error::Invalid(format!("need 0 ≤ r ≤ k ≤ p, got p={p} k={k} r={r}")));
    }
    run(rep, |rep| {
        let (xv, qv) = (BigReal::ratio(x.0, x.1), BigReal::ratio(q.0, q.1));
        let exact = eval_scalar(&exact_action(p, k, r)?, &qv, &xv)?;
        let (l, rr) = action_coefficients(p, k, r, &xv, &qv, conv)?;
        Ok(numeric_report(rep, &[("exact", &exact), ("lhs", &l), ("rhs", &rr)], ACTION_TOL_DIGITS))
    })
}

/// Runs the action cross-check for every `(k, r)` on `V_p` under the
/// Gasper–Rahman convention, retrying under the plain convention only if
/// some case fails. Returns the reports and the convention that validated.
pub fn resolve_convention(suite: &str, p_max: u32, x: (i64, i64), q: (i64, i64)) -> (Vec<IdentityReport>, Option<Convention>) {
    let mut all = Vec::new();
    for conv in [Convention::GasperRahman, Convention::Plain] {
        let reps: Vec<IdentityReport> = (0..=p_max)
            .flat_map(|p| (0..=p).flat_map(move |k| (0..=k).map(move |r| (p, k, r))))
            .map(|(p, k, r)| cross_check_action(suite, p, k, r, x, q, conv))
            .collect();
        let ok = reps.iter().all(|r| r.passed());
        all.extend(reps);
        if ok {
            return (all, Some(conv));
        }
    }
    (all, None)
}
