//! Exact rational functions in `t = q^{1/4}` and `y = x^{1/2}`.
//!
//! A value is stored as `scale · num / (∏ Φ_d(t^a y^b)^e · other)` where
//! `num` is a primitive Laurent polynomial with positive lex-leading
//! coefficient, the `Φ` factors are normalized cyclotomic binomials and
//! `other` is a binomial-free primitive polynomial (usually `1`). The form is
//! fully reduced, so structural equality is value equality.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::cyclo::{self, Cyc};
use super::gcd;
use super::int::Int;
use super::laurent::LaurentPoly;
use super::zpoly::{Exp, ZPoly};
use crate::error::{Error, Result};

/// Reduced rational with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Rat {
    pub n: Int,
    pub d: Int,
}

impl Rat {
    pub const ZERO: Rat = Rat { n: Int::ZERO, d: Int::ONE };
    pub const ONE: Rat = Rat { n: Int::ONE, d: Int::ONE };

    pub fn new(n: Int, d: Int) -> Rat {
        assert!(!d.is_zero(), "zero denominator");
        if n.is_zero() {
            return Rat::ZERO;
        }
        let g = n.gcd(&d);
        let (mut n, mut d) = (n.div_exact(&g), d.div_exact(&g));
        if d.is_negative() {
            n = n.neg();
            d = d.neg();
        }
        Rat { n, d }
    }

    pub fn int(n: Int) -> Rat {
        Rat { n, d: Int::ONE }
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        if self.d.is_one() && o.d.is_one() {
            return Rat::int(self.n.mul(&o.n));
        }
        Rat::new(self.n.mul(&o.n), self.d.mul(&o.d))
    }

    pub fn mul_int(&self, k: &Int) -> Rat {
        Rat::new(self.n.mul(k), self.d.clone())
    }

    pub fn div_int(&self, k: &Int) -> Rat {
        Rat::new(self.n.clone(), self.d.mul(k))
    }

    pub fn neg(&self) -> Rat {
        Rat { n: self.n.neg(), d: self.d.clone() }
    }

    pub fn inv(&self) -> Rat {
        Rat::new(self.d.clone(), self.n.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.n.is_zero()
    }

    pub fn to_big(&self) -> BigRational {
        BigRational::new(self.n.to_big(), self.d.to_big())
    }

    pub fn from_big(r: &BigRational) -> Rat {
        Rat::new(Int::from(r.numer().clone()), Int::from(r.denom().clone()))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Repr {
    scale: Rat,
    num: ZPoly,
    den: Vec<(Cyc, u32)>,
    other: ZPoly,
}

/// Exact element of `Q(t, y)`.
#[derive(Clone)]
pub struct QScalar(Arc<Repr>);

impl PartialEq for QScalar {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for QScalar {}

impl std::hash::Hash for QScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

fn merge_factors(a: &[(Cyc, u32)], b: &[(Cyc, u32)]) -> Vec<(Cyc, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn factor_power(c: &Cyc, e: u32) -> ZPoly {
    c.to_zpoly().pow(e)
}

/// Product of `Φ^e` over a factor list.
fn expand_factors(fs: &[(Cyc, u32)]) -> ZPoly {
    let mut acc = ZPoly::one();
    for (c, e) in fs {
        acc = acc.mul(&factor_power(c, *e));
    }
    acc
}

/// Work-in-progress fraction, reduced by [`Draft::finish`].
struct Draft {
    scale: Rat,
    num: ZPoly,
    den: Vec<(Cyc, u32)>,
    other: ZPoly,
}

impl Draft {
    /// Cancels the listed candidate factors (all factors when `None`) and,
    /// if requested, any common part with `other`, then normalizes.
    fn finish(mut self, candidates: Option<&[Cyc]>, check_other: bool) -> QScalar {
        if self.num.is_zero() || self.scale.is_zero() {
            return QScalar::zero();
        }
        for (c, e) in self.den.iter_mut() {
            if let Some(cands) = candidates {
                if !cands.contains(c) {
                    continue;
                }
            }
            let (q, n) = cyclo::divide_repeatedly(&self.num, c, *e);
            if n > 0 {
                self.num = q;
                *e -= n;
            }
        }
        self.den.retain(|(_, e)| *e > 0);
        if check_other && !self.other.is_one() && !self.other.is_constant() {
            let g = gcd::gcd(&self.num, &self.other);
            if !g.is_one() {
                self.num = self.num.div_exact(&g).expect("gcd divides numerator");
                self.other = self.other.div_exact(&g).expect("gcd divides denominator");
            }
        }
        // other: monomial into num, content and sign into scale
        if !self.other.is_one() {
            let (mt, my) = self.other.min_exponents();
            if (mt, my) != (0, 0) {
                self.other = self.other.shift((-mt, -my));
                self.num = self.num.shift((-mt, -my));
            }
            let (u, prim) = self.other.primitive_part();
            self.other = prim;
            self.scale = self.scale.div_int(&u);
        }
        let (u, prim) = self.num.primitive_part();
        self.num = prim;
        self.scale = self.scale.mul_int(&u);
        QScalar(Arc::new(Repr { scale: self.scale, num: self.num, den: self.den, other: self.other }))
    }
}

impl QScalar {
    pub fn zero() -> Self {
        static ZERO: OnceLock<QScalar> = OnceLock::new();
        ZERO.get_or_init(|| QScalar(Arc::new(Repr { scale: Rat::ZERO, num: ZPoly::zero(), den: Vec::new(), other: ZPoly::one() })))
            .clone()
    }

    pub fn one() -> Self {
        static ONE: OnceLock<QScalar> = OnceLock::new();
        ONE.get_or_init(|| Self::monomial_rat(Rat::ONE, (0, 0))).clone()
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial_rat(Rat::int(Int::from(n)), (0, 0))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::monomial_rat(Rat::from_big(r), (0, 0))
    }

    fn monomial_rat(c: Rat, e: Exp) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QScalar(Arc::new(Repr { scale: c, num: ZPoly::monomial(Int::ONE, e), den: Vec::new(), other: ZPoly::one() }))
    }

    /// `c · t^a · y^b`.
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        Self::monomial_rat(Rat::int(Int::from(c)), (a, b))
    }

    pub fn t_pow(a: i32) -> Self {
        Self::monomial(1, a, 0)
    }

    pub fn y_pow(b: i32) -> Self {
        Self::monomial(1, 0, b)
    }

    /// `q^k = t^{4k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::t_pow(4 * k)
    }

    pub fn from_zpoly(p: &ZPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let (u, prim) = p.primitive_part();
        QScalar(Arc::new(Repr { scale: Rat::int(u), num: prim, den: Vec::new(), other: ZPoly::one() }))
    }

    /// `num / den` for arbitrary integer Laurent polynomials.
    pub fn from_ratio(num: &ZPoly, den: &ZPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (fs, rest) = cyclo::factor_binomials(den);
        Ok(Draft { scale: Rat::ONE, num: num.clone(), den: fs, other: rest }.finish(None, true))
    }

    pub fn from_laurent(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        let (n, nd) = num.to_integer_parts();
        let (d, dd) = den.to_integer_parts();
        let base = Self::from_ratio(&n, &d)?;
        Ok(base.mul(&Self::from_rational(&(BigRational::from(dd) / BigRational::from(nd)))))
    }

    pub fn is_zero(&self) -> bool {
        self.0.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.scale == Rat::ONE && self.0.num.is_one() && self.0.den.is_empty() && self.0.other.is_one()
    }

    /// True for `c · t^a y^b`.
    pub fn is_monomial(&self) -> bool {
        self.0.num.is_monomial() && self.0.den.is_empty() && self.0.other.is_one()
    }

    /// True when the denominator is a monomial, i.e. the value is a Laurent polynomial.
    pub fn is_laurent_poly(&self) -> bool {
        self.0.den.is_empty() && self.0.other.is_one()
    }

    pub fn is_t_only(&self) -> bool {
        self.0.num.terms().iter().all(|((_, j), _)| *j == 0)
            && self.0.den.iter().all(|(c, _)| c.b == 0)
            && self.0.other.terms().iter().all(|((_, j), _)| *j == 0)
    }

    /// Number of numerator terms, a rough size measure used for pivoting.
    pub fn weight(&self) -> usize {
        let den: usize = self.0.den.iter().map(|(c, e)| (c.degree() * e) as usize).sum();
        self.0.num.len() + den + 4 * self.0.other.len()
    }

    pub fn has_other_factor(&self) -> bool {
        !self.0.other.is_one()
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut r = (*self.0).clone();
        r.scale = r.scale.neg();
        QScalar(Arc::new(r))
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let (a, b) = (&*self.0, &*o.0);
        let scale = a.scale.mul(&b.scale);
        // the operands are reduced, so only cross pairs can cancel
        let mut na = a.num.clone();
        let mut nb = b.num.clone();
        let mut da = a.den.clone();
        let mut db = b.den.clone();
        if !na.is_monomial() {
            for (c, e) in db.iter_mut() {
                let (q, n) = cyclo::divide_repeatedly(&na, c, *e);
                if n > 0 {
                    na = q;
                    *e -= n;
                }
            }
        }
        if !nb.is_monomial() {
            for (c, e) in da.iter_mut() {
                let (q, n) = cyclo::divide_repeatedly(&nb, c, *e);
                if n > 0 {
                    nb = q;
                    *e -= n;
                }
            }
        }
        da.retain(|(_, e)| *e > 0);
        db.retain(|(_, e)| *e > 0);
        let mut oa = a.other.clone();
        let mut ob = b.other.clone();
        if !ob.is_one() && !na.is_monomial() {
            let g = gcd::gcd(&na, &ob);
            if !g.is_one() {
                na = na.div_exact(&g).expect("gcd divides");
                ob = ob.div_exact(&g).expect("gcd divides");
            }
        }
        if !oa.is_one() && !nb.is_monomial() {
            let g = gcd::gcd(&nb, &oa);
            if !g.is_one() {
                nb = nb.div_exact(&g).expect("gcd divides");
                oa = oa.div_exact(&g).expect("gcd divides");
            }
        }
        Draft { scale, num: na.mul(&nb), den: merge_factors(&da, &db), other: oa.mul(&ob) }.finish(Some(&[]), false)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::sum([self.clone(), o.clone()])
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::sum([self.clone(), o.neg()])
    }

    /// Sum of many terms over a single common denominator.
    pub fn sum<I: IntoIterator<Item = QScalar>>(items: I) -> Self {
        let items: Vec<QScalar> = items.into_iter().filter(|x| !x.is_zero()).collect();
        match items.len() {
            0 => return Self::zero(),
            1 => return items.into_iter().next().expect("one item"),
            _ => {}
        }
        // common denominator: max exponent per factor, lcm of the others
        let mut lden: Vec<(Cyc, u32)> = Vec::new();
        for it in &items {
            for (c, e) in &it.0.den {
                match lden.binary_search_by(|x| x.0.cmp(c)) {
                    Ok(i) => lden[i].1 = lden[i].1.max(*e),
                    Err(i) => lden.insert(i, (*c, *e)),
                }
            }
        }
        let mut lother = ZPoly::one();
        for it in &items {
            if !it.0.other.is_one() && lother != it.0.other {
                let g = gcd::gcd(&lother, &it.0.other);
                lother = lother.mul(&it.0.other.div_exact(&g).expect("gcd divides"));
            }
        }
        let mut scale_den = Int::ONE;
        for it in &items {
            let d = &it.0.scale.d;
            if !d.is_one() {
                let g = scale_den.gcd(d);
                scale_den = scale_den.mul(&d.div_exact(&g));
            }
        }
        let mut hits: Vec<u32> = vec![0; lden.len()];
        let mut terms: Vec<(Exp, Int)> = Vec::new();
        for it in &items {
            let mut mult_factors = Vec::new();
            for (k, (c, e)) in lden.iter().enumerate() {
                let have = it.0.den.iter().find(|x| x.0 == *c).map(|x| x.1).unwrap_or(0);
                if have == *e {
                    hits[k] += 1;
                }
                if *e > have {
                    mult_factors.push((*c, *e - have));
                }
            }
            let k = it.0.scale.n.mul(&scale_den.div_exact(&it.0.scale.d));
            let mut part = it.0.num.scale(&k);
            if !mult_factors.is_empty() {
                part = part.mul(&expand_factors(&mult_factors));
            }
            if !lother.is_one() {
                let m = lother.div_exact(&it.0.other).expect("lcm is a multiple");
                part = part.mul(&m);
            }
            terms.extend_from_slice(part.terms());
        }
        let num = ZPoly::from_terms(terms);
        let candidates: Vec<Cyc> = lden.iter().zip(&hits).filter(|(_, h)| **h >= 2).map(|(c, _)| c.0).collect();
        let check_other = !lother.is_one();
        Draft { scale: Rat::new(Int::ONE, scale_den), num, den: lden, other: lother }.finish(Some(&candidates), check_other)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let r = &*self.0;
        let num = expand_factors(&r.den).mul(&r.other);
        if r.num.is_monomial() {
            let (e, _) = &r.num.terms()[0];
            return Ok(Draft { scale: r.scale.inv(), num: num.shift((-e.0, -e.1)), den: Vec::new(), other: ZPoly::one() }
                .finish(Some(&[]), false));
        }
        let (fs, rest) = cyclo::factor_binomials(&r.num);
        Ok(Draft { scale: r.scale.inv(), num, den: fs, other: rest }.finish(Some(&[]), false))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Substitution `y -> y · t^k`, i.e. `x -> x q^{k/2}`.
    pub fn shift_y(&self, k: i32) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let r = &*self.0;
        let mut num = r.num.shift_y(k);
        let mut scale = r.scale.clone();
        let mut den = Vec::with_capacity(r.den.len());
        for (c, e) in &r.den {
            let (c2, m, positive) = c.shift_y(k);
            // Φ(old) = ±m·Φ(new) sits in the denominator
            let e = *e as i32;
            num = num.shift((-m.0 * e, -m.1 * e));
            if !positive && e % 2 == 1 {
                scale = scale.neg();
            }
            den.push((c2, e as u32));
        }
        den.sort_unstable();
        let other = if r.other.is_one() { ZPoly::one() } else { r.other.shift_y(k) };
        Draft { scale, num, den, other }.finish(Some(&[]), false)
    }

    /// Canonical `(numerator, denominator)` with integer coefficients: the
    /// denominator has nonnegative exponents with a zero minimum in each
    /// variable and a positive lex-leading coefficient, and the pair shares no
    /// integer content.
    pub fn num_den(&self) -> (ZPoly, ZPoly) {
        if self.is_zero() {
            return (ZPoly::zero(), ZPoly::one());
        }
        let r = &*self.0;
        let den = expand_factors(&r.den).mul(&r.other);
        let (mt, my) = den.min_exponents();
        let den = den.shift((-mt, -my)).scale(&r.scale.d);
        let num = r.num.shift((-mt, -my)).scale(&r.scale.n);
        (num, den)
    }

    pub fn numer(&self) -> LaurentPoly {
        LaurentPoly::from_zpoly(&self.num_den().0)
    }

    pub fn denom(&self) -> LaurentPoly {
        LaurentPoly::from_zpoly(&self.num_den().1)
    }

    /// `(low, high)` y-exponents of numerator and denominator.
    pub fn y_bounds(&self) -> Option<((i32, i32), (i32, i32))> {
        let r = &*self.0;
        let nb = r.num.y_degree_range()?;
        let (mut lo, mut hi) = r.other.y_degree_range().unwrap_or((0, 0));
        for (c, e) in &r.den {
            let (a, b) = c.y_range();
            lo += a * *e as i32;
            hi += b * *e as i32;
        }
        Some((nb, (lo, hi)))
    }

    /// Valuation in `y^{-1}` at `y → ∞` (`None` for zero).
    pub fn valuation_at_infinity(&self) -> Option<i32> {
        self.y_bounds().map(|((_, nh), (_, dh))| dh - nh)
    }

    /// Valuation in `y` at `y → 0` (`None` for zero).
    pub fn valuation_at_zero(&self) -> Option<i32> {
        self.y_bounds().map(|((nl, _), (dl, _))| nl - dl)
    }

    pub fn canonical_string(&self) -> String {
        let (n, d) = self.num_den();
        format!("{} / {}", format_zpoly(&n), format_zpoly(&d))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (n, d) = match s.split_once(" / ") {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n = LaurentPoly::parse(n)?;
        let d = LaurentPoly::parse(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::from_laurent(&n, &d)
    }

    /// Rational scale factor, exposed for numeric evaluation.
    pub fn rational_scale(&self) -> BigRational {
        self.0.scale.to_big()
    }

    /// Integer coefficient at `t^a y^b` if the value is a Laurent polynomial
    /// with integer coefficients; used by tests and small helpers.
    pub fn coefficient(&self, a: i32, b: i32) -> Option<BigRational> {
        if !self.is_laurent_poly() {
            return None;
        }
        let c = self.0.num.terms().iter().find(|(e, _)| *e == (a, b)).map(|(_, c)| c.to_big()).unwrap_or_else(BigInt::zero);
        Some(self.0.scale.to_big() * BigRational::from(c))
    }
}

pub(crate) fn format_zpoly(p: &ZPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, ((a, b), c)) in p.terms().iter().rev().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let mut parts: Vec<String> = Vec::new();
        if !mag.is_one() || (*a == 0 && *b == 0) {
            parts.push(mag.to_string());
        }
        if *a != 0 {
            parts.push(if *a == 1 { "t".to_string() } else { format!("t^{a}") });
        }
        if *b != 0 {
            parts.push(if *b == 1 { "y".to_string() } else { format!("y^{b}") });
        }
        out.push_str(&parts.join("*"));
    }
    out
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({})", self.canonical_string())
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        QScalar::from_int(n)
    }
}

impl std::ops::Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        QScalar::add(self, rhs)
    }
}

impl std::ops::Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        QScalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        QScalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar::neg(self)
    }
}
