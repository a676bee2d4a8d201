//! Sparse integer Laurent polynomials in `t` and `y`.
//!
//! Terms are kept sorted by `(t-exponent, y-exponent)` ascending with no
//! zero coefficients, so two polynomials are equal iff their term vectors are.

use super::int::Int;

/// `(t-exponent, y-exponent)`
pub type Exp = (i32, i32);

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ZPoly {
    terms: Vec<(Exp, Int)>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Int::ONE, (0, 0))
    }

    pub fn monomial(c: Int, e: Exp) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly { terms: vec![(e, c)] }
    }

    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(mut terms: Vec<(Exp, Int)>) -> Self {
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Exp, Int)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = lc.add(&c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        ZPoly { terms: out }
    }

    /// Assumes `terms` already sorted, merged and nonzero.
    pub(crate) fn from_sorted(terms: Vec<(Exp, Int)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        ZPoly { terms }
    }

    pub fn terms(&self) -> &[(Exp, Int)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == (0, 0))
    }

    /// Term that is greatest in `(t, y)` lexicographic order.
    pub fn lex_leading(&self) -> Option<&(Exp, Int)> {
        self.terms.last()
    }

    pub fn neg(&self) -> Self {
        ZPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn scale(&self, k: &Int) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        if k.is_one() {
            return self.clone();
        }
        ZPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.mul(k))).collect() }
    }

    pub fn div_exact_int(&self, k: &Int) -> Self {
        if k.is_one() {
            return self.clone();
        }
        ZPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.div_exact(k))).collect() }
    }

    pub fn shift(&self, by: Exp) -> Self {
        if by == (0, 0) {
            return self.clone();
        }
        ZPoly { terms: self.terms.iter().map(|(e, c)| ((e.0 + by.0, e.1 + by.1), c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { t.1.neg() } else { t.1.clone() };
            out.push((t.0, c));
        }
        ZPoly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.shift(*e).scale(c);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.shift(*e).scale(c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                prods.push(((ea.0 + eb.0, ea.1 + eb.1), ca.mul(cb)));
            }
        }
        Self::from_terms(prods)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// gcd of all coefficients, always non-negative; zero for the zero polynomial.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum exponent; `(0,0)` for zero.
    pub fn min_exponents(&self) -> Exp {
        if self.terms.is_empty() {
            return (0, 0);
        }
        let mt = self.terms.first().map(|t| t.0 .0).unwrap_or(0);
        let my = self.terms.iter().map(|t| t.0 .1).min().unwrap_or(0);
        (mt, my)
    }

    pub fn max_exponents(&self) -> Exp {
        if self.terms.is_empty() {
            return (0, 0);
        }
        let mt = self.terms.last().map(|t| t.0 .0).unwrap_or(0);
        let my = self.terms.iter().map(|t| t.0 .1).max().unwrap_or(0);
        (mt, my)
    }

    pub fn y_degree_range(&self) -> Option<(i32, i32)> {
        if self.terms.is_empty() {
            return None;
        }
        let lo = self.terms.iter().map(|t| t.0 .1).min().unwrap_or(0);
        let hi = self.terms.iter().map(|t| t.0 .1).max().unwrap_or(0);
        Some((lo, hi))
    }

    /// Applies the exponent map `(a, b) -> f(a, b)`; `f` must be injective.
    pub fn map_exponents(&self, f: impl Fn(Exp) -> Exp) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())).collect())
    }

    /// Substitution `y -> y * t^k`.
    pub fn shift_y(&self, k: i32) -> Self {
        if k == 0 {
            return self.clone();
        }
        self.map_exponents(|(a, b)| (a + k * b, b))
    }

    /// Splits off integer content and a sign so that the rest is primitive with
    /// a positive lex-leading coefficient. Returns `(unit, primitive)`.
    pub fn primitive_part(&self) -> (Int, ZPoly) {
        if self.is_zero() {
            return (Int::ZERO, Self::zero());
        }
        let mut g = self.content();
        if self.terms.last().map(|t| t.1.is_negative()).unwrap_or(false) {
            g = g.neg();
        }
        (g.clone(), self.div_exact_int(&g))
    }

    /// Exact division by another polynomial, `None` when not divisible.
    ///
    /// Works with the lexicographic `(y, t)` order on the monomial-shifted
    /// polynomials, which is a valid Gröbner basis for a single divisor.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (e, c) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (pe, pc) in &self.terms {
                out.push(((pe.0 - e.0, pe.1 - e.1), pc.checked_div_exact(c)?));
            }
            return Some(ZPoly::from_sorted(out));
        }
        let ps = self.min_exponents();
        let ds = d.min_exponents();
        let p = self.shift((-ps.0, -ps.1));
        let dd = d.shift((-ds.0, -ds.1));
        // leading term in (y, t) lex order
        let key = |e: &Exp| (e.1, e.0);
        let lead = |poly: &ZPoly| -> Option<(Exp, Int)> {
            poly.terms.iter().max_by(|a, b| key(&a.0).cmp(&key(&b.0))).cloned()
        };
        let (dl_e, dl_c) = lead(&dd)?;
        let mut rem = p;
        let mut quot = Vec::new();
        while let Some((re, rc)) = lead(&rem) {
            let qe = (re.0 - dl_e.0, re.1 - dl_e.1);
            if qe.0 < 0 || qe.1 < 0 {
                return None;
            }
            let qc = rc.checked_div_exact(&dl_c)?;
            let term = ZPoly::monomial(qc.clone(), qe);
            rem = rem.sub(&dd.mul(&term));
            quot.push((qe, qc));
        }
        let q = ZPoly::from_terms(quot);
        Some(q.shift((ps.0 - ds.0, ps.1 - ds.1)))
    }
}
