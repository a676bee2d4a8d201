//! Cyclotomic binomial factors `Φ_d(t^a y^b)`.
//!
//! Every denominator produced by q-combinatorics and by the dynamical
//! Pochhammer symbols is a product of binomials `1 ± t^a y^b`, which split
//! into cyclotomic polynomials evaluated at a primitive monomial. Those are
//! irreducible and pairwise non-associate once the direction `(a, b)` is
//! normalized, so they make a cheap unique-factorization basis.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::int::Int;
use super::zpoly::{Exp, ZPoly};

/// `Φ_d(t^a y^b)` with `gcd(a, b) = 1` and `a > 0`, or `a = 0, b > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cyc {
    pub a: i32,
    pub b: i32,
    pub d: u32,
}

fn table() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static T: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    T.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of `Φ_d`, lowest degree first.
pub fn cyclotomic(d: u32) -> Arc<Vec<i64>> {
    assert!(d >= 1);
    if let Some(c) = table().read().expect("cyclotomic table poisoned").get(&d) {
        return c.clone();
    }
    // u^d - 1 divided by Φ_e for every proper divisor e
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d % e == 0 {
            let phi = cyclotomic(e);
            num = synthetic_div(&num, &phi).expect("cyclotomic recursion is exact");
        }
    }
    let c = Arc::new(num);
    table().write().expect("cyclotomic table poisoned").insert(d, c.clone());
    c
}

/// Exact division of a dense `i64` polynomial by a monic one.
fn synthetic_div(g: &[i64], phi: &[i64]) -> Option<Vec<i64>> {
    let m = phi.len() - 1;
    if g.len() <= m {
        return if g.iter().all(|&c| c == 0) { Some(vec![0]) } else { None };
    }
    let mut r = g.to_vec();
    let n = r.len() - 1;
    let mut q = vec![0i64; n - m + 1];
    for k in (m..=n).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        q[k - m] = c;
        for j in 0..=m {
            r[k - m + j] -= c * phi[j];
        }
    }
    r[..m].iter().all(|&c| c == 0).then_some(q)
}

/// Euler's totient.
pub fn totient(mut n: u32) -> u32 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub(crate) fn gcd_i32(a: i32, b: i32) -> i32 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i32
}

/// Unimodular coordinates adapted to a primitive direction `(a, b)`.
///
/// `s` counts powers of `u = t^a y^b` and `r` labels the parallel lines.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Frame {
    a: i64,
    b: i64,
    gamma: i64,
    delta: i64,
}

impl Frame {
    pub fn new(a: i32, b: i32) -> Frame {
        let (g, x, y) = ext_gcd(a as i64, b as i64);
        debug_assert_eq!(g, 1, "direction must be primitive");
        // a x + b y = 1  =>  delta = x, gamma = -y
        Frame { a: a as i64, b: b as i64, gamma: -y, delta: x }
    }

    pub fn to_sr(&self, (i, j): Exp) -> (i64, i64) {
        let (i, j) = (i as i64, j as i64);
        (i * self.delta - j * self.gamma, -i * self.b + j * self.a)
    }

    pub fn from_sr(&self, s: i64, r: i64) -> Exp {
        ((s * self.a + r * self.gamma) as i32, (s * self.b + r * self.delta) as i32)
    }
}

impl Cyc {
    /// Normalizes `Φ_d(t^a y^b)` for any primitive nonzero `(a, b)`.
    ///
    /// Returns the normalized factor together with a monomial `m` and a sign
    /// such that `Φ_d(t^a y^b) = sign · m · Φ_d(normalized)`.
    pub fn normalize(a: i32, b: i32, d: u32) -> (Cyc, Exp, bool) {
        debug_assert_eq!(gcd_i32(a, b), 1);
        if a > 0 || (a == 0 && b > 0) {
            return (Cyc { a, b, d }, (0, 0), true);
        }
        // Φ_d(1/u) = u^{-φ(d)} Φ_d(u) for d ≥ 2, and Φ_1(1/u) = -u^{-1} Φ_1(u)
        let phi = totient(d) as i32;
        let c = Cyc { a: -a, b: -b, d };
        (c, (a * phi, b * phi), d != 1)
    }

    pub fn degree(&self) -> u32 {
        totient(self.d)
    }

    pub fn to_zpoly(&self) -> ZPoly {
        let coeffs = cyclotomic(self.d);
        ZPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(k, c)| ((self.a * k as i32, self.b * k as i32), Int::from(*c)))
                .collect(),
        )
    }

    /// y-exponent range `(low, high)` of the factor as a Laurent polynomial.
    pub fn y_range(&self) -> (i32, i32) {
        let span = self.b * self.degree() as i32;
        (span.min(0), span.max(0))
    }

    /// Substitution `y -> y t^k`, renormalized.
    pub fn shift_y(&self, k: i32) -> (Cyc, Exp, bool) {
        Cyc::normalize(self.a + k * self.b, self.b, self.d)
    }
}

/// Splits `p` along `frame` into lines of constant `r`, each a dense
/// coefficient vector in `s` starting at the given offset.
fn lines(p: &ZPoly, frame: &Frame) -> Vec<(i64, i64, Vec<Int>)> {
    let mut pts: Vec<(i64, i64, &Int)> = p
        .terms()
        .iter()
        .map(|(e, c)| {
            let (s, r) = frame.to_sr(*e);
            (r, s, c)
        })
        .collect();
    pts.sort_unstable_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
    let mut out: Vec<(i64, i64, Vec<Int>)> = Vec::new();
    let mut i = 0;
    while i < pts.len() {
        let r = pts[i].0;
        let mut j = i;
        while j < pts.len() && pts[j].0 == r {
            j += 1;
        }
        let s0 = pts[i].1;
        let s1 = pts[j - 1].1;
        let mut dense = vec![Int::ZERO; (s1 - s0 + 1) as usize];
        for pt in &pts[i..j] {
            dense[(pt.1 - s0) as usize] = pt.2.clone();
        }
        out.push((r, s0, dense));
        i = j;
    }
    out
}

fn div_dense(g: &[Int], phi: &[i64]) -> Option<Vec<Int>> {
    let m = phi.len() - 1;
    if g.len() <= m {
        return None;
    }
    let mut r = g.to_vec();
    let n = r.len() - 1;
    let mut q = vec![Int::ZERO; n - m + 1];
    for k in (m..=n).rev() {
        if r[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut r[k], Int::ZERO);
        for j in 0..m {
            if phi[j] != 0 {
                r[k - m + j] = r[k - m + j].sub(&c.mul(&Int::from(phi[j])));
            }
        }
        q[k - m] = c;
    }
    r[..m].iter().all(|c| c.is_zero()).then_some(q)
}

/// `p / Φ_d(t^a y^b)` if exact.
pub fn try_divide(p: &ZPoly, c: &Cyc) -> Option<ZPoly> {
    if p.is_zero() {
        return Some(ZPoly::zero());
    }
    let frame = Frame::new(c.a, c.b);
    let phi = cyclotomic(c.d);
    let m = phi.len() - 1;
    let ls = lines(p, &frame);
    // cheap rejection before any division
    if ls.iter().any(|(_, _, g)| g.len() <= m) {
        return None;
    }
    let mut out = Vec::with_capacity(p.len());
    for (r, s0, g) in ls {
        let q = div_dense(&g, &phi)?;
        for (k, coef) in q.into_iter().enumerate() {
            if !coef.is_zero() {
                out.push((frame.from_sr(s0 + k as i64, r), coef));
            }
        }
    }
    Some(ZPoly::from_terms(out))
}

/// Divides out `Φ` as often as possible, up to `max` times.
pub fn divide_repeatedly(p: &ZPoly, c: &Cyc, max: u32) -> (ZPoly, u32) {
    let mut cur = p.clone();
    let mut n = 0;
    while n < max {
        match try_divide(&cur, c) {
            Some(q) => {
                cur = q;
                n += 1;
            }
            None => break,
        }
    }
    (cur, n)
}

fn normalized_direction(dx: i32, dy: i32) -> (i32, i32, i32) {
    let g = gcd_i32(dx, dy);
    let (a, b) = (dx / g, dy / g);
    if a > 0 || (a == 0 && b > 0) {
        (a, b, g)
    } else {
        (-a, -b, g)
    }
}

/// Edge directions of the Newton polygon with their lattice lengths.
fn newton_directions(p: &ZPoly) -> Vec<((i32, i32), i32)> {
    let mut pts: Vec<Exp> = p.terms().iter().map(|(e, _)| *e).collect();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 2 {
        return Vec::new();
    }
    let cross = |o: Exp, a: Exp, b: Exp| -> i64 {
        (a.0 - o.0) as i64 * (b.1 - o.1) as i64 - (a.1 - o.1) as i64 * (b.0 - o.0) as i64
    };
    let chain = |it: &mut dyn Iterator<Item = Exp>| -> Vec<Exp> {
        let mut h: Vec<Exp> = Vec::new();
        for pt in it {
            while h.len() >= 2 && cross(h[h.len() - 2], h[h.len() - 1], pt) <= 0 {
                h.pop();
            }
            h.push(pt);
        }
        h.pop();
        h
    };
    let mut hull = chain(&mut pts.iter().copied());
    hull.extend(chain(&mut pts.iter().rev().copied()));
    hull.push(hull[0]);
    let mut dirs: HashMap<(i32, i32), i32> = HashMap::new();
    for w in hull.windows(2) {
        let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
        if dx == 0 && dy == 0 {
            continue;
        }
        let (a, b, g) = normalized_direction(dx, dy);
        let e = dirs.entry((a, b)).or_insert(0);
        *e = (*e).max(g);
    }
    let mut v: Vec<_> = dirs.into_iter().collect();
    v.sort_unstable();
    v
}

/// Factors `u^g - 1` (`plus = false`) or `u^g + 1` (`plus = true`) into
/// cyclotomic indices.
pub fn binomial_indices(g: u32, plus: bool) -> Vec<u32> {
    if plus {
        (1..=2 * g).filter(|d| (2 * g) % d == 0 && g % d != 0).collect()
    } else {
        (1..=g).filter(|d| g % d == 0).collect()
    }
}

/// Splits `p` into its cyclotomic-binomial part and a binomial-free rest.
///
/// Returns `(factors, rest)` with `p = rest · ∏ Φ^e` exactly; `rest` keeps
/// whatever content, sign and monomial `p` carried.
pub fn factor_binomials(p: &ZPoly) -> (Vec<(Cyc, u32)>, ZPoly) {
    let mut found: Vec<(Cyc, u32)> = Vec::new();
    if p.len() < 2 {
        return (found, p.clone());
    }
    let mut rest = p.clone();
    if p.len() == 2 {
        let t = p.terms();
        let ((e0, c0), (e1, c1)) = (&t[0], &t[1]);
        if c0.abs() == c1.abs() {
            let (a, b, g) = normalized_direction(e1.0 - e0.0, e1.1 - e0.1);
            let plus = c0 == c1;
            for d in binomial_indices(g as u32, plus) {
                let c = Cyc { a, b, d };
                let (q, n) = divide_repeatedly(&rest, &c, 1);
                debug_assert_eq!(n, 1);
                rest = q;
                found.push((c, 1));
            }
            found.sort_unstable();
            return (found, rest);
        }
    }
    for ((a, b), len) in newton_directions(p) {
        let frame = Frame::new(a, b);
        // the sparsest line bounds which Φ_d can occur
        let ls = lines(&rest, &frame);
        let Some((_, _, probe)) = ls.iter().min_by_key(|(_, _, g)| g.iter().filter(|c| !c.is_zero()).count()) else {
            continue;
        };
        let span = (probe.len() as i32 - 1).min(len);
        if span < 1 {
            continue;
        }
        let bound = max_index_with_totient_at_most(span as u32);
        for d in 1..=bound {
            if totient(d) as i32 > span {
                continue;
            }
            let phi = cyclotomic(d);
            if div_dense(probe, &phi).is_none() {
                continue;
            }
            let c = Cyc { a, b, d };
            let (q, n) = divide_repeatedly(&rest, &c, u32::MAX);
            if n > 0 {
                rest = q;
                found.push((c, n));
            }
        }
    }
    found.sort_unstable();
    (found, rest)
}

/// Largest `d` with `φ(d) ≤ n` is below this bound.
fn max_index_with_totient_at_most(n: u32) -> u32 {
    // φ(d) ≥ sqrt(d/2) for all d, so d ≤ 2 n^2 is always safe; the finer
    // bound below holds for the small spans that occur in practice.
    let coarse = 2 * n * n + 2;
    coarse.min(6 * n + 6).max(2 * n + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((i32, i32), i64)]) -> ZPoly {
        ZPoly::from_terms(terms.iter().map(|(e, c)| (*e, Int::from(*c))).collect())
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), vec![-1, 1]);
        assert_eq!(*cyclotomic(2), vec![1, 1]);
        assert_eq!(*cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic(105).len() - 1, totient(105) as usize);
        assert!(cyclotomic(105).contains(&-2));
    }

    #[test]
    fn frame_round_trips() {
        for &(a, b) in &[(1, 0), (0, 1), (3, -2), (8, 5), (1, -4)] {
            let f = Frame::new(a, b);
            assert_eq!(f.to_sr((a, b)), (1, 0));
            for e in [(0, 0), (3, 7), (-5, 2)] {
                let (s, r) = f.to_sr(e);
                assert_eq!(f.from_sr(s, r), e);
            }
        }
    }

    #[test]
    fn factors_binomials_with_negative_exponents() {
        // 1 - y^-4 t^-8 = -(t^-8 y^-4)(1 - t^8 y^4)... as Laurent polynomial
        let b = p(&[((0, 0), 1), ((-8, -4), -1)]);
        let (f, rest) = factor_binomials(&b);
        assert_eq!(f.iter().map(|x| x.0.d).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert!(f.iter().all(|x| (x.0.a, x.0.b) == (2, 1)));
        assert!(rest.is_monomial());
        let mut back = rest.clone();
        for (c, e) in &f {
            back = back.mul(&c.to_zpoly().pow(*e));
        }
        assert_eq!(back, b);
    }

    #[test]
    fn general_path_finds_hidden_factors() {
        let c1 = Cyc { a: 1, b: 0, d: 6 }.to_zpoly();
        let c2 = Cyc { a: 1, b: 2, d: 1 }.to_zpoly();
        let other = p(&[((0, 0), 2), ((1, 1), 1), ((0, 3), 1)]);
        let prod = c1.mul(&c2).mul(&c2).mul(&other);
        let (f, rest) = factor_binomials(&prod);
        assert_eq!(f, vec![(Cyc { a: 1, b: 0, d: 6 }, 1), (Cyc { a: 1, b: 2, d: 1 }, 2)]);
        assert_eq!(rest, other);
    }

    #[test]
    fn normalization_flips_direction() {
        let (c, m, s) = Cyc::normalize(-1, 0, 1);
        assert_eq!((c, m, s), (Cyc { a: 1, b: 0, d: 1 }, (-1, 0), false));
        // t^-1 - 1 == -t^-1 (t - 1)
        let lhs = p(&[((-1, 0), 1), ((0, 0), -1)]);
        let rhs = c.to_zpoly().shift(m).neg();
        assert_eq!(lhs, rhs);
    }
}
