//! Polynomial gcd in `Z[t, y]`.
//!
//! Only used on the rare path where a denominator contains a factor that is
//! not a cyclotomic binomial. The heuristic integer-evaluation gcd handles
//! almost every case; primitive remainder sequences are the fallback.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::int::Int;
use super::zpoly::ZPoly;

/// Dense univariate polynomial over `Z`, lowest degree first, trimmed.
type UPoly = Vec<Int>;

fn trim<T>(v: &mut Vec<T>, is_zero: impl Fn(&T) -> bool) {
    while v.last().map(&is_zero).unwrap_or(false) {
        v.pop();
    }
}

fn u_content(a: &UPoly) -> Int {
    a.iter().fold(Int::ZERO, |g, c| g.gcd(c))
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(&mut out, Int::is_zero);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out: UPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or(Int::ZERO);
            let y = b.get(i).cloned().unwrap_or(Int::ZERO);
            x.sub(&y)
        })
        .collect();
    trim(&mut out, Int::is_zero);
    out
}

/// Exact division in `Z[t]`; `None` if not exact.
fn u_div(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let lb = b.last()?.clone();
    let mut q = vec![Int::ZERO; a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = &r[k + b.len() - 1];
        if c.is_zero() {
            continue;
        }
        let qc = c.checked_div_exact(&lb)?;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = r[k + j].sub(&qc.mul(bj));
        }
        q[k] = qc;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q, Int::is_zero);
    Some(q)
}

fn u_primitive(a: &UPoly) -> UPoly {
    let c = u_content(a);
    if c.is_zero() || c.is_one() {
        return a.clone();
    }
    a.iter().map(|x| x.div_exact(&c)).collect()
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        let mut next: UPoly = r.iter().map(|c| c.mul(&lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            next[shift + j] = next[shift + j].sub(&lr.mul(bj));
        }
        trim(&mut next, Int::is_zero);
        r = next;
    }
    r
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_normalize(b);
    }
    if b.is_empty() {
        return u_normalize(a);
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    let g = u_normalize(&u_primitive(&x));
    g.iter().map(|v| v.mul(&c)).collect()
}

fn u_normalize(a: &UPoly) -> UPoly {
    if a.last().map(|c| c.is_negative()).unwrap_or(false) {
        a.iter().map(|c| c.neg()).collect()
    } else {
        a.clone()
    }
}

/// Polynomial in `y` with coefficients in `Z[t]`, lowest `y` degree first.
type BPoly = Vec<UPoly>;

fn to_bpoly(p: &ZPoly) -> BPoly {
    let (mt, my) = p.min_exponents();
    let (xt, xy) = p.max_exponents();
    let mut out: BPoly = vec![vec![Int::ZERO; (xt - mt + 1) as usize]; (xy - my + 1) as usize];
    for ((i, j), c) in p.terms() {
        out[(j - my) as usize][(i - mt) as usize] = c.clone();
    }
    for row in out.iter_mut() {
        trim(row, Int::is_zero);
    }
    out
}

fn from_bpoly(b: &BPoly) -> ZPoly {
    let mut terms = Vec::new();
    for (j, row) in b.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push(((i as i32, j as i32), c.clone()));
            }
        }
    }
    ZPoly::from_terms(terms)
}

fn b_content(a: &BPoly) -> UPoly {
    a.iter().fold(Vec::new(), |g, c| u_gcd(&g, c))
}

fn b_div_u(a: &BPoly, c: &UPoly) -> BPoly {
    a.iter().map(|x| u_div(x, c).expect("content divides every coefficient")).collect()
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        let mut next: BPoly = r.iter().map(|c| u_mul(c, &lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            next[shift + j] = u_sub(&next[shift + j], &u_mul(&lr, bj));
        }
        trim(&mut next, |c: &UPoly| c.is_empty());
        r = next;
    }
    r
}

fn b_primitive(a: &BPoly) -> BPoly {
    let c = b_content(a);
    if c.len() == 1 && c[0].is_one() {
        return a.clone();
    }
    b_div_u(a, &c)
}

/// gcd of two polynomials, normalized to be primitive with nonnegative
/// minimal exponents and a positive lex-leading coefficient. Monomial
/// factors are ignored since they are units in the Laurent ring.
pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.is_monomial() || b.is_monomial() {
        return ZPoly::one();
    }
    let (a, b) = (normalize(a), normalize(b));
    if let Some(g) = heuristic_gcd(&a, &b) {
        return g;
    }
    prs_gcd(&a, &b)
}

fn prs_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let (mut x, mut y) = (to_bpoly(a), to_bpoly(b));
    let cont = u_gcd(&b_content(&x), &b_content(&y));
    x = b_primitive(&x);
    y = b_primitive(&y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = b_prem(&x, &y);
        x = y;
        if r.is_empty() {
            y = Vec::new();
            break;
        }
        y = b_primitive(&r);
    }
    let g = if y.len() == 1 {
        // a nonzero remainder free of y: the primitive gcd is trivial in y
        vec![vec![Int::ONE]]
    } else {
        b_primitive(&x)
    };
    let g: BPoly = g.iter().map(|row| u_mul(row, &cont)).collect();
    normalize(&from_bpoly(&g))
}

fn max_norm(p: &ZPoly) -> BigInt {
    p.terms().iter().map(|(_, c)| c.to_big().abs()).max().unwrap_or_else(BigInt::zero)
}

fn next_point(xi: &BigInt) -> BigInt {
    xi * BigInt::from(73794) / BigInt::from(27011)
}

/// Symmetric `xi`-adic digits of `v`, lowest first.
fn xi_adic(mut v: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi / 2;
    let mut out = Vec::new();
    while !v.is_zero() {
        let mut c = v.mod_floor(xi);
        if c > half {
            c -= xi;
        }
        v = (&v - &c) / xi;
        out.push(c);
    }
    out
}

fn eval_dense(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn dense_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn dense_divides(d: &[BigInt], p: &[BigInt]) -> bool {
    if d.len() > p.len() {
        return false;
    }
    let mut r = p.to_vec();
    let ld = d.last().expect("nonzero");
    for k in (0..=p.len() - d.len()).rev() {
        let c = &r[k + d.len() - 1];
        if c.is_zero() {
            continue;
        }
        let (q, rem) = c.div_rem(ld);
        if !rem.is_zero() {
            return false;
        }
        for (j, dj) in d.iter().enumerate() {
            r[k + j] -= &q * dj;
        }
    }
    r.iter().all(|c| c.is_zero())
}

/// Heuristic gcd of univariate integer polynomials (dense, lowest first).
fn heu_univariate(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let ca = dense_content(a);
    let cb = dense_content(b);
    let cont = ca.gcd(&cb);
    let a: Vec<BigInt> = a.iter().map(|c| c / &ca).collect();
    let b: Vec<BigInt> = b.iter().map(|c| c / &cb).collect();
    if a.len() == 1 || b.len() == 1 {
        return Some(vec![cont]);
    }
    let na = a.iter().map(|c| c.abs()).max()?;
    let nb = b.iter().map(|c| c.abs()).max()?;
    let mut xi = BigInt::from(2) * na.min(nb) + BigInt::from(29);
    for _ in 0..6 {
        let g = eval_dense(&a, &xi).gcd(&eval_dense(&b, &xi));
        let mut cand = xi_adic(g, &xi);
        let cc = dense_content(&cand);
        if !cc.is_zero() {
            for c in cand.iter_mut() {
                *c /= &cc;
            }
            if cand.last().map(|c| c.is_negative()).unwrap_or(false) {
                for c in cand.iter_mut() {
                    *c = -&*c;
                }
            }
            if dense_divides(&cand, &a) && dense_divides(&cand, &b) {
                return Some(cand.into_iter().map(|c| c * &cont).collect());
            }
        }
        xi = next_point(&xi);
    }
    None
}

/// Heuristic gcd in `Z[t, y]` for polynomials with nonnegative exponents:
/// evaluate `t` at a large integer, take the gcd in `Z[y]`, lift the
/// coefficients back `xi`-adically and verify by division.
fn heuristic_gcd(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let slices = |p: &ZPoly, xi: &BigInt| -> Vec<BigInt> {
        let (_, my) = p.max_exponents();
        let mut out = vec![BigInt::zero(); my as usize + 1];
        let mut pw: Vec<BigInt> = vec![BigInt::one()];
        for ((i, j), c) in p.terms() {
            while pw.len() <= *i as usize {
                let next = pw.last().expect("nonempty") * xi;
                pw.push(next);
            }
            out[*j as usize] += c.to_big() * &pw[*i as usize];
        }
        while out.len() > 1 && out.last().map(|c| c.is_zero()).unwrap_or(false) {
            out.pop();
        }
        out
    };
    let mut xi = BigInt::from(2) * max_norm(a).min(max_norm(b)) + BigInt::from(29);
    for _ in 0..6 {
        let (ea, eb) = (slices(a, &xi), slices(b, &xi));
        if ea.iter().all(|c| c.is_zero()) || eb.iter().all(|c| c.is_zero()) {
            xi = next_point(&xi);
            continue;
        }
        if let Some(g) = heu_univariate(&ea, &eb) {
            let mut terms = Vec::new();
            for (j, c) in g.into_iter().enumerate() {
                for (i, d) in xi_adic(c, &xi).into_iter().enumerate() {
                    if !d.is_zero() {
                        terms.push(((i as i32, j as i32), Int::from(d)));
                    }
                }
            }
            let cand = normalize(&ZPoly::from_terms(terms));
            if !cand.is_zero() && a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return Some(cand);
            }
        }
        xi = next_point(&xi);
    }
    None
}

/// Shifts to nonnegative exponents and removes content and sign.
pub fn normalize(p: &ZPoly) -> ZPoly {
    if p.is_zero() {
        return ZPoly::zero();
    }
    let (mt, my) = p.min_exponents();
    p.shift((-mt, -my)).primitive_part().1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((i32, i32), i64)]) -> ZPoly {
        ZPoly::from_terms(terms.iter().map(|(e, c)| (*e, Int::from(*c))).collect())
    }

    #[test]
    fn recovers_common_factor() {
        let g = p(&[((2, 0), 1), ((0, 1), 3), ((0, 0), 1)]);
        let a = g.mul(&p(&[((1, 1), 1), ((0, 0), -2)]));
        let b = g.mul(&p(&[((0, 2), 1), ((3, 0), 5)])).shift((-2, 4));
        assert_eq!(gcd(&a, &b), normalize(&g));
    }

    #[test]
    fn coprime_gives_one() {
        let a = p(&[((1, 0), 1), ((0, 1), 1)]);
        let b = p(&[((1, 0), 1), ((0, 1), -1)]);
        assert_eq!(gcd(&a, &b), ZPoly::one());
    }

    #[test]
    fn t_content_is_kept() {
        let c = p(&[((1, 0), 1), ((0, 0), 1)]);
        let a = c.mul(&p(&[((0, 1), 1), ((0, 0), 1)]));
        let b = c.mul(&p(&[((0, 1), 1), ((0, 0), 2)]));
        assert_eq!(gcd(&a, &b), c);
    }
}
