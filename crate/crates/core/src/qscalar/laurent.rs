//! Laurent polynomials in `t`, `y` with rational coefficients, and the
//! textual term format shared by every golden file.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::int::Int;
use super::zpoly::{Exp, ZPoly};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn monomial(c: BigRational, t: i32, y: i32) -> Self {
        let mut p = Self::zero();
        p.add_term((t, y), c);
        p
    }

    pub fn from_zpoly(p: &ZPoly) -> Self {
        LaurentPoly { terms: p.terms().iter().map(|(e, c)| (*e, BigRational::from(c.to_big()))).collect() }
    }

    fn add_term(&mut self, e: Exp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: i32, y: i32) -> BigRational {
        self.terms.get(&(t, y)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), ca * cb);
            }
        }
        out
    }

    /// `(p, m)` with `self = p / m`, `p` integral and `m > 0` minimal.
    pub fn to_integer_parts(&self) -> (ZPoly, BigInt) {
        let m = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let p = ZPoly::from_terms(
            self.terms.iter().map(|(e, c)| (*e, Int::from(c.numer() * (&m / c.denom())))).collect(),
        );
        (p, m)
    }

    /// Prints terms by descending `(t, y)` exponent, e.g. `2*t^3*y^-1 - t + 1`.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, ((a, b), c)) in self.terms.iter().rev().enumerate() {
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
                parts.push(if mag.is_integer() { mag.numer().to_string() } else { format!("{}/{}", mag.numer(), mag.denom()) });
            }
            if *a != 0 {
                parts.push(if *a == 1 { "t".into() } else { format!("t^{a}") });
            }
            if *b != 0 {
                parts.push(if *b == 1 { "y".into() } else { format!("y^{b}") });
            }
            out.push_str(&parts.join("*"));
        }
        out
    }

    /// Parses the format written by [`LaurentPoly::canonical_string`].
    /// Whitespace is ignored and terms may appear in any order.
    pub fn parse(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse(format!("empty polynomial in {s:?}")));
        }
        let bytes = compact.as_bytes();
        let mut out = Self::zero();
        let mut start = 0;
        for i in 0..=bytes.len() {
            let at_split = i == bytes.len() || (i > start && (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
            if at_split {
                let (e, c) = parse_term(&compact[start..i]).map_err(|m| Error::Parse(format!("{m} in {s:?}")))?;
                out.add_term(e, c);
                start = i;
            }
        }
        Ok(out)
    }
}

fn parse_term(s: &str) -> std::result::Result<(Exp, BigRational), String> {
    let (sign, body) = match s.as_bytes().first() {
        Some(b'-') => (-1, &s[1..]),
        Some(b'+') => (1, &s[1..]),
        _ => (1, s),
    };
    if body.is_empty() {
        return Err("dangling sign".into());
    }
    let mut coeff = BigRational::from_integer(BigInt::from(sign));
    let (mut a, mut b) = (0i32, 0i32);
    for factor in body.split('*') {
        if let Some(rest) = factor.strip_prefix('t') {
            a += parse_exp(rest)?;
        } else if let Some(rest) = factor.strip_prefix('y') {
            b += parse_exp(rest)?;
        } else {
            let c = match factor.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.parse().map_err(|_| format!("bad coefficient {factor:?}"))?;
                    let d: BigInt = d.parse().map_err(|_| format!("bad coefficient {factor:?}"))?;
                    if d.is_zero() {
                        return Err("zero coefficient denominator".into());
                    }
                    BigRational::new(n, d)
                }
                None => BigRational::from_integer(factor.parse().map_err(|_| format!("bad coefficient {factor:?}"))?),
            };
            coeff *= c;
        }
    }
    Ok(((a, b), coeff))
}

fn parse_exp(rest: &str) -> std::result::Result<i32, String> {
    if rest.is_empty() {
        return Ok(1);
    }
    rest.strip_prefix('^').ok_or_else(|| format!("bad exponent {rest:?}"))?.parse().map_err(|_| format!("bad exponent {rest:?}"))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_and_parses() {
        let p = LaurentPoly::parse("1 - 3/2*t^-2*y + t*y^2 + t").unwrap();
        assert_eq!(p.canonical_string(), "t*y^2 + t + 1 - 3/2*t^-2*y");
        assert_eq!(LaurentPoly::parse(&p.canonical_string()).unwrap(), p);
        assert_eq!(LaurentPoly::parse("t - t").unwrap().canonical_string(), "0");
        assert!(LaurentPoly::parse("t^x").is_err());
    }
}
