//! q-numbers, q-factorials and q-Pochhammer symbols.

use super::int::Int;
use super::scalar::QScalar;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Which base a q-integer or q-exponential uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Base {
    /// base `q`
    Q,
    /// base `q^{-1}`
    QInv,
}

impl Base {
    fn sign(self) -> i32 {
        match self {
            Base::Q => 1,
            Base::QInv => -1,
        }
    }
}

/// `[z]_q = (q^z - q^{-z}) / (q - q^{-1})`.
pub fn qnum(z: i64) -> QScalar {
    if z == 0 {
        return QScalar::zero();
    }
    let n = z.unsigned_abs() as i32;
    // q^{n-1} + q^{n-3} + ... + q^{1-n}
    let terms = (0..n).map(|j| ((4 * (n - 1 - 2 * j), 0), Int::ONE)).collect();
    let v = QScalar::from_zpoly(&ZPoly::from_terms(terms));
    if z < 0 {
        v.neg()
    } else {
        v
    }
}

/// `(z)_q = q^{z-1}[z]_q`, or `(z)_{q^{-1}} = q^{1-z}[z]_q` for [`Base::QInv`].
pub fn qround(z: i64, base: Base) -> QScalar {
    qnum(z).mul(&QScalar::q_pow(base.sign() * (z as i32 - 1)))
}

/// `(n)_q! = (n)_q ... (1)_q`.
pub fn qfactorial(n: i64, base: Base) -> Result<QScalar> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((1..=n).fold(QScalar::one(), |acc, k| acc.mul(&qround(k, base))))
}

/// `1 / (n)_q!`, built factor by factor so no large numerator is refactored.
pub fn qfactorial_inv(n: i64, base: Base) -> Result<QScalar> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    (1..=n).try_fold(QScalar::one(), |acc, k| Ok(acc.mul(&qround(k, base).inv()?)))
}

/// `[n]_q! = [n]_q ... [1]_q`.
pub fn qfactorial_sym(n: i64) -> Result<QScalar> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((1..=n).fold(QScalar::one(), |acc, k| acc.mul(&qnum(k))))
}

/// `1 / [n]_q!`.
pub fn qfactorial_sym_inv(n: i64) -> Result<QScalar> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    (1..=n).try_fold(QScalar::one(), |acc, k| Ok(acc.mul(&qnum(k).inv()?)))
}

/// Factors of `(a; base)_n` and whether they sit in the denominator.
fn pochhammer_factors(a: &QScalar, base: &QScalar, n: i64) -> Result<(Vec<QScalar>, bool)> {
    if !(base.is_monomial() && base.is_t_only()) {
        return Err(Error::Invalid("q-Pochhammer base must be a power of t".into()));
    }
    let one = QScalar::one();
    let mut out = Vec::with_capacity(n.unsigned_abs() as usize);
    if n >= 0 {
        let mut pw = a.clone();
        for _ in 0..n {
            out.push(one.sub(&pw));
            pw = pw.mul(base);
        }
        return Ok((out, false));
    }
    let binv = base.inv()?;
    let mut pw = a.mul(&binv);
    for j in 1..=(-n) {
        let f = one.sub(&pw);
        if f.is_zero() {
            return Err(Error::Pole(format!("factor j={j} of ({a}; {base})_{n} vanishes")));
        }
        out.push(f);
        pw = pw.mul(&binv);
    }
    Ok((out, true))
}

fn fold_factors(factors: Vec<QScalar>, invert: bool) -> Result<QScalar> {
    factors.into_iter().try_fold(QScalar::one(), |acc, f| Ok(acc.mul(&if invert { f.inv()? } else { f })))
}

/// `(a; base)_n`, extended to negative `n` by `1 / ∏_{j=1}^{-n} (1 - a base^{-j})`.
///
/// `base` must be a monomial in `t` alone.
pub fn qpochhammer(a: &QScalar, base: &QScalar, n: i64) -> Result<QScalar> {
    let (factors, den) = pochhammer_factors(a, base, n)?;
    fold_factors(factors, den)
}

/// `1 / (a; base)_n`.
pub fn qpochhammer_inv(a: &QScalar, base: &QScalar, n: i64) -> Result<QScalar> {
    let (factors, den) = pochhammer_factors(a, base, n)?;
    if !den && factors.iter().any(|f| f.is_zero()) {
        return Err(Error::Pole(format!("({a}; {base})_{n} vanishes")));
    }
    fold_factors(factors, !den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert!(qnum(0).is_zero());
        assert!(qnum(1).is_one());
        assert_eq!(qnum(2), QScalar::q_pow(1).add(&QScalar::q_pow(-1)));
        assert_eq!(qnum(-3), qnum(3).neg());
        assert!(qround(1, Base::Q).is_one());
        assert_eq!(qround(2, Base::Q), QScalar::q_pow(2).add(&QScalar::one()));
        assert!(qfactorial(0, Base::Q).unwrap().is_one());
        assert!(qfactorial(-1, Base::Q).is_err());
    }

    #[test]
    fn pochhammer_edges() {
        let a = QScalar::monomial(1, 3, 2);
        let q = QScalar::q_pow(1);
        assert!(qpochhammer(&a, &q, 0).unwrap().is_one());
        assert_eq!(qpochhammer(&a, &q, 1).unwrap(), QScalar::one().sub(&a));
        let expect = QScalar::one().sub(&a.mul(&QScalar::q_pow(-1))).inv().unwrap();
        assert_eq!(qpochhammer(&a, &q, -1).unwrap(), expect);
        assert!(matches!(qpochhammer(&QScalar::q_pow(2), &q, -3), Err(Error::Pole(_))));
        for n in -4..=4 {
            let direct = qpochhammer(&a, &q, n).unwrap().inv().unwrap();
            assert_eq!(qpochhammer_inv(&a, &q, n).unwrap(), direct);
        }
        for n in 0..=6 {
            assert_eq!(qfactorial_inv(n, Base::QInv).unwrap(), qfactorial(n, Base::QInv).unwrap().inv().unwrap());
            assert_eq!(qfactorial_sym_inv(n).unwrap(), qfactorial_sym(n).unwrap().inv().unwrap());
        }
    }
}
