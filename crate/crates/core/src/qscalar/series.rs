//! Laurent expansions in `y` at `y → ∞` or `y → 0`, with `t`-rational
//! coefficients, and the order-of-agreement measure built on them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::int::Int;
use super::scalar::QScalar;
use super::zpoly::ZPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Anchor {
    /// expansion in `y^{-1}` (large `x`)
    Infinity,
    /// expansion in `y` (small `x`)
    Zero,
}

/// Truncated expansion. Exponents beyond `order` in the expansion direction
/// are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    pub anchor: Anchor,
    pub coeffs: BTreeMap<i32, QScalar>,
    pub order: i32,
}

/// Result of comparing two expansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Agreement {
    Exact,
    Order(u32),
}

impl Agreement {
    /// `Exact` compares above every finite order.
    pub fn min(self, other: Agreement) -> Agreement {
        match (self, other) {
            (Agreement::Exact, o) | (o, Agreement::Exact) => o,
            (Agreement::Order(a), Agreement::Order(b)) => Agreement::Order(a.min(b)),
        }
    }

    pub fn order(self) -> Option<u32> {
        match self {
            Agreement::Exact => None,
            Agreement::Order(n) => Some(n),
        }
    }

    /// Numeric rank where `Exact` beats everything.
    pub fn rank(self) -> u64 {
        match self {
            Agreement::Exact => u64::MAX,
            Agreement::Order(n) => n as u64,
        }
    }
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Agreement::Exact => f.write_str("exact"),
            Agreement::Order(n) => write!(f, "order {n}"),
        }
    }
}

/// Splits a polynomial into `t`-only coefficients keyed by `y`-exponent.
fn y_slices(p: &ZPoly) -> BTreeMap<i32, QScalar> {
    let mut by: BTreeMap<i32, Vec<((i32, i32), Int)>> = BTreeMap::new();
    for ((a, b), c) in p.terms() {
        by.entry(*b).or_default().push(((*a, 0), c.clone()));
    }
    by.into_iter().map(|(b, ts)| (b, QScalar::from_zpoly(&ZPoly::from_terms(ts)))).collect()
}

/// Expands `r` at `anchor`, keeping exponents `e` with `e ≥ -order` at
/// infinity and `e ≤ order` at zero.
pub fn expand(r: &QScalar, anchor: Anchor, order: i32) -> LaurentSeries {
    let mut coeffs = BTreeMap::new();
    if r.is_zero() {
        return LaurentSeries { anchor, coeffs, order };
    }
    let (num, den) = r.num_den();
    let (ns, ds) = (y_slices(&num), y_slices(&den));
    // orient so that index k counts steps away from the leading exponent
    let dir: i32 = match anchor {
        Anchor::Infinity => -1,
        Anchor::Zero => 1,
    };
    let lead = |m: &BTreeMap<i32, QScalar>| -> i32 {
        match anchor {
            Anchor::Infinity => *m.keys().next_back().expect("nonzero"),
            Anchor::Zero => *m.keys().next().expect("nonzero"),
        }
    };
    let (ni, dj) = (lead(&ns), lead(&ds));
    let top = ni - dj;
    let d0_inv = ds[&dj].inv().expect("leading coefficient is nonzero");
    let mut c: Vec<QScalar> = Vec::new();
    let mut k = 0i32;
    loop {
        let e = top + dir * k;
        if (anchor == Anchor::Infinity && e < -order) || (anchor == Anchor::Zero && e > order) {
            break;
        }
        let mut acc = vec![ns.get(&(ni + dir * k)).cloned().unwrap_or_else(QScalar::zero)];
        for m in 1..=k {
            if let Some(dm) = ds.get(&(dj + dir * m)) {
                acc.push(dm.mul(&c[(k - m) as usize]).neg());
            }
        }
        let ck = QScalar::sum(acc).mul(&d0_inv);
        if !ck.is_zero() {
            coeffs.insert(e, ck.clone());
        }
        c.push(ck);
        k += 1;
    }
    LaurentSeries { anchor, coeffs, order }
}

impl LaurentSeries {
    /// Smallest absolute exponent where the two expansions differ, clamped
    /// to `[0, order]`; `Exact` if they agree through the common order.
    pub fn agreement_order(&self, other: &LaurentSeries) -> Agreement {
        let order = self.order.min(other.order);
        let mut keys: Vec<i32> = self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        if self.anchor == Anchor::Infinity {
            keys.reverse();
        }
        for e in keys {
            let a = self.coeffs.get(&e);
            let b = other.coeffs.get(&e);
            if a != b {
                let v = match self.anchor {
                    Anchor::Infinity => -e,
                    Anchor::Zero => e,
                };
                return Agreement::Order(v.clamp(0, order) as u32);
            }
        }
        Agreement::Exact
    }
}

/// Order of agreement of two exact values at `anchor`, capped at `cap`.
///
/// Equal values give `Exact`; otherwise the `y`-valuation of the difference
/// clamped to `[0, cap]`.
pub fn agreement_order(a: &QScalar, b: &QScalar, anchor: Anchor, cap: u32) -> Agreement {
    if a == b {
        return Agreement::Exact;
    }
    Agreement::Order(difference_valuation(&a.sub(b), anchor).clamp(0, cap as i32) as u32)
}

/// `y`-valuation of a nonzero difference at `anchor`.
pub fn difference_valuation(d: &QScalar, anchor: Anchor) -> i32 {
    match anchor {
        Anchor::Infinity => d.valuation_at_infinity(),
        Anchor::Zero => d.valuation_at_zero(),
    }
    .expect("difference is nonzero")
}
