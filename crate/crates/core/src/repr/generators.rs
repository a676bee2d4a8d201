//! Matrices of `h`, `e`, `f`, `E±` and `q^{h/2}` on a set of tensor legs.
//!
//! On a set of legs the generators are the iterated coproduct
//! `ΔE± = E± ⊗ q^{h/2} + q^{-h/2} ⊗ E±`, with `E+ = q^{-h/2} e` and
//! `E- = f q^{h/2}`.

use super::operator::Operator;
use super::space::RepSpace;
use crate::error::{Error, Result};
use crate::qscalar::{qnum, QScalar};

/// Generators acting on `slots` of `space`, identity on the other legs.
#[derive(Clone, Debug)]
pub struct SlotGenerators {
    pub space: RepSpace,
    pub slots: Vec<usize>,
    /// Summed weight of `slots` at each basis vector.
    pub weight: Vec<i32>,
    pub h: Operator,
    /// `q^{h/2}`.
    pub k: Operator,
    pub e: Operator,
    pub f: Operator,
    pub eplus: Operator,
    pub eminus: Operator,
}

fn check_slots(space: &RepSpace, slots: &[usize]) -> Result<()> {
    for (i, &s) in slots.iter().enumerate() {
        if s >= space.n_legs() {
            return Err(Error::LegOutOfRange(s));
        }
        if slots[..i].contains(&s) {
            return Err(Error::Invalid(format!("repeated slot {s}")));
        }
    }
    Ok(())
}

/// Summed weight of `slots` at each basis vector.
pub fn slot_weights(space: &RepSpace, slots: &[usize]) -> Vec<i32> {
    (0..space.dim()).map(|i| slots.iter().map(|&l| space.leg_weight(i, l)).sum()).collect()
}

/// Diagonal operator whose entry depends on the weights of `slots`.
pub fn h_diagonal(space: &RepSpace, slots: &[usize], f: impl Fn(&[i32]) -> QScalar) -> Result<Operator> {
    check_slots(space, slots)?;
    let d = (0..space.dim())
        .map(|i| {
            let w: Vec<i32> = slots.iter().map(|&l| space.leg_weight(i, l)).collect();
            f(&w)
        })
        .collect();
    Operator::diag(space, d)
}

impl SlotGenerators {
    pub fn new(space: &RepSpace, slots: &[usize]) -> Result<Self> {
        check_slots(space, slots)?;
        if slots.is_empty() {
            return Err(Error::Invalid("empty slot set".into()));
        }
        let n = space.dim();
        let weight = slot_weights(space, slots);
        let mut eplus = Operator::zero(space);
        let mut eminus = Operator::zero(space);
        for c in 0..n {
            let ks = space.multi_index(c);
            let mus: Vec<i32> = slots.iter().map(|&l| space.leg_weight(c, l)).collect();
            for (j, &l) in slots.iter().enumerate() {
                let p = space.legs()[l].p as i32;
                let k = ks[l] as i32;
                let before: i32 = mus[..j].iter().sum();
                let after: i32 = mus[j + 1..].iter().sum();
                if k > 0 {
                    let mut out = ks.clone();
                    out[l] -= 1;
                    let out_w = p - 2 * (k - 1);
                    let c_val = qnum((p - k + 1) as i64).mul(&QScalar::t_pow(2 * (after - before - out_w)));
                    eplus.set(space.flat_index(&out), c, c_val);
                }
                if k < p {
                    let mut out = ks.clone();
                    out[l] += 1;
                    let c_val = qnum((k + 1) as i64).mul(&QScalar::t_pow(2 * (after - before + mus[j])));
                    eminus.set(space.flat_index(&out), c, c_val);
                }
            }
        }
        let h = Operator::diag(space, weight.iter().map(|&w| QScalar::from_int(w as i64)).collect())?;
        let k = Operator::diag(space, weight.iter().map(|&w| QScalar::t_pow(2 * w)).collect())?;
        let k_inv = Operator::diag(space, weight.iter().map(|&w| QScalar::t_pow(-2 * w)).collect())?;
        let e = k.mul(&eplus)?;
        let f = eminus.mul(&k_inv)?;
        Ok(SlotGenerators { space: space.clone(), slots: slots.to_vec(), weight, h, k, e, f, eplus, eminus })
    }
}

/// Generators of `V_p`.
pub fn build_irrep(p: u32) -> SlotGenerators {
    SlotGenerators::new(&RepSpace::single(p), &[0]).expect("single leg")
}

/// Coproduct generators on `V_{p1} ⊗ V_{p2}`.
pub fn coproduct_generators(p1: u32, p2: u32) -> SlotGenerators {
    SlotGenerators::new(&RepSpace::new(&[p1, p2]), &[0, 1]).expect("two legs")
}

/// One generator set per leg of `space`.
pub fn tensor_slots(space: &RepSpace) -> Vec<SlotGenerators> {
    (0..space.n_legs()).map(|l| SlotGenerators::new(space, &[l]).expect("leg in range")).collect()
}

impl Operator {
    /// Places `op` on the legs `slots` of `space`, identity elsewhere.
    /// The legs of `op` must match `slots` in order.
    pub fn embed(&self, space: &RepSpace, slots: &[usize]) -> Result<Operator> {
        check_slots(space, slots)?;
        let sub = self.space();
        if sub.n_legs() != slots.len() || slots.iter().zip(sub.legs()).any(|(&s, l)| space.legs()[s] != *l) {
            return Err(Error::Dimension(format!("cannot place {:?} on slots {slots:?} of {:?}", sub.leg_dims(), space.leg_dims())));
        }
        let n = space.dim();
        let sub_index = |i: usize| {
            let ks = space.multi_index(i);
            let sk: Vec<usize> = slots.iter().map(|&s| ks[s]).collect();
            let mut rest = ks;
            for &s in slots {
                rest[s] = usize::MAX;
            }
            (sub.flat_index(&sk), rest)
        };
        let idx: Vec<(usize, Vec<usize>)> = (0..n).map(sub_index).collect();
        Ok(Operator::from_fn(space, |r, c| {
            if idx[r].1 == idx[c].1 {
                self.get(idx[r].0, idx[c].0).clone()
            } else {
                QScalar::zero()
            }
        }))
    }
}
