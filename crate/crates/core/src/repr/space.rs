//! Tensor products of irreducible modules and their weight bookkeeping.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The irreducible module `V_p` of dimension `p + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrepSpec {
    pub p: u32,
}

impl IrrepSpec {
    pub fn dim(&self) -> usize {
        self.p as usize + 1
    }

    /// Weight of `v_k`.
    pub fn weight(&self, k: usize) -> i32 {
        self.p as i32 - 2 * k as i32
    }
}

/// `V_{p_1} ⊗ ... ⊗ V_{p_n}` with row-major multi-indices (leg 1 slowest).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepSpace {
    legs: Vec<IrrepSpec>,
}

impl RepSpace {
    pub fn new(ps: &[u32]) -> Self {
        RepSpace { legs: ps.iter().map(|&p| IrrepSpec { p }).collect() }
    }

    pub fn single(p: u32) -> Self {
        Self::new(&[p])
    }

    pub fn legs(&self) -> &[IrrepSpec] {
        &self.legs
    }

    pub fn leg_dims(&self) -> Vec<u32> {
        self.legs.iter().map(|l| l.p).collect()
    }

    pub fn n_legs(&self) -> usize {
        self.legs.len()
    }

    pub fn dim(&self) -> usize {
        self.legs.iter().map(|l| l.dim()).product()
    }

    pub fn tensor(&self, other: &RepSpace) -> RepSpace {
        RepSpace { legs: self.legs.iter().chain(other.legs.iter()).copied().collect() }
    }

    fn strides(&self) -> Vec<usize> {
        let mut s = vec![1usize; self.legs.len()];
        for i in (0..self.legs.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * self.legs[i + 1].dim();
        }
        s
    }

    pub fn multi_index(&self, idx: usize) -> Vec<usize> {
        let strides = self.strides();
        self.legs.iter().zip(&strides).map(|(l, s)| (idx / s) % l.dim()).collect()
    }

    pub fn flat_index(&self, ks: &[usize]) -> usize {
        self.strides().iter().zip(ks).map(|(s, k)| s * k).sum()
    }

    /// Weight of `leg` at basis vector `idx`.
    pub fn leg_weight(&self, idx: usize, leg: usize) -> i32 {
        let s = self.strides()[leg];
        self.legs[leg].weight((idx / s) % self.legs[leg].dim())
    }

    /// Per-basis-vector weight of one leg.
    pub fn leg_weights(&self, leg: usize) -> Vec<i32> {
        (0..self.dim()).map(|i| self.leg_weight(i, leg)).collect()
    }

    /// Per-basis-vector total weight.
    pub fn total_weights(&self) -> Vec<i32> {
        (0..self.dim()).map(|i| (0..self.legs.len()).map(|l| self.leg_weight(i, l)).sum()).collect()
    }

    /// Space with legs reordered: new leg `i` is old leg `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<RepSpace> {
        check_perm(perm, self.legs.len())?;
        Ok(RepSpace { legs: perm.iter().map(|&i| self.legs[i]).collect() })
    }

    /// `map[old_index] = new_index` for the leg permutation `perm`.
    pub fn permutation_map(&self, perm: &[usize]) -> Result<Vec<usize>> {
        let target = self.permuted(perm)?;
        Ok((0..self.dim())
            .map(|idx| {
                let ks = self.multi_index(idx);
                let new_ks: Vec<usize> = perm.iter().map(|&i| ks[i]).collect();
                target.flat_index(&new_ks)
            })
            .collect())
    }
}

fn check_perm(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Arity { expected: n, got: perm.len() });
    }
    let mut seen = vec![false; n];
    for &i in perm {
        if i >= n || seen[i] {
            return Err(Error::Invalid(format!("{perm:?} is not a permutation of {n} legs")));
        }
        seen[i] = true;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_and_weights() {
        let s = RepSpace::new(&[1, 2]);
        assert_eq!(s.dim(), 6);
        assert_eq!(s.multi_index(4), vec![1, 1]);
        assert_eq!(s.flat_index(&[1, 1]), 4);
        assert_eq!(s.total_weights(), vec![3, 1, -1, 1, -1, -3]);
        let map = s.permutation_map(&[1, 0]).unwrap();
        let mut sorted = map.clone();
        sorted.sort();
        assert_eq!(sorted, (0..6).collect::<Vec<_>>());
        assert!(s.permuted(&[0, 0]).is_err());
    }
}
