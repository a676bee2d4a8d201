//! Exact square matrices over [`QScalar`] acting on a [`RepSpace`].
//!
//! Products are written in operator order: `a.mul(&b)` is `a·b`, which
//! applies `b` first.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::space::RepSpace;
use crate::error::{Error, Result};
use crate::qscalar::{agreement_order, qfactorial_inv, Agreement, Anchor, Base, QScalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Operator {
    space: RepSpace,
    n: usize,
    data: Vec<QScalar>,
}

/// Serialized form used in golden files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorDump {
    pub legs: Vec<u32>,
    pub dim: usize,
    pub entries: Vec<String>,
}

const PAR_THRESHOLD: usize = 24;

impl Operator {
    pub fn zero(space: &RepSpace) -> Self {
        let n = space.dim();
        Operator { space: space.clone(), n, data: vec![QScalar::zero(); n * n] }
    }

    pub fn identity(space: &RepSpace) -> Self {
        let mut m = Self::zero(space);
        for i in 0..m.n {
            m.data[i * m.n + i] = QScalar::one();
        }
        m
    }

    pub fn diag(space: &RepSpace, d: Vec<QScalar>) -> Result<Self> {
        let mut m = Self::zero(space);
        if d.len() != m.n {
            return Err(Error::Dimension(format!("diagonal of length {} on dimension {}", d.len(), m.n)));
        }
        for (i, v) in d.into_iter().enumerate() {
            m.data[i * m.n + i] = v;
        }
        Ok(m)
    }

    pub fn from_fn(space: &RepSpace, f: impl Fn(usize, usize) -> QScalar) -> Self {
        let n = space.dim();
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Operator { space: space.clone(), n, data }
    }

    pub fn space(&self) -> &RepSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &QScalar {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: QScalar) {
        self.data[r * self.n + c] = v;
    }

    pub fn entries(&self) -> &[QScalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| if r == c { self.get(r, c).is_one() } else { self.get(r, c).is_zero() }))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| r == c || self.get(r, c).is_zero()))
    }

    fn check_same(&self, o: &Operator) -> Result<()> {
        if self.space != o.space {
            return Err(Error::Dimension(format!("{:?} vs {:?}", self.space.leg_dims(), o.space.leg_dims())));
        }
        Ok(())
    }

    pub fn map(&self, f: impl Fn(&QScalar) -> QScalar + Sync) -> Operator {
        let data = if self.n >= PAR_THRESHOLD {
            self.data.par_iter().map(|x| if x.is_zero() { x.clone() } else { f(x) }).collect()
        } else {
            self.data.iter().map(|x| if x.is_zero() { x.clone() } else { f(x) }).collect()
        };
        Operator { space: self.space.clone(), n: self.n, data }
    }

    fn zip(&self, o: &Operator, f: impl Fn(&QScalar, &QScalar) -> QScalar + Sync) -> Result<Operator> {
        self.check_same(o)?;
        let data = if self.n >= PAR_THRESHOLD {
            self.data.par_iter().zip(&o.data).map(|(a, b)| f(a, b)).collect()
        } else {
            self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect()
        };
        Ok(Operator { space: self.space.clone(), n: self.n, data })
    }

    pub fn add(&self, o: &Operator) -> Result<Operator> {
        self.zip(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &Operator) -> Result<Operator> {
        self.zip(o, |a, b| a.sub(b))
    }

    /// Sum of several operators with one common denominator per entry.
    pub fn sum(space: &RepSpace, ops: &[Operator]) -> Result<Operator> {
        for o in ops {
            if &o.space != space {
                return Err(Error::Dimension("sum over different spaces".into()));
            }
        }
        let n = space.dim();
        let entry = |k: usize| QScalar::sum(ops.iter().map(|o| o.data[k].clone()));
        let data = if n >= PAR_THRESHOLD { (0..n * n).into_par_iter().map(entry).collect() } else { (0..n * n).map(entry).collect() };
        Ok(Operator { space: space.clone(), n, data })
    }

    pub fn neg(&self) -> Operator {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, c: &QScalar) -> Operator {
        if c.is_one() {
            return self.clone();
        }
        self.map(|x| x.mul(c))
    }

    /// Operator product `self · o`.
    pub fn mul(&self, o: &Operator) -> Result<Operator> {
        self.check_same(o)?;
        let n = self.n;
        if self.is_diagonal() {
            let data = (0..n * n).map(|k| self.data[(k / n) * n + k / n].mul(&o.data[k])).collect();
            return Ok(Operator { space: self.space.clone(), n, data });
        }
        if o.is_diagonal() {
            let data = (0..n * n).map(|k| self.data[k].mul(&o.data[(k % n) * n + k % n])).collect();
            return Ok(Operator { space: self.space.clone(), n, data });
        }
        let rows_b: Vec<Vec<usize>> = (0..n).map(|k| (0..n).filter(|&j| !o.data[k * n + j].is_zero()).collect()).collect();
        let row = |i: usize| -> Vec<QScalar> {
            let mut acc: Vec<Vec<QScalar>> = vec![Vec::new(); n];
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for &j in &rows_b[k] {
                    acc[j].push(a.mul(&o.data[k * n + j]));
                }
            }
            acc.into_iter().map(QScalar::sum).collect()
        };
        let rows: Vec<Vec<QScalar>> = if n >= PAR_THRESHOLD { (0..n).into_par_iter().map(row).collect() } else { (0..n).map(row).collect() };
        Ok(Operator { space: self.space.clone(), n, data: rows.into_iter().flatten().collect() })
    }

    /// Left-to-right product of a nonempty list.
    pub fn product(ops: &[Operator]) -> Result<Operator> {
        let (first, rest) = ops.split_first().ok_or_else(|| Error::Invalid("empty product".into()))?;
        rest.iter().try_fold(first.clone(), |acc, o| acc.mul(o))
    }

    pub fn pow(&self, k: u32) -> Result<Operator> {
        let mut acc = Operator::identity(&self.space);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn commutator(&self, o: &Operator) -> Result<Operator> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    /// `a ⊗ b` on the concatenated space.
    pub fn kron(a: &Operator, b: &Operator) -> Operator {
        let space = a.space.tensor(&b.space);
        let (na, nb) = (a.n, b.n);
        let n = na * nb;
        let mut data = vec![QScalar::zero(); n * n];
        for i in 0..na {
            for j in 0..na {
                let x = a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..nb {
                    for l in 0..nb {
                        let y = b.get(k, l);
                        if !y.is_zero() {
                            data[(i * nb + k) * n + j * nb + l] = x.mul(y);
                        }
                    }
                }
            }
        }
        Operator { space, n, data }
    }

    /// Reorders legs: new leg `i` is old leg `perm[i]`.
    pub fn permute_legs(&self, perm: &[usize]) -> Result<Operator> {
        let space = self.space.permuted(perm)?;
        let map = self.space.permutation_map(perm)?;
        let n = self.n;
        let mut data = vec![QScalar::zero(); n * n];
        for r in 0..n {
            for c in 0..n {
                data[map[r] * n + map[c]] = self.data[r * n + c].clone();
            }
        }
        Ok(Operator { space, n, data })
    }

    /// Exact inverse by Gauss–Jordan elimination, preferring the simplest
    /// available pivot in each column.
    pub fn invert(&self) -> Result<Operator> {
        let n = self.n;
        let mut a: Vec<Vec<QScalar>> = (0..n).map(|r| self.data[r * n..(r + 1) * n].to_vec()).collect();
        let mut inv: Vec<Vec<QScalar>> =
            (0..n).map(|r| (0..n).map(|c| if r == c { QScalar::one() } else { QScalar::zero() }).collect()).collect();
        for col in 0..n {
            let pivot = (col..n).filter(|&r| !a[r][col].is_zero()).min_by_key(|&r| a[r][col].weight()).ok_or(Error::Singular(col))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p_inv = a[col][col].inv()?;
            if !p_inv.is_one() {
                a[col] = a[col].iter().map(|x| x.mul(&p_inv)).collect();
                inv[col] = inv[col].iter().map(|x| x.mul(&p_inv)).collect();
            }
            let (prow, pinv) = (a[col].clone(), inv[col].clone());
            let nz_a: Vec<usize> = (0..n).filter(|&j| !prow[j].is_zero()).collect();
            let nz_i: Vec<usize> = (0..n).filter(|&j| !pinv[j].is_zero()).collect();
            let eliminate = |(r, (row_a, row_i)): (usize, (&mut Vec<QScalar>, &mut Vec<QScalar>))| {
                if r == col || row_a[col].is_zero() {
                    return;
                }
                let f = row_a[col].clone();
                for &j in &nz_a {
                    row_a[j] = row_a[j].sub(&f.mul(&prow[j]));
                }
                for &j in &nz_i {
                    row_i[j] = row_i[j].sub(&f.mul(&pinv[j]));
                }
            };
            if n >= PAR_THRESHOLD {
                a.par_iter_mut().zip(inv.par_iter_mut()).enumerate().for_each(eliminate);
            } else {
                a.iter_mut().zip(inv.iter_mut()).enumerate().for_each(eliminate);
            }
        }
        Ok(Operator { space: self.space.clone(), n, data: inv.into_iter().flatten().collect() })
    }

    /// `Σ_k A^k / (k)_base!`, which terminates because `A` is nilpotent.
    pub fn qexp_nilpotent(&self, base: Base) -> Result<Operator> {
        let mut terms = vec![Operator::identity(&self.space)];
        let mut pw = self.clone();
        let mut k = 1i64;
        while !pw.is_zero() {
            if k as usize > self.n {
                return Err(Error::NotNilpotent);
            }
            let c = qfactorial_inv(k, base)?;
            terms.push(pw.scale(&c));
            pw = pw.mul(self)?;
            k += 1;
        }
        Operator::sum(&self.space, &terms)
    }

    /// Substitutes `x -> x q^{μ}` blockwise, `μ` the summed weight of `legs`
    /// (that is `y -> y t^{2μ}`). The operator must act trivially on `legs`.
    pub fn shift(&self, legs: &[usize]) -> Result<Operator> {
        for &l in legs {
            if l >= self.space.n_legs() {
                return Err(Error::LegOutOfRange(l));
            }
        }
        let mu: Vec<i32> = (0..self.n).map(|i| legs.iter().map(|&l| self.space.leg_weight(i, l)).sum()).collect();
        let n = self.n;
        for r in 0..n {
            for c in 0..n {
                if !self.data[r * n + c].is_zero() && mu[r] != mu[c] {
                    return Err(Error::Invalid(format!("operator does not preserve the weight of legs {legs:?}")));
                }
            }
        }
        let shifted = |k: usize| {
            let x = &self.data[k];
            if x.is_zero() {
                x.clone()
            } else {
                x.shift_y(2 * mu[k / n])
            }
        };
        let data = if n >= PAR_THRESHOLD { (0..n * n).into_par_iter().map(shifted).collect() } else { (0..n * n).map(shifted).collect() };
        Ok(Operator { space: self.space.clone(), n, data })
    }

    /// True if the operator commutes with the total weight.
    pub fn is_zero_weight(&self) -> bool {
        let w = self.space.total_weights();
        (0..self.n).all(|r| (0..self.n).all(|c| w[r] == w[c] || self.get(r, c).is_zero()))
    }

    /// First entry (row-major) where the two operators differ.
    pub fn first_difference(&self, o: &Operator) -> Option<(usize, usize)> {
        if self.space != o.space {
            return Some((0, 0));
        }
        (0..self.n * self.n).find(|&k| self.data[k] != o.data[k]).map(|k| (k / self.n, k % self.n))
    }

    /// Entrywise minimum order of agreement.
    pub fn agreement(&self, o: &Operator, anchor: Anchor, cap: u32) -> Result<Agreement> {
        self.check_same(o)?;
        let per = |k: usize| agreement_order(&self.data[k], &o.data[k], anchor, cap);
        let all: Vec<Agreement> =
            if self.n >= PAR_THRESHOLD { (0..self.n * self.n).into_par_iter().map(per).collect() } else { (0..self.n * self.n).map(per).collect() };
        Ok(all.into_iter().fold(Agreement::Exact, Agreement::min))
    }

    pub fn dump(&self) -> OperatorDump {
        OperatorDump { legs: self.space.leg_dims(), dim: self.n, entries: self.data.iter().map(|x| x.canonical_string()).collect() }
    }

    pub fn from_dump(d: &OperatorDump) -> Result<Operator> {
        let space = RepSpace::new(&d.legs);
        if space.dim() != d.dim || d.entries.len() != d.dim * d.dim {
            return Err(Error::Dimension("dump size does not match its legs".into()));
        }
        let data = d.entries.iter().map(|s| QScalar::parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(Operator { space, n: d.dim, data })
    }

    /// One line per row, entries separated by ` | `.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| self.get(r, c).canonical_string()).collect();
            out.push_str(&row.join(" | "));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Debug for Operator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Operator on {:?}:", self.space.leg_dims())?;
        f.write_str(&self.pretty())
    }
}
