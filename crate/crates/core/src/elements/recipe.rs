//! Representation-functorial element descriptions.
//!
//! A [`Recipe`] refers to abstract slots `0..arity`. Evaluation binds each
//! slot to a set of tensor legs; a slot bound to several legs sees the
//! iterated coproduct generators, so evaluating a one-slot recipe with slot 0
//! bound to legs `[0, 1]` yields `Δ(Q)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::qscalar::{Base, QScalar};
use crate::repr::{Operator, RepSpace, SlotGenerators};

/// Generator attached to one slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    H,
    E,
    F,
    EPlus,
    EMinus,
    /// `q^{h/2}`.
    K,
}

pub type DiagFn = Arc<dyn Fn(&[i32]) -> Result<QScalar> + Send + Sync>;
pub type TermFn = Arc<dyn Fn(u32) -> Result<Option<Recipe>> + Send + Sync>;

pub enum Node {
    Identity,
    Const(QScalar),
    Gen { slot: usize, gen: Gen },
    /// Diagonal depending on the weights of `slots`, in that order.
    Diag { slots: Vec<usize>, label: String, f: DiagFn },
    Sum(Vec<Recipe>),
    Product(Vec<Recipe>),
    Scale(QScalar, Recipe),
    Inverse(Recipe),
    Pow(Recipe, u32),
    QExp(Recipe, Base),
    /// `Σ_{k=0}^{N} term(k)` with `N` the smallest total highest weight among
    /// `slots`; beyond it every `e^k` or `f^k` on those slots vanishes.
    IndexSum { label: String, slots: Vec<usize>, term: TermFn },
    /// Evaluates the inner recipe with slot `i` bound to outer slot `map[i]`.
    Relabel(Recipe, Vec<usize>),
}

#[derive(Clone)]
pub struct Recipe(Arc<Node>);

impl Recipe {
    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn identity() -> Recipe {
        Recipe(Arc::new(Node::Identity))
    }

    pub fn constant(c: QScalar) -> Recipe {
        Recipe(Arc::new(Node::Const(c)))
    }

    pub fn gen(slot: usize, gen: Gen) -> Recipe {
        Recipe(Arc::new(Node::Gen { slot, gen }))
    }

    pub fn diag(slots: &[usize], label: &str, f: impl Fn(&[i32]) -> Result<QScalar> + Send + Sync + 'static) -> Recipe {
        Recipe(Arc::new(Node::Diag { slots: slots.to_vec(), label: label.into(), f: Arc::new(f) }))
    }

    /// Diagonal in the weight of a single slot.
    pub fn hfun(slot: usize, label: &str, f: impl Fn(i32) -> QScalar + Send + Sync + 'static) -> Recipe {
        Self::diag(&[slot], label, move |w| Ok(f(w[0])))
    }

    pub fn sum(items: Vec<Recipe>) -> Recipe {
        Recipe(Arc::new(Node::Sum(items)))
    }

    pub fn product(items: Vec<Recipe>) -> Recipe {
        Recipe(Arc::new(Node::Product(items)))
    }

    pub fn scale(&self, c: QScalar) -> Recipe {
        Recipe(Arc::new(Node::Scale(c, self.clone())))
    }

    pub fn inverse(&self) -> Recipe {
        Recipe(Arc::new(Node::Inverse(self.clone())))
    }

    pub fn pow(&self, k: u32) -> Recipe {
        Recipe(Arc::new(Node::Pow(self.clone(), k)))
    }

    pub fn qexp(&self, base: Base) -> Recipe {
        Recipe(Arc::new(Node::QExp(self.clone(), base)))
    }

    pub fn index_sum(label: &str, slots: &[usize], term: impl Fn(u32) -> Result<Option<Recipe>> + Send + Sync + 'static) -> Recipe {
        Recipe(Arc::new(Node::IndexSum { label: label.into(), slots: slots.to_vec(), term: Arc::new(term) }))
    }

    pub fn relabel(&self, map: &[usize]) -> Recipe {
        Recipe(Arc::new(Node::Relabel(self.clone(), map.to_vec())))
    }

    pub fn then(&self, o: &Recipe) -> Recipe {
        Self::product(vec![self.clone(), o.clone()])
    }

    /// Evaluates with slot `i` bound to the legs `groups[i]` of `space`.
    pub fn eval(&self, space: &RepSpace, groups: &[Vec<usize>]) -> Result<Operator> {
        Evaluator::new(space).eval(self, groups)
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }
}

impl fmt::Debug for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Identity => write!(f, "1"),
            Node::Const(c) => write!(f, "({c})"),
            Node::Gen { slot, gen } => write!(f, "{gen:?}_{slot}"),
            Node::Diag { slots, label, .. } => write!(f, "{label}{slots:?}"),
            Node::Sum(v) => f.debug_tuple("Sum").field(v).finish(),
            Node::Product(v) => f.debug_tuple("Product").field(v).finish(),
            Node::Scale(c, r) => write!(f, "({c})*{r:?}"),
            Node::Inverse(r) => write!(f, "{r:?}^-1"),
            Node::Pow(r, k) => write!(f, "{r:?}^{k}"),
            Node::QExp(r, b) => write!(f, "exp_{b:?}({r:?})"),
            Node::IndexSum { label, slots, .. } => write!(f, "Σ {label}{slots:?}"),
            Node::Relabel(r, m) => write!(f, "{r:?}{m:?}"),
        }
    }
}

/// Evaluates recipes on one space, sharing generator matrices and results
/// of repeated subexpressions.
pub struct Evaluator {
    space: RepSpace,
    gens: HashMap<Vec<usize>, SlotGenerators>,
    memo: HashMap<(usize, Vec<Vec<usize>>), Operator>,
    /// Keeps every memoized recipe alive so pointer keys are never reused.
    keep: Vec<Recipe>,
}

impl Evaluator {
    pub fn new(space: &RepSpace) -> Self {
        Evaluator { space: space.clone(), gens: HashMap::new(), memo: HashMap::new(), keep: Vec::new() }
    }

    pub fn space(&self) -> &RepSpace {
        &self.space
    }

    fn generators(&mut self, legs: &[usize]) -> Result<&SlotGenerators> {
        if !self.gens.contains_key(legs) {
            let g = SlotGenerators::new(&self.space, legs)?;
            self.gens.insert(legs.to_vec(), g);
        }
        Ok(&self.gens[legs])
    }

    fn group<'a>(groups: &'a [Vec<usize>], slot: usize) -> Result<&'a [usize]> {
        groups.get(slot).map(|g| g.as_slice()).ok_or(Error::Arity { expected: slot + 1, got: groups.len() })
    }

    pub fn eval(&mut self, r: &Recipe, groups: &[Vec<usize>]) -> Result<Operator> {
        let key = (r.key(), groups.to_vec());
        if let Some(op) = self.memo.get(&key) {
            return Ok(op.clone());
        }
        let space = self.space.clone();
        let out = match r.node() {
            Node::Identity => Operator::identity(&space),
            Node::Const(c) => Operator::identity(&space).scale(c),
            Node::Gen { slot, gen } => {
                let legs = Self::group(groups, *slot)?.to_vec();
                let g = self.generators(&legs)?;
                match gen {
                    Gen::H => g.h.clone(),
                    Gen::E => g.e.clone(),
                    Gen::F => g.f.clone(),
                    Gen::EPlus => g.eplus.clone(),
                    Gen::EMinus => g.eminus.clone(),
                    Gen::K => g.k.clone(),
                }
            }
            Node::Diag { slots, f, .. } => {
                let legs: Vec<&[usize]> = slots.iter().map(|&s| Self::group(groups, s)).collect::<Result<_>>()?;
                let d = (0..space.dim())
                    .map(|i| {
                        let w: Vec<i32> = legs.iter().map(|ls| ls.iter().map(|&l| space.leg_weight(i, l)).sum()).collect();
                        f(&w)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Operator::diag(&space, d)?
            }
            Node::Sum(items) => {
                let ops = items.iter().map(|x| self.eval(x, groups)).collect::<Result<Vec<_>>>()?;
                Operator::sum(&space, &ops)?
            }
            Node::Product(items) => {
                let ops = items.iter().map(|x| self.eval(x, groups)).collect::<Result<Vec<_>>>()?;
                if ops.is_empty() {
                    Operator::identity(&space)
                } else {
                    Operator::product(&ops)?
                }
            }
            Node::Scale(c, x) => self.eval(x, groups)?.scale(c),
            Node::Inverse(x) => self.eval(x, groups)?.invert()?,
            Node::Pow(x, k) => self.eval(x, groups)?.pow(*k)?,
            Node::QExp(x, base) => self.eval(x, groups)?.qexp_nilpotent(*base)?,
            Node::IndexSum { slots, term, .. } => {
                let bound = slots
                    .iter()
                    .map(|&s| Self::group(groups, s).map(|ls| ls.iter().map(|&l| space.legs()[l].p).sum::<u32>()))
                    .collect::<Result<Vec<u32>>>()?
                    .into_iter()
                    .min()
                    .unwrap_or(0);
                let mut ops = Vec::new();
                for k in 0..=bound {
                    if let Some(t) = term(k)? {
                        ops.push(self.eval(&t, groups)?);
                    }
                }
                if ops.is_empty() {
                    Operator::zero(&space)
                } else {
                    Operator::sum(&space, &ops)?
                }
            }
            Node::Relabel(x, map) => {
                let inner: Vec<Vec<usize>> = map.iter().map(|&s| Self::group(groups, s).map(|g| g.to_vec())).collect::<Result<_>>()?;
                self.eval(x, &inner)?
            }
        };
        self.memo.insert(key, out.clone());
        self.keep.push(r.clone());
        Ok(out)
    }
}
