//! Per-identity verification results.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::qscalar::{Agreement, Anchor};
use crate::repr::Operator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Exact,
    Order,
    Fail,
}

/// First differing entry of a failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub suite: String,
    pub identity: String,
    pub legs: Vec<u32>,
    pub truncation: Option<u32>,
    pub verdict: Verdict,
    pub order: Option<u32>,
    pub witness: Option<Witness>,
    pub runtime_ms: u64,
}

/// How a comparison is judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Exact,
    /// Agreement of the expansions at `anchor`, capped at `cap`, passing
    /// when at least `min_order`.
    Order { anchor: Anchor, cap: u32, min_order: u32 },
}

impl IdentityReport {
    pub fn new(suite: &str, identity: &str, legs: &[u32]) -> Self {
        IdentityReport {
            suite: suite.into(),
            identity: identity.into(),
            legs: legs.to_vec(),
            truncation: None,
            verdict: Verdict::Exact,
            order: None,
            witness: None,
            runtime_ms: 0,
        }
    }

    pub fn with_truncation(mut self, k: Option<u32>) -> Self {
        self.truncation = k;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// A failure caused by an error raised while building either side.
    pub fn error(mut self, e: &crate::Error) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(Witness { row: 0, col: 0, lhs: format!("error: {e}"), rhs: String::new() });
        self
    }

    /// Fills the verdict from a comparison of `lhs` and `rhs`.
    pub fn compare(mut self, lhs: &Operator, rhs: &Operator, expect: Expect) -> Result<Self> {
        let diff = lhs.first_difference(rhs);
        let witness = diff.map(|(r, c)| Witness {
            row: r,
            col: c,
            lhs: lhs.get(r, c).canonical_string(),
            rhs: rhs.get(r, c).canonical_string(),
        });
        match expect {
            Expect::Exact => {
                self.verdict = if witness.is_none() { Verdict::Exact } else { Verdict::Fail };
                self.witness = witness;
            }
            Expect::Order { anchor, cap, min_order } => match lhs.agreement(rhs, anchor, cap)? {
                Agreement::Exact => self.verdict = Verdict::Exact,
                Agreement::Order(k) => {
                    self.order = Some(k);
                    self.verdict = if k >= min_order { Verdict::Order } else { Verdict::Fail };
                    self.witness = if k >= min_order { None } else { witness };
                }
            },
        }
        Ok(self)
    }

    /// Marks a boolean property.
    pub fn holds(mut self, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if !ok {
            self.verdict = Verdict::Fail;
            self.witness = Some(Witness { row: 0, col: 0, lhs: detail(), rhs: String::new() });
        }
        self
    }
}
