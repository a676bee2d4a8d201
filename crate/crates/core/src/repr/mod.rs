//! Finite-dimensional modules, exact operators and generator matrices.

mod generators;
mod operator;
mod space;

pub use generators::{build_irrep, coproduct_generators, h_diagonal, slot_weights, tensor_slots, SlotGenerators};
pub use operator::{Operator, OperatorDump};
pub use space::{IrrepSpec, RepSpace};
