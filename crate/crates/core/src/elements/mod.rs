//! Recipes for the named elements and the catalog of stable identifiers.

mod catalog;
mod recipe;

pub use catalog::*;
pub use recipe::{DiagFn, Evaluator, Gen, Node, Recipe, TermFn};
