//! Exact scalars: rational functions in `t = q^{1/4}` and `y = x^{1/2}`.

mod cyclo;
mod gcd;
mod int;
mod laurent;
mod qcomb;
mod scalar;
mod series;
mod zpoly;

pub use int::Int;
pub use laurent::LaurentPoly;
pub use qcomb::{qfactorial, qfactorial_inv, qfactorial_sym, qfactorial_sym_inv, qnum, qpochhammer, qpochhammer_inv, qround, Base};
pub use scalar::QScalar;
pub use series::{agreement_order, difference_valuation, expand, Agreement, Anchor, LaurentSeries};
pub use zpoly::{Exp, ZPoly};
