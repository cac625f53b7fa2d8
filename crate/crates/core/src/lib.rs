//! Exact decision procedures, witness constructions and exhaustive verification
//! for one-sided `(b, c)`-inverses and related generalized inverses over finite
//! rings.

pub mod bc;
pub mod cli;
pub mod harness;
pub mod ideal;
pub mod linalg;
pub mod perturbation;
pub mod product;
pub mod ring;

pub use ideal::{Ideal, Side};
pub use linalg::{IntMatrix, SmithForm};
pub use ring::{Element, Ring, RingError, RingSpec};

/// 64-bit integer matrices, the default for the factor solvers.
pub type IntMatrix64 = IntMatrix<i64>;
/// 128-bit integer matrices, for callers who need extra headroom.
pub type IntMatrix128 = IntMatrix<i128>;
pub type SmithForm64 = SmithForm<i64>;
