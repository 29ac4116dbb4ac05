//! Numerical invariants from fixed-point arithmetic: the stringy Euler
//! characteristic, topological and holomorphic Lefschetz numbers,
//! Riemann-Hurwitz quotient genera and the invariant-relation checker.

mod hurwitz;
mod lefschetz;
mod relations;
mod stringy;

pub use hurwitz::{riemann_hurwitz, QuotientCurve};
pub use lefschetz::{
    hol_relation_check, lefschetz_hol_curve, lefschetz_hol_curve_sym, lefschetz_hol_k3,
    lefschetz_hol_point, lefschetz_top,
};
pub use relations::{check_relations, RelationEntry, RelationReport, Verdict};
pub use stringy::{stringy_euler, Factor};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("invalid record: {0}")]
    InvalidRecord(String),
    #[error("power {0} out of range for order {1}")]
    OutOfRange(u8, u8),
    /// A fixed direction (weight divisible by d) makes `det(1 - g)` vanish.
    #[error("singular linearisation: weight {0} is divisible by the order")]
    SingularLinearization(u8),
    /// Fixed curves on a K3 have self-intersection `2g - 2`.
    #[error("self-intersection {selfint} does not equal 2*{genus} - 2")]
    InvalidSelfIntersection { genus: u64, selfint: i64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeometryError),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}
