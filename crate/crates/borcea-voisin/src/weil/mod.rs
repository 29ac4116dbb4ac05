//! Local zeta functions as signed multisets of Weil-eigenvalue monomials.
//!
//! A rational function `prod over lambda of (1 - lambda T)^(m(lambda))` is
//! stored as the map `lambda -> m(lambda)`; positive multiplicity means
//! numerator. Eigenvalues are monomials `q^(e/D) * prod of formal symbols`,
//! where each symbol carries its conjugate, its weight (the declared
//! relation `lambda * conj(lambda) = q^weight`) and optionally a
//! root-of-unity order. On this representation the tensor product is a
//! multiplicative convolution, Tate twists shift `q`-exponents, inversion
//! negates multiplicities and the integral-power filter is a key test —
//! exactly the operations the orbifold zeta-function formula needs.

mod factorset;
mod registry;
mod render;
mod resultant;
mod ztable;

pub use factorset::{FactorSetDoc, WeilMonomial, ZetaFactorSet};
pub use registry::{SymbolTable, WeilSymbol};
pub use render::{zf_render, RenderStyle};
pub use resultant::{expand_factorset, poly_tensor_resultant, TPoly};
pub use ztable::{orbifold_zeta, OrbifoldZeta, ZTable, ZTableDoc};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeilError {
    #[error("symbol `{0}` declared twice with different data")]
    RegistryConflict(String),
    #[error("symbol `{0}` is not registered")]
    UnknownSymbol(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("generic Frobenius table needs cycle-type data")]
    MissingFrobeniusData,
    #[error("render error: {0}")]
    RenderError(String),
    #[error("polynomial must have constant term 1")]
    NonUnitConstantTerm,
    #[error("factor set has fractional q-exponents; filter before expanding")]
    NonIntegralExponent,
    #[error("factor set has denominator factors; expansion needs a pure numerator")]
    NegativeMultiplicity,
    #[error("need at least two factors (got {0})")]
    TooFewFactors(usize),
    #[error("table orders differ: {0} vs {1}")]
    OrderMismatch(u8, u8),
    #[error("factor-set schema error: {0}")]
    Schema(String),
}
