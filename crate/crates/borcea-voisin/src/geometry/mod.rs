//! Invariant records for the building blocks `(E_d, alpha_d)` and
//! `(S_d, gamma_d)`, fixed-locus Euler characteristics, and the per-sector
//! generating tables built from the records.

mod ftable;
mod records;

pub use ftable::{ftable_elliptic, ftable_k3, FTable};
pub use records::{
    elliptic_euler_pair, elliptic_fix_euler, fix_euler, k3_euler_pair, k3_field_names,
    record_from_json, record_to_json, AnyRecord, EllipticRecord, K3Record, Mode, RecordDoc,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("invalid record: {0}")]
    InvalidRecord(String),
    #[error("power {0} out of range for order {1}")]
    OutOfRange(u8, u8),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("record schema error: {0}")]
    Schema(String),
}
