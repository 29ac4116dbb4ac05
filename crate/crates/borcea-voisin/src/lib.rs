//! Exact invariants of Borcea-Voisin type Calabi-Yau orbifolds.
//!
//! This crate computes, in exact arithmetic, the main invariants of the
//! crepant resolutions of quotients
//!
//! ```text
//!   (X_1 x X_2 x ... x X_n) / Z_d^(n-1),      d in {2, 3, 4, 6},
//! ```
//!
//! where each factor is an elliptic curve or a K3 surface carrying a purely
//! non-symplectic automorphism of order `d`. The factors are described by
//! finite invariant records (fixed-locus data and eigenspace dimensions);
//! everything downstream is symbolic computer algebra:
//!
//! * [`algebra`] — the arithmetic kernel: big rationals, sparse parameter
//!   polynomials, Puiseux polynomials in `X, Y` with exponents in `(1/d)Z`,
//!   and exact cyclotomic numbers in `Q(zeta_d)`.
//! * [`geometry`] — invariant records for the building blocks and the
//!   per-sector generating tables built from them.
//! * [`hodge`] — the orbifold cohomology engine: sector sums, the full
//!   Puiseux generating polynomial, Hodge diamonds, Euler characteristics
//!   and the linear recurrences they satisfy.
//! * [`arith`] — stringy Euler characteristics, topological and holomorphic
//!   Lefschetz numbers, Riemann-Hurwitz quotient genera and the invariant
//!   relation checker.
//! * [`weil`] — the zeta-function calculus: signed Weil-eigenvalue factor
//!   sets, tensor products (with a resultant-based oracle), Tate twists,
//!   the orbifold zeta driver and conjugate-pair rendering.
//! * [`presets`] — bundled, provenance-annotated data: the elliptic curves
//!   `E_d`, generic symbolic K3 records, surface no. 18 (order 6), the
//!   six-lines double sextic (order 2) and their Frobenius tables.
//! * [`output`] — deterministic text / JSON / LaTeX emitters used by the
//!   `bv` binary.
//!
//! Every value is immutable and every operation is a pure function; results
//! are canonical, so identical inputs produce byte-identical emissions.
//!
//! See the crate examples (`cargo run --example ...`) for one runnable tour
//! per capability, and the `bv` binary for the command-line front end.

pub mod algebra;
pub mod arith;
pub mod geometry;
pub mod hodge;

pub use algebra::{CyclotomicNumber, ParamPoly, PuiseuxPoly, Rational};
pub use geometry::{EllipticRecord, FTable, K3Record};
pub use hodge::{euler_characteristic, hodge_diamond, orbifold_poincare, sector_sum, HodgeDiamond};
