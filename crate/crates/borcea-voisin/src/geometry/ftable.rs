//! The per-sector generating tables.
//!
//! For a factor `X` with automorphism of order `d`, entry `(k, j)` is the
//! polynomial
//!
//! ```text
//!   F_{X,k,j}(X,Y) = sum over components U of Fix(phi^k) with age shift l
//!                    of dim H^{p,q}(U)_{zeta^j} X^(p+l) Y^(q+l)
//! ```
//!
//! i.e. the `zeta_d^j`-eigenspace Poincare polynomial of the `k`-th twisted
//! sector, age shift included. The tables for the elliptic curves `E_d` and
//! for K3 surfaces in terms of their invariant records are fixed finite
//! data; they are encoded here exactly as printed.

use super::records::{EllipticRecord, K3Record};
use crate::algebra::{rat, ratio, ParamPoly, PuiseuxPoly};

/// A `d x d` matrix of integral Puiseux polynomials, indexed by
/// `(k = sector, j = eigenvalue index)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTable {
    pub d: u8,
    entries: Vec<Vec<PuiseuxPoly>>,
}

impl FTable {
    pub fn from_entries(d: u8, entries: Vec<Vec<PuiseuxPoly>>) -> Self {
        assert_eq!(entries.len(), d as usize);
        for row in &entries {
            assert_eq!(row.len(), d as usize);
            for cell in row {
                assert!(cell.is_integral(), "table entries are integral");
            }
        }
        FTable { d, entries }
    }

    pub fn zeroed(d: u8) -> Self {
        FTable {
            d,
            entries: vec![vec![PuiseuxPoly::zero(); d as usize]; d as usize],
        }
    }

    pub fn entry(&self, k: u8, j: u8) -> &PuiseuxPoly {
        &self.entries[k as usize][j as usize]
    }

    /// Complex dimension of the factor the table describes: a K3 table is
    /// recognised by the `(XY)^2` term of its `(0,0)` entry.
    pub fn factor_dim(&self) -> usize {
        if self.entries[0][0].coefficient(2, 2).is_zero() {
            1
        } else {
            2
        }
    }
}

fn cell(terms: &[(u64, u64, ParamPoly)]) -> PuiseuxPoly {
    PuiseuxPoly::from_integral_terms(terms)
}

fn c(n: i64) -> ParamPoly {
    ParamPoly::int(n)
}

/// `c0 + cs*(X + Y) + cxy*XY`, the shape of every twisted-sector cell.
fn curve_cell(c0: ParamPoly, cs: ParamPoly, cxy: ParamPoly) -> PuiseuxPoly {
    cell(&[(0, 0, c0), (1, 0, cs.clone()), (0, 1, cs), (1, 1, cxy)])
}

/// The printed table of the elliptic curve `E_d`.
pub fn ftable_elliptic(rec: &EllipticRecord) -> FTable {
    let d = rec.d;
    let mut t = vec![vec![PuiseuxPoly::zero(); d as usize]; d as usize];
    // Untwisted row: H^0 at j = 0, the (1,0)-form at j = 1, its conjugate
    // at j = d-1 (both at j = 1 when d = 2), H^(1,1) at j = 0.
    t[0][0] = cell(&[(0, 0, c(1)), (1, 1, c(1))]);
    if d == 2 {
        t[0][1] = cell(&[(1, 0, c(1)), (0, 1, c(1))]);
    } else {
        t[0][1] = cell(&[(1, 0, c(1))]);
        t[0][(d - 1) as usize] = cell(&[(0, 1, c(1))]);
    }
    // Twisted rows: eigenspace decomposition of H^0(Fix(alpha^k)) under the
    // residual action, as printed.
    match d {
        2 => {
            t[1][0] = cell(&[(0, 0, c(4))]);
        }
        3 => {
            t[1][0] = cell(&[(0, 0, c(3))]);
            t[2][0] = cell(&[(0, 0, c(3))]);
        }
        4 => {
            t[1][0] = cell(&[(0, 0, c(2))]);
            t[2][0] = cell(&[(0, 0, c(3))]);
            t[2][2] = cell(&[(0, 0, c(1))]);
            t[3][0] = cell(&[(0, 0, c(2))]);
        }
        6 => {
            t[1][0] = cell(&[(0, 0, c(1))]);
            t[2][0] = cell(&[(0, 0, c(2))]);
            t[2][3] = cell(&[(0, 0, c(1))]);
            t[3][0] = cell(&[(0, 0, c(2))]);
            t[3][2] = cell(&[(0, 0, c(1))]);
            t[3][4] = cell(&[(0, 0, c(1))]);
            t[4][0] = cell(&[(0, 0, c(2))]);
            t[4][3] = cell(&[(0, 0, c(1))]);
            t[5][0] = cell(&[(0, 0, c(1))]);
        }
        _ => unreachable!(),
    }
    FTable { d, entries: t }
}

/// The printed table for a K3 surface, with the record's invariants
/// substituted. Symbolic entries stay symbolic.
pub fn ftable_k3(rec: &K3Record) -> FTable {
    let d = rec.d;
    let v = |n: &str| rec.value(n);
    let mut t = vec![vec![PuiseuxPoly::zero(); d as usize]; d as usize];

    // Untwisted row: (XY)^2 + r XY + 1 at j = 0; X^2 / Y^2 plus the
    // eigenspace XY-blocks on the other columns.
    t[0][0] = cell(&[(0, 0, c(1)), (1, 1, v("r")), (2, 2, c(1))]);
    match d {
        2 => {
            t[0][1] = cell(&[
                (2, 0, c(1)),
                (0, 2, c(1)),
                (1, 1, &v("m") - &c(2)),
            ]);
        }
        3 | 4 | 6 => {
            t[0][1] = cell(&[(2, 0, c(1)), (1, 1, &v("m") - &c(1))]);
            t[0][(d - 1) as usize] = cell(&[(0, 2, c(1)), (1, 1, &v("m") - &c(1))]);
            match d {
                4 => {
                    t[0][2] = cell(&[(1, 1, rec.eigendim(2))]); // (22 - r - 2m) XY
                }
                6 => {
                    t[0][2] = cell(&[(1, 1, v("alpha"))]);
                    t[0][3] = cell(&[(1, 1, v("beta"))]);
                    t[0][4] = cell(&[(1, 1, v("alpha"))]);
                }
                _ => {}
            }
        }
        _ => unreachable!(),
    }

    match d {
        2 => {
            t[1][0] = curve_cell(v("N"), v("Nprime"), v("N"));
        }
        3 => {
            t[1][0] = cell(&[
                (0, 0, v("k")),
                (1, 0, v("gC")),
                (0, 1, v("gC")),
                (1, 1, &v("k") + &v("h")),
            ]);
            t[2][0] = curve_cell(&v("k") + &v("h"), v("gC"), v("k"));
        }
        4 => {
            t[1][0] = cell(&[
                (0, 0, v("k")),
                (1, 0, v("gG")),
                (0, 1, v("gG")),
                (1, 1, &v("k") + &(&v("n1") + &v("n2"))),
            ]);
            let na = &v("N") - &v("a");
            t[2][0] = curve_cell(na.clone(), v("gDq"), na);
            t[2][2] = curve_cell(v("a"), &v("gD") - &v("gDq"), v("a"));
            t[3][0] = curve_cell(&v("k") + &(&v("n1") + &v("n2")), v("gG"), v("k"));
        }
        6 => {
            let kb = &v("k") - &v("b");
            let n2a = &v("N") - &v("a").scale(&rat(2));
            let gg_diff = &v("gG") - &v("gGq");
            // half of g(F1) + g(F2) - g(F1/y) - g(F2/y)
            let f_half = (&(&v("gF1") + &v("gF2")) - &(&v("gF1q") + &v("gF2q")))
                .scale(&ratio(1, 2));
            t[1][0] = cell(&[
                (0, 0, v("ell")),
                (1, 0, v("gD")),
                (0, 1, v("gD")),
                (1, 1, &v("ell") + &(&v("p25") + &v("p34"))),
            ]);
            t[2][0] = cell(&[
                (0, 0, kb.clone()),
                (1, 0, v("gGq")),
                (0, 1, v("gGq")),
                (1, 1, &kb + &(&v("nprime") + &v("p25"))),
            ]);
            t[2][3] = curve_cell(v("b"), gg_diff.clone(), &v("b") + &v("nprime"));
            t[3][0] = curve_cell(n2a.clone(), &v("gF1q") + &v("gF2q"), n2a);
            t[3][2] = curve_cell(v("a"), f_half.clone(), v("a"));
            t[3][4] = curve_cell(v("a"), f_half, v("a"));
            t[4][0] = cell(&[
                (0, 0, &kb + &(&v("nprime") + &v("p25"))),
                (1, 0, v("gGq")),
                (0, 1, v("gGq")),
                (1, 1, kb.clone()),
            ]);
            t[4][3] = cell(&[
                (0, 0, &v("b") + &v("nprime")),
                (1, 0, gg_diff.clone()),
                (0, 1, gg_diff),
                (1, 1, v("b")),
            ]);
            t[5][0] = cell(&[
                (0, 0, &v("ell") + &(&v("p25") + &v("p34"))),
                (1, 0, v("gD")),
                (0, 1, v("gD")),
                (1, 1, v("ell")),
            ]);
        }
        _ => unreachable!(),
    }
    FTable { d, entries: t }
}

// The `(2,3)` cell above is printed with the point pairs `n'` in the XY
// coefficient; the age of gamma^2 at a pair is 4/3, so they land one shift
// up exactly as in the `(2,0)` cell.
