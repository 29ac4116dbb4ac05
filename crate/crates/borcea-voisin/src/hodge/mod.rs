//! The orbifold cohomology engine.
//!
//! For factor tables `F_1, ..., F_n` (all of the same order `d`), the
//! generating polynomial of the Hodge numbers of the crepant resolution of
//! the quotient of the product by `Z_d^(n-1)` is
//!
//! ```text
//!   sum over j of the product over i of
//!       ( sum over m of (XY)^(m/d) * F_i[m][j] ),
//! ```
//!
//! a Puiseux polynomial whose coefficient of `X^p Y^q` at integral
//! exponents is `h^{p,q}`. Fractional exponents are artifacts of enlarging
//! the group sum and are discarded before extraction.

pub mod recurrence;

use crate::algebra::{ParamPoly, PuiseuxPoly, Rational};
use crate::geometry::FTable;
use num_traits::Signed;
use thiserror::Error;

pub use recurrence::{recurrence_check, recurrence_coeffs, RecurrenceReport, RecurrenceVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    /// The group `Z_d^(n-1)` is trivial for n = 1 and the twisted-sector
    /// sum would wrongly contribute; a single factor is its own resolution.
    #[error("need at least two factors (got {0})")]
    TooFewFactors(usize),
    #[error("factor orders differ: {0} vs {1}")]
    OrderMismatch(u8, u8),
    #[error("diamond invariant violated: {0}")]
    InvalidDiamond(String),
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeometryError),
}

/// The inner sum `sum over m of (XY)^(m/d) * F[m][j]`.
pub fn sector_sum(table: &FTable, j: u8) -> PuiseuxPoly {
    let d = table.d as u64;
    let mut total = PuiseuxPoly::zero();
    for m in 0..table.d {
        let twist = PuiseuxPoly::xy_pow(m as u64, d);
        total = &total + &(&twist * table.entry(m, j));
    }
    total
}

fn check_factors(tables: &[FTable]) -> Result<(), HodgeError> {
    if tables.len() < 2 {
        return Err(HodgeError::TooFewFactors(tables.len()));
    }
    let d = tables[0].d;
    for t in tables {
        if t.d != d {
            return Err(HodgeError::OrderMismatch(d, t.d));
        }
    }
    Ok(())
}

/// The full (unfiltered) Puiseux generating polynomial.
pub fn orbifold_poincare(tables: &[FTable]) -> Result<PuiseuxPoly, HodgeError> {
    check_factors(tables)?;
    let d = tables[0].d;
    let mut total = PuiseuxPoly::zero();
    for j in 0..d {
        let mut product = PuiseuxPoly::one();
        for t in tables {
            product = &product * &sector_sum(t, j);
        }
        total = &total + &product;
    }
    Ok(total)
}

/// Hodge diamond of the resolved quotient: `entries[p][q] = h^{p,q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeDiamond {
    dim: usize,
    entries: Vec<Vec<ParamPoly>>,
}

impl HodgeDiamond {
    /// Complex dimension of the variety.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, p: usize, q: usize) -> &ParamPoly {
        &self.entries[p][q]
    }

    pub fn rows(&self) -> &[Vec<ParamPoly>] {
        &self.entries
    }

    /// True when every entry is a rational constant.
    pub fn is_numeric(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|e| e.as_constant().is_some())
    }

    fn validate(&self) -> Result<(), HodgeError> {
        let n = self.dim;
        if self.entries[0][0] != ParamPoly::one() {
            return Err(HodgeError::InvalidDiamond(format!(
                "h^(0,0) = {}, expected 1",
                self.entries[0][0]
            )));
        }
        for p in 0..=n {
            for q in 0..=n {
                if self.entries[p][q] != self.entries[q][p] {
                    return Err(HodgeError::InvalidDiamond(format!(
                        "h^({p},{q}) != h^({q},{p})"
                    )));
                }
                if self.entries[p][q] != self.entries[n - p][n - q] {
                    return Err(HodgeError::InvalidDiamond(format!(
                        "h^({p},{q}) != h^({},{})",
                        n - p,
                        n - q
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_numeric_integrality(&self) -> Result<(), HodgeError> {
        for (p, row) in self.entries.iter().enumerate() {
            for (q, e) in row.iter().enumerate() {
                if let Some(c) = e.as_constant() {
                    if !c.is_integer() || c.is_negative() {
                        return Err(HodgeError::InvalidDiamond(format!(
                            "h^({p},{q}) = {c} is not a non-negative integer"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Assemble the generating polynomial, filter to integral exponents and
/// extract the diamond. The dimension is the sum of the factor dimensions.
pub fn hodge_diamond(tables: &[FTable]) -> Result<HodgeDiamond, HodgeError> {
    let poincare = orbifold_poincare(tables)?;
    let dim: usize = tables.iter().map(|t| t.factor_dim()).sum();
    let integral = poincare.integral_part();
    let mut entries = vec![vec![ParamPoly::zero(); dim + 1]; dim + 1];
    for (p, row) in entries.iter_mut().enumerate() {
        for (q, cell) in row.iter_mut().enumerate() {
            *cell = integral.coefficient(p as u64, q as u64);
        }
    }
    // nothing outside the diamond box
    let (mx, my) = integral.max_integral_degrees();
    if mx as usize > dim || my as usize > dim {
        return Err(HodgeError::InvalidDiamond(format!(
            "terms of degree ({mx},{my}) exceed dimension {dim}"
        )));
    }
    let diamond = HodgeDiamond { dim, entries };
    diamond.validate()?;
    diamond.check_numeric_integrality()?;
    Ok(diamond)
}

/// `sum over (p,q) of (-1)^(p+q) h^{p,q}`.
pub fn euler_characteristic(diamond: &HodgeDiamond) -> ParamPoly {
    let mut total = ParamPoly::zero();
    for (p, row) in diamond.entries.iter().enumerate() {
        for (q, e) in row.iter().enumerate() {
            if (p + q) % 2 == 0 {
                total = &total + e;
            } else {
                total = &total - e;
            }
        }
    }
    total
}

/// Euler characteristic as an exact rational, for numeric diamonds.
pub fn euler_number(diamond: &HodgeDiamond) -> Option<Rational> {
    euler_characteristic(diamond).as_constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, sym};
    use crate::geometry::{ftable_elliptic, ftable_k3, EllipticRecord, K3Record};

    fn e_table(d: u8) -> FTable {
        ftable_elliptic(&EllipticRecord::new(d).unwrap())
    }

    fn int(n: i64) -> ParamPoly {
        ParamPoly::int(n)
    }

    #[test]
    fn sector_sums_of_the_order_2_curve() {
        // j = 0: 1 + XY + 4 sqrt(XY)
        let s0 = sector_sum(&e_table(2), 0);
        let expect = &(&PuiseuxPoly::one() + &PuiseuxPoly::xy_pow(1, 1))
            + &PuiseuxPoly::monomial(int(4), 1, 1, 2);
        assert_eq!(s0, expect);
    }

    #[test]
    fn sector_sums_of_the_order_6_curve() {
        // paper's columns: j = 2 holds (XY)^(3/6); j = 3 holds
        // (XY)^(2/6) + (XY)^(4/6)
        let t = e_table(6);
        assert_eq!(sector_sum(&t, 2), PuiseuxPoly::xy_pow(3, 6));
        let s3 = sector_sum(&t, 3);
        let expect = &PuiseuxPoly::xy_pow(2, 6) + &PuiseuxPoly::xy_pow(4, 6);
        assert_eq!(s3, expect);
    }

    #[test]
    fn all_zero_column_gives_zero() {
        let t = FTable::zeroed(6);
        assert!(sector_sum(&t, 1).is_zero());
    }

    #[test]
    fn poincare_order_3_pair_is_closed_form() {
        // X^2 + Y^2 + (1 + cbrt(XY))^6
        let p = orbifold_poincare(&[e_table(3), e_table(3)]).unwrap();
        let closed = &(&PuiseuxPoly::x().pow(2) + &PuiseuxPoly::y().pow(2))
            + &(&PuiseuxPoly::one() + &PuiseuxPoly::xy_pow(1, 3)).pow(6);
        assert_eq!(p, closed);
    }

    #[test]
    fn poincare_rejects_single_factor() {
        assert_eq!(
            orbifold_poincare(&[e_table(6)]).unwrap_err(),
            HodgeError::TooFewFactors(1)
        );
    }

    #[test]
    fn poincare_is_zero_on_zero_tables() {
        let p = orbifold_poincare(&[FTable::zeroed(6), FTable::zeroed(6)]).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn order_3_elliptic_pair_is_a_k3() {
        let d = hodge_diamond(&[e_table(3), e_table(3)]).unwrap();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.entry(0, 0), &int(1));
        assert_eq!(d.entry(2, 0), &int(1));
        assert_eq!(d.entry(1, 1), &int(20));
        assert_eq!(d.entry(1, 0), &int(0));
        assert_eq!(euler_number(&d).unwrap(), rat(24));
    }

    #[test]
    fn classical_threefold_diamond_is_symbolic() {
        let k3 = ftable_k3(&K3Record::generic(2).unwrap());
        let d = hodge_diamond(&[k3, e_table(2)]).unwrap();
        assert_eq!(d.dim(), 3);
        // h^(1,1) = 1 + r + 4N and h^(2,1) = m - 1 + 4N'
        let h11 = &(&ParamPoly::one() + &ParamPoly::var(sym("r")))
            + &ParamPoly::var(sym("N")).scale(&rat(4));
        let h21 = &(&ParamPoly::var(sym("m")) - &ParamPoly::one())
            + &ParamPoly::var(sym("Nprime")).scale(&rat(4));
        assert_eq!(d.entry(1, 1), &h11);
        assert_eq!(d.entry(2, 1), &h21);
        assert_eq!(d.entry(3, 0), &int(1));
        assert_eq!(d.entry(2, 0), &int(0));
    }

    #[test]
    fn triple_order_2_elliptic_threefold() {
        let d = hodge_diamond(&[e_table(2), e_table(2), e_table(2)]).unwrap();
        assert_eq!(d.entry(1, 1), &int(51));
        assert_eq!(d.entry(2, 1), &int(3));
        assert_eq!(euler_number(&d).unwrap(), rat(96));
    }

    #[test]
    fn coefficient_on_assembled_order_2_product() {
        let k3 = ftable_k3(&K3Record::generic(2).unwrap());
        let p = orbifold_poincare(&[k3, e_table(2)]).unwrap();
        let c11 = p.coefficient(1, 1);
        let expect = &(&ParamPoly::one() + &ParamPoly::var(sym("r")))
            + &ParamPoly::var(sym("N")).scale(&rat(4));
        assert_eq!(c11, expect);
    }

    #[test]
    fn mismatched_orders_rejected() {
        assert_eq!(
            orbifold_poincare(&[e_table(2), e_table(3)]).unwrap_err(),
            HodgeError::OrderMismatch(2, 3)
        );
    }
}
