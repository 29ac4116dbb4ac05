//! Exact arithmetic in `Q(zeta_d)` for `d in {2, 3, 4, 6}`.
//!
//! Elements are stored on the basis `{1, zeta, ..., zeta^(phi(d)-1)}` with
//! the minimal-polynomial reduction applied eagerly:
//!
//! ```text
//!   zeta_2 = -1,   zeta_3^2 = -1 - zeta_3,
//!   zeta_4^2 = -1, zeta_6^2 = zeta_6 - 1.
//! ```

use super::parampoly::ParamPoly;
use super::{AlgebraError, Rational};
use num_traits::{One, Zero};

/// Euler phi on the supported orders.
pub fn phi(d: u8) -> usize {
    match d {
        2 => 1,
        3 | 4 | 6 => 2,
        _ => panic!("unsupported cyclotomic order {d}"),
    }
}

fn check_order(d: u8) -> Result<(), AlgebraError> {
    match d {
        2 | 3 | 4 | 6 => Ok(()),
        _ => Err(AlgebraError::UnsupportedOrder(d)),
    }
}

/// `zeta^2 = p + q*zeta` for the orders with phi = 2.
fn sq_rule(d: u8) -> (i64, i64) {
    match d {
        3 => (-1, -1),
        4 => (-1, 0),
        6 => (-1, 1),
        _ => unreachable!(),
    }
}

/// An element of `Q(zeta_d)`, coordinates over the power basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicNumber {
    order: u8,
    coords: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn new(order: u8, coords: Vec<Rational>) -> Result<Self, AlgebraError> {
        check_order(order)?;
        assert_eq!(coords.len(), phi(order));
        Ok(CyclotomicNumber { order, coords })
    }

    pub fn zero(order: u8) -> Self {
        CyclotomicNumber {
            order,
            coords: vec![Rational::zero(); phi(order)],
        }
    }

    pub fn one(order: u8) -> Self {
        CyclotomicNumber::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u8, c: Rational) -> Self {
        let mut coords = vec![Rational::zero(); phi(order)];
        coords[0] = c;
        CyclotomicNumber { order, coords }
    }

    /// The generator `zeta_d`.
    pub fn zeta(order: u8) -> Self {
        let mut coords = vec![Rational::zero(); phi(order)];
        if phi(order) == 1 {
            coords[0] = -Rational::one(); // zeta_2 = -1
        } else {
            coords[1] = Rational::one();
        }
        CyclotomicNumber { order, coords }
    }

    /// `zeta_d^k`, exponent reduced mod `d`.
    pub fn zeta_pow(order: u8, k: i64) -> Self {
        let d = order as i64;
        let k = k.rem_euclid(d);
        let mut acc = CyclotomicNumber::one(order);
        let z = CyclotomicNumber::zeta(order);
        for _ in 0..k {
            acc = acc.mul(&z);
        }
        acc
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// `Some(c)` when the element is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn same_order(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(AlgebraError::OrderMismatch(self.order, other.order))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_order(other).expect("order mismatch");
        CyclotomicNumber {
            order: self.order,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            order: self.order,
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CyclotomicNumber {
            order: self.order,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_order(other).expect("order mismatch");
        if phi(self.order) == 1 {
            return CyclotomicNumber {
                order: self.order,
                coords: vec![&self.coords[0] * &other.coords[0]],
            };
        }
        let (p, q) = sq_rule(self.order);
        let (a, b) = (&self.coords[0], &self.coords[1]);
        let (c, d) = (&other.coords[0], &other.coords[1]);
        let bd = b * d;
        let re = a * c + &bd * Rational::from_integer(p.into());
        let im = a * d + b * c + &bd * Rational::from_integer(q.into());
        CyclotomicNumber {
            order: self.order,
            coords: vec![re, im],
        }
    }

    /// Complex conjugation, `zeta -> zeta^(d-1)`.
    pub fn conj(&self) -> Self {
        if phi(self.order) == 1 {
            return self.clone();
        }
        let (a, b) = (&self.coords[0], &self.coords[1]);
        let coords = match self.order {
            3 => vec![a - b, -b.clone()],  // conj(zeta_3) = -1 - zeta_3
            4 => vec![a.clone(), -b.clone()], // conj(zeta_4) = -zeta_4
            6 => vec![a + b, -b.clone()],  // conj(zeta_6) = 1 - zeta_6
            _ => unreachable!(),
        };
        CyclotomicNumber {
            order: self.order,
            coords,
        }
    }

    /// Field norm to `Q` (for phi = 2: `x * conj(x)`).
    pub fn norm(&self) -> Rational {
        if phi(self.order) == 1 {
            return self.coords[0].clone();
        }
        let n = self.mul(&self.conj());
        n.as_rational().expect("norm is rational")
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if phi(self.order) == 1 {
            return Ok(CyclotomicNumber {
                order: self.order,
                coords: vec![Rational::one() / &self.coords[0]],
            });
        }
        let n = self.norm();
        Ok(self.conj().scale(&(Rational::one() / n)))
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_order(other).expect("order mismatch");
        Ok(self.mul(&other.inv()?))
    }
}

impl std::fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if phi(self.order) == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        let (a, b) = (&self.coords[0], &self.coords[1]);
        if b.is_zero() {
            return write!(f, "{a}");
        }
        if a.is_zero() {
            return write!(f, "{}*z{}", b, self.order);
        }
        if b > &Rational::zero() {
            write!(f, "{a} + {}*z{}", b, self.order)
        } else {
            write!(f, "{a} - {}*z{}", -b.clone(), self.order)
        }
    }
}

/// Cyclotomic value with [`ParamPoly`] coordinates; used where traces mix
/// symbolic eigenspace dimensions with roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloPoly {
    order: u8,
    coords: Vec<ParamPoly>,
}

impl CycloPoly {
    pub fn zero(order: u8) -> Self {
        CycloPoly {
            order,
            coords: vec![ParamPoly::zero(); phi(order)],
        }
    }

    pub fn from_cyclo(c: &CyclotomicNumber) -> Self {
        CycloPoly {
            order: c.order,
            coords: c
                .coords
                .iter()
                .map(|x| ParamPoly::constant(x.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        CycloPoly {
            order: self.order,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `poly * cyclo`, coordinatewise.
    pub fn scaled(poly: &ParamPoly, c: &CyclotomicNumber) -> Self {
        CycloPoly {
            order: c.order,
            coords: c.coords.iter().map(|x| poly.scale(x)).collect(),
        }
    }

    /// The rational-part coordinate, requiring all others to vanish.
    pub fn into_rational_part(self) -> Option<ParamPoly> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn coords(&self) -> &[ParamPoly] {
        &self.coords
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn z6() -> CyclotomicNumber {
        CyclotomicNumber::zeta(6)
    }

    #[test]
    fn defining_relations() {
        // zeta_4^2 = -1
        let z4 = CyclotomicNumber::zeta(4);
        assert_eq!(
            z4.mul(&z4),
            CyclotomicNumber::from_rational(4, rat(-1))
        );
        // zeta_6^2 = zeta_6 - 1
        let lhs = z6().mul(&z6());
        let rhs = z6().sub(&CyclotomicNumber::one(6));
        assert_eq!(lhs, rhs);
        // zeta_3^2 = -1 - zeta_3
        let z3 = CyclotomicNumber::zeta(3);
        assert_eq!(
            z3.mul(&z3),
            CyclotomicNumber::from_rational(3, rat(-1)).sub(&z3)
        );
        // zeta_6^3 = -1
        assert_eq!(
            CyclotomicNumber::zeta_pow(6, 3),
            CyclotomicNumber::from_rational(6, rat(-1))
        );
    }

    #[test]
    fn one_minus_zeta6_squared() {
        // (1 - zeta_6)^2 = -zeta_6
        let u = CyclotomicNumber::one(6).sub(&z6());
        assert_eq!(u.mul(&u), z6().neg());
    }

    #[test]
    fn exact_division() {
        // (1 + zeta_6) / (1 - zeta_6)^2 = zeta_6 - 2
        let num = CyclotomicNumber::one(6).add(&z6());
        let den = CyclotomicNumber::one(6).sub(&z6());
        let den2 = den.mul(&den);
        let q = num.div(&den2).unwrap();
        let expect = z6().sub(&CyclotomicNumber::from_rational(6, rat(2)));
        assert_eq!(q, expect);
        // numeric check: -2 + zeta_6 = -1.5 + 0.866i
        assert_eq!(q.coords(), &[rat(-2), rat(1)]);
    }

    #[test]
    fn self_division_is_one() {
        for d in [2u8, 3, 4, 6] {
            let x = CyclotomicNumber::new(
                d,
                match phi(d) {
                    1 => vec![ratio(7, 3)],
                    _ => vec![ratio(-5, 2), rat(4)],
                },
            )
            .unwrap();
            assert_eq!(x.div(&x).unwrap(), CyclotomicNumber::one(d));
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let zero = CyclotomicNumber::zero(6);
        assert_eq!(
            CyclotomicNumber::one(6).div(&zero),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn conjugation_is_an_involution_and_fixes_norms() {
        for d in [3u8, 4, 6] {
            let x = CyclotomicNumber::new(d, vec![ratio(3, 2), ratio(-4, 5)]).unwrap();
            assert_eq!(x.conj().conj(), x);
            let n = x.mul(&x.conj());
            assert!(n.as_rational().is_some());
        }
    }

    #[test]
    fn zeta6_power_sums() {
        // zeta + zeta^5 = 1, zeta^2 + zeta^4 = -1
        let s1 = CyclotomicNumber::zeta_pow(6, 1).add(&CyclotomicNumber::zeta_pow(6, 5));
        assert_eq!(s1.as_rational(), Some(rat(1)));
        let s2 = CyclotomicNumber::zeta_pow(6, 2).add(&CyclotomicNumber::zeta_pow(6, 4));
        assert_eq!(s2.as_rational(), Some(rat(-1)));
    }

    #[test]
    fn unsupported_order_rejected() {
        assert_eq!(
            CyclotomicNumber::new(5, vec![rat(1)]).unwrap_err(),
            AlgebraError::UnsupportedOrder(5)
        );
    }
}
