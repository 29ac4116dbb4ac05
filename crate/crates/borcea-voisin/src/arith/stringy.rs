//! The stringy (orbifold) Euler characteristic
//!
//! ```text
//!   e_orb(X/G) = (1/#G) * sum over commuting pairs (g,h) of e(X^g n X^h)
//! ```
//!
//! for `G = G_{d,n}` acting diagonally on a product of factors. The group
//! is abelian, so the sum runs over all of `G x G`; per factor the
//! intersection is the fixed locus of the gcd power, so each term is a
//! product of table lookups.

use super::ArithError;
use crate::algebra::{rat, ParamPoly, Rational};
use crate::geometry::{elliptic_euler_pair, k3_euler_pair, EllipticRecord, K3Record};

/// One factor of the product.
#[derive(Debug, Clone)]
pub enum Factor {
    K3(K3Record),
    Elliptic(EllipticRecord),
}

impl Factor {
    fn order(&self) -> u8 {
        match self {
            Factor::K3(r) => r.d,
            Factor::Elliptic(r) => r.d,
        }
    }

    fn euler_pair(&self, g: u8, h: u8) -> ParamPoly {
        match self {
            Factor::K3(r) => k3_euler_pair(r, g, h),
            Factor::Elliptic(r) => ParamPoly::int(elliptic_euler_pair(r, g, h)),
        }
    }
}

/// Walk `G_{d,n} = {m in Z_d^n : sum m = 0}` by its n-1 free coordinates.
struct GroupWalker {
    d: u8,
    coords: Vec<u8>,
    done: bool,
}

impl GroupWalker {
    fn new(d: u8, n: usize) -> Self {
        GroupWalker {
            d,
            coords: vec![0; n.saturating_sub(1)],
            done: false,
        }
    }

    /// Current element with the balancing first coordinate.
    fn element(&self, out: &mut Vec<u8>) {
        out.clear();
        let sum: u64 = self.coords.iter().map(|&c| c as u64).sum();
        let first = ((self.d as u64) - sum % (self.d as u64)) % (self.d as u64);
        out.push(first as u8);
        out.extend_from_slice(&self.coords);
    }

    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        for c in self.coords.iter_mut() {
            *c += 1;
            if *c < self.d {
                return true;
            }
            *c = 0;
        }
        self.done = true;
        false
    }
}

/// `(1/d^(n-1)) * sum over (g,h) in G^2 of prod_i e_i(g_i, h_i)`.
///
/// Numeric records take an integer fast path; symbolic records accumulate
/// polynomials.
pub fn stringy_euler(factors: &[Factor], d: u8) -> Result<ParamPoly, ArithError> {
    if factors.is_empty() {
        return Err(ArithError::InvalidRecord("no factors".into()));
    }
    for f in factors {
        if f.order() != d {
            return Err(ArithError::InvalidRecord(format!(
                "factor of order {} in an order-{d} product",
                f.order()
            )));
        }
    }
    let n = factors.len();
    let tables: Vec<Vec<Vec<ParamPoly>>> = factors
        .iter()
        .map(|f| {
            (0..d)
                .map(|g| (0..d).map(|h| f.euler_pair(g, h)).collect())
                .collect()
        })
        .collect();
    let group_order: i64 = (d as i64).pow((n - 1) as u32);

    // fast path: all pair-tables constant
    let int_tables: Option<Vec<Vec<Vec<i64>>>> = tables
        .iter()
        .map(|t| {
            t.iter()
                .map(|row| {
                    row.iter()
                        .map(|p| {
                            p.as_constant().and_then(|c| {
                                c.is_integer().then(|| i64::try_from(c.to_integer()).ok())?
                            })
                        })
                        .collect::<Option<Vec<i64>>>()
                })
                .collect::<Option<Vec<Vec<i64>>>>()
        })
        .collect();

    if let Some(int_tables) = int_tables {
        let mut total: i128 = 0;
        let mut g = GroupWalker::new(d, n);
        let mut gv = Vec::with_capacity(n);
        loop {
            g.element(&mut gv);
            let mut h = GroupWalker::new(d, n);
            let mut hv = Vec::with_capacity(n);
            loop {
                h.element(&mut hv);
                let mut term: i128 = 1;
                for i in 0..n {
                    let e = int_tables[i][gv[i] as usize][hv[i] as usize];
                    if e == 0 {
                        term = 0;
                        break;
                    }
                    term *= e as i128;
                }
                total += term;
                if !h.advance() {
                    break;
                }
            }
            if !g.advance() {
                break;
            }
        }
        let value = Rational::new(total.into(), group_order.into());
        return Ok(ParamPoly::constant(value));
    }

    let mut total = ParamPoly::zero();
    let mut g = GroupWalker::new(d, n);
    let mut gv = Vec::with_capacity(n);
    loop {
        g.element(&mut gv);
        let mut h = GroupWalker::new(d, n);
        let mut hv = Vec::with_capacity(n);
        loop {
            h.element(&mut hv);
            let mut term = ParamPoly::one();
            for i in 0..n {
                term = &term * &tables[i][gv[i] as usize][hv[i] as usize];
                if term.is_zero() {
                    break;
                }
            }
            total = &total + &term;
            if !h.advance() {
                break;
            }
        }
        if !g.advance() {
            break;
        }
    }
    Ok(total.scale(&(rat(1) / rat(group_order))))
}
