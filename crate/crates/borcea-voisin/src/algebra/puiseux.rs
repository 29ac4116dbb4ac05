//! Bivariate polynomials in `X, Y` with exponents in `(1/D)Z_{>=0}` and
//! [`ParamPoly`] coefficients — the carrier of the orbifold generating
//! functions, where the `d`-th roots `(XY)^(m/d)` implement age shifts.

use super::parampoly::ParamPoly;
use num_integer::Integer;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

/// `sum over (a, b) of terms[(a, b)] * X^(a/denom) * Y^(b/denom)`.
///
/// Canonical form: no zero coefficients, and `denom` is minimal (the gcd of
/// all exponent numerators and the denominator is 1), so structural equality
/// is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxPoly {
    denom: u64,
    terms: BTreeMap<(u64, u64), ParamPoly>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        PuiseuxPoly {
            denom: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        PuiseuxPoly::constant(ParamPoly::one())
    }

    pub fn constant(c: ParamPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        PuiseuxPoly { denom: 1, terms }
    }

    /// `c * X^(xnum/denom) * Y^(ynum/denom)`.
    pub fn monomial(c: ParamPoly, xnum: u64, ynum: u64, denom: u64) -> Self {
        assert!(denom > 0);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xnum, ynum), c);
        }
        let mut p = PuiseuxPoly { denom, terms };
        p.canonicalize();
        p
    }

    /// Build from integral-exponent terms `(p, q, coefficient)`.
    pub fn from_integral_terms(terms: &[(u64, u64, ParamPoly)]) -> Self {
        let mut out = PuiseuxPoly::zero();
        for (p, q, c) in terms {
            out = &out + &PuiseuxPoly::monomial(c.clone(), *p, *q, 1);
        }
        out
    }

    pub fn x() -> Self {
        PuiseuxPoly::monomial(ParamPoly::one(), 1, 0, 1)
    }

    pub fn y() -> Self {
        PuiseuxPoly::monomial(ParamPoly::one(), 0, 1, 1)
    }

    /// `(XY)^(num/den)`.
    pub fn xy_pow(num: u64, den: u64) -> Self {
        PuiseuxPoly::monomial(ParamPoly::one(), num, num, den)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    /// All exponents integral?
    pub fn is_integral(&self) -> bool {
        self.denom == 1
    }

    fn canonicalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.denom = 1;
            return;
        }
        let mut g = self.denom;
        for &(a, b) in self.terms.keys() {
            g = g.gcd(&a).gcd(&b);
            if g == 1 {
                return;
            }
        }
        if g > 1 {
            self.denom /= g;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|((a, b), c)| ((a / g, b / g), c))
                .collect();
        }
    }

    fn with_denom(&self, target: u64) -> BTreeMap<(u64, u64), ParamPoly> {
        debug_assert_eq!(target % self.denom, 0);
        let f = target / self.denom;
        self.terms
            .iter()
            .map(|(&(a, b), c)| ((a * f, b * f), c.clone()))
            .collect()
    }

    /// Keep exactly the terms whose exponents are both integers.
    pub fn integral_part(&self) -> PuiseuxPoly {
        let d = self.denom;
        let terms = self
            .terms
            .iter()
            .filter(|(&(a, b), _)| a % d == 0 && b % d == 0)
            .map(|(&(a, b), c)| ((a / d, b / d), c.clone()))
            .collect();
        let mut p = PuiseuxPoly { denom: 1, terms };
        p.canonicalize();
        p
    }

    /// Coefficient of `X^p Y^q`; only integral exponents can match.
    pub fn coefficient(&self, p: u64, q: u64) -> ParamPoly {
        self.terms
            .get(&(p * self.denom, q * self.denom))
            .cloned()
            .unwrap_or_else(ParamPoly::zero)
    }

    /// Exact power by repeated squaring; `a^0 = 1`.
    pub fn pow(&self, n: u64) -> PuiseuxPoly {
        let mut result = PuiseuxPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Largest integral `(p, q)` bounds appearing (for diamond extraction).
    pub fn max_integral_degrees(&self) -> (u64, u64) {
        let d = self.denom;
        let mut mx = 0;
        let mut my = 0;
        for &(a, b) in self.terms.keys() {
            if a % d == 0 && b % d == 0 {
                mx = mx.max(a / d);
                my = my.max(b / d);
            }
        }
        (mx, my)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u64, u64), &ParamPoly)> {
        self.terms.iter()
    }

    /// Swap the roles of `X` and `Y`.
    pub fn swap_xy(&self) -> PuiseuxPoly {
        PuiseuxPoly {
            denom: self.denom,
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }
}

impl Add for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn add(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        let d = self.denom.lcm(&rhs.denom);
        let mut terms = self.with_denom(d);
        for ((a, b), c) in rhs.with_denom(d) {
            let entry = terms.entry((a, b)).or_insert_with(ParamPoly::zero);
            *entry = &*entry + &c;
        }
        let mut p = PuiseuxPoly { denom: d, terms };
        p.canonicalize();
        p
    }
}

impl Sub for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn sub(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        let neg = PuiseuxPoly {
            denom: rhs.denom,
            terms: rhs
                .terms
                .iter()
                .map(|(&e, c)| (e, -c.clone()))
                .collect(),
        };
        self + &neg
    }
}

impl Mul for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn mul(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        let d = self.denom.lcm(&rhs.denom);
        let left = self.with_denom(d);
        let right = rhs.with_denom(d);
        let mut terms: BTreeMap<(u64, u64), ParamPoly> = BTreeMap::new();
        for ((a1, b1), c1) in &left {
            for ((a2, b2), c2) in &right {
                let key = (a1 + a2, b1 + b2);
                let prod = c1 * c2;
                let entry = terms.entry(key).or_insert_with(ParamPoly::zero);
                *entry = &*entry + &prod;
            }
        }
        let mut p = PuiseuxPoly { denom: d, terms };
        p.canonicalize();
        p
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for PuiseuxPoly {
            type Output = PuiseuxPoly;
            fn $method(self, rhs: PuiseuxPoly) -> PuiseuxPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = format!("{c}");
            let needs_parens = coeff.contains(' ') || coeff.contains('*');
            if a == 0 && b == 0 {
                if needs_parens {
                    write!(f, "({coeff})")?;
                } else {
                    write!(f, "{coeff}")?;
                }
                continue;
            }
            if coeff == "1" {
                // bare monomial
            } else if needs_parens {
                write!(f, "({coeff})*")?;
            } else {
                write!(f, "{coeff}*")?;
            }
            let mut wrote = false;
            for (e, name) in [(a, "X"), (b, "Y")] {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                wrote = true;
                if e == self.denom {
                    write!(f, "{name}")?;
                } else if e % self.denom == 0 {
                    write!(f, "{name}^{}", e / self.denom)?;
                } else {
                    write!(f, "{name}^({}/{})", e, self.denom)?;
                }
            }
            if !wrote {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}
