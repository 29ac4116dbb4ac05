//! Sparse multivariate polynomials over exact rationals in named invariant
//! symbols — the coefficient ring of everything on the Hodge side.

use super::symbol::Sym;
use super::{AlgebraError, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// A power product of symbols. No zero exponents are stored.
///
/// Ordered graded-lexicographically: total degree first, then symbol
/// exponents in registry order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<Sym, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(s: Sym) -> Self {
        let mut m = BTreeMap::new();
        m.insert(s, 1);
        Monomial(m)
    }

    pub fn from_powers(powers: &[(Sym, u32)]) -> Self {
        let mut m = BTreeMap::new();
        for &(s, e) in powers {
            if e > 0 {
                *m.entry(s).or_insert(0) += e;
            }
        }
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (&s, &e) in &other.0 {
            *m.entry(s).or_insert(0) += e;
        }
        Monomial(m)
    }

    pub fn powers(&self) -> impl Iterator<Item = (Sym, u32)> + '_ {
        self.0.iter().map(|(&s, &e)| (s, e))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse polynomial with [`Rational`] coefficients; no zero coefficients
/// are stored, and the term map is ordered, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        ParamPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        ParamPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        ParamPoly::constant(Rational::from_integer(n.into()))
    }

    pub fn var(s: Sym) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(s), Rational::one());
        ParamPoly { terms }
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of the given monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    fn add_assign_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Exact evaluation; every symbol occurring in `self` must be assigned.
    pub fn eval(&self, env: &BTreeMap<Sym, Rational>) -> Result<Rational, AlgebraError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (s, e) in m.powers() {
                let x = env
                    .get(&s)
                    .ok_or_else(|| AlgebraError::MissingSymbol(s.name()))?;
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitute a polynomial for a symbol.
    pub fn subst(&self, s: Sym, replacement: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = Monomial::one();
            let mut power = 0;
            for (t, e) in m.powers() {
                if t == s {
                    power = e;
                } else {
                    rest = rest.mul(&Monomial::var(t));
                    for _ in 1..e {
                        rest = rest.mul(&Monomial::var(t));
                    }
                }
            }
            let mut piece = ParamPoly::term(c.clone(), rest);
            for _ in 0..power {
                piece = &piece * replacement;
            }
            out = &out + &piece;
        }
        out
    }

    /// `Some(c)` when `self == c * other` for a rational `c` (with
    /// `other != 0`). Used to certify residuals proportional to a relation.
    pub fn rational_multiple_of(&self, other: &ParamPoly) -> Option<Rational> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let (m0, c0) = other.terms.iter().next().unwrap();
        let ratio = self.terms.get(m0)? / c0;
        if self == &other.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }

    fn fmt_with(&self, f: &mut std::fmt::Formatter<'_>, latex: bool) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = abs.is_one();
            if m.is_one() {
                write!(f, "{}", fmt_rat(&abs, latex))?;
            } else {
                if !coeff_is_one {
                    write!(f, "{}", fmt_rat(&abs, latex))?;
                    if !latex {
                        write!(f, "*")?;
                    }
                }
                let mut first = true;
                for (s, e) in m.powers() {
                    if !first && !latex {
                        write!(f, "*")?;
                    }
                    first = false;
                    let name = if latex { s.latex() } else { s.display() };
                    if e == 1 {
                        write!(f, "{name}")?;
                    } else if latex {
                        write!(f, "{name}^{{{e}}}")?;
                    } else {
                        write!(f, "{name}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_latex(&self) -> String {
        format!("{}", LatexPoly(self))
    }
}

fn fmt_rat(r: &Rational, latex: bool) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if latex {
        format!("\\tfrac{{{}}}{{{}}}", r.numer(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

struct LatexPoly<'a>(&'a ParamPoly);

impl std::fmt::Display for LatexPoly<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt_with(f, true)
    }
}

impl std::fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.fmt_with(f, false)
    }
}

impl From<i64> for ParamPoly {
    fn from(n: i64) -> Self {
        ParamPoly::int(n)
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_assign_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_assign_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_assign_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: &ParamPoly) -> ParamPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl std::iter::Sum for ParamPoly {
    fn sum<I: Iterator<Item = ParamPoly>>(iter: I) -> ParamPoly {
        iter.fold(ParamPoly::zero(), |acc, p| &acc + &p)
    }
}
