//! Riemann-Hurwitz quotient genera for the order-6 fixed curves.
//!
//! `G -> G/gamma` is a double cover ramified at the type-(3,4) points on
//! `G`; `F = F1 u F2 -> F/gamma` is a triple cover (assuming `g(D) = 0`).
//! Solving the Hurwitz formula gives:
//!
//! ```text
//!   g(G/y)           = (2g(G) - p34 + 2k - 4b - 2l) / 4
//!   g(F1/y) + g(F2/y) = (2g(F1) + 2g(F2) - 2p25 - 2p34 + 4N - 12a - 4l) / 6
//! ```

use super::ArithError;
use crate::algebra::{rat, ratio, ParamPoly};
use crate::geometry::K3Record;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientCurve {
    /// The maximal-genus curve of `Fix(gamma^2)`.
    G,
    /// The positive-genus curves of `Fix(gamma^3)` (sum of two genera).
    F,
}

pub fn riemann_hurwitz(rec: &K3Record, which: QuotientCurve) -> Result<ParamPoly, ArithError> {
    if rec.d != 6 {
        return Err(ArithError::PreconditionViolated(format!(
            "quotient-genus formulas are for order 6, record has order {}",
            rec.d
        )));
    }
    let v = |n: &str| rec.value(n);
    Ok(match which {
        QuotientCurve::G => {
            // (2g(G) - p34 + 2k - 4b - 2l) / 4
            let num = [
                v("gG").scale(&rat(2)),
                v("p34").scale(&rat(-1)),
                v("k").scale(&rat(2)),
                v("b").scale(&rat(-4)),
                v("ell").scale(&rat(-2)),
            ]
            .into_iter()
            .sum::<ParamPoly>();
            num.scale(&ratio(1, 4))
        }
        QuotientCurve::F => {
            if let Some(gd) = rec.numeric_value("gD") {
                if gd != 0 {
                    return Err(ArithError::PreconditionViolated(format!(
                        "triple-cover formula assumes g(D) = 0, record has g(D) = {gd}"
                    )));
                }
            }
            // (2g(F1) + 2g(F2) - 2p25 - 2p34 + 4N - 12a - 4l) / 6
            let num = [
                v("gF1").scale(&rat(2)),
                v("gF2").scale(&rat(2)),
                v("p25").scale(&rat(-2)),
                v("p34").scale(&rat(-2)),
                v("N").scale(&rat(4)),
                v("a").scale(&rat(-12)),
                v("ell").scale(&rat(-4)),
            ]
            .into_iter()
            .sum::<ParamPoly>();
            num.scale(&ratio(1, 6))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sym;

    fn s618() -> K3Record {
        K3Record::numeric(
            6,
            &[
                ("r", 19),
                ("m", 1),
                ("alpha", 0),
                ("beta", 1),
                ("ell", 3),
                ("gD", 0),
                ("p25", 9),
                ("p34", 6),
                ("k", 6),
                ("b", 0),
                ("nprime", 0),
                ("n", 9),
                ("gG", 0),
                ("gGq", 0),
                ("a", 0),
                ("N", 10),
                ("gF1", 1),
                ("gF2", 0),
                ("gF1q", 0),
                ("gF2q", 0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn surface_18_quotient_genera_vanish() {
        let g = riemann_hurwitz(&s618(), QuotientCurve::G).unwrap();
        assert_eq!(g, ParamPoly::zero()); // (0 - 6 + 12 - 0 - 6) / 4
        let f = riemann_hurwitz(&s618(), QuotientCurve::F).unwrap();
        assert_eq!(f, ParamPoly::zero()); // (2 - 18 - 12 + 40 - 0 - 12) / 6
    }

    #[test]
    fn symbolic_is_the_printed_expression() {
        let rec = K3Record::generic(6).unwrap();
        let g = riemann_hurwitz(&rec, QuotientCurve::G).unwrap();
        let v = |n: &str| ParamPoly::var(sym(n));
        let expect = [
            v("gG").scale(&ratio(1, 2)),
            v("p34").scale(&ratio(-1, 4)),
            v("k").scale(&ratio(1, 2)),
            v("b").scale(&rat(-1)),
            v("ell").scale(&ratio(-1, 2)),
        ]
        .into_iter()
        .sum::<ParamPoly>();
        assert_eq!(g, expect);
    }

    #[test]
    fn nonzero_gd_rejected_for_triple_cover() {
        let mut map: std::collections::BTreeMap<String, Option<i64>> = s618()
            .raw()
            .iter()
            .map(|(&k, v)| (k.to_string(), *v))
            .collect();
        map.insert("gD".into(), Some(1));
        let rec = K3Record::new(6, crate::geometry::Mode::Symbolic, &map).unwrap();
        assert!(matches!(
            riemann_hurwitz(&rec, QuotientCurve::F),
            Err(ArithError::PreconditionViolated(_))
        ));
        // symbolic g(D) is allowed; the formula assumes it vanishes
        let generic = K3Record::generic(6).unwrap();
        assert!(riemann_hurwitz(&generic, QuotientCurve::F).is_ok());
    }
}
