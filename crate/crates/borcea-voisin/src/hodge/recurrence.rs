//! Linear recurrences satisfied by the Euler characteristics `e(Y_{d,n})`.
//!
//! The generating polynomial evaluates, at the root-of-unity substitutions
//! computing Euler characteristics, to a sum of geometric sequences whose
//! ratios are the sector-sum values; the sequences therefore satisfy a
//! fixed linear recurrence per order:
//!
//! ```text
//!   d = 6:  a_n = 12 a_(n-1) - 19 a_(n-2) - 12 a_(n-3) + 20 a_(n-4)
//!   d = 4:  a_n =  9 a_(n-1) +    a_(n-2) -  9 a_(n-3)
//!   d = 3:  a_n =  7 a_(n-1) +  8 a_(n-2)
//! ```
//!
//! with `a_(n-1) = e(Y_{d,n})` and seed `a_0 = e(Y_{d,1}) = 24`.

use super::{euler_characteristic, hodge_diamond, HodgeError};
use crate::algebra::{rat, sym, ParamPoly, Rational};
use crate::geometry::{ftable_elliptic, ftable_k3, EllipticRecord, K3Record};

/// Recurrence coefficients `[c_1, c_2, ...]` so that
/// `a_n = c_1 a_(n-1) + c_2 a_(n-2) + ...`; `None` for `d = 2`.
pub fn recurrence_coeffs(d: u8) -> Option<&'static [i64]> {
    match d {
        3 => Some(&[7, 8]),
        4 => Some(&[9, 1, -9]),
        6 => Some(&[12, -19, -12, 20]),
        _ => None,
    }
}

/// The `H^2` eigenspace dimension count of an order-`d` K3 record, written
/// as `... - 22`; the polynomial that vanishes on every actual surface.
pub fn dimension_relation(d: u8) -> ParamPoly {
    let v = |n: &str| ParamPoly::var(sym(n));
    let p = match d {
        2 => &v("r") + &v("m"),
        3 => &v("r") + &v("m").scale(&rat(2)),
        4 => &(&v("r") + &v("m").scale(&rat(2))) + &v("alpha"),
        6 => &(&(&v("r") + &v("m").scale(&rat(2))) + &v("alpha").scale(&rat(2))) + &v("beta"),
        _ => panic!("unsupported order {d}"),
    };
    &p - &ParamPoly::int(22)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceVerdict {
    /// Residual is identically zero.
    Holds,
    /// Residual equals `multiplier` times the dimension count, so it
    /// vanishes on every record whose eigenspace dimensions sum to 22.
    /// Only the checks anchored at the seed `a_0 = 24` can land here, and
    /// only on symbolic records.
    HoldsModuloDimension { multiplier: Rational },
    Fails,
}

#[derive(Debug, Clone)]
pub struct RecurrenceReport {
    pub d: u8,
    /// `seq[i] = a_i = e(Y_{d,i+1})`; `seq[0]` is the seed 24.
    pub seq: Vec<ParamPoly>,
    /// `(i, verdict)` for every index `i` where the recurrence applies.
    pub checks: Vec<(usize, RecurrenceVerdict)>,
    pub notes: Vec<String>,
}

impl RecurrenceReport {
    pub fn all_hold(&self) -> bool {
        self.checks
            .iter()
            .all(|(_, v)| !matches!(v, RecurrenceVerdict::Fails))
    }

    pub fn holds_identically(&self) -> bool {
        self.checks
            .iter()
            .all(|(_, v)| matches!(v, RecurrenceVerdict::Holds))
    }
}

/// Verdicts for a given sequence `a_0, a_1, ...` under the order-`d`
/// recurrence, starting at the first index with enough history.
pub fn check_sequence(d: u8, seq: &[ParamPoly]) -> Vec<(usize, RecurrenceVerdict)> {
    let Some(coeffs) = recurrence_coeffs(d) else {
        return Vec::new();
    };
    let order = coeffs.len();
    let dim_rel = dimension_relation(d);
    let mut out = Vec::new();
    for i in order..seq.len() {
        let mut expect = ParamPoly::zero();
        for (j, &c) in coeffs.iter().enumerate() {
            expect = &expect + &seq[i - 1 - j].scale(&rat(c));
        }
        let residual = &seq[i] - &expect;
        let verdict = if residual.is_zero() {
            RecurrenceVerdict::Holds
        } else if let Some(multiplier) = residual.rational_multiple_of(&dim_rel) {
            RecurrenceVerdict::HoldsModuloDimension { multiplier }
        } else {
            RecurrenceVerdict::Fails
        };
        out.push((i, verdict));
    }
    out
}

/// Euler characteristics `e(Y_{d,n})` for `n = 1..=nmax` (seed 24 at
/// `n = 1`, engine-computed beyond), with recurrence verdicts.
pub fn recurrence_check(
    d: u8,
    k3: &K3Record,
    nmax: usize,
) -> Result<RecurrenceReport, HodgeError> {
    let coeffs = recurrence_coeffs(d).ok_or_else(|| {
        HodgeError::InvalidDiamond(format!("no printed recurrence for order {d}"))
    })?;
    let min_nmax = coeffs.len() + 1;
    if nmax < min_nmax {
        return Err(HodgeError::TooFewFactors(nmax));
    }
    let k3_table = ftable_k3(k3);
    let e_table = ftable_elliptic(&EllipticRecord::new(d).expect("order checked"));
    let mut seq = vec![ParamPoly::int(24)];
    for n in 2..=nmax {
        let mut tables = vec![k3_table.clone()];
        for _ in 1..n {
            tables.push(e_table.clone());
        }
        let diamond = hodge_diamond(&tables)?;
        seq.push(euler_characteristic(&diamond));
    }
    let checks = check_sequence(d, &seq);
    let mut notes = Vec::new();
    if checks
        .iter()
        .any(|(_, v)| matches!(v, RecurrenceVerdict::HoldsModuloDimension { .. }))
    {
        notes.push(
            "seed-anchored checks hold modulo the H^2 dimension count (22), \
             which free symbolic eigenspace dimensions leave unenforced"
                .to_string(),
        );
    }
    Ok(RecurrenceReport {
        d,
        seq,
        checks,
        notes,
    })
}

/// Euler characteristics of the pure-elliptic `X_{d,n}` for `n = 1..=nmax`
/// (seed `e(E_d) = 0`), with recurrence verdicts where a recurrence exists.
pub fn elliptic_euler_sequence(d: u8, nmax: usize) -> Result<RecurrenceReport, HodgeError> {
    let e_table = ftable_elliptic(
        &EllipticRecord::new(d).map_err(HodgeError::Geometry)?,
    );
    let mut seq = vec![ParamPoly::zero()];
    for n in 2..=nmax {
        let tables = vec![e_table.clone(); n];
        let diamond = hodge_diamond(&tables)?;
        seq.push(euler_characteristic(&diamond));
    }
    let checks = check_sequence(d, &seq);
    Ok(RecurrenceReport {
        d,
        seq,
        checks,
        notes: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

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
    fn surface_18_sequence_and_recurrence() {
        let report = recurrence_check(6, &s618(), 6).unwrap();
        let nums: Vec<i64> = report
            .seq
            .iter()
            .map(|p| {
                let c = p.as_constant().unwrap();
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect();
        assert_eq!(nums, vec![24, 204, 2088, 20832, 208344, 2083344]);
        assert!(report.holds_identically());
    }

    #[test]
    fn order_3_symbolic_recurrence() {
        let rec = K3Record::generic(3).unwrap();
        let report = recurrence_check(3, &rec, 5).unwrap();
        // checks at i = 2 (anchored at a_0 = 24), 3, 4
        assert_eq!(report.checks.len(), 3);
        match &report.checks[0].1 {
            RecurrenceVerdict::HoldsModuloDimension { multiplier } => {
                assert_eq!(multiplier, &ratio(8, 1));
            }
            v => panic!("expected dimension-mod verdict, got {v:?}"),
        }
        assert!(matches!(report.checks[1].1, RecurrenceVerdict::Holds));
        assert!(matches!(report.checks[2].1, RecurrenceVerdict::Holds));
    }

    #[test]
    fn order_4_symbolic_recurrence_is_exact() {
        // Table 6 hard-codes the alpha eigenspace as 22 - r - 2m, so even
        // the seed-anchored check closes identically.
        let rec = K3Record::generic(4).unwrap();
        let report = recurrence_check(4, &rec, 5).unwrap();
        assert_eq!(report.checks.len(), 2);
        assert!(report.holds_identically());
    }

    #[test]
    fn numeric_order_3_recurrence_is_exact() {
        let rec = K3Record::numeric(3, &[("r", 10), ("m", 6), ("k", 3), ("gC", 0), ("h", 0)])
            .unwrap();
        let report = recurrence_check(3, &rec, 5).unwrap();
        assert!(report.holds_identically());
        // seed consistency: a_1 = e(Y_{3,2}) = 2r + 6h + 12k + 4 - 12g(C) - 2m
        let a1 = report.seq[1].as_constant().unwrap();
        assert_eq!(a1, rat(2 * 10 + 0 + 12 * 3 + 4 - 0 - 2 * 6));
    }

    #[test]
    fn pure_elliptic_sequences_satisfy_recurrences() {
        for d in [3u8, 4, 6] {
            let report = elliptic_euler_sequence(d, 5).unwrap();
            assert!(report.holds_identically(), "order {d}");
        }
        // order 2 has no printed recurrence
        let report = elliptic_euler_sequence(2, 4).unwrap();
        assert!(report.checks.is_empty());
    }

    #[test]
    fn nmax_too_small_rejected() {
        assert!(recurrence_check(6, &s618(), 4).is_err());
        assert!(recurrence_check(3, &K3Record::generic(3).unwrap(), 2).is_err());
    }
}
