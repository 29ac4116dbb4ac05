//! Finite invariant records describing the fixed-locus data of an elliptic
//! curve or K3 surface with a purely non-symplectic automorphism of order
//! `d in {2, 3, 4, 6}`, plus the Euler characteristics read off from them.
//!
//! A K3 record stores one entry per invariant in the order-`d` notation
//! list. Entries are either numbers or left free ("symbolic"), in which
//! case they enter downstream computations as polynomial symbols.

use crate::algebra::{rat, sym, ParamPoly, Rational, Sym};
use crate::geometry::GeometryError;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Numeric,
    Symbolic,
}

fn check_order(d: u8) -> Result<(), GeometryError> {
    match d {
        2 | 3 | 4 | 6 => Ok(()),
        _ => Err(GeometryError::InvalidRecord(format!(
            "order {d} not in {{2, 3, 4, 6}}"
        ))),
    }
}

/// Fixed-point counts of the order-`d` elliptic curve automorphism.
///
/// The counts are rigid: `#Fix(alpha_d^k)` is `(4)`, `(3,3)`, `(2,4,2)` or
/// `(1,3,4,3,1)` for `d = 2, 3, 4, 6` and `k = 1..d-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticRecord {
    pub d: u8,
    /// `fix_counts[k-1] = #Fix(alpha_d^k)` for `k = 1..d-1`.
    pub fix_counts: Vec<u64>,
}

pub(crate) fn canonical_fix_counts(d: u8) -> &'static [u64] {
    match d {
        2 => &[4],
        3 => &[3, 3],
        4 => &[2, 4, 2],
        6 => &[1, 3, 4, 3, 1],
        _ => unreachable!(),
    }
}

impl EllipticRecord {
    /// The curve `E_d` with its canonical automorphism.
    pub fn new(d: u8) -> Result<Self, GeometryError> {
        check_order(d)?;
        Ok(EllipticRecord {
            d,
            fix_counts: canonical_fix_counts(d).to_vec(),
        })
    }

    pub fn with_counts(d: u8, counts: Vec<u64>) -> Result<Self, GeometryError> {
        check_order(d)?;
        if counts != canonical_fix_counts(d) {
            return Err(GeometryError::InvalidRecord(format!(
                "order-{d} fixed-point counts must be {:?}, got {:?}",
                canonical_fix_counts(d),
                counts
            )));
        }
        Ok(EllipticRecord {
            d,
            fix_counts: counts,
        })
    }
}

/// `e(Fix(alpha_d^k))` — the fixed points are isolated, so this is a count.
pub fn elliptic_fix_euler(rec: &EllipticRecord, k: u8) -> Result<i64, GeometryError> {
    if k == 0 || k >= rec.d {
        return Err(GeometryError::OutOfRange(k, rec.d));
    }
    Ok(rec.fix_counts[(k - 1) as usize] as i64)
}

/// `e(Fix(alpha^g) cap Fix(alpha^h)) = e(Fix(alpha^gcd(g,h,d)))`, where
/// exponent 0 counts as `d` (the identity fixes the whole curve, Euler
/// characteristic 0).
pub fn elliptic_euler_pair(rec: &EllipticRecord, g: u8, h: u8) -> i64 {
    let d = rec.d as u64;
    let k = (g as u64).gcd(&(h as u64)).gcd(&d);
    if k == d || k == 0 {
        0
    } else {
        rec.fix_counts[(k - 1) as usize] as i64
    }
}

/// Invariant names per order, in notation-list order. These are the JSON
/// field names; `r, m, alpha, beta` are eigenspace dimensions of `H^2`, the
/// rest describe the fixed loci.
pub fn k3_field_names(d: u8) -> &'static [&'static str] {
    match d {
        2 => &["r", "m", "N", "Nprime"],
        3 => &["r", "m", "k", "gC", "h"],
        4 => &[
            "r", "m", "alpha", "k", "gG", "n1", "n2", "N", "a", "b", "gD", "gDq",
        ],
        6 => &[
            "r", "m", "alpha", "beta", "ell", "gD", "p25", "p34", "k", "b", "nprime", "n", "gG",
            "gGq", "a", "N", "gF1", "gF2", "gF1q", "gF2q",
        ],
        _ => &[],
    }
}

/// Invariant record of a K3 surface with an order-`d` purely non-symplectic
/// automorphism. `None` entries are free symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K3Record {
    pub d: u8,
    pub mode: Mode,
    vals: BTreeMap<&'static str, Option<i64>>,
}

impl K3Record {
    pub fn new(
        d: u8,
        mode: Mode,
        invariants: &BTreeMap<String, Option<i64>>,
    ) -> Result<Self, GeometryError> {
        check_order(d)?;
        let names = k3_field_names(d);
        let mut vals = BTreeMap::new();
        for &name in names {
            match invariants.get(name) {
                Some(v) => {
                    vals.insert(name, *v);
                }
                None => {
                    vals.insert(name, None);
                }
            }
        }
        for key in invariants.keys() {
            if !names.contains(&key.as_str()) {
                return Err(GeometryError::InvalidRecord(format!(
                    "unknown invariant `{key}` for order {d}"
                )));
            }
        }
        let rec = K3Record { d, mode, vals };
        rec.validate()?;
        Ok(rec)
    }

    /// Fully symbolic record (every invariant left free).
    pub fn generic(d: u8) -> Result<Self, GeometryError> {
        K3Record::new(d, Mode::Symbolic, &BTreeMap::new())
    }

    /// Numeric record from `(name, value)` pairs covering every invariant.
    pub fn numeric(d: u8, pairs: &[(&str, i64)]) -> Result<Self, GeometryError> {
        let map = pairs
            .iter()
            .map(|&(k, v)| (k.to_string(), Some(v)))
            .collect();
        K3Record::new(d, Mode::Numeric, &map)
    }

    fn validate(&self) -> Result<(), GeometryError> {
        for (&name, v) in &self.vals {
            if let Some(v) = v {
                if *v < 0 {
                    return Err(GeometryError::InvalidRecord(format!(
                        "invariant `{name}` is negative ({v})"
                    )));
                }
            }
        }
        if matches!(self.mode, Mode::Numeric) {
            for (&name, v) in &self.vals {
                if v.is_none() {
                    return Err(GeometryError::InvalidRecord(format!(
                        "numeric mode requires a value for `{name}`"
                    )));
                }
            }
            // H^2 dimension count and the structural bounds implied by the
            // fixed-locus decompositions.
            let g = |n: &str| self.vals[n].unwrap();
            let dim_ok = match self.d {
                2 => g("r") + g("m") == 22,
                3 => g("r") + 2 * g("m") == 22,
                4 => g("r") + 2 * g("m") + g("alpha") == 22,
                6 => g("r") + 2 * g("m") + 2 * g("alpha") + g("beta") == 22,
                _ => unreachable!(),
            };
            if !dim_ok {
                return Err(GeometryError::InvalidRecord(
                    "eigenspace dimensions do not sum to dim H^2 = 22".into(),
                ));
            }
            let structure_ok = match self.d {
                2 => true,
                3 => g("k") >= 1,
                4 => g("k") >= 1 && g("N") >= 2 * g("a") + g("b") + 1,
                6 => g("ell") >= 1 && g("k") >= 2 * g("b") + 1 && g("N") >= 3 * g("a") + 2,
                _ => unreachable!(),
            };
            if !structure_ok {
                return Err(GeometryError::InvalidRecord(
                    "fixed-locus counts violate the decomposition bounds".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn field_names(&self) -> &'static [&'static str] {
        k3_field_names(self.d)
    }

    /// The invariant as a polynomial: its value if set, else its symbol.
    pub fn value(&self, name: &str) -> ParamPoly {
        match self.vals.get(name) {
            Some(Some(v)) => ParamPoly::int(*v),
            Some(None) => ParamPoly::var(sym(name)),
            None => panic!("invariant `{name}` not defined for order {}", self.d),
        }
    }

    /// Numeric value, when set.
    pub fn numeric_value(&self, name: &str) -> Option<i64> {
        *self.vals.get(name).unwrap_or(&None)
    }

    pub fn raw(&self) -> &BTreeMap<&'static str, Option<i64>> {
        &self.vals
    }

    /// An evaluation environment for the record's numeric invariants
    /// (symbols of free invariants are absent).
    pub fn env(&self) -> BTreeMap<Sym, Rational> {
        let mut env = BTreeMap::new();
        for (&name, v) in &self.vals {
            if let Some(v) = v {
                env.insert(sym(name), rat(*v));
            }
        }
        env
    }

    /// Eigenspace dimension of the `zeta_d^j` eigenspace of `H^2`, as a
    /// polynomial. For `d = 4` the `j = 2` eigenspace is `22 - r - 2m`,
    /// exactly as the order-4 table prints it.
    pub fn eigendim(&self, j: u8) -> ParamPoly {
        let j = j % self.d;
        match (self.d, j) {
            (_, 0) => self.value("r"),
            (2, 1) => self.value("m"),
            (3, _) => self.value("m"),
            (4, 1) | (4, 3) => self.value("m"),
            (4, 2) => {
                &(&ParamPoly::int(22) - &self.value("r")) - &self.value("m").scale(&rat(2))
            }
            (6, 1) | (6, 5) => self.value("m"),
            (6, 2) | (6, 4) => self.value("alpha"),
            (6, 3) => self.value("beta"),
            _ => unreachable!(),
        }
    }
}

/// Euler characteristic of `Fix(gamma^k)` from the full locus decomposition
/// (curves, point pairs and isolated points all counted).
pub fn fix_euler(rec: &K3Record, k: u8) -> Result<ParamPoly, GeometryError> {
    if k == 0 || k >= rec.d {
        return Err(GeometryError::OutOfRange(k, rec.d));
    }
    let v = |n: &str| rec.value(n);
    let two = |n: &str| v(n).scale(&rat(2));
    Ok(match (rec.d, (k as u64).gcd(&(rec.d as u64))) {
        // N curves of total genus N'
        (2, 1) => &two("N") - &two("Nprime"),
        // k curves (largest of genus g(C)) and h points
        (3, _) => &(&two("k") - &two("gC")) + &v("h"),
        // k curves (largest g(G)) and n1 + n2 points
        (4, 1) => &(&two("k") - &two("gG")) + &(&v("n1") + &v("n2")),
        // N curves, largest of genus g(D)
        (4, 2) => &two("N") - &two("gD"),
        // l curves (largest g(D)), p25 + p34 points
        (6, 1) => &(&two("ell") - &two("gD")) + &(&v("p25") + &v("p34")),
        // k curves (largest g(G)), n' point pairs, p25 points
        (6, 2) => &(&(&two("k") - &two("gG")) + &two("nprime")) + &v("p25"),
        // N curves, among them F1 and F2 of positive genus
        (6, 3) => &(&two("N") - &two("gF1")) - &two("gF2"),
        _ => unreachable!(),
    })
}

/// `e(Fix(gamma^g) cap Fix(gamma^h))` on the K3 side: the intersection is
/// `Fix(gamma^gcd(g,h,d))`, with the whole surface (Euler 24) at exponent 0.
pub fn k3_euler_pair(rec: &K3Record, g: u8, h: u8) -> ParamPoly {
    let d = rec.d as u64;
    let k = (g as u64).gcd(&(h as u64)).gcd(&d);
    if k == d || k == 0 {
        ParamPoly::int(24)
    } else {
        fix_euler(rec, k as u8).expect("gcd power in range")
    }
}

/// JSON document form of a factor record, schema `cy/1`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecordDoc {
    pub schema: String,
    pub kind: String,
    pub d: u8,
    pub mode: Mode,
    #[serde(default)]
    pub invariants: BTreeMap<String, Option<i64>>,
}

/// Either kind of factor record, as parsed from JSON.
#[derive(Debug, Clone)]
pub enum AnyRecord {
    K3(K3Record),
    Elliptic(EllipticRecord),
}

pub fn record_to_json(rec: &AnyRecord) -> serde_json::Value {
    let doc = match rec {
        AnyRecord::K3(r) => RecordDoc {
            schema: "cy/1".into(),
            kind: "k3".into(),
            d: r.d,
            mode: r.mode,
            invariants: r
                .raw()
                .iter()
                .map(|(&k, v)| (k.to_string(), *v))
                .collect(),
        },
        AnyRecord::Elliptic(r) => RecordDoc {
            schema: "cy/1".into(),
            kind: "elliptic".into(),
            d: r.d,
            mode: Mode::Numeric,
            invariants: r
                .fix_counts
                .iter()
                .enumerate()
                .map(|(i, &c)| (format!("fix{}", i + 1), Some(c as i64)))
                .collect(),
        },
    };
    serde_json::to_value(doc).expect("record serializes")
}

pub fn record_from_json(value: &serde_json::Value) -> Result<AnyRecord, GeometryError> {
    let doc: RecordDoc = serde_json::from_value(value.clone())
        .map_err(|e| GeometryError::Schema(e.to_string()))?;
    if doc.schema != "cy/1" {
        return Err(GeometryError::Schema(format!(
            "unsupported schema `{}`",
            doc.schema
        )));
    }
    match doc.kind.as_str() {
        "k3" => Ok(AnyRecord::K3(K3Record::new(
            doc.d,
            doc.mode,
            &doc.invariants,
        )?)),
        "elliptic" => {
            let rec = if doc.invariants.is_empty() {
                EllipticRecord::new(doc.d)?
            } else {
                let mut counts = Vec::new();
                for k in 1..doc.d {
                    let name = format!("fix{k}");
                    let v = doc.invariants.get(&name).cloned().flatten().ok_or_else(|| {
                        GeometryError::Schema(format!("missing elliptic count `{name}`"))
                    })?;
                    if v < 0 {
                        return Err(GeometryError::InvalidRecord(format!(
                            "negative count `{name}`"
                        )));
                    }
                    counts.push(v as u64);
                }
                EllipticRecord::with_counts(doc.d, counts)?
            };
            Ok(AnyRecord::Elliptic(rec))
        }
        other => Err(GeometryError::Schema(format!("unknown kind `{other}`"))),
    }
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
    fn elliptic_counts_are_rigid() {
        assert!(EllipticRecord::with_counts(6, vec![1, 3, 4, 3, 1]).is_ok());
        assert!(EllipticRecord::with_counts(6, vec![1, 3, 4, 3, 2]).is_err());
        assert!(EllipticRecord::with_counts(2, vec![4]).is_ok());
        assert!(EllipticRecord::with_counts(2, vec![3]).is_err());
    }

    #[test]
    fn elliptic_euler_pairs() {
        let e2 = EllipticRecord::new(2).unwrap();
        assert_eq!(elliptic_euler_pair(&e2, 0, 0), 0);
        assert_eq!(elliptic_euler_pair(&e2, 1, 1), 4);
        let e6 = EllipticRecord::new(6).unwrap();
        assert_eq!(elliptic_euler_pair(&e6, 2, 3), 1); // gcd 1, one point
        assert_eq!(elliptic_euler_pair(&e6, 2, 4), 3); // gcd 2
        assert_eq!(elliptic_euler_pair(&e6, 3, 3), 4); // gcd 3
    }

    #[test]
    fn surface_18_fix_eulers() {
        let rec = s618();
        let as_int = |k| {
            fix_euler(&rec, k)
                .unwrap()
                .as_constant()
                .unwrap()
                .to_integer()
        };
        assert_eq!(as_int(1), 21.into()); // 2*3 - 0 + 9 + 6
        assert_eq!(as_int(2), 21.into()); // 12 - 0 + 0 + 9
        assert_eq!(as_int(3), 18.into()); // 20 - 2
        assert_eq!(as_int(4), 21.into());
        assert_eq!(as_int(5), 21.into());
    }

    #[test]
    fn mixed_record_keeps_symbols() {
        // surface 18 with g(G) left free: e(Fix(gamma^2)) = 21 - 2 g(G)
        let mut map: BTreeMap<String, Option<i64>> = BTreeMap::new();
        for (k, v) in s618().raw() {
            map.insert(k.to_string(), *v);
        }
        map.insert("gG".into(), None);
        let rec = K3Record::new(6, Mode::Symbolic, &map).unwrap();
        let e2 = fix_euler(&rec, 2).unwrap();
        let expect =
            &ParamPoly::int(21) - &ParamPoly::var(sym("gG")).scale(&crate::algebra::rat(2));
        assert_eq!(e2, expect);
    }

    #[test]
    fn generic_record_fix_euler_is_symbolic() {
        let rec = K3Record::generic(2).unwrap();
        let e = fix_euler(&rec, 1).unwrap();
        assert_eq!(format!("{e}"), "2*N - 2*N'");
    }

    #[test]
    fn k3_euler_pair_at_identity_is_24() {
        let rec = s618();
        assert_eq!(k3_euler_pair(&rec, 0, 0), ParamPoly::int(24));
        assert_eq!(
            k3_euler_pair(&rec, 2, 3),
            fix_euler(&rec, 1).unwrap() // gcd(2,3,6) = 1
        );
    }

    #[test]
    fn numeric_validation_rejects_bad_data() {
        // negative count
        assert!(K3Record::numeric(2, &[("r", 19), ("m", 3), ("N", -1), ("Nprime", 0)]).is_err());
        // dimension count r + m = 22 violated
        assert!(K3Record::numeric(2, &[("r", 19), ("m", 4), ("N", 10), ("Nprime", 1)]).is_err());
        // six-lines surface passes
        assert!(K3Record::numeric(2, &[("r", 19), ("m", 3), ("N", 10), ("Nprime", 1)]).is_ok());
    }

    #[test]
    fn unknown_invariant_rejected() {
        let mut map: BTreeMap<String, Option<i64>> = BTreeMap::new();
        map.insert("zz".into(), Some(1));
        assert!(matches!(
            K3Record::new(2, Mode::Symbolic, &map),
            Err(GeometryError::InvalidRecord(_))
        ));
    }

    #[test]
    fn record_json_round_trip() {
        let rec = AnyRecord::K3(s618());
        let j = record_to_json(&rec);
        let back = record_from_json(&j).unwrap();
        match back {
            AnyRecord::K3(r) => assert_eq!(r, s618()),
            _ => panic!("kind changed"),
        }
        let e = AnyRecord::Elliptic(EllipticRecord::new(4).unwrap());
        let j = record_to_json(&e);
        match record_from_json(&j).unwrap() {
            AnyRecord::Elliptic(r) => assert_eq!(r.fix_counts, vec![2, 4, 2]),
            _ => panic!("kind changed"),
        }
    }

    #[test]
    fn out_of_range_power() {
        let rec = s618();
        assert!(matches!(
            fix_euler(&rec, 0),
            Err(GeometryError::OutOfRange(0, 6))
        ));
        assert!(matches!(
            fix_euler(&rec, 6),
            Err(GeometryError::OutOfRange(6, 6))
        ));
    }
}
