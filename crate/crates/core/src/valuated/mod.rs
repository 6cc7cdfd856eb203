//! Valuated gaussoids: points of the tropical prevariety cut out by the
//! square and edge trinomials, and valuations of minors over ℚ(ε).
//!
//! Values may be `+∞` for exactly vanishing minors. A term with a `+∞`
//! factor is `+∞` and the minimum-attained-twice rule applies unchanged.

pub mod eps;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use eps::{EpsMatrix, EpsPolynomial};

use crate::cube::{all_trinomials, minor_indices, GroundSet, Symbol, Trinomial};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Rational};

/// A rational number or `+∞`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ExtRational {
    Finite(Rational),
    Infinity,
}

impl ExtRational {
    pub fn int(v: i64) -> Self {
        ExtRational::Finite(Rational::from_integer(BigInt::from(v)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRational::Finite(_))
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" | "∞" => Ok(ExtRational::Infinity),
            t => Ok(ExtRational::Finite(parse_rational(t)?)),
        }
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
            (ExtRational::Finite(_), ExtRational::Infinity) => Ordering::Less,
            (ExtRational::Infinity, ExtRational::Finite(_)) => Ordering::Greater,
            (ExtRational::Infinity, ExtRational::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &ExtRational {
    type Output = ExtRational;
    fn add(self, rhs: &ExtRational) -> ExtRational {
        match (self, rhs) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => ExtRational::Finite(a + b),
            _ => ExtRational::Infinity,
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => f.write_str(&format_rational(r)),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

/// A map `P ∪ A → ℚ ∪ {+∞}`, stored in canonical symbol order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Valuation {
    gs: GroundSet,
    values: Vec<ExtRational>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ValuationJson {
    pub n: usize,
    pub values: serde_json::Map<String, serde_json::Value>,
}

impl Valuation {
    pub fn new(gs: &GroundSet, values: Vec<ExtRational>) -> Result<Self> {
        if values.len() != gs.symbol_count() {
            return Err(Error::Dimension { expected: gs.symbol_count(), found: values.len() });
        }
        Ok(Self { gs: gs.clone(), values })
    }

    pub fn zero(gs: &GroundSet) -> Self {
        Self { gs: gs.clone(), values: vec![ExtRational::int(0); gs.symbol_count()] }
    }

    /// Values listed in an arbitrary symbol order; every symbol exactly once.
    pub fn from_ordered(gs: &GroundSet, order: &[Symbol], values: &[ExtRational]) -> Result<Self> {
        if order.len() != gs.symbol_count() || values.len() != order.len() {
            return Err(Error::Dimension { expected: gs.symbol_count(), found: order.len().min(values.len()) });
        }
        let mut out: Vec<Option<ExtRational>> = vec![None; gs.symbol_count()];
        for (s, v) in order.iter().zip(values) {
            let idx = gs.symbol_index(*s)?;
            if out[idx].replace(v.clone()).is_some() {
                return Err(Error::Invalid(format!("symbol {s} listed twice")));
            }
        }
        Ok(Self { gs: gs.clone(), values: out.into_iter().map(|v| v.unwrap()).collect() })
    }

    /// `value` on the listed symbols, `0` elsewhere.
    pub fn indicator(gs: &GroundSet, symbols: &[Symbol], value: i64) -> Result<Self> {
        let mut v = Self::zero(gs);
        for &s in symbols {
            let idx = gs.symbol_index(s)?;
            v.values[idx] = ExtRational::int(value);
        }
        Ok(v)
    }

    pub fn ground_set(&self) -> &GroundSet {
        &self.gs
    }

    pub fn get(&self, s: Symbol) -> &ExtRational {
        &self.values[self.gs.ord(s)]
    }

    pub fn values(&self) -> &[ExtRational] {
        &self.values
    }

    /// Values listed in the given symbol order.
    pub fn in_order(&self, order: &[Symbol]) -> Vec<ExtRational> {
        order.iter().map(|&s| self.get(s).clone()).collect()
    }

    /// Adds a finite vector (canonical order) to every value.
    pub fn shifted(&self, delta: &[Rational]) -> Self {
        let values = self.values.iter().zip(delta).map(|(v, d)| v + &ExtRational::Finite(d.clone())).collect();
        Self { gs: self.gs.clone(), values }
    }

    /// The three term valuations `ν(m_i)` of a trinomial.
    pub fn term_values(&self, t: &Trinomial) -> [ExtRational; 3] {
        t.terms.map(|term| self.get(term.factors[0]) + self.get(term.factors[1]))
    }

    /// First trinomial whose minimum is attained only once.
    pub fn first_violation(&self) -> Option<Trinomial> {
        all_trinomials(&self.gs).into_iter().find(|t| {
            let vals = self.term_values(t);
            let min = vals.iter().min().unwrap();
            vals.iter().filter(|v| *v == min).count() < 2
        })
    }

    pub fn is_valuated_gaussoid(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn to_json(&self) -> ValuationJson {
        let values = self
            .gs
            .symbols()
            .iter()
            .zip(&self.values)
            .map(|(s, v)| (s.to_string(), serde_json::Value::String(v.to_string())))
            .collect();
        ValuationJson { n: self.gs.n(), values }
    }

    pub fn from_json(json: &ValuationJson) -> Result<Self> {
        let gs = GroundSet::new(json.n)?;
        let mut out: Vec<Option<ExtRational>> = vec![None; gs.symbol_count()];
        for (k, v) in &json.values {
            let s = gs.parse_symbol(k)?;
            let text = match v {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(x) => x.to_string(),
                other => return Err(Error::Invalid(format!("bad value {other} for {k}"))),
            };
            out[gs.ord(s)] = Some(ExtRational::parse(&text)?);
        }
        let values = out
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::Invalid(format!("missing value for {}", gs.symbol(i)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { gs, values })
    }
}

/// ε-orders of all principal and almost-principal minors of `M`, or of
/// `M⁻¹` when `inverse` is set (minors of the adjugate divided by powers of
/// `det M`). Exactly vanishing minors get `+∞`.
pub fn minor_valuations(gs: &GroundSet, m: &EpsMatrix, inverse: bool) -> Result<Valuation> {
    if m.n() != gs.n() {
        return Err(Error::Dimension { expected: gs.n(), found: m.n() });
    }
    let (mat, det_val) = if inverse {
        let det = m.det();
        let v = det.valuation().ok_or_else(|| Error::DegenerateMatrix("det M = 0".into()))?;
        (m.adjugate(), v)
    } else {
        (m.clone(), 0)
    };
    let values = gs
        .symbols()
        .iter()
        .map(|&s| {
            let (rows, cols) = minor_indices(s);
            match mat.minor(&rows, &cols).valuation() {
                None => ExtRational::Infinity,
                Some(v) => {
                    let k = rows.len() as i64;
                    ExtRational::int(v as i64 - k * det_val as i64)
                }
            }
        })
        .collect();
    Valuation::new(gs, values)
}

fn syms(names: &[&str]) -> Vec<Symbol> {
    names.iter().map(|s| s.parse().expect("fixture symbol")).collect()
}

/// Coordinate order used by the n = 3 ray and lineality fixtures.
pub const N3_TROPICAL_ORDER: [&str; 14] =
    ["a12", "a12|3", "a13", "a13|2", "a23", "a23|1", "p", "p1", "p12", "p123", "p13", "p2", "p23", "p3"];

/// The four spanning rows of the lineality space for n = 3, in [`N3_TROPICAL_ORDER`].
pub const N3_LINEALITY: [[i64; 14]; 4] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, -1, 1, -1, 1, 1, 1, 1, -1, -1, -1],
    [0, 0, -1, 1, 0, 0, -1, -1, 1, 1, -1, 1, 1, -1],
    [-1, 1, 0, 0, 0, 0, -1, -1, -1, 1, 1, -1, 1, 1],
];

type Block = [(&'static str, i64); 4];

/// The 35 ray generators of the tropical variety for n = 3 as symbol sums
/// with multiplicities, grouped by type: 6 a, 8 p, 3 A, 12 B, 6 C.
pub fn n3_ray_terms() -> Vec<(&'static str, Vec<(&'static str, i64)>)> {
    let mut out: Vec<(&'static str, Vec<(&'static str, i64)>)> = Vec::new();
    for a in ["a12", "a13", "a23", "a12|3", "a13|2", "a23|1"] {
        out.push(("a", vec![(a, 1)]));
    }
    for p in ["p", "p1", "p2", "p3", "p12", "p13", "p23", "p123"] {
        out.push(("p", vec![(p, 1)]));
    }
    let block12_13 = [("a12", 1), ("a12|3", 1), ("a13", 1), ("a13|2", 1)];
    let block12_23 = [("a12", 1), ("a12|3", 1), ("a23", 1), ("a23|1", 1)];
    let block13_23 = [("a13", 1), ("a13|2", 1), ("a23", 1), ("a23|1", 1)];
    for b in [&block12_13, &block12_23, &block13_23] {
        out.push(("A", b.to_vec()));
    }
    let b_rays: [(&Block, &str, &str); 12] = [
        (&block12_13, "p", "p1"),
        (&block12_23, "p", "p2"),
        (&block13_23, "p", "p3"),
        (&block12_23, "p1", "p12"),
        (&block13_23, "p1", "p13"),
        (&block12_13, "p2", "p12"),
        (&block13_23, "p2", "p23"),
        (&block12_13, "p3", "p13"),
        (&block12_23, "p3", "p23"),
        (&block13_23, "p12", "p123"),
        (&block12_23, "p13", "p123"),
        (&block12_13, "p23", "p123"),
    ];
    for (block, x, y) in b_rays {
        let mut v = block.to_vec();
        v.extend([(x, 2), (y, 2)]);
        out.push(("B", v));
    }
    let c_rays = [
        ["a12", "a13|2", "p2", "p12"],
        ["a23", "a12|3", "p3", "p23"],
        ["a23", "a13|2", "p2", "p23"],
        ["a13|2", "a23|1", "p12", "p123"],
        ["a12|3", "a13|2", "p23", "p123"],
        ["a12|3", "a23|1", "p13", "p123"],
    ];
    for [a, b, x, y] in c_rays {
        out.push(("C", vec![(a, 1), (b, 1), (x, 2), (y, 2)]));
    }
    out
}

/// The ray generators as valuations on `[3]`.
pub fn n3_ray_valuations() -> Vec<Valuation> {
    let gs = GroundSet::new(3).unwrap();
    n3_ray_terms()
        .into_iter()
        .map(|(_, terms)| {
            let mut v = Valuation::zero(&gs);
            for (s, m) in terms {
                let idx = gs.ord(s.parse().unwrap());
                v.values[idx] = &v.values[idx] + &ExtRational::int(m);
            }
            v
        })
        .collect()
}

/// A lineality vector (combination of [`N3_LINEALITY`] rows) in canonical order.
pub fn n3_lineality_vector(coeffs: [i64; 4]) -> Vec<Rational> {
    let gs = GroundSet::new(3).unwrap();
    let order = syms(&N3_TROPICAL_ORDER);
    let mut out = vec![Rational::zero(); gs.symbol_count()];
    for (row, c) in N3_LINEALITY.iter().zip(coeffs) {
        for (s, x) in order.iter().zip(row) {
            out[gs.ord(*s)] += Rational::from_integer(BigInt::from(c * x));
        }
    }
    out
}

/// Symbol order of the non-realizable n = 4 valuation fixture.
pub const N4_NONREALIZABLE_ORDER: [&str; 40] = [
    "p", "p1", "p12", "p123", "p1234", "p124", "p13", "p134", "p14", "p2", "p23", "p234", "p24", "p3", "p34", "p4",
    "a12", "a12|3", "a12|34", "a12|4", "a13", "a13|2", "a13|24", "a13|4", "a14", "a14|2", "a14|23", "a14|3", "a23",
    "a23|1", "a23|14", "a23|4", "a24", "a24|1", "a24|13", "a24|3", "a34", "a34|1", "a34|12", "a34|2",
];

pub const N4_NONREALIZABLE_VALUES: [i64; 40] = [
    14, 10, 6, 0, 6, 8, 8, 2, 8, 6, 6, 2, 8, 8, 8, 8, 8, 4, 2, 10, 9, 3, 5, 5, 9, 11, 1, 5, 7, 5, 5, 5, 7, 7, 1, 5, 8,
    6, 4, 4,
];

/// A valuated gaussoid on `[4]` that lies in the prevariety but is not a
/// tropicalization of any point of the variety.
pub fn n4_nonrealizable_valuation() -> Valuation {
    let gs = GroundSet::new(4).unwrap();
    let values: Vec<ExtRational> = N4_NONREALIZABLE_VALUES.iter().map(|&v| ExtRational::int(v)).collect();
    Valuation::from_ordered(&gs, &syms(&N4_NONREALIZABLE_ORDER), &values).unwrap()
}

/// The ten 2-faces of the 5-cube forming a non-realizable gaussoid.
pub const TEN_FACE_GAUSSOID: [&str; 10] =
    ["a12", "a13|4", "a14|5", "a15|23", "a23|5", "a24|135", "a25|34", "a34|12", "a35|1", "a45|2"];

/// `1` on [`TEN_FACE_GAUSSOID`], `0` elsewhere.
pub fn ten_face_valuation() -> Valuation {
    let gs = GroundSet::new(5).unwrap();
    Valuation::indicator(&gs, &syms(&TEN_FACE_GAUSSOID), 1).unwrap()
}

/// `[[1,-e^7,-e^5],[-e^7,1,-e^6],[-e^5,-e^6,1]]`, whose inverse is a
/// covariance matrix over ℚ(ε) with positive tropical minors.
pub fn n3_eps_concentration() -> EpsMatrix {
    EpsMatrix::parse_rows(&[vec!["1", "-e^7", "-e^5"], vec!["-e^7", "1", "-e^6"], vec!["-e^5", "-e^6", "1"]]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_indicator() {
        let gs = GroundSet::new(3).unwrap();
        assert!(Valuation::zero(&gs).is_valuated_gaussoid());
        let v = Valuation::indicator(&gs, &syms(&["a12"]), 1).unwrap();
        assert!(v.is_valuated_gaussoid());
        let bad = Valuation::indicator(&gs, &syms(&["p"]), -1).unwrap();
        assert!(bad.first_violation().is_some());
    }

    #[test]
    fn ray_fixture_shape() {
        let rays = n3_ray_valuations();
        assert_eq!(rays.len(), 35);
        let order = syms(&N3_TROPICAL_ORDER);
        let last: Vec<String> = rays[34].in_order(&order).iter().map(|x| x.to_string()).collect();
        assert_eq!(last, ["0", "1", "0", "0", "0", "1", "0", "0", "0", "2", "2", "0", "0", "0"]);
    }

    #[test]
    fn eps_inverse_valuation() {
        let gs = GroundSet::new(3).unwrap();
        let v = minor_valuations(&gs, &n3_eps_concentration(), true).unwrap();
        let got: Vec<String> = v.in_order(&syms(&N3_TROPICAL_ORDER)).iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["7", "7", "5", "5", "6", "6", "0", "0", "0", "0", "0", "0", "0", "0"]);
        let id = EpsMatrix::parse_rows(&[vec!["1", "0", "0"], vec!["0", "1", "0"], vec!["0", "0", "1"]]).unwrap();
        let vi = minor_valuations(&gs, &id, false).unwrap();
        for &s in gs.symbols() {
            assert_eq!(vi.get(s).is_finite(), s.is_p());
        }
    }

    #[test]
    fn json_roundtrip() {
        let v = n4_nonrealizable_valuation();
        let j = serde_json::to_string(&v.to_json()).unwrap();
        let back: ValuationJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Valuation::from_json(&back).unwrap(), v);
        let mut inf = Valuation::zero(&GroundSet::new(2).unwrap());
        inf.values[0] = ExtRational::Infinity;
        let j = inf.to_json();
        assert_eq!(j.values["p"], "inf");
        assert_eq!(Valuation::from_json(&j).unwrap(), inf);
    }
}
