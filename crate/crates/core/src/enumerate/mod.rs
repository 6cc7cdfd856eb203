//! Census enumeration: gaussoids through the CNF encoding of the axioms,
//! oriented gaussoids through a native three-valued search or the
//! orientation CNF.

pub mod cnf;
pub mod solver;
pub mod ternary;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

pub use cnf::{build_gaussoid_cnf, build_orientation_cnf, build_oriented_cnf, gaussoid_clause_count, CnfFormula};
pub use solver::{count_by_enumeration, count_models, models_u128, solve_all};
pub use ternary::TernaryProblem;

use crate::bitset::BitSet;
use crate::cube::GroundSet;
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::gaussoid::Gaussoid;
use crate::oriented::OrientedGaussoid;
use crate::symmetry::OrientedKey;

/// All gaussoids on `[n]` as raw encodings, in solver order.
pub fn gaussoid_models(gs: &GroundSet, strategy: Strategy) -> Result<Vec<u128>> {
    models_u128(&build_gaussoid_cnf(gs), strategy)
}

pub fn enumerate_gaussoids(gs: &GroundSet, strategy: Strategy) -> Result<Vec<Gaussoid>> {
    Ok(gaussoid_models(gs, strategy)?.into_iter().map(|m| Gaussoid::from_u128(gs, m)).collect())
}

/// Streams every gaussoid to `visit` without collecting them.
pub fn for_each_gaussoid<V: FnMut(&Gaussoid)>(gs: &GroundSet, mut visit: V) -> BigUint {
    solve_all(&build_gaussoid_cnf(gs), |bits| {
        let b = BitSet::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, &x)| x).map(|(i, _)| i));
        visit(&Gaussoid::from_bits(gs, b));
    })
}

pub fn count_gaussoids(gs: &GroundSet, strategy: Strategy) -> BigUint {
    count_by_enumeration(&build_gaussoid_cnf(gs), strategy)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrientedMode {
    /// Every oriented gaussoid.
    All,
    /// No zeros.
    Uniform,
    /// No negative signs.
    Positive,
}

impl OrientedMode {
    pub fn name(self) -> &'static str {
        match self {
            OrientedMode::All => "oriented",
            OrientedMode::Uniform => "uniform",
            OrientedMode::Positive => "positive",
        }
    }

    fn domain(self) -> u8 {
        match self {
            OrientedMode::All => ternary::ANY,
            OrientedMode::Uniform => ternary::PLUS | ternary::MINUS,
            OrientedMode::Positive => ternary::ZERO | ternary::PLUS,
        }
    }
}

impl fmt::Display for OrientedMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrientedMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" | "oriented" => Ok(OrientedMode::All),
            "uniform" => Ok(OrientedMode::Uniform),
            "positive" => Ok(OrientedMode::Positive),
            other => Err(Error::Invalid(format!("unknown mode {other:?}"))),
        }
    }
}

/// Oriented gaussoids of the given kind as keys. `All` and `Positive` use
/// the ternary search, `Uniform` the orientation CNF of the empty gaussoid.
pub fn oriented_keys(gs: &GroundSet, mode: OrientedMode, strategy: Strategy) -> Result<Vec<OrientedKey>> {
    if gs.n() < 3 {
        return Err(Error::Unsupported("oriented censuses need n ≥ 3".into()));
    }
    match mode {
        OrientedMode::Uniform => {
            let (f, _) = build_orientation_cnf(&Gaussoid::empty(gs))?;
            Ok(models_u128(&f, strategy)?.into_iter().map(|neg| (0, neg)).collect())
        }
        _ => {
            if gs.a_count() > 128 {
                return Err(Error::Unsupported(format!("n = {} exceeds the 128-bit encoding", gs.n())));
            }
            Ok(TernaryProblem::new(gs).keys(&vec![mode.domain(); gs.a_count()], strategy))
        }
    }
}

/// Oriented census by search, without collecting; any `n ≥ 3`.
pub fn ternary_count(gs: &GroundSet, mode: OrientedMode, strategy: Strategy) -> BigUint {
    TernaryProblem::new(gs).count(&vec![mode.domain(); gs.a_count()], strategy)
}

pub fn enumerate_oriented(gs: &GroundSet, mode: OrientedMode, strategy: Strategy) -> Result<Vec<OrientedGaussoid>> {
    Ok(oriented_keys(gs, mode, strategy)?.into_iter().map(|k| OrientedGaussoid::from_key(gs, k)).collect())
}

pub fn count_oriented(gs: &GroundSet, mode: OrientedMode, strategy: Strategy) -> Result<BigUint> {
    match mode {
        OrientedMode::Uniform => {
            let (f, _) = build_orientation_cnf(&Gaussoid::empty(gs))?;
            Ok(count_by_enumeration(&f, strategy))
        }
        _ => Ok(ternary_count(gs, mode, strategy)),
    }
}

/// Every orientation whose zero set is exactly `G`.
pub fn enumerate_orientations(g: &Gaussoid) -> Vec<OrientedGaussoid> {
    let gs = g.ground_set();
    let domains: Vec<u8> = (0..gs.a_count())
        .map(|a| if g.bits().contains(a) { ternary::ZERO } else { ternary::PLUS | ternary::MINUS })
        .collect();
    let mut out = Vec::new();
    TernaryProblem::new(gs).solve_all(&domains, |signs| {
        out.push(OrientedGaussoid::from_signs(gs, signs).expect("valid signs"));
    });
    out
}

/// Number of orientations of `G` through the orientation CNF.
pub fn count_orientations_cnf(g: &Gaussoid) -> Result<BigUint> {
    let (f, _) = build_orientation_cnf(g)?;
    Ok(count_models(&f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_census() {
        let gs = GroundSet::new(3).unwrap();
        let gaussoids = gaussoid_models(&gs, Strategy::Sequential).unwrap();
        assert_eq!(gaussoids.len(), 11);
        assert_eq!(count_models(&build_gaussoid_cnf(&gs)), BigUint::from(11u32));
        for (mode, want) in [(OrientedMode::All, 51u32), (OrientedMode::Uniform, 20), (OrientedMode::Positive, 8)] {
            assert_eq!(oriented_keys(&gs, mode, Strategy::Sequential).unwrap().len(), want as usize);
            assert_eq!(ternary_count(&gs, mode, Strategy::Parallel), BigUint::from(want));
        }
        assert_eq!(count_models(&build_oriented_cnf(&gs)), BigUint::from(51u32));
    }

    #[test]
    fn orientations_of_small_gaussoids() {
        let gs = GroundSet::new(3).unwrap();
        assert_eq!(enumerate_orientations(&Gaussoid::empty(&gs)).len(), 20);
        assert_eq!(enumerate_orientations(&Gaussoid::full(&gs)).len(), 1);
        assert_eq!(count_orientations_cnf(&Gaussoid::empty(&gs)).unwrap(), BigUint::from(20u32));
    }
}
