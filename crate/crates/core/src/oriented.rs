//! Oriented and positive gaussoids.
//!
//! An orientation assigns `0`, `+1` or `-1` to every A-symbol. It is valid
//! when, for every edge trinomial with all P-symbols set to `+1`, the set of
//! the three term values is `{0}`, `{-1,+1}` or `{-1,0,+1}`.

use std::fmt;

use crate::bitset::BitSet;
use crate::cube::{edge_trinomials, square_trinomials, GroundSet, Trinomial};
use crate::error::{Error, Result};
use crate::gaussoid::{graph_gaussoid, Gaussoid, Graph};
use crate::symmetry::{low_mask, OrientedKey};

/// A map `A → {0, ±1}` stored as a zero set and a negative set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGaussoid {
    gs: GroundSet,
    zero: BitSet,
    neg: BitSet,
}

impl OrientedGaussoid {
    pub fn from_parts(gs: &GroundSet, zero: BitSet, neg: BitSet) -> Result<Self> {
        if zero.len() != gs.a_count() || neg.len() != gs.a_count() {
            return Err(Error::Dimension { expected: gs.a_count(), found: zero.len().max(neg.len()) });
        }
        if !zero.is_disjoint(&neg) {
            return Err(Error::Invalid("a symbol is both zero and negative".into()));
        }
        Ok(Self { gs: gs.clone(), zero, neg })
    }

    /// Signs in canonical A-order.
    pub fn from_signs(gs: &GroundSet, signs: &[i8]) -> Result<Self> {
        if signs.len() != gs.a_count() {
            return Err(Error::Dimension { expected: gs.a_count(), found: signs.len() });
        }
        let mut zero = BitSet::new(signs.len());
        let mut neg = BitSet::new(signs.len());
        for (i, &s) in signs.iter().enumerate() {
            match s {
                0 => zero.insert(i),
                -1 => neg.insert(i),
                1 => {}
                other => return Err(Error::Invalid(format!("sign {other} not in {{-1,0,1}}"))),
            }
        }
        Self::from_parts(gs, zero, neg)
    }

    /// A string over `+`, `-`, `0` in canonical A-order.
    pub fn from_sign_string(gs: &GroundSet, s: &str) -> Result<Self> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '−' => Ok(-1),
                '0' => Ok(0),
                other => Err(Error::Invalid(format!("bad sign character {other:?}"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Self::from_signs(gs, &signs)
    }

    pub fn from_key(gs: &GroundSet, (zero, neg): OrientedKey) -> Self {
        let len = gs.a_count();
        let zero = BitSet::from_u128(len, zero);
        let neg = BitSet::from_u128(len, neg);
        Self::from_parts(gs, zero, neg).expect("disjoint key")
    }

    pub fn key(&self) -> Option<OrientedKey> {
        Some((self.zero.to_u128()?, self.neg.to_u128()?))
    }

    pub fn all_plus(gs: &GroundSet) -> Self {
        Self::from_parts(gs, BitSet::new(gs.a_count()), BitSet::new(gs.a_count())).unwrap()
    }

    pub fn all_zero(gs: &GroundSet) -> Self {
        Self::from_parts(gs, BitSet::full(gs.a_count()), BitSet::new(gs.a_count())).unwrap()
    }

    /// `0` on `G`, `+1` elsewhere.
    pub fn plus_outside(g: &Gaussoid) -> Self {
        let gs = g.ground_set();
        Self::from_parts(gs, g.bits().clone(), BitSet::new(gs.a_count())).unwrap()
    }

    pub fn ground_set(&self) -> &GroundSet {
        &self.gs
    }

    pub fn zero_set(&self) -> &BitSet {
        &self.zero
    }

    pub fn negative_set(&self) -> &BitSet {
        &self.neg
    }

    pub fn sign_at(&self, a_pos: usize) -> i8 {
        if self.zero.contains(a_pos) {
            0
        } else if self.neg.contains(a_pos) {
            -1
        } else {
            1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.gs.a_count()).map(|a| self.sign_at(a)).collect()
    }

    pub fn sign_string(&self) -> String {
        self.signs().iter().map(|&s| sign_char(s)).collect()
    }

    /// Sign values of the three terms of `t` under this orientation.
    pub fn term_signs(&self, t: &Trinomial) -> [i8; 3] {
        t.terms.map(|term| {
            term.factors.iter().fold(term.coeff, |acc, f| if f.is_a() { acc * self.sign_at(self.gs.a_pos(*f)) } else { acc })
        })
    }

    /// The first edge trinomial (if any) whose term-value set is not allowed.
    pub fn first_violation(&self) -> Option<Trinomial> {
        edge_trinomials(&self.gs).into_iter().find(|t| !signs_allowed(self.term_signs(t)))
    }

    pub fn is_oriented_gaussoid(&self) -> bool {
        self.first_violation().is_none()
    }

    /// Validity with the square trinomials added to the constraint set.
    pub fn satisfies_all_trinomials(&self) -> bool {
        self.is_oriented_gaussoid() && square_trinomials(&self.gs).iter().all(|t| signs_allowed(self.term_signs(t)))
    }

    /// The zero set as a validated gaussoid.
    pub fn support(&self) -> Result<Gaussoid> {
        let g = Gaussoid::from_bits(&self.gs, self.zero.clone());
        g.validate()?;
        Ok(g)
    }

    pub fn is_uniform(&self) -> bool {
        self.zero.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.neg.is_empty() && self.is_oriented_gaussoid()
    }

    pub fn negate_where(&self, flip: &BitSet) -> Self {
        let mut neg = BitSet::new(self.gs.a_count());
        for a in 0..self.gs.a_count() {
            if !self.zero.contains(a) && (self.neg.contains(a) != flip.contains(a)) {
                neg.insert(a);
            }
        }
        Self { gs: self.gs.clone(), zero: self.zero.clone(), neg }
    }
}

impl fmt::Display for OrientedGaussoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sign_string())
    }
}

impl fmt::Debug for OrientedGaussoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedGaussoid[n={}]({})", self.gs.n(), self.sign_string())
    }
}

pub fn sign_char(s: i8) -> char {
    match s.signum() {
        1 => '+',
        -1 => '-',
        _ => '0',
    }
}

/// `{0}`, `{-1,+1}`, `{-1,0,+1}`: a positive value occurs iff a negative does.
pub fn signs_allowed(values: [i8; 3]) -> bool {
    values.iter().any(|&v| v > 0) == values.iter().any(|&v| v < 0)
}

/// The positive gaussoids, one per graph on `[n]`: zero on `G_Γ`, `+1` elsewhere.
pub fn positive_census(gs: &GroundSet) -> Result<Vec<(Graph, OrientedGaussoid)>> {
    Graph::all(gs.n())
        .map(|g| {
            let phi = OrientedGaussoid::plus_outside(&graph_gaussoid(gs, &g)?);
            if !phi.is_positive() {
                return Err(Error::Invalid(format!("graph {:?} gives a non-positive map", g.edges())));
            }
            Ok((g, phi))
        })
        .collect()
}

/// Raw-key version of [`OrientedGaussoid::is_oriented_gaussoid`] for census loops.
pub struct OrientationChecker {
    terms: Vec<[(i8, [u32; 2]); 3]>,
    len: usize,
}

const NO_A: u32 = u32::MAX;

impl OrientationChecker {
    pub fn new(gs: &GroundSet) -> Self {
        let terms = edge_trinomials(gs)
            .iter()
            .map(|t| {
                t.terms.map(|term| (term.coeff, term.factors.map(|f| if f.is_a() { gs.a_pos(f) as u32 } else { NO_A })))
            })
            .collect();
        Self { terms, len: gs.a_count() }
    }

    pub fn is_valid(&self, (zero, neg): OrientedKey) -> bool {
        let sign = |a: u32| -> i8 {
            if a == NO_A {
                1
            } else if zero >> a & 1 == 1 {
                0
            } else if neg >> a & 1 == 1 {
                -1
            } else {
                1
            }
        };
        debug_assert_eq!(zero & !low_mask(self.len), 0);
        self.terms.iter().all(|t| signs_allowed(t.map(|(c, [f1, f2])| c * sign(f1) * sign(f2))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    #[test]
    fn basic_orientations() {
        for n in 3..=5 {
            let g = gs(n);
            assert!(OrientedGaussoid::all_zero(&g).is_oriented_gaussoid());
            assert!(OrientedGaussoid::all_plus(&g).is_positive());
            assert!(OrientedGaussoid::all_plus(&g).support().unwrap().is_empty());
            assert_eq!(OrientedGaussoid::all_zero(&g).support().unwrap(), Gaussoid::full(&g));
        }
    }

    #[test]
    fn single_zero_not_positive() {
        let g = gs(4);
        let phi = OrientedGaussoid::plus_outside(&Gaussoid::parse(&g, "a34|2").unwrap());
        assert!(!phi.is_positive());
        assert!(!OrientationChecker::new(&g).is_valid(phi.key().unwrap()));
    }

    #[test]
    fn sign_strings() {
        let g = gs(3);
        let phi = OrientedGaussoid::from_sign_string(&g, "0-+-0+").unwrap();
        assert_eq!(phi.sign_string(), "0-+-0+");
        assert_eq!(phi.sign_at(1), -1);
        assert!(OrientedGaussoid::from_sign_string(&g, "0-+").is_err());
        assert!(OrientedGaussoid::from_sign_string(&g, "0-+x00").is_err());
    }

    #[test]
    fn allowed_sets() {
        assert!(signs_allowed([0, 0, 0]));
        assert!(signs_allowed([1, -1, 1]));
        assert!(signs_allowed([1, 0, -1]));
        assert!(!signs_allowed([1, 0, 0]));
        assert!(!signs_allowed([-1, -1, 0]));
        assert!(!signs_allowed([1, 1, 1]));
    }

    #[test]
    fn positive_census_small() {
        let c = positive_census(&gs(3)).unwrap();
        assert_eq!(c.len(), 8);
    }
}
