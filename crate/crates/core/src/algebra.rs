//! Quadrics in the ideal of relations among principal and almost-principal
//! minors: weights, lowering and raising operators, the highest-weight
//! generators, the span of their lowerings, and substitution checks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cube::{GroundSet, MinorTable, Subset, Symbol};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::linalg::{format_rational, int, parse_rational, Rational, SymmetricMatrix};
use crate::symmetry::permutations;

/// Torus weight, one entry per element of the ground set.
pub type Weight = Vec<i32>;

/// Weight of a single symbol: `-1` on `I` (resp. `K`), `0` on `{i, j}`, `+1` elsewhere.
pub fn weight(n: usize, sym: Symbol) -> Weight {
    (0..n)
        .map(|k| match sym {
            Symbol::P(s) => {
                if s.contains(k) {
                    -1
                } else {
                    1
                }
            }
            Symbol::A { i, j, k: set } => {
                if k == i as usize || k == j as usize {
                    0
                } else if set.contains(k) {
                    -1
                } else {
                    1
                }
            }
        })
        .collect()
}

/// `ℓ_k`: adds `k` to the index set, or `None` when it is already used.
pub fn lower_symbol(sym: Symbol, k: usize) -> Option<Symbol> {
    if sym.support().contains(k) {
        return None;
    }
    Some(match sym {
        Symbol::P(s) => Symbol::P(s.with(k)),
        Symbol::A { i, j, k: set } => Symbol::A { i, j, k: set.with(k) },
    })
}

/// `r_k`: removes `k` from the index set, or `None` when it is absent.
pub fn raise_symbol(sym: Symbol, k: usize) -> Option<Symbol> {
    match sym {
        Symbol::P(s) if s.contains(k) => Some(Symbol::P(s.without(k))),
        Symbol::A { i, j, k: set } if set.contains(k) => Some(Symbol::A { i, j, k: set.without(k) }),
        _ => None,
    }
}

type Pair = (Symbol, Symbol);

fn pair(x: Symbol, y: Symbol) -> Pair {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Quadratic form in the symbols with rational coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Quadric {
    terms: BTreeMap<Pair, Rational>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct QuadricTermJson {
    pub coeff: String,
    pub factors: [String; 2],
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct QuadricJson {
    pub terms: Vec<QuadricTermJson>,
}

impl Quadric {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, Symbol, Symbol)>>(terms: I) -> Self {
        let mut q = Self::zero();
        for (c, x, y) in terms {
            q.add_term(c, x, y);
        }
        q
    }

    pub fn add_term(&mut self, c: Rational, x: Symbol, y: Symbol) {
        if c.is_zero() {
            return;
        }
        let key = pair(x, y);
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, x: Symbol, y: Symbol) -> Rational {
        self.terms.get(&pair(x, y)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, Symbol, Symbol)> {
        self.terms.iter().map(|(&(x, y), c)| (c, x, y))
    }

    fn leading(&self) -> Option<(&Pair, &Rational)> {
        self.terms.iter().next()
    }

    pub fn scale(&self, s: &Rational) -> Quadric {
        if s.is_zero() {
            return Quadric::zero();
        }
        Quadric { terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect() }
    }

    /// `self + s · other`.
    pub fn add_scaled(&mut self, s: &Rational, other: &Quadric) {
        for (&(x, y), c) in &other.terms {
            self.add_term(c * s, x, y);
        }
    }

    /// Scaled so that the first coefficient is `1`.
    pub fn monic(&self) -> Quadric {
        match self.leading() {
            None => Quadric::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Common weight of all monomials, `None` if the quadric is zero or
    /// not homogeneous.
    pub fn weight(&self, n: usize) -> Option<Weight> {
        let mut it = self.terms.keys().map(|&(x, y)| {
            let (a, b) = (weight(n, x), weight(n, y));
            a.iter().zip(&b).map(|(u, v)| u + v).collect::<Weight>()
        });
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    fn derive(&self, op: impl Fn(Symbol) -> Option<Symbol>) -> Quadric {
        let mut out = Quadric::zero();
        for (&(x, y), c) in &self.terms {
            if let Some(x2) = op(x) {
                out.add_term(c.clone(), x2, y);
            }
            if let Some(y2) = op(y) {
                out.add_term(c.clone(), x, y2);
            }
        }
        out
    }

    /// `ℓ_k` extended by the Leibniz rule.
    pub fn lower(&self, k: usize) -> Quadric {
        self.derive(|s| lower_symbol(s, k))
    }

    /// `r_k` extended by the Leibniz rule.
    pub fn raise(&self, k: usize) -> Quadric {
        self.derive(|s| raise_symbol(s, k))
    }

    pub fn permute(&self, perm: &[usize]) -> Quadric {
        Quadric::from_terms(self.terms.iter().map(|(&(x, y), c)| (c.clone(), x.permute(perm), y.permute(perm))))
    }

    pub fn evaluate(&self, minors: &MinorTable) -> Rational {
        self.terms.iter().map(|(&(x, y), c)| c * minors.get(x) * minors.get(y)).sum()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for (&(x, y), c) in &self.terms {
            p.add_monomial(c.clone(), vec![x, y]);
        }
        p
    }

    pub fn to_json(&self) -> QuadricJson {
        QuadricJson {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| QuadricTermJson { coeff: format_rational(c), factors: [x.to_string(), y.to_string()] })
                .collect(),
        }
    }

    pub fn from_json(gs: &GroundSet, json: &QuadricJson) -> Result<Self> {
        let mut q = Quadric::zero();
        for t in &json.terms {
            let c = parse_rational(&t.coeff)?;
            q.add_term(c, gs.parse_symbol(&t.factors[0])?, gs.parse_symbol(&t.factors[1])?);
        }
        Ok(q)
    }
}

impl fmt::Display for Quadric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&(x, y), c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if idx == 0 { "" } else { "+" };
            if idx > 0 {
                f.write_str(" ")?;
            }
            let mag = c.abs();
            let coeff = if mag.is_one() { String::new() } else { format!("{}*", format_rational(&mag)) };
            let mono = if x == y { format!("{x}^2") } else { format!("{x}*{y}") };
            write!(f, "{sign}{coeff}{mono}")?;
        }
        Ok(())
    }
}

/// Polynomial of arbitrary degree in the symbols; monomials are sorted
/// factor lists.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Polynomial {
    terms: BTreeMap<Vec<Symbol>, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: Rational, factors: &[Symbol]) -> Self {
        let mut p = Self::zero();
        p.add_monomial(c, factors.to_vec());
        p
    }

    pub fn add_monomial(&mut self, c: Rational, mut factors: Vec<Symbol>) {
        if c.is_zero() {
            return;
        }
        factors.sort();
        let entry = self.terms.entry(factors.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&factors);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Rational, &[Symbol])> {
        self.terms.iter().map(|(m, c)| (c, &m[..]))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_monomial(c.clone(), m.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_monomial(-c.clone(), m.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_monomial(c1 * c2, m1.iter().chain(m2).copied().collect());
            }
        }
        out
    }

    pub fn evaluate(&self, minors: &MinorTable) -> Rational {
        self.terms.iter().map(|(m, c)| m.iter().fold(c.clone(), |acc, &s| acc * minors.get(s))).sum()
    }
}

/// The four families of highest-weight quadrics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HwKind {
    I,
    II,
    III,
    IV,
}

impl HwKind {
    pub const ALL: [HwKind; 4] = [HwKind::I, HwKind::II, HwKind::III, HwKind::IV];

    /// Admissible values of `m` on `[n]`.
    pub fn sizes(self, n: usize) -> Vec<usize> {
        match self {
            HwKind::I => vec![2],
            HwKind::II => (3..=n).filter(|m| m % 2 == 1).collect(),
            HwKind::III => (4..=n).filter(|m| m % 2 == 0).collect(),
            HwKind::IV => (4..=n).filter(|m| m % 2 == 0).collect(),
        }
    }
}

impl std::str::FromStr for HwKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(HwKind::I),
            "ii" | "2" => Ok(HwKind::II),
            "iii" | "3" => Ok(HwKind::III),
            "iv" | "4" => Ok(HwKind::IV),
            other => Err(Error::Invalid(format!("unknown quadric kind {other:?}"))),
        }
    }
}

fn sign(len: usize) -> Rational {
    if len.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `Σ_j Σ_{K ⊆ [m]∖{1,2,j}} (-1)^{|K|} a_{1j|K} a_{2j|K^c}`.
fn a_cross_sum(q: &mut Quadric, m: usize) {
    for j in 2..m {
        let rest = Subset::full(m).without(0).without(1).without(j);
        for k in rest.subsets() {
            q.add_term(sign(k.len()), Symbol::a(0, j, k), Symbol::a(1, j, rest.minus(k)));
        }
    }
}

/// The highest-weight quadric of the given kind supported on `[m]`, with
/// distinguished elements 1 and 2 (resp. 1 for kind IV).
pub fn hw_quadric(kind: HwKind, m: usize, gs: &GroundSet) -> Result<Quadric> {
    let n = gs.n();
    let bad = |why: &str| Err(Error::Invalid(format!("kind {kind:?} with m = {m} on n = {n}: {why}")));
    let mut q = Quadric::zero();
    match kind {
        HwKind::I => {
            let (p, p1, p2, p12) = (Subset::EMPTY, Subset::singleton(0), Subset::singleton(1), Subset::from_elems([0, 1]));
            q.add_term(int(1), Symbol::P(p12), Symbol::P(p));
            q.add_term(int(-1), Symbol::P(p1), Symbol::P(p2));
            q.add_term(int(1), Symbol::a(0, 1, Subset::EMPTY), Symbol::a(0, 1, Subset::EMPTY));
        }
        HwKind::II | HwKind::III => {
            if m > n || (kind == HwKind::II && (m < 3 || m.is_multiple_of(2))) || (kind == HwKind::III && (m < 4 || !m.is_multiple_of(2))) {
                return bad("size out of range or wrong parity");
            }
            if kind == HwKind::II {
                let rest = Subset::full(m).without(0).without(1);
                for l in rest.subsets() {
                    q.add_term(sign(l.len()), Symbol::P(l), Symbol::a(0, 1, rest.minus(l)));
                }
            }
            a_cross_sum(&mut q, m);
        }
        HwKind::IV => {
            if m > n || m < 4 || m % 2 == 1 {
                return bad("size out of range or wrong parity");
            }
            let full = Subset::full(m);
            for l in full.subsets() {
                q.add_term(sign(l.len()), Symbol::P(l), Symbol::P(full.minus(l)));
            }
            for j in 1..m {
                let rest = full.without(0).without(j);
                for k in rest.subsets() {
                    q.add_term(int(2) * sign(k.len()), Symbol::a(0, j, k), Symbol::a(0, j, rest.minus(k)));
                }
            }
        }
    }
    if kind == HwKind::I && n < 2 {
        return bad("needs two elements");
    }
    Ok(q)
}

/// One highest-weight quadric per irreducible summand: all `S_n`-images of
/// every kind and size, made monic and deduplicated, in a fixed order.
pub fn hw_family(gs: &GroundSet, strategy: Strategy) -> Vec<Quadric> {
    let n = gs.n();
    let perms = permutations(n);
    let mut seeds = Vec::new();
    for kind in HwKind::ALL {
        for m in kind.sizes(n) {
            seeds.push(hw_quadric(kind, m, gs).expect("admissible size"));
        }
    }
    let jobs: Vec<(usize, usize)> = (0..seeds.len()).flat_map(|s| (0..perms.len()).map(move |p| (s, p))).collect();
    let images = exec::map(strategy, &jobs, |&(s, p)| seeds[s].permute(&perms[p]).monic());
    let mut seen = BTreeSet::new();
    images.into_iter().filter(|q| seen.insert(q.clone())).collect()
}

/// All nonzero `Π ℓ_k^{e_k}(q)` with `0 ≤ e_k ≤ max(w_k, 0)` for the weight `w` of `q`.
pub fn lowering_closure(q: &Quadric, n: usize) -> Vec<Quadric> {
    let w = q.weight(n).unwrap_or_else(|| vec![0; n]);
    let mut current = vec![q.clone()];
    for k in 0..n {
        let mut next = Vec::new();
        for base in current {
            let mut x = base;
            for _ in 0..=w[k].max(0) {
                if x.is_zero() {
                    break;
                }
                let lowered = x.lower(k);
                next.push(x);
                x = lowered;
            }
        }
        current = next;
    }
    current
}

/// Incremental reduced row echelon form over ℚ for quadrics; columns are
/// monomials in their natural order.
#[derive(Clone, Default, Debug)]
pub struct Echelon {
    pivots: BTreeMap<Pair, Quadric>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of `q` after eliminating every pivot column.
    pub fn reduce(&self, q: &Quadric) -> Quadric {
        let mut r = q.clone();
        let mut from: Option<Pair> = None;
        loop {
            let next = match from {
                None => r.terms.iter().find(|(k, _)| self.pivots.contains_key(k)),
                Some(f) => r.terms.range((std::ops::Bound::Excluded(f), std::ops::Bound::Unbounded)).find(|(k, _)| self.pivots.contains_key(k)),
            };
            let Some((&key, c)) = next else { return r };
            let c = -c.clone();
            r.add_scaled(&c, &self.pivots[&key]);
            from = Some(key);
        }
    }

    /// Adds `q`; true if it was independent of the rows so far.
    pub fn insert(&mut self, q: &Quadric) -> bool {
        let r = self.reduce(q);
        let Some((&key, _)) = r.leading() else { return false };
        let r = r.monic();
        for row in self.pivots.values_mut() {
            let c = row.coefficient(key.0, key.1);
            if !c.is_zero() {
                row.add_scaled(&-c, &r);
            }
        }
        self.pivots.insert(key, r);
        true
    }

    pub fn contains(&self, q: &Quadric) -> bool {
        self.reduce(q).is_zero()
    }
}

/// The lowerings of all highest-weight quadrics and the rank of their span.
#[derive(Clone, Debug)]
pub struct QuadricSpace {
    pub generators: Vec<Quadric>,
    pub echelon: Echelon,
}

impl QuadricSpace {
    pub fn dimension(&self) -> usize {
        self.echelon.rank()
    }

    pub fn contains(&self, q: &Quadric) -> bool {
        self.echelon.contains(q)
    }
}

pub fn quadric_space(gs: &GroundSet, strategy: Strategy) -> QuadricSpace {
    let n = gs.n();
    let family = hw_family(gs, strategy);
    let generators: Vec<Quadric> = exec::map(strategy, &family, |q| lowering_closure(q, n)).concat();
    let mut echelon = Echelon::new();
    for q in &generators {
        echelon.insert(q);
    }
    QuadricSpace { generators, echelon }
}

/// Closed-form dimension of the space of quadrics in the ideal.
pub fn dim_formula(n: usize) -> BigUint {
    assert!(n >= 2);
    let pow3 = |e: usize| BigUint::from(3u32).pow(e as u32);
    let c = |a: usize, b: usize| BigUint::from(binomial(a as u64, b as u64));
    let mut total = pow3(n - 2) * c(n, 2);
    for m in 3..=n {
        total += BigUint::from(4u32) * pow3(n - m) * c(n, m) * c(m, 2);
    }
    for k in 2..=n / 2 {
        total += BigUint::from(2 * k) * pow3(n - 2 * k) * c(n, 2 * k);
    }
    total
}

/// Degree of the Lagrangian Grassmannian `LGr(n, 2n)`.
pub fn lgr_degree(n: usize) -> BigUint {
    assert!(n >= 1);
    let top = n * (n + 1) / 2;
    let num: BigUint = (1..=top).map(BigUint::from).product();
    let den: BigUint = (1..=n).map(|i| BigUint::from(2 * i - 1).pow((n - i + 1) as u32)).product();
    num / den
}

/// Random symmetric integer matrix with entries in `[-9, 9]`.
pub fn random_symmetric(n: usize, rng: &mut impl Rng) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            m.set(i, j, int(rng.gen_range(-9..=9)));
        }
    }
    m
}

/// First of `trials` seeded random matrices on which `p` does not vanish.
pub fn vanishing_witness(gs: &GroundSet, p: &Polynomial, trials: usize, seed: u64) -> Result<Option<SymmetricMatrix>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let sigma = random_symmetric(gs.n(), &mut rng);
        let table = MinorTable::new(gs, &sigma)?;
        if !p.evaluate(&table).is_zero() {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

pub fn verify_vanishing(gs: &GroundSet, q: &Quadric, trials: usize, seed: u64) -> Result<bool> {
    Ok(vanishing_witness(gs, &q.to_polynomial(), trials, seed)?.is_none())
}

/// Checks many quadrics against the same random matrices; indices of the
/// quadrics that fail.
pub fn nonvanishing(gs: &GroundSet, qs: &[Quadric], trials: usize, seed: u64, strategy: Strategy) -> Result<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tables = (0..trials).map(|_| MinorTable::new(gs, &random_symmetric(gs.n(), &mut rng))).collect::<Result<Vec<_>>>()?;
    Ok(exec::filter_map_range(strategy, qs.len(), |i| tables.iter().any(|t| !qs[i].evaluate(t).is_zero()).then_some(i)))
}

/// A relation on `[4]` certifying that `{a12|3, a13|4, a14|2}` has no
/// positive definite realization: the second product vanishes on any
/// realization while the first is positive.
pub fn certificate_polynomial_n4() -> Polynomial {
    let m = |c: i64, names: &[&str]| {
        let syms: Vec<Symbol> = names.iter().map(|s| s.parse().expect("symbol")).collect();
        Polynomial::monomial(int(c), &syms)
    };
    let left = m(1, &["a14"]).mul(
        &m(1, &["a34", "a34", "p2", "p4", "p23"]).add(&m(1, &["a23", "a23", "a34", "a34", "p24"])).add(&m(
            1,
            &["p2", "p2", "p3", "p4", "p34"],
        )),
    );
    let right = m(1, &["a23", "a24", "a34"]).add(&m(1, &["p2", "p3", "p4"])).mul(
        &m(1, &["a24", "p4", "a12|3"]).add(&m(1, &["a24", "a23", "a13|4"])).add(&m(1, &["p3", "p4", "a14|2"])),
    );
    left.sub(&right)
}

/// Pairs (gaussoid index, quadric index) where the gaussoid is incompatible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub gaussoids: usize,
    pub quadrics: usize,
    pub violations: Vec<(usize, usize)>,
}

pub fn compatibility_violations(gs: &GroundSet, gaussoids: &[u128], quadrics: &[Quadric], strategy: Strategy) -> CompatibilityReport {
    assert!(gs.a_count() <= 128);
    let masks: Vec<Vec<u128>> = quadrics
        .iter()
        .map(|q| {
            q.terms()
                .map(|(_, x, y)| [x, y].iter().filter(|s| s.is_a()).fold(0u128, |acc, &s| acc | 1 << gs.a_pos(s)))
                .collect()
        })
        .collect();
    let per_gaussoid = exec::map(strategy, gaussoids, |&g| {
        masks
            .iter()
            .enumerate()
            .filter(|(_, ms)| ms.iter().filter(|&&m| m & g == 0).count() == 1)
            .map(|(qi, _)| qi)
            .collect::<Vec<_>>()
    });
    let violations = per_gaussoid.into_iter().enumerate().flat_map(|(gi, qs)| qs.into_iter().map(move |qi| (gi, qi))).collect();
    CompatibilityReport { gaussoids: gaussoids.len(), quadrics: quadrics.len(), violations }
}

/// Every gaussoid of the census against every generator of the quadric space.
pub fn check_all_compatibility(gs: &GroundSet, strategy: Strategy) -> Result<CompatibilityReport> {
    if gs.n() > 5 {
        return Err(Error::Unsupported("compatibility sweep needs n ≤ 5".into()));
    }
    let gaussoids = crate::enumerate::gaussoid_models(gs, strategy)?;
    let space = quadric_space(gs, strategy);
    Ok(compatibility_violations(gs, &gaussoids, &space.generators, strategy))
}
