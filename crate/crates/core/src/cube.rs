//! Symbols on the n-cube, the square and edge trinomials, and exact
//! evaluation of principal and almost-principal minors.
//!
//! Vertices of the cube are the principal minors `p_I`, 2-faces are the
//! almost-principal minors `a_{ij|K}`. Elements of the ground set are stored
//! zero-based; the text grammar and `Display` are one-based.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Rational, SymmetricMatrix};

pub const MAX_N: usize = 9;

/// Subset of the ground set as a bit mask (bit `e` is element `e + 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subset(pub u16);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        Subset(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1 << e)
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        Subset(elems.into_iter().fold(0, |acc, e| acc | (1 << e)))
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 & (1 << e) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | (1 << e))
    }

    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1 << e))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn sym_diff(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Image under a permutation of the element labels.
    pub fn map(self, perm: &[usize]) -> Subset {
        Subset::from_elems(self.iter().map(|e| perm[e]))
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut cur: Option<u16> = Some(0);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full { None } else { Some((s.wrapping_sub(full)) & full) };
            Some(Subset(s))
        })
    }

    /// Graded-lexicographic comparison: by size, then lexicographically on
    /// the sorted element lists.
    pub fn graded_lex_cmp(self, other: Subset) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }

    pub fn digits(self) -> String {
        self.iter().map(|e| char::from(b'1' + e as u8)).collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.digits())
    }
}

/// A principal minor `p_I` or an almost-principal minor `a_{ij|K}`.
/// For `A`, `i < j` and `K` avoids both.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    P(Subset),
    A { i: u8, j: u8, k: Subset },
}

impl Symbol {
    pub fn p(set: Subset) -> Symbol {
        Symbol::P(set)
    }

    /// `a_{ij|K}` with the pair reordered so that `i < j`.
    pub fn a(i: usize, j: usize, k: Subset) -> Symbol {
        debug_assert_ne!(i, j);
        debug_assert!(!k.contains(i) && !k.contains(j));
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Symbol::A { i: i as u8, j: j as u8, k }
    }

    pub fn is_p(self) -> bool {
        matches!(self, Symbol::P(_))
    }

    pub fn is_a(self) -> bool {
        matches!(self, Symbol::A { .. })
    }

    /// Every element mentioned by the symbol.
    pub fn support(self) -> Subset {
        match self {
            Symbol::P(s) => s,
            Symbol::A { i, j, k } => k.with(i as usize).with(j as usize),
        }
    }

    pub fn is_valid_for(self, n: usize) -> bool {
        let full = Subset::full(n);
        match self {
            Symbol::P(s) => s.is_subset(full),
            Symbol::A { i, j, k } => {
                i < j && (j as usize) < n && k.is_subset(full) && !k.contains(i as usize) && !k.contains(j as usize)
            }
        }
    }

    /// Relabels elements by a permutation (zero-based images).
    pub fn permute(self, perm: &[usize]) -> Symbol {
        match self {
            Symbol::P(s) => Symbol::P(s.map(perm)),
            Symbol::A { i, j, k } => Symbol::a(perm[i as usize], perm[j as usize], k.map(perm)),
        }
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Symbol::P(a), Symbol::P(b)) => a.graded_lex_cmp(*b),
            (Symbol::P(_), Symbol::A { .. }) => Ordering::Less,
            (Symbol::A { .. }, Symbol::P(_)) => Ordering::Greater,
            (Symbol::A { i: i1, j: j1, k: k1 }, Symbol::A { i: i2, j: j2, k: k2 }) => {
                (i1, j1).cmp(&(i2, j2)).then_with(|| k1.graded_lex_cmp(*k2))
            }
        }
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::P(s) => write!(f, "p{}", s.digits()),
            Symbol::A { i, j, k } => {
                write!(f, "a{}{}", i + 1, j + 1)?;
                if !k.is_empty() {
                    write!(f, "|{}", k.digits())?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_digits(s: &str, strict_order: bool) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(s.len());
    for c in s.chars() {
        let d = c.to_digit(10)? as usize;
        if d == 0 {
            return None;
        }
        if strict_order && out.last().is_some_and(|&last| last >= d - 1) {
            return None;
        }
        out.push(d - 1);
    }
    Some(out)
}

impl FromStr for Symbol {
    type Err = Error;

    /// `p`, `p13`, `a12`, `a13|24`. Digits after `p` and `|` must ascend.
    fn from_str(s: &str) -> Result<Symbol> {
        let t = s.trim();
        let bad = || Error::Symbol(t.to_string());
        if let Some(rest) = t.strip_prefix('p') {
            let elems = parse_digits(rest, true).ok_or_else(bad)?;
            return Ok(Symbol::P(Subset::from_elems(elems)));
        }
        if let Some(rest) = t.strip_prefix('a') {
            let (pair, cond) = match rest.split_once('|') {
                Some((pair, cond)) if !cond.is_empty() => (pair, cond),
                Some(_) => return Err(bad()),
                None => (rest, ""),
            };
            let pair = parse_digits(pair, true).ok_or_else(bad)?;
            if pair.len() != 2 {
                return Err(bad());
            }
            let cond = Subset::from_elems(parse_digits(cond, true).ok_or_else(bad)?);
            if cond.contains(pair[0]) || cond.contains(pair[1]) {
                return Err(bad());
            }
            return Ok(Symbol::a(pair[0], pair[1], cond));
        }
        Err(bad())
    }
}

struct Tables {
    n: usize,
    symbols: Vec<Symbol>,
    p_ord: Vec<u32>,
    a_ord: Vec<u32>,
}

/// The ground set `[n]` together with the canonical symbol ordering.
///
/// Cloning is cheap; the lookup tables are shared.
#[derive(Clone)]
pub struct GroundSet(Arc<Tables>);

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n()
    }
}

impl Eq for GroundSet {}

impl std::hash::Hash for GroundSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n().hash(state)
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroundSet({})", self.n())
    }
}

const NONE: u32 = u32::MAX;

impl GroundSet {
    pub fn new(n: usize) -> Result<GroundSet> {
        if !(2..=MAX_N).contains(&n) {
            return Err(Error::GroundSet(n));
        }
        let full = Subset::full(n);
        let mut p_sets: Vec<Subset> = full.subsets().collect();
        p_sets.sort_by(|a, b| a.graded_lex_cmp(*b));
        let mut symbols: Vec<Symbol> = p_sets.into_iter().map(Symbol::P).collect();
        for i in 0..n {
            for j in i + 1..n {
                let mut ks: Vec<Subset> = full.without(i).without(j).subsets().collect();
                ks.sort_by(|a, b| a.graded_lex_cmp(*b));
                symbols.extend(ks.into_iter().map(|k| Symbol::a(i, j, k)));
            }
        }
        let mut p_ord = vec![NONE; 1 << n];
        let mut a_ord = vec![NONE; (n * n) << n];
        for (ord, sym) in symbols.iter().enumerate() {
            match *sym {
                Symbol::P(s) => p_ord[s.0 as usize] = ord as u32,
                Symbol::A { i, j, k } => {
                    a_ord[((i as usize * n + j as usize) << n) | k.0 as usize] = ord as u32;
                }
            }
        }
        Ok(GroundSet(Arc::new(Tables { n, symbols, p_ord, a_ord })))
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n())
    }

    /// `2^n`.
    pub fn p_count(&self) -> usize {
        1 << self.n()
    }

    /// `2^{n-2} · C(n,2)`.
    pub fn a_count(&self) -> usize {
        self.0.symbols.len() - self.p_count()
    }

    /// `2^{n-2} (4 + C(n,2))`.
    pub fn symbol_count(&self) -> usize {
        self.0.symbols.len()
    }

    /// All symbols in canonical order.
    pub fn symbols(&self) -> &[Symbol] {
        &self.0.symbols
    }

    /// The almost-principal symbols in canonical order.
    pub fn a_symbols(&self) -> &[Symbol] {
        &self.0.symbols[self.p_count()..]
    }

    pub fn p_symbols(&self) -> &[Symbol] {
        &self.0.symbols[..self.p_count()]
    }

    pub fn symbol_index(&self, sym: Symbol) -> Result<usize> {
        if !sym.is_valid_for(self.n()) {
            return Err(Error::Symbol(format!("{sym} (on [{}])", self.n())));
        }
        Ok(self.ord(sym))
    }

    /// Canonical ordinal of a symbol already known to be valid.
    pub fn ord(&self, sym: Symbol) -> usize {
        match sym {
            Symbol::P(s) => self.0.p_ord[s.0 as usize] as usize,
            Symbol::A { i, j, k } => self.a_ord_raw(i as usize, j as usize, k) as usize,
        }
    }

    fn a_ord_raw(&self, i: usize, j: usize, k: Subset) -> u32 {
        let n = self.n();
        self.0.a_ord[((i * n + j) << n) | k.0 as usize]
    }

    /// Position of `a_{ij|K}` within the A-block (`i`, `j` in any order).
    pub fn a_index(&self, i: usize, j: usize, k: Subset) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.a_ord_raw(i, j, k) as usize - self.p_count()
    }

    /// Position of an A-symbol within the A-block.
    pub fn a_pos(&self, sym: Symbol) -> usize {
        self.ord(sym) - self.p_count()
    }

    pub fn symbol(&self, ord: usize) -> Symbol {
        self.0.symbols[ord]
    }

    pub fn a_symbol(&self, a_pos: usize) -> Symbol {
        self.0.symbols[self.p_count() + a_pos]
    }

    pub fn parse_symbol(&self, s: &str) -> Result<Symbol> {
        let sym: Symbol = s.parse()?;
        self.symbol_index(sym)?;
        Ok(sym)
    }

    /// All `(i, j, k, L)` with `i < j < k` and `L ⊆ [n] \ {i,j,k}`: the 3-faces.
    pub fn three_faces(&self) -> Vec<([usize; 3], Subset)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for m in self.full().without(i).without(j).without(k).subsets() {
                        out.push(([i, j, k], m));
                    }
                }
            }
        }
        out
    }
}

/// One signed monomial `coeff · f1 · f2` of a trinomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Term {
    pub coeff: i8,
    pub factors: [Symbol; 2],
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TrinomialKind {
    /// `a_{ij|K}² − p_{iK} p_{jK} + p_{ijK} p_K`.
    Square,
    /// One of the twelve edge templates of the 3-cube, numbered 1..=12.
    Edge(u8),
}

/// A square or edge trinomial, kept both structurally and expanded.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Trinomial {
    pub kind: TrinomialKind,
    /// `(i, j, _)` for squares, `(i, j, k)` for edges; zero-based, increasing.
    pub indices: [u8; 3],
    /// `K` for squares, the augmenting set `M` for edges.
    pub base: Subset,
    pub terms: [Term; 3],
}

#[derive(Clone, Copy)]
enum Local {
    P(u8),
    A(u8, u8, u8),
}

use Local::{A as LA, P as LP};

// Local labels 0,1,2 stand for i<j<k; sets are 3-bit masks over them.
const EDGE_TEMPLATES: [[(i8, Local, Local); 3]; 12] = [
    [(1, LP(0b001), LA(1, 2, 0)), (-1, LP(0), LA(1, 2, 0b001)), (-1, LA(0, 1, 0), LA(0, 2, 0))],
    [(1, LP(0b010), LA(0, 2, 0)), (-1, LP(0), LA(0, 2, 0b010)), (-1, LA(0, 1, 0), LA(1, 2, 0))],
    [(1, LP(0b100), LA(0, 1, 0)), (-1, LP(0), LA(0, 1, 0b100)), (-1, LA(1, 2, 0), LA(0, 2, 0))],
    [(1, LP(0b011), LA(0, 2, 0)), (-1, LP(0b001), LA(0, 2, 0b010)), (-1, LA(0, 1, 0), LA(1, 2, 0b001))],
    [(1, LP(0b011), LA(1, 2, 0)), (-1, LP(0b010), LA(1, 2, 0b001)), (-1, LA(0, 1, 0), LA(0, 2, 0b010))],
    [(1, LP(0b101), LA(0, 1, 0)), (-1, LP(0b001), LA(0, 1, 0b100)), (-1, LA(0, 2, 0), LA(1, 2, 0b001))],
    [(1, LP(0b101), LA(1, 2, 0)), (-1, LP(0b100), LA(1, 2, 0b001)), (-1, LA(0, 2, 0), LA(0, 1, 0b100))],
    [(1, LP(0b110), LA(0, 1, 0)), (-1, LP(0b010), LA(0, 1, 0b100)), (-1, LA(1, 2, 0), LA(0, 2, 0b010))],
    [(1, LP(0b110), LA(0, 2, 0)), (-1, LP(0b100), LA(0, 2, 0b010)), (-1, LA(1, 2, 0), LA(0, 1, 0b100))],
    [(1, LP(0b111), LA(0, 1, 0)), (-1, LP(0b011), LA(0, 1, 0b100)), (-1, LA(1, 2, 0b001), LA(0, 2, 0b010))],
    [(1, LP(0b111), LA(0, 2, 0)), (-1, LP(0b101), LA(0, 2, 0b010)), (-1, LA(1, 2, 0b001), LA(0, 1, 0b100))],
    [(1, LP(0b111), LA(1, 2, 0)), (-1, LP(0b110), LA(1, 2, 0b001)), (-1, LA(0, 1, 0b100), LA(0, 2, 0b010))],
];

fn lift(local: Local, idx: [usize; 3], m: Subset) -> Symbol {
    let set = |mask: u8| {
        Subset::from_elems((0..3).filter(|b| mask & (1 << b) != 0).map(|b| idx[b])).union(m)
    };
    match local {
        Local::P(mask) => Symbol::P(set(mask)),
        Local::A(x, y, mask) => Symbol::a(idx[x as usize], idx[y as usize], set(mask)),
    }
}

impl Trinomial {
    pub fn square(i: usize, j: usize, k: Subset) -> Trinomial {
        let term = |coeff, a, b| Term { coeff, factors: [a, b] };
        let a = Symbol::a(i, j, k);
        Trinomial {
            kind: TrinomialKind::Square,
            indices: [i as u8, j as u8, 0],
            base: k,
            terms: [
                term(1, a, a),
                term(-1, Symbol::P(k.with(i)), Symbol::P(k.with(j))),
                term(1, Symbol::P(k.with(i).with(j)), Symbol::P(k)),
            ],
        }
    }

    /// Edge template `template` (1..=12) on the 3-face `{i,j,k}` augmented by `m`.
    pub fn edge(template: u8, idx: [usize; 3], m: Subset) -> Trinomial {
        let template_terms = &EDGE_TEMPLATES[template as usize - 1];
        let terms = template_terms.map(|(coeff, f1, f2)| Term { coeff, factors: [lift(f1, idx, m), lift(f2, idx, m)] });
        Trinomial {
            kind: TrinomialKind::Edge(template),
            indices: idx.map(|x| x as u8),
            base: m,
            terms,
        }
    }

    /// Value of the trinomial at a point given as a symbol → value lookup.
    pub fn evaluate_with<F: Fn(Symbol) -> Rational>(&self, value: F) -> Rational {
        self.terms.iter().fold(Rational::from_integer(0.into()), |acc, t| {
            let v = value(t.factors[0]) * value(t.factors[1]);
            if t.coeff > 0 {
                acc + v
            } else {
                acc - v
            }
        })
    }
}

impl fmt::Display for Trinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, t) in self.terms.iter().enumerate() {
            let sign = if t.coeff < 0 { "-" } else if idx > 0 { "+" } else { "" };
            if idx > 0 {
                f.write_str(" ")?;
            }
            if t.factors[0] == t.factors[1] {
                write!(f, "{}{}^2", sign, t.factors[0])?;
            } else {
                write!(f, "{}{}*{}", sign, t.factors[0], t.factors[1])?;
            }
        }
        Ok(())
    }
}

pub fn square_trinomials(gs: &GroundSet) -> Vec<Trinomial> {
    let n = gs.n();
    let mut out = Vec::with_capacity(gs.a_count());
    for i in 0..n {
        for j in i + 1..n {
            let mut ks: Vec<Subset> = gs.full().without(i).without(j).subsets().collect();
            ks.sort_by(|a, b| a.graded_lex_cmp(*b));
            out.extend(ks.into_iter().map(|k| Trinomial::square(i, j, k)));
        }
    }
    out
}

/// The edge trinomials; empty for `n < 3`, which has no 3-faces.
pub fn edge_trinomials(gs: &GroundSet) -> Vec<Trinomial> {
    let mut faces = gs.three_faces();
    faces.sort_by(|(a, m1), (b, m2)| a.cmp(b).then_with(|| m1.graded_lex_cmp(*m2)));
    let mut out = Vec::with_capacity(12 * faces.len());
    for (idx, m) in faces {
        for t in 1..=12 {
            out.push(Trinomial::edge(t, idx, m));
        }
    }
    out
}

/// Squares followed by edges.
pub fn all_trinomials(gs: &GroundSet) -> Vec<Trinomial> {
    let mut out = square_trinomials(gs);
    out.extend(edge_trinomials(gs));
    out
}

/// `2^{n-3} n (n-1) (2n-3)`, evaluated without fractions (`n ≥ 2`).
pub fn trinomial_count_formula(n: usize) -> u64 {
    let prod = (n * (n - 1) * (2 * n - 3)) as u64;
    if n >= 3 {
        prod << (n - 3)
    } else {
        prod / 2
    }
}

/// Row and column index lists of the minor represented by `sym`.
pub fn minor_indices(sym: Symbol) -> (Vec<usize>, Vec<usize>) {
    match sym {
        Symbol::P(s) => {
            let idx: Vec<usize> = s.iter().collect();
            (idx.clone(), idx)
        }
        Symbol::A { i, j, k } => {
            let mut rows = vec![i as usize];
            let mut cols = vec![j as usize];
            rows.extend(k.iter());
            cols.extend(k.iter());
            (rows, cols)
        }
    }
}

/// The minor of `Σ` named by `sym`: rows `(i, K↑)` and columns `(j, K↑)` for
/// `a_{ij|K}`; `p_∅ = 1`.
pub fn evaluate_minor(sigma: &SymmetricMatrix, sym: Symbol) -> Result<Rational> {
    if !sym.is_valid_for(sigma.n()) {
        return Err(Error::Symbol(format!("{sym} (on [{}])", sigma.n())));
    }
    let (rows, cols) = minor_indices(sym);
    Ok(sigma.minor(&rows, &cols))
}

/// Every principal and almost-principal minor of `Σ`, in canonical order.
#[derive(Clone, Debug)]
pub struct MinorTable {
    gs: GroundSet,
    values: Vec<Rational>,
}

impl MinorTable {
    pub fn new(gs: &GroundSet, sigma: &SymmetricMatrix) -> Result<Self> {
        if sigma.n() != gs.n() {
            return Err(Error::Dimension { expected: gs.n(), found: sigma.n() });
        }
        let values = gs
            .symbols()
            .iter()
            .map(|&s| {
                let (rows, cols) = minor_indices(s);
                sigma.minor(&rows, &cols)
            })
            .collect();
        Ok(Self { gs: gs.clone(), values })
    }

    pub fn get(&self, sym: Symbol) -> &Rational {
        &self.values[self.gs.ord(sym)]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn ground_set(&self) -> &GroundSet {
        &self.gs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use num_traits::Zero;

    #[test]
    fn symbol_ordinals() {
        let gs = GroundSet::new(3).unwrap();
        assert_eq!(gs.symbol_index(Symbol::P(Subset::EMPTY)).unwrap(), 0);
        assert_eq!(gs.symbol_index("a12".parse().unwrap()).unwrap(), 8);
        assert_eq!(GroundSet::new(4).unwrap().symbol_count(), 40);
        let names: Vec<String> = gs.symbols().iter().map(|s| s.to_string()).collect();
        assert_eq!(
            names,
            ["p", "p1", "p2", "p3", "p12", "p13", "p23", "p123", "a12", "a12|3", "a13", "a13|2", "a23", "a23|1"]
        );
    }

    #[test]
    fn symbol_index_errors() {
        let gs = GroundSet::new(3).unwrap();
        assert!(gs.symbol_index("a14".parse().unwrap()).is_err());
        assert!(gs.symbol_index("p1234".parse().unwrap()).is_err());
        assert!("a21".parse::<Symbol>().is_err());
        assert!("a12|1".parse::<Symbol>().is_err());
        assert!("p31".parse::<Symbol>().is_err());
        assert!("a12|".parse::<Symbol>().is_err());
        assert!("q1".parse::<Symbol>().is_err());
        assert!(GroundSet::new(1).is_err());
        assert!(GroundSet::new(10).is_err());
    }

    #[test]
    fn symbol_index_is_bijective() {
        for n in 2..=6 {
            let gs = GroundSet::new(n).unwrap();
            let c = n * (n - 1) / 2;
            assert_eq!(gs.symbol_count(), (1 << n) + (c << n) / 4);
            for (ord, &sym) in gs.symbols().iter().enumerate() {
                assert_eq!(gs.symbol_index(sym).unwrap(), ord);
                let text = sym.to_string();
                assert_eq!(gs.parse_symbol(&text).unwrap(), sym);
            }
            let mut sorted = gs.symbols().to_vec();
            sorted.sort();
            assert_eq!(sorted, gs.symbols());
        }
    }

    #[test]
    fn trinomial_counts() {
        for n in 2..=6 {
            let gs = GroundSet::new(n).unwrap();
            let sq = square_trinomials(&gs).len();
            let edge = edge_trinomials(&gs).len();
            assert_eq!(sq, gs.a_count());
            let c3 = n * (n - 1) * (n - 2) / 6;
            assert_eq!(edge, if n >= 3 { (12 * c3) << (n - 3) } else { 0 });
            assert_eq!((sq + edge) as u64, trinomial_count_formula(n));
        }
        let gs5 = GroundSet::new(5).unwrap();
        assert_eq!(square_trinomials(&gs5).len(), 80);
        assert_eq!(edge_trinomials(&gs5).len(), 480);
        let gs4 = GroundSet::new(4).unwrap();
        assert_eq!(edge_trinomials(&gs4).len(), 96);
        assert_eq!(all_trinomials(&gs4).len(), 120);
    }

    #[test]
    fn n2_square_and_n3_edges_print() {
        let gs = GroundSet::new(2).unwrap();
        let sq = square_trinomials(&gs);
        assert_eq!(sq.len(), 1);
        assert_eq!(sq[0].to_string(), "a12^2 -p1*p2 +p12*p");
        let gs3 = GroundSet::new(3).unwrap();
        let edges: Vec<String> = edge_trinomials(&gs3).iter().map(|t| t.to_string()).collect();
        assert_eq!(edges[0], "p1*a23 -p*a23|1 -a12*a13");
        assert_eq!(edges[3], "p12*a13 -p1*a13|2 -a12*a23|1");
        assert_eq!(edges[11], "p123*a23 -p23*a23|1 -a12|3*a13|2");
    }

    #[test]
    fn minor_sign_convention() {
        // diag (2,2,2), (σ12, σ13, σ23) = (0, -1, -1)
        let s = SymmetricMatrix::from_diag_upper(vec![int(2), int(2), int(2)], vec![int(0), int(-1), int(-1)])
            .unwrap();
        let ev = |t: &str| evaluate_minor(&s, t.parse().unwrap()).unwrap();
        assert_eq!(ev("a12|3"), int(-1));
        assert_eq!(ev("a13|2"), int(-2));
        assert_eq!(ev("a23|1"), int(-2));
        assert_eq!(ev("p"), int(1));
        assert_eq!(ev("p123"), s.det());
        let id = SymmetricMatrix::identity(4);
        let gs = GroundSet::new(4).unwrap();
        for &sym in gs.symbols() {
            let v = evaluate_minor(&id, sym).unwrap();
            assert_eq!(v, if sym.is_p() { int(1) } else { int(0) });
        }
        assert!(evaluate_minor(&id, "a15".parse().unwrap()).is_err());
    }

    #[test]
    fn symbolic_small_minors() {
        // a_{12|3} = σ12 σ33 − σ13 σ23, a_{13|2} = −(σ12 σ23 − σ13 σ22).
        let s = SymmetricMatrix::from_diag_upper(vec![int(5), int(7), int(11)], vec![int(2), int(3), int(13)])
            .unwrap();
        assert_eq!(evaluate_minor(&s, "a12|3".parse().unwrap()).unwrap(), int(2 * 11 - 3 * 13));
        assert_eq!(evaluate_minor(&s, "a13|2".parse().unwrap()).unwrap(), int(-(2 * 13 - 3 * 7)));
        assert!(!evaluate_minor(&s, "a23|1".parse().unwrap()).unwrap().is_zero());
    }
}
