//! Gaussoids: subsets of the almost-principal symbols closed under the
//! axioms (G1)–(G4).
//!
//! Three independent membership tests are provided (axioms, compatibility
//! with the edge trinomials, restriction to 3-faces); they agree on every
//! input. Census code works on raw encodings through the [`Members`] trait
//! and a reusable [`Checker`].

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::BitSet;
use crate::cube::{edge_trinomials, GroundSet, MinorTable, Subset, Symbol, Trinomial};
use crate::error::{Error, Result};
use crate::linalg::SymmetricMatrix;
use num_traits::{Signed, Zero};

/// Membership in a subset of the A-block, by A-position.
pub trait Members {
    fn has(&self, a: usize) -> bool;
}

impl Members for BitSet {
    fn has(&self, a: usize) -> bool {
        self.contains(a)
    }
}

impl Members for u128 {
    fn has(&self, a: usize) -> bool {
        self >> a & 1 == 1
    }
}

impl Members for Gaussoid {
    fn has(&self, a: usize) -> bool {
        self.bits.contains(a)
    }
}

impl<M: Members + ?Sized> Members for &M {
    fn has(&self, a: usize) -> bool {
        (**self).has(a)
    }
}

/// One instance of an axiom: both premises imply both conclusions, except
/// for (G4) where they imply at least one of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomInstance {
    pub axiom: u8,
    pub premises: [usize; 2],
    pub conclusions: [usize; 2],
}

/// All axiom instances, for every ordered triple of distinct elements and
/// every `L` avoiding them: (G1), (G2), (G3), (G4) in that order.
pub fn axiom_instances(gs: &GroundSet) -> Vec<AxiomInstance> {
    let n = gs.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                let rest = gs.full().without(i).without(j).without(k);
                let mut ls: Vec<Subset> = rest.subsets().collect();
                ls.sort_by(|a, b| a.graded_lex_cmp(*b));
                for l in ls {
                    let a = |x: usize, y: usize, s: Subset| gs.a_index(x, y, s);
                    let ij_l = a(i, j, l);
                    let ik_l = a(i, k, l);
                    let ij_kl = a(i, j, l.with(k));
                    let ik_jl = a(i, k, l.with(j));
                    let jk_l = a(j, k, l);
                    out.push(AxiomInstance { axiom: 1, premises: [ij_l, ik_jl], conclusions: [ik_l, ij_kl] });
                    out.push(AxiomInstance { axiom: 2, premises: [ij_kl, ik_jl], conclusions: [ij_l, ik_l] });
                    out.push(AxiomInstance { axiom: 3, premises: [ij_l, ik_l], conclusions: [ij_kl, ik_jl] });
                    out.push(AxiomInstance { axiom: 4, premises: [ij_l, ij_kl], conclusions: [ik_l, jk_l] });
                }
            }
        }
    }
    out
}

/// Masks (over `a12, a12|3, a13, a13|2, a23, a23|1`) of the eleven gaussoids on `[3]`.
pub const THREE_FACE_GAUSSOIDS: [u8; 11] = [0, 1, 4, 16, 2, 8, 32, 15, 51, 60, 63];

const NO_A: u32 = u32::MAX;

/// Precomputed index data for repeated gaussoid tests on one ground set.
#[derive(Clone, Debug)]
pub struct Checker {
    gs: GroundSet,
    axioms: Vec<AxiomInstance>,
    faces: Vec<[usize; 6]>,
    face_ok: [bool; 64],
    edges: Vec<[[u32; 2]; 3]>,
}

impl Checker {
    pub fn new(gs: &GroundSet) -> Self {
        let faces = gs
            .three_faces()
            .into_iter()
            .map(|([i, j, k], m)| {
                [
                    gs.a_index(i, j, m),
                    gs.a_index(i, j, m.with(k)),
                    gs.a_index(i, k, m),
                    gs.a_index(i, k, m.with(j)),
                    gs.a_index(j, k, m),
                    gs.a_index(j, k, m.with(i)),
                ]
            })
            .collect();
        let mut face_ok = [false; 64];
        for m in THREE_FACE_GAUSSOIDS {
            face_ok[m as usize] = true;
        }
        let edges = edge_trinomials(gs).iter().map(|t| term_positions(gs, t)).collect();
        Self { gs: gs.clone(), axioms: axiom_instances(gs), faces, face_ok, edges }
    }

    pub fn ground_set(&self) -> &GroundSet {
        &self.gs
    }

    pub fn axioms(&self) -> &[AxiomInstance] {
        &self.axioms
    }

    pub fn first_axiom_violation<M: Members>(&self, s: &M) -> Option<AxiomInstance> {
        self.axioms.iter().copied().find(|ax| {
            let premises = s.has(ax.premises[0]) && s.has(ax.premises[1]);
            let [c, d] = ax.conclusions;
            premises
                && if ax.axiom == 4 {
                    !(s.has(c) || s.has(d))
                } else {
                    !(s.has(c) && s.has(d))
                }
        })
    }

    pub fn axioms_hold<M: Members>(&self, s: &M) -> bool {
        self.first_axiom_violation(s).is_none()
    }

    /// Index into [`edge_trinomials`] of the first incompatible edge trinomial.
    pub fn first_incompatible_edge<M: Members>(&self, s: &M) -> Option<usize> {
        self.edges.iter().position(|terms| {
            let free = terms.iter().filter(|t| t.iter().all(|&a| a == NO_A || !s.has(a as usize))).count();
            free == 1
        })
    }

    pub fn edges_compatible<M: Members>(&self, s: &M) -> bool {
        self.first_incompatible_edge(s).is_none()
    }

    /// Restriction of `s` to the given 3-face as a mask over the `[3]` A-order.
    pub fn face_mask<M: Members>(&self, s: &M, face: usize) -> u8 {
        self.faces[face].iter().enumerate().fold(0, |acc, (b, &a)| acc | (s.has(a) as u8) << b)
    }

    pub fn faces_ok<M: Members>(&self, s: &M) -> bool {
        (0..self.faces.len()).all(|f| self.face_ok[self.face_mask(s, f) as usize])
    }
}

fn term_positions(gs: &GroundSet, t: &Trinomial) -> [[u32; 2]; 3] {
    t.terms.map(|term| term.factors.map(|f| if f.is_a() { gs.a_pos(f) as u32 } else { NO_A }))
}

/// Compatibility with an arbitrary polynomial given as its monomials: the
/// polynomial is incompatible iff exactly one monomial has no A-factor in
/// `s`. P-factors never count as members.
pub fn compatible_with_terms<'a, M, I>(gs: &GroundSet, s: &M, monomials: I) -> bool
where
    M: Members,
    I: IntoIterator<Item = &'a [Symbol]>,
{
    let mut free = 0;
    for mono in monomials {
        if mono.iter().all(|&f| f.is_p() || !s.has(gs.a_pos(f))) {
            free += 1;
            if free > 1 {
                return true;
            }
        }
    }
    free != 1
}

pub fn is_compatible<M: Members>(gs: &GroundSet, s: &M, t: &Trinomial) -> bool {
    compatible_with_terms(gs, s, t.terms.iter().map(|term| &term.factors[..]))
}

pub fn is_gaussoid_axioms<M: Members>(gs: &GroundSet, s: &M) -> bool {
    Checker::new(gs).axioms_hold(s)
}

pub fn is_gaussoid_trinomials<M: Members>(gs: &GroundSet, s: &M) -> bool {
    Checker::new(gs).edges_compatible(s)
}

pub fn is_gaussoid_faces<M: Members>(gs: &GroundSet, s: &M) -> bool {
    Checker::new(gs).faces_ok(s)
}

/// A subset of the A-symbols on a fixed ground set. Values built with
/// [`Gaussoid::new`] are validated; [`Gaussoid::from_bits`] skips the check.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussoid {
    gs: GroundSet,
    bits: BitSet,
}

impl Gaussoid {
    /// Validated constructor.
    pub fn new<I: IntoIterator<Item = Symbol>>(gs: &GroundSet, symbols: I) -> Result<Self> {
        let g = Self::from_symbols(gs, symbols)?;
        g.validate()?;
        Ok(g)
    }

    /// Unvalidated set of A-symbols; fails only on malformed symbols.
    pub fn from_symbols<I: IntoIterator<Item = Symbol>>(gs: &GroundSet, symbols: I) -> Result<Self> {
        let mut bits = BitSet::new(gs.a_count());
        for s in symbols {
            gs.symbol_index(s)?;
            if s.is_p() {
                return Err(Error::Symbol(format!("{s} is not an almost-principal symbol")));
            }
            bits.insert(gs.a_pos(s));
        }
        Ok(Self { gs: gs.clone(), bits })
    }

    pub fn from_bits(gs: &GroundSet, bits: BitSet) -> Self {
        assert_eq!(bits.len(), gs.a_count());
        Self { gs: gs.clone(), bits }
    }

    pub fn from_u128(gs: &GroundSet, raw: u128) -> Self {
        Self::from_bits(gs, BitSet::from_u128(gs.a_count(), raw))
    }

    pub fn empty(gs: &GroundSet) -> Self {
        Self::from_bits(gs, BitSet::new(gs.a_count()))
    }

    pub fn full(gs: &GroundSet) -> Self {
        Self::from_bits(gs, BitSet::full(gs.a_count()))
    }

    pub fn validate(&self) -> Result<()> {
        match Checker::new(&self.gs).first_axiom_violation(&self.bits) {
            None => Ok(()),
            Some(ax) => Err(Error::Invalid(format!(
                "(G{}) fails: {} and {} present",
                ax.axiom,
                self.gs.a_symbol(ax.premises[0]),
                self.gs.a_symbol(ax.premises[1])
            ))),
        }
    }

    pub fn is_gaussoid(&self) -> bool {
        is_gaussoid_axioms(&self.gs, &self.bits)
    }

    pub fn ground_set(&self) -> &GroundSet {
        &self.gs
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.bits.to_u128()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.is_a() && s.is_valid_for(self.gs.n()) && self.bits.contains(self.gs.a_pos(s))
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.bits.iter().map(|a| self.gs.a_symbol(a))
    }

    /// `a_{ij|K} ↦ a_{ij|[n]∖(K∪ij)}`.
    pub fn dual(&self) -> Gaussoid {
        let full = self.gs.full();
        let syms = self.symbols().map(|s| match s {
            Symbol::A { i, j, k } => Symbol::A { i, j, k: full.minus(k).without(i as usize).without(j as usize) },
            p => p,
        });
        Self::from_symbols(&self.gs, syms.collect::<Vec<_>>()).expect("dual symbols are valid")
    }

    fn drop_element(&self, u: usize) -> Result<(GroundSet, Vec<usize>)> {
        let n = self.gs.n();
        if u >= n {
            return Err(Error::Symbol(format!("element {} not in [{n}]", u + 1)));
        }
        let gs = GroundSet::new(n - 1)?;
        let relabel = (0..n).map(|e| if e < u { e } else { e.wrapping_sub(1) }).collect();
        Ok((gs, relabel))
    }

    /// The marginal gaussoid on `[n]∖{u}` (zero-based `u`), relabeled to `[n-1]`.
    pub fn marginalize(&self, u: usize) -> Result<Gaussoid> {
        let (gs, relabel) = self.drop_element(u)?;
        let syms: Vec<Symbol> =
            self.symbols().filter(|s| !s.support().contains(u)).map(|s| s.permute(&relabel)).collect();
        Gaussoid::from_symbols(&gs, syms)
    }

    /// The conditional gaussoid on `[n]∖{u}`: `a_{ij|K}` with `a_{ij|K∪u} ∈ G`.
    pub fn condition(&self, u: usize) -> Result<Gaussoid> {
        let (gs, relabel) = self.drop_element(u)?;
        let syms: Vec<Symbol> = self
            .symbols()
            .filter_map(|s| match s {
                Symbol::A { i, j, k } if k.contains(u) => Some(Symbol::A { i, j, k: k.without(u) }.permute(&relabel)),
                _ => None,
            })
            .collect();
        Gaussoid::from_symbols(&gs, syms)
    }

    /// Comma-separated symbols; `{}` for the empty set.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "{}".to_string();
        }
        self.symbols().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
    }

    /// `#b` followed by the membership bits in canonical A-order.
    pub fn to_bitstring(&self) -> String {
        format!("#b{}", self.bits.to_bitstring())
    }

    /// Parses one line of the gaussoid file format (unvalidated).
    pub fn parse(gs: &GroundSet, line: &str) -> Result<Gaussoid> {
        let t = line.trim();
        if let Some(bits) = t.strip_prefix("#b") {
            let bits = BitSet::from_bitstring(bits.trim())
                .ok_or_else(|| Error::Invalid(format!("bad bitstring {bits:?}")))?;
            if bits.len() != gs.a_count() {
                return Err(Error::Dimension { expected: gs.a_count(), found: bits.len() });
            }
            return Ok(Self::from_bits(gs, bits));
        }
        let body = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(t);
        let syms = body
            .split(',')
            .map(str::trim)
            .filter(|tok| !tok.is_empty())
            .map(|tok| gs.parse_symbol(tok))
            .collect::<Result<Vec<_>>>()?;
        Self::from_symbols(gs, syms)
    }
}

impl fmt::Display for Gaussoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Gaussoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gaussoid[n={}]{{{}}}", self.gs.n(), self.to_text())
    }
}

/// Parses a gaussoid file: one gaussoid per line; blank lines and lines
/// starting with `#` (other than `#b`) are skipped. Errors carry 1-based line numbers.
pub fn parse_gaussoid_file(gs: &GroundSet, text: &str) -> Result<Vec<Gaussoid>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || (t.starts_with('#') && !t.starts_with("#b")) {
            continue;
        }
        let g = Gaussoid::parse(gs, t).map_err(|e| Error::Parse { line: idx + 1, msg: e.to_string() })?;
        out.push(g);
    }
    Ok(out)
}

/// An undirected simple graph on `[n]`, stored as adjacency masks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Subset>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self { n, adj: vec![Subset::EMPTY; n] }
    }

    pub fn complete(n: usize) -> Self {
        let full = Subset::full(n);
        Self { n, adj: (0..n).map(|i| full.without(i)).collect() }
    }

    /// Zero-based edges; rejects loops and out-of-range vertices.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::Invalid(format!("bad edge {}-{} on [{n}]", u + 1, v + 1)));
            }
            g.adj[u] = g.adj[u].with(v);
            g.adj[v] = g.adj[v].with(u);
        }
        Ok(g)
    }

    /// The graph whose edges are the set bits of `mask`, pairs in
    /// lexicographic order `(1,2), (1,3), …`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        let edges: Vec<_> = pairs.enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, p)| p).collect();
        Self::from_edges(n, edges).expect("in-range pairs")
    }

    /// All `2^{C(n,2)}` graphs on `[n]`, ordered by edge mask.
    pub fn all(n: usize) -> impl Iterator<Item = Graph> {
        let m = n * (n - 1) / 2;
        (0..1u64 << m).map(move |mask| Graph::from_edge_mask(n, mask))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j))).filter(|&(i, j)| self.has_edge(i, j)).collect()
    }

    pub fn neighbors(&self, u: usize) -> Subset {
        self.adj[u]
    }

    /// Whether every path from `i` to `j` meets `k`.
    pub fn separates(&self, i: usize, j: usize, k: Subset) -> bool {
        let mut seen = k.with(i);
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].minus(seen).iter() {
                if v == j {
                    return false;
                }
                seen = seen.with(v);
                queue.push_back(v);
            }
        }
        true
    }
}

/// `a_{ij|K} ∈ G_Γ` iff `K` separates `i` from `j` in `Γ`.
pub fn graph_gaussoid(gs: &GroundSet, g: &Graph) -> Result<Gaussoid> {
    if g.n() != gs.n() {
        return Err(Error::Dimension { expected: gs.n(), found: g.n() });
    }
    let syms: Vec<Symbol> = gs
        .a_symbols()
        .iter()
        .copied()
        .filter(|&s| match s {
            Symbol::A { i, j, k } => g.separates(i as usize, j as usize, k),
            _ => false,
        })
        .collect();
    Gaussoid::from_symbols(gs, syms)
}

/// The gaussoid of a matrix, with its positive-definiteness flag.
#[derive(Clone, Debug)]
pub struct MatrixGaussoid {
    pub gaussoid: Gaussoid,
    pub positive_definite: bool,
}

/// Vanishing almost-principal minors of `Σ`. Requires every principal minor
/// to be nonzero.
pub fn gaussoid_of_matrix(gs: &GroundSet, sigma: &SymmetricMatrix) -> Result<MatrixGaussoid> {
    let table = MinorTable::new(gs, sigma)?;
    gaussoid_of_minors(&table)
}

pub fn gaussoid_of_minors(table: &MinorTable) -> Result<MatrixGaussoid> {
    let gs = table.ground_set();
    let mut pd = true;
    for &p in gs.p_symbols() {
        let v = table.get(p);
        if v.is_zero() {
            return Err(Error::DegenerateMatrix(format!("principal minor {p} vanishes")));
        }
        pd &= v.is_positive();
    }
    let bits = BitSet::from_indices(
        gs.a_count(),
        gs.a_symbols().iter().enumerate().filter(|(_, &s)| table.get(s).is_zero()).map(|(pos, _)| pos),
    );
    Ok(MatrixGaussoid { gaussoid: Gaussoid::from_bits(gs, bits), positive_definite: pd })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn gs(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn parse(gs: &GroundSet, s: &str) -> Gaussoid {
        Gaussoid::parse(gs, s).unwrap()
    }

    #[test]
    fn n3_brute_force_matches_face_table() {
        let g3 = gs(3);
        let found: Vec<u8> = (0u8..64).filter(|&m| is_gaussoid_axioms(&g3, &(m as u128))).collect();
        let mut expected = THREE_FACE_GAUSSOIDS.to_vec();
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn axiom_instance_count() {
        for n in 3..=5 {
            let c3 = n * (n - 1) * (n - 2) / 6;
            assert_eq!(axiom_instances(&gs(n)).len() * 7 / 4, (7 * c3 * 6) << (n - 3));
        }
    }

    #[test]
    fn small_examples() {
        let g3 = gs(3);
        assert!(!parse(&g3, "a12,a13").is_gaussoid());
        assert!(parse(&g3, "{}").is_gaussoid());
        assert!(Gaussoid::full(&g3).is_gaussoid());
        let g5 = gs(5);
        let vamos = parse(&g5, "a12,a13|4,a14|5,a15|23,a23|5,a24|135,a25|34,a34|12,a35|1,a45|2");
        assert_eq!(vamos.len(), 10);
        assert!(vamos.is_gaussoid());
        assert!(is_gaussoid_faces(&g5, vamos.bits()));
        assert!(is_gaussoid_trinomials(&g5, vamos.bits()));
    }

    #[test]
    fn compatibility_examples() {
        let g3 = gs(3);
        let t = Trinomial::edge(1, [0, 1, 2], Subset::EMPTY);
        assert!(is_compatible(&g3, parse(&g3, "a23|1").bits(), &t));
        assert!(!is_compatible(&g3, parse(&g3, "a23,a12").bits(), &t));
        let sq = Trinomial::square(0, 1, Subset::EMPTY);
        assert!(is_compatible(&g3, Gaussoid::full(&g3).bits(), &sq));
    }

    #[test]
    fn dual_and_minors() {
        let g3 = gs(3);
        assert_eq!(parse(&g3, "a12").dual(), parse(&g3, "a12|3"));
        assert!(Gaussoid::empty(&g3).dual().is_empty());
        let g = parse(&g3, "a12,a12|3");
        let g2 = gs(2);
        assert_eq!(g.marginalize(2).unwrap(), parse(&g2, "a12"));
        assert_eq!(g.condition(2).unwrap(), parse(&g2, "a12"));
        let full4 = Gaussoid::full(&gs(4));
        for u in 0..4 {
            assert_eq!(full4.marginalize(u).unwrap(), Gaussoid::full(&g3));
        }
        // relabeling: a23|1 on [3] conditioned on 1 is a12 on [2]
        assert_eq!(parse(&g3, "a23|1").condition(0).unwrap(), parse(&g2, "a12"));
        assert!(g.marginalize(5).is_err());
    }

    #[test]
    fn graphs() {
        let g3 = gs(3);
        assert_eq!(graph_gaussoid(&g3, &Graph::empty(3)).unwrap(), Gaussoid::full(&g3));
        assert!(graph_gaussoid(&g3, &Graph::complete(3)).unwrap().is_empty());
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(graph_gaussoid(&g3, &path).unwrap(), parse(&g3, "a13|2"));
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert_eq!(Graph::all(4).count(), 64);
    }

    #[test]
    fn matrix_gaussoids() {
        let g3 = gs(3);
        let id = gaussoid_of_matrix(&g3, &SymmetricMatrix::identity(3)).unwrap();
        assert!(id.positive_definite);
        assert_eq!(id.gaussoid, Gaussoid::full(&g3));
        let s = SymmetricMatrix::from_diag_upper(vec![int(2), int(2), int(2)], vec![int(0), int(-1), int(-1)])
            .unwrap();
        let r = gaussoid_of_matrix(&g3, &s).unwrap();
        assert!(r.positive_definite);
        assert_eq!(r.gaussoid, parse(&g3, "a12"));
        let singular = SymmetricMatrix::from_diag_upper(vec![int(1), int(1), int(0)], vec![int(0), int(0), int(0)])
            .unwrap();
        assert!(matches!(gaussoid_of_matrix(&g3, &singular), Err(Error::DegenerateMatrix(_))));
    }

    #[test]
    fn file_format() {
        let g3 = gs(3);
        let text = "# comment\na12\n\n#b000011\n{}\n";
        let gs_list = parse_gaussoid_file(&g3, text).unwrap();
        assert_eq!(gs_list.len(), 3);
        assert_eq!(gs_list[1], parse(&g3, "a23,a23|1"));
        assert_eq!(gs_list[1].to_bitstring(), "#b000011");
        let err = parse_gaussoid_file(&g3, "a12\na19\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(Gaussoid::parse(&g3, "p12").is_err());
        assert!(Gaussoid::parse(&g3, "#b0101").is_err());
    }
}
