//! Finite symmetry groups of the n-cube acting on gaussoids and oriented
//! gaussoids, canonical forms, and orbit partitions.
//!
//! Census-scale code works on raw `u128` encodings (bit `s` = A-symbol at
//! position `s`), which limits [`GroupAction`] to `n ≤ 5`.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::bitset::BitSet;
use crate::cube::{GroundSet, Subset, Symbol};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::gaussoid::Gaussoid;
use crate::oriented::OrientedGaussoid;

/// Largest ground set supported by the `u128` encodings.
pub const MAX_ENCODED_N: usize = 5;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// A symmetry of the n-cube: relabel by `perm`, then swap the elements of
/// `flip` in and out of every index set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CubeSymmetry {
    pub perm: Vec<usize>,
    pub flip: Subset,
}

impl CubeSymmetry {
    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n).collect(), flip: Subset::EMPTY }
    }

    /// The all-flip element, which acts as duality.
    pub fn duality(n: usize) -> Self {
        Self { perm: (0..n).collect(), flip: Subset::full(n) }
    }

    pub fn permutation(perm: Vec<usize>) -> Self {
        Self { perm, flip: Subset::EMPTY }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// `self · other`: apply `other` first.
    pub fn compose(&self, other: &CubeSymmetry) -> CubeSymmetry {
        let perm = other.perm.iter().map(|&x| self.perm[x]).collect();
        CubeSymmetry { perm, flip: self.flip.sym_diff(other.flip.map(&self.perm)) }
    }

    pub fn inverse(&self) -> CubeSymmetry {
        let mut inv = vec![0; self.n()];
        for (x, &y) in self.perm.iter().enumerate() {
            inv[y] = x;
        }
        let flip = self.flip.map(&inv);
        CubeSymmetry { perm: inv, flip }
    }

    pub fn act_symbol(&self, sym: Symbol) -> Symbol {
        match sym {
            Symbol::P(s) => Symbol::P(s.map(&self.perm).sym_diff(self.flip)),
            Symbol::A { i, j, k } => {
                let (pi, pj) = (self.perm[i as usize], self.perm[j as usize]);
                let k = k.map(&self.perm).sym_diff(self.flip.without(pi).without(pj));
                Symbol::a(pi, pj, k)
            }
        }
    }

    pub fn act_gaussoid(&self, g: &Gaussoid) -> Gaussoid {
        let gs = g.ground_set();
        let img: Vec<Symbol> = g.symbols().map(|s| self.act_symbol(s)).collect();
        Gaussoid::from_symbols(gs, img).expect("images of valid symbols are valid")
    }
}

/// A reorientation `φ ↦ φ_L`, stored as the smaller of `L` and its complement.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Reorientation {
    set: Subset,
}

impl Reorientation {
    pub fn new(n: usize, l: Subset) -> Self {
        let c = Subset::full(n).minus(l);
        Self { set: if c.0 < l.0 { c } else { l } }
    }

    pub fn set(self) -> Subset {
        self.set
    }

    /// Whether `a_{ij|K}` changes sign: `|{i,j} ∩ L|` odd.
    pub fn flips(self, i: usize, j: usize) -> bool {
        self.set.contains(i) != self.set.contains(j)
    }

    /// Relabel by `perm`, then reorient by `self`.
    pub fn act_oriented(self, perm: &[usize], phi: &OrientedGaussoid) -> OrientedGaussoid {
        let gs = phi.ground_set();
        let sigma = CubeSymmetry::permutation(perm.to_vec());
        let mut zero = BitSet::new(gs.a_count());
        let mut neg = BitSet::new(gs.a_count());
        for (pos, &sym) in gs.a_symbols().iter().enumerate() {
            let img = sigma.act_symbol(sym);
            let ipos = gs.a_pos(img);
            let Symbol::A { i, j, .. } = img else { unreachable!() };
            match phi.sign_at(pos) {
                0 => zero.insert(ipos),
                s => {
                    if (s < 0) != self.flips(i as usize, j as usize) {
                        neg.insert(ipos);
                    }
                }
            }
        }
        OrientedGaussoid::from_parts(gs, zero, neg).expect("disjoint by construction")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Group {
    /// Relabelings of `[n]`.
    Sn,
    /// Relabelings together with duality.
    DualSn,
    /// The full symmetry group of the cube.
    Hyperoct,
    /// Relabelings combined with reorientations (oriented gaussoids only).
    ReorientSn,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::Sn => "sn",
            Group::DualSn => "dual-sn",
            Group::Hyperoct => "hyperoct",
            Group::ReorientSn => "reorient-sn",
        }
    }

    pub fn order(self, n: usize) -> usize {
        let fact: usize = (1..=n).product();
        match self {
            Group::Sn => fact,
            Group::DualSn => 2 * fact,
            Group::Hyperoct => fact << n,
            Group::ReorientSn => fact << (n - 1),
        }
    }

    /// Group elements as (cube symmetry, reorientation set).
    pub fn elements(self, n: usize) -> Vec<(CubeSymmetry, Subset)> {
        let perms = permutations(n);
        let flips: Vec<Subset> = match self {
            Group::Sn | Group::ReorientSn => vec![Subset::EMPTY],
            Group::DualSn => vec![Subset::EMPTY, Subset::full(n)],
            Group::Hyperoct => Subset::full(n).subsets().collect(),
        };
        let reorients: Vec<Subset> = match self {
            Group::ReorientSn => Subset::full(n - 1).subsets().collect(),
            _ => vec![Subset::EMPTY],
        };
        let mut out = Vec::with_capacity(self.order(n));
        for p in &perms {
            for &f in &flips {
                for &l in &reorients {
                    out.push((CubeSymmetry { perm: p.clone(), flip: f }, l));
                }
            }
        }
        out
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Group> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "sn" => Ok(Group::Sn),
            "dual-sn" | "dual" => Ok(Group::DualSn),
            "hyperoct" | "bn" => Ok(Group::Hyperoct),
            "reorient-sn" | "reorient" => Ok(Group::ReorientSn),
            other => Err(Error::Invalid(format!("unknown group {other:?}"))),
        }
    }
}

/// An orbit, identified by its minimal encoding.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Orbit<T> {
    pub representative: T,
    pub size: usize,
}

/// Oriented encoding: (zero set, negative set).
pub type OrientedKey = (u128, u128);

/// A group acting on the A-block of a fixed ground set, with each element
/// precompiled to a position permutation and a sign-flip mask.
pub struct GroupAction {
    gs: GroundSet,
    group: Group,
    images: Vec<Vec<u8>>,
    flips: Vec<u128>,
}

impl GroupAction {
    pub fn new(gs: &GroundSet, group: Group) -> Result<Self> {
        if gs.n() > MAX_ENCODED_N {
            return Err(Error::Unsupported(format!("group actions need n ≤ {MAX_ENCODED_N}, got {}", gs.n())));
        }
        let mut images = Vec::new();
        let mut flips = Vec::new();
        for (g, l) in group.elements(gs.n()) {
            let r = Reorientation { set: l };
            let mut img = Vec::with_capacity(gs.a_count());
            let mut flip = 0u128;
            for &sym in gs.a_symbols() {
                let image = g.act_symbol(sym);
                let pos = gs.a_pos(image);
                img.push(pos as u8);
                if let Symbol::A { i, j, .. } = image {
                    if r.flips(i as usize, j as usize) {
                        flip |= 1 << pos;
                    }
                }
            }
            images.push(img);
            flips.push(flip);
        }
        Ok(Self { gs: gs.clone(), group, images, flips })
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn ground_set(&self) -> &GroundSet {
        &self.gs
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, element: usize, raw: u128) -> u128 {
        let img = &self.images[element];
        let mut bits = raw;
        let mut out = 0u128;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= 1 << img[b];
        }
        out
    }

    pub fn image_oriented(&self, element: usize, (zero, neg): OrientedKey) -> OrientedKey {
        let z = self.image(element, zero);
        let nonzero = !z & low_mask(self.gs.a_count());
        (z, (self.image(element, neg) ^ self.flips[element]) & nonzero)
    }

    /// Minimal image over the group.
    pub fn canonical(&self, raw: u128) -> u128 {
        (0..self.order()).map(|e| self.image(e, raw)).min().unwrap()
    }

    pub fn canonical_oriented(&self, key: OrientedKey) -> OrientedKey {
        (0..self.order()).map(|e| self.image_oriented(e, key)).min().unwrap()
    }

    pub fn orbit(&self, raw: u128) -> Vec<u128> {
        let mut v: Vec<u128> = (0..self.order()).map(|e| self.image(e, raw)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn orbit_oriented(&self, key: OrientedKey) -> Vec<OrientedKey> {
        let mut v: Vec<OrientedKey> = (0..self.order()).map(|e| self.image_oriented(e, key)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Orbits of a group-closed item list, sorted by representative.
    pub fn partition(&self, items: &[u128], strategy: Strategy) -> Result<Vec<Orbit<u128>>> {
        partition_by(items, strategy, |x| self.orbit(x), |x| Gaussoid::from_u128(&self.gs, x).to_text())
    }

    pub fn partition_oriented(&self, items: &[OrientedKey], strategy: Strategy) -> Result<Vec<Orbit<OrientedKey>>> {
        partition_by(
            items,
            strategy,
            |x| self.orbit_oriented(x),
            |x| OrientedGaussoid::from_key(&self.gs, x).sign_string(),
        )
    }
}

pub(crate) fn low_mask(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

fn partition_by<T, O, D>(items: &[T], strategy: Strategy, orbit_of: O, describe: D) -> Result<Vec<Orbit<T>>>
where
    T: Copy + Ord + Send + Sync,
    O: Fn(T) -> Vec<T> + Sync + Send,
    D: Fn(T) -> String,
{
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Invalid(format!("duplicate item {}", describe(w[0]))));
    }
    let seen: Vec<AtomicU64> = (0..sorted.len().div_ceil(64)).map(|_| AtomicU64::new(0)).collect();
    let test = |i: usize| seen[i / 64].load(Ordering::Relaxed) >> (i % 64) & 1 == 1;
    let claim = |i: usize| seen[i / 64].fetch_or(1 << (i % 64), Ordering::AcqRel) >> (i % 64) & 1 == 0;

    // Each unseen item generates its orbit; the worker that first claims
    // the orbit's minimum records it.
    let process = |idx: usize| -> Option<std::result::Result<Orbit<T>, T>> {
        if test(idx) {
            return None;
        }
        let orbit = orbit_of(sorted[idx]);
        let mut positions = Vec::with_capacity(orbit.len());
        for &x in &orbit {
            match sorted.binary_search(&x) {
                Ok(p) => positions.push(p),
                Err(_) => return Some(Err(x)),
            }
        }
        if !claim(positions[0]) {
            return None;
        }
        for &p in &positions[1..] {
            claim(p);
        }
        Some(Ok(Orbit { representative: orbit[0], size: orbit.len() }))
    };

    let mut orbits = Vec::new();
    for r in exec::filter_map_range(strategy, sorted.len(), process) {
        match r {
            Ok(o) => orbits.push(o),
            Err(missing) => return Err(Error::NotClosed(describe(missing))),
        }
    }
    orbits.sort_unstable_by_key(|o| o.representative);
    Ok(orbits)
}

/// Canonical encoding of a gaussoid: its minimal image under the group.
pub fn canonical_form(g: &Gaussoid, group: Group) -> Result<u128> {
    let action = GroupAction::new(g.ground_set(), group)?;
    Ok(action.canonical(g.to_u128().expect("n ≤ 5 fits in 128 bits")))
}

pub fn canonical_form_oriented(phi: &OrientedGaussoid, group: Group) -> Result<OrientedKey> {
    let action = GroupAction::new(phi.ground_set(), group)?;
    Ok(action.canonical_oriented(phi.key().expect("n ≤ 5 fits in 128 bits")))
}
