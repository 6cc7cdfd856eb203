//! Native three-valued search for oriented gaussoids.
//!
//! Each A-symbol has a domain inside `{0, +1, -1}`; every edge trinomial
//! is a constraint on its (at most four) A-symbols, kept generalized arc
//! consistent during the search. Branching follows the canonical A-order
//! with values tried in the order `0, +, -`.

use num_bigint::BigUint;

use crate::cube::{edge_trinomials, GroundSet};
use crate::exec::{self, Strategy};
use crate::oriented::signs_allowed;
use crate::symmetry::OrientedKey;

pub const ZERO: u8 = 1;
pub const PLUS: u8 = 2;
pub const MINUS: u8 = 4;
pub const ANY: u8 = ZERO | PLUS | MINUS;

const VALUES: [(u8, i8); 3] = [(ZERO, 0), (PLUS, 1), (MINUS, -1)];

#[derive(Clone, Debug)]
struct Constraint {
    vars: Vec<usize>,
    /// Per term: coefficient and indices into `vars`.
    terms: [(i8, [u8; 2]); 3],
}

const NONE: u8 = u8::MAX;

impl Constraint {
    fn holds(&self, vals: &[i8]) -> bool {
        let term = |(c, idx): (i8, [u8; 2])| {
            idx.iter().fold(c, |acc, &i| if i == NONE { acc } else { acc * vals[i as usize] })
        };
        signs_allowed(self.terms.map(term))
    }
}

/// Constraint network for the orientation search on one ground set.
#[derive(Clone, Debug)]
pub struct TernaryProblem {
    nvars: usize,
    constraints: Vec<Constraint>,
    watch: Vec<Vec<usize>>,
}

impl TernaryProblem {
    pub fn new(gs: &GroundSet) -> Self {
        let mut constraints = Vec::new();
        for t in edge_trinomials(gs) {
            let mut vars: Vec<usize> = Vec::new();
            let terms = t.terms.map(|term| {
                let idx = term.factors.map(|f| {
                    if f.is_p() {
                        return NONE;
                    }
                    let a = gs.a_pos(f);
                    let pos = vars.iter().position(|&x| x == a).unwrap_or_else(|| {
                        vars.push(a);
                        vars.len() - 1
                    });
                    pos as u8
                });
                (term.coeff, idx)
            });
            constraints.push(Constraint { vars, terms });
        }
        let mut watch = vec![Vec::new(); gs.a_count()];
        for (ci, c) in constraints.iter().enumerate() {
            for &v in &c.vars {
                watch[v].push(ci);
            }
        }
        Self { nvars: gs.a_count(), constraints, watch }
    }

    /// Removes unsupported values until a fixpoint; false if a domain empties.
    fn propagate(&self, dom: &mut [u8], changed: &[usize]) -> bool {
        let mut queue: Vec<usize> = changed.iter().flat_map(|&v| self.watch[v].iter().copied()).collect();
        let mut queued = vec![false; self.constraints.len()];
        for &c in &queue {
            queued[c] = true;
        }
        while let Some(ci) = queue.pop() {
            queued[ci] = false;
            let c = &self.constraints[ci];
            let k = c.vars.len();
            let mut supported = [0u8; 4];
            let mut vals = [0i8; 4];
            let mut iter = [0usize; 4];
            // Enumerate all tuples from the current domains.
            let choices: Vec<Vec<(u8, i8)>> =
                c.vars.iter().map(|&v| VALUES.iter().copied().filter(|(b, _)| dom[v] & b != 0).collect()).collect();
            if choices.iter().any(|ch| ch.is_empty()) {
                return false;
            }
            loop {
                for i in 0..k {
                    vals[i] = choices[i][iter[i]].1;
                }
                if c.holds(&vals[..k]) {
                    for i in 0..k {
                        supported[i] |= choices[i][iter[i]].0;
                    }
                }
                let mut i = 0;
                while i < k {
                    iter[i] += 1;
                    if iter[i] < choices[i].len() {
                        break;
                    }
                    iter[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
            for i in 0..k {
                let v = c.vars[i];
                let nd = dom[v] & supported[i];
                if nd == 0 {
                    return false;
                }
                if nd != dom[v] {
                    dom[v] = nd;
                    for &other in &self.watch[v] {
                        if other != ci && !queued[other] {
                            queued[other] = true;
                            queue.push(other);
                        }
                    }
                }
            }
        }
        true
    }

    fn dfs<V: FnMut(&[u8])>(&self, dom: &[u8], from: usize, visit: &mut V) {
        let Some(v) = (from..self.nvars).find(|&v| dom[v].count_ones() > 1) else {
            visit(dom);
            return;
        };
        for (bit, _) in VALUES {
            if dom[v] & bit == 0 {
                continue;
            }
            let mut next = dom.to_vec();
            next[v] = bit;
            if self.propagate(&mut next, &[v]) {
                self.dfs(&next, v + 1, visit);
            }
        }
    }

    fn initial(&self, domains: &[u8]) -> Option<Vec<u8>> {
        assert_eq!(domains.len(), self.nvars);
        let mut dom = domains.to_vec();
        let all: Vec<usize> = (0..self.nvars).collect();
        self.propagate(&mut dom, &all).then_some(dom)
    }

    /// Visits every solution (as singleton domains) in lexicographic order.
    pub fn solve_all<V: FnMut(&[i8])>(&self, domains: &[u8], mut visit: V) -> u64 {
        let mut count = 0;
        if let Some(dom) = self.initial(domains) {
            let mut signs = vec![0i8; self.nvars];
            self.dfs(&dom, 0, &mut |d: &[u8]| {
                for (s, &b) in signs.iter_mut().zip(d) {
                    *s = bit_sign(b);
                }
                count += 1;
                visit(&signs);
            });
        }
        count
    }

    /// Fixes the first `k` undecided variables of `dom` to every combination of
    /// their values, in search order; returns the consistent prefixes.
    fn split(&self, dom: Vec<u8>, k: usize) -> Vec<Vec<u8>> {
        let mut frontier = vec![dom];
        for _ in 0..k {
            let mut next = Vec::new();
            for d in frontier {
                let Some(v) = (0..self.nvars).find(|&v| d[v].count_ones() > 1) else {
                    next.push(d);
                    continue;
                };
                for (bit, _) in VALUES {
                    if d[v] & bit == 0 {
                        continue;
                    }
                    let mut nd = d.clone();
                    nd[v] = bit;
                    if self.propagate(&mut nd, &[v]) {
                        next.push(nd);
                    }
                }
            }
            frontier = next;
        }
        frontier
    }

    /// All solutions as (zero, negative) keys in search order.
    pub fn keys(&self, domains: &[u8], strategy: Strategy) -> Vec<OrientedKey> {
        assert!(self.nvars <= 128);
        let Some(dom) = self.initial(domains) else { return Vec::new() };
        let depth = if strategy.is_parallel() { 5 } else { 0 };
        let parts = self.split(dom, depth);
        exec::map(strategy, &parts, |d| {
            let mut out = Vec::new();
            let d = d.clone();
            self.dfs(&d, 0, &mut |sol: &[u8]| out.push(key_of(sol)));
            out
        })
        .concat()
    }

    pub fn count(&self, domains: &[u8], strategy: Strategy) -> BigUint {
        let Some(dom) = self.initial(domains) else { return BigUint::default() };
        let depth = if strategy.is_parallel() { 5 } else { 0 };
        let parts = self.split(dom, depth);
        exec::map(strategy, &parts, |d| {
            let mut c = 0u64;
            let d = d.clone();
            self.dfs(&d, 0, &mut |_: &[u8]| c += 1);
            c
        })
        .into_iter()
        .map(BigUint::from)
        .sum()
    }
}

fn bit_sign(b: u8) -> i8 {
    match b {
        ZERO => 0,
        PLUS => 1,
        _ => -1,
    }
}

fn key_of(dom: &[u8]) -> OrientedKey {
    dom.iter().enumerate().fold((0u128, 0u128), |(z, n), (i, &b)| match b {
        ZERO => (z | 1 << i, n),
        MINUS => (z, n | 1 << i),
        _ => (z, n),
    })
}
