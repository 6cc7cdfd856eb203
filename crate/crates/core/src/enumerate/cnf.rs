//! CNF formulas: the gaussoid encoding, orientation encodings, and DIMACS I/O.

use std::fmt::Write as _;

use crate::cube::{edge_trinomials, GroundSet};
use crate::error::{Error, Result};
use crate::gaussoid::{axiom_instances, Gaussoid};
use crate::oriented::signs_allowed;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CnfFormula {
    pub variable_count: usize,
    pub clauses: Vec<Vec<i32>>,
    /// Emitted as `c` lines before the problem line.
    pub comments: Vec<String>,
}

impl CnfFormula {
    pub fn new(variable_count: usize) -> Self {
        Self { variable_count, ..Self::default() }
    }

    pub fn push(&mut self, clause: Vec<i32>) {
        debug_assert!(clause.iter().all(|&l| l != 0 && l.unsigned_abs() as usize <= self.variable_count));
        self.clauses.push(clause);
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Sorted literals, tautologies and duplicate literals/clauses removed.
    pub fn normalized_clauses(&self) -> Vec<Vec<i32>> {
        let mut out: Vec<Vec<i32>> = Vec::with_capacity(self.clauses.len());
        for c in &self.clauses {
            let mut c = c.clone();
            c.sort_by_key(|l| (l.abs(), *l));
            c.dedup();
            if c.windows(2).any(|w| w[0] == -w[1]) {
                continue;
            }
            out.push(c);
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = String::new();
        for c in &self.comments {
            let _ = writeln!(s, "c {c}");
        }
        let _ = writeln!(s, "p cnf {} {}", self.variable_count, self.clauses.len());
        for clause in &self.clauses {
            for l in clause {
                let _ = write!(s, "{l} ");
            }
            s.push_str("0\n");
        }
        s
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut f: Option<CnfFormula> = None;
        let mut expected = 0;
        let mut current = Vec::new();
        let mut comments = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            if let Some(c) = t.strip_prefix('c') {
                comments.push(c.trim().to_string());
                continue;
            }
            if let Some(rest) = t.strip_prefix("p cnf") {
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .map(|x| x.parse().map_err(|_| err(format!("bad header {t:?}"))))
                    .collect::<Result<_>>()?;
                if nums.len() != 2 || f.is_some() {
                    return Err(err(format!("bad header {t:?}")));
                }
                f = Some(CnfFormula::new(nums[0]));
                expected = nums[1];
                continue;
            }
            let g = f.as_mut().ok_or_else(|| err("clause before header".into()))?;
            for tok in t.split_whitespace() {
                let l: i32 = tok.parse().map_err(|_| err(format!("bad literal {tok:?}")))?;
                if l == 0 {
                    g.clauses.push(std::mem::take(&mut current));
                } else if l.unsigned_abs() as usize > g.variable_count {
                    return Err(err(format!("literal {l} exceeds variable count")));
                } else {
                    current.push(l);
                }
            }
        }
        let mut f = f.ok_or_else(|| Error::Parse { line: 0, msg: "missing header".into() })?;
        f.comments = comments;
        if !current.is_empty() || f.clauses.len() != expected {
            return Err(Error::Parse {
                line: text.lines().count(),
                msg: format!("expected {expected} clauses, found {}", f.clauses.len()),
            });
        }
        Ok(f)
    }
}

fn mapping_comments(gs: &GroundSet, f: &mut CnfFormula, what: &str) {
    f.comments.push(format!("{what} on n={}", gs.n()));
    f.comments.push("variable v is the (v-1)-th almost-principal symbol; positive literal = symbol in G".into());
    for (pos, sym) in gs.a_symbols().iter().enumerate() {
        f.comments.push(format!("v {} {}", pos + 1, sym));
    }
}

/// Two clauses for each of (G1)–(G3) and one for (G4), for every ordered
/// triple of distinct elements and every `L`. Duplicates are kept.
pub fn build_gaussoid_cnf(gs: &GroundSet) -> CnfFormula {
    let mut f = CnfFormula::new(gs.a_count());
    mapping_comments(gs, &mut f, "gaussoid axioms");
    let v = |a: usize| a as i32 + 1;
    for ax in axiom_instances(gs) {
        let [a, b] = ax.premises.map(v);
        let [c, d] = ax.conclusions.map(v);
        if ax.axiom == 4 {
            f.push(vec![c, d, -a, -b]);
        } else {
            f.push(vec![c, -a, -b]);
            f.push(vec![d, -a, -b]);
        }
    }
    f
}

/// `7 · C(n,3) · 2^{n-3} · 3!`.
pub fn gaussoid_clause_count(n: usize) -> usize {
    if n < 3 {
        return 0;
    }
    (7 * (n * (n - 1) * (n - 2) / 6) * 6) << (n - 3)
}

/// Orientations with zero set exactly `G`: one variable per symbol outside
/// `G` (true = negative). For every edge trinomial the terms that survive
/// setting `P` to 1 and `G` to 0 must not all have the same sign.
/// Returns the formula and the A-position of each variable.
pub fn build_orientation_cnf(g: &Gaussoid) -> Result<(CnfFormula, Vec<usize>)> {
    let gs = g.ground_set();
    let positions: Vec<usize> = (0..gs.a_count()).filter(|&a| !g.bits().contains(a)).collect();
    let mut var_of = vec![0i32; gs.a_count()];
    for (v, &a) in positions.iter().enumerate() {
        var_of[a] = v as i32 + 1;
    }
    let mut f = CnfFormula::new(positions.len());
    f.comments.push(format!("orientations of {} on n={}", g.to_text(), gs.n()));
    f.comments.push("variable true = symbol negative".into());
    for (v, &a) in positions.iter().enumerate() {
        f.comments.push(format!("v {} {}", v + 1, gs.a_symbol(a)));
    }
    for t in edge_trinomials(gs) {
        // Surviving terms: coefficient and variable list.
        let mut terms: Vec<(i8, Vec<i32>)> = Vec::new();
        for term in t.terms {
            let vars: Option<Vec<i32>> = term
                .factors
                .iter()
                .filter(|s| s.is_a())
                .map(|&s| {
                    let a = gs.a_pos(s);
                    (!g.bits().contains(a)).then_some(var_of[a])
                })
                .collect();
            if let Some(vars) = vars {
                terms.push((term.coeff, vars));
            }
        }
        if terms.is_empty() {
            continue;
        }
        if terms.len() == 1 {
            return Err(Error::Invalid(format!("{} is incompatible with {}", g.to_text(), t)));
        }
        let mut vars: Vec<i32> = terms.iter().flat_map(|(_, v)| v.iter().copied()).collect();
        vars.sort_unstable();
        vars.dedup();
        for mask in 0u32..1 << vars.len() {
            let neg = |v: i32| mask >> vars.iter().position(|&x| x == v).unwrap() & 1 == 1;
            let signs: Vec<i8> = terms
                .iter()
                .map(|(c, vs)| vs.iter().fold(*c, |acc, &v| if neg(v) { -acc } else { acc }))
                .collect();
            if signs.iter().all(|&s| s == signs[0]) {
                let clause = vars.iter().map(|&v| if neg(v) { -v } else { v }).collect();
                f.push(clause);
            }
        }
    }
    Ok((f, positions))
}

/// Ternary encoding for external #SAT solvers: `2a-1` is "nonzero" and
/// `2a` is "negative" for A-position `a`; the configuration (zero,
/// negative) is forbidden. Each edge trinomial forbids every assignment
/// of its symbols whose term values are not an allowed set.
pub fn build_oriented_cnf(gs: &GroundSet) -> CnfFormula {
    let mut f = CnfFormula::new(2 * gs.a_count());
    f.comments.push(format!("oriented gaussoids on n={}", gs.n()));
    f.comments.push("variable 2a-1 true = A-symbol a nonzero; 2a true = negative".into());
    for (pos, sym) in gs.a_symbols().iter().enumerate() {
        f.comments.push(format!("v {},{} {}", 2 * pos + 1, 2 * pos + 2, sym));
    }
    let nz = |a: usize| 2 * a as i32 + 1;
    let ng = |a: usize| 2 * a as i32 + 2;
    for a in 0..gs.a_count() {
        f.push(vec![nz(a), -ng(a)]);
    }
    for t in edge_trinomials(gs) {
        let mut syms: Vec<usize> =
            t.terms.iter().flat_map(|term| term.factors).filter(|s| s.is_a()).map(|s| gs.a_pos(s)).collect();
        syms.sort_unstable();
        syms.dedup();
        let total = 3usize.pow(syms.len() as u32);
        for code in 0..total {
            let value = |a: usize| -> i8 {
                let idx = syms.iter().position(|&x| x == a).unwrap();
                [0, 1, -1][code / 3usize.pow(idx as u32) % 3]
            };
            let signs = t.terms.map(|term| {
                term.factors.iter().fold(term.coeff, |acc, s| if s.is_a() { acc * value(gs.a_pos(*s)) } else { acc })
            });
            if signs_allowed(signs) {
                continue;
            }
            let mut clause = Vec::new();
            for &a in &syms {
                match value(a) {
                    0 => clause.push(nz(a)),
                    1 => clause.extend([-nz(a), ng(a)]),
                    _ => clause.extend([-nz(a), -ng(a)]),
                }
            }
            f.push(clause);
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clause_counts() {
        for (n, want) in [(3, 42), (4, 336), (5, 1680)] {
            let gs = GroundSet::new(n).unwrap();
            let f = build_gaussoid_cnf(&gs);
            assert_eq!(f.clause_count(), want);
            assert_eq!(gaussoid_clause_count(n), want);
            assert_eq!(f.variable_count, gs.a_count());
        }
    }

    #[test]
    fn dimacs_roundtrip() {
        let gs = GroundSet::new(3).unwrap();
        let f = build_gaussoid_cnf(&gs);
        let text = f.to_dimacs();
        assert!(text.contains("p cnf 6 42\n"));
        let g = CnfFormula::parse_dimacs(&text).unwrap();
        assert_eq!(g.clauses, f.clauses);
        assert_eq!(g.to_dimacs(), text);
        assert!(CnfFormula::parse_dimacs("p cnf 2 1\n1 3 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 2 2\n1 2 0\n").is_err());
    }

    #[test]
    fn uniform_cnf_has_four_clauses_per_full_trinomial() {
        let gs = GroundSet::new(3).unwrap();
        let (f, vars) = build_orientation_cnf(&Gaussoid::empty(&gs)).unwrap();
        assert_eq!(vars.len(), 6);
        assert_eq!(f.clause_count(), 12 * 4);
    }
}
