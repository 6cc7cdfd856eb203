//! A small deterministic DPLL solver for model enumeration and counting.
//!
//! Branching follows the variable order `1, 2, …` with the false branch
//! first, so models are visited in lexicographic order of their
//! assignment vectors (false < true). `count_models` is a separate
//! implementation based on clause-list simplification and is used as a
//! cross-check.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::cnf::CnfFormula;
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};

#[derive(Clone)]
struct Engine {
    nvars: usize,
    clause_len: Vec<u32>,
    clause_lits: Vec<Vec<i32>>,
    occ: Vec<Vec<u32>>,
    value: Vec<i8>,
    sat: Vec<u32>,
    falses: Vec<u32>,
    trail: Vec<i32>,
    inconsistent: bool,
}

fn lit_slot(l: i32) -> usize {
    2 * (l.unsigned_abs() as usize - 1) + (l < 0) as usize
}

impl Engine {
    fn new(f: &CnfFormula) -> Self {
        let clauses = f.normalized_clauses();
        let mut occ = vec![Vec::new(); 2 * f.variable_count];
        for (ci, c) in clauses.iter().enumerate() {
            for &l in c {
                occ[lit_slot(l)].push(ci as u32);
            }
        }
        let mut e = Engine {
            nvars: f.variable_count,
            clause_len: clauses.iter().map(|c| c.len() as u32).collect(),
            sat: vec![0; clauses.len()],
            falses: vec![0; clauses.len()],
            clause_lits: clauses,
            occ,
            value: vec![0; f.variable_count],
            trail: Vec::new(),
            inconsistent: false,
        };
        let units: Vec<i32> = e.clause_lits.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
        if e.clause_lits.iter().any(|c| c.is_empty()) {
            e.inconsistent = true;
        }
        for u in units {
            if !e.inconsistent && !e.propagate(u) {
                e.inconsistent = true;
            }
        }
        e
    }

    fn lit_value(&self, l: i32) -> i8 {
        let v = self.value[l.unsigned_abs() as usize - 1];
        if l > 0 {
            v
        } else {
            -v
        }
    }

    /// Assigns `l` and everything it forces; false on conflict. The trail
    /// records every assignment made, conflict or not.
    fn propagate(&mut self, l: i32) -> bool {
        let mut stack = vec![l];
        while let Some(l) = stack.pop() {
            match self.lit_value(l) {
                1 => continue,
                -1 => return false,
                _ => {}
            }
            self.value[l.unsigned_abs() as usize - 1] = if l > 0 { 1 } else { -1 };
            self.trail.push(l);
            for &c in &self.occ[lit_slot(l)] {
                self.sat[c as usize] += 1;
            }
            let mut conflict = false;
            for &c in &self.occ[lit_slot(-l)] {
                let c = c as usize;
                self.falses[c] += 1;
                if self.sat[c] == 0 {
                    if self.falses[c] == self.clause_len[c] {
                        conflict = true;
                    } else if self.falses[c] + 1 == self.clause_len[c] {
                        let unit = self.clause_lits[c].iter().copied().find(|&x| self.lit_value(x) == 0);
                        if let Some(u) = unit {
                            stack.push(u);
                        }
                    }
                }
            }
            if conflict {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let l = self.trail.pop().unwrap();
            self.value[l.unsigned_abs() as usize - 1] = 0;
            for &c in &self.occ[lit_slot(l)] {
                self.sat[c as usize] -= 1;
            }
            for &c in &self.occ[lit_slot(-l)] {
                self.falses[c as usize] -= 1;
            }
        }
    }

    fn dfs<V: FnMut(&[i8])>(&mut self, from: usize, visit: &mut V) {
        let Some(v) = (from..self.nvars).find(|&v| self.value[v] == 0) else {
            visit(&self.value);
            return;
        };
        for lit in [-(v as i32 + 1), v as i32 + 1] {
            let mark = self.trail.len();
            if self.propagate(lit) {
                self.dfs(v + 1, visit);
            }
            self.undo_to(mark);
        }
    }

    /// Fixes variables `1..=k` to the bits of `cube` (variable 1 = most
    /// significant); false if that contradicts the formula.
    fn assume_cube(&mut self, k: usize, cube: usize) -> bool {
        (0..k).all(|i| {
            let lit = if cube >> (k - 1 - i) & 1 == 1 { i as i32 + 1 } else { -(i as i32 + 1) };
            self.propagate(lit)
        })
    }
}

/// Visits every model once, in lexicographic order; returns the count.
pub fn solve_all<V: FnMut(&[bool])>(f: &CnfFormula, mut visitor: V) -> BigUint {
    let mut e = Engine::new(f);
    let mut count = 0u64;
    if !e.inconsistent {
        let mut buf = vec![false; f.variable_count];
        e.dfs(0, &mut |vals: &[i8]| {
            for (b, &v) in buf.iter_mut().zip(vals) {
                *b = v > 0;
            }
            count += 1;
            visitor(&buf);
        });
    }
    BigUint::from(count)
}

fn split_depth(f: &CnfFormula, strategy: Strategy) -> usize {
    if strategy.is_parallel() {
        f.variable_count.min(10)
    } else {
        0
    }
}

fn per_cube<R, F>(f: &CnfFormula, strategy: Strategy, run: F) -> Vec<R>
where
    R: Send + Default,
    F: Fn(&mut Engine) -> R + Sync + Send,
{
    let base = Engine::new(f);
    if base.inconsistent {
        return Vec::new();
    }
    let k = split_depth(f, strategy);
    exec::map_range(strategy, 1 << k, |cube| {
        let mut e = base.clone();
        if e.assume_cube(k, cube) {
            run(&mut e)
        } else {
            R::default()
        }
    })
}

/// All models as bit masks (bit `v-1` set iff variable `v` is true), in
/// lexicographic order. Requires at most 128 variables.
pub fn models_u128(f: &CnfFormula, strategy: Strategy) -> Result<Vec<u128>> {
    if f.variable_count > 128 {
        return Err(Error::Unsupported(format!("{} variables exceed the 128-bit encoding", f.variable_count)));
    }
    let chunks = per_cube(f, strategy, |e| {
        let mut out = Vec::new();
        e.dfs(0, &mut |vals: &[i8]| {
            out.push(vals.iter().enumerate().fold(0u128, |acc, (i, &v)| acc | ((v > 0) as u128) << i));
        });
        out
    });
    Ok(chunks.concat())
}

/// Model count by exhaustive enumeration, without materializing models.
pub fn count_by_enumeration(f: &CnfFormula, strategy: Strategy) -> BigUint {
    per_cube(f, strategy, |e| {
        let mut c = 0u64;
        e.dfs(0, &mut |_: &[i8]| c += 1);
        c
    })
    .into_iter()
    .map(BigUint::from)
    .sum()
}

/// Exact model count by recursive simplification: unit propagation on
/// clause lists, `2^free` once every clause is satisfied.
pub fn count_models(f: &CnfFormula) -> BigUint {
    let clauses: Vec<Vec<i32>> = f.normalized_clauses();
    count_rec(clauses, f.variable_count)
}

fn assign_lit(clauses: &[Vec<i32>], l: i32) -> Option<Vec<Vec<i32>>> {
    let mut out = Vec::with_capacity(clauses.len());
    for c in clauses {
        if c.contains(&l) {
            continue;
        }
        let reduced: Vec<i32> = c.iter().copied().filter(|&x| x != -l).collect();
        if reduced.is_empty() {
            return None;
        }
        out.push(reduced);
    }
    Some(out)
}

fn count_rec(mut clauses: Vec<Vec<i32>>, mut free: usize) -> BigUint {
    loop {
        if clauses.iter().any(|c| c.is_empty()) {
            return BigUint::zero();
        }
        let Some(unit) = clauses.iter().find(|c| c.len() == 1).map(|c| c[0]) else {
            break;
        };
        match assign_lit(&clauses, unit) {
            Some(next) => {
                clauses = next;
                free -= 1;
            }
            None => return BigUint::zero(),
        }
    }
    if clauses.is_empty() {
        return BigUint::one() << free;
    }
    let v = clauses.iter().flatten().map(|l| l.abs()).min().unwrap();
    let mut total = BigUint::zero();
    for lit in [-v, v] {
        if let Some(next) = assign_lit(&clauses, lit) {
            total += count_rec(next, free - 1);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn formula(vars: usize, clauses: &[&[i32]]) -> CnfFormula {
        let mut f = CnfFormula::new(vars);
        for c in clauses {
            f.push(c.to_vec());
        }
        f
    }

    #[test]
    fn trivial_counts() {
        let f = formula(5, &[]);
        assert_eq!(count_models(&f), BigUint::from(32u32));
        assert_eq!(solve_all(&f, |_| {}), BigUint::from(32u32));
        let mut empty = CnfFormula::new(3);
        empty.clauses.push(vec![]);
        assert_eq!(count_models(&empty), BigUint::zero());
        assert_eq!(solve_all(&empty, |_| {}), BigUint::zero());
        let contradiction = formula(1, &[&[1], &[-1]]);
        assert_eq!(count_by_enumeration(&contradiction, Strategy::Sequential), BigUint::zero());
    }

    #[test]
    fn brute_force_agreement() {
        let f = formula(4, &[&[1, 2], &[-1, 3], &[-3, -4, 2], &[4, -2]]);
        let brute = (0u32..16)
            .filter(|m| {
                f.clauses.iter().all(|c| c.iter().any(|&l| (m >> (l.abs() - 1) & 1 == 1) == (l > 0)))
            })
            .count();
        assert_eq!(count_models(&f), BigUint::from(brute));
        let models = models_u128(&f, Strategy::Sequential).unwrap();
        assert_eq!(models.len(), brute);
        assert_eq!(models, models_u128(&f, Strategy::Parallel).unwrap());
    }

    #[test]
    fn lexicographic_order() {
        let models = models_u128(&formula(2, &[]), Strategy::Sequential).unwrap();
        // (v1, v2) = FF, FT, TF, TT
        assert_eq!(models, vec![0b00, 0b10, 0b01, 0b11]);
    }
}
