//! The three gaussoid checkers against each other and against a direct
//! transcription of the axioms over explicit `(i, j, K)` triples.

use gaussoids::enumerate::gaussoid_models;
use gaussoids::gaussoid::{is_gaussoid_axioms, is_gaussoid_faces, is_gaussoid_trinomials};
use gaussoids::{Gaussoid, GroundSet, Strategy as Exec, Symbol};
use proptest::prelude::*;

/// Axiom oracle over symbols stored as `(min, max, K)` with `K` a bitmask.
struct Oracle {
    n: usize,
    index: std::collections::HashMap<(usize, usize, u16), usize>,
}

impl Oracle {
    fn new(gs: &GroundSet) -> Self {
        let index = gs
            .a_symbols()
            .iter()
            .enumerate()
            .map(|(pos, s)| match *s {
                Symbol::A { i, j, k } => ((i as usize, j as usize, k.0), pos),
                Symbol::P(_) => unreachable!(),
            })
            .collect();
        Self { n: gs.n(), index }
    }

    fn has(&self, bits: u128, i: usize, j: usize, k: u16) -> bool {
        let key = (i.min(j), i.max(j), k);
        bits >> self.index[&key] & 1 == 1
    }

    fn holds(&self, bits: u128) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let rest = ((1u16 << n) - 1) & !(1 << i | 1 << j | 1 << k);
                    let mut l = rest;
                    loop {
                        let has = |a: usize, b: usize, s: u16| self.has(bits, a, b, s);
                        let (kl, jl) = (l | 1 << k, l | 1 << j);
                        if has(i, j, l) && has(i, k, jl) && !(has(i, k, l) && has(i, j, kl)) {
                            return false;
                        }
                        if has(i, j, kl) && has(i, k, jl) && !(has(i, j, l) && has(i, k, l)) {
                            return false;
                        }
                        if has(i, j, l) && has(i, k, l) && !(has(i, j, kl) && has(i, k, jl)) {
                            return false;
                        }
                        if has(i, j, l) && has(i, j, kl) && !(has(i, k, l) || has(j, k, l)) {
                            return false;
                        }
                        if l == 0 {
                            break;
                        }
                        l = (l - 1) & rest;
                    }
                }
            }
        }
        true
    }
}

fn all_agree(gs: &GroundSet, bits: u128) -> bool {
    let a = is_gaussoid_axioms(gs, &bits);
    a == is_gaussoid_trinomials(gs, &bits) && a == is_gaussoid_faces(gs, &bits)
}

#[test]
fn exhaustive_n3() {
    let gs = GroundSet::new(3).unwrap();
    let oracle = Oracle::new(&gs);
    let mut count = 0;
    for bits in 0u128..64 {
        assert!(all_agree(&gs, bits), "{bits:06b}");
        assert_eq!(is_gaussoid_axioms(&gs, &bits), oracle.holds(bits));
        count += usize::from(oracle.holds(bits));
    }
    assert_eq!(count, 11);
}

#[test]
fn census_n4_passes_the_oracle() {
    let gs = GroundSet::new(4).unwrap();
    let oracle = Oracle::new(&gs);
    let models = gaussoid_models(&gs, Exec::Sequential).unwrap();
    assert!(models.iter().all(|&m| oracle.holds(m) && all_agree(&gs, m)));
    // every single-bit neighbour of a gaussoid that the oracle accepts is in the census
    let set: std::collections::HashSet<u128> = models.iter().copied().collect();
    for &m in &models {
        for b in 0..gs.a_count() {
            let x = m ^ 1 << b;
            assert_eq!(oracle.holds(x), set.contains(&x));
        }
    }
}

#[test]
fn duality_and_minors_commute_on_the_n4_census() {
    let gs = GroundSet::new(4).unwrap();
    for m in gaussoid_models(&gs, Exec::Sequential).unwrap() {
        let g = Gaussoid::from_u128(&gs, m);
        let d = g.dual();
        assert!(d.is_gaussoid());
        assert_eq!(d.dual(), g);
        for u in 0..4 {
            let del = g.marginalize(u).unwrap();
            let con = g.condition(u).unwrap();
            assert!(del.is_gaussoid() && con.is_gaussoid());
            assert_eq!(del.dual(), d.condition(u).unwrap());
            assert_eq!(con.dual(), d.marginalize(u).unwrap());
        }
    }
}

/// Mix of uniform random subsets and one- or two-bit perturbations of known gaussoids.
fn subset_strategy(n: usize) -> impl Strategy<Value = u128> {
    let gs = GroundSet::new(n).unwrap();
    let len = gs.a_count();
    let seeds: Vec<u128> = if n == 4 {
        gaussoid_models(&gs, Exec::Sequential).unwrap()
    } else {
        vec![0, (1u128 << len) - 1, gaussoids::valuated::TEN_FACE_GAUSSOID.iter().fold(0u128, |acc, s| {
            acc | 1u128 << gs.a_pos(gs.parse_symbol(s).unwrap())
        })]
    };
    let mask = (1u128 << len) - 1;
    prop_oneof![
        any::<u128>().prop_map(move |x| x & mask),
        (prop::sample::select(seeds), 0..len, 0..len).prop_map(|(g, a, b)| g ^ (1 << a) ^ (1 << b)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn checkers_agree_n4(bits in subset_strategy(4)) {
        let gs = GroundSet::new(4).unwrap();
        prop_assert!(all_agree(&gs, bits));
        prop_assert_eq!(is_gaussoid_axioms(&gs, &bits), Oracle::new(&gs).holds(bits));
    }

    #[test]
    fn checkers_agree_n5(bits in subset_strategy(5)) {
        let gs = GroundSet::new(5).unwrap();
        prop_assert!(all_agree(&gs, bits));
    }
}
