//! Valuated gaussoids: tropical fixtures, minors over Q[e], and valuation laws.

use gaussoids::cube::minor_indices;
use gaussoids::linalg::{int, Rational};
use gaussoids::valuated::{
    minor_valuations, n3_lineality_vector, n3_ray_terms, n3_ray_valuations, EpsMatrix, EpsPolynomial, ExtRational,
    Valuation,
};
use gaussoids::{GroundSet, Symbol};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Leibniz expansion over all permutations; fine for the at most 5×5 minors used here.
fn leibniz(m: &[Vec<EpsPolynomial>]) -> EpsPolynomial {
    let n = m.len();
    if n == 0 {
        return EpsPolynomial::one();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = EpsPolynomial::zero();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
        let mut term = EpsPolynomial::one();
        for (r, &c) in p.iter().enumerate() {
            term = term * &m[r][c];
        }
        total = if inversions % 2 == 0 { total.clone() + term } else { total.clone() - term };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

fn sub(m: &EpsMatrix, rows: &[usize], cols: &[usize]) -> Vec<Vec<EpsPolynomial>> {
    rows.iter().map(|&r| cols.iter().map(|&c| m.get(r, c).clone()).collect()).collect()
}

fn ext(p: &EpsPolynomial, shift: i64) -> ExtRational {
    match p.valuation() {
        None => ExtRational::Infinity,
        Some(v) => ExtRational::int(v as i64 - shift),
    }
}

/// Direct valuations: Leibniz minors of `M`, or for `M⁻¹` the complementary
/// minors of `M` (Jacobi) divided by `det M`.
fn oracle(gs: &GroundSet, m: &EpsMatrix, inverse: bool) -> Vec<ExtRational> {
    let n = gs.n();
    let all: Vec<usize> = (0..n).collect();
    let det_val = leibniz(&sub(m, &all, &all)).valuation().unwrap() as i64;
    gs.symbols()
        .iter()
        .map(|&s| {
            let (rows, cols) = minor_indices(s);
            if !inverse {
                return ext(&leibniz(&sub(m, &rows, &cols)), 0);
            }
            let rc: Vec<usize> = all.iter().copied().filter(|x| !cols.contains(x)).collect();
            let cc: Vec<usize> = all.iter().copied().filter(|x| !rows.contains(x)).collect();
            ext(&leibniz(&sub(m, &rc, &cc)), det_val)
        })
        .collect()
}

fn eps_entry() -> impl Strategy<Value = EpsPolynomial> {
    prop_oneof![
        1 => Just(EpsPolynomial::zero()),
        4 => (-3i64..=3, 1usize..=7).prop_map(|(c, k)| EpsPolynomial::monomial(int(c), k)),
        1 => (-2i64..=2, 0usize..=3, 1i64..=2).prop_map(|(c, k, d)| {
            EpsPolynomial::constant(int(d)) + EpsPolynomial::monomial(int(c), k)
        }),
    ]
}

fn eps_matrix() -> impl Strategy<Value = EpsMatrix> {
    (3usize..=4).prop_flat_map(|n| {
        prop::collection::vec(eps_entry(), n * (n - 1) / 2).prop_map(move |upper| {
            let mut rows = vec![vec![EpsPolynomial::zero(); n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                rows[i][i] = EpsPolynomial::one();
                for j in i + 1..n {
                    let e = it.next().unwrap();
                    rows[i][j] = e.clone();
                    rows[j][i] = e;
                }
            }
            EpsMatrix::from_rows(rows).unwrap()
        })
    })
}

fn poly() -> impl Strategy<Value = EpsPolynomial> {
    prop::collection::vec(-3i64..=3, 0..6).prop_map(|c| EpsPolynomial::from_coeffs(c.into_iter().map(int).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn minor_valuations_are_valuated_gaussoids(m in eps_matrix()) {
        let gs = GroundSet::new(m.n()).unwrap();
        let direct = minor_valuations(&gs, &m, false).unwrap();
        prop_assert!(direct.is_valuated_gaussoid(), "{:?}", direct.first_violation());
        prop_assert_eq!(direct.values(), &oracle(&gs, &m, false)[..]);
        if !m.det().is_zero() {
            let inv = minor_valuations(&gs, &m, true).unwrap();
            prop_assert!(inv.is_valuated_gaussoid(), "{:?}", inv.first_violation());
            prop_assert_eq!(inv.values(), &oracle(&gs, &m, true)[..]);
        }
    }

    #[test]
    fn valuation_laws(f in poly(), g in poly()) {
        let vf = f.valuation();
        let vg = g.valuation();
        let prod = f.clone() * &g;
        match (vf, vg) {
            (Some(a), Some(b)) => prop_assert_eq!(prod.valuation(), Some(a + b)),
            _ => prop_assert!(prod.is_zero()),
        }
        let sum = f.clone() + g.clone();
        if let (Some(a), Some(b), Some(s)) = (vf, vg, sum.valuation()) {
            prop_assert!(s >= a.min(b));
            if a != b {
                prop_assert_eq!(s, a.min(b));
            }
        }
        if !g.is_zero() {
            let (q, r) = f.div_rem(&g);
            prop_assert_eq!(q * &g + r.clone(), f);
            prop_assert!(r.degree() < g.degree());
        }
    }

    #[test]
    fn indicator_of_one_almost_principal_minor(pos in 0usize..24, value in 1i64..5) {
        let gs = GroundSet::new(4).unwrap();
        let nu = Valuation::indicator(&gs, &[gs.a_symbol(pos)], value).unwrap();
        prop_assert!(nu.is_valuated_gaussoid());
    }
}

#[test]
fn rays_survive_every_lineality_shift() {
    let rays = n3_ray_valuations();
    assert_eq!(rays.len(), 35);
    let types: Vec<&str> = n3_ray_terms().into_iter().map(|(t, _)| t).collect();
    for ty in ["a", "p", "A", "B", "C"] {
        let expected = [("a", 6), ("p", 8), ("A", 3), ("B", 12), ("C", 6)].iter().find(|(t, _)| *t == ty).unwrap().1;
        assert_eq!(types.iter().filter(|t| **t == ty).count(), expected, "type {ty}");
    }
    for ray in &rays {
        assert!(ray.is_valuated_gaussoid());
        for signs in 0..16u32 {
            let coeffs = [0, 1, 2, 3].map(|b| if signs >> b & 1 == 1 { -1 } else { 1 });
            assert!(ray.shifted(&n3_lineality_vector(coeffs)).is_valuated_gaussoid(), "{coeffs:?}");
        }
    }
}

#[test]
fn a_lone_negative_term_breaks_membership() {
    // lowering a12 alone makes a12^2 the unique minimum of the square trinomial
    let gs = GroundSet::new(3).unwrap();
    let a12: Symbol = "a12".parse().unwrap();
    let nu = Valuation::indicator(&gs, &[a12], -1).unwrap();
    let t = nu.first_violation().expect("violation");
    assert!(t.terms.iter().any(|term| term.factors == [a12, a12]));
    let shift = vec![Rational::one(); gs.symbol_count()];
    assert_eq!(nu.shifted(&shift).first_violation(), Some(t));
}

#[test]
fn infinity_follows_min_plus() {
    let gs = GroundSet::new(3).unwrap();
    let all_a: Vec<Symbol> = gs.a_symbols().to_vec();
    let mut values = Valuation::zero(&gs).values().to_vec();
    for s in &all_a {
        values[gs.ord(*s)] = ExtRational::Infinity;
    }
    assert!(Valuation::new(&gs, values.clone()).unwrap().is_valuated_gaussoid());
    values[gs.ord("a12".parse().unwrap())] = ExtRational::int(0);
    // p3*a12 is then the only finite term of p3*a12 - p*a12|3 - a23*a13
    let t = Valuation::new(&gs, values).unwrap().first_violation().expect("violation");
    assert_eq!(t.to_string(), "p3*a12 -p*a12|3 -a23*a13");
}
