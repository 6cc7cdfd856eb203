//! Realizations and non-realizability certificates.

use gaussoids::gaussoid::graph_gaussoid;
use gaussoids::linalg::{int, Rational};
use gaussoids::realize::{
    bfp_certificate, mmatrix_realization, non_realizable_n4, search_realization, sign_vector, uniform_class_rows,
    verify_class_rows, BfpOutcome, FarkasCertificate, RowStatus, SignedLogSystem,
};
use gaussoids::symmetry::canonical_form;
use gaussoids::{Graph, GroundSet, Group, Strategy as Exec, Symbol};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn sym(s: &str) -> Symbol {
    s.parse().unwrap()
}

#[test]
fn fixture_matrices_realize_their_rows() {
    let rows = uniform_class_rows();
    assert_eq!(rows.len(), 46);
    for check in verify_class_rows(&rows) {
        let expected = if check.id == 36 { RowStatus::NoMatrix } else { RowStatus::Verified };
        assert_eq!(check.status, expected, "row {}", check.id);
    }
}

/// The four inequalities `p_{13}·a_{12|34} > a_{14|3}·a_{24|13}` and so on
/// that multiply to `1 < 1`, each taken from a different edge trinomial.
#[test]
fn known_certificate_for_the_unrealizable_class() {
    let row = uniform_class_rows().into_iter().find(|r| r.id == 36).unwrap();
    let system = SignedLogSystem::new(&row.oriented().unwrap()).unwrap();
    let known = [
        (["a13|4", "a12|34"], ["a23|14", "p34"]),
        (["a14|3", "a24|13"], ["a12|34", "p13"]),
        (["a23|14", "p13"], ["a34|1", "a24|13"]),
        (["a34|1", "p34"], ["a13|4", "a14|3"]),
    ];
    let multipliers: Vec<(usize, Rational)> = known
        .iter()
        .map(|(l, r)| {
            let idx = system.find(l.map(sym), r.map(sym)).unwrap_or_else(|| panic!("{l:?} < {r:?} is not implied"));
            (idx, Rational::one())
        })
        .collect();
    let cert = FarkasCertificate { multipliers };
    assert!(cert.verify(&system));
    assert_eq!(cert.trinomials(&system).len(), 4);

    let (system, outcome) = bfp_certificate(&row.oriented().unwrap()).unwrap();
    match outcome {
        BfpOutcome::Infeasible(found) => assert!(found.verify(&system)),
        BfpOutcome::Feasible { .. } => panic!("row 36 must be infeasible"),
    }
}

#[test]
fn realizable_rows_have_strict_log_solutions() {
    let rows = uniform_class_rows();
    for id in [1, 2, 17, 37, 46] {
        let phi = rows.iter().find(|r| r.id == id).unwrap().oriented().unwrap();
        let (system, outcome) = bfp_certificate(&phi).unwrap();
        let BfpOutcome::Feasible { log_magnitudes: y } = outcome else { panic!("row {id} infeasible") };
        for q in &system.inequalities {
            let dot: Rational = system.vector(q).iter().zip(&y).map(|(&c, v)| int(c) * v).sum();
            assert!(dot.is_negative(), "row {id}: {}", system.describe(q));
        }
    }
}

#[test]
fn all_plus_is_feasible_and_non_uniform_is_rejected() {
    let gs = GroundSet::new(4).unwrap();
    let plus = gaussoids::OrientedGaussoid::all_plus(&gs);
    assert!(matches!(bfp_certificate(&plus).unwrap().1, BfpOutcome::Feasible { .. }));
    assert!(SignedLogSystem::new(&gaussoids::OrientedGaussoid::all_zero(&gs)).is_err());
}

#[test]
fn dyadic_search_is_reproducible() {
    let rows = uniform_class_rows();
    let phi = rows[0].oriented().unwrap();
    let seq = search_realization(&phi, 50_000, 3, Exec::Sequential).expect("row 1 is easy");
    let par = search_realization(&phi, 50_000, 3, Exec::Parallel).unwrap();
    assert_eq!(seq, par);
    let sv = sign_vector(&seq).unwrap();
    assert!(sv.positive_definite);
    assert_eq!(sv.oriented, phi);
}

#[test]
fn every_graph_on_four_nodes_has_a_faithful_m_matrix() {
    let gs = GroundSet::new(4).unwrap();
    let mut count = 0;
    for g in Graph::all(4) {
        let r = mmatrix_realization(&g, &int(1)).unwrap();
        assert!(r.faithful && r.nonnegative, "{:?}", g.edges());
        let sv = sign_vector(&r.sigma).unwrap();
        assert!(sv.oriented.is_positive());
        assert_eq!(sv.oriented.support().unwrap(), graph_gaussoid(&gs, &g).unwrap());
        count += 1;
    }
    assert_eq!(count, 64);
}

#[test]
fn non_realizable_fixtures_are_distinct_gaussoids() {
    let gs = GroundSet::new(4).unwrap();
    let list = non_realizable_n4();
    let mut classes: Vec<u128> = list.iter().map(|g| canonical_form(g, Group::DualSn).unwrap()).collect();
    assert!(list.iter().all(|g| g.is_gaussoid() && g.ground_set().n() == gs.n()));
    classes.sort_unstable();
    classes.dedup();
    assert_eq!(classes.len(), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn m_matrices_of_random_graphs(mask in 0u64..1024, t in 1i64..4) {
        let g = Graph::from_edge_mask(5, mask);
        let r = mmatrix_realization(&g, &int(t)).unwrap();
        prop_assert!(r.faithful && r.nonnegative);
        let k = r.sigma.inverse().unwrap();
        for i in 0..5 {
            prop_assert!(k.get(i, i).is_positive());
            for j in 0..5 {
                if i != j {
                    prop_assert!(!k.get(i, j).is_positive());
                    prop_assert_eq!(k.get(i, j).is_zero(), !g.has_edge(i, j));
                }
            }
        }
    }
}
