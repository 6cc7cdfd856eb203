//! Properties of sign vectors and gaussoids of random positive definite matrices.

use gaussoids::gaussoid::gaussoid_of_matrix;
use gaussoids::linalg::{int, SymmetricMatrix};
use gaussoids::realize::{partial_correlations, sign_vector};
use gaussoids::symmetry::Reorientation;
use gaussoids::{BitSet, GroundSet, Subset, Symbol};
use num_traits::Zero;
use proptest::prelude::*;

/// `Σ = L Lᵀ` for a sparse integer lower-triangular `L` with positive diagonal,
/// so zero patterns (and hence nonempty gaussoids) come up regularly.
fn pd_matrix(n: usize) -> impl Strategy<Value = SymmetricMatrix> {
    let below = n * (n - 1) / 2;
    (prop::collection::vec(1i64..=3, n), prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -2i64..=2], below))
        .prop_map(move |(diag, low)| {
            let mut l = vec![vec![0i64; n]; n];
            let mut it = low.into_iter();
            for (i, row) in l.iter_mut().enumerate() {
                row[i] = diag[i];
                for cell in row.iter_mut().take(i) {
                    *cell = it.next().unwrap();
                }
            }
            let rows = (0..n)
                .map(|i| (0..n).map(|j| int((0..n).map(|k| l[i][k] * l[j][k]).sum())).collect())
                .collect();
            SymmetricMatrix::from_rows(rows).unwrap()
        })
}

fn sized_pd() -> impl Strategy<Value = SymmetricMatrix> {
    (3usize..=5).prop_flat_map(pd_matrix)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn inverse_gives_the_dual(sigma in sized_pd()) {
        let gs = GroundSet::new(sigma.n()).unwrap();
        let g = gaussoid_of_matrix(&gs, &sigma).unwrap();
        prop_assert!(g.positive_definite);
        prop_assert!(g.gaussoid.is_gaussoid());
        let inv = gaussoid_of_matrix(&gs, &sigma.inverse().unwrap()).unwrap();
        prop_assert_eq!(inv.gaussoid, g.gaussoid.dual());
    }

    #[test]
    fn sign_vectors_are_oriented_gaussoids(sigma in sized_pd()) {
        let sv = sign_vector(&sigma).unwrap();
        prop_assert!(sv.positive_definite);
        prop_assert!(sv.oriented.is_oriented_gaussoid());
        let g = gaussoid_of_matrix(&GroundSet::new(sigma.n()).unwrap(), &sigma).unwrap();
        prop_assert_eq!(sv.oriented.support().unwrap(), g.gaussoid);
    }

    #[test]
    fn partial_correlation_signs_match(sigma in sized_pd()) {
        let sv = sign_vector(&sigma).unwrap();
        for (pos, (_, rho)) in partial_correlations(&sigma).unwrap().into_iter().enumerate() {
            let expected = sv.oriented.sign_at(pos);
            let got = if rho.abs() < 1e-12 { 0 } else { rho.signum() as i8 };
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn conjugating_by_a_sign_matrix_reorients(sigma in sized_pd(), mask in 0u16..32) {
        let n = sigma.n();
        let flipped: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let gs = GroundSet::new(n).unwrap();
        let before = sign_vector(&sigma).unwrap().oriented;
        let after = sign_vector(&sigma.sign_conjugate(&flipped)).unwrap().oriented;
        // a_{ij|K} changes sign exactly when one of i, j is flipped
        let flip = BitSet::from_indices(
            gs.a_count(),
            gs.a_symbols().iter().enumerate().filter_map(|(pos, s)| match *s {
                Symbol::A { i, j, .. } => (flipped[i as usize] != flipped[j as usize]).then_some(pos),
                Symbol::P(_) => None,
            }),
        );
        prop_assert_eq!(&after, &before.negate_where(&flip));
        let l = Subset::from_elems((0..n).filter(|&i| flipped[i]));
        let identity: Vec<usize> = (0..n).collect();
        prop_assert_eq!(after, Reorientation::new(n, l).act_oriented(&identity, &before));
    }
}

#[test]
fn extreme_matrices() {
    let gs = GroundSet::new(4).unwrap();
    let id = gaussoid_of_matrix(&gs, &SymmetricMatrix::identity(4)).unwrap();
    assert_eq!(id.gaussoid.len(), gs.a_count());
    let mut generic = SymmetricMatrix::identity(4);
    for (i, j, v) in [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 5), (1, 3, 7), (2, 3, 11)] {
        generic.set(i, j, int(v) / int(32));
    }
    let g = gaussoid_of_matrix(&gs, &generic).unwrap();
    assert!(g.positive_definite && g.gaussoid.is_empty());
    let sing = SymmetricMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(1)]]).unwrap();
    assert!(sing.det().is_zero());
    assert!(gaussoid_of_matrix(&GroundSet::new(2).unwrap(), &sing).is_err());
}
