mod common;

use num_traits::ToPrimitive;
use proptest::prelude::*;

use common::{circulant_rows, dense, int};
use pellcirc::circulant::{circ_det_via_eigen, circ_eigenvalues, circ_expand, is_circulant};
use pellcirc::closed_forms::sequence_circulant;
use pellcirc::linalg::{mat_mul, oracle_det, oracle_inverse};
use pellcirc::{Circulant, SequenceKind};

#[test]
fn expansion_matches_hand_built_layout() {
    let first: Vec<_> = [3, 1, 4, 1, 5, 9].iter().map(|&v| int(v)).collect();
    let c = Circulant::new(first.clone()).unwrap();
    assert_eq!(circ_expand(&c), dense(&circulant_rows(&first)));
}

#[test]
fn eigenproduct_tracks_exact_determinant() {
    for kind in SequenceKind::ALL {
        for n in 3..=12 {
            let c = sequence_circulant(kind, n).unwrap();
            let exact = oracle_det(&circ_expand(&c)).unwrap().to_f64().unwrap();
            let approx = circ_det_via_eigen(&c).unwrap();
            let rel = (approx - exact).norm() / exact.abs();
            assert!(rel < 1e-9, "{kind} n={n}: relative error {rel:e}");
            assert!(approx.im.abs() / exact.abs() < 1e-9);
        }
    }
}

#[test]
fn row_sum_is_first_eigenvalue() {
    let c = sequence_circulant(SequenceKind::Pell, 7).unwrap();
    let eig = circ_eigenvalues(&c).unwrap();
    // 1 + 2 + 5 + 12 + 29 + 70 + 169
    assert!((eig[0].re - 288.0).abs() < 1e-9);
}

#[test]
fn oracle_inverse_of_sequence_circulant_is_circulant() {
    for kind in SequenceKind::ALL {
        for n in 1..=10 {
            let inv = oracle_inverse(&circ_expand(&sequence_circulant(kind, n).unwrap())).unwrap();
            assert!(is_circulant(&inv).unwrap(), "{kind} n={n}");
        }
    }
}

fn circulant(max: usize) -> impl Strategy<Value = Circulant> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(-30i64..=30, n).prop_map(|v| Circulant::from_integers(v).unwrap())
    })
}

fn circulant_pair(max: usize) -> impl Strategy<Value = (Circulant, Circulant)> {
    (1..=max).prop_flat_map(|n| {
        let row = move || prop::collection::vec(-30i64..=30, n);
        (row(), row()).prop_map(|(a, b)| {
            (
                Circulant::from_integers(a).unwrap(),
                Circulant::from_integers(b).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn first_row_round_trip(c in circulant(10)) {
        let e = circ_expand(&c);
        prop_assert!(is_circulant(&e).unwrap());
        prop_assert_eq!(Circulant::from_first_row_of(&e).unwrap(), c);
    }

    #[test]
    fn circulants_form_a_commutative_algebra((a, b) in circulant_pair(8)) {
        let (ea, eb) = (circ_expand(&a), circ_expand(&b));
        let ab = mat_mul(&ea, &eb).unwrap();
        prop_assert_eq!(&ab, &mat_mul(&eb, &ea).unwrap());
        prop_assert!(is_circulant(&ab).unwrap());
    }

    #[test]
    fn nonsingular_inverse_is_circulant(c in circulant(7)) {
        if let Ok(inv) = oracle_inverse(&circ_expand(&c)) {
            prop_assert!(is_circulant(&inv).unwrap());
        }
    }
}
