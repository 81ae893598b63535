//! Property tests for the subspace lattice over exact rationals.

use proptest::prelude::*;
use trilie::subspace::Subspace;
use trilie::{Q, Scalar};

fn small_vec(dim: usize) -> impl Strategy<Value = Vec<Q>> {
    proptest::collection::vec((-3i64..=3).prop_map(Q::from_int), dim)
}

fn subspace(dim: usize, max_rows: usize) -> impl Strategy<Value = Subspace<Q>> {
    proptest::collection::vec(small_vec(dim), 0..=max_rows)
        .prop_map(move |rows| Subspace::span(dim, rows).unwrap())
}

proptest! {
    #[test]
    fn modular_law(s in subspace(4, 3), t in subspace(4, 3)) {
        let sum = s.sum(&t).unwrap();
        let inter = s.intersect(&t).unwrap();
        prop_assert_eq!(s.dim() + t.dim(), sum.dim() + inter.dim());
    }

    #[test]
    fn rref_is_idempotent(s in subspace(4, 4)) {
        let again = Subspace::span(4, s.basis_rows().to_vec()).unwrap();
        prop_assert_eq!(&again, &s);
    }

    #[test]
    fn complement_is_exact(s in subspace(4, 2), extra in proptest::collection::vec(small_vec(4), 0..3)) {
        // within = s + span(extra), so s is always contained
        let mut rows = s.basis_rows().to_vec();
        rows.extend(extra);
        let within = Subspace::span(4, rows).unwrap();
        let c = s.complement_in(&within).unwrap();
        prop_assert!(s.intersect(&c).unwrap().is_zero());
        prop_assert_eq!(&s.sum(&c).unwrap(), &within);
        prop_assert_eq!(s.dim() + c.dim(), within.dim());
    }

    #[test]
    fn membership_respects_spans(v in small_vec(4), w in small_vec(4), a in -3i64..=3, b in -3i64..=3) {
        let s = Subspace::span(4, vec![v.clone(), w.clone()]).unwrap();
        let combo: Vec<Q> = v.iter().zip(&w)
            .map(|(x, y)| Q::from_int(a) * x.clone() + Q::from_int(b) * y.clone())
            .collect();
        prop_assert!(s.contains_vec(&combo).unwrap());
    }

    #[test]
    fn sum_contains_both(s in subspace(4, 3), t in subspace(4, 3)) {
        let sum = s.sum(&t).unwrap();
        prop_assert!(sum.contains(&s).unwrap());
        prop_assert!(sum.contains(&t).unwrap());
        let inter = s.intersect(&t).unwrap();
        prop_assert!(s.contains(&inter).unwrap());
        prop_assert!(t.contains(&inter).unwrap());
    }
}
