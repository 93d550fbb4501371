use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use toric_core::groebner::{toric_ideal, TermOrder};
use toric_core::lattice::{kernel_lattice, parse_binomial, Configuration, LatticeBinomial};
use toric_core::semigroup::{hilbert_basis, semigroup_membership, Membership};
use toric_core::sets::{check_graver_axiom, circuits, graver};

/// Non-negative matrices with no zero column, so always pointed.
fn pointed_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3, 2usize..=5)
        .prop_flat_map(|(d, n)| prop::collection::vec(prop::collection::vec(0i64..=3, n), d))
        .prop_filter("zero column", |rows| (0..rows[0].len()).all(|j| rows.iter().any(|r| r[j] != 0)))
}

fn apply(rows: &[Vec<i64>], u: &[i64]) -> Vec<i64> {
    rows.iter().map(|r| r.iter().zip(u).map(|(x, y)| x * y).sum()).collect()
}

fn set_of(v: &[LatticeBinomial]) -> BTreeSet<Vec<i64>> {
    v.iter().map(|u| u.sign_normalized().vector().to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_text_round_trip(rows in pointed_matrix()) {
        let a = Configuration::from_rows(&rows).unwrap();
        let back = Configuration::parse_matrix_text(&a.to_matrix_text()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn kernel_basis_is_in_kernel(rows in pointed_matrix()) {
        let a = Configuration::from_rows(&rows).unwrap();
        let k = kernel_lattice(&a);
        prop_assert_eq!(k.rank(), a.codim());
        for v in k.basis().rows() {
            let u: Vec<i64> = v.iter().map(|x| i64::try_from(x).unwrap()).collect();
            prop_assert!(apply(&rows, &u).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn graver_contains_circuits_and_generates(rows in pointed_matrix()) {
        let a = Configuration::from_rows(&rows).unwrap();
        let gr = graver(&a).unwrap();
        let c = circuits(&a).unwrap();
        prop_assert!(set_of(&c).is_subset(&set_of(&gr)));
        check_graver_axiom(&gr).unwrap();
        let gb = toric_ideal(&a, &TermOrder::grevlex(a.n())).unwrap();
        for u in &gr {
            prop_assert!(apply(&rows, u.vector()).iter().all(|&x| x == 0));
            prop_assert!(gb.contains_lattice(u));
        }
    }

    #[test]
    fn binomial_text_round_trip(rows in pointed_matrix()) {
        let a = Configuration::from_rows(&rows).unwrap();
        for u in graver(&a).unwrap() {
            let text = u.format(a.labels());
            prop_assert_eq!(parse_binomial(&text, a.labels()).unwrap(), u);
        }
    }

    #[test]
    fn hilbert_basis_is_minimal(rows in pointed_matrix()) {
        let a = Configuration::from_rows(&rows).unwrap();
        let hb = hilbert_basis(&a).unwrap();
        let set: BTreeSet<Vec<BigInt>> = hb.iter().cloned().collect();
        prop_assert_eq!(set.len(), hb.len());
        // No element is another plus a third.
        for x in &hb {
            for y in &hb {
                let diff: Vec<BigInt> = x.iter().zip(y).map(|(p, q)| p - q).collect();
                prop_assert!(!set.contains(&diff), "{:?} = {:?} + {:?}", x, y, diff);
            }
        }
        // Every column is a sum of basis elements.
        let cols: Vec<Vec<i64>> = hb.iter().map(|v| v.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
        let generated = Configuration::from_columns(&cols, None).unwrap();
        for col in a.columns() {
            prop_assert_eq!(semigroup_membership(&generated, &col).unwrap(), Membership::Member);
        }
    }
}
