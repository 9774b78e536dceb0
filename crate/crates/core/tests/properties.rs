//! Property tests for the algebraic identities: bilinearity and
//! positivity of the inner products, the isometry of each leg of the
//! chain, and round-trips of every basis change.

use num::{BigRational, Signed, Zero};
use proptest::prelude::*;

use fockbridge::asymm::{apply_j, apply_j_inverse, asymm_inner};
use fockbridge::boson::{boson_inner, BosonPolynomial, ZMonomial};
use fockbridge::bridge::{boson_to_fermion, fermion_to_boson};
use fockbridge::combinatorics::{partitions_of, Partition};
use fockbridge::fermion::{asymm_to_fermion, fock_inner};
use fockbridge::symm::{
    apply_i, apply_i_inverse, hall_inner, power_to_schur, schur_to_power, SymmElement,
};

fn rational() -> impl Strategy<Value = BigRational> {
    (-99i64..=99, 1i64..=99).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    ((1i64..=99), (1i64..=99), any::<bool>()).prop_map(|(n, d, neg)| {
        let r = BigRational::new(n.into(), d.into());
        if neg {
            -r
        } else {
            r
        }
    })
}

fn partition(max_weight: u32) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn boson_poly(max_weight: u32) -> impl Strategy<Value = BosonPolynomial> {
    proptest::collection::vec((partition(max_weight), rational()), 0..5).prop_map(|terms| {
        BosonPolynomial::from_terms(
            terms
                .into_iter()
                .map(|(mu, c)| (ZMonomial::from_partition(&mu), c)),
        )
    })
}

fn symm_elem(max_weight: u32) -> impl Strategy<Value = SymmElement> {
    proptest::collection::vec((partition(max_weight), rational()), 0..5)
        .prop_map(SymmElement::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boson_inner_bilinear(
        a in rational(),
        b in rational(),
        f in boson_poly(8),
        g in boson_poly(8),
        h in boson_poly(8),
    ) {
        let lhs = boson_inner(&f.scale(&a).add(&g.scale(&b)), &h);
        let rhs = a * boson_inner(&f, &h) + b * boson_inner(&g, &h);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn boson_inner_symmetric_positive(f in boson_poly(8), g in boson_poly(8)) {
        prop_assert_eq!(boson_inner(&f, &g), boson_inner(&g, &f));
        let norm2 = boson_inner(&f, &f);
        if f.is_zero() {
            prop_assert!(norm2.is_zero());
        } else {
            prop_assert!(norm2.is_positive());
        }
    }

    #[test]
    fn substitution_is_isometry(f in boson_poly(8), g in boson_poly(8)) {
        prop_assert_eq!(
            boson_inner(&f, &g),
            hall_inner(&apply_i(&f), &apply_i(&g))
        );
    }

    #[test]
    fn substitution_round_trip(f in boson_poly(8)) {
        prop_assert_eq!(apply_i_inverse(&apply_i(&f)), f);
    }

    #[test]
    fn hall_inner_matches_fock_side(f in symm_elem(8), g in symm_elem(8)) {
        prop_assert_eq!(
            hall_inner(&f, &g),
            boson_inner(&apply_i_inverse(&f), &apply_i_inverse(&g))
        );
    }

    #[test]
    fn schur_round_trip(f in symm_elem(8)) {
        prop_assert_eq!(schur_to_power(&power_to_schur(&f)), f);
    }

    #[test]
    fn vandermonde_multiplication_is_isometry(f in symm_elem(6), g in symm_elem(6)) {
        prop_assert_eq!(
            asymm_inner(&apply_j(&f), &apply_j(&g)),
            hall_inner(&f, &g)
        );
    }

    #[test]
    fn vandermonde_round_trip(f in symm_elem(8)) {
        prop_assert_eq!(apply_j_inverse(&apply_j(&f)), f);
    }

    #[test]
    fn wedge_relabeling_is_isometry(f in symm_elem(8), g in symm_elem(8)) {
        let (af, ag) = (apply_j(&f), apply_j(&g));
        prop_assert_eq!(
            fock_inner(&asymm_to_fermion(&af), &asymm_to_fermion(&ag)),
            asymm_inner(&af, &ag)
        );
    }

    #[test]
    fn full_chain_round_trip(f in boson_poly(8)) {
        prop_assert_eq!(fermion_to_boson(&boson_to_fermion(&f)), f);
    }

    #[test]
    fn full_chain_is_isometry(f in boson_poly(6), g in boson_poly(6)) {
        prop_assert_eq!(
            fock_inner(&boson_to_fermion(&f), &boson_to_fermion(&g)),
            boson_inner(&f, &g)
        );
    }

    #[test]
    fn nonzero_coefficient_scaling(f in boson_poly(6), c in nonzero_rational()) {
        // scaling is exact: coefficients divide back out
        let scaled = f.scale(&c);
        prop_assert_eq!(scaled.scale(&(BigRational::from_integer(1.into()) / c)), f);
    }
}
