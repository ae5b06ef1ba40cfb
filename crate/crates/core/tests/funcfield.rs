mod common;

use common::*;
use ore_core::fields::{FpPoly, RatFn};
use ore_core::funcfield::{
    frob_decompose, index_pth_power, kphi_decompose, places_up_to, recompose, BasisIndex, Decomposition, Place,
    DEFAULT_PLACE_BOUND,
};
use proptest::prelude::*;

fn finite_places(p: u32, d: usize) -> Vec<FpPoly> {
    places_up_to(p, d)
        .into_iter()
        .filter_map(|pl| match pl {
            Place::Finite(f) => Some(f),
            Place::Infinity => None,
        })
        .collect()
}

/// A rational function whose denominator is a product of places of degree at most 3.
fn ratfn_over_places(p: u32) -> impl Strategy<Value = RatFn> {
    let places = finite_places(p, 3);
    let n = places.len();
    (fp_poly(p, 10), prop::collection::vec((0..n, 1..=5u64), 0..=3)).prop_map(move |(num, factors)| {
        let den = factors.iter().fold(FpPoly::one(p), |acc, &(i, e)| acc.mul(&places[i].pow(e)));
        RatFn::new(num, den).unwrap()
    })
}

fn basis_index(p: u32) -> impl Strategy<Value = BasisIndex> {
    let places = finite_places(p, 2);
    let n = places.len();
    let m = (1..12u64).prop_filter("prime to p", move |m| m % p as u64 != 0);
    prop_oneof![
        Just(BasisIndex::One),
        (0..3u32, m.clone()).prop_map(|(nu, m)| BasisIndex::Monomial { nu, m }),
        (0..n, 0..2usize, 0..3u32, m).prop_map(move |(k, s, nu, m)| {
            let place = places[k].clone();
            let slot = 1 + s % place.deg();
            BasisIndex::Principal { place, slot, nu, m }
        }),
    ]
}

fn decomposition(p: u32) -> impl Strategy<Value = Decomposition> {
    prop::collection::vec((basis_index(p), 1..p), 0..6).prop_map(move |t| Decomposition::from_terms(p, t).unwrap())
}

#[test]
fn degree_six_places_are_all_factored() {
    for p in [2, 3] {
        for place in finite_places(p, 6).into_iter().step_by(7) {
            let f = RatFn::new(FpPoly::x(p), place.pow(p as u64 + 1)).unwrap();
            assert_eq!(recompose(&frob_decompose(&f, DEFAULT_PLACE_BOUND).unwrap()), f);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn round_trip_char_two(f in ratfn_over_places(2)) {
        prop_assert_eq!(recompose(&frob_decompose(&f, 3).unwrap()), f);
    }

    #[test]
    fn round_trip_char_three(f in ratfn_over_places(3)) {
        prop_assert_eq!(recompose(&frob_decompose(&f, 3).unwrap()), f);
    }

    /// Coordinates are unique: decomposing a recomposed vector returns it.
    #[test]
    fn coordinates_are_unique(d in decomposition(2)) {
        prop_assert_eq!(frob_decompose(&recompose(&d), 2).unwrap(), d);
    }

    #[test]
    fn coordinates_are_unique_char_three(d in decomposition(3)) {
        prop_assert_eq!(frob_decompose(&recompose(&d), 2).unwrap(), d);
    }

    #[test]
    fn pth_power_index_is_the_frobenius_image(b in basis_index(3)) {
        let q = index_pth_power(&b);
        prop_assert!(Decomposition::from_terms(3, [(q.clone(), 1)]).is_ok());
        prop_assert_eq!(q.element(3), b.element(3).frobenius());
    }

    /// The coordinates of g^p are those of g moved one level up.
    #[test]
    fn frobenius_shifts_coordinates(g in ratfn_over_places(2)) {
        let d = frob_decompose(&g, 3).unwrap();
        let shifted = Decomposition::from_terms(2, d.terms().iter().map(|(b, &c)| (index_pth_power(b), c))).unwrap();
        prop_assert_eq!(frob_decompose(&g.frobenius(), 3).unwrap(), shifted);
    }

    #[test]
    fn kphi_round_trip(f in ratfn_over_places(3)) {
        let k = kphi_decompose(&f, 3).unwrap();
        prop_assert_eq!(k.recompose(3).unwrap(), f.clone());
        prop_assert!(k.parts.keys().all(|b| b.nu() == 0 && *b != BasisIndex::One));
        prop_assert!(k.parts.values().all(|a| !a.is_zero()));
    }

    /// Distinct functions have distinct F_p[phi] decompositions.
    #[test]
    fn kphi_separates(f in ratfn_over_places(2), g in ratfn_over_places(2)) {
        let (kf, kg) = (kphi_decompose(&f, 3).unwrap(), kphi_decompose(&g, 3).unwrap());
        prop_assert_eq!(kf == kg, f == g);
    }
}
