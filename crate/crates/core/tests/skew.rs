mod common;

use common::*;
use ore_core::skew::{gcrd, lclm, left_divmod, right_divmod, RightDivision, SkewPolynomial};
use ore_core::{Degree, Field, FieldElement};
use proptest::prelude::*;

fn f4() -> Field {
    fq(2, 2)
}

fn check_degrees(r: &SkewPolynomial, s: &SkewPolynomial) -> Result<(), TestCaseError> {
    let prod = r.mul(s).unwrap();
    prop_assert_eq!(prod.degree(), r.degree() + s.degree());
    let sum = r.add(s).unwrap();
    let max = r.degree().max(s.degree());
    prop_assert!(sum.degree() <= max);
    if r.degree() != s.degree() {
        prop_assert_eq!(sum.degree(), max);
    }
    Ok(())
}

fn check_left_division(a: &SkewPolynomial, b: &SkewPolynomial, delta: &SkewPolynomial) -> Result<(), TestCaseError> {
    let (q, r) = left_divmod(a, b).unwrap();
    prop_assert_eq!(q.mul(b).unwrap().add(&r).unwrap(), a.clone());
    prop_assert!(r.degree() < b.degree());
    // any other quotient leaves a remainder of degree at least deg b
    if !delta.is_zero() {
        let q2 = q.add(delta).unwrap();
        let r2 = a.sub(&q2.mul(b).unwrap()).unwrap();
        prop_assert!(r2.degree() >= b.degree());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn degrees_f4(r in nonzero_skew(&f4(), 5), s in nonzero_skew(&f4(), 5)) {
        check_degrees(&r, &s)?;
    }

    #[test]
    fn degrees_ratfn(r in nonzero_skew(&ratfn(3), 4), s in nonzero_skew(&ratfn(3), 4)) {
        check_degrees(&r, &s)?;
    }

    #[test]
    fn degrees_laurent(r in nonzero_skew(&laurent(2), 4), s in nonzero_skew(&laurent(2), 4)) {
        check_degrees(&r, &s)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn left_division_unique_f9(a in skew(&fq(3, 2), 6), b in nonzero_skew(&fq(3, 2), 3), d in skew(&fq(3, 2), 3)) {
        check_left_division(&a, &b, &d)?;
    }

    #[test]
    fn left_division_unique_f2t(a in skew(&ratfn(2), 5), b in nonzero_skew(&ratfn(2), 3), d in skew(&ratfn(2), 2)) {
        check_left_division(&a, &b, &d)?;
    }

    #[test]
    fn ring_laws_f8(a in skew(&fq(2, 3), 3), b in skew(&fq(2, 3), 3), c in skew(&fq(2, 3), 3)) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(b.add(&c).unwrap().mul(&a).unwrap(), b.mul(&a).unwrap().add(&c.mul(&a).unwrap()).unwrap());
    }

    #[test]
    fn ring_laws_f3t(a in skew(&ratfn(3), 2), b in skew(&ratfn(3), 2), c in skew(&ratfn(3), 2)) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn gcrd_lclm_degree_formula(r in nonzero_skew(&f4(), 3), s in nonzero_skew(&f4(), 3)) {
        let g = gcrd(&r, &s).unwrap();
        let m = lclm(&r, &s).unwrap();
        prop_assert!(g.is_monic() && m.is_monic());
        prop_assert!(left_divmod(&r, &g).unwrap().1.is_zero());
        prop_assert!(left_divmod(&s, &g).unwrap().1.is_zero());
        prop_assert!(left_divmod(&m, &r).unwrap().1.is_zero());
        prop_assert!(left_divmod(&m, &s).unwrap().1.is_zero());
        let dg = g.degree().finite().unwrap();
        let (dr, ds) = (r.degree().finite().unwrap(), s.degree().finite().unwrap());
        prop_assert_eq!(m.degree(), Degree::Finite(dr + ds - dg));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn right_division_over_perfect_fields(
        (a, b) in prop_oneof![
            (skew(&fq(2, 2), 6), nonzero_skew(&fq(2, 2), 4)),
            (skew(&fq(3, 2), 6), nonzero_skew(&fq(3, 2), 4)),
            (skew(&fq(2, 3), 6), nonzero_skew(&fq(2, 3), 4)),
        ]
    ) {
        match right_divmod(&a, &b).unwrap() {
            RightDivision::Quotient { q, r } => {
                prop_assert_eq!(b.mul(&q).unwrap().add(&r).unwrap(), a);
                prop_assert!(r.degree() < b.degree());
            }
            RightDivision::PthRootObstruction(x) => prop_assert!(false, "obstruction at {}", x),
        }
    }
}

/// Multiplication is composition of the additive maps, checked on every element.
#[test]
fn multiplication_is_composition() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    for field in [fq(2, 2), fq(2, 3), fq(2, 4), fq(3, 2), fq(3, 3), fq(3, 4), fq(5, 2)] {
        let xs = all(&field);
        for _ in 0..10 {
            let random = |rng: &mut rand_chacha::ChaCha8Rng| {
                let c = (0..4).map(|_| FieldElement::random(&field, rng, 0)).collect();
                SkewPolynomial::new(&field, c).unwrap()
            };
            let (r, s) = (random(&mut rng), random(&mut rng));
            let rs = r.mul(&s).unwrap();
            for x in &xs {
                assert_eq!(rs.apply(x).unwrap(), r.apply(&s.apply(x).unwrap()).unwrap());
            }
        }
    }
}

/// No monic left multiple of both inputs has degree below the lclm.
#[test]
fn lclm_is_minimal_by_search() {
    use rand::SeedableRng;
    let f = f4();
    let xs = all(&f);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let random = |rng: &mut rand_chacha::ChaCha8Rng| loop {
            let c = (0..3).map(|_| FieldElement::random(&f, rng, 0)).collect();
            let s = SkewPolynomial::new(&f, c).unwrap();
            if !s.is_zero() {
                return s;
            }
        };
        let (r, s) = (random(&mut rng), random(&mut rng));
        let m = lclm(&r, &s).unwrap();
        let target = m.degree().finite().unwrap();
        let dr = r.degree().finite().unwrap();
        // cofactors u of degree < target - deg r, all coefficients enumerated
        let len = target - dr;
        let mut digits = vec![0usize; len];
        loop {
            let u = SkewPolynomial::new(&f, digits.iter().map(|&i| xs[i].clone()).collect()).unwrap();
            if !u.is_zero() {
                let ur = u.mul(&r).unwrap();
                assert!(!left_divmod(&ur, &s).unwrap().1.is_zero(), "{ur} is a smaller common multiple than {m}");
            }
            let mut k = 0;
            while k < len {
                digits[k] += 1;
                if digits[k] < xs.len() {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == len {
                break;
            }
        }
    }
}
