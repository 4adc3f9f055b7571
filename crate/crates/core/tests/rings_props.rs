//! Numerical monoids, integer-valued polynomials and quadratic orders.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use proptest::prelude::*;

use strong_atoms::ivpoly::{divides_in_intz, fixed_divisor, is_integer_valued, quotient_in_intz};
use strong_atoms::krull::{classify_scenario, Bounds, KrullSpec, Multiplicity};
use strong_atoms::nummon::{nm_atoms, nm_factorizations, nm_witness_non_absirred, NumericalMonoid};
use strong_atoms::quadratic::{
    quad_brute_absirred, quad_factorizations, quad_is_prime_witness, PrimeReport, DEFAULT_NODE_BUDGET,
};
use strong_atoms::zsm::ClassSet;
use strong_atoms::{Group, Int, QuadInt, QuadRing, RatPoly};

#[test]
fn interval_monoid_witnesses_appear_among_factorizations() {
    for n in 2..=8 {
        let m = NumericalMonoid::interval(n).unwrap();
        for a in nm_atoms(&m) {
            let w = nm_witness_non_absirred(&m, a).unwrap();
            assert!(w.verify(&m));
            let fs = nm_factorizations(&m, w.element()).unwrap();
            assert!(fs.contains(&w.first) && fs.contains(&w.second), "M_{n}, atom {a}");
        }
    }
}

#[test]
fn m1_is_factorial() {
    let m = NumericalMonoid::interval(1).unwrap();
    assert_eq!(nm_atoms(&m), vec![1]);
    for x in 1..=30 {
        assert_eq!(nm_factorizations(&m, x).unwrap(), vec![vec![1; x as usize]]);
    }
}

/// Number of multisets of `atoms` summing to `x`.
fn representation_count(atoms: &[u64], x: u64) -> usize {
    let mut ways = vec![0usize; x as usize + 1];
    ways[0] = 1;
    for &a in atoms {
        for k in a as usize..=x as usize {
            ways[k] += ways[k - a as usize];
        }
    }
    ways[x as usize]
}

fn int_poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-9i64..=9, 1..=7)
        .prop_map(|c| RatPoly::from_ints(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// An integer-valued polynomial with a small denominator.
fn iv_poly() -> impl Strategy<Value = RatPoly> {
    (prop::collection::vec(-6i64..=6, 1..=4), prop::sample::select(vec![1i64, 2, 3, 4, 6]))
        .prop_map(|(c, k)| RatPoly::from_ints(&c).scale(&Ratio::new(Int::one(), Int::from(k))))
        .prop_filter("nonzero and integer-valued", |p| !p.is_zero() && is_integer_valued(p))
}

fn quad_ring() -> impl Strategy<Value = QuadRing> {
    prop::sample::select(vec![-1i64, -2, -5, -6, -10, -14]).prop_map(|d| QuadRing::new(Int::from(d)).unwrap())
}

fn quad_int(bound: i64) -> impl Strategy<Value = QuadInt> {
    (-bound..=bound, -bound..=bound).prop_map(|(a, b)| QuadInt::from_i64(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generated_monoid_factorizations_match_counting(gens in prop::collection::vec(1u64..=20, 1..=4), x in 0u64..=60) {
        let Ok(m) = NumericalMonoid::generated(gens) else { return Ok(()); };
        let atoms = nm_atoms(&m);
        let count = representation_count(&atoms, x);
        prop_assert_eq!(m.contains(x), count > 0);
        match nm_factorizations(&m, x) {
            Ok(fs) => {
                prop_assert_eq!(fs.len(), count);
                prop_assert!(fs.iter().all(|f| f.iter().sum::<u64>() == x));
            }
            Err(_) => prop_assert_eq!(count, 0),
        }
    }

    #[test]
    fn fixed_divisor_divides_every_value(g in int_poly()) {
        let fd = fixed_divisor(&g).unwrap();
        for k in -20i64..=20 {
            let v = g.eval_int(&Int::from(k));
            prop_assert!(v.numer().is_multiple_of(&fd));
        }
    }

    #[test]
    fn fixed_divisor_is_supermultiplicative(f in int_poly(), g in int_poly()) {
        let product = fixed_divisor(&f).unwrap() * fixed_divisor(&g).unwrap();
        prop_assert!(fixed_divisor(&(&f * &g)).unwrap().is_multiple_of(&product));
    }

    #[test]
    fn divisors_of_image_primitive_polynomials(d in iv_poly(), q in iv_poly()) {
        let f = &d * &q;
        if fixed_divisor(&f).unwrap().is_one() {
            prop_assert!(divides_in_intz(&d, &f).unwrap());
            prop_assert_eq!(quotient_in_intz(&d, &f).unwrap(), Some(q.clone()));
            prop_assert!(fixed_divisor(&d).unwrap().is_one());
            prop_assert!(fixed_divisor(&q).unwrap().is_one());
        }
    }

    #[test]
    fn norm_is_multiplicative(r in quad_ring(), x in quad_int(20), y in quad_int(20)) {
        prop_assert_eq!(r.norm(&r.mul(&x, &y)), r.norm(&x) * r.norm(&y));
        prop_assert!(r.norm(&x) >= Int::zero());
        prop_assert_eq!(r.norm(&x).is_zero(), x.is_zero());
        if *r.d() <= Int::from(-2) {
            prop_assert_eq!(r.units(), vec![QuadInt::int(-1), QuadInt::int(1)]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quadratic_factorizations_remultiply(r in quad_ring(), z in quad_int(6)) {
        prop_assume!(r.norm(&z) > Int::one());
        for f in quad_factorizations(&r, &z, DEFAULT_NODE_BUDGET).unwrap() {
            prop_assert_eq!(f.product(&r), z.clone());
            prop_assert!(r.is_unit(&f.unit));
        }
    }
}

/// The order `ℤ[√−14]` and the block monoid over `ℤ/2` with a prime zero
/// class and two divisors in the nonzero class exhibit the same three signs.
#[test]
fn two_torsion_row_matches_the_quadratic_order() {
    let g = Group::cyclic(2).unwrap();
    let cs = ClassSet::full(g).unwrap();
    let spec = KrullSpec::new(cs, vec![Multiplicity::Infinite, Multiplicity::Finite(2)]).unwrap();
    assert_eq!(classify_scenario(&spec, &Bounds::default()).unwrap().row_label(), "(+, +, +)");

    let r = QuadRing::new(Int::from(-14)).unwrap();
    let two = QuadInt::int(2);
    let root = QuadInt::from_i64(0, 1);
    assert!(!quad_brute_absirred(&r, &root, 2, DEFAULT_NODE_BUDGET).unwrap().holds);
    assert!(quad_brute_absirred(&r, &two, 3, DEFAULT_NODE_BUDGET).unwrap().holds);
    assert!(matches!(quad_is_prime_witness(&r, &two).unwrap(), PrimeReport::NonPrimeWitness { .. }));
    assert!(matches!(
        quad_is_prime_witness(&r, &QuadInt::int(11)).unwrap(),
        PrimeReport::PrimeByEuler { .. }
    ));
}
