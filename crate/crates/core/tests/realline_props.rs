use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use pointfree::realline::{
    generator, lemma1_obstruction, lemma1_term, prop2_witness, ExtRat, KRealPair, RationalOpen,
};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn fin(n: i64, d: i64) -> ExtRat {
    ExtRat::Fin(q(n, d))
}

prop_compose! {
    fn open_set()(
        parts in prop::collection::vec((-300i64..300, 1i64..300, 1i64..40), 0..6),
        left_ray in any::<bool>(),
        right_ray in any::<bool>(),
    ) -> RationalOpen {
        let mut raw: Vec<(ExtRat, ExtRat)> = parts
            .into_iter()
            .map(|(start, len, den)| (fin(start, den), fin(start + len, den)))
            .collect();
        if left_ray {
            raw.push((ExtRat::NegInf, fin(-5, 1)));
        }
        if right_ray {
            raw.push((fin(5, 1), ExtRat::PosInf));
        }
        RationalOpen::normalize(raw).unwrap()
    }
}

fn regular_open() -> impl Strategy<Value = RationalOpen> {
    open_set().prop_map(|u| u.regularize())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-1200i64..1200, 1i64..60).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #[test]
    fn normalize_is_idempotent(u in open_set()) {
        let again = RationalOpen::normalize(u.components().to_vec()).unwrap();
        prop_assert_eq!(again, u);
    }

    #[test]
    fn double_pseudocomplement_laws(u in open_set()) {
        let star = u.pseudocomplement();
        prop_assert!(u.is_subset(&star.pseudocomplement()));
        prop_assert_eq!(star.pseudocomplement().pseudocomplement(), star);
    }

    #[test]
    fn regular_opens_form_a_boolean_algebra(a in regular_open(), b in regular_open()) {
        prop_assert!(a.is_regular());
        let join = a.union(&b).regularize();
        prop_assert!(join.is_regular());
        prop_assert!(a.is_subset(&join) && b.is_subset(&join));
        prop_assert!(a.intersect(&b).is_regular());
        prop_assert!(a.intersect(&a.pseudocomplement()).is_empty());
        prop_assert_eq!(a.union(&a.pseudocomplement()).regularize(), RationalOpen::reals());
    }

    #[test]
    fn membership_respects_set_operations(a in open_set(), b in open_set(), x in rational()) {
        prop_assert_eq!(a.union(&b).contains(&x), a.contains(&x) || b.contains(&x));
        prop_assert_eq!(a.intersect(&b).contains(&x), a.contains(&x) && b.contains(&x));
        prop_assert_eq!(a.complement().contains(&x), !a.contains(&x));
    }

    #[test]
    fn display_round_trips(u in open_set()) {
        let back: RationalOpen = u.to_string().parse().unwrap();
        prop_assert_eq!(back, u);
    }

    #[test]
    fn lemma_terms_antitone_and_above(u in regular_open(), n in 1u64..30) {
        let t = lemma1_term(&u, n).unwrap();
        let next = lemma1_term(&u, n + 1).unwrap();
        prop_assert!(next.is_subset(&t));
        prop_assert!(u.is_subset(&t));
        prop_assert!(t.contains(&BigRational::zero()));
    }

    #[test]
    fn obstruction_is_total_outside(u in regular_open(), x in rational()) {
        prop_assume!(!x.is_zero() && !u.contains(&x));
        let cert = lemma1_obstruction(&u, &x).unwrap();
        prop_assert!(cert.verify(&u));
    }

    #[test]
    fn witnesses_antitone_and_above(v in regular_open(), w in regular_open(), n in 1u64..25) {
        let u = v.intersect(&w);
        let pair = KRealPair::new(u.clone(), v.clone()).unwrap();
        let a = prop2_witness(&pair, n).unwrap();
        let b = prop2_witness(&pair, n + 1).unwrap();
        prop_assert!(b.le(&a));
        prop_assert!(u.is_subset(a.first()) && v.is_subset(a.second()));
        let (g1, g2) = generator(n);
        prop_assert!(g1.is_subset(a.first()) && g2.is_subset(a.second()));
    }
}
