use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pointfree::campaign::corpus::{labeled_distributive_relations, labeled_frame};
use pointfree::lattice::{parse_lattice, write_lattice, FiniteFrame};
use pointfree::sublocale::{all_sublocales, meet_closure, sc_frame};
use pointfree::topospace::{random_space, space_proposition_check};
use pointfree::{Budget, ElemSet};

fn labeled() -> impl Strategy<Value = FiniteFrame> {
    (1usize..=5).prop_flat_map(|n| {
        let rels = labeled_distributive_relations(n);
        (0..rels.len()).prop_map(move |i| labeled_frame(n, &rels[i]))
    })
}

fn subset(n: usize) -> impl Strategy<Value = ElemSet> {
    (0u64..(1 << n)).prop_map(ElemSet::from_bits)
}

fn frame_and_subset() -> impl Strategy<Value = (FiniteFrame, ElemSet)> {
    labeled().prop_flat_map(|f| {
        let n = f.size();
        (Just(f), subset(n))
    })
}

proptest! {
    #[test]
    fn heyting_adjunction_and_distributivity(f in labeled()) {
        let n = f.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    prop_assert_eq!(f.le(f.meet(c, a), b), f.le(c, f.heyting(a, b)));
                    prop_assert_eq!(f.meet(a, f.join(b, c)), f.join(f.meet(a, b), f.meet(a, c)));
                }
            }
            let s = f.pseudocomplement(a);
            prop_assert!(f.le(a, f.pseudocomplement(s)));
            prop_assert_eq!(f.pseudocomplement(f.pseudocomplement(s)), s);
        }
    }

    #[test]
    fn text_format_round_trips(f in labeled()) {
        let text = write_lattice(f.poset());
        let back = parse_lattice(&text, &Budget::default()).unwrap();
        prop_assert_eq!(&back, f.poset());
    }

    #[test]
    fn meet_closure_is_a_closure((f, s) in frame_and_subset()) {
        let c = meet_closure(&f, s);
        prop_assert!(s.is_subset(c));
        prop_assert_eq!(meet_closure(&f, c), c);
        prop_assert!(c.contains(f.top()));
    }

    #[test]
    fn sublocale_count_and_supplements(f in labeled()) {
        let lattice = all_sublocales(&f, &Budget::default()).unwrap();
        prop_assert_eq!(lattice.len(), 1 << f.primes().len());
        for &s in lattice.sets() {
            let sup = lattice.supplement_set(s);
            prop_assert_eq!(lattice.join_sets(s, sup), f.carrier());
            prop_assert!(lattice.sets().contains(&sup));
        }
    }

    #[test]
    fn sc_contains_closed_and_is_join_closed(f in labeled()) {
        let sc = sc_frame(&f).unwrap();
        for i in 0..sc.len() {
            for j in 0..sc.len() {
                let k = sc.sc_join(i, j);
                prop_assert!(sc.elements()[i].is_subset(sc.elements()[k]));
                let m = sc.sc_meet(i, j);
                prop_assert!(sc.elements()[m].is_subset(sc.elements()[i].intersection(sc.elements()[j])));
            }
        }
        prop_assert!(sc.frame_law_violation().is_none());
    }

    #[test]
    fn random_spaces_satisfy_the_proposition(seed in any::<u64>(), n in 1usize..=5, d in 0.0f64..0.6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let space = random_space(&mut rng, n, d);
        let all = space.full();
        for bits in 0u64..(1 << n) {
            let s = ElemSet::from_bits(bits);
            let c = space.closure(s);
            prop_assert!(s.is_subset(c));
            prop_assert_eq!(space.closure(c), c);
            prop_assert!(space.is_closed(c));
            prop_assert!(space.interior(s).is_subset(s));
            prop_assert_eq!(space.closure(all), all);
        }
        prop_assert!(space_proposition_check(&space, &Budget::default()).is_ok());
    }
}
