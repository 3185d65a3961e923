use crate::elemset::ElemSet;

use super::{Elem, FinitePoset, LatticeError};

/// A finite distributive lattice with precomputed meet, join and Heyting
/// implication tables.
///
/// For finite lattices distributivity is exactly the frame law, so every
/// value of this type is a frame (and a locale). Values are immutable once
/// validated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteFrame {
    poset: FinitePoset,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    heyting: Vec<Elem>,
}

/// Checks that `poset` is a distributive lattice and builds its tables.
///
/// Fails with [`LatticeError::NotALattice`] on the first pair (in
/// lexicographic order) lacking an infimum or supremum, and with
/// [`LatticeError::NotDistributive`] on the first triple violating
/// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
pub fn validate_frame(poset: FinitePoset) -> Result<FiniteFrame, LatticeError> {
    let n = poset.size();
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower = poset.down_set(a).intersection(poset.down_set(b));
            let upper = poset.up_set(a).intersection(poset.up_set(b));
            let inf = poset
                .maximum(lower)
                .ok_or_else(|| LatticeError::NotALattice {
                    a: poset.label(a).to_string(),
                    b: poset.label(b).to_string(),
                    missing: "infimum",
                })?;
            let sup = poset
                .minimum(upper)
                .ok_or_else(|| LatticeError::NotALattice {
                    a: poset.label(a).to_string(),
                    b: poset.label(b).to_string(),
                    missing: "supremum",
                })?;
            meet[a * n + b] = inf;
            join[a * n + b] = sup;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = meet[a * n + join[b * n + c]];
                let rhs = join[meet[a * n + b] * n + meet[a * n + c]];
                if lhs != rhs {
                    return Err(LatticeError::NotDistributive {
                        a: poset.label(a).to_string(),
                        b: poset.label(b).to_string(),
                        c: poset.label(c).to_string(),
                    });
                }
            }
        }
    }
    let mut heyting = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let admissible: ElemSet = (0..n).filter(|&x| poset.le(meet[a * n + x], b)).collect();
            // The admissible set is a down-set closed under joins in a
            // distributive lattice, so its maximum exists.
            heyting[a * n + b] =
                poset
                    .maximum(admissible)
                    .ok_or_else(|| LatticeError::NoImplication {
                        a: poset.label(a).to_string(),
                        b: poset.label(b).to_string(),
                    })?;
        }
    }
    Ok(FiniteFrame {
        poset,
        meet,
        join,
        heyting,
    })
}

impl FiniteFrame {
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn bottom(&self) -> Elem {
        0
    }

    pub fn top(&self) -> Elem {
        self.size() - 1
    }

    pub fn carrier(&self) -> ElemSet {
        self.poset.carrier()
    }

    pub fn le(&self, a: Elem, b: Elem) -> bool {
        self.poset.le(a, b)
    }

    pub fn label(&self, a: Elem) -> &str {
        self.poset.label(a)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size() + b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.size() + b]
    }

    /// `a → b`, the largest `x` with `a ∧ x ≤ b`.
    pub fn heyting(&self, a: Elem, b: Elem) -> Elem {
        self.heyting[a * self.size() + b]
    }

    /// `a* = a → 0`.
    pub fn pseudocomplement(&self, a: Elem) -> Elem {
        self.heyting(a, self.bottom())
    }

    /// `a` is dense when `a* = 0`.
    pub fn is_dense(&self, a: Elem) -> bool {
        self.pseudocomplement(a) == self.bottom()
    }

    /// `a** = a`.
    pub fn is_regular(&self, a: Elem) -> bool {
        self.pseudocomplement(self.pseudocomplement(a)) == a
    }

    /// Meet of a set; the empty meet is the top.
    pub fn meet_all(&self, s: ElemSet) -> Elem {
        s.iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    /// Join of a set; the empty join is the bottom.
    pub fn join_all(&self, s: ElemSet) -> Elem {
        s.iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    /// The complement of `a` if `a` has one.
    pub fn complement(&self, a: Elem) -> Option<Elem> {
        (0..self.size())
            .find(|&c| self.meet(a, c) == self.bottom() && self.join(a, c) == self.top())
    }

    /// Every element has a complement.
    pub fn is_boolean(&self) -> bool {
        (0..self.size()).all(|a| self.complement(a).is_some())
    }

    /// First element without a complement.
    pub fn uncomplemented(&self) -> Option<Elem> {
        (0..self.size()).find(|&a| self.complement(a).is_none())
    }

    /// First triple violating the dual distributive law
    /// `a ∨ (b ∧ c) = (a ∨ b) ∧ (a ∨ c)`.
    pub fn dual_distributivity_violation(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.join(a, self.meet(b, c)) != self.meet(self.join(a, b), self.join(a, c))
                    {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Meet-irreducible elements other than the top (the points of the locale).
    pub fn primes(&self) -> ElemSet {
        (0..self.size())
            .filter(|&p| {
                if p == self.top() {
                    return false;
                }
                let strictly_above = self.poset.up_set(p).difference(ElemSet::singleton(p));
                self.poset.minimum(strictly_above).is_some()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::named;

    /// `max{x : a ∧ x ≤ b}` by scanning, independent of the table builder.
    fn brute_heyting(f: &FiniteFrame, a: Elem, b: Elem) -> Elem {
        let candidates: Vec<Elem> = (0..f.size()).filter(|&x| f.le(f.meet(a, x), b)).collect();
        *candidates
            .iter()
            .find(|&&m| candidates.iter().all(|&x| f.le(x, m)))
            .unwrap()
    }

    #[test]
    fn chain_heyting_values() {
        let c3 = named::chain(3);
        // 3-chain 0 < m < 1: m → 0 = 0.
        assert_eq!(brute_heyting(&c3, 1, 0), 0);
        assert_eq!(c3.heyting(1, 0), 0);
        for b in 0..3 {
            assert_eq!(c3.heyting(2, b), b);
        }
        for a in 0..3 {
            for b in a..3 {
                assert_eq!(c3.heyting(a, b), 2);
            }
        }
    }

    #[test]
    fn boolean_square_meets_and_joins() {
        let b2 = named::boolean(2);
        let (a, b) = (1, 2);
        assert_eq!(b2.meet(a, b), 0);
        assert_eq!(b2.join(a, b), 3);
        assert_eq!(b2.pseudocomplement(a), b);
        assert_eq!(brute_heyting(&b2, a, 0), b);
        assert!(b2.is_boolean());
    }

    #[test]
    fn pseudocomplement_and_density() {
        let c3 = named::chain(3);
        assert_eq!(c3.pseudocomplement(1), 0);
        assert!(c3.is_dense(1));
        assert_eq!(c3.pseudocomplement(0), 2);
        assert!(!c3.is_dense(0));
        for f in [named::chain(1), named::chain(4), named::boolean(3)] {
            assert_eq!(f.pseudocomplement(f.bottom()), f.top());
        }
    }

    #[test]
    fn diamond_is_not_distributive() {
        let m3 =
            FinitePoset::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], None)
                .unwrap();
        match validate_frame(m3) {
            Err(LatticeError::NotDistributive { a, b, c }) => {
                assert_eq!((a.as_str(), b.as_str(), c.as_str()), ("1", "2", "3"));
            }
            other => panic!("expected NotDistributive, got {other:?}"),
        }
    }

    #[test]
    fn pentagon_is_not_distributive() {
        // N5: 0 < a < c < 1, 0 < b < 1
        let n5 =
            FinitePoset::from_pairs(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], None).unwrap();
        assert!(matches!(
            validate_frame(n5),
            Err(LatticeError::NotDistributive { .. })
        ));
    }

    #[test]
    fn missing_join_is_reported() {
        // 0 < a, b < c, d < 1 with a, b both below c and d: no least upper bound of a, b.
        let p = FinitePoset::from_pairs(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 5),
                (4, 5),
            ],
            None,
        )
        .unwrap();
        assert!(matches!(
            validate_frame(p),
            Err(LatticeError::NotALattice {
                missing: "supremum",
                ..
            })
        ));
    }

    #[test]
    fn heyting_matches_brute_force_on_named_frames() {
        for f in named::curated() {
            for a in 0..f.frame.size() {
                for b in 0..f.frame.size() {
                    assert_eq!(
                        f.frame.heyting(a, b),
                        brute_heyting(&f.frame, a, b),
                        "{}",
                        f.name
                    );
                }
            }
        }
    }

    #[test]
    fn primes_of_small_frames() {
        assert_eq!(named::chain(3).primes().len(), 2);
        assert_eq!(named::boolean(2).primes().len(), 2);
        assert_eq!(named::chain(1).primes().len(), 0);
    }
}
