//! Sublocales of a finite frame as element subsets: the coframe `S(L)`,
//! closed and open sublocales, supplements, and the frame `S_c(L)` of joins
//! of closed sublocales.

mod identities;
mod lattice;
mod sc;

use std::fmt;

use crate::elemset::ElemSet;
use crate::lattice::{Elem, FiniteFrame};

pub use identities::{closed_open_identities_check, IdentityReport};
pub use lattice::{
    all_sublocales, booleanization_of_s_op, brute_force_sublocales, supplement, SublocaleLattice,
};
pub use sc::{sc_frame, ScFrame};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SublocaleError {
    #[error("not a sublocale: {0}")]
    NotASublocale(String),
    #[error("sublocales belong to different frames")]
    MixedParents,
    #[error("carrier of {size} elements exceeds the sublocale enumeration budget of {limit}")]
    BudgetExceeded { size: usize, limit: usize },
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

/// Outcome of [`is_sublocale`], naming the first violated condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SublocaleVerdict {
    Valid,
    /// The top element (empty meet) is missing.
    MissingTop,
    /// `a ∧ b` is missing although `a` and `b` are members.
    NotMeetClosed {
        a: Elem,
        b: Elem,
    },
    /// `a → s` is missing although `s` is a member.
    NotImplicationClosed {
        a: Elem,
        s: Elem,
    },
}

impl SublocaleVerdict {
    pub fn is_valid(self) -> bool {
        self == SublocaleVerdict::Valid
    }

    pub fn describe(self, frame: &FiniteFrame) -> String {
        match self {
            SublocaleVerdict::Valid => "valid".into(),
            SublocaleVerdict::MissingTop => format!("missing top {}", frame.label(frame.top())),
            SublocaleVerdict::NotMeetClosed { a, b } => format!(
                "{} ∧ {} = {} missing",
                frame.label(a),
                frame.label(b),
                frame.label(frame.meet(a, b))
            ),
            SublocaleVerdict::NotImplicationClosed { a, s } => format!(
                "{} → {} = {} missing",
                frame.label(a),
                frame.label(s),
                frame.label(frame.heyting(a, s))
            ),
        }
    }
}

/// Checks the three sublocale conditions on `members`, reporting the first
/// failure in lexicographic order.
pub fn is_sublocale(frame: &FiniteFrame, members: ElemSet) -> SublocaleVerdict {
    if !members.contains(frame.top()) {
        return SublocaleVerdict::MissingTop;
    }
    for a in members {
        for b in members {
            if !members.contains(frame.meet(a, b)) {
                return SublocaleVerdict::NotMeetClosed { a, b };
            }
        }
    }
    for a in 0..frame.size() {
        for s in members {
            if !members.contains(frame.heyting(a, s)) {
                return SublocaleVerdict::NotImplicationClosed { a, s };
            }
        }
    }
    SublocaleVerdict::Valid
}

/// All meets of subsets of `set`, the empty meet included.
pub fn meet_closure(frame: &FiniteFrame, set: ElemSet) -> ElemSet {
    let mut closed = set.with(frame.top());
    loop {
        let mut next = closed;
        for a in closed {
            for b in closed.iter().filter(|&b| b > a) {
                next.insert(frame.meet(a, b));
            }
        }
        if next == closed {
            return closed;
        }
        closed = next;
    }
}

/// The least sublocale containing `set`.
pub fn sublocale_closure(frame: &FiniteFrame, set: ElemSet) -> ElemSet {
    let mut closed = meet_closure(frame, set);
    loop {
        let mut next = closed;
        for s in closed {
            for a in 0..frame.size() {
                next.insert(frame.heyting(a, s));
            }
        }
        let next = meet_closure(frame, next);
        if next == closed {
            return closed;
        }
        closed = next;
    }
}

/// A sublocale of a finite frame, stored as its member set.
#[derive(Clone, Copy)]
pub struct Sublocale<'a> {
    frame: &'a FiniteFrame,
    members: ElemSet,
}

impl<'a> Sublocale<'a> {
    pub fn new(frame: &'a FiniteFrame, members: ElemSet) -> Result<Self, SublocaleError> {
        match is_sublocale(frame, members) {
            SublocaleVerdict::Valid => Ok(Sublocale { frame, members }),
            v => Err(SublocaleError::NotASublocale(v.describe(frame))),
        }
    }

    pub(crate) fn trusted(frame: &'a FiniteFrame, members: ElemSet) -> Self {
        debug_assert!(is_sublocale(frame, members).is_valid());
        Sublocale { frame, members }
    }

    /// `O = {1}`, the least sublocale.
    pub fn void(frame: &'a FiniteFrame) -> Self {
        Sublocale::trusted(frame, ElemSet::singleton(frame.top()))
    }

    /// The whole frame, the greatest sublocale.
    pub fn whole(frame: &'a FiniteFrame) -> Self {
        Sublocale::trusted(frame, frame.carrier())
    }

    pub fn frame(&self) -> &'a FiniteFrame {
        self.frame
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn is_void(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        self.members != self.frame.carrier()
    }

    /// A sublocale is dense when it contains the bottom element.
    pub fn is_dense(&self) -> bool {
        self.members.contains(self.frame.bottom())
    }

    pub fn is_subset(&self, other: &Sublocale<'_>) -> bool {
        self.members.is_subset(other.members)
    }

    pub fn same_parent(&self, other: &Sublocale<'_>) -> bool {
        std::ptr::eq(self.frame, other.frame) || self.frame == other.frame
    }

    /// Meet in `S(L)`: intersection.
    pub fn meet(&self, other: &Sublocale<'_>) -> Result<Sublocale<'a>, SublocaleError> {
        if !self.same_parent(other) {
            return Err(SublocaleError::MixedParents);
        }
        Ok(Sublocale::trusted(
            self.frame,
            self.members.intersection(other.members),
        ))
    }

    /// Binary join in `S(L)`.
    pub fn join(&self, other: &Sublocale<'_>) -> Result<Sublocale<'a>, SublocaleError> {
        if !self.same_parent(other) {
            return Err(SublocaleError::MixedParents);
        }
        let union = self.members.union(other.members);
        Ok(Sublocale::trusted(
            self.frame,
            meet_closure(self.frame, union),
        ))
    }

    /// Members rendered with element labels, e.g. `{m,1}`.
    pub fn render(&self) -> String {
        render_set(self.frame, self.members)
    }
}

impl PartialEq for Sublocale<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.members == other.members
    }
}

impl Eq for Sublocale<'_> {}

impl fmt::Debug for Sublocale<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sublocale{}", self.render())
    }
}

pub fn render_set(frame: &FiniteFrame, set: ElemSet) -> String {
    let items: Vec<&str> = set.iter().map(|a| frame.label(a)).collect();
    format!("{{{}}}", items.join(","))
}

/// `c(a) = ↑a`
pub fn closed_sublocale(frame: &FiniteFrame, a: Elem) -> Sublocale<'_> {
    Sublocale::trusted(frame, frame.poset().up_set(a))
}

/// `o(a) = {a → b : b ∈ L}`
pub fn open_sublocale(frame: &FiniteFrame, a: Elem) -> Sublocale<'_> {
    Sublocale::trusted(
        frame,
        (0..frame.size()).map(|b| frame.heyting(a, b)).collect(),
    )
}

/// `⋁ S_i = {⋀ M : M ⊆ ⋃ S_i}`; the empty family gives `O`.
pub fn sublocale_join<'a>(
    frame: &'a FiniteFrame,
    family: &[Sublocale<'_>],
) -> Result<Sublocale<'a>, SublocaleError> {
    let mut union = ElemSet::EMPTY;
    for s in family {
        if !(std::ptr::eq(s.frame, frame) || s.frame == frame) {
            return Err(SublocaleError::MixedParents);
        }
        union = union.union(s.members);
    }
    Ok(Sublocale::trusted(frame, meet_closure(frame, union)))
}

/// First `a` for which `c(a)` and `o(a)` are not complements in `S(L)`,
/// i.e. `c(a) ∩ o(a) ≠ O` or `c(a) ∨ o(a) ≠ L`.
pub fn complement_property_violation(frame: &FiniteFrame) -> Option<Elem> {
    let void = ElemSet::singleton(frame.top());
    (0..frame.size()).find(|&a| {
        let c = closed_sublocale(frame, a).members();
        let o = open_sublocale(frame, a).members();
        c.intersection(o) != void || meet_closure(frame, c.union(o)) != frame.carrier()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::named;

    fn set(xs: &[usize]) -> ElemSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn sublocale_verdicts_on_three_chain() {
        let c3 = named::chain(3);
        assert!(is_sublocale(&c3, set(&[2])).is_valid());
        assert!(is_sublocale(&c3, set(&[0, 2])).is_valid());
        assert_eq!(
            is_sublocale(&c3, set(&[0, 1])),
            SublocaleVerdict::MissingTop
        );
        // {m,1} is c(m); {0,m,1} is L
        assert!(is_sublocale(&c3, set(&[1, 2])).is_valid());
    }

    #[test]
    fn implication_failure_is_witnessed() {
        // {a,1} is c(a); {0,1} misses a → 0 = b.
        let b2 = named::boolean(2);
        assert!(is_sublocale(&b2, set(&[1, 3])).is_valid());
        assert_eq!(
            is_sublocale(&b2, set(&[0, 3])),
            SublocaleVerdict::NotImplicationClosed { a: 1, s: 0 }
        );
        // {a,b,1} misses a ∧ b = 0
        assert_eq!(
            is_sublocale(&b2, set(&[1, 2, 3])),
            SublocaleVerdict::NotMeetClosed { a: 1, b: 2 }
        );
    }

    #[test]
    fn closed_and_open_of_the_middle_element() {
        let c3 = named::chain(3);
        assert_eq!(closed_sublocale(&c3, 1).members(), set(&[1, 2]));
        assert_eq!(open_sublocale(&c3, 1).members(), set(&[0, 2]));
    }

    #[test]
    fn closed_and_open_of_bottom_and_top() {
        for f in named::curated() {
            let frame = &f.frame;
            let (bot, top) = (frame.bottom(), frame.top());
            assert_eq!(closed_sublocale(frame, bot), Sublocale::whole(frame));
            assert_eq!(open_sublocale(frame, bot), Sublocale::void(frame));
            assert_eq!(closed_sublocale(frame, top), Sublocale::void(frame));
            assert_eq!(open_sublocale(frame, top), Sublocale::whole(frame));
        }
    }

    #[test]
    fn closed_and_open_are_complements() {
        for f in named::curated() {
            let frame = &f.frame;
            for a in 0..frame.size() {
                let (c, o) = (closed_sublocale(frame, a), open_sublocale(frame, a));
                assert!(Sublocale::new(frame, c.members()).is_ok());
                assert!(Sublocale::new(frame, o.members()).is_ok());
                assert_eq!(c.meet(&o).unwrap(), Sublocale::void(frame), "{}", f.name);
                assert_eq!(c.join(&o).unwrap(), Sublocale::whole(frame), "{}", f.name);
            }
        }
    }

    #[test]
    fn joins_of_named_sublocales() {
        let b2 = named::boolean(2);
        let j = sublocale_join(&b2, &[closed_sublocale(&b2, 1), closed_sublocale(&b2, 2)]).unwrap();
        assert_eq!(j, closed_sublocale(&b2, 0));
        assert_eq!(j, Sublocale::whole(&b2));

        let c3 = named::chain(3);
        let s = closed_sublocale(&c3, 1);
        assert_eq!(s.join(&Sublocale::void(&c3)).unwrap(), s);
        assert_eq!(
            s.join(&open_sublocale(&c3, 1)).unwrap(),
            Sublocale::whole(&c3)
        );
        assert_eq!(sublocale_join(&c3, &[]).unwrap(), Sublocale::void(&c3));
    }

    #[test]
    fn mixed_parents_rejected() {
        let c3 = named::chain(3);
        let b2 = named::boolean(2);
        let e = sublocale_join(&c3, &[Sublocale::void(&b2)]).unwrap_err();
        assert_eq!(e, SublocaleError::MixedParents);
        assert!(Sublocale::void(&c3).meet(&Sublocale::void(&b2)).is_err());
    }

    #[test]
    fn sublocale_closure_is_least() {
        let b2 = named::boolean(2);
        // the least sublocale containing 0 must also contain a→0 = b and b→0 = a
        assert_eq!(sublocale_closure(&b2, set(&[0])), b2.carrier());
        let c3 = named::chain(3);
        assert_eq!(sublocale_closure(&c3, set(&[0])), set(&[0, 2]));
    }

    #[test]
    fn closed_embedding_is_antitone() {
        for f in named::curated() {
            let frame = &f.frame;
            for a in 0..frame.size() {
                for b in 0..frame.size() {
                    let c_a = closed_sublocale(frame, a);
                    let c_b = closed_sublocale(frame, b);
                    assert_eq!(frame.le(a, b), c_b.is_subset(&c_a));
                }
            }
        }
    }

    #[test]
    fn open_density_matches_pseudocomplement() {
        for f in named::curated() {
            let frame = &f.frame;
            for a in 0..frame.size() {
                assert_eq!(
                    open_sublocale(frame, a).is_dense(),
                    frame.is_dense(a),
                    "{}",
                    f.name
                );
            }
        }
    }
}
