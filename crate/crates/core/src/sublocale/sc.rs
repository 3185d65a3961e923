use std::collections::HashMap;

use crate::elemset::ElemSet;
use crate::lattice::{validate_frame, FiniteFrame, FinitePoset};

use super::{closed_sublocale, meet_closure, render_set, Sublocale, SublocaleError};

/// `S_c(L)`: all joins of closed sublocales, ordered by inclusion.
///
/// Indices follow the same size-then-bitmask order as
/// [`super::SublocaleLattice`], so `O` is index 0 and `L` is the last index.
/// [`ScFrame::frame`] is the same poset validated as an abstract frame.
#[derive(Clone, Debug)]
pub struct ScFrame<'a> {
    parent: &'a FiniteFrame,
    elements: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
    frame: FiniteFrame,
}

/// Builds `S_c(L)` as the join-closure of `{c(a) : a ∈ L}`.
///
/// The result is validated as a distributive lattice, its joins are checked
/// against joins in `S(L)`, and the induced meet [`ScFrame::sc_meet`] is
/// checked against the order-theoretic infimum.
pub fn sc_frame(parent: &FiniteFrame) -> Result<ScFrame<'_>, SublocaleError> {
    let closed: Vec<ElemSet> = (0..parent.size())
        .map(|a| closed_sublocale(parent, a).members())
        .collect();
    let mut elements: Vec<ElemSet> = Vec::new();
    for &c in &closed {
        if !elements.contains(&c) {
            elements.push(c);
        }
    }
    let mut i = 0;
    while i < elements.len() {
        for &c in &closed {
            let j = meet_closure(parent, elements[i].union(c));
            if !elements.contains(&j) {
                elements.push(j);
            }
        }
        i += 1;
    }
    elements.sort_by_key(|s| (s.len(), s.bits()));
    let index: HashMap<ElemSet, usize> =
        elements.iter().enumerate().map(|(i, &s)| (s, i)).collect();

    let labels = elements.iter().map(|&s| render_set(parent, s)).collect();
    let poset = FinitePoset::from_fn(
        elements.len(),
        |i, j| elements[i].is_subset(elements[j]),
        Some(labels),
    )
    .map_err(|e| SublocaleError::TheoremViolation(format!("S_c(L) is not a bounded poset: {e}")))?;
    let frame = validate_frame(poset)
        .map_err(|e| SublocaleError::TheoremViolation(format!("S_c(L) is not a frame: {e}")))?;

    let sc = ScFrame {
        parent,
        elements,
        index,
        frame,
    };
    for i in 0..sc.len() {
        for j in 0..sc.len() {
            let embedded = sc.index_of(meet_closure(parent, sc.elements[i].union(sc.elements[j])));
            if embedded != Some(sc.frame.join(i, j)) {
                return Err(SublocaleError::TheoremViolation(format!(
                    "join of {} and {} in S_c(L) differs from the join in S(L)",
                    render_set(parent, sc.elements[i]),
                    render_set(parent, sc.elements[j])
                )));
            }
            if sc.sc_meet(i, j) != sc.frame.meet(i, j) {
                return Err(SublocaleError::TheoremViolation(format!(
                    "induced meet of {} and {} is not the infimum",
                    render_set(parent, sc.elements[i]),
                    render_set(parent, sc.elements[j])
                )));
            }
        }
    }
    Ok(sc)
}

impl<'a> ScFrame<'a> {
    pub fn parent(&self) -> &'a FiniteFrame {
        self.parent
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ElemSet] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Sublocale<'a> {
        Sublocale::trusted(self.parent, self.elements[i])
    }

    pub fn index_of(&self, set: ElemSet) -> Option<usize> {
        self.index.get(&set).copied()
    }

    /// `S_c(L)` as an abstract frame: bottom `O`, top `L`.
    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    pub fn void(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.len() - 1
    }

    /// Join of two elements, computed in `S(L)`.
    pub fn sc_join(&self, s: usize, t: usize) -> usize {
        let j = meet_closure(self.parent, self.elements[s].union(self.elements[t]));
        self.index_of(j).expect("S_c(L) is join-closed")
    }

    /// Induced meet: the join of every element contained in `S ∩ T`.
    pub fn sc_meet(&self, s: usize, t: usize) -> usize {
        let inter = self.elements[s].intersection(self.elements[t]);
        let union = self
            .elements
            .iter()
            .filter(|e| e.is_subset(inter))
            .fold(ElemSet::EMPTY, |acc, &e| acc.union(e));
        self.index_of(meet_closure(self.parent, union))
            .expect("S_c(L) is join-closed")
    }

    /// First triple with `S ∧ (T ∨ U) ≠ (S ∧ T) ∨ (S ∧ U)`, using
    /// [`Self::sc_meet`] and [`Self::sc_join`].
    pub fn frame_law_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for s in 0..n {
            for t in 0..n {
                for u in 0..n {
                    let lhs = self.sc_meet(s, self.sc_join(t, u));
                    let rhs = self.sc_join(self.sc_meet(s, t), self.sc_meet(s, u));
                    if lhs != rhs {
                        return Some((s, t, u));
                    }
                }
            }
        }
        None
    }

    /// First triple with `S ∨ (T ∧ U) ≠ (S ∨ T) ∧ (S ∨ U)`.
    pub fn coframe_law_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for s in 0..n {
            for t in 0..n {
                for u in 0..n {
                    let lhs = self.sc_join(s, self.sc_meet(t, u));
                    let rhs = self.sc_meet(self.sc_join(s, t), self.sc_join(s, u));
                    if lhs != rhs {
                        return Some((s, t, u));
                    }
                }
            }
        }
        None
    }

    pub fn render(&self, i: usize) -> String {
        render_set(self.parent, self.elements[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::named;

    #[test]
    fn sc_of_three_chain_is_a_chain() {
        let c3 = named::chain(3);
        let sc = sc_frame(&c3).unwrap();
        let sets: Vec<Vec<usize>> = sc.elements().iter().map(|s| s.iter().collect()).collect();
        assert_eq!(sets, vec![vec![2], vec![1, 2], vec![0, 1, 2]]);
        assert!(sc.frame().poset().is_chain());
    }

    #[test]
    fn sc_of_boolean_square_is_boolean_square() {
        let b2 = named::boolean(2);
        let sc = sc_frame(&b2).unwrap();
        assert_eq!(sc.len(), 4);
        assert!(sc.frame().is_boolean());
        let ca = sc.index_of(closed_sublocale(&b2, 1).members()).unwrap();
        let cb = sc.index_of(closed_sublocale(&b2, 2).members()).unwrap();
        assert_eq!(sc.sc_join(ca, cb), sc.whole());
        assert_eq!(sc.sc_meet(ca, cb), sc.void());
    }

    #[test]
    fn sc_of_trivial_frame() {
        let c1 = named::chain(1);
        assert_eq!(sc_frame(&c1).unwrap().len(), 1);
    }

    #[test]
    fn sc_meet_neutral_and_idempotent() {
        for f in named::curated() {
            let sc = sc_frame(&f.frame).unwrap();
            for s in 0..sc.len() {
                assert_eq!(sc.sc_meet(s, sc.whole()), s);
                assert_eq!(sc.sc_meet(s, s), s);
            }
        }
    }

    #[test]
    fn sc_frame_law_on_curated_frames() {
        for f in named::curated() {
            let sc = sc_frame(&f.frame).unwrap();
            assert_eq!(sc.frame_law_violation(), None, "{}", f.name);
            assert_eq!(sc.coframe_law_violation(), None, "{}", f.name);
            assert!(sc.index_of(Sublocale::void(&f.frame).members()) == Some(0));
        }
    }
}
