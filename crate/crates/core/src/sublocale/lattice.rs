use std::collections::HashMap;

use crate::config::Budget;
use crate::elemset::ElemSet;
use crate::lattice::{FiniteFrame, FinitePoset, LatticeError};

use super::{is_sublocale, meet_closure, sublocale_closure, Sublocale, SublocaleError};

/// The coframe `S(L)` of all sublocales, ordered by inclusion.
///
/// Members are sorted by size and then by bitmask, so indices form a linear
/// extension of inclusion: `O` is first and `L` is last.
#[derive(Clone, Debug)]
pub struct SublocaleLattice<'a> {
    frame: &'a FiniteFrame,
    all: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
}

/// Enumerates `S(L)`.
///
/// The scan walks closed sets of the sublocale closure operator in lectic
/// order (Ganter's NextClosure), so only sets that already contain the top
/// and are closed under meets and implications are ever visited. Each
/// visited set is re-checked with [`is_sublocale`].
pub fn all_sublocales<'a>(
    frame: &'a FiniteFrame,
    budget: &Budget,
) -> Result<SublocaleLattice<'a>, SublocaleError> {
    let n = frame.size();
    if n > budget.max_sublocale_carrier {
        return Err(SublocaleError::BudgetExceeded {
            size: n,
            limit: budget.max_sublocale_carrier,
        });
    }
    let close = |s: ElemSet| sublocale_closure(frame, s);
    let mut all = Vec::new();
    let mut current = close(ElemSet::EMPTY);
    loop {
        if !is_sublocale(frame, current).is_valid() {
            return Err(SublocaleError::TheoremViolation(format!(
                "closure produced a non-sublocale {}",
                super::render_set(frame, current)
            )));
        }
        all.push(current);
        let next = (0..n)
            .rev()
            .filter(|&i| !current.contains(i))
            .find_map(|i| {
                let candidate = close(current.below_index(i).with(i));
                (candidate.below_index(i) == current.below_index(i)).then_some(candidate)
            });
        match next {
            Some(c) => current = c,
            None => break,
        }
    }
    Ok(SublocaleLattice::from_sets(frame, all))
}

/// Enumerates `S(L)` by testing every subset that contains the top. Only
/// for small carriers; used as an independent check of [`all_sublocales`].
pub fn brute_force_sublocales(frame: &FiniteFrame) -> Vec<ElemSet> {
    let n = frame.size();
    assert!(
        n <= 20,
        "brute-force sublocale scan is limited to 20 elements"
    );
    let top = ElemSet::singleton(frame.top());
    let mut out: Vec<ElemSet> = (0u64..(1u64 << (n - 1)))
        .map(|bits| ElemSet::from_bits(bits).union(top))
        .filter(|&s| is_sublocale(frame, s).is_valid())
        .collect();
    out.sort_by_key(|s| (s.len(), s.bits()));
    out
}

impl<'a> SublocaleLattice<'a> {
    fn from_sets(frame: &'a FiniteFrame, mut all: Vec<ElemSet>) -> Self {
        all.sort_by_key(|s| (s.len(), s.bits()));
        let index = all.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        SublocaleLattice { frame, all, index }
    }

    pub fn frame(&self) -> &'a FiniteFrame {
        self.frame
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn sets(&self) -> &[ElemSet] {
        &self.all
    }

    pub fn get(&self, i: usize) -> Sublocale<'a> {
        Sublocale::trusted(self.frame, self.all[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = Sublocale<'a>> + '_ {
        self.all.iter().map(|&s| Sublocale::trusted(self.frame, s))
    }

    pub fn index_of(&self, set: ElemSet) -> Option<usize> {
        self.index.get(&set).copied()
    }

    pub fn join_sets(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        meet_closure(self.frame, a.union(b))
    }

    /// `S^#`: the intersection of all `T` with `S ∨ T = L`.
    pub fn supplement_set(&self, s: ElemSet) -> ElemSet {
        let whole = self.frame.carrier();
        self.all
            .iter()
            .filter(|&&t| self.join_sets(s, t) == whole)
            .fold(whole, |acc, &t| acc.intersection(t))
    }

    /// First triple with `S ∨ (T ∩ U) ≠ (S ∨ T) ∩ (S ∨ U)`.
    pub fn coframe_law_violation(&self) -> Option<(ElemSet, ElemSet, ElemSet)> {
        let joins: Vec<Vec<ElemSet>> = self
            .all
            .iter()
            .map(|&s| self.all.iter().map(|&t| self.join_sets(s, t)).collect())
            .collect();
        for (i, &s) in self.all.iter().enumerate() {
            for (j, &t) in self.all.iter().enumerate() {
                for (k, &u) in self.all.iter().enumerate() {
                    let lhs = self.join_sets(s, t.intersection(u));
                    let rhs = joins[i][j].intersection(joins[i][k]);
                    if lhs != rhs {
                        return Some((s, t, u));
                    }
                }
            }
        }
        None
    }

    /// Inclusion order as a poset, labeled by member sets.
    pub fn to_poset(&self) -> Result<FinitePoset, LatticeError> {
        let labels = self
            .all
            .iter()
            .map(|&s| super::render_set(self.frame, s))
            .collect();
        FinitePoset::from_fn(
            self.len(),
            |i, j| self.all[i].is_subset(self.all[j]),
            Some(labels),
        )
    }
}

/// `S^#` of a single sublocale; enumerates `S(L)` under the budget.
pub fn supplement<'a>(s: &Sublocale<'a>, budget: &Budget) -> Result<Sublocale<'a>, SublocaleError> {
    let lattice = all_sublocales(s.frame(), budget)?;
    let sup = lattice.supplement_set(s.members());
    if lattice.join_sets(s.members(), sup) != s.frame().carrier() {
        return Err(SublocaleError::TheoremViolation(format!(
            "S ∨ S# ≠ L for S = {}",
            s.render()
        )));
    }
    Ok(Sublocale::trusted(s.frame(), sup))
}

/// Fixed points of `S ↦ S##`: the Booleanization of the frame `S(L)^op`.
pub fn booleanization_of_s_op<'a>(
    frame: &'a FiniteFrame,
    budget: &Budget,
) -> Result<Vec<Sublocale<'a>>, SublocaleError> {
    let lattice = all_sublocales(frame, budget)?;
    Ok(lattice
        .sets()
        .iter()
        .filter(|&&s| lattice.supplement_set(lattice.supplement_set(s)) == s)
        .map(|&s| Sublocale::trusted(frame, s))
        .collect())
}
