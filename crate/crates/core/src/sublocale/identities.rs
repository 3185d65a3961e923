use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Budget;
use crate::elemset::ElemSet;
use crate::lattice::FiniteFrame;

use super::{closed_sublocale, meet_closure, open_sublocale, render_set};

/// Outcome of [`closed_open_identities_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub pairs_checked: usize,
    pub families_checked: usize,
    /// Whether every family of elements was checked (rather than a sample).
    pub exhaustive: bool,
    pub counterexample: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks the four closed/open identities
///
/// * `⋂ c(a_i) = c(⋁ a_i)`
/// * `c(a) ∨ c(b) = c(a ∧ b)`
/// * `⋁ o(a_i) = o(⋁ a_i)`
/// * `o(a) ∩ o(b) = o(a ∧ b)`
///
/// Binary identities are checked on all pairs. Family identities are
/// checked on every subset of `L` when `|L|` is within
/// `budget.exhaustive_identity_limit`, and otherwise on the empty family,
/// all singletons, and `budget.identity_samples` random families of arity
/// up to `budget.identity_family_arity` drawn from `seed`.
pub fn closed_open_identities_check(
    frame: &FiniteFrame,
    budget: &Budget,
    seed: u64,
) -> IdentityReport {
    let n = frame.size();
    let closed = |a| closed_sublocale(frame, a).members();
    let open = |a| open_sublocale(frame, a).members();
    let mut report = IdentityReport {
        pairs_checked: 0,
        families_checked: 0,
        exhaustive: n <= budget.exhaustive_identity_limit,
        counterexample: None,
    };

    for a in 0..n {
        for b in 0..n {
            report.pairs_checked += 1;
            let m = frame.meet(a, b);
            if meet_closure(frame, closed(a).union(closed(b))) != closed(m) {
                report.counterexample = Some(format!(
                    "c({a}) ∨ c({b}) ≠ c({a} ∧ {b})",
                    a = frame.label(a),
                    b = frame.label(b)
                ));
                return report;
            }
            if open(a).intersection(open(b)) != open(m) {
                report.counterexample = Some(format!(
                    "o({a}) ∩ o({b}) ≠ o({a} ∧ {b})",
                    a = frame.label(a),
                    b = frame.label(b)
                ));
                return report;
            }
        }
    }

    let check_family = |family: ElemSet| -> Option<String> {
        let join = frame.join_all(family);
        let inter = family
            .iter()
            .fold(frame.carrier(), |acc, a| acc.intersection(closed(a)));
        if inter != closed(join) {
            return Some(format!(
                "⋂ c(a_i) ≠ c(⋁ a_i) for family {}",
                render_set(frame, family)
            ));
        }
        let union = family
            .iter()
            .fold(ElemSet::EMPTY, |acc, a| acc.union(open(a)));
        if meet_closure(frame, union) != open(join) {
            return Some(format!(
                "⋁ o(a_i) ≠ o(⋁ a_i) for family {}",
                render_set(frame, family)
            ));
        }
        None
    };

    let families: Box<dyn Iterator<Item = ElemSet>> = if report.exhaustive {
        Box::new((0u64..(1u64 << n)).map(ElemSet::from_bits))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let arity = budget.identity_family_arity.max(1);
        let sampled: Vec<ElemSet> = (0..budget.identity_samples)
            .map(|_| {
                let k = rng.gen_range(2..=arity.max(2));
                (0..k).map(|_| rng.gen_range(0..n)).collect()
            })
            .collect();
        Box::new(
            std::iter::once(ElemSet::EMPTY)
                .chain((0..n).map(ElemSet::singleton))
                .chain(sampled),
        )
    };
    for family in families {
        report.families_checked += 1;
        if let Some(c) = check_family(family) {
            report.counterexample = Some(c);
            return report;
        }
    }
    report
}
