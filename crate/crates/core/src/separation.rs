//! Decision procedures for subfitness, weak subfitness and symmetry, and
//! finite-instance checks of the theorems relating them to `S_c(L)`.
//!
//! Every witness is the lexicographically least one, so reports are
//! reproducible.

use std::fmt;

use crate::config::Budget;
use crate::elemset::ElemSet;
use crate::lattice::{Elem, FiniteFrame};
use crate::sublocale::{
    booleanization_of_s_op, open_sublocale, render_set, sc_frame, ScFrame, SublocaleError,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeparationError {
    #[error("equivalence violation: {0}")]
    EquivalenceViolation(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Sublocale(#[from] SublocaleError),
}

impl SeparationError {
    /// Whether the error signals that a proven statement failed on an
    /// instance (an implementation bug) rather than a resource limit.
    pub fn is_violation(&self) -> bool {
        match self {
            SeparationError::EquivalenceViolation(_) | SeparationError::TheoremViolation(_) => true,
            SeparationError::Sublocale(e) => matches!(e, SublocaleError::TheoremViolation(_)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Subfit,
    WeaklySubfit,
    Symmetric,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Subfit => "subfit",
            Axiom::WeaklySubfit => "weakly-subfit",
            Axiom::Symmetric => "symmetric",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
}

impl Verdict {
    pub fn from_holds(holds: bool) -> Self {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

/// What certifies a failed axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// A single element, e.g. `a ≠ 0` with no `c ≠ 1` such that `a ∨ c = 1`.
    Element(Elem),
    /// A pair `a ≰ b` admitting no separating `c`.
    Pair(Elem, Elem),
    /// A sublocale given by its members.
    Sublocale(ElemSet),
}

impl Witness {
    pub fn render(&self, frame: &FiniteFrame) -> String {
        match *self {
            Witness::Element(a) => frame.label(a).to_string(),
            Witness::Pair(a, b) => format!("({},{})", frame.label(a), frame.label(b)),
            Witness::Sublocale(s) => render_set(frame, s),
        }
    }
}

/// One sub-condition of a compound check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub name: &'static str,
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub axiom: Axiom,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Per-condition outcomes for compound checks; empty otherwise.
    pub conditions: Vec<ConditionOutcome>,
}

impl SeparationReport {
    fn simple(axiom: Axiom, witness: Option<Witness>) -> Self {
        SeparationReport {
            axiom,
            verdict: Verdict::from_holds(witness.is_none()),
            witness,
            conditions: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }
}

/// `a ≰ b ⟹ ∃c. a ∨ c = 1 ≠ b ∨ c`
pub fn is_subfit(frame: &FiniteFrame) -> SeparationReport {
    SeparationReport::simple(Axiom::Subfit, subfit_witness(frame))
}

fn subfit_witness(frame: &FiniteFrame) -> Option<Witness> {
    let n = frame.size();
    let top = frame.top();
    for a in 0..n {
        for b in (0..n).filter(|&b| !frame.le(a, b)) {
            let separated = (0..n).any(|c| frame.join(a, c) == top && frame.join(b, c) != top);
            if !separated {
                return Some(Witness::Pair(a, b));
            }
        }
    }
    None
}

/// `a ≠ 0 ⟹ ∃c ≠ 1. a ∨ c = 1`
pub fn is_weakly_subfit(frame: &FiniteFrame) -> SeparationReport {
    SeparationReport::simple(Axiom::WeaklySubfit, weakly_subfit_witness(frame))
}

fn weakly_subfit_witness(frame: &FiniteFrame) -> Option<Witness> {
    let (bot, top) = (frame.bottom(), frame.top());
    (0..frame.size())
        .filter(|&a| a != bot)
        .find(|&a| !(0..frame.size()).any(|c| c != top && frame.join(a, c) == top))
        .map(Witness::Element)
}

/// Re-checks a failure witness directly against the axiom's definition.
/// Returns `true` when the witness does violate the axiom.
pub fn witness_violates(frame: &FiniteFrame, axiom: Axiom, witness: Witness) -> bool {
    let n = frame.size();
    let top = frame.top();
    match (axiom, witness) {
        (Axiom::Subfit, Witness::Pair(a, b)) => {
            !frame.le(a, b) && (0..n).all(|c| frame.join(a, c) != top || frame.join(b, c) == top)
        }
        (Axiom::WeaklySubfit, Witness::Element(a)) => {
            a != frame.bottom() && (0..n).all(|c| c == top || frame.join(a, c) != top)
        }
        (Axiom::Symmetric, Witness::Sublocale(o)) => match sc_frame(frame) {
            Ok(sc) => {
                let is_open = (0..n).any(|a| open_sublocale(frame, a).members() == o);
                is_open
                    && o != frame.carrier()
                    && sc
                        .elements()
                        .iter()
                        .all(|&t| t == frame.carrier() || !o.is_subset(t))
            }
            Err(_) => false,
        },
        _ => false,
    }
}

/// Proper open sublocales `o(a)` not contained in any proper element of
/// `S_c(L)`; `dense_only` restricts to dense `o(a)`.
fn open_not_covered(frame: &FiniteFrame, sc: &ScFrame<'_>, dense_only: bool) -> Option<Witness> {
    let whole = frame.carrier();
    let mut opens: Vec<ElemSet> = (0..frame.size())
        .map(|a| open_sublocale(frame, a))
        .filter(|o| o.is_proper() && (!dense_only || o.is_dense()))
        .map(|o| o.members())
        .collect();
    opens.sort_by_key(|s| (s.len(), s.bits()));
    opens.dedup();
    opens
        .into_iter()
        .find(|&o| !sc.elements().iter().any(|&t| t != whole && o.is_subset(t)))
        .map(Witness::Sublocale)
}

/// Symmetry, decided by evaluating three equivalent conditions separately:
///
/// 1. `S_c(L)` is weakly subfit;
/// 2. every proper open sublocale lies in a proper join of closed sublocales;
/// 3. the same for proper dense open sublocales.
///
/// Fails with [`SeparationError::EquivalenceViolation`] if they disagree.
pub fn is_symmetric(frame: &FiniteFrame) -> Result<SeparationReport, SeparationError> {
    let sc = sc_frame(frame)?;
    let cond1 = weakly_subfit_witness(sc.frame()).map(|w| match w {
        Witness::Element(i) => Witness::Sublocale(sc.elements()[i]),
        other => other,
    });
    let cond2 = open_not_covered(frame, &sc, false);
    let cond3 = open_not_covered(frame, &sc, true);
    let conditions = vec![
        ConditionOutcome {
            name: "sc-weakly-subfit",
            holds: cond1.is_none(),
            witness: cond1,
        },
        ConditionOutcome {
            name: "open-in-proper-join",
            holds: cond2.is_none(),
            witness: cond2,
        },
        ConditionOutcome {
            name: "dense-open-in-proper-join",
            holds: cond3.is_none(),
            witness: cond3,
        },
    ];
    let verdicts: Vec<bool> = conditions.iter().map(|c| c.holds).collect();
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(SeparationError::EquivalenceViolation(format!(
            "symmetry conditions disagree: {}",
            describe_conditions(frame, &conditions)
        )));
    }
    Ok(SeparationReport {
        axiom: Axiom::Symmetric,
        verdict: Verdict::from_holds(verdicts[0]),
        witness: cond2.or(cond1),
        conditions,
    })
}

pub fn describe_conditions(frame: &FiniteFrame, conditions: &[ConditionOutcome]) -> String {
    conditions
        .iter()
        .map(|c| match c.witness {
            Some(w) => format!("{}={} [{}]", c.name, c.holds, w.render(frame)),
            None => format!("{}={}", c.name, c.holds),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Finite-instance check that `L` is subfit exactly when `S_c(L)^op` is
/// Boolean, and that under subfitness `S_c(L)` coincides with the
/// Booleanization of `S(L)^op`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PptReport {
    pub subfit: SeparationReport,
    pub sc_boolean: bool,
    /// An element of `S_c(L)` without complement, when not Boolean.
    pub sc_uncomplemented: Option<ElemSet>,
    pub coincides: bool,
    /// First set in the symmetric difference of `S_c(L)` and the
    /// Booleanization of `S(L)^op`, when they differ.
    pub coincidence_witness: Option<ElemSet>,
}

impl PptReport {
    pub fn consistent(&self) -> bool {
        self.subfit.holds() == self.sc_boolean && (!self.subfit.holds() || self.coincides)
    }
}

pub fn check_ppt_theorem(
    frame: &FiniteFrame,
    budget: &Budget,
) -> Result<PptReport, SeparationError> {
    let subfit = is_subfit(frame);
    let sc = sc_frame(frame)?;
    // A finite lattice is Boolean iff its order dual is.
    let sc_uncomplemented = sc.frame().uncomplemented().map(|i| sc.elements()[i]);
    let mut fixed: Vec<ElemSet> = booleanization_of_s_op(frame, budget)?
        .iter()
        .map(|s| s.members())
        .collect();
    fixed.sort_by_key(|s| (s.len(), s.bits()));
    let coincidence_witness = sc
        .elements()
        .iter()
        .find(|s| !fixed.contains(s))
        .or_else(|| fixed.iter().find(|s| sc.index_of(**s).is_none()))
        .copied();
    let report = PptReport {
        subfit,
        sc_boolean: sc_uncomplemented.is_none(),
        sc_uncomplemented,
        coincides: coincidence_witness.is_none(),
        coincidence_witness,
    };
    if !report.consistent() {
        return Err(SeparationError::TheoremViolation(format!(
            "subfit={} sc_boolean={} coincides={} subfit_witness={:?} uncomplemented={:?} difference={:?}",
            report.subfit.holds(),
            report.sc_boolean,
            report.coincides,
            report.subfit.witness.map(|w| w.render(frame)),
            report.sc_uncomplemented.map(|s| render_set(frame, s)),
            report.coincidence_witness.map(|s| render_set(frame, s)),
        )));
    }
    Ok(report)
}

/// Outcome of [`pseudocomplement_formula_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcFormulaReport {
    /// `false` when the frame is not weakly subfit (the check does not apply).
    pub applicable: bool,
    /// Whether `a* = ⋀{x : x ∨ a = 1}` held for every `a` (vacuously `true`
    /// when not applicable).
    pub formula_holds: bool,
    /// Whether `a ∨ a* = 1` held for every `a`.
    pub complemented: bool,
    pub boolean: bool,
    pub violation: Option<String>,
}

/// In a weakly subfit frame `a* = ⋀{x : x ∨ a = 1}`; since finite
/// distributive lattices are also coframes, `a ∨ a* = 1` follows and the
/// frame is Boolean.
pub fn pseudocomplement_formula_check(frame: &FiniteFrame) -> PcFormulaReport {
    if !is_weakly_subfit(frame).holds() {
        return PcFormulaReport {
            applicable: false,
            formula_holds: true,
            complemented: (0..frame.size())
                .all(|a| frame.join(a, frame.pseudocomplement(a)) == frame.top()),
            boolean: frame.is_boolean(),
            violation: None,
        };
    }
    let top = frame.top();
    let mut violation = None;
    for a in 0..frame.size() {
        let covers: ElemSet = (0..frame.size())
            .filter(|&x| frame.join(x, a) == top)
            .collect();
        if frame.meet_all(covers) != frame.pseudocomplement(a) {
            violation = Some(format!("a* ≠ ⋀{{x : x ∨ a = 1}} at a = {}", frame.label(a)));
            break;
        }
    }
    let formula_holds = violation.is_none();
    let complemented = (0..frame.size()).all(|a| frame.join(a, frame.pseudocomplement(a)) == top);
    let boolean = frame.is_boolean();
    if violation.is_none()
        && frame.dual_distributivity_violation().is_none()
        && !(complemented && boolean)
    {
        violation = Some("weakly subfit coframe is not Boolean".to_string());
    }
    PcFormulaReport {
        applicable: true,
        formula_holds,
        complemented,
        boolean,
        violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{k_frame, named};

    #[test]
    fn subfitness_of_named_frames() {
        assert!(is_subfit(&named::boolean(2)).holds());
        let c3 = named::chain(3);
        let r = is_subfit(&c3);
        assert_eq!(r.witness, Some(Witness::Pair(1, 0)));
        assert_eq!(r.witness.unwrap().render(&c3), "(m,0)");
        assert!(witness_violates(&c3, Axiom::Subfit, r.witness.unwrap()));
        assert!(is_subfit(&named::chain(1)).holds());
    }

    #[test]
    fn weak_subfitness_of_named_frames() {
        assert!(is_weakly_subfit(&named::boolean(2)).holds());
        let c3 = named::chain(3);
        let r = is_weakly_subfit(&c3);
        assert_eq!(r.witness, Some(Witness::Element(1)));
        assert!(witness_violates(
            &c3,
            Axiom::WeaklySubfit,
            Witness::Element(1)
        ));

        let sc = sc_frame(&c3).unwrap();
        let r = is_weakly_subfit(sc.frame());
        let Some(Witness::Element(i)) = r.witness else {
            panic!("expected element witness")
        };
        assert_eq!(
            sc.elements()[i],
            crate::sublocale::closed_sublocale(&c3, 1).members()
        );
    }

    #[test]
    fn symmetry_of_named_frames() {
        let c3 = named::chain(3);
        let r = is_symmetric(&c3).unwrap();
        assert!(!r.holds());
        assert_eq!(r.witness.unwrap().render(&c3), "{0,1}");
        assert!(witness_violates(&c3, Axiom::Symmetric, r.witness.unwrap()));
        assert!(is_symmetric(&named::boolean(2)).unwrap().holds());
        assert!(is_symmetric(&named::chain(1)).unwrap().holds());
    }

    #[test]
    fn ppt_on_named_frames() {
        let b = Budget::default();
        let r = check_ppt_theorem(&named::boolean(2), &b).unwrap();
        assert!(r.subfit.holds() && r.sc_boolean && r.coincides);
        let r = check_ppt_theorem(&named::chain(3), &b).unwrap();
        assert!(!r.subfit.holds() && !r.sc_boolean);
        let k = k_frame(&named::chain(3)).unwrap();
        let r = check_ppt_theorem(k.frame(), &b).unwrap();
        assert!(r.consistent());
        assert!(!r.subfit.holds());
    }

    #[test]
    fn pseudocomplement_formula_named() {
        let r = pseudocomplement_formula_check(&named::boolean(2));
        assert!(r.applicable && r.formula_holds && r.complemented && r.boolean);
        let r = pseudocomplement_formula_check(&named::chain(3));
        assert!(!r.applicable);
        assert!(r.violation.is_none());
        let r = pseudocomplement_formula_check(&named::chain(1));
        assert!(r.applicable && r.formula_holds && r.violation.is_none());
    }

    #[test]
    fn implications_between_axioms_on_curated_frames() {
        for f in named::curated() {
            let frame = &f.frame;
            let subfit = is_subfit(frame).holds();
            let weak = is_weakly_subfit(frame).holds();
            let sym = is_symmetric(frame).unwrap().holds();
            assert!(!subfit || weak, "{}", f.name);
            assert!(!subfit || sym, "{}", f.name);
            for r in [is_subfit(frame), is_weakly_subfit(frame)] {
                if let Some(w) = r.witness {
                    assert!(witness_violates(frame, r.axiom, w), "{}", f.name);
                }
            }
        }
    }
}
