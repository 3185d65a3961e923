use crate::elemset::ElemSet;

use super::{validate_frame, Elem, FiniteFrame, FinitePoset, LatticeError};

/// The regular elements `{a : a** = a}` of a frame, viewed as a Boolean
/// algebra with the parent's meets and the join `(a ∨ b)**`.
#[derive(Clone, Debug)]
pub struct BooleanizationView<'a> {
    parent: &'a FiniteFrame,
    carrier: ElemSet,
}

/// Computes `B_L` as the set of pseudocomplements, and checks that it
/// coincides with the fixed points of double pseudocomplementation.
pub fn booleanization(frame: &FiniteFrame) -> BooleanizationView<'_> {
    let carrier = pseudocomplement_image(frame);
    debug_assert_eq!(carrier, regular_elements(frame));
    BooleanizationView {
        parent: frame,
        carrier,
    }
}

/// `{a* : a ∈ L}`
pub fn pseudocomplement_image(frame: &FiniteFrame) -> ElemSet {
    (0..frame.size())
        .map(|a| frame.pseudocomplement(a))
        .collect()
}

/// `{a : a** = a}`
pub fn regular_elements(frame: &FiniteFrame) -> ElemSet {
    (0..frame.size()).filter(|&a| frame.is_regular(a)).collect()
}

impl<'a> BooleanizationView<'a> {
    pub fn parent(&self) -> &'a FiniteFrame {
        self.parent
    }

    pub fn carrier(&self) -> ElemSet {
        self.carrier
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.carrier.contains(a)
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.parent.meet(a, b)
    }

    /// Join in `B_L`: parent join followed by double pseudocomplement.
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.regularize(self.parent.join(a, b))
    }

    /// `(⋁ s)**`
    pub fn join_all(&self, s: ElemSet) -> Elem {
        self.regularize(self.parent.join_all(s))
    }

    pub fn regularize(&self, a: Elem) -> Elem {
        self.parent
            .pseudocomplement(self.parent.pseudocomplement(a))
    }

    /// The Booleanization as a standalone frame, together with the map from
    /// its indices to parent elements (ascending).
    pub fn to_frame(&self) -> Result<(FiniteFrame, Vec<Elem>), LatticeError> {
        let members: Vec<Elem> = self.carrier.iter().collect();
        let labels = members
            .iter()
            .map(|&a| self.parent.label(a).to_string())
            .collect();
        let poset = FinitePoset::from_fn(
            members.len(),
            |i, j| self.parent.le(members[i], members[j]),
            Some(labels),
        )?;
        Ok((validate_frame(poset)?, members))
    }
}
