use super::{booleanization, validate_frame, Elem, FiniteFrame, FinitePoset, LatticeError};

/// Componentwise product `L1 × L2`. Pair `(i, j)` gets index `i * |L2| + j`.
pub fn product_frame(left: &FiniteFrame, right: &FiniteFrame) -> Result<FiniteFrame, LatticeError> {
    let m = right.size();
    let size = left.size() * m;
    let labels = (0..size)
        .map(|k| format!("({},{})", left.label(k / m), right.label(k % m)))
        .collect();
    let poset = FinitePoset::from_fn(
        size,
        |p, q| left.le(p / m, q / m) && right.le(p % m, q % m),
        Some(labels),
    )?;
    validate_frame(poset)
}

/// `K(L) = {(a, b) ∈ L × B_L : a ≤ b}` with the componentwise order.
#[derive(Clone, Debug)]
pub struct KFrame {
    base: FiniteFrame,
    pairs: Vec<(Elem, Elem)>,
    frame: FiniteFrame,
}

impl KFrame {
    pub fn base(&self) -> &FiniteFrame {
        &self.base
    }

    /// The pair of base elements behind each index of [`KFrame::frame`].
    pub fn pairs(&self) -> &[(Elem, Elem)] {
        &self.pairs
    }

    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    pub fn into_frame(self) -> FiniteFrame {
        self.frame
    }

    pub fn index_of(&self, pair: (Elem, Elem)) -> Option<Elem> {
        self.pairs.iter().position(|&p| p == pair)
    }
}

/// Builds `K(L)` by filtering `L × B_L`, checks closure under componentwise
/// meets and under joins whose second coordinate is taken in `B_L`, and
/// confirms that the resulting frame operations are exactly those.
pub fn k_frame(base: &FiniteFrame) -> Result<KFrame, LatticeError> {
    let bool_view = booleanization(base);
    let (bool_frame, regular) = bool_view.to_frame()?;
    let product = product_frame(base, &bool_frame)?;
    let m = bool_frame.size();

    let mut pairs = Vec::new();
    let mut product_index = Vec::new();
    for k in 0..product.size() {
        let (a, b) = (k / m, regular[k % m]);
        if base.le(a, b) {
            pairs.push((a, b));
            product_index.push(k);
        }
    }
    let position = |pair: (Elem, Elem)| pairs.iter().position(|&p| p == pair);

    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            let meet = (base.meet(a, c), base.meet(b, d));
            let join = (base.join(a, c), bool_view.join(b, d));
            for (what, pair) in [("meet", meet), ("join", join)] {
                if position(pair).is_none() {
                    return Err(LatticeError::ClosureViolation(format!(
                        "componentwise {what} of ({},{}) and ({},{}) leaves K(L)",
                        base.label(a),
                        base.label(b),
                        base.label(c),
                        base.label(d)
                    )));
                }
            }
        }
    }

    let labels = product_index
        .iter()
        .map(|&k| product.label(k).to_string())
        .collect();
    let poset = FinitePoset::from_fn(
        pairs.len(),
        |i, j| base.le(pairs[i].0, pairs[j].0) && base.le(pairs[i].1, pairs[j].1),
        Some(labels),
    )?;
    let frame = validate_frame(poset)?;

    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate() {
            let meet = position((base.meet(a, c), base.meet(b, d)));
            let join = position((base.join(a, c), bool_view.join(b, d)));
            if meet != Some(frame.meet(i, j)) || join != Some(frame.join(i, j)) {
                return Err(LatticeError::ClosureViolation(format!(
                    "K(L) operations on ({},{}) and ({},{}) are not componentwise",
                    base.label(a),
                    base.label(b),
                    base.label(c),
                    base.label(d)
                )));
            }
        }
    }

    Ok(KFrame {
        base: base.clone(),
        pairs,
        frame,
    })
}
