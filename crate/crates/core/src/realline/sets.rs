use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{ExtRat, RealLineError};

/// A finite union of open intervals with extended-rational endpoints.
///
/// Canonical form: components sorted, each `(p, q)` with `p < q`, and no two
/// overlapping. Components that merely share an endpoint, like `(0,1)` and
/// `(1,2)`, stay separate because the shared point is not in the set. Since
/// the canonical form is unique, `==` is equality of point sets.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalOpen {
    components: Vec<(ExtRat, ExtRat)>,
}

/// A finite union of closed intervals `[p, q]` with `p ≤ q`; an infinite
/// endpoint stands for an unbounded ray. Components never touch.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalClosed {
    components: Vec<(ExtRat, ExtRat)>,
}

impl RationalOpen {
    pub fn empty() -> Self {
        RationalOpen {
            components: Vec::new(),
        }
    }

    /// `ℝ = (-inf, inf)`.
    pub fn reals() -> Self {
        RationalOpen {
            components: vec![(ExtRat::NegInf, ExtRat::PosInf)],
        }
    }

    /// `ℝ ∖ {0}`.
    pub fn punctured_reals() -> Self {
        RationalOpen::reals().remove_point(&BigRational::from_integer(0.into()))
    }

    /// `(-1/n, 1/n)`; `n` must be positive.
    pub fn symmetric(n: u64) -> Self {
        assert!(n > 0, "symmetric interval needs n ≥ 1");
        let r = BigRational::new(BigInt::from(1), BigInt::from(n));
        RationalOpen {
            components: vec![(ExtRat::Fin(-r.clone()), ExtRat::Fin(r))],
        }
    }

    pub fn interval(p: ExtRat, q: ExtRat) -> Result<Self, RealLineError> {
        Self::normalize(vec![(p, q)])
    }

    /// Sorts and merges overlapping components.
    pub fn normalize(raw: Vec<(ExtRat, ExtRat)>) -> Result<Self, RealLineError> {
        for (p, q) in &raw {
            if p >= q {
                return Err(RealLineError::EmptyInterval {
                    p: p.to_string(),
                    q: q.to_string(),
                });
            }
        }
        Ok(Self::merge(raw))
    }

    fn merge(mut raw: Vec<(ExtRat, ExtRat)>) -> Self {
        raw.sort();
        let mut out: Vec<(ExtRat, ExtRat)> = Vec::with_capacity(raw.len());
        for (p, q) in raw {
            match out.last_mut() {
                Some(last) if p < last.1 => {
                    if q > last.1 {
                        last.1 = q;
                    }
                }
                _ => out.push((p, q)),
            }
        }
        RationalOpen { components: out }
    }

    pub fn components(&self) -> &[(ExtRat, ExtRat)] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        let x = ExtRat::Fin(x.clone());
        self.components.iter().any(|(p, q)| *p < x && x < *q)
    }

    pub fn is_subset(&self, other: &RationalOpen) -> bool {
        self.components
            .iter()
            .all(|(p, q)| other.components.iter().any(|(c, d)| c <= p && q <= d))
    }

    pub fn union(&self, other: &RationalOpen) -> RationalOpen {
        let mut raw = self.components.clone();
        raw.extend(other.components.iter().cloned());
        Self::merge(raw)
    }

    pub fn intersect(&self, other: &RationalOpen) -> RationalOpen {
        let mut raw = Vec::new();
        for (a, b) in &self.components {
            for (c, d) in &other.components {
                let lo = a.max(c);
                let hi = b.min(d);
                if lo < hi {
                    raw.push((lo.clone(), hi.clone()));
                }
            }
        }
        Self::merge(raw)
    }

    /// Closes every component and merges touching ones.
    pub fn closure(&self) -> RationalClosed {
        RationalClosed::merge(self.components.clone())
    }

    /// The set complement, which is closed.
    pub fn complement(&self) -> RationalClosed {
        let mut raw = Vec::new();
        let mut cursor = ExtRat::NegInf;
        for (p, q) in &self.components {
            if !(cursor == ExtRat::NegInf && *p == ExtRat::NegInf) {
                raw.push((cursor.clone(), p.clone()));
            }
            cursor = q.clone();
        }
        if cursor != ExtRat::PosInf || self.components.is_empty() {
            raw.push((cursor, ExtRat::PosInf));
        }
        RationalClosed::merge(raw)
    }

    /// `A* = int(ℝ ∖ A)`.
    pub fn pseudocomplement(&self) -> RationalOpen {
        self.complement().interior()
    }

    /// `A**`.
    pub fn regularize(&self) -> RationalOpen {
        self.pseudocomplement().pseudocomplement()
    }

    pub fn is_regular(&self) -> bool {
        self.regularize() == *self
    }

    pub fn remove_point(&self, x: &BigRational) -> RationalOpen {
        let xe = ExtRat::Fin(x.clone());
        let mut raw = Vec::with_capacity(self.components.len() + 1);
        for (p, q) in &self.components {
            if *p < xe && xe < *q {
                raw.push((p.clone(), xe.clone()));
                raw.push((xe.clone(), q.clone()));
            } else {
                raw.push((p.clone(), q.clone()));
            }
        }
        RationalOpen { components: raw }
    }

    /// `int(A ∪ {x})`: joins the two components that end and start at `x`,
    /// if both exist.
    pub fn interior_with_point(&self, x: &BigRational) -> RationalOpen {
        let xe = ExtRat::Fin(x.clone());
        let left = self.components.iter().position(|(_, q)| *q == xe);
        let right = self.components.iter().position(|(p, _)| *p == xe);
        match (left, right) {
            (Some(l), Some(r)) => {
                let mut raw = self.components.clone();
                raw[l].1 = raw[r].1.clone();
                raw.remove(r);
                RationalOpen { components: raw }
            }
            _ => self.clone(),
        }
    }

    /// Every finite endpoint, in order.
    pub fn endpoints(&self) -> Vec<BigRational> {
        let mut out = Vec::new();
        for (p, q) in &self.components {
            for e in [p, q] {
                if let ExtRat::Fin(r) = e {
                    if out.last() != Some(r) {
                        out.push(r.clone());
                    }
                }
            }
        }
        out
    }
}

impl RationalClosed {
    pub fn empty() -> Self {
        RationalClosed {
            components: Vec::new(),
        }
    }

    /// `[-1/n, 1/n]`; `n` must be positive.
    pub fn symmetric(n: u64) -> Self {
        assert!(n > 0, "symmetric interval needs n ≥ 1");
        let r = BigRational::new(BigInt::from(1), BigInt::from(n));
        RationalClosed {
            components: vec![(ExtRat::Fin(-r.clone()), ExtRat::Fin(r))],
        }
    }

    pub fn normalize(raw: Vec<(ExtRat, ExtRat)>) -> Result<Self, RealLineError> {
        for (p, q) in &raw {
            if p > q || *p == ExtRat::PosInf || *q == ExtRat::NegInf {
                return Err(RealLineError::EmptyInterval {
                    p: p.to_string(),
                    q: q.to_string(),
                });
            }
        }
        Ok(Self::merge(raw))
    }

    fn merge(mut raw: Vec<(ExtRat, ExtRat)>) -> Self {
        raw.sort();
        let mut out: Vec<(ExtRat, ExtRat)> = Vec::with_capacity(raw.len());
        for (p, q) in raw {
            match out.last_mut() {
                Some(last) if p <= last.1 => {
                    if q > last.1 {
                        last.1 = q;
                    }
                }
                _ => out.push((p, q)),
            }
        }
        RationalClosed { components: out }
    }

    pub fn components(&self) -> &[(ExtRat, ExtRat)] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        let x = ExtRat::Fin(x.clone());
        self.components.iter().any(|(p, q)| *p <= x && x <= *q)
    }

    pub fn union(&self, other: &RationalClosed) -> RationalClosed {
        let mut raw = self.components.clone();
        raw.extend(other.components.iter().cloned());
        Self::merge(raw)
    }

    /// Opens every component and drops isolated points.
    pub fn interior(&self) -> RationalOpen {
        RationalOpen {
            components: self
                .components
                .iter()
                .filter(|(p, q)| p < q)
                .cloned()
                .collect(),
        }
    }

    pub fn complement(&self) -> RationalOpen {
        let mut raw = Vec::new();
        let mut cursor = ExtRat::NegInf;
        for (p, q) in &self.components {
            if cursor < *p {
                raw.push((cursor.clone(), p.clone()));
            }
            cursor = q.clone();
        }
        if cursor < ExtRat::PosInf {
            raw.push((cursor, ExtRat::PosInf));
        }
        RationalOpen { components: raw }
    }
}

fn write_components(
    f: &mut fmt::Formatter<'_>,
    comps: &[(ExtRat, ExtRat)],
    open: bool,
) -> fmt::Result {
    if comps.is_empty() {
        return f.write_str("empty");
    }
    let (l, r) = if open { ('(', ')') } else { ('[', ']') };
    for (i, (p, q)) in comps.iter().enumerate() {
        if i > 0 {
            f.write_str(";")?;
        }
        write!(f, "{l}{p},{q}{r}")?;
    }
    Ok(())
}

impl fmt::Display for RationalOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.components, true)
    }
}

impl fmt::Debug for RationalOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalClosed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.components, false)
    }
}

impl fmt::Debug for RationalClosed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `(p,q);(p,q);...` with endpoints `num/den`, integers, `-inf` or
/// `inf`. `empty` or a blank string gives `∅`.
impl FromStr for RationalOpen {
    type Err = RealLineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "empty" || s == "∅" {
            return Ok(RationalOpen::empty());
        }
        let mut raw = Vec::new();
        for part in s.split(';') {
            let part = part.trim();
            let inner = part
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| RealLineError::Parse(format!("expected `(p,q)`, found `{part}`")))?;
            let (p, q) = inner
                .split_once(',')
                .ok_or_else(|| RealLineError::Parse(format!("missing comma in `{part}`")))?;
            raw.push((p.trim().parse()?, q.trim().parse()?));
        }
        RationalOpen::normalize(raw)
    }
}
