//! Finite topological spaces: specialization, unions of closed subspaces,
//! symmetry, and the frame of opens.

use std::fmt;

use rand::Rng;

use crate::config::Budget;
use crate::elemset::{ElemSet, MAX_CARRIER};
use crate::lattice::{validate_frame, FiniteFrame, FinitePoset};
use crate::separation::{is_symmetric, is_weakly_subfit, SeparationError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("size {size} exceeds the budget of {limit}")]
    BudgetExceeded { size: usize, limit: usize },
    #[error("space is not T0: points {a} and {b} have the same closure")]
    NotT0 { a: usize, b: usize },
    #[error("equivalence violation: {0}")]
    EquivalenceViolation(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Separation(#[from] SeparationError),
}

impl TopoError {
    pub fn is_violation(&self) -> bool {
        match self {
            TopoError::EquivalenceViolation(_) | TopoError::TheoremViolation(_) => true,
            TopoError::Separation(e) => e.is_violation(),
            _ => false,
        }
    }
}

/// A topology on the points `0..points`, given by its open sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    points: usize,
    opens: Vec<ElemSet>,
}

fn sort_sets(sets: &mut Vec<ElemSet>) {
    sets.sort_by_key(|s| (s.len(), s.bits()));
    sets.dedup();
}

/// Renders a point set as `{0,2}`.
pub fn render_points(set: ElemSet) -> String {
    let inner: Vec<String> = set.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl FiniteSpace {
    pub fn new(points: usize, opens: impl IntoIterator<Item = ElemSet>) -> Result<Self, TopoError> {
        if points > MAX_CARRIER {
            return Err(TopoError::BudgetExceeded {
                size: points,
                limit: MAX_CARRIER,
            });
        }
        let full = ElemSet::full(points);
        let mut opens: Vec<ElemSet> = opens.into_iter().collect();
        sort_sets(&mut opens);
        if let Some(bad) = opens.iter().find(|o| !o.is_subset(full)) {
            return Err(TopoError::NotATopology(format!(
                "{} mentions a point outside the space",
                render_points(*bad)
            )));
        }
        if !opens.contains(&ElemSet::EMPTY) {
            return Err(TopoError::NotATopology("the empty set is not open".into()));
        }
        if !opens.contains(&full) {
            return Err(TopoError::NotATopology(
                "the whole space is not open".into(),
            ));
        }
        for &a in &opens {
            for &b in &opens {
                for (c, op) in [(a.union(b), "union"), (a.intersection(b), "intersection")] {
                    if !opens.contains(&c) {
                        return Err(TopoError::NotATopology(format!(
                            "{op} of {} and {} is not open",
                            render_points(a),
                            render_points(b)
                        )));
                    }
                }
            }
        }
        Ok(FiniteSpace { points, opens })
    }

    pub fn discrete(points: usize) -> Self {
        let opens = (0u64..(1u64 << points)).map(ElemSet::from_bits);
        FiniteSpace::new(points, opens).expect("powerset is a topology")
    }

    pub fn indiscrete(points: usize) -> Self {
        FiniteSpace::new(points, [ElemSet::EMPTY, ElemSet::full(points)])
            .expect("indiscrete topology")
    }

    /// `{∅, {1}, {0,1}}`: point 0 lies in the closure of point 1.
    pub fn sierpinski() -> Self {
        FiniteSpace::new(2, [ElemSet::EMPTY, ElemSet::singleton(1), ElemSet::full(2)])
            .expect("Sierpinski space")
    }

    /// The up-sets of a preorder given by `ups[x] = {y : x ≤ y}`.
    pub fn from_preorder(ups: &[ElemSet]) -> Result<Self, TopoError> {
        let n = ups.len();
        let opens = (0u64..(1u64 << n))
            .map(ElemSet::from_bits)
            .filter(|s| s.iter().all(|x| ups[x].is_subset(*s)));
        FiniteSpace::new(n, opens)
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.points)
    }

    /// Open sets sorted by size, then bitmask.
    pub fn opens(&self) -> &[ElemSet] {
        &self.opens
    }

    pub fn is_open(&self, s: ElemSet) -> bool {
        self.opens.contains(&s)
    }

    pub fn closed_sets(&self) -> Vec<ElemSet> {
        let mut c: Vec<ElemSet> = self
            .opens
            .iter()
            .map(|o| o.complement(self.points))
            .collect();
        sort_sets(&mut c);
        c
    }

    pub fn is_closed(&self, s: ElemSet) -> bool {
        self.is_open(s.complement(self.points))
    }

    /// Smallest closed superset.
    pub fn closure(&self, s: ElemSet) -> ElemSet {
        self.opens
            .iter()
            .filter(|o| o.intersection(s).is_empty())
            .fold(ElemSet::EMPTY, |acc, o| acc.union(*o))
            .complement(self.points)
    }

    /// Largest open subset.
    pub fn interior(&self, s: ElemSet) -> ElemSet {
        self.opens
            .iter()
            .filter(|o| o.is_subset(s))
            .fold(ElemSet::EMPTY, |acc, o| acc.union(*o))
    }

    pub fn is_dense(&self, s: ElemSet) -> bool {
        self.closure(s) == self.full()
    }

    pub fn specialization(&self) -> Specialization {
        Specialization {
            below: (0..self.points)
                .map(|y| self.closure(ElemSet::singleton(y)))
                .collect(),
        }
    }

    pub fn is_t0(&self) -> bool {
        self.specialization().antisymmetry_witness().is_none()
    }

    /// `space <n>` followed by one 0/1 line per open set; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, TopoError> {
        let mut points = None;
        let mut opens = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let lineno = i + 1;
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| TopoError::Parse {
                line: lineno,
                message,
            };
            match points {
                None => {
                    let n = line
                        .strip_prefix("space")
                        .map(str::trim)
                        .ok_or_else(|| parse_err("expected header `space <n>`".into()))?;
                    let n: usize = n
                        .parse()
                        .map_err(|_| parse_err(format!("invalid point count `{n}`")))?;
                    if n > MAX_CARRIER {
                        return Err(parse_err(format!(
                            "at most {MAX_CARRIER} points are supported"
                        )));
                    }
                    points = Some(n);
                }
                Some(n) => {
                    if line.len() != n || !line.chars().all(|c| c == '0' || c == '1') {
                        return Err(parse_err(format!(
                            "expected a 0/1 string of length {n}, found `{line}`"
                        )));
                    }
                    opens.push(
                        line.chars()
                            .enumerate()
                            .filter(|&(_, c)| c == '1')
                            .map(|(p, _)| p)
                            .collect(),
                    );
                }
            }
        }
        let points = points.ok_or(TopoError::Parse {
            line: 0,
            message: "missing header `space <n>`".into(),
        })?;
        if points == 0 && opens.is_empty() {
            opens.push(ElemSet::EMPTY);
        }
        FiniteSpace::new(points, opens)
    }

    pub fn write(&self) -> String {
        let mut out = format!("space {}\n", self.points);
        for o in &self.opens {
            out.extend((0..self.points).map(|p| if o.contains(p) { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opens: Vec<String> = self.opens.iter().map(|o| render_points(*o)).collect();
        write!(f, "FiniteSpace({}; {})", self.points, opens.join(" "))
    }
}

/// The specialization preorder: `x ≤ y` iff `x ∈ cl{y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    below: Vec<ElemSet>,
}

impl Specialization {
    pub fn points(&self) -> usize {
        self.below.len()
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    /// `{x : x ≤ y} = cl{y}`.
    pub fn down_set(&self, y: usize) -> ElemSet {
        self.below[y]
    }

    pub fn up_set(&self, x: usize) -> ElemSet {
        (0..self.points()).filter(|&y| self.le(x, y)).collect()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.points()).all(|x| self.le(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.points();
        (0..n).all(|y| {
            self.below[y]
                .iter()
                .all(|x| self.below[x].is_subset(self.below[y]))
        })
    }

    /// First pair with `x ≤ y` but not `y ≤ x`.
    pub fn asymmetric_pair(&self) -> Option<(usize, usize)> {
        let n = self.points();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.le(x, y) && !self.le(y, x))
    }

    /// First pair of distinct points below each other.
    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        let n = self.points();
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.le(x, y) && self.le(y, x))
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_transitive() && self.asymmetric_pair().is_none()
    }

    /// Strict covering pairs `(x, y)`, `x < y`, of the quotient order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.points();
        let lt = |x: usize, y: usize| self.le(x, y) && !self.le(y, x);
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Whether the specialization preorder is symmetric, with an asymmetric
/// pair `x ≤ y`, `y ≰ x` as witness otherwise.
pub fn is_symmetric_space(space: &FiniteSpace) -> (bool, Option<(usize, usize)>) {
    let w = space.specialization().asymmetric_pair();
    (w.is_none(), w)
}

/// `U_c(X)`, the unions of closed subspaces ordered by inclusion.
#[derive(Debug, Clone)]
pub struct UcLattice {
    space: FiniteSpace,
    elements: Vec<ElemSet>,
    frame: FiniteFrame,
}

impl UcLattice {
    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn elements(&self) -> &[ElemSet] {
        &self.elements
    }

    /// The same order as an abstract frame.
    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn union_closure(generators: &[ElemSet]) -> Vec<ElemSet> {
    let mut out = vec![ElemSet::EMPTY];
    let mut i = 0;
    while i < out.len() {
        for &g in generators {
            let u = out[i].union(g);
            if !out.contains(&u) {
                out.push(u);
            }
        }
        i += 1;
    }
    sort_sets(&mut out);
    out
}

fn set_poset(sets: &[ElemSet], labels: Vec<String>) -> FinitePoset {
    FinitePoset::from_fn(sets.len(), |i, j| sets[i].is_subset(sets[j]), Some(labels))
        .expect("inclusion on distinct sets is a partial order")
}

/// Builds `U_c(X)` and checks closure under intersections, both
/// distributive laws, and anti-isomorphism with the saturated sets.
pub fn uc_lattice(space: &FiniteSpace, budget: &Budget) -> Result<UcLattice, TopoError> {
    let elements = union_closure(&space.closed_sets());
    if elements.len() > budget.max_carrier {
        return Err(TopoError::BudgetExceeded {
            size: elements.len(),
            limit: budget.max_carrier,
        });
    }
    for &a in &elements {
        for &b in &elements {
            if !elements.contains(&a.intersection(b)) {
                return Err(TopoError::TheoremViolation(format!(
                    "U_c(X) is not closed under the intersection of {} and {}",
                    render_points(a),
                    render_points(b)
                )));
            }
        }
    }
    let labels = elements.iter().map(|s| render_points(*s)).collect();
    let frame = validate_frame(set_poset(&elements, labels))
        .map_err(|e| TopoError::TheoremViolation(format!("U_c(X) is not a frame: {e}")))?;
    if let Some((a, b, c)) = frame.dual_distributivity_violation() {
        return Err(TopoError::TheoremViolation(format!(
            "U_c(X) is not a coframe at ({}, {}, {})",
            frame.label(a),
            frame.label(b),
            frame.label(c)
        )));
    }

    let principal: Vec<ElemSet> = (0..space.points())
        .map(|x| {
            space
                .opens()
                .iter()
                .filter(|o| o.contains(x))
                .fold(space.full(), |acc, o| acc.intersection(*o))
        })
        .collect();
    let saturated = union_closure(&principal);
    let mut complements: Vec<ElemSet> = elements
        .iter()
        .map(|s| s.complement(space.points()))
        .collect();
    sort_sets(&mut complements);
    if complements != saturated {
        return Err(TopoError::TheoremViolation(
            "complementation does not map U_c(X) onto the saturated sets".into(),
        ));
    }
    Ok(UcLattice {
        space: space.clone(),
        elements,
        frame,
    })
}

/// The open-set lattice as a frame, labeled by point sets.
pub fn omega(space: &FiniteSpace) -> Result<FiniteFrame, TopoError> {
    let opens = space.opens();
    if opens.len() > MAX_CARRIER {
        return Err(TopoError::BudgetExceeded {
            size: opens.len(),
            limit: MAX_CARRIER,
        });
    }
    let labels = opens.iter().map(|s| render_points(*s)).collect();
    validate_frame(set_poset(opens, labels))
        .map_err(|e| TopoError::TheoremViolation(format!("open sets do not form a frame: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceCondition {
    pub name: &'static str,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpacePropositionReport {
    pub conditions: Vec<SpaceCondition>,
}

impl SpacePropositionReport {
    /// The common verdict of the five conditions.
    pub fn holds(&self) -> bool {
        self.conditions[0].holds
    }

    pub fn verdicts(&self) -> Vec<bool> {
        self.conditions.iter().map(|c| c.holds).collect()
    }

    pub fn describe(&self) -> String {
        self.conditions
            .iter()
            .map(|c| match &c.witness {
                Some(w) => format!("{}={} [{}]", c.name, c.holds, w),
                None => format!("{}={}", c.name, c.holds),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Proper opens (restricted to dense ones if asked) lying in no proper
/// member of `U_c(X)`.
fn open_outside_proper_unions(
    space: &FiniteSpace,
    uc: &UcLattice,
    dense_only: bool,
) -> Option<ElemSet> {
    let full = space.full();
    space
        .opens()
        .iter()
        .copied()
        .filter(|&o| o != full && (!dense_only || space.is_dense(o)))
        .find(|&o| !uc.elements().iter().any(|&s| s != full && o.is_subset(s)))
}

/// Evaluates the five equivalent conditions: symmetric space, `U_c(X)`
/// Boolean, `U_c(X)` weakly subfit, every proper open inside a proper union
/// of closed subspaces, and the same for proper dense opens.
pub fn space_proposition_check(
    space: &FiniteSpace,
    budget: &Budget,
) -> Result<SpacePropositionReport, TopoError> {
    let uc = uc_lattice(space, budget)?;
    let (symmetric, pair) = is_symmetric_space(space);
    let uncomplemented = uc.frame().uncomplemented();
    let weak = is_weakly_subfit(uc.frame());
    let c4 = open_outside_proper_unions(space, &uc, false);
    let c5 = open_outside_proper_unions(space, &uc, true);
    let conditions = vec![
        SpaceCondition {
            name: "symmetric",
            holds: symmetric,
            witness: pair.map(|(x, y)| format!("{x} ≤ {y}, {y} ≰ {x}")),
        },
        SpaceCondition {
            name: "uc-boolean",
            holds: uncomplemented.is_none(),
            witness: uncomplemented.map(|i| uc.frame().label(i).to_string()),
        },
        SpaceCondition {
            name: "uc-weakly-subfit",
            holds: weak.holds(),
            witness: weak.witness.map(|w| w.render(uc.frame())),
        },
        SpaceCondition {
            name: "open-in-proper-union",
            holds: c4.is_none(),
            witness: c4.map(render_points),
        },
        SpaceCondition {
            name: "dense-open-in-proper-union",
            holds: c5.is_none(),
            witness: c5.map(render_points),
        },
    ];
    let report = SpacePropositionReport { conditions };
    let v = report.verdicts();
    if v.iter().any(|&b| b != v[0]) {
        return Err(TopoError::EquivalenceViolation(format!(
            "space conditions disagree on {space:?}: {}",
            report.describe()
        )));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TdReport {
    pub space_symmetric: bool,
    pub locale_symmetric: bool,
}

/// For a T0 space, compares symmetry of the space with symmetry of the
/// locale `Ω(X)`.
pub fn td_remark_check(space: &FiniteSpace) -> Result<TdReport, TopoError> {
    if let Some((a, b)) = space.specialization().antisymmetry_witness() {
        return Err(TopoError::NotT0 { a, b });
    }
    let (space_symmetric, _) = is_symmetric_space(space);
    let frame = omega(space)?;
    let locale_symmetric = is_symmetric(&frame)?.holds();
    if space_symmetric != locale_symmetric {
        return Err(TopoError::TheoremViolation(format!(
            "space symmetric = {space_symmetric} but locale symmetric = {locale_symmetric} for {space:?}"
        )));
    }
    Ok(TdReport {
        space_symmetric,
        locale_symmetric,
    })
}

/// Every topology on `n` labeled points, found by scanning all families of
/// subsets that contain `∅` and the whole set.
pub fn enumerate_topologies(
    n: usize,
    t0_only: bool,
    budget: &Budget,
) -> Result<Vec<FiniteSpace>, TopoError> {
    if n > budget.max_points || n > 5 {
        return Err(TopoError::BudgetExceeded {
            size: n,
            limit: budget.max_points.min(5),
        });
    }
    let full = ElemSet::full(n);
    if n == 0 {
        return Ok(vec![FiniteSpace::new(0, [ElemSet::EMPTY])?]);
    }
    // subsets other than ∅ and X, indexed by position in this list
    let middle: Vec<ElemSet> = (1u64..(1u64 << n) - 1).map(ElemSet::from_bits).collect();
    let mut out = Vec::new();
    'family: for mask in 0u64..(1u64 << middle.len()) {
        let mut family = vec![ElemSet::EMPTY, full];
        family.extend(
            (0..middle.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| middle[i]),
        );
        for &a in &family {
            for &b in &family {
                if !family.contains(&a.union(b)) || !family.contains(&a.intersection(b)) {
                    continue 'family;
                }
            }
        }
        let space = FiniteSpace::new(n, family)?;
        if !t0_only || space.is_t0() {
            out.push(space);
        }
    }
    Ok(out)
}

/// Every preorder on `n` points as `ups[x] = {y : x ≤ y}`, by brute force
/// over the off-diagonal relation bits.
pub fn enumerate_preorders(n: usize) -> Vec<Vec<ElemSet>> {
    assert!(n <= 5, "preorder scan is limited to 5 points");
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << off.len()) {
        let mut ups: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for (i, &(x, y)) in off.iter().enumerate() {
            if mask >> i & 1 == 1 {
                ups[x].insert(y);
            }
        }
        let transitive = (0..n).all(|x| ups[x].iter().all(|y| ups[y].is_subset(ups[x])));
        if transitive {
            out.push(ups);
        }
    }
    out
}

/// A random topology on `n` points: the up-sets of the transitive closure
/// of a random reflexive relation.
pub fn random_space<R: Rng>(rng: &mut R, n: usize, density: f64) -> FiniteSpace {
    let mut ups: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
    for (x, up) in ups.iter_mut().enumerate() {
        for y in 0..n {
            if x != y && rng.gen_bool(density) {
                up.insert(y);
            }
        }
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            let closed = ups[x].iter().fold(ups[x], |acc, y| acc.union(ups[y]));
            if closed != ups[x] {
                ups[x] = closed;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    FiniteSpace::from_preorder(&ups).expect("up-sets of a preorder form a topology")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[usize]) -> ElemSet {
        points.iter().copied().collect()
    }

    #[test]
    fn specialization_examples() {
        let s = FiniteSpace::sierpinski().specialization();
        assert!(s.le(0, 1) && !s.le(1, 0));
        assert_eq!(s.down_set(1), set(&[0, 1]));
        assert_eq!(s.down_set(0), set(&[0]));
        let d = FiniteSpace::discrete(2).specialization();
        assert!(!d.le(0, 1) && !d.le(1, 0) && d.le(0, 0));
        let i = FiniteSpace::indiscrete(2).specialization();
        assert!(i.le(0, 1) && i.le(1, 0));
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(
            is_symmetric_space(&FiniteSpace::sierpinski()),
            (false, Some((0, 1)))
        );
        assert!(is_symmetric_space(&FiniteSpace::discrete(3)).0);
        assert!(is_symmetric_space(&FiniteSpace::indiscrete(2)).0);
        assert!(!FiniteSpace::indiscrete(2).is_t0());
    }

    #[test]
    fn uc_examples() {
        let b = Budget::default();
        let uc = uc_lattice(&FiniteSpace::sierpinski(), &b).unwrap();
        assert_eq!(uc.elements(), &[set(&[]), set(&[0]), set(&[0, 1])]);
        assert!(uc.frame().poset().is_chain() && !uc.frame().is_boolean());
        let uc = uc_lattice(&FiniteSpace::discrete(2), &b).unwrap();
        assert_eq!(uc.len(), 4);
        assert!(uc.frame().is_boolean());
        assert_eq!(
            uc_lattice(&FiniteSpace::indiscrete(2), &b).unwrap().len(),
            2
        );
    }

    #[test]
    fn proposition_examples() {
        let b = Budget::default();
        let r = space_proposition_check(&FiniteSpace::sierpinski(), &b).unwrap();
        assert_eq!(r.verdicts(), vec![false; 5]);
        assert_eq!(r.conditions[3].witness.as_deref(), Some("{1}"));
        for n in 0..4 {
            let r = space_proposition_check(&FiniteSpace::discrete(n), &b).unwrap();
            assert_eq!(r.verdicts(), vec![true; 5]);
        }
    }

    #[test]
    fn omega_examples() {
        assert!(omega(&FiniteSpace::sierpinski())
            .unwrap()
            .poset()
            .is_chain());
        assert_eq!(omega(&FiniteSpace::sierpinski()).unwrap().size(), 3);
        let d = omega(&FiniteSpace::discrete(2)).unwrap();
        assert!(d.is_boolean() && d.size() == 4);
        assert_eq!(omega(&FiniteSpace::indiscrete(3)).unwrap().size(), 2);
    }

    #[test]
    fn td_examples() {
        let r = td_remark_check(&FiniteSpace::sierpinski()).unwrap();
        assert!(!r.space_symmetric && !r.locale_symmetric);
        let r = td_remark_check(&FiniteSpace::discrete(2)).unwrap();
        assert!(r.space_symmetric && r.locale_symmetric);
        assert_eq!(
            td_remark_check(&FiniteSpace::indiscrete(2)),
            Err(TopoError::NotT0 { a: 0, b: 1 })
        );
    }

    #[test]
    fn topology_counts() {
        let b = Budget::default();
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_topologies(n, false, &b).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
        let t0: Vec<usize> = (0..=4)
            .map(|n| enumerate_topologies(n, true, &b).unwrap().len())
            .collect();
        assert_eq!(t0, vec![1, 1, 3, 19, 219]);
        assert!(matches!(
            enumerate_topologies(5, false, &b),
            Err(TopoError::BudgetExceeded { size: 5, limit: 4 })
        ));
    }

    #[test]
    fn topologies_correspond_to_preorders() {
        let b = Budget::default();
        for n in 0..=4 {
            let mut from_spaces: Vec<Vec<ElemSet>> = enumerate_topologies(n, false, &b)
                .unwrap()
                .iter()
                .map(|s| {
                    let sp = s.specialization();
                    (0..n).map(|x| sp.up_set(x)).collect()
                })
                .collect();
            let mut preorders = enumerate_preorders(n);
            from_spaces.sort();
            preorders.sort();
            assert_eq!(from_spaces, preorders, "n = {n}");
        }
    }

    #[test]
    fn parse_round_trip() {
        let s = FiniteSpace::parse("space 2\n00\n01 # {1}\n11\n").unwrap();
        assert_eq!(s, FiniteSpace::sierpinski());
        assert_eq!(FiniteSpace::parse(&s.write()).unwrap(), s);
        assert!(matches!(
            FiniteSpace::parse("space 2\n00\n10\n01\n"),
            Err(TopoError::NotATopology(_))
        ));
        assert!(matches!(
            FiniteSpace::parse("space 2\n0x\n"),
            Err(TopoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            FiniteSpace::parse("points 2\n"),
            Err(TopoError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn closure_operator_laws() {
        for s in enumerate_topologies(3, false, &Budget::default()).unwrap() {
            for bits in 0u64..8 {
                let a = ElemSet::from_bits(bits);
                let c = s.closure(a);
                assert!(a.is_subset(c) && s.closure(c) == c && s.is_closed(c));
                for bits2 in 0u64..8 {
                    let b = ElemSet::from_bits(bits2);
                    if a.is_subset(b) {
                        assert!(c.is_subset(s.closure(b)));
                    }
                }
            }
        }
    }
}
