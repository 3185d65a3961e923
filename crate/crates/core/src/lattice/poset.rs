use crate::elemset::{ElemSet, MAX_CARRIER};

use super::{Elem, LatticeError};

/// A finite bounded partial order on `0..n`.
///
/// Indices are canonical: they form a linear extension of the order, so the
/// bottom is always `0` and the top is always `n - 1`. Construction closes
/// the supplied relation reflexively and transitively, so either a cover
/// relation or a full order relation can be given.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    labels: Vec<String>,
}

impl FinitePoset {
    /// Builds a poset from `i <= j` pairs (covers or any generating set).
    pub fn from_pairs(
        size: usize,
        pairs: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Self, LatticeError> {
        check_size(size)?;
        let mut up = vec![ElemSet::EMPTY; size];
        for (i, u) in up.iter_mut().enumerate() {
            u.insert(i);
        }
        for &(i, j) in pairs {
            for idx in [i, j] {
                if idx >= size {
                    return Err(LatticeError::IndexOutOfRange { index: idx, size });
                }
            }
            up[i].insert(j);
        }
        Self::from_up_sets(up, labels)
    }

    /// Builds a poset from an order predicate evaluated on every pair.
    pub fn from_fn(
        size: usize,
        le: impl Fn(usize, usize) -> bool,
        labels: Option<Vec<String>>,
    ) -> Result<Self, LatticeError> {
        check_size(size)?;
        let up = (0..size)
            .map(|i| (0..size).filter(|&j| i == j || le(i, j)).collect())
            .collect();
        Self::from_up_sets(up, labels)
    }

    fn from_up_sets(
        mut up: Vec<ElemSet>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, LatticeError> {
        let n = up.len();
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(LatticeError::LabelCount {
                    expected: n,
                    found: l.len(),
                })
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        // Warshall on bitsets.
        for k in 0..n {
            let reach = up[k];
            for u in up.iter_mut() {
                if u.contains(k) {
                    *u = u.union(reach);
                }
            }
        }
        for a in 0..n {
            for b in up[a].iter().filter(|&b| b > a) {
                if up[b].contains(a) {
                    return Err(LatticeError::NotAntisymmetric {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                    });
                }
            }
        }

        // Kahn's algorithm, always taking the smallest available original index.
        let mut down = vec![ElemSet::EMPTY; n];
        for (a, u) in up.iter().enumerate() {
            for b in u.iter() {
                down[b].insert(a);
            }
        }
        let mut placed = ElemSet::EMPTY;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .find(|&x| !placed.contains(x) && down[x].difference(placed).len() == 1)
                .expect("acyclic relation always has a minimal unplaced element");
            placed.insert(next);
            order.push(next);
        }
        let mut new_index = vec![0; n];
        for (pos, &old) in order.iter().enumerate() {
            new_index[old] = pos;
        }
        let relabel = |s: ElemSet| s.iter().map(|x| new_index[x]).collect::<ElemSet>();
        let up: Vec<ElemSet> = order.iter().map(|&old| relabel(up[old])).collect();
        let down: Vec<ElemSet> = order.iter().map(|&old| relabel(down[old])).collect();
        let labels: Vec<String> = order.iter().map(|&old| labels[old].clone()).collect();

        let full = ElemSet::full(n);
        if up[0] != full {
            return Err(LatticeError::NoBottom);
        }
        if down[n - 1] != full {
            return Err(LatticeError::NoTop);
        }
        Ok(FinitePoset { up, down, labels })
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn le(&self, a: Elem, b: Elem) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.le(a, b)
    }

    /// `{b : a <= b}`
    pub fn up_set(&self, a: Elem) -> ElemSet {
        self.up[a]
    }

    /// `{b : b <= a}`
    pub fn down_set(&self, a: Elem) -> ElemSet {
        self.down[a]
    }

    pub fn bottom(&self) -> Elem {
        0
    }

    pub fn top(&self) -> Elem {
        self.size() - 1
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in 0..self.size() {
            for b in self.up[a].iter().filter(|&b| b != a) {
                let between = self.up[a]
                    .intersection(self.down[b])
                    .difference(ElemSet::singleton(a).with(b));
                if between.is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Greatest element of `s` when `s` has one.
    pub fn maximum(&self, s: ElemSet) -> Option<Elem> {
        s.iter().find(|&m| s.is_subset(self.down[m]))
    }

    /// Least element of `s` when `s` has one.
    pub fn minimum(&self, s: ElemSet) -> Option<Elem> {
        s.iter().find(|&m| s.is_subset(self.up[m]))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size()).all(|a| self.up[a].union(self.down[a]) == self.carrier())
    }
}

fn check_size(size: usize) -> Result<(), LatticeError> {
    if size == 0 {
        return Err(LatticeError::Empty);
    }
    if size > MAX_CARRIER {
        return Err(LatticeError::TooLarge {
            size,
            limit: MAX_CARRIER,
        });
    }
    Ok(())
}
