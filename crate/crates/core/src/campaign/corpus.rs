use std::collections::HashSet;

use crate::elemset::ElemSet;
use crate::lattice::named::{self, NamedFrame};
use crate::lattice::{validate_frame, FiniteFrame, FinitePoset};

/// Largest lattice size the corpus generator accepts.
pub const LATTICE_SIZE_LIMIT: usize = 7;

/// Up-set vectors of every partial order on `0..n` that extends the index
/// order, has bottom `0` and top `n-1`, and is a distributive lattice.
///
/// Every finite lattice has such a labeling (a linear extension), so this
/// covers all distributive lattices of size `n` up to isomorphism, each
/// possibly several times.
fn natural_up_sets(n: usize) -> Vec<Vec<ElemSet>> {
    assert!(
        n <= LATTICE_SIZE_LIMIT,
        "lattice corpus is limited to {LATTICE_SIZE_LIMIT} elements"
    );
    if n == 0 {
        return Vec::new();
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                up[i].insert(j);
            }
        }
        // pairs only point upward in index, so a reverse sweep closes them
        for i in (0..n).rev() {
            let reach = up[i]
                .iter()
                .filter(|&j| j != i)
                .fold(up[i], |acc, j| acc.union(up[j]));
            up[i] = reach;
        }
        if up[0] != ElemSet::full(n) || !up.iter().all(|u| u.contains(n - 1)) {
            continue;
        }
        if seen.insert(up.clone()) {
            out.push(up);
        }
    }
    out.retain(|up| frame_from_up_sets(up, None).is_some());
    out
}

fn frame_from_up_sets(up: &[ElemSet], labels: Option<Vec<String>>) -> Option<FiniteFrame> {
    let n = up.len();
    let poset = FinitePoset::from_fn(n, |i, j| up[i].contains(j), labels).ok()?;
    validate_frame(poset).ok()
}

/// Distributive lattices of size `1..=max_size` with their natural
/// labelings, named `D<n>.<k>`.
pub fn natural_distributive_lattices(max_size: usize) -> Vec<NamedFrame> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        for (k, up) in natural_up_sets(n).into_iter().enumerate() {
            let frame = frame_from_up_sets(&up, None).expect("filtered to frames");
            out.push(NamedFrame {
                name: format!("D{n}.{k}"),
                frame,
            });
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Every distributive lattice order on the labels `0..n`, as the list of
/// pairs `(i, j)` with `i ≤ j`. Obtained by relabeling the natural
/// labelings with all permutations and removing duplicates.
pub fn labeled_distributive_relations(n: usize) -> Vec<Vec<(usize, usize)>> {
    let naturals = natural_up_sets(n);
    let perms = permutations(n);
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    for up in &naturals {
        for p in &perms {
            let mut bits = 0u64;
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in up[i] {
                    bits |= 1 << (p[i] * n + p[j]);
                    pairs.push((p[i], p[j]));
                }
            }
            if seen.insert(bits) {
                pairs.sort();
                out.push(pairs);
            }
        }
    }
    out
}

/// The relation as a frame whose label for each element is its original
/// name in `0..n`.
pub fn labeled_frame(n: usize, pairs: &[(usize, usize)]) -> FiniteFrame {
    let labels = (0..n).map(|i| i.to_string()).collect();
    let poset = FinitePoset::from_pairs(n, pairs, Some(labels))
        .expect("generated relation is a partial order");
    validate_frame(poset).expect("generated relation is a distributive lattice")
}

/// Natural-labeled distributive lattices up to `max_size`, followed by the
/// curated frames when asked.
pub fn frame_corpus(max_size: usize, curated: bool) -> Vec<NamedFrame> {
    let mut out = natural_distributive_lattices(max_size);
    if curated {
        out.extend(named::curated());
    }
    out
}
