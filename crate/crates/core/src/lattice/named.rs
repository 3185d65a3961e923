//! Named small frames used throughout tests and campaigns.

use super::{k_frame, product_frame, validate_frame, FiniteFrame, FinitePoset};

/// A frame with a human-readable name.
#[derive(Clone, Debug)]
pub struct NamedFrame {
    pub name: String,
    pub frame: FiniteFrame,
}

/// The `n`-element chain. `C3` is labeled `0 < m < 1`.
pub fn chain(n: usize) -> FiniteFrame {
    let labels = match n {
        1 => vec!["0".to_string()],
        3 => vec!["0".into(), "m".into(), "1".into()],
        _ => (0..n)
            .map(|i| match i {
                0 => "0".to_string(),
                i if i == n - 1 => "1".to_string(),
                i => format!("c{i}"),
            })
            .collect(),
    };
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let poset = FinitePoset::from_pairs(n, &covers, Some(labels)).expect("chain is a poset");
    validate_frame(poset).expect("chains are distributive")
}

/// The Boolean algebra of subsets of a `k`-element set. Index = bitmask, so
/// `B2` is `0, a, b, 1`.
pub fn boolean(k: usize) -> FiniteFrame {
    let n = 1usize << k;
    let labels = (0..n)
        .map(|mask| {
            if mask == 0 {
                "0".to_string()
            } else if mask == n - 1 {
                "1".to_string()
            } else {
                (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| (b'a' + i as u8) as char)
                    .collect()
            }
        })
        .collect();
    let poset =
        FinitePoset::from_fn(n, |a, b| a & !b == 0, Some(labels)).expect("powerset is a poset");
    validate_frame(poset).expect("powersets are distributive")
}

/// `L` with a fresh bottom adjoined below it.
pub fn lift(frame: &FiniteFrame) -> FiniteFrame {
    let n = frame.size() + 1;
    let mut labels = vec!["⊥".to_string()];
    labels.extend(frame.labels().iter().cloned());
    let poset = FinitePoset::from_fn(
        n,
        |a, b| a == 0 || (b > 0 && frame.le(a - 1, b - 1)),
        Some(labels),
    )
    .expect("lift is a poset");
    validate_frame(poset).expect("lift of a distributive lattice is distributive")
}

/// Curated named frames: chains, Boolean cubes, products and `K` frames.
pub fn curated() -> Vec<NamedFrame> {
    let mut out = Vec::new();
    let mut push = |name: &str, frame: FiniteFrame| {
        out.push(NamedFrame {
            name: name.to_string(),
            frame,
        })
    };
    for n in 1..=5 {
        push(&format!("C{n}"), chain(n));
    }
    push("B2", boolean(2));
    push("B3", boolean(3));
    push("1+B2", lift(&boolean(2)));
    let c3 = chain(3);
    let c2 = chain(2);
    push("C3xC2", product_frame(&c3, &c2).expect("product"));
    push("C3xC3", product_frame(&c3, &c3).expect("product"));
    push("K(C3)", k_frame(&c3).expect("K frame").into_frame());
    push("K(B2)", k_frame(&boolean(2)).expect("K frame").into_frame());
    push(
        "K(1+B2)",
        k_frame(&lift(&boolean(2))).expect("K frame").into_frame(),
    );
    push(
        "K(C3xC2)",
        k_frame(&product_frame(&c3, &c2).expect("product"))
            .expect("K frame")
            .into_frame(),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curated_sizes() {
        let sizes: Vec<(String, usize)> = curated()
            .into_iter()
            .map(|f| (f.name, f.frame.size()))
            .collect();
        let get = |n: &str| sizes.iter().find(|(name, _)| name == n).unwrap().1;
        assert_eq!(get("B3"), 8);
        assert_eq!(get("1+B2"), 5);
        assert_eq!(get("K(C3)"), 4);
        assert_eq!(get("K(B2)"), 9);
    }

    #[test]
    fn labels() {
        assert_eq!(chain(3).labels(), &["0", "m", "1"]);
        assert_eq!(boolean(2).labels(), &["0", "a", "b", "1"]);
        assert_eq!(boolean(3).label(3), "ab");
    }
}
