//! Graphviz output for cover relations.

use std::fmt::Write as _;

use crate::lattice::FinitePoset;
use crate::topospace::FiniteSpace;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The Hasse diagram of `poset`, edges pointing upward.
pub fn poset_dot(name: &str, poset: &FinitePoset) -> String {
    let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(name));
    for i in 0..poset.size() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", escape(poset.label(i)));
    }
    for (a, b) in poset.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// Specialization order of a space: an edge `x -> y` for each cover
/// `x < y`, i.e. `x ∈ cl{y}` but not conversely.
pub fn specialization_dot(name: &str, space: &FiniteSpace) -> String {
    let sp = space.specialization();
    let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(name));
    for p in 0..space.points() {
        let _ = writeln!(out, "  p{p} [label=\"{p}\"];");
    }
    for (x, y) in sp.covers() {
        let _ = writeln!(out, "  p{x} -> p{y};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::named;
    use crate::sublocale::sc_frame;

    fn edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    #[test]
    fn chain_diagrams() {
        let c3 = named::chain(3);
        let d = poset_dot("C3", c3.poset());
        assert_eq!(d.lines().filter(|l| l.contains("[label=")).count(), 3);
        assert_eq!(edges(&d), 2);
        let sc = sc_frame(&c3).unwrap();
        let d = poset_dot("sc", sc.frame().poset());
        assert_eq!(edges(&d), 2);
        assert!(d.contains("label=\"{m,1}\""));
    }

    #[test]
    fn sierpinski_specialization() {
        let d = specialization_dot("S", &FiniteSpace::sierpinski());
        assert!(d.contains("p0 -> p1;"));
        assert_eq!(edges(&d), 1);
    }
}
