use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::Budget;
use crate::lattice::{booleanization, pseudocomplement_image, regular_elements, FiniteFrame};
use crate::realline::{
    lemma1_obstruction, lemma1_second_check, lemma1_term, prop1_forcing, prop2_convergence,
    prop2_witness, sample_points_outside, ConvergenceCertificate, Coordinate, ForcingVerdict,
    KRealPair, RationalOpen,
};
use crate::separation::{
    check_ppt_theorem, describe_conditions, is_symmetric, is_weakly_subfit,
    pseudocomplement_formula_check,
};
use crate::sublocale::{
    all_sublocales, closed_open_identities_check, complement_property_violation, render_set,
    sc_frame,
};
use crate::topospace::{is_symmetric_space, space_proposition_check, td_remark_check, FiniteSpace};

use super::{corpus, Outcome};

/// First frame-law failure: Heyting adjunction, `a ≤ a**`, `a* = a***`, and
/// agreement of the two descriptions of the Booleanization.
pub fn frame_law_violation(frame: &FiniteFrame) -> Option<String> {
    let n = frame.size();
    let l = |a| frame.label(a);
    for a in 0..n {
        for b in 0..n {
            let imp = frame.heyting(a, b);
            for x in 0..n {
                if frame.le(x, imp) != frame.le(frame.meet(a, x), b) {
                    return Some(format!(
                        "adjunction fails at a={} b={} x={}",
                        l(a),
                        l(b),
                        l(x)
                    ));
                }
            }
        }
        let s = frame.pseudocomplement(a);
        let ss = frame.pseudocomplement(s);
        if !frame.le(a, ss) {
            return Some(format!("{} ≰ {}**", l(a), l(a)));
        }
        if frame.pseudocomplement(ss) != s {
            return Some(format!("{}* ≠ {}***", l(a), l(a)));
        }
    }
    if regular_elements(frame) != pseudocomplement_image(frame) {
        return Some(format!(
            "regular elements {} differ from pseudocomplements {}",
            render_set(frame, regular_elements(frame)),
            render_set(frame, pseudocomplement_image(frame))
        ));
    }
    match booleanization(frame).to_frame() {
        Ok((b, _)) if b.is_boolean() => None,
        Ok(_) => Some("Booleanization is not Boolean".into()),
        Err(e) => Some(format!("Booleanization is not a frame: {e}")),
    }
}

pub(super) fn labeled_frame_laws(n: usize) -> Outcome {
    let relations = corpus::labeled_distributive_relations(n);
    for pairs in &relations {
        let frame = corpus::labeled_frame(n, pairs);
        if let Some(v) = frame_law_violation(&frame) {
            return Outcome::violation(format!("labeling {pairs:?}: {v}"));
        }
    }
    Outcome::pass().field("labelings", relations.len())
}

pub(super) fn frame_laws(frame: &FiniteFrame) -> Outcome {
    match frame_law_violation(frame) {
        Some(v) => Outcome::violation(v),
        None => Outcome::pass().field("size", frame.size()),
    }
}

pub(super) fn identities(frame: &FiniteFrame, budget: &Budget, seed: u64) -> Outcome {
    let r = closed_open_identities_check(frame, budget, seed);
    if let Some(c) = r.counterexample {
        return Outcome::violation(c);
    }
    if let Some(a) = complement_property_violation(frame) {
        return Outcome::violation(format!(
            "c({0}) and o({0}) are not complements",
            frame.label(a)
        ));
    }
    Outcome::pass()
        .field("pairs", r.pairs_checked)
        .field("families", r.families_checked)
        .field("exhaustive", r.exhaustive)
}

pub(super) fn coframe_law(frame: &FiniteFrame, budget: &Budget) -> Outcome {
    let lattice = match all_sublocales(frame, budget) {
        Ok(l) => l,
        Err(e) => return Outcome::error(e.to_string()),
    };
    if let Some((s, t, u)) = lattice.coframe_law_violation() {
        return Outcome::violation(format!(
            "coframe law fails at {} {} {}",
            render_set(frame, s),
            render_set(frame, t),
            render_set(frame, u)
        ));
    }
    let points = frame.primes().len();
    if lattice.len() != 1usize << points {
        return Outcome::violation(format!(
            "{} sublocales but {} points",
            lattice.len(),
            points
        ));
    }
    Outcome::pass().field("sublocales", lattice.len())
}

pub(super) fn sc_frame_law(frame: &FiniteFrame) -> Outcome {
    let sc = match sc_frame(frame) {
        Ok(sc) => sc,
        Err(e) => return Outcome::violation(e.to_string()),
    };
    if let Some((s, t, u)) = sc.frame_law_violation() {
        return Outcome::violation(format!(
            "distributivity fails at {} {} {}",
            sc.render(s),
            sc.render(t),
            sc.render(u)
        ));
    }
    Outcome::pass().field("sc_size", sc.len())
}

pub(super) fn ppt(frame: &FiniteFrame, budget: &Budget) -> Outcome {
    match check_ppt_theorem(frame, budget) {
        Ok(r) => Outcome::pass()
            .field("subfit", r.subfit.holds())
            .field("sc_boolean", r.sc_boolean)
            .field("coincides", r.coincides),
        Err(e) if e.is_violation() => Outcome::violation(e.to_string()),
        Err(e) => Outcome::error(e.to_string()),
    }
}

pub(super) fn symmetry(frame: &FiniteFrame) -> Outcome {
    let r = match is_symmetric(frame) {
        Ok(r) => r,
        Err(e) if e.is_violation() => return Outcome::violation(e.to_string()),
        Err(e) => return Outcome::error(e.to_string()),
    };
    let pc = pseudocomplement_formula_check(frame);
    if let Some(v) = pc.violation {
        return Outcome::violation(v);
    }
    if pc.applicable && !is_weakly_subfit(frame).holds() {
        return Outcome::violation(
            "pseudocomplement formula applied to a frame that is not weakly subfit".into(),
        );
    }
    let mut out = Outcome::pass()
        .field("symmetric", r.holds())
        .field("weakly_subfit", pc.applicable)
        .field("pc_formula", if pc.applicable { "holds" } else { "n/a" });
    if !r.holds() {
        out = out.field(
            "witness",
            describe_conditions(frame, &r.conditions).replace(' ', ";"),
        );
    }
    out
}

pub(super) fn space_proposition(space: &FiniteSpace, budget: &Budget) -> Outcome {
    let sp = space.specialization();
    if sp.is_equivalence() != is_symmetric_space(space).0 {
        return Outcome::violation(
            "specialization symmetry disagrees with the equivalence test".into(),
        );
    }
    match space_proposition_check(space, budget) {
        Ok(r) => Outcome::pass()
            .field("points", space.points())
            .field("verdict", r.holds()),
        Err(e) if e.is_violation() => Outcome::violation(e.to_string()),
        Err(e) => Outcome::error(e.to_string()),
    }
}

pub(super) fn td_remark(space: &FiniteSpace) -> Outcome {
    match td_remark_check(space) {
        Ok(r) => Outcome::pass()
            .field("space_symmetric", r.space_symmetric)
            .field("locale_symmetric", r.locale_symmetric),
        Err(e) if e.is_violation() => Outcome::violation(e.to_string()),
        Err(e) => Outcome::error(e.to_string()),
    }
}

/// Boolean-algebra laws on the regular opens `u`, `v` and the Heyting
/// identities on the arbitrary open `raw`.
pub(super) fn boolean_laws(raw: &RationalOpen, u: &RationalOpen, v: &RationalOpen) -> Outcome {
    let reals = RationalOpen::reals();
    let fail = |what: &str| Outcome::violation(format!("{what} for raw={raw} u={u} v={v}"));
    if !raw.is_subset(&raw.regularize()) {
        return fail("a ≰ a**");
    }
    if raw.pseudocomplement() != raw.pseudocomplement().regularize() {
        return fail("a* ≠ a***");
    }
    if raw.to_string().parse::<RationalOpen>().ok().as_ref() != Some(raw) {
        return fail("canonical form does not round-trip");
    }
    for a in [u, v] {
        if !a.is_regular() {
            return fail("A** ≠ A");
        }
        if !a.intersect(&a.pseudocomplement()).is_empty() {
            return fail("A ∩ A* ≠ ∅");
        }
        if a.union(&a.pseudocomplement()).regularize() != reals {
            return fail("(A ∪ A*)** ≠ ℝ");
        }
    }
    let join = u.union(v).regularize();
    if !join.is_regular() || !u.is_subset(&join) || !v.is_subset(&join) {
        return fail("(A ∪ B)** is not a regular upper bound");
    }
    if !u.intersect(v).is_regular() {
        return fail("A ∩ B is not regular");
    }
    // De Morgan in the Booleanization
    if join.pseudocomplement() != u.pseudocomplement().intersect(&v.pseudocomplement()) {
        return fail("(A ∨ B)* ≠ A* ∩ B*");
    }
    Outcome::pass().field("components", u.components().len())
}

pub(super) fn lemma1(
    u: &RationalOpen,
    max_n: u64,
    points: usize,
    max_den: i64,
    seed: u64,
) -> Outcome {
    let zero = BigRational::zero();
    let mut prev: Option<RationalOpen> = None;
    for n in 1..=max_n {
        let t = match lemma1_term(u, n) {
            Ok(t) => t,
            Err(e) => return Outcome::violation(format!("U={u} n={n}: {e}")),
        };
        if !u.is_subset(&t) || !t.contains(&zero) {
            return Outcome::violation(format!("term {n} = {t} misses U ∪ {{0}} for U={u}"));
        }
        if let Some(p) = &prev {
            if !t.is_subset(p) {
                return Outcome::violation(format!("terms not decreasing at n={n} for U={u}"));
            }
        }
        prev = Some(t);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs = sample_points_outside(&mut rng, u, points, max_den);
    for x in &xs {
        match lemma1_obstruction(u, x) {
            Ok(c) if c.verify(u) => {}
            Ok(c) => {
                return Outcome::violation(format!(
                    "certificate N={} for x={x} fails to verify",
                    c.n
                ))
            }
            Err(e) => return Outcome::violation(format!("obstruction for x={x}, U={u}: {e}")),
        }
    }
    match lemma1_second_check(u, max_n) {
        Ok(r) if r.passed => {}
        Ok(r) => return Outcome::violation(r.failure.unwrap_or_default()),
        Err(e) => return Outcome::violation(e.to_string()),
    }
    Outcome::pass()
        .field("terms", max_n)
        .field("obstructions", xs.len())
}

pub(super) fn prop2(
    pair: &KRealPair,
    max_n: u64,
    points: usize,
    max_den: i64,
    seed: u64,
) -> Outcome {
    let mut prev: Option<KRealPair> = None;
    let mut witnesses = Vec::new();
    for n in 1..=max_n {
        let w = match prop2_witness(pair, n) {
            Ok(w) => w,
            Err(e) => return Outcome::violation(format!("n={n}: {e}")),
        };
        if !pair.le(&w) {
            return Outcome::violation(format!("(U,V) ≰ (U_{n},V_{n})"));
        }
        if let Some(p) = &prev {
            if !w.le(p) {
                return Outcome::violation(format!("witnesses not decreasing at n={n}"));
            }
        }
        prev = Some(w.clone());
        witnesses.push(w);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut certified = 0usize;
    for (which, set) in [
        (Coordinate::First, pair.first()),
        (Coordinate::Second, pair.second()),
    ] {
        let mut xs = sample_points_outside(&mut rng, set, points, max_den);
        let zero = BigRational::zero();
        if !set.contains(&zero) {
            xs.push(zero);
        }
        for x in &xs {
            match prop2_convergence(pair, x, which) {
                Ok(ConvergenceCertificate::Excluded { n, stage, .. }) => {
                    let w = match prop2_witness(pair, n) {
                        Ok(w) => w,
                        Err(e) => return Outcome::violation(e.to_string()),
                    };
                    let replay = if which == Coordinate::First {
                        w.first()
                    } else {
                        w.second()
                    };
                    if *replay != stage || stage.contains(x) {
                        return Outcome::violation(format!(
                            "convergence certificate for x={x} does not replay"
                        ));
                    }
                }
                Ok(ConvergenceCertificate::PointBoundary { limit, .. }) => {
                    if limit.contains(x) || !witnesses.iter().all(|w| w.second().contains(x)) {
                        return Outcome::violation(format!(
                            "boundary certificate for x={x} does not replay"
                        ));
                    }
                }
                Err(e) => return Outcome::violation(format!("convergence for x={x}: {e}")),
            }
            certified += 1;
        }
    }

    let punctured = RationalOpen::punctured_reals();
    let reals = RationalOpen::reals();
    let zero_in_u = pair.first().contains(&BigRational::zero());
    for (n, w) in (1..=max_n).zip(&witnesses) {
        let candidates = [
            (punctured.union(&RationalOpen::symmetric(n)), true),
            (w.first().union(&punctured), zero_in_u),
            (punctured.clone(), false),
        ];
        for (first, expect_forced) in candidates {
            let verdict = KRealPair::new(first.clone(), reals.clone())
                .map_err(|e| e.to_string())
                .and_then(|c| prop1_forcing(&c, n).map_err(|e| e.to_string()));
            let expected = if expect_forced {
                ForcingVerdict::Forced
            } else {
                ForcingVerdict::NotForced
            };
            if verdict != Ok(expected) {
                return Outcome::violation(format!(
                    "forcing on ({first}, ℝ) at n={n}: {verdict:?}"
                ));
            }
        }
    }
    Outcome::pass()
        .field("witnesses", max_n)
        .field("certificates", certified)
}
