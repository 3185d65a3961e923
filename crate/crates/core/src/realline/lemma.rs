use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{RationalClosed, RationalOpen, RealLineError};

/// Depth to which membership of `0` in the second-coordinate witnesses is
/// replayed by [`prop2_convergence`].
pub const BOUNDARY_DEPTH: u64 = 20;

fn require_regular(u: &RationalOpen) -> Result<(), RealLineError> {
    let reg = u.regularize();
    if reg != *u {
        return Err(RealLineError::NotRegular {
            set: u.to_string(),
            regularization: reg.to_string(),
        });
    }
    Ok(())
}

fn require_index(n: u64) -> Result<(), RealLineError> {
    if n == 0 {
        Err(RealLineError::ZeroIndex)
    } else {
        Ok(())
    }
}

/// Least `N ≥ 1` with `1/N < |x|`, for `x ≠ 0`.
fn separating_index(x: &BigRational) -> Result<u64, RealLineError> {
    let n: BigInt = x.abs().recip().floor().to_integer() + 1;
    n.to_u64()
        .ok_or_else(|| RealLineError::Parse(format!("point {x} is too close to 0")))
}

fn term(u: &RationalOpen, n: u64) -> RationalOpen {
    u.closure().union(&RationalClosed::symmetric(n)).interior()
}

/// `int(cl U ∪ [-1/n, 1/n])`, checked against the second form
/// `(U ∪ (-1/n, 1/n))**`.
pub fn lemma1_term(u: &RationalOpen, n: u64) -> Result<RationalOpen, RealLineError> {
    require_regular(u)?;
    require_index(n)?;
    let t = term(u, n);
    let alt = u.union(&RationalOpen::symmetric(n)).regularize();
    if t != alt {
        return Err(RealLineError::TheoremViolation(format!(
            "term forms differ for U = {u}, n = {n}: {t} vs {alt}"
        )));
    }
    Ok(t)
}

/// Certifies that `x` is missing from the intersection of all terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionCertificate {
    pub x: BigRational,
    /// Least `N` with `1/N < |x|`.
    pub n: u64,
    /// `lemma1_term(U, N)`, which excludes `x`.
    pub term: RationalOpen,
}

impl ObstructionCertificate {
    /// Re-checks the certificate by exact membership.
    pub fn verify(&self, u: &RationalOpen) -> bool {
        let bound = BigRational::new(BigInt::from(1), BigInt::from(self.n));
        bound < self.x.abs() && term(u, self.n) == self.term && !self.term.contains(&self.x)
    }
}

pub fn lemma1_obstruction(
    u: &RationalOpen,
    x: &BigRational,
) -> Result<ObstructionCertificate, RealLineError> {
    require_regular(u)?;
    if x.is_zero() {
        return Err(RealLineError::ZeroPoint);
    }
    if u.contains(x) {
        return Err(RealLineError::PointInU { x: x.to_string() });
    }
    let n = separating_index(x)?;
    let mut prev = lemma1_term(u, 1)?;
    for k in 2..=n {
        let next = lemma1_term(u, k)?;
        if !next.is_subset(&prev) {
            return Err(RealLineError::TheoremViolation(format!(
                "terms are not decreasing for U = {u} at n = {k}"
            )));
        }
        prev = next;
    }
    if prev.contains(x) {
        return Err(RealLineError::TheoremViolation(format!(
            "{x} lies in term {n} = {prev} for U = {u}"
        )));
    }
    Ok(ObstructionCertificate {
        x: x.clone(),
        n,
        term: prev,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondCheckReport {
    pub n_checked: u64,
    pub zero_in_u: bool,
    /// `int(U ∪ {0})`, the interior of the intersection of all terms.
    pub limit_interior: RationalOpen,
    pub passed: bool,
    pub failure: Option<String>,
}

/// Checks `U ⊆ term(n)` and `0 ∈ term(n)` for `n ≤ N`, and that the interior
/// of the limit `U ∪ {0}` is `U` again.
pub fn lemma1_second_check(
    u: &RationalOpen,
    big_n: u64,
) -> Result<SecondCheckReport, RealLineError> {
    require_regular(u)?;
    require_index(big_n)?;
    let zero = BigRational::zero();
    let mut failure = None;
    for n in 1..=big_n {
        let t = lemma1_term(u, n)?;
        if !u.is_subset(&t) || !t.contains(&zero) {
            failure = Some(format!("term {n} = {t} does not contain U ∪ {{0}}"));
            break;
        }
    }
    let zero_in_u = u.contains(&zero);
    let limit_interior = u.interior_with_point(&zero);
    if failure.is_none() && limit_interior != *u {
        failure = Some(format!(
            "int(U ∪ {{0}}) = {limit_interior} differs from U = {u}"
        ));
    }
    Ok(SecondCheckReport {
        n_checked: big_n,
        zero_in_u,
        limit_interior,
        passed: failure.is_none(),
        failure,
    })
}

/// An element `(U, V)` of `K(Ω(ℝ))`: `V` regular and `U ⊆ V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KRealPair {
    first: RationalOpen,
    second: RationalOpen,
}

impl KRealPair {
    pub fn new(first: RationalOpen, second: RationalOpen) -> Result<Self, RealLineError> {
        if !second.is_regular() {
            return Err(RealLineError::InvalidPair(format!(
                "second coordinate {second} is not regular"
            )));
        }
        if !first.is_subset(&second) {
            return Err(RealLineError::InvalidPair(format!(
                "{first} is not contained in {second}"
            )));
        }
        Ok(KRealPair { first, second })
    }

    pub fn top() -> Self {
        KRealPair {
            first: RationalOpen::reals(),
            second: RationalOpen::reals(),
        }
    }

    pub fn first(&self) -> &RationalOpen {
        &self.first
    }

    pub fn second(&self) -> &RationalOpen {
        &self.second
    }

    /// Componentwise order.
    pub fn le(&self, other: &KRealPair) -> bool {
        self.first.is_subset(&other.first) && self.second.is_subset(&other.second)
    }
}

/// The generator `((-1/n,1/n) ∖ {0}, (-1/n,1/n))`.
pub fn generator(n: u64) -> (RationalOpen, RationalOpen) {
    let i = RationalOpen::symmetric(n);
    (i.remove_point(&BigRational::zero()), i)
}

/// `U_n = ((-1/n,1/n) ∖ {0}) ∪ U` and `V_n = ((-1/n,1/n) ∪ V)**`.
pub fn prop2_witness(pair: &KRealPair, n: u64) -> Result<KRealPair, RealLineError> {
    require_index(n)?;
    let (g1, g2) = generator(n);
    let un = g1.union(&pair.first);
    let vn = g2.union(&pair.second).regularize();
    let out = KRealPair::new(un, vn).map_err(|e| {
        RealLineError::TheoremViolation(format!(
            "witness {n} for ({}, {}) is not a pair: {e}",
            pair.first, pair.second
        ))
    })?;
    if !g1.is_subset(&out.first) || !g2.is_subset(&out.second) {
        return Err(RealLineError::TheoremViolation(format!(
            "witness {n} lies below the generator"
        )));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coordinate {
    First,
    Second,
}

impl Coordinate {
    pub fn name(self) -> &'static str {
        match self {
            Coordinate::First => "first",
            Coordinate::Second => "second",
        }
    }

    fn of(self, pair: &KRealPair) -> &RationalOpen {
        match self {
            Coordinate::First => &pair.first,
            Coordinate::Second => &pair.second,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvergenceCertificate {
    /// `x` is missing from the chosen coordinate of witness `n`.
    Excluded {
        coordinate: Coordinate,
        n: u64,
        stage: RationalOpen,
    },
    /// `0 ∉ V` yet `0 ∈ V_n` for every `n ≤ checked_up_to`. The intersection
    /// of all `V_n` is `V ∪ {0}`, and its meet in the Booleanization,
    /// `int(V ∪ {0})**`, is `limit`, which excludes `0`.
    PointBoundary {
        checked_up_to: u64,
        limit: RationalOpen,
    },
}

/// Certifies that a point outside a coordinate of `(U, V)` drops out of the
/// witnesses `(U_n, V_n)`.
///
/// `N` is the least index with `1/N < |x|`, except that `x = 0` in the first
/// coordinate uses `N = 1`.
pub fn prop2_convergence(
    pair: &KRealPair,
    x: &BigRational,
    which: Coordinate,
) -> Result<ConvergenceCertificate, RealLineError> {
    if which.of(pair).contains(x) {
        return Err(RealLineError::PointInside {
            x: x.to_string(),
            coordinate: which.name(),
        });
    }
    if x.is_zero() && which == Coordinate::Second {
        for n in 1..=BOUNDARY_DEPTH {
            let w = prop2_witness(pair, n)?;
            if !w.second.contains(x) {
                return Err(RealLineError::TheoremViolation(format!(
                    "0 missing from V_{n} = {}",
                    w.second
                )));
            }
        }
        let limit = pair.second.interior_with_point(x).regularize();
        if limit.contains(x) {
            return Err(RealLineError::TheoremViolation(format!(
                "Boolean meet {limit} of the V_n contains 0"
            )));
        }
        return Ok(ConvergenceCertificate::PointBoundary {
            checked_up_to: BOUNDARY_DEPTH,
            limit,
        });
    }
    let n = if x.is_zero() { 1 } else { separating_index(x)? };
    let w = prop2_witness(pair, n)?;
    let stage = which.of(&w).clone();
    if stage.contains(x) {
        return Err(RealLineError::TheoremViolation(format!(
            "{x} still lies in the {} coordinate {stage} at n = {n}",
            which.name()
        )));
    }
    Ok(ConvergenceCertificate::Excluded {
        coordinate: which,
        n,
        stage,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForcingVerdict {
    /// The first coordinate covers `ℝ ∖ {0}` and `(-1/n,1/n)`, so the pair is
    /// the top `(ℝ, ℝ)`.
    Forced,
    NotForced,
}

pub fn prop1_forcing(candidate: &KRealPair, n: u64) -> Result<ForcingVerdict, RealLineError> {
    require_index(n)?;
    let covers_punctured = RationalOpen::punctured_reals().is_subset(&candidate.first);
    let covers_interval = RationalOpen::symmetric(n).is_subset(&candidate.first);
    if !(covers_punctured && covers_interval) {
        return Ok(ForcingVerdict::NotForced);
    }
    if *candidate != KRealPair::top() {
        return Err(RealLineError::TheoremViolation(format!(
            "({}, {}) covers ℝ ∖ {{0}} and (-1/{n},1/{n}) but is not (ℝ, ℝ)",
            candidate.first, candidate.second
        )));
    }
    Ok(ForcingVerdict::Forced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realline::rat;

    fn open(s: &str) -> RationalOpen {
        s.parse().unwrap()
    }

    fn pair(u: &str, v: &str) -> KRealPair {
        KRealPair::new(open(u), open(v)).unwrap()
    }

    #[test]
    fn term_examples() {
        let u = open("(1,2)");
        assert_eq!(lemma1_term(&u, 1).unwrap().to_string(), "(-1,2)");
        assert_eq!(lemma1_term(&u, 4).unwrap().to_string(), "(-1/4,1/4);(1,2)");
        assert_eq!(
            lemma1_term(&RationalOpen::empty(), 3).unwrap().to_string(),
            "(-1/3,1/3)"
        );
    }

    #[test]
    fn term_rejects_non_regular() {
        let err = lemma1_term(&open("(0,1);(1,2)"), 1).unwrap_err();
        assert_eq!(
            err,
            RealLineError::NotRegular {
                set: "(0,1);(1,2)".into(),
                regularization: "(0,2)".into()
            }
        );
        assert_eq!(
            lemma1_term(&open("(1,2)"), 0),
            Err(RealLineError::ZeroIndex)
        );
    }

    #[test]
    fn obstruction_examples() {
        let u = open("(1,2)");
        let c = lemma1_obstruction(&u, &rat(1, 2)).unwrap();
        assert_eq!(c.n, 3);
        assert_eq!(c.term.to_string(), "(-1/3,1/3);(1,2)");
        assert!(c.verify(&u));
        let c = lemma1_obstruction(&u, &rat(5, 1)).unwrap();
        assert_eq!(c.n, 1);
        assert_eq!(c.term.to_string(), "(-1,2)");
        assert_eq!(
            lemma1_obstruction(&u, &rat(0, 1)),
            Err(RealLineError::ZeroPoint)
        );
        assert!(matches!(
            lemma1_obstruction(&u, &rat(3, 2)),
            Err(RealLineError::PointInU { .. })
        ));
    }

    #[test]
    fn obstruction_at_boundary_point() {
        let u = open("(1/3,1)");
        let c = lemma1_obstruction(&u, &rat(1, 3)).unwrap();
        assert_eq!(c.n, 4);
        assert!(c.verify(&u));
        let c = lemma1_obstruction(&u, &rat(-1, 3)).unwrap();
        assert!(c.verify(&u));
    }

    #[test]
    fn second_check_examples() {
        let r = lemma1_second_check(&open("(1,2)"), 10).unwrap();
        assert!(r.passed && !r.zero_in_u);
        assert_eq!(r.limit_interior, open("(1,2)"));
        let r = lemma1_second_check(&open("(-1,1)"), 5).unwrap();
        assert!(r.passed && r.zero_in_u);
        let r = lemma1_second_check(&RationalOpen::empty(), 5).unwrap();
        assert!(r.passed);
        assert!(r.limit_interior.is_empty());
    }

    #[test]
    fn pair_validation() {
        assert!(matches!(
            KRealPair::new(open("(0,3)"), open("(1,2)")),
            Err(RealLineError::InvalidPair(_))
        ));
        assert!(matches!(
            KRealPair::new(open("(0,1)"), open("(0,1);(1,2)")),
            Err(RealLineError::InvalidPair(_))
        ));
        assert!(KRealPair::new(open("(0,1);(1,2)"), open("(0,2)")).is_ok());
    }

    #[test]
    fn witness_examples() {
        let w = prop2_witness(&pair("(1,2)", "(1,2)"), 2).unwrap();
        assert_eq!(w.first().to_string(), "(-1/2,0);(0,1/2);(1,2)");
        assert_eq!(w.second().to_string(), "(-1/2,1/2);(1,2)");
        let w = prop2_witness(&pair("", ""), 3).unwrap();
        assert_eq!(w.first().to_string(), "(-1/3,0);(0,1/3)");
        assert_eq!(w.second().to_string(), "(-1/3,1/3)");
        assert_eq!(
            prop2_witness(&KRealPair::top(), 7).unwrap(),
            KRealPair::top()
        );
    }

    #[test]
    fn convergence_examples() {
        let p = pair("(1,2)", "(1,2)");
        match prop2_convergence(&p, &rat(1, 2), Coordinate::First).unwrap() {
            ConvergenceCertificate::Excluded { n, .. } => assert_eq!(n, 3),
            other => panic!("unexpected {other:?}"),
        }
        let e = pair("", "");
        match prop2_convergence(&e, &rat(0, 1), Coordinate::First).unwrap() {
            ConvergenceCertificate::Excluded { n, .. } => assert_eq!(n, 1),
            other => panic!("unexpected {other:?}"),
        }
        match prop2_convergence(&e, &rat(0, 1), Coordinate::Second).unwrap() {
            ConvergenceCertificate::PointBoundary {
                checked_up_to,
                limit,
            } => {
                assert_eq!(checked_up_to, BOUNDARY_DEPTH);
                assert!(limit.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            prop2_convergence(&p, &rat(3, 2), Coordinate::Second),
            Err(RealLineError::PointInside { .. })
        ));
    }

    #[test]
    fn forcing_examples() {
        let c = KRealPair::new(
            RationalOpen::punctured_reals().union(&RationalOpen::symmetric(5)),
            RationalOpen::reals(),
        )
        .unwrap();
        assert_eq!(prop1_forcing(&c, 5).unwrap(), ForcingVerdict::Forced);
        let c = KRealPair::new(RationalOpen::punctured_reals(), RationalOpen::reals()).unwrap();
        assert_eq!(prop1_forcing(&c, 5).unwrap(), ForcingVerdict::NotForced);
        assert_eq!(
            prop1_forcing(&KRealPair::top(), 9).unwrap(),
            ForcingVerdict::Forced
        );
    }
}
