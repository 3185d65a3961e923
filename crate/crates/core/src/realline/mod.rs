//! Exact calculus on finite unions of rational intervals.
//!
//! This is the representable fragment of the frame of opens of the real
//! line: every set is a finite union of intervals with rational or infinite
//! endpoints, and all comparisons are exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

mod fuzz;
mod lemma;
mod sets;

pub use fuzz::{random_open, random_rational, random_regular_open, sample_points_outside};
pub use lemma::{
    generator, lemma1_obstruction, lemma1_second_check, lemma1_term, prop1_forcing,
    prop2_convergence, prop2_witness, ConvergenceCertificate, Coordinate, ForcingVerdict,
    KRealPair, ObstructionCertificate, SecondCheckReport, BOUNDARY_DEPTH,
};
pub use sets::{RationalClosed, RationalOpen};

/// A rational number or one of the two infinities.
///
/// The derived order puts `NegInf` below every rational and `PosInf` above.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtRat {
    NegInf,
    Fin(BigRational),
    PosInf,
}

impl ExtRat {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Fin(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtRat::Fin(r) => Some(r),
            _ => None,
        }
    }
}

impl From<BigRational> for ExtRat {
    fn from(r: BigRational) -> Self {
        ExtRat::Fin(r)
    }
}

impl From<i64> for ExtRat {
    fn from(n: i64) -> Self {
        ExtRat::Fin(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::NegInf => f.write_str("-inf"),
            ExtRat::Fin(r) => write!(f, "{r}"),
            ExtRat::PosInf => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtRat {
    type Err = RealLineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "-inf" | "-∞" => Ok(ExtRat::NegInf),
            "inf" | "+inf" | "∞" => Ok(ExtRat::PosInf),
            other => parse_rational(other).map(ExtRat::Fin),
        }
    }
}

/// Parses `num/den` or an integer. Denominators must be nonzero.
pub fn parse_rational(s: &str) -> Result<BigRational, RealLineError> {
    let s = s.trim();
    let bad = || RealLineError::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// `num/den` as an exact rational.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealLineError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty interval ({p},{q}): need p < q")]
    EmptyInterval { p: String, q: String },
    #[error("set {set} is not regular; its regularization is {regularization}")]
    NotRegular { set: String, regularization: String },
    #[error("point {x} lies in U; no obstruction exists")]
    PointInU { x: String },
    #[error("0 belongs to every term; no obstruction exists")]
    ZeroPoint,
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("point {x} lies inside the {coordinate} coordinate")]
    PointInside { x: String, coordinate: &'static str },
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl RealLineError {
    pub fn is_violation(&self) -> bool {
        matches!(self, RealLineError::TheoremViolation(_))
    }
}
