//! Seeded generators for interval-set corpora.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use super::{ExtRat, RationalOpen};

/// Endpoints are drawn from `[-ENDPOINT_RANGE, ENDPOINT_RANGE]`.
pub const ENDPOINT_RANGE: i64 = 3;

/// A rational `p/q` with `1 ≤ q ≤ max_den` and `|p/q| ≤ bound`.
pub fn random_rational<R: Rng>(rng: &mut R, max_den: i64, bound: i64) -> BigRational {
    let den = rng.gen_range(1..=max_den.max(1));
    let num = rng.gen_range(-bound * den..=bound * den);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// An open set with at most `max_components` components. Some components
/// are made to share an endpoint, and the outermost endpoints are
/// occasionally infinite, so the result is often not regular.
pub fn random_open<R: Rng>(rng: &mut R, max_components: usize, max_den: i64) -> RationalOpen {
    let k = rng.gen_range(0..=max_components);
    let mut points: Vec<BigRational> = (0..2 * k)
        .map(|_| random_rational(rng, max_den, ENDPOINT_RANGE))
        .collect();
    points.sort();
    points.dedup();
    let mut ends: Vec<ExtRat> = points.into_iter().map(ExtRat::Fin).collect();
    if ends.len() % 2 == 1 {
        ends.pop();
    }
    if ends.is_empty() {
        return RationalOpen::empty();
    }
    if rng.gen_bool(0.1) {
        ends[0] = ExtRat::NegInf;
    }
    if rng.gen_bool(0.1) {
        let last = ends.len() - 1;
        ends[last] = ExtRat::PosInf;
    }
    let mut raw: Vec<(ExtRat, ExtRat)> = ends
        .chunks(2)
        .map(|c| (c[0].clone(), c[1].clone()))
        .collect();
    for i in 1..raw.len() {
        if rng.gen_bool(0.25) {
            raw[i].0 = raw[i - 1].1.clone();
        }
    }
    RationalOpen::normalize(raw).expect("generated endpoints are strictly increasing")
}

/// `A**` for a random `A`; never more components than `A`.
pub fn random_regular_open<R: Rng>(
    rng: &mut R,
    max_components: usize,
    max_den: i64,
) -> RationalOpen {
    random_open(rng, max_components, max_den).regularize()
}

/// Up to `count` distinct rationals outside `U ∪ {0}`. Finite endpoints of
/// `U` come first, since boundary points are the delicate case.
pub fn sample_points_outside<R: Rng>(
    rng: &mut R,
    u: &RationalOpen,
    count: usize,
    max_den: i64,
) -> Vec<BigRational> {
    let admissible = |x: &BigRational| !x.is_zero() && !u.contains(x);
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    for x in u.endpoints() {
        if out.len() < count && admissible(&x) && !out.contains(&x) {
            out.push(x);
        }
    }
    let mut attempts = 0;
    while out.len() < count && attempts < 1000 * count {
        attempts += 1;
        let x = random_rational(rng, max_den, ENDPOINT_RANGE + 1);
        if admissible(&x) && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}
