//! Shared inputs for the criterion benches.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pointfree::lattice::named::{self, NamedFrame};
use pointfree::realline::{random_regular_open, RationalOpen};

/// The curated frames, largest last.
pub fn frames() -> Vec<NamedFrame> {
    let mut v = named::curated();
    v.sort_by_key(|f| f.frame.size());
    v
}

/// `count` regular opens with up to six components, fixed by `seed`.
pub fn regular_opens(seed: u64, count: usize) -> Vec<RationalOpen> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_regular_open(&mut rng, 6, 100))
        .collect()
}
