//! Size budgets shared by the enumerating operations.

use crate::elemset::MAX_CARRIER;

/// Resource limits for exhaustive scans.
///
/// Every operation whose cost grows exponentially in the carrier size checks
/// the relevant field and fails with a `BudgetExceeded` error instead of
/// running away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Largest frame carrier accepted by the loader and the table builders.
    pub max_carrier: usize,
    /// Largest carrier for which the sublocale lattice is enumerated.
    pub max_sublocale_carrier: usize,
    /// Carriers up to this size get exhaustive family checks of the
    /// closed/open identities; larger ones are sampled.
    pub exhaustive_identity_limit: usize,
    /// Family arity used when identities are sampled.
    pub identity_family_arity: usize,
    /// Number of sampled families when identities are sampled.
    pub identity_samples: usize,
    /// Largest point count for exhaustive topology enumeration.
    pub max_points: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_carrier: MAX_CARRIER,
            max_sublocale_carrier: 32,
            exhaustive_identity_limit: 8,
            identity_family_arity: 3,
            identity_samples: 512,
            max_points: 4,
        }
    }
}

impl Budget {
    /// Applies a single user-facing `--budget <n>` cap to carrier sizes.
    pub fn with_carrier_cap(mut self, cap: usize) -> Self {
        let cap = cap.min(MAX_CARRIER);
        self.max_carrier = cap;
        self.max_sublocale_carrier = self.max_sublocale_carrier.min(cap);
        self
    }
}
