//! Corpus-level campaigns: generate frames, spaces and interval sets, run
//! every requested check on them in parallel, and merge the outcomes into a
//! report in generation order.

mod checks;
pub mod corpus;

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::Budget;
use crate::lattice::named::NamedFrame;
use crate::realline::{random_open, random_regular_open, KRealPair, RationalOpen};
use crate::topospace::{enumerate_topologies, random_space, FiniteSpace, TopoError};

pub use checks::frame_law_violation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    FrameLaws,
    Identities,
    CoframeLaw,
    ScFrame,
    Ppt,
    Symmetry,
    SpaceProposition,
    TdRemark,
    BooleanLaws,
    Lemma1,
    Prop2,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::FrameLaws,
        Check::Identities,
        Check::CoframeLaw,
        Check::ScFrame,
        Check::Ppt,
        Check::Symmetry,
        Check::SpaceProposition,
        Check::TdRemark,
        Check::BooleanLaws,
        Check::Lemma1,
        Check::Prop2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::FrameLaws => "frame-laws",
            Check::Identities => "identities",
            Check::CoframeLaw => "coframe-law",
            Check::ScFrame => "sc-frame",
            Check::Ppt => "ppt",
            Check::Symmetry => "symmetry",
            Check::SpaceProposition => "space-proposition",
            Check::TdRemark => "td-remark",
            Check::BooleanLaws => "boolean-laws",
            Check::Lemma1 => "lemma1",
            Check::Prop2 => "prop2",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = CampaignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| CampaignError::UnknownCheck(s.trim().to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CampaignError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{what} of {size} exceeds the limit of {limit}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error(transparent)]
    Topology(#[from] TopoError),
}

/// What to generate and which checks to run. Every run is reproducible
/// from these fields.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignSpec {
    pub seed: u64,
    /// Distributive lattices of every size up to this bound.
    pub max_lattice_size: usize,
    /// Add the curated named frames to the lattice corpus.
    pub curated: bool,
    /// Also check frame laws on every labeling of every lattice.
    pub all_labelings: bool,
    /// Exhaustive topologies on up to this many points.
    pub max_points: usize,
    /// Random topologies on five points.
    pub random_spaces: usize,
    /// Fuzzed regular opens for the boolean-laws and lemma1 checks.
    pub interval_sets: usize,
    /// Fuzzed pairs `(U, V)` for the prop2 check.
    pub interval_pairs: usize,
    pub max_components: usize,
    pub max_denominator: i64,
    /// Sampled points per interval set.
    pub points_per_set: usize,
    /// Terms and witnesses are checked for `n = 1..=max_n`.
    pub max_n: u64,
    pub checks: Vec<Check>,
}

impl Default for CampaignSpec {
    fn default() -> Self {
        CampaignSpec {
            seed: 42,
            max_lattice_size: 6,
            curated: true,
            all_labelings: true,
            max_points: 4,
            random_spaces: 100,
            interval_sets: 200,
            interval_pairs: 100,
            max_components: 6,
            max_denominator: 100,
            points_per_set: 20,
            max_n: 20,
            checks: Check::ALL.to_vec(),
        }
    }
}

impl CampaignSpec {
    pub fn with_checks(mut self, checks: &[Check]) -> Self {
        self.checks = checks.to_vec();
        self
    }

    fn wants(&self, c: Check) -> bool {
        self.checks.contains(&c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// A proven statement failed on the item.
    Violation,
    /// The check could not run, e.g. a budget was exceeded.
    Error,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Violation => "violation",
            Status::Error => "error",
        }
    }
}

/// Result of one check on one item: a status, data fields and an optional
/// detail message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub fields: Vec<(&'static str, String)>,
    pub detail: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            fields: Vec::new(),
            detail: None,
        }
    }

    pub fn violation(detail: String) -> Self {
        Outcome {
            status: Status::Violation,
            fields: Vec::new(),
            detail: Some(detail),
        }
    }

    pub fn error(detail: String) -> Self {
        Outcome {
            status: Status::Error,
            fields: Vec::new(),
            detail: Some(detail),
        }
    }

    pub fn field(mut self, key: &'static str, value: impl ToString) -> Self {
        self.fields.push((key, value.to_string()));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemResult {
    pub index: usize,
    pub kind: &'static str,
    pub name: String,
    pub check: Check,
    pub outcome: Outcome,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub seed: u64,
    pub items: Vec<ItemResult>,
    pub lattices: usize,
    pub spaces: usize,
    pub interval_sets: usize,
    pub interval_pairs: usize,
    /// Set when the run stopped at the first violation or error.
    pub aborted: bool,
    pub elapsed: Duration,
}

impl Report {
    pub fn violations(&self) -> usize {
        self.items
            .iter()
            .filter(|i| i.outcome.status == Status::Violation)
            .count()
    }

    pub fn errors(&self) -> usize {
        self.items
            .iter()
            .filter(|i| i.outcome.status == Status::Error)
            .count()
    }

    pub fn count(&self, check: Check) -> usize {
        self.items.iter().filter(|i| i.check == check).count()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0 && self.errors() == 0
    }

    /// 0 when every check passed, 2 on any violation or error. Axiom
    /// verdicts such as "not subfit" are data fields, never failures.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }

    /// Line-oriented `key=value` records: a header, one line per item, and
    /// a summary. Contains no timing, so equal specs give equal bytes.
    pub fn machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "campaign seed={} lattices={} spaces={} interval_sets={} interval_pairs={}",
            self.seed, self.lattices, self.spaces, self.interval_sets, self.interval_pairs
        );
        for item in &self.items {
            let _ = write!(
                out,
                "item={} kind={} name={} check={} status={}",
                item.index,
                item.kind,
                item.name,
                item.check,
                item.outcome.status.name()
            );
            for (k, v) in &item.outcome.fields {
                let _ = write!(out, " {k}={v}");
            }
            if let Some(d) = &item.outcome.detail {
                let _ = write!(out, " detail={d:?}");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "summary items={} violations={} errors={} aborted={} status={}",
            self.items.len(),
            self.violations(),
            self.errors(),
            self.aborted,
            if self.passed() { "pass" } else { "fail" }
        );
        out
    }

    /// Per-check counts, the first failure if any, and the elapsed time.
    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "campaign (seed {}): {} lattices, {} spaces, {} interval sets, {} pairs",
            self.seed, self.lattices, self.spaces, self.interval_sets, self.interval_pairs
        );
        for check in Check::ALL {
            let total = self.count(check);
            if total == 0 {
                continue;
            }
            let bad = self
                .items
                .iter()
                .filter(|i| i.check == check && i.outcome.status != Status::Pass)
                .count();
            let _ = writeln!(
                out,
                "  {:<18} {:>6} items  {:>3} failures",
                check.name(),
                total,
                bad
            );
        }
        if let Some(first) = self.items.iter().find(|i| i.outcome.status != Status::Pass) {
            let _ = writeln!(
                out,
                "first failure: {} {} [{}]: {}",
                first.kind,
                first.name,
                first.check,
                first.outcome.detail.as_deref().unwrap_or("")
            );
        }
        let _ = writeln!(
            out,
            "{} in {:.2?}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.elapsed
        );
        out
    }
}

enum Subject {
    LabeledLattices(usize),
    Frame(NamedFrame),
    Space(String, FiniteSpace),
    Interval {
        name: String,
        raw: RationalOpen,
        u: RationalOpen,
        v: RationalOpen,
    },
    Pair(String, KRealPair),
}

impl Subject {
    fn kind(&self) -> &'static str {
        match self {
            Subject::LabeledLattices(_) => "labeled",
            Subject::Frame(_) => "lattice",
            Subject::Space(..) => "space",
            Subject::Interval { .. } => "interval",
            Subject::Pair(..) => "pair",
        }
    }

    fn name(&self) -> String {
        match self {
            Subject::LabeledLattices(n) => format!("size{n}"),
            Subject::Frame(f) => f.name.clone(),
            Subject::Space(name, _) | Subject::Interval { name, .. } | Subject::Pair(name, _) => {
                name.clone()
            }
        }
    }
}

/// Per-item seed, independent of scheduling.
fn item_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64)
        .wrapping_add(1)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn subjects(spec: &CampaignSpec, budget: &Budget) -> Result<Vec<Subject>, CampaignError> {
    if spec.max_lattice_size > corpus::LATTICE_SIZE_LIMIT {
        return Err(CampaignError::BudgetExceeded {
            what: "lattice size",
            size: spec.max_lattice_size,
            limit: corpus::LATTICE_SIZE_LIMIT,
        });
    }
    let mut out = Vec::new();
    let lattice_checks = [
        Check::FrameLaws,
        Check::Identities,
        Check::CoframeLaw,
        Check::ScFrame,
        Check::Ppt,
        Check::Symmetry,
    ];
    if spec.all_labelings && spec.wants(Check::FrameLaws) {
        out.extend((1..=spec.max_lattice_size).map(Subject::LabeledLattices));
    }
    if lattice_checks.iter().any(|&c| spec.wants(c)) {
        out.extend(
            corpus::frame_corpus(spec.max_lattice_size, spec.curated)
                .into_iter()
                .map(Subject::Frame),
        );
    }
    if spec.wants(Check::SpaceProposition) || spec.wants(Check::TdRemark) {
        for n in 0..=spec.max_points {
            for (k, s) in enumerate_topologies(n, false, budget)?
                .into_iter()
                .enumerate()
            {
                out.push(Subject::Space(format!("T{n}.{k}"), s));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        for k in 0..spec.random_spaces {
            out.push(Subject::Space(
                format!("R5.{k}"),
                random_space(&mut rng, 5, 0.25),
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_add(1));
    if spec.wants(Check::BooleanLaws) || spec.wants(Check::Lemma1) {
        for k in 0..spec.interval_sets {
            let raw = random_open(&mut rng, spec.max_components, spec.max_denominator);
            let u = random_regular_open(&mut rng, spec.max_components, spec.max_denominator);
            let v = random_regular_open(&mut rng, spec.max_components, spec.max_denominator);
            out.push(Subject::Interval {
                name: format!("U{k}"),
                raw,
                u,
                v,
            });
        }
    }
    if spec.wants(Check::Prop2) {
        for k in 0..spec.interval_pairs {
            let v = random_regular_open(&mut rng, spec.max_components, spec.max_denominator);
            let u = v.intersect(&random_open(
                &mut rng,
                spec.max_components,
                spec.max_denominator,
            ));
            let pair = KRealPair::new(u, v).expect("U ⊆ V with V regular");
            out.push(Subject::Pair(format!("P{k}"), pair));
        }
    }
    Ok(out)
}

fn checks_for(subject: &Subject, spec: &CampaignSpec) -> Vec<Check> {
    let applicable: &[Check] = match subject {
        Subject::LabeledLattices(_) => &[Check::FrameLaws],
        Subject::Frame(_) => &[
            Check::FrameLaws,
            Check::Identities,
            Check::CoframeLaw,
            Check::ScFrame,
            Check::Ppt,
            Check::Symmetry,
        ],
        Subject::Space(_, s) if s.is_t0() => &[Check::SpaceProposition, Check::TdRemark],
        Subject::Space(..) => &[Check::SpaceProposition],
        Subject::Interval { .. } => &[Check::BooleanLaws, Check::Lemma1],
        Subject::Pair(..) => &[Check::Prop2],
    };
    applicable
        .iter()
        .copied()
        .filter(|&c| spec.wants(c))
        .collect()
}

fn run_one(
    subject: &Subject,
    check: Check,
    spec: &CampaignSpec,
    budget: &Budget,
    seed: u64,
) -> Outcome {
    match (subject, check) {
        (Subject::LabeledLattices(n), _) => checks::labeled_frame_laws(*n),
        (Subject::Frame(f), Check::FrameLaws) => checks::frame_laws(&f.frame),
        (Subject::Frame(f), Check::Identities) => checks::identities(&f.frame, budget, spec.seed),
        (Subject::Frame(f), Check::CoframeLaw) => checks::coframe_law(&f.frame, budget),
        (Subject::Frame(f), Check::ScFrame) => checks::sc_frame_law(&f.frame),
        (Subject::Frame(f), Check::Ppt) => checks::ppt(&f.frame, budget),
        (Subject::Frame(f), Check::Symmetry) => checks::symmetry(&f.frame),
        (Subject::Space(_, s), Check::SpaceProposition) => checks::space_proposition(s, budget),
        (Subject::Space(_, s), Check::TdRemark) => checks::td_remark(s),
        (Subject::Interval { raw, u, v, .. }, Check::BooleanLaws) => {
            checks::boolean_laws(raw, u, v)
        }
        (Subject::Interval { u, .. }, Check::Lemma1) => checks::lemma1(
            u,
            spec.max_n,
            spec.points_per_set,
            spec.max_denominator,
            seed,
        ),
        (Subject::Pair(_, p), Check::Prop2) => checks::prop2(
            p,
            spec.max_n,
            spec.points_per_set,
            spec.max_denominator,
            seed,
        ),
        (s, c) => Outcome::error(format!("check {c} does not apply to {}", s.kind())),
    }
}

/// Generates the corpus, runs all checks on a worker pool, and returns the
/// results in generation order. The report stops at the first item that
/// did not pass.
pub fn run_campaign(spec: &CampaignSpec, budget: &Budget) -> Result<Report, CampaignError> {
    let start = Instant::now();
    let subjects = subjects(spec, budget)?;
    let tasks: Vec<(usize, &Subject, Check)> = subjects
        .iter()
        .flat_map(|s| checks_for(s, spec).into_iter().map(move |c| (s, c)))
        .enumerate()
        .map(|(i, (s, c))| (i, s, c))
        .collect();
    let mut items: Vec<ItemResult> = tasks
        .par_iter()
        .map(|&(index, subject, check)| ItemResult {
            index,
            kind: subject.kind(),
            name: subject.name(),
            check,
            outcome: run_one(subject, check, spec, budget, item_seed(spec.seed, index)),
        })
        .collect();
    let mut aborted = false;
    if let Some(first) = items.iter().position(|i| i.outcome.status != Status::Pass) {
        items.truncate(first + 1);
        aborted = first + 1 < tasks.len();
    }
    let count = |pred: fn(&Subject) -> bool| subjects.iter().filter(|s| pred(s)).count();
    Ok(Report {
        seed: spec.seed,
        items,
        lattices: count(|s| matches!(s, Subject::Frame(_))),
        spaces: count(|s| matches!(s, Subject::Space(..))),
        interval_sets: count(|s| matches!(s, Subject::Interval { .. })),
        interval_pairs: count(|s| matches!(s, Subject::Pair(..))),
        aborted,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CampaignSpec {
        CampaignSpec {
            max_lattice_size: 4,
            max_points: 3,
            random_spaces: 5,
            interval_sets: 10,
            interval_pairs: 5,
            max_n: 6,
            points_per_set: 5,
            ..CampaignSpec::default()
        }
    }

    #[test]
    fn small_campaign_passes() {
        let r = run_campaign(&small(), &Budget::default()).unwrap();
        assert!(r.passed(), "{}", r.machine());
        assert_eq!(r.exit_code(), 0);
        assert!(!r.aborted);
        assert_eq!(r.spaces, 1 + 1 + 4 + 29 + 5);
    }

    #[test]
    fn machine_report_is_reproducible() {
        let spec = small();
        let a = run_campaign(&spec, &Budget::default()).unwrap().machine();
        let b = run_campaign(&spec, &Budget::default()).unwrap().machine();
        assert_eq!(a, b);
        let other = CampaignSpec { seed: 7, ..spec };
        assert_ne!(
            run_campaign(&other, &Budget::default()).unwrap().machine(),
            a
        );
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!(matches!(
            "bogus".parse::<Check>(),
            Err(CampaignError::UnknownCheck(_))
        ));
    }

    #[test]
    fn check_selection_limits_items() {
        let spec = small().with_checks(&[Check::Ppt]);
        let r = run_campaign(&spec, &Budget::default()).unwrap();
        assert!(r.items.iter().all(|i| i.check == Check::Ppt));
        assert_eq!(r.spaces, 0);
    }

    #[test]
    fn oversized_corpus_is_rejected() {
        let spec = CampaignSpec {
            max_lattice_size: 9,
            ..small()
        };
        assert!(matches!(
            run_campaign(&spec, &Budget::default()),
            Err(CampaignError::BudgetExceeded { .. })
        ));
    }
}
