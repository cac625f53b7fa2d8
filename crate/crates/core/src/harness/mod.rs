//! Runs registered claims over a ring, exhaustively or on seeded samples, and
//! hunts ring families for counterexamples to converse statements.

mod registry;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::ring::{Element, Ring, RingError, RingSpec};

pub use registry::{find_claim, registry, Claim, Eval, Expected, Predicate};

pub const DEFAULT_BUDGET: u64 = 50_000_000;
pub const BUDGET_ENV: &str = "BCRING_BUDGET";

/// Tuples per work unit handed to the pool.
const CHUNK: u64 = 2048;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("claim `{0}` is expected to hold; only converse claims can be hunted")]
    NotAHuntClaim(String),
    #[error("{tuples} tuples over {ring} exceed the budget of {budget}")]
    BudgetExceeded { ring: String, tuples: u128, budget: u64 },
    #[error("bad mode `{0}`: expected `exhaustive` or `sample:<seed>:<count>`")]
    BadMode(String),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample { seed: u64, count: u64 },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => f.write_str("exhaustive"),
            Mode::Sample { seed, count } => write!(f, "sample:{seed}:{count}"),
        }
    }
}

impl FromStr for Mode {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HarnessError::BadMode(s.to_string());
        match s.trim() {
            "exhaustive" => Ok(Mode::Exhaustive),
            other => {
                let mut parts = other.split(':');
                match (parts.next(), parts.next(), parts.next(), parts.next()) {
                    (Some("sample"), Some(seed), Some(count), None) => Ok(Mode::Sample {
                        seed: seed.parse().map_err(|_| bad())?,
                        count: count.parse().map_err(|_| bad())?,
                    }),
                    _ => Err(bad()),
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    /// Worker threads; 0 uses the global pool.
    pub workers: usize,
    /// Maximum number of tuples evaluated exhaustively.
    pub budget: u64,
    /// Failures kept in a report (all are counted).
    pub max_failures: usize,
}

impl Default for Options {
    fn default() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Options { workers: 0, budget, max_failures: 64 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Element literals, in claim argument order.
    pub tuple: Vec<String>,
    pub conditions: Vec<Condition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    CounterexampleFound,
    NoCounterexample,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub claim: String,
    pub ring: String,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub failure_count: u64,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
}

impl TheoremReport {
    /// False only for a theorem claim with failures.
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

fn claim(id: &str) -> Result<&'static Claim, HarnessError> {
    find_claim(id).ok_or_else(|| HarnessError::UnknownClaim(id.to_string()))
}

fn tuple_count(ring: &Ring, arity: usize) -> u128 {
    (ring.cardinality() as u128).pow(arity as u32)
}

/// Decodes tuple number `index` in lexicographic order (first slot most significant).
fn decode(ring: &Ring, arity: usize, mut index: u64, out: &mut [Element]) {
    let n = ring.cardinality() as u64;
    for slot in (0..arity).rev() {
        out[slot] = ring.element(index % n).expect("code in range");
        index /= n;
    }
}

fn failure(ring: &Ring, tuple: &[Element], eval: Eval) -> Failure {
    Failure {
        tuple: tuple.iter().map(|&x| ring.format_element(x)).collect(),
        conditions: eval
            .conditions
            .into_iter()
            .map(|(name, holds)| Condition { name: name.to_string(), holds })
            .collect(),
    }
}

#[derive(Default)]
struct Partial {
    cases: u64,
    failures: Vec<Failure>,
    failure_count: u64,
}

impl Partial {
    fn record(&mut self, ring: &Ring, claim: &Claim, tuple: &[Element], keep: usize) {
        self.cases += 1;
        let eval = (claim.predicate)(ring, tuple);
        if !eval.holds {
            self.failure_count += 1;
            if self.failures.len() < keep {
                self.failures.push(failure(ring, tuple, eval));
            }
        }
    }
}

fn with_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T, HarnessError> {
    if workers == 0 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    Ok(pool.install(job))
}

/// Evaluates a claim on every tuple (or on seeded random tuples) of the ring.
///
/// Reports are deterministic in `(claim, ring, mode)` apart from `elapsed_ms`:
/// the tuple space is cut into fixed chunks whose results are merged in order.
pub fn verify(claim_id: &str, spec: &RingSpec, mode: Mode, opts: &Options) -> Result<TheoremReport, HarnessError> {
    let claim = claim(claim_id)?;
    let ring = Ring::new(spec.clone())?;
    verify_on(claim, &ring, mode, opts)
}

/// As [`verify`], for an already built ring.
pub fn verify_on(claim: &Claim, ring: &Ring, mode: Mode, opts: &Options) -> Result<TheoremReport, HarnessError> {
    let start = Instant::now();
    let arity = claim.arity;
    let keep = opts.max_failures;
    let partials: Vec<Partial> = match mode {
        Mode::Exhaustive => {
            let total = tuple_count(ring, arity);
            if total > opts.budget as u128 {
                return Err(HarnessError::BudgetExceeded {
                    ring: ring.spec().to_string(),
                    tuples: total,
                    budget: opts.budget,
                });
            }
            let total = total as u64;
            let chunks = total.div_ceil(CHUNK);
            with_pool(opts.workers, || {
                (0..chunks)
                    .into_par_iter()
                    .map(|k| {
                        let (lo, hi) = (k * CHUNK, ((k + 1) * CHUNK).min(total));
                        let mut buf = vec![ring.zero(); arity];
                        let mut partial = Partial::default();
                        for index in lo..hi {
                            decode(ring, arity, index, &mut buf);
                            partial.record(ring, claim, &buf, keep);
                        }
                        partial
                    })
                    .collect()
            })?
        }
        Mode::Sample { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = ring.cardinality() as u64;
            let flat: Vec<Element> = (0..count * arity as u64)
                .map(|_| ring.element(rng.gen_range(0..n)).expect("code in range"))
                .collect();
            with_pool(opts.workers, || {
                flat.par_chunks((CHUNK as usize * arity).max(1))
                    .map(|chunk| {
                        let mut partial = Partial::default();
                        for tuple in chunk.chunks(arity.max(1)) {
                            partial.record(ring, claim, tuple, keep);
                        }
                        partial
                    })
                    .collect()
            })?
        }
    };

    let mut cases = 0;
    let mut failure_count = 0;
    let mut failures = Vec::new();
    for p in partials {
        cases += p.cases;
        failure_count += p.failure_count;
        failures.extend(p.failures);
    }
    failures.truncate(keep);
    let verdict = match (claim.expected, failure_count == 0) {
        (Expected::Holds, true) => Verdict::Pass,
        (Expected::Holds, false) => Verdict::Fail,
        (Expected::FailsSomewhere, true) => Verdict::NoCounterexample,
        (Expected::FailsSomewhere, false) => Verdict::CounterexampleFound,
    };
    let seed = match mode {
        Mode::Sample { seed, .. } => Some(seed),
        Mode::Exhaustive => None,
    };
    Ok(TheoremReport {
        claim: claim.id.to_string(),
        ring: ring.spec().to_string(),
        mode: mode.to_string(),
        seed,
        cases,
        failures,
        failure_count,
        elapsed_ms: start.elapsed().as_millis() as u64,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HuntOutcome {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tuple: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditions: Option<Vec<Condition>>,
}

/// First counterexample to a converse claim, scanning the rings in order and
/// each ring's tuples lexicographically. Finding none is a valid outcome.
pub fn hunt(claim_id: &str, family: &[RingSpec], opts: &Options) -> Result<HuntOutcome, HarnessError> {
    let claim = claim(claim_id)?;
    if claim.expected != Expected::FailsSomewhere {
        return Err(HarnessError::NotAHuntClaim(claim_id.to_string()));
    }
    for spec in family {
        let ring = Ring::new(spec.clone())?;
        let total = tuple_count(&ring, claim.arity);
        if total > opts.budget as u128 {
            return Err(HarnessError::BudgetExceeded { ring: spec.to_string(), tuples: total, budget: opts.budget });
        }
        let mut buf = vec![ring.zero(); claim.arity];
        for index in 0..total as u64 {
            decode(&ring, claim.arity, index, &mut buf);
            let eval = (claim.predicate)(&ring, &buf);
            if !eval.holds {
                let f = failure(&ring, &buf, eval);
                return Ok(HuntOutcome {
                    found: true,
                    ring: Some(spec.to_string()),
                    tuple: Some(f.tuple),
                    conditions: Some(f.conditions),
                });
            }
        }
    }
    Ok(HuntOutcome { found: false, ring: None, tuple: None, conditions: None })
}
