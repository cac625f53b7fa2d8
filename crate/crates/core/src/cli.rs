//! Command-line front end. JSON goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success/found, 2 usage or validation error, 3 no inverse /
//! no counterexample, 4 a theorem claim failed.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bc::{self, DeltaSet, InverseKind};
use crate::harness::{self, Mode, Options, TheoremReport};
use crate::ring::{Ring, RingSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_FOUND: i32 = 3;
pub const EXIT_CLAIM_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "bcring", version, about = "Generalized inverses over finite rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide existence of an inverse and print a witness.
    Solve(SolveArgs),
    /// Verify registered claims over a ring.
    Check(CheckArgs),
    /// Search ring families for a counterexample to a converse claim.
    Hunt(HuntArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Ring spec, e.g. `zmod:8`, `mat:2:zmod:3`, `prod:(zmod:2;zmod:3)`.
    #[arg(long)]
    pub ring: String,
    /// Inverse kind, e.g. `left_bc`, `moore_penrose`, `delta`.
    #[arg(long)]
    pub kind: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// The element `d` for inverses along `d`.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    /// Equation subset for `delta`, e.g. `1,3`.
    #[arg(long)]
    pub delta: Option<String>,
    /// Also list every witness.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, conflicts_with = "all_claims", required_unless_present = "all_claims")]
    pub claim: Option<String>,
    #[arg(long)]
    pub all_claims: bool,
    #[arg(long)]
    pub ring: String,
    /// `exhaustive` or `sample:<seed>:<count>`.
    #[arg(long, default_value = "exhaustive")]
    pub mode: String,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct HuntArgs {
    #[arg(long)]
    pub claim: String,
    /// Comma-separated ring specs; `zmod:a..b` expands inclusively.
    #[arg(long)]
    pub rings: String,
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

/// A failure that maps to the usage exit code.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) {
    let text = serde_json::to_string_pretty(value).expect("serializable output");
    let _ = writeln!(out, "{text}");
}

/// Runs a parsed command, writing JSON to `out`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Solve(args) => solve(args, out),
        Command::Check(args) => check(args, out),
        Command::Hunt(args) => hunt(args, out),
    };
    result.unwrap_or_else(|Usage(msg)| {
        let _ = writeln!(err, "error: {msg}");
        EXIT_USAGE
    })
}

fn solve(args: SolveArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    let ring = Ring::new(args.ring.parse::<RingSpec>()?)?;
    let delta = args.delta.as_deref().map(str::parse::<DeltaSet>).transpose()?;
    let kind = InverseKind::parse(&args.kind, delta)?;
    let a = ring.parse_element(&args.a)?;
    let element = |name: &str, literal: &Option<String>| -> Result<_, Usage> {
        match literal {
            Some(text) => Ok(ring.parse_element(text)?),
            None => Err(Usage(format!("--{name} is required for kind `{}`", kind.name()))),
        }
    };
    let reject = |name: &str, literal: &Option<String>| -> Result<(), Usage> {
        match literal {
            Some(_) => Err(Usage(format!("--{name} does not apply to kind `{}`", kind.name()))),
            None => Ok(()),
        }
    };
    if args.delta.is_some() && !matches!(kind, InverseKind::Delta(_)) {
        return Err(Usage(format!("--delta does not apply to kind `{}`", kind.name())));
    }
    let (b, c) = if kind.takes_bc() {
        reject("d", &args.d)?;
        (element("b", &args.b)?, element("c", &args.c)?)
    } else if kind.takes_d() {
        reject("b", &args.b)?;
        reject("c", &args.c)?;
        let d = element("d", &args.d)?;
        (d, d)
    } else {
        reject("b", &args.b)?;
        reject("c", &args.c)?;
        reject("d", &args.d)?;
        (a, a)
    };

    let witness = bc::solve(&ring, kind, a, b, c)?;
    let mut body = json!({
        "exists": witness.is_some(),
        "kind": kind.to_string(),
        "witness": witness.as_ref().map(|w| ring.format_element(w.y)),
        "certificate": witness.as_ref().map_or(Value::Array(vec![]), |w| {
            serde_json::to_value(w.to_json(&ring).certificate).expect("serializable")
        }),
    });
    if let Some(index) = witness.as_ref().and_then(|w| w.index) {
        body["index"] = json!(index);
    }
    if args.all {
        let all: Vec<String> = bc::all_witnesses(&ring, kind, a, b, c)
            .into_iter()
            .map(|y| ring.format_element(y))
            .collect();
        body["all"] = json!(all);
    }
    emit(out, &body);
    Ok(if witness.is_some() { EXIT_OK } else { EXIT_NOT_FOUND })
}

fn check(args: CheckArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    let spec: RingSpec = args.ring.parse()?;
    let ring = Ring::new(spec)?;
    let mode: Mode = args.mode.parse()?;
    let opts = Options { workers: args.workers, ..Options::default() };
    let claims: Vec<&harness::Claim> = match &args.claim {
        Some(id) => vec![harness::find_claim(id).ok_or_else(|| Usage(format!("unknown claim `{id}`")))?],
        None => harness::registry().iter().collect(),
    };
    let reports = claims
        .into_iter()
        .map(|claim| harness::verify_on(claim, &ring, mode, &opts))
        .collect::<Result<Vec<TheoremReport>, _>>()?;
    let passed = reports.iter().all(TheoremReport::passed);
    if args.all_claims {
        emit(out, &reports);
    } else {
        emit(out, &reports[0]);
    }
    Ok(if passed { EXIT_OK } else { EXIT_CLAIM_FAILED })
}

/// Expands a comma-separated list of specs and `zmod:a..b` ranges.
pub fn parse_ring_list(text: &str) -> Result<Vec<RingSpec>, crate::ring::RingError> {
    let mut specs = Vec::new();
    for item in text.split(',').filter(|s| !s.trim().is_empty()) {
        specs.extend(RingSpec::parse_family(item)?);
    }
    Ok(specs)
}

fn hunt(args: HuntArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    let family = parse_ring_list(&args.rings)?;
    let opts = Options { workers: args.workers, ..Options::default() };
    let outcome = harness::hunt(&args.claim, &family, &opts)?;
    emit(out, &outcome);
    Ok(if outcome.found { EXIT_OK } else { EXIT_NOT_FOUND })
}
