//! Command-line front end for the exact obstruction toolkit.
//!
//! Every subcommand performs exact computer algebra — rational, prime-field,
//! or polynomial arithmetic, never floating point — and emits a single JSON
//! run report: to stdout by default, or to the file named by `--out`. Stderr
//! carries human-readable progress lines only, so stdout can be piped or
//! diffed directly.
//!
//! Reports are deterministic: an identical invocation with an identical
//! `--seed` produces a byte-identical report. The only opt-out is
//! `--timings`, which adds a wall-clock field that naturally varies.
//!
//! Exit codes: `0` when every checked claim is upheld (informational
//! listings always exit 0), `1` when some claim is refuted by the
//! computation, `2` on usage errors or failures that prevented a check from
//! running at all.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use upsilon_core::catalog::{feasible_decomps, small_modules, CatalogError, LieFamily};
use upsilon_core::dendriform::{
    axiom_instance_counts, brace_product, dendriform_axiom_check, hopf_checks, prec_from_star,
    prop30_checks, succ_from_star, DendriformError, ShuffleProduct, TensorElem, Word,
};
use upsilon_core::exactmath::{is_prime_u64, prime_for_seed, ArithError};
use upsilon_core::prelie::{
    prelie_defect, prelie_from_ideal, prop6_checks, PreLieTable, PrelieError,
};
use upsilon_core::repbuild::{basis_g2, basis_sl, basis_so_odd, LieBasis, RepError};
use upsilon_core::symlinalg::LinAlgError;
use upsilon_core::verify::{
    all_upheld, g2_double_spec, sl6_wedge_spec, ClaimRegistry, ClaimStatus, VerifyConfig,
    VerifyError,
};
use upsilon_core::verygood::{
    adjoint_obstruction_report, obstruction_verdict, so_odd_obstruction_report, Certificate,
    ObstructionReport, Verdict, VeryGoodError,
};

/// Default seed for every randomized procedure, fixed so plain invocations
/// are reproducible run over run.
const DEFAULT_SEED: u64 = 0x00F0_1551;

// ---------------------------------------------------------------------------
// Errors: everything that prevents a check from *running* exits 2. A check
// that ran and found its claim false is not an error — it is a refutation,
// reported in the JSON verdicts and signalled by exit code 1.

#[derive(Debug)]
struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError(message.into())
}

macro_rules! wrap_errors {
    ($($ty:ty),* $(,)?) => {
        $(impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError(e.to_string())
            }
        })*
    };
}

wrap_errors!(
    ArithError,
    CatalogError,
    DendriformError,
    LinAlgError,
    PrelieError,
    RepError,
    VerifyError,
    VeryGoodError,
    serde_json::Error,
    std::io::Error,
);

// ---------------------------------------------------------------------------
// The run report. Field order is fixed by the struct declaration and the
// inner maps sort their keys, so serialization is deterministic; the
// wall-clock field is omitted entirely unless --timings asks for it.

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RunReport {
    command: String,
    inputs: Value,
    verdicts: Vec<Value>,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u64>,
    version: &'static str,
}

/// What a subcommand hands back to the shared report/exit plumbing.
struct Outcome {
    command: &'static str,
    inputs: Value,
    verdicts: Vec<Value>,
    upheld: bool,
}

/// A human-readable progress line; stderr only, never the report stream.
fn note(line: &str) {
    eprintln!("{line}");
}

// ---------------------------------------------------------------------------
// Command-line grammar.

#[derive(Parser)]
#[command(
    name = "upsilon",
    version,
    about = "Exact verification toolkit for pre-Lie obstructions on simple Lie algebras",
    long_about = "Exact verification toolkit for pre-Lie obstructions on simple Lie algebras.\n\n\
        Each subcommand writes one JSON run report to stdout (or --out) and keeps\n\
        human-readable notes on stderr. Identical invocations with identical seeds\n\
        produce byte-identical reports unless --timings is set.\n\n\
        Exit codes: 0 all claims upheld, 1 refutation, 2 usage error."
)]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for all randomized procedures (prime-field specializations)
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Number of random specializations behind a probabilistic rank certificate
    #[arg(long, global = true, default_value_t = 20)]
    trials: u32,

    /// Prime modulus for specializations [default: chosen from the seed]
    #[arg(long, global = true)]
    prime: Option<u64>,

    /// Degree cap for enveloping-algebra computations
    #[arg(long, global = true, default_value_t = 4)]
    cap: u32,

    /// Write the JSON report to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Also certify square evaluation maps by exact symbolic determinant
    /// (fraction-free elimination; infeasibly slow on the 14x14 map)
    #[arg(long, global = true)]
    symbolic: bool,

    /// Record wall-clock time in the report (breaks byte-identical output)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Small-module tables and decomposition feasibility
    #[command(subcommand)]
    Catalog(CatalogCmd),

    /// Rank obstructions for specific pointed modules
    #[command(subcommand)]
    Obstruct(ObstructCmd),

    /// Pre-Lie tables and the left-ideal correspondence
    #[command(subcommand)]
    Prelie(PrelieCmd),

    /// Dendriform splitting of the shuffle product
    #[command(subcommand)]
    Dendriform(DendriformCmd),

    /// Concrete Lie algebra bases as JSON
    #[command(subcommand)]
    Repbuild(RepbuildCmd),

    /// Run the registered claims end to end and aggregate the verdicts
    VerifyPaper {
        /// Run only the named claims (repeatable or comma-separated)
        #[arg(long = "only", value_name = "NAME", value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the simple modules of dimension below dim g
    SmallModules {
        /// Family name: sl<n>, sp<2n>, so<n> (parity decides the series),
        /// g2, f4, e6, e7, e8
        #[arg(long)]
        family: String,
    },

    /// Enumerate multisets of small-module dimensions summing to a target
    Numerology {
        /// Family name; the target is dim g and the parts are the family's
        /// small-module dimensions
        #[arg(long, conflicts_with_all = ["dim", "dims"])]
        family: Option<String>,

        /// Explicit target dimension (requires --dims)
        #[arg(long, requires = "dims")]
        dim: Option<u64>,

        /// Comma-separated part dimensions; a bare --dims means the empty list
        #[arg(long, requires = "dim", value_delimiter = ',', num_args = 0..)]
        dims: Option<Vec<u64>>,
    },
}

#[derive(Subcommand)]
enum ObstructCmd {
    /// The 20x35 evaluation map on the third wedge power of the sl6
    /// standard module, at a fully symbolic point
    Sl6,

    /// The square 14x14 evaluation map on two stacked copies of the g2
    /// standard module, at a fully symbolic point
    G2,

    /// The exact kernel identity for n stacked vector modules of so(2n+1):
    /// a deterministic certificate, no random trials involved
    SoOdd {
        /// Block parameter n; the algebra is so(2n+1)
        #[arg(long, default_value_t = 2)]
        n: u32,
    },

    /// The evaluation map of the adjoint module at a symbolic point, which
    /// the point itself annihilates
    Adjoint {
        /// Which basis to build the adjoint module from
        #[arg(long, value_enum)]
        family: AdjointFamily,

        /// Family parameter: matrix size for sl, block size for so-odd
        /// [default: 2]; g2 takes none
        #[arg(long)]
        n: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AdjointFamily {
    /// Traceless n x n matrices
    Sl,
    /// Odd orthogonal matrices in the split block convention
    SoOdd,
    /// The 14 exhibited generators inside gl(7)
    G2,
}

#[derive(Subcommand)]
enum PrelieCmd {
    /// Check the left-symmetry axiom on every basis triple
    Check(TableArg),

    /// Rebuild the product from its left ideal and compare with the input
    Roundtrip(TableArg),

    /// Left-ideal, bilateral, and associativity checks for the induced
    /// augmentation-style filtration
    Prop6(TableArg),
}

#[derive(Args)]
struct TableArg {
    /// Path to a JSON table {"dim": N, "t": [[[..]]]} with rational entries
    /// written as strings, or a builtin name: aff1, zero<dim>
    #[arg(long)]
    table: String,
}

#[derive(Subcommand)]
enum DendriformCmd {
    /// Axiom check for the shuffle-derived half-products, Hopf sanity
    /// checks, the recursion identities, and vanishing brace products
    Check {
        /// Alphabet size
        #[arg(long, default_value_t = 2)]
        alphabet: usize,

        /// Maximum total word length per axiom instance
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum RepbuildCmd {
    /// Print a validated basis (labels, matrices, dimensions) as the report
    Dump {
        /// Family with a concrete matrix transcription: sl<n>, so<odd n>, g2
        #[arg(long)]
        family: String,
    },
}

// ---------------------------------------------------------------------------
// Entry point and shared report plumbing.

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let prime = cli.common.prime.unwrap_or_else(|| prime_for_seed(cli.common.seed));
    let started = Instant::now();
    let outcome = dispatch(&cli.command, &cli.common, prime)?;
    let wall_time_ms = cli
        .common
        .timings
        .then(|| u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX));

    let report = RunReport {
        command: outcome.command.to_string(),
        inputs: outcome.inputs,
        verdicts: outcome.verdicts,
        seed: cli.common.seed,
        wall_time_ms,
        version: env!("CARGO_PKG_VERSION"),
    };
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    match &cli.common.out {
        Some(path) => {
            std::fs::write(path, &text)?;
            note(&format!("report written to {}", path.display()));
        }
        None => print!("{text}"),
    }
    note(if outcome.upheld {
        "verdict: upheld"
    } else {
        "verdict: REFUTED"
    });
    Ok(outcome.upheld)
}

/// The resolved global parameters, echoed into every report.
fn base_inputs(common: &Common, prime: u64) -> Value {
    json!({
        "seed": common.seed,
        "trials": common.trials,
        "prime": prime,
        "cap": common.cap,
        "symbolic": common.symbolic,
    })
}

fn with_extra(mut inputs: Value, extra: &[(&str, Value)]) -> Value {
    let map = inputs.as_object_mut().expect("inputs are a JSON object");
    for (key, value) in extra {
        map.insert((*key).to_string(), value.clone());
    }
    inputs
}

fn dispatch(command: &Command, common: &Common, prime: u64) -> Result<Outcome, CliError> {
    match command {
        Command::Catalog(CatalogCmd::SmallModules { family }) => {
            catalog_small_modules(common, prime, family)
        }
        Command::Catalog(CatalogCmd::Numerology { family, dim, dims }) => {
            catalog_numerology(common, prime, family.as_deref(), *dim, dims.as_deref())
        }
        Command::Obstruct(ObstructCmd::Sl6) => obstruct_pit(common, prime, PitTarget::Sl6),
        Command::Obstruct(ObstructCmd::G2) => obstruct_pit(common, prime, PitTarget::G2),
        Command::Obstruct(ObstructCmd::SoOdd { n }) => obstruct_so_odd(common, prime, *n),
        Command::Obstruct(ObstructCmd::Adjoint { family, n }) => {
            obstruct_adjoint(common, prime, *family, *n)
        }
        Command::Prelie(PrelieCmd::Check(arg)) => prelie_check(common, prime, &arg.table),
        Command::Prelie(PrelieCmd::Roundtrip(arg)) => prelie_roundtrip(common, prime, &arg.table),
        Command::Prelie(PrelieCmd::Prop6(arg)) => prelie_prop6(common, prime, &arg.table),
        Command::Dendriform(DendriformCmd::Check { alphabet, max_len }) => {
            dendriform_check(common, prime, *alphabet, *max_len)
        }
        Command::Repbuild(RepbuildCmd::Dump { family }) => repbuild_dump(common, prime, family),
        Command::VerifyPaper { only } => verify_paper(common, prime, only),
    }
}

// ---------------------------------------------------------------------------
// catalog

fn parse_family(name: &str) -> Result<LieFamily, CliError> {
    name.parse::<LieFamily>()
        .map_err(|e| usage(e.to_string()))
}

fn catalog_small_modules(common: &Common, prime: u64, family: &str) -> Result<Outcome, CliError> {
    let family = parse_family(family)?;
    let smalls = small_modules(family)?;
    note(&format!(
        "{family}: dim {}, {} small module(s)",
        family.dim(),
        smalls.len()
    ));
    for m in &smalls {
        note(&format!("  weight {:?} -> dim {}", m.weight, m.dim));
    }
    Ok(Outcome {
        command: "catalog small-modules",
        inputs: with_extra(base_inputs(common, prime), &[("family", json!(family))]),
        verdicts: vec![json!({
            "family": family,
            "algebra_dim": family.dim(),
            "small_modules": smalls,
        })],
        upheld: true,
    })
}

fn catalog_numerology(
    common: &Common,
    prime: u64,
    family: Option<&str>,
    dim: Option<u64>,
    dims: Option<&[u64]>,
) -> Result<Outcome, CliError> {
    let (source, target, parts) = match (family, dim) {
        (Some(name), None) => {
            let family = parse_family(name)?;
            let mut parts: Vec<u64> = small_modules(family)?.iter().map(|m| m.dim).collect();
            parts.sort_unstable();
            parts.dedup();
            (json!(family), family.dim(), parts)
        }
        (None, Some(target)) => {
            // clap guarantees --dims came along with --dim.
            let parts = dims.expect("--dim requires --dims").to_vec();
            (json!("explicit"), target, parts)
        }
        _ => {
            return Err(usage(
                "catalog numerology needs either --family, or --dim together with --dims",
            ))
        }
    };
    let decompositions = feasible_decomps(target, &parts)?;
    let feasible = !decompositions.is_empty();
    if feasible {
        note(&format!(
            "target {target} over {parts:?}: {} decomposition(s)",
            decompositions.len()
        ));
        for d in &decompositions {
            note(&format!("  {d:?}"));
        }
    } else {
        note(&format!("target {target} over {parts:?}: infeasible"));
    }
    Ok(Outcome {
        command: "catalog numerology",
        inputs: with_extra(
            base_inputs(common, prime),
            &[("source", source), ("dim", json!(target)), ("dims", json!(parts))],
        ),
        verdicts: vec![json!({
            "target": target,
            "parts": parts,
            "decompositions": decompositions,
            "feasible": feasible,
        })],
        upheld: true,
    })
}

// ---------------------------------------------------------------------------
// obstruct

enum PitTarget {
    Sl6,
    G2,
}

/// Shared stderr rendering for an obstruction report.
fn describe_obstruction(report: &ObstructionReport) {
    let (rows, cols) = report.map_shape;
    note(&format!(
        "{}: {rows}x{cols} evaluation map, claimed max rank {}",
        report.module_description, report.claimed_max_rank
    ));
    for cert in &report.certificates {
        match cert {
            Certificate::Rank(rank) => note(&format!(
                "  rank <= {} at {} specialization(s) mod {}, failure bound 2^({})",
                rank.claimed_max_rank, rank.trials, rank.prime, rank.error_bound_log2
            )),
            Certificate::RefutedRank {
                observed_rank,
                trial,
                ..
            } => note(&format!(
                "  REFUTED: observed rank {observed_rank} at trial {trial}"
            )),
            Certificate::SymbolicDet { is_zero } => note(&format!(
                "  symbolic determinant is {}",
                if *is_zero { "identically zero" } else { "nonzero" }
            )),
            Certificate::KernelIdentity { description } => {
                note(&format!("  kernel identity: {description}"))
            }
        }
    }
    note(&format!("  verdict: {:?}", report.verdict));
}

fn obstruction_outcome(
    command: &'static str,
    inputs: Value,
    report: ObstructionReport,
) -> Result<Outcome, CliError> {
    describe_obstruction(&report);
    let upheld = report.verdict == Verdict::Obstructed;
    Ok(Outcome {
        command,
        inputs,
        verdicts: vec![serde_json::to_value(report)?],
        upheld,
    })
}

fn obstruct_pit(common: &Common, prime: u64, target: PitTarget) -> Result<Outcome, CliError> {
    if common.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    if !is_prime_u64(prime) {
        return Err(usage(format!("--prime {prime} is not prime")));
    }
    let (command, spec, demand_bijective) = match target {
        PitTarget::Sl6 => ("obstruct sl6", sl6_wedge_spec()?, false),
        PitTarget::G2 => ("obstruct g2", g2_double_spec()?, true),
    };
    let report = obstruction_verdict(
        spec,
        demand_bijective,
        common.trials,
        prime,
        common.seed,
        common.symbolic,
    )?;
    if common.symbolic
        && !report
            .certificates
            .iter()
            .any(|c| matches!(c, Certificate::SymbolicDet { .. }))
    {
        note("note: the symbolic determinant applies to square maps only; skipped here");
    }
    obstruction_outcome(command, base_inputs(common, prime), report)
}

fn obstruct_so_odd(common: &Common, prime: u64, n: u32) -> Result<Outcome, CliError> {
    let report = so_odd_obstruction_report(n)?;
    obstruction_outcome(
        "obstruct so-odd",
        with_extra(base_inputs(common, prime), &[("n", json!(n))]),
        report,
    )
}

fn obstruct_adjoint(
    common: &Common,
    prime: u64,
    family: AdjointFamily,
    n: Option<u32>,
) -> Result<Outcome, CliError> {
    let basis: LieBasis = match family {
        AdjointFamily::Sl => basis_sl(n.unwrap_or(2))?,
        AdjointFamily::SoOdd => basis_so_odd(n.unwrap_or(2))?,
        AdjointFamily::G2 => {
            if n.is_some() {
                return Err(usage("--n does not apply to the g2 basis"));
            }
            basis_g2()?
        }
    };
    let family_name = basis.family().to_string();
    let report = adjoint_obstruction_report(&basis)?;
    obstruction_outcome(
        "obstruct adjoint",
        with_extra(
            base_inputs(common, prime),
            &[("family", json!(family_name)), ("n", json!(n))],
        ),
        report,
    )
}

// ---------------------------------------------------------------------------
// prelie

/// Largest builtin zero-table dimension; the cubic table has `dim^3` entries,
/// so an unbounded builtin would be an accidental memory bomb.
const MAX_BUILTIN_ZERO_DIM: usize = 64;

/// Resolves `--table`: an existing file wins, otherwise builtin names are
/// tried (with an optional `.json` suffix tolerated, so the builtin examples
/// read like file names).
fn resolve_table(arg: &str) -> Result<(PreLieTable, String), CliError> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        let table: PreLieTable = serde_json::from_str(&text)
            .map_err(|e| usage(format!("cannot parse a pre-Lie table from {arg}: {e}")))?;
        return Ok((table, arg.to_string()));
    }
    let name = arg.strip_suffix(".json").unwrap_or(arg);
    if name == "aff1" {
        return Ok((PreLieTable::aff1(), "aff1".to_string()));
    }
    if let Some(rest) = name.strip_prefix("zero") {
        if let Ok(dim) = rest.parse::<usize>() {
            if (1..=MAX_BUILTIN_ZERO_DIM).contains(&dim) {
                return Ok((PreLieTable::zero(dim), format!("zero{dim}")));
            }
            return Err(usage(format!(
                "builtin zero tables cover dimensions 1..={MAX_BUILTIN_ZERO_DIM}, got {dim}"
            )));
        }
    }
    Err(usage(format!(
        "{arg:?} is neither an existing file nor a builtin table (builtins: aff1, zero<dim>)"
    )))
}

fn prelie_check(common: &Common, prime: u64, table: &str) -> Result<Outcome, CliError> {
    let (t, label) = resolve_table(table)?;
    let defects = prelie_defect(&t);
    let upheld = defects.is_empty();
    if upheld {
        note(&format!(
            "{label}: left symmetry holds on all {} basis triples",
            t.dim().pow(3)
        ));
    } else {
        note(&format!(
            "{label}: left symmetry fails on {} basis triple(s)",
            defects.len()
        ));
    }
    // A handful of witnesses is enough for the report; the count is exact.
    let shown: Vec<_> = defects.iter().take(5).collect();
    Ok(Outcome {
        command: "prelie check",
        inputs: with_extra(base_inputs(common, prime), &[("table", json!(label))]),
        verdicts: vec![json!({
            "table": label,
            "dim": t.dim(),
            "left_symmetric": upheld,
            "defect_count": defects.len(),
            "defects_shown": shown,
        })],
        upheld,
    })
}

fn prelie_roundtrip(common: &Common, prime: u64, table: &str) -> Result<Outcome, CliError> {
    let (t, label) = resolve_table(table)?;
    let consts = t
        .induced_consts()
        .map_err(|e| usage(format!("{label} does not induce a Lie bracket: {e}")))?;
    let report = prelie_from_ideal(&t, &consts, common.cap)?;
    let recovered_input = report.recovered.as_ref() == Some(&t);
    let upheld = report.consistent && recovered_input;
    note(&format!(
        "{label}: ideal consistent = {}, recovered the input table = {}",
        report.consistent, recovered_input
    ));
    Ok(Outcome {
        command: "prelie roundtrip",
        inputs: with_extra(base_inputs(common, prime), &[("table", json!(label))]),
        verdicts: vec![json!({
            "table": label,
            "dim": t.dim(),
            "cap": common.cap,
            "ideal": report,
            "recovered_input": recovered_input,
        })],
        upheld,
    })
}

fn prelie_prop6(common: &Common, prime: u64, table: &str) -> Result<Outcome, CliError> {
    let (t, label) = resolve_table(table)?;
    let report = prop6_checks(&t, common.cap)?;
    let equivalence = report.bilateral == report.associative_on_g;
    let upheld = report.left_ideal && equivalence;
    note(&format!(
        "{label}: left ideal = {}, bilateral = {}, associative on g = {}",
        report.left_ideal, report.bilateral, report.associative_on_g
    ));
    Ok(Outcome {
        command: "prelie prop6",
        inputs: with_extra(base_inputs(common, prime), &[("table", json!(label))]),
        verdicts: vec![json!({
            "table": label,
            "dim": t.dim(),
            "cap": common.cap,
            "prop6": report,
            "bilateral_iff_associative": equivalence,
        })],
        upheld,
    })
}

// ---------------------------------------------------------------------------
// dendriform

fn dendriform_check(
    common: &Common,
    prime: u64,
    alphabet: usize,
    max_len: usize,
) -> Result<Outcome, CliError> {
    let star = ShuffleProduct;
    let prec =
        |a: &Word, b: &Word| prec_from_star(&star, a, b).expect("half-products of nonempty words");
    let succ =
        |a: &Word, b: &Word| succ_from_star(&star, a, b).expect("half-products of nonempty words");

    let violations = dendriform_axiom_check(&prec, &succ, alphabet, max_len);
    let (triples, pairs) = axiom_instance_counts(alphabet, max_len);
    note(&format!(
        "dendriform axioms: {} violation(s) over {triples} triple instance(s) and {pairs} splitting pair(s)",
        violations.len()
    ));

    let hopf = hopf_checks(&star, alphabet, max_len);
    note(&format!("product/coproduct sanity clean = {}", hopf.is_clean()));

    let prop30 = prop30_checks(&star, alphabet, max_len)?;
    note(&format!("half-product recursion identities hold = {prop30}"));

    // Brace products of primitive (single-letter) arguments vanish for the
    // shuffle product; checked exhaustively for 2 and 3 arguments.
    let mut braces_checked = 0usize;
    let mut braces_vanish = true;
    for args_len in [2usize, 3] {
        let total = alphabet.pow(args_len as u32);
        for index in 0..total {
            let mut rest = index;
            let args: Vec<TensorElem> = (0..args_len)
                .map(|_| {
                    let letter = (rest % alphabet) as u32;
                    rest /= alphabet;
                    TensorElem::from_word(Word::single(letter))
                })
                .collect();
            braces_checked += 1;
            if !brace_product(&star, &args)?.is_zero() {
                braces_vanish = false;
            }
        }
    }
    note(&format!(
        "brace products vanish = {braces_vanish} ({braces_checked} checked)"
    ));

    let upheld = violations.is_empty() && hopf.is_clean() && prop30 && braces_vanish;
    let shown: Vec<_> = violations.iter().take(5).collect();
    Ok(Outcome {
        command: "dendriform check",
        inputs: with_extra(
            base_inputs(common, prime),
            &[("alphabet", json!(alphabet)), ("max_len", json!(max_len))],
        ),
        verdicts: vec![json!({
            "alphabet": alphabet,
            "max_len": max_len,
            "axiom_instances": {"triples": triples, "pairs": pairs},
            "axiom_violations": violations.len(),
            "violations_shown": shown,
            "hopf_clean": hopf.is_clean(),
            "recursion_identities": prop30,
            "braces_checked": braces_checked,
            "braces_vanish": braces_vanish,
        })],
        upheld,
    })
}

// ---------------------------------------------------------------------------
// repbuild

fn repbuild_dump(common: &Common, prime: u64, family: &str) -> Result<Outcome, CliError> {
    let family = parse_family(family)?;
    let basis: LieBasis = match family {
        LieFamily::Sl(n) => basis_sl(n)?,
        LieFamily::SoOdd(m) => basis_so_odd((m - 1) / 2)?,
        LieFamily::G2 => basis_g2()?,
        other => {
            return Err(usage(format!(
                "no concrete matrix transcription is available for {other}"
            )))
        }
    };
    note(&format!(
        "{family}: {} basis matrices of size {}x{}",
        basis.dim(),
        basis.mat_size(),
        basis.mat_size()
    ));
    Ok(Outcome {
        command: "repbuild dump",
        inputs: with_extra(base_inputs(common, prime), &[("family", json!(family))]),
        verdicts: vec![json!({
            "family": family,
            "algebra_dim": basis.dim(),
            "matrix_size": basis.mat_size(),
            "labels": basis.labels(),
            "matrices": basis.matrices(),
        })],
        upheld: true,
    })
}

// ---------------------------------------------------------------------------
// verify-paper

fn verify_paper(common: &Common, prime: u64, only: &[String]) -> Result<Outcome, CliError> {
    let cfg = VerifyConfig {
        seed: common.seed,
        trials: common.trials,
        prime,
        cap: common.cap,
        symbolic: common.symbolic,
    };
    let registry = ClaimRegistry::standard();
    let selection = (!only.is_empty()).then_some(only);
    note(&format!(
        "running {} of {} registered claim(s)",
        selection.map_or(registry.names().len(), <[String]>::len),
        registry.names().len()
    ));
    let reports = registry.run(&cfg, selection)?;
    for report in &reports {
        let tag = match report.status {
            ClaimStatus::Upheld => "UPHELD",
            ClaimStatus::Refuted => "REFUTED",
            ClaimStatus::OutOfScope => "OUT OF SCOPE",
        };
        note(&format!("{:<36} {tag}", report.name));
    }
    let upheld = all_upheld(&reports);
    let verdicts = reports
        .iter()
        .map(serde_json::to_value)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome {
        command: "verify-paper",
        inputs: with_extra(base_inputs(common, prime), &[("only", json!(only))]),
        verdicts,
        upheld,
    })
}

// ---------------------------------------------------------------------------
