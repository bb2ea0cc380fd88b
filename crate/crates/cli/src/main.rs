//! `ztile` — exact tiling analysis for finite integer sets.
//!
//! Every subcommand prints one self-contained JSON report (or only its
//! verdict line under `--quiet`) and exits with `0` when the checked
//! property holds or something was found, `1` when it fails or nothing was
//! found, and `2` on usage, parse, or precondition errors. Output is
//! byte-identical across repeat invocations, including under `--jobs`.

mod literal;
mod report;

use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use report::{rational_str, Report};
use ztile_core::polynomials::{cyclotomic_support_prime_powers, IntegerSet};
use ztile_core::spectra::{
    corollary_constant, difference_spectrum, power_spectrum, verify_main_identity,
};
use ztile_core::threeprime::{verify_theorem1, ResidueCoordinates};
use ztile_core::tiling::{
    check_t1, check_t2, decompose_tiling, enumerate_tilings, find_complements,
    find_complements_parallel, is_tiling, is_tiling_poly, sands_criterion,
};
use ztile_core::Error;

#[derive(Parser)]
#[command(
    name = "ztile",
    version,
    about = "Exact analysis of translational tilings A ⊕ B = Z/MZ",
    propagate_version = true
)]
struct Cli {
    /// Print only the verdict line instead of the full JSON report.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether A ⊕ B tiles Z/MZ, by direct counting, by mask
    /// polynomials, and by the divisor-disjointness criterion.
    Verify(VerifyArgs),
    /// Report the cyclotomic support of A and both tiling conditions.
    Conditions(ConditionsArgs),
    /// Evaluate both sides of the spectral identity exactly.
    Identity(IdentityArgs),
    /// Evaluate the weighted divisor-class sum at one point, or sweep it
    /// over a full period to confirm it is constant.
    Constant(ConstantArgs),
    /// Search for tiling complements of A over increasing moduli.
    Search(SearchArgs),
    /// Check the three-prime composite divisibility theorem on a pair.
    Theorem1(Theorem1Args),
    /// Enumerate every tiling of Z/MZ up to a bound, one record per line.
    Corpus(CorpusArgs),
    /// Decompose a tiling with B ⊆ pZ along the prime p.
    Decompose(DecomposeArgs),
}

/// First set operand, inline or from a file.
#[derive(Args)]
struct SetA {
    /// Set literal for A, e.g. '{0, 2}'.
    #[arg(
        long,
        value_name = "SET",
        allow_hyphen_values = true,
        conflicts_with = "a_file",
        required_unless_present = "a_file"
    )]
    a: Option<String>,

    /// Read the set literal for A from a file.
    #[arg(long, value_name = "PATH")]
    a_file: Option<PathBuf>,
}

/// Second set operand, inline or from a file.
#[derive(Args)]
struct SetB {
    /// Set literal for B, e.g. '{0, 1}'.
    #[arg(
        long,
        value_name = "SET",
        allow_hyphen_values = true,
        conflicts_with = "b_file",
        required_unless_present = "b_file"
    )]
    b: Option<String>,

    /// Read the set literal for B from a file.
    #[arg(long, value_name = "PATH")]
    b_file: Option<PathBuf>,
}

fn resolve_set(inline: &Option<String>, file: &Option<PathBuf>) -> Result<IntegerSet, String> {
    let text = match (inline, file) {
        (Some(text), None) => text.clone(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
        // clap enforces exactly one source
        _ => unreachable!("argument group guarantees one source"),
    };
    literal::parse_set_literal(&text)
}

impl SetA {
    fn resolve(&self) -> Result<IntegerSet, String> {
        resolve_set(&self.a, &self.a_file)
    }
}

impl SetB {
    fn resolve(&self) -> Result<IntegerSet, String> {
        resolve_set(&self.b, &self.b_file)
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    set_a: SetA,
    #[command(flatten)]
    set_b: SetB,
    /// The modulus M.
    #[arg(long, value_name = "M", value_parser = clap::value_parser!(u64).range(1..))]
    modulus: u64,
}

#[derive(Args)]
struct ConditionsArgs {
    #[command(flatten)]
    set_a: SetA,
}

#[derive(Args)]
struct IdentityArgs {
    #[command(flatten)]
    set_a: SetA,
    #[command(flatten)]
    set_b: SetB,
    /// The modulus N of the spectra.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    modulus: u64,
}

#[derive(Args)]
struct ConstantArgs {
    #[command(flatten)]
    set_a: SetA,
    #[command(flatten)]
    set_b: SetB,
    /// The tiling modulus M.
    #[arg(long, value_name = "M", value_parser = clap::value_parser!(u64).range(1..))]
    modulus: u64,
    /// The level N at which spectra are taken; must divide M.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    level: u64,
    /// Evaluate at this single point instead of sweeping c over 0..N.
    #[arg(long, value_name = "C", allow_hyphen_values = true)]
    point: Option<i64>,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    set_a: SetA,
    /// Largest modulus to try; candidates are the multiples of |A|.
    #[arg(long, value_name = "M", value_parser = clap::value_parser!(u64).range(1..))]
    max_modulus: u64,
    /// Stop after this many complements.
    #[arg(long, value_name = "K", default_value_t = 10,
          value_parser = clap::value_parser!(u64).range(1..))]
    limit: u64,
    /// Worker threads; any value yields the same output in the same order.
    #[arg(long, value_name = "J", default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
}

#[derive(Args)]
struct Theorem1Args {
    #[command(flatten)]
    set_a: SetA,
    #[command(flatten)]
    set_b: SetB,
    /// The three distinct primes p q r.
    #[arg(long, value_names = ["P", "Q", "R"], num_args = 3, required = true)]
    primes: Vec<u64>,
}

#[derive(Args)]
struct CorpusArgs {
    /// Enumerate tilings of Z/MZ for every M up to this bound.
    #[arg(long, value_name = "M", value_parser = clap::value_parser!(u64).range(1..))]
    max_modulus: u64,
    /// Write records here; without it records stream to stdout and no
    /// report envelope is printed.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Worker threads; any value yields the same records in the same order.
    #[arg(long, value_name = "J", default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    set_a: SetA,
    #[command(flatten)]
    set_b: SetB,
    /// The tiling modulus M.
    #[arg(long, value_name = "M", value_parser = clap::value_parser!(u64).range(1..))]
    modulus: u64,
    /// The prime to decompose along; every element of B must be divisible
    /// by it.
    #[arg(long, value_name = "P")]
    prime: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Verify(args) => run_verify(args, cli.quiet),
        Command::Conditions(args) => run_conditions(args, cli.quiet),
        Command::Identity(args) => run_identity(args, cli.quiet),
        Command::Constant(args) => run_constant(args, cli.quiet),
        Command::Search(args) => run_search(args, cli.quiet),
        Command::Theorem1(args) => run_theorem1(args, cli.quiet),
        Command::Corpus(args) => run_corpus(args, cli.quiet),
        Command::Decompose(args) => run_decompose(args, cli.quiet),
    };
    ExitCode::from(code)
}

/// One-line diagnostic on stderr; the caller returns the exit code.
fn fail(message: impl std::fmt::Display) -> u8 {
    eprintln!("ztile: {message}");
    2
}

fn run_verify(args: &VerifyArgs, quiet: bool) -> u8 {
    let (a, b) = match (args.set_a.resolve(), args.set_b.resolve()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return fail(e),
    };
    let m = args.modulus;
    let sands = match sands_criterion(&a, &b, m) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let direct = is_tiling(&a, &b, m);
    let results = report::VerifyResults {
        direct,
        polynomial: is_tiling_poly(&a, &b, m),
        sands: report::SandsJson {
            divisors_a: sands.divisors_a.iter().copied().collect(),
            divisors_b: sands.divisors_b.iter().copied().collect(),
            shared: sands.shared.iter().copied().collect(),
            disjoint: sands.disjoint,
            product_is_modulus: sands.product_is_modulus,
            implies_tiling: sands.implies_tiling(),
        },
    };
    let verdict = if direct { "tiling" } else { "not-a-tiling" };
    let report = Report {
        command: "verify",
        inputs: report::VerifyInputs { a: a.to_string(), b: b.to_string(), modulus: m },
        results,
        verdict: verdict.to_string(),
    };
    println!("{}", report.render(quiet));
    u8::from(!direct)
}

fn run_conditions(args: &ConditionsArgs, quiet: bool) -> u8 {
    let a = match args.set_a.resolve() {
        Ok(a) => a,
        Err(e) => return fail(e),
    };
    let t1 = check_t1(&a);
    let t2 = check_t2(&a);
    let (verdict, code) = match (t1.holds, t2.holds) {
        (true, true) => ("conditions-hold", 0),
        (false, true) => ("t1-fails", 1),
        (true, false) => ("t2-fails", 1),
        (false, false) => ("t1-and-t2-fail", 1),
    };
    let report = Report {
        command: "conditions",
        inputs: report::ConditionsInputs { a: a.to_string() },
        results: report::ConditionsResults {
            support: cyclotomic_support_prime_powers(&a),
            t1: report::T1Json { holds: t1.holds, cardinality: t1.lhs, support_product: t1.rhs },
            t2: report::T2Json { holds: t2.holds, witnesses: t2.witnesses },
        },
        verdict: verdict.to_string(),
    };
    println!("{}", report.render(quiet));
    code
}

fn run_identity(args: &IdentityArgs, quiet: bool) -> u8 {
    let (a, b) = match (args.set_a.resolve(), args.set_b.resolve()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return fail(e),
    };
    let n = args.modulus;
    let check = verify_main_identity(&a, &b, n);
    let power_table = |set: &IntegerSet| {
        power_spectrum(set, n)
            .values
            .iter()
            .map(|(&d, v)| (d, v.to_string()))
            .collect()
    };
    let report = Report {
        command: "identity",
        inputs: report::IdentityInputs { a: a.to_string(), b: b.to_string(), modulus: n },
        results: report::IdentityResults {
            difference_spectrum_a: difference_spectrum(&a, n).counts,
            difference_spectrum_b: difference_spectrum(&b, n).counts,
            power_spectrum_a: power_table(&a),
            power_spectrum_b: power_table(&b),
            lhs: rational_str(&check.lhs),
            rhs: rational_str(&check.rhs),
            equal: check.equal,
        },
        verdict: if check.equal { "equal" } else { "unequal" }.to_string(),
    };
    println!("{}", report.render(quiet));
    u8::from(!check.equal)
}

fn run_constant(args: &ConstantArgs, quiet: bool) -> u8 {
    let (a, b) = match (args.set_a.resolve(), args.set_b.resolve()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return fail(e),
    };
    let (m, n) = (args.modulus, args.level);
    let points: Vec<i64> = match args.point {
        Some(c) => vec![c],
        None => (0..n as i64).filter(|&c| !b.contains(c)).collect(),
    };
    let mut values = Vec::with_capacity(points.len());
    for c in points {
        match corollary_constant(&a, &b, m, n, c) {
            Ok(value) => values.push(report::PointValue { c, value: rational_str(&value) }),
            Err(e) => return fail(e),
        }
    }
    let constant = values.windows(2).all(|w| w[0].value == w[1].value);
    let (verdict, code) = if values.is_empty() {
        ("no-admissible-points".to_string(), 1)
    } else if !constant {
        ("varies".to_string(), 1)
    } else if args.point.is_some() {
        // a single evaluation's verdict is its value
        (values[0].value.clone(), 0)
    } else {
        ("constant".to_string(), 0)
    };
    let value = constant.then(|| values.first().map(|v| v.value.clone())).flatten();
    let report = Report {
        command: "constant",
        inputs: report::ConstantInputs {
            a: a.to_string(),
            b: b.to_string(),
            modulus: m,
            level: n,
            point: args.point,
        },
        results: report::ConstantResults { values, constant, value },
        verdict,
    };
    println!("{}", report.render(quiet));
    code
}

fn run_search(args: &SearchArgs, quiet: bool) -> u8 {
    let a = match args.set_a.resolve() {
        Ok(a) => a,
        Err(e) => return fail(e),
    };
    let (limit, jobs) = (args.limit as usize, args.jobs as usize);
    let mut complements = Vec::new();
    let mut m = a.len() as u64;
    while m <= args.max_modulus && complements.len() < limit {
        let found = if jobs > 1 {
            find_complements_parallel(&a, m, limit - complements.len(), jobs)
        } else {
            find_complements(&a, m, limit - complements.len())
        };
        match found {
            Ok(batch) => {
                for b in batch {
                    complements.push(report::FoundComplement { modulus: m, b: b.to_string() });
                }
            }
            // A only fits into moduli it occupies with distinct residues
            Err(Error::RepeatedResidues { .. }) => {}
            Err(e) => return fail(e),
        }
        m += a.len() as u64;
    }
    let count = complements.len();
    let (verdict, code) =
        if count > 0 { (format!("found {count}"), 0) } else { ("none".to_string(), 1) };
    let report = Report {
        command: "search",
        // worker count is an execution parameter, not an input: reports
        // are byte-identical across --jobs values
        inputs: report::SearchInputs { a: a.to_string(), max_modulus: args.max_modulus, limit },
        results: report::SearchResults { complements, count },
        verdict,
    };
    println!("{}", report.render(quiet));
    code
}

fn run_theorem1(args: &Theorem1Args, quiet: bool) -> u8 {
    let (a, b) = match (args.set_a.resolve(), args.set_b.resolve()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return fail(e),
    };
    let (p, q, r) = (args.primes[0], args.primes[1], args.primes[2]);
    let coords = match ResidueCoordinates::new(p, q, r) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let verdict = match verify_theorem1(&a, &b, &coords) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    let report = Report {
        command: "theorem1",
        inputs: report::Theorem1Inputs { a: a.to_string(), b: b.to_string(), p, q, r },
        results: report::Theorem1Results {
            divides_p: verdict.divides_p,
            divides_q: verdict.divides_q,
            divides_r: verdict.divides_r,
            divides_pq: verdict.divides_pq,
            divides_pr: verdict.divides_pr,
            divides_qr: verdict.divides_qr,
            divides_pqr: verdict.divides_pqr,
            hypotheses_hold: verdict.hypotheses_hold,
            conclusion_holds: verdict.conclusion_holds,
            consistent: verdict.consistent,
        },
        verdict: if verdict.consistent { "consistent" } else { "inconsistent" }.to_string(),
    };
    println!("{}", report.render(quiet));
    u8::from(!verdict.consistent)
}

fn corpus_record(inst: &ztile_core::tiling::TilingInstance) -> report::CorpusRecord {
    report::CorpusRecord {
        modulus: inst.modulus,
        a: inst.a.to_string(),
        b: inst.b.to_string(),
        support_a: cyclotomic_support_prime_powers(&inst.a),
        support_b: cyclotomic_support_prime_powers(&inst.b),
        t1_a: check_t1(&inst.a).holds,
        t2_a: check_t2(&inst.a).holds,
        t1_b: check_t1(&inst.b).holds,
        t2_b: check_t2(&inst.b).holds,
    }
}

fn run_corpus(args: &CorpusArgs, quiet: bool) -> u8 {
    let jobs = args.jobs as usize;
    let records_for = |m: u64| -> Vec<report::CorpusRecord> {
        enumerate_tilings(m).iter().map(corpus_record).collect()
    };
    // partition by modulus and restitch in order: record order is
    // independent of the worker count
    let per_modulus: Vec<Vec<report::CorpusRecord>> = if jobs > 1 {
        let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool,
            Err(e) => return fail(format!("cannot start worker pool: {e}")),
        };
        pool.install(|| (1..=args.max_modulus).into_par_iter().map(records_for).collect())
    } else {
        (1..=args.max_modulus).map(records_for).collect()
    };
    let records: Vec<report::CorpusRecord> = per_modulus.into_iter().flatten().collect();

    let lines = records
        .iter()
        .map(|r| serde_json::to_string(r).expect("record serialization cannot fail"));
    match &args.output {
        Some(path) => {
            let file = match fs::File::create(path) {
                Ok(f) => f,
                Err(e) => return fail(format!("cannot create {}: {e}", path.display())),
            };
            let mut out = BufWriter::new(file);
            for line in lines {
                if let Err(e) = writeln!(out, "{line}") {
                    return fail(format!("cannot write {}: {e}", path.display()));
                }
            }
            if let Err(e) = out.flush() {
                return fail(format!("cannot write {}: {e}", path.display()));
            }
            let report = Report {
                command: "corpus",
                inputs: report::CorpusInputs {
                    max_modulus: args.max_modulus,
                    output: path.display().to_string(),
                },
                results: report::CorpusResults {
                    records: records.len() as u64,
                    output: path.display().to_string(),
                },
                verdict: format!("written {} records", records.len()),
            };
            println!("{}", report.render(quiet));
            0
        }
        None => {
            // the records are the machine-readable output here; no envelope
            let stdout = std::io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            for line in lines {
                if writeln!(out, "{line}").is_err() {
                    return fail("cannot write to stdout");
                }
            }
            if out.flush().is_err() {
                return fail("cannot write to stdout");
            }
            0
        }
    }
}

fn run_decompose(args: &DecomposeArgs, quiet: bool) -> u8 {
    let (a, b) = match (args.set_a.resolve(), args.set_b.resolve()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return fail(e),
    };
    let decomposition = match decompose_tiling(&a, &b, args.modulus, args.prime) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    let all_valid = decomposition.all_valid();
    let strings = |sets: &[IntegerSet]| sets.iter().map(|s| s.to_string()).collect();
    let report = Report {
        command: "decompose",
        inputs: report::DecomposeInputs {
            a: a.to_string(),
            b: b.to_string(),
            modulus: args.modulus,
            prime: args.prime,
        },
        results: report::DecomposeResults {
            prime: decomposition.prime,
            parts: strings(&decomposition.parts),
            offsets: decomposition.offsets.clone(),
            reduced_parts: strings(&decomposition.reduced_parts),
            reduced_complement: decomposition.reduced_complement.to_string(),
            reduced_modulus: decomposition.reduced_modulus,
            equal_part_sizes: decomposition.equal_part_sizes,
            parts_tile: decomposition.parts_tile,
            equal_supports: decomposition.equal_supports,
            support_recomposition: decomposition.support_recomposition,
            all_valid,
        },
        verdict: if all_valid { "all-invariants-hold" } else { "invariant-violated" }.to_string(),
    };
    println!("{}", report.render(quiet));
    u8::from(!all_valid)
}
