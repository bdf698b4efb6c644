//! `matroidq` — command-line front end for the matroid property toolkit.
//!
//! Subcommands: `gen` (write matroid files), `check` (decide a property),
//! `girth`, `count` (exhaustive structure counts), `bench` (query-count
//! benchmarks to CSV), `bound` (adversary lower-bound tables).
//!
//! Exit codes: 0 = success / property holds, 1 = property fails,
//! 2 = usage or runtime error.

mod bench;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use matroidq::adversary::{build_relation, relation_params, theoretical_bound, RelationKind};
use matroidq::algorithms::{
    compute_girth, decide_loopless, decide_paving, decide_trivial, decide_uniform,
    girth_classical, AmplificationConfig,
};
use matroidq::enumerate::{
    bases, circuits, flats, hyperplanes, is_eulerian_bruteforce, is_loopless_bruteforce,
    is_paving_bruteforce, is_trivial_bruteforce, is_uniform_bruteforce,
};
use matroidq::matroid::{verify_axioms_oracle, DeletedVariant, MatroidKind, MatroidSpec};
use matroidq::rng::root_rng;
use matroidq::subset::SubsetMask;
use matroidq::CountingOracle;

#[derive(Parser)]
#[command(
    name = "matroidq",
    version,
    about = "Matroid property toolkit: simulated quantum-query deciders, \
             brute-force reference checks, benchmarks, and lower-bound tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a matroid description file
    Gen {
        /// Construction: uniform | deletedBasis1 | deletedBasis2 |
        /// pavingCounter | basisFamily | subsetFamily
        #[arg(long)]
        kind: String,
        /// Ground-set size
        #[arg(long)]
        n: u32,
        /// Rank parameter (required by all closed-form kinds)
        #[arg(long)]
        r: Option<u32>,
        /// Excluded set as comma-separated elements, e.g. "0,1"
        #[arg(long = "A", value_name = "ELEMS")]
        a: Option<String>,
        /// Source matroid file to materialize (family kinds only)
        #[arg(long)]
        from: Option<PathBuf>,
        /// Output file (stdout if omitted)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Decide a property of a matroid file; exit 0 holds / 1 fails / 2 error
    Check {
        file: PathBuf,
        property: Property,
        /// quantum (default for uniform/paving/trivial/loopless) or
        /// bruteforce (only mode for eulerian/axioms)
        #[arg(long)]
        mode: Option<Mode>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Repetitions per bounded-error search round
        #[arg(long, default_value_t = 5)]
        max_repeat: u32,
    },
    /// Compute the girth (length of a shortest circuit, "inf" if none)
    Girth {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Quantum)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_repeat: u32,
    },
    /// Count circuits, bases, flats, or hyperplanes by exhaustive scan (n ≤ 16)
    Count {
        file: PathBuf,
        what: CountWhat,
    },
    /// Run query-count benchmarks over generated fixtures, writing a CSV
    Bench {
        family: bench::Family,
        /// Ground-set sizes, inclusive range "8..12" or a single "8"
        #[arg(long = "n", value_name = "LO..HI")]
        n_range: String,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_repeat: u32,
        /// Output CSV path
        #[arg(short, long)]
        out: PathBuf,
        /// Record wall-clock micros per row (off: column is 0 so reruns are
        /// byte-identical)
        #[arg(long)]
        timings: bool,
        /// Refuse ground-set sizes above this bound
        #[arg(long, default_value_t = 64)]
        max_n: u32,
    },
    /// Print adversary lower-bound parameters per n: exhaustive counts
    /// (n ≤ 8) against the closed-form value
    Bound {
        /// Relation: uniformVsDeleted1 | eulerianEven | pavingVsCounter
        kind: String,
        #[arg(long = "n", value_name = "LO..HI")]
        n_range: String,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Quantum,
    Bruteforce,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Quantum => "quantum",
            Mode::Bruteforce => "bruteforce",
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Property {
    Uniform,
    Paving,
    Trivial,
    Loopless,
    Eulerian,
    Axioms,
}

impl Property {
    fn as_str(self) -> &'static str {
        match self {
            Property::Uniform => "uniform",
            Property::Paving => "paving",
            Property::Trivial => "trivial",
            Property::Loopless => "loopless",
            Property::Eulerian => "eulerian",
            Property::Axioms => "axioms",
        }
    }

    /// Properties with no search-based decider fall back to enumeration.
    fn bruteforce_only(self) -> bool {
        matches!(self, Property::Eulerian | Property::Axioms)
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum CountWhat {
    Circuits,
    Bases,
    Flats,
    Hyperplanes,
}

impl CountWhat {
    fn as_str(self) -> &'static str {
        match self {
            CountWhat::Circuits => "circuits",
            CountWhat::Bases => "bases",
            CountWhat::Flats => "flats",
            CountWhat::Hyperplanes => "hyperplanes",
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Gen { kind, n, r, a, from, out } => cmd_gen(&kind, n, r, a.as_deref(), from, out),
        Command::Check { file, property, mode, seed, max_repeat } => {
            cmd_check(&file, property, mode, seed, max_repeat)
        }
        Command::Girth { file, mode, seed, max_repeat } => cmd_girth(&file, mode, seed, max_repeat),
        Command::Count { file, what } => cmd_count(&file, what),
        Command::Bench { family, n_range, trials, seed, max_repeat, out, timings, max_n } => {
            let (n_lo, n_hi) = parse_range(&n_range)?;
            let summary = bench::run_bench(&bench::BenchSpec {
                family,
                n_lo,
                n_hi,
                trials,
                seed,
                max_repeat,
                timings,
                max_n,
                out,
            })?;
            println!("{}", serde_json::to_string_pretty(&summary)?);
            Ok(0)
        }
        Command::Bound { kind, n_range } => {
            let (n_lo, n_hi) = parse_range(&n_range)?;
            cmd_bound(&kind, n_lo, n_hi)
        }
    }
}

/// "LO..HI" (inclusive) or a bare "N".
fn parse_range(s: &str) -> anyhow::Result<(u32, u32)> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (
            a.parse().with_context(|| format!("bad range start {a:?}"))?,
            b.parse().with_context(|| format!("bad range end {b:?}"))?,
        ),
        None => {
            let v = s.parse().with_context(|| format!("bad n value {s:?}"))?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("empty range {s:?} (start exceeds end)");
    }
    Ok((lo, hi))
}

fn parse_elements(s: &str) -> anyhow::Result<SubsetMask> {
    let mut mask = SubsetMask::EMPTY;
    for part in s.split(',') {
        let e: u32 = part
            .trim()
            .parse()
            .with_context(|| format!("bad element {part:?} in --A"))?;
        if e >= 64 {
            bail!("element {e} out of range in --A");
        }
        mask = mask.with(e);
    }
    Ok(mask)
}

fn read_spec(path: &PathBuf) -> anyhow::Result<MatroidSpec> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    MatroidSpec::parse(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn mask_json(witness: Option<SubsetMask>) -> serde_json::Value {
    match witness {
        Some(w) => serde_json::Value::String(w.to_string()),
        None => serde_json::Value::Null,
    }
}

fn cmd_gen(
    kind: &str,
    n: u32,
    r: Option<u32>,
    a: Option<&str>,
    from: Option<PathBuf>,
    out: Option<PathBuf>,
) -> anyhow::Result<u8> {
    let kind = MatroidKind::parse(kind)?;
    let family_kind = matches!(kind, MatroidKind::BasisFamily | MatroidKind::SubsetFamily);
    if family_kind {
        if a.is_some() {
            bail!("--A does not apply to {}", kind.as_str());
        }
        let from = from.ok_or_else(|| {
            anyhow!("{} is materialized from a source matroid: pass --from FILE", kind.as_str())
        })?;
        let source = read_spec(&from)?;
        if source.n() != n {
            bail!("--n {} does not match source ground-set size {}", n, source.n());
        }
        let spec = match kind {
            MatroidKind::BasisFamily => source.materialize_basis_family()?,
            _ => source.materialize_subset_family()?,
        };
        if let Some(want) = r {
            if spec.rank_param() != Some(want) {
                bail!(
                    "--r {} does not match materialized rank {:?}",
                    want,
                    spec.rank_param()
                );
            }
        }
        return write_spec(&spec, out);
    }

    if from.is_some() {
        bail!("--from only applies to basisFamily/subsetFamily");
    }
    let r = r.ok_or_else(|| anyhow!("{} requires --r", kind.as_str()))?;
    let need_a = || -> anyhow::Result<SubsetMask> {
        parse_elements(a.ok_or_else(|| anyhow!("{} requires --A", kind.as_str()))?)
    };
    let spec = match kind {
        MatroidKind::Uniform => {
            if a.is_some() {
                bail!("--A does not apply to uniform");
            }
            MatroidSpec::uniform(n, r)?
        }
        MatroidKind::DeletedBasis1 => MatroidSpec::deleted_basis(n, r, need_a()?, DeletedVariant::One)?,
        MatroidKind::DeletedBasis2 => MatroidSpec::deleted_basis(n, r, need_a()?, DeletedVariant::Two)?,
        MatroidKind::PavingCounter => MatroidSpec::paving_counterexample(n, r, need_a()?)?,
        _ => unreachable!("family kinds handled above"),
    };
    write_spec(&spec, out)
}

fn write_spec(spec: &MatroidSpec, out: Option<PathBuf>) -> anyhow::Result<u8> {
    let text = spec.to_file_string();
    match out {
        Some(path) => {
            fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_check(
    file: &PathBuf,
    property: Property,
    mode: Option<Mode>,
    seed: u64,
    max_repeat: u32,
) -> anyhow::Result<u8> {
    let spec = read_spec(file)?;
    let n = spec.n();
    let mode = mode.unwrap_or(if property.bruteforce_only() {
        Mode::Bruteforce
    } else {
        Mode::Quantum
    });
    if property.bruteforce_only() && mode == Mode::Quantum {
        bail!(
            "property {} has no quantum decider; use --mode bruteforce",
            property.as_str()
        );
    }

    let (answer, witness, report) = match mode {
        Mode::Quantum => {
            let cfg = AmplificationConfig::new(max_repeat)?;
            let mut rng = root_rng(seed);
            let d = match property {
                Property::Uniform => decide_uniform(&spec, n, cfg, &mut rng)?,
                Property::Paving => decide_paving(&spec, n, cfg, &mut rng)?,
                Property::Trivial => decide_trivial(&spec, n, cfg, &mut rng)?,
                Property::Loopless => decide_loopless(&spec, n, cfg, &mut rng)?,
                Property::Eulerian | Property::Axioms => unreachable!("rejected above"),
            };
            (d.answer, d.witness, d.report)
        }
        Mode::Bruteforce => {
            let counting = CountingOracle::new(&spec);
            let answer = match property {
                Property::Uniform => is_uniform_bruteforce(&counting, n)?,
                Property::Paving => is_paving_bruteforce(&counting, n)?,
                Property::Trivial => is_trivial_bruteforce(&counting, n),
                Property::Loopless => is_loopless_bruteforce(&counting, n),
                Property::Eulerian => is_eulerian_bruteforce(&counting, n)?,
                Property::Axioms => verify_axioms_oracle(&counting, n)?,
            };
            (answer, None, counting.report())
        }
    };

    let record = serde_json::json!({
        "property": property.as_str(),
        "mode": mode.as_str(),
        "answer": if answer { 1 } else { 0 },
        "witness": mask_json(witness),
        "classicalQueries": report.classical,
        "quantumQueries": report.quantum,
    });
    println!("{record}");
    Ok(if answer { 0 } else { 1 })
}

fn cmd_girth(file: &PathBuf, mode: Mode, seed: u64, max_repeat: u32) -> anyhow::Result<u8> {
    let spec = read_spec(file)?;
    let n = spec.n();
    let result = match mode {
        Mode::Quantum => {
            let cfg = AmplificationConfig::new(max_repeat)?;
            let mut rng = root_rng(seed);
            compute_girth(&spec, n, cfg, &mut rng)?
        }
        Mode::Bruteforce => girth_classical(&spec, n),
    };
    let record = serde_json::json!({
        "girth": result.girth.to_string(),
        "mode": mode.as_str(),
        "witness": mask_json(result.witness),
        "classicalQueries": result.report.classical,
        "quantumQueries": result.report.quantum,
    });
    println!("{record}");
    Ok(0)
}

fn cmd_count(file: &PathBuf, what: CountWhat) -> anyhow::Result<u8> {
    let spec = read_spec(file)?;
    let n = spec.n();
    let counting = CountingOracle::new(&spec);
    let count = match what {
        CountWhat::Circuits => circuits(&counting, n)?.len(),
        CountWhat::Bases => bases(&counting, n)?.len(),
        CountWhat::Flats => flats(&counting, n)?.len(),
        CountWhat::Hyperplanes => hyperplanes(&counting, n)?.len(),
    };
    let report = counting.report();
    let record = serde_json::json!({
        "what": what.as_str(),
        "count": count,
        "classicalQueries": report.classical,
        "quantumQueries": report.quantum,
    });
    println!("{record}");
    Ok(0)
}

fn cmd_bound(kind: &str, n_lo: u32, n_hi: u32) -> anyhow::Result<u8> {
    const EXHAUSTIVE_CAP: u32 = 8;
    let kind = RelationKind::parse(kind)?;
    println!(
        "{:<4} {:<4} {:<8} {:<4} {:<4} {:<4} {:<22} {:<22} {}",
        "n", "r", "m", "m'", "l", "l'", "exhaustive", "closedForm", "match"
    );
    let mut printed = 0u32;
    for n in n_lo..=n_hi {
        let theory = match theoretical_bound(kind, n) {
            Ok(t) => t,
            Err(err) => {
                eprintln!("n={n}: skipped ({err})");
                continue;
            }
        };
        let closed = format!("{} ~ {:.3}", theory, theory.approx());
        if n <= EXHAUSTIVE_CAP {
            let relation = build_relation(kind, n, kind.bound_rank(n))?;
            let params = relation_params(&relation)?;
            let bound = params.bound();
            println!(
                "{:<4} {:<4} {:<8} {:<4} {:<4} {:<4} {:<22} {:<22} {}",
                n,
                relation.r,
                params.m,
                params.m_prime,
                params.l,
                params.l_prime,
                format!("{} ~ {:.3}", bound, bound.approx()),
                closed,
                bound.same_value(theory),
            );
        } else {
            println!(
                "{:<4} {:<4} {:<8} {:<4} {:<4} {:<4} {:<22} {:<22} {}",
                n,
                kind.bound_rank(n),
                "-",
                "-",
                "-",
                "-",
                "-",
                closed,
                "-",
            );
        }
        printed += 1;
    }
    if printed == 0 {
        bail!("no admissible n in {n_lo}..{n_hi} for {}", kind.as_str());
    }
    Ok(0)
}
