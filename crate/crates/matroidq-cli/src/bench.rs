//! Query-count benchmark engine: per-(n, trial) fixtures, paired
//! quantum/classical rows, CSV output, and a JSON summary with scaling fits.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::ValueEnum;
use rayon::prelude::*;

use matroidq::algorithms::{
    compute_girth, decide_loopless, decide_paving, decide_trivial, decide_uniform,
    girth_classical, scan_for, AmplificationConfig,
};
use matroidq::enumerate::{
    girth_bruteforce, is_loopless_bruteforce, is_paving_bruteforce, is_trivial_bruteforce,
    is_uniform_bruteforce,
};
use matroidq::grover::SearchTarget;
use matroidq::matroid::{DeletedVariant, MatroidSpec};
use matroidq::rng::{stream_rng, Rng};
use matroidq::subset::{binomial, colex_unrank};
use matroidq::{CountingOracle, QueryReport};

/// Benchmark families. Each draws its own fixture per trial; ground truth
/// always comes from exhaustive enumeration, never from the algorithm under
/// test.
#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// deletedBasis1(n, ⌊n/2⌋, random A); uniformity decision
    #[value(name = "uniformDecision")]
    UniformDecision,
    /// deletedBasis1(n, ⌊n/2⌋, random A); girth computation
    Girth,
    /// pavingCounter(n, ⌊n/2⌋+1, random A); paving decision
    #[value(name = "pavingDecision")]
    PavingDecision,
    /// uniform(0, n); triviality decision (singleton search spaces)
    Trivial,
    /// uniform(1, n); looplessness decision
    Loopless,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::UniformDecision => "uniformDecision",
            Family::Girth => "girth",
            Family::PavingDecision => "pavingDecision",
            Family::Trivial => "trivial",
            Family::Loopless => "loopless",
        }
    }

    fn classical_name(self) -> &'static str {
        match self {
            Family::UniformDecision => "uniformDecisionClassical",
            Family::Girth => "girthClassical",
            Family::PavingDecision => "pavingDecisionClassical",
            Family::Trivial => "trivialClassical",
            Family::Loopless => "looplessClassical",
        }
    }

    /// Fixture rank for ground-set size n.
    fn fixture_rank(self, n: u32) -> u32 {
        match self {
            Family::UniformDecision | Family::Girth => n / 2,
            Family::PavingDecision => n / 2 + 1,
            Family::Trivial => 0,
            Family::Loopless => 1,
        }
    }

    /// Ground truth needs the full 2ⁿ independence table except for the
    /// singleton-scan families.
    fn needs_table(self) -> bool {
        !matches!(self, Family::Trivial | Family::Loopless)
    }

    fn size_cap(self) -> u32 {
        if self.needs_table() {
            16
        } else {
            64
        }
    }
}

pub struct BenchSpec {
    pub family: Family,
    pub n_lo: u32,
    pub n_hi: u32,
    pub trials: u64,
    pub seed: u64,
    pub max_repeat: u32,
    pub timings: bool,
    pub max_n: u32,
    pub out: PathBuf,
}

struct BenchRow {
    n: u32,
    r: u32,
    algorithm: &'static str,
    trial: u64,
    seed: u64,
    classical_queries: u64,
    quantum_queries: u64,
    answer: String,
    ground_truth: String,
    correct: bool,
    wall_time_micros: u64,
}

const CSV_HEADER: [&str; 11] = [
    "n",
    "r",
    "algorithm",
    "trial",
    "seed",
    "classicalQueries",
    "quantumQueries",
    "answer",
    "groundTruth",
    "correct",
    "wallTimeMicros",
];

/// Runs the benchmark, writes the CSV, and returns the summary to print.
pub fn run_bench(spec: &BenchSpec) -> anyhow::Result<serde_json::Value> {
    validate(spec)?;
    let cfg = AmplificationConfig::new(spec.max_repeat)?;

    let threads = requested_threads()?;
    let cells: Vec<(u32, u64)> = (spec.n_lo..=spec.n_hi)
        .flat_map(|n| (0..spec.trials).map(move |trial| (n, trial)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("cannot build thread pool")?;
    let pairs: Vec<[BenchRow; 2]> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(n, trial)| run_cell(spec, cfg, n, trial))
            .collect::<matroidq::Result<_>>()
    })?;

    // Parallel execution must never change bytes: fix the order here.
    let mut rows: Vec<BenchRow> = pairs.into_iter().flatten().collect();
    rows.sort_by(|a, b| {
        (a.n, a.trial, a.algorithm).cmp(&(b.n, b.trial, b.algorithm))
    });
    write_csv(&spec.out, &rows)?;
    Ok(summarize(spec, &rows))
}

fn validate(spec: &BenchSpec) -> anyhow::Result<()> {
    let cap = spec.family.size_cap().min(spec.max_n);
    if spec.n_hi > cap {
        bail!(
            "family {} supports n ≤ {} (requested {}); --max-n is {}",
            spec.family.name(),
            cap,
            spec.n_hi,
            spec.max_n
        );
    }
    // Peak projection: per-thread fixture table plus search-space buffers,
    // plus the accumulated row set.
    let threads = effective_threads()? as u64;
    let n = spec.n_hi;
    let per_cell = if spec.family.needs_table() {
        (1u64 << n) * 2 + 3 * binomial(n, n / 2) * 8
    } else {
        3 * n as u64 * 8 + 1024
    };
    let row_count = (spec.n_hi - spec.n_lo + 1) as u64 * spec.trials * 2;
    let projected = threads * per_cell + row_count.saturating_mul(192);
    const LIMIT: u64 = 1 << 30;
    if projected > LIMIT {
        bail!(
            "projected memory {} MiB exceeds the 1 GiB budget \
             (reduce --trials or the n range)",
            projected >> 20
        );
    }
    Ok(())
}

fn requested_threads() -> anyhow::Result<usize> {
    match std::env::var("MATROID_QQ_THREADS") {
        Ok(v) => {
            let t: usize = v
                .parse()
                .context("MATROID_QQ_THREADS must be a positive integer")?;
            if t == 0 {
                bail!("MATROID_QQ_THREADS must be at least 1");
            }
            Ok(t)
        }
        // 0 tells the pool builder to use one thread per core.
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(e.into()),
    }
}

fn effective_threads() -> anyhow::Result<usize> {
    let t = requested_threads()?;
    if t > 0 {
        Ok(t)
    } else {
        Ok(std::thread::available_parallelism().map_or(1, |p| p.get()))
    }
}

fn decision_str(b: bool) -> String {
    if b { "1" } else { "0" }.to_string()
}

/// One fixture, two rows: the search-based decider and its deterministic
/// classical counterpart, both checked against enumeration.
fn run_cell(
    spec: &BenchSpec,
    cfg: AmplificationConfig,
    n: u32,
    trial: u64,
) -> matroidq::Result<[BenchRow; 2]> {
    let mut rng = stream_rng(spec.seed, trial);
    let family = spec.family;
    let r = family.fixture_rank(n);

    let fixture = match family {
        Family::UniformDecision | Family::Girth => {
            let index = rng.gen_range(0..binomial(n, r));
            MatroidSpec::deleted_basis(n, r, colex_unrank(index, n, r)?, DeletedVariant::One)?
        }
        Family::PavingDecision => {
            let index = rng.gen_range(0..binomial(n, r - 1));
            MatroidSpec::paving_counterexample(n, r, colex_unrank(index, n, r - 1)?)?
        }
        Family::Trivial => MatroidSpec::uniform(n, 0)?,
        Family::Loopless => MatroidSpec::uniform(n, 1)?,
    };

    let ground_truth = match family {
        Family::UniformDecision => decision_str(is_uniform_bruteforce(&fixture, n)?),
        Family::Girth => girth_bruteforce(&fixture, n)?.to_string(),
        Family::PavingDecision => decision_str(is_paving_bruteforce(&fixture, n)?),
        Family::Trivial => decision_str(is_trivial_bruteforce(&fixture, n)),
        Family::Loopless => decision_str(is_loopless_bruteforce(&fixture, n)),
    };

    let started = spec.timings.then(Instant::now);
    let (answer, report) = match family {
        Family::UniformDecision => {
            let d = decide_uniform(&fixture, n, cfg, &mut rng)?;
            (decision_str(d.answer), d.report)
        }
        Family::Girth => {
            let g = compute_girth(&fixture, n, cfg, &mut rng)?;
            (g.girth.to_string(), g.report)
        }
        Family::PavingDecision => {
            let d = decide_paving(&fixture, n, cfg, &mut rng)?;
            (decision_str(d.answer), d.report)
        }
        Family::Trivial => {
            let d = decide_trivial(&fixture, n, cfg, &mut rng)?;
            (decision_str(d.answer), d.report)
        }
        Family::Loopless => {
            let d = decide_loopless(&fixture, n, cfg, &mut rng)?;
            (decision_str(d.answer), d.report)
        }
    };
    let quantum_micros = started.map_or(0, |t| t.elapsed().as_micros() as u64);

    let started = spec.timings.then(Instant::now);
    let (classical_answer, classical_report): (String, QueryReport) = match family {
        Family::Girth => {
            let g = girth_classical(&fixture, n);
            (g.girth.to_string(), g.report)
        }
        _ => {
            let (k, target) = match family {
                Family::UniformDecision => (r, SearchTarget::Dependent),
                Family::PavingDecision => (r - 1, SearchTarget::Dependent),
                Family::Trivial => (1, SearchTarget::Independent),
                Family::Loopless => (1, SearchTarget::Dependent),
                Family::Girth => unreachable!(),
            };
            let counting = CountingOracle::new(&fixture);
            let found = scan_for(&counting, n, k, target);
            (decision_str(found.is_none()), counting.report())
        }
    };
    let classical_micros = started.map_or(0, |t| t.elapsed().as_micros() as u64);

    let row = |algorithm, answer: String, report: QueryReport, micros| BenchRow {
        n,
        r,
        algorithm,
        trial,
        seed: spec.seed,
        classical_queries: report.classical,
        quantum_queries: report.quantum,
        correct: answer == ground_truth,
        answer,
        ground_truth: ground_truth.clone(),
        wall_time_micros: micros,
    };
    Ok([
        row(family.name(), answer, report, quantum_micros),
        row(
            family.classical_name(),
            classical_answer,
            classical_report,
            classical_micros,
        ),
    ])
}

fn write_csv(path: &PathBuf, rows: &[BenchRow]) -> anyhow::Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_path(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.write_record([
            row.n.to_string(),
            row.r.to_string(),
            row.algorithm.to_string(),
            row.trial.to_string(),
            row.seed.to_string(),
            row.classical_queries.to_string(),
            row.quantum_queries.to_string(),
            row.answer.clone(),
            row.ground_truth.clone(),
            row.correct.to_string(),
            row.wall_time_micros.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

/// Least-squares slope of y against x; None with fewer than two distinct xs.
fn slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

fn json_f64(v: Option<f64>) -> serde_json::Value {
    match v {
        Some(x) => serde_json::json!(x),
        None => serde_json::Value::Null,
    }
}

fn summarize(spec: &BenchSpec, rows: &[BenchRow]) -> serde_json::Value {
    let mut per_n = Vec::new();
    let mut quantum_points = Vec::new(); // (ln space, ln mean quantum)
    let mut classical_points = Vec::new(); // (ln space, ln mean classical)
    let mut sqrt_means = Vec::new(); // (n, mean quantum)

    for n in spec.n_lo..=spec.n_hi {
        let quantum: Vec<&BenchRow> = rows
            .iter()
            .filter(|r| r.n == n && r.algorithm == spec.family.name())
            .collect();
        let classical: Vec<&BenchRow> = rows
            .iter()
            .filter(|r| r.n == n && r.algorithm == spec.family.classical_name())
            .collect();
        if quantum.is_empty() {
            continue;
        }
        let mean_q = quantum.iter().map(|r| r.quantum_queries as f64).sum::<f64>()
            / quantum.len() as f64;
        let mean_c = classical.iter().map(|r| r.classical_queries as f64).sum::<f64>()
            / classical.len() as f64;
        let space = binomial(n, n / 2);
        per_n.push(serde_json::json!({
            "n": n,
            "r": spec.family.fixture_rank(n),
            "searchSpace": space,
            "meanQuantumQueries": mean_q,
            "meanClassicalQueries": mean_c,
        }));
        if mean_q > 0.0 {
            quantum_points.push(((space as f64).ln(), mean_q.ln()));
        }
        if mean_c > 0.0 {
            classical_points.push(((space as f64).ln(), mean_c.ln()));
        }
        sqrt_means.push((n, mean_q));
    }

    let fit = if spec.family.needs_table() {
        serde_json::json!({
            "quantumLogLogSlopeVsSpace": json_f64(slope(&quantum_points)),
            "classicalLogLogSlopeVsSpace": json_f64(slope(&classical_points)),
        })
    } else {
        // Best c for meanQuantum ≈ c·√n, then the worst relative miss.
        let num: f64 = sqrt_means.iter().map(|&(n, m)| (n as f64).sqrt() * m).sum();
        let den: f64 = sqrt_means.iter().map(|&(n, _)| n as f64).sum();
        let coeff = if den > 0.0 { Some(num / den) } else { None };
        let deviation = coeff.and_then(|c| {
            sqrt_means
                .iter()
                .map(|&(n, m)| (m - c * (n as f64).sqrt()).abs() / (c * (n as f64).sqrt()))
                .fold(None, |acc: Option<f64>, d| Some(acc.map_or(d, |a| a.max(d))))
        });
        serde_json::json!({
            "sqrtCoefficient": json_f64(coeff),
            "maxRelativeDeviationFromSqrtFit": json_f64(deviation),
        })
    };

    serde_json::json!({
        "family": spec.family.name(),
        "nLow": spec.n_lo,
        "nHigh": spec.n_hi,
        "trials": spec.trials,
        "seed": spec.seed,
        "maxRepeat": spec.max_repeat,
        "csv": spec.out.display().to_string(),
        "rows": rows.len(),
        "perN": per_n,
        "fit": fit,
    })
}
