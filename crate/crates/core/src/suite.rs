//! Seeded verification suites and report rendering.
//!
//! Each suite replays the invariants of one module over a family of
//! inputs — every subset of a small cube in exhaustive mode, generated
//! corpora in random mode — and collects one row per trial plus a witness
//! for every failure. Reports are deterministic functions of
//! `(suite, params, seed)`; wall time is tracked on the struct but kept
//! out of the serialized form so equal runs serialize identically.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cubeset::{CoordSet, CubeSet, GeneratorSpec};
use crate::decomposition::{
    decompose, max_influence_coordinate, split_bookkeeping, verify_decomposition,
    DecomposeConfig,
};
use crate::error::{Error, Result};
use crate::generator::generate;
use crate::hypercontractivity::{
    polyanskiy_check, sparse_section_expectation, sparse_section_operator_form, PseudoBooleanFn,
    SampleMode,
};
use crate::isoperimetry::{edge_boundary, influence_profile, iso_excess, talagrand_ratio};
use crate::sections::{product_structure, sectional_control};
use crate::SLACK;

/// Largest dimension at which exhaustive mode enumerates all `2^(2^n)`
/// subsets.
pub const EXHAUSTIVE_SUITE_DIM: usize = 4;

/// The eight verification suites, one per module invariant family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    /// Boundary lower bound and the two boundary-counting paths.
    Iso,
    /// Sectional entropy/excess control and the boundary identity.
    Sections,
    /// Product structure of low-information sets.
    Product,
    /// Spherical-average norm bound (randomized only).
    Hyper,
    /// Sparse-section expectations against their bound (randomized only).
    Sparse,
    /// Influence-sum/variance ratio positivity.
    Talagrand,
    /// Max-influence ratio positivity.
    Influence,
    /// Split bookkeeping (exhaustive) and decompose+verify (random).
    Decomp,
}

impl SuiteName {
    pub const ALL: [SuiteName; 8] = [
        SuiteName::Iso,
        SuiteName::Sections,
        SuiteName::Product,
        SuiteName::Hyper,
        SuiteName::Sparse,
        SuiteName::Talagrand,
        SuiteName::Influence,
        SuiteName::Decomp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Iso => "iso",
            SuiteName::Sections => "sections",
            SuiteName::Product => "product",
            SuiteName::Hyper => "hyper",
            SuiteName::Sparse => "sparse",
            SuiteName::Talagrand => "talagrand",
            SuiteName::Influence => "influence",
            SuiteName::Decomp => "decomp",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<SuiteName> {
        SuiteName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown suite {s:?}; expected one of iso, sections, product, hyper, \
                     sparse, talagrand, influence, decomp"
                ))
            })
    }
}

/// How a suite chooses its inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every subset of `Q_n` (requires `n ≤ 4`).
    Exhaustive,
    /// Seeded corpora from the generators.
    Random,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Random => "random",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "random" => Ok(Mode::Random),
            other => Err(Error::invalid(format!(
                "unknown mode {other:?}; expected exhaustive or random"
            ))),
        }
    }
}

/// Inputs shared by every suite. `samples` only matters in random mode;
/// `eps` only for the product and decomp suites.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub n: usize,
    pub mode: Mode,
    pub samples: u64,
    pub eps: f64,
}

impl Default for SuiteParams {
    fn default() -> SuiteParams {
        SuiteParams {
            n: 4,
            mode: Mode::Exhaustive,
            samples: 100,
            eps: 0.1,
        }
    }
}

/// A failing trial: enough to replay it plus what was observed.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub input_id: String,
    pub observed: f64,
    pub bound: f64,
}

/// One trial, plot-ready: `margin ≥ 0` iff the trial passed with room.
#[derive(Clone, Debug, Serialize)]
pub struct TrialRow {
    pub input_id: String,
    pub quantity: f64,
    pub bound: f64,
    pub margin: f64,
    pub pass: bool,
}

/// The outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: u64,
    pub failures: u64,
    pub witnesses: Vec<Witness>,
    /// Observed extremes worth tracking across runs (minimum ratios,
    /// maximum bound usage), keyed by name.
    pub empirical_constants: BTreeMap<String, f64>,
    pub rows: Vec<TrialRow>,
    /// Wall-clock seconds; excluded from serialization so identical runs
    /// produce identical reports.
    #[serde(skip)]
    pub wall_time_s: f64,
}

/// Accumulates rows and witnesses; a failed row automatically records its
/// witness so `failures == witnesses.len()` holds by construction.
struct Collector {
    rows: Vec<TrialRow>,
    witnesses: Vec<Witness>,
    constants: BTreeMap<String, f64>,
}

impl Collector {
    fn new() -> Collector {
        Collector {
            rows: Vec::new(),
            witnesses: Vec::new(),
            constants: BTreeMap::new(),
        }
    }

    fn record(&mut self, input_id: String, quantity: f64, bound: f64, margin: f64, pass: bool) {
        if !pass {
            self.witnesses.push(Witness {
                input_id: input_id.clone(),
                observed: quantity,
                bound,
            });
        }
        self.rows.push(TrialRow {
            input_id,
            quantity,
            bound,
            margin,
            pass,
        });
    }

    fn track_min(&mut self, key: &str, value: f64) {
        self.constants
            .entry(key.to_string())
            .and_modify(|v| *v = v.min(value))
            .or_insert(value);
    }

    fn track_max(&mut self, key: &str, value: f64) {
        self.constants
            .entry(key.to_string())
            .and_modify(|v| *v = v.max(value))
            .or_insert(value);
    }

    fn finish(self, name: SuiteName, started: Instant) -> SuiteReport {
        SuiteReport {
            suite: name.as_str().to_string(),
            trials: self.rows.len() as u64,
            failures: self.witnesses.len() as u64,
            witnesses: self.witnesses,
            empirical_constants: self.constants,
            rows: self.rows,
            wall_time_s: started.elapsed().as_secs_f64(),
        }
    }
}

fn check_exhaustive_dim(n: usize) -> Result<()> {
    if n > EXHAUSTIVE_SUITE_DIM {
        return Err(Error::capability(format!(
            "exhaustive mode enumerates 2^(2^n) subsets; n = {n} exceeds the \
             limit {EXHAUSTIVE_SUITE_DIM}"
        )));
    }
    Ok(())
}

fn randomized_only(name: SuiteName) -> Error {
    Error::invalid(format!(
        "the {name} suite samples generated inputs and has no exhaustive mode"
    ))
}

/// All subsets of `Q_n` as bitmaps, ascending.
fn all_subsets(n: usize) -> impl Iterator<Item = CubeSet> {
    let count = 1u64 << (1usize << n);
    (0..count).map(move |mask| {
        CubeSet::from_words(n, vec![mask]).expect("in-range bitmap for a small dimension")
    })
}

fn subset_id(n: usize, a: &CubeSet) -> String {
    let word = a.words()[0];
    let digits = (1usize << n).div_ceil(4);
    format!("n={n};bits=0x{word:0width$x}", width = digits)
}

/// A fresh random set plus the id string that replays it.
fn random_set(rng: &mut ChaCha8Rng, n: usize) -> Result<(CubeSet, String)> {
    let density: f64 = rng.gen_range(0.02..0.98);
    let seed: u64 = rng.gen();
    let spec = GeneratorSpec::DensityRandom { n, density, seed };
    let set = generate(&spec)?.set;
    Ok((set, format!("n={n};density={density};seed={seed}")))
}

/// Like [`random_set`] but rejects constant sets (resampling up to a
/// bounded number of times, which at any feasible density never triggers).
fn random_nonconstant(rng: &mut ChaCha8Rng, n: usize) -> Result<(CubeSet, String)> {
    for _ in 0..1000 {
        let (set, id) = random_set(rng, n)?;
        if !set.is_empty() && !set.is_full() {
            return Ok((set, id));
        }
    }
    Err(Error::Generation(
        "could not sample a nonconstant set".to_string(),
    ))
}

/// Set partitions of `{1..n}` with at least two blocks, in restricted-
/// growth-string order. Blocks are listed by smallest member.
fn set_partitions(n: usize) -> Vec<Vec<CoordSet>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let blocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        if blocks >= 2 {
            let mut part = vec![CoordSet::EMPTY; blocks];
            for (i, &b) in rgs.iter().enumerate() {
                part[b] = part[b].union(CoordSet::singleton(i + 1));
            }
            out.push(part);
        }
        // advance the restricted growth string
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            let cap = rgs[..i].iter().copied().max().map_or(0, |m| m + 1);
            if rgs[i] < cap {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// Dot-joined coordinate labels (comma-free so ids stay CSV-safe).
fn coords_id(set: CoordSet) -> String {
    let mut s = String::new();
    for (j, c) in set.iter().enumerate() {
        if j > 0 {
            s.push('.');
        }
        s.push_str(&c.to_string());
    }
    s
}

fn partition_id(blocks: &[CoordSet]) -> String {
    let mut s = String::new();
    for (k, b) in blocks.iter().enumerate() {
        if k > 0 {
            s.push('|');
        }
        s.push_str(&coords_id(*b));
    }
    s
}

/// A uniformly drawn partition of `{1..n}` into at least two blocks.
fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Vec<CoordSet> {
    loop {
        let mut rgs = vec![0usize; n];
        let mut max = 0usize;
        for slot in rgs.iter_mut().skip(1) {
            *slot = rng.gen_range(0..=max + 1);
            max = max.max(*slot);
        }
        if max == 0 {
            continue; // single block; redraw
        }
        let mut part = vec![CoordSet::EMPTY; max + 1];
        for (i, &b) in rgs.iter().enumerate() {
            part[b] = part[b].union(CoordSet::singleton(i + 1));
        }
        return part;
    }
}

/// Excess nonnegativity plus the two independent boundary-counting paths
/// agreeing exactly.
fn iso_trial(col: &mut Collector, id: String, a: &CubeSet) -> Result<()> {
    if a.is_empty() {
        col.record(id, 0.0, 0.0, 0.0, true);
        return Ok(());
    }
    let excess = iso_excess(a)?;
    let boundary = edge_boundary(a);
    let crossing_sum = influence_profile(a)?.total_crossings();
    let pass = excess >= -SLACK && crossing_sum == boundary;
    col.track_min("min_excess", excess);
    col.record(id, excess, 0.0, excess, pass);
    Ok(())
}

fn run_iso(col: &mut Collector, params: &SuiteParams, seed: u64) -> Result<()> {
    match params.mode {
        Mode::Exhaustive => {
            check_exhaustive_dim(params.n)?;
            for a in all_subsets(params.n) {
                iso_trial(col, subset_id(params.n, &a), &a)?;
            }
        }
        Mode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..params.samples {
                let (a, id) = random_set(&mut rng, params.n)?;
                iso_trial(col, id, &a)?;
            }
        }
    }
    Ok(())
}

fn sections_trial(col: &mut Collector, id: String, a: &CubeSet, blocks: &[CoordSet]) -> Result<()> {
    let ctl = sectional_control(a, blocks)?;
    let quantity = ctl.lhs_entropy.max(ctl.lhs_excess);
    let margin = ctl.excess - quantity;
    col.record(id, quantity, ctl.excess, margin, ctl.pass);
    Ok(())
}

fn run_sections(col: &mut Collector, params: &SuiteParams, seed: u64) -> Result<()> {
    if params.n < 2 {
        return Err(Error::invalid(
            "sectional control needs at least two coordinates".to_string(),
        ));
    }
    match params.mode {
        Mode::Exhaustive => {
            check_exhaustive_dim(params.n)?;
            let partitions = set_partitions(params.n);
            for a in all_subsets(params.n) {
                if a.is_empty() {
                    continue;
                }
                for blocks in &partitions {
                    let id = format!("{};part={}", subset_id(params.n, &a), partition_id(blocks));
                    sections_trial(col, id, &a, blocks)?;
                }
            }
        }
        Mode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..params.samples {
                let (a, set_id) = random_nonconstant(&mut rng, params.n)?;
                let blocks = random_partition(&mut rng, params.n);
                let id = format!("{set_id};part={}", partition_id(&blocks));
                sections_trial(col, id, &a, &blocks)?;
            }
        }
    }
    Ok(())
}

fn product_trial(
    col: &mut Collector,
    id: String,
    a: &CubeSet,
    i: CoordSet,
    eps: f64,
) -> Result<()> {
    let rep = product_structure(a, i, eps)?;
    let required = (1.0 - eps) * rep.size as f64;
    col.record(
        id,
        rep.good_count as f64,
        required,
        rep.good_count as f64 - required,
        rep.pass,
    );
    Ok(())
}

fn run_product(col: &mut Collector, params: &SuiteParams, seed: u64) -> Result<()> {
    if params.n < 2 {
        return Err(Error::invalid(
            "a proper bipartition needs at least two coordinates".to_string(),
        ));
    }
    let eps = params.eps;
    match params.mode {
        Mode::Exhaustive => {
            check_exhaustive_dim(params.n)?;
            let full = CoordSet::full(params.n).mask();
            for a in all_subsets(params.n) {
                if a.is_empty() {
                    continue;
                }
                for mask in 1..full {
                    let i = CoordSet::from_mask(mask);
                    let id = format!(
                        "{};I={};eps={eps}",
                        subset_id(params.n, &a),
                        coords_id(i)
                    );
                    product_trial(col, id, &a, i, eps)?;
                }
            }
        }
        Mode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let full = CoordSet::full(params.n).mask();
            for _ in 0..params.samples {
                let (a, set_id) = random_nonconstant(&mut rng, params.n)?;
                let i = CoordSet::from_mask(rng.gen_range(1..full));
                let id = format!("{set_id};I={};eps={eps}", coords_id(i));
                product_trial(col, id, &a, i, eps)?;
            }
        }
    }
    Ok(())
}

/// Sphere radii the norm bound covers at dimension `n` (including the
/// identity at radius zero).
fn valid_radii(n: usize) -> impl Iterator<Item = usize> {
    0..=(3 * n / 20)
}

fn run_hyper(col: &mut Collector, params: &SuiteParams, seed: u64) -> Result<()> {
    if params.mode == Mode::Exhaustive {
        return Err(randomized_only(SuiteName::Hyper));
    }
    let n = params.n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..params.samples {
        let values: Vec<f64> = (0..1u64 << n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let f = PseudoBooleanFn::new(n, values)?;
        for ell in valid_radii(n) {
            let rep = polyanskiy_check(&f, ell)?;
            if rep.rhs > 0.0 {
                col.track_max("max_polyanskiy_lhs_over_rhs", rep.lhs / rep.rhs);
            }
            let id = format!("n={n};trial={trial};ell={ell}");
            col.record(id, rep.lhs, rep.rhs, rep.rhs - rep.lhs, rep.pass);
        }
    }
    Ok(())
}

fn run_sparse(col: &mut Collector, params: &SuiteParams, seed: u64) -> Result<()> {
    if params.mode == Mode::Exhaustive {
        return Err(randomized_only(SuiteName::Sparse));
    }
    let n = params.n;
    let d_values: Vec<usize> = valid_radii(n).filter(|&d| d >= 1).collect();
    if d_values.is_empty() {
        return Err(Error::capability(format!(
            "no section weight satisfies 20d <= 3n at n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..params.samples {
        let (a, set_id) = random_nonconstant(&mut rng, n)?;
        for &d in &d_values {
            let rep = sparse_section_expectation(&a, d, SampleMode::Exact)?;
            let operator = sparse_section_operator_form(&a, d)?;
            let agree = (rep.expectation - operator).abs() <= SLACK;
            let pass = rep.pass.unwrap_or(false) && agree;
            if rep.bound > 0.0 {
                col.track_max("max_sparse_usage", rep.expectation / rep.bound);
            }
            let id = format!("{set_id};d={d}");
            col.record(id, rep.expectation, rep.bound, rep.bound - rep.expectation, pass);
        }
    }
    Ok(())
}

fn talagrand_trial(col: &mut Collector, id: String, a: &CubeSet) -> Result<()> {
    let rep = talagrand_ratio(a)?;
    col.track_min("min_talagrand_ratio", rep.ratio);
    col.record(id, rep.ratio, 0.0, rep.ratio, rep.ratio > 0.0);
    Ok(())
}

fn run_talagrand(col: &mut Collector, params: &SuiteParams, seed: u64) -> Result<()> {
    match params.mode {
        Mode::Exhaustive => {
            check_exhaustive_dim(params.n)?;
            for a in all_subsets(params.n) {
                if a.is_empty() || a.is_full() {
                    continue;
                }
                talagrand_trial(col, subset_id(params.n, &a), &a)?;
            }
        }
        Mode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..params.samples {
                let (a, id) = random_nonconstant(&mut rng, params.n)?;
                talagrand_trial(col, id, &a)?;
            }
        }
    }
    Ok(())
}

fn influence_trial(col: &mut Collector, id: String, a: &CubeSet) -> Result<()> {
    let m = max_influence_coordinate(a)?;
    col.track_min("min_influence_ratio", m.ratio);
    col.record(id, m.ratio, 0.0, m.ratio, m.ratio > 0.0);
    Ok(())
}

fn run_influence(col: &mut Collector, params: &SuiteParams, seed: u64) -> Result<()> {
    // The family of interest stops two short of the full cube.
    let cap = (1u64 << params.n) - 2;
    match params.mode {
        Mode::Exhaustive => {
            check_exhaustive_dim(params.n)?;
            for a in all_subsets(params.n) {
                if a.is_empty() || a.len() > cap {
                    continue;
                }
                influence_trial(col, subset_id(params.n, &a), &a)?;
            }
        }
        Mode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut produced = 0u64;
            while produced < params.samples {
                let (a, id) = random_nonconstant(&mut rng, params.n)?;
                if a.len() > cap {
                    continue;
                }
                influence_trial(col, id, &a)?;
                produced += 1;
            }
        }
    }
    Ok(())
}

fn bookkeeping_trial(col: &mut Collector, id: String, a: &CubeSet, j: usize) -> Result<()> {
    let b = split_bookkeeping(a, j)?;
    let residual = b.residual();
    let pass = residual.abs() <= SLACK
        && b.entropy_deficit() >= -SLACK
        && b.influence_deficit() >= -SLACK
        && (0.0..=1.0).contains(&b.delta)
        && b.gamma <= 0.5 + SLACK;
    col.record(id, residual, 0.0, SLACK - residual.abs(), pass);
    Ok(())
}

fn run_decomp(col: &mut Collector, params: &SuiteParams, seed: u64) -> Result<()> {
    match params.mode {
        Mode::Exhaustive => {
            check_exhaustive_dim(params.n)?;
            for a in all_subsets(params.n) {
                if a.is_empty() {
                    continue;
                }
                for j in 1..=params.n {
                    let id = format!("{};j={j}", subset_id(params.n, &a));
                    bookkeeping_trial(col, id, &a, j)?;
                }
            }
        }
        Mode::Random => {
            if params.n < 3 {
                return Err(Error::invalid(
                    "cube-union decomposition trials need n >= 3".to_string(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let cfg = DecomposeConfig::default();
            for trial in 0..params.samples {
                let cubes = rng.gen_range(1..=4);
                let codim_hi = (params.n - 1).min(6);
                let noise = if trial % 2 == 0 { 0.0 } else { 0.02 };
                let gen_seed: u64 = rng.gen();
                let spec = GeneratorSpec::CubeUnion {
                    n: params.n,
                    cubes,
                    codim: 2..=codim_hi,
                    noise,
                    seed: gen_seed,
                };
                let g = generate(&spec)?;
                let id = format!(
                    "n={};cubes={cubes};noise={noise};seed={gen_seed};eps={}",
                    params.n, params.eps
                );
                let result = decompose(&g.set, params.eps, &cfg)?;
                let pass = verify_decomposition(&g.set, &result, params.eps).is_ok();
                col.track_max("max_eps_achieved", result.eps_achieved);
                col.record(
                    id,
                    result.eps_achieved,
                    params.eps,
                    params.eps - result.eps_achieved,
                    pass,
                );
            }
        }
    }
    Ok(())
}

/// Runs one suite and collects its report. Exhaustive mode is capped at
/// `n ≤ 4`; the hyper and sparse suites are randomized only. A failing
/// trial never aborts the run — it is recorded as a witness.
pub fn run_suite(name: SuiteName, params: &SuiteParams, seed: u64) -> Result<SuiteReport> {
    let started = Instant::now();
    let mut col = Collector::new();
    match name {
        SuiteName::Iso => run_iso(&mut col, params, seed)?,
        SuiteName::Sections => run_sections(&mut col, params, seed)?,
        SuiteName::Product => run_product(&mut col, params, seed)?,
        SuiteName::Hyper => run_hyper(&mut col, params, seed)?,
        SuiteName::Sparse => run_sparse(&mut col, params, seed)?,
        SuiteName::Talagrand => run_talagrand(&mut col, params, seed)?,
        SuiteName::Influence => run_influence(&mut col, params, seed)?,
        SuiteName::Decomp => run_decomp(&mut col, params, seed)?,
    }
    Ok(col.finish(name, started))
}

/// Output encodings for a [`SuiteReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReportFormat> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::invalid(format!(
                "unknown format {other:?}; expected json or csv"
            ))),
        }
    }
}

/// Renders a report: JSON is the whole structure, CSV is one line per
/// trial under a fixed header.
pub fn render_report(report: &SuiteReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)
                .map_err(|e| Error::Format(format!("report serialization: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Csv => {
            let mut s = String::from("input_id,quantity,bound,margin,pass\n");
            for row in &report.rows {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.input_id, row.quantity, row.bound, row.margin, row.pass
                ));
            }
            Ok(s)
        }
    }
}

/// Renders and writes a report, with path context on I/O failure.
pub fn emit_report(report: &SuiteReport, format: ReportFormat, path: &Path) -> Result<()> {
    let body = render_report(report, format)?;
    std::fs::write(path, body).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        source: e,
    })
}
