//! Real-valued functions on the cube, the spherical averaging operator, and
//! the norm and expectation bounds it satisfies.
//!
//! The operator `S_ℓ` replaces a function's value at `x` by its average
//! over the Hamming sphere of radius `ℓ` around `x`. For `ℓ ≤ 0.15 n` it is
//! hypercontractive: `‖S_ℓ f‖_2 ≤ √2 ‖f‖_q` with `q = 1 + (1 − 2ℓ/n)² < 2`.
//! The same regime controls the expected size of random `d`-dimensional
//! sections of a set. Both gates are enforced exactly as `20ℓ ≤ 3n` in
//! integers; outside them the theorems make no claim and the operations
//! refuse rather than report a meaningless failure.

use std::fs;
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cubeset::{CoordSet, CubeSet, Vertex};
use crate::error::{Error, Result};
use crate::{MAX_DIM, SLACK};

/// A function `{0,1}^n -> R`, stored densely in vertex-index order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PseudoBooleanFn {
    n: usize,
    values: Vec<f64>,
}

impl PseudoBooleanFn {
    pub fn new(n: usize, values: Vec<f64>) -> Result<PseudoBooleanFn> {
        if n > MAX_DIM {
            return Err(Error::capability(format!(
                "dimension {n} exceeds the supported maximum {MAX_DIM}"
            )));
        }
        if values.len() != 1 << n {
            return Err(Error::invalid(format!(
                "expected 2^{n} = {} values, got {}",
                1u64 << n,
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::invalid(format!("non-finite value {bad}")));
        }
        Ok(PseudoBooleanFn { n, values })
    }

    /// The indicator function of a set.
    pub fn indicator(a: &CubeSet) -> PseudoBooleanFn {
        PseudoBooleanFn {
            n: a.n(),
            values: (0..a.universe() as Vertex)
                .map(|v| f64::from(u8::from(a.contains(v))))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, v: Vertex) -> f64 {
        self.values[v as usize]
    }
}

/// `(2^-n Σ |f(x)|^p)^(1/p)` for finite `p ≥ 1`; `f64::INFINITY` selects the
/// max norm.
pub fn lp_norm(f: &PseudoBooleanFn, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::invalid(format!("norm exponent {p} below 1")));
    }
    if p == f64::INFINITY {
        return Ok(f.values.iter().fold(0.0, |m, v| m.max(v.abs())));
    }
    let mean: f64 = f.values.iter().map(|v| v.abs().powf(p)).sum::<f64>()
        / f.values.len() as f64;
    Ok(mean.powf(1.0 / p))
}

/// `2^-n Σ f(x) g(x)`.
pub fn inner_product(f: &PseudoBooleanFn, g: &PseudoBooleanFn) -> Result<f64> {
    if f.n != g.n {
        return Err(Error::invalid(format!(
            "dimension mismatch: {} vs {}",
            f.n, g.n
        )));
    }
    Ok(f
        .values
        .iter()
        .zip(&g.values)
        .map(|(a, b)| a * b)
        .sum::<f64>()
        / f.values.len() as f64)
}

/// Binomial coefficient; all arguments stay far below overflow at the
/// dimensions this crate admits.
pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Iterates all `n`-bit masks with exactly `k` bits set, ascending
/// (Gosper's hack); yields nothing when `k > n`, the zero mask when `k = 0`.
fn masks_of_weight(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let first = if k == 0 { 0 } else { (1u32 << k) - 1 };
    let limit = 1u64 << n;
    let mut current = if k > n { None } else { Some(first) };
    std::iter::from_fn(move || {
        let m = current?;
        // advance to the next mask of equal weight
        current = if m == 0 {
            None
        } else {
            let c = m & m.wrapping_neg();
            let r = m + c;
            let next = (((r ^ m) >> 2) / c) | r;
            if u64::from(next) < limit {
                Some(next)
            } else {
                None
            }
        };
        Some(m)
    })
}

/// The spherical average `S_ℓ(f)(x) = mean of f over the Hamming sphere of
/// radius ℓ around x`. `S_0` is the identity; `S_n` evaluates at the
/// antipode.
pub fn spherical_average(f: &PseudoBooleanFn, ell: usize) -> Result<PseudoBooleanFn> {
    let n = f.n;
    if ell > n {
        return Err(Error::invalid(format!(
            "sphere radius {ell} exceeds dimension {n}"
        )));
    }
    let size = f.values.len();
    let mut out = vec![0.0; size];
    for mask in masks_of_weight(n, ell) {
        for (x, slot) in out.iter_mut().enumerate() {
            *slot += f.values[x ^ mask as usize];
        }
    }
    let sphere = binomial(n, ell) as f64;
    for slot in &mut out {
        *slot /= sphere;
    }
    Ok(PseudoBooleanFn { n, values: out })
}

/// The hypercontractive norm comparison for `S_ℓ`.
#[derive(Clone, Debug, Serialize)]
pub struct PolyanskiyReport {
    /// `‖S_ℓ f‖_2`.
    pub lhs: f64,
    /// `√2 ‖f‖_q`.
    pub rhs: f64,
    /// `1 + (1 − 2ℓ/n)²`.
    pub q: f64,
    pub pass: bool,
}

/// Checks `‖S_ℓ f‖_2 ≤ √2 ‖f‖_q`. Refuses `ℓ > 0.15 n` (checked exactly as
/// `20ℓ > 3n`): the bound states nothing there.
pub fn polyanskiy_check(f: &PseudoBooleanFn, ell: usize) -> Result<PolyanskiyReport> {
    let n = f.n;
    if ell > n {
        return Err(Error::invalid(format!(
            "sphere radius {ell} exceeds dimension {n}"
        )));
    }
    if 20 * ell > 3 * n {
        return Err(Error::capability(format!(
            "radius {ell} exceeds 0.15·{n}; the norm bound does not apply"
        )));
    }
    let averaged = spherical_average(f, ell)?;
    let lhs = lp_norm(&averaged, 2.0)?;
    let ratio = 1.0 - 2.0 * ell as f64 / n as f64;
    let q = 1.0 + ratio * ratio;
    let rhs = std::f64::consts::SQRT_2 * lp_norm(f, q)?;
    Ok(PolyanskiyReport {
        lhs,
        rhs,
        q,
        pass: lhs <= rhs + SLACK,
    })
}

/// How the sparse-section expectation is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleMode {
    /// Full sum over all members and all coordinate `d`-subsets.
    Exact,
    /// Monte Carlo over uniform `(member, subset)` pairs.
    Sampled { samples: u64, seed: u64 },
}

/// Expected size of the section through a random member along a random
/// `d`-subset of coordinates, against the bound `2 α^{d/(8n)} 2^d`.
#[derive(Clone, Debug, Serialize)]
pub struct SparseSectionReport {
    /// `E |A^I_{x_J}|` (exact or sample mean).
    pub expectation: f64,
    /// Standard error of the sample mean; absent in exact mode.
    pub std_error: Option<f64>,
    /// `2 α^{d/(8n)} 2^d`.
    pub bound: f64,
    /// `expectation ≤ bound` within slack; asserted only in exact mode —
    /// a sample mean cannot certify an inequality on the true expectation.
    pub pass: Option<bool>,
    /// Evaluation points: `|A|·C(n,d)` exactly, or the sample count.
    pub trials: u64,
}

fn check_sparse_gate(n: usize, d: usize) -> Result<()> {
    if d < 1 || 20 * d > 3 * n {
        return Err(Error::capability(format!(
            "section dimension {d} outside the bound's range [1, 0.15·{n}]"
        )));
    }
    Ok(())
}

/// The bound `2 α^{d/(8n)} 2^d` on the expected sparse-section size.
fn sparse_bound(alpha: f64, n: usize, d: usize) -> f64 {
    2.0 * alpha.powf(d as f64 / (8.0 * n as f64)) * (1u64 << d) as f64
}

pub fn sparse_section_expectation(
    a: &CubeSet,
    d: usize,
    mode: SampleMode,
) -> Result<SparseSectionReport> {
    if a.is_empty() {
        return Err(Error::domain(
            "section sizes of the empty set".to_string(),
        ));
    }
    let n = a.n();
    check_sparse_gate(n, d)?;
    let bound = sparse_bound(a.density(), n, d);
    match mode {
        SampleMode::Exact => {
            // For a fixed I, Σ_{x∈A} |A^I_{x_J}| = Σ_fibers (fiber size)²:
            // bucket members by their coordinates outside I.
            let mut keys: Vec<u32> = Vec::with_capacity(a.len() as usize);
            let mut total: u64 = 0;
            for mask in masks_of_weight(n, d) {
                keys.clear();
                keys.extend(a.iter().map(|v| v & !mask));
                keys.sort_unstable();
                let mut run = 0u64;
                let mut prev: Option<u32> = None;
                for &k in &keys {
                    if prev == Some(k) {
                        run += 1;
                    } else {
                        total += run * run;
                        prev = Some(k);
                        run = 1;
                    }
                }
                total += run * run;
            }
            let pairs = a.len() * binomial(n, d);
            let expectation = total as f64 / pairs as f64;
            Ok(SparseSectionReport {
                expectation,
                std_error: None,
                bound,
                pass: Some(expectation <= bound + SLACK),
                trials: pairs,
            })
        }
        SampleMode::Sampled { samples, seed } => {
            if samples == 0 {
                return Err(Error::invalid("sample count must be positive".to_string()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let all = CoordSet::full(n).mask();
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            for _ in 0..samples {
                let x = a.select(rng.gen_range(0..a.len()));
                let mut mask = 0u32;
                for _ in 0..d {
                    loop {
                        let c = rng.gen_range(0..n);
                        if mask >> c & 1 == 0 {
                            mask |= 1 << c;
                            break;
                        }
                    }
                }
                let outside = all & !mask;
                let size = a.count_matching(outside, x & outside) as f64;
                sum += size;
                sum_sq += size * size;
            }
            let mean = sum / samples as f64;
            let std_error = if samples > 1 {
                let var = (sum_sq - sum * sum / samples as f64) / (samples - 1) as f64;
                Some((var.max(0.0) / samples as f64).sqrt())
            } else {
                None
            };
            Ok(SparseSectionReport {
                expectation: mean,
                std_error,
                bound,
                pass: None,
                trials: samples,
            })
        }
    }
}

/// The same expectation computed through the averaging operator:
/// `E = α^{-1} Σ_ℓ C(d,ℓ) ⟨1_A, S_ℓ 1_A⟩`. An independent code path used to
/// cross-check the combinatorial sum.
pub fn sparse_section_operator_form(a: &CubeSet, d: usize) -> Result<f64> {
    if a.is_empty() {
        return Err(Error::domain(
            "section sizes of the empty set".to_string(),
        ));
    }
    check_sparse_gate(a.n(), d)?;
    let ind = PseudoBooleanFn::indicator(a);
    let mut acc = 0.0;
    for ell in 0..=d {
        let averaged = spherical_average(&ind, ell)?;
        acc += binomial(d, ell) as f64 * inner_product(&ind, &averaged)?;
    }
    Ok(acc / a.density())
}

// ---------------------------------------------------------------------------
// Function files
// ---------------------------------------------------------------------------

pub fn fn_to_json(f: &PseudoBooleanFn) -> serde_json::Value {
    serde_json::to_value(f).expect("function serialization cannot fail")
}

pub fn fn_from_json(text: &str) -> Result<PseudoBooleanFn> {
    let raw: PseudoBooleanFn =
        serde_json::from_str(text).map_err(|e| Error::Format(format!("function file: {e}")))?;
    PseudoBooleanFn::new(raw.n, raw.values).map_err(|e| match e {
        Error::InvalidInput(msg) => Error::Format(msg),
        other => other,
    })
}

pub fn write_fn_file(f: &PseudoBooleanFn, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string(&fn_to_json(f)).expect("serialization");
    text.push('\n');
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_fn_file(path: &Path) -> Result<PseudoBooleanFn> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    fn_from_json(&text)
}
