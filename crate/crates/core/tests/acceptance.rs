//! End-to-end acceptance checks, one per headline guarantee.
//!
//! Each test prints a single `[acceptance] criterion-NN <name>: PASS` line
//! once its assertions (and, where stated, its runtime limit) hold. The
//! exhaustive criteria enumerate every subset of a small cube; the
//! randomized ones replay fixed seeds, so every run checks the same inputs.

use std::time::Instant;

use anyhow::Result;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cubeiso::{
    decompose, edge_boundary, generate, harper_segment, influence_profile, iso_excess,
    min_boundary_oracle, polyanskiy_check, render_report, run_suite, sparse_section_expectation,
    sparse_section_operator_form, talagrand_ratio, verify_decomposition, CubeSet,
    DecomposeConfig, GeneratorSpec, Mode, PseudoBooleanFn, ReportFormat, SampleMode, SubCube,
    SuiteName, SuiteParams,
};

fn params(n: usize, mode: Mode, samples: u64, eps: f64) -> SuiteParams {
    SuiteParams {
        n,
        mode,
        samples,
        eps,
    }
}

/// Every subcube of `Q_n`: all fixed-coordinate subsets crossed with all
/// patterns on them.
fn all_subcubes(n: usize) -> Vec<SubCube> {
    let mut out = Vec::new();
    for fixed_mask in 0u32..(1 << n) {
        let coords: Vec<usize> = (0..n).filter(|i| fixed_mask >> i & 1 == 1).collect();
        let k = coords.len();
        for pattern in 0u32..(1 << k) {
            let pairs: Vec<(usize, bool)> = coords
                .iter()
                .enumerate()
                .map(|(idx, &c)| (c + 1, pattern >> idx & 1 == 1))
                .collect();
            out.push(SubCube::new(n, &pairs).unwrap());
        }
    }
    out
}

#[test]
fn criterion_01_q4_excess_sweep_and_tight_subcubes() -> Result<()> {
    let started = Instant::now();

    let report = run_suite(SuiteName::Iso, &params(4, Mode::Exhaustive, 0, 0.1), 0)?;
    assert_eq!(report.trials, 65_536);
    assert_eq!(report.failures, 0, "witnesses: {:?}", report.witnesses);

    let subcubes = all_subcubes(4);
    assert_eq!(subcubes.len(), 81);
    for cube in &subcubes {
        let excess = iso_excess(&cube.members())?;
        assert!(
            excess.abs() <= 1e-12,
            "subcube {cube:?} has excess {excess}"
        );
    }

    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 10.0, "took {elapsed:.2} s, limit 10 s");
    println!("[acceptance] criterion-01 q4-excess-sweep-and-tight-subcubes: PASS ({elapsed:.2} s)");
    Ok(())
}

#[test]
fn criterion_02_harper_segments_attain_the_minimum() -> Result<()> {
    let started = Instant::now();

    for m in 0u64..=16 {
        let oracle = min_boundary_oracle(4, m)?;
        let segment = harper_segment(4, m)?;
        assert_eq!(
            oracle,
            edge_boundary(&segment),
            "size {m}: exhaustive minimum vs segment boundary"
        );
    }

    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 30.0, "took {elapsed:.2} s, limit 30 s");
    println!("[acceptance] criterion-02 harper-segments-attain-the-minimum: PASS ({elapsed:.2} s)");
    Ok(())
}

#[test]
fn criterion_03_influence_identity_exact_on_10000_sets() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1dea);
    for trial in 0..10_000 {
        let n = rng.gen_range(4..=16);
        let density: f64 = rng.gen_range(0.02..0.98);
        let seed: u64 = rng.gen();
        let a = generate(&GeneratorSpec::DensityRandom { n, density, seed })?.set;
        let boundary = edge_boundary(&a);
        let prof = influence_profile(&a)?;
        // integer form: per-coordinate crossings sum to the boundary
        assert_eq!(
            prof.total_crossings(),
            boundary,
            "trial {trial}: n={n} seed={seed}"
        );
        // float form: total influence × 2^(n-1) equals the boundary exactly
        // (every term is dyadic, so the arithmetic is lossless)
        let total_influence: f64 = prof.influences().iter().sum();
        let lhs = total_influence * (1u64 << (n - 1)) as f64;
        assert_eq!(lhs, boundary as f64, "trial {trial}: n={n} seed={seed}");
    }
    println!("[acceptance] criterion-03 influence-identity-exact-on-10000-sets: PASS");
    Ok(())
}

#[test]
fn criterion_04_sectional_control_exhaustive_q4() -> Result<()> {
    let started = Instant::now();

    let report = run_suite(SuiteName::Sections, &params(4, Mode::Exhaustive, 0, 0.1), 0)?;
    // 65,535 nonempty subsets × 14 partitions of {1,2,3,4} into 2–4 blocks
    assert_eq!(report.trials, 65_535 * 14);
    assert_eq!(
        report.failures,
        0,
        "first witnesses: {:?}",
        &report.witnesses[..report.witnesses.len().min(3)]
    );

    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 300.0, "took {elapsed:.2} s, limit 300 s");
    println!("[acceptance] criterion-04 sectional-control-exhaustive-q4: PASS ({elapsed:.2} s)");
    Ok(())
}

#[test]
fn criterion_05_product_structure_exhaustive_q3() -> Result<()> {
    for eps in [0.25, 0.5] {
        let report = run_suite(SuiteName::Product, &params(3, Mode::Exhaustive, 0, eps), 0)?;
        // 255 nonempty subsets × 6 proper bipartitions of {1,2,3}
        assert_eq!(report.trials, 255 * 6);
        assert_eq!(report.failures, 0, "eps {eps}: {:?}", report.witnesses);
    }
    println!("[acceptance] criterion-05 product-structure-exhaustive-q3: PASS");
    Ok(())
}

#[test]
fn criterion_06_spherical_average_norm_bound_randomized() -> Result<()> {
    let mut max_ratio = 0.0f64;
    let mut functions = 0u64;
    for (k, n) in [8usize, 10, 12, 14].into_iter().enumerate() {
        let report = run_suite(
            SuiteName::Hyper,
            &params(n, Mode::Random, 250, 0.1),
            0xb0b + k as u64,
        )?;
        assert_eq!(report.failures, 0, "n={n}: {:?}", report.witnesses);
        let radii = 3 * n / 20 + 1;
        assert_eq!(report.trials, 250 * radii as u64);
        max_ratio = max_ratio.max(report.empirical_constants["max_polyanskiy_lhs_over_rhs"]);
        functions += 250;
    }
    assert_eq!(functions, 1000);
    assert!(max_ratio < 1.0, "max lhs/rhs = {max_ratio}");
    println!(
        "[acceptance] criterion-06 spherical-average-norm-bound-randomized: PASS \
         (max lhs/rhs = {max_ratio:.4})"
    );
    Ok(())
}

#[test]
fn criterion_07_sparse_sections_exact_at_n14() -> Result<()> {
    let started = Instant::now();

    let mut rng = ChaCha8Rng::seed_from_u64(0x5ec7);
    for density in [0.0009765625, 0.1, 0.5, 0.9] {
        for rep in 0..100 {
            let a = loop {
                let seed: u64 = rng.gen();
                let set = generate(&GeneratorSpec::DensityRandom {
                    n: 14,
                    density,
                    seed,
                })?
                .set;
                if !set.is_empty() {
                    break set;
                }
            };
            for d in [1usize, 2] {
                let report = sparse_section_expectation(&a, d, SampleMode::Exact)?;
                assert_eq!(
                    report.pass,
                    Some(true),
                    "density {density} rep {rep} d {d}: {} > {}",
                    report.expectation,
                    report.bound
                );
                let operator = sparse_section_operator_form(&a, d)?;
                assert!(
                    (report.expectation - operator).abs() <= 1e-9,
                    "density {density} rep {rep} d {d}: paths differ by {}",
                    (report.expectation - operator).abs()
                );
            }
        }
    }

    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 300.0, "took {elapsed:.2} s, limit 300 s");
    println!("[acceptance] criterion-07 sparse-sections-exact-at-n14: PASS ({elapsed:.2} s)");
    Ok(())
}

#[test]
fn criterion_08_talagrand_ratio_exhaustive_q4() -> Result<()> {
    let report = run_suite(SuiteName::Talagrand, &params(4, Mode::Exhaustive, 0, 0.1), 0)?;
    assert_eq!(report.trials, 65_534);
    assert_eq!(report.failures, 0, "{:?}", report.witnesses);
    let min_ratio = report.empirical_constants["min_talagrand_ratio"];
    assert!(min_ratio > 0.0);

    let dictator = SubCube::new(4, &[(1, true)])?.members();
    let rep = talagrand_ratio(&dictator)?;
    assert_eq!(rep.ratio, 4.0, "dictator ratio must be exact");

    println!(
        "[acceptance] criterion-08 talagrand-ratio-exhaustive-q4: PASS \
         (min ratio = {min_ratio:.6})"
    );
    Ok(())
}

#[test]
fn criterion_09_split_bookkeeping_exhaustive_q4() -> Result<()> {
    let report = run_suite(SuiteName::Decomp, &params(4, Mode::Exhaustive, 0, 0.1), 0)?;
    // 65,535 nonempty subsets × 4 split coordinates
    assert_eq!(report.trials, 65_535 * 4);
    assert_eq!(
        report.failures,
        0,
        "first witnesses: {:?}",
        &report.witnesses[..report.witnesses.len().min(3)]
    );
    println!("[acceptance] criterion-09 split-bookkeeping-exhaustive-q4: PASS");
    Ok(())
}

#[test]
fn criterion_10_decomposition_contract_on_cube_unions() -> Result<()> {
    let started = Instant::now();

    let cfg = DecomposeConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xdec0);
    let mut recoveries = 0u64;
    for trial in 0..200u64 {
        let cubes = rng.gen_range(1..=8);
        let noise = if trial % 2 == 0 { 0.0 } else { 0.02 };
        let generated = loop {
            let seed: u64 = rng.gen();
            match generate(&GeneratorSpec::CubeUnion {
                n: 12,
                cubes,
                codim: 3..=8,
                noise,
                seed,
            }) {
                Ok(g) => break g,
                // a dense packing can fail placement; redraw the seed
                Err(cubeiso::Error::Generation(_)) => continue,
                Err(e) => return Err(e.into()),
            }
        };

        let result = decompose(&generated.set, 0.1, &cfg)?;
        verify_decomposition(&generated.set, &result, 0.1)
            .map_err(|f| anyhow::anyhow!("trial {trial}: {f}"))?;

        if noise == 0.0 {
            // an ε under one vertex per |A| zeroes the budget at every node,
            // so no deviation is affordable anywhere: recovery must be exact
            let eps = 1.0 / (2.0 * generated.set.len() as f64);
            let exact = decompose(&generated.set, eps, &cfg)?;
            assert_eq!(exact.sym_diff, 0, "trial {trial}");
            verify_decomposition(&generated.set, &exact, eps)
                .map_err(|f| anyhow::anyhow!("trial {trial}: {f}"))?;
            let mut union = CubeSet::empty(12)?;
            for cube in &exact.cubes {
                union = union.union(&cube.members())?;
            }
            assert_eq!(union, generated.set, "trial {trial}: union differs");
            recoveries += 1;
        }
    }
    assert_eq!(recoveries, 100);

    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "took {elapsed:.2} s, limit 60 s");
    println!(
        "[acceptance] criterion-10 decomposition-contract-on-cube-unions: PASS ({elapsed:.2} s)"
    );
    Ok(())
}

#[test]
fn criterion_11_reports_are_byte_identical_under_a_seed() -> Result<()> {
    let configs: Vec<(SuiteName, SuiteParams)> = vec![
        (SuiteName::Iso, params(8, Mode::Random, 40, 0.1)),
        (SuiteName::Sections, params(6, Mode::Random, 25, 0.1)),
        (SuiteName::Product, params(6, Mode::Random, 25, 0.25)),
        (SuiteName::Hyper, params(8, Mode::Random, 5, 0.1)),
        (SuiteName::Sparse, params(8, Mode::Random, 5, 0.1)),
        (SuiteName::Talagrand, params(6, Mode::Random, 25, 0.1)),
        (SuiteName::Influence, params(6, Mode::Random, 25, 0.1)),
        (SuiteName::Decomp, params(8, Mode::Random, 8, 0.1)),
        (SuiteName::Iso, params(3, Mode::Exhaustive, 0, 0.1)),
    ];
    for (name, p) in &configs {
        let first = render_report(&run_suite(*name, p, 42)?, ReportFormat::Json)?;
        let second = render_report(&run_suite(*name, p, 42)?, ReportFormat::Json)?;
        assert_eq!(first, second, "{name} report not reproducible");
        let csv_a = render_report(&run_suite(*name, p, 42)?, ReportFormat::Csv)?;
        let csv_b = render_report(&run_suite(*name, p, 42)?, ReportFormat::Csv)?;
        assert_eq!(csv_a, csv_b, "{name} CSV not reproducible");
    }
    println!("[acceptance] criterion-11 reports-are-byte-identical-under-a-seed: PASS");
    Ok(())
}

/// Sanity net under the named criteria: the randomized bounds also hold on
/// directly constructed worst-case-looking inputs nobody generated above.
#[test]
fn adversarial_spot_checks() -> Result<()> {
    // parity set: maximal boundary, its excess is as large as it gets
    let parity = CubeSet::from_fn(10, |v| v.count_ones() % 2 == 0)?;
    assert!(iso_excess(&parity)? > 0.0);

    // point source: sharpest sparse-section concentration
    let point = CubeSet::from_vertices(14, [0u32])?;
    for d in [1, 2] {
        let rep = sparse_section_expectation(&point, d, SampleMode::Exact)?;
        assert_eq!(rep.pass, Some(true));
    }

    // constant-sign function: the norm bound with zero averaging loss
    let ones = PseudoBooleanFn::new(12, vec![1.0; 1 << 12])?;
    let rep = polyanskiy_check(&ones, 1)?;
    assert!(rep.pass);
    Ok(())
}
