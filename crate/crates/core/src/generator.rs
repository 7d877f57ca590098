//! Deterministic random set generation.
//!
//! All randomness flows through a ChaCha stream seeded with the caller's
//! `u64`, so a [`GeneratorSpec`](crate::GeneratorSpec) names one set, bit for
//! bit, on every platform. The interesting kinds plant disjoint subcubes and
//! optionally perturb them, which gives test drivers ground truth to recover.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cubeset::{harper_segment, CubeSet, GeneratorSpec, SubCube};
use crate::error::{Error, Result};
use crate::MAX_DIM;

/// A generated set together with the subcubes that were planted in it,
/// before any noise was applied. Kinds without planted structure leave the
/// list empty.
#[derive(Clone, Debug)]
pub struct Generated {
    pub set: CubeSet,
    pub planted: Vec<SubCube>,
}

/// How many placement attempts each cube gets before the draw is declared
/// infeasible.
const RETRY_BUDGET: usize = 1000;

pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    match spec {
        GeneratorSpec::CubeUnion {
            n,
            cubes,
            codim,
            noise,
            seed,
        } => cube_union(*n, *cubes, codim.clone(), *noise, *seed),
        GeneratorSpec::NoisyCube {
            n,
            codim,
            noise,
            seed,
        } => cube_union(*n, 1, codim.clone(), *noise, *seed),
        GeneratorSpec::DensityRandom { n, density, seed } => {
            density_random(*n, *density, *seed)
        }
        GeneratorSpec::HarperSegment { n, count } => Ok(Generated {
            set: harper_segment(*n, *count)?,
            planted: Vec::new(),
        }),
    }
}

fn check_noise(noise: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&noise) {
        return Err(Error::invalid(format!(
            "noise probability {noise} outside [0, 1]"
        )));
    }
    Ok(())
}

fn random_subcube(n: usize, codim: usize, rng: &mut ChaCha8Rng) -> SubCube {
    // Draw `codim` distinct coordinates by rejection; at the codimensions we
    // allow this terminates fast and keeps the stream consumption simple.
    let mut fixed = 0u32;
    for _ in 0..codim {
        loop {
            let c = rng.gen_range(0..n);
            if fixed >> c & 1 == 0 {
                fixed |= 1 << c;
                break;
            }
        }
    }
    let pattern = rng.gen_range(0..1u64 << n) as u32 & fixed;
    SubCube::from_masks(n, fixed, pattern).expect("masks are in range by construction")
}

fn cube_union(
    n: usize,
    cubes: usize,
    codim: std::ops::RangeInclusive<usize>,
    noise: f64,
    seed: u64,
) -> Result<Generated> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::invalid(format!(
            "cube union needs a dimension in 1..={MAX_DIM}, got {n}"
        )));
    }
    if cubes == 0 {
        return Err(Error::invalid("cube union needs at least one cube".to_string()));
    }
    let (lo, hi) = (*codim.start(), *codim.end());
    if lo > hi || hi > n {
        return Err(Error::invalid(format!(
            "codimension range {lo}..={hi} invalid for dimension {n}"
        )));
    }
    check_noise(noise)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut planted: Vec<SubCube> = Vec::with_capacity(cubes);
    for k in 0..cubes {
        let mut placed = false;
        for _ in 0..RETRY_BUDGET {
            let codim = rng.gen_range(lo..=hi);
            let cand = random_subcube(n, codim, &mut rng);
            if planted.iter().all(|p| cand.is_disjoint(p)) {
                planted.push(cand);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::Generation(format!(
                "could not place cube {} of {cubes} disjointly within {RETRY_BUDGET} attempts; \
                 lower the cube count or raise the codimension",
                k + 1
            )));
        }
    }

    let mut set = CubeSet::empty(n)?;
    for cube in &planted {
        set = set.union(&cube.members())?;
    }
    if noise > 0.0 {
        set = apply_noise(&set, noise, &mut rng)?;
    }
    Ok(Generated { set, planted })
}

/// Flips each vertex's membership independently with probability `p`,
/// consuming one uniform draw per vertex in ascending order.
fn apply_noise(a: &CubeSet, p: f64, rng: &mut ChaCha8Rng) -> Result<CubeSet> {
    CubeSet::from_fn(a.n(), |v| {
        let flip = rng.gen::<f64>() < p;
        a.contains(v) != flip
    })
}

fn density_random(n: usize, density: f64, seed: u64) -> Result<Generated> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::invalid(format!(
            "density {density} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let set = CubeSet::from_fn(n, |_| rng.gen::<f64>() < density)?;
    Ok(Generated {
        set,
        planted: Vec::new(),
    })
}
