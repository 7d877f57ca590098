//! Edge boundaries, isoperimetric excess, influences, and nearest subcubes.
//!
//! The central quantity is the edge-isoperimetric excess of a nonempty set
//! `A` in the n-cube,
//!
//! ```text
//!     K(A) = |boundary(A)| / |A|  -  log2(2^n / |A|),
//! ```
//!
//! which Harper's inequality makes nonnegative, with equality exactly on
//! subcubes. Everything here is exact integer counting followed by one
//! division, so results are reproducible to the last bit.

use serde::Serialize;

use crate::cubeset::{CoordSet, CubeSet, SubCube};
use crate::error::{Error, Result};
use crate::SLACK;

/// Alternating masks selecting the lower half of each aligned pair of
/// blocks of width `2^b`, for `b = 0..6`; direction `b+1` crossings inside a
/// word are popcounts of `(w >> 2^b) & LOW_HALF[b] & ...` style expressions.
const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Number of edges of the cube leaving the set in direction `i` (edges whose
/// endpoints differ in coordinate `i` with exactly one endpoint in the set).
fn direction_crossings(a: &CubeSet, i: usize) -> u64 {
    let words = a.words();
    let b = i - 1;
    if b < 6 {
        // Both endpoints live in the same word: shift and compare halves.
        let shift = 1u32 << b;
        let mask = LOW_HALF[b];
        words
            .iter()
            .map(|w| (((w >> shift) ^ w) & mask).count_ones() as u64)
            .sum()
    } else {
        // Endpoints live in distinct words a block apart.
        let block = 1usize << (b - 6);
        let stride = block << 1;
        let mut total = 0u64;
        let mut base = 0;
        while base < words.len() {
            for k in 0..block {
                total += u64::from((words[base + k] ^ words[base + k + block]).count_ones());
            }
            base += stride;
        }
        total
    }
}

/// Total number of boundary edges `|∂A|`, counted with word-parallel XORs.
pub fn edge_boundary(a: &CubeSet) -> u64 {
    (1..=a.n()).map(|i| direction_crossings(a, i)).sum()
}

/// Boundary edges restricted to the given directions.
pub fn directional_edge_boundary(a: &CubeSet, directions: CoordSet) -> u64 {
    directions.iter().map(|i| direction_crossings(a, i)).sum()
}

/// Harper's lower bound on the boundary, `|A| log2(2^n / |A|)`, and the
/// excess above it, bundled for reporting.
#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    /// `|∂A|`, exact.
    pub boundary: u64,
    /// `|A| log2(2^n/|A|)`.
    pub bound: f64,
    /// Excess per member: `boundary/|A| - log2(2^n/|A|)`.
    pub excess: f64,
    /// Density `|A|/2^n`.
    pub alpha: f64,
}

/// Per-member isoperimetric excess of a nonempty set.
pub fn iso_excess(a: &CubeSet) -> Result<f64> {
    Ok(iso_report(a)?.excess)
}

pub fn iso_report(a: &CubeSet) -> Result<IsoReport> {
    if a.is_empty() {
        return Err(Error::domain(
            "isoperimetric excess of the empty set".to_string(),
        ));
    }
    let boundary = edge_boundary(a);
    let size = a.len() as f64;
    let log_ratio = (a.universe() as f64 / size).log2();
    Ok(IsoReport {
        boundary,
        bound: size * log_ratio,
        excess: boundary as f64 / size - log_ratio,
        alpha: a.density(),
    })
}

/// Influence data for a set: per direction, the number of boundary edges.
///
/// Crossing counts here come from walking the members one by one — a second,
/// independent implementation of the same quantity as
/// [`edge_boundary`](edge_boundary), kept separate on purpose so the two can
/// check each other in tests.
#[derive(Clone, Debug)]
pub struct InfluenceProfile {
    n: usize,
    universe: u64,
    size: u64,
    crossings: Vec<u64>,
}

impl InfluenceProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Boundary edges in direction `i` (1-based).
    pub fn crossings(&self, i: usize) -> u64 {
        self.crossings[i - 1]
    }

    /// Vertices whose indicator value changes when coordinate `i` flips.
    /// Each crossing edge contributes both endpoints.
    pub fn disagreements(&self, i: usize) -> u64 {
        2 * self.crossings[i - 1]
    }

    /// Influence of coordinate `i` on the indicator: disagreement fraction.
    pub fn influence(&self, i: usize) -> f64 {
        self.disagreements(i) as f64 / self.universe as f64
    }

    /// Sum of all crossings; equals the edge boundary.
    pub fn total_crossings(&self) -> u64 {
        self.crossings.iter().sum()
    }

    pub fn influences(&self) -> Vec<f64> {
        (1..=self.n).map(|i| self.influence(i)).collect()
    }

    /// Direction with the most crossings, smallest label on ties.
    pub fn max_direction(&self) -> usize {
        let mut best = 1;
        for i in 2..=self.n {
            if self.crossings[i - 1] > self.crossings[best - 1] {
                best = i;
            }
        }
        best
    }

    pub fn set_size(&self) -> u64 {
        self.size
    }
}

/// Counts boundary edges per direction by iterating members: for each member
/// `v` and direction `i`, the edge `{v, v^e_i}` crosses when the neighbor is
/// outside. Each crossing is seen once, from its inside endpoint (or twice
/// from inside when both endpoints are members — then it is not a crossing).
pub fn influence_profile(a: &CubeSet) -> Result<InfluenceProfile> {
    if a.n() == 0 {
        return Err(Error::invalid(
            "influences need at least one coordinate".to_string(),
        ));
    }
    let n = a.n();
    let mut crossings = vec![0u64; n];
    for v in a.iter() {
        for (b, slot) in crossings.iter_mut().enumerate() {
            if !a.contains(v ^ (1 << b)) {
                *slot += 1;
            }
        }
    }
    Ok(InfluenceProfile {
        n,
        universe: a.universe(),
        size: a.len(),
        crossings,
    })
}

/// Talagrand-style comparison of the log-weighted influence sum against the
/// variance of the indicator.
#[derive(Clone, Debug, Serialize)]
pub struct TalagrandReport {
    /// `sum_i I_i / (1 - log2 I_i)`, with zero-influence terms contributing
    /// nothing.
    pub sum: f64,
    /// `alpha (1 - alpha)`, the variance of the indicator.
    pub variance: f64,
    /// `sum / variance`; positive for every nonconstant set, exactly 4 on
    /// dictators.
    pub ratio: f64,
}

pub fn talagrand_ratio(a: &CubeSet) -> Result<TalagrandReport> {
    if a.is_empty() || a.is_full() {
        return Err(Error::domain(
            "influence ratio of a constant indicator".to_string(),
        ));
    }
    let prof = influence_profile(a)?;
    let sum: f64 = prof
        .influences()
        .iter()
        .filter(|&&inf| inf > 0.0)
        .map(|&inf| inf / (1.0 - inf.log2()))
        .sum();
    let alpha = a.density();
    let variance = alpha * (1.0 - alpha);
    Ok(TalagrandReport {
        sum,
        variance,
        ratio: sum / variance,
    })
}

/// A nearest subcube, by symmetric-difference distance.
#[derive(Clone, Debug, Serialize)]
pub struct BestSubcube {
    pub cube: SubCube,
    /// `|A △ C|` for the reported cube.
    pub distance: u64,
    /// Whether the search was exhaustive (a guaranteed minimum) or greedy.
    pub exhaustive: bool,
}

/// Largest dimension at which the exhaustive 3^n subcube sweep is allowed.
pub const EXHAUSTIVE_SUBCUBE_DIM: usize = 14;

/// Whether coordinate set `a` precedes `b` lexicographically as sorted
/// lists: the first coordinate on which they differ belongs to the smaller.
fn coords_lex_less(a: u32, b: u32) -> bool {
    if a == b {
        return false;
    }
    let low = (a ^ b) & (a ^ b).wrapping_neg();
    a & low != 0
}

/// Whether pattern `a` precedes `b` lexicographically as value vectors over
/// the same fixed set: at the first differing coordinate, 0 precedes 1.
fn pattern_lex_less(a: u32, b: u32) -> bool {
    if a == b {
        return false;
    }
    let low = (a ^ b) & (a ^ b).wrapping_neg();
    a & low == 0
}

/// Distance ties are broken reproducibly: fewer fixed coordinates first,
/// then the lexicographically smaller fixed set, then the lexicographically
/// smaller assignment.
fn subcube_precedes(a: &SubCube, b: &SubCube) -> bool {
    if a.codim() != b.codim() {
        return a.codim() < b.codim();
    }
    if a.fixed_mask() != b.fixed_mask() {
        return coords_lex_less(a.fixed_mask(), b.fixed_mask());
    }
    pattern_lex_less(a.pattern(), b.pattern())
}

/// Exact nearest subcube by sweeping all `3^n` subcubes with a fold over
/// coordinates. Costs `O(3^n)` time and `O(2^n)` scratch; refuses dimensions
/// above [`EXHAUSTIVE_SUBCUBE_DIM`].
pub fn best_subcube_exhaustive(a: &CubeSet) -> Result<BestSubcube> {
    let n = a.n();
    if n > EXHAUSTIVE_SUBCUBE_DIM {
        return Err(Error::capability(format!(
            "exhaustive subcube search is limited to dimension {EXHAUSTIVE_SUBCUBE_DIM}, got {n}"
        )));
    }
    // counts[v] starts as the indicator of A; freeing a coordinate folds
    // aligned halves together, so at the leaves counts[0] = |A ∩ C|.
    let mut counts: Vec<u64> = (0..1u32 << n).map(|v| u64::from(a.contains(v))).collect();
    let size = a.len();
    let mut best: Option<(u64, SubCube)> = None;

    // Depth-first over coordinates, highest bit first so the low/high split
    // of the scratch table always corresponds to the coordinate in hand.
    // Each coordinate is fixed to 0, fixed to 1, or freed (pairs summed in
    // place, restored on the way out), visiting all 3^n subcubes.
    fn recurse(
        counts: &mut [u64],
        remaining: usize,
        n: usize,
        fixed: u32,
        pattern: u32,
        size: u64,
        best: &mut Option<(u64, SubCube)>,
    ) {
        if remaining == 0 {
            let inside = counts[0];
            let cube_size = 1u64 << (n - fixed.count_ones() as usize);
            let dist = size + cube_size - 2 * inside;
            let cand = SubCube::from_masks(n, fixed, pattern).expect("masks valid");
            let better = match best {
                None => true,
                Some((d, c)) => dist < *d || (dist == *d && subcube_precedes(&cand, c)),
            };
            if better {
                *best = Some((dist, cand));
            }
            return;
        }
        let coord_bit = remaining - 1; // highest remaining coordinate
        let half = counts.len() / 2;
        let bit = 1u32 << coord_bit;
        {
            let (low, _) = counts.split_at_mut(half);
            recurse(low, remaining - 1, n, fixed | bit, pattern, size, best);
        }
        {
            let (_, high) = counts.split_at_mut(half);
            recurse(high, remaining - 1, n, fixed | bit, pattern | bit, size, best);
        }
        for k in 0..half {
            counts[k] += counts[k + half];
        }
        {
            let (low, _) = counts.split_at_mut(half);
            recurse(low, remaining - 1, n, fixed, pattern, size, best);
        }
        for k in 0..half {
            let high = counts[k + half];
            counts[k] -= high;
        }
    }

    recurse(&mut counts, n, n, 0, 0, size, &mut best);
    let (distance, cube) = best.expect("the whole cube is always a candidate");
    Ok(BestSubcube {
        cube,
        distance,
        exhaustive: true,
    })
}

/// Greedy nearest subcube: start from the whole cube and repeatedly fix the
/// (coordinate, bit) whose fixing most reduces `|A △ C|`, stopping when no
/// strict improvement remains. Deterministic: candidates are scanned in
/// ascending coordinate order, bit 0 before bit 1, and only strict
/// improvements move the frontier.
pub fn best_subcube_greedy(a: &CubeSet) -> Result<BestSubcube> {
    let n = a.n();
    let size = a.len();
    let mut fixed = 0u32;
    let mut pattern = 0u32;
    let mut cube_size = a.universe();
    let mut dist = cube_size - size; // C = whole cube: |A △ C| = |C| - |A|
    loop {
        let mut improved = false;
        let mut best_step: Option<(u64, u32, bool)> = None;
        for b in 0..n as u32 {
            let bit = 1u32 << b;
            if fixed & bit != 0 {
                continue;
            }
            for value in [false, true] {
                let pat = if value { pattern | bit } else { pattern };
                let new_inside = a.count_matching(fixed | bit, pat);
                let new_dist = size + cube_size / 2 - 2 * new_inside;
                let better = match best_step {
                    None => new_dist < dist,
                    Some((d, _, _)) => new_dist < d,
                };
                if better {
                    best_step = Some((new_dist, bit, value));
                }
            }
        }
        if let Some((new_dist, bit, value)) = best_step {
            if new_dist < dist {
                fixed |= bit;
                if value {
                    pattern |= bit;
                }
                cube_size /= 2;
                dist = new_dist;
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    Ok(BestSubcube {
        cube: SubCube::from_masks(n, fixed, pattern)?,
        distance: dist,
        exhaustive: false,
    })
}

/// Nearest subcube, exhaustive when the dimension permits, greedy otherwise.
pub fn best_subcube(a: &CubeSet) -> Result<BestSubcube> {
    if a.n() <= EXHAUSTIVE_SUBCUBE_DIM {
        best_subcube_exhaustive(a)
    } else {
        best_subcube_greedy(a)
    }
}

/// Default excess threshold below which the stability report considers its
/// guarantee applicable.
pub const DEFAULT_EPS0: f64 = 0.05;

/// Stability of Harper's inequality: sets with small excess are close to a
/// subcube, quantitatively `|A △ C| / |A| <= 3 eps / log2(1/eps)` when the
/// excess `eps` is small enough.
#[derive(Clone, Debug, Serialize)]
pub struct EllisReport {
    /// The excess `K(A)`.
    pub excess: f64,
    /// Distance to the nearest subcube found.
    pub distance: u64,
    /// `distance / |A|`.
    pub relative_distance: f64,
    /// The stability bound `3 eps / log2(1/eps)` (zero at `eps = 0`).
    pub bound: f64,
    /// Whether `0 < excess <= eps0`, the regime the guarantee addresses
    /// (at excess 0 the set already is a subcube).
    pub applicable: bool,
    /// Whether `relative_distance <= bound` (trivially true at excess 0).
    pub pass: bool,
    /// The nearest subcube used for the distance.
    pub cube: SubCube,
    /// Whether the nearest-subcube search was exhaustive.
    pub exhaustive: bool,
}

pub fn ellis_check(a: &CubeSet, eps0: f64) -> Result<EllisReport> {
    if !(eps0 > 0.0 && eps0 < 1.0) {
        return Err(Error::invalid(format!(
            "threshold {eps0} outside (0, 1)"
        )));
    }
    let excess = iso_excess(a)?;
    let best = best_subcube(a)?;
    let relative = best.distance as f64 / a.len() as f64;
    let bound = stability_bound(excess);
    Ok(EllisReport {
        excess,
        distance: best.distance,
        relative_distance: relative,
        bound,
        applicable: excess > 0.0 && excess <= eps0,
        pass: relative <= bound + SLACK,
        cube: best.cube,
        exhaustive: best.exhaustive,
    })
}

/// `3 eps / log2(1/eps)`, extended continuously by 0 at `eps <= 0`.
pub fn stability_bound(eps: f64) -> f64 {
    if eps <= 0.0 {
        0.0
    } else if eps >= 1.0 {
        // log2(1/eps) <= 0 here; the guarantee says nothing. Surface an
        // infinite bound so `pass` is vacuously true.
        f64::INFINITY
    } else {
        3.0 * eps / (1.0 / eps).log2()
    }
}

/// Exact minimum edge boundary over all sets of each size, by exhausting
/// every subset of the n-cube — the brute-force ground truth for extremality
/// statements. Only feasible for `n <= 4` (2^16 subsets); one sweep buckets
/// the minimum for every size, and the table is indexed by size `0..=2^n`.
pub fn min_boundary_table(n: usize) -> Result<Vec<u64>> {
    if n > 4 {
        return Err(Error::capability(format!(
            "exhaustive minimum-boundary search is limited to dimension 4, got {n}"
        )));
    }
    let universe = 1usize << n;
    let mut table = vec![u64::MAX; universe + 1];
    table[0] = 0;
    for mask in 0..(1u64 << universe) {
        let a = CubeSet::from_words(n, vec![mask])?;
        let b = edge_boundary(&a);
        let m = a.len() as usize;
        if b < table[m] {
            table[m] = b;
        }
        if mask == u64::MAX {
            break; // n = 4 wraps the counter at 2^64
        }
    }
    Ok(table)
}

/// Exact minimum boundary among all sets of size `m` in the n-cube, from
/// the exhaustive sweep. Prefer [`min_boundary_table`] when querying many
/// sizes of the same dimension.
pub fn min_boundary_oracle(n: usize, m: u64) -> Result<u64> {
    let table = min_boundary_table(n)?;
    table
        .get(m as usize)
        .copied()
        .ok_or_else(|| Error::invalid(format!("size {m} exceeds 2^{n}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubeset::{harper_segment, Vertex};
    use crate::EXACT_TOL as EXACT;

    /// Edge boundary by brute force over all edges — the oracle the fast
    /// word-parallel path is checked against.
    fn boundary_oracle(a: &CubeSet) -> u64 {
        let mut count = 0;
        for v in 0..a.universe() as Vertex {
            for b in 0..a.n() {
                let u = v ^ (1 << b);
                if u > v && a.contains(v) != a.contains(u) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn boundary_matches_oracle_on_fixed_sets() {
        // values frozen from the brute-force count
        let singleton = CubeSet::from_vertices(5, [9u32]).unwrap();
        assert_eq!(boundary_oracle(&singleton), 5);
        assert_eq!(edge_boundary(&singleton), 5);

        let pair = CubeSet::from_vertices(5, [0u32, 1]).unwrap();
        assert_eq!(boundary_oracle(&pair), 8);
        assert_eq!(edge_boundary(&pair), 8);

        let seg = harper_segment(6, 37).unwrap();
        assert_eq!(edge_boundary(&seg), boundary_oracle(&seg));

        let odd = CubeSet::from_fn(7, |v| v.count_ones() % 2 == 1).unwrap();
        // the parity set touches every edge
        assert_eq!(edge_boundary(&odd), 7 * 64);
        assert_eq!(boundary_oracle(&odd), 7 * 64);
    }

    #[test]
    fn boundary_matches_oracle_on_random_sets() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for n in [1usize, 2, 3, 5, 6, 7, 8] {
            for _ in 0..5 {
                let density: f64 = rng.gen();
                let a = CubeSet::from_fn(n, |_| rng.gen::<f64>() < density).unwrap();
                assert_eq!(edge_boundary(&a), boundary_oracle(&a), "n={n}");
            }
        }
    }

    #[test]
    fn directional_boundary_splits_total() {
        let a = harper_segment(7, 41).unwrap();
        let total: u64 = (1..=7)
            .map(|i| directional_edge_boundary(&a, CoordSet::from_coords(&[i], 7).unwrap()))
            .sum();
        assert_eq!(total, edge_boundary(&a));
        let both = directional_edge_boundary(&a, CoordSet::from_coords(&[1, 2], 7).unwrap());
        let sep = directional_edge_boundary(&a, CoordSet::from_coords(&[1], 7).unwrap())
            + directional_edge_boundary(&a, CoordSet::from_coords(&[2], 7).unwrap());
        assert_eq!(both, sep);
    }

    #[test]
    fn subcubes_have_zero_excess_exactly() {
        for n in 1..=8usize {
            for codim in 0..=n.min(4) {
                let pairs: Vec<(usize, bool)> =
                    (1..=codim).map(|c| (c, c % 2 == 0)).collect();
                let cube = SubCube::new(n, &pairs).unwrap();
                let k = iso_excess(&cube.members()).unwrap();
                assert_eq!(k, 0.0, "n={n} codim={codim}");
            }
        }
    }

    #[test]
    fn excess_is_nonnegative_on_samples() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let density: f64 = rng.gen_range(0.05..0.95);
            let a = CubeSet::from_fn(n, |_| rng.gen::<f64>() < density).unwrap();
            if a.is_empty() {
                continue;
            }
            let k = iso_excess(&a).unwrap();
            assert!(k >= -1e-12, "negative excess {k}");
        }
    }

    #[test]
    fn excess_rejects_empty() {
        let a = CubeSet::empty(4).unwrap();
        assert!(matches!(iso_excess(&a), Err(Error::Domain(_))));
    }

    #[test]
    fn influences_sum_to_boundary() {
        let a = harper_segment(8, 100).unwrap();
        let prof = influence_profile(&a).unwrap();
        assert_eq!(prof.total_crossings(), edge_boundary(&a));
        // frozen: the two-point set {0,1} has crossings (0, 1, 1, ..., 1)*2/2
        let pair = CubeSet::from_vertices(4, [0u32, 1]).unwrap();
        let p = influence_profile(&pair).unwrap();
        assert_eq!(p.crossings(1), 0);
        assert_eq!(p.crossings(2), 2);
        assert_eq!(p.crossings(3), 2);
        assert_eq!(p.crossings(4), 2);
        assert_eq!(p.influence(2), 4.0 / 16.0);
    }

    #[test]
    fn dictator_hits_talagrand_floor_exactly() {
        for n in 2..=6 {
            for i in 1..=n {
                let cube = SubCube::new(n, &[(i, true)]).unwrap();
                let rep = talagrand_ratio(&cube.members()).unwrap();
                assert_eq!(rep.sum, 1.0, "n={n} i={i}");
                assert_eq!(rep.ratio, 4.0, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn talagrand_log_weighting_frozen_example() {
        // {000, 011}: every influence is 1/2, each term (1/2)/(1+1) = 1/4,
        // sum 3/4, variance 3/16, ratio exactly 4.
        let a = CubeSet::from_vertices(3, [0u32, 6]).unwrap();
        let rep = talagrand_ratio(&a).unwrap();
        assert!((rep.sum - 0.75).abs() < EXACT, "sum {}", rep.sum);
        assert!((rep.variance - 0.1875).abs() < EXACT);
        assert!((rep.ratio - 4.0).abs() < 1e-9);
    }

    #[test]
    fn talagrand_rejects_constants() {
        assert!(talagrand_ratio(&CubeSet::empty(3).unwrap()).is_err());
        assert!(talagrand_ratio(&CubeSet::full(3).unwrap()).is_err());
    }

    /// Direct 3^n nearest-subcube oracle, used to pin the folded search.
    fn best_subcube_oracle(a: &CubeSet) -> (u64, SubCube) {
        let n = a.n();
        let mut best: Option<(u64, SubCube)> = None;
        // enumerate fixed masks and patterns directly
        for fixed in 0..1u32 << n {
            for packed in 0..1u32 << fixed.count_ones() {
                let pattern = CoordSet::from_mask(fixed).spread(packed);
                let cube = SubCube::from_masks(n, fixed, pattern).unwrap();
                let inter = a.intersection(&cube.members()).unwrap().len();
                let dist = a.len() + cube.size() - 2 * inter;
                let better = match &best {
                    None => true,
                    Some((d, c)) => dist < *d || (dist == *d && subcube_precedes(&cube, c)),
                };
                if better {
                    best = Some((dist, cube));
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn tie_break_order_is_lexicographic_on_sorted_lists() {
        // {1,4} precedes {2,3} as sorted lists even though its mask is larger
        let t14 = CoordSet::from_coords(&[1, 4], 4).unwrap().mask();
        let t23 = CoordSet::from_coords(&[2, 3], 4).unwrap().mask();
        assert!(t14 > t23);
        assert!(coords_lex_less(t14, t23));
        assert!(!coords_lex_less(t23, t14));
        // over the same fixed set {1,2}, assignment (0,1) precedes (1,0)
        assert!(pattern_lex_less(0b10, 0b01));
        assert!(!pattern_lex_less(0b01, 0b10));
        let a = SubCube::new(4, &[(1, false), (4, false)]).unwrap();
        let b = SubCube::new(4, &[(2, false), (3, false)]).unwrap();
        let c = SubCube::new(4, &[(1, false)]).unwrap();
        assert!(subcube_precedes(&a, &b));
        assert!(subcube_precedes(&c, &a)); // smaller codimension wins
    }

    #[test]
    fn exhaustive_search_matches_direct_oracle() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for n in 1..=6usize {
            for _ in 0..6 {
                let density: f64 = rng.gen_range(0.1..0.9);
                let a = CubeSet::from_fn(n, |_| rng.gen::<f64>() < density).unwrap();
                let fast = best_subcube_exhaustive(&a).unwrap();
                let (dist, cube) = best_subcube_oracle(&a);
                assert_eq!(fast.distance, dist, "n={n}");
                assert_eq!(fast.cube, cube, "n={n}");
            }
        }
    }

    #[test]
    fn exhaustive_finds_exact_cube_at_distance_zero() {
        let c = SubCube::new(9, &[(2, true), (7, false), (9, true)]).unwrap();
        let found = best_subcube_exhaustive(&c.members()).unwrap();
        assert_eq!(found.distance, 0);
        assert_eq!(found.cube, c);
    }

    #[test]
    fn greedy_never_beats_exhaustive_and_recovers_cubes() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..20 {
            let n = rng.gen_range(2..=8);
            let density: f64 = rng.gen_range(0.1..0.9);
            let a = CubeSet::from_fn(n, |_| rng.gen::<f64>() < density).unwrap();
            let g = best_subcube_greedy(&a).unwrap();
            let e = best_subcube_exhaustive(&a).unwrap();
            assert!(g.distance >= e.distance);
            assert!(!g.exhaustive && e.exhaustive);
        }
        let c = SubCube::new(16, &[(3, true), (11, false)]).unwrap();
        let g = best_subcube_greedy(&c.members()).unwrap();
        assert_eq!(g.distance, 0);
        assert_eq!(g.cube, c);
    }

    #[test]
    fn exhaustive_refuses_large_dimension() {
        let a = CubeSet::full(EXHAUSTIVE_SUBCUBE_DIM + 1).unwrap();
        assert!(matches!(
            best_subcube_exhaustive(&a),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn harper_segments_attain_the_exhaustive_minimum() {
        for n in 0..=4usize {
            let table = min_boundary_table(n).unwrap();
            assert_eq!(table.len(), (1 << n) + 1);
            for (m, &min_b) in table.iter().enumerate() {
                let seg = harper_segment(n, m as u64).unwrap();
                assert_eq!(min_b, edge_boundary(&seg), "n={n} m={m}");
            }
        }
        assert!(min_boundary_table(5).is_err());
    }

    #[test]
    fn min_boundary_oracle_spot_values() {
        assert_eq!(min_boundary_oracle(4, 8).unwrap(), 8);
        assert_eq!(min_boundary_oracle(4, 3).unwrap(), 8);
        assert_eq!(min_boundary_oracle(3, 0).unwrap(), 0);
        assert!(min_boundary_oracle(4, 17).is_err());
    }

    #[test]
    fn min_boundary_small_values_frozen() {
        // n=3: sizes 0..=8 -> 0,3,4,5,4,5,4,3,0
        let table = min_boundary_table(3).unwrap();
        assert_eq!(table, vec![0, 3, 4, 5, 4, 5, 4, 3, 0]);
    }

    #[test]
    fn stability_report_on_a_cube_and_near_cube() {
        let cube = SubCube::new(6, &[(1, false)]).unwrap();
        let rep = ellis_check(&cube.members(), DEFAULT_EPS0).unwrap();
        assert_eq!(rep.excess, 0.0);
        assert_eq!(rep.distance, 0);
        // excess exactly zero: the guarantee regime starts above zero, but
        // the distance conclusion holds trivially
        assert!(!rep.applicable);
        assert!(rep.pass);

        // perturb one vertex out of the cube
        let mut vs: Vec<Vertex> = cube.members().iter().collect();
        vs.pop();
        vs.push(0b000001); // a vertex with x1=1
        let near = CubeSet::from_vertices(6, vs).unwrap();
        let rep = ellis_check(&near, DEFAULT_EPS0).unwrap();
        assert!(rep.excess > 0.0);
        assert_eq!(rep.distance, 2);
        assert!(rep.relative_distance <= rep.bound + SLACK || !rep.applicable);
    }

    #[test]
    fn stability_threshold_validation() {
        let a = CubeSet::full(3).unwrap();
        assert!(ellis_check(&a, 0.0).is_err());
        assert!(ellis_check(&a, 1.0).is_err());
    }
}
