//! Sections of a set along coordinate subsets, and the entropy inequalities
//! they satisfy.
//!
//! For `I ⊆ [n]` with complement `J`, the section of `A` at an assignment
//! `y` on `J` is the fiber `A^I_y ⊆ {0,1}^I`. Section sizes define a
//! probability distribution over `y` whose entropy, together with the
//! per-section isoperimetric excesses, controls the excess of `A` itself.
//! All masses are exact integer counts; floating point enters only through
//! `log2`.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cubeset::{section_partition, CoordSet, CubeSet};
use crate::error::{Error, Result};
use crate::isoperimetry::{edge_boundary, iso_excess};
use crate::{EXACT_TOL, SLACK};

/// Shannon entropy in bits of an explicit distribution. Zero masses
/// contribute zero; the masses must be nonnegative and sum to 1 within
/// `1e-12`.
pub fn entropy(dist: &[f64]) -> Result<f64> {
    let mut sum = 0.0;
    for &p in dist {
        if p < 0.0 {
            return Err(Error::invalid(format!("negative probability mass {p}")));
        }
        sum += p;
    }
    if (sum - 1.0).abs() > EXACT_TOL {
        return Err(Error::invalid(format!(
            "probability masses sum to {sum}, not 1"
        )));
    }
    Ok(dist
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum())
}

/// Entropy of the distribution proportional to integer counts:
/// `log2(total) - sum(c log2 c) / total`. Exact masses, one rounding per
/// term.
pub(crate) fn entropy_from_counts<'a, I>(counts: I, total: u64) -> f64
where
    I: IntoIterator<Item = &'a u64>,
{
    debug_assert!(total > 0);
    let total_f = total as f64;
    let weighted: f64 = counts
        .into_iter()
        .filter(|&&c| c > 1)
        .map(|&c| c as f64 * (c as f64).log2())
        .sum();
    total_f.log2() - weighted / total_f
}

/// Counts of members of `a` grouped by their values on the coordinates of
/// `s`, keyed by the packed assignment (ascending coordinates of `s`).
fn marginal_counts(a: &CubeSet, s: CoordSet) -> BTreeMap<u32, u64> {
    let mut out: BTreeMap<u32, u64> = BTreeMap::new();
    for v in a.iter() {
        *out.entry(s.compact(v)).or_insert(0) += 1;
    }
    out
}

/// Entropy of the marginal of the uniform distribution on `a` on the
/// coordinates of `s`.
pub fn marginal_entropy(a: &CubeSet, s: CoordSet) -> Result<f64> {
    if a.is_empty() {
        return Err(Error::domain("marginal of the empty set".to_string()));
    }
    if !s.is_subset_of(CoordSet::full(a.n())) {
        return Err(Error::invalid(format!(
            "coordinates {s:?} not within 1..={}",
            a.n()
        )));
    }
    let counts = marginal_counts(a, s);
    Ok(entropy_from_counts(counts.values(), a.len()))
}

/// One nonempty section: its size, its share of `|A|`, and its own
/// isoperimetric excess inside `{0,1}^I`.
#[derive(Clone, Debug, Serialize)]
pub struct SectionEntry {
    pub count: u64,
    pub alpha: f64,
    pub excess: f64,
}

/// All nonempty sections of a set along `I`, keyed by the packed assignment
/// on the complement `J` (ascending coordinates of `J`).
#[derive(Clone, Debug)]
pub struct SectionTable {
    i_coords: CoordSet,
    n: usize,
    set_size: u64,
    entries: BTreeMap<u64, SectionEntry>,
    /// Sum over sections of the section's own edge boundary; equals the
    /// I-directional boundary of the whole set.
    section_boundary_total: u64,
}

impl SectionTable {
    pub fn i_coords(&self) -> CoordSet {
        self.i_coords
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set_size(&self) -> u64 {
        self.set_size
    }

    pub fn entries(&self) -> &BTreeMap<u64, SectionEntry> {
        &self.entries
    }

    pub fn section_boundary_total(&self) -> u64 {
        self.section_boundary_total
    }

    /// Entropy `H(α^I)` of the section-size distribution.
    pub fn entropy(&self) -> f64 {
        entropy_from_counts(self.entries.values().map(|e| &e.count), self.set_size)
    }

    /// Weighted excess `K^I = Σ_y α_y K_y`, in ascending-y order.
    pub fn weighted_excess(&self) -> f64 {
        self.entries
            .values()
            .map(|e| e.alpha * e.excess)
            .sum()
    }
}

impl Serialize for SectionTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coords: Vec<usize> = self.i_coords.iter().collect();
        let mut s = serializer.serialize_struct("SectionTable", 7)?;
        s.serialize_field("i_coords", &coords)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("set_size", &self.set_size)?;
        s.serialize_field("entropy", &self.entropy())?;
        s.serialize_field("weighted_excess", &self.weighted_excess())?;
        s.serialize_field("section_boundary", &self.section_boundary_total)?;
        s.serialize_field("entries", &self.entries)?;
        s.end()
    }
}

/// Builds the section table of a nonempty set along `I`.
pub fn section_table(a: &CubeSet, i: CoordSet) -> Result<SectionTable> {
    if a.is_empty() {
        return Err(Error::domain("sections of the empty set".to_string()));
    }
    if !i.is_subset_of(CoordSet::full(a.n())) {
        return Err(Error::invalid(format!(
            "coordinates {i:?} not within 1..={}",
            a.n()
        )));
    }
    let dim = i.len() as f64;
    let size = a.len() as f64;
    let mut entries = BTreeMap::new();
    let mut boundary_total = 0u64;
    for (y, fiber) in section_partition(a, i) {
        let count = fiber.len();
        let boundary = edge_boundary(&fiber);
        boundary_total += boundary;
        let log_ratio = dim - (count as f64).log2();
        entries.insert(
            y,
            SectionEntry {
                count,
                alpha: count as f64 / size,
                excess: boundary as f64 / count as f64 - log_ratio,
            },
        );
    }
    Ok(SectionTable {
        i_coords: i,
        n: a.n(),
        set_size: a.len(),
        entries,
        section_boundary_total: boundary_total,
    })
}

/// Mutual information across a proper bipartition `(I, J)` of the
/// coordinates: `H(α^I) + H(α^J) - log2|A|`, where `H(α^I)` is the entropy
/// of the J-marginal. Nonnegative; zero exactly when `A` is a product set
/// across the bipartition.
pub fn mutual_information(a: &CubeSet, i: CoordSet) -> Result<f64> {
    if a.is_empty() {
        return Err(Error::domain(
            "mutual information of the empty set".to_string(),
        ));
    }
    let full = CoordSet::full(a.n());
    if !i.is_subset_of(full) {
        return Err(Error::invalid(format!(
            "coordinates {i:?} not within 1..={}",
            a.n()
        )));
    }
    if i.is_empty() || i == full {
        return Err(Error::invalid(
            "mutual information needs a proper nonempty coordinate split".to_string(),
        ));
    }
    let j = i.complement(a.n());
    let h_j_marginal = marginal_entropy(a, j)?;
    let h_i_marginal = marginal_entropy(a, i)?;
    Ok(h_j_marginal + h_i_marginal - (a.len() as f64).log2())
}

/// Both halves of the sectional-control inequality for a coordinate
/// partition, plus the exact boundary-decomposition cross-check.
#[derive(Clone, Debug, Serialize)]
pub struct SectionalControl {
    /// `Σ_m H(α^{I_m}) - (M-1) log2|A|`.
    pub lhs_entropy: f64,
    /// `Σ_m K^{I_m}` (weighted section excesses).
    pub lhs_excess: f64,
    /// The excess `K(A)` both left-hand sides are bounded by.
    pub excess: f64,
    /// Whether the per-block section boundaries sum exactly to the edge
    /// boundary (integer identity via two independent counting paths).
    pub boundary_identity: bool,
    /// Both inequalities within slack, and the boundary identity exact.
    pub pass: bool,
}

fn validate_partition(n: usize, partition: &[CoordSet]) -> Result<()> {
    if partition.is_empty() {
        return Err(Error::invalid("empty partition".to_string()));
    }
    let full = CoordSet::full(n);
    let mut seen = CoordSet::EMPTY;
    for (k, &block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::invalid(format!("partition block {k} is empty")));
        }
        if !block.is_subset_of(full) {
            return Err(Error::invalid(format!(
                "partition block {block:?} not within 1..={n}"
            )));
        }
        if !seen.intersection(block).is_empty() {
            return Err(Error::invalid(format!(
                "partition blocks overlap at {:?}",
                seen.intersection(block)
            )));
        }
        seen = seen.union(block);
    }
    if seen != full {
        return Err(Error::invalid(format!(
            "partition misses coordinates {:?}",
            seen.complement(n)
        )));
    }
    Ok(())
}

/// Checks that a coordinate partition controls the excess of `a` in both
/// the entropy form and the weighted-excess form.
pub fn sectional_control(a: &CubeSet, partition: &[CoordSet]) -> Result<SectionalControl> {
    validate_partition(a.n(), partition)?;
    let excess = iso_excess(a)?;
    let m = partition.len();
    let mut entropy_sum = 0.0;
    let mut excess_sum = 0.0;
    let mut boundary_sum = 0u64;
    for &block in partition {
        let table = section_table(a, block)?;
        entropy_sum += table.entropy();
        excess_sum += table.weighted_excess();
        boundary_sum += table.section_boundary_total();
    }
    let lhs_entropy = entropy_sum - (m as f64 - 1.0) * (a.len() as f64).log2();
    let boundary_identity = boundary_sum == edge_boundary(a);
    let pass =
        lhs_entropy <= excess + SLACK && excess_sum <= excess + SLACK && boundary_identity;
    Ok(SectionalControl {
        lhs_entropy,
        lhs_excess: excess_sum,
        excess,
        boundary_identity,
        pass,
    })
}

/// Shearer's inequality for a cover in which every coordinate appears at
/// least `d` times: the marginal entropies sum to at least `d·log2|A|`.
#[derive(Clone, Debug, Serialize)]
pub struct ShearerReport {
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
}

pub fn shearer_check(a: &CubeSet, cover: &[CoordSet], d: usize) -> Result<ShearerReport> {
    if a.is_empty() {
        return Err(Error::domain("marginals of the empty set".to_string()));
    }
    if d == 0 {
        return Err(Error::invalid(
            "cover multiplicity must be at least 1".to_string(),
        ));
    }
    let n = a.n();
    let full = CoordSet::full(n);
    for &s in cover {
        if !s.is_subset_of(full) {
            return Err(Error::invalid(format!(
                "cover member {s:?} not within 1..={n}"
            )));
        }
    }
    for coord in 1..=n {
        let multiplicity = cover.iter().filter(|s| s.contains(coord)).count();
        if multiplicity < d {
            return Err(Error::invalid(format!(
                "coordinate {coord} appears {multiplicity} times in the cover, need {d}"
            )));
        }
    }
    let lhs: f64 = cover
        .iter()
        .map(|&s| marginal_entropy(a, s))
        .sum::<Result<f64>>()?;
    let rhs = d as f64 * (a.len() as f64).log2();
    Ok(ShearerReport {
        lhs,
        rhs,
        pass: lhs >= rhs - SLACK,
    })
}

/// How many members sit in "fat fibers" across a bipartition: for all but
/// an `eps` fraction of members, the product of the two section sizes
/// through the member is at least `|A| / (e·2^{MI/eps})`.
#[derive(Clone, Debug, Serialize)]
pub struct ProductStructureReport {
    /// Mutual information across the bipartition, the `K` of the bound.
    pub mi: f64,
    /// `|A| / (e·2^{MI/eps})`.
    pub threshold: f64,
    /// Members whose section-size product meets the threshold.
    pub good_count: u64,
    /// `|A|`.
    pub size: u64,
    /// `good_count ≥ (1-eps)|A|` within slack.
    pub pass: bool,
}

pub fn product_structure(
    a: &CubeSet,
    i: CoordSet,
    eps: f64,
) -> Result<ProductStructureReport> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::invalid(format!("eps {eps} outside (0, 1)")));
    }
    let mi = mutual_information(a, i)?;
    let j = i.complement(a.n());
    let i_counts = marginal_counts(a, i);
    let j_counts = marginal_counts(a, j);
    let size = a.len();
    let threshold = size as f64 / (std::f64::consts::E * (mi / eps).exp2());
    let mut good_count = 0u64;
    for v in a.iter() {
        // Section along J at the I-values of v has the size of v's
        // I-marginal bucket, and vice versa. Both counts are at most 2^24,
        // so the product is exact in f64.
        let fiber_j = i_counts[&i.compact(v)];
        let fiber_i = j_counts[&j.compact(v)];
        if (fiber_j * fiber_i) as f64 >= threshold {
            good_count += 1;
        }
    }
    Ok(ProductStructureReport {
        mi,
        threshold,
        good_count,
        size,
        pass: good_count as f64 >= (1.0 - eps) * size as f64 - SLACK,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubeset::SubCube;
    use crate::isoperimetry::directional_edge_boundary;

    fn coords(list: &[usize], n: usize) -> CoordSet {
        CoordSet::from_coords(list, n).unwrap()
    }

    #[test]
    fn entropy_basics() {
        assert_eq!(entropy(&[0.5, 0.5]).unwrap(), 1.0);
        assert_eq!(entropy(&[1.0, 0.0]).unwrap(), 0.0);
        assert_eq!(entropy(&[0.25; 4]).unwrap(), 2.0);
        assert!(entropy(&[0.5, -0.5, 1.0]).is_err());
        assert!(entropy(&[0.6, 0.6]).is_err());
    }

    #[test]
    fn entropy_from_counts_matches_direct() {
        let counts = [3u64, 5, 8];
        let total = 16u64;
        let dist: Vec<f64> = counts.iter().map(|&c| c as f64 / total as f64).collect();
        let direct = entropy(&dist).unwrap();
        let from_counts = entropy_from_counts(counts.iter(), total);
        assert!((direct - from_counts).abs() < EXACT_TOL);
    }

    #[test]
    fn section_table_frozen_two_fiber_example() {
        // A = {000, 001, 110, 111} as (x1 x2 x3) strings: vertices 0,4,3,7.
        let a = CubeSet::from_vertices(3, [0u32, 4, 3, 7]).unwrap();
        let t = section_table(&a, coords(&[3], 3)).unwrap();
        assert_eq!(t.entries().len(), 2);
        // J = {1,2}; surviving assignments are (0,0) -> packed 0 and
        // (1,1) -> packed 3
        let keys: Vec<u64> = t.entries().keys().copied().collect();
        assert_eq!(keys, vec![0, 3]);
        for e in t.entries().values() {
            assert_eq!(e.count, 2);
            assert_eq!(e.alpha, 0.5);
            assert_eq!(e.excess, 0.0); // each fiber is the full 1-cube
        }
        assert_eq!(t.entropy(), 1.0);
        assert_eq!(t.weighted_excess(), 0.0);
        assert_eq!(t.section_boundary_total(), 0);
    }

    #[test]
    fn section_table_full_cube() {
        let a = CubeSet::full(5).unwrap();
        let t = section_table(&a, coords(&[2, 4], 5)).unwrap();
        assert_eq!(t.entries().len(), 8);
        for e in t.entries().values() {
            assert_eq!(e.count, 4);
            assert_eq!(e.excess, 0.0);
        }
        assert_eq!(t.entropy(), 3.0);
    }

    #[test]
    fn section_table_empty_direction_lists_members() {
        let a = CubeSet::from_vertices(3, [1u32, 2, 5, 6]).unwrap();
        let t = section_table(&a, CoordSet::EMPTY).unwrap();
        assert_eq!(t.entries().len(), 4);
        for e in t.entries().values() {
            assert_eq!(e.count, 1);
            assert_eq!(e.excess, 0.0);
        }
        assert_eq!(t.entropy(), 2.0); // log2 |A|
    }

    #[test]
    fn section_table_all_coordinates_single_entry() {
        let a = CubeSet::from_vertices(4, [0u32, 1, 2, 9, 15]).unwrap();
        let t = section_table(&a, CoordSet::full(4)).unwrap();
        assert_eq!(t.entries().len(), 1);
        let entry = t.entries().values().next().unwrap();
        assert_eq!(entry.count, 5);
        let k = iso_excess(&a).unwrap();
        assert!((entry.excess - k).abs() < EXACT_TOL);
        assert_eq!(t.entropy(), 0.0);
    }

    #[test]
    fn section_boundaries_sum_to_directional_boundary() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..30 {
            let n = rng.gen_range(1..=8);
            let density: f64 = rng.gen_range(0.1..0.9);
            let a = CubeSet::from_fn(n, |_| rng.gen::<f64>() < density).unwrap();
            if a.is_empty() {
                continue;
            }
            let i_mask: u32 = rng.gen_range(0..1u32 << n);
            let i = CoordSet::from_mask(i_mask);
            let t = section_table(&a, i).unwrap();
            assert_eq!(
                t.section_boundary_total(),
                directional_edge_boundary(&a, i),
                "n={n} i={i:?}"
            );
            let total: u64 = t.entries().values().map(|e| e.count).sum();
            assert_eq!(total, a.len());
            // entropy through the table equals the complementary marginal
            let h = marginal_entropy(&a, i.complement(n)).unwrap();
            assert!((t.entropy() - h).abs() < EXACT_TOL);
        }
    }

    #[test]
    fn section_identity_links_directional_boundary_entropy_and_excess() {
        // |∂^I(A)| = |A| log2(2^|I|/|A|) + |A| (H(α^I) + K^I), an exact
        // consequence of summing the per-section excess definition.
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..30 {
            let n = rng.gen_range(2..=8);
            let density: f64 = rng.gen_range(0.2..0.8);
            let a = CubeSet::from_fn(n, |_| rng.gen::<f64>() < density).unwrap();
            if a.is_empty() {
                continue;
            }
            let i_mask: u32 = rng.gen_range(0..1u32 << n);
            let i = CoordSet::from_mask(i_mask);
            let t = section_table(&a, i).unwrap();
            let size = a.len() as f64;
            let lhs = directional_edge_boundary(&a, i) as f64;
            let rhs = size * (i.len() as f64 - size.log2())
                + size * (t.entropy() + t.weighted_excess());
            assert!((lhs - rhs).abs() < 1e-9 * size, "n={n} lhs={lhs} rhs={rhs}");
        }
    }

    #[test]
    fn mutual_information_frozen_examples() {
        // product set {00,11} x {0,1}: members (x1x2) in {00,11}, x3 free
        let prod = CubeSet::from_vertices(3, [0u32, 4, 3, 7]).unwrap();
        let mi = mutual_information(&prod, coords(&[3], 3)).unwrap();
        assert!(mi.abs() < 1e-9);

        let diag = CubeSet::from_vertices(3, [0u32, 7]).unwrap();
        let mi = mutual_information(&diag, coords(&[1], 3)).unwrap();
        assert!((mi - 1.0).abs() < 1e-9);

        let full = CubeSet::full(4).unwrap();
        let mi = mutual_information(&full, coords(&[1, 3], 4)).unwrap();
        assert!(mi.abs() < 1e-9);
    }

    #[test]
    fn mutual_information_is_symmetric_and_nonnegative() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..40 {
            let n = rng.gen_range(2..=8);
            let density: f64 = rng.gen_range(0.1..0.9);
            let a = CubeSet::from_fn(n, |_| rng.gen::<f64>() < density).unwrap();
            if a.is_empty() {
                continue;
            }
            let i_mask: u32 = rng.gen_range(1..(1u32 << n) - 1);
            let i = CoordSet::from_mask(i_mask);
            let mi = mutual_information(&a, i).unwrap();
            let mi_flip = mutual_information(&a, i.complement(n)).unwrap();
            assert!((mi - mi_flip).abs() < EXACT_TOL);
            assert!(mi >= -SLACK, "negative MI {mi}");
        }
    }

    #[test]
    fn mutual_information_rejects_trivial_splits() {
        let a = CubeSet::full(3).unwrap();
        assert!(mutual_information(&a, CoordSet::EMPTY).is_err());
        assert!(mutual_information(&a, CoordSet::full(3)).is_err());
    }

    #[test]
    fn sectional_control_worked_example() {
        // A = {x1=0,x2=0} ∪ {x1=1,x2=1} in the 4-cube.
        let c1 = SubCube::new(4, &[(1, false), (2, false)]).unwrap();
        let c2 = SubCube::new(4, &[(1, true), (2, true)]).unwrap();
        let a = c1.members().union(&c2.members()).unwrap();
        let rep =
            sectional_control(&a, &[coords(&[1, 2], 4), coords(&[3, 4], 4)]).unwrap();
        assert!((rep.excess - 1.0).abs() < 1e-9);
        assert!((rep.lhs_excess - 1.0).abs() < 1e-9);
        assert!(rep.lhs_entropy.abs() < 1e-9);
        assert!(rep.boundary_identity);
        assert!(rep.pass);
    }

    #[test]
    fn sectional_control_on_subcube_is_tight_at_zero() {
        let cube = SubCube::new(5, &[(2, true), (5, false)]).unwrap();
        let a = cube.members();
        let partition = [coords(&[1, 2], 5), coords(&[3], 5), coords(&[4, 5], 5)];
        let rep = sectional_control(&a, &partition).unwrap();
        assert!(rep.excess.abs() < EXACT_TOL);
        assert!(rep.lhs_entropy.abs() < 1e-9);
        assert!(rep.lhs_excess.abs() < 1e-9);
        assert!(rep.pass);
    }

    #[test]
    fn sectional_control_single_block() {
        let a = CubeSet::from_vertices(3, [0u32, 1, 2]).unwrap();
        let rep = sectional_control(&a, &[CoordSet::full(3)]).unwrap();
        assert!(rep.lhs_entropy.abs() < EXACT_TOL);
        assert!((rep.lhs_excess - rep.excess).abs() < EXACT_TOL);
        assert!(rep.pass);
    }

    #[test]
    fn sectional_control_validates_partitions() {
        let a = CubeSet::full(4).unwrap();
        // overlap
        assert!(sectional_control(&a, &[coords(&[1, 2], 4), coords(&[2, 3, 4], 4)]).is_err());
        // missing coordinate
        assert!(sectional_control(&a, &[coords(&[1, 2], 4), coords(&[3], 4)]).is_err());
        // empty block
        assert!(sectional_control(&a, &[CoordSet::full(4), CoordSet::EMPTY]).is_err());
        assert!(sectional_control(&a, &[]).is_err());
    }

    #[test]
    fn shearer_trivial_and_singleton_covers() {
        let a = CubeSet::from_vertices(3, [0u32, 7]).unwrap();
        let whole = shearer_check(&a, &[CoordSet::full(3)], 1).unwrap();
        assert!((whole.lhs - whole.rhs).abs() < EXACT_TOL);
        assert!(whole.pass);

        let singles = [coords(&[1], 3), coords(&[2], 3), coords(&[3], 3)];
        let rep = shearer_check(&a, &singles, 1).unwrap();
        assert!((rep.lhs - 3.0).abs() < EXACT_TOL);
        assert!((rep.rhs - 1.0).abs() < EXACT_TOL);
        assert!(rep.pass);
    }

    #[test]
    fn shearer_complement_cover_of_partition() {
        // complements of a 3-block partition form a 2-cover
        let a = CubeSet::from_vertices(6, [0u32, 9, 18, 27, 36, 45, 54, 63]).unwrap();
        let blocks = [coords(&[1, 2], 6), coords(&[3, 4], 6), coords(&[5, 6], 6)];
        let cover: Vec<CoordSet> = blocks.iter().map(|b| b.complement(6)).collect();
        let rep = shearer_check(&a, &cover, 2).unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn shearer_rejects_thin_covers() {
        let a = CubeSet::full(3).unwrap();
        assert!(shearer_check(&a, &[coords(&[1], 3), coords(&[2], 3)], 1).is_err());
        assert!(shearer_check(&a, &[CoordSet::full(3)], 2).is_err());
        assert!(shearer_check(&a, &[CoordSet::full(3)], 0).is_err());
    }

    #[test]
    fn product_structure_product_set_is_all_good() {
        let prod = CubeSet::from_vertices(3, [0u32, 4, 3, 7]).unwrap();
        let rep = product_structure(&prod, coords(&[3], 3), 0.25).unwrap();
        assert!(rep.mi.abs() < 1e-9);
        assert_eq!(rep.good_count, 4);
        assert!(rep.pass);
    }

    #[test]
    fn product_structure_diagonal_example() {
        let diag = CubeSet::from_vertices(3, [0u32, 7]).unwrap();
        let rep = product_structure(&diag, coords(&[1], 3), 0.5).unwrap();
        assert!((rep.mi - 1.0).abs() < 1e-9);
        // threshold = 2 / (e * 2^2) ≈ 0.184; every member has fiber product 1
        assert!((rep.threshold - 2.0 / (std::f64::consts::E * 4.0)).abs() < 1e-9);
        assert_eq!(rep.good_count, 2);
        assert!(rep.pass);
    }

    #[test]
    fn product_structure_validates_eps() {
        let a = CubeSet::full(3).unwrap();
        assert!(product_structure(&a, coords(&[1], 3), 0.0).is_err());
        assert!(product_structure(&a, coords(&[1], 3), 1.0).is_err());
    }
}
