//! Approximating any set by a small disjoint union of subcubes.
//!
//! The engine is a recursion on the coordinate of largest influence: split
//! the set into its two halves along that coordinate, account exactly for
//! how the isoperimetric excess distributes over the halves, and either
//! drop a negligible half or recurse into both with a budget split guided
//! by the accounting. Low-excess sets stop early at their nearest subcube.
//!
//! Budgets are integer vertex counts throughout, so the guarantee
//! `|A △ ∪C| ≤ ε|A|` holds by construction with no float drift; the
//! bookkeeping identity is verified to floating-point accuracy at every
//! split in the test suites.

use serde::Serialize;

use crate::cubeset::{CoordSet, CubeSet, SubCube};
use crate::error::{Error, Result};
use crate::isoperimetry::{
    best_subcube_exhaustive, best_subcube_greedy, directional_edge_boundary, influence_profile,
    iso_excess, EXHAUSTIVE_SUBCUBE_DIM,
};

/// The most influential coordinate of a nonconstant set.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct MaxInfluence {
    /// 1-based coordinate, smallest index on ties.
    pub coord: usize,
    /// Boundary edges in that direction.
    pub crossings: u64,
    /// Fraction of all vertices whose membership flips with the coordinate.
    pub influence: f64,
    /// `influence · 2^n / |A|`, the size-normalized form.
    pub ratio: f64,
}

pub fn max_influence_coordinate(a: &CubeSet) -> Result<MaxInfluence> {
    if a.is_empty() || a.is_full() {
        return Err(Error::domain(
            "influences of a constant indicator".to_string(),
        ));
    }
    let prof = influence_profile(a)?;
    let coord = prof.max_direction();
    Ok(MaxInfluence {
        coord,
        crossings: prof.crossings(coord),
        influence: prof.influence(coord),
        ratio: prof.disagreements(coord) as f64 / a.len() as f64,
    })
}

/// Exact accounting for one coordinate split.
///
/// With `γ = |A⁻|/|A| ≤ 1/2` (halves relabeled so the minus side is the
/// lighter one), `K^±` the excesses of the halves inside the (n−1)-cube,
/// and `b_j` the direction-j boundary per member, the excess of `A`
/// satisfies
///
/// ```text
///     γ K⁻ + (1-γ) K⁺  =  K - (H(γ) - 2γ) - (b_j - (1 - 2γ))  =:  K̃,
/// ```
///
/// and both parenthesized deficits are nonnegative. `K̃` is what the split
/// leaves for the halves, and `δ = γK⁻/K̃` is the minus side's share.
#[derive(Clone, Debug, Serialize)]
pub struct SplitBookkeeping {
    /// The split coordinate `j`.
    pub coord: usize,
    /// The j-value of the lighter (minus) half.
    pub minus_bit: bool,
    /// `|A⁻| / |A|`, at most 1/2.
    pub gamma: f64,
    pub size_minus: u64,
    pub size_plus: u64,
    /// `K(A)`, recomputed exactly.
    pub excess: f64,
    /// Excess of the minus half within its (n−1)-cube; zero when empty.
    pub k_minus: f64,
    /// Excess of the plus half within its (n−1)-cube.
    pub k_plus: f64,
    /// Direction-j boundary edges per member of `A`.
    pub b_j: f64,
    /// Binary entropy `H(γ)`.
    pub h_gamma: f64,
    /// The residual excess available to the halves.
    pub k_tilde: f64,
    /// The minus half's share of `k_tilde`: `γK⁻/K̃`, or `γ` when
    /// `K̃ = 0`.
    pub delta: f64,
    /// Whether the minus half is empty (`γ = 0`).
    pub degenerate: bool,
}

impl SplitBookkeeping {
    /// `H(γ) - 2γ ≥ 0`: the entropy slack of an unbalanced split.
    pub fn entropy_deficit(&self) -> f64 {
        self.h_gamma - 2.0 * self.gamma
    }

    /// `b_j - (1 - 2γ) ≥ 0`: crossings beyond the unavoidable minimum.
    pub fn influence_deficit(&self) -> f64 {
        self.b_j - (1.0 - 2.0 * self.gamma)
    }

    /// `γK⁻ + (1-γ)K⁺ - K̃`; zero up to floating-point rounding.
    pub fn residual(&self) -> f64 {
        self.gamma * self.k_minus + (1.0 - self.gamma) * self.k_plus - self.k_tilde
    }
}

/// The two halves of a set along a coordinate, re-indexed into the
/// (n−1)-cube.
struct SplitData {
    minus: CubeSet,
    plus: CubeSet,
    minus_bit: bool,
}

fn split_at(a: &CubeSet, j: usize) -> Result<SplitData> {
    let n = a.n();
    if j == 0 || j > n {
        return Err(Error::invalid(format!(
            "split coordinate {j} out of range 1..={n}"
        )));
    }
    let rest = CoordSet::singleton(j).complement(n);
    let jbit = 1u32 << (j - 1);
    let half0 = a.section(rest, 0)?;
    let half1 = a.section(rest, jbit)?;
    // The lighter half is the minus side; ties keep the 0 side.
    if half1.len() < half0.len() {
        Ok(SplitData {
            minus: half1,
            plus: half0,
            minus_bit: true,
        })
    } else {
        Ok(SplitData {
            minus: half0,
            plus: half1,
            minus_bit: false,
        })
    }
}

fn binary_entropy(g: f64) -> f64 {
    if g <= 0.0 || g >= 1.0 {
        0.0
    } else {
        -g * g.log2() - (1.0 - g) * (1.0 - g).log2()
    }
}

fn bookkeeping_from(a: &CubeSet, j: usize, split: &SplitData) -> Result<SplitBookkeeping> {
    let size = a.len();
    let excess = iso_excess(a)?;
    let gamma = split.minus.len() as f64 / size as f64;
    let k_minus = if split.minus.is_empty() {
        0.0
    } else {
        iso_excess(&split.minus)?
    };
    let k_plus = iso_excess(&split.plus)?;
    let crossings = directional_edge_boundary(a, CoordSet::singleton(j));
    let b_j = crossings as f64 / size as f64;
    let h_gamma = binary_entropy(gamma);
    let k_tilde = excess - (h_gamma - 2.0 * gamma) - (b_j - (1.0 - 2.0 * gamma));
    let delta = if k_tilde > 0.0 {
        (gamma * k_minus / k_tilde).clamp(0.0, 1.0)
    } else {
        gamma
    };
    Ok(SplitBookkeeping {
        coord: j,
        minus_bit: split.minus_bit,
        gamma,
        size_minus: split.minus.len(),
        size_plus: split.plus.len(),
        excess,
        k_minus,
        k_plus,
        b_j,
        h_gamma,
        k_tilde,
        delta,
        degenerate: split.minus.is_empty(),
    })
}

/// Computes the split accounting for a nonempty set at coordinate `j`.
pub fn split_bookkeeping(a: &CubeSet, j: usize) -> Result<SplitBookkeeping> {
    if a.is_empty() {
        return Err(Error::domain("splitting the empty set".to_string()));
    }
    let split = split_at(a, j)?;
    bookkeeping_from(a, j, &split)
}

/// Tuning knobs for [`decompose`]. The defaults favor exactness at small
/// dimension and stay safe at large.
#[derive(Clone, Debug)]
pub struct DecomposeConfig {
    /// Excess threshold below which the nearest-subcube base case is tried.
    pub kappa0: f64,
    /// Largest dimension at which the base case searches exhaustively
    /// (hard-capped by [`EXHAUSTIVE_SUBCUBE_DIM`]); greedy beyond.
    pub exh_dim: usize,
    /// A minus half of size up to this fraction of the remaining budget is
    /// dropped instead of recursed into.
    pub drop_frac: f64,
    /// Constant in the reported reference bound `2^(2^(c·(K/ε)²))`.
    pub paper_c: f64,
}

impl Default for DecomposeConfig {
    fn default() -> DecomposeConfig {
        DecomposeConfig {
            kappa0: 0.125,
            exh_dim: 12,
            drop_frac: 0.5,
            paper_c: 1.0,
        }
    }
}

impl DecomposeConfig {
    fn validate(&self) -> Result<()> {
        if self.kappa0.is_nan() || self.kappa0 < 0.0 {
            return Err(Error::invalid(format!(
                "excess threshold {} must be nonnegative",
                self.kappa0
            )));
        }
        if self.exh_dim > EXHAUSTIVE_SUBCUBE_DIM {
            return Err(Error::invalid(format!(
                "exhaustive search dimension {} exceeds the hard cap {EXHAUSTIVE_SUBCUBE_DIM}",
                self.exh_dim
            )));
        }
        if !(0.0..=1.0).contains(&self.drop_frac) {
            return Err(Error::invalid(format!(
                "drop fraction {} outside [0, 1]",
                self.drop_frac
            )));
        }
        if self.paper_c.is_nan() || self.paper_c <= 0.0 {
            return Err(Error::invalid(format!(
                "reference-bound constant {} must be positive",
                self.paper_c
            )));
        }
        Ok(())
    }
}

/// Which rule produced a node of the recursion trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SplitCase {
    /// Empty set: no cubes.
    B1,
    /// Full cube: itself.
    B2,
    /// Low excess: nearest subcube within budget.
    B3,
    /// Lighter half dropped, heavier half recursed.
    S1,
    /// Both halves recursed with a budget split.
    S2,
}

/// One node of the recursion trace. Split fields are present exactly on
/// `S1`/`S2` nodes; `distance` is present on accepted `B3` nodes.
#[derive(Clone, Debug, Serialize)]
pub struct TraceNode {
    pub case: SplitCase,
    /// Ambient dimension at this node.
    pub n: usize,
    /// Members of the set at this node.
    pub size: u64,
    /// Integer vertex budget available at this node.
    pub budget: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coord: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_minus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_plus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_j: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_tilde: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<TraceNode>,
}

impl TraceNode {
    fn leaf(case: SplitCase, n: usize, size: u64, budget: u64) -> TraceNode {
        TraceNode {
            case,
            n,
            size,
            budget,
            coord: None,
            gamma: None,
            k_minus: None,
            k_plus: None,
            b_j: None,
            k_tilde: None,
            distance: None,
            children: Vec::new(),
        }
    }

    fn split(
        case: SplitCase,
        n: usize,
        size: u64,
        budget: u64,
        book: &SplitBookkeeping,
        children: Vec<TraceNode>,
    ) -> TraceNode {
        TraceNode {
            case,
            n,
            size,
            budget,
            coord: Some(book.coord),
            gamma: Some(book.gamma),
            k_minus: Some(book.k_minus),
            k_plus: Some(book.k_plus),
            b_j: Some(book.b_j),
            k_tilde: Some(book.k_tilde),
            distance: None,
            children,
        }
    }

    /// Nodes in the subtree, including this one.
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(TraceNode::node_count).sum::<usize>()
    }
}

/// A disjoint-cube approximation of a set.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionResult {
    /// Ambient dimension.
    pub n: usize,
    /// Pairwise-disjoint subcubes whose union approximates the input.
    pub cubes: Vec<SubCube>,
    /// `|A △ ∪C|`, exact.
    pub sym_diff: u64,
    /// `sym_diff / |A|` (zero for the empty input).
    pub eps_achieved: f64,
    /// The reference bound `2^(2^(c·(K/ε)²))` on the cube count;
    /// infinite values serialize as JSON null.
    #[serde(rename = "paper_bound_L")]
    pub paper_bound_l: f64,
    /// The recursion tree.
    pub trace: TraceNode,
}

fn recurse(
    a: &CubeSet,
    budget: u64,
    cfg: &DecomposeConfig,
) -> Result<(Vec<SubCube>, u64, TraceNode)> {
    let n = a.n();
    let size = a.len();
    if a.is_empty() {
        return Ok((Vec::new(), 0, TraceNode::leaf(SplitCase::B1, n, size, budget)));
    }
    if a.is_full() {
        return Ok((
            vec![SubCube::whole(n)],
            0,
            TraceNode::leaf(SplitCase::B2, n, size, budget),
        ));
    }
    // A set that already is a cube beats any approximation of itself;
    // recognizing it here is O(|A|) instead of a subcube search.
    if let Some(cube) = a.as_subcube() {
        let mut node = TraceNode::leaf(SplitCase::B3, n, size, budget);
        node.distance = Some(0);
        return Ok((vec![cube], 0, node));
    }
    let excess = iso_excess(a)?;
    if excess <= cfg.kappa0 {
        let best = if n <= cfg.exh_dim {
            best_subcube_exhaustive(a)?
        } else {
            best_subcube_greedy(a)?
        };
        if best.distance <= budget {
            let mut node = TraceNode::leaf(SplitCase::B3, n, size, budget);
            node.distance = Some(best.distance);
            return Ok((vec![best.cube], best.distance, node));
        }
    }

    let j = max_influence_coordinate(a)?.coord;
    let split = split_at(a, j)?;
    let book = bookkeeping_from(a, j, &split)?;
    let plus_bit = !split.minus_bit;

    if (split.minus.len() as f64) <= cfg.drop_frac * budget as f64 {
        // Drop the light half; its vertices are spent from the budget.
        let child_budget = budget - split.minus.len();
        let (plus_cubes, plus_used, plus_node) = recurse(&split.plus, child_budget, cfg)?;
        let cubes: Vec<SubCube> = plus_cubes
            .iter()
            .map(|c| c.lift_through(j, plus_bit))
            .collect();
        let used = split.minus.len() + plus_used;
        let node = TraceNode::split(SplitCase::S1, n, size, budget, &book, vec![plus_node]);
        return Ok((cubes, used, node));
    }

    let minus_budget = (book.delta * budget as f64).floor() as u64;
    let minus_budget = minus_budget.min(budget);
    let plus_budget = budget - minus_budget;
    let (minus_cubes, minus_used, minus_node) = recurse(&split.minus, minus_budget, cfg)?;
    let (plus_cubes, plus_used, plus_node) = recurse(&split.plus, plus_budget, cfg)?;
    let minus_lifted: Vec<SubCube> = minus_cubes
        .iter()
        .map(|c| c.lift_through(j, split.minus_bit))
        .collect();
    let plus_lifted: Vec<SubCube> = plus_cubes
        .iter()
        .map(|c| c.lift_through(j, plus_bit))
        .collect();
    // Emit the side with coordinate value 0 first, in cubes and in trace.
    let (cubes, children) = if split.minus_bit {
        (
            [plus_lifted, minus_lifted].concat(),
            vec![plus_node, minus_node],
        )
    } else {
        (
            [minus_lifted, plus_lifted].concat(),
            vec![minus_node, plus_node],
        )
    };
    let node = TraceNode::split(SplitCase::S2, n, size, budget, &book, children);
    Ok((cubes, minus_used + plus_used, node))
}

/// Approximates `a` by pairwise-disjoint subcubes with
/// `|A △ ∪C| ≤ ε|A|`, guaranteed by integer budget arithmetic.
pub fn decompose(a: &CubeSet, eps: f64, cfg: &DecomposeConfig) -> Result<DecompositionResult> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::invalid(format!(
            "approximation budget {eps} outside (0, 1]"
        )));
    }
    cfg.validate()?;
    let size = a.len();
    // A hair of slack so a budget intended to be integral is not lost to
    // the floor by one ulp of the product.
    let budget = (eps * size as f64 + 1e-9).floor() as u64;
    let (cubes, used, trace) = recurse(a, budget, cfg)?;
    let excess = if a.is_empty() || a.is_full() {
        0.0
    } else {
        iso_excess(a)?
    };
    let ratio = excess / eps;
    let paper_bound_l = (cfg.paper_c * ratio * ratio).exp2().exp2();
    Ok(DecompositionResult {
        n: a.n(),
        cubes,
        sym_diff: used,
        eps_achieved: if size == 0 { 0.0 } else { used as f64 / size as f64 },
        paper_bound_l,
        trace,
    })
}

/// Why an independent re-check of a decomposition rejected it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum VerifyFailure {
    /// A cube lives in a different dimension than the set.
    DimensionMismatch { cube: usize, n: usize },
    /// Two cubes share a vertex.
    Overlap { first: usize, second: usize },
    /// The recorded symmetric difference is not the recomputed one.
    SymDiffMismatch { stored: u64, recomputed: u64 },
    /// The recomputed symmetric difference exceeds `ε|A|`.
    BudgetExceeded { sym_diff: u64, allowed: f64 },
}

impl std::fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerifyFailure::DimensionMismatch { cube, n } => {
                write!(f, "cube {cube} is not in dimension {n}")
            }
            VerifyFailure::Overlap { first, second } => {
                write!(f, "cubes {first} and {second} overlap")
            }
            VerifyFailure::SymDiffMismatch { stored, recomputed } => {
                write!(
                    f,
                    "stored symmetric difference {stored} but recomputed {recomputed}"
                )
            }
            VerifyFailure::BudgetExceeded { sym_diff, allowed } => {
                write!(f, "symmetric difference {sym_diff} exceeds budget {allowed}")
            }
        }
    }
}

/// Re-checks a decomposition from scratch: cube dimensions, pairwise
/// disjointness, the recorded symmetric difference, and the `ε|A|` budget.
/// Shares no state with [`decompose`];
/// the union and its distance to `a` are rebuilt independently.
pub fn verify_decomposition(
    a: &CubeSet,
    result: &DecompositionResult,
    eps: f64,
) -> std::result::Result<(), VerifyFailure> {
    let n = a.n();
    for (k, cube) in result.cubes.iter().enumerate() {
        if cube.n() != n {
            return Err(VerifyFailure::DimensionMismatch { cube: k, n });
        }
    }
    for (i, c1) in result.cubes.iter().enumerate() {
        for (jj, c2) in result.cubes.iter().enumerate().skip(i + 1) {
            if !c1.is_disjoint(c2) {
                return Err(VerifyFailure::Overlap {
                    first: i,
                    second: jj,
                });
            }
        }
    }
    let mut union = CubeSet::empty(n).expect("dimension of an existing set");
    for cube in &result.cubes {
        for v in cube.members().iter() {
            union.set_bit(v);
        }
    }
    let recomputed = a
        .sym_diff_count(&union)
        .expect("dimensions already checked");
    if recomputed != result.sym_diff {
        return Err(VerifyFailure::SymDiffMismatch {
            stored: result.sym_diff,
            recomputed,
        });
    }
    let allowed = eps * a.len() as f64;
    if recomputed as f64 > allowed + crate::SLACK {
        return Err(VerifyFailure::BudgetExceeded {
            sym_diff: recomputed,
            allowed,
        });
    }
    Ok(())
}
