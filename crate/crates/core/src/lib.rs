//! Edge isoperimetry on the Boolean hypercube.
//!
//! This crate measures how far subsets of the n-dimensional hypercube are
//! from the isoperimetric optimum and exploits that measurement. The pieces:
//!
//! * [`CubeSet`] — packed-bitmap vertex sets with exact counting, sections,
//!   and a JSON file format ([`read_set_file`], [`write_set_file`]).
//! * [`edge_boundary`], [`iso_report`] — boundary edges and the per-member
//!   excess over Harper's bound `|A| log2(2^n/|A|)`.
//! * [`influence_profile`], [`talagrand_ratio`] — coordinate influences and
//!   the total-influence/variance comparison.
//! * [`section_table`], [`mutual_information`], [`sectional_control`],
//!   [`shearer_check`], [`product_structure`] — entropies of the sections of
//!   a set along coordinate subsets and the inequalities they obey.
//! * [`spherical_average`], [`polyanskiy_check`],
//!   [`sparse_section_expectation`] — the distance-ℓ averaging operator, its
//!   hypercontractive norm bound, and sparse-section counting.
//! * [`split_bookkeeping`], [`decompose`] — the coordinate-split identity
//!   for the excess and the recursive approximation of any set by a small
//!   disjoint union of subcubes.
//! * [`run_suite`] — seeded verification suites over exhaustive small cases
//!   or random generated families, rendered as JSON or CSV.
//!
//! Everything is single-threaded and deterministic: integer counts are
//! exact, floating point enters only through `log2` and division, and all
//! randomness is ChaCha-seeded. Dimensions are capped at [`MAX_DIM`].

mod cubeset;
mod decomposition;
mod error;
mod generator;
mod hypercontractivity;
mod isoperimetry;
mod sections;
mod suite;

pub use cubeset::{
    harper_segment, read_set_file, set_from_json, set_to_json, write_set_file, CoordSet,
    CubeSet, GeneratorSpec, Members, SubCube, Vertex,
};
pub use decomposition::{
    decompose, max_influence_coordinate, split_bookkeeping, verify_decomposition,
    DecomposeConfig, DecompositionResult, MaxInfluence, SplitBookkeeping, SplitCase, TraceNode,
    VerifyFailure,
};
pub use error::{Error, Result};
pub use generator::{generate, Generated};
pub use hypercontractivity::{
    fn_from_json, fn_to_json, inner_product, lp_norm, polyanskiy_check, read_fn_file,
    sparse_section_expectation, sparse_section_operator_form, spherical_average, write_fn_file,
    PolyanskiyReport, PseudoBooleanFn, SampleMode, SparseSectionReport,
};
pub use isoperimetry::{
    best_subcube, best_subcube_exhaustive, best_subcube_greedy, directional_edge_boundary,
    edge_boundary, ellis_check, influence_profile, iso_excess, iso_report, min_boundary_oracle,
    min_boundary_table, stability_bound, talagrand_ratio, BestSubcube, EllisReport,
    InfluenceProfile, IsoReport, TalagrandReport, DEFAULT_EPS0, EXHAUSTIVE_SUBCUBE_DIM,
};
pub use sections::{
    entropy, marginal_entropy, mutual_information, product_structure, section_table,
    sectional_control, shearer_check, ProductStructureReport, SectionEntry, SectionTable,
    SectionalControl, ShearerReport,
};
pub use suite::{
    emit_report, render_report, run_suite, Mode, ReportFormat, SuiteName, SuiteParams,
    SuiteReport, TrialRow, Witness, EXHAUSTIVE_SUITE_DIM,
};

/// Largest supported cube dimension. At 24 a set is a 2 MiB bitmap and
/// every count in the crate fits comfortably in a `u64` / exact `f64`.
pub const MAX_DIM: usize = 24;

/// Additive slack used when checking inequalities that hold exactly in
/// real arithmetic but are evaluated in floating point.
pub const SLACK: f64 = 1e-9;

/// Tolerance for quantities that are algebraically equal and computed two
/// ways; they differ only by floating-point rounding.
pub const EXACT_TOL: f64 = 1e-12;
