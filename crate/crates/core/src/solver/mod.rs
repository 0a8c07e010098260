//! Exact small values of `R(n; r, s)`, constructive lower bounds and the on/off color
//! process that extracts monochromatic cliques.

mod exact;
mod lower;
mod process;

pub use exact::{
    check_turan_certificate, replay_exhaustive, search_coloring, solve_exact, trivial_case,
    SearchStats, SolveConfig, SolveResult, SolveStatus, UpperCertificate, DEFAULT_CONFIRM_NODES,
    DEFAULT_MAX_COLOR_SETS, DEFAULT_REPLAY_LIMIT, MAX_SEARCH_VERTICES,
};
pub use lower::{affine_coloring, prove_lower, LowerStrategy};
pub use process::{extract_clique_process, ProcessEnd, ProcessOutcome, ProcessState, ProcessStep};
