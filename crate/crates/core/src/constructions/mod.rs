//! Explicit colorings with no monochromatic clique.

mod affine;
mod product;
mod stepup;

pub use affine::{
    affine_partition_family, find_affine_params, gaussian_binomial, k_subspaces,
    partitions_to_coloring, AffineParams,
};
pub use product::product_coloring;
pub use stepup::{
    classify_3_to_4, classify_k_step, default_abc, default_d1_d2, delta, delta_sequence,
    step_up_3_to_4, step_up_graph_to_3, step_up_k, step_up_trace, StepUpCase, StepUpLimits,
    StepUpScheme, StepUpTrace,
};
