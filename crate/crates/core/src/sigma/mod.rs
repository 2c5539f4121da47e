//! The sigma-invariant calculus: executable transformations turning the
//! sigma data of `G` into the invariants of `X(G)`, `X(G)/W(G)` and `nu(G)`,
//! the direct-product formulas, and the finite-generation tests they imply.

mod product;
mod reports;
mod result;
mod subgroups;
mod xg_ops;

pub use product::{f2s_pattern_check, product_sigma_complement, SigmaProfile};
pub use reports::{nu_invariants, tensor_square_report, NuInvariants, TensorReport};
pub use result::{Exactness, SigmaResult};
pub use subgroups::{b2_report, fg_subgroup_test, subspace_meets_set, FgReport};
pub use xg_ops::{
    kernel_parts, mod_w_sigma2_pointwise, sigma1_pointwise, xg_mod_w_sigma2_complement,
    xg_sigma1_complement, xg_sigma2_complement, KernelParts,
};
