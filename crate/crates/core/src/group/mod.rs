//! Finitely generated group descriptors, abelianization data, induced maps
//! on character spaces, and the character-space structure of `X(G)`.

mod catalog;
mod descriptor;
mod sigma_data;
mod snf;
mod xg;

pub use catalog::{catalog_entries, catalog_lookup};
pub use descriptor::{induced_char_map, CharMap, Flags, GroupDescriptor, Tri};
pub use sigma_data::{Coefficient, SigmaData};
pub use snf::{
    abelianize, im_identity, im_mul, smith_normal_form, word_exponent_vec, AbelianData, IntMat,
};
pub use xg::{xg_space, XGSpace};
