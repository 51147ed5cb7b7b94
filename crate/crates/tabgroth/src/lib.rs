//! Hook tableaux indexing the simple objects of the categories attached to a
//! composition, and the Grothendieck-group model: class vectors in the four
//! distinguished bases, translation matrices, `E'`/`F`, and Hom dimensions.

pub mod checks;
mod homdim;
mod kgroup;
mod tableau;

pub use homdim::{hom_dim, hom_dim_by_form};
pub use kgroup::{
    class_vector, kgroup_e, kgroup_f, onto_wall_by_cosets, onto_wall_by_tableaux, onto_wall_by_webs,
    out_of_wall_by_tableaux, out_of_wall_by_webs, out_of_wall_images, standard_label, translate_onto_wall,
    translate_out_of_wall, translate_projective, translate_simple, translation_matrix, wall_element,
    web_in_proper_classes, ClassKind, Direction, KBasis, KGroupVector, KMatrix,
};
pub use checks::theorem1_check;
pub use tableau::{
    all_tableaux, enumerate_lambda, hook_parabolics, in_lambda_by_cosets, in_lambda_by_tableau, perm_from_bits,
    perm_from_tableau, stabilizer, tableau_from_perm, HookTableau,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TabError {
    #[error("{w} is not a shortest representative for S_n / S_a with a = {comp}")]
    NotShortestRep { w: String, comp: String },
    #[error("{w} does not index a class of weight {k} for {comp}")]
    NotInLambda { w: String, comp: String, k: usize },
    #[error("invalid tableau: {0}")]
    BadTableau(String),
    #[error("weight {k} out of range 0..={n}")]
    WeightOutOfRange { k: usize, n: usize },
    #[error("position {pos} is not a wall for {len} parts")]
    BadPosition { pos: usize, len: usize },
    #[error("unknown basis kind {0:?}")]
    BadKind(String),
    #[error("{0}")]
    BadParameters(String),
    #[error("tableau and web translation matrices differ for {comp} at {pos}, weight {k}")]
    Theorem1Mismatch { comp: String, pos: usize, k: usize },
    #[error(transparent)]
    Rep(#[from] uqrep::RepError),
    #[error(transparent)]
    Web(#[from] webcat::WebError),
    #[error(transparent)]
    Sym(#[from] symgrp::SymError),
}
