//! Tensor products `V(a_1) ⊗ ... ⊗ V(a_l)` of two-dimensional representations of
//! quantum `gl(1|1)`: the algebra action, merge and split maps, bar involution,
//! bilinear form, canonical and dual bases, and the Hecke action on `V^{⊗n}`.

mod canonical;
mod comp;
mod schur;
mod vector;

pub use canonical::{canonical_basis, canonical_gram, dual_canonical, dual_standard, to_canonical_coordinates};
pub use comp::{Bits, Composition};
pub use schur::{operator_matrix, psi_iso, schur_weyl_h, schur_weyl_matrix, stl_generator_matrix};
pub use vector::{
    act_on_bits, beta_sum, betas, eta_leq, eta_position, eta_sort_key, merge_coeffs, render_term, standard_norm,
    TensorVector, TensorVectorJson,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("invalid composition {0}: parts must be positive")]
    BadComposition(String),
    #[error("position {pos} out of range for {len} tensor factors")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("invalid bit sequence {0}")]
    BadBits(String),
    #[error("bit sequence of length {bits} for {factors} tensor factors")]
    LengthMismatch { bits: usize, factors: usize },
    #[error("vectors live in different spaces {0} and {1}")]
    CompositionMismatch(String, String),
    #[error("vector is not homogeneous of one weight")]
    MixedWeight,
    #[error("operation requires all parts equal to 1")]
    NonRegular,
    #[error("module is not of the shape <s_1..s_(k-1)> trivial, <s_(k+1)..> sign")]
    WrongParabolicShape,
    #[error("factor types {found:?} do not match the requested {expected:?}")]
    TypeMismatch { expected: Vec<u32>, found: Vec<u32> },
}
