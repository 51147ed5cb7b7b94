//! Induced modules of the Hecke algebra from a sign character on one parabolic
//! subgroup and the trivial character on a commuting one.

mod maps;
mod module;

pub use maps::{images_of_basis, map_i, map_j, map_q, map_z, q_normalizer, relative_longest, relative_reps, zj_scalar};
pub use module::{InducedModule, ModuleDescriptor, ModuleElement, ModuleElementJson};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModError {
    #[error("size mismatch: S_{0} vs S_{1}")]
    SizeMismatch(usize, usize),
    #[error("the sign and trivial parabolic subgroups do not commute")]
    NotCommuting,
    #[error("{0} does not index a basis vector of this module")]
    NotABasisLabel(String),
    #[error("elements belong to different modules")]
    ModuleMismatch,
    #[error("generator index {index} out of range for S_{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("parabolic subgroups are not nested as the map requires")]
    SubgroupCondition,
    #[error(transparent)]
    Perm(#[from] symgrp::SymError),
}
