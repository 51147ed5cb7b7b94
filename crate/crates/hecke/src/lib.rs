//! The Hecke algebra of `S_n` in the normalization `H_i^2 = (q^-1 - q) H_i + 1`,
//! its bar involution, standard form and Kazhdan-Lusztig basis.

mod element;
mod kl;

pub use element::{bar_standard, quadratic_coeff, render_term, HeckeElement, HeckeElementJson};
pub use kl::{
    correct_to_canonical, kl_basis_element, kl_generator, kl_polynomial, to_kl_coordinates, LengthKey,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("elements live in different Hecke algebras: H_{0} vs H_{1}")]
    SizeMismatch(usize, usize),
    #[error("generator index {index} out of range for H_{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error(transparent)]
    Perm(#[from] symgrp::SymError),
}
