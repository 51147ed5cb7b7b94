//! Type A Coxeter combinatorics on permutations in one-line notation.

mod error;
mod parabolic;
mod perm;

pub use error::SymError;
pub use parabolic::{
    factor_through_wall, in_lambda, lemma10_completion, longest_element, shortest_coset_reps,
    shortest_right_coset_reps, ParabolicSubgroup,
};
pub use perm::{all_permutations, Permutation};
