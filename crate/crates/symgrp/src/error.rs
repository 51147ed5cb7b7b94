#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("permutations act on different sets: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a permutation of 1..n: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("simple reflection index {index} out of range for S_{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{0} is not a shortest coset representative")]
    NotShortestRep(String),
    #[error("parabolic subgroup is not contained in the larger one")]
    NotASubgroup,
    #[error("no unique completion exists for the given data")]
    NoCompletion,
    #[error("cannot parse permutation: {0}")]
    Parse(String),
}
