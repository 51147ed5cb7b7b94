//! Webs built from merge and split vertices, their evaluation as intertwiners
//! between tensor representations, and canonical basis diagrams.

mod eval;
mod relations;
mod web;

pub use eval::{
    apply_web, canonical_basis_diagram, canonical_basis_diagram_right_nested, evaluate_diagram, evaluate_matrix,
    matrix_coefficient, LabeledWebDiagram,
};
pub use relations::{all_relations, check_relation, relation_sides, Relation};
pub use web::{Slice, Web};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WebError {
    #[error("web of type {found} cannot follow one ending in {expected}")]
    TypeMismatch { expected: String, found: String },
    #[error("malformed web word token {0:?}")]
    BadWord(String),
    #[error("{labels} boundary labels for {strands} strands")]
    LabelLength { labels: usize, strands: usize },
    #[error("a matrix coefficient needs a top labeling")]
    MissingTopLabel,
    #[error("invalid relation parameters: {0}")]
    BadParameters(String),
    #[error(transparent)]
    Rep(#[from] uqrep::RepError),
}
