use qarith::{quantum_binom, quantum_factorial, Matrix, RationalFunction};
use serde::{Deserialize, Serialize};
use uqrep::Composition;

use crate::eval::evaluate_matrix;
use crate::web::{Slice, Web};
use crate::WebError;

/// The defining relations of the web category, with their parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum Relation {
    /// Split `a+b` into `(a, b)` then merge back: `binom(a+b, a)` times the identity.
    Digon { a: u32, b: u32 },
    /// Both bracketings of a triple merge (or, with `split`, a triple split) agree.
    Associativity { a: u32, b: u32, c: u32, split: bool },
    /// The square-switch relation on three strands of label 1, placed at strands
    /// `pos..pos+2` of `n` strands.
    SquareSwitch { n: usize, pos: usize },
    /// Splitting `n` into ones and merging back is `[n]!` times the identity.
    FullBundle { n: usize },
}

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).expect("positive labels")
}

fn scalar(dim: usize, c: RationalFunction) -> Matrix {
    Matrix::scalar(dim, &c)
}

/// `C_i = split_i ∘ merge_i` on the all-ones composition of `n`.
fn switch(n: usize, i: usize) -> Result<Web, WebError> {
    Web::from_slices(&Composition::regular(n), vec![Slice::Merge { i }, Slice::Split { i, left: 1 }])
}

fn chain(webs: &[Web]) -> Result<Web, WebError> {
    let mut out = webs[0].clone();
    for w in &webs[1..] {
        out = Web::compose(w, &out)?;
    }
    Ok(out)
}

/// The two sides of a relation as webs or as matrices.
pub fn relation_sides(rel: &Relation) -> Result<(Matrix, Matrix), WebError> {
    match *rel {
        Relation::Digon { a, b } => {
            let w = Web::from_slices(&comp(&[a + b]), vec![Slice::Split { i: 1, left: a }, Slice::Merge { i: 1 }])?;
            let rhs = scalar(2, RationalFunction::from(quantum_binom(a + b, a).expect("a <= a+b")));
            Ok((evaluate_matrix(&w), rhs))
        }
        Relation::Associativity { a, b, c, split } => {
            let src = comp(&[a, b, c]);
            let left_first = Web::from_slices(&src, vec![Slice::Merge { i: 1 }, Slice::Merge { i: 1 }])?;
            let right_first = Web::from_slices(&src, vec![Slice::Merge { i: 2 }, Slice::Merge { i: 1 }])?;
            if !split {
                return Ok((evaluate_matrix(&left_first), evaluate_matrix(&right_first)));
            }
            let top = comp(&[a + b + c]);
            let split_right_first =
                Web::from_slices(&top, vec![Slice::Split { i: 1, left: a + b }, Slice::Split { i: 1, left: a }])?;
            let split_left_first =
                Web::from_slices(&top, vec![Slice::Split { i: 1, left: a }, Slice::Split { i: 2, left: b }])?;
            Ok((evaluate_matrix(&split_right_first), evaluate_matrix(&split_left_first)))
        }
        Relation::SquareSwitch { n, pos } => {
            if pos == 0 || pos + 2 > n {
                return Err(WebError::BadParameters(format!("square switch at {pos} on {n} strands")));
            }
            let (x, y) = (switch(n, pos)?, switch(n, pos + 1)?);
            let lhs = &evaluate_matrix(&chain(&[x.clone(), y.clone(), x.clone()])?) + &evaluate_matrix(&y);
            let rhs = &evaluate_matrix(&chain(&[y.clone(), x.clone(), y])?) + &evaluate_matrix(&x);
            Ok((lhs, rhs))
        }
        Relation::FullBundle { n } => {
            let ones = Composition::regular(n);
            let w = Web::compose(&Web::merger(&ones), &Web::splitter(&ones))?;
            let rhs = scalar(2, RationalFunction::from(quantum_factorial(n as u32)));
            Ok((evaluate_matrix(&w), rhs))
        }
    }
}

/// Evaluates both sides as matrices and compares them exactly.
pub fn check_relation(rel: &Relation) -> Result<bool, WebError> {
    let (l, r) = relation_sides(rel)?;
    Ok(l == r)
}

/// Every instance of every relation with total label at most `max_n`.
pub fn all_relations(max_n: u32) -> Vec<Relation> {
    let mut out = Vec::new();
    for a in 1..max_n {
        for b in 1..=max_n - a {
            out.push(Relation::Digon { a, b });
            for c in 1..=max_n - a - b {
                out.push(Relation::Associativity { a, b, c, split: false });
                out.push(Relation::Associativity { a, b, c, split: true });
            }
        }
    }
    for n in 1..=max_n as usize {
        out.push(Relation::FullBundle { n });
        for pos in 1..n.saturating_sub(1) {
            out.push(Relation::SquareSwitch { n, pos });
        }
    }
    out
}
