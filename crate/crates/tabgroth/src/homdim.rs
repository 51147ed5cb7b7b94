use qarith::{BigInt, RationalFunction};
use symgrp::Permutation;
use uqrep::{canonical_basis, Composition, TensorVector};
use webcat::{canonical_basis_diagram, matrix_coefficient, LabeledWebDiagram};

use crate::kgroup::{standard_label, KBasis};
use crate::TabError;

fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// `dim Hom(Q(w), Q(z))` in the weight space `k` of `V^{⊗n}`: `k!` times the number
/// of `x ∈ Λ_k` over which both canonical diagrams of `w` and `z` evaluate to
/// something nonzero.
pub fn hom_dim(w: &Permutation, z: &Permutation, n: usize, k: usize) -> Result<BigInt, TabError> {
    let comp = Composition::regular(n);
    let diagrams = [w, z]
        .into_iter()
        .map(|p| Ok(canonical_basis_diagram(&comp, &standard_label(p, &comp, k)?)?))
        .collect::<Result<Vec<LabeledWebDiagram>, TabError>>()?;
    let basis = KBasis::new(&comp, k);
    let mut count = 0usize;
    for x in &basis.bits {
        let mut both = true;
        for d in &diagrams {
            let top = LabeledWebDiagram { top: Some(x.clone()), ..d.clone() };
            both &= !matrix_coefficient(&top)?.is_zero();
        }
        count += usize::from(both);
    }
    Ok(factorial(k) * BigInt::from(count))
}

/// The same dimension from the bilinear form at `q = 1`:
/// `(1/k!) Σ_x (v⋄_(w), v_(x)) (v⋄_(z), v_(x))`.
pub fn hom_dim_by_form(w: &Permutation, z: &Permutation, n: usize, k: usize) -> Result<BigInt, TabError> {
    let comp = Composition::regular(n);
    let cw = canonical_basis(&comp, &standard_label(w, &comp, k)?)?;
    let cz = canonical_basis(&comp, &standard_label(z, &comp, k)?)?;
    let mut total = RationalFunction::zero();
    for x in KBasis::new(&comp, k).bits {
        let vx = TensorVector::standard(&comp, &x)?;
        total += &(&cw.form(&vx)? * &cz.form(&vx)?);
    }
    let (num, den) = total.eval_at_one().ok_or_else(|| TabError::BadParameters("pole at q = 1".into()))?;
    let den = den * factorial(k);
    if &num % &den != BigInt::from(0) {
        return Err(TabError::BadParameters(format!("form value {num}/{den} is not an integer")));
    }
    Ok(num / den)
}
