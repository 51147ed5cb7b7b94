//! Structural maps between induced modules that differ in one of the two parabolic parts.

use hecke::HeckeElement;
use qarith::{LinComb, RationalFunction};
use symgrp::{longest_element, ParabolicSubgroup, Permutation};

use crate::module::{InducedModule, ModuleElement};
use crate::ModError;

/// Elements of `W_big` that are shortest in their `W_small`-coset, i.e. `W^{small} ∩ W_big`.
pub fn relative_reps(small: &ParabolicSubgroup, big: &ParabolicSubgroup) -> Vec<Permutation> {
    big.elements().into_iter().filter(|x| small.is_shortest_left_rep(x)).collect()
}

/// Longest element of `W^{small} ∩ W_big`.
pub fn relative_longest(small: &ParabolicSubgroup, big: &ParabolicSubgroup) -> Permutation {
    longest_element(small).compose(&longest_element(big)).expect("same n")
}

fn check_same_sign(src: &InducedModule, dst: &InducedModule) -> Result<(), ModError> {
    if src.n() != dst.n() {
        return Err(ModError::SizeMismatch(src.n(), dst.n()));
    }
    if src.sign_part() != dst.sign_part() {
        return Err(ModError::SubgroupCondition);
    }
    Ok(())
}

fn check_same_triv(src: &InducedModule, dst: &InducedModule) -> Result<(), ModError> {
    if src.n() != dst.n() {
        return Err(ModError::SizeMismatch(src.n(), dst.n()));
    }
    if src.triv_part() != dst.triv_part() {
        return Err(ModError::SubgroupCondition);
    }
    Ok(())
}

fn check_input(src: &InducedModule, x: &ModuleElement) -> Result<(), ModError> {
    if x.module() != src {
        return Err(ModError::ModuleMismatch);
    }
    Ok(())
}

/// Inclusion `M^p_q -> M^p_{q'}` for `W_{q'} ⊆ W_q`:
/// `N_w ↦ sum_{x ∈ W^{q'} ∩ W_q} q^{l(w^{q'}_q) - l(x)} N_{xw}`.
pub fn map_i(src: &InducedModule, dst: &InducedModule, x: &ModuleElement) -> Result<ModuleElement, ModError> {
    check_same_sign(src, dst)?;
    check_input(src, x)?;
    let (big, small) = (src.triv_part(), dst.triv_part());
    if !small.is_subgroup_of(big) {
        return Err(ModError::SubgroupCondition);
    }
    let reps = relative_reps(small, big);
    let top = relative_longest(small, big).length() as i64;
    let support = x.support().map_linear(|w| {
        reps.iter()
            .map(|y| {
                let yw = y.compose(w).expect("same n");
                debug_assert!(dst.is_basis_label(&yw));
                (yw, RationalFunction::q_pow(top - y.length() as i64))
            })
            .collect()
    });
    dst.element_from(support)
}

/// `sum_{x ∈ W^{q'} ∩ W_q} q^{l(w^{q'}_q) - 2 l(x)}`.
pub fn q_normalizer(small: &ParabolicSubgroup, big: &ParabolicSubgroup) -> RationalFunction {
    let top = relative_longest(small, big).length() as i64;
    relative_reps(small, big)
        .iter()
        .map(|x| RationalFunction::q_pow(top - 2 * x.length() as i64))
        .sum()
}

/// `N_w ↦ N_e H_w` computed in `dst`: the equivariant map determined by `N_e ↦ N_e`.
fn quotient(src: &InducedModule, dst: &InducedModule, x: &ModuleElement) -> ModuleElement {
    let support = x
        .support()
        .map_linear(|w| dst.apply_hecke_to_identity(&HeckeElement::standard(w)));
    debug_assert!(src.n() == dst.n());
    dst.element_from(support).expect("quotient lands in the basis")
}

/// Left inverse of `map_i`, `M^p_{q'} -> M^p_q`, determined by `N_e ↦ N_e / c`.
pub fn map_q(src: &InducedModule, dst: &InducedModule, x: &ModuleElement) -> Result<ModuleElement, ModError> {
    check_same_sign(src, dst)?;
    check_input(src, x)?;
    let (small, big) = (src.triv_part(), dst.triv_part());
    if !small.is_subgroup_of(big) {
        return Err(ModError::SubgroupCondition);
    }
    let c = q_normalizer(small, big);
    Ok(quotient(src, dst, x).scale(&c.inv().expect("normalizer is nonzero")))
}

/// Inclusion `M^p_q -> M^{p'}_q` for `W_{p'} ⊆ W_p`:
/// `N_w ↦ sum_{x ∈ W^{p'} ∩ W_p} (-q)^{l(x)} N_{xw}`.
pub fn map_j(src: &InducedModule, dst: &InducedModule, x: &ModuleElement) -> Result<ModuleElement, ModError> {
    check_same_triv(src, dst)?;
    check_input(src, x)?;
    let (big, small) = (src.sign_part(), dst.sign_part());
    if !small.is_subgroup_of(big) {
        return Err(ModError::SubgroupCondition);
    }
    let reps = relative_reps(small, big);
    let support = x.support().map_linear(|w| {
        reps.iter()
            .map(|y| {
                let mag = RationalFunction::q_pow(y.length() as i64);
                let c = if y.length() % 2 == 0 { mag } else { -mag };
                (y.compose(w).expect("same n"), c)
            })
            .collect()
    });
    dst.element_from(support)
}

/// Quotient `M^{p'}_q -> M^p_q` for `W_{p'} ⊆ W_p`, determined by `N_e ↦ N_e`.
pub fn map_z(src: &InducedModule, dst: &InducedModule, x: &ModuleElement) -> Result<ModuleElement, ModError> {
    check_same_triv(src, dst)?;
    check_input(src, x)?;
    if !src.sign_part().is_subgroup_of(dst.sign_part()) {
        return Err(ModError::SubgroupCondition);
    }
    Ok(quotient(src, dst, x))
}

/// `sum_{x ∈ W^{p'} ∩ W_p} q^{2 l(x)}`, the scalar by which `z ∘ j` acts.
pub fn zj_scalar(small: &ParabolicSubgroup, big: &ParabolicSubgroup) -> RationalFunction {
    relative_reps(small, big).iter().map(|x| RationalFunction::q_pow(2 * x.length() as i64)).sum()
}

/// Applies a module map to every basis vector, returning the images in basis order.
pub fn images_of_basis(
    src: &InducedModule,
    f: impl Fn(&ModuleElement) -> Result<ModuleElement, ModError>,
) -> Result<Vec<LinComb<Permutation>>, ModError> {
    src.basis_index()
        .iter()
        .map(|w| Ok(f(&src.standard(w)?)?.support().clone()))
        .collect()
}
