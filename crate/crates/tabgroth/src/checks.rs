//! Whole-structure verifications over all labels of a composition.

use qarith::{quantum_factorial0, RationalFunction};
use uqrep::{Composition, TensorVector};

use crate::homdim::{hom_dim, hom_dim_by_form};
use crate::kgroup::{
    class_vector, kgroup_e, kgroup_f, onto_wall_by_cosets, onto_wall_by_tableaux, onto_wall_by_webs,
    out_of_wall_by_tableaux, out_of_wall_by_webs, ClassKind, KBasis, KMatrix,
};
use crate::tableau::enumerate_lambda;
use crate::TabError;

/// Tableau and web translation matrices agree at position `i` for every `k`, in
/// both directions; the coset factorization agrees onto the wall as well.
pub fn theorem1_check(comp: &Composition, i: usize) -> Result<bool, TabError> {
    for k in 0..=comp.n() as usize {
        let onto = onto_wall_by_tableaux(comp, i, k)?;
        if onto != onto_wall_by_webs(comp, i, k)? || onto != onto_wall_by_cosets(comp, i, k)? {
            return Ok(false);
        }
        if out_of_wall_by_tableaux(comp, i, k)? != out_of_wall_by_webs(comp, i, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `F [Q_{k+1}(w)] = [Q_k(w)]` if `w ∈ Λ_k(a)`, and zero otherwise.
pub fn f_on_projectives_holds(comp: &Composition, k: usize) -> Result<bool, TabError> {
    let lower = enumerate_lambda(comp, k);
    for w in enumerate_lambda(comp, k + 1) {
        let image = class_vector(&w, comp, k + 1, ClassKind::Projective)?.into_vector().act_f();
        let expected = if lower.contains(&w) {
            class_vector(&w, comp, k, ClassKind::Projective)?.into_vector()
        } else {
            TensorVector::zero(comp)
        };
        if image != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `E' [S_k(w)] = [S_{k+1}(w)]` if `w ∈ Λ_{k+1}(a)`, and zero otherwise.
pub fn e_on_simples_holds(comp: &Composition, k: usize) -> Result<bool, TabError> {
    let upper = enumerate_lambda(comp, k + 1);
    for w in enumerate_lambda(comp, k) {
        let image = class_vector(&w, comp, k, ClassKind::Simple)?.into_vector().act_e_prime()?;
        let expected = if upper.contains(&w) {
            class_vector(&w, comp, k + 1, ClassKind::Simple)?.into_vector()
        } else {
            TensorVector::zero(comp)
        };
        if image != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[Δ(w)] = [k]₀! [Δ̄(w)]` for every `w ∈ Λ_k` of the all-ones composition.
pub fn standard_is_factorial_multiple(n: usize, k: usize) -> Result<bool, TabError> {
    let comp = Composition::regular(n);
    let c = RationalFunction::from(quantum_factorial0(k as u32));
    for w in enumerate_lambda(&comp, k) {
        let standard = class_vector(&w, &comp, k, ClassKind::Standard)?.into_vector();
        let proper = class_vector(&w, &comp, k, ClassKind::ProperStandard)?.into_vector();
        if standard != proper.scale(&c) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn commutes(a: &KMatrix, b: &KMatrix, c: &KMatrix, d: &KMatrix) -> Result<bool, TabError> {
    Ok(a.after(b)?.matrix == c.after(d)?.matrix)
}

/// `E'` and `F` commute with both translations at position `i`, in every weight space.
pub fn translations_commute_with_e_f(comp: &Composition, i: usize) -> Result<bool, TabError> {
    let merged = comp.merged(i)?;
    let n = comp.n() as usize;
    for k in 0..n {
        let (onto_k, onto_k1) = (onto_wall_by_tableaux(comp, i, k)?, onto_wall_by_tableaux(comp, i, k + 1)?);
        let (out_k, out_k1) = (out_of_wall_by_tableaux(comp, i, k)?, out_of_wall_by_tableaux(comp, i, k + 1)?);
        let (e_a, e_m) = (kgroup_e(comp, k)?, kgroup_e(&merged, k)?);
        let (f_a, f_m) = (kgroup_f(comp, k)?, kgroup_f(&merged, k)?);
        let ok = commutes(&onto_k1, &e_a, &e_m, &onto_k)?
            && commutes(&onto_k, &f_a, &f_m, &onto_k1)?
            && commutes(&out_k1, &e_m, &e_a, &out_k)?
            && commutes(&out_k, &f_m, &f_a, &out_k1)?;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `E'E' = 0` and `FF = 0` between proper standard classes.
pub fn e_f_square_to_zero(comp: &Composition) -> Result<bool, TabError> {
    let n = comp.n() as usize;
    for k in 0..n.saturating_sub(1) {
        if !kgroup_e(comp, k + 1)?.after(&kgroup_e(comp, k)?)?.matrix.is_zero() {
            return Ok(false);
        }
        if !kgroup_f(comp, k)?.after(&kgroup_f(comp, k + 1)?)?.matrix.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Diagram counts agree with the form at `q = 1` for all pairs in `Λ_k`.
pub fn hom_dims_agree(n: usize, k: usize) -> Result<bool, TabError> {
    let basis = KBasis::new(&Composition::regular(n), k);
    for w in &basis.labels {
        for z in &basis.labels {
            if hom_dim(w, z, n, k)? != hom_dim_by_form(w, z, n, k)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
