use inducedmod::ModuleElement;
use qarith::{LaurentPoly, LinComb, Matrix, RationalFunction};
use symgrp::ParabolicSubgroup;

use crate::comp::{Bits, Composition};
use crate::vector::{act_on_bits, TensorVector};
use crate::RepError;

/// The Hecke generator `Ȟ_i` acting at positions `i, i+1` of `V^{⊗n}`.
pub fn schur_weyl_h(i: usize, v: &TensorVector) -> Result<TensorVector, RepError> {
    let comp = v.comp();
    if !comp.is_regular() {
        return Err(RepError::NonRegular);
    }
    if i == 0 || i >= comp.len() {
        return Err(RepError::PositionOutOfRange { pos: i, len: comp.len() });
    }
    let quad = RationalFunction::from(LaurentPoly::from_terms([(-1, 1), (1, -1)]));
    let support = v.support().map_linear(|eta| {
        let swapped = eta.with(i, eta.get(i + 1)).with(i + 1, eta.get(i));
        match (eta.get(i), eta.get(i + 1)) {
            (1, 1) => LinComb::term(eta.clone(), -RationalFunction::q()),
            (1, 0) => {
                let mut out = LinComb::basis(swapped);
                out.add_term(eta.clone(), &quad);
                out
            }
            (0, 1) => LinComb::basis(swapped),
            _ => LinComb::term(eta.clone(), RationalFunction::q_pow(-1)),
        }
    });
    TensorVector::from_lincomb(comp, support)
}

/// The matrix of a linear map on `V(a)` in the lexicographic basis of sequences;
/// the images must all live in `target`.
pub fn operator_matrix(
    source: &Composition,
    target: &Composition,
    f: impl Fn(&TensorVector) -> Result<TensorVector, RepError>,
) -> Result<Matrix, RepError> {
    let etas = source.all_etas();
    let mut m = Matrix::zeros(1 << target.len(), etas.len());
    for (col, eta) in etas.iter().enumerate() {
        let img = f(&TensorVector::standard(source, eta)?)?;
        if img.comp() != target {
            return Err(RepError::CompositionMismatch(img.comp().to_string(), target.to_string()));
        }
        for (e, c) in img.support().iter() {
            m.set(e.index(), col, c.clone());
        }
    }
    Ok(m)
}

/// Matrix of `Ȟ_i` on `V^{⊗n}`.
pub fn schur_weyl_matrix(n: usize, i: usize) -> Result<Matrix, RepError> {
    let c = Composition::regular(n);
    operator_matrix(&c, &c, |v| schur_weyl_h(i, v))
}

/// Matrix of `C_i = Ȟ_i + q` on `V^{⊗n}`.
pub fn stl_generator_matrix(n: usize, i: usize) -> Result<Matrix, RepError> {
    let h = schur_weyl_matrix(n, i)?;
    Ok(&h + &Matrix::scalar(1 << n, &RationalFunction::q()))
}

/// `N_w ↦ v_{η_min · w}` from the induced module with trivial part
/// `<s_1..s_{k-1}>` and sign part `<s_{k+1}..s_{n-1}>` onto the weight space of `V^{⊗n}`.
pub fn psi_iso(x: &ModuleElement, k: usize) -> Result<TensorVector, RepError> {
    let m = x.module();
    let n = m.n();
    if k > n {
        return Err(RepError::WrongParabolicShape);
    }
    let triv = ParabolicSubgroup::new(n, 1..k).map_err(|_| RepError::WrongParabolicShape)?;
    let sign = ParabolicSubgroup::new(n, k + 1..n).map_err(|_| RepError::WrongParabolicShape)?;
    if m.triv_part() != &triv || m.sign_part() != &sign {
        return Err(RepError::WrongParabolicShape);
    }
    let eta_min = Bits::zeros_then_ones(k, n - k);
    let support = x.support().iter().map(|(w, c)| (act_on_bits(&eta_min, w), c.clone())).collect();
    TensorVector::from_lincomb(&Composition::regular(n), support)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &str) -> TensorVector {
        TensorVector::standard(&Composition::regular(e.len()), &e.parse().unwrap()).unwrap()
    }

    #[test]
    fn local_rules() {
        assert_eq!(schur_weyl_h(1, &v("01")).unwrap(), v("10"));
        assert_eq!(schur_weyl_h(1, &v("00")).unwrap(), v("00").scale(&RationalFunction::q_pow(-1)));
        assert!(matches!(
            schur_weyl_h(1, &TensorVector::standard(&"2,1".parse().unwrap(), &"01".parse().unwrap()).unwrap()),
            Err(RepError::NonRegular)
        ));
    }

    #[test]
    fn merge_then_split_is_h_plus_q() {
        for e in ["00", "01", "10", "11"] {
            let x = v(e);
            let lhs = x.phi_merge(1).unwrap().phi_split(1, 1).unwrap().sub(&x.scale(&RationalFunction::q())).unwrap();
            assert_eq!(lhs, schur_weyl_h(1, &x).unwrap(), "{e}");
        }
    }
}
