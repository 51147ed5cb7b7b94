use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use qarith::{LinComb, Matrix, RationalFunction};

use crate::comp::{Bits, Composition};
use crate::vector::{eta_leq, eta_position, standard_norm, TensorVector};
use crate::RepError;

type Cache = Mutex<HashMap<(Composition, Bits), LinComb<Bits>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_len(comp: &Composition, eta: &Bits) -> Result<(), RepError> {
    if eta.len() != comp.len() {
        return Err(RepError::LengthMismatch { bits: eta.len(), factors: comp.len() });
    }
    Ok(())
}

/// Rewrites `x` in the canonical basis by peeling off the longest standard term first.
pub fn to_canonical_coordinates(x: &TensorVector) -> Result<LinComb<Bits>, RepError> {
    let comp = x.comp().clone();
    let mut rest = x.clone();
    let mut out = LinComb::zero();
    while let Some(top) = rest
        .support()
        .keys()
        .max_by_key(|e| (eta_position(e).length(), (*e).clone()))
        .cloned()
    {
        let c = rest.coeff(&top);
        rest = rest.sub(&canonical_basis(&comp, &top)?.scale(&c))?;
        out.add_term(top, &c);
    }
    Ok(out)
}

/// The unique bar-invariant `v⋄_η ∈ v_η + Σ_{γ < η} qZ[q] v_γ`.
pub fn canonical_basis(comp: &Composition, eta: &Bits) -> Result<TensorVector, RepError> {
    check_len(comp, eta)?;
    let key = (comp.clone(), eta.clone());
    if let Some(hit) = cache().lock().expect("canonical cache").get(&key) {
        return TensorVector::from_lincomb(comp, hit.clone());
    }
    let v = TensorVector::standard(comp, eta)?;
    let defect = v.bar().sub(&v)?;
    for g in defect.support().keys() {
        assert!(g != eta && eta_leq(g, eta), "bar is not unitriangular at {g} < {eta}");
    }
    let coords = to_canonical_coordinates(&defect)?;
    let mut out = v;
    for (g, s) in coords.iter() {
        let poly = s.as_laurent().expect("bar defect has Laurent coefficients");
        let (neg, constant, pos) = poly.split_at_zero();
        assert!(
            constant == 0.into() && neg == pos.bar().scale(&(-1).into()),
            "bar defect is not antisymmetric at {g}"
        );
        out = out.add(&canonical_basis(comp, g)?.scale(&RationalFunction::from(pos)))?;
    }
    debug_assert_eq!(out.bar(), out);
    cache().lock().expect("canonical cache").insert(key, out.support().clone());
    Ok(out)
}

/// `v_η / (v_η, v_η)`, the dual of the orthogonal standard basis.
pub fn dual_standard(comp: &Composition, eta: &Bits) -> Result<TensorVector, RepError> {
    let v = TensorVector::standard(comp, eta)?;
    Ok(v.scale(&standard_norm(comp, eta).inv().expect("norms are nonzero")))
}

/// Gram matrix of the canonical basis on the weight space with `zeros` zeros,
/// rows and columns indexed in lexicographic order of the sequences.
pub fn canonical_gram(comp: &Composition, zeros: usize) -> Result<(Vec<Bits>, Matrix), RepError> {
    let etas = comp.etas_with_zeros(zeros);
    let canon: Vec<TensorVector> = etas.iter().map(|e| canonical_basis(comp, e)).collect::<Result<_, _>>()?;
    let mut g = Matrix::zeros(etas.len(), etas.len());
    for (i, x) in canon.iter().enumerate() {
        for (j, y) in canon.iter().enumerate().skip(i) {
            let f = x.form(y)?;
            g.set(j, i, f.clone());
            g.set(i, j, f);
        }
    }
    Ok((etas, g))
}

/// The element `v♥_η` with `(v⋄_γ, v♥_η) = δ_{γη}`.
pub fn dual_canonical(comp: &Composition, eta: &Bits) -> Result<TensorVector, RepError> {
    check_len(comp, eta)?;
    let (etas, g) = canonical_gram(comp, eta.zeros())?;
    let inv = g.inverse().expect("the form is nondegenerate on each weight space");
    let col = etas.iter().position(|e| e == eta).expect("eta lies in its weight space");
    let mut out = TensorVector::zero(comp);
    for (row, gamma) in etas.iter().enumerate() {
        let c = inv.get(row, col);
        if !c.is_zero() {
            out = out.add(&canonical_basis(comp, gamma)?.scale(c))?;
        }
    }
    Ok(out)
}
