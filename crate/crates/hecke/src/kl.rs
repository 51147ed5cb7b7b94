use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use qarith::{LaurentPoly, LinComb, RationalFunction};
use symgrp::Permutation;

use crate::element::HeckeElement;
use crate::HeckeError;

fn kl_cache() -> &'static Mutex<HashMap<Permutation, HeckeElement>> {
    static CACHE: OnceLock<Mutex<HashMap<Permutation, HeckeElement>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `H_i + q`, the canonical basis element of a simple reflection.
pub fn kl_generator(n: usize, i: usize) -> Result<HeckeElement, HeckeError> {
    let s = Permutation::simple(n, i)?;
    HeckeElement::standard(&s).add(&HeckeElement::identity(n).scale(&RationalFunction::q()))
}

/// Subtracts integer multiples of lower canonical elements until every coefficient
/// below the leading term lies in `qZ[q]`. `top` is the leading permutation.
pub fn correct_to_canonical<K, F>(mut x: LinComb<K>, top: &K, mut lower: F) -> LinComb<K>
where
    K: Ord + Clone,
    F: FnMut(&K) -> LinComb<K>,
    K: LengthKey,
{
    loop {
        let offender = x
            .iter()
            .filter(|(k, _)| *k != top)
            .filter(|(_, c)| !c.as_laurent().expect("canonical expansions are Laurent").in_q_zq())
            .max_by_key(|(k, _)| k.length_key())
            .map(|(k, c)| (k.clone(), c.clone()));
        let Some((k, c)) = offender else { return x };
        let poly = c.as_laurent().expect("Laurent").clone();
        let (neg, _, _) = poly.split_at_zero();
        assert!(neg.is_zero(), "negative powers survive below the top term");
        let constant = RationalFunction::from(LaurentPoly::constant(poly.constant_term()));
        x.add_scaled(&lower(&k), &(-constant));
    }
}

/// Ordering key used to process lower terms from the top down.
pub trait LengthKey {
    fn length_key(&self) -> (usize, Vec<usize>);
}

impl LengthKey for Permutation {
    fn length_key(&self) -> (usize, Vec<usize>) {
        (self.length(), self.one_line())
    }
}

/// The Kazhdan-Lusztig basis element `H_w + sum_{y < w} P_{y,w} H_y`, with
/// `P_{y,w}` in `qZ[q]`, built by multiplying by `H_i + q` along the last
/// right descent and correcting.
pub fn kl_basis_element(w: &Permutation) -> HeckeElement {
    if let Some(hit) = kl_cache().lock().expect("cache lock").get(w) {
        return hit.clone();
    }
    let n = w.n();
    let result = match w.right_descents().last() {
        None => HeckeElement::identity(n),
        Some(&i) => {
            let shorter = w.mul_simple(i).expect("descent");
            let prod = kl_basis_element(&shorter)
                .mul(&kl_generator(n, i).expect("descent index valid"))
                .expect("same n");
            let corrected =
                correct_to_canonical(prod.support().clone(), w, |y| kl_basis_element(y).support().clone());
            HeckeElement::from_lincomb(n, corrected).expect("same n")
        }
    };
    kl_cache().lock().expect("cache lock").insert(w.clone(), result.clone());
    result
}

/// The polynomial `P_{y,w}`: coefficient of `H_y` in the canonical element of `w`.
pub fn kl_polynomial(y: &Permutation, w: &Permutation) -> LaurentPoly {
    kl_basis_element(w).coeff(y).as_laurent().cloned().expect("canonical coefficients are Laurent")
}

/// Coordinates of `x` in the canonical basis.
pub fn to_kl_coordinates(x: &HeckeElement) -> LinComb<Permutation> {
    let mut rest = x.clone();
    let mut coords = LinComb::zero();
    while let Some((w, c)) =
        rest.support().iter().max_by_key(|(w, _)| w.length_key()).map(|(w, c)| (w.clone(), c.clone()))
    {
        coords.add_term(w.clone(), &c);
        rest = rest.sub(&kl_basis_element(&w).scale(&c)).expect("same n");
    }
    coords
}
