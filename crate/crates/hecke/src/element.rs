use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use qarith::{LaurentPoly, LinComb, RationalFunction};
use serde::{Deserialize, Serialize};
use symgrp::Permutation;

use crate::HeckeError;

/// An element of the Hecke algebra `H_n`, expanded in the standard basis `H_w`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HeckeElement {
    n: usize,
    support: LinComb<Permutation>,
}

/// `q^-1 - q`, the coefficient in the quadratic relation.
pub fn quadratic_coeff() -> RationalFunction {
    RationalFunction::from(LaurentPoly::from_terms([(-1, 1), (1, -1)]))
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self { n, support: LinComb::zero() }
    }

    /// The standard basis element `H_w`.
    pub fn standard(w: &Permutation) -> Self {
        Self { n: w.n(), support: LinComb::basis(w.clone()) }
    }

    pub fn identity(n: usize) -> Self {
        Self::standard(&Permutation::identity(n))
    }

    pub fn from_lincomb(n: usize, support: LinComb<Permutation>) -> Result<Self, HeckeError> {
        if let Some(w) = support.keys().find(|w| w.n() != n) {
            return Err(HeckeError::SizeMismatch(w.n(), n));
        }
        Ok(Self { n, support })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &LinComb<Permutation> {
        &self.support
    }

    pub fn coeff(&self, w: &Permutation) -> RationalFunction {
        self.support.coeff(w)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), HeckeError> {
        if self.n != other.n {
            return Err(HeckeError::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, HeckeError> {
        self.check(other)?;
        let mut s = self.support.clone();
        s += &other.support;
        Ok(Self { n: self.n, support: s })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, HeckeError> {
        self.check(other)?;
        let mut s = self.support.clone();
        s -= &other.support;
        Ok(Self { n: self.n, support: s })
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self { n: self.n, support: self.support.scale(c) }
    }

    /// Right multiplication by `H_i`:
    /// `H_w H_i = H_{ws_i}` if the length goes up, else `H_{ws_i} + (q^-1 - q) H_w`.
    pub fn mul_generator(&self, i: usize) -> Result<Self, HeckeError> {
        if i == 0 || i >= self.n {
            return Err(HeckeError::IndexOutOfRange { index: i, n: self.n });
        }
        let quad = quadratic_coeff();
        let mut out = LinComb::zero();
        for (w, c) in self.support.iter() {
            let ws = w.mul_simple(i).expect("index checked");
            out.add_term(ws, c);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), &(c * &quad));
            }
        }
        Ok(Self { n: self.n, support: out })
    }

    /// Right multiplication by `H_w` for a permutation `w`.
    pub fn mul_standard(&self, w: &Permutation) -> Result<Self, HeckeError> {
        w.reduced_word().into_iter().try_fold(self.clone(), |x, i| x.mul_generator(i))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, HeckeError> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (w, c) in other.support.iter() {
            out = out.add(&self.mul_standard(w)?.scale(c))?;
        }
        Ok(out)
    }

    /// The bar involution: `q -> q^-1` on scalars and `H_w -> (H_{w^-1})^-1`.
    pub fn bar(&self) -> Self {
        let mut out = LinComb::zero();
        for (w, c) in self.support.iter() {
            out.add_scaled(&bar_standard(w).support, &c.bar());
        }
        Self { n: self.n, support: out }
    }

    /// The symmetric form making the standard basis orthonormal.
    pub fn form(&self, other: &Self) -> Result<RationalFunction, HeckeError> {
        self.check(other)?;
        Ok(self.support.pair_with(&other.support, |_| RationalFunction::one()))
    }

    /// Terms in decreasing Bruhat-compatible order.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &RationalFunction)> {
        let mut terms: Vec<_> = self.support.iter().collect();
        terms.sort_by_key(|(w, _)| std::cmp::Reverse(w.bruhat_key()));
        terms
    }

    pub fn to_json_terms(&self) -> Vec<(String, RationalFunction)> {
        self.sorted_terms().into_iter().map(|(w, c)| (w.to_string(), c.clone())).collect()
    }

    pub fn from_json_terms(n: usize, terms: &[(String, RationalFunction)]) -> Result<Self, HeckeError> {
        let mut support = LinComb::zero();
        for (w, c) in terms {
            support.add_term(Permutation::parse(n, w)?, c);
        }
        Self::from_lincomb(n, support)
    }
}

/// Serializable view: `(one-line permutation, coefficient)` pairs.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct HeckeElementJson {
    pub n: usize,
    pub terms: Vec<(String, RationalFunction)>,
}

impl From<&HeckeElement> for HeckeElementJson {
    fn from(x: &HeckeElement) -> Self {
        Self { n: x.n, terms: x.to_json_terms() }
    }
}

impl TryFrom<&HeckeElementJson> for HeckeElement {
    type Error = HeckeError;
    fn try_from(j: &HeckeElementJson) -> Result<Self, HeckeError> {
        HeckeElement::from_json_terms(j.n, &j.terms)
    }
}

/// Renders `c * <label>`, parenthesizing compound coefficients.
pub fn render_term(c: &RationalFunction, label: &str) -> String {
    if c.is_one() {
        return label.to_string();
    }
    if (-c).is_one() {
        return format!("-{label}");
    }
    let single = c.as_laurent().is_some_and(|p| p.num_terms() == 1);
    if single {
        format!("{c}*{label}")
    } else {
        format!("({c})*{label}")
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.sorted_terms().into_iter().map(|(w, c)| render_term(c, &format!("H{w}"))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn bar_cache() -> &'static Mutex<HashMap<Permutation, HeckeElement>> {
    static CACHE: OnceLock<Mutex<HashMap<Permutation, HeckeElement>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `bar(H_w)`, computed as the product of `bar(H_i) = H_i + q - q^-1` along a reduced word.
pub fn bar_standard(w: &Permutation) -> HeckeElement {
    if let Some(hit) = bar_cache().lock().expect("cache lock").get(w) {
        return hit.clone();
    }
    let shift = -quadratic_coeff();
    let mut acc = HeckeElement::identity(w.n());
    for i in w.reduced_word() {
        let moved = acc.mul_generator(i).expect("reduced word index is valid");
        acc = moved.add(&acc.scale(&shift)).expect("same n");
    }
    bar_cache().lock().expect("cache lock").insert(w.clone(), acc.clone());
    acc
}
