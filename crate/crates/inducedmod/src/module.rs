use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use hecke::{bar_standard, correct_to_canonical, quadratic_coeff, render_term, HeckeElement};
use qarith::{LinComb, RationalFunction};
use serde::{Deserialize, Serialize};
use symgrp::{shortest_coset_reps, ParabolicSubgroup, Permutation};

use crate::ModError;

struct Inner {
    sign_part: ParabolicSubgroup,
    triv_part: ParabolicSubgroup,
    joint: ParabolicSubgroup,
    basis: Vec<Permutation>,
    bar_cache: Mutex<HashMap<Permutation, LinComb<Permutation>>>,
    canon_cache: Mutex<HashMap<Permutation, LinComb<Permutation>>>,
}

/// The right `H_n`-module induced from the sign character on `W_p` (where `H_s`
/// acts by `-q`) and the trivial character on `W_q` (where `H_s` acts by `q^-1`).
/// Its standard basis `N_w` is indexed by shortest representatives of `W_{p+q} \ S_n`.
#[derive(Clone)]
pub struct InducedModule {
    inner: Arc<Inner>,
}

impl PartialEq for InducedModule {
    fn eq(&self, other: &Self) -> bool {
        self.inner.sign_part == other.inner.sign_part && self.inner.triv_part == other.inner.triv_part
    }
}

impl Eq for InducedModule {}

impl fmt::Debug for InducedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "InducedModule(n={}, p={:?}, q={:?})",
            self.n(),
            self.sign_part().generators().collect::<Vec<_>>(),
            self.triv_part().generators().collect::<Vec<_>>()
        )
    }
}

/// JSON descriptor of a module.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ModuleDescriptor {
    pub n: usize,
    pub p_generators: Vec<usize>,
    pub q_generators: Vec<usize>,
}

impl InducedModule {
    /// `sign_part` is `W_p`, `triv_part` is `W_q`; they must commute element-wise.
    pub fn new(sign_part: ParabolicSubgroup, triv_part: ParabolicSubgroup) -> Result<Self, ModError> {
        if sign_part.n() != triv_part.n() {
            return Err(ModError::SizeMismatch(sign_part.n(), triv_part.n()));
        }
        if !sign_part.commutes_with(&triv_part) {
            return Err(ModError::NotCommuting);
        }
        let joint = sign_part.join(&triv_part);
        let basis = shortest_coset_reps(&joint);
        Ok(Self {
            inner: Arc::new(Inner {
                sign_part,
                triv_part,
                joint,
                basis,
                bar_cache: Mutex::new(HashMap::new()),
                canon_cache: Mutex::new(HashMap::new()),
            }),
        })
    }

    pub fn from_generators(n: usize, p: &[usize], q: &[usize]) -> Result<Self, ModError> {
        Self::new(
            ParabolicSubgroup::new(n, p.iter().copied())?,
            ParabolicSubgroup::new(n, q.iter().copied())?,
        )
    }

    pub fn regular(n: usize) -> Self {
        Self::new(ParabolicSubgroup::trivial(n), ParabolicSubgroup::trivial(n)).expect("trivial groups commute")
    }

    pub fn descriptor(&self) -> ModuleDescriptor {
        ModuleDescriptor {
            n: self.n(),
            p_generators: self.sign_part().generators().collect(),
            q_generators: self.triv_part().generators().collect(),
        }
    }

    pub fn from_descriptor(d: &ModuleDescriptor) -> Result<Self, ModError> {
        Self::from_generators(d.n, &d.p_generators, &d.q_generators)
    }

    pub fn n(&self) -> usize {
        self.inner.joint.n()
    }

    pub fn sign_part(&self) -> &ParabolicSubgroup {
        &self.inner.sign_part
    }

    pub fn triv_part(&self) -> &ParabolicSubgroup {
        &self.inner.triv_part
    }

    /// Basis labels in increasing length order.
    pub fn basis_index(&self) -> &[Permutation] {
        &self.inner.basis
    }

    pub fn dim(&self) -> usize {
        self.inner.basis.len()
    }

    pub fn is_basis_label(&self, w: &Permutation) -> bool {
        w.n() == self.n() && self.inner.joint.is_shortest_left_rep(w)
    }

    pub fn standard(&self, w: &Permutation) -> Result<ModuleElement, ModError> {
        if !self.is_basis_label(w) {
            return Err(ModError::NotABasisLabel(w.to_string()));
        }
        Ok(self.element(LinComb::basis(w.clone())))
    }

    pub fn zero(&self) -> ModuleElement {
        self.element(LinComb::zero())
    }

    pub(crate) fn element(&self, support: LinComb<Permutation>) -> ModuleElement {
        ModuleElement { module: self.clone(), support }
    }

    pub fn element_from(&self, support: LinComb<Permutation>) -> Result<ModuleElement, ModError> {
        if let Some(w) = support.keys().find(|w| !self.is_basis_label(w)) {
            return Err(ModError::NotABasisLabel(w.to_string()));
        }
        Ok(self.element(support))
    }

    /// `N_w H_i` by the four-case rule.
    fn act_on_basis(&self, w: &Permutation, i: usize) -> LinComb<Permutation> {
        let ws = w.mul_simple(i).expect("index checked by caller");
        if self.inner.joint.is_shortest_left_rep(&ws) {
            let mut out = LinComb::basis(ws);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), &quadratic_coeff());
            }
            return out;
        }
        // Otherwise w s_i = s_j w with s_j = the transposition of the values w(i), w(i+1).
        let (a, b) = (w.apply(i), w.apply(i + 1));
        let j = a.min(b);
        debug_assert_eq!(a.abs_diff(b), 1);
        let scalar = if self.inner.sign_part.has_generator(j) {
            -RationalFunction::q()
        } else {
            debug_assert!(self.inner.triv_part.has_generator(j));
            RationalFunction::q_pow(-1)
        };
        LinComb::term(w.clone(), scalar)
    }

    /// `N_e bar(H_w)`, the bar image of `N_w`.
    fn bar_basis(&self, w: &Permutation) -> LinComb<Permutation> {
        if let Some(hit) = self.inner.bar_cache.lock().expect("cache lock").get(w) {
            return hit.clone();
        }
        let image = self.apply_hecke_to_identity(&bar_standard(w));
        self.inner.bar_cache.lock().expect("cache lock").insert(w.clone(), image.clone());
        image
    }

    /// `N_e h` for a Hecke algebra element `h`.
    pub fn apply_hecke_to_identity(&self, h: &HeckeElement) -> LinComb<Permutation> {
        let e = self.zero().with_basis(&Permutation::identity(self.n()));
        e.act_hecke(h).expect("same n").support
    }

    /// The canonical basis element `N_w + sum R_{y,w} N_y` with `R` in `qZ[q]`.
    pub fn canonical_basis_element(&self, w: &Permutation) -> Result<ModuleElement, ModError> {
        if !self.is_basis_label(w) {
            return Err(ModError::NotABasisLabel(w.to_string()));
        }
        Ok(self.element(self.canonical_support(w)))
    }

    fn canonical_support(&self, w: &Permutation) -> LinComb<Permutation> {
        if let Some(hit) = self.inner.canon_cache.lock().expect("cache lock").get(w) {
            return hit.clone();
        }
        let result = match w.right_descents().last() {
            None => LinComb::basis(w.clone()),
            Some(&i) => {
                let shorter = w.mul_simple(i).expect("descent");
                let x = self.element(self.canonical_support(&shorter));
                let prod = x.act_generator(i).expect("valid").support;
                let prod_plus = {
                    let mut p = prod;
                    p.add_scaled(&x.support, &RationalFunction::q());
                    p
                };
                correct_to_canonical(prod_plus, w, |y| self.canonical_support(y))
            }
        };
        self.inner.canon_cache.lock().expect("cache lock").insert(w.clone(), result.clone());
        result
    }

    /// Coordinates of `x` in the canonical basis of this module.
    pub fn to_canonical_coordinates(&self, x: &ModuleElement) -> LinComb<Permutation> {
        let mut rest = x.support.clone();
        let mut coords = LinComb::zero();
        while let Some((w, c)) = rest
            .iter()
            .max_by_key(|(w, _)| (w.length(), w.one_line()))
            .map(|(w, c)| (w.clone(), c.clone()))
        {
            coords.add_term(w.clone(), &c);
            rest.add_scaled(&self.canonical_support(&w), &(-c));
        }
        coords
    }
}

/// An element of an induced module, in the standard basis.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElement {
    module: InducedModule,
    support: LinComb<Permutation>,
}

impl ModuleElement {
    pub fn module(&self) -> &InducedModule {
        &self.module
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

    fn with_basis(&self, w: &Permutation) -> Self {
        self.module.element(LinComb::basis(w.clone()))
    }

    fn check(&self, other: &Self) -> Result<(), ModError> {
        if self.module != other.module {
            return Err(ModError::ModuleMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ModError> {
        self.check(other)?;
        let mut s = self.support.clone();
        s += &other.support;
        Ok(self.module.element(s))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ModError> {
        self.check(other)?;
        let mut s = self.support.clone();
        s -= &other.support;
        Ok(self.module.element(s))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        self.module.element(self.support.scale(c))
    }

    /// Right action of `H_i`.
    pub fn act_generator(&self, i: usize) -> Result<Self, ModError> {
        if i == 0 || i >= self.module.n() {
            return Err(ModError::IndexOutOfRange { index: i, n: self.module.n() });
        }
        Ok(self.module.element(self.support.map_linear(|w| self.module.act_on_basis(w, i))))
    }

    /// Right action of an arbitrary Hecke algebra element.
    pub fn act_hecke(&self, h: &HeckeElement) -> Result<Self, ModError> {
        if h.n() != self.module.n() {
            return Err(ModError::SizeMismatch(h.n(), self.module.n()));
        }
        let mut out = self.module.zero();
        for (y, c) in h.support().iter() {
            let mut part = self.clone();
            for i in y.reduced_word() {
                part = part.act_generator(i)?;
            }
            out = out.add(&part.scale(c))?;
        }
        Ok(out)
    }

    /// The bar involution determined by `bar(N_e) = N_e` and compatibility with the action.
    pub fn bar(&self) -> Self {
        let mut out = LinComb::zero();
        for (w, c) in self.support.iter() {
            out.add_scaled(&self.module.bar_basis(w), &c.bar());
        }
        self.module.element(out)
    }

    /// The form making the standard basis orthonormal.
    pub fn form(&self, other: &Self) -> Result<RationalFunction, ModError> {
        self.check(other)?;
        Ok(self.support.pair_with(&other.support, |_| RationalFunction::one()))
    }

    pub fn sorted_terms(&self) -> Vec<(&Permutation, &RationalFunction)> {
        let mut terms: Vec<_> = self.support.iter().collect();
        terms.sort_by_key(|(w, _)| std::cmp::Reverse((w.length(), w.one_line())));
        terms
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.sorted_terms().into_iter().map(|(w, c)| render_term(c, &format!("N{w}"))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.module, self)
    }
}

/// JSON view of an element: its module descriptor plus `(permutation, coefficient)` pairs.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ModuleElementJson {
    pub module: ModuleDescriptor,
    pub terms: Vec<(String, RationalFunction)>,
}

impl From<&ModuleElement> for ModuleElementJson {
    fn from(x: &ModuleElement) -> Self {
        Self {
            module: x.module.descriptor(),
            terms: x.sorted_terms().into_iter().map(|(w, c)| (w.to_string(), c.clone())).collect(),
        }
    }
}

impl ModuleElementJson {
    pub fn into_element(&self) -> Result<ModuleElement, ModError> {
        let m = InducedModule::from_descriptor(&self.module)?;
        let mut support = LinComb::zero();
        for (w, c) in &self.terms {
            support.add_term(Permutation::parse(m.n(), w)?, c);
        }
        m.element_from(support)
    }
}
