use std::collections::BTreeMap;
use std::ops::{AddAssign, SubAssign};

use crate::ratfunc::RationalFunction;

/// A finitely supported map from basis labels to `Q(q)`, with no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, RationalFunction>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, RationalFunction::one())
    }

    pub fn term(k: K, c: RationalFunction) -> Self {
        let mut out = Self::zero();
        out.add_term(k, &c);
        out
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (K, RationalFunction)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, &c);
        }
        out
    }

    pub fn add_term(&mut self, k: K, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> RationalFunction {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn get(&self, k: &K) -> Option<&RationalFunction> {
        self.terms.get(k)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &RationalFunction)> + '_ {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    /// Applies `q -> q^-1` to every coefficient.
    pub fn bar_coeffs(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, x)| (k.clone(), x.bar())).collect() }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), &(x * c));
        }
    }

    /// Applies a linear map given on basis labels.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// The standard diagonal pairing `sum_k weight(k) a_k b_k`.
    pub fn pair_with(&self, other: &Self, mut weight: impl FnMut(&K) -> RationalFunction) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for (k, a) in &self.terms {
            if let Some(b) = other.terms.get(k) {
                acc += &(&(a * b) * &weight(k));
            }
        }
        acc
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c);
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), &(-c));
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, RationalFunction)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, RationalFunction)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}
