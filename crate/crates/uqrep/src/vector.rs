use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use qarith::{
    quantum_binom, quantum_int, quantum_int0, quantum_multinom0, LaurentPoly, LinComb, RationalFunction,
};
use serde::{Deserialize, Serialize};
use symgrp::Permutation;

use crate::comp::{Bits, Composition};
use crate::RepError;

/// An element of `V(a)` in the standard basis `v_η`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorVector {
    comp: Composition,
    support: LinComb<Bits>,
}

fn lp(p: LaurentPoly) -> RationalFunction {
    RationalFunction::from(p)
}

fn sign(odd_count: usize) -> RationalFunction {
    RationalFunction::from_int(if odd_count % 2 == 0 { 1 } else { -1 })
}

/// `β_j = a_j - η_j` summed over all factors.
pub fn beta_sum(comp: &Composition, eta: &Bits) -> u32 {
    comp.n() - eta.ones() as u32
}

/// The sequence `β^η`.
pub fn betas(comp: &Composition, eta: &Bits) -> Vec<u32> {
    comp.parts().iter().zip(eta.as_slice()).map(|(&a, &e)| a - e as u32).collect()
}

/// `(v_η, v_η)`: the rescaled multinomial of `β^η`.
pub fn standard_norm(comp: &Composition, eta: &Bits) -> RationalFunction {
    lp(quantum_multinom0(&betas(comp, eta)))
}

/// The permutation `w` with `η = η_min · w`, shortest in its coset, where
/// `η_min` has all zeros first and `(η · w)_j = η_{w(j)}`.
pub fn eta_position(eta: &Bits) -> Permutation {
    let z = eta.zeros();
    let (mut zi, mut oi) = (0, 0);
    let line: Vec<usize> = eta
        .as_slice()
        .iter()
        .map(|&b| {
            if b == 0 {
                zi += 1;
                zi
            } else {
                oi += 1;
                z + oi
            }
        })
        .collect();
    Permutation::from_one_line(&line).expect("ranks form a permutation")
}

/// The right permutation action on sequences, `(η · w)_j = η_{w(j)}`.
pub fn act_on_bits(eta: &Bits, w: &Permutation) -> Bits {
    Bits::new((1..=eta.len()).map(|j| eta.get(w.apply(j))).collect()).expect("bits stay bits")
}

/// The partial order on sequences with equal numbers of zeros induced by the Bruhat order.
pub fn eta_leq(gamma: &Bits, eta: &Bits) -> bool {
    gamma.len() == eta.len()
        && gamma.zeros() == eta.zeros()
        && eta_position(gamma).bruhat_leq(&eta_position(eta)).expect("same length")
}

/// Deterministic display order: larger elements first, then lexicographic.
pub fn eta_sort_key(eta: &Bits) -> (usize, usize, Bits) {
    (eta.zeros(), eta_position(eta).length(), eta.clone())
}

impl TensorVector {
    pub fn zero(comp: &Composition) -> Self {
        Self { comp: comp.clone(), support: LinComb::zero() }
    }

    pub fn standard(comp: &Composition, eta: &Bits) -> Result<Self, RepError> {
        if eta.len() != comp.len() {
            return Err(RepError::LengthMismatch { bits: eta.len(), factors: comp.len() });
        }
        Ok(Self { comp: comp.clone(), support: LinComb::basis(eta.clone()) })
    }

    pub fn from_lincomb(comp: &Composition, support: LinComb<Bits>) -> Result<Self, RepError> {
        if let Some(e) = support.keys().find(|e| e.len() != comp.len()) {
            return Err(RepError::LengthMismatch { bits: e.len(), factors: comp.len() });
        }
        Ok(Self { comp: comp.clone(), support })
    }

    pub(crate) fn raw(comp: &Composition, support: LinComb<Bits>) -> Self {
        Self { comp: comp.clone(), support }
    }

    pub fn comp(&self) -> &Composition {
        &self.comp
    }

    pub fn support(&self) -> &LinComb<Bits> {
        &self.support
    }

    pub fn coeff(&self, eta: &Bits) -> RationalFunction {
        self.support.coeff(eta)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), RepError> {
        if self.comp != other.comp {
            return Err(RepError::CompositionMismatch(self.comp.to_string(), other.comp.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, RepError> {
        self.check(other)?;
        let mut s = self.support.clone();
        s += &other.support;
        Ok(Self::raw(&self.comp, s))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RepError> {
        self.check(other)?;
        let mut s = self.support.clone();
        s -= &other.support;
        Ok(Self::raw(&self.comp, s))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self::raw(&self.comp, self.support.scale(c))
    }

    fn map_basis(&self, f: impl FnMut(&Bits) -> LinComb<Bits>) -> Self {
        Self::raw(&self.comp, self.support.map_linear(f))
    }

    /// `Δ(E) = E ⊗ K^-1 + 1 ⊗ E`, iterated; `E` passing an odd vector picks up a sign.
    pub fn act_e(&self) -> Self {
        let a = self.comp.clone();
        self.map_basis(|eta| {
            let mut out = LinComb::zero();
            for r in 1..=eta.len() {
                if eta.get(r) == 1 {
                    let after: u32 = a.parts()[r..].iter().sum();
                    let c = &(&sign(eta.ones_before(r)) * &lp(quantum_int(a.part(r))))
                        * &RationalFunction::q_pow(-(after as i64));
                    out.add_term(eta.with(r, 0), &c);
                }
            }
            out
        })
    }

    /// `Δ(F) = F ⊗ 1 + K ⊗ F`, iterated, with the same sign rule.
    pub fn act_f(&self) -> Self {
        let a = self.comp.clone();
        self.map_basis(|eta| {
            let mut out = LinComb::zero();
            for r in 1..=eta.len() {
                if eta.get(r) == 0 {
                    let before: u32 = a.parts()[..r - 1].iter().sum();
                    let c = &sign(eta.ones_before(r)) * &RationalFunction::q_pow(before as i64);
                    out.add_term(eta.with(r, 1), &c);
                }
            }
            out
        })
    }

    /// `K` acts by `q^{a_j}` on each factor.
    pub fn act_k(&self) -> Self {
        self.scale(&RationalFunction::q_pow(self.comp.n() as i64))
    }

    pub fn act_k_inv(&self) -> Self {
        self.scale(&RationalFunction::q_pow(-(self.comp.n() as i64)))
    }

    /// `q^{c1 h1 + c2 h2}`: `h1` has eigenvalue `Σβ`, `h2` the number of ones.
    pub fn act_qh(&self, c1: i64, c2: i64) -> Self {
        let a = self.comp.clone();
        self.map_basis(|eta| {
            let e = c1 * beta_sum(&a, eta) as i64 + c2 * eta.ones() as i64;
            LinComb::term(eta.clone(), RationalFunction::q_pow(e))
        })
    }

    /// The common value of `Σβ` if the vector lies in one weight space.
    pub fn weight(&self) -> Result<Option<u32>, RepError> {
        let mut weights = self.support.keys().map(|e| beta_sum(&self.comp, e));
        let Some(first) = weights.next() else { return Ok(None) };
        if weights.any(|w| w != first) {
            return Err(RepError::MixedWeight);
        }
        Ok(Some(first))
    }

    /// `E' = q^{Σa - 1} / [m + 1]_0 · E` on the weight space with `Σβ = m`.
    pub fn act_e_prime(&self) -> Result<Self, RepError> {
        let Some(m) = self.weight()? else { return Ok(self.clone()) };
        let scalar = &RationalFunction::q_pow(self.comp.n() as i64 - 1) / &lp(quantum_int0(m + 1));
        Ok(self.act_e().scale(&scalar))
    }

    /// Applies the merge map on factors `i, i+1` (1-based); the result lives in the merged composition.
    pub fn phi_merge(&self, i: usize) -> Result<Self, RepError> {
        let target = self.comp.merged(i)?;
        let (a, b) = (self.comp.part(i), self.comp.part(i + 1));
        let coeffs = merge_coeffs(a, b);
        let support = self.support.map_linear(|eta| {
            let (x, y) = (eta.get(i), eta.get(i + 1));
            let (bit, c) = match (x, y) {
                (1, 1) => return LinComb::zero(),
                (1, 0) => (1, coeffs[0].clone()),
                (0, 1) => (1, coeffs[1].clone()),
                _ => (0, coeffs[2].clone()),
            };
            let merged = eta.slice(0, i - 1).concat(&Bits::new(vec![bit]).unwrap()).concat(&eta.slice(i + 1, eta.len()));
            LinComb::term(merged, c)
        });
        Ok(Self::raw(&target, support))
    }

    /// Applies the split map on factor `i`, dividing its label as `(left, a_i - left)`.
    pub fn phi_split(&self, i: usize, left: u32) -> Result<Self, RepError> {
        let target = self.comp.split(i, left)?;
        let support = self.support.map_linear(|eta| {
            let head = eta.slice(0, i - 1);
            let tail = eta.slice(i, eta.len());
            let join = |x: u8, y: u8| head.concat(&Bits::new(vec![x, y]).unwrap()).concat(&tail);
            if eta.get(i) == 0 {
                LinComb::basis(join(0, 0))
            } else {
                let mut out = LinComb::basis(join(1, 0));
                out.add_term(join(0, 1), &RationalFunction::q_pow(left as i64));
                out
            }
        });
        Ok(Self::raw(&target, support))
    }

    /// The symmetric form with `(v_η, v_γ) = δ_{η,γ} · multinom_0(β^η)`.
    pub fn form(&self, other: &Self) -> Result<RationalFunction, RepError> {
        self.check(other)?;
        let a = &self.comp;
        Ok(self.support.pair_with(&other.support, |eta| standard_norm(a, eta)))
    }

    /// The bar involution, built factor by factor with the quasi-R-matrix
    /// `Θ' = 1 + (q^-1 - q) E ⊗ F` and left-nested bracketing.
    pub fn bar(&self) -> Self {
        let mut out = LinComb::zero();
        for (eta, c) in self.support.iter() {
            out.add_scaled(&bar_standard_left(&self.comp, eta), &c.bar());
        }
        Self::raw(&self.comp, out)
    }

    /// The same involution with right-nested bracketing.
    pub fn bar_right_nested(&self) -> Self {
        let mut out = LinComb::zero();
        for (eta, c) in self.support.iter() {
            out.add_scaled(&bar_standard_right(&self.comp, eta), &c.bar());
        }
        Self::raw(&self.comp, out)
    }

    pub fn sorted_terms(&self) -> Vec<(&Bits, &RationalFunction)> {
        let mut terms: Vec<_> = self.support.iter().collect();
        terms.sort_by_key(|(e, _)| std::cmp::Reverse(eta_sort_key(e)));
        terms
    }

    /// Coordinates in the lexicographic basis of all `2^l` sequences.
    pub fn to_column(&self) -> Vec<RationalFunction> {
        let mut col = vec![RationalFunction::zero(); 1 << self.comp.len()];
        for (e, c) in self.support.iter() {
            col[e.index()] = c.clone();
        }
        col
    }

    pub fn from_column(comp: &Composition, col: &[RationalFunction]) -> Self {
        let etas = comp.all_etas();
        Self::raw(comp, etas.into_iter().zip(col).map(|(e, c)| (e, c.clone())).collect())
    }
}

/// Merge coefficients for the patterns `10`, `01`, `00` of labels `(a, b)`.
pub fn merge_coeffs(a: u32, b: u32) -> [RationalFunction; 3] {
    let binom = |n, k| lp(quantum_binom(n, k).expect("k <= n"));
    [
        &RationalFunction::q_pow(-(b as i64)) * &binom(a + b - 1, b),
        binom(a + b - 1, a),
        binom(a + b, a),
    ]
}

/// `(E ⊗ F)(x ⊗ y) = (-1)^{|x|} Ex ⊗ Fy` on a split composition.
fn e_tensor_f(left: &TensorVector, right: &TensorVector) -> LinComb<Bits> {
    let mut out = LinComb::zero();
    let fr = right.act_f();
    for (x, cx) in left.support.iter() {
        let ex = TensorVector::raw(&left.comp, LinComb::term(x.clone(), cx.clone())).act_e();
        for (ex_eta, cex) in ex.support.iter() {
            for (y, cy) in fr.support.iter() {
                let c = &(&sign(x.ones()) * cex) * cy;
                out.add_term(ex_eta.concat(y), &c);
            }
        }
    }
    out
}

fn theta_apply(left: &TensorVector, right: &TensorVector) -> LinComb<Bits> {
    let mut out = LinComb::zero();
    for (x, cx) in left.support.iter() {
        for (y, cy) in right.support.iter() {
            out.add_term(x.concat(y), &(cx * cy));
        }
    }
    let correction = e_tensor_f(left, right);
    let quad = RationalFunction::from(LaurentPoly::from_terms([(-1, 1), (1, -1)]));
    out.add_scaled(&correction, &quad);
    out
}

fn single_part(comp: &Composition, from: usize, to: usize) -> Composition {
    Composition::new(comp.parts()[from..to].to_vec()).expect("nonempty slice of a composition")
}

type BarCache = Mutex<HashMap<(Composition, Bits), LinComb<Bits>>>;

fn bar_cache() -> &'static BarCache {
    static CACHE: OnceLock<BarCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn bar_standard_left(comp: &Composition, eta: &Bits) -> LinComb<Bits> {
    let l = comp.len();
    if l == 1 {
        return LinComb::basis(eta.clone());
    }
    let key = (comp.clone(), eta.clone());
    if let Some(hit) = bar_cache().lock().expect("bar cache").get(&key) {
        return hit.clone();
    }
    let head_comp = single_part(comp, 0, l - 1);
    let head = TensorVector::raw(&head_comp, bar_standard_left(&head_comp, &eta.slice(0, l - 1)));
    let tail = TensorVector::raw(&single_part(comp, l - 1, l), LinComb::basis(eta.slice(l - 1, l)));
    let out = theta_apply(&head, &tail);
    bar_cache().lock().expect("bar cache").insert(key, out.clone());
    out
}

fn bar_standard_right(comp: &Composition, eta: &Bits) -> LinComb<Bits> {
    let l = comp.len();
    if l == 1 {
        return LinComb::basis(eta.clone());
    }
    let tail_comp = single_part(comp, 1, l);
    let tail = TensorVector::raw(&tail_comp, bar_standard_right(&tail_comp, &eta.slice(1, l)));
    let head = TensorVector::raw(&single_part(comp, 0, 1), LinComb::basis(eta.slice(0, 1)));
    theta_apply(&head, &tail)
}

/// Renders `c * <label>`, parenthesizing compound coefficients.
pub fn render_term(c: &RationalFunction, label: &str) -> String {
    if c.is_one() {
        return label.to_string();
    }
    if (-c).is_one() {
        return format!("-{label}");
    }
    if c.as_laurent().is_some_and(|p| p.num_terms() == 1) {
        format!("{c}*{label}")
    } else {
        format!("({c})*{label}")
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.sorted_terms().into_iter().map(|(e, c)| render_term(c, &format!("v[{e}]"))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in V{}", self, self.comp)
    }
}

/// JSON view: the composition plus `(bitstring, coefficient)` pairs.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TensorVectorJson {
    pub comp: Composition,
    pub terms: Vec<(String, RationalFunction)>,
}

impl From<&TensorVector> for TensorVectorJson {
    fn from(v: &TensorVector) -> Self {
        Self {
            comp: v.comp.clone(),
            terms: v.sorted_terms().into_iter().map(|(e, c)| (e.to_string(), c.clone())).collect(),
        }
    }
}

impl TensorVectorJson {
    pub fn into_vector(&self) -> Result<TensorVector, RepError> {
        let mut support = LinComb::zero();
        for (e, c) in &self.terms {
            support.add_term(e.parse::<Bits>()?, c);
        }
        TensorVector::from_lincomb(&self.comp, support)
    }
}
