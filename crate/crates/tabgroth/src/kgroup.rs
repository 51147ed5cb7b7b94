use std::fmt;
use std::str::FromStr;

use qarith::{quantum_binom0, LinComb, Matrix, RationalFunction};
use serde::{Deserialize, Serialize};
use symgrp::{longest_element, Permutation};
use uqrep::{canonical_basis, dual_canonical, standard_norm, to_canonical_coordinates, Bits, Composition, TensorVector};
use webcat::{evaluate_matrix, Web};

use crate::tableau::{enumerate_lambda, perm_from_tableau, stabilizer, tableau_from_perm, HookTableau};
use crate::TabError;

/// The four distinguished bases of a weight space `(V(a))_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Standard,
    ProperStandard,
    Projective,
    Simple,
}

impl FromStr for ClassKind {
    type Err = TabError;
    fn from_str(s: &str) -> Result<Self, TabError> {
        match s {
            "standard" => Ok(Self::Standard),
            "proper" | "proper_standard" => Ok(Self::ProperStandard),
            "projective" => Ok(Self::Projective),
            "simple" => Ok(Self::Simple),
            _ => Err(TabError::BadKind(s.to_string())),
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Standard => "standard",
            Self::ProperStandard => "proper_standard",
            Self::Projective => "projective",
            Self::Simple => "simple",
        };
        write!(f, "{s}")
    }
}

/// A vector of `V(a)` lying in the weight space `k`: every term has `n - k` ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KGroupVector {
    k: usize,
    vector: TensorVector,
}

impl KGroupVector {
    pub fn new(vector: TensorVector, k: usize) -> Result<Self, TabError> {
        let n = vector.comp().n() as usize;
        if k > n {
            return Err(TabError::WeightOutOfRange { k, n });
        }
        if vector.support().keys().any(|e| e.ones() + k != n) {
            return Err(TabError::Rep(uqrep::RepError::MixedWeight));
        }
        Ok(Self { k, vector })
    }

    pub fn zero(comp: &Composition, k: usize) -> Result<Self, TabError> {
        Self::new(TensorVector::zero(comp), k)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vector(&self) -> &TensorVector {
        &self.vector
    }

    pub fn into_vector(self) -> TensorVector {
        self.vector
    }
}

impl fmt::Display for KGroupVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vector)
    }
}

/// The label `η` of `v_(w)` for `w ∈ Λ_k(a)`.
pub fn standard_label(w: &Permutation, comp: &Composition, k: usize) -> Result<Bits, TabError> {
    let t = tableau_from_perm(w, comp, k)?;
    if !t.is_admissible() {
        return Err(TabError::NotInLambda { w: w.to_string(), comp: comp.to_string(), k });
    }
    Ok(t.bits())
}

/// The image of a class in `(V(a))_k`: standard modules go to `v_(w)`, proper
/// standard ones to `v_(w) / (v_(w), v_(w))`, projectives to the canonical basis
/// and simples to the dual canonical basis.
pub fn class_vector(w: &Permutation, comp: &Composition, k: usize, kind: ClassKind) -> Result<KGroupVector, TabError> {
    let eta = standard_label(w, comp, k)?;
    let v = match kind {
        ClassKind::Standard => TensorVector::standard(comp, &eta)?,
        ClassKind::ProperStandard => {
            let norm = standard_norm(comp, &eta);
            TensorVector::standard(comp, &eta)?.scale(&norm.inv().expect("norms are nonzero"))
        }
        ClassKind::Projective => canonical_basis(comp, &eta)?,
        ClassKind::Simple => dual_canonical(comp, &eta)?,
    };
    KGroupVector::new(v, k)
}

/// `Λ_k(a)` together with the labels `η` of the corresponding standard vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KBasis {
    pub comp: Composition,
    pub k: usize,
    pub labels: Vec<Permutation>,
    pub bits: Vec<Bits>,
}

impl KBasis {
    pub fn new(comp: &Composition, k: usize) -> Self {
        let labels = enumerate_lambda(comp, k);
        let bits = labels
            .iter()
            .map(|w| tableau_from_perm(w, comp, k).expect("enumerated elements are shortest").bits())
            .collect();
        Self { comp: comp.clone(), k, labels, bits }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, w: &Permutation) -> Option<usize> {
        self.labels.iter().position(|x| x == w)
    }

    pub fn position_of_bits(&self, eta: &Bits) -> Option<usize> {
        self.bits.iter().position(|x| x == eta)
    }

    pub fn vector(&self, j: usize, kind: ClassKind) -> Result<TensorVector, TabError> {
        Ok(class_vector(&self.labels[j], &self.comp, self.k, kind)?.into_vector())
    }

    /// Coordinates of `x ∈ (V(a))_k` in the basis of classes of the given kind.
    pub fn coordinates(&self, x: &TensorVector, kind: ClassKind) -> Result<Vec<RationalFunction>, TabError> {
        if x.comp() != &self.comp {
            return Err(uqrep::RepError::CompositionMismatch(x.comp().to_string(), self.comp.to_string()).into());
        }
        KGroupVector::new(x.clone(), self.k)?;
        let coords = match kind {
            ClassKind::Standard => self.bits.iter().map(|e| x.coeff(e)).collect(),
            ClassKind::ProperStandard => self.bits.iter().map(|e| &x.coeff(e) * &standard_norm(&self.comp, e)).collect(),
            ClassKind::Projective => {
                let c: LinComb<Bits> = to_canonical_coordinates(x)?;
                self.bits.iter().map(|e| c.coeff(e)).collect()
            }
            ClassKind::Simple => self
                .bits
                .iter()
                .map(|e| x.form(&canonical_basis(&self.comp, e)?))
                .collect::<Result<_, _>>()?,
        };
        Ok(coords)
    }

    /// `Σ_j c_j [class_j]`.
    pub fn combine(&self, coords: &[RationalFunction], kind: ClassKind) -> Result<TensorVector, TabError> {
        let mut out = TensorVector::zero(&self.comp);
        for (j, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.vector(j, kind)?.scale(c))?;
            }
        }
        Ok(out)
    }
}

/// A linear map between two weight spaces, written in bases of class vectors:
/// column `j` holds the image of the `j`-th source class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMatrix {
    pub source: KBasis,
    pub target: KBasis,
    pub kind: ClassKind,
    pub matrix: Matrix,
}

impl KMatrix {
    fn from_map(
        source: KBasis,
        target: KBasis,
        kind: ClassKind,
        f: impl Fn(&TensorVector) -> Result<TensorVector, TabError>,
    ) -> Result<Self, TabError> {
        let mut matrix = Matrix::zeros(target.len(), source.len());
        for j in 0..source.len() {
            let image = f(&source.vector(j, kind)?)?;
            for (r, c) in target.coordinates(&image, kind)?.into_iter().enumerate() {
                matrix.set(r, j, c);
            }
        }
        Ok(Self { source, target, kind, matrix })
    }

    /// Image of the `j`-th source class as a combination of target labels.
    pub fn column_terms(&self, j: usize) -> Vec<(&Permutation, &RationalFunction)> {
        (0..self.target.len())
            .map(|r| (&self.target.labels[r], self.matrix.get(r, j)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// `self ∘ other` as maps.
    pub fn after(&self, other: &KMatrix) -> Result<KMatrix, TabError> {
        if other.target != self.source || other.kind != self.kind {
            return Err(TabError::BadParameters("maps do not compose".into()));
        }
        Ok(KMatrix {
            source: other.source.clone(),
            target: self.target.clone(),
            kind: self.kind,
            matrix: &self.matrix * &other.matrix,
        })
    }
}

fn q_pow(e: i64) -> RationalFunction {
    RationalFunction::q_pow(e)
}

fn binom0(n: u32, k: u32) -> RationalFunction {
    RationalFunction::from(quantum_binom0(n, k).expect("k <= n"))
}

fn check_position(comp: &Composition, i: usize) -> Result<(), TabError> {
    if i == 0 || i >= comp.len() {
        return Err(TabError::BadPosition { pos: i, len: comp.len() });
    }
    Ok(())
}

/// Onto the wall at `i` (merging `a_i, a_{i+1}`), on proper standard classes, from
/// the tableau case analysis: both values in the row kill the class, otherwise
/// the class goes to that of the merged tableau times a power of `q`.
pub fn onto_wall_by_tableaux(comp: &Composition, i: usize, k: usize) -> Result<KMatrix, TabError> {
    check_position(comp, i)?;
    let merged = comp.merged(i)?;
    let (source, target) = (KBasis::new(comp, k), KBasis::new(&merged, k));
    let (a, b) = (comp.part(i) as i64, comp.part(i + 1) as i64);
    let mut matrix = Matrix::zeros(target.len(), source.len());
    for (j, w) in source.labels.iter().enumerate() {
        let t = tableau_from_perm(w, comp, k)?;
        let (has_i, has_next) = (t.row().contains(&(i as u32)), t.row().contains(&(i as u32 + 1)));
        let exponent = match (has_i, has_next) {
            (true, true) => continue,
            (true, false) => -b - (a - 1) * b,
            (false, true) => -a * (b - 1),
            (false, false) => -a * b,
        };
        let image = t.merge_values(i)?;
        debug_assert!(image.is_admissible());
        let r = target.position(&perm_from_tableau(&image)).expect("merged admissible tableau is in the index set");
        matrix.set(r, j, q_pow(exponent));
    }
    Ok(KMatrix { source, target, kind: ClassKind::ProperStandard, matrix })
}

/// Onto the wall from the coset factorization `w = w'x`: the class goes to
/// `q^{-l(x)} [Δ̄(w')]` when `w'` indexes the target, and to zero otherwise.
pub fn onto_wall_by_cosets(comp: &Composition, i: usize, k: usize) -> Result<KMatrix, TabError> {
    check_position(comp, i)?;
    let merged = comp.merged(i)?;
    let (source, target) = (KBasis::new(comp, k), KBasis::new(&merged, k));
    let (small, big) = (stabilizer(comp), stabilizer(&merged));
    let mut matrix = Matrix::zeros(target.len(), source.len());
    for (j, w) in source.labels.iter().enumerate() {
        let (w_short, x) = symgrp::factor_through_wall(w, &small, &big)?;
        if let Some(r) = target.position(&w_short) {
            matrix.set(r, j, q_pow(-(x.length() as i64)));
        }
    }
    Ok(KMatrix { source, target, kind: ClassKind::ProperStandard, matrix })
}

/// The merge web's matrix, transported to proper standard classes.
pub fn onto_wall_by_webs(comp: &Composition, i: usize, k: usize) -> Result<KMatrix, TabError> {
    check_position(comp, i)?;
    let web = Web::merge(comp, i)?;
    web_in_proper_classes(&web, k)
}

/// Out of the wall at `i` (splitting the `i`-th part of `a.merged(i)` back into
/// `a_i, a_{i+1}`), on proper standard classes, from the tableau constructions.
pub fn out_of_wall_by_tableaux(comp: &Composition, i: usize, k: usize) -> Result<KMatrix, TabError> {
    check_position(comp, i)?;
    let merged = comp.merged(i)?;
    let (source, target) = (KBasis::new(&merged, k), KBasis::new(comp, k));
    let mut matrix = Matrix::zeros(target.len(), source.len());
    for (j, w) in source.labels.iter().enumerate() {
        let t = tableau_from_perm(w, &merged, k)?;
        for (image, c) in out_of_wall_images(&t, i, comp.part(i))? {
            let r = target.position(&perm_from_tableau(&image)).expect("split admissible tableau is in the index set");
            matrix.set(r, j, c);
        }
    }
    Ok(KMatrix { source, target, kind: ClassKind::ProperStandard, matrix })
}

/// The admissible tableaux and coefficients in the image of `[Δ̄(T)]` when the
/// value `i` of `T` is split into `left` copies of `i` and the rest `i+1`.
///
/// With one `i` in the row, the split tableau keeps `i` in the row and gets
/// `binom₀(a_i+a_{i+1}-1, a_{i+1})`; moving `i+1` into the row instead gives the
/// second tableau, with `q^{a_i} binom₀(a_i+a_{i+1}-1, a_i)`. With all `i` in the
/// column there is a single image with `binom₀(a_i+a_{i+1}, a_i)`.
pub fn out_of_wall_images(t: &HookTableau, i: usize, left: u32) -> Result<Vec<(HookTableau, RationalFunction)>, TabError> {
    let total = t.comp().part(i);
    if left == 0 || left >= total {
        return Err(TabError::BadParameters(format!("cannot split {total} with left part {left}")));
    }
    let (a, b) = (left, total - left);
    let kept = t.split_value(i, left)?;
    if !t.row().contains(&(i as u32)) {
        return Ok(vec![(kept, binom0(a + b, a))]);
    }
    debug_assert!(kept.row().contains(&(i as u32)));
    let moved_bits = kept.bits().with(i, 0).with(i + 1, 1);
    let moved = HookTableau::admissible_from_bits(kept.comp(), &moved_bits)?;
    let with_q = &q_pow(a as i64) * &binom0(a + b - 1, a);
    Ok(vec![(kept, binom0(a + b - 1, b)), (moved, with_q)])
}

/// The split web's matrix, transported to proper standard classes.
pub fn out_of_wall_by_webs(comp: &Composition, i: usize, k: usize) -> Result<KMatrix, TabError> {
    check_position(comp, i)?;
    let web = Web::split(&comp.merged(i)?, i, comp.part(i))?;
    web_in_proper_classes(&web, k)
}

/// A web's matrix restricted to the weight space `k` and written in proper
/// standard classes on both sides.
pub fn web_in_proper_classes(web: &Web, k: usize) -> Result<KMatrix, TabError> {
    let (source, target) = (KBasis::new(web.source(), k), KBasis::new(web.target(), k));
    let m = evaluate_matrix(web);
    let mut matrix = Matrix::zeros(target.len(), source.len());
    for (j, eta) in source.bits.iter().enumerate() {
        let inv_norm = standard_norm(web.source(), eta).inv().expect("nonzero norm");
        for (r, gamma) in target.bits.iter().enumerate() {
            let entry = m.get(gamma.index(), eta.index());
            if !entry.is_zero() {
                matrix.set(r, j, &(entry * &inv_norm) * &standard_norm(web.target(), gamma));
            }
        }
    }
    Ok(KMatrix { source, target, kind: ClassKind::ProperStandard, matrix })
}

/// Onto-wall translation on proper standard classes. Computed from tableaux and
/// from the merge web; an error if the two disagree.
pub fn translate_onto_wall(comp: &Composition, i: usize, k: usize) -> Result<KMatrix, TabError> {
    let by_tableaux = onto_wall_by_tableaux(comp, i, k)?;
    if by_tableaux != onto_wall_by_webs(comp, i, k)? {
        return Err(TabError::Theorem1Mismatch { comp: comp.to_string(), pos: i, k });
    }
    Ok(by_tableaux)
}

/// Out-of-wall translation on proper standard classes, into `V(comp)` from
/// `V(comp.merged(i))`. Computed from tableaux and from the split web; an error
/// if the two disagree.
pub fn translate_out_of_wall(comp: &Composition, i: usize, k: usize) -> Result<KMatrix, TabError> {
    let by_tableaux = out_of_wall_by_tableaux(comp, i, k)?;
    if by_tableaux != out_of_wall_by_webs(comp, i, k)? {
        return Err(TabError::Theorem1Mismatch { comp: comp.to_string(), pos: i, k });
    }
    Ok(by_tableaux)
}

/// Direction of a translation relative to the wall `a.merged(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Onto,
    Out,
}

impl FromStr for Direction {
    type Err = TabError;
    fn from_str(s: &str) -> Result<Self, TabError> {
        match s {
            "onto" => Ok(Self::Onto),
            "out" => Ok(Self::Out),
            _ => Err(TabError::BadParameters(format!("unknown direction {s:?}"))),
        }
    }
}

/// A translation in any of the four bases. Proper standard matrices come from
/// the doubly checked constructions; the other bases re-expand the web images.
pub fn translation_matrix(comp: &Composition, i: usize, k: usize, dir: Direction, kind: ClassKind) -> Result<KMatrix, TabError> {
    match (dir, kind) {
        (Direction::Onto, ClassKind::ProperStandard) => translate_onto_wall(comp, i, k),
        (Direction::Out, ClassKind::ProperStandard) => translate_out_of_wall(comp, i, k),
        (Direction::Onto, _) => {
            check_position(comp, i)?;
            let merged = comp.merged(i)?;
            KMatrix::from_map(KBasis::new(comp, k), KBasis::new(&merged, k), kind, |v| Ok(v.phi_merge(i)?))
        }
        (Direction::Out, _) => {
            check_position(comp, i)?;
            let merged = comp.merged(i)?;
            let left = comp.part(i);
            KMatrix::from_map(KBasis::new(&merged, k), KBasis::new(comp, k), kind, |v| Ok(v.phi_split(i, left)?))
        }
    }
}

/// The longest element `y_0` of the shortest representatives of `S_{a'} / S_a`,
/// where `a' = a.merged(i)`.
pub fn wall_element(comp: &Composition, i: usize) -> Result<Permutation, TabError> {
    check_position(comp, i)?;
    let big = longest_element(&stabilizer(&comp.merged(i)?));
    let small = longest_element(&stabilizer(comp));
    Ok(big.compose(&small)?)
}

/// Out of the wall on projectives: `[Q(w)] ↦ [Q(w y_0)]`, for `w ∈ Λ_k(a.merged(i))`.
pub fn translate_projective(comp: &Composition, i: usize, k: usize, w: &Permutation) -> Result<KGroupVector, TabError> {
    let y0 = wall_element(comp, i)?;
    let merged = comp.merged(i)?;
    standard_label(w, &merged, k)?;
    class_vector(&w.compose(&y0)?, comp, k, ClassKind::Projective)
}

/// Onto the wall on simples: `[S(w)] ↦ q^{-l(y_0)} [S(z)]` when `w = z y_0` with
/// `z ∈ Λ_k(a.merged(i))`, and zero otherwise.
pub fn translate_simple(comp: &Composition, i: usize, k: usize, w: &Permutation) -> Result<KGroupVector, TabError> {
    let y0 = wall_element(comp, i)?;
    let merged = comp.merged(i)?;
    standard_label(w, comp, k)?;
    let z = w.compose(&y0.inverse())?;
    if !enumerate_lambda(&merged, k).contains(&z) {
        return KGroupVector::zero(&merged, k);
    }
    let s = class_vector(&z, &merged, k, ClassKind::Simple)?;
    KGroupVector::new(s.into_vector().scale(&q_pow(-(y0.length() as i64))), k)
}

/// `E'` from the weight space `k` to `k + 1`, on proper standard classes.
pub fn kgroup_e(comp: &Composition, k: usize) -> Result<KMatrix, TabError> {
    let n = comp.n() as usize;
    if k + 1 > n {
        return Err(TabError::WeightOutOfRange { k: k + 1, n });
    }
    KMatrix::from_map(KBasis::new(comp, k), KBasis::new(comp, k + 1), ClassKind::ProperStandard, |v| {
        Ok(v.act_e_prime()?)
    })
}

/// `F` from the weight space `k + 1` to `k`, on proper standard classes.
pub fn kgroup_f(comp: &Composition, k: usize) -> Result<KMatrix, TabError> {
    let n = comp.n() as usize;
    if k + 1 > n {
        return Err(TabError::WeightOutOfRange { k: k + 1, n });
    }
    KMatrix::from_map(KBasis::new(comp, k + 1), KBasis::new(comp, k), ClassKind::ProperStandard, |v| Ok(v.act_f()))
}
