use std::fmt;

use serde::{Deserialize, Serialize};
use symgrp::{in_lambda, shortest_right_coset_reps, ParabolicSubgroup, Permutation};
use uqrep::{Bits, Composition};

use crate::TabError;

/// A filling of the hook diagram of shape `(n-k, k)` with the multiset
/// `1^{a_1} 2^{a_2} ...`. The column holds `k` entries listed bottom to top and
/// the row holds the remaining `n-k` entries (corner box included) left to right.
/// Boxes are numbered `1..k` up the column, then `k+1..n` along the row.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct HookTableau {
    comp: Composition,
    column: Vec<u32>,
    row: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    row: Vec<u32>,
    column: Vec<u32>,
    #[serde(rename = "type")]
    comp: Composition,
}

impl TryFrom<TableauJson> for HookTableau {
    type Error = TabError;
    fn try_from(j: TableauJson) -> Result<Self, TabError> {
        HookTableau::new(&j.comp, j.column, j.row)
    }
}

impl From<HookTableau> for TableauJson {
    fn from(t: HookTableau) -> Self {
        TableauJson { row: t.row, column: t.column, comp: t.comp }
    }
}

/// `S_a`, the stabilizer of the minimal tableau under the box action.
pub fn stabilizer(comp: &Composition) -> ParabolicSubgroup {
    let blocks: Vec<usize> = comp.parts().iter().map(|&p| p as usize).collect();
    ParabolicSubgroup::young(&blocks)
}

/// `(W_q, W_p)` for the weight space `k`: the column boxes generate `W_q`, the
/// row boxes after the corner generate `W_p`.
pub fn hook_parabolics(n: usize, k: usize) -> (ParabolicSubgroup, ParabolicSubgroup) {
    let wq = ParabolicSubgroup::new(n, 1..k).expect("generators in range");
    let wp = ParabolicSubgroup::new(n, (k + 1)..n).expect("generators in range");
    (wq, wp)
}

fn check_k(comp: &Composition, k: usize) -> Result<usize, TabError> {
    let n = comp.n() as usize;
    if k > n {
        return Err(TabError::WeightOutOfRange { k, n });
    }
    Ok(n)
}

impl HookTableau {
    pub fn new(comp: &Composition, column: Vec<u32>, row: Vec<u32>) -> Result<Self, TabError> {
        let mut counts = vec![0u32; comp.len()];
        for &e in column.iter().chain(&row) {
            if e == 0 || e as usize > comp.len() {
                return Err(TabError::BadTableau(format!("entry {e} outside 1..={}", comp.len())));
            }
            counts[e as usize - 1] += 1;
        }
        if counts != comp.parts() {
            return Err(TabError::BadTableau(format!("entries do not have type {comp}")));
        }
        Ok(Self { comp: comp.clone(), column, row })
    }

    /// Entries listed in box order.
    pub fn from_box_entries(comp: &Composition, k: usize, entries: Vec<u32>) -> Result<Self, TabError> {
        check_k(comp, k)?;
        if entries.len() != comp.n() as usize {
            return Err(TabError::BadTableau(format!("{} entries for {} boxes", entries.len(), comp.n())));
        }
        let row = entries[k..].to_vec();
        let mut column = entries;
        column.truncate(k);
        Self::new(comp, column, row)
    }

    /// `T^min`: the entries `1^{a_1} 2^{a_2} ...` in box order.
    pub fn minimal(comp: &Composition, k: usize) -> Result<Self, TabError> {
        let entries = comp.parts().iter().enumerate().flat_map(|(i, &a)| std::iter::repeat(i as u32 + 1).take(a as usize));
        Self::from_box_entries(comp, k, entries.collect())
    }

    /// The admissible tableau whose row holds exactly the values `i` with `η_i = 1`.
    pub fn admissible_from_bits(comp: &Composition, eta: &Bits) -> Result<Self, TabError> {
        if eta.len() != comp.len() {
            return Err(uqrep::RepError::LengthMismatch { bits: eta.len(), factors: comp.len() }.into());
        }
        let row: Vec<u32> = (1..=comp.len()).filter(|&i| eta.get(i) == 1).map(|i| i as u32).collect();
        let mut column = Vec::new();
        for i in (1..=comp.len()).rev() {
            let in_column = comp.part(i) - eta.get(i) as u32;
            column.extend(std::iter::repeat(i as u32).take(in_column as usize));
        }
        Self::new(comp, column, row)
    }

    pub fn comp(&self) -> &Composition {
        &self.comp
    }

    pub fn n(&self) -> usize {
        self.column.len() + self.row.len()
    }

    pub fn k(&self) -> usize {
        self.column.len()
    }

    /// Column entries, bottom to top.
    pub fn column(&self) -> &[u32] {
        &self.column
    }

    /// Row entries, left to right.
    pub fn row(&self) -> &[u32] {
        &self.row
    }

    pub fn box_entries(&self) -> Vec<u32> {
        self.column.iter().chain(&self.row).copied().collect()
    }

    /// Entry in box `b` (1-based).
    pub fn entry(&self, b: usize) -> u32 {
        self.box_entries()[b - 1]
    }

    /// Strictly increasing row and weakly decreasing column read upwards.
    pub fn is_admissible(&self) -> bool {
        self.row.windows(2).all(|p| p[0] < p[1]) && self.column.windows(2).all(|p| p[0] >= p[1])
    }

    /// `η` with `η_i = 1` iff `i` appears in the row: the label of `v_(w)`.
    pub fn bits(&self) -> Bits {
        let eta = (1..=self.comp.len() as u32).map(|i| u8::from(self.row.contains(&i))).collect();
        Bits::new(eta).expect("bits")
    }

    /// `(w · T)(b) = T(w^{-1}(b))`.
    pub fn act(&self, w: &Permutation) -> Result<Self, TabError> {
        if w.n() != self.n() {
            return Err(TabError::BadTableau(format!("permutation of {} acting on {} boxes", w.n(), self.n())));
        }
        let old = self.box_entries();
        let inv = w.inverse();
        let entries = (1..=self.n()).map(|b| old[inv.apply(b) - 1]).collect();
        Self::from_box_entries(&self.comp, self.k(), entries)
    }

    /// Merges the values `i` and `i+1`: entries above `i` drop by one.
    pub fn merge_values(&self, i: usize) -> Result<Self, TabError> {
        let merged = self.comp.merged(i)?;
        let relabel = |e: &u32| if *e as usize > i { e - 1 } else { *e };
        Self::new(&merged, self.column.iter().map(relabel).collect(), self.row.iter().map(relabel).collect())
    }

    /// Splits the value `i` into `i, i+1` with `left` copies of `i`: entries above
    /// `i` rise by one, then the first `a_i + a_{i+1} - left` entries `i` in box
    /// order become `i+1`.
    pub fn split_value(&self, i: usize, left: u32) -> Result<Self, TabError> {
        let split = self.comp.split(i, left)?;
        let mut to_change = self.comp.part(i) - left;
        let entries = self
            .box_entries()
            .into_iter()
            .map(|e| match (e as usize).cmp(&i) {
                std::cmp::Ordering::Greater => e + 1,
                std::cmp::Ordering::Equal if to_change > 0 => {
                    to_change -= 1;
                    e + 1
                }
                _ => e,
            })
            .collect();
        Self::from_box_entries(&split, self.k(), entries)
    }

    /// Two lines: the row left to right, then the column bottom to top.
    pub fn render(&self) -> String {
        let line = |xs: &[u32]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        format!("row:    {}\ncolumn: {}", line(&self.row), line(&self.column))
    }
}

impl fmt::Display for HookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for HookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}[col {:?} | row {:?}]", self.comp, self.column, self.row)
    }
}

/// `T_a(w) = w · T^min_a` for `w` shortest in `w S_a`.
pub fn tableau_from_perm(w: &Permutation, comp: &Composition, k: usize) -> Result<HookTableau, TabError> {
    let n = check_k(comp, k)?;
    if w.n() != n || !stabilizer(comp).is_shortest_right_rep(w) {
        return Err(TabError::NotShortestRep { w: w.to_string(), comp: comp.to_string() });
    }
    HookTableau::minimal(comp, k)?.act(w)
}

/// The shortest `w` with `T = w · T^min`: the `r`-th box of `T^min` holding `i`
/// goes to the `r`-th box of `T` holding `i`.
pub fn perm_from_tableau(t: &HookTableau) -> Permutation {
    let min = HookTableau::minimal(&t.comp, t.k()).expect("valid k").box_entries();
    let entries = t.box_entries();
    let mut next_box: Vec<Vec<usize>> = vec![Vec::new(); t.comp.len() + 1];
    for (b, &e) in entries.iter().enumerate().rev() {
        next_box[e as usize].push(b + 1);
    }
    let line: Vec<usize> = min.iter().map(|&e| next_box[e as usize].pop().expect("same multiset")).collect();
    Permutation::from_one_line(&line).expect("boxes form a permutation")
}

/// All `(n-k, k)`-tableaux of type `a`, indexed by shortest representatives of `S_n / S_a`.
pub fn all_tableaux(comp: &Composition, k: usize) -> Result<Vec<(Permutation, HookTableau)>, TabError> {
    check_k(comp, k)?;
    shortest_right_coset_reps(&stabilizer(comp))
        .into_iter()
        .map(|w| {
            let t = tableau_from_perm(&w, comp, k)?;
            Ok((w, t))
        })
        .collect()
}

/// `Λ_k(a)` through admissible tableaux, in a linear extension of the Bruhat order.
/// Empty when `k < n - ℓ` or `k > n`.
pub fn enumerate_lambda(comp: &Composition, k: usize) -> Vec<Permutation> {
    let Ok(all) = all_tableaux(comp, k) else {
        return Vec::new();
    };
    let mut out: Vec<Permutation> = all.into_iter().filter(|(_, t)| t.is_admissible()).map(|(w, _)| w).collect();
    out.sort_by_key(|w| w.bruhat_key());
    out
}

/// Membership in `Λ_k(a)` through the coset conditions: `w` shortest for
/// `S_n / S_a`, `w S_a` inside the shortest representatives for `W_p \ S_n`, and
/// `w S_a` meeting the longest representatives for `W_q \ S_n`.
pub fn in_lambda_by_cosets(w: &Permutation, comp: &Composition, k: usize) -> bool {
    let n = comp.n() as usize;
    if k > n || w.n() != n {
        return false;
    }
    let (wq, wp) = hook_parabolics(n, k);
    in_lambda(w, &wq, &wp, &stabilizer(comp))
}

/// Membership in `Λ_k(a)` through the tableau `T_a(w)`.
pub fn in_lambda_by_tableau(w: &Permutation, comp: &Composition, k: usize) -> bool {
    tableau_from_perm(w, comp, k).is_ok_and(|t| t.is_admissible())
}

/// The element of `Λ_k(a)` whose tableau has row values `{i : η_i = 1}`.
pub fn perm_from_bits(comp: &Composition, eta: &Bits) -> Result<Permutation, TabError> {
    Ok(perm_from_tableau(&HookTableau::admissible_from_bits(comp, eta)?))
}
