use std::collections::BTreeSet;

use crate::error::SymError;
use crate::perm::{all_permutations, Permutation};

/// The subgroup of `S_n` generated by a set of simple reflections.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubgroup {
    n: usize,
    gens: BTreeSet<usize>,
}

impl ParabolicSubgroup {
    pub fn new(n: usize, gens: impl IntoIterator<Item = usize>) -> Result<Self, SymError> {
        let gens: BTreeSet<usize> = gens.into_iter().collect();
        if let Some(&bad) = gens.iter().find(|&&i| i == 0 || i >= n) {
            return Err(SymError::IndexOutOfRange { index: bad, n });
        }
        Ok(Self { n, gens })
    }

    pub fn trivial(n: usize) -> Self {
        Self { n, gens: BTreeSet::new() }
    }

    pub fn full(n: usize) -> Self {
        Self { n, gens: (1..n).collect() }
    }

    /// The Young subgroup `S_{a_1} x ... x S_{a_l}` stabilizing consecutive blocks of sizes `a`.
    pub fn young(blocks: &[usize]) -> Self {
        let n: usize = blocks.iter().sum();
        let mut gens = BTreeSet::new();
        let mut start = 1;
        for &b in blocks {
            for i in start..start + b.saturating_sub(1) {
                gens.insert(i);
            }
            start += b;
        }
        Self { n, gens }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.gens.iter().copied()
    }

    pub fn has_generator(&self, i: usize) -> bool {
        self.gens.contains(&i)
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// Maximal runs of positions connected by generators, as `(first, last)` inclusive.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 1;
        for j in 1..=self.n {
            if !self.gens.contains(&j) {
                out.push((start, j));
                start = j + 1;
            }
        }
        out
    }

    fn block_of(&self) -> Vec<usize> {
        let mut id = vec![0; self.n + 1];
        for (b, (lo, hi)) in self.blocks().into_iter().enumerate() {
            for slot in &mut id[lo..=hi] {
                *slot = b;
            }
        }
        id
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        if w.n() != self.n {
            return false;
        }
        let id = self.block_of();
        (1..=self.n).all(|j| id[w.apply(j)] == id[j])
    }

    pub fn order(&self) -> usize {
        self.blocks().iter().map(|(lo, hi)| (1..=hi - lo + 1).product::<usize>()).product()
    }

    /// All elements, sorted by length then one-line notation.
    pub fn elements(&self) -> Vec<Permutation> {
        all_permutations(self.n).into_iter().filter(|w| self.contains(w)).collect()
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.n == other.n && self.gens.is_subset(&other.gens)
    }

    /// True when every element of `self` commutes with every element of `other`.
    pub fn commutes_with(&self, other: &Self) -> bool {
        self.gens.iter().all(|&i| other.gens.iter().all(|&j| i.abs_diff(j) >= 2))
    }

    /// The parabolic subgroup generated by both.
    pub fn join(&self, other: &Self) -> Self {
        Self { n: self.n, gens: self.gens.union(&other.gens).copied().collect() }
    }

    /// Every subset of the generators, each as a parabolic subgroup.
    pub fn sub_parabolics(&self) -> Vec<Self> {
        let g: Vec<usize> = self.gens.iter().copied().collect();
        (0u32..1 << g.len())
            .map(|mask| Self {
                n: self.n,
                gens: g.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect(),
            })
            .collect()
    }

    /// `w` is shortest in its coset `W_P w`.
    pub fn is_shortest_left_rep(&self, w: &Permutation) -> bool {
        let inv = w.inverse();
        self.gens.iter().all(|&j| !inv.has_right_descent(j))
    }

    /// `w` is longest in its coset `W_P w`.
    pub fn is_longest_left_rep(&self, w: &Permutation) -> bool {
        let inv = w.inverse();
        self.gens.iter().all(|&j| inv.has_right_descent(j))
    }

    /// `w` is shortest in its coset `w W_P`.
    pub fn is_shortest_right_rep(&self, w: &Permutation) -> bool {
        self.gens.iter().all(|&j| !w.has_right_descent(j))
    }

    /// The shortest element of `w W_P`: sort the entries of `w` within each block.
    pub fn right_coset_min(&self, w: &Permutation) -> Permutation {
        let mut line = w.one_line();
        for (lo, hi) in self.blocks() {
            line[lo - 1..hi].sort_unstable();
        }
        Permutation::from_one_line(&line).expect("sorting blocks keeps a permutation")
    }
}

/// Shortest representatives of the cosets `W_P \ S_n`: `l(sw) > l(w)` for every generator `s` of `P`.
pub fn shortest_coset_reps(p: &ParabolicSubgroup) -> Vec<Permutation> {
    all_permutations(p.n).into_iter().filter(|w| p.is_shortest_left_rep(w)).collect()
}

/// Shortest representatives of the cosets `S_n / W_P`.
pub fn shortest_right_coset_reps(p: &ParabolicSubgroup) -> Vec<Permutation> {
    all_permutations(p.n).into_iter().filter(|w| p.is_shortest_right_rep(w)).collect()
}

/// The longest element of `W_P`: reverses each block.
pub fn longest_element(p: &ParabolicSubgroup) -> Permutation {
    let mut line: Vec<usize> = (1..=p.n).collect();
    for (lo, hi) in p.blocks() {
        line[lo - 1..hi].reverse();
    }
    Permutation::from_one_line(&line).expect("block reversal is a permutation")
}

/// Factors a shortest representative `w` of `S_n / S_small` as `w = w' x` with `w'`
/// shortest for `S_n / S_big`, `x` in `S_big` shortest for `S_big / S_small`, and
/// lengths adding.
pub fn factor_through_wall(
    w: &Permutation,
    small: &ParabolicSubgroup,
    big: &ParabolicSubgroup,
) -> Result<(Permutation, Permutation), SymError> {
    if !small.is_subgroup_of(big) || w.n() != big.n() {
        return Err(SymError::NotASubgroup);
    }
    if !small.is_shortest_right_rep(w) {
        return Err(SymError::NotShortestRep(w.to_string()));
    }
    let w_short = big.right_coset_min(w);
    let x = w_short.inverse().compose(w)?;
    Ok((w_short, x))
}

/// Group-theoretic membership in the index set `Λ^p_q(λ)` for a stabilizer `S_λ`:
/// `w` is shortest for `S_n / S_λ`, every element of `w S_λ` is shortest for
/// `W_p \ S_n`, and some element of `w S_λ` is longest for `W_q \ S_n`.
pub fn in_lambda(
    w: &Permutation,
    wq: &ParabolicSubgroup,
    wp: &ParabolicSubgroup,
    stab: &ParabolicSubgroup,
) -> bool {
    if !stab.is_shortest_right_rep(w) {
        return false;
    }
    let coset: Vec<Permutation> =
        stab.elements().iter().map(|x| w.compose(x).expect("same n")).collect();
    coset.iter().all(|y| wp.is_shortest_left_rep(y)) && coset.iter().any(|y| wq.is_longest_left_rep(y))
}

/// The unique `x` in `W_q` with `x w` in `Λ^p_q(λ)` and `l(xw) = l(x) + l(w)`.
pub fn lemma10_completion(
    w: &Permutation,
    wq: &ParabolicSubgroup,
    wp: &ParabolicSubgroup,
    stab: &ParabolicSubgroup,
) -> Result<Permutation, SymError> {
    let hits: Vec<Permutation> = wq
        .elements()
        .into_iter()
        .filter(|x| {
            let xw = x.compose(w).expect("same n");
            xw.length() == x.length() + w.length() && in_lambda(&xw, wq, wp, stab)
        })
        .collect();
    match hits.as_slice() {
        [x] => Ok(x.clone()),
        _ => Err(SymError::NoCompletion),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    fn par(n: usize, g: &[usize]) -> ParabolicSubgroup {
        ParabolicSubgroup::new(n, g.iter().copied()).unwrap()
    }

    #[test]
    fn coset_rep_counts() {
        assert_eq!(shortest_coset_reps(&par(2, &[1])), vec![Permutation::identity(2)]);
        assert_eq!(shortest_coset_reps(&par(3, &[1])).len(), 3);
        assert_eq!(shortest_coset_reps(&par(3, &[])).len(), 6);
    }

    #[test]
    fn longest_elements() {
        assert!(longest_element(&par(3, &[])).is_identity());
        assert_eq!(longest_element(&par(3, &[1])), p(3, "s1"));
        let w0 = longest_element(&par(3, &[1, 2]));
        assert_eq!((w0.one_line(), w0.length()), (vec![3, 2, 1], 3));
    }

    #[test]
    fn wall_factorization_examples() {
        let small = par(3, &[]);
        let big = par(3, &[1]);
        let e = Permutation::identity(3);
        assert_eq!(factor_through_wall(&e, &small, &big).unwrap(), (e.clone(), e.clone()));
        assert_eq!(factor_through_wall(&p(3, "s1"), &small, &big).unwrap(), (e.clone(), p(3, "s1")));
        assert_eq!(
            factor_through_wall(&p(3, "s2*s1"), &small, &big).unwrap(),
            (p(3, "s2"), p(3, "s1"))
        );
        assert!(factor_through_wall(&p(3, "s1"), &big, &big).is_err());
    }

    #[test]
    fn completion_examples() {
        let wq = par(2, &[1]);
        let x = lemma10_completion(&Permutation::identity(2), &wq, &par(2, &[]), &par(2, &[])).unwrap();
        assert_eq!(x, p(2, "s1"));
        let x = lemma10_completion(&p(3, "s2"), &par(3, &[1]), &par(3, &[]), &par(3, &[])).unwrap();
        assert_eq!(x, p(3, "s1"));
        let already = p(3, "s1*s2");
        let x = lemma10_completion(&already, &par(3, &[1]), &par(3, &[]), &par(3, &[])).unwrap();
        assert!(x.is_identity());
    }

    #[test]
    fn young_subgroup_blocks() {
        let y = ParabolicSubgroup::young(&[2, 1, 3]);
        assert_eq!(y.generators().collect::<Vec<_>>(), vec![1, 4, 5]);
        assert_eq!(y.blocks(), vec![(1, 2), (3, 3), (4, 6)]);
        assert_eq!(y.order(), 12);
    }
}
