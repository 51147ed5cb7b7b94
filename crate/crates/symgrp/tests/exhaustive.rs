use std::collections::HashSet;

use proptest::prelude::*;
use symgrp::*;

fn all_parabolics(n: usize) -> Vec<ParabolicSubgroup> {
    ParabolicSubgroup::full(n).sub_parabolics()
}

/// Subword criterion: `u <= w` iff some subword of a reduced word of `w` multiplies to `u`.
fn bruhat_by_subwords(u: &Permutation, w: &Permutation) -> bool {
    let word = w.reduced_word();
    let n = w.n();
    (0u32..1 << word.len()).any(|mask| {
        let sub: Vec<usize> =
            word.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect();
        Permutation::from_word(n, &sub).unwrap() == *u
    })
}

#[test]
fn bruhat_matches_subword_oracle() {
    for n in 1..=4 {
        let all = all_permutations(n);
        for u in &all {
            for w in &all {
                assert_eq!(u.bruhat_leq(w).unwrap(), bruhat_by_subwords(u, w), "{u} {w}");
            }
        }
    }
}

#[test]
fn reduced_words_realize_length() {
    for n in 1..=5 {
        for w in all_permutations(n) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(n, &word).unwrap(), w);
            assert_eq!(Permutation::parse(n, &w.word_string()).unwrap(), w);
            assert_eq!(Permutation::parse(n, &w.to_string()).unwrap(), w);
        }
    }
}

#[test]
fn unique_left_factorization_with_additive_lengths() {
    for n in 1..=5 {
        let all = all_permutations(n);
        for p in all_parabolics(n) {
            let reps = shortest_coset_reps(&p);
            assert_eq!(reps.len(), all.len() / p.order());
            let elems = p.elements();
            assert_eq!(elems.len(), p.order());
            let mut seen = HashSet::new();
            for x in &elems {
                for r in &reps {
                    let w = x.compose(r).unwrap();
                    assert_eq!(w.length(), x.length() + r.length());
                    assert!(seen.insert(w));
                }
            }
            assert_eq!(seen.len(), all.len());
            let inter: Vec<_> = reps.iter().filter(|r| p.contains(r)).collect();
            assert_eq!(inter.len(), 1);
            assert!(inter[0].is_identity());
            let w0 = longest_element(&p);
            assert!(elems.iter().all(|x| x.length() <= w0.length()));
            assert_eq!(elems.iter().filter(|x| x.length() == w0.length()).count(), 1);
        }
    }
}

#[test]
fn wall_factorization_roundtrip() {
    for n in 1..=5 {
        let parabolics = all_parabolics(n);
        for small in &parabolics {
            for big in parabolics.iter().filter(|b| small.is_subgroup_of(b)) {
                for w in shortest_right_coset_reps(small) {
                    let (ws, x) = factor_through_wall(&w, small, big).unwrap();
                    assert_eq!(ws.compose(&x).unwrap(), w);
                    assert!(big.is_shortest_right_rep(&ws));
                    assert!(big.contains(&x) && small.is_shortest_right_rep(&x));
                    assert_eq!(w.length(), ws.length() + x.length());
                }
            }
        }
    }
}

#[test]
fn completion_is_unique_when_it_exists() {
    // For each w in Λ^p_q'(λ) with W_q' ⊆ W_q, the completion exists (n <= 4).
    for n in 1..=4 {
        let parabolics = all_parabolics(n);
        for wq in &parabolics {
            for wp in parabolics.iter().filter(|p| p.commutes_with(wq)) {
                let stab = ParabolicSubgroup::trivial(n);
                for wq_small in wq.sub_parabolics() {
                    for w in all_permutations(n) {
                        if in_lambda(&w, &wq_small, wp, &stab) {
                            let x = lemma10_completion(&w, wq, wp, &stab).unwrap();
                            assert!(wq.contains(&x));
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn inverse_and_compose(seed in 0usize..120, other in 0usize..120) {
        let all = all_permutations(5);
        let (u, w) = (&all[seed], &all[other]);
        prop_assert!(u.compose(&u.inverse()).unwrap().is_identity());
        prop_assert_eq!(u.length(), u.inverse().length());
        let uw = u.compose(w).unwrap();
        prop_assert_eq!(uw.inverse(), w.inverse().compose(&u.inverse()).unwrap());
        prop_assert_eq!(u.bruhat_leq(w).unwrap(), u.inverse().bruhat_leq(&w.inverse()).unwrap());
    }
}
