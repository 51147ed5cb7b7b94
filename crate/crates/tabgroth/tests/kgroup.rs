use qarith::{BigInt, RationalFunction};
use symgrp::{all_permutations, Permutation};
use tabgroth::checks::*;
use tabgroth::*;
use uqrep::{canonical_basis, Bits, Composition, TensorVector};

fn comp(s: &str) -> Composition {
    s.parse().unwrap()
}

fn bits(s: &str) -> Bits {
    s.parse().unwrap()
}

fn rf(s: &str) -> RationalFunction {
    s.parse().unwrap()
}

fn perm(n: usize, s: &str) -> Permutation {
    Permutation::parse(n, s).unwrap()
}

fn v(c: &str, e: &str) -> TensorVector {
    TensorVector::standard(&comp(c), &bits(e)).unwrap()
}

fn comps_up_to(n: u32) -> Vec<Composition> {
    (1..=n).flat_map(Composition::all_of).collect()
}

fn entry(m: &KMatrix, target: &Permutation, source: &Permutation) -> RationalFunction {
    m.matrix.get(m.target.position(target).unwrap(), m.source.position(source).unwrap()).clone()
}

#[test]
fn class_vector_examples() {
    let e2 = Permutation::identity(2);
    let x = class_vector(&e2, &comp("1,1"), 1, ClassKind::ProperStandard).unwrap();
    assert_eq!(x.vector(), &v("1,1", "01"));
    let w = &enumerate_lambda(&comp("2"), 2)[0];
    assert_eq!(class_vector(w, &comp("2"), 2, ClassKind::Standard).unwrap().vector(), &v("2", "0"));
    assert_eq!(class_vector(w, &comp("2"), 2, ClassKind::ProperStandard).unwrap().vector(), &v("2", "0"));
    let s1 = perm(2, "s1");
    let proj = class_vector(&s1, &comp("1,1"), 1, ClassKind::Projective).unwrap();
    assert_eq!(proj.to_string(), "v[10] + q*v[01]");
    assert!(matches!(
        class_vector(&e2, &comp("1,1"), 2, ClassKind::Standard),
        Err(TabError::NotInLambda { .. })
    ));
}

#[test]
fn kgroup_vectors_live_in_one_weight_space() {
    assert!(KGroupVector::new(v("1,1", "01"), 1).is_ok());
    assert!(KGroupVector::new(v("1,1", "01"), 2).is_err());
    let mixed = v("1,1", "01").add(&v("1,1", "11")).unwrap();
    assert!(KGroupVector::new(mixed, 1).is_err());
}

/// `Σ_{x ∈ S_k} q^{2(l(w_0) - l(x))}`, summed over the group directly.
fn factorial_by_lengths(k: usize) -> RationalFunction {
    let top = k * k.saturating_sub(1) / 2;
    let mut s = RationalFunction::zero();
    for x in all_permutations(k.max(1)).into_iter().filter(|_| k > 0) {
        s += &RationalFunction::q_pow(2 * (top - x.length()) as i64);
    }
    if k == 0 {
        s = RationalFunction::one();
    }
    s
}

#[test]
fn standard_classes_are_factorial_multiples_of_proper_ones() {
    for n in 1..=4 {
        let a = Composition::regular(n);
        for k in 0..=n {
            let c = factorial_by_lengths(k);
            for w in enumerate_lambda(&a, k) {
                let st = class_vector(&w, &a, k, ClassKind::Standard).unwrap().into_vector();
                let pr = class_vector(&w, &a, k, ClassKind::ProperStandard).unwrap().into_vector();
                assert_eq!(st, pr.scale(&c));
            }
            assert!(standard_is_factorial_multiple(n, k).unwrap());
        }
    }
}

#[test]
fn dual_pairings() {
    for a in comps_up_to(4) {
        for k in 0..=a.n() as usize {
            let b = KBasis::new(&a, k);
            for i in 0..b.len() {
                for j in 0..b.len() {
                    let delta = if i == j { RationalFunction::one() } else { RationalFunction::zero() };
                    let p = b.vector(i, ClassKind::Projective).unwrap();
                    let s = b.vector(j, ClassKind::Simple).unwrap();
                    assert_eq!(p.form(&s).unwrap(), delta);
                    let st = b.vector(i, ClassKind::Standard).unwrap();
                    let pr = b.vector(j, ClassKind::ProperStandard).unwrap();
                    assert_eq!(st.form(&pr).unwrap(), delta);
                }
            }
        }
    }
}

#[test]
fn coordinates_invert_combinations() {
    let a = comp("2,1,1");
    for k in 1..=4 {
        let b = KBasis::new(&a, k);
        for kind in [ClassKind::Standard, ClassKind::ProperStandard, ClassKind::Projective, ClassKind::Simple] {
            let coords: Vec<RationalFunction> = (0..b.len()).map(|j| RationalFunction::q_pow(j as i64 - 1)).collect();
            let x = b.combine(&coords, kind).unwrap();
            assert_eq!(b.coordinates(&x, kind).unwrap(), coords, "{kind}");
        }
    }
}

#[test]
fn onto_wall_examples() {
    let a = comp("1,1");
    let m = translate_onto_wall(&a, 1, 1).unwrap();
    let w0 = &m.target.labels[0];
    assert_eq!(entry(&m, w0, &Permutation::identity(2)), RationalFunction::one());
    assert_eq!(entry(&m, w0, &perm(2, "s1")), rf("q^-1"));
    // both values in the row: the only class of weight 0 dies
    let dead = translate_onto_wall(&a, 1, 0).unwrap();
    assert_eq!((dead.source.len(), dead.target.len()), (1, 0));
    let m = translate_onto_wall(&comp("2,1"), 1, 3).unwrap();
    assert_eq!(m.matrix.get(0, 0), &rf("q^-2"));
}

#[test]
fn out_of_wall_examples() {
    let a = comp("1,1");
    let m = translate_out_of_wall(&a, 1, 1).unwrap();
    let src = &m.source.labels[0];
    assert_eq!(entry(&m, &perm(2, "s1"), src), RationalFunction::one());
    assert_eq!(entry(&m, &Permutation::identity(2), src), RationalFunction::q());
    let m = translate_out_of_wall(&a, 1, 2).unwrap();
    assert_eq!(m.target.labels, vec![perm(2, "s1")]);
    assert_eq!(m.matrix.get(0, 0), &rf("1 + q^2"));
}

#[test]
fn theorem1_examples() {
    assert!(theorem1_check(&comp("1,1"), 1).unwrap());
    assert!(theorem1_check(&comp("1,1,1"), 1).unwrap());
    assert!(theorem1_check(&comp("1,1,1"), 2).unwrap());
    assert!(theorem1_check(&comp("2,1"), 1).unwrap());
    assert!(matches!(theorem1_check(&comp("2,1"), 2), Err(TabError::BadPosition { .. })));
}

#[test]
fn theorem1_for_all_small_compositions() {
    for a in comps_up_to(5) {
        for i in 1..a.len() {
            for k in 0..=a.n() as usize {
                let t = onto_wall_by_tableaux(&a, i, k).unwrap();
                assert_eq!(t, onto_wall_by_webs(&a, i, k).unwrap(), "onto {a} {i} {k}");
                assert_eq!(t, onto_wall_by_cosets(&a, i, k).unwrap(), "cosets {a} {i} {k}");
                assert_eq!(
                    out_of_wall_by_tableaux(&a, i, k).unwrap(),
                    out_of_wall_by_webs(&a, i, k).unwrap(),
                    "out {a} {i} {k}"
                );
            }
        }
    }
}

#[test]
fn wall_element_has_product_length() {
    for a in comps_up_to(5) {
        for i in 1..a.len() {
            let y0 = wall_element(&a, i).unwrap();
            assert_eq!(y0.length() as u32, a.part(i) * a.part(i + 1));
            assert!(stabilizer(&a).is_shortest_right_rep(&y0));
        }
    }
}

#[test]
fn projective_and_simple_examples() {
    let a = comp("1,1");
    let w = &enumerate_lambda(&comp("2"), 1)[0];
    let q = translate_projective(&a, 1, 1, w).unwrap();
    assert_eq!(q.vector(), &canonical_basis(&a, &bits("10")).unwrap());
    assert!(translate_simple(&a, 1, 1, &Permutation::identity(2)).unwrap().vector().is_zero());
    let s = translate_simple(&a, 1, 1, &perm(2, "s1")).unwrap();
    let target = class_vector(w, &comp("2"), 1, ClassKind::Simple).unwrap();
    assert_eq!(s.vector(), &target.vector().scale(&rf("q^-1")));
}

#[test]
fn projective_and_simple_rules_match_the_web_maps() {
    for a in comps_up_to(4) {
        for i in 1..a.len() {
            let merged = a.merged(i).unwrap();
            for k in 0..=a.n() as usize {
                for w in enumerate_lambda(&merged, k) {
                    let p = class_vector(&w, &merged, k, ClassKind::Projective).unwrap().into_vector();
                    let image = p.phi_split(i, a.part(i)).unwrap();
                    assert_eq!(&image, translate_projective(&a, i, k, &w).unwrap().vector(), "{a} {i} {w}");
                }
                for w in enumerate_lambda(&a, k) {
                    let s = class_vector(&w, &a, k, ClassKind::Simple).unwrap().into_vector();
                    assert_eq!(&s.phi_merge(i).unwrap(), translate_simple(&a, i, k, &w).unwrap().vector(), "{a} {i} {w}");
                }
            }
        }
    }
}

#[test]
fn translation_matrices_in_other_bases_are_consistent() {
    let a = comp("1,2,1");
    for i in 1..a.len() {
        for k in 0..=4 {
            let out = translation_matrix(&a, i, k, Direction::Out, ClassKind::Projective).unwrap();
            for (j, w) in out.source.labels.iter().enumerate() {
                let expected = translate_projective(&a, i, k, w).unwrap();
                let got = out.target.combine(&out.matrix.column(j), ClassKind::Projective).unwrap();
                assert_eq!(&got, expected.vector());
            }
            let onto = translation_matrix(&a, i, k, Direction::Onto, ClassKind::Simple).unwrap();
            for (j, w) in onto.source.labels.iter().enumerate() {
                let got = onto.target.combine(&onto.matrix.column(j), ClassKind::Simple).unwrap();
                assert_eq!(&got, translate_simple(&a, i, k, w).unwrap().vector());
            }
        }
    }
}

#[test]
fn f_on_projectives_example() {
    let a = comp("1,1");
    let s1 = perm(2, "s1");
    assert_eq!(enumerate_lambda(&a, 2), vec![s1.clone()]);
    let top = class_vector(&s1, &a, 2, ClassKind::Projective).unwrap();
    assert_eq!(top.vector(), &v("1,1", "00"));
    let image = top.vector().act_f();
    assert_eq!(image, class_vector(&s1, &a, 1, ClassKind::Projective).unwrap().into_vector());
    assert_eq!(standard_label(&s1, &a, 1).unwrap(), bits("10"));
}

#[test]
fn e_and_f_basis_rules_square_zero_and_commutation() {
    for a in comps_up_to(4) {
        for k in 0..a.n() as usize {
            assert!(f_on_projectives_holds(&a, k).unwrap(), "F {a} {k}");
            assert!(e_on_simples_holds(&a, k).unwrap(), "E {a} {k}");
        }
        assert!(e_f_square_to_zero(&a).unwrap());
        for i in 1..a.len() {
            assert!(translations_commute_with_e_f(&a, i).unwrap(), "{a} {i}");
        }
    }
}

#[test]
fn e_and_f_matrices_on_two_strands() {
    let a = comp("1,1");
    let f = kgroup_f(&a, 1).unwrap();
    // [Δ̄] of weight 2 is v00 / [2]_0; F v00 = v10 + q v01
    let col = f.matrix.column(0);
    let scale = rf("1 + q^2").inv().unwrap();
    assert_eq!(col[f.target.position_of_bits(&bits("10")).unwrap()], scale);
    assert_eq!(col[f.target.position_of_bits(&bits("01")).unwrap()], &scale * &RationalFunction::q());
    assert!(kgroup_e(&a, 2).is_err());
}

#[test]
fn hom_dimension_examples() {
    let (e, s1) = (Permutation::identity(2), perm(2, "s1"));
    assert_eq!(hom_dim(&e, &e, 2, 1).unwrap(), BigInt::from(1));
    assert_eq!(hom_dim(&e, &s1, 2, 1).unwrap(), BigInt::from(1));
    assert_eq!(hom_dim(&s1, &s1, 2, 1).unwrap(), BigInt::from(2));
    let top = &enumerate_lambda(&Composition::regular(3), 3)[0];
    assert_eq!(hom_dim(top, top, 3, 3).unwrap(), hom_dim_by_form(top, top, 3, 3).unwrap());
}

#[test]
fn hom_dimensions_agree_with_the_form() {
    for n in 1..=4 {
        for k in 0..=n {
            assert!(hom_dims_agree(n, k).unwrap(), "{n} {k}");
        }
    }
}

#[test]
fn basis_sizes_sum_to_the_full_space() {
    for a in comps_up_to(5) {
        let total: usize = (0..=a.n() as usize).map(|k| KBasis::new(&a, k).len()).sum();
        assert_eq!(total, 1 << a.len());
    }
}
