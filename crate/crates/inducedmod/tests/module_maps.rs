use hecke::{kl_basis_element, kl_generator};
use inducedmod::*;
use qarith::{LaurentPoly, RationalFunction};
use symgrp::{all_permutations, ParabolicSubgroup, Permutation};

fn p(n: usize, s: &str) -> Permutation {
    Permutation::parse(n, s).unwrap()
}

fn lp(s: &str) -> RationalFunction {
    RationalFunction::from(s.parse::<LaurentPoly>().unwrap())
}

fn module(n: usize, sign: &[usize], triv: &[usize]) -> InducedModule {
    InducedModule::from_generators(n, sign, triv).unwrap()
}

/// All modules with commuting parts in S_n.
fn all_modules(n: usize) -> Vec<InducedModule> {
    let subs = ParabolicSubgroup::full(n).sub_parabolics();
    let mut out = Vec::new();
    for a in &subs {
        for b in &subs {
            if a.commutes_with(b) {
                out.push(InducedModule::new(a.clone(), b.clone()).unwrap());
            }
        }
    }
    out
}

#[test]
fn generator_action_examples() {
    let m = module(2, &[1], &[]);
    let ne = m.standard(&Permutation::identity(2)).unwrap();
    assert_eq!(ne.act_generator(1).unwrap(), ne.scale(&lp("-q")));
    let m = module(2, &[], &[1]);
    let ne = m.standard(&Permutation::identity(2)).unwrap();
    assert_eq!(ne.act_generator(1).unwrap(), ne.scale(&lp("q^-1")));
    let m = module(2, &[], &[]);
    let ns = m.standard(&p(2, "s1")).unwrap();
    let ne = m.standard(&Permutation::identity(2)).unwrap();
    assert_eq!(ns.act_generator(1).unwrap(), ne.add(&ns.scale(&lp("q^-1 - q"))).unwrap());
}

#[test]
fn construction_checks() {
    assert!(matches!(InducedModule::from_generators(3, &[1], &[2]), Err(ModError::NotCommuting)));
    for n in 1..=4 {
        for m in all_modules(n) {
            let order = m.sign_part().order() * m.triv_part().order();
            let fact: usize = (1..=n).product();
            assert_eq!(m.dim(), fact / order);
        }
    }
}

#[test]
fn action_satisfies_hecke_relations() {
    for n in 2..=4 {
        for m in all_modules(n) {
            for w in m.basis_index() {
                let x = m.standard(w).unwrap();
                for i in 1..n {
                    let twice = x.act_generator(i).unwrap().act_generator(i).unwrap();
                    let rhs = x.act_generator(i).unwrap().scale(&hecke::quadratic_coeff()).add(&x).unwrap();
                    assert_eq!(twice, rhs, "{m:?} {w} {i}");
                    if i + 1 < n {
                        let a = x.act_generator(i).unwrap().act_generator(i + 1).unwrap().act_generator(i).unwrap();
                        let b = x.act_generator(i + 1).unwrap().act_generator(i).unwrap().act_generator(i + 1).unwrap();
                        assert_eq!(a, b);
                    }
                    for j in i + 2..n {
                        let a = x.act_generator(i).unwrap().act_generator(j).unwrap();
                        let b = x.act_generator(j).unwrap().act_generator(i).unwrap();
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }
}

#[test]
fn bar_is_an_antilinear_compatible_involution() {
    for n in 2..=4 {
        for m in all_modules(n) {
            for w in m.basis_index() {
                let x = m.standard(w).unwrap().scale(&lp("q + 2*q^3"));
                assert_eq!(x.bar().bar(), x);
                for i in 1..n {
                    // bar(x H_i) = bar(x) bar(H_i) = bar(x) (H_i + q - q^-1)
                    let lhs = x.act_generator(i).unwrap().bar();
                    let b = x.bar();
                    let rhs = b.act_generator(i).unwrap().add(&b.scale(&lp("q - q^-1"))).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn canonical_basis_examples() {
    let m = module(2, &[], &[]);
    let e = Permutation::identity(2);
    assert_eq!(m.canonical_basis_element(&e).unwrap(), m.standard(&e).unwrap());
    let c = m.canonical_basis_element(&p(2, "s1")).unwrap();
    let expected = m.standard(&p(2, "s1")).unwrap().add(&m.standard(&e).unwrap().scale(&lp("q"))).unwrap();
    assert_eq!(c, expected);
    let m = module(3, &[], &[]);
    let c = m.canonical_basis_element(&p(3, "s1*s2*s1")).unwrap();
    for y in all_permutations(3) {
        assert_eq!(c.coeff(&y), RationalFunction::q_pow(3 - y.length() as i64));
    }
}

#[test]
fn canonical_basis_properties() {
    for n in 1..=4 {
        for m in all_modules(n) {
            for w in m.basis_index() {
                let c = m.canonical_basis_element(w).unwrap();
                assert_eq!(c.bar(), c, "{m:?} {w}");
                assert_eq!(c.coeff(w), RationalFunction::one());
                for (y, coeff) in c.support().iter() {
                    if y != w {
                        assert!(y.bruhat_leq(w).unwrap());
                        assert!(coeff.as_laurent().unwrap().in_q_zq());
                    }
                }
            }
        }
    }
}

#[test]
fn regular_module_matches_hecke_algebra() {
    for n in 1..=4 {
        let m = InducedModule::regular(n);
        for w in all_permutations(n) {
            let c = m.canonical_basis_element(&w).unwrap();
            assert_eq!(c.support(), kl_basis_element(&w).support());
        }
    }
}

#[test]
fn canonical_times_generator_is_integral() {
    for n in 2..=4 {
        for m in all_modules(n) {
            for w in m.basis_index() {
                for i in 1..n {
                    let ws = w.mul_simple(i).unwrap();
                    if !m.is_basis_label(&ws) || ws.length() < w.length() {
                        continue;
                    }
                    let x = m.canonical_basis_element(w).unwrap().act_hecke(&kl_generator(n, i).unwrap()).unwrap();
                    let coords = m.to_canonical_coordinates(&x);
                    assert_eq!(coords.coeff(&ws), RationalFunction::one());
                    for (_, c) in coords.iter() {
                        let poly = c.as_laurent().unwrap();
                        assert_eq!((poly.min_exp(), poly.max_exp()), (Some(0), Some(0)));
                    }
                }
            }
        }
    }
}

#[test]
fn map_examples() {
    let big = module(2, &[], &[1]);
    let small = module(2, &[], &[]);
    let e = Permutation::identity(2);
    let s1 = p(2, "s1");
    let ne = big.standard(&e).unwrap();
    let img = map_i(&big, &small, &ne).unwrap();
    let expected = small.standard(&e).unwrap().scale(&lp("q")).add(&small.standard(&s1).unwrap()).unwrap();
    assert_eq!(img, expected);
    assert_eq!(img, small.canonical_basis_element(&s1).unwrap());
    let back = map_q(&small, &big, &small.standard(&e).unwrap()).unwrap();
    assert_eq!(back, ne.scale(&lp("q^-1 + q").inv().unwrap()));
    assert_eq!(map_i(&big, &big, &ne).unwrap(), ne);

    let sign = module(2, &[1], &[]);
    let ne = sign.standard(&e).unwrap();
    let img = map_j(&sign, &small, &ne).unwrap();
    let expected = small.standard(&e).unwrap().sub(&small.standard(&s1).unwrap().scale(&lp("q"))).unwrap();
    assert_eq!(img, expected);
    let zs = map_z(&small, &sign, &small.canonical_basis_element(&s1).unwrap()).unwrap();
    assert!(zs.is_zero());
    let ze = map_z(&small, &sign, &small.canonical_basis_element(&e).unwrap()).unwrap();
    assert_eq!(ze, sign.canonical_basis_element(&e).unwrap());
    assert!(map_i(&small, &big, &small.standard(&e).unwrap()).is_err());
}

#[test]
fn json_roundtrip() {
    let m = module(4, &[3], &[1]);
    let x = m.canonical_basis_element(m.basis_index().last().unwrap()).unwrap();
    let js = serde_json::to_string(&ModuleElementJson::from(&x)).unwrap();
    let back: ModuleElementJson = serde_json::from_str(&js).unwrap();
    assert_eq!(back.into_element().unwrap(), x);
}

/// Pairs of modules (big, small) differing in the trivial part, W_small ⊆ W_big.
fn triv_pairs(n: usize) -> Vec<(InducedModule, InducedModule)> {
    let mut out = Vec::new();
    for m in all_modules(n) {
        for small in m.triv_part().sub_parabolics() {
            let s = InducedModule::new(m.sign_part().clone(), small).unwrap();
            out.push((m.clone(), s));
        }
    }
    out
}

/// Pairs of modules (big, small) differing in the sign part.
fn sign_pairs(n: usize) -> Vec<(InducedModule, InducedModule)> {
    let mut out = Vec::new();
    for m in all_modules(n) {
        for small in m.sign_part().sub_parabolics() {
            let s = InducedModule::new(small, m.triv_part().clone()).unwrap();
            out.push((m.clone(), s));
        }
    }
    out
}

fn assert_equivariant(
    src: &InducedModule,
    f: impl Fn(&ModuleElement) -> ModuleElement,
) {
    for w in src.basis_index() {
        let x = src.standard(w).unwrap();
        for i in 1..src.n() {
            assert_eq!(f(&x.act_generator(i).unwrap()), f(&x).act_generator(i).unwrap());
        }
    }
}

#[test]
fn inclusion_and_left_inverse() {
    for n in 1..=4 {
        for (big, small) in triv_pairs(n) {
            let i_map = |x: &ModuleElement| map_i(&big, &small, x).unwrap();
            let q_map = |x: &ModuleElement| map_q(&small, &big, x).unwrap();
            assert_equivariant(&big, i_map);
            assert_equivariant(&small, q_map);
            let top = relative_longest(small.triv_part(), big.triv_part());
            for w in big.basis_index() {
                let x = big.standard(w).unwrap();
                assert_eq!(q_map(&i_map(&x)), x);
                assert_eq!(i_map(&x.bar()), i_map(&x).bar());
                let c = big.canonical_basis_element(w).unwrap();
                let target = top.compose(w).unwrap();
                assert_eq!(i_map(&c), small.canonical_basis_element(&target).unwrap());
            }
        }
    }
}

#[test]
fn inclusion_is_natural_in_chains() {
    for n in 1..=4 {
        for m in all_modules(n) {
            for mid in m.triv_part().sub_parabolics() {
                for low in mid.sub_parabolics() {
                    let mm = InducedModule::new(m.sign_part().clone(), mid.clone()).unwrap();
                    let ml = InducedModule::new(m.sign_part().clone(), low).unwrap();
                    for w in m.basis_index() {
                        let x = m.standard(w).unwrap();
                        let direct = map_i(&m, &ml, &x).unwrap();
                        let two_step = map_i(&mm, &ml, &map_i(&m, &mm, &x).unwrap()).unwrap();
                        assert_eq!(direct, two_step);
                    }
                }
            }
        }
    }
}

#[test]
fn sign_inclusion_and_quotient() {
    for n in 1..=4 {
        for (big, small) in sign_pairs(n) {
            let j_map = |x: &ModuleElement| map_j(&big, &small, x).unwrap();
            let z_map = |x: &ModuleElement| map_z(&small, &big, x).unwrap();
            assert_equivariant(&big, j_map);
            assert_equivariant(&small, z_map);
            let scalar = zj_scalar(small.sign_part(), big.sign_part());
            for w in big.basis_index() {
                let x = big.standard(w).unwrap();
                assert_eq!(z_map(&j_map(&x)), x.scale(&scalar));
            }
            for w in small.basis_index() {
                let x = small.standard(w).unwrap();
                assert_eq!(z_map(&x.bar()), z_map(&x).bar());
                let c = small.canonical_basis_element(w).unwrap();
                let expected = if big.is_basis_label(w) {
                    big.canonical_basis_element(w).unwrap()
                } else {
                    big.zero()
                };
                assert_eq!(z_map(&c), expected, "{big:?} {small:?} {w}");
            }
        }
    }
}
