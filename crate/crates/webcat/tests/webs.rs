use qarith::{quantum_binom, Matrix, RationalFunction};
use uqrep::{canonical_basis, operator_matrix, schur_weyl_matrix, Bits, Composition, TensorVector};
use webcat::*;

fn comp(s: &str) -> Composition {
    s.parse().unwrap()
}

fn bits(s: &str) -> Bits {
    s.parse().unwrap()
}

fn rf(s: &str) -> RationalFunction {
    s.parse().unwrap()
}

fn comps_up_to(n: u32) -> Vec<Composition> {
    (1..=n).flat_map(Composition::all_of).collect()
}

fn elementary_webs(c: &Composition) -> Vec<Web> {
    let mut out = Vec::new();
    for i in 1..c.len() {
        out.push(Web::merge(c, i).unwrap());
    }
    for i in 1..=c.len() {
        for left in 1..c.part(i) {
            out.push(Web::split(c, i, left).unwrap());
        }
    }
    out
}

/// Webs with at most `depth` slices starting at `c`.
fn webs_up_to_depth(c: &Composition, depth: usize) -> Vec<Web> {
    let mut out = vec![Web::identity(c)];
    let mut frontier = out.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for e in elementary_webs(w.target()) {
                next.push(Web::compose(&e, w).unwrap());
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn coefficient(w: &Web, bottom: &Bits, top: &Bits) -> RationalFunction {
    matrix_coefficient(&LabeledWebDiagram::new(w.clone(), bottom.clone(), Some(top.clone())).unwrap()).unwrap()
}

#[test]
fn local_rule_examples() {
    for a in 1..=3 {
        for b in 1..=3 {
            let m = Web::merge(&Composition::new(vec![a, b]).unwrap(), 1).unwrap();
            let binom = |n, k| RationalFunction::from(quantum_binom(n, k).unwrap());
            assert_eq!(coefficient(&m, &bits("01"), &bits("1")), binom(a + b - 1, a));
            let expected = &RationalFunction::q_pow(-(b as i64)) * &binom(a + b - 1, b);
            assert_eq!(coefficient(&m, &bits("10"), &bits("1")), expected);
            assert!(coefficient(&m, &bits("11"), &bits("1")).is_zero());
        }
    }
}

#[test]
fn identity_and_merge_matrices() {
    let c = comp("2,1");
    assert_eq!(evaluate_matrix(&Web::identity(&c)), Matrix::identity(4));
    let m = evaluate_matrix(&Web::merge(&comp("1,1"), 1).unwrap());
    assert_eq!(m.get(0, 0), &rf("q + q^-1"));
}

#[test]
fn path_sums_match_matrices_on_elementary_webs() {
    for c in comps_up_to(3) {
        for w in elementary_webs(&c) {
            let m = evaluate_matrix(&w);
            for (col, eta) in c.all_etas().iter().enumerate() {
                for (row, gamma) in w.target().all_etas().iter().enumerate() {
                    assert_eq!(&coefficient(&w, eta, gamma), m.get(row, col), "{w} {eta} {gamma}");
                }
            }
        }
    }
}

#[test]
fn path_sums_match_matrices_on_composite_webs() {
    for c in comps_up_to(4) {
        for w in webs_up_to_depth(&c, 3) {
            let m = evaluate_matrix(&w);
            for (col, eta) in c.all_etas().iter().enumerate() {
                for (row, gamma) in w.target().all_etas().iter().enumerate() {
                    assert_eq!(&coefficient(&w, eta, gamma), m.get(row, col), "{w}");
                }
            }
        }
    }
}

#[test]
fn evaluation_agrees_with_the_representation_maps() {
    for c in comps_up_to(4) {
        for w in webs_up_to_depth(&c, 2) {
            let via_maps = operator_matrix(&c, w.target(), |v| Ok(apply_web(&w, v).unwrap())).unwrap();
            assert_eq!(evaluate_matrix(&w), via_maps, "{w}");
        }
    }
}

#[test]
fn functoriality() {
    for c in comps_up_to(4) {
        for lower in webs_up_to_depth(&c, 1) {
            for upper in webs_up_to_depth(lower.target(), 1) {
                let w = Web::compose(&upper, &lower).unwrap();
                assert_eq!(evaluate_matrix(&w), &evaluate_matrix(&upper) * &evaluate_matrix(&lower));
            }
        }
    }
    for l in comps_up_to(2) {
        for r in comps_up_to(2) {
            for wl in webs_up_to_depth(&l, 1) {
                for wr in webs_up_to_depth(&r, 1) {
                    let t = wl.tensor(&wr);
                    assert_eq!(evaluate_matrix(&t), evaluate_matrix(&wl).kron(&evaluate_matrix(&wr)), "{t}");
                }
            }
        }
    }
}

#[test]
fn webs_are_equivariant() {
    for c in comps_up_to(4) {
        for w in webs_up_to_depth(&c, 2) {
            for eta in c.all_etas() {
                let x = TensorVector::standard(&c, &eta).unwrap();
                let f = |v: &TensorVector| apply_web(&w, v).unwrap();
                assert_eq!(f(&x.act_e()), f(&x).act_e());
                assert_eq!(f(&x.act_f()), f(&x).act_f());
                assert_eq!(f(&x.act_k()), f(&x).act_k());
            }
        }
    }
}

#[test]
fn defining_relations_hold() {
    let rels = all_relations(5);
    assert!(rels.iter().any(|r| matches!(r, Relation::SquareSwitch { n: 5, pos: 3 })));
    for rel in rels {
        assert!(check_relation(&rel).unwrap(), "{rel:?}");
    }
    assert!(check_relation(&Relation::Digon { a: 1, b: 1 }).unwrap());
    assert!(check_relation(&Relation::Associativity { a: 1, b: 1, c: 1, split: false }).unwrap());
    assert!(check_relation(&Relation::SquareSwitch { n: 3, pos: 1 }).unwrap());
    assert!(check_relation(&Relation::SquareSwitch { n: 3, pos: 2 }).is_err());
}

#[test]
fn full_bundle_is_a_factorial() {
    for n in 1..=4 {
        let ones = Composition::regular(n);
        let w = Web::compose(&Web::merger(&ones), &Web::splitter(&ones)).unwrap();
        let (lhs, rhs) = relation_sides(&Relation::FullBundle { n }).unwrap();
        assert_eq!(evaluate_matrix(&w), lhs);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn square_switch_needs_its_correction_terms() {
    // C1 C2 C1 alone differs from C2 C1 C2 on three strands.
    let ones = Composition::regular(3);
    let x = Web::parse_word(&ones, "m1.s1").unwrap();
    let y = Web::parse_word(&ones, "m2.s2").unwrap();
    let xyx = Web::compose(&x, &Web::compose(&y, &x).unwrap()).unwrap();
    let yxy = Web::compose(&y, &Web::compose(&x, &y).unwrap()).unwrap();
    assert_ne!(evaluate_matrix(&xyx), evaluate_matrix(&yxy));
}

#[test]
fn split_after_merge_is_the_hecke_generator_plus_q() {
    for n in 2..=4 {
        for i in 1..n {
            let w = Web::from_slices(&Composition::regular(n), vec![Slice::Merge { i }, Slice::Split { i, left: 1 }])
                .unwrap();
            let h = schur_weyl_matrix(n, i).unwrap();
            assert_eq!(evaluate_matrix(&w), &h + &Matrix::scalar(1 << n, &RationalFunction::q()));
        }
    }
}

#[test]
fn canonical_diagram_examples() {
    let d = canonical_basis_diagram(&comp("1,1"), &bits("10")).unwrap();
    assert_eq!(d.web.source(), &comp("2"));
    assert_eq!(d.bottom, bits("1"));
    assert_eq!(evaluate_diagram(&d).unwrap().to_string(), "v[10] + q*v[01]");
    let d = canonical_basis_diagram(&comp("2,1,3"), &bits("011")).unwrap();
    assert!(d.web.slices().is_empty());
    assert_eq!(d.bottom, bits("011"));
    let c = comp("3,1,4,4,2,1,1");
    let eta = bits("0100101");
    let d = canonical_basis_diagram(&c, &eta).unwrap();
    assert_eq!(d.web.source(), &comp("3,9,3,1"));
    assert_eq!(d.bottom, bits("0111"));
    assert_eq!(evaluate_diagram(&d).unwrap(), canonical_basis(&c, &eta).unwrap());
}

#[test]
fn canonical_diagrams_evaluate_to_the_canonical_basis() {
    for c in comps_up_to(5) {
        for eta in c.all_etas() {
            let d = canonical_basis_diagram(&c, &eta).unwrap();
            let x = evaluate_diagram(&d).unwrap();
            assert_eq!(x, canonical_basis(&c, &eta).unwrap(), "{c} {eta}");
            assert_eq!(x.bar(), x);
            let r = canonical_basis_diagram_right_nested(&c, &eta).unwrap();
            assert_eq!(evaluate_diagram(&r).unwrap(), x);
        }
    }
}

#[test]
fn joining_order_does_not_matter_for_a_nested_run() {
    let c = comp("2,1,3,1");
    let eta = bits("1000");
    let left = canonical_basis_diagram(&c, &eta).unwrap();
    let right = canonical_basis_diagram_right_nested(&c, &eta).unwrap();
    assert_ne!(left.web, right.web);
    assert_eq!(evaluate_diagram(&left).unwrap(), evaluate_diagram(&right).unwrap());
}

#[test]
fn diagram_json_roundtrip() {
    let d = canonical_basis_diagram(&comp("1,2,1"), &bits("100")).unwrap();
    let js = serde_json::to_string(&d).unwrap();
    let back: LabeledWebDiagram = serde_json::from_str(&js).unwrap();
    assert_eq!(back, d);
}
