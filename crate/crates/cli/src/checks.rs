//! Verification suites run by `check`. Each check enumerates every instance up to
//! the size bound and reports the first failing one.

use std::fmt;
use std::time::Instant;

use clap::ValueEnum;
use hecke::{kl_basis_element, quadratic_coeff, HeckeElement};
use inducedmod::{map_i, map_j, map_q, map_z, relative_longest, zj_scalar, InducedModule, ModuleElement};
use qarith::{quantum_binom, quantum_factorial0, quantum_int0, Matrix, RationalFunction};
use serde::{Deserialize, Serialize};
use symgrp::{all_permutations, ParabolicSubgroup};
use tabgroth::checks::{
    e_f_square_to_zero, e_on_simples_holds, f_on_projectives_holds, hom_dims_agree, standard_is_factorial_multiple,
    translations_commute_with_e_f,
};
use tabgroth::theorem1_check;
use uqrep::{
    act_on_bits, beta_sum, canonical_basis, operator_matrix, psi_iso, schur_weyl_h, schur_weyl_matrix,
    stl_generator_matrix, Bits, Composition, TensorVector,
};
use webcat::{
    all_relations, apply_web, canonical_basis_diagram, check_relation, evaluate_diagram, evaluate_matrix,
    matrix_coefficient, LabeledWebDiagram, Web,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Hecke,
    Stl,
    Webs,
    Theorem1,
    Adjunction,
    Efm,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Instance count on success, the first counterexample on failure.
    pub detail: String,
    pub millis: u128,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {} [{} ms]", self.name, self.detail, self.millis)
    }
}

type CheckResult = Result<usize, String>;

fn timed(name: &str, f: impl FnOnce() -> CheckResult) -> CheckOutcome {
    let start = Instant::now();
    let result = f();
    let millis = start.elapsed().as_millis();
    match result {
        Ok(count) => CheckOutcome { name: name.to_string(), passed: true, detail: format!("{count} instances"), millis },
        Err(detail) => CheckOutcome { name: name.to_string(), passed: false, detail, millis },
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

/// Runs one suite (or all of them) with every size bounded by `max_n`.
pub fn run_suite(suite: Suite, max_n: usize) -> Vec<CheckOutcome> {
    let m = max_n;
    match suite {
        Suite::Hecke => vec![
            timed("hecke relations on standard bases", || hecke_relations(m)),
            timed("Kazhdan-Lusztig basis properties", || kl_properties(m)),
            timed("induced module relations", || module_relations(m)),
            timed("induced module maps", || module_maps(m)),
        ],
        Suite::Stl => vec![
            timed("Schur-Weyl Hecke relations", || schur_weyl_relations(m)),
            timed("super Temperley-Lieb relations", || stl_relations(m)),
            timed("Schur-Weyl isomorphism intertwines", || psi_intertwines(m)),
            timed("canonical basis triple agreement", || canonical_triple(m)),
        ],
        Suite::Webs => vec![
            timed("web relations", || web_relations(m)),
            timed("path sums match web matrices", || path_sums(m)),
            timed("web matrices match representation maps", || webs_match_maps(m)),
            timed("canonical basis diagrams", || canonical_diagrams(m)),
        ],
        Suite::Theorem1 => vec![timed("tableau and web translations agree", || theorem1(m))],
        Suite::Adjunction => vec![
            timed("merge/split adjunction", || merge_split_adjunction(m)),
            timed("merge after split is a binomial", || digon_scalar(m)),
            timed("F/E adjunction", || f_e_adjunction(m)),
        ],
        Suite::Efm => vec![
            timed("E and F relations", || e_f_relations(m)),
            timed("merge/split equivariance", || equivariance(m)),
            timed("F on projectives, E' on simples", || kgroup_basis_rules(m)),
            timed("standard = [k]0! proper standard", || factorial_rule(m)),
            timed("E'E' = FF = 0 on classes", || kgroup_squares(m)),
            timed("translations commute with E', F", || translations_commute(m)),
            timed("Hom dimensions", || hom_dims(m)),
        ],
        Suite::All => [Suite::Hecke, Suite::Stl, Suite::Webs, Suite::Theorem1, Suite::Adjunction, Suite::Efm]
            .into_iter()
            .flat_map(|s| run_suite(s, max_n))
            .collect(),
    }
}

fn comps_up_to(n: usize) -> Vec<Composition> {
    (1..=n as u32).flat_map(Composition::all_of).collect()
}

fn rf(s: &str) -> RationalFunction {
    s.parse().expect("valid literal")
}

fn hecke_relations(max_n: usize) -> CheckResult {
    let mut count = 0;
    for n in 2..=max_n {
        for w in all_permutations(n) {
            let x = HeckeElement::standard(&w);
            let g = |y: &HeckeElement, i| y.mul_generator(i).map_err(err);
            for i in 1..n {
                let lhs = g(&g(&x, i)?, i)?;
                let rhs = g(&x, i)?.scale(&quadratic_coeff()).add(&x).map_err(err)?;
                ensure(lhs == rhs, || format!("quadratic relation fails at H{w} H{i}"))?;
                if i + 1 < n {
                    let l = g(&g(&g(&x, i)?, i + 1)?, i)?;
                    let r = g(&g(&g(&x, i + 1)?, i)?, i + 1)?;
                    ensure(l == r, || format!("braid relation fails at H{w}, s{i}"))?;
                }
                for j in i + 2..n {
                    ensure(g(&g(&x, i)?, j)? == g(&g(&x, j)?, i)?, || format!("s{i}, s{j} do not commute at {w}"))?;
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

fn kl_properties(max_n: usize) -> CheckResult {
    let mut count = 0;
    for n in 1..=max_n {
        for w in all_permutations(n) {
            let c = kl_basis_element(&w);
            ensure(c.bar() == c, || format!("C{w} is not bar invariant"))?;
            ensure(c.coeff(&w).is_one(), || format!("C{w} is not monic"))?;
            for (y, coeff) in c.support().iter() {
                if y == &w {
                    continue;
                }
                let in_qzq = coeff.as_laurent().is_some_and(|p| p.in_q_zq());
                ensure(y.bruhat_leq(&w).unwrap_or(false) && in_qzq, || format!("C{w} has coefficient {coeff} at {y}"))?;
            }
            count += 1;
        }
    }
    Ok(count)
}

fn all_modules(n: usize) -> Vec<InducedModule> {
    let subs = ParabolicSubgroup::full(n).sub_parabolics();
    let mut out = Vec::new();
    for a in &subs {
        for b in &subs {
            if a.commutes_with(b) {
                out.push(InducedModule::new(a.clone(), b.clone()).expect("commuting parts"));
            }
        }
    }
    out
}

fn module_relations(max_n: usize) -> CheckResult {
    let mut count = 0;
    for n in 2..=max_n {
        for m in all_modules(n) {
            for w in m.basis_index() {
                let x = m.standard(w).map_err(err)?;
                let g = |y: &ModuleElement, i| y.act_generator(i).map_err(err);
                for i in 1..n {
                    let rhs = g(&x, i)?.scale(&quadratic_coeff()).add(&x).map_err(err)?;
                    ensure(g(&g(&x, i)?, i)? == rhs, || format!("quadratic relation fails on {x:?}"))?;
                    if i + 1 < n {
                        let l = g(&g(&g(&x, i)?, i + 1)?, i)?;
                        let r = g(&g(&g(&x, i + 1)?, i)?, i + 1)?;
                        ensure(l == r, || format!("braid relation fails on {x:?}"))?;
                    }
                    for j in i + 2..n {
                        ensure(g(&g(&x, i)?, j)? == g(&g(&x, j)?, i)?, || format!("commutation fails on {x:?}"))?;
                    }
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

fn module_maps(max_n: usize) -> CheckResult {
    let mut count = 0;
    for n in 1..=max_n {
        for big in all_modules(n) {
            for sub in big.triv_part().sub_parabolics() {
                let small = InducedModule::new(big.sign_part().clone(), sub).map_err(err)?;
                let top = relative_longest(small.triv_part(), big.triv_part());
                for w in big.basis_index() {
                    let x = big.standard(w).map_err(err)?;
                    let ix = map_i(&big, &small, &x).map_err(err)?;
                    ensure(map_q(&small, &big, &ix).map_err(err)? == x, || format!("Q(i(N{w})) != N{w} for {big:?}"))?;
                    let c = big.canonical_basis_element(w).map_err(err)?;
                    let target = small.canonical_basis_element(&top.compose(w).map_err(err)?).map_err(err)?;
                    ensure(map_i(&big, &small, &c).map_err(err)? == target, || format!("i does not send canonical {w} to canonical"))?;
                    count += 1;
                }
            }
            for sub in big.sign_part().sub_parabolics() {
                let small = InducedModule::new(sub, big.triv_part().clone()).map_err(err)?;
                let scalar = zj_scalar(small.sign_part(), big.sign_part());
                for w in big.basis_index() {
                    let x = big.standard(w).map_err(err)?;
                    let zj = map_z(&small, &big, &map_j(&big, &small, &x).map_err(err)?).map_err(err)?;
                    ensure(zj == x.scale(&scalar), || format!("z(j(N{w})) is not {scalar} N{w} for {big:?}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn schur_weyl_relations(max_n: usize) -> CheckResult {
    let mut count = 0;
    for n in 2..=max_n {
        let id = Matrix::identity(1 << n);
        let h: Vec<Matrix> = (1..n).map(|i| schur_weyl_matrix(n, i)).collect::<Result<_, _>>().map_err(err)?;
        for i in 0..n - 1 {
            ensure(&h[i] * &h[i] == &h[i].scale(&quadratic_coeff()) + &id, || format!("quadratic fails for H{} on n={n}", i + 1))?;
            if i + 2 < n {
                let l = &h[i] * &(&h[i + 1] * &h[i]);
                let r = &h[i + 1] * &(&h[i] * &h[i + 1]);
                ensure(l == r, || format!("braid fails at {} on n={n}", i + 1))?;
            }
            for j in i + 2..n - 1 {
                ensure(&h[i] * &h[j] == &h[j] * &h[i], || format!("H{} and H{} do not commute", i + 1, j + 1))?;
            }
            count += 1;
        }
    }
    Ok(count)
}

fn stl_relations(max_n: usize) -> CheckResult {
    let qq = rf("q + q^-1");
    let mut count = 0;
    for n in 2..=max_n {
        let c: Vec<Matrix> = (1..n).map(|i| stl_generator_matrix(n, i)).collect::<Result<_, _>>().map_err(err)?;
        let qqi = Matrix::scalar(1 << n, &qq);
        for i in 0..n - 1 {
            ensure(&c[i] * &c[i] == c[i].scale(&qq), || format!("C{}^2 != [2] C{} on n={n}", i + 1, i + 1))?;
            for j in i + 2..n - 1 {
                ensure(&c[i] * &c[j] == &c[j] * &c[i], || format!("C{} and C{} do not commute", i + 1, j + 1))?;
            }
            if i + 2 < n {
                let l = &(&c[i] * &(&c[i + 1] * &c[i])) - &c[i];
                let r = &(&c[i + 1] * &(&c[i] * &c[i + 1])) - &c[i + 1];
                ensure(l == r, || format!("C{0}C{1}C{0} - C{0} is not symmetric on n={n}", i + 1, i + 2))?;
            }
            if i >= 1 && i + 2 < n {
                let (cm, ci, cp) = (&c[i - 1], &c[i], &c[i + 1]);
                let (am, ap) = (&qqi - cm, &qqi - cp);
                let first = &(&(&(cm * cp) * ci) * &am) * &ap;
                let second = &(&(&(&am * &ap) * ci) * cm) * cp;
                ensure(first.is_zero() && second.is_zero(), || format!("degree-5 relation fails at {} on n={n}", i + 1))?;
            }
            count += 1;
        }
    }
    Ok(count)
}

/// The induced module matching the weight space with `k` zeros of `V^{⊗n}`.
fn weight_module(n: usize, k: usize) -> Result<InducedModule, String> {
    let triv: Vec<usize> = (1..k).collect();
    let sign: Vec<usize> = (k + 1..n).collect();
    InducedModule::from_generators(n, &sign, &triv).map_err(err)
}

fn psi_intertwines(max_n: usize) -> CheckResult {
    let mut count = 0;
    for n in 1..=max_n {
        for k in 0..=n {
            let m = weight_module(n, k)?;
            for w in m.basis_index() {
                let x = m.standard(w).map_err(err)?;
                let px = psi_iso(&x, k).map_err(err)?;
                ensure(psi_iso(&x.bar(), k).map_err(err)? == px.bar(), || format!("Ψ does not commute with bar at {w}"))?;
                for i in 1..n {
                    let lhs = psi_iso(&x.act_generator(i).map_err(err)?, k).map_err(err)?;
                    ensure(lhs == schur_weyl_h(i, &px).map_err(err)?, || format!("Ψ fails to intertwine H{i} at {w}"))?;
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

fn canonical_triple(max_n: usize) -> CheckResult {
    let mut count = 0;
    for n in 1..=max_n {
        let c = Composition::regular(n);
        for k in 0..=n {
            let m = weight_module(n, k)?;
            let eta_min = Bits::zeros_then_ones(k, n - k);
            for w in m.basis_index() {
                let eta = act_on_bits(&eta_min, w);
                let by_bar = canonical_basis(&c, &eta).map_err(err)?;
                let by_web = evaluate_diagram(&canonical_basis_diagram(&c, &eta).map_err(err)?).map_err(err)?;
                let by_hecke = psi_iso(&m.canonical_basis_element(w).map_err(err)?, k).map_err(err)?;
                ensure(by_bar == by_web && by_bar == by_hecke, || format!("canonical element of {eta} disagrees (n={n})"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn web_relations(max_n: usize) -> CheckResult {
    let rels = all_relations(max_n as u32);
    for r in &rels {
        ensure(check_relation(r).map_err(err)?, || format!("{r:?} fails"))?;
    }
    Ok(rels.len())
}

fn elementary_webs(c: &Composition) -> Vec<Web> {
    let mut out = Vec::new();
    for i in 1..c.len() {
        out.push(Web::merge(c, i).expect("valid position"));
    }
    for i in 1..=c.len() {
        for left in 1..c.part(i) {
            out.push(Web::split(c, i, left).expect("valid split"));
        }
    }
    out
}

fn path_sums(max_n: usize) -> CheckResult {
    let mut count = 0;
    for c in comps_up_to(max_n) {
        for w in elementary_webs(&c) {
            let m = evaluate_matrix(&w);
            for (col, eta) in c.all_etas().iter().enumerate() {
                for (row, gamma) in w.target().all_etas().iter().enumerate() {
                    let d = LabeledWebDiagram::new(w.clone(), eta.clone(), Some(gamma.clone())).map_err(err)?;
                    ensure(&matrix_coefficient(&d).map_err(err)? == m.get(row, col), || format!("{w}: entry {gamma} <- {eta}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn webs_match_maps(max_n: usize) -> CheckResult {
    let mut count = 0;
    for c in comps_up_to(max_n) {
        for w in elementary_webs(&c) {
            let via_maps = operator_matrix(&c, w.target(), |v| apply_web(&w, v).map_err(|_| uqrep::RepError::MixedWeight))
                .map_err(err)?;
            ensure(evaluate_matrix(&w) == via_maps, || format!("{w} disagrees with the representation maps"))?;
            count += 1;
        }
    }
    Ok(count)
}

fn canonical_diagrams(max_n: usize) -> CheckResult {
    let mut count = 0;
    for c in comps_up_to(max_n) {
        for eta in c.all_etas() {
            let x = evaluate_diagram(&canonical_basis_diagram(&c, &eta).map_err(err)?).map_err(err)?;
            ensure(x == canonical_basis(&c, &eta).map_err(err)?, || format!("diagram of {eta} for {c}"))?;
            ensure(x.bar() == x, || format!("diagram of {eta} for {c} is not bar invariant"))?;
            count += 1;
        }
    }
    Ok(count)
}

fn theorem1(max_n: usize) -> CheckResult {
    let mut count = 0;
    for c in comps_up_to(max_n) {
        for i in 1..c.len() {
            ensure(theorem1_check(&c, i).map_err(err)?, || format!("{c} at position {i}"))?;
            count += 1;
        }
    }
    Ok(count)
}

fn standard_basis(c: &Composition) -> Result<Vec<TensorVector>, String> {
    c.all_etas().iter().map(|e| TensorVector::standard(c, e).map_err(err)).collect()
}

fn pairs(max: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=max).flat_map(move |a| (1..=max).map(move |b| (a, b)))
}

fn merge_split_adjunction(max_n: usize) -> CheckResult {
    let mut count = 0;
    for (a, b) in pairs(max_n as u32) {
        let two = Composition::new(vec![a, b]).map_err(err)?;
        let one = Composition::new(vec![a + b]).map_err(err)?;
        let scalar = RationalFunction::q_pow(-((a * b) as i64));
        for x in standard_basis(&two)? {
            for y in standard_basis(&one)? {
                let lhs = x.phi_merge(1).map_err(err)?.form(&y).map_err(err)?;
                let rhs = x.form(&y.phi_split(1, a).map_err(err)?.scale(&scalar)).map_err(err)?;
                ensure(lhs == rhs, || format!("({a},{b}): {x} against {y}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn digon_scalar(max_n: usize) -> CheckResult {
    let mut count = 0;
    for (a, b) in pairs(max_n as u32) {
        let one = Composition::new(vec![a + b]).map_err(err)?;
        let binom = RationalFunction::from(quantum_binom(a + b, a).map_err(err)?);
        for y in standard_basis(&one)? {
            let back = y.phi_split(1, a).map_err(err)?.phi_merge(1).map_err(err)?;
            ensure(back == y.scale(&binom), || format!("({a},{b}) on {y}"))?;
            count += 1;
        }
    }
    Ok(count)
}

fn f_e_adjunction(max_n: usize) -> CheckResult {
    let mut count = 0;
    for c in comps_up_to(max_n) {
        for eta in c.all_etas() {
            let x = TensorVector::standard(&c, &eta).map_err(err)?;
            let m = beta_sum(&c, &eta);
            for y in standard_basis(&c)? {
                let lhs = x.act_f().form(&y).map_err(err)?;
                ensure(lhs == x.form(&y.act_e_prime().map_err(err)?).map_err(err)?, || format!("E' adjunction: {x}, {y}"))?;
                if m == 0 {
                    ensure(lhs.is_zero(), || format!("F {x} should pair to zero"))?;
                } else {
                    let scalar = &RationalFunction::q_pow(c.n() as i64 - 1) / &RationalFunction::from(quantum_int0(m));
                    let rhs = &scalar * &x.form(&y.act_e()).map_err(err)?;
                    ensure(lhs == rhs, || format!("{x} against {y} in {c}"))?;
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

fn e_f_relations(max_n: usize) -> CheckResult {
    let mut count = 0;
    let denom = rf("q - q^-1").inv().expect("nonzero");
    for c in comps_up_to(max_n) {
        for x in standard_basis(&c)? {
            ensure(x.act_e().act_e().is_zero() && x.act_f().act_f().is_zero(), || format!("E^2 or F^2 nonzero on {x}"))?;
            let ef = x.act_f().act_e().add(&x.act_e().act_f()).map_err(err)?;
            let k = x.act_k().sub(&x.act_k_inv()).map_err(err)?.scale(&denom);
            ensure(ef == k, || format!("EF + FE on {x} in {c}"))?;
            count += 1;
        }
    }
    Ok(count)
}

fn equivariance(max_n: usize) -> CheckResult {
    let mut count = 0;
    for c in comps_up_to(max_n) {
        let ops: [(&str, fn(&TensorVector) -> TensorVector); 3] =
            [("E", TensorVector::act_e), ("F", TensorVector::act_f), ("K", TensorVector::act_k)];
        for x in standard_basis(&c)? {
            for i in 1..c.len() {
                for (name, op) in &ops {
                    let l = x.phi_merge(i).map_err(err)?;
                    ensure(op(&l) == op(&x).phi_merge(i).map_err(err)?, || format!("merge {i} and {name} on {x}"))?;
                }
                count += 1;
            }
            for i in 1..=c.len() {
                for left in 1..c.part(i) {
                    for (name, op) in &ops {
                        let l = x.phi_split(i, left).map_err(err)?;
                        ensure(op(&l) == op(&x).phi_split(i, left).map_err(err)?, || format!("split {i} and {name} on {x}"))?;
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn kgroup_basis_rules(max_n: usize) -> CheckResult {
    let mut count = 0;
    for c in comps_up_to(max_n) {
        for k in 0..c.n() as usize {
            ensure(f_on_projectives_holds(&c, k).map_err(err)?, || format!("F on projectives, {c}, k={k}"))?;
            ensure(e_on_simples_holds(&c, k).map_err(err)?, || format!("E' on simples, {c}, k={k}"))?;
            count += 1;
        }
    }
    Ok(count)
}

fn factorial_rule(max_n: usize) -> CheckResult {
    let mut count = 0;
    for n in 1..=max_n {
        for k in 0..=n {
            ensure(standard_is_factorial_multiple(n, k).map_err(err)?, || format!("n={n}, k={k}"))?;
            count += 1;
        }
    }
    // the scalar itself: [k]0! is the Poincare polynomial of S_k in q^2
    for k in 0..=max_n {
        let poincare: RationalFunction =
            all_permutations(k.max(1)).iter().map(|x| RationalFunction::q_pow(2 * x.length() as i64)).sum();
        ensure(RationalFunction::from(quantum_factorial0(k as u32)) == poincare, || format!("[{k}]0!"))?;
    }
    Ok(count)
}

fn kgroup_squares(max_n: usize) -> CheckResult {
    let comps = comps_up_to(max_n);
    for c in &comps {
        ensure(e_f_square_to_zero(c).map_err(err)?, || format!("{c}"))?;
    }
    Ok(comps.len())
}

fn translations_commute(max_n: usize) -> CheckResult {
    let mut count = 0;
    for c in comps_up_to(max_n) {
        for i in 1..c.len() {
            ensure(translations_commute_with_e_f(&c, i).map_err(err)?, || format!("{c} at {i}"))?;
            count += 1;
        }
    }
    Ok(count)
}

fn hom_dims(max_n: usize) -> CheckResult {
    let mut count = 0;
    for n in 1..=max_n {
        for k in 0..=n {
            ensure(hom_dims_agree(n, k).map_err(err)?, || format!("n={n}, k={k}"))?;
            count += 1;
        }
    }
    Ok(count)
}
