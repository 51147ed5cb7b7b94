use std::fmt::Display;

use hecke::{kl_basis_element, HeckeElementJson};
use inducedmod::{InducedModule, ModuleElementJson};
use qarith::{Matrix, RationalFunction};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use symgrp::Permutation;
use tabgroth::{all_tableaux, hom_dim, hom_dim_by_form, translation_matrix, ClassKind, Direction, HookTableau, TabError};
use uqrep::{canonical_basis, eta_sort_key, render_term, Bits, Composition, TensorVector, TensorVectorJson};
use webcat::{apply_web, matrix_coefficient, LabeledWebDiagram, Web};

use crate::checks::run_suite;
use crate::{BasisArg, Command, DirArg};

pub(crate) enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A computed consistency check failed: exit code 1.
    Check(String),
}

pub(crate) struct Report {
    pub text: String,
    pub json: Value,
    pub failed: bool,
}

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn to_json(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("output types serialize")
}

fn ok(text: String, json: Value) -> Result<Report, Failure> {
    Ok(Report { text, json, failed: false })
}

fn parse_comp(s: &str) -> Result<Composition, Failure> {
    s.parse().map_err(|_| usage(format!("malformed composition {s:?}: expected comma-separated positive integers")))
}

fn parse_bits(s: &str, comp: &Composition) -> Result<Bits, Failure> {
    let bits: Bits = s.parse().map_err(|_| usage(format!("malformed bitstring {s:?}")))?;
    if bits.len() != comp.len() {
        return Err(usage(format!(
            "bitstring {s} has length {} but {comp} has {} parts",
            bits.len(),
            comp.len()
        )));
    }
    Ok(bits)
}

fn parse_perm(n: usize, s: &str) -> Result<Permutation, Failure> {
    Permutation::parse(n, s).map_err(|e| usage(format!("bad permutation {s:?} in S_{n}: {e}")))
}

fn parse_gens(s: &str, n: usize) -> Result<Vec<usize>, Failure> {
    let t = s.trim();
    if t.is_empty() || t == "none" {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            let i: usize = x.trim().parse().map_err(|_| usage(format!("malformed generator list {s:?}")))?;
            if i == 0 || i >= n {
                return Err(usage(format!("generator s{i} out of range 1..{n}")));
            }
            Ok(i)
        })
        .collect()
}

fn tab_failure(e: TabError) -> Failure {
    match e {
        TabError::Theorem1Mismatch { .. } => Failure::Check(e.to_string()),
        other => usage(other),
    }
}

/// Image of every requested standard vector under a web.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct WebEvalJson {
    pub web: Web,
    pub images: Vec<(Bits, TensorVectorJson)>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct WebCoeffJson {
    pub diagram: LabeledWebDiagram,
    pub coefficient: RationalFunction,
}

/// Bar images and canonical elements of every standard vector of `V(comp)`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct CanonicalJson {
    pub comp: Composition,
    pub bar: Vec<(Bits, TensorVectorJson)>,
    pub canonical: Vec<(Bits, TensorVectorJson)>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TableauJson {
    /// Permutation in one-line notation.
    pub w: String,
    pub tableau: HookTableau,
    pub admissible: bool,
}

/// A translation matrix with its row and column labels (one-line permutations).
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TranslationJson {
    pub comp: Composition,
    pub pos: usize,
    pub k: usize,
    pub dir: Direction,
    pub basis: ClassKind,
    pub source: Composition,
    pub target: Composition,
    pub source_labels: Vec<String>,
    pub target_labels: Vec<String>,
    pub matrix: Vec<Vec<RationalFunction>>,
}

impl TranslationJson {
    pub fn to_matrix(&self) -> Matrix {
        let cols = self.source_labels.len();
        Matrix::from_fn(self.matrix.len(), cols, |r, c| self.matrix[r][c].clone())
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct HomDimJson {
    pub n: usize,
    pub k: usize,
    pub w: String,
    pub z: String,
    pub by_diagrams: String,
    pub by_form: String,
}

fn sorted_etas(comp: &Composition) -> Vec<Bits> {
    let mut etas = comp.all_etas();
    etas.sort_by_key(eta_sort_key);
    etas
}

fn kind_symbol(kind: ClassKind) -> &'static str {
    match kind {
        ClassKind::Standard => "Δ",
        ClassKind::ProperStandard => "Δ̄",
        ClassKind::Projective => "Q",
        ClassKind::Simple => "S",
    }
}

pub(crate) fn execute(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::KlBasis { n, w } => {
            let w = parse_perm(*n, w)?;
            let c = kl_basis_element(&w);
            ok(format!("{c}\n"), to_json(&HeckeElementJson::from(&c)))
        }
        Command::ModBasis { n, p, q, w } => {
            let m = InducedModule::from_generators(*n, &parse_gens(p, *n)?, &parse_gens(q, *n)?).map_err(usage)?;
            let w = parse_perm(*n, w)?;
            let c = m.canonical_basis_element(&w).map_err(usage)?;
            ok(format!("{c}\n"), to_json(&ModuleElementJson::from(&c)))
        }
        Command::Canonical { comp, eta } => {
            let a = parse_comp(comp)?;
            if let Some(eta) = eta {
                let x = canonical_basis(&a, &parse_bits(eta, &a)?).map_err(usage)?;
                return ok(format!("{x}\n"), to_json(&TensorVectorJson::from(&x)));
            }
            let mut text = String::new();
            let (mut bar, mut canonical) = (Vec::new(), Vec::new());
            let etas = sorted_etas(&a);
            for e in &etas {
                let b = TensorVector::standard(&a, e).map_err(usage)?.bar();
                text.push_str(&format!("bar(v[{e}]) = {b}\n"));
                bar.push((e.clone(), TensorVectorJson::from(&b)));
            }
            for e in &etas {
                let c = canonical_basis(&a, e).map_err(usage)?;
                text.push_str(&format!("canonical[{e}] = {c}\n"));
                canonical.push((e.clone(), TensorVectorJson::from(&c)));
            }
            ok(text, to_json(&CanonicalJson { comp: a, bar, canonical }))
        }
        Command::WebEval { comp, word, bottom } => {
            let a = parse_comp(comp)?;
            let web = Web::parse_word(&a, word).map_err(usage)?;
            let bottoms = match bottom {
                Some(b) => vec![parse_bits(b, &a)?],
                None => a.all_etas(),
            };
            let mut text = format!("{web}\n");
            let mut images = Vec::new();
            for b in bottoms {
                let img = apply_web(&web, &TensorVector::standard(&a, &b).map_err(usage)?).map_err(usage)?;
                text.push_str(&format!("v[{b}] -> {img}\n"));
                images.push((b, TensorVectorJson::from(&img)));
            }
            ok(text, to_json(&WebEvalJson { web, images }))
        }
        Command::WebCoeff { comp, word, bottom, top } => {
            let a = parse_comp(comp)?;
            let web = Web::parse_word(&a, word).map_err(usage)?;
            let bottom = parse_bits(bottom, &a)?;
            let top = parse_bits(top, web.target())?;
            let diagram = LabeledWebDiagram::new(web, bottom, Some(top)).map_err(usage)?;
            let coefficient = matrix_coefficient(&diagram).map_err(usage)?;
            ok(format!("{coefficient}\n"), to_json(&WebCoeffJson { diagram, coefficient }))
        }
        Command::Tableaux { comp, k, admissible_only } => {
            let a = parse_comp(comp)?;
            let mut all = all_tableaux(&a, *k).map_err(tab_failure)?;
            all.sort_by_key(|(w, _)| w.bruhat_key());
            let mut text = String::new();
            let mut out = Vec::new();
            for (w, t) in all {
                let admissible = t.is_admissible();
                if *admissible_only && !admissible {
                    continue;
                }
                let tag = if admissible { "admissible" } else { "not admissible" };
                text.push_str(&format!("{} {w} ({tag})\n", w.word_string()));
                for line in t.render().lines() {
                    text.push_str(&format!("  {}\n", line.trim_end()));
                }
                out.push(TableauJson { w: w.to_string(), tableau: t, admissible });
            }
            ok(text, to_json(&out))
        }
        Command::Translate { comp, pos, k, dir, basis } => {
            let a = parse_comp(comp)?;
            let dir = match dir {
                DirArg::Onto => Direction::Onto,
                DirArg::Out => Direction::Out,
            };
            let kind = match basis {
                BasisArg::Standard => ClassKind::Standard,
                BasisArg::Proper => ClassKind::ProperStandard,
                BasisArg::Projective => ClassKind::Projective,
                BasisArg::Simple => ClassKind::Simple,
            };
            let m = translation_matrix(&a, *pos, *k, dir, kind).map_err(tab_failure)?;
            let sym = kind_symbol(kind);
            let dir_name = if dir == Direction::Onto { "onto the wall" } else { "out of the wall" };
            let mut text = format!("{dir_name} at {pos}: {} -> {}, k = {k}, {kind} classes\n", m.source.comp, m.target.comp);
            for (j, w) in m.source.labels.iter().enumerate() {
                let terms: Vec<String> =
                    m.column_terms(j).into_iter().map(|(x, c)| render_term(c, &format!("{sym}({})", x.word_string()))).collect();
                let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                text.push_str(&format!("{sym}({}) -> {rhs}\n", w.word_string()));
            }
            let json = TranslationJson {
                comp: a,
                pos: *pos,
                k: *k,
                dir,
                basis: kind,
                source: m.source.comp.clone(),
                target: m.target.comp.clone(),
                source_labels: m.source.labels.iter().map(|w| w.to_string()).collect(),
                target_labels: m.target.labels.iter().map(|w| w.to_string()).collect(),
                matrix: (0..m.matrix.rows()).map(|r| (0..m.matrix.cols()).map(|c| m.matrix.get(r, c).clone()).collect()).collect(),
            };
            ok(text, to_json(&json))
        }
        Command::Homdim { n, k, w, z } => {
            let (wp, zp) = (parse_perm(*n, w)?, parse_perm(*n, z)?);
            let by_diagrams = hom_dim(&wp, &zp, *n, *k).map_err(tab_failure)?;
            let by_form = hom_dim_by_form(&wp, &zp, *n, *k).map_err(tab_failure)?;
            let failed = by_diagrams != by_form;
            let text = format!(
                "dim Hom(Q({}), Q({})) = {by_diagrams}\n  diagram count: {by_diagrams}\n  form at q=1: {by_form}\n{}",
                wp.word_string(),
                zp.word_string(),
                if failed { "MISMATCH\n" } else { "" }
            );
            let json = HomDimJson {
                n: *n,
                k: *k,
                w: wp.to_string(),
                z: zp.to_string(),
                by_diagrams: by_diagrams.to_string(),
                by_form: by_form.to_string(),
            };
            Ok(Report { text, json: to_json(&json), failed })
        }
        Command::Check { suite, max_n } => {
            if *max_n == 0 || *max_n > 6 {
                return Err(usage(format!("--max-n {max_n} out of range 1..=6")));
            }
            let outcomes = run_suite(*suite, *max_n);
            let text: String = outcomes.iter().map(|o| format!("{o}\n")).collect();
            let failed = outcomes.iter().any(|o| !o.passed);
            Ok(Report { text, json: to_json(&outcomes), failed })
        }
    }
}
