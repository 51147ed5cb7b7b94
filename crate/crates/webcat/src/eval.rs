use qarith::{quantum_binom, LinComb, Matrix, RationalFunction};
use serde::{Deserialize, Serialize};
use uqrep::{merge_coeffs, Bits, Composition, TensorVector};

use crate::web::{Slice, Web};
use crate::WebError;

fn elementary_matrix(a: &Composition, slice: &Slice) -> Matrix {
    let (i, local) = match *slice {
        Slice::Merge { i } => {
            let [c10, c01, c00] = merge_coeffs(a.part(i), a.part(i + 1));
            // rows: target bit 0, 1; columns: source pairs 00, 01, 10, 11
            let mut m = Matrix::zeros(2, 4);
            m.set(0, 0, c00);
            m.set(1, 1, c01);
            m.set(1, 2, c10);
            (i, m)
        }
        Slice::Split { i, left } => {
            let mut m = Matrix::zeros(4, 2);
            m.set(0, 0, RationalFunction::one());
            m.set(2, 1, RationalFunction::one());
            m.set(1, 1, RationalFunction::q_pow(left as i64));
            (i, m)
        }
    };
    let before = Matrix::identity(1 << (i - 1));
    let touched = match slice {
        Slice::Merge { .. } => 2,
        Slice::Split { .. } => 1,
    };
    let after = Matrix::identity(1 << (a.len() - (i - 1) - touched));
    before.kron(&local).kron(&after)
}

/// The matrix of the web's image, from the lexicographic basis of `V(source)`
/// to that of `V(target)`.
pub fn evaluate_matrix(w: &Web) -> Matrix {
    let mut m = Matrix::identity(1 << w.source().len());
    for (slice, level) in w.slices().iter().zip(w.levels()) {
        m = &elementary_matrix(level, slice) * &m;
    }
    m
}

/// Applies the web to a vector slice by slice through the representation maps.
pub fn apply_web(w: &Web, v: &TensorVector) -> Result<TensorVector, WebError> {
    if v.comp() != w.source() {
        return Err(WebError::TypeMismatch { expected: w.source().to_string(), found: v.comp().to_string() });
    }
    let mut x = v.clone();
    for s in w.slices() {
        x = match *s {
            Slice::Merge { i } => x.phi_merge(i)?,
            Slice::Split { i, left } => x.phi_split(i, left)?,
        };
    }
    Ok(x)
}

/// A web with boundary labels; `0` stands for an up-arrow and `1` for a down-arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledWebDiagram {
    pub web: Web,
    pub bottom: Bits,
    pub top: Option<Bits>,
}

impl LabeledWebDiagram {
    pub fn new(web: Web, bottom: Bits, top: Option<Bits>) -> Result<Self, WebError> {
        let check = |b: &Bits, c: &Composition| {
            if b.len() == c.len() {
                Ok(())
            } else {
                Err(WebError::LabelLength { labels: b.len(), strands: c.len() })
            }
        };
        check(&bottom, web.source())?;
        if let Some(t) = &top {
            check(t, web.target())?;
        }
        Ok(Self { web, bottom, top })
    }
}

fn binom(n: u32, k: u32) -> RationalFunction {
    RationalFunction::from(quantum_binom(n, k).expect("k <= n"))
}

/// Value of a trivalent vertex with labels `(a, b)` on the two-strand side, given
/// the orientation bits on the two-strand side and on the single strand.
fn vertex_value(merge: bool, a: u32, b: u32, pair: (u8, u8), single: u8) -> Option<RationalFunction> {
    let v = match (merge, pair, single) {
        (false, (1, 0), 1) => RationalFunction::one(),
        (false, (0, 1), 1) => RationalFunction::q_pow(a as i64),
        (false, (0, 0), 0) => RationalFunction::one(),
        (true, (1, 0), 1) => &RationalFunction::q_pow(-(b as i64)) * &binom(a + b - 1, b),
        (true, (0, 1), 1) => binom(a + b - 1, a),
        (true, (0, 0), 0) => binom(a + b, a),
        _ => return None,
    };
    Some(v)
}

/// Next-level labelings with nonzero local value, and those values.
fn local_moves(level: &Composition, slice: &Slice, labels: &[u8]) -> Vec<(Vec<u8>, RationalFunction)> {
    let mut out = Vec::new();
    match *slice {
        Slice::Merge { i } => {
            let (a, b) = (level.part(i), level.part(i + 1));
            let pair = (labels[i - 1], labels[i]);
            for single in 0..=1 {
                if let Some(v) = vertex_value(true, a, b, pair, single) {
                    let mut next = labels[..i - 1].to_vec();
                    next.push(single);
                    next.extend_from_slice(&labels[i + 1..]);
                    out.push((next, v));
                }
            }
        }
        Slice::Split { i, left } => {
            let (a, b) = (left, level.part(i) - left);
            for pair in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                if let Some(v) = vertex_value(false, a, b, pair, labels[i - 1]) {
                    let mut next = labels[..i - 1].to_vec();
                    next.extend_from_slice(&[pair.0, pair.1]);
                    next.extend_from_slice(&labels[i..]);
                    out.push((next, v));
                }
            }
        }
    }
    out
}

/// Sums the products of local vertex values over all orientations of the internal
/// edges; edges not meeting a vertex keep their orientation.
pub fn matrix_coefficient(d: &LabeledWebDiagram) -> Result<RationalFunction, WebError> {
    let top = d.top.as_ref().ok_or(WebError::MissingTopLabel)?;
    let mut total = RationalFunction::zero();
    let mut stack = vec![(0usize, d.bottom.as_slice().to_vec(), RationalFunction::one())];
    let (slices, levels) = (d.web.slices(), d.web.levels());
    while let Some((t, labels, value)) = stack.pop() {
        if t == slices.len() {
            if labels == top.as_slice() {
                total += &value;
            }
            continue;
        }
        for (next, v) in local_moves(&levels[t], &slices[t], &labels) {
            stack.push((t + 1, next, &value * &v));
        }
    }
    Ok(total)
}

/// All top labels with their coefficients, i.e. the image of the bottom basis vector.
pub fn evaluate_diagram(d: &LabeledWebDiagram) -> Result<TensorVector, WebError> {
    let target = d.web.target();
    let mut support = LinComb::zero();
    for top in target.all_etas() {
        let diagram = LabeledWebDiagram { top: Some(top.clone()), ..d.clone() };
        support.add_term(top, &matrix_coefficient(&diagram)?);
    }
    Ok(TensorVector::from_lincomb(target, support)?)
}

/// Groups of strands joined in the canonical diagram: each down-arrow together with
/// the maximal run of up-arrows right after it; leading up-arrows stay alone.
fn canonical_groups(eta: &Bits) -> Vec<(usize, usize)> {
    let mut groups = Vec::new();
    let mut j = 0;
    let s = eta.as_slice();
    while j < s.len() {
        let start = j;
        j += 1;
        if s[start] == 1 {
            while j < s.len() && s[j] == 0 {
                j += 1;
            }
        }
        groups.push((start, j));
    }
    groups
}

/// The canonical basis diagram of `v_η`: each down-arrow is joined with all the
/// up-arrows that follow it, using `splitter` for the multivalent vertex.
pub fn canonical_basis_diagram(a: &Composition, eta: &Bits) -> Result<LabeledWebDiagram, WebError> {
    canonical_diagram_with(a, eta, Web::splitter)
}

/// The same diagram built with splits that peel off the first strand first.
pub fn canonical_basis_diagram_right_nested(a: &Composition, eta: &Bits) -> Result<LabeledWebDiagram, WebError> {
    canonical_diagram_with(a, eta, right_nested_splitter)
}

fn right_nested_splitter(parts: &Composition) -> Web {
    let total = Composition::new(vec![parts.n()]).expect("positive");
    let mut slices = Vec::new();
    for j in 1..parts.len() {
        slices.push(Slice::Split { i: j, left: parts.part(j) });
    }
    Web::from_slices(&total, slices).expect("splitting positive labels")
}

fn canonical_diagram_with(
    a: &Composition,
    eta: &Bits,
    splitter: fn(&Composition) -> Web,
) -> Result<LabeledWebDiagram, WebError> {
    if eta.len() != a.len() {
        return Err(WebError::LabelLength { labels: eta.len(), strands: a.len() });
    }
    let mut web: Option<Web> = None;
    let mut bottom = Vec::new();
    for (from, to) in canonical_groups(eta) {
        let parts = Composition::new(a.parts()[from..to].to_vec()).expect("nonempty group");
        bottom.push(eta.get(from + 1));
        let piece = splitter(&parts);
        web = Some(match web {
            None => piece,
            Some(w) => w.tensor(&piece),
        });
    }
    let web = web.expect("nonempty composition");
    LabeledWebDiagram::new(web, Bits::new(bottom)?, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups() {
        let g = canonical_groups(&"0100101".parse().unwrap());
        assert_eq!(g, vec![(0, 1), (1, 4), (4, 6), (6, 7)]);
        assert_eq!(canonical_groups(&"0011".parse().unwrap()).len(), 4);
    }

    #[test]
    fn merge_column() {
        let m = evaluate_matrix(&Web::merge(&"1,1".parse().unwrap(), 1).unwrap());
        assert_eq!(m.get(0, 0), &"q^-1 + q".parse::<RationalFunction>().unwrap());
        assert!(m.get(1, 0).is_zero());
    }
}
