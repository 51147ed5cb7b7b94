use std::fmt;

use serde::{Deserialize, Serialize};
use uqrep::Composition;

use crate::WebError;

/// One elementary generator: merge the strands at `i, i+1`, or split strand `i`
/// into labels `(left, rest)`. Positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Slice {
    Merge { i: usize },
    Split { i: usize, left: u32 },
}

impl Slice {
    /// The composition after this slice, or an error if it does not fit `a`.
    pub fn apply_type(&self, a: &Composition) -> Result<Composition, WebError> {
        match *self {
            Slice::Merge { i } => Ok(a.merged(i)?),
            Slice::Split { i, left } => Ok(a.split(i, left)?),
        }
    }

    fn shifted(&self, by: usize) -> Self {
        match *self {
            Slice::Merge { i } => Slice::Merge { i: i + by },
            Slice::Split { i, left } => Slice::Split { i: i + by, left },
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slice::Merge { i } => write!(f, "m{i}"),
            Slice::Split { i, left } => write!(f, "s{i}:{left}"),
        }
    }
}

/// A web stored as a word of elementary slices read bottom to top, together with
/// the composition at every level.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WebJson", into = "WebJson")]
pub struct Web {
    slices: Vec<Slice>,
    levels: Vec<Composition>,
}

#[derive(Serialize, Deserialize)]
struct WebJson {
    source: Composition,
    slices: Vec<Slice>,
}

impl TryFrom<WebJson> for Web {
    type Error = WebError;
    fn try_from(j: WebJson) -> Result<Self, WebError> {
        Web::from_slices(&j.source, j.slices)
    }
}

impl From<Web> for WebJson {
    fn from(w: Web) -> Self {
        WebJson { source: w.levels[0].clone(), slices: w.slices }
    }
}

impl Web {
    pub fn identity(a: &Composition) -> Self {
        Self { slices: Vec::new(), levels: vec![a.clone()] }
    }

    pub fn from_slices(source: &Composition, slices: Vec<Slice>) -> Result<Self, WebError> {
        let mut levels = vec![source.clone()];
        for s in &slices {
            let next = s.apply_type(levels.last().expect("nonempty"))?;
            levels.push(next);
        }
        Ok(Self { slices, levels })
    }

    pub fn merge(a: &Composition, i: usize) -> Result<Self, WebError> {
        Self::from_slices(a, vec![Slice::Merge { i }])
    }

    pub fn split(a: &Composition, i: usize, left: u32) -> Result<Self, WebError> {
        Self::from_slices(a, vec![Slice::Split { i, left }])
    }

    /// Merges all strands into one, always absorbing the next strand into the first.
    pub fn merger(a: &Composition) -> Self {
        let slices = vec![Slice::Merge { i: 1 }; a.len() - 1];
        Self::from_slices(a, slices).expect("merging at 1 always fits")
    }

    /// Splits a single strand of label `parts.sum()` into `parts`, splitting off the
    /// last part first; the mirror image of `merger`.
    pub fn splitter(parts: &Composition) -> Self {
        let total = Composition::new(vec![parts.n()]).expect("positive");
        let mut slices = Vec::new();
        let mut rest = parts.n();
        for j in (1..parts.len()).rev() {
            rest -= parts.part(j + 1);
            slices.push(Slice::Split { i: 1, left: rest });
        }
        Self::from_slices(&total, slices).expect("splitting positive labels")
    }

    /// The splitter sending `a` to the all-ones composition strand by strand.
    pub fn standard_inclusion(a: &Composition) -> Self {
        a.parts()
            .iter()
            .map(|&p| Web::splitter(&Composition::regular(p as usize)))
            .reduce(|l, r| l.tensor(&r))
            .expect("nonempty composition")
    }

    /// The merger sending the all-ones composition of `a.n()` to `a` strand by strand.
    pub fn standard_projection(a: &Composition) -> Self {
        a.parts()
            .iter()
            .map(|&p| Web::merger(&Composition::regular(p as usize)))
            .reduce(|l, r| l.tensor(&r))
            .expect("nonempty composition")
    }

    /// Parses a word like `m1.s2:1.m1`, read bottom to top. A split without an
    /// explicit left label splits off a strand of label 1 on the left.
    pub fn parse_word(source: &Composition, word: &str) -> Result<Self, WebError> {
        let word = word.trim();
        if word.is_empty() || word == "id" {
            return Ok(Self::identity(source));
        }
        let mut slices = Vec::new();
        for tok in word.split('.') {
            let bad = || WebError::BadWord(tok.to_string());
            let (kind, rest) = tok.split_at(tok.char_indices().nth(1).map_or(tok.len(), |(p, _)| p));
            match kind {
                "m" => slices.push(Slice::Merge { i: rest.parse().map_err(|_| bad())? }),
                "s" => {
                    let (i, left) = match rest.split_once(':') {
                        Some((i, l)) => (i, l.parse().map_err(|_| bad())?),
                        None => (rest, 1),
                    };
                    slices.push(Slice::Split { i: i.parse().map_err(|_| bad())?, left });
                }
                _ => return Err(bad()),
            }
        }
        Self::from_slices(source, slices)
    }

    pub fn word(&self) -> String {
        if self.slices.is_empty() {
            return "id".to_string();
        }
        self.slices.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(".")
    }

    pub fn source(&self) -> &Composition {
        &self.levels[0]
    }

    pub fn target(&self) -> &Composition {
        self.levels.last().expect("nonempty")
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    /// Compositions between slices, from the source up to the target.
    pub fn levels(&self) -> &[Composition] {
        &self.levels
    }

    /// `upper ∘ lower`: first `lower`, then `upper`.
    pub fn compose(upper: &Web, lower: &Web) -> Result<Web, WebError> {
        if lower.target() != upper.source() {
            return Err(WebError::TypeMismatch { expected: lower.target().to_string(), found: upper.source().to_string() });
        }
        let mut slices = lower.slices.clone();
        slices.extend_from_slice(&upper.slices);
        let mut levels = lower.levels.clone();
        levels.extend_from_slice(&upper.levels[1..]);
        Ok(Web { slices, levels })
    }

    /// Side-by-side juxtaposition: all slices of `self` first, then those of `right`.
    pub fn tensor(&self, right: &Web) -> Web {
        let slices: Vec<Slice> = self
            .slices
            .iter()
            .copied()
            .chain(right.slices.iter().map(|s| s.shifted(self.target().len())))
            .collect();
        Web::from_slices(&self.source().concat(right.source()), slices).expect("juxtaposition is well typed")
    }
}

impl fmt::Display for Web {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.word(), self.source(), self.target())
    }
}

impl fmt::Debug for Web {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn typing() {
        let w = Web::parse_word(&c("1,1,1"), "m1.s1.m2").unwrap();
        assert_eq!(w.target(), &c("1,2"));
        assert!(Web::parse_word(&c("1,1"), "m2").is_err());
        assert!(Web::parse_word(&c("1,1"), "x1").is_err());
        assert_eq!(Web::parse_word(&c("3"), "s1:2").unwrap().target(), &c("2,1"));
        assert_eq!(w.word(), "m1.s1:1.m2");
    }

    #[test]
    fn composition_and_tensor() {
        let m = Web::merge(&c("1,1"), 1).unwrap();
        let id = Web::identity(&c("1"));
        let t = m.tensor(&id);
        assert_eq!(t, Web::merge(&c("1,1,1"), 1).unwrap());
        assert_eq!(Web::compose(&Web::identity(&c("2")), &m).unwrap(), m);
        assert!(Web::compose(&m, &m).is_err());
        let t2 = id.tensor(&m);
        assert_eq!(t2, Web::merge(&c("1,1,1"), 2).unwrap());
    }

    #[test]
    fn bundles() {
        let s = Web::splitter(&c("1,2,1"));
        assert_eq!((s.source(), s.target()), (&c("4"), &c("1,2,1")));
        let m = Web::merger(&c("1,2,1"));
        assert_eq!(m.target(), &c("4"));
        let inc = Web::standard_inclusion(&c("2,1,3"));
        assert_eq!(inc.target(), &Composition::regular(6));
        assert_eq!(Web::standard_projection(&c("2,1,3")).target(), &c("2,1,3"));
    }

    #[test]
    fn json_shape() {
        let w = Web::parse_word(&c("1,1"), "m1.s1").unwrap();
        let js = serde_json::to_string(&w).unwrap();
        assert_eq!(js, r#"{"source":[1,1],"slices":[{"kind":"merge","i":1},{"kind":"split","i":1,"left":1}]}"#);
        let back: Web = serde_json::from_str(&js).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<Web>(r#"{"source":[1],"slices":[{"kind":"merge","i":1}]}"#).is_err());
    }
}
