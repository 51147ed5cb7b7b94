use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::RepError;

/// A finite sequence of strictly positive integers labelling a tensor product
/// `V(a_1) ⊗ ... ⊗ V(a_l)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = RepError;
    fn try_from(parts: Vec<u32>) -> Result<Self, RepError> {
        Self::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, RepError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(RepError::BadComposition(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    /// The all-ones composition of `n`.
    pub fn regular(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts[i - 1]
    }

    /// Number of tensor factors.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_regular(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Merges the parts at positions `i` and `i+1` (1-based).
    pub fn merged(&self, i: usize) -> Result<Self, RepError> {
        if i == 0 || i >= self.len() {
            return Err(RepError::PositionOutOfRange { pos: i, len: self.len() });
        }
        let mut parts = self.parts.clone();
        let b = parts.remove(i);
        parts[i - 1] += b;
        Ok(Self { parts })
    }

    /// Splits the part at position `i` into `(left, part - left)`.
    pub fn split(&self, i: usize, left: u32) -> Result<Self, RepError> {
        if i == 0 || i > self.len() {
            return Err(RepError::PositionOutOfRange { pos: i, len: self.len() });
        }
        let whole = self.parts[i - 1];
        if left == 0 || left >= whole {
            return Err(RepError::BadComposition(format!("cannot split {whole} as {left} + rest")));
        }
        let mut parts = self.parts.clone();
        parts[i - 1] = left;
        parts.insert(i, whole - left);
        Ok(Self { parts })
    }

    /// Concatenation.
    pub fn concat(&self, other: &Self) -> Self {
        Self { parts: self.parts.iter().chain(&other.parts).copied().collect() }
    }

    /// All `2^l` bit sequences in lexicographic order.
    pub fn all_etas(&self) -> Vec<Bits> {
        Bits::all(self.len())
    }

    /// Bit sequences with the given number of zeros.
    pub fn etas_with_zeros(&self, zeros: usize) -> Vec<Bits> {
        self.all_etas().into_iter().filter(|e| e.zeros() == zeros).collect()
    }

    /// All compositions of `n` in lexicographic order.
    pub fn all_of(n: u32) -> Vec<Self> {
        fn rec(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: prefix.clone() });
                return;
            }
            for p in 1..=rest {
                prefix.push(p);
                rec(rest - p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Composition {
    type Err = RepError;

    /// Comma-separated positive integers, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self, RepError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Result<Vec<u32>, _> = t.split(',').map(|x| x.trim().parse::<u32>()).collect();
        Self::new(parts.map_err(|_| RepError::BadComposition(s.to_string()))?)
    }
}

/// A sequence in `{0,1}^l` labelling a standard basis vector; serialized as a bitstring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Bits(Vec<u8>);

impl TryFrom<String> for Bits {
    type Error = RepError;
    fn try_from(s: String) -> Result<Self, RepError> {
        s.parse()
    }
}

impl From<Bits> for String {
    fn from(b: Bits) -> Self {
        b.to_string()
    }
}

impl Bits {
    pub fn new(bits: Vec<u8>) -> Result<Self, RepError> {
        if bits.iter().any(|&b| b > 1) {
            return Err(RepError::BadBits(format!("{bits:?}")));
        }
        Ok(Self(bits))
    }

    pub fn zeros_then_ones(zeros: usize, ones: usize) -> Self {
        Self(std::iter::repeat_n(0, zeros).chain(std::iter::repeat_n(1, ones)).collect())
    }

    pub fn all(len: usize) -> Vec<Self> {
        (0..1usize << len)
            .map(|m| Self((0..len).map(|j| ((m >> (len - 1 - j)) & 1) as u8).collect()))
            .collect()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `j`.
    pub fn get(&self, j: usize) -> u8 {
        self.0[j - 1]
    }

    pub fn with(&self, j: usize, bit: u8) -> Self {
        let mut v = self.0.clone();
        v[j - 1] = bit;
        Self(v)
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    /// Number of ones strictly before 1-based position `j`.
    pub fn ones_before(&self, j: usize) -> usize {
        self.0[..j - 1].iter().filter(|&&b| b == 1).count()
    }

    /// Index in the lexicographic enumeration (first entry most significant).
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| acc * 2 + b as usize)
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn slice(&self, from: usize, to: usize) -> Self {
        Self(self.0[from..to].to_vec())
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Bits {
    type Err = RepError;
    fn from_str(s: &str) -> Result<Self, RepError> {
        let s = s.trim();
        let bits: Option<Vec<u8>> = s
            .chars()
            .map(|c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })
            .collect();
        match bits {
            Some(b) if !b.is_empty() => Ok(Self(b)),
            _ => Err(RepError::BadBits(s.to_string())),
        }
    }
}
