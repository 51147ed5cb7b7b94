use std::fmt;

use crate::error::SymError;

/// A permutation of `{1..n}` in one-line notation: entry `j-1` holds `w(j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    line: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { line: (1..=n as u8).collect() }
    }

    pub fn from_one_line(values: &[usize]) -> Result<Self, SymError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v == 0 || v > n || seen[v] {
                return Err(SymError::NotAPermutation(values.to_vec()));
            }
            seen[v] = true;
        }
        Ok(Self { line: values.iter().map(|&v| v as u8).collect() })
    }

    /// The simple transposition `s_i` swapping `i` and `i+1`.
    pub fn simple(n: usize, i: usize) -> Result<Self, SymError> {
        Self::identity(n).mul_simple(i)
    }

    /// The product `s_{i_1} s_{i_2} ... s_{i_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, SymError> {
        word.iter().try_fold(Self::identity(n), |w, &i| w.mul_simple(i))
    }

    /// Parses `[2,1,3]`, a reduced-word product like `s1*s2`, or `e`.
    pub fn parse(n: usize, s: &str) -> Result<Self, SymError> {
        let s = s.trim();
        let err = || SymError::Parse(s.to_string());
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let vals: Vec<usize> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| err()))
                    .collect::<Result<_, _>>()?
            };
            if vals.len() != n {
                return Err(SymError::SizeMismatch(vals.len(), n));
            }
            return Self::from_one_line(&vals);
        }
        if s == "e" || s == "1" || s.is_empty() {
            return Ok(Self::identity(n));
        }
        let word: Vec<usize> = s
            .split(['*', ' ', '.'])
            .filter(|t| !t.is_empty())
            .map(|t| t.strip_prefix('s').ok_or_else(err)?.parse::<usize>().map_err(|_| err()))
            .collect::<Result<_, _>>()?;
        Self::from_word(n, &word)
    }

    pub fn n(&self) -> usize {
        self.line.len()
    }

    /// `w(j)` for `1 <= j <= n`.
    pub fn apply(&self, j: usize) -> usize {
        self.line[j - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.line.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.line.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.line[i] > self.line[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inverse(&self) -> Self {
        let mut line = vec![0u8; self.n()];
        for (i, &v) in self.line.iter().enumerate() {
            line[v as usize - 1] = (i + 1) as u8;
        }
        Self { line }
    }

    /// The composite `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, SymError> {
        if self.n() != other.n() {
            return Err(SymError::SizeMismatch(self.n(), other.n()));
        }
        Ok(Self { line: other.line.iter().map(|&j| self.line[j as usize - 1]).collect() })
    }

    fn check_index(&self, i: usize) -> Result<(), SymError> {
        if i == 0 || i >= self.n() {
            return Err(SymError::IndexOutOfRange { index: i, n: self.n() });
        }
        Ok(())
    }

    /// `w s_i`: swaps positions `i` and `i+1`.
    pub fn mul_simple(&self, i: usize) -> Result<Self, SymError> {
        self.check_index(i)?;
        let mut line = self.line.clone();
        line.swap(i - 1, i);
        Ok(Self { line })
    }

    /// `s_i w`: swaps the values `i` and `i+1`.
    pub fn simple_mul(&self, i: usize) -> Result<Self, SymError> {
        self.check_index(i)?;
        let line = self
            .line
            .iter()
            .map(|&v| match v as usize {
                x if x == i => (i + 1) as u8,
                x if x == i + 1 => i as u8,
                _ => v,
            })
            .collect();
        Ok(Self { line })
    }

    /// True when `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.line[i - 1] > self.line[i]
    }

    /// True when `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// A reduced word `[i_1, .., i_k]` with `w = s_{i_1} ... s_{i_k}`,
    /// found by peeling off the last right descent repeatedly.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(&i) = w.right_descents().last() {
            rev.push(i);
            w = w.mul_simple(i).expect("descent index is valid");
        }
        rev.reverse();
        rev
    }

    /// Bruhat order by the rank-matrix criterion: `u <= w` iff for all `i, j`
    /// `#{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}`.
    pub fn bruhat_leq(&self, w: &Self) -> Result<bool, SymError> {
        let n = self.n();
        if n != w.n() {
            return Err(SymError::SizeMismatch(n, w.n()));
        }
        for j in 1..=n as u8 {
            let (mut cu, mut cw) = (0, 0);
            for i in 0..n {
                cu += (self.line[i] >= j) as usize;
                cw += (w.line[i] >= j) as usize;
                if cu > cw {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Reduced word rendered as `s1*s2`, or `e` for the identity.
    pub fn word_string(&self) -> String {
        let word = self.reduced_word();
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("*")
        }
    }

    /// Sort key that linearly extends the Bruhat order.
    pub fn bruhat_key(&self) -> (usize, Vec<u8>) {
        (self.length(), self.line.clone())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.line.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All of `S_n`, sorted by length then one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    heap_permute(&mut cur, n, &mut out);
    out.sort_by_key(Permutation::bruhat_key);
    out
}

fn heap_permute(a: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
    if k <= 1 {
        out.push(Permutation { line: a.clone() });
        return;
    }
    for i in 0..k {
        heap_permute(a, k - 1, out);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}
