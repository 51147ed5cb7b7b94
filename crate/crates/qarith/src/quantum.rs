use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuantumError {
    #[error("binomial lower index {k} exceeds upper index {n}")]
    KExceedsN { n: u32, k: u32 },
}

/// `[k] = q^{k-1} + q^{k-3} + ... + q^{1-k}`.
pub fn quantum_int(k: u32) -> LaurentPoly {
    let k = k as i64;
    LaurentPoly::from_terms((0..k).map(|j| (k - 1 - 2 * j, 1)))
}

pub fn quantum_factorial(k: u32) -> LaurentPoly {
    (1..=k).map(quantum_int).product()
}

/// Symmetric Gaussian binomial, built by the q-Pascal rule
/// `[n, k] = q^{-k} [n-1, k] + q^{n-k} [n-1, k-1]`.
pub fn quantum_binom(n: u32, k: u32) -> Result<LaurentPoly, QuantumError> {
    if k > n {
        return Err(QuantumError::KExceedsN { n, k });
    }
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let mut x = LaurentPoly::zero();
            if j < m {
                x += &row[j as usize].shift(-(j as i64));
            }
            if j > 0 {
                x += &row[j as usize - 1].shift((m - j) as i64);
            }
            next.push(x);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

pub fn quantum_multinom(parts: &[u32]) -> LaurentPoly {
    let mut total = 0;
    let mut acc = LaurentPoly::one();
    for &p in parts {
        total += p;
        acc = &acc * &quantum_binom(total, p).expect("partial sums dominate parts");
    }
    acc
}

/// `[k]_0 = q^{k-1} [k]`, a polynomial with constant term 1 for `k >= 1`.
pub fn quantum_int0(k: u32) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::zero();
    }
    quantum_int(k).shift(k as i64 - 1)
}

/// `[k]_0! = q^{k(k-1)/2} [k]!`.
pub fn quantum_factorial0(k: u32) -> LaurentPoly {
    let k64 = k as i64;
    quantum_factorial(k).shift(k64 * (k64 - 1) / 2)
}

/// `q^{k(n-k)} [n, k]`.
pub fn quantum_binom0(n: u32, k: u32) -> Result<LaurentPoly, QuantumError> {
    let b = quantum_binom(n, k)?;
    Ok(b.shift(k as i64 * (n as i64 - k as i64)))
}

/// The multinomial rescaled by `q` to the sum over unordered pairs of parts
/// `p_i p_j`, so that it equals `[sum]_0! / prod [p_i]_0!`.
pub fn quantum_multinom0(parts: &[u32]) -> LaurentPoly {
    let mut exp = 0i64;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            exp += parts[i] as i64 * parts[j] as i64;
        }
    }
    quantum_multinom(parts).shift(exp)
}
