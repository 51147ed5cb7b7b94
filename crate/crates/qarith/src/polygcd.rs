//! Dense univariate integer polynomials, just enough for gcd and exact division.
//! Coefficient vectors are stored low degree first with no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) type Dense = Vec<BigInt>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(p: &[BigInt]) -> Dense {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let mut out: Dense = p.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|l| l.is_negative()) {
        for x in &mut out {
            *x = -&*x;
        }
    }
    out
}

/// Pseudo-remainder of `a` by `b` (b nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut r: Dense = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Gcd in `Z[x]`, normalized to a positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Dense {
    if a.is_empty() {
        return primitive_sign(b);
    }
    if b.is_empty() {
        return primitive_sign(a);
    }
    let cont = content(a).gcd(&content(b));
    let (mut x, mut y) = (primitive(a), primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    x.iter().map(|c| c * &cont).collect()
}

fn primitive_sign(p: &[BigInt]) -> Dense {
    let mut out = p.to_vec();
    if out.last().is_some_and(|l| l.is_negative()) {
        for x in &mut out {
            *x = -&*x;
        }
    }
    out
}

/// `a / b` when `b` divides `a` exactly in `Z[x]`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Dense {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Dense = a.to_vec();
    let mut qt: Dense = vec![BigInt::zero(); a.len().saturating_sub(db).max(1)];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        qt[shift] = c;
        trim(&mut r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    trim(&mut qt);
    qt
}
