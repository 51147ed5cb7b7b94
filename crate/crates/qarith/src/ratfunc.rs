use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::laurent::{LaurentPoly, ParseLaurentError};
use crate::polygcd::{self, Dense};

/// An element of the fraction field `Q(q)`, kept in a canonical reduced form:
/// the denominator is an ordinary polynomial with nonzero constant term and
/// positive leading coefficient, any power of `q` sits in the numerator, and
/// numerator and denominator share no common factor in `Z[q]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFraction", into = "RawFraction")]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct RawFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl TryFrom<RawFraction> for RationalFunction {
    type Error = String;
    fn try_from(r: RawFraction) -> Result<Self, String> {
        RationalFunction::try_new(r.num, r.den).ok_or_else(|| "zero denominator".to_string())
    }
}

impl From<RationalFunction> for RawFraction {
    fn from(r: RationalFunction) -> Self {
        RawFraction { num: r.num, den: r.den }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error(transparent)]
    Poly(#[from] ParseLaurentError),
    #[error("zero denominator")]
    ZeroDenominator,
}

fn to_dense(p: &LaurentPoly) -> Dense {
    let lo = p.min_exp().unwrap_or(0);
    let hi = p.max_exp().unwrap_or(-1);
    let mut out = vec![BigInt::zero(); (hi - lo + 1).max(0) as usize];
    for (e, c) in p.terms() {
        out[(e - lo) as usize] = c.clone();
    }
    out
}

fn from_dense(d: &[BigInt], offset: i64) -> LaurentPoly {
    LaurentPoly::from_terms(d.iter().enumerate().map(|(i, c)| (i as i64 + offset, c.clone())))
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn q() -> Self {
        Self::from(LaurentPoly::q())
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::from(LaurentPoly::monomial(1, e))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from(LaurentPoly::constant(c))
    }

    /// `num / den`; panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        Self::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let dshift = den.min_exp().unwrap();
        let nshift = num.min_exp().unwrap();
        let d = to_dense(&den);
        let n = to_dense(&num);
        let g = polygcd::gcd(&n, &d);
        let (mut n, mut d) = if g.len() == 1 && g[0].is_one() {
            (n, d)
        } else {
            (polygcd::div_exact(&n, &g), polygcd::div_exact(&d, &g))
        };
        if d.last().is_some_and(|l| l.is_negative()) {
            for x in n.iter_mut().chain(d.iter_mut()) {
                *x = -&*x;
            }
        }
        Self { num: from_dense(&n, nshift - dshift), den: from_dense(&d, 0) }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying Laurent polynomial when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// Substitute `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.den.is_one() {
            return Self { num: self.num.bar(), den: self.den.clone() };
        }
        Self::normalize(self.num.bar(), self.den.bar())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Value at `q = 1` as a numerator/denominator pair; `None` if the denominator vanishes there.
    pub fn eval_at_one(&self) -> Option<(BigInt, BigInt)> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return None;
        }
        Some((self.num.eval_at_one(), d))
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(num: LaurentPoly) -> Self {
        Self { num, den: LaurentPoly::one() }
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RationalFunction {
    type Err = ParseRationalError;

    /// Accepts a bare Laurent polynomial or `(num)/(den)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some(mid) = rest.find(")/(") {
                let num: LaurentPoly = rest[..mid].parse()?;
                let den_str = rest[mid + 3..].trim_end();
                let den_str = den_str.strip_suffix(')').unwrap_or(den_str);
                let den: LaurentPoly = den_str.parse()?;
                return Self::try_new(num, den).ok_or(ParseRationalError::ZeroDenominator);
            }
        }
        Ok(Self::from(s.parse::<LaurentPoly>()?))
    }
}

impl AddAssign<&RationalFunction> for RationalFunction {
    fn add_assign(&mut self, rhs: &RationalFunction) {
        if rhs.is_zero() {
            return;
        }
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&RationalFunction> for RationalFunction {
    fn sub_assign(&mut self, rhs: &RationalFunction) {
        if rhs.is_zero() {
            return;
        }
        if self.den.is_one() && rhs.den.is_one() {
            self.num -= &rhs.num;
            return;
        }
        *self = &*self - rhs;
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RationalFunction::from(num);
            }
            return RationalFunction::normalize(num, self.den.clone());
        }
        RationalFunction::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from(&self.num * &rhs.num);
        }
        RationalFunction::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        let mut acc = RationalFunction::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl std::iter::Product for RationalFunction {
    fn product<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        let mut acc = RationalFunction::one();
        for x in iter {
            acc = &acc * &x;
        }
        acc
    }
}
