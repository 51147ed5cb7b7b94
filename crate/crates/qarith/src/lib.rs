//! Exact arithmetic over the integer Laurent polynomials in `q` and their
//! field of fractions, plus quantum integers and dense matrices over that field.

mod laurent;
mod lincomb;
mod matrix;
mod polygcd;
mod quantum;
mod ratfunc;

pub use laurent::{LaurentPoly, ParseLaurentError};
pub use lincomb::LinComb;
pub use matrix::Matrix;
pub use quantum::{
    quantum_binom, quantum_binom0, quantum_factorial, quantum_factorial0, quantum_int,
    quantum_int0, quantum_multinom, quantum_multinom0, QuantumError,
};
pub use ratfunc::{ParseRationalError, RationalFunction};

pub use num_bigint::BigInt;
