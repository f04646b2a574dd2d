//! Kazhdan–Lusztig polynomials of symmetric groups.
//!
//! [`kl_poly`] runs the classical recursion over left descents with memoized
//! columns; [`kl_poly_slow`] builds the canonical basis of the Hecke algebra
//! directly and is kept as an independent check of the fast engine.

mod cache;
mod engine;
mod perm;
mod slow;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

pub use cache::{read_cache_file, write_cache_records, CacheRecord, CACHE_MAGIC};
pub use engine::KlEngine;
pub use perm::Perm;
pub use slow::{kl_poly_slow, SlowHecke};

use crate::error::{Error, Result};

/// A polynomial in `q` with nonnegative integer coefficients; index `i` holds
/// the coefficient of `q^i`. Trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct KLPoly {
    coeffs: Vec<BigUint>,
}

impl KLPoly {
    pub fn zero() -> KLPoly {
        KLPoly { coeffs: Vec::new() }
    }

    pub fn one() -> KLPoly {
        KLPoly { coeffs: vec![BigUint::from(1u32)] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> KLPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        KLPoly { coeffs }
    }

    pub fn from_u64(coeffs: &[u64]) -> KLPoly {
        KLPoly::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Coefficients as `u64`, failing with [`Error::Overflow`].
    pub fn coeffs_u64(&self) -> Result<Vec<u64>> {
        self.coeffs.iter().map(|c| c.to_u64().ok_or(Error::Overflow)).collect()
    }
}

impl fmt::Display for KLPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let one = *c == BigUint::from(1u32);
            match i {
                0 => write!(f, "{c}")?,
                1 if one => f.write_str("q")?,
                1 => write!(f, "{c}q")?,
                _ if one => write!(f, "q^{i}")?,
                _ => write!(f, "{c}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// `P_{x,w}` through the process-wide engine; zero unless `x ≤ w`.
pub fn kl_poly(x: &Perm, w: &Perm) -> Result<KLPoly> {
    KlEngine::global().kl_poly(x, w)
}

/// `μ(x, w)`: the coefficient of `q^{(ℓ(w)−ℓ(x)−1)/2}` in `P_{x,w}`, or 0 when
/// that exponent is not an integer. Requires `x < w`.
pub fn mu_coeff(x: &Perm, w: &Perm) -> Result<BigUint> {
    if x.n() != w.n() {
        return Err(Error::WindowMismatch(x.n(), w.n()));
    }
    if x == w || !x.bruhat_le(w) {
        return Err(Error::NotStrictlyBelow(x.to_string(), w.to_string()));
    }
    let gap = w.length() - x.length();
    if gap.is_multiple_of(2) {
        return Ok(BigUint::zero());
    }
    Ok(kl_poly(x, w)?.coeff((gap - 1) / 2))
}
