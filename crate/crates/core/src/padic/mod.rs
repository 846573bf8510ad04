//! Exact arithmetic primitives over the integers and the p-adics.
//!
//! Everything here is a pure function on immutable values: valuations,
//! Kronecker and Hilbert symbols, square roots mod prime powers, Hensel
//! lifting for the surface quadric, and desk-scale factoring with explicit
//! budgets.

mod factor;
mod hensel;
mod hilbert;
mod kronecker;
mod prime;
mod sqrt;
mod ternary;

pub use factor::{factor, FactorBudget, Factorization};
pub use hensel::{hensel_lift_quadratic, ResidueTriple};
pub use hilbert::hilbert_symbol;
pub use kronecker::kronecker_symbol;
pub use prime::is_prime;
pub use sqrt::sqrt_mod;
pub use ternary::legendre_solve;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A place of Q: a certified finite prime or the archimedean place.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Place {
    Finite(#[serde(with = "crate::padic::bigint_string")] BigInt),
    Infinite,
}

impl Place {
    /// Wrap a certified prime as a finite place.
    ///
    /// Fails with [`PadicError::NotPrime`] if the primality test rejects `p`.
    pub fn finite(p: BigInt) -> Result<Self, PadicError> {
        if is_prime(&p) {
            Ok(Place::Finite(p))
        } else {
            Err(PadicError::NotPrime(p))
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Place::Finite(_))
    }

    pub fn prime(&self) -> Option<&BigInt> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinite => None,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinite => write!(f, "infinity"),
        }
    }
}

/// A p-adic valuation: finite for nonzero input, the infinity marker for 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Valuation {
    Finite(u64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinity)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "infinity"),
        }
    }
}

/// Errors from the p-adic primitives.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum PadicError {
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("factoring budget exhausted on cofactor {0}")]
    BudgetExhausted(BigInt),
    #[error("precision {from_e} does not certify Hensel lifting (gradient valuation {grad})")]
    PrecisionError { from_e: u64, grad: u64 },
    #[error("input out of domain: {0}")]
    Domain(String),
}

/// Largest e with p^e | x; the infinity marker for x = 0.
pub fn valuation(x: &BigInt, p: &BigInt) -> Valuation {
    debug_assert!(is_prime(p), "valuation requires a prime modulus");
    if x.is_zero() {
        return Valuation::Infinity;
    }
    let mut v = 0u64;
    let mut n = x.abs();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        n = q;
        v += 1;
    }
}

/// Valuation of a nonzero rational: v(num) - v(den).
pub fn valuation_rational(x: &num_rational::BigRational, p: &BigInt) -> Option<i64> {
    if x.numer().is_zero() {
        return None;
    }
    let vn = match valuation(x.numer(), p) {
        Valuation::Finite(v) => v as i64,
        Valuation::Infinity => unreachable!(),
    };
    let vd = match valuation(x.denom(), p) {
        Valuation::Finite(v) => v as i64,
        Valuation::Infinity => unreachable!(),
    };
    Some(vn - vd)
}

/// Modular inverse of `a` mod `m` for gcd(a, m) = 1.
pub(crate) fn inv_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    use num_integer::Integer;
    let a = a.mod_floor(m);
    let ext = a.extended_gcd(m);
    if ext.gcd != num_traits::One::one() {
        return None;
    }
    Some(ext.x.mod_floor(m))
}

/// Serde helpers: arbitrary-precision integers as decimal strings.
pub mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        BigInt::from_str(&s).map_err(serde::de::Error::custom)
    }
}

/// Same as [`bigint_string`] for `Vec<BigInt>`.
pub mod bigint_vec_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .into_iter()
            .map(|s| BigInt::from_str(&s).map_err(serde::de::Error::custom))
            .collect()
    }
}
