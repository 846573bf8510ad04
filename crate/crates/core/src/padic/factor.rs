//! Desk-scale integer factoring: trial division to 1e5, then Brent's cycle
//! variant of Pollard rho under an explicit iteration budget.

use super::{is_prime, PadicError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Iteration budget for the rho stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorBudget {
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            rho_iterations: 1_000_000,
        }
    }
}

/// A complete signed factorisation; every prime passes the primality test
/// and the product with the sign reconstructs the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub sign: i8,
    /// (prime, exponent) pairs in increasing prime order.
    #[serde(with = "prime_powers_string")]
    pub factors: Vec<(BigInt, u32)>,
}

mod prime_powers_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(xs: &[(BigInt, u32)], s: S) -> Result<S::Ok, S::Error> {
        let repr: Vec<(String, u32)> = xs.iter().map(|(p, e)| (p.to_string(), *e)).collect();
        repr.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(BigInt, u32)>, D::Error> {
        let repr = Vec::<(String, u32)>::deserialize(d)?;
        repr.into_iter()
            .map(|(p, e)| {
                BigInt::from_str(&p)
                    .map(|p| (p, e))
                    .map_err(serde::de::Error::custom)
            })
            .collect()
    }
}

impl Factorization {
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            v *= p.pow(*e);
        }
        v
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Primes dividing the value to odd multiplicity.
    pub fn odd_multiplicity_primes(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|(_, e)| e % 2 == 1)
            .map(|(p, _)| p.clone())
            .collect()
    }

    /// Largest s with s^2 dividing |value|, i.e. the square part.
    pub fn square_part_root(&self) -> BigInt {
        let mut s = BigInt::one();
        for (p, e) in &self.factors {
            s *= p.pow(e / 2);
        }
        s
    }
}

const TRIAL_LIMIT: u64 = 100_000;

fn brent_rho(n: &BigInt, budget: &mut u64) -> Option<BigInt> {
    // deterministic sweep over cycle parameters, no RNG
    let one = BigInt::one();
    for c in 1u64..64 {
        let cc = BigInt::from(c);
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &cc) % n;
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let m = 128.min(r - k);
                for _ in 0..m {
                    if *budget == 0 {
                        return None;
                    }
                    *budget -= 1;
                    y = (&y * &y + &cc) % n;
                    let diff = (&x - &y).abs();
                    if !diff.is_zero() {
                        q = (&q * diff) % n;
                    }
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            // backtrack to recover the factor
            g = one.clone();
            while g.is_one() {
                if *budget == 0 {
                    return None;
                }
                *budget -= 1;
                ys = (&ys * &ys + &cc) % n;
                g = (&x - &ys).abs().gcd(n);
            }
        }
        if g != *n && !g.is_one() {
            return Some(g);
        }
        // cycle degenerated for this c; try the next increment
    }
    None
}

fn factor_into(n: BigInt, budget: &mut u64, out: &mut BTreeMap<BigInt, u32>) -> Result<(), PadicError> {
    if n.is_one() {
        return Ok(());
    }
    if is_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return Ok(());
    }
    // perfect powers of primes slip through rho slowly; handle squares first
    let root = n.sqrt();
    if &root * &root == n {
        factor_into(root.clone(), budget, out)?;
        factor_into(root, budget, out)?;
        return Ok(());
    }
    match brent_rho(&n, budget) {
        Some(d) => {
            let q = &n / &d;
            factor_into(d, budget, out)?;
            factor_into(q, budget, out)?;
            Ok(())
        }
        None => Err(PadicError::BudgetExhausted(n)),
    }
}

/// Complete signed factorisation of a nonzero integer.
///
/// Fails with `BudgetExhausted` carrying the resistant cofactor; an
/// unfactored part is never silently reported as prime.
pub fn factor(n: &BigInt, budget: FactorBudget) -> Result<Factorization, PadicError> {
    if n.is_zero() {
        return Err(PadicError::Domain("factor(0) is undefined".into()));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut out: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut d = 2u64;
    while d < TRIAL_LIMIT {
        let big_d = BigInt::from(d);
        if &big_d * &big_d > m {
            break;
        }
        while (&m % &big_d).is_zero() {
            m /= &big_d;
            *out.entry(big_d.clone()).or_insert(0) += 1;
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if !m.is_one() {
        let mut iters = budget.rho_iterations;
        factor_into(m, &mut iters, &mut out)?;
    }
    let factorization = Factorization {
        sign,
        factors: out.into_iter().collect(),
    };
    debug_assert_eq!(factorization.value(), *n);
    Ok(factorization)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn fac(n: i64) -> Factorization {
        factor(&bi(n), FactorBudget::default()).unwrap()
    }

    #[test]
    fn spec_values() {
        let f = fac(21);
        assert_eq!(f.sign, 1);
        assert_eq!(f.factors, vec![(bi(3), 1), (bi(7), 1)]);
        let f = fac(-937);
        assert_eq!(f.sign, -1);
        assert_eq!(f.factors, vec![(bi(937), 1)]);
        let f = fac(32);
        assert_eq!(f.factors, vec![(bi(2), 5)]);
    }

    #[test]
    fn reconstructs_value_and_certifies_primes() {
        for n in [-1i64, 1, 2, -360, 1009 * 1013, 1 << 20, 999983, -6] {
            let f = fac(n);
            assert_eq!(f.value(), bi(n));
            for (p, _) in &f.factors {
                assert!(is_prime(p));
            }
        }
    }

    #[test]
    fn semiprime_beyond_trial_division() {
        // both factors above the 1e5 trial bound
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(1_000_033u64);
        let f = factor(&(&p * &q), FactorBudget::default()).unwrap();
        assert_eq!(f.factors, vec![(p, 1), (q, 1)]);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(1_000_033u64);
        let n = &p * &q;
        let err = factor(&n, FactorBudget { rho_iterations: 4 }).unwrap_err();
        assert!(matches!(err, PadicError::BudgetExhausted(_)));
    }

    #[test]
    fn square_helpers() {
        let f = fac(720); // 2^4 * 3^2 * 5
        assert_eq!(f.square_part_root(), bi(12));
        assert_eq!(f.odd_multiplicity_primes(), vec![bi(5)]);
    }
}
