//! Primality testing: deterministic strong-pseudoprime bases for 64-bit
//! inputs, 40 fixed witnesses beyond that.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Witnesses proving primality for all n < 2^64 (Sinclair's set).
const BASES_U64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// First 40 primes, used as Miller-Rabin witnesses above 64 bits.
const BASES_BIG: [u64; 40] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

fn strong_pseudoprime(n: &BigInt, base: &BigInt) -> bool {
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = base.modpow(&d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

/// Deterministic for n < 2^64; Miller-Rabin with 40 witnesses above.
pub fn is_prime(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let bases: &[u64] = if n.to_u64().is_some() {
        &BASES_U64
    } else {
        &BASES_BIG
    };
    bases.iter().all(|&b| {
        let b = BigInt::from(b);
        if (n % &b).is_zero() {
            // base divides n; n > 47 was screened above, so composite unless equal
            *n == b
        } else {
            strong_pseudoprime(n, &b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_and_composites() {
        let primes = [2u64, 3, 5, 7, 937, 65537, 2147483647];
        for p in primes {
            assert!(is_prime(&BigInt::from(p)), "{p} should be prime");
        }
        let comps = [0u64, 1, 4, 91, 561, 2047, 25326001, 3215031751];
        for c in comps {
            assert!(!is_prime(&BigInt::from(c)), "{c} should be composite");
        }
    }

    #[test]
    fn agrees_with_trial_division_to_10000() {
        let mut sieve = vec![true; 10000];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..10000 {
            if sieve[i] {
                let mut j = i * i;
                while j < 10000 {
                    sieve[j] = false;
                    j += i;
                }
            }
        }
        for n in 0..10000usize {
            assert_eq!(is_prime(&BigInt::from(n)), sieve[n], "mismatch at {n}");
        }
    }

    #[test]
    fn big_prime() {
        // 2^89 - 1 is a Mersenne prime
        let p = (BigInt::from(1) << 89) - 1;
        assert!(is_prime(&p));
        assert!(!is_prime(&(p + 2)));
    }
}
