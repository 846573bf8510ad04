//! The Kronecker symbol (a/n), extending Jacobi to arbitrary nonzero n.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// (a/2) as used in the Kronecker extension: 0 for even a, else +-1 by a mod 8.
fn symbol_at_two(a: &BigInt) -> i8 {
    if a.is_even() {
        0
    } else {
        let r = a.mod_floor(&BigInt::from(8));
        match r.to_string().as_str() {
            "1" | "7" => 1,
            _ => -1,
        }
    }
}

/// Kronecker symbol (a/n) for n != 0.
///
/// Agrees with the Legendre symbol for odd prime n and with Jacobi for odd
/// positive n; the value is 0 exactly when gcd(a, n) > 1.
pub fn kronecker_symbol(a: &BigInt, n: &BigInt) -> i8 {
    assert!(!n.is_zero(), "kronecker_symbol: n must be nonzero");
    let mut a = a.clone();
    let mut n = n.clone();
    let mut k: i8 = 1;

    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            k = -k;
        }
    }
    // split off the even part of n
    let v2 = n.trailing_zeros().unwrap_or(0);
    if v2 > 0 {
        n >>= v2;
        let s2 = symbol_at_two(&a);
        if s2 == 0 {
            return 0;
        }
        if v2 % 2 == 1 {
            k *= s2;
        }
    }
    // now n odd positive; standard reciprocity loop
    a = a.mod_floor(&n);
    let three = BigInt::from(3);
    let four = BigInt::from(4);
    while !a.is_zero() {
        let v = a.trailing_zeros().unwrap_or(0);
        if v > 0 {
            a >>= v;
            if v % 2 == 1 {
                let r8 = n.mod_floor(&BigInt::from(8));
                if r8 == three || r8 == BigInt::from(5) {
                    k = -k;
                }
            }
        }
        // reciprocity: a, n both odd positive
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            k = -k;
        }
        std::mem::swap(&mut a, &mut n);
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        k
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Legendre symbol by exhaustive squaring, the independent oracle.
    fn legendre_oracle(a: i64, p: i64) -> i8 {
        let r = a.rem_euclid(p);
        if r == 0 {
            return 0;
        }
        for x in 1..p {
            if (x * x) % p == r {
                return 1;
            }
        }
        -1
    }

    #[test]
    fn spec_values() {
        // 3^2 = 9 = 2 mod 7
        assert_eq!(kronecker_symbol(&bi(2), &bi(7)), 1);
        for n in [1i64, 2, 3, 15, 97, 1024] {
            assert_eq!(kronecker_symbol(&bi(1), &bi(n)), 1);
        }
        // squares mod 11 are {1,3,4,5,9}; -5 = 6 mod 11
        assert_eq!(kronecker_symbol(&bi(-5), &bi(11)), -1);
    }

    #[test]
    fn matches_legendre_oracle_on_odd_primes() {
        for p in [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            for a in -30..30 {
                assert_eq!(
                    kronecker_symbol(&bi(a), &bi(p)),
                    legendre_oracle(a, p),
                    "(a/p) = ({a}/{p})"
                );
            }
        }
    }

    #[test]
    fn multiplicative_in_both_arguments() {
        let ns = [3i64, 5, 9, 15, -7, 2, 8, -6];
        for n in ns {
            for a in -12..12i64 {
                for b in -12..12i64 {
                    let lhs = kronecker_symbol(&(bi(a) * bi(b)), &bi(n));
                    let rhs = kronecker_symbol(&bi(a), &bi(n)) * kronecker_symbol(&bi(b), &bi(n));
                    assert_eq!(lhs, rhs, "a={a} b={b} n={n}");
                }
            }
        }
    }

    #[test]
    fn kronecker_at_two_and_negative() {
        assert_eq!(kronecker_symbol(&bi(7), &bi(2)), 1);
        assert_eq!(kronecker_symbol(&bi(3), &bi(2)), -1);
        assert_eq!(kronecker_symbol(&bi(4), &bi(2)), 0);
        // (a/-1) = sign(a)
        assert_eq!(kronecker_symbol(&bi(5), &bi(-1)), 1);
        assert_eq!(kronecker_symbol(&bi(-5), &bi(-1)), -1);
    }
}
