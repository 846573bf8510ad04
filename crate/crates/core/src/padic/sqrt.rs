//! Square roots modulo prime powers: Tonelli-Shanks plus Newton lifting for
//! odd p, the mod-8 ladder at p = 2.

use super::{inv_mod, kronecker_symbol, valuation, Valuation};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Tonelli-Shanks square root of a unit square mod an odd prime.
fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Some(BigInt::zero());
    }
    if kronecker_symbol(&a, p) != 1 {
        return None;
    }
    let one = BigInt::one();
    let p_minus_1 = p - &one;
    if p.mod_floor(&BigInt::from(4)) == BigInt::from(3) {
        let exp = (p + &one) >> 2;
        return Some(a.modpow(&exp, p));
    }
    // p = 1 mod 4: full Tonelli-Shanks
    let s = p_minus_1.trailing_zeros().unwrap_or(0);
    let q = &p_minus_1 >> s;
    // smallest quadratic non-residue
    let mut z = BigInt::from(2);
    while kronecker_symbol(&z, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) >> 1), p);
    while !t.is_one() {
        let mut i = 0u64;
        let mut tt = t.clone();
        while !tt.is_one() {
            tt = (&tt * &tt) % p;
            i += 1;
            if i == m {
                return None;
            }
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = (&b * &b) % p;
        }
        m = i;
        c = (&b * &b) % p;
        t = (&t * &c) % p;
        r = (&r * &b) % p;
    }
    Some(r)
}

/// Newton-lift r with r^2 = a mod p^k to mod p^f, p odd.
fn lift_sqrt_odd(a: &BigInt, p: &BigInt, r0: BigInt, f: u64) -> BigInt {
    let mut r = r0;
    let mut k = 1u64;
    while k < f {
        k = (2 * k).min(f);
        let modulus = p.pow(k as u32);
        let two_r_inv = inv_mod(&(BigInt::from(2) * &r), &modulus)
            .expect("2r is a unit for odd p and unit r");
        let delta = ((&r * &r - a) * two_r_inv).mod_floor(&modulus);
        r = (&r - delta).mod_floor(&modulus);
    }
    r
}

/// Unit square root mod 2^f when it exists (u = 1 mod 8 for f >= 3).
fn sqrt_unit_two(u: &BigInt, f: u64) -> Option<BigInt> {
    let u1 = u.mod_floor(&(BigInt::one() << f));
    match f {
        0 => Some(BigInt::zero()),
        1 => Some(BigInt::one()),
        2 => {
            if u1.mod_floor(&BigInt::from(4)) == BigInt::one() {
                Some(BigInt::one())
            } else {
                None
            }
        }
        _ => {
            if u1.mod_floor(&BigInt::from(8)) != BigInt::one() {
                return None;
            }
            let mut r = BigInt::one();
            for k in 3..f {
                let next = BigInt::one() << (k + 1);
                if (&r * &r - u).mod_floor(&next) != BigInt::zero() {
                    r += BigInt::one() << (k - 1);
                }
                debug_assert!((&r * &r - u).mod_floor(&next).is_zero());
            }
            Some(r)
        }
    }
}

/// A square root of `a` mod p^e, or `None` when no residue squares to `a`.
///
/// Zero input (mod p^e) returns 0. Nonzero inputs of odd valuation, or with
/// a non-square unit part, have no root and yield `None`.
pub fn sqrt_mod(a: &BigInt, p: &BigInt, e: u64) -> Option<BigInt> {
    assert!(e >= 1);
    let modulus = p.pow(e as u32);
    let a0 = a.mod_floor(&modulus);
    if a0.is_zero() {
        return Some(BigInt::zero());
    }
    let v = match valuation(&a0, p) {
        Valuation::Finite(v) => v,
        Valuation::Infinity => unreachable!(),
    };
    if v % 2 == 1 {
        return None;
    }
    let u = &a0 / p.pow(v as u32);
    let f = e - v;
    let root_unit = if p == &BigInt::from(2) {
        sqrt_unit_two(&u, f)?
    } else {
        let r1 = sqrt_mod_prime(&u, p)?;
        lift_sqrt_odd(&u, p, r1, f)
    };
    let r = (root_unit * p.pow((v / 2) as u32)).mod_floor(&modulus);
    debug_assert!((&r * &r - &a0).mod_floor(&modulus).is_zero());
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn spec_values() {
        let r = sqrt_mod(&bi(2), &bi(7), 1).unwrap();
        assert!(r == bi(3) || r == bi(4));
        assert_eq!(sqrt_mod(&bi(0), &bi(5), 1), Some(bi(0)));
        // squares mod 8 are {0, 1, 4}
        assert_eq!(sqrt_mod(&bi(2), &bi(2), 3), None);
    }

    #[test]
    fn exhaustive_small_prime_powers() {
        for (p, e) in [(3u32, 4u64), (5, 3), (7, 2), (2, 5), (11, 2)] {
            let pe = (p as i64).pow(e as u32);
            // which residues are squares, by brute force
            let mut squares = std::collections::HashSet::new();
            for x in 0..pe {
                squares.insert((x * x) % pe);
            }
            for a in 0..pe {
                let got = sqrt_mod(&bi(a), &bi(p as i64), e);
                match got {
                    Some(r) => {
                        assert!(squares.contains(&a), "false root for {a} mod {p}^{e}");
                        assert_eq!((&r * &r - bi(a)).mod_floor(&bi(pe)), bi(0));
                    }
                    None => {
                        assert!(!squares.contains(&a), "missed root for {a} mod {p}^{e}");
                    }
                }
            }
        }
    }

    #[test]
    fn tonelli_one_mod_four() {
        // p = 13, 17, 29 exercise the full Tonelli-Shanks path
        for p in [13i64, 17, 29, 41] {
            for a in 1..p {
                if kronecker_symbol(&bi(a), &bi(p)) == 1 {
                    let r = sqrt_mod(&bi(a), &bi(p), 1).unwrap();
                    assert_eq!((&r * &r).mod_floor(&bi(p)), bi(a));
                }
            }
        }
    }
}
