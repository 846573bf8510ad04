//! Rational points on conics X^2 - a Y^2 = b Z^2 by Lagrange descent.
//!
//! The descent replaces b by (r^2 - a)/b for r a square root of a mod |b|,
//! shrinking |b| until the base cases; solutions are pulled back through the
//! norm-product identity. A `None` return is a genuine local obstruction.

use super::{factor, sqrt_mod, FactorBudget, PadicError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Chinese-remainder a square root of `a` modulo squarefree `m` from its
/// prime factorisation. `None` when some odd prime factor refuses.
fn sqrt_mod_squarefree(a: &BigInt, primes: &[BigInt]) -> Option<BigInt> {
    let mut r = BigInt::zero();
    let mut m = BigInt::one();
    for p in primes {
        let s = sqrt_mod(a, p, 1)?;
        // combine r mod m with s mod p
        let minv = super::inv_mod(&m.mod_floor(p), p).expect("coprime moduli");
        let k = ((&s - &r) * minv).mod_floor(p);
        r += &k * &m;
        m *= p;
    }
    Some(r.mod_floor(&m))
}

fn primitive(mut x: BigInt, mut y: BigInt, mut z: BigInt) -> (BigInt, BigInt, BigInt) {
    let g = x.gcd(&y).gcd(&z);
    if !g.is_zero() && !g.is_one() {
        x /= &g;
        y /= &g;
        z /= &g;
    }
    (x, y, z)
}

/// A nontrivial integer solution of X^2 - a Y^2 = b Z^2 with Z != 0, for
/// squarefree a and b != 0, or `None` when a local obstruction certifies
/// there is none.
pub fn legendre_solve(
    a: &BigInt,
    b: &BigInt,
    budget: FactorBudget,
) -> Result<Option<(BigInt, BigInt, BigInt)>, PadicError> {
    assert!(!a.is_zero() && !b.is_zero());
    // strip the square part of b so the working pair is squarefree
    let fb = factor(b, budget)?;
    let s = fb.square_part_root();
    let b0: BigInt = b / (&s * &s);
    let sol = solve_squarefree(a, &b0, budget)?;
    Ok(sol.map(|(x, y, z)| {
        // (x, y, z) solves for b0; rescale to b = b0 s^2
        primitive(x * &s, y * &s, z)
    }))
}

fn solve_squarefree(
    a: &BigInt,
    b: &BigInt,
    budget: FactorBudget,
) -> Result<Option<(BigInt, BigInt, BigInt)>, PadicError> {
    let one = BigInt::one();
    // base cases with |a|, |b| <= 1
    if a.abs() <= one && b.abs() <= one {
        let neg = BigInt::from(-1);
        return Ok(if *a == one && *b == one {
            Some((one.clone(), BigInt::zero(), one))
        } else if *a == one && *b == neg {
            Some((BigInt::zero(), one.clone(), one))
        } else if *a == neg && *b == one {
            Some((one.clone(), BigInt::zero(), one))
        } else {
            // X^2 + Y^2 + Z^2 = 0 over R
            None
        });
    }
    if b.abs() < a.abs() {
        // swap the roles of a and b: X^2 - bY^2 = aZ^2
        return Ok(solve_squarefree(b, a, budget)?.map(|(x, y, z)| (x, z, y)));
    }
    if *a == one {
        // X^2 - Y^2 = b Z^2 splits as a difference of squares
        return Ok(Some(if b.is_odd() {
            primitive((b + 1) / 2, (b - 1) / 2, one)
        } else {
            primitive(b + 1, b - 1, BigInt::from(2))
        }));
    }
    // descent step on |b| >= max(2, |a|)
    let fb = factor(b, budget)?;
    let primes: Vec<BigInt> = fb.factors.iter().map(|(p, _)| p.clone()).collect();
    let r = match sqrt_mod_squarefree(a, &primes) {
        Some(r) => r,
        None => return Ok(None),
    };
    // centre r so that |r| <= |b|/2
    let babs = b.abs();
    let r = if &r * 2 > babs { r - &babs } else { r };
    let c = (&r * &r - a) / b;
    debug_assert_eq!(&(&r * &r - a) % b, BigInt::zero());
    if c.is_zero() {
        // r^2 = a with a squarefree forces a = 1, handled above
        unreachable!("square squarefree a != 1");
    }
    let fc = factor(&c, budget)?;
    let m = fc.square_part_root();
    let c0 = &c / (&m * &m);
    let inner = solve_squarefree(a, &c0, budget)?;
    Ok(inner.map(|(x1, y1, z1)| {
        // (r^2 - a)(x1^2 - a y1^2) = (r x1 + a y1)^2 - a (x1 + r y1)^2
        // with x1^2 - a y1^2 = c0 z1^2 and r^2 - a = b c = b c0 m^2
        let x = &r * &x1 + a * &y1;
        let y = &x1 + &r * &y1;
        let z = &c0 * &m * &z1;
        primitive(x, y, z)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn check(a: i64, b: i64) -> Option<(BigInt, BigInt, BigInt)> {
        let sol = legendre_solve(&bi(a), &bi(b), FactorBudget::default()).unwrap();
        if let Some((x, y, z)) = &sol {
            assert!(!z.is_zero(), "need affine solutions, a={a} b={b}");
            assert_eq!(x * x - bi(a) * y * y, bi(b) * z * z, "a={a} b={b}");
        }
        sol
    }

    #[test]
    fn solves_where_solvable() {
        for (a, b) in [
            (2i64, -1i64),
            (2, 7),
            (2, -937),
            (-1, 2),
            (-1, 5),
            (-5, 21),
            (3, 6),
            (3, 13),
            (17, 8),
            (-6, 10),
            (13, 3),
            (-5, 1),
            (5, 11 * 19),
        ] {
            assert!(check(a, b).is_some(), "({a}, {b}) should be solvable");
        }
    }

    #[test]
    fn certifies_local_obstructions() {
        for (a, b) in [
            (-1i64, -1i64),
            (-1, 3),
            (3, 2),
            (3, 5),
            (-5, 3),
            (-1, -2),
            (5, 2),
            (5, 3),
        ] {
            assert!(check(a, b).is_none(), "({a}, {b}) should be obstructed");
        }
    }

    #[test]
    fn agrees_with_hilbert_symbol_criterion() {
        use crate::padic::{hilbert_symbol, Place};
        use num_rational::BigRational;
        // solvable over Q iff (a, b)_v = 1 at every relevant place
        for a in [-1i64, 2, -2, 3, -5, 17, -6, 10] {
            for b in [-1i64, 2, 3, 5, -7, 21, -30, 937] {
                let ra = BigRational::from(bi(a));
                let rb = BigRational::from(bi(b));
                let mut everywhere = hilbert_symbol(&ra, &rb, &Place::Infinite) == 1;
                for p in [2i64, 3, 5, 7, 11, 13, 17, 937] {
                    everywhere &=
                        hilbert_symbol(&ra, &rb, &Place::Finite(bi(p))) == 1;
                }
                assert_eq!(
                    check(a, b).is_some(),
                    everywhere,
                    "Hasse-Minkowski mismatch at a={a} b={b}"
                );
            }
        }
    }
}
