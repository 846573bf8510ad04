//! Hilbert symbols (a, b)_v over Q by the closed-form unit/valuation
//! formulas, including the place 2 and the real place.

use super::{inv_mod, kronecker_symbol, valuation_rational, Place};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Unit part of x at p reduced mod p^k, for v_p(x) already stripped.
fn unit_mod(x: &BigRational, p: &BigInt, v: i64, k: u32) -> BigInt {
    let modulus = p.pow(k);
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    let mut vv = v;
    while vv > 0 {
        num /= p;
        vv -= 1;
    }
    while vv < 0 {
        den /= p;
        vv += 1;
    }
    let num = num.mod_floor(&modulus);
    let den_inv = inv_mod(&den.mod_floor(&modulus), &modulus).expect("denominator unit");
    (num * den_inv).mod_floor(&modulus)
}

fn eps(u: &BigInt) -> u8 {
    // (u-1)/2 mod 2 for odd u
    if u.mod_floor(&BigInt::from(4)) == BigInt::from(1) {
        0
    } else {
        1
    }
}

fn omega(u: &BigInt) -> u8 {
    // (u^2-1)/8 mod 2 for odd u
    let r = u.mod_floor(&BigInt::from(8));
    if r == BigInt::from(1) || r == BigInt::from(7) {
        0
    } else {
        1
    }
}

/// The Hilbert symbol (a, b)_v in {+1, -1}: whether z^2 = a x^2 + b y^2 has
/// a nontrivial solution over the completion at v.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, v: &Place) -> i8 {
    assert!(!a.is_zero() && !b.is_zero(), "hilbert_symbol needs nonzero arguments");
    match v {
        Place::Infinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(p) => {
            let alpha = valuation_rational(a, p).unwrap();
            let beta = valuation_rational(b, p).unwrap();
            if p == &BigInt::from(2) {
                let u = unit_mod(a, p, alpha, 3);
                let w = unit_mod(b, p, beta, 3);
                let mut e = eps(&u) * eps(&w);
                if alpha.rem_euclid(2) == 1 {
                    e += omega(&w);
                }
                if beta.rem_euclid(2) == 1 {
                    e += omega(&u);
                }
                if e % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                let u = unit_mod(a, p, alpha, 1);
                let w = unit_mod(b, p, beta, 1);
                let mut s: i8 = 1;
                if alpha.rem_euclid(2) == 1 && beta.rem_euclid(2) == 1 {
                    // (-1)^{(p-1)/2}
                    if p.mod_floor(&BigInt::from(4)) == BigInt::from(3) {
                        s = -s;
                    }
                }
                if beta.rem_euclid(2) == 1 {
                    s *= kronecker_symbol(&u, p);
                }
                if alpha.rem_euclid(2) == 1 {
                    s *= kronecker_symbol(&w, p);
                }
                s
            }
        }
    }
}
