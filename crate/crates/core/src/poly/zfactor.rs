//! Irreducibility over Z: degree-pattern screening across good primes,
//! then Zassenhaus recombination (Hensel-lifted modular factors against a
//! Mignotte-style bound) for small degrees.

use super::modp::ModPoly;
use super::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Outcome of the irreducibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A witness proper factorisation f = g * h over Z.
    Reducible(IntPoly, IntPoly),
    /// The screen was inconclusive and the degree is out of Zassenhaus range.
    Unverified,
}

const SCREEN_PRIMES: usize = 25;
const ZASSENHAUS_MAX_DEGREE: usize = 8;

/// gcd over Z (primitive, positive leading coefficient) via rational Euclid.
fn gcd_z(f: &IntPoly, g: &IntPoly) -> IntPoly {
    use num_rational::BigRational;
    let to_rat = |p: &IntPoly| -> Vec<BigRational> {
        p.coeffs().iter().map(|c| BigRational::from(c.clone())).collect()
    };
    let norm = |mut v: Vec<BigRational>| -> Vec<BigRational> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    };
    let mut a = norm(to_rat(f));
    let mut b = norm(to_rat(g));
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        let lc = b.last().unwrap().clone();
        let mut r = a.clone();
        while r.len() > db {
            let top = r.last().unwrap().clone();
            let k = r.len() - 1 - db;
            let q = top / &lc;
            for (j, c) in b.iter().enumerate() {
                let sub = &q * c;
                r[k + j] -= sub;
            }
            r = norm(r);
            if r.len() <= db {
                break;
            }
        }
        a = b;
        b = norm(r);
    }
    // clear denominators and take the primitive part
    let mut den = BigInt::one();
    for c in &a {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = a.iter().map(|c| (c * BigRational::from(den.clone())).to_integer()).collect();
    let p = IntPoly::new(ints);
    let content = p.content();
    if content.is_zero() {
        return IntPoly::zero();
    }
    let mut out = IntPoly::new(p.coeffs().iter().map(|c| c / &content).collect());
    if out.leading_coefficient().is_negative() {
        out = out.neg();
    }
    out
}

/// Proper-factor degrees consistent with a modular degree pattern.
fn possible_degrees(pattern: &[usize]) -> Vec<bool> {
    let n: usize = pattern.iter().sum();
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in pattern {
        for i in (0..=n.saturating_sub(d)).rev() {
            if reach[i] {
                reach[i + d] = true;
            }
        }
    }
    reach
}

struct LiftedPair {
    g: ModPoly,
    h: ModPoly,
    s: ModPoly,
    t: ModPoly,
}

/// One quadratic Hensel step: factorisation and Bezout data mod m -> mod m^2.
fn hensel_step(f: &IntPoly, pair: &LiftedPair, m: &BigInt) -> LiftedPair {
    let m2 = m * m;
    let fm = ModPoly::from_int_poly(f, &m2);
    let g = ModPoly::new(&m2, pair.g.coeffs().to_vec());
    let h = ModPoly::new(&m2, pair.h.coeffs().to_vec());
    let s = ModPoly::new(&m2, pair.s.coeffs().to_vec());
    let t = ModPoly::new(&m2, pair.t.coeffs().to_vec());
    let e = fm.sub(&g.mul(&h));
    let (q, r) = t.mul(&e).divrem(&g);
    let g_star = g.add(&r);
    let h_star = h.add(&s.mul(&e)).add(&q.mul(&h));
    let b = s.mul(&g_star).add(&t.mul(&h_star)).sub(&ModPoly::one(&m2));
    let (q2, r2) = t.mul(&b).divrem(&g_star);
    let t_star = t.sub(&r2);
    let s_star = s.sub(&s.mul(&b)).sub(&q2.mul(&h_star));
    LiftedPair {
        g: g_star,
        h: h_star,
        s: s_star,
        t: t_star,
    }
}

/// Lift `f = lc(f) * prod(factors)` from mod p to mod p^(2^j) >= target.
fn lift_factors(f: &IntPoly, factors: &[ModPoly], p: &BigInt, target: &BigInt) -> (Vec<ModPoly>, BigInt) {
    let mut modulus = p.clone();
    while &modulus < target {
        modulus = &modulus * &modulus;
    }
    let mut out = vec![];
    lift_rec(f, factors, p, &modulus, &mut out);
    (out, modulus)
}

fn lift_rec(f: &IntPoly, factors: &[ModPoly], p: &BigInt, target: &BigInt, out: &mut Vec<ModPoly>) {
    if factors.len() == 1 {
        // the lifted factor is monic f / lc
        let fm = ModPoly::from_int_poly(f, target);
        out.push(fm.make_monic());
        return;
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g0 = left
        .iter()
        .fold(ModPoly::one(p), |acc, u| acc.mul(u));
    let lc = f.leading_coefficient();
    let h0 = right
        .iter()
        .fold(ModPoly::constant(p, lc.clone()), |acc, u| acc.mul(u));
    // Bezout: s g0 + t h0 = 1 mod p
    let (s0, t0) = bezout(&g0, &h0);
    let mut pair = LiftedPair {
        g: g0,
        h: h0,
        s: s0,
        t: t0,
    };
    let mut m = p.clone();
    while &m < target {
        pair = hensel_step(f, &pair, &m);
        m = &m * &m;
    }
    // recurse with the lifted halves as new targets
    let g_int = IntPoly::new(centered(&pair.g, target));
    let h_int = IntPoly::new(centered(&pair.h, target));
    lift_rec(&g_int, left, p, target, out);
    lift_rec(&h_int, right, p, target, out);
}

/// Extended Euclid for coprime polynomials mod p: s*a + t*b = 1.
fn bezout(a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
    let p = a.p.clone();
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = ModPoly::one(&p);
    let mut s1 = ModPoly::zero(&p);
    let mut t0 = ModPoly::zero(&p);
    let mut t1 = ModPoly::one(&p);
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let ns = s0.sub(&q.mul(&s1));
        s0 = std::mem::replace(&mut s1, ns);
        let nt = t0.sub(&q.mul(&t1));
        t0 = std::mem::replace(&mut t1, nt);
    }
    // r0 is a nonzero constant
    let inv = crate::padic::inv_mod(&r0.leading_coefficient(), &p).expect("coprime factors");
    (s0.mul_scalar(&inv), t0.mul_scalar(&inv))
}

/// Coefficients of a mod-m polynomial centered into (-m/2, m/2].
fn centered(f: &ModPoly, m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    f.coeffs()
        .iter()
        .map(|c| {
            if c > &half {
                c - m
            } else {
                c.clone()
            }
        })
        .collect()
}

/// Zassenhaus recombination: search for a proper factor of f over Z.
fn zassenhaus(f: &IntPoly, fp: &ModPoly, p: &BigInt) -> Option<(IntPoly, IntPoly)> {
    let n = f.degree().unwrap();
    let factors = fp.make_monic().factor_squarefree();
    if factors.len() == 1 {
        return None;
    }
    let lc = f.leading_coefficient();
    // Mignotte-style bound on factor coefficients, with the lc multiplier
    let height = f
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let bound: BigInt = (BigInt::one() << (n + 2)) * BigInt::from(n as u64 + 1) * height * lc.abs();
    let target = &bound * 2 + 1;
    let (lifted, modulus) = lift_factors(f, &factors, p, &target);

    let r = lifted.len();
    // subsets by increasing cardinality up to half
    for size in 1..=r / 2 {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mut cand = ModPoly::constant(&modulus, lc.clone());
            for &i in &idx {
                cand = cand.mul(&lifted[i]);
            }
            let cand_int = IntPoly::new(centered(&cand, &modulus));
            let content = cand_int.content();
            if !content.is_zero() {
                let prim = IntPoly::new(cand_int.coeffs().iter().map(|c| c / &content).collect());
                if prim.degree().is_some_and(|d| d >= 1 && d < n) {
                    if let Some(q) = f.div_exact(&prim) {
                        return Some((prim, q));
                    }
                }
            }
            // next subset
            let mut i = size;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if idx[i] != i + r - size {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    None
}

/// Decide irreducibility of a primitive polynomial over Z.
///
/// Degree-pattern intersection across good primes settles most inputs; the
/// rest go through Zassenhaus when deg <= 8, else `Unverified`.
pub fn irreducible_over_z(f: &IntPoly) -> Irreducibility {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Irreducibility::Unverified,
    };
    if n == 1 {
        return Irreducibility::Irreducible;
    }
    // a repeated factor is a factor
    let sq = gcd_z(f, &f.derivative());
    if sq.degree().is_some_and(|d| d >= 1) {
        let quot = f.div_exact(&sq).expect("gcd divides");
        return Irreducibility::Reducible(sq, quot);
    }
    // rational roots would be cheap factors, but the pattern screen finds
    // them anyway; go straight to screening
    let lc = f.leading_coefficient();
    let mut possible = vec![true; n + 1];
    let mut screened = 0usize;
    let mut best_prime: Option<(usize, BigInt, ModPoly)> = None;
    let mut p = BigInt::from(3);
    while screened < SCREEN_PRIMES {
        if (&lc % &p).is_zero() {
            p = next_odd_prime(&p);
            continue;
        }
        let fp = ModPoly::from_int_poly(f, &p);
        if fp.gcd(&fp.derivative()).degree() != Some(0) {
            p = next_odd_prime(&p);
            continue;
        }
        let pattern = fp.factor_degrees();
        if pattern.len() == 1 {
            return Irreducibility::Irreducible;
        }
        let reach = possible_degrees(&pattern);
        for d in 0..=n {
            possible[d] = possible[d] && reach[d];
        }
        if !(1..n).any(|d| possible[d]) {
            return Irreducibility::Irreducible;
        }
        if best_prime
            .as_ref()
            .map(|(k, _, _)| pattern.len() < *k)
            .unwrap_or(true)
        {
            best_prime = Some((pattern.len(), p.clone(), fp));
        }
        screened += 1;
        p = next_odd_prime(&p);
    }
    if n > ZASSENHAUS_MAX_DEGREE {
        return Irreducibility::Unverified;
    }
    let (_, p, fp) = best_prime.expect("screened at least one prime");
    match zassenhaus(f, &fp, &p) {
        Some((g, h)) => Irreducibility::Reducible(g, h),
        None => Irreducibility::Irreducible,
    }
}

fn next_odd_prime(p: &BigInt) -> BigInt {
    let mut q = p + 2;
    while !crate::padic::is_prime(&q) {
        q += 2;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_and_eisenstein() {
        assert_eq!(
            irreducible_over_z(&IntPoly::from_i64(&[5, 3])),
            Irreducibility::Irreducible
        );
        // Eisenstein at 3
        assert_eq!(
            irreducible_over_z(&IntPoly::from_i64(&[3, 3, 6, 0, 0, 1])),
            Irreducibility::Irreducible
        );
        assert_eq!(
            irreducible_over_z(&IntPoly::from_i64(&[-17, 0, 1])),
            Irreducibility::Irreducible
        );
    }

    #[test]
    fn detects_products() {
        // (t^2 + 1)(t^2 + 2): both factors split at the same primes often,
        // so this exercises recombination
        let f = IntPoly::from_i64(&[1, 0, 1]).mul(&IntPoly::from_i64(&[2, 0, 1]));
        match irreducible_over_z(&f) {
            Irreducibility::Reducible(g, h) => {
                assert_eq!(g.mul(&h), f);
                assert!(g.degree().unwrap() >= 1 && h.degree().unwrap() >= 1);
            }
            other => panic!("expected reducible, got {other:?}"),
        }
        // t^2 * (t+1) has a repeated factor
        let f = IntPoly::from_i64(&[0, 0, 1]).mul(&IntPoly::from_i64(&[1, 1]));
        assert!(matches!(
            irreducible_over_z(&f),
            Irreducibility::Reducible(_, _)
        ));
    }

    #[test]
    fn swinnerton_dyer_style() {
        // (t^2 - 2)(t^2 - 3)(t^2 - 6) is reducible but has no linear factor;
        // minimal poly of sqrt2 + sqrt3, t^4 - 10t^2 + 1, is irreducible yet
        // splits into quadratics mod every prime
        let f = IntPoly::from_i64(&[1, 0, -10, 0, 1]);
        assert_eq!(irreducible_over_z(&f), Irreducibility::Irreducible);
        let g = IntPoly::from_i64(&[-2, 0, 1])
            .mul(&IntPoly::from_i64(&[-3, 0, 1]))
            .mul(&IntPoly::from_i64(&[-6, 0, 1]));
        assert!(matches!(
            irreducible_over_z(&g),
            Irreducibility::Reducible(_, _)
        ));
    }

    #[test]
    fn negative_leading_coefficient() {
        // -t^4 + 43 = -(t^4 - 43), irreducible up to units
        assert_eq!(
            irreducible_over_z(&IntPoly::from_i64(&[43, 0, 0, 0, -1])),
            Irreducibility::Irreducible
        );
    }

    #[test]
    fn berg_quintic() {
        assert_eq!(
            irreducible_over_z(&IntPoly::from_i64(&[32, 20, 0, 0, 0, 1])),
            Irreducibility::Irreducible
        );
    }
}
