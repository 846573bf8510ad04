//! Polynomial arithmetic over F_p with arbitrary-precision p: gcds,
//! Frobenius powering, root extraction and Cantor-Zassenhaus splitting.

use super::IntPoly;
use crate::padic::inv_mod;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A polynomial over F_p, coefficients reduced to [0, p), lowest degree
/// first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    pub p: BigInt,
    c: Vec<BigInt>,
}

impl ModPoly {
    pub fn new(p: &BigInt, coeffs: Vec<BigInt>) -> Self {
        let mut c: Vec<BigInt> = coeffs.into_iter().map(|x| x.mod_floor(p)).collect();
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ModPoly { p: p.clone(), c }
    }

    pub fn from_int_poly(f: &IntPoly, p: &BigInt) -> Self {
        Self::new(p, f.coeffs().to_vec())
    }

    pub fn zero(p: &BigInt) -> Self {
        ModPoly {
            p: p.clone(),
            c: vec![],
        }
    }

    pub fn one(p: &BigInt) -> Self {
        Self::new(p, vec![BigInt::one()])
    }

    pub fn t(p: &BigInt) -> Self {
        Self::new(p, vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(p: &BigInt, c: BigInt) -> Self {
        Self::new(p, vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.c.iter().rev() {
            acc = (acc * x + c).mod_floor(&self.p);
        }
        acc
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.c.iter().enumerate() {
            out[i] += b;
        }
        ModPoly::new(&self.p, out)
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.c.iter().enumerate() {
            out[i] -= b;
        }
        ModPoly::new(&self.p, out)
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(&self.p);
        }
        let mut out = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in other.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ModPoly::new(&self.p, out)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> ModPoly {
        ModPoly::new(&self.p, self.c.iter().map(|c| c * s).collect())
    }

    pub fn divrem(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        if self.degree().map_or(true, |n| n < dd) {
            return (ModPoly::zero(&self.p), self.clone());
        }
        let lc_inv = inv_mod(&d.leading_coefficient(), &self.p).expect("unit leading coefficient");
        let mut rem = self.c.clone();
        let n = rem.len() - 1;
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = rem[k + dd].mod_floor(&self.p);
            if top.is_zero() {
                continue;
            }
            let qk = (&top * &lc_inv).mod_floor(&self.p);
            for (j, c) in d.c.iter().enumerate() {
                rem[k + j] = (&rem[k + j] - &qk * c).mod_floor(&self.p);
            }
            q[k] = qk;
        }
        (ModPoly::new(&self.p, q), ModPoly::new(&self.p, rem))
    }

    pub fn rem(&self, d: &ModPoly) -> ModPoly {
        self.divrem(d).1
    }

    pub fn make_monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(&self.leading_coefficient(), &self.p).expect("unit leading coefficient");
        self.mul_scalar(&inv)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic()
        }
    }

    pub fn derivative(&self) -> ModPoly {
        if self.c.len() <= 1 {
            return ModPoly::zero(&self.p);
        }
        ModPoly::new(
            &self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i as u64))
                .collect(),
        )
    }

    /// self^exp mod m.
    pub fn pow_mod(&self, exp: &BigInt, m: &ModPoly) -> ModPoly {
        let mut base = self.rem(m);
        let mut result = ModPoly::one(&self.p);
        let mut e = exp.clone();
        while e.is_positive() {
            if e.is_odd() {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        result
    }

    /// t^(p^k) mod self, by iterated Frobenius.
    pub fn frobenius_power(&self, k: usize) -> ModPoly {
        let mut h = ModPoly::t(&self.p);
        for _ in 0..k {
            h = h.pow_mod(&self.p.clone(), self);
        }
        h
    }

    /// Distinct roots in F_p, sorted.
    pub fn roots(&self) -> Vec<BigInt> {
        if self.is_zero() {
            panic!("roots of the zero polynomial");
        }
        if self.degree() == Some(0) {
            return vec![];
        }
        if let Some(p_small) = self.p.to_u64().filter(|&p| p <= 4096) {
            let mut out = vec![];
            for r in 0..p_small {
                let rb = BigInt::from(r);
                if self.eval(&rb).is_zero() {
                    out.push(rb);
                }
            }
            return out;
        }
        // large p: strip to the product of distinct linear factors, then split
        let tp = ModPoly::t(&self.p).pow_mod(&self.p.clone(), self);
        let lin = tp.sub(&ModPoly::t(&self.p)).gcd(self);
        let mut roots = vec![];
        split_linear(&lin, &mut roots, &mut 0x9e3779b97f4a7c15u64);
        roots.sort();
        roots
    }

    /// Decompose a squarefree monic polynomial into monic irreducible
    /// factors (Cantor-Zassenhaus, odd p).
    pub fn factor_squarefree(&self) -> Vec<ModPoly> {
        assert!(self.p.is_odd(), "Cantor-Zassenhaus path needs odd p");
        let f = self.make_monic();
        let mut out = vec![];
        let mut seed = 0x2545f4914f6cdd1du64;
        // distinct-degree first
        let mut rest = f.clone();
        let mut d = 1usize;
        let mut h = ModPoly::t(&self.p);
        while let Some(n) = rest.degree() {
            if n == 0 {
                break;
            }
            if 2 * d > n {
                out.push(rest.clone());
                break;
            }
            h = h.pow_mod(&self.p.clone(), &rest);
            let g = h.sub(&ModPoly::t(&self.p)).gcd(&rest);
            if g.degree().is_some_and(|dg| dg > 0) {
                equal_degree_split(&g, d, &mut out, &mut seed);
                rest = rest.divrem(&g).0;
                h = h.rem(&rest);
            }
            d += 1;
        }
        out.sort_by(|a, b| (a.degree(), &a.c).cmp(&(b.degree(), &b.c)));
        out
    }

    /// For squarefree input, the multiset of irreducible factor degrees.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let f = self.make_monic();
        let mut degrees = vec![];
        let mut rest = f;
        let mut d = 1usize;
        let mut h = ModPoly::t(&self.p);
        while let Some(n) = rest.degree() {
            if n == 0 {
                break;
            }
            if 2 * d > n {
                degrees.push(n);
                break;
            }
            h = h.pow_mod(&self.p.clone(), &rest);
            let g = h.sub(&ModPoly::t(&self.p)).gcd(&rest);
            if let Some(dg) = g.degree() {
                if dg > 0 {
                    for _ in 0..dg / d {
                        degrees.push(d);
                    }
                    rest = rest.divrem(&g).0;
                    h = h.rem(&rest);
                }
            }
            d += 1;
        }
        degrees.sort();
        degrees
    }

    /// Product of the irreducible factors appearing to odd multiplicity.
    /// Requires p > deg(self) so Yun's decomposition applies.
    pub fn odd_multiplicity_part(&self) -> ModPoly {
        let f = self.make_monic();
        let mut out = ModPoly::one(&self.p);
        // Yun: f = prod a_i^i with the a_i squarefree and pairwise coprime
        let df = f.derivative();
        let u = f.gcd(&df);
        let mut v = f.divrem(&u).0;
        let mut w = df.divrem(&u).0;
        let mut i = 1usize;
        while v.degree().is_some_and(|d| d > 0) {
            let h = w.sub(&v.derivative());
            let a = v.gcd(&h);
            if a.degree().is_some_and(|d| d > 0) && i % 2 == 1 {
                out = out.mul(&a);
            }
            v = v.divrem(&a).0;
            w = h.divrem(&a).0;
            i += 1;
        }
        out
    }
}

fn next_seed(seed: &mut u64) -> u64 {
    *seed = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    *seed
}

fn random_poly(p: &BigInt, deg: usize, seed: &mut u64) -> ModPoly {
    let coeffs: Vec<BigInt> = (0..=deg)
        .map(|_| BigInt::from(next_seed(seed) >> 1).mod_floor(p))
        .collect();
    ModPoly::new(p, coeffs)
}

/// Split a product of distinct monic linear factors into its roots.
fn split_linear(f: &ModPoly, roots: &mut Vec<BigInt>, seed: &mut u64) {
    match f.degree() {
        None | Some(0) => {}
        Some(1) => {
            let f = f.make_monic();
            roots.push((-&f.coeffs()[0]).mod_floor(&f.p));
        }
        Some(_) => {
            let p = &f.p;
            let exp: BigInt = (p - BigInt::one()) >> 1;
            loop {
                let a = BigInt::from(next_seed(seed) >> 1).mod_floor(p);
                let base = ModPoly::new(p, vec![a, BigInt::one()]);
                let w = base.pow_mod(&exp, f).sub(&ModPoly::one(p));
                let g = w.gcd(f);
                if let Some(d) = g.degree() {
                    if d > 0 && d < f.degree().unwrap() {
                        split_linear(&g, roots, seed);
                        split_linear(&f.divrem(&g).0, roots, seed);
                        return;
                    }
                }
            }
        }
    }
}

/// Split a product of distinct degree-d irreducibles into the factors.
fn equal_degree_split(f: &ModPoly, d: usize, out: &mut Vec<ModPoly>, seed: &mut u64) {
    let n = f.degree().unwrap();
    if n == d {
        out.push(f.make_monic());
        return;
    }
    let p = &f.p;
    let exp = (p.pow(d as u32) - BigInt::one()) >> 1;
    loop {
        let t = random_poly(p, n - 1, seed);
        if t.degree().is_none() {
            continue;
        }
        let w = t.pow_mod(&exp, f).sub(&ModPoly::one(p));
        let g = w.gcd(f);
        if let Some(dg) = g.degree() {
            if dg > 0 && dg < n {
                equal_degree_split(&g, d, out, seed);
                equal_degree_split(&f.divrem(&g).0, d, out, seed);
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(p: i64, cs: &[i64]) -> ModPoly {
        ModPoly::new(
            &BigInt::from(p),
            cs.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    #[test]
    fn divrem_and_gcd() {
        let f = mp(7, &[1, 0, 1]); // t^2+1 = (t-3)(t-4) mod 7? 3^2=2 no. roots of t^2+1 mod 7: none
        let g = mp(7, &[3, 1]);
        let (q, r) = f.divrem(&g);
        assert_eq!(g.mul(&q).add(&r), f);
        let a = mp(5, &[4, 0, 1]); // t^2 - 1 = (t-1)(t+1)... t^2+4 = t^2-1 mod 5
        let b = mp(5, &[4, 1]); // t - 1
        assert_eq!(a.gcd(&b), b.make_monic());
    }

    #[test]
    fn roots_small_and_large() {
        // t^2 - 2 mod 7: roots 3, 4
        let f = mp(7, &[-2, 0, 1]);
        assert_eq!(f.roots(), vec![BigInt::from(3), BigInt::from(4)]);
        // same polynomial mod a large prime: t^2 - 4
        let p = BigInt::from(1_000_003i64);
        let f = ModPoly::new(&p, vec![BigInt::from(-4), BigInt::zero(), BigInt::one()]);
        assert_eq!(f.roots(), vec![BigInt::from(2), p - 2]);
    }

    #[test]
    fn factor_degrees_and_cz() {
        // (t^2+1)(t-1)(t-2) mod 11: t^2+1 irreducible mod 11
        let f = mp(11, &[1, 0, 1]).mul(&mp(11, &[-1, 1])).mul(&mp(11, &[-2, 1]));
        assert_eq!(f.factor_degrees(), vec![1, 1, 2]);
        let factors = f.factor_squarefree();
        assert_eq!(factors.len(), 3);
        let prod = factors
            .iter()
            .fold(ModPoly::one(&BigInt::from(11)), |acc, g| acc.mul(g));
        assert_eq!(prod, f.make_monic());
    }

    #[test]
    fn odd_multiplicity_part_strips_squares() {
        // f = (t-1)^2 (t-2)^3 (t-3) mod 101: odd part (t-2)(t-3)
        let p = BigInt::from(101);
        let lin = |r: i64| ModPoly::new(&p, vec![BigInt::from(-r), BigInt::one()]);
        let f = lin(1)
            .mul(&lin(1))
            .mul(&lin(2))
            .mul(&lin(2))
            .mul(&lin(2))
            .mul(&lin(3));
        let odd = f.odd_multiplicity_part();
        assert_eq!(odd, lin(2).mul(&lin(3)).make_monic());
    }

    #[test]
    fn frobenius_total_split_detector() {
        // t^2 - 17 splits mod 13 (17 = 4 mod 13 is a square)
        let f = mp(13, &[-17, 0, 1]);
        let tp = f.frobenius_power(1);
        let g = tp.sub(&ModPoly::t(&BigInt::from(13))).gcd(&f);
        assert_eq!(g.degree(), Some(2));
        // t^2 - 17 inert mod 3
        let f3 = mp(3, &[-17, 0, 1]);
        let tp3 = f3.frobenius_power(1);
        let g3 = tp3.sub(&ModPoly::t(&BigInt::from(3))).gcd(&f3);
        assert_eq!(g3.degree(), Some(0));
    }
}
