//! Exact real-root isolation by Sturm chains over the rationals.

use super::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// A polynomial over Q, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn from_int(f: &IntPoly) -> Self {
        RatPoly(f.coeffs().iter().map(|c| BigRational::from(c.clone())).collect())
    }

    fn normalize(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn derivative(&self) -> RatPoly {
        if self.0.len() <= 1 {
            return RatPoly(vec![]);
        }
        RatPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i as u64)))
                .collect(),
        )
        .normalize()
    }

    fn rem(&self, d: &RatPoly) -> RatPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return RatPoly(rem).normalize();
        }
        let lc = d.0.last().unwrap().clone();
        for k in (0..=rem.len() - 1 - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / &lc;
            for (j, c) in d.0.iter().enumerate() {
                let sub = &q * c;
                rem[k + j] -= sub;
            }
        }
        rem.truncate(dd);
        RatPoly(rem).normalize()
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone().normalize();
        let mut b = other.clone().normalize();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }
}

/// Sturm chain of the squarefree part of an integer polynomial.
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

/// Location of one real root: exact rational, or an open isolating interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLoc {
    Exact(BigRational),
    Interval(BigRational, BigRational),
}

impl RootLoc {
    pub fn low(&self) -> BigRational {
        match self {
            RootLoc::Exact(r) => r.clone(),
            RootLoc::Interval(a, _) => a.clone(),
        }
    }

    pub fn high(&self) -> BigRational {
        match self {
            RootLoc::Exact(r) => r.clone(),
            RootLoc::Interval(_, b) => b.clone(),
        }
    }
}

impl SturmChain {
    pub fn new(f: &IntPoly) -> Self {
        let f = RatPoly::from_int(f);
        let df = f.derivative();
        // squarefree part keeps the same real roots
        let g = f.gcd(&df);
        let f = if g.degree().is_some_and(|d| d > 0) {
            exact_div(&f, &g)
        } else {
            f
        };
        let mut chain = vec![f.clone()];
        let df = f.derivative();
        if !df.is_zero() {
            chain.push(df);
        }
        loop {
            let n = chain.len();
            if n < 2 || chain[n - 1].is_zero() {
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(RatPoly(r.0.iter().map(|c| -c).collect()));
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let s = v.is_positive();
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    /// Number of distinct real roots in (a, b].
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }

    /// All real roots as exact values or disjoint open isolating intervals,
    /// sorted increasingly, refined until each interval is narrower than
    /// `width`.
    pub fn isolate_roots(&self, f: &IntPoly, width: &BigRational) -> Vec<RootLoc> {
        if f.degree().map_or(true, |d| d == 0) {
            return vec![];
        }
        let bound = f.root_bound();
        let lo = -&bound;
        let hi = bound.clone();
        let mut stack = vec![(lo, hi)];
        let mut found = vec![];
        while let Some((a, b)) = stack.pop() {
            let n = self.count_roots(&a, &b);
            if n == 0 {
                continue;
            }
            let mid = (&a + &b) / BigRational::from(BigInt::from(2));
            if n == 1 {
                // single root in (a, b]; land on it exactly or shrink
                let (mut a, mut b) = (a, b);
                loop {
                    if f.eval_rational(&b).is_zero() {
                        found.push(RootLoc::Exact(b));
                        break;
                    }
                    if &b - &a < *width {
                        found.push(RootLoc::Interval(a, b));
                        break;
                    }
                    let m = (&a + &b) / BigRational::from(BigInt::from(2));
                    if f.eval_rational(&m).is_zero() {
                        found.push(RootLoc::Exact(m));
                        break;
                    }
                    if self.count_roots(&a, &m) == 1 {
                        b = m;
                    } else {
                        a = m;
                    }
                }
            } else {
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
        found.sort_by(|x, y| x.low().cmp(&y.low()));
        found
    }
}

fn exact_div(f: &RatPoly, g: &RatPoly) -> RatPoly {
    let dg = g.degree().unwrap();
    let df = f.degree().unwrap();
    let mut rem = f.0.clone();
    let mut q = vec![BigRational::zero(); df - dg + 1];
    let lc = g.0.last().unwrap().clone();
    for k in (0..=df - dg).rev() {
        let top = rem[k + dg].clone();
        if top.is_zero() {
            continue;
        }
        let qk = top / &lc;
        for (j, c) in g.0.iter().enumerate() {
            let sub = &qk * c;
            rem[k + j] -= sub;
        }
        q[k] = qk;
    }
    RatPoly(q).normalize()
}

/// Count of distinct real roots.
pub fn real_root_count(f: &IntPoly) -> usize {
    if f.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    let chain = SturmChain::new(f);
    let bound = f.root_bound();
    chain.count_roots(&-&bound, &bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_roots() {
        // t^2 - 2: two real roots
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(real_root_count(&f), 2);
        // t^2 + 1: none
        assert_eq!(real_root_count(&IntPoly::from_i64(&[1, 0, 1])), 0);
        // 43 - t^4: two
        assert_eq!(real_root_count(&IntPoly::from_i64(&[43, 0, 0, 0, -1])), 2);
        // t^5 + 6t^2 + 3t + 3: degree-5 fixture has exactly one real root
        assert_eq!(real_root_count(&IntPoly::from_i64(&[3, 3, 6, 0, 0, 1])), 1);
    }

    #[test]
    fn isolates_sqrt2() {
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let chain = SturmChain::new(&f);
        let roots = chain.isolate_roots(&f, &rat(1, 64));
        assert_eq!(roots.len(), 2);
        match &roots[1] {
            RootLoc::Interval(a, b) => {
                assert!(*a < rat(1414214, 1000000) && rat(1414213, 1000000) < *b);
                assert!(&(b - a) < &rat(1, 64));
            }
            RootLoc::Exact(_) => panic!("sqrt 2 is irrational"),
        }
    }

    #[test]
    fn exact_rational_roots() {
        // (t - 3)(t + 1)(t^2 + 1) has integer roots 3, -1
        let g = IntPoly::from_i64(&[-3, 1])
            .mul(&IntPoly::from_i64(&[1, 1]))
            .mul(&IntPoly::from_i64(&[1, 0, 1]));
        let chain = SturmChain::new(&g);
        let roots = chain.isolate_roots(&g, &rat(1, 1024));
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0], RootLoc::Exact(rat(-1, 1)));
        assert_eq!(roots[1], RootLoc::Exact(rat(3, 1)));
    }

    #[test]
    fn repeated_roots_squarefree_reduction() {
        // (t-1)^2 (t+2): Sturm on the squarefree part sees 2 distinct roots
        let f = IntPoly::from_i64(&[-1, 1])
            .mul(&IntPoly::from_i64(&[-1, 1]))
            .mul(&IntPoly::from_i64(&[2, 1]));
        assert_eq!(real_root_count(&f), 2);
    }
}
