//! Multivariate Hensel lifting for the surface quadric
//! x^2 + T xy + M y^2 - P(t).

use super::{inv_mod, valuation, PadicError, Valuation};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// A residue solution (x, y, t) of the quadric congruence at some modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueTriple {
    #[serde(with = "crate::padic::bigint_string")]
    pub x: BigInt,
    #[serde(with = "crate::padic::bigint_string")]
    pub y: BigInt,
    #[serde(with = "crate::padic::bigint_string")]
    pub t: BigInt,
}

fn poly_eval(coeffs: &[BigInt], t: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * t + c;
    }
    acc
}

fn poly_deriv_eval(coeffs: &[BigInt], t: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for (i, c) in coeffs.iter().enumerate().skip(1).rev() {
        acc = acc * t + c * BigInt::from(i as u64);
    }
    acc
}

fn f_value(trace: &BigInt, norm: &BigInt, rhs: &[BigInt], v: &ResidueTriple) -> BigInt {
    &v.x * &v.x + trace * &v.x * &v.y + norm * &v.y * &v.y - poly_eval(rhs, &v.t)
}

fn gradient(trace: &BigInt, norm: &BigInt, rhs: &[BigInt], v: &ResidueTriple) -> [BigInt; 3] {
    [
        BigInt::from(2) * &v.x + trace * &v.y,
        trace * &v.x + BigInt::from(2) * norm * &v.y,
        -poly_deriv_eval(rhs, &v.t),
    ]
}

fn min_grad_valuation(grad: &[BigInt; 3], p: &BigInt) -> Valuation {
    grad.iter()
        .map(|g| valuation(g, p))
        .min()
        .unwrap_or(Valuation::Infinity)
}

/// Lift a solution of x^2 + T xy + M y^2 = P(t) mod p^from_e to mod p^to_e.
///
/// The congruence quadric is given by the form coefficients `trace`, `norm`
/// and the coefficients of P (lowest degree first). The start must satisfy
/// the congruence at `from_e`, and `from_e` must exceed twice the gradient
/// valuation at the start; under that certificate the lift always exists.
/// An exact integral solution is returned unchanged at any precision.
pub fn hensel_lift_quadratic(
    trace: &BigInt,
    norm: &BigInt,
    rhs: &[BigInt],
    start: &ResidueTriple,
    p: &BigInt,
    from_e: u64,
    to_e: u64,
) -> Result<ResidueTriple, PadicError> {
    let target_mod = p.pow(to_e as u32);
    let reduce = |v: &ResidueTriple| ResidueTriple {
        x: v.x.mod_floor(&target_mod),
        y: v.y.mod_floor(&target_mod),
        t: v.t.mod_floor(&target_mod),
    };

    let f0 = f_value(trace, norm, rhs, start);
    if f0.is_zero() {
        return Ok(reduce(start));
    }
    let mut k = match valuation(&f0, p) {
        Valuation::Finite(v) => v,
        Valuation::Infinity => unreachable!(),
    };
    if k < from_e {
        return Err(PadicError::Domain(format!(
            "start only satisfies the congruence mod p^{k}, not p^{from_e}"
        )));
    }
    let grad0 = gradient(trace, norm, rhs, start);
    let d = match min_grad_valuation(&grad0, p) {
        Valuation::Finite(d) => d,
        Valuation::Infinity => {
            return Err(PadicError::PrecisionError {
                from_e,
                grad: u64::MAX,
            })
        }
    };
    if from_e <= 2 * d {
        return Err(PadicError::PrecisionError { from_e, grad: d });
    }

    let mut cur = start.clone();
    while k < to_e {
        let fv = f_value(trace, norm, rhs, &cur);
        if fv.is_zero() {
            break;
        }
        k = match valuation(&fv, p) {
            Valuation::Finite(v) => v.min(to_e),
            Valuation::Infinity => break,
        };
        if k >= to_e {
            break;
        }
        let grad = gradient(trace, norm, rhs, &cur);
        // the minimal gradient valuation is stable at d for a certified start
        let (idx, gval) = grad
            .iter()
            .enumerate()
            .filter_map(|(i, g)| valuation(g, p).finite().map(|v| (i, v)))
            .min_by_key(|&(_, v)| v)
            .expect("gradient cannot vanish identically for a certified start");
        debug_assert!(k > 2 * gval);
        let unit = &grad[idx] / p.pow(gval as u32);
        let unit_inv = inv_mod(&unit.mod_floor(p), p).expect("unit gradient part");
        let s = ((-&fv / p.pow(k as u32)) * unit_inv).mod_floor(p);
        let step = s * p.pow((k - gval) as u32);
        match idx {
            0 => cur.x += step,
            1 => cur.y += step,
            _ => cur.t += step,
        }
    }
    let lifted = reduce(&cur);
    debug_assert!(f_value(trace, norm, rhs, &lifted)
        .mod_floor(&target_mod)
        .is_zero());
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn poly(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| bi(c)).collect()
    }

    // x^2 - 2 y^2 = t^5 + 6 t^2 + 3 t + 3
    fn ex11() -> (BigInt, BigInt, Vec<BigInt>) {
        (bi(0), bi(-2), poly(&[3, 3, 6, 0, 0, 1]))
    }

    #[test]
    fn lifts_mod_8_start() {
        let (tr, nm, rhs) = ex11();
        let start = ResidueTriple {
            x: bi(1),
            y: bi(1),
            t: bi(4),
        };
        let lifted = hensel_lift_quadratic(&tr, &nm, &rhs, &start, &bi(2), 3, 4).unwrap();
        let m = bi(16);
        let f = f_value(&tr, &nm, &rhs, &lifted);
        assert!(f.mod_floor(&m).is_zero());
        // further lifting keeps working
        let deep = hensel_lift_quadratic(&tr, &nm, &rhs, &start, &bi(2), 3, 12).unwrap();
        assert!(f_value(&tr, &nm, &rhs, &deep)
            .mod_floor(&bi(2).pow(12))
            .is_zero());
    }

    #[test]
    fn lifts_mod_3_start() {
        let (tr, nm, rhs) = ex11();
        let start = ResidueTriple {
            x: bi(1),
            y: bi(0),
            t: bi(1),
        };
        let lifted = hensel_lift_quadratic(&tr, &nm, &rhs, &start, &bi(3), 1, 7).unwrap();
        assert!(f_value(&tr, &nm, &rhs, &lifted)
            .mod_floor(&bi(3).pow(7))
            .is_zero());
    }

    #[test]
    fn exact_solution_unchanged() {
        let (tr, nm, rhs) = ex11();
        let start = ResidueTriple {
            x: bi(59),
            y: bi(47),
            t: bi(-4),
        };
        assert!(f_value(&tr, &nm, &rhs, &start).is_zero());
        let out = hensel_lift_quadratic(&tr, &nm, &rhs, &start, &bi(5), 1, 9).unwrap();
        let m = bi(5).pow(9);
        assert_eq!(out.x, bi(59).mod_floor(&m));
        assert_eq!(out.t, bi(-4).mod_floor(&m));
    }

    #[test]
    fn precision_error_when_uncertified() {
        // x^2 - 2y^2 = t^2: (0,0,0) solves mod 2 but every gradient vanishes
        let rhs = poly(&[0, 0, 1]);
        let start = ResidueTriple {
            x: bi(0),
            y: bi(0),
            t: bi(2),
        };
        let err =
            hensel_lift_quadratic(&bi(0), &bi(-2), &rhs, &start, &bi(2), 2, 5).unwrap_err();
        assert!(matches!(err, PadicError::PrecisionError { .. }));
    }

    #[test]
    fn consistency_of_staged_lifting() {
        let (tr, nm, rhs) = ex11();
        let start = ResidueTriple {
            x: bi(1),
            y: bi(0),
            t: bi(1),
        };
        let once = hensel_lift_quadratic(&tr, &nm, &rhs, &start, &bi(3), 1, 6).unwrap();
        let staged = hensel_lift_quadratic(&tr, &nm, &rhs, &start, &bi(3), 1, 3).unwrap();
        let staged = hensel_lift_quadratic(&tr, &nm, &rhs, &staged, &bi(3), 3, 6).unwrap();
        // both satisfy the congruence mod 3^6 and agree where determined
        let m = bi(3).pow(6);
        assert!(f_value(&tr, &nm, &rhs, &once).mod_floor(&m).is_zero());
        assert!(f_value(&tr, &nm, &rhs, &staged).mod_floor(&m).is_zero());
    }
}
