//! Exact arithmetic for generalised affine Chatelet surfaces
//! `N_K(x, y) = P(t)` over the integers.
//!
//! The crate is organised bottom-up:
//!
//! - [`padic`]: valuations, Kronecker and Hilbert symbols, square roots and
//!   Hensel lifting, primality and desk-scale factoring.
//! - [`poly`]: integer polynomials, arithmetic mod p, Sturm sequences and
//!   factorisation over Z.
//! - [`quadfield`]: the quadratic field K = Q(sqrt(a)), ideal arithmetic in
//!   two-element form, the narrow class group via binary quadratic forms,
//!   fundamental units and norm-equation solving.
//! - [`surface`]: the surface/model pair, local solvability certificates,
//!   invariant vectors and the adelic admissibility test.
//! - [`descent`]: conversion of rational norm-equation solutions into
//!   integral ones by narrow-class bookkeeping.
//! - [`chebotarev`]: covering prime tuples and uniformising shifts.
//! - [`pipeline`]: the end-to-end integral point search with
//!   machine-checkable reports.
//!
//! All arithmetic is exact: `BigInt` / `BigRational` throughout, no floats.

pub mod chebotarev;
pub mod descent;
pub mod padic;
pub mod pipeline;
pub mod poly;
pub mod quadfield;
pub mod surface;
