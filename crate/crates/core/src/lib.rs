//! Spin-weighted spherical harmonics for integer and half-integer spin.
//!
//! The crate evaluates `Y_{s,l,m}` through Wigner D-matrices, applies the
//! edth raising and lowering operators, computes the relative Euler angles
//! between two directions, and checks the spin-weighted addition theorem
//! together with its derivative and `m`-weighted generalisations.
//!
//! ```
//! use swsh::{Direction, HalfInt, QuantumNumbers, TheoremId, TheoremParams};
//!
//! let q = QuantumNumbers::new(HalfInt::from_twice(1), HalfInt::from_twice(3), HalfInt::from_twice(-1)).unwrap();
//! let dir = Direction::new(0.7, 1.9).unwrap();
//! let y = swsh::swsh_eval(q, dir);
//! assert!(y.norm() < 1.0);
//!
//! let p = TheoremParams::new(HalfInt::ONE, HalfInt::ZERO, HalfInt::from_int(2)).unwrap();
//! let other = Direction::new(2.2, 0.4).unwrap();
//! let lhs = swsh::lhs_sum(TheoremId::MWeight, &p, dir, other);
//! let rhs = swsh::rhs_closed(TheoremId::MWeight, &p, dir, other);
//! assert!((lhs - rhs).norm() < 1e-12);
//! ```

pub mod cli;
pub mod error;
pub mod geometry;
pub mod half;
pub mod report;
pub mod sum;
pub mod swsh;
pub mod theorems;
pub mod wigner;

pub use error::{Error, Result};
pub use geometry::{euler_consistency_residual, relative_euler, EulerAngles, Sheet};
pub use half::HalfInt;
pub use swsh::{
    de_residual, dphi, dtheta, edth_analytic, edth_numeric, swsh_eval, swsh_pole, Direction, Ladder, QuantumNumbers,
};
pub use theorems::{
    coincidence_rhs, lhs_sum, mode_sum, parameter_grid, rhs_closed, spinsame_rhs, verify, CheckReport, Mode,
    SphereSampler, TheoremId, TheoremParams,
};
pub use wigner::{log_factorial_half, wigner_big_d, wigner_small_d, wigner_small_d_sum, WignerArgs};
