//! Spin-weighted spherical harmonics and the edth ladder.
//!
//! `Y_{s,l,m}(theta, phi) = (-1)^s sqrt((2l+1)/4pi) conj(D^l_{m,-s}(phi, theta, 0))`
//! with `(-1)^s = e^{i pi s}`. Derivatives are taken through the ladder
//! operators, never by differentiating the d-matrix directly.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::wigner;

/// Smallest `sin(theta)` accepted by operators carrying `cot(theta)` or `1/sin(theta)`.
pub const MIN_SIN_THETA: f64 = 1e-3;

/// Default central-difference step.
pub const DEFAULT_STEP: f64 = 1e-5;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Spin weight, degree and azimuthal number `(s, l, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    s: HalfInt,
    ell: HalfInt,
    m: HalfInt,
}

impl QuantumNumbers {
    pub fn new(s: HalfInt, ell: HalfInt, m: HalfInt) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidQuantumNumbers(format!("s={s}, l={ell}, m={m}: {why}")));
        if ell < s.abs() {
            return bad("l must be at least |s|");
        }
        if m.abs() > ell {
            return bad("|m| must not exceed l");
        }
        if !ell.differs_by_integer(s) || !ell.differs_by_integer(m) {
            return bad("l - s and l - m must be integers");
        }
        Ok(Self { s, ell, m })
    }

    pub fn s(&self) -> HalfInt {
        self.s
    }

    pub fn ell(&self) -> HalfInt {
        self.ell
    }

    pub fn m(&self) -> HalfInt {
        self.m
    }

    /// Same `(l, m)` with a different spin weight, unchecked.
    fn with_spin(self, s: HalfInt) -> Self {
        debug_assert!(s.abs() <= self.ell);
        Self { s, ..self }
    }

    /// `(l - s)(l + s + 1)`, the square of the raising factor.
    pub fn raise_factor_sq(&self) -> f64 {
        (self.ell - self.s).to_f64() * (self.ell + self.s + HalfInt::ONE).to_f64()
    }

    /// `(l + s)(l - s + 1)`, the square of the lowering factor.
    pub fn lower_factor_sq(&self) -> f64 {
        (self.ell + self.s).to_f64() * (self.ell - self.s + HalfInt::ONE).to_f64()
    }

    fn can_raise(&self) -> bool {
        self.ell != self.s
    }

    fn can_lower(&self) -> bool {
        self.ell != -self.s
    }
}

/// A point `(theta, phi)` on the unit sphere.
///
/// `phi` is reduced into `[0, 2 pi)` once, on construction. Half-integer
/// harmonics change sign under `phi -> phi + 2 pi`, so every evaluation
/// uses the stored representative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !(0.0..=PI).contains(&theta) {
            return Err(Error::InvalidDirection(format!("theta = {theta} outside [0, pi]")));
        }
        if !phi.is_finite() {
            return Err(Error::InvalidDirection(format!("phi = {phi} is not finite")));
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Raising (edth) or lowering (edth-bar) operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ladder {
    Raise,
    Lower,
}

/// `Y_{s,l,m}` at the stored coordinates of `dir`.
pub fn swsh_eval(q: QuantumNumbers, dir: Direction) -> Complex64 {
    eval_at(q, dir.theta, dir.phi)
}

/// `Y_{s,l,m}` at raw coordinates; `phi` is used as given.
pub(crate) fn eval_at(q: QuantumNumbers, theta: f64, phi: f64) -> Complex64 {
    let d = wigner::small_d(q.ell, q.m, -q.s, theta);
    if d == 0.0 {
        return ZERO;
    }
    let norm = ((2.0 * q.ell.to_f64() + 1.0) / (4.0 * PI)).sqrt();
    q.s.sign_phase() * Complex64::from_polar(norm * d, q.m.to_f64() * phi)
}

/// Value at the north pole, `(-1)^s delta_{s,-m} sqrt((2l+1)/4pi)`, by branch.
pub fn swsh_pole(q: QuantumNumbers) -> Complex64 {
    if q.s != -q.m {
        return ZERO;
    }
    q.s.sign_phase() * ((2.0 * q.ell.to_f64() + 1.0) / (4.0 * PI)).sqrt()
}

/// Analytic edth / edth-bar applied to `Y_{s,l,m}`.
///
/// Raising gives `sqrt((l-s)(l+s+1)) Y_{s+1,l,m}`, lowering gives
/// `-sqrt((l+s)(l-s+1)) Y_{s-1,l,m}`. Annihilated cases return exact zero
/// without building out-of-range quantum numbers.
pub fn edth_analytic(q: QuantumNumbers, dir: Direction, op: Ladder) -> Complex64 {
    edth_at(q, dir.theta, dir.phi, op)
}

fn edth_at(q: QuantumNumbers, theta: f64, phi: f64, op: Ladder) -> Complex64 {
    match op {
        Ladder::Raise if q.can_raise() => {
            q.raise_factor_sq().sqrt() * eval_at(q.with_spin(q.s + HalfInt::ONE), theta, phi)
        }
        Ladder::Lower if q.can_lower() => {
            -q.lower_factor_sq().sqrt() * eval_at(q.with_spin(q.s - HalfInt::ONE), theta, phi)
        }
        _ => ZERO,
    }
}

fn check_interior(theta: f64, min_sin: f64) -> Result<()> {
    let sin_theta = theta.sin();
    if sin_theta < min_sin {
        return Err(Error::PoleProximity { sin_theta, min: min_sin });
    }
    Ok(())
}

/// Edth / edth-bar from their differential form, using central differences
/// of step `h` in `theta` and `phi`.
///
/// This is a test oracle for [`edth_analytic`]; it needs `sin(theta)` at
/// least [`MIN_SIN_THETA`] and `theta` at least `10 h` from either pole.
pub fn edth_numeric(q: QuantumNumbers, dir: Direction, op: Ladder, h: f64) -> Result<Complex64> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidStep(h));
    }
    let (theta, phi) = (dir.theta, dir.phi);
    check_interior(theta, MIN_SIN_THETA)?;
    if theta < 10.0 * h || PI - theta < 10.0 * h {
        return Err(Error::PoleProximity { sin_theta: theta.sin(), min: (10.0 * h).sin() });
    }
    let y = eval_at(q, theta, phi);
    let d_theta = (eval_at(q, theta + h, phi) - eval_at(q, theta - h, phi)) / (2.0 * h);
    let d_phi = (eval_at(q, theta, phi + h) - eval_at(q, theta, phi - h)) / (2.0 * h);
    let (sin_t, cot_t) = (theta.sin(), theta.cos() / theta.sin());
    let s = q.s.to_f64();
    Ok(match op {
        Ladder::Raise => -(d_theta + I * d_phi / sin_t - s * cot_t * y),
        Ladder::Lower => -(d_theta - I * d_phi / sin_t + s * cot_t * y),
    })
}

/// `dY/dtheta = -(edth + edth-bar) Y / 2`.
pub fn dtheta(q: QuantumNumbers, dir: Direction) -> Complex64 {
    dtheta_at(q, dir.theta, dir.phi)
}

pub(crate) fn dtheta_at(q: QuantumNumbers, theta: f64, phi: f64) -> Complex64 {
    -0.5 * (edth_at(q, theta, phi, Ladder::Raise) + edth_at(q, theta, phi, Ladder::Lower))
}

/// `d^2 Y / dtheta^2`, by applying the ladder decomposition twice.
fn dtheta2_at(q: QuantumNumbers, theta: f64, phi: f64) -> Complex64 {
    let mut acc = ZERO;
    if q.can_raise() {
        acc += q.raise_factor_sq().sqrt() * dtheta_at(q.with_spin(q.s + HalfInt::ONE), theta, phi);
    }
    if q.can_lower() {
        acc -= q.lower_factor_sq().sqrt() * dtheta_at(q.with_spin(q.s - HalfInt::ONE), theta, phi);
    }
    -0.5 * acc
}

/// `dY/dphi = i m Y`.
pub fn dphi(q: QuantumNumbers, dir: Direction) -> Complex64 {
    I * q.m.to_f64() * swsh_eval(q, dir)
}

/// Residual `|L[Y] + l(l+1) Y|` of the spin-weighted Laplace equation, where
/// `L = (1/sin) d_theta (sin d_theta) - (s^2 - 2 i s cos d_phi - d_phi^2) / sin^2`.
///
/// With these sign conventions `L` has eigenvalue `-l(l+1)`.
pub fn de_residual(q: QuantumNumbers, dir: Direction) -> Result<f64> {
    let (theta, phi) = (dir.theta, dir.phi);
    check_interior(theta, MIN_SIN_THETA)?;
    let (sin_t, cos_t) = theta.sin_cos();
    let (s, m, ell) = (q.s.to_f64(), q.m.to_f64(), q.ell.to_f64());

    let y = eval_at(q, theta, phi);
    let y_t = dtheta_at(q, theta, phi);
    let y_tt = dtheta2_at(q, theta, phi);
    let y_p = I * m * y;
    let y_pp = -m * m * y;

    let radial = y_tt + cos_t / sin_t * y_t;
    let angular = (s * s * y - 2.0 * I * s * cos_t * y_p - y_pp) / (sin_t * sin_t);
    Ok((radial - angular + ell * (ell + 1.0) * y).norm())
}
