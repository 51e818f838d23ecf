//! Relative zyz Euler angles between two directions on the sphere.
//!
//! For directions `n = (theta, phi)` and `n' = (theta', phi')` the angles
//! `(alpha, beta, gamma)` are read off the relative rotation
//! `Ry(-theta) Rz(phi' - phi) Ry(theta')` as
//! `Rz(-alpha) Ry(beta) Rz(-gamma)`, which is the orientation that makes the
//! spin-weighted addition theorem hold with `Y_{s,l,-s'}(beta, gamma)` on the
//! right-hand side. They satisfy
//!
//! ```text
//! cot alpha = cos(theta) cot(dphi) - cot(theta') sin(theta) csc(dphi)
//! cos beta  = cos(theta) cos(theta') + sin(theta) sin(theta') cos(dphi)
//! cot gamma = cos(theta') cot(dphi) - cot(theta) sin(theta') csc(dphi)
//! ```
//!
//! with `dphi = phi - phi'`.
//!
//! Half-integer representations see the SU(2) lift of the rotation, which
//! the three angles reduced to `(-pi, pi]` do not fix. [`EulerAngles`]
//! carries the missing sign as a [`Sheet`].

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::swsh::Direction;

/// Below this `sin(beta)` the zyz decomposition is treated as gimbal-locked.
const GIMBAL_SIN: f64 = 1e-15;

/// Which lift of the relative rotation the angles describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Sheet {
    /// `Rz(-alpha) Ry(beta) Rz(-gamma)` lifts to the same SU(2) element as
    /// the product of the two direction frames.
    #[default]
    Same,
    /// The lifts differ by a sign; half-integer D-matrices flip sign.
    Flipped,
}

/// `(alpha, beta, gamma)` with `beta` in `[0, pi]` and `alpha`, `gamma` in `(-pi, pi]`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct EulerAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub sheet: Sheet,
}

impl EulerAngles {
    pub const ZERO: EulerAngles = EulerAngles { alpha: 0.0, beta: 0.0, gamma: 0.0, sheet: Sheet::Same };

    /// `+1`, or `-1` when `spin` is a half-integer on the flipped sheet.
    pub fn spinor_sign(&self, spin: HalfInt) -> f64 {
        match self.sheet {
            Sheet::Flipped if spin.is_half_integer() => -1.0,
            _ => 1.0,
        }
    }
}

/// Reduce into `(-pi, pi]`; also turns `-0.0` into `0.0`.
fn wrap_pi(x: f64) -> f64 {
    let x = x + 0.0;
    if x <= -PI {
        x + 2.0 * PI
    } else if x > PI {
        x - 2.0 * PI
    } else {
        x
    }
}

/// Unit quaternion `(w, x, y, z)`.
type Quat = [f64; 4];

fn qmul(p: Quat, q: Quat) -> Quat {
    [
        p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
        p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
        p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
        p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0],
    ]
}

fn qz(a: f64) -> Quat {
    let (s, c) = (0.5 * a).sin_cos();
    [c, 0.0, 0.0, s]
}

fn qy(a: f64) -> Quat {
    let (s, c) = (0.5 * a).sin_cos();
    [c, 0.0, s, 0.0]
}

/// Relative Euler angles of `dirp` seen from `dir`.
///
/// Coincident directions give exactly `(0, 0, 0)`. At `beta = 0` or `pi`
/// only one combination of `alpha` and `gamma` is defined; `gamma` is set
/// to zero and the full twist goes into `alpha`.
pub fn relative_euler(dir: Direction, dirp: Direction) -> EulerAngles {
    if dir == dirp {
        return EulerAngles::ZERO;
    }
    let (st, ct) = dir.theta().sin_cos();
    let (sp, cp) = dirp.theta().sin_cos();
    let delta = dirp.phi() - dir.phi();
    let (sd, cd) = delta.sin_cos();

    // R = Ry(-theta) Rz(delta) Ry(theta')
    let r00 = ct * cd * cp + st * sp;
    let r02 = ct * cd * sp - st * cp;
    let r10 = sd * cp;
    let r11 = cd;
    let r12 = sd * sp;
    let r20 = st * cd * cp - ct * sp;
    let r21 = -st * sd;
    let r22 = st * sp * cd + ct * cp;

    let sin_beta = r02.hypot(r12);
    let (alpha, beta, gamma) = if sin_beta < GIMBAL_SIN {
        if r22 > 0.0 {
            (wrap_pi((-r10).atan2(r00)), 0.0, 0.0)
        } else {
            (wrap_pi(r10.atan2(r11)), PI, 0.0)
        }
    } else {
        (wrap_pi((-r12).atan2(r02)), sin_beta.atan2(r22), wrap_pi((-r21).atan2(-r20)))
    };

    let frames = qmul(qmul(qy(-dir.theta()), qz(delta)), qy(dirp.theta()));
    let euler = qmul(qmul(qz(-alpha), qy(beta)), qz(-gamma));
    let dot: f64 = frames.iter().zip(euler.iter()).map(|(a, b)| a * b).sum();
    let sheet = if dot < 0.0 { Sheet::Flipped } else { Sheet::Same };

    EulerAngles { alpha, beta, gamma, sheet }
}

/// Largest cotangent magnitude still compared by [`euler_consistency_residual`].
pub const MAX_COT: f64 = 1e6;

/// Diagnostic residual of the cot/cos relations for `eu`.
///
/// The cosine term is an absolute difference. Each cotangent term is
/// `|cot x - rhs| / (1 + |cot x|)`, since an angle known to one ulp only
/// fixes its cotangent to about `eps (1 + cot^2)`. Cotangent terms where
/// either side exceeds [`MAX_COT`] are skipped.
pub fn euler_consistency_residual(dir: Direction, dirp: Direction, eu: &EulerAngles) -> Result<f64> {
    let dphi = dir.phi() - dirp.phi();
    let off = (dphi / PI - (dphi / PI).round()).abs() * PI;
    if off < 1e-8 {
        return Err(Error::DegenerateAzimuth(dphi));
    }
    let (st, ct) = dir.theta().sin_cos();
    let (sp, cp) = dirp.theta().sin_cos();
    let (sd, cd) = dphi.sin_cos();

    let cos_beta = ct * cp + st * sp * cd;
    let mut worst = (eu.beta.cos() - cos_beta).abs();

    let cot_term = |angle: f64, num: f64, den: f64| -> Option<f64> {
        let lhs = angle.cos() / angle.sin();
        let rhs = num / den;
        (lhs.is_finite() && rhs.is_finite() && lhs.abs() <= MAX_COT && rhs.abs() <= MAX_COT)
            .then(|| (lhs - rhs).abs() / (1.0 + lhs.abs()))
    };
    // cot(theta') sin(theta) csc(dphi) and cot(theta) sin(theta') csc(dphi),
    // put over the common denominators sin(theta') sin(dphi) and sin(theta) sin(dphi)
    if let Some(r) = cot_term(eu.alpha, ct * cd * sp - cp * st, sp * sd) {
        worst = worst.max(r);
    }
    if let Some(r) = cot_term(eu.gamma, cp * cd * st - ct * sp, st * sd) {
        worst = worst.max(r);
    }
    Ok(worst)
}
