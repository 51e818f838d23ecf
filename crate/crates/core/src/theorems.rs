//! Addition theorems for spin-weighted harmonics: brute-force mode sums,
//! closed-form right-hand sides, coincidence and equal-spin corollaries,
//! and a seeded verification driver.
//!
//! Every two-point identity has the form
//!
//! ```text
//! (-1)^s sum_m w(m) A_{s,l,m}(theta, phi) conj(B_{s',l,m}(theta', phi')) = RHS(alpha, beta, gamma)
//! ```
//!
//! where `A`, `B` are `Y` or `dY/dtheta`, `w` is `1`, `m` or `m^2`, and
//! `(alpha, beta, gamma)` are the relative Euler angles. The right-hand
//! sides are built from `e^{-i k alpha} Y_{k,l,j}(beta, gamma)` with
//! `k in {s-1, s, s+1}` and `j in {-s'-1, -s', -s'+1}`.
//!
//! The `m`-weighted theta-derivative sum ([`TheoremId::MDTheta`]) is
//! implemented with overall sign `+1/4`. Its equal-spin, coincident limit
//! is `+(2l+1) s sin(theta) / 8pi`, which is forced by differentiating
//! `sum_m m |Y|^2 = -(2l+1) s cos(theta) / 4pi` in `theta`; the
//! opposite sign that circulates for this identity fails both that check
//! and the brute-force sum.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::relative_euler;
use crate::half::HalfInt;
use crate::sum::ComplexSum;
use crate::swsh::{self, Direction, QuantumNumbers};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// The six identities: the base addition theorem and five derivative /
/// weighted variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `sum Y Y'*`
    Base,
    /// `sum (dY/dtheta) Y'*`
    DThetaLeft,
    /// `sum m Y Y'*`
    MWeight,
    /// `sum (dY/dtheta) (dY'/dtheta')*`
    DThetaBoth,
    /// `sum m^2 Y Y'*`
    M2Weight,
    /// `sum m (dY/dtheta) Y'*`
    MDTheta,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Base,
        TheoremId::DThetaLeft,
        TheoremId::MWeight,
        TheoremId::DThetaBoth,
        TheoremId::M2Weight,
        TheoremId::MDTheta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Base => "Base",
            TheoremId::DThetaLeft => "DThetaLeft",
            TheoremId::MWeight => "MWeight",
            TheoremId::DThetaBoth => "DThetaBoth",
            TheoremId::M2Weight => "M2Weight",
            TheoremId::MDTheta => "MDTheta",
        }
    }

    fn weight(self, m: HalfInt) -> f64 {
        match self {
            TheoremId::Base | TheoremId::DThetaLeft | TheoremId::DThetaBoth => 1.0,
            TheoremId::MWeight | TheoremId::MDTheta => m.to_f64(),
            TheoremId::M2Weight => m.to_f64() * m.to_f64(),
        }
    }

    fn left_derivative(self) -> bool {
        matches!(self, TheoremId::DThetaLeft | TheoremId::DThetaBoth | TheoremId::MDTheta)
    }

    fn right_derivative(self) -> bool {
        self == TheoremId::DThetaBoth
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let id = match key.as_str() {
            "base" | "addition" => TheoremId::Base,
            "dthetaleft" | "addition1" | "spin1" => TheoremId::DThetaLeft,
            "mweight" | "addition2" | "spin2" => TheoremId::MWeight,
            "dthetaboth" | "addition3" | "spin3" => TheoremId::DThetaBoth,
            "m2weight" | "addition4" | "spin4" => TheoremId::M2Weight,
            "mdtheta" | "addition5" | "spin5" => TheoremId::MDTheta,
            _ => return Err(Error::Config(format!("unknown theorem {s:?}"))),
        };
        Ok(id)
    }
}

/// Which pair of sides a verification compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Two independent directions, brute-force sum vs closed form.
    TwoPoint,
    /// Coincident directions vs the Kronecker-delta closed forms.
    Coincidence,
    /// Coincident directions and equal spins.
    SpinSame,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::TwoPoint => "two_point",
            Mode::Coincidence => "coincidence",
            Mode::SpinSame => "spinsame",
        }
    }

    /// Default residual budget per unit of `2l + 1`.
    pub fn tol_scale(self, id: TheoremId) -> f64 {
        match (self, id) {
            (Mode::TwoPoint, TheoremId::Base) => 1e-9,
            (Mode::TwoPoint, _) => 1e-8,
            (Mode::Coincidence, _) => 1e-9,
            (Mode::SpinSame, _) => 1e-10,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "two_point" | "twopoint" => Ok(Mode::TwoPoint),
            "coincidence" => Ok(Mode::Coincidence),
            "spinsame" | "spin_same" => Ok(Mode::SpinSame),
            _ => Err(Error::Config(format!("unknown mode {s:?}"))),
        }
    }
}

/// Spins `s`, `s'` and degree `l` of one identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TheoremParams {
    s: HalfInt,
    sprime: HalfInt,
    ell: HalfInt,
}

impl TheoremParams {
    pub fn new(s: HalfInt, sprime: HalfInt, ell: HalfInt) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidParams(format!("s={s}, s'={sprime}, l={ell}: {why}")));
        if !s.differs_by_integer(sprime) {
            return bad("s and s' must differ by an integer");
        }
        if ell < s.abs() || ell < sprime.abs() {
            return bad("l must be at least max(|s|, |s'|)");
        }
        if !ell.differs_by_integer(s) {
            return bad("l - s must be an integer");
        }
        Ok(Self { s, sprime, ell })
    }

    pub fn s(&self) -> HalfInt {
        self.s
    }

    pub fn sprime(&self) -> HalfInt {
        self.sprime
    }

    pub fn ell(&self) -> HalfInt {
        self.ell
    }

    /// `2l + 1`.
    pub fn dim(&self) -> f64 {
        2.0 * self.ell.to_f64() + 1.0
    }

    fn norm(&self) -> f64 {
        (self.dim() / (4.0 * PI)).sqrt()
    }
}

fn qn(s: HalfInt, ell: HalfInt, m: HalfInt) -> QuantumNumbers {
    QuantumNumbers::new(s, ell, m).expect("quantum numbers validated by TheoremParams")
}

/// The sum `sum_m w(m) A(dir) conj(B(dirp))` without the `(-1)^s` prefactor.
///
/// This is the quantity the coincidence and equal-spin corollaries close.
/// Terms are accumulated in ascending `m` with compensated summation.
pub fn mode_sum(id: TheoremId, p: &TheoremParams, dir: Direction, dirp: Direction) -> Complex64 {
    let mut acc = ComplexSum::new();
    for m in p.ell.projections() {
        let w = id.weight(m);
        if w == 0.0 {
            continue;
        }
        let (q, qp) = (qn(p.s, p.ell, m), qn(p.sprime, p.ell, m));
        let a = if id.left_derivative() { swsh::dtheta(q, dir) } else { swsh::swsh_eval(q, dir) };
        let b = if id.right_derivative() { swsh::dtheta(qp, dirp) } else { swsh::swsh_eval(qp, dirp) };
        acc.add(w * a * b.conj());
    }
    acc.value()
}

/// Left-hand side `(-1)^s sum_m w(m) A conj(B)`.
pub fn lhs_sum(id: TheoremId, p: &TheoremParams, dir: Direction, dirp: Direction) -> Complex64 {
    p.s.sign_phase() * mode_sum(id, p, dir, dirp)
}

/// Ladder factors `sqrt((l-s)(l+s+1))` and `sqrt((l+s)(l-s+1))` for both spins.
struct Ladders {
    up: f64,
    down: f64,
    up_p: f64,
    down_p: f64,
}

impl Ladders {
    fn new(p: &TheoremParams) -> Self {
        let (l, s, sp) = (p.ell.to_f64(), p.s.to_f64(), p.sprime.to_f64());
        Self {
            up: ((l - s) * (l + s + 1.0)).sqrt(),
            down: ((l + s) * (l - s + 1.0)).sqrt(),
            up_p: ((l - sp) * (l + sp + 1.0)).sqrt(),
            down_p: ((l + sp) * (l - sp + 1.0)).sqrt(),
        }
    }
}

/// Closed-form right-hand side, evaluated at the relative Euler angles of
/// `dir` and `dirp`.
///
/// Terms whose ladder prefactor vanishes are dropped before any shifted
/// quantum numbers are formed.
pub fn rhs_closed(id: TheoremId, p: &TheoremParams, dir: Direction, dirp: Direction) -> Complex64 {
    let eu = relative_euler(dir, dirp);
    let one = HalfInt::ONE;
    let (s, sp, ell) = (p.s, p.sprime, p.ell);
    let lad = Ladders::new(p);

    // coef * e^{-i k alpha} Y_{k,l,j}(beta, gamma)
    let term = |coef: f64, k: HalfInt, j: HalfInt| -> Complex64 {
        if coef == 0.0 {
            return ZERO;
        }
        let q = QuantumNumbers::new(k, ell, j).expect("non-zero ladder factor implies valid quantum numbers");
        coef * Complex64::from_polar(1.0, -k.to_f64() * eu.alpha) * swsh::eval_at(q, eu.beta, eu.gamma)
    };

    let (st, ct) = dir.theta().sin_cos();
    let (stp, ctp) = dirp.theta().sin_cos();
    let (s_f, sp_f) = (s.to_f64(), sp.to_f64());

    let body = match id {
        TheoremId::Base => term(1.0, s, -sp),
        TheoremId::DThetaLeft => 0.5 * (term(lad.up, s + one, -sp) - term(lad.down, s - one, -sp)),
        TheoremId::MWeight => {
            -0.5 * (term(lad.up * st, s + one, -sp) + term(lad.down * st, s - one, -sp) + term(2.0 * s_f * ct, s, -sp))
        }
        TheoremId::DThetaBoth => {
            -0.25
                * (term(lad.up * lad.up_p, s + one, -sp - one)
                    - term(lad.up * lad.down_p, s + one, -sp + one)
                    - term(lad.down * lad.up_p, s - one, -sp - one)
                    + term(lad.down * lad.down_p, s - one, -sp + one))
        }
        TheoremId::M2Weight => {
            let both = 0.25 * st * stp;
            let left = -0.5 * sp_f * st * ctp;
            let right = 0.5 * s_f * ct * stp;
            -(term(both * lad.up * lad.up_p, s + one, -sp - one)
                + term(both * lad.up * lad.down_p, s + one, -sp + one)
                + term(both * lad.down * lad.up_p, s - one, -sp - one)
                + term(both * lad.down * lad.down_p, s - one, -sp + one)
                + term(left * lad.up, s + one, -sp)
                + term(left * lad.down, s - one, -sp)
                + term(right * lad.up_p, s, -sp - one)
                + term(right * lad.down_p, s, -sp + one)
                + term(-s_f * sp_f * ct * ctp, s, -sp))
        }
        TheoremId::MDTheta => {
            0.25 * (term(lad.up * lad.up_p * stp, s + one, -sp - one)
                - term(lad.down * lad.up_p * stp, s - one, -sp - one)
                + term(lad.up * lad.down_p * stp, s + one, -sp + one)
                - term(lad.down * lad.down_p * stp, s - one, -sp + one)
                - term(2.0 * sp_f * lad.up * ctp, s + one, -sp)
                + term(2.0 * sp_f * lad.down * ctp, s - one, -sp))
        }
    };
    eu.spinor_sign(s) * p.norm() * body
}

/// Kronecker delta on exact half-integers.
#[inline]
fn delta(a: HalfInt, b: HalfInt) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

/// `sqrt((l-x-1)(l-x)(l+x+1)(l+x+2))`, evaluated only where a delta fires.
fn double_raise(ell: f64, x: f64) -> f64 {
    ((ell - x - 1.0) * (ell - x) * (ell + x + 1.0) * (ell + x + 2.0)).max(0.0).sqrt()
}

/// Closed form of [`mode_sum`] at coincident directions.
pub fn coincidence_rhs(id: TheoremId, p: &TheoremParams, dir: Direction) -> Complex64 {
    let one = HalfInt::ONE;
    let two = HalfInt::from_int(2);
    let (s, sp) = (p.s, p.sprime);
    let (l, s_f, sp_f) = (p.ell.to_f64(), s.to_f64(), sp.to_f64());
    let c = p.dim();
    let lad = Ladders::new(p);
    let (st, ct) = dir.theta().sin_cos();

    // raise on the left meets s', or raise on the right meets s
    let d_up = delta(s + one, sp);
    let d_up_p = delta(s, sp + one);
    let d_same = delta(s, sp);

    let value = match id {
        TheoremId::Base => c / (4.0 * PI) * d_same,
        TheoremId::DThetaLeft => -c / (8.0 * PI) * (lad.up * d_up - lad.up_p * d_up_p),
        TheoremId::MWeight => {
            c / (8.0 * PI) * (lad.up * d_up + lad.up_p * d_up_p) * st - c / (4.0 * PI) * s_f * d_same * ct
        }
        TheoremId::DThetaBoth => {
            let mut acc = 2.0 * (l * l + l - s_f * s_f) * d_same;
            if s + two == sp {
                acc -= double_raise(l, s_f);
            }
            if s == sp + two {
                acc -= double_raise(l, sp_f);
            }
            c / (16.0 * PI) * acc
        }
        TheoremId::M2Weight => {
            let same = (0.5 * (l * l + l - s_f * s_f) * st * st + s_f * s_f * ct * ct) * d_same;
            let cross = 0.25
                * st
                * st
                * (lad.up * lad.down_p * delta(s + one, sp - one) + lad.down * lad.up_p * delta(s - one, sp + one));
            let mixed = -0.5 * st * ct * ((2.0 * sp_f + 1.0) * lad.up_p * d_up_p + (2.0 * s_f + 1.0) * lad.up * d_up);
            c / (4.0 * PI) * (same + cross + mixed)
        }
        TheoremId::MDTheta => {
            let mut sin_part = -2.0 * s_f * d_same;
            if s == sp + two {
                sin_part -= double_raise(l, sp_f);
            }
            if s + two == sp {
                sin_part += double_raise(l, s_f);
            }
            let cos_part = -2.0 * sp_f * (lad.up * d_up - lad.up_p * d_up_p);
            -c / (16.0 * PI) * (sin_part * st + cos_part * ct)
        }
    };
    Complex64::new(value, 0.0)
}

/// Closed form of [`mode_sum`] at coincident directions with `s' = s`.
pub fn spinsame_rhs(id: TheoremId, s: HalfInt, ell: HalfInt, dir: Direction) -> Result<Complex64> {
    let p = TheoremParams::new(s, s, ell)?;
    let (l, s_f, c) = (ell.to_f64(), s.to_f64(), p.dim());
    let (st, ct) = dir.theta().sin_cos();
    let value = match id {
        TheoremId::Base => c / (4.0 * PI),
        TheoremId::DThetaLeft => 0.0,
        TheoremId::MWeight => -c * s_f * ct / (4.0 * PI),
        TheoremId::DThetaBoth => c * (l * l + l - s_f * s_f) / (8.0 * PI),
        TheoremId::M2Weight => c * ((l * l + l - s_f * s_f) * st * st + 2.0 * s_f * s_f * ct * ct) / (8.0 * PI),
        TheoremId::MDTheta => c * s_f * st / (8.0 * PI),
    };
    Ok(Complex64::new(value, 0.0))
}

/// Uniform directions on the sphere from a seeded ChaCha stream.
///
/// `cos(theta)` and `phi` are uniform; draws with `sin(theta)` below
/// [`SphereSampler::MIN_SIN`] are rejected.
pub struct SphereSampler {
    rng: ChaCha8Rng,
}

impl SphereSampler {
    pub const MIN_SIN: f64 = 1e-6;

    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn next_direction(&mut self) -> Direction {
        loop {
            let z: f64 = self.rng.gen_range(-1.0..=1.0);
            let phi: f64 = self.rng.gen_range(0.0..TAU);
            let theta = z.acos();
            if theta.sin() >= Self::MIN_SIN {
                return Direction::new(theta, phi).expect("sampled direction is valid");
            }
        }
    }
}

impl Iterator for SphereSampler {
    type Item = Direction;

    fn next(&mut self) -> Option<Direction> {
        Some(self.next_direction())
    }
}

/// Outcome of one verification run.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub theorem: TheoremId,
    pub params: TheoremParams,
    pub mode: Mode,
    pub samples: usize,
    pub max_abs_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub worst_case: (Direction, Direction),
}

/// Draw `samples` seeded points and compare the mode's two sides.
///
/// `TwoPoint` compares [`lhs_sum`] with [`rhs_closed`]; `Coincidence`
/// compares [`mode_sum`] at `dirp = dir` with [`coincidence_rhs`];
/// `SpinSame` does the same against [`spinsame_rhs`] and requires `s' = s`.
pub fn verify(
    id: TheoremId,
    p: &TheoremParams,
    samples: usize,
    tol: f64,
    seed: u64,
    mode: Mode,
) -> Result<CheckReport> {
    if samples == 0 {
        return Err(Error::InvalidParams("samples must be at least 1".into()));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParams(format!("tolerance must be positive, got {tol}")));
    }
    if mode == Mode::SpinSame && p.s != p.sprime {
        return Err(Error::InvalidParams(format!("equal-spin mode needs s = s', got {} and {}", p.s, p.sprime)));
    }

    let mut sampler = SphereSampler::new(seed);
    let points: Vec<(Direction, Direction)> = match mode {
        Mode::TwoPoint => (0..samples).map(|_| (sampler.next_direction(), sampler.next_direction())).collect(),
        Mode::Coincidence | Mode::SpinSame => (0..samples)
            .map(|_| {
                let d = sampler.next_direction();
                (d, d)
            })
            .collect(),
    };

    let mut worst = (f64::NEG_INFINITY, points[0]);
    for &(dir, dirp) in &points {
        let residual = match mode {
            Mode::TwoPoint => (lhs_sum(id, p, dir, dirp) - rhs_closed(id, p, dir, dirp)).norm(),
            Mode::Coincidence => (mode_sum(id, p, dir, dir) - coincidence_rhs(id, p, dir)).norm(),
            Mode::SpinSame => (mode_sum(id, p, dir, dir) - spinsame_rhs(id, p.s, p.ell, dir)?).norm(),
        };
        // NaN counts as worst
        if residual > worst.0 || residual.is_nan() && !worst.0.is_nan() {
            worst = (residual, (dir, dirp));
        }
    }

    Ok(CheckReport {
        theorem: id,
        params: *p,
        mode,
        samples,
        max_abs_residual: worst.0,
        tolerance: tol,
        pass: worst.0 <= tol,
        worst_case: worst.1,
    })
}

/// Every `(s, s', l)` with `|2s|, |2s'| <= max_twice_spin`, `s - s'` an
/// integer and `2l <= max_twice_ell`, ordered by `s`, then `s'`, then `l`.
pub fn parameter_grid(max_twice_spin: i32, max_twice_ell: i32) -> Vec<TheoremParams> {
    let mut out = Vec::new();
    for s2 in -max_twice_spin..=max_twice_spin {
        for sp2 in -max_twice_spin..=max_twice_spin {
            if (s2 - sp2) % 2 != 0 {
                continue;
            }
            let lo = s2.abs().max(sp2.abs());
            for l2 in (lo..=max_twice_ell).step_by(2) {
                let (s, sp, l) = (HalfInt::from_twice(s2), HalfInt::from_twice(sp2), HalfInt::from_twice(l2));
                out.push(TheoremParams::new(s, sp, l).expect("grid point is valid"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn params(s2: i32, sp2: i32, l2: i32) -> TheoremParams {
        TheoremParams::new(h(s2), h(sp2), h(l2)).unwrap()
    }

    fn dir(theta: f64, phi: f64) -> Direction {
        Direction::new(theta, phi).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(TheoremParams::new(h(1), h(0), h(3)).is_err());
        assert!(TheoremParams::new(h(4), h(0), h(2)).is_err());
        assert!(TheoremParams::new(h(1), h(-1), h(2)).is_err());
        assert!(TheoremParams::new(h(1), h(-1), h(3)).is_ok());
    }

    #[test]
    fn constant_mode_sum() {
        let p = params(0, 0, 0);
        let v = lhs_sum(TheoremId::Base, &p, dir(0.3, 1.0), dir(2.0, 5.0));
        assert!((v.re - 1.0 / (4.0 * PI)).abs() < 1e-16 && v.im == 0.0);
    }

    #[test]
    fn base_coincidence_is_dimension() {
        for (s2, l2) in [(0, 4), (2, 6), (-1, 3), (3, 5)] {
            let p = params(s2, s2, l2);
            let d = dir(1.1, 0.4);
            let v = mode_sum(TheoremId::Base, &p, d, d);
            assert!((v.re - p.dim() / (4.0 * PI)).abs() < 1e-14, "{v}");
            assert!(v.im.abs() < 1e-15);
            let r = rhs_closed(TheoremId::Base, &p, d, d);
            assert!((r - p.s().sign_phase() * p.dim() / (4.0 * PI)).norm() < 1e-15);
            assert!(lhs_sum(TheoremId::DThetaLeft, &p, d, d).norm() < 1e-14);
        }
    }

    #[test]
    fn pole_substitution_matches_coincidence_forms() {
        // at coincidence alpha = beta = gamma = 0 and every Y on the right is a pole value
        for p in parameter_grid(4, 10) {
            for &d in &[dir(0.9, 2.0), dir(2.6, 0.1)] {
                for id in TheoremId::ALL {
                    let closed = rhs_closed(id, &p, d, d);
                    let limit = p.s().sign_phase() * coincidence_rhs(id, &p, d);
                    assert!((closed - limit).norm() <= 1e-14 * p.dim(), "{id} {p:?}: {closed} vs {limit}");
                }
            }
        }
    }

    #[test]
    fn coincidence_examples() {
        let d = dir(PI / 2.0, 0.0);
        let p = params(2, 8, 8);
        assert_eq!(coincidence_rhs(TheoremId::DThetaLeft, &p, d), ZERO);
        let ell = 3.0;
        let p = params(0, 0, 6);
        let v = coincidence_rhs(TheoremId::M2Weight, &p, d).re;
        assert!((v - 7.0 * ell * (ell + 1.0) / (8.0 * PI)).abs() < 1e-15);
        let p = params(2, 2, 6);
        let v = coincidence_rhs(TheoremId::DThetaBoth, &p, d).re;
        assert!((v - 7.0 * (ell * ell + ell - 1.0) / (8.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn spinsame_examples() {
        let eq = dir(PI / 2.0, 0.0);
        assert_eq!(spinsame_rhs(TheoremId::MWeight, h(0), h(6), dir(0.3, 0.0)).unwrap().re, 0.0);
        let v = spinsame_rhs(TheoremId::M2Weight, h(0), h(2), eq).unwrap().re;
        assert!((v - 3.0 / (4.0 * PI)).abs() < 1e-15);
        let v = spinsame_rhs(TheoremId::MDTheta, h(1), h(1), eq).unwrap().re;
        assert!((v - 1.0 / (8.0 * PI)).abs() < 1e-15);
        assert!(spinsame_rhs(TheoremId::Base, h(4), h(2), eq).is_err());
    }

    #[test]
    fn mdtheta_sign_follows_from_mweight() {
        // d/dtheta sum m |Y|^2 = 2 Re sum m (dY/dtheta) Y*
        let (s, ell, h_step) = (h(2), h(4), 1e-5);
        let p = TheoremParams::new(s, s, ell).unwrap();
        let t = 1.0;
        let at = |x: f64| mode_sum(TheoremId::MWeight, &p, dir(x, 0.5), dir(x, 0.5)).re;
        let fd = (at(t + h_step) - at(t - h_step)) / (2.0 * h_step);
        let sum = mode_sum(TheoremId::MDTheta, &p, dir(t, 0.5), dir(t, 0.5));
        assert!((fd - 2.0 * sum.re).abs() < 1e-8);
        assert!(sum.re > 0.0);
    }

    #[test]
    fn verify_examples() {
        let r = verify(TheoremId::Base, &params(2, 0, 4), 100, 1e-9 * 5.0, 42, Mode::TwoPoint).unwrap();
        assert!(r.pass, "{r:?}");
        let r = verify(TheoremId::DThetaBoth, &params(1, -1, 3), 100, 1e-8 * 4.0, 42, Mode::TwoPoint).unwrap();
        assert!(r.pass, "{r:?}");
        let r = verify(TheoremId::Base, &params(0, 0, 0), 1, 1e-15, 7, Mode::TwoPoint).unwrap();
        assert!(r.max_abs_residual <= 1e-15);
        let r = verify(TheoremId::M2Weight, &params(2, 0, 4), 20, 1e-16, 42, Mode::TwoPoint).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn verify_rejects_bad_input() {
        let p = params(2, 0, 4);
        assert!(verify(TheoremId::Base, &p, 0, 1e-9, 1, Mode::TwoPoint).is_err());
        assert!(verify(TheoremId::Base, &p, 5, 0.0, 1, Mode::TwoPoint).is_err());
        assert!(verify(TheoremId::Base, &p, 5, f64::NAN, 1, Mode::TwoPoint).is_err());
        assert!(verify(TheoremId::Base, &p, 5, 1e-9, 1, Mode::SpinSame).is_err());
    }

    #[test]
    fn verify_is_deterministic() {
        let p = params(1, 3, 5);
        let a = verify(TheoremId::MDTheta, &p, 30, 1e-8, 9, Mode::TwoPoint).unwrap();
        let b = verify(TheoremId::MDTheta, &p, 30, 1e-8, 9, Mode::TwoPoint).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.max_abs_residual.to_bits(), b.max_abs_residual.to_bits());
    }

    #[test]
    fn grid_shape() {
        let g = parameter_grid(4, 16);
        assert!(g.iter().all(|p| p.ell() <= h(16) && p.s().abs() <= h(4)));
        assert!(g.contains(&params(-3, 1, 3)));
        assert!(!g.iter().any(|p| p.ell() < p.s().abs()));
        // 41 spin pairs; each has (16 - max(|2s|,|2s'|))/2 + 1 degrees
        let expect: usize = (-4..=4)
            .flat_map(|a: i32| (-4..=4).map(move |b: i32| (a, b)))
            .filter(|(a, b)| (a - b) % 2 == 0)
            .map(|(a, b)| ((16 - a.abs().max(b.abs())) / 2 + 1) as usize)
            .sum();
        assert_eq!(g.len(), expect);
    }

    #[test]
    fn theorem_names_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("addition5".parse::<TheoremId>().unwrap(), TheoremId::MDTheta);
        assert!("nope".parse::<TheoremId>().is_err());
    }
}
