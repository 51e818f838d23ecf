mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use common::{dir, h, legendre, Unit};
use proptest::prelude::*;
use swsh::{
    coincidence_rhs, lhs_sum, mode_sum, parameter_grid, rhs_closed, spinsame_rhs, verify, Direction, HalfInt, Mode,
    TheoremId, TheoremParams,
};

fn params(s: i32, sp: i32, l: i32) -> TheoremParams {
    TheoremParams::new(h(s), h(sp), h(l)).unwrap()
}

/// Scalar addition theorem and its first derivatives:
/// `sum_m Y_lm(n) conj(Y_lm(n')) = (2l+1)/4pi P_l(n . n')`.
fn scalar_oracle(id: TheoremId, ell: u32, a: Direction, b: Direction) -> f64 {
    let (st, ct) = a.theta().sin_cos();
    let (sp, cp) = b.theta().sin_cos();
    let dphi = a.phi() - b.phi();
    let x = ct * cp + st * sp * dphi.cos();
    let (p, dp) = legendre(ell, x);
    let c = (2.0 * f64::from(ell) + 1.0) / (4.0 * PI);
    match id {
        TheoremId::Base => c * p,
        // d/dtheta acting on the first direction
        TheoremId::DThetaLeft => c * dp * (-st * cp + ct * sp * dphi.cos()),
        _ => unreachable!(),
    }
}

#[test]
fn scalar_case_matches_legendre_addition() {
    let mut rng = Unit::new(31);
    for ell in 0..=8u32 {
        let p = params(0, 0, 2 * ell as i32);
        for _ in 0..40 {
            let (a, b) = (rng.direction(1e-3), rng.direction(1e-3));
            for id in [TheoremId::Base, TheoremId::DThetaLeft] {
                let want = scalar_oracle(id, ell, a, b);
                let lhs = lhs_sum(id, &p, a, b);
                let rhs = rhs_closed(id, &p, a, b);
                assert!((lhs.re - want).abs() < 1e-12 && lhs.im.abs() < 1e-12, "{id} l={ell}");
                assert!((rhs - lhs).norm() < 1e-12, "{id} l={ell}");
            }
        }
    }
}

#[test]
fn m_weighted_scalar_sum_is_an_azimuthal_derivative() {
    // sum_m m Y(n) conj(Y(n')) = -i d/dphi of the scalar sum
    let mut rng = Unit::new(32);
    for ell in 1..=8u32 {
        let p = params(0, 0, 2 * ell as i32);
        let (a, b) = (rng.direction(1e-3), rng.direction(1e-3));
        let (st, sp) = (a.theta().sin(), b.theta().sin());
        let dphi = a.phi() - b.phi();
        let x = a.theta().cos() * b.theta().cos() + st * sp * dphi.cos();
        let (_, dp) = legendre(ell, x);
        let c = (2.0 * f64::from(ell) + 1.0) / (4.0 * PI);
        let want = c * dp * (-st * sp * dphi.sin());
        let got = lhs_sum(TheoremId::MWeight, &p, a, b) * num_complex::Complex64::i();
        assert!((got.re - want).abs() < 1e-12 && got.im.abs() < 1e-12);
        assert!((rhs_closed(TheoremId::MWeight, &p, a, b) - lhs_sum(TheoremId::MWeight, &p, a, b)).norm() < 1e-12);
    }
}

#[test]
fn scalar_coincidence_forms() {
    // s = 0 equal-spin sums reduce to the familiar scalar identities
    let mut rng = Unit::new(33);
    for ell in 0..=8i32 {
        let l = f64::from(ell);
        let c = 2.0 * l + 1.0;
        for _ in 0..10 {
            let d = rng.direction(1e-3);
            let st = d.theta().sin();
            let want = [
                (TheoremId::Base, c / (4.0 * PI)),
                (TheoremId::DThetaLeft, 0.0),
                (TheoremId::MWeight, 0.0),
                (TheoremId::DThetaBoth, c * l * (l + 1.0) / (8.0 * PI)),
                (TheoremId::M2Weight, c * l * (l + 1.0) * st * st / (8.0 * PI)),
                (TheoremId::MDTheta, 0.0),
            ];
            for (id, w) in want {
                let p = params(0, 0, 2 * ell);
                let got = mode_sum(id, &p, d, d);
                assert!((got.re - w).abs() < 1e-12 * c && got.im.abs() < 1e-12 * c, "{id} l={ell}");
                assert!((spinsame_rhs(id, h(0), h(2 * ell), d).unwrap().re - w).abs() < 1e-14 * c);
            }
        }
    }
}

#[test]
fn documented_examples() {
    let d = dir(0.8, 1.7);
    let e = dir(2.1, 0.3);
    let base0 = lhs_sum(TheoremId::Base, &params(0, 0, 0), d, e);
    assert!((base0.re - 1.0 / (4.0 * PI)).abs() < 1e-16);

    for l2 in [2, 3, 5, 8] {
        let s2 = l2 % 2;
        let p = params(s2, s2, l2);
        let c = p.dim() / (4.0 * PI);
        assert!((lhs_sum(TheoremId::Base, &p, d, d) - rhs_closed(TheoremId::Base, &p, d, d)).norm() < 1e-14);
        assert!((mode_sum(TheoremId::Base, &p, d, d).re - c).abs() < 1e-14);
        assert!(mode_sum(TheoremId::DThetaLeft, &p, d, d).norm() < 1e-14);
    }

    let p = params(1, 1, 3);
    let want = 4.0 * (1.5 * 2.5 - 0.25) / (8.0 * PI);
    assert!((coincidence_rhs(TheoremId::DThetaBoth, &p, d).re - want).abs() < 1e-15);
    assert_eq!(coincidence_rhs(TheoremId::DThetaLeft, &params(-2, 4, 4), d).norm(), 0.0);
    let l = 3.0;
    let want = (2.0 * l + 1.0) * l * (l + 1.0) / (8.0 * PI);
    let eq = dir(FRAC_PI_2, 0.4);
    assert!((coincidence_rhs(TheoremId::M2Weight, &params(0, 0, 6), eq).re - want).abs() < 1e-14);

    assert!(spinsame_rhs(TheoremId::MWeight, h(0), h(4), d).unwrap().norm() == 0.0);
    assert!((spinsame_rhs(TheoremId::M2Weight, h(0), h(2), eq).unwrap().re - 3.0 / (4.0 * PI)).abs() < 1e-15);
    let mw = spinsame_rhs(TheoremId::MWeight, h(2), h(4), d).unwrap().re;
    assert!((mw + 5.0 * 0.8f64.cos() / (4.0 * PI)).abs() < 1e-15);
}

#[test]
fn mdtheta_equal_spin_sign() {
    // The brute-force sum fixes the sign: +(2l+1) s sin(theta) / 8pi.
    let eq = dir(FRAC_PI_2, 0.0);
    let p = params(1, 1, 1);
    let brute = mode_sum(TheoremId::MDTheta, &p, eq, eq).re;
    assert!((brute - 1.0 / (8.0 * PI)).abs() < 1e-15);
    assert!((spinsame_rhs(TheoremId::MDTheta, h(1), h(1), eq).unwrap().re - brute).abs() < 1e-15);
}

/// Swapping `Y_{s-1}` for `Y_{s+1}` in the `cos(theta')` part of the MDTheta
/// right-hand side shifts it by a visibly nonzero amount.
#[test]
fn mdtheta_cos_term_uses_lowered_harmonic() {
    use num_complex::Complex64;
    use swsh::{relative_euler, swsh_eval, QuantumNumbers};

    let (a, b) = (dir(0.9, 0.4), dir(2.0, 2.5));
    let p = params(1, 1, 5);
    let (l, s, sp) = (2.5_f64, 0.5, 0.5);
    let down = ((l + s) * (l - s + 1.0)).sqrt();
    let eu = relative_euler(a, b);
    let t = |k: HalfInt| {
        let q = QuantumNumbers::new(k, h(5), -h(1)).unwrap();
        Complex64::from_polar(1.0, -k.to_f64() * eu.alpha) * swsh_eval(q, dir(eu.beta, eu.gamma))
    };
    let norm = (p.dim() / (4.0 * PI)).sqrt();
    let shift = norm * 0.25 * 2.0 * sp * down * b.theta().cos() * (t(h(-1)) - t(h(3)));

    let residual = (lhs_sum(TheoremId::MDTheta, &p, a, b) - rhs_closed(TheoremId::MDTheta, &p, a, b)).norm();
    assert!(residual < 1e-14);
    assert!(shift.norm() > 1e-2, "{}", shift.norm());
}

#[test]
fn verify_examples() {
    let r = verify(TheoremId::Base, &params(2, 0, 4), 100, 1e-9 * 5.0, 42, Mode::TwoPoint).unwrap();
    assert!(r.pass);
    let r = verify(TheoremId::DThetaBoth, &params(1, -1, 3), 100, 1e-8 * 4.0, 42, Mode::TwoPoint).unwrap();
    assert!(r.pass);
    let r = verify(TheoremId::Base, &params(0, 0, 0), 1, 1e-9, 42, Mode::TwoPoint).unwrap();
    assert!(r.max_abs_residual <= 1e-15);
    let r = verify(TheoremId::M2Weight, &params(4, 4, 16), 20, 1e-30, 42, Mode::TwoPoint).unwrap();
    assert!(!r.pass);
    let (a, b) = r.worst_case;
    let redo =
        (lhs_sum(TheoremId::M2Weight, &r.params, a, b) - rhs_closed(TheoremId::M2Weight, &r.params, a, b)).norm();
    assert_eq!(redo, r.max_abs_residual);
}

#[test]
fn grid_matches_documented_shape() {
    let grid = parameter_grid(4, 16);
    let pairs: std::collections::BTreeSet<_> = grid.iter().map(|p| (p.s(), p.sprime())).collect();
    assert_eq!(pairs.len(), 41);
    assert!(grid.iter().all(|p| p.ell() >= p.s().abs().max(p.sprime().abs()) && p.ell().twice() <= 16));
}

fn any_params() -> impl Strategy<Value = TheoremParams> {
    (-4i32..=4, -4i32..=4, 0i32..=8).prop_filter_map("valid", |(s, sp, k)| {
        if (s - sp) % 2 != 0 {
            return None;
        }
        let l2 = s.abs().max(sp.abs()) + 2 * k;
        (l2 <= 16).then(|| params(s, sp, l2))
    })
}

fn any_direction() -> impl Strategy<Value = Direction> {
    (-0.999_999f64..0.999_999, 0.0f64..std::f64::consts::TAU).prop_map(|(z, phi)| dir(z.acos(), phi))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn two_point_identities(p in any_params(), a in any_direction(), b in any_direction(), k in 0usize..6) {
        let id = TheoremId::ALL[k];
        let lhs = lhs_sum(id, &p, a, b);
        let rhs = rhs_closed(id, &p, a, b);
        prop_assert!((lhs - rhs).norm() <= Mode::TwoPoint.tol_scale(id) * p.dim(), "{} {:?}: {} vs {}", id, p, lhs, rhs);
    }

    #[test]
    fn coincidence_identities(p in any_params(), a in any_direction(), k in 0usize..6) {
        let id = TheoremId::ALL[k];
        let lhs = mode_sum(id, &p, a, a);
        prop_assert!((lhs - coincidence_rhs(id, &p, a)).norm() <= 1e-9 * p.dim());
    }

    #[test]
    fn rhs_is_continuous_into_coincidence(p in any_params(), a in any_direction(), k in 0usize..6) {
        let id = TheoremId::ALL[k];
        let near = Direction::new(a.theta(), a.phi() + 1e-7).unwrap();
        let gap = (rhs_closed(id, &p, a, near) - p.s().sign_phase() * coincidence_rhs(id, &p, a)).norm();
        prop_assert!(gap <= 1e-5 * p.dim() * p.dim());
    }
}
