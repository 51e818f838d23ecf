mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use common::{dir, Unit};
use num_complex::Complex64;
use swsh::{
    euler_consistency_residual, lhs_sum, parameter_grid, relative_euler, rhs_closed, Direction, Error, EulerAngles,
    Sheet, TheoremId,
};

type M3 = [[f64; 3]; 3];
type M2 = [[Complex64; 2]; 2];

fn mul3(a: M3, b: M3) -> M3 {
    let mut c = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

fn rz(a: f64) -> M3 {
    let (s, c) = a.sin_cos();
    [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]
}

fn ry(a: f64) -> M3 {
    let (s, c) = a.sin_cos();
    [[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]]
}

fn mul2(a: M2, b: M2) -> M2 {
    let z = Complex64::new(0.0, 0.0);
    let mut c = [[z; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// SU(2) lifts `exp(-i a sigma_z / 2)` and `exp(-i a sigma_y / 2)`.
fn uz(a: f64) -> M2 {
    let z = Complex64::new(0.0, 0.0);
    [[Complex64::from_polar(1.0, -a / 2.0), z], [z, Complex64::from_polar(1.0, a / 2.0)]]
}

fn uy(a: f64) -> M2 {
    let (s, c) = (a / 2.0).sin_cos();
    [[c.into(), (-s).into()], [s.into(), c.into()]]
}

fn frames(a: Direction, b: Direction) -> (M3, M2) {
    let delta = b.phi() - a.phi();
    (mul3(mul3(ry(-a.theta()), rz(delta)), ry(b.theta())), mul2(mul2(uy(-a.theta()), uz(delta)), uy(b.theta())))
}

fn from_angles(eu: &EulerAngles) -> (M3, M2) {
    (mul3(mul3(rz(-eu.alpha), ry(eu.beta)), rz(-eu.gamma)), mul2(mul2(uz(-eu.alpha), uy(eu.beta)), uz(-eu.gamma)))
}

fn check_rotation(a: Direction, b: Direction, tol: f64) {
    let eu = relative_euler(a, b);
    assert!((0.0..=PI).contains(&eu.beta));
    assert!(eu.alpha > -PI && eu.alpha <= PI && eu.gamma > -PI && eu.gamma <= PI, "{eu:?}");
    let (r, u) = frames(a, b);
    let (r2, u2) = from_angles(&eu);
    for i in 0..3 {
        for j in 0..3 {
            assert!((r[i][j] - r2[i][j]).abs() < tol, "{a:?} {b:?} {eu:?}");
        }
    }
    let sign = if eu.sheet == Sheet::Flipped { -1.0 } else { 1.0 };
    for i in 0..2 {
        for j in 0..2 {
            assert!((u[i][j] - sign * u2[i][j]).norm() < tol, "{a:?} {b:?} {eu:?}");
        }
    }
}

#[test]
fn angles_reproduce_the_relative_rotation_and_its_lift() {
    let mut rng = Unit::new(21);
    for _ in 0..1000 {
        check_rotation(rng.direction(0.0), rng.direction(0.0), 1e-13);
    }
}

#[test]
fn cot_and_cos_relations_on_random_pairs() {
    let mut rng = Unit::new(22);
    let mut checked = 0;
    while checked < 1000 {
        let (a, b) = (rng.direction(1e-6), rng.direction(1e-6));
        let eu = relative_euler(a, b);
        match euler_consistency_residual(a, b, &eu) {
            Ok(r) => {
                assert!(r <= 1e-10, "{a:?} {b:?}: {r}");
                checked += 1;
            }
            Err(Error::DegenerateAzimuth(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn coincidence_and_equator() {
    let mut rng = Unit::new(23);
    for _ in 0..100 {
        let a = rng.direction(0.0);
        assert_eq!(relative_euler(a, a), EulerAngles::ZERO);
    }
    let (a, b) = (dir(FRAC_PI_2, 0.0), dir(FRAC_PI_2, FRAC_PI_2));
    let eu = relative_euler(a, b);
    assert!((eu.beta - FRAC_PI_2).abs() < 1e-15);
    assert!((eu.alpha + FRAC_PI_2).abs() < 1e-15 && (eu.gamma - FRAC_PI_2).abs() < 1e-15);
    assert!(euler_consistency_residual(a, b, &eu).unwrap() <= 1e-10);
}

fn gimbal_pairs() -> Vec<(Direction, Direction)> {
    vec![
        (dir(0.0, 0.0), dir(0.0, 1.3)),
        (dir(PI, 0.4), dir(PI, 2.9)),
        (dir(0.0, 0.2), dir(PI, 0.2)),
        (dir(PI, 5.0), dir(0.0, 1.0)),
        (dir(0.7, 1.0), dir(1.9, 1.0)),
        (dir(0.7, 1.0), dir(1.9, 1.0 + PI)),
        (dir(0.4, 0.0), dir(PI - 0.4, PI)),
        (dir(1.2, 3.0), dir(1.2, 3.0 + PI)),
        (dir(0.0, 0.0), dir(1.1, 0.5)),
        (dir(2.2, 0.3), dir(PI, 0.0)),
    ]
}

#[test]
fn degenerate_configurations_keep_a_valid_rotation() {
    for (a, b) in gimbal_pairs() {
        check_rotation(a, b, 1e-13);
    }
}

#[test]
fn base_theorem_holds_at_degenerate_configurations() {
    for (a, b) in gimbal_pairs() {
        for p in parameter_grid(4, 16) {
            let lhs = lhs_sum(TheoremId::Base, &p, a, b);
            let rhs = rhs_closed(TheoremId::Base, &p, a, b);
            assert!((lhs - rhs).norm() <= 1e-9 * p.dim(), "{a:?} {b:?} {p:?}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn degenerate_azimuth_is_rejected() {
    for (a, b) in
        [(dir(0.3, 1.0), dir(2.0, 1.0)), (dir(0.3, 0.0), dir(2.0, PI)), (dir(1.0, 0.5), dir(1.0, 0.5 + 1e-10))]
    {
        let eu = relative_euler(a, b);
        assert!(matches!(euler_consistency_residual(a, b, &eu), Err(Error::DegenerateAzimuth(_))));
    }
}

#[test]
fn perturbed_angles_are_detected() {
    let mut rng = Unit::new(24);
    for _ in 0..50 {
        let (a, b) = (rng.direction(0.1), rng.direction(0.1));
        let mut eu = relative_euler(a, b);
        let Ok(r) = euler_consistency_residual(a, b, &eu) else { continue };
        assert!(r <= 1e-10);
        eu.beta = (eu.beta + 1e-3).min(PI);
        eu.alpha += 1e-3;
        eu.gamma += 1e-3;
        assert!(euler_consistency_residual(a, b, &eu).unwrap() >= 1e-4);
    }
}
