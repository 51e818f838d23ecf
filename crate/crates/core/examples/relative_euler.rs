//! Relative Euler angles between two directions, including the sheet sign
//! needed by half-integer spin, the gimbal-lock branches and the cot/cos
//! consistency check.
//!
//! cargo run --example relative_euler

use std::f64::consts::{FRAC_PI_2, PI};

use swsh::{euler_consistency_residual, relative_euler, Direction};

fn show(label: &str, a: Direction, b: Direction) {
    let eu = relative_euler(a, b);
    let check = match euler_consistency_residual(a, b, &eu) {
        Ok(r) => format!("{r:.1e}"),
        Err(e) => format!("n/a ({e})"),
    };
    println!(
        "{label:<22} alpha {:>9.6} beta {:>9.6} gamma {:>9.6} sheet {:<8} residual {check}",
        eu.alpha,
        eu.beta,
        eu.gamma,
        format!("{:?}", eu.sheet)
    );
}

fn main() -> swsh::Result<()> {
    let d = |t, p| Direction::new(t, p);
    show("equator quarter turn", d(FRAC_PI_2, 0.0)?, d(FRAC_PI_2, FRAC_PI_2)?);
    show("generic pair", d(0.7, 0.2)?, d(2.0, 1.4)?);
    show("wide azimuth gap", d(0.3, 0.1)?, d(2.8, 5.9)?);
    show("coincident", d(1.1, 4.0)?, d(1.1, 4.0)?);
    show("same pole", d(0.0, 0.3)?, d(0.0, 1.0)?);
    show("antipodal", d(0.0, 0.0)?, d(PI, 0.5)?);
    show("same meridian", d(0.4, 1.0)?, d(1.9, 1.0)?);
    Ok(())
}
