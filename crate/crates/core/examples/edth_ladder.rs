//! The edth raising and lowering operators, the theta and phi derivatives
//! built from them, and the differential equation they satisfy.
//!
//! cargo run --example edth_ladder

use swsh::swsh::DEFAULT_STEP;
use swsh::{de_residual, dphi, dtheta, edth_analytic, edth_numeric, Direction, HalfInt, Ladder, QuantumNumbers};

fn main() -> swsh::Result<()> {
    let dir = Direction::new(1.2, 0.5)?;
    let q = QuantumNumbers::new(HalfInt::from_twice(1), HalfInt::from_twice(5), HalfInt::from_twice(-3))?;
    println!("s = {}, l = {}, m = {} at theta = 1.2, phi = 0.5", q.s(), q.ell(), q.m());

    for op in [Ladder::Raise, Ladder::Lower] {
        let a = edth_analytic(q, dir, op);
        let n = edth_numeric(q, dir, op, DEFAULT_STEP)?;
        println!("{op:?}: ladder {a:.10}  finite difference {n:.10}  |diff| {:.1e}", (a - n).norm());
    }
    println!("dY/dtheta = {:.10}", dtheta(q, dir));
    println!("dY/dphi   = {:.10}", dphi(q, dir));
    println!("DE residual = {:.1e}", de_residual(q, dir)?);

    // s = l cannot be raised: the result is an exact zero, not a rounding residue.
    let top = QuantumNumbers::new(HalfInt::from_twice(5), HalfInt::from_twice(5), HalfInt::from_twice(-3))?;
    println!("raising s = l gives {}", edth_analytic(top, dir, Ladder::Raise));

    // Operators with 1/sin(theta) refuse points too close to a pole.
    match de_residual(q, Direction::new(1e-4, 0.0)?) {
        Err(e) => println!("near the pole: {e}"),
        Ok(r) => println!("near the pole: {r}"),
    }
    Ok(())
}
