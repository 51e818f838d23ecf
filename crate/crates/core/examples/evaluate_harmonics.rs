//! Evaluate spin-weighted harmonics for integer and half-integer spin.
//!
//! cargo run --example evaluate_harmonics

use swsh::{swsh_eval, swsh_pole, Direction, HalfInt, QuantumNumbers};

fn main() -> swsh::Result<()> {
    let dir = Direction::new(0.9, 2.3)?;
    println!("direction theta = {}, phi = {}", dir.theta(), dir.phi());
    println!("{:>6} {:>6} {:>6}  {:>24}", "s", "l", "m", "Y_{s,l,m}");
    for (s, l, m) in [
        ("0", "0", "0"),
        ("0", "2", "1"),
        ("1", "1", "-1"),
        ("-1", "2", "0"),
        ("1/2", "1/2", "1/2"),
        ("-3/2", "5/2", "1/2"),
    ] {
        let q = QuantumNumbers::new(s.parse()?, l.parse()?, m.parse()?)?;
        let y = swsh_eval(q, dir);
        println!("{s:>6} {l:>6} {m:>6}  {:>11.8} {:+.8}i", y.re, y.im);
    }

    // Half-integer harmonics are double-valued in phi; the stored phi is the
    // representative in [0, 2pi), so phi and phi + 2pi give the same value.
    let q = QuantumNumbers::new(HalfInt::HALF, HalfInt::HALF, HalfInt::HALF)?;
    let a = swsh_eval(q, Direction::new(0.9, 0.3)?);
    let b = swsh_eval(q, Direction::new(0.9, 0.3 + std::f64::consts::TAU)?);
    println!("\nphi and phi + 2pi, s = l = m = 1/2: {a:.8} and {b:.8}");

    // Values at the north pole come from a Kronecker-delta branch.
    let q = QuantumNumbers::new(HalfInt::from_int(1), HalfInt::from_int(1), HalfInt::from_int(-1))?;
    println!("pole value of Y_{{1,1,-1}}: {:.12}", swsh_pole(q));
    Ok(())
}
