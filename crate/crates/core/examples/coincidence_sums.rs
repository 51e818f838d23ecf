//! Coincident-direction limits: the Kronecker-delta closed forms for
//! arbitrary spins and the equal-spin forms as functions of theta.
//!
//! cargo run --example coincidence_sums

use std::f64::consts::PI;

use swsh::{coincidence_rhs, mode_sum, spinsame_rhs, Direction, HalfInt, TheoremId, TheoremParams};

fn main() -> swsh::Result<()> {
    let dir = Direction::new(1.0, 0.4)?;
    println!("coincident directions, theta = 1.0");
    for (s, sp, l) in [("1", "1", "2"), ("1", "0", "2"), ("1/2", "-1/2", "5/2"), ("-1", "1", "1")] {
        let p = TheoremParams::new(s.parse::<HalfInt>()?, sp.parse()?, l.parse()?)?;
        for id in TheoremId::ALL {
            let brute = mode_sum(id, &p, dir, dir);
            let closed = coincidence_rhs(id, &p, dir);
            println!(
                "  s={s:<4} s'={sp:<5} l={l:<4} {:<10} {:>24.12}  |diff| {:.1e}",
                id.name(),
                closed,
                (brute - closed).norm()
            );
        }
    }

    let (s, l) = (HalfInt::from_twice(3), HalfInt::from_twice(7));
    println!("\nequal spins s = s' = {s}, l = {l}, across theta");
    println!("{:>6} {}", "theta", TheoremId::ALL.map(|id| format!("{:>12}", id.name())).join(""));
    for k in 0..=6 {
        let theta = PI * f64::from(k) / 6.0;
        let d = Direction::new(theta, 0.0)?;
        let row: Vec<String> = TheoremId::ALL
            .iter()
            .map(|&id| spinsame_rhs(id, s, l, d).map(|v| format!("{:>12.6}", v.re)))
            .collect::<swsh::Result<_>>()?;
        println!("{theta:>6.3} {}", row.join(""));
    }
    Ok(())
}
