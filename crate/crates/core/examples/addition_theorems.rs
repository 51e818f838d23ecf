//! Brute-force mode sums against the closed-form right-hand sides for all
//! six two-point identities.
//!
//! cargo run --example addition_theorems

use swsh::{lhs_sum, rhs_closed, Direction, HalfInt, TheoremId, TheoremParams};

fn main() -> swsh::Result<()> {
    let a = Direction::new(0.8, 1.7)?;
    let b = Direction::new(2.1, 0.3)?;
    let cases = [("1", "0", "2"), ("1/2", "-1/2", "3/2"), ("-3/2", "1/2", "7/2"), ("2", "2", "4")];
    for (s, sp, l) in cases {
        let p = TheoremParams::new(s.parse::<HalfInt>()?, sp.parse()?, l.parse()?)?;
        println!("s = {s}, s' = {sp}, l = {l}");
        for id in TheoremId::ALL {
            let lhs = lhs_sum(id, &p, a, b);
            let rhs = rhs_closed(id, &p, a, b);
            println!("  {:<10} lhs {:>25.15}  |lhs - rhs| {:.1e}", id.name(), lhs, (lhs - rhs).norm());
        }
    }
    Ok(())
}
