//! Seeded verification runs over a parameter grid, written as JSON lines.
//!
//! cargo run --example verify_report [seed]

use swsh::report::check_json;
use swsh::{parameter_grid, verify, Mode, TheoremId};

fn main() -> swsh::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let grid = parameter_grid(2, 5);
    let mut failed = 0;
    for mode in [Mode::TwoPoint, Mode::Coincidence] {
        for id in [TheoremId::Base, TheoremId::MDTheta] {
            for p in &grid {
                let r = verify(id, p, 25, mode.tol_scale(id) * p.dim(), seed, mode)?;
                failed += usize::from(!r.pass);
                println!("{}", check_json(&r));
            }
        }
    }
    eprintln!("{failed} failing checks");
    Ok(())
}
