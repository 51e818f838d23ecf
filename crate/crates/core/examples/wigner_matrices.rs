//! Wigner d- and D-matrix elements, the log-factorial table behind the
//! reference formula, and a unitarity check at large degree.
//!
//! cargo run --example wigner_matrices

use swsh::{log_factorial_half, wigner_big_d, wigner_small_d, wigner_small_d_sum, HalfInt, WignerArgs};

fn main() -> swsh::Result<()> {
    let beta = 1.1;
    let ell = HalfInt::from_twice(3);
    println!("d^{{3/2}}(beta = {beta}):");
    for m in ell.projections() {
        let row: Vec<String> = ell
            .projections()
            .map(|mp| wigner_small_d(ell, m, mp, beta).map(|d| format!("{d:>10.6}")))
            .collect::<swsh::Result<_>>()?;
        println!("  {:>5} {}", m.to_string(), row.join(" "));
    }

    let args = WignerArgs::new(HalfInt::from_int(2), HalfInt::from_int(1), HalfInt::from_int(-1), 0.4, 1.1, -0.7)?;
    println!("\nD^2_{{1,-1}}(0.4, 1.1, -0.7) = {:.12}", wigner_big_d(&args)?);

    // The Jacobi-polynomial evaluation and the factorial sum agree at low degree;
    // the sum alternates in sign and loses digits as l grows.
    for twice in [4, 24, 60] {
        let l = HalfInt::from_twice(twice);
        let m = HalfInt::from_twice(twice % 4);
        let a = wigner_small_d(l, m, m, 2.0)?;
        let b = wigner_small_d_sum(l, m, m, 2.0)?;
        println!("l = {l:>3}: jacobi {a:+.16e}  sum {b:+.16e}  diff {:.1e}", (a - b).abs());
    }

    let l = HalfInt::from_twice(97);
    let worst = l
        .projections()
        .map(|m| {
            let norm: f64 = l.projections().map(|mp| wigner_small_d(l, m, mp, 0.77).unwrap().powi(2)).sum();
            (norm - 1.0).abs()
        })
        .fold(0.0, f64::max);
    println!("\nrow norms of d^{{97/2}}(0.77) deviate from 1 by at most {worst:.1e}");

    for x in ["1/2", "7/2", "30", "301/2"] {
        println!("ln({x})! = {:.15}", log_factorial_half(x.parse()?)?);
    }
    Ok(())
}
