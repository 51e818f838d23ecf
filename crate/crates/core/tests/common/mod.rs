//! Oracles shared by the integration tests. None of them call into the
//! crate's numerical kernels.

#![allow(dead_code)]

use std::f64::consts::{LN_2, PI};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use swsh::{Direction, HalfInt};

pub fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

pub fn dir(theta: f64, phi: f64) -> Direction {
    Direction::new(theta, phi).unwrap()
}

/// Natural log of a big integer from its leading 64 bits and bit length.
fn ln_big(x: &BigUint) -> (f64, i64) {
    let bits = x.bits() as i64;
    let shift = (bits - 64).max(0);
    let top: BigUint = x >> (shift as usize);
    let top = u64::try_from(&top).expect("at most 64 bits after shift");
    ((top as f64).ln(), shift)
}

/// `ln Gamma(x + 1)` for `x = twice / 2`, from exact integer products.
///
/// Integers use `ln n!`. Half-integers use
/// `Gamma(n + 3/2) = sqrt(pi) (2n+2)! / ((n+1)! 4^(n+1))`, where the ratio
/// of factorials is formed exactly as the product `(n+2)(n+3)...(2n+2)`.
pub fn ln_factorial_oracle(twice: u32) -> f64 {
    if twice.is_multiple_of(2) {
        let n = twice / 2;
        let prod: BigUint = (1..=n.max(1)).map(BigUint::from).product();
        let (ln_top, shift) = ln_big(&prod);
        ln_top + shift as f64 * LN_2
    } else {
        let n = (twice - 1) / 2;
        let prod: BigUint = (n + 2..=2 * n + 2).map(BigUint::from).product();
        let (ln_top, shift) = ln_big(&prod);
        let pow2 = shift - 2 * (i64::from(n) + 1);
        ln_top + pow2 as f64 * LN_2 + 0.5 * PI.ln()
    }
}

/// Legendre `P_l(x)` and `P_l'(x)` by the three-term recurrence.
pub fn legendre(ell: u32, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if ell == 0 {
        return (1.0, 0.0);
    }
    for k in 1..ell {
        let k = f64::from(k);
        let p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let l = f64::from(ell);
    // P_l' = l (x P_l - P_{l-1}) / (x^2 - 1), fine away from x = +-1
    let dp = l * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Seeded uniform directions, independent of the crate's own sampler.
pub struct Unit(ChaCha8Rng);

impl Unit {
    pub fn new(seed: u64) -> Self {
        Unit(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next(&mut self) -> f64 {
        self.0.gen()
    }

    /// Uniform direction with `sin(theta) >= min_sin`.
    pub fn direction(&mut self, min_sin: f64) -> Direction {
        loop {
            let theta = (2.0 * self.next() - 1.0).acos();
            let phi = 2.0 * PI * self.next();
            if theta.sin() >= min_sin {
                return dir(theta, phi);
            }
        }
    }
}

/// All `(s, l, m)` with `|2s| <= max_twice_spin` and `2l <= max_twice_ell`.
pub fn quantum_grid(max_twice_spin: i32, max_twice_ell: i32) -> Vec<swsh::QuantumNumbers> {
    let mut out = Vec::new();
    for s2 in -max_twice_spin..=max_twice_spin {
        for l2 in (s2.abs()..=max_twice_ell).step_by(2) {
            for m in h(l2).projections() {
                out.push(swsh::QuantumNumbers::new(h(s2), h(l2), m).unwrap());
            }
        }
    }
    out
}
