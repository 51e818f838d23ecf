//! Log-factorials and Wigner small-d / big-D matrix elements.
//!
//! Conventions: `D^l_{m,m'}(alpha, beta, gamma) = e^{-i m alpha} d^l_{m,m'}(beta) e^{-i m' gamma}`
//! with the standard (Wigner) sign pattern for `d`, so that for example
//! `d^1_{1,0}(beta) = -sin(beta)/sqrt(2)`. The elements are those of the
//! SU(2) representation, so half-integer `l` changes sign under
//! `alpha -> alpha + 2 pi`.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::sum::NeumaierSum;

/// Largest `l` the log-factorial table is sized for.
pub const DEFAULT_ELL_MAX: i32 = 64;

/// `ln Gamma(3/2) = ln(sqrt(pi)/2)`.
const LN_GAMMA_THREE_HALVES: f64 = -0.120_782_237_635_245_22;

/// Table of `ln Gamma(k/2 + 1)` for `k = 0 ..= TABLE_TWICE_MAX`.
const TABLE_TWICE_MAX: usize = 4 * DEFAULT_ELL_MAX as usize + 4;

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = vec![0.0; TABLE_TWICE_MAX + 1];
        // integer arguments: ln n! = sum ln i
        let mut acc = NeumaierSum::new();
        for k in (2..=TABLE_TWICE_MAX).step_by(2) {
            acc.add(((k / 2) as f64).ln());
            out[k] = acc.value();
        }
        // half-integer arguments: ln Gamma(n + 3/2) = ln Gamma(3/2) + sum_{j=1}^{n} ln(j + 1/2)
        let mut acc = NeumaierSum::new();
        acc.add(LN_GAMMA_THREE_HALVES);
        out[1] = acc.value();
        for k in (3..=TABLE_TWICE_MAX).step_by(2) {
            acc.add((k as f64 / 2.0).ln());
            out[k] = acc.value();
        }
        out
    })
}

/// `ln Gamma(x + 1)` for a non-negative integer or half-integer `x`.
///
/// Values up to `x = 2 * DEFAULT_ELL_MAX + 2` come from a table built on
/// first use; larger arguments extend the table by the recurrence.
pub fn log_factorial_half(x: HalfInt) -> Result<f64> {
    if x < HalfInt::ZERO {
        return Err(Error::NegativeFactorial(x.to_string()));
    }
    let k = x.twice() as usize;
    let tab = table();
    if k <= TABLE_TWICE_MAX {
        return Ok(tab[k]);
    }
    let start = if k % 2 == TABLE_TWICE_MAX % 2 { TABLE_TWICE_MAX } else { TABLE_TWICE_MAX - 1 };
    let mut acc = NeumaierSum::new();
    acc.add(tab[start]);
    for j in ((start + 2)..=k).step_by(2) {
        acc.add((j as f64 / 2.0).ln());
    }
    Ok(acc.value())
}

/// `ln n!` for a non-negative integer `n`.
#[inline]
pub(crate) fn ln_fact(n: i32) -> f64 {
    debug_assert!(n >= 0);
    let k = 2 * n as usize;
    if k <= TABLE_TWICE_MAX {
        table()[k]
    } else {
        log_factorial_half(HalfInt::from_int(n)).expect("non-negative")
    }
}

/// Arguments of a single D-matrix element.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WignerArgs {
    pub ell: HalfInt,
    pub m: HalfInt,
    pub mprime: HalfInt,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl WignerArgs {
    pub fn new(ell: HalfInt, m: HalfInt, mprime: HalfInt, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        check_indices(ell, m, mprime)?;
        Ok(Self { ell, m, mprime, alpha, beta, gamma })
    }
}

pub(crate) fn check_indices(ell: HalfInt, m: HalfInt, mprime: HalfInt) -> Result<()> {
    let bad = |why: &str| Err(Error::InvalidWignerArgs(format!("l={ell}, m={m}, m'={mprime}: {why}")));
    if ell < HalfInt::ZERO {
        return bad("l must be non-negative");
    }
    if m.abs() > ell || mprime.abs() > ell {
        return bad("|m| and |m'| must not exceed l");
    }
    if !ell.differs_by_integer(m) || !ell.differs_by_integer(mprime) {
        return bad("l - m and l - m' must be integers");
    }
    Ok(())
}

/// Wigner small-d element `d^l_{m,m'}(beta)`.
///
/// Evaluated through the Jacobi-polynomial form, which stays accurate for
/// `l` up to `DEFAULT_ELL_MAX`. `beta = 0` returns the Kronecker delta by
/// branch.
pub fn wigner_small_d(ell: HalfInt, m: HalfInt, mprime: HalfInt, beta: f64) -> Result<f64> {
    check_indices(ell, m, mprime)?;
    Ok(small_d(ell, m, mprime, beta))
}

/// Unchecked small-d; indices must already be valid.
pub(crate) fn small_d(ell: HalfInt, m: HalfInt, mprime: HalfInt, beta: f64) -> f64 {
    if beta == 0.0 {
        return if m == mprime { 1.0 } else { 0.0 };
    }
    let (j2, a2, b2) = (ell.twice(), m.twice(), mprime.twice());
    // all of these are integers once halved
    let jpa = (j2 + a2) / 2;
    let jma = (j2 - a2) / 2;
    let jpb = (j2 + b2) / 2;
    let jmb = (j2 - b2) / 2;
    let a_minus_b = (a2 - b2) / 2;
    let a_plus_b = (a2 + b2) / 2;

    let k = jpa.min(jma).min(jpb).min(jmb);
    let (mu, nu) = if k == jpb {
        (a_minus_b, -a_plus_b)
    } else if k == jmb {
        (-a_minus_b, a_plus_b)
    } else if k == jpa {
        (-a_minus_b, -a_plus_b)
    } else {
        (a_minus_b, a_plus_b)
    };
    debug_assert!(mu >= 0 && nu >= 0);

    let xi = if b2 >= a2 || a_minus_b % 2 == 0 { 1.0 } else { -1.0 };
    let log_norm = 0.5 * (ln_fact(k) + ln_fact(k + mu + nu) - ln_fact(k + mu) - ln_fact(k + nu));
    let half = 0.5 * beta;
    let trig = half.sin().powi(mu) * half.cos().powi(nu);
    xi * log_norm.exp() * trig * jacobi(k, f64::from(mu), f64::from(nu), beta.cos())
}

/// Jacobi polynomial `P_n^{(a,b)}(x)` by the three-term recurrence in `n`.
fn jacobi(n: i32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut p_prev = 1.0;
    let mut p = 0.5 * (2.0 * (a + 1.0) + (a + b + 2.0) * (x - 1.0));
    for k in 2..=n {
        let k = f64::from(k);
        let c = 2.0 * k + a + b;
        let lead = 2.0 * k * (k + a + b) * (c - 2.0);
        let mid = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
        let tail = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
        let next = (mid * p - tail * p_prev) / lead;
        p_prev = p;
        p = next;
    }
    p
}

/// Wigner small-d from the explicit factorial sum.
///
/// Terms are assembled in log space with signs tracked separately and then
/// added smallest-magnitude first with compensated accumulation. The sum
/// alternates in sign, so relative accuracy degrades as `l` grows (roughly
/// `1e-10` by `l = 24`); it serves as a reference for
/// [`wigner_small_d`] at small `l`.
pub fn wigner_small_d_sum(ell: HalfInt, m: HalfInt, mprime: HalfInt, beta: f64) -> Result<f64> {
    check_indices(ell, m, mprime)?;
    if beta == 0.0 {
        return Ok(if m == mprime { 1.0 } else { 0.0 });
    }
    let (j2, a2, b2) = (ell.twice(), m.twice(), mprime.twice());
    let jpa = (j2 + a2) / 2;
    let jma = (j2 - a2) / 2;
    let jpb = (j2 + b2) / 2;
    let jmb = (j2 - b2) / 2;
    let a_minus_b = (a2 - b2) / 2;

    let half = 0.5 * beta;
    let (c, s) = (half.cos(), half.sin());
    let (ln_c, ln_s) = (c.abs().ln(), s.abs().ln());
    let log_pref = 0.5 * (ln_fact(jpa) + ln_fact(jma) + ln_fact(jpb) + ln_fact(jmb));

    let lo = 0.max(-a_minus_b);
    let hi = jpb.min(jma);
    let mut terms: Vec<(f64, f64)> = Vec::with_capacity((hi - lo + 1).max(0) as usize);
    for t in lo..=hi {
        let e_cos = j2 + (b2 - a2) / 2 - 2 * t;
        let e_sin = a_minus_b + 2 * t;
        if (e_cos > 0 && c == 0.0) || (e_sin > 0 && s == 0.0) {
            continue;
        }
        let mut log_mag = log_pref - ln_fact(jpb - t) - ln_fact(t) - ln_fact(a_minus_b + t) - ln_fact(jma - t);
        if e_cos > 0 {
            log_mag += f64::from(e_cos) * ln_c;
        }
        if e_sin > 0 {
            log_mag += f64::from(e_sin) * ln_s;
        }
        let mut sign = if (a_minus_b + t) % 2 == 0 { 1.0 } else { -1.0 };
        if c < 0.0 && e_cos % 2 != 0 {
            sign = -sign;
        }
        if s < 0.0 && e_sin % 2 != 0 {
            sign = -sign;
        }
        terms.push((log_mag, sign));
    }
    terms.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(terms.into_iter().map(|(lm, sg)| sg * lm.exp()).collect::<NeumaierSum>().value())
}

/// Wigner big-D element `D^l_{m,m'}(alpha, beta, gamma)`.
pub fn wigner_big_d(args: &WignerArgs) -> Result<Complex64> {
    check_indices(args.ell, args.m, args.mprime)?;
    Ok(big_d(args.ell, args.m, args.mprime, args.alpha, args.beta, args.gamma))
}

pub(crate) fn big_d(ell: HalfInt, m: HalfInt, mprime: HalfInt, alpha: f64, beta: f64, gamma: f64) -> Complex64 {
    let d = small_d(ell, m, mprime, beta);
    if d == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let phase = -(m.to_f64() * alpha + mprime.to_f64() * gamma);
    Complex64::from_polar(d, phase)
}
