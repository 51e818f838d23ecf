//! Machine-readable output: JSON lines and CSV.
//!
//! Floats are written with 17 significant digits so every value round-trips
//! to the same `f64`. Non-finite values become `null` in JSON and `NaN` /
//! `inf` in CSV. Spins are written as exact tokens (`"1/2"`, `"-2"`).

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::half::HalfInt;
use crate::theorems::CheckReport;

/// Field order of a verification record.
pub const CHECK_FIELDS: [&str; 13] = [
    "theorem",
    "s",
    "sprime",
    "ell",
    "mode",
    "samples",
    "max_abs_residual",
    "tolerance",
    "pass",
    "worst_theta",
    "worst_phi",
    "worst_theta_p",
    "worst_phi_p",
];

/// Header of the equal-spin sweep table.
pub const SWEEP_HEADER: &str = "theta,lhs_re,lhs_im,rhs_re,rhs_im,abs_err";

/// Header of an evaluation record in CSV form.
pub const EVAL_HEADER: &str = "s,ell,m,theta,phi,target,re,im";

/// Header of an Euler-angle record in CSV form.
pub const EULER_HEADER: &str = "theta,phi,theta_p,phi_p,alpha,beta,gamma,sheet";

/// `x` with 17 significant digits.
pub fn float17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// JSON number with 17 significant digits, or `null`.
pub fn json_float(x: f64) -> String {
    if x.is_finite() {
        float17(x)
    } else {
        "null".to_owned()
    }
}

/// `x` with 15 significant digits in positional notation where that stays
/// short, scientific otherwise.
pub fn sig15(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_owned();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            s
        }
    } else {
        format!("{x:.14e}")
    }
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn spin(x: HalfInt) -> String {
    json_str(&x.to_string())
}

/// One JSON object, keys in the order given.
fn object(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("{}:{v}", json_str(k))).collect();
    format!("{{{}}}", body.join(","))
}

/// A [`CheckReport`] as one JSON line (no trailing newline).
pub fn check_json(r: &CheckReport) -> String {
    let (w, wp) = r.worst_case;
    object(&[
        ("theorem", json_str(r.theorem.name())),
        ("s", spin(r.params.s())),
        ("sprime", spin(r.params.sprime())),
        ("ell", spin(r.params.ell())),
        ("mode", json_str(r.mode.name())),
        ("samples", r.samples.to_string()),
        ("max_abs_residual", json_float(r.max_abs_residual)),
        ("tolerance", json_float(r.tolerance)),
        ("pass", r.pass.to_string()),
        ("worst_theta", json_float(w.theta())),
        ("worst_phi", json_float(w.phi())),
        ("worst_theta_p", json_float(wp.theta())),
        ("worst_phi_p", json_float(wp.phi())),
    ])
}

/// A [`CheckReport`] as one CSV row matching [`CHECK_FIELDS`].
pub fn check_csv(r: &CheckReport) -> String {
    let (w, wp) = r.worst_case;
    [
        r.theorem.name().to_owned(),
        r.params.s().to_string(),
        r.params.sprime().to_string(),
        r.params.ell().to_string(),
        r.mode.name().to_owned(),
        r.samples.to_string(),
        float17(r.max_abs_residual),
        float17(r.tolerance),
        r.pass.to_string(),
        float17(w.theta()),
        float17(w.phi()),
        float17(wp.theta()),
        float17(wp.phi()),
    ]
    .join(",")
}

/// A [`CheckReport`] as one aligned text line.
pub fn check_text(r: &CheckReport) -> String {
    format!(
        "{:<4} {:<10} {:<11} s={:<5} s'={:<5} l={:<5} max={:<10.3e} tol={:<10.3e}",
        if r.pass { "PASS" } else { "FAIL" },
        r.theorem.name(),
        r.mode.name(),
        r.params.s().to_string(),
        r.params.sprime().to_string(),
        r.params.ell().to_string(),
        r.max_abs_residual,
        r.tolerance,
    )
    .trim_end()
    .to_owned()
}

/// One evaluated quantity.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalRecord {
    pub s: HalfInt,
    pub ell: HalfInt,
    pub m: HalfInt,
    pub theta: f64,
    pub phi: f64,
    pub target: String,
    pub value: Complex64,
}

impl EvalRecord {
    pub fn json(&self) -> String {
        object(&[
            ("s", spin(self.s)),
            ("ell", spin(self.ell)),
            ("m", spin(self.m)),
            ("theta", json_float(self.theta)),
            ("phi", json_float(self.phi)),
            ("target", json_str(&self.target)),
            ("re", json_float(self.value.re)),
            ("im", json_float(self.value.im)),
        ])
    }

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.s,
            self.ell,
            self.m,
            float17(self.theta),
            float17(self.phi),
            self.target,
            float17(self.value.re),
            float17(self.value.im)
        )
    }

    pub fn text(&self) -> String {
        format!("re = {}\nim = {}", sig15(self.value.re), sig15(self.value.im))
    }
}

/// Relative Euler angles of two directions.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerRecord {
    pub theta: f64,
    pub phi: f64,
    pub theta_p: f64,
    pub phi_p: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub sheet: &'static str,
}

impl EulerRecord {
    pub fn json(&self) -> String {
        object(&[
            ("theta", json_float(self.theta)),
            ("phi", json_float(self.phi)),
            ("theta_p", json_float(self.theta_p)),
            ("phi_p", json_float(self.phi_p)),
            ("alpha", json_float(self.alpha)),
            ("beta", json_float(self.beta)),
            ("gamma", json_float(self.gamma)),
            ("sheet", json_str(self.sheet)),
        ])
    }

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            float17(self.theta),
            float17(self.phi),
            float17(self.theta_p),
            float17(self.phi_p),
            float17(self.alpha),
            float17(self.beta),
            float17(self.gamma),
            self.sheet
        )
    }

    pub fn text(&self) -> String {
        format!(
            "alpha = {}\nbeta  = {}\ngamma = {}\nsheet = {}",
            sig15(self.alpha),
            sig15(self.beta),
            sig15(self.gamma),
            self.sheet
        )
    }
}

/// One row of an equal-spin sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub lhs: Complex64,
    pub rhs: Complex64,
}

impl SweepRow {
    pub fn abs_err(&self) -> f64 {
        (self.lhs - self.rhs).norm()
    }

    pub fn json(&self) -> String {
        object(&[
            ("theta", json_float(self.theta)),
            ("lhs_re", json_float(self.lhs.re)),
            ("lhs_im", json_float(self.lhs.im)),
            ("rhs_re", json_float(self.rhs.re)),
            ("rhs_im", json_float(self.rhs.im)),
            ("abs_err", json_float(self.abs_err())),
        ])
    }

    pub fn csv(&self) -> String {
        [self.theta, self.lhs.re, self.lhs.im, self.rhs.re, self.rhs.im, self.abs_err()].map(float17).join(",")
    }

    pub fn text(&self) -> String {
        format!(
            "{:>22} {:>22} {:>22} {:>10.3e}",
            sig15(self.theta),
            sig15(self.lhs.re),
            sig15(self.rhs.re),
            self.abs_err()
        )
    }
}
