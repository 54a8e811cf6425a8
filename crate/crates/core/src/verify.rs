//! Cross-checks of the closed-form optima against the golden-section oracle.

use serde::Serialize;

use crate::bound::{self, BoundInputs};
use crate::error::{Error, Result};
use crate::minimize::{minimize_unimodal, Bracket};
use crate::quantities::{Constants, Dimension, Quantity};

/// Durations checked, as (label, SI seconds or Planck times).
enum Duration {
    Planck(f64),
    Seconds(f64),
}

const DURATIONS: [(&str, Duration); 4] = [
    ("t_P", Duration::Planck(1.0)),
    ("1e3 t_P", Duration::Planck(1e3)),
    ("1 s", Duration::Seconds(1.0)),
    ("1e6 s", Duration::Seconds(1e6)),
];

const SPEEDS: [(&str, f64); 3] = [("c", 1.0), ("c/2", 0.5), ("c/10", 0.1)];

const MAX_EVALS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub oracle: f64,
    pub closed_form: f64,
    pub rel_error: f64,
    pub evaluations: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub rel_tol: f64,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn rel_error(oracle: f64, closed: f64) -> f64 {
    ((oracle - closed) / closed).abs()
}

/// Minimize the constrained objective numerically for each duration and
/// speed, and compare argmin and minimum with the closed forms.
///
/// `rel_tol` must lie in `(0, 1e-3]`. The oracle itself runs at
/// `max(rel_tol / 100, 1e-12)`, so tolerances below what the oracle can
/// resolve produce failing checks rather than an error.
pub fn verify_optima(rel_tol: f64, constants: &Constants) -> Result<VerificationReport> {
    if !(rel_tol > 0.0 && rel_tol <= 1e-3) {
        return Err(Error::InvalidArgument(format!(
            "verification tolerance {rel_tol} outside (0, 1e-3]"
        )));
    }
    let oracle_tol = (rel_tol / 100.0).max(1e-12);
    let mut checks = Vec::new();

    for (label, duration) in &DURATIONS {
        let t = match *duration {
            Duration::Planck(x) => Quantity::time(x)?,
            Duration::Seconds(s) => constants.to_planck(s, Dimension::TIME)?,
        };
        let bracket = Bracket::new(1e-3, 1e3 * t.magnitude().max(1.0))?;
        for (v_label, v) in SPEEDS {
            let inputs = BoundInputs::new(t, Quantity::speed(v)?)?;
            let (tt, vv) = (t.magnitude(), v);
            let res = minimize_unimodal(
                |x| bound::natural::constrained_objective(x, tt, vv),
                bracket,
                oracle_tol,
                MAX_EVALS,
            )?;
            let closed = bound::optimal_delta_tc(&inputs)?.magnitude();
            let err = rel_error(res.argmin, closed);
            checks.push(Check {
                name: format!("argmin t={label} v={v_label}"),
                oracle: res.argmin,
                closed_form: closed,
                rel_error: err,
                evaluations: res.evaluations,
                passed: res.converged && err <= rel_tol,
            });

            if v == 1.0 {
                let b = bound::fundamental_bound(&t)?.magnitude();
                let err = rel_error(res.min_value, b * b);
                checks.push(Check {
                    name: format!("min value t={label} v={v_label}"),
                    oracle: res.min_value,
                    closed_form: b * b,
                    rel_error: err,
                    evaluations: res.evaluations,
                    passed: res.converged && err <= rel_tol,
                });
            }
        }
    }
    Ok(VerificationReport { rel_tol, checks })
}
