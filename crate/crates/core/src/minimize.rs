//! Derivative-free minimizers used as an oracle for the closed-form optima.
//!
//! Both searches work on a logarithmic axis: the optima of interest range
//! from a few Planck times to ~1e20 of them, and a log axis gives uniform
//! relative resolution across that span. Neither uses derivatives, so they
//! stay independent of the dual-number machinery in [`errorprop`](crate::errorprop).

use crate::error::{Error, Result};

/// `1/φ`
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Search interval `0 < lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    lo: f64,
    hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::InvalidBracket { lo, hi })
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    fn log_bounds(&self) -> (f64, f64) {
        (self.lo.ln(), self.hi.ln())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizationResult<X> {
    pub argmin: X,
    pub min_value: f64,
    pub evaluations: usize,
    pub converged: bool,
    /// `hi/lo - 1` of the final search interval (largest over axes).
    pub bracket_final_width: f64,
    /// Evaluations that failed and were skipped.
    pub excluded: usize,
}

/// NaN compares as worse than everything.
fn better(a: f64, b: f64) -> bool {
    a < b || (b.is_nan() && !a.is_nan())
}

/// Golden-section search on `ln x` over `bracket`.
///
/// Stops once the interval's relative width `hi/lo - 1` is at most `rel_tol`,
/// or after `max_evals` evaluations, in which case `converged` is false.
/// The objective is assumed unimodal on the bracket.
pub fn minimize_unimodal<F>(
    mut objective: F,
    bracket: Bracket,
    rel_tol: f64,
    max_evals: usize,
) -> Result<MinimizationResult<f64>>
where
    F: FnMut(f64) -> f64,
{
    if !(1e-12..1.0).contains(&rel_tol) {
        return Err(Error::InvalidArgument(format!(
            "relative tolerance {rel_tol} outside [1e-12, 1)"
        )));
    }
    if max_evals < 2 {
        return Err(Error::InvalidArgument(
            "need at least two evaluations".into(),
        ));
    }

    let (mut a, mut b) = bracket.log_bounds();
    let mut u1 = b - INV_PHI * (b - a);
    let mut u2 = a + INV_PHI * (b - a);
    let mut f1 = objective(u1.exp());
    let mut f2 = objective(u2.exp());
    let mut evaluations = 2;

    let mut best = if better(f2, f1) { (u2, f2) } else { (u1, f1) };

    while (b - a).exp_m1() > rel_tol && evaluations < max_evals {
        if better(f1, f2) || f1 == f2 {
            b = u2;
            u2 = u1;
            f2 = f1;
            u1 = b - INV_PHI * (b - a);
            f1 = objective(u1.exp());
            if better(f1, best.1) {
                best = (u1, f1);
            }
        } else {
            a = u1;
            u1 = u2;
            f1 = f2;
            u2 = a + INV_PHI * (b - a);
            f2 = objective(u2.exp());
            if better(f2, best.1) {
                best = (u2, f2);
            }
        }
        evaluations += 1;
    }

    let width = (b - a).exp_m1();
    Ok(MinimizationResult {
        argmin: best.0.exp(),
        min_value: best.1,
        evaluations,
        converged: width <= rel_tol,
        bracket_final_width: width,
        excluded: 0,
    })
}

/// Log-grid scan over a 2-D box with recursive refinement.
///
/// Each level evaluates a `points_per_axis²` log-spaced grid, then recentres
/// the box on the best point found so far with each log side shrunk 4×,
/// clamped to the original box. Points where the objective errors are
/// counted in `excluded` and skipped.
pub fn grid_refine_2d<F, E>(
    mut objective: F,
    domain: [Bracket; 2],
    levels: usize,
    points_per_axis: usize,
) -> Result<MinimizationResult<[f64; 2]>>
where
    F: FnMut(f64, f64) -> std::result::Result<f64, E>,
{
    if levels < 1 {
        return Err(Error::InvalidArgument(
            "grid refinement needs at least one level".into(),
        ));
    }
    if points_per_axis < 8 {
        return Err(Error::InvalidArgument(format!(
            "grid needs at least 8 points per axis, got {points_per_axis}"
        )));
    }

    let outer = domain.map(|b| b.log_bounds());
    let mut current = outer;
    let mut best: Option<([f64; 2], f64)> = None;
    let mut evaluations = 0;
    let mut excluded = 0;
    let n = points_per_axis - 1;

    for level in 0..levels {
        if level > 0 {
            let (centre, _) = best.expect("checked after each level");
            for axis in 0..2 {
                let (lo, hi) = outer[axis];
                let half = (current[axis].1 - current[axis].0) / 8.0;
                let c = centre[axis].clamp(lo + half, hi - half);
                current[axis] = (c - half, c + half);
            }
        }
        let step = [0, 1].map(|axis| (current[axis].1 - current[axis].0) / n as f64);
        for i in 0..=n {
            let u = current[0].0 + step[0] * i as f64;
            for j in 0..=n {
                let w = current[1].0 + step[1] * j as f64;
                evaluations += 1;
                match objective(u.exp(), w.exp()) {
                    Ok(value) if !value.is_nan() => {
                        if best.is_none_or(|(_, b)| value < b) {
                            best = Some(([u, w], value));
                        }
                    }
                    _ => excluded += 1,
                }
            }
        }
        if best.is_none() {
            return Err(Error::InvalidArgument(
                "objective failed at every grid point".into(),
            ));
        }
    }

    let (point, value) = best.expect("at least one admissible point");
    let width = current
        .iter()
        .map(|(lo, hi)| (hi - lo).exp_m1())
        .fold(0.0, f64::max);
    Ok(MinimizationResult {
        argmin: point.map(f64::exp),
        min_value: value,
        evaluations,
        converged: true,
        bracket_final_width: width,
        excluded,
    })
}
