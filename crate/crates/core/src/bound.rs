//! Minimum-uncertainty clocks and the fundamental bound on time measurement.
//!
//! A clock resolving proper-time steps `Δt_c` must carry an energy spread
//! `ΔE ≥ ħ/Δt_c`, so its Schwarzschild radius fluctuates by
//! `Δr_s = 2Għ/(c⁴Δt_c)`. Propagating both uncertainties through the dilation
//! map gives a variance that grows for small `Δt_c` and for large `Δt_c`.
//! Tying the clock size to its period through `2πr = vΔt_c` and minimizing
//! over `Δt_c` yields
//!
//! ```text
//! Δt_c* = √2 π^(1/3) c^(1/3) (t² t_P⁴)^(1/6) / v^(1/3)
//! Δt    > √3 π^(1/3) t^(1/3) t_P^(2/3)          (v = c)
//! ```
//!
//! All functions take and return Planck-unit [`Quantity`] values.

use std::f64::consts::PI;

use crate::error::{self, Error, Result};
use crate::quantities::{Dimension, Quantity};

/// Fractional accuracy of the best present-day optical clocks, used as the
/// reference point when quoting how far below them the bound lies.
pub const BEST_CLOCK_FRACTIONAL_ACCURACY: f64 = 1e-19;

pub mod natural {
    use std::f64::consts::PI;

    use crate::dilation::natural::lapse_squared;
    use crate::scalar::Scalar;

    fn pi<S: Scalar>() -> S {
        S::lift(PI)
    }

    /// Variance after substituting the saturated `Δr_s`:
    /// `t_c² / ((1 - r_s/r)³ r² Δt_c²) + Δt_c² / (1 - r_s/r)`.
    pub fn full_variance<S: Scalar>(t_c: S, dt_c: S, r: S, r_s: S) -> S {
        let f = lapse_squared(r_s, r);
        t_c * t_c / (f.powi(3) * r * r * dt_c * dt_c) + dt_c * dt_c / f
    }

    /// `t² / (r² Δt_c²) + Δt_c²`, the flat-space lower bound of [`full_variance`].
    pub fn lower_bound_objective<S: Scalar>(dt_c: S, t: S, r: S) -> S {
        t * t / (r * r * dt_c * dt_c) + dt_c * dt_c
    }

    /// The two terms of the objective with `r = vΔt_c/(2π)`:
    /// `(4π²t²/(v²Δt_c⁴), Δt_c²)`.
    pub fn constrained_terms<S: Scalar>(dt_c: S, t: S, v: S) -> (S, S) {
        let four_pi_sq = S::lift(4.0) * pi::<S>() * pi::<S>();
        (four_pi_sq * t * t / (v * v * dt_c.powi(4)), dt_c * dt_c)
    }

    pub fn constrained_objective<S: Scalar>(dt_c: S, t: S, v: S) -> S {
        let (gravity, quantum) = constrained_terms(dt_c, t, v);
        gravity + quantum
    }

    /// `√2 π^(1/3) c^(1/3) (t² t_P⁴)^(1/6) / v^(1/3)` with `c = t_P = 1`.
    pub fn optimal_delta_tc<S: Scalar>(t: S, v: S) -> S {
        S::lift(2.0).sqrt() * pi::<S>().cbrt() * (t * t).powf(1.0 / 6.0) / v.cbrt()
    }

    /// `√2 π^(1/3) (t t_P²)^(1/3)` with `t_P = 1`.
    pub fn optimal_delta_tc_light<S: Scalar>(t: S) -> S {
        S::lift(2.0).sqrt() * pi::<S>().cbrt() * t.cbrt()
    }

    /// `√3 π^(1/3) t^(1/3) t_P^(2/3)` with `t_P = 1`.
    pub fn fundamental_bound<S: Scalar>(t: S) -> S {
        S::lift(3.0).sqrt() * pi::<S>().cbrt() * t.cbrt()
    }

    /// `√3 π^(1/3) (t_P/t)^(2/3)`.
    pub fn fractional_uncertainty<S: Scalar>(t: S) -> S {
        S::lift(3.0).sqrt() * pi::<S>().cbrt() / t.cbrt().powi(2)
    }

    /// Fields of the saturating clock, before wrapping in quantities.
    #[derive(Debug, Clone, Copy)]
    pub struct Profile<S> {
        pub dt_c: S,
        pub dt_min: S,
        pub r: S,
        pub r_s: S,
        pub energy: S,
        pub delta_e: S,
        pub fractional_de: S,
        pub fractional_dt: S,
    }

    /// The `v = c`, `r = 3 r_s` clock for duration `t`.
    pub fn saturating_profile<S: Scalar>(t: S) -> Profile<S> {
        let dt_c = optimal_delta_tc_light(t);
        let dt_min = fundamental_bound(t);
        let r = dt_c / (S::lift(2.0) * pi::<S>());
        let r_s = r / S::lift(3.0);
        // r_s = 2GE/c⁴ → E = r c⁴ / (6G)
        let energy = r / S::lift(6.0);
        let delta_e = S::lift(1.0) / dt_c;
        Profile {
            dt_c,
            dt_min,
            r,
            r_s,
            energy,
            delta_e,
            fractional_de: delta_e / energy,
            fractional_dt: dt_min / t,
        }
    }

    /// `√(ħ t / (m c²))`.
    pub fn salecker_wigner<S: Scalar>(t: S, mass: S) -> S {
        (t / mass).sqrt()
    }

    /// `t^(1/3) t_P^(2/3)` with unit prefactor.
    pub fn ng_lloyd<S: Scalar>(t: S) -> S {
        t.cbrt()
    }
}

fn time(q: &Quantity, what: &'static str) -> Result<f64> {
    let v = q.in_dimension(Dimension::TIME, what)?;
    error::positive(what, v)
}

fn length(q: &Quantity, what: &'static str) -> Result<f64> {
    let v = q.in_dimension(Dimension::LENGTH, what)?;
    error::positive(what, v)
}

/// Duration seen by the distant observer and the mean internal speed of the clock.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInputs {
    t: Quantity,
    v: Quantity,
}

impl BoundInputs {
    pub fn new(t: Quantity, v: Quantity) -> Result<Self> {
        time(&t, "observer time")?;
        let speed = v.in_dimension(Dimension::SPEED, "internal speed")?;
        error::positive("internal speed", speed)?;
        // Allow rounding from SI conversion of exactly c.
        let v = if speed > 1.0 + 1e-12 {
            return Err(Error::Superluminal { v: speed });
        } else if speed > 1.0 {
            Quantity::speed(1.0)?
        } else {
            v
        };
        Ok(Self { t, v })
    }

    /// `v = c`.
    pub fn light(t: Quantity) -> Result<Self> {
        Self::new(t, Quantity::speed(1.0)?)
    }

    pub fn t(&self) -> Quantity {
        self.t
    }

    pub fn v(&self) -> Quantity {
        self.v
    }
}

/// Variance of the observed time for a clock of radius `r` and Schwarzschild radius `r_s`.
pub fn full_variance(
    t_c: &Quantity,
    dt_c: &Quantity,
    r: &Quantity,
    r_s: &Quantity,
) -> Result<Quantity> {
    let t_c = time(t_c, "proper time")?;
    let dt_c = time(dt_c, "proper time uncertainty")?;
    let r = length(r, "clock radius")?;
    let r_s = r_s.in_dimension(Dimension::LENGTH, "Schwarzschild radius")?;
    error::non_negative("Schwarzschild radius", r_s)?;
    if r <= r_s {
        return Err(Error::InsideHorizon { r, r_s });
    }
    Quantity::new(
        natural::full_variance(t_c, dt_c, r, r_s),
        Dimension::TIME_SQUARED,
    )
}

/// Lower bound of [`full_variance`] obtained by dropping the `1 - r_s/r` factors.
pub fn lower_bound_objective(dt_c: &Quantity, t: &Quantity, r: &Quantity) -> Result<Quantity> {
    let dt_c = time(dt_c, "proper time uncertainty")?;
    let t = time(t, "observer time")?;
    let r = length(r, "clock radius")?;
    Quantity::new(
        natural::lower_bound_objective(dt_c, t, r),
        Dimension::TIME_SQUARED,
    )
}

/// Gravitational and quantum terms of [`constrained_objective`].
pub fn constrained_terms(dt_c: &Quantity, inputs: &BoundInputs) -> Result<(Quantity, Quantity)> {
    let dt_c = time(dt_c, "proper time uncertainty")?;
    let (a, b) = natural::constrained_terms(dt_c, inputs.t.magnitude(), inputs.v.magnitude());
    Ok((
        Quantity::new(a, Dimension::TIME_SQUARED)?,
        Quantity::new(b, Dimension::TIME_SQUARED)?,
    ))
}

/// Observed-time variance as a function of `Δt_c` alone, with `2πr = vΔt_c`.
pub fn constrained_objective(dt_c: &Quantity, inputs: &BoundInputs) -> Result<Quantity> {
    let dt_c = time(dt_c, "proper time uncertainty")?;
    Quantity::new(
        natural::constrained_objective(dt_c, inputs.t.magnitude(), inputs.v.magnitude()),
        Dimension::TIME_SQUARED,
    )
}

/// Minimizer of [`constrained_objective`].
pub fn optimal_delta_tc(inputs: &BoundInputs) -> Result<Quantity> {
    Quantity::time(natural::optimal_delta_tc(
        inputs.t.magnitude(),
        inputs.v.magnitude(),
    ))
}

/// [`optimal_delta_tc`] at `v = c`.
pub fn optimal_delta_tc_light(t: &Quantity) -> Result<Quantity> {
    Quantity::time(natural::optimal_delta_tc_light(time(t, "observer time")?))
}

/// Smallest achievable standard uncertainty in measuring the duration `t`.
///
/// This is an infimum: the inequality is strict for any clock with `r_s > 0`.
pub fn fundamental_bound(t: &Quantity) -> Result<Quantity> {
    Quantity::time(natural::fundamental_bound(time(t, "observer time")?))
}

/// `fundamental_bound(t) / t`.
pub fn fractional_uncertainty(t: &Quantity) -> Result<Quantity> {
    Quantity::dimensionless(natural::fractional_uncertainty(time(t, "observer time")?))
}

/// Orders of magnitude between the bound and [`BEST_CLOCK_FRACTIONAL_ACCURACY`].
pub fn orders_below_best_clocks(t: &Quantity) -> Result<f64> {
    let frac = fractional_uncertainty(t)?.magnitude();
    Ok((BEST_CLOCK_FRACTIONAL_ACCURACY / frac).log10())
}

/// The clock profile that attains the bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalClock {
    pub t: Quantity,
    pub v: Quantity,
    pub dt_c_opt: Quantity,
    pub dt_min: Quantity,
    pub r: Quantity,
    pub r_s: Quantity,
    pub energy: Quantity,
    pub delta_e: Quantity,
    pub fractional_de: Quantity,
    pub fractional_dt: Quantity,
}

/// Build the `v = c` clock: period from the optimal `Δt_c`, radius from
/// `2πr = cΔt_c`, Schwarzschild radius `r/3` and energy `r c⁴/(6G)`.
pub fn saturating_clock(t: &Quantity) -> Result<OptimalClock> {
    let p = natural::saturating_profile(time(t, "observer time")?);
    Ok(OptimalClock {
        t: *t,
        v: Quantity::speed(1.0)?,
        dt_c_opt: Quantity::time(p.dt_c)?,
        dt_min: Quantity::time(p.dt_min)?,
        r: Quantity::length(p.r)?,
        r_s: Quantity::length(p.r_s)?,
        energy: Quantity::energy(p.energy)?,
        delta_e: Quantity::energy(p.delta_e)?,
        fractional_de: Quantity::dimensionless(p.fractional_de)?,
        fractional_dt: Quantity::dimensionless(p.fractional_dt)?,
    })
}

/// Bounds from the literature next to the dilation bound.
///
/// `ng_lloyd` carries only the scaling `t^(1/3) t_P^(2/3)`; its prefactor is
/// conventionally 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceBounds {
    pub salecker_wigner: Quantity,
    pub ng_lloyd: Quantity,
    pub dilation_bound: Quantity,
}

pub fn reference_bounds(t: &Quantity, clock_mass: &Quantity) -> Result<ReferenceBounds> {
    let tt = time(t, "observer time")?;
    let m = clock_mass.in_dimension(Dimension::MASS, "clock mass")?;
    error::positive("clock mass", m)?;
    Ok(ReferenceBounds {
        salecker_wigner: Quantity::time(natural::salecker_wigner(tt, m))?,
        ng_lloyd: Quantity::time(natural::ng_lloyd(tt))?,
        dilation_bound: fundamental_bound(t)?,
    })
}

/// `√2 π^(1/3)`: optimal `Δt_c` in units of `(t t_P²)^(1/3)`.
pub fn optimal_period_coefficient() -> f64 {
    2f64.sqrt() * PI.cbrt()
}

/// `√3 π^(1/3)`: the bound in units of `t^(1/3) t_P^(2/3)`.
pub fn bound_coefficient() -> f64 {
    3f64.sqrt() * PI.cbrt()
}
