//! First-order propagation of uncorrelated uncertainties.
//!
//! [`propagate`] evaluates any [`DifferentiableModel`] with forward-mode dual
//! numbers and combines `Σ (∂f/∂pᵢ)² σᵢ²`. The closed forms for the dilated
//! clock ([`dilation_variance`]) and for the Schwarzschild-radius uncertainty
//! ([`delta_rs_from_delta_e`], [`min_delta_rs`]) are written out separately so
//! the two routes can be checked against each other.

use crate::dilation;
use crate::dual::Dual;
use crate::error::{self, Error, Result};
use crate::quantities::{Dimension, Quantity};
use crate::scalar::Scalar;

/// Discrepancy above which [`gradient_check`] reports a parameter as suspect.
pub const GRADIENT_TOLERANCE: f64 = 1e-6;

pub mod natural {
    use crate::dilation::natural::lapse_squared;
    use crate::scalar::Scalar;

    /// `(Δt)² = ¼ t_c² (Δr_s)² / ((1 - r_s/r)³ r²) + (Δt_c)² / (1 - r_s/r)`.
    pub fn dilation_variance<S: Scalar>(t_c: S, dt_c: S, r_s: S, dr_s: S, r: S) -> S {
        let f = lapse_squared(r_s, r);
        S::lift(0.25) * t_c * t_c * dr_s * dr_s / (f.powi(3) * r * r) + dt_c * dt_c / f
    }

    /// `Δr_s = 2 G ΔE / c⁴`.
    pub fn delta_rs_from_delta_e<S: Scalar>(de: S) -> S {
        S::lift(2.0) * de
    }

    /// `Δr_s = 2 G ħ / (c⁴ Δt_c)`, from `ΔE = ħ / Δt_c`.
    pub fn min_delta_rs<S: Scalar>(dt_c: S) -> S {
        S::lift(2.0) / dt_c
    }
}

/// Declared input of a model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamDecl {
    pub name: &'static str,
    pub dimension: Dimension,
}

/// A named input value with its standard uncertainty.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSpec {
    name: String,
    value: Quantity,
    sigma: Quantity,
}

impl ParamSpec {
    pub fn new(name: impl Into<String>, value: Quantity, sigma: Quantity) -> Result<Self> {
        let s = sigma.in_dimension(value.dimension(), "uncertainty")?;
        error::non_negative("uncertainty", s)?;
        Ok(Self {
            name: name.into(),
            value,
            sigma,
        })
    }

    /// A parameter known without uncertainty.
    pub fn exact(name: impl Into<String>, value: Quantity) -> Self {
        let sigma = Quantity::new(0.0, value.dimension()).expect("zero is finite");
        Self {
            name: name.into(),
            value,
            sigma,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn value(&self) -> Quantity {
        self.value
    }

    pub fn sigma(&self) -> Quantity {
        self.sigma
    }
}

/// A scalar model that can be evaluated with any [`Scalar`], which is how it
/// yields exact first derivatives through [`Dual`].
pub trait DifferentiableModel {
    /// Inputs in the order `evaluate` expects them.
    fn parameters(&self) -> &[ParamDecl];

    fn output_dimension(&self) -> Dimension;

    /// Evaluate on Planck-unit magnitudes ordered as in [`parameters`](Self::parameters).
    fn evaluate<S: Scalar>(&self, args: &[S]) -> Result<S>;
}

/// Output of [`propagate`].
#[derive(Debug, Clone, PartialEq)]
pub struct Propagated {
    pub value: Quantity,
    pub variance: Quantity,
    /// `∂f/∂pᵢ` in Planck units, in model parameter order.
    pub partials: Vec<(&'static str, f64)>,
}

impl Propagated {
    pub fn standard_uncertainty(&self) -> Result<Quantity> {
        self.variance.sqrt()
    }
}

/// Match specs to the model's declared parameters by name.
fn arrange<'a, M: DifferentiableModel>(
    model: &M,
    params: &'a [ParamSpec],
) -> Result<Vec<&'a ParamSpec>> {
    let decls = model.parameters();
    for p in params {
        if !decls.iter().any(|d| d.name == p.name) {
            return Err(Error::UnknownParameter(p.name.clone()));
        }
    }
    decls
        .iter()
        .map(|d| {
            let spec = params
                .iter()
                .find(|p| p.name == d.name)
                .ok_or_else(|| Error::MissingParameter(d.name.to_string()))?;
            spec.value.in_dimension(d.dimension, "model parameter")?;
            Ok(spec)
        })
        .collect()
}

fn partial<M: DifferentiableModel>(model: &M, point: &[f64], index: usize) -> Result<Dual> {
    let args: Vec<Dual> = point
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            if j == index {
                Dual::variable(x)
            } else {
                Dual::constant(x)
            }
        })
        .collect();
    let out = model.evaluate(&args)?;
    error::finite("model derivative", out.dot)?;
    Ok(out)
}

/// Uncorrelated first-order propagation: `Var f = Σ (∂f/∂pᵢ)² σᵢ²`.
pub fn propagate<M: DifferentiableModel>(model: &M, params: &[ParamSpec]) -> Result<Propagated> {
    let specs = arrange(model, params)?;
    let point: Vec<f64> = specs.iter().map(|p| p.value.magnitude()).collect();
    let value = model.evaluate(&point)?;
    let value = Quantity::new(value, model.output_dimension())?;

    let mut variance = 0.0;
    let mut partials = Vec::with_capacity(specs.len());
    for (i, (spec, decl)) in specs.iter().zip(model.parameters()).enumerate() {
        let d = partial(model, &point, i)?.dot;
        let s = spec.sigma.magnitude();
        variance += (d * s) * (d * s);
        partials.push((decl.name, d));
    }
    let dim = model.output_dimension().product(model.output_dimension());
    Ok(Propagated {
        value,
        variance: Quantity::new(variance, dim)?,
        partials,
    })
}

/// Result of comparing forward derivatives with central differences.
#[derive(Debug, Clone, PartialEq)]
pub struct GradientCheck {
    pub max_discrepancy: f64,
    pub worst_parameter: &'static str,
}

impl GradientCheck {
    pub fn is_flagged(&self) -> bool {
        self.max_discrepancy > GRADIENT_TOLERANCE
    }
}

/// Largest relative gap between the dual-number derivative and a central
/// difference with relative step `step`, over all parameters.
pub fn gradient_check<M: DifferentiableModel>(
    model: &M,
    params: &[ParamSpec],
    step: f64,
) -> Result<GradientCheck> {
    if !(step > 0.0 && step <= 1e-2) {
        return Err(Error::InvalidArgument(format!(
            "finite-difference step {step} outside (0, 1e-2]"
        )));
    }
    let specs = arrange(model, params)?;
    let point: Vec<f64> = specs.iter().map(|p| p.value.magnitude()).collect();
    let mut report = GradientCheck {
        max_discrepancy: 0.0,
        worst_parameter: "",
    };
    for (i, decl) in model.parameters().iter().enumerate() {
        let forward = partial(model, &point, i)?.dot;
        let x = point[i];
        let h = if x == 0.0 { step } else { step * x.abs() };
        let mut shifted = point.clone();
        shifted[i] = x + h;
        let up = model.evaluate(&shifted)?;
        shifted[i] = x - h;
        let down = model.evaluate(&shifted)?;
        let central = (up - down) / (2.0 * h);
        let gap = (forward - central).abs() / forward.abs().max(f64::MIN_POSITIVE);
        if gap > report.max_discrepancy || report.worst_parameter.is_empty() {
            report.max_discrepancy = gap;
            report.worst_parameter = decl.name;
        }
    }
    Ok(report)
}

/// `t = t_c / sqrt(1 - r_s/r)` as a model of `(t_c, r_s, r)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct DilationModel;

const DILATION_PARAMS: [ParamDecl; 3] = [
    ParamDecl {
        name: "t_c",
        dimension: Dimension::TIME,
    },
    ParamDecl {
        name: "r_s",
        dimension: Dimension::LENGTH,
    },
    ParamDecl {
        name: "r",
        dimension: Dimension::LENGTH,
    },
];

impl DifferentiableModel for DilationModel {
    fn parameters(&self) -> &[ParamDecl] {
        &DILATION_PARAMS
    }

    fn output_dimension(&self) -> Dimension {
        Dimension::TIME
    }

    fn evaluate<S: Scalar>(&self, args: &[S]) -> Result<S> {
        let [t_c, r_s, r] = [args[0], args[1], args[2]];
        if r.value() <= r_s.value() {
            return Err(Error::InsideHorizon {
                r: r.value(),
                r_s: r_s.value(),
            });
        }
        Ok(dilation::natural::dilate(t_c, r_s, r))
    }
}

/// Closed-form variance of the dilated time.
pub fn dilation_variance(
    t_c: &Quantity,
    dt_c: &Quantity,
    r_s: &Quantity,
    dr_s: &Quantity,
    r: &Quantity,
) -> Result<Quantity> {
    let t_c = t_c.in_dimension(Dimension::TIME, "proper time")?;
    let dt_c = dt_c.in_dimension(Dimension::TIME, "proper time uncertainty")?;
    let r_s = r_s.in_dimension(Dimension::LENGTH, "Schwarzschild radius")?;
    let dr_s = dr_s.in_dimension(Dimension::LENGTH, "Schwarzschild radius uncertainty")?;
    let r = r.in_dimension(Dimension::LENGTH, "clock radius")?;
    error::non_negative("proper time uncertainty", dt_c)?;
    error::non_negative("Schwarzschild radius uncertainty", dr_s)?;
    error::non_negative("Schwarzschild radius", r_s)?;
    if r <= r_s {
        return Err(Error::InsideHorizon { r, r_s });
    }
    Quantity::new(
        natural::dilation_variance(t_c, dt_c, r_s, dr_s, r),
        Dimension::TIME_SQUARED,
    )
}

/// Schwarzschild-radius uncertainty implied by an energy uncertainty.
pub fn delta_rs_from_delta_e(de: &Quantity) -> Result<Quantity> {
    let de = de.in_dimension(Dimension::ENERGY, "energy uncertainty")?;
    error::non_negative("energy uncertainty", de)?;
    Quantity::length(natural::delta_rs_from_delta_e(de))
}

/// Schwarzschild-radius uncertainty of a clock that saturates `ΔE Δt_c = ħ`.
pub fn min_delta_rs(dt_c: &Quantity) -> Result<Quantity> {
    let dt_c = dt_c.in_dimension(Dimension::TIME, "proper time uncertainty")?;
    error::positive("proper time uncertainty", dt_c)?;
    Quantity::length(natural::min_delta_rs(dt_c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantities::default_constants;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        ((a - b) / b).abs() <= tol
    }

    fn t(x: f64) -> Quantity {
        Quantity::time(x).unwrap()
    }

    fn l(x: f64) -> Quantity {
        Quantity::length(x).unwrap()
    }

    struct Sum;
    const XY: [ParamDecl; 2] = [
        ParamDecl {
            name: "x",
            dimension: Dimension::DIMENSIONLESS,
        },
        ParamDecl {
            name: "y",
            dimension: Dimension::DIMENSIONLESS,
        },
    ];
    impl DifferentiableModel for Sum {
        fn parameters(&self) -> &[ParamDecl] {
            &XY
        }
        fn output_dimension(&self) -> Dimension {
            Dimension::DIMENSIONLESS
        }
        fn evaluate<S: Scalar>(&self, a: &[S]) -> Result<S> {
            Ok(a[0] + a[1])
        }
    }

    struct Identity;
    impl DifferentiableModel for Identity {
        fn parameters(&self) -> &[ParamDecl] {
            &XY[..1]
        }
        fn output_dimension(&self) -> Dimension {
            Dimension::DIMENSIONLESS
        }
        fn evaluate<S: Scalar>(&self, a: &[S]) -> Result<S> {
            Ok(a[0])
        }
    }

    fn d(name: &str, v: f64, s: f64) -> ParamSpec {
        ParamSpec::new(
            name,
            Quantity::dimensionless(v).unwrap(),
            Quantity::dimensionless(s).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn identity_and_sum_models() {
        let p = propagate(&Identity, &[d("x", 2.0, 0.5)]).unwrap();
        assert_eq!(p.variance.magnitude(), 0.25);
        let p = propagate(&Sum, &[d("x", 1.0, 3.0), d("y", -1.0, 4.0)]).unwrap();
        assert_eq!(p.variance.magnitude(), 25.0);
        assert_eq!(p.standard_uncertainty().unwrap().magnitude(), 5.0);
        assert_eq!(p.value.magnitude(), 0.0);
    }

    #[test]
    fn parameter_matching_errors() {
        assert!(matches!(
            propagate(&Sum, &[d("x", 1.0, 1.0)]),
            Err(Error::MissingParameter(_))
        ));
        assert!(matches!(
            propagate(&Identity, &[d("x", 1.0, 1.0), d("z", 1.0, 1.0)]),
            Err(Error::UnknownParameter(_))
        ));
        let wrong = ParamSpec::exact("t_c", l(1.0));
        let err = propagate(
            &DilationModel,
            &[
                wrong,
                ParamSpec::exact("r_s", l(0.0)),
                ParamSpec::exact("r", l(1.0)),
            ],
        );
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
        assert!(ParamSpec::new("x", t(1.0), l(1.0)).is_err());
        assert!(ParamSpec::new("x", t(1.0), t(-1.0)).is_err());
    }

    fn dilation_specs(tc: f64, dtc: f64, rs: f64, drs: f64, r: f64) -> Vec<ParamSpec> {
        vec![
            ParamSpec::new("t_c", t(tc), t(dtc)).unwrap(),
            ParamSpec::new("r_s", l(rs), l(drs)).unwrap(),
            ParamSpec::exact("r", l(r)),
        ]
    }

    #[test]
    fn engine_matches_closed_form_example() {
        let p = propagate(&DilationModel, &dilation_specs(1.0, 0.01, 1.0, 0.02, 4.0)).unwrap();
        let closed = dilation_variance(&t(1.0), &t(0.01), &l(1.0), &l(0.02), &l(4.0)).unwrap();
        // 0.0001/(3/4) + ¼·0.0004/((27/64)·16), exact rational 1/6750.
        assert!(close(closed.magnitude(), 1.0 / 6750.0, 1e-14));
        assert!(close(p.variance.magnitude(), closed.magnitude(), 1e-10));
        assert_eq!(p.variance.dimension(), Dimension::TIME_SQUARED);
    }

    #[test]
    fn engine_reports_horizon() {
        let err = propagate(&DilationModel, &dilation_specs(1.0, 0.1, 2.0, 0.0, 2.0));
        assert!(matches!(err, Err(Error::InsideHorizon { .. })));
    }

    #[test]
    fn dilation_variance_examples() {
        let v = dilation_variance(&t(1.0), &t(0.1), &l(0.0), &l(0.0), &l(1.0)).unwrap();
        assert!(close(v.magnitude(), 0.01, 1e-15));
        let v = dilation_variance(&t(2.0), &t(0.0), &l(1.0), &l(0.1), &l(2.0)).unwrap();
        assert!(close(v.magnitude(), 0.02, 1e-15));
        assert!(dilation_variance(&t(1.0), &t(0.1), &l(1.0), &l(0.0), &l(1.0)).is_err());
        assert!(dilation_variance(&t(1.0), &t(-0.1), &l(0.0), &l(0.0), &l(1.0)).is_err());
    }

    #[test]
    fn delta_rs_examples() {
        assert_eq!(
            delta_rs_from_delta_e(&Quantity::energy(0.0).unwrap()).unwrap(),
            l(0.0)
        );
        assert_eq!(
            delta_rs_from_delta_e(&Quantity::energy(1.0).unwrap()).unwrap(),
            l(2.0)
        );
        assert!(delta_rs_from_delta_e(&Quantity::energy(-1.0).unwrap()).is_err());

        let k = default_constants();
        let de = k.to_planck(3.557e-6, Dimension::ENERGY).unwrap();
        let drs = k.to_si(&delta_rs_from_delta_e(&de).unwrap());
        // 2GΔE/c⁴ with CODATA 2018, evaluated at 40 digits.
        assert!(close(drs, 5.878_097_328_881_184e-50, 1e-12));
    }

    #[test]
    fn min_delta_rs_examples() {
        assert_eq!(min_delta_rs(&t(2.0)).unwrap(), l(1.0));
        assert!(close(
            min_delta_rs(&t(1e10)).unwrap().magnitude(),
            2e-10,
            1e-15
        ));
        assert!(min_delta_rs(&t(0.0)).is_err());
        assert!(min_delta_rs(&t(-1.0)).is_err());

        let k = default_constants();
        let dt = k.to_planck(2.965e-29, Dimension::TIME).unwrap();
        let drs = k.to_si(&min_delta_rs(&dt).unwrap());
        // 2Għ/(c⁴Δt_c) with CODATA 2018, evaluated at 40 digits.
        assert!(close(drs, 5.877_658_788_974_24e-50, 1e-12));
    }

    struct Cubic;
    impl DifferentiableModel for Cubic {
        fn parameters(&self) -> &[ParamDecl] {
            &XY
        }
        fn output_dimension(&self) -> Dimension {
            Dimension::DIMENSIONLESS
        }
        fn evaluate<S: Scalar>(&self, a: &[S]) -> Result<S> {
            let (x, y) = (a[0], a[1]);
            Ok(S::lift(3.0) * x.powi(3) - x * y + y * y / S::lift(2.0) + S::lift(7.0))
        }
    }

    #[test]
    fn gradient_check_smooth_models() {
        let g = gradient_check(&Cubic, &[d("x", 1.3, 0.1), d("y", -0.7, 0.1)], 1e-6).unwrap();
        assert!(g.max_discrepancy <= 1e-6, "{g:?}");
        assert!(!g.is_flagged());
        let far = gradient_check(
            &DilationModel,
            &dilation_specs(3.0, 0.1, 1.0, 0.1, 100.0),
            1e-6,
        )
        .unwrap();
        assert!(far.max_discrepancy <= 1e-6, "{far:?}");
    }

    #[test]
    fn gradient_check_near_horizon_is_not_fatal() {
        let near = gradient_check(
            &DilationModel,
            &dilation_specs(3.0, 0.1, 1.0, 0.1, 1.001),
            1e-4,
        )
        .unwrap();
        let far = gradient_check(
            &DilationModel,
            &dilation_specs(3.0, 0.1, 1.0, 0.1, 100.0),
            1e-4,
        )
        .unwrap();
        assert!(near.max_discrepancy > far.max_discrepancy);
        assert!(near.is_flagged());
        // the step straddles the horizon
        assert!(gradient_check(
            &DilationModel,
            &dilation_specs(3.0, 0.1, 1.0, 0.1, 1.001),
            1e-2
        )
        .is_err());
        assert!(gradient_check(&Cubic, &[d("x", 1.0, 0.1), d("y", 1.0, 0.1)], 0.0).is_err());
        assert!(gradient_check(&Cubic, &[d("x", 1.0, 0.1), d("y", 1.0, 0.1)], 0.1).is_err());
    }

    #[test]
    fn variance_zero_iff_sigmas_zero() {
        let p = propagate(&DilationModel, &dilation_specs(1.0, 0.0, 1.0, 0.0, 4.0)).unwrap();
        assert_eq!(p.variance.magnitude(), 0.0);
        let p = propagate(&DilationModel, &dilation_specs(1.0, 0.0, 1.0, 1e-9, 4.0)).unwrap();
        assert!(p.variance.magnitude() > 0.0);
    }
}
