//! Fixtures shared by the benchmarks.

use chronobound::errorprop::ParamSpec;
use chronobound::{Constants, Dimension, Quantity};

/// Durations from a nanosecond to 1e18 s, in Planck units.
pub fn sweep_durations(points: usize) -> Vec<Quantity> {
    let k = Constants::codata2018();
    (0..points)
        .map(|i| {
            let s = 10f64.powf(-9.0 + 27.0 * i as f64 / (points.max(2) - 1) as f64);
            k.to_planck(s, Dimension::TIME).expect("finite duration")
        })
        .collect()
}

/// Parameters for the dilation model at a moderately curved point.
pub fn dilation_params() -> Vec<ParamSpec> {
    vec![
        ParamSpec::new(
            "t_c",
            Quantity::time(1.0).unwrap(),
            Quantity::time(0.01).unwrap(),
        )
        .unwrap(),
        ParamSpec::new(
            "r_s",
            Quantity::length(1.0).unwrap(),
            Quantity::length(0.02).unwrap(),
        )
        .unwrap(),
        ParamSpec::exact("r", Quantity::length(4.0).unwrap()),
    ]
}
