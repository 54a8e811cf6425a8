//! Fundamental limits on how precisely a clock can measure a duration.
//!
//! Combining the time-energy uncertainty relation with gravitational time
//! dilation, any clock measuring a duration `t` as seen from afar carries an
//! uncertainty of at least `√3 π^(1/3) t^(1/3) t_P^(2/3)`.
//!
//! - [`quantities`]: dimension-checked Planck-unit quantities and SI conversion.
//! - [`dilation`]: Schwarzschild radius and the dilation map.
//! - [`errorprop`]: first-order uncertainty propagation and its closed forms.
//! - [`bound`]: the optimal clock, the bound and literature comparisons.
//! - [`minimize`]: derivative-free oracle minimizers.
//! - [`verify`]: oracle-vs-closed-form checks.
//!
//! ```
//! use chronobound::{bound, Constants, Dimension};
//!
//! let k = Constants::codata2018();
//! let one_second = k.to_planck(1.0, Dimension::TIME).unwrap();
//! let dt = k.to_si(&bound::fundamental_bound(&one_second).unwrap());
//! assert!((3.5e-29..3.8e-29).contains(&dt));
//! ```

pub mod bound;
pub mod dilation;
pub mod dual;
pub mod error;
pub mod errorprop;
pub mod minimize;
pub mod quantities;
pub mod scalar;
pub mod verify;

pub use bound::{BoundInputs, OptimalClock, ReferenceBounds};
pub use dilation::ClockGeometry;
pub use dual::Dual;
pub use error::{Error, Result};
pub use errorprop::{DifferentiableModel, ParamDecl, ParamSpec};
pub use minimize::{Bracket, MinimizationResult};
pub use quantities::{Constants, Dimension, Quantity, Rational};
pub use scalar::{MagnitudeTrace, Scalar};
