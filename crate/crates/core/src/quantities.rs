//! Dimension-checked quantities held in Planck units.
//!
//! Every magnitude inside the crate is expressed in units where G = ħ = c = 1.
//! SI values only appear at the boundary, through [`to_planck`] and [`to_si`],
//! using an injected [`Constants`] set. Keeping arithmetic in natural units
//! avoids SI intermediates such as G²ħ²/c⁸ ≈ 7.6e-157 that sit close to the
//! bottom of the `f64` range.

use std::fmt;
use std::path::Path;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};

/// Exact rational exponent.
pub type Rational = Ratio<i32>;

const fn int(n: i32) -> Rational {
    Ratio::new_raw(n, 1)
}

/// Exponents of length, mass and time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dimension {
    pub length: Rational,
    pub mass: Rational,
    pub time: Rational,
}

impl Dimension {
    pub const DIMENSIONLESS: Self = Self::integer(0, 0, 0);
    pub const LENGTH: Self = Self::integer(1, 0, 0);
    pub const MASS: Self = Self::integer(0, 1, 0);
    pub const TIME: Self = Self::integer(0, 0, 1);
    pub const TIME_SQUARED: Self = Self::integer(0, 0, 2);
    pub const SPEED: Self = Self::integer(1, 0, -1);
    pub const ENERGY: Self = Self::integer(2, 1, -2);

    pub const fn integer(length: i32, mass: i32, time: i32) -> Self {
        Self {
            length: int(length),
            mass: int(mass),
            time: int(time),
        }
    }

    pub fn new(length: Rational, mass: Rational, time: Rational) -> Self {
        Self { length, mass, time }
    }

    pub fn is_dimensionless(&self) -> bool {
        *self == Self::DIMENSIONLESS
    }

    /// Dimension of a product.
    pub fn product(self, other: Self) -> Self {
        Self::new(
            self.length + other.length,
            self.mass + other.mass,
            self.time + other.time,
        )
    }

    /// Dimension of a quotient.
    pub fn quotient(self, other: Self) -> Self {
        Self::new(
            self.length - other.length,
            self.mass - other.mass,
            self.time - other.time,
        )
    }

    /// Dimension raised to a rational power.
    pub fn power(self, p: Rational) -> Self {
        Self::new(self.length * p, self.mass * p, self.time * p)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dimensionless() {
            return f.write_str("1");
        }
        let mut first = true;
        for (sym, e) in [("L", self.length), ("M", self.mass), ("T", self.time)] {
            if *e.numer() == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == int(1) {
                f.write_str(sym)?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A magnitude in Planck units together with its dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    magnitude: f64,
    dimension: Dimension,
}

impl Quantity {
    /// Build a quantity from a Planck-unit magnitude. Fails on NaN or infinity.
    pub fn new(magnitude: f64, dimension: Dimension) -> Result<Self> {
        error::finite("quantity magnitude", magnitude)?;
        Ok(Self {
            magnitude,
            dimension,
        })
    }

    pub fn time(planck_times: f64) -> Result<Self> {
        Self::new(planck_times, Dimension::TIME)
    }

    pub fn length(planck_lengths: f64) -> Result<Self> {
        Self::new(planck_lengths, Dimension::LENGTH)
    }

    pub fn mass(planck_masses: f64) -> Result<Self> {
        Self::new(planck_masses, Dimension::MASS)
    }

    pub fn energy(planck_energies: f64) -> Result<Self> {
        Self::new(planck_energies, Dimension::ENERGY)
    }

    /// Speed as a fraction of c.
    pub fn speed(fraction_of_c: f64) -> Result<Self> {
        Self::new(fraction_of_c, Dimension::SPEED)
    }

    pub fn dimensionless(value: f64) -> Result<Self> {
        Self::new(value, Dimension::DIMENSIONLESS)
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    /// Magnitude, provided the dimension is `expected`.
    pub fn in_dimension(&self, expected: Dimension, context: &'static str) -> Result<f64> {
        if self.dimension == expected {
            Ok(self.magnitude)
        } else {
            Err(Error::DimensionMismatch {
                context,
                expected,
                found: self.dimension,
            })
        }
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        let b = other.in_dimension(self.dimension, "addition")?;
        Self::new(self.magnitude + b, self.dimension)
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        let b = other.in_dimension(self.dimension, "subtraction")?;
        Self::new(self.magnitude - b, self.dimension)
    }

    pub fn checked_mul(self, other: Self) -> Result<Self> {
        Self::new(
            self.magnitude * other.magnitude,
            self.dimension.product(other.dimension),
        )
    }

    pub fn checked_div(self, other: Self) -> Result<Self> {
        Self::new(
            self.magnitude / other.magnitude,
            self.dimension.quotient(other.dimension),
        )
    }

    /// Raise to an exact rational power.
    ///
    /// Negative magnitudes are accepted only for odd denominators, where the
    /// real root is unique.
    pub fn checked_pow(self, p: Rational) -> Result<Self> {
        let x = self.magnitude;
        let exponent = f64::from(*p.numer()) / f64::from(*p.denom());
        let magnitude = if x >= 0.0 {
            x.powf(exponent)
        } else if p.denom() % 2 == 0 {
            return Err(Error::NegativeFractionalBase {
                base: x,
                power: p.to_string(),
            });
        } else {
            let sign = if p.numer() % 2 == 0 { 1.0 } else { -1.0 };
            sign * (-x).powf(exponent)
        };
        Self::new(magnitude, self.dimension.power(p))
    }

    pub fn sqrt(self) -> Result<Self> {
        self.checked_pow(Ratio::new(1, 2))
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} [{}] (Planck)", self.magnitude, self.dimension)
    }
}

pub fn qadd(a: Quantity, b: Quantity) -> Result<Quantity> {
    a.checked_add(b)
}

pub fn qmul(a: Quantity, b: Quantity) -> Result<Quantity> {
    a.checked_mul(b)
}

pub fn qdiv(a: Quantity, b: Quantity) -> Result<Quantity> {
    a.checked_div(b)
}

pub fn qpow(a: Quantity, p: Rational) -> Result<Quantity> {
    a.checked_pow(p)
}

pub const CODATA2018_G: f64 = 6.674_30e-11;
pub const CODATA2018_HBAR: f64 = 1.054_571_817e-34;
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// SI values of G, ħ, c and the Planck units derived from them.
///
/// The Planck time and length are always recomputed from the three inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    #[serde(rename = "G")]
    g: f64,
    hbar: f64,
    c: f64,
    t_planck: f64,
    l_planck: f64,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstantsOverride {
    #[serde(rename = "G")]
    g: Option<f64>,
    hbar: Option<f64>,
    c: Option<f64>,
}

impl Constants {
    pub fn new(g: f64, hbar: f64, c: f64) -> Result<Self> {
        error::positive("G", g)?;
        error::positive("hbar", hbar)?;
        error::positive("c", c)?;
        let t_planck = (hbar * g / c.powi(5)).sqrt();
        let l_planck = c * t_planck;
        error::positive("Planck time", t_planck)?;
        error::positive("Planck length", l_planck)?;
        Ok(Self {
            g,
            hbar,
            c,
            t_planck,
            l_planck,
        })
    }

    /// CODATA 2018 recommended values.
    pub fn codata2018() -> Self {
        Self::new(CODATA2018_G, CODATA2018_HBAR, SPEED_OF_LIGHT).expect("CODATA values are valid")
    }

    /// G = ħ = c = 1, so SI seconds coincide with Planck times.
    pub fn natural() -> Self {
        Self::new(1.0, 1.0, 1.0).expect("unit constants are valid")
    }

    /// Parse a flat JSON object with optional keys `G`, `hbar`, `c` (SI).
    /// Missing keys keep their CODATA 2018 value.
    pub fn from_json_str(doc: &str) -> Result<Self> {
        let o: ConstantsOverride = serde_json::from_str(doc)?;
        Self::new(
            o.g.unwrap_or(CODATA2018_G),
            o.hbar.unwrap_or(CODATA2018_HBAR),
            o.c.unwrap_or(SPEED_OF_LIGHT),
        )
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let doc = std::fs::read_to_string(path).map_err(|source| Error::ConstantsIo {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json_str(&doc)
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn t_planck(&self) -> f64 {
        self.t_planck
    }

    pub fn l_planck(&self) -> f64 {
        self.l_planck
    }

    pub fn m_planck(&self) -> f64 {
        self.hbar / (self.c * self.c * self.t_planck)
    }

    /// Planck energy m_P c² in joules.
    pub fn e_planck(&self) -> f64 {
        self.m_planck() * self.c * self.c
    }

    fn planck_unit_factors(&self, dim: Dimension) -> [(f64, f64); 3] {
        let exp = |r: Rational| f64::from(*r.numer()) / f64::from(*r.denom());
        [
            (self.t_planck, exp(dim.time)),
            (self.l_planck, exp(dim.length)),
            (self.m_planck(), exp(dim.mass)),
        ]
    }

    /// SI size of one Planck unit of `dim`, or `None` when it leaves the
    /// normal `f64` range (e.g. t_P^8).
    fn planck_unit(&self, dim: Dimension) -> Option<f64> {
        let s = self
            .planck_unit_factors(dim)
            .iter()
            .fold(1.0, |acc, (base, e)| acc * base.powf(*e));
        (s.is_normal()).then_some(s)
    }

    fn ln_planck_unit(&self, dim: Dimension) -> f64 {
        self.planck_unit_factors(dim)
            .iter()
            .map(|(base, e)| e * base.ln())
            .sum()
    }

    /// Convert an SI magnitude of dimension `dim` to Planck units.
    pub fn to_planck(&self, value: f64, dim: Dimension) -> Result<Quantity> {
        error::finite("SI value", value)?;
        if value == 0.0 {
            return Quantity::new(0.0, dim);
        }
        let magnitude = match self.planck_unit(dim) {
            Some(unit) => value / unit,
            None => value.signum() * (value.abs().ln() - self.ln_planck_unit(dim)).exp(),
        };
        if !magnitude.is_normal() {
            return Err(Error::InvalidArgument(format!(
                "{value:e} SI does not fit in Planck units of dimension {dim}"
            )));
        }
        Quantity::new(magnitude, dim)
    }

    /// Convert a Planck-unit quantity to its SI magnitude.
    pub fn to_si(&self, q: &Quantity) -> f64 {
        let value = q.magnitude();
        if value == 0.0 {
            return 0.0;
        }
        match self.planck_unit(q.dimension()) {
            Some(unit) => value * unit,
            None => value.signum() * (value.abs().ln() + self.ln_planck_unit(q.dimension())).exp(),
        }
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::codata2018()
    }
}

pub fn default_constants() -> Constants {
    Constants::codata2018()
}

pub fn to_planck(value: f64, dim: Dimension, k: &Constants) -> Result<Quantity> {
    k.to_planck(value, dim)
}

pub fn to_si(q: &Quantity, k: &Constants) -> f64 {
    k.to_si(q)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    // Independent high-precision evaluation of sqrt(ħG/c⁵) and c·t_P.
    const T_PLANCK_REF: f64 = 5.391_246_446_661_944e-44;
    const L_PLANCK_REF: f64 = 1.616_255_023_928_55e-35;
    const ONE_SECOND_IN_PLANCK: f64 = 1.854_858_630_362_116_4e43;

    #[test]
    fn codata_values() {
        let k = default_constants();
        assert_eq!(k.c(), 299_792_458.0);
        assert!(rel(k.t_planck(), T_PLANCK_REF) < 1e-12);
        assert!(rel(k.l_planck(), L_PLANCK_REF) < 1e-12);
        assert!(rel(k.t_planck(), (k.hbar() * k.g() / k.c().powi(5)).sqrt()) < 1e-12);
        assert!(rel(k.l_planck(), k.c() * k.t_planck()) < 1e-12);
    }

    #[test]
    fn g_hbar_c_are_unity_in_planck_units() {
        let k = default_constants();
        let g_dim = Dimension::integer(3, -1, -2);
        let hbar_dim = Dimension::integer(2, 1, -1);
        assert!(rel(k.to_planck(k.g(), g_dim).unwrap().magnitude(), 1.0) < 1e-12);
        assert!(rel(k.to_planck(k.hbar(), hbar_dim).unwrap().magnitude(), 1.0) < 1e-12);
        assert!(
            rel(
                k.to_planck(k.c(), Dimension::SPEED).unwrap().magnitude(),
                1.0
            ) < 1e-12
        );
    }

    #[test]
    fn planck_time_conversions() {
        let k = default_constants();
        let one = k.to_planck(k.t_planck(), Dimension::TIME).unwrap();
        assert!(rel(one.magnitude(), 1.0) < 1e-12);
        let second = k.to_planck(1.0, Dimension::TIME).unwrap();
        assert!(rel(second.magnitude(), ONE_SECOND_IN_PLANCK) < 1e-12);
        assert_eq!(
            k.to_planck(0.0, Dimension::ENERGY).unwrap().magnitude(),
            0.0
        );
        assert_eq!(k.to_si(&Quantity::time(0.0).unwrap()), 0.0);
        assert!(rel(k.to_si(&Quantity::time(1.0).unwrap()), T_PLANCK_REF) < 1e-12);
        let back = k.to_si(&k.to_planck(2.965e-29, Dimension::TIME).unwrap());
        assert!(rel(back, 2.965e-29) < 1e-12);
    }

    #[test]
    fn non_finite_input_is_rejected() {
        let k = default_constants();
        assert!(matches!(
            k.to_planck(f64::NAN, Dimension::TIME),
            Err(Error::NonFinite { .. })
        ));
        assert!(k.to_planck(f64::INFINITY, Dimension::LENGTH).is_err());
    }

    #[test]
    fn extreme_exponents_use_log_path() {
        let k = default_constants();
        let dim = Dimension::integer(0, 0, 8);
        // t_P^8 ≈ 7.2e-347 is below the normal f64 range.
        assert!(k.planck_unit(dim).is_none());
        let q = k.to_planck(1e-300, dim).unwrap();
        assert!(
            rel(
                q.magnitude(),
                (1e-300f64.powf(0.125) * ONE_SECOND_IN_PLANCK).powi(8)
            ) < 1e-12
        );
        assert!(rel(k.to_si(&q), 1e-300) < 1e-12);
        // (1 s)^8 ≈ 1.39e346 Planck units overflows.
        assert!(k.to_planck(1.0, dim).is_err());
        let dim = Dimension::integer(-4, 3, 8);
        let q = k.to_planck(1e-3, dim).unwrap();
        assert!(rel(k.to_si(&q), 1e-3) < 1e-12);
    }

    #[test]
    fn dimension_arithmetic() {
        let t = Quantity::time(3.0).unwrap();
        assert_eq!(qmul(t, t).unwrap().dimension(), Dimension::TIME_SQUARED);
        let t2 = Quantity::new(4.0, Dimension::TIME_SQUARED).unwrap();
        let root = qpow(t2, Ratio::new(1, 2)).unwrap();
        assert_eq!(root.dimension(), Dimension::TIME);
        assert_eq!(root.magnitude(), 2.0);
        let l = Quantity::length(1.0).unwrap();
        assert!(matches!(qadd(t, l), Err(Error::DimensionMismatch { .. })));
        assert_eq!(qdiv(l, t).unwrap().dimension(), Dimension::SPEED);
    }

    #[test]
    fn fractional_powers_of_negative_magnitudes() {
        let x = Quantity::time(-8.0).unwrap();
        let c = qpow(x, Ratio::new(1, 3)).unwrap();
        assert!((c.magnitude() + 2.0).abs() < 1e-15);
        assert_eq!(c.dimension().time, Ratio::new(1, 3));
        assert!(matches!(
            qpow(x, Ratio::new(1, 2)),
            Err(Error::NegativeFractionalBase { .. })
        ));
        assert!((qpow(x, Ratio::new(2, 3)).unwrap().magnitude() - 4.0).abs() < 1e-14);
    }

    #[test]
    fn display() {
        assert_eq!(Dimension::ENERGY.to_string(), "L^2 M T^-2");
        assert_eq!(Dimension::DIMENSIONLESS.to_string(), "1");
        let d = Dimension::TIME.power(Ratio::new(1, 3));
        assert_eq!(d.to_string(), "T^1/3");
    }

    #[test]
    fn overrides_from_json() {
        let k = Constants::from_json_str(r#"{"G": 1, "hbar": 1, "c": 1}"#).unwrap();
        assert_eq!(k.t_planck(), 1.0);
        assert_eq!(k.l_planck(), 1.0);
        let partial = Constants::from_json_str(r#"{"c": 2.0}"#).unwrap();
        assert_eq!(partial.g(), CODATA2018_G);
        assert_eq!(partial.c(), 2.0);
        assert!(Constants::from_json_str(r#"{"G": -1}"#).is_err());
        assert!(Constants::from_json_str(r#"{"t_planck": 1}"#).is_err());
        assert!(Constants::from_json_str("not json").is_err());
    }

    fn exponent() -> impl Strategy<Value = Rational> {
        (-48i32..=48, 1i32..=6).prop_map(|(n, d)| Ratio::new(n, d))
    }

    fn bounded_exponent() -> impl Strategy<Value = i32> {
        -8i32..=8
    }

    proptest! {
        #[test]
        fn si_planck_round_trip(
            mantissa in 1.0f64..10.0,
            exp10 in -60i32..60,
            negative in any::<bool>(),
            l in bounded_exponent(), m in bounded_exponent(), t in bounded_exponent(),
        ) {
            let k = default_constants();
            let value = if negative { -1.0 } else { 1.0 } * mantissa * 10f64.powi(exp10);
            let dim = Dimension::integer(l, m, t);
            if let Ok(q) = k.to_planck(value, dim) {
                prop_assert!(rel(k.to_si(&q), value) < 1e-12);
            }
        }

        #[test]
        fn power_distributes_over_product(
            a in (exponent(), exponent(), exponent()),
            b in (exponent(), exponent(), exponent()),
            p in exponent(),
        ) {
            let da = Dimension::new(a.0, a.1, a.2);
            let db = Dimension::new(b.0, b.1, b.2);
            let x = Quantity::new(2.0, da).unwrap();
            let y = Quantity::new(3.0, db).unwrap();
            let lhs = qpow(qmul(x, y).unwrap(), p).unwrap().dimension();
            let rhs = qmul(qpow(x, p).unwrap(), qpow(y, p).unwrap()).unwrap().dimension();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
