//! Scalar abstraction shared by every Planck-unit formula.
//!
//! The closed-form expressions in [`dilation`](crate::dilation),
//! [`errorprop`](crate::errorprop) and [`bound`](crate::bound) are written once,
//! generically over [`Scalar`]. Evaluating them with `f64` gives plain values,
//! with [`Dual`](crate::dual::Dual) gives value and first derivative, and with
//! [`MagnitudeTrace`] gives the value together with the smallest and largest
//! nonzero magnitude produced anywhere along the way.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Scalar:
    Copy
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Embed a constant.
    fn lift(value: f64) -> Self;

    /// The primal value.
    fn value(&self) -> f64;

    fn sqrt(self) -> Self;

    fn powi(self, n: i32) -> Self;

    fn powf(self, p: f64) -> Self;

    fn cbrt(self) -> Self;
}

impl Scalar for f64 {
    #[inline]
    fn lift(value: f64) -> Self {
        value
    }

    #[inline]
    fn value(&self) -> f64 {
        *self
    }

    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }

    #[inline]
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }

    #[inline]
    fn powf(self, p: f64) -> Self {
        f64::powf(self, p)
    }

    #[inline]
    fn cbrt(self) -> Self {
        f64::cbrt(self)
    }
}

/// A value that remembers the range of nonzero magnitudes seen while computing it.
///
/// Every arithmetic result and every lifted constant is folded into
/// `[smallest, largest]`. Zeros are ignored since they are exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagnitudeTrace {
    pub value: f64,
    pub smallest: f64,
    pub largest: f64,
}

impl MagnitudeTrace {
    pub fn new(value: f64) -> Self {
        let empty = Self {
            value,
            smallest: f64::INFINITY,
            largest: 0.0,
        };
        empty.record(value)
    }

    fn record(mut self, v: f64) -> Self {
        let m = v.abs();
        if m != 0.0 || !v.is_finite() {
            self.smallest = self.smallest.min(m);
            self.largest = self.largest.max(m);
        }
        self.value = v;
        self
    }

    fn join(self, other: Self, v: f64) -> Self {
        Self {
            value: v,
            smallest: self.smallest.min(other.smallest),
            largest: self.largest.max(other.largest),
        }
        .record(v)
    }

    /// True when no magnitude was recorded, i.e. only exact zeros were seen.
    pub fn is_empty(&self) -> bool {
        self.largest == 0.0 && self.smallest == f64::INFINITY
    }

    /// Whether every recorded magnitude lies in `[lo, hi]`.
    pub fn within(&self, lo: f64, hi: f64) -> bool {
        self.is_empty() || (self.smallest >= lo && self.largest <= hi)
    }
}

impl Add for MagnitudeTrace {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.join(rhs, self.value + rhs.value)
    }
}

impl Sub for MagnitudeTrace {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.join(rhs, self.value - rhs.value)
    }
}

impl Mul for MagnitudeTrace {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.join(rhs, self.value * rhs.value)
    }
}

impl Div for MagnitudeTrace {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.join(rhs, self.value / rhs.value)
    }
}

impl Neg for MagnitudeTrace {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: -self.value,
            ..self
        }
    }
}

impl Scalar for MagnitudeTrace {
    fn lift(value: f64) -> Self {
        Self::new(value)
    }

    fn value(&self) -> f64 {
        self.value
    }

    fn sqrt(self) -> Self {
        self.record(self.value.sqrt())
    }

    fn powi(self, n: i32) -> Self {
        self.record(self.value.powi(n))
    }

    fn powf(self, p: f64) -> Self {
        self.record(self.value.powf(p))
    }

    fn cbrt(self) -> Self {
        self.record(self.value.cbrt())
    }
}
