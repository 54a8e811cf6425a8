//! Gravitational time dilation around a compact clock.
//!
//! A clock of radius `r` whose energy has Schwarzschild radius `r_s` ticks
//! proper time `t_c`; a distant observer sees `t = t_c / sqrt(1 - r_s/r)`.

use crate::error::{self, Error, Result};
use crate::quantities::{Dimension, Quantity};

/// Planck-unit kernels, generic over the scalar type. Inputs are assumed valid.
pub mod natural {
    use crate::scalar::Scalar;

    /// `1 - r_s/r`.
    #[inline]
    pub fn lapse_squared<S: Scalar>(r_s: S, r: S) -> S {
        S::lift(1.0) - r_s / r
    }

    #[inline]
    pub fn schwarzschild_radius<S: Scalar>(energy: S) -> S {
        S::lift(2.0) * energy
    }

    #[inline]
    pub fn dilate<S: Scalar>(t_c: S, r_s: S, r: S) -> S {
        t_c / lapse_squared(r_s, r).sqrt()
    }

    #[inline]
    pub fn contract<S: Scalar>(t: S, r_s: S, r: S) -> S {
        t * lapse_squared(r_s, r).sqrt()
    }
}

fn check_geometry(r_s: f64, r: f64) -> Result<()> {
    error::non_negative("Schwarzschild radius", r_s)?;
    error::positive("clock radius", r)?;
    if r <= r_s {
        return Err(Error::InsideHorizon { r, r_s });
    }
    Ok(())
}

fn lengths(r_s: &Quantity, r: &Quantity) -> Result<(f64, f64)> {
    let r_s = r_s.in_dimension(Dimension::LENGTH, "Schwarzschild radius")?;
    let r = r.in_dimension(Dimension::LENGTH, "clock radius")?;
    check_geometry(r_s, r)?;
    Ok((r_s, r))
}

/// `r_s = 2GE/c⁴`, i.e. `2E` in Planck units.
pub fn schwarzschild_radius(energy: &Quantity) -> Result<Quantity> {
    let e = energy.in_dimension(Dimension::ENERGY, "clock energy")?;
    error::non_negative("clock energy", e)?;
    Quantity::length(natural::schwarzschild_radius(e))
}

/// Proper time `t_c` on the clock to distant-observer time `t`.
pub fn dilate(t_c: &Quantity, r_s: &Quantity, r: &Quantity) -> Result<Quantity> {
    let t_c = t_c.in_dimension(Dimension::TIME, "proper time")?;
    error::non_negative("proper time", t_c)?;
    let (r_s, r) = lengths(r_s, r)?;
    Quantity::time(natural::dilate(t_c, r_s, r))
}

/// Distant-observer time `t` back to clock proper time `t_c`.
pub fn contract(t: &Quantity, r_s: &Quantity, r: &Quantity) -> Result<Quantity> {
    let t = t.in_dimension(Dimension::TIME, "observer time")?;
    error::non_negative("observer time", t)?;
    let (r_s, r) = lengths(r_s, r)?;
    Quantity::time(natural::contract(t, r_s, r))
}

/// Radius, Schwarzschild radius and energy of a clock, with `r > r_s ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClockGeometry {
    r: Quantity,
    r_s: Quantity,
    energy: Quantity,
}

impl ClockGeometry {
    pub fn from_energy(r: Quantity, energy: Quantity) -> Result<Self> {
        let r_s = schwarzschild_radius(&energy)?;
        lengths(&r_s, &r)?;
        Ok(Self { r, r_s, energy })
    }

    pub fn from_schwarzschild_radius(r: Quantity, r_s: Quantity) -> Result<Self> {
        let (rs, _) = lengths(&r_s, &r)?;
        let energy = Quantity::energy(rs / 2.0)?;
        Ok(Self { r, r_s, energy })
    }

    pub fn r(&self) -> Quantity {
        self.r
    }

    pub fn r_s(&self) -> Quantity {
        self.r_s
    }

    pub fn energy(&self) -> Quantity {
        self.energy
    }

    /// `t / t_c = 1/sqrt(1 - r_s/r)`.
    pub fn dilation_factor(&self) -> f64 {
        natural::dilate(1.0, self.r_s.magnitude(), self.r.magnitude())
    }

    pub fn dilate(&self, t_c: &Quantity) -> Result<Quantity> {
        dilate(t_c, &self.r_s, &self.r)
    }

    pub fn contract(&self, t: &Quantity) -> Result<Quantity> {
        contract(t, &self.r_s, &self.r)
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::quantities::default_constants;

    fn t(x: f64) -> Quantity {
        Quantity::time(x).unwrap()
    }

    fn l(x: f64) -> Quantity {
        Quantity::length(x).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        ((a - b) / b).abs() <= tol
    }

    #[test]
    fn schwarzschild_radius_examples() {
        let zero = schwarzschild_radius(&Quantity::energy(0.0).unwrap()).unwrap();
        assert_eq!(zero.magnitude(), 0.0);
        let two = schwarzschild_radius(&Quantity::energy(1.0).unwrap()).unwrap();
        assert_eq!(two, l(2.0));
        assert!(schwarzschild_radius(&Quantity::energy(-1.0).unwrap()).is_err());
        assert!(schwarzschild_radius(&l(1.0)).is_err());
    }

    #[test]
    fn solar_schwarzschild_radius() {
        let k = default_constants();
        let e_sun = 1.989e30 * k.c() * k.c();
        let e = k.to_planck(e_sun, Dimension::ENERGY).unwrap();
        let rs = k.to_si(&schwarzschild_radius(&e).unwrap());
        // 2GM/c² with CODATA 2018 G, evaluated at 40 digits.
        assert!(close(rs, 2_954.126_555_055_405, 1e-12));
    }

    #[test]
    fn dilate_examples() {
        assert_eq!(dilate(&t(1.0), &l(0.0), &l(10.0)).unwrap(), t(1.0));
        assert_eq!(dilate(&t(1.0), &l(3.0), &l(4.0)).unwrap(), t(2.0));
        let v = dilate(&t(1.0), &l(1.0), &l(2.0)).unwrap().magnitude();
        assert!(close(v, std::f64::consts::SQRT_2, 1e-15));
        assert!(matches!(
            dilate(&t(1.0), &l(2.0), &l(2.0)),
            Err(Error::InsideHorizon { .. })
        ));
        assert!(dilate(&t(-1.0), &l(0.0), &l(1.0)).is_err());
        assert!(dilate(&t(1.0), &l(-1.0), &l(1.0)).is_err());
        assert!(dilate(&l(1.0), &l(0.0), &l(1.0)).is_err());
    }

    #[test]
    fn contract_examples() {
        assert_eq!(contract(&t(2.0), &l(3.0), &l(4.0)).unwrap(), t(1.0));
        assert_eq!(contract(&t(5.0), &l(0.0), &l(1.0)).unwrap(), t(5.0));
        let v = contract(&t(1.0), &l(1.0), &l(3.0)).unwrap().magnitude();
        assert!(close(v, (2.0f64 / 3.0).sqrt(), 1e-15));
        assert!(contract(&t(1.0), &l(5.0), &l(4.0)).is_err());
    }

    #[test]
    fn far_field_limit() {
        for ratio in [1e10, 1e12, 1e15] {
            let v = dilate(&t(1.0), &l(1.0), &l(ratio)).unwrap().magnitude();
            assert!(close(v, 1.0, 1e-9));
        }
    }

    #[test]
    fn geometry_consistency() {
        let g = ClockGeometry::from_energy(l(9.0), Quantity::energy(1.5).unwrap()).unwrap();
        assert_eq!(g.r_s(), l(3.0));
        assert!(close(g.dilation_factor(), (1.5f64).sqrt(), 1e-15));
        let h = ClockGeometry::from_schwarzschild_radius(l(9.0), l(3.0)).unwrap();
        assert_eq!(h.energy(), Quantity::energy(1.5).unwrap());
        assert!(ClockGeometry::from_schwarzschild_radius(l(3.0), l(3.0)).is_err());
        assert!(ClockGeometry::from_energy(l(3.0), Quantity::energy(2.0).unwrap()).is_err());
    }

    fn geometry() -> impl Strategy<Value = (f64, f64)> {
        (1e-3f64..1e6, 1.0001f64..1e6).prop_map(|(rs, ratio)| (rs, rs * ratio))
    }

    proptest! {
        #[test]
        fn dilate_contract_round_trip((rs, r) in geometry(), tt in 1e-6f64..1e12) {
            let tc = contract(&t(tt), &l(rs), &l(r)).unwrap();
            let back = dilate(&tc, &l(rs), &l(r)).unwrap().magnitude();
            prop_assert!(close(back, tt, 1e-12));
            prop_assert!(back >= tc.magnitude());
        }

        #[test]
        fn dilate_increases_with_rs(r in 1.0f64..1e6, a in 0.0f64..1.0, b in 0.0f64..1.0) {
            prop_assume!(a != b);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            let d_lo = dilate(&t(1.0), &l(lo * r * 0.999), &l(r)).unwrap().magnitude();
            let d_hi = dilate(&t(1.0), &l(hi * r * 0.999), &l(r)).unwrap().magnitude();
            prop_assert!(d_hi > d_lo);
        }

        #[test]
        fn dilate_decreases_with_r(rs in 1e-3f64..1e3, a in 1.001f64..1e4, b in 1.001f64..1e4) {
            prop_assume!((a - b).abs() > 1e-9 * a.max(b));
            let (near, far) = if a < b { (a, b) } else { (b, a) };
            let d_near = dilate(&t(1.0), &l(rs), &l(rs * near)).unwrap().magnitude();
            let d_far = dilate(&t(1.0), &l(rs), &l(rs * far)).unwrap().magnitude();
            prop_assert!(d_near > d_far);
        }
    }
}
