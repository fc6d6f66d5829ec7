//! Circumferences and radial arc lengths, closed form and by quadrature, plus
//! inversion of the intrinsic radius.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{self, QuadConfig};
use crate::surface::{partial_r, partial_theta, rpow, ParamPoint, SurfaceSpec};

/// Arc length along a radial curve between two parameter radii.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialArc {
    pub r_a: f64,
    pub r_b: f64,
    pub length: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig {
    /// Residual tolerance on the arc length (cm).
    pub abs_tol: f64,
    pub max_iter: usize,
    /// Take Newton steps inside the bracket; bisection alone also converges.
    pub polish: bool,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            abs_tol: 1e-12,
            max_iter: 200,
            polish: true,
        }
    }
}

/// Length of the closed curve `r = const`: `period · s · (r^(m-1) + r^(m+1))`.
///
/// The period is the spec's angular extent (`2π` for `m = 2`).
pub fn circumference(spec: &SurfaceSpec, r: f64) -> Result<f64> {
    spec.check_radius(r)?;
    let m = spec.m();
    Ok(spec.theta_period() * spec.scale() * (rpow(r, m - 1.0) + rpow(r, m + 1.0)))
}

fn antiderivative(m: f64, r: f64) -> f64 {
    rpow(r, m - 1.0) / (m - 1.0) + rpow(r, m + 1.0) / (m + 1.0)
}

/// Radial arc length between `r_a <= r_b`; independent of θ.
pub fn radial_arc_length(spec: &SurfaceSpec, r_a: f64, r_b: f64) -> Result<f64> {
    spec.check_radius(r_a)?;
    spec.check_radius(r_b)?;
    if r_a > r_b {
        return Err(Error::InvalidArgument(format!(
            "radial arc needs r_a <= r_b, got {r_a} > {r_b}"
        )));
    }
    if r_a == r_b {
        return Ok(0.0);
    }
    let m = spec.m();
    Ok(spec.scale() * (antiderivative(m, r_b) - antiderivative(m, r_a)))
}

pub fn radial_arc(spec: &SurfaceSpec, r_a: f64, r_b: f64) -> Result<RadialArc> {
    Ok(RadialArc {
        r_a,
        r_b,
        length: radial_arc_length(spec, r_a, r_b)?,
    })
}

/// Intrinsic radius of the curve `r = const`, measured from [`SurfaceSpec::radial_anchor`].
pub fn intrinsic_radius(spec: &SurfaceSpec, r: f64) -> Result<f64> {
    radial_arc_length(spec, spec.radial_anchor(), r)
}

/// Circumference by numerically integrating `‖h_θ‖` over the full period.
pub fn circumference_quadrature(spec: &SurfaceSpec, r: f64) -> Result<f64> {
    spec.check_radius(r)?;
    let speed =
        |theta: f64| partial_theta(spec, ParamPoint::new(r, theta)).map_or(f64::NAN, |v| v.norm());
    quadrature::integrate(speed, 0.0, spec.theta_period(), QuadConfig::default())
}

/// Radial arc length by numerically integrating `‖h_r‖` along the ray at angle θ.
pub fn radial_quadrature(spec: &SurfaceSpec, r_a: f64, r_b: f64, theta: f64) -> Result<f64> {
    spec.check_radius(r_a)?;
    spec.check_radius(r_b)?;
    if r_a > r_b {
        return Err(Error::InvalidArgument(format!(
            "radial arc needs r_a <= r_b, got {r_a} > {r_b}"
        )));
    }
    let speed = |r: f64| partial_r(spec, ParamPoint::new(r, theta)).map_or(f64::NAN, |v| v.norm());
    quadrature::integrate(speed, r_a, r_b, QuadConfig::default())
}

/// Solves `intrinsic_radius(spec, r) = target` for `r`.
///
/// The radial integrand `s·(r^(m-2) + r^m)` is positive, so the arc length is
/// strictly increasing and the root is bracketed by the domain.
pub fn invert_radial(spec: &SurfaceSpec, target: f64, cfg: RootConfig) -> Result<f64> {
    if !(cfg.abs_tol > 0.0) {
        return Err(Error::InvalidArgument("abs_tol must be positive".into()));
    }
    let anchor = spec.radial_anchor();
    let max = intrinsic_radius(spec, spec.r_max())?;
    // targets computed from the outer radius may overshoot by rounding
    let slack = 4.0 * f64::EPSILON * max;
    if !(target >= 0.0 && target <= max + slack) {
        return Err(Error::UnreachableArc { target, max });
    }
    if target == 0.0 {
        return Ok(anchor);
    }
    if target >= max {
        return Ok(spec.r_max());
    }

    let m = spec.m();
    let s = spec.scale();
    let offset = antiderivative(m, anchor);
    let residual = |r: f64| s * (antiderivative(m, r) - offset) - target;
    let slope = |r: f64| s * (rpow(r, m - 2.0) + rpow(r, m));

    let (mut lo, mut hi) = (anchor, spec.r_max());
    let mut x = 0.5 * (lo + hi);
    for _ in 0..cfg.max_iter {
        let f = residual(x);
        if f.abs() <= cfg.abs_tol {
            return Ok(x);
        }
        if f < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Bracket collapsed to adjacent floats; nothing closer is representable.
            return Ok(if residual(lo).abs() <= residual(hi).abs() {
                lo
            } else {
                hi
            });
        }
        x = mid;
        if cfg.polish {
            let d = slope(x);
            let step = x - residual(x) / d;
            if d.is_finite() && d > 0.0 && step > lo && step < hi {
                x = step;
            }
        }
    }
    Err(Error::NoConvergence(cfg.max_iter))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::SurfaceSpec;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const SQRT3: f64 = 1.732_050_807_568_877_2;

    fn enneper() -> SurfaceSpec {
        SurfaceSpec::enneper(1).unwrap()
    }

    #[test]
    fn circumference_examples() {
        assert_relative_eq!(
            circumference(&enneper(), 1.0).unwrap(),
            4.0 * PI,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            circumference(&enneper(), SQRT3).unwrap(),
            8.0 * SQRT3 * PI,
            max_relative = 1e-14
        );
        let c = circumference(&SurfaceSpec::bour3(), 1e-9).unwrap();
        assert!(c < 1e-16);
    }

    #[test]
    fn radial_examples() {
        assert_relative_eq!(
            radial_arc_length(&enneper(), 0.0, SQRT3).unwrap(),
            2.0 * SQRT3,
            max_relative = 1e-14
        );
        assert_eq!(radial_arc_length(&enneper(), 0.8, 0.8).unwrap(), 0.0);
        let rich = SurfaceSpec::bour(0.5).unwrap();
        assert_relative_eq!(
            radial_arc_length(&rich, 1.0, 4.0).unwrap(),
            17.0 / 3.0,
            max_relative = 1e-14
        );
        let arc = radial_arc(&rich, 1.0, 4.0).unwrap();
        assert!(arc.length > 0.0 && arc.r_a == 1.0);
    }

    #[test]
    fn radial_rejects_origin_when_divergent() {
        let rich = SurfaceSpec::richmond(1).unwrap();
        assert!(radial_arc_length(&rich, 0.0, 1.0).is_err());
        assert!(radial_arc_length(&enneper(), 1.0, 0.5).is_err());
    }

    #[test]
    fn quadrature_examples() {
        assert_relative_eq!(
            circumference_quadrature(&enneper(), 1.0).unwrap(),
            4.0 * PI,
            max_relative = 1e-9
        );
        let b3 = SurfaceSpec::bour3();
        let r: f64 = 0.9;
        assert_relative_eq!(
            circumference_quadrature(&b3, r).unwrap(),
            2.0 * PI * (r * r + r.powi(4)),
            max_relative = 1e-9
        );
        let rich = SurfaceSpec::bour(0.5).unwrap();
        let a = radial_quadrature(&rich, 1.0, 4.0, 0.0).unwrap();
        let b = radial_quadrature(&rich, 1.0, 4.0, 2.0).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-9);
        assert_relative_eq!(a, 17.0 / 3.0, max_relative = 1e-9);
    }

    #[test]
    fn invert_examples() {
        let cfg = RootConfig::default();
        let r = invert_radial(&enneper(), 0.45, cfg).unwrap();
        // bisection oracle on r + r³/3 = 0.45
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid + mid.powi(3) / 3.0 < 0.45 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((r - lo).abs() < 1e-10);
        assert!((r - 0.424_501_410_459).abs() < 1e-10);
        assert!((r + r.powi(3) / 3.0 - 0.45).abs() < 1e-10);

        let r = invert_radial(&enneper(), 2.0 * SQRT3, cfg).unwrap();
        assert!((r - SQRT3).abs() < 1e-10);
        assert_eq!(invert_radial(&enneper(), 0.0, cfg).unwrap(), 0.0);
    }

    #[test]
    fn invert_without_newton() {
        let cfg = RootConfig {
            polish: false,
            ..RootConfig::default()
        };
        for spec in [
            enneper(),
            SurfaceSpec::bour(0.5).unwrap(),
            SurfaceSpec::bour3(),
        ] {
            let max = intrinsic_radius(&spec, spec.r_max()).unwrap();
            for t in [0.1, 0.37, 0.81] {
                let r = invert_radial(&spec, t * max, cfg).unwrap();
                let got = intrinsic_radius(&spec, r).unwrap();
                assert!((got - t * max).abs() <= 1e-10, "m={} t={t}", spec.m());
            }
        }
    }

    #[test]
    fn invert_anchors_at_inner_radius_for_small_m() {
        let rich = SurfaceSpec::bour(0.5)
            .unwrap()
            .with_radii(1.0, 4.0)
            .unwrap();
        let r = invert_radial(&rich, 17.0 / 3.0, RootConfig::default()).unwrap();
        assert!((r - 4.0).abs() < 1e-9);
        assert_eq!(
            invert_radial(&rich, 0.0, RootConfig::default()).unwrap(),
            1.0
        );
    }

    #[test]
    fn invert_errors() {
        let cfg = RootConfig::default();
        assert!(matches!(
            invert_radial(&enneper(), -1.0, cfg),
            Err(Error::UnreachableArc { .. })
        ));
        assert!(matches!(
            invert_radial(&enneper(), 1e6, cfg),
            Err(Error::UnreachableArc { .. })
        ));
        let tight = RootConfig {
            abs_tol: 1e-300,
            max_iter: 3,
            polish: false,
        };
        assert!(matches!(
            invert_radial(&enneper(), 1.0, tight),
            Err(Error::NoConvergence(3))
        ));
    }
}
