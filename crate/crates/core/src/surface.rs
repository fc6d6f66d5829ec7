//! Closed-form evaluation of Bour's minimal surfaces.
//!
//! A surface in the family is fixed by a real exponent `m` (Weierstrass data
//! `f = ζ^(m-2)`, `g = ζ`) and a global scale. Points are addressed by polar
//! parameters `(r, θ)` of `ζ = r·e^(iθ)`. The first fundamental form depends
//! on `r` only, so every family member is intrinsically a surface of
//! revolution even though the embedding is not.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// Outer parameter radius used by the named constructors when none is given.
pub const DEFAULT_R_MAX: f64 = 10.0;

/// Inner parameter radius used by the Richmond constructor.
pub const DEFAULT_RICHMOND_R_MIN: f64 = 0.5;

const FAMILY_TOL: f64 = 1e-12;
const MAX_PERIOD_DENOMINATOR: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A point on the embedded surface.
pub type SurfacePoint = Vec3;

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn distance(self, other: Vec3) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, k: f64) -> Vec3 {
        Vec3::new(self.x * k, self.y * k, self.z * k)
    }
}

/// Polar parameters `(r, θ)` of `ζ = r·e^(iθ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPoint {
    pub r: f64,
    pub theta: f64,
}

impl ParamPoint {
    pub const fn new(r: f64, theta: f64) -> Self {
        ParamPoint { r, theta }
    }
}

/// Coefficients of the first fundamental form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FundamentalForm {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

/// Named members of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `m = (k+1)/k`, order `k+1` symmetry; `k = 1` is the classical surface.
    Enneper {
        k: u32,
    },
    /// `m = k/(k+1)`.
    Richmond {
        k: u32,
    },
    /// `m = 3`.
    Bour3,
    General,
}

/// A concrete surface: exponent, scale and admissible parameter domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceSpec {
    m: f64,
    scale: f64,
    r_min: f64,
    r_max: f64,
    theta_period: f64,
}

impl SurfaceSpec {
    pub fn new(m: f64, scale: f64, r_min: f64, r_max: f64, theta_period: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::InvalidSurface(format!("m = {m} is not finite")));
        }
        if m == -1.0 || m == 0.0 || m == 1.0 {
            return Err(Error::ExcludedExponent(m));
        }
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::InvalidSurface(format!(
                "scale must be positive, got {scale}"
            )));
        }
        if !(r_min.is_finite() && r_max.is_finite() && r_min >= 0.0 && r_max > r_min) {
            return Err(Error::InvalidSurface(format!(
                "radius range must satisfy 0 <= r_min < r_max, got [{r_min}, {r_max}]"
            )));
        }
        if m < 1.0 && r_min <= 0.0 {
            return Err(Error::InvalidSurface(format!(
                "m = {m} < 1 needs r_min > 0 (radial arc length diverges at the origin)"
            )));
        }
        if !(theta_period.is_finite() && theta_period > 0.0) {
            return Err(Error::InvalidSurface(format!(
                "theta period must be positive, got {theta_period}"
            )));
        }
        Ok(SurfaceSpec {
            m,
            scale,
            r_min,
            r_max,
            theta_period,
        })
    }

    /// Enneper surface with `k+1`-fold symmetry on `r ∈ [0, DEFAULT_R_MAX]`, `θ ∈ [0, 2kπ]`.
    pub fn enneper(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "Enneper order k must be >= 1".into(),
            ));
        }
        let k = f64::from(k);
        SurfaceSpec::new((k + 1.0) / k, 1.0, 0.0, DEFAULT_R_MAX, 2.0 * k * PI)
    }

    /// Richmond surface on `r ∈ [DEFAULT_RICHMOND_R_MIN, DEFAULT_R_MAX]`, `θ ∈ [0, 2(k+1)π]`.
    pub fn richmond(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "Richmond order k must be >= 1".into(),
            ));
        }
        let k = f64::from(k);
        SurfaceSpec::new(
            k / (k + 1.0),
            1.0,
            DEFAULT_RICHMOND_R_MIN,
            DEFAULT_R_MAX,
            2.0 * (k + 1.0) * PI,
        )
    }

    /// Bour's surface `m = 3` on `r ∈ [0, 1]`.
    pub fn bour3() -> Self {
        SurfaceSpec {
            m: 3.0,
            scale: 1.0,
            r_min: 0.0,
            r_max: 1.0,
            theta_period: 2.0 * PI,
        }
    }

    /// Arbitrary exponent. The angular period is `2qπ` when `m = p/q` for a
    /// small denominator `q`, otherwise `2π`.
    pub fn bour(m: f64) -> Result<Self> {
        let r_min = if m < 1.0 { DEFAULT_RICHMOND_R_MIN } else { 0.0 };
        SurfaceSpec::new(m, 1.0, r_min, DEFAULT_R_MAX, natural_period(m))
    }

    pub fn with_scale(self, scale: f64) -> Result<Self> {
        SurfaceSpec::new(self.m, scale, self.r_min, self.r_max, self.theta_period)
    }

    pub fn with_radii(self, r_min: f64, r_max: f64) -> Result<Self> {
        SurfaceSpec::new(self.m, self.scale, r_min, r_max, self.theta_period)
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn theta_period(&self) -> f64 {
        self.theta_period
    }

    pub fn family(&self) -> Family {
        classify(self.m)
    }

    /// Radius from which intrinsic radial distance is measured: the origin
    /// when `m > 1`, otherwise the inner boundary.
    pub fn radial_anchor(&self) -> f64 {
        if self.m > 1.0 {
            0.0
        } else {
            self.r_min
        }
    }

    pub(crate) fn check_radius(&self, r: f64) -> Result<()> {
        if !(r >= self.r_min && r <= self.r_max) {
            return Err(Error::OutsideDomain {
                r,
                r_min: self.r_min,
                r_max: self.r_max,
            });
        }
        Ok(())
    }
}

fn classify(m: f64) -> Family {
    if (m - 3.0).abs() < FAMILY_TOL {
        return Family::Bour3;
    }
    for k in 1..=MAX_PERIOD_DENOMINATOR {
        let kf = f64::from(k);
        if (m - (kf + 1.0) / kf).abs() < FAMILY_TOL {
            return Family::Enneper { k };
        }
        if (m - kf / (kf + 1.0)).abs() < FAMILY_TOL {
            return Family::Richmond { k };
        }
    }
    Family::General
}

fn natural_period(m: f64) -> f64 {
    (1..=MAX_PERIOD_DENOMINATOR)
        .map(f64::from)
        .find(|q| {
            let p = m * q;
            (p - p.round()).abs() < 1e-9
        })
        .map_or(2.0 * PI, |q| 2.0 * q * PI)
}

/// `r^e`, using repeated multiplication for integral exponents.
pub(crate) fn rpow(r: f64, e: f64) -> f64 {
    if e.fract() == 0.0 && e.abs() <= f64::from(i32::MAX) {
        r.powi(e as i32)
    } else {
        r.powf(e)
    }
}

/// Embedded position `h(r, θ)`, including the global scale.
pub fn position(spec: &SurfaceSpec, p: ParamPoint) -> Result<SurfacePoint> {
    spec.check_radius(p.r)?;
    let m = spec.m;
    let (a, b) = (m - 1.0, m + 1.0);
    let ra = rpow(p.r, a);
    let rb = rpow(p.r, b);
    let rm = rpow(p.r, m);
    let (sa, ca) = (a * p.theta).sin_cos();
    let (sb, cb) = (b * p.theta).sin_cos();
    let x = ra / a * ca - rb / b * cb;
    let y = -ra / a * sa - rb / b * sb;
    let z = 2.0 * rm / m * (m * p.theta).cos();
    Ok(Vec3::new(x, y, z) * spec.scale)
}

/// `∂h/∂θ`. Its length is `s·(r^(m-1) + r^(m+1))` for every θ.
pub fn partial_theta(spec: &SurfaceSpec, p: ParamPoint) -> Result<Vec3> {
    spec.check_radius(p.r)?;
    let m = spec.m;
    let (a, b) = (m - 1.0, m + 1.0);
    let ra = rpow(p.r, a);
    let rb = rpow(p.r, b);
    let rm = rpow(p.r, m);
    let (sa, ca) = (a * p.theta).sin_cos();
    let (sb, cb) = (b * p.theta).sin_cos();
    let v = Vec3::new(
        -ra * sa + rb * sb,
        -ra * ca - rb * cb,
        -2.0 * rm * (m * p.theta).sin(),
    );
    Ok(v * spec.scale)
}

/// `∂h/∂r`. Its length is `s·(r^(m-2) + r^m)` for every θ.
pub fn partial_r(spec: &SurfaceSpec, p: ParamPoint) -> Result<Vec3> {
    spec.check_radius(p.r)?;
    let m = spec.m;
    if p.r == 0.0 && m < 2.0 {
        return Err(Error::Singular {
            quantity: "radial derivative",
            m,
        });
    }
    let (a, b) = (m - 1.0, m + 1.0);
    let r2 = rpow(p.r, m - 2.0);
    let ra = rpow(p.r, a);
    let rm = rpow(p.r, m);
    let (sa, ca) = (a * p.theta).sin_cos();
    let (sb, cb) = (b * p.theta).sin_cos();
    let v = Vec3::new(
        r2 * ca - rm * cb,
        -r2 * sa - rm * sb,
        2.0 * ra * (m * p.theta).cos(),
    );
    Ok(v * spec.scale)
}

/// Closed-form `(E, F, G)`.
pub fn fundamental_form(spec: &SurfaceSpec, p: ParamPoint) -> Result<FundamentalForm> {
    spec.check_radius(p.r)?;
    let m = spec.m;
    if p.r == 0.0 && m < 2.0 {
        return Err(Error::Singular {
            quantity: "metric coefficient E",
            m,
        });
    }
    let s2 = spec.scale * spec.scale;
    let radial = rpow(p.r, m - 2.0) + rpow(p.r, m);
    let angular = rpow(p.r, m - 1.0) + rpow(p.r, m + 1.0);
    Ok(FundamentalForm {
        e: s2 * radial * radial,
        f: 0.0,
        g: s2 * angular * angular,
    })
}

/// `(E, F, G)` as inner products of the two partial derivatives.
pub fn metric_from_partials(spec: &SurfaceSpec, p: ParamPoint) -> Result<FundamentalForm> {
    let hr = partial_r(spec, p)?;
    let ht = partial_theta(spec, p)?;
    Ok(FundamentalForm {
        e: hr.dot(hr),
        f: hr.dot(ht),
        g: ht.dot(ht),
    })
}

/// Gaussian curvature `K = -4 r^(2(2-m)) / (s² (1+r²)⁴)`; independent of θ.
pub fn gaussian_curvature(spec: &SurfaceSpec, p: ParamPoint) -> Result<f64> {
    spec.check_radius(p.r)?;
    let m = spec.m;
    if p.r == 0.0 && m > 2.0 {
        return Err(Error::Singular {
            quantity: "Gaussian curvature",
            m,
        });
    }
    let q = 1.0 + p.r * p.r;
    Ok(-4.0 * rpow(p.r, 2.0 * (2.0 - m)) / (spec.scale * spec.scale * q.powi(4)))
}

/// Enneper surface in the form with data `f = 1`, `g = ζ^(n-1)`, `ζ = τ·e^(iφ)`.
///
/// For `n = 2` this is the `m = 2` surface with `φ = -θ`: `position(r, θ)`
/// equals `enneper_alt_position(2, r, -θ)`. `n = 1` degenerates to a flat disc.
pub fn enneper_alt_position(n: u32, tau: f64, phi: f64) -> Result<SurfacePoint> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "symmetry order n must be >= 1".into(),
        ));
    }
    if !(tau >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tau must be >= 0, got {tau}"
        )));
    }
    let nf = f64::from(n);
    let e = 2.0 * nf - 1.0;
    let te = tau.powi(2 * n as i32 - 1);
    let x = tau * phi.cos() - te / e * (e * phi).cos();
    let y = tau * phi.sin() + te / e * (e * phi).sin();
    let z = 2.0 * tau.powi(n as i32) / nf * (nf * phi).cos();
    Ok(Vec3::new(x, y, z))
}

/// Richmond surface in the form with data `f = ζ^-2`, `g = ζ^(k+1)`.
///
/// Relation to [`position`] with `m = k/(k+1)`: `h(r, θ) = (k+1)·p(τ, φ)`
/// where `τ = r^(1/(k+1))` and `φ = θ/(k+1)` (see [`richmond_alt_params`]).
pub fn richmond_alt_position(k: u32, tau: f64, phi: f64) -> Result<SurfacePoint> {
    if k < 1 {
        return Err(Error::InvalidArgument(
            "Richmond order k must be >= 1".into(),
        ));
    }
    if !(tau > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tau must be > 0 (pole at the origin), got {tau}"
        )));
    }
    let kf = f64::from(k);
    let e = 2.0 * kf + 1.0;
    let te = tau.powi(2 * k as i32 + 1);
    let x = -phi.cos() / tau - te / e * (e * phi).cos();
    let y = -phi.sin() / tau - te / e * (e * phi).sin();
    let z = 2.0 * tau.powi(k as i32) / kf * (kf * phi).cos();
    Ok(Vec3::new(x, y, z))
}

/// Maps `(r, θ)` of the `m = k/(k+1)` surface onto `(τ, φ)` of [`richmond_alt_position`].
pub fn richmond_alt_params(k: u32, p: ParamPoint) -> (f64, f64) {
    let d = f64::from(k) + 1.0;
    (p.r.powf(1.0 / d), p.theta / d)
}
