//! Self-intersection geometry of the Enneper, Richmond and `m = 3` surfaces.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::surface::{position, Family, ParamPoint, SurfacePoint, SurfaceSpec};

/// Radii this far (relative) below √3 are treated as √3.
const ONSET_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossingInfo {
    pub theta_cr: f64,
    /// Boundary arc of one inner section (cm).
    pub inner_arc: f64,
    /// Boundary arc of one outer section (cm).
    pub outer_arc: f64,
    /// Number of inner/outer section pairs around the round.
    pub sections: u32,
}

/// Parameter radius at which the `m = 2` surface first meets itself (at `x = y = 0`).
pub fn enneper_first_intersection_radius() -> f64 {
    3f64.sqrt()
}

/// Parameter radius where inner and outer section boundaries have equal length.
pub fn enneper_balance_radius() -> f64 {
    (3.0 * (1.0 + 2f64.sqrt())).sqrt()
}

/// `(√3/2)·√(1 + 1/r²)`, clamped to 1 just below the onset radius.
fn onset_argument(r: f64) -> Result<f64> {
    let onset = enneper_first_intersection_radius();
    if !(r >= onset * (1.0 - ONSET_TOL)) {
        return Err(Error::NoIntersection { r });
    }
    Ok((0.75 * (1.0 + 1.0 / (r * r))).sqrt().min(1.0))
}

/// Crossing angle of the `m = 2` surface: the θ with `x(r, θ) = x(r, π-θ)`.
///
/// Zero at `r = √3`, increasing towards `π/6` as `r → ∞`.
pub fn enneper_crossing_angle(r: f64) -> Result<f64> {
    Ok(onset_argument(r)?.acos())
}

fn require_classical_enneper(spec: &SurfaceSpec) -> Result<()> {
    if spec.family() != (Family::Enneper { k: 1 }) {
        return Err(Error::InvalidArgument(format!(
            "section arcs are defined for the m = 2 surface, got m = {}",
            spec.m()
        )));
    }
    Ok(())
}

/// Inner and outer section arcs on the round `r = const`.
pub fn enneper_section_arcs(spec: &SurfaceSpec, r: f64) -> Result<CrossingInfo> {
    require_classical_enneper(spec)?;
    spec.check_radius(r)?;
    let theta_cr = enneper_crossing_angle(r)?;
    let speed = spec.scale() * (r + r * r * r);
    Ok(CrossingInfo {
        theta_cr,
        inner_arc: 2.0 * theta_cr * speed,
        outer_arc: (FRAC_PI_2 - 2.0 * theta_cr) * speed,
        sections: 4,
    })
}

/// The two parameter points `(r, θ_cr)` and `(r, π-θ_cr)` mapped to space;
/// they coincide on the intersection curve.
pub fn enneper_crossing_coincidence(
    spec: &SurfaceSpec,
    r: f64,
) -> Result<(SurfacePoint, SurfacePoint)> {
    require_classical_enneper(spec)?;
    let theta = enneper_crossing_angle(r)?;
    let a = position(spec, ParamPoint::new(r, theta))?;
    let b = position(spec, ParamPoint::new(r, PI - theta))?;
    Ok((a, b))
}

/// Enneper-type crossing angle of the `k = 1` Richmond surface,
/// `2·asin((√3/2)·√(1 + 1/r²))`. Equals π at `r = √3`.
pub fn richmond_crossing_angle(r: f64) -> Result<f64> {
    Ok(2.0 * onset_argument(r)?.asin())
}

/// Side of the plane `x = 0` on which a Richmond point lies (-1, 0 or 1).
///
/// The straight-line self-intersection along `x = 0` is only detected; no
/// pattern is compiled for it.
pub fn richmond_x_sign(spec: &SurfaceSpec, p: ParamPoint) -> Result<i8> {
    if !matches!(spec.family(), Family::Richmond { .. }) {
        return Err(Error::InvalidArgument(format!(
            "not a Richmond surface: m = {}",
            spec.m()
        )));
    }
    let x = position(spec, p)?.x;
    Ok(if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sector {
    pub start: f64,
    pub end: f64,
    /// Whether `z > 0` inside the sector.
    pub above: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bour3Sectors {
    pub sectors: Vec<Sector>,
    /// Stitches never migrate between sectors.
    pub isolated: bool,
}

impl Bour3Sectors {
    pub fn width(&self) -> f64 {
        FRAC_PI_3
    }

    /// Index of the sector containing θ (taken modulo 2π).
    pub fn sector_of(&self, theta: f64) -> usize {
        let t = (theta + FRAC_PI_6).rem_euclid(2.0 * PI);
        ((t / FRAC_PI_3) as usize).min(5)
    }
}

/// Six sectors of the `m = 3` surface, bounded by the rays where
/// `z ∝ cos 3θ` vanishes (`θ = π/6 + jπ/3`). Sector 0 is centred on θ = 0.
pub fn bour3_sectors() -> Bour3Sectors {
    let sectors = (0..6)
        .map(|j| {
            let centre = f64::from(j) * FRAC_PI_3;
            Sector {
                start: centre - FRAC_PI_6,
                end: centre + FRAC_PI_6,
                above: j % 2 == 0,
            }
        })
        .collect();
    Bour3Sectors {
        sectors,
        isolated: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc_length::{circumference, radial_arc_length};
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_PI_8;

    fn enneper() -> SurfaceSpec {
        SurfaceSpec::enneper(1).unwrap()
    }

    #[test]
    fn first_intersection() {
        let r = enneper_first_intersection_radius();
        assert_relative_eq!(r, 1.732_050_807_568_877, epsilon = 1e-15);
        let p = position(&enneper(), ParamPoint::new(r, 0.0)).unwrap();
        assert!(p.x.abs() < 1e-14 && p.y.abs() < 1e-14);
        assert_relative_eq!(
            radial_arc_length(&enneper(), 0.0, r).unwrap(),
            2.0 * r,
            max_relative = 1e-15
        );
    }

    #[test]
    fn crossing_angle_examples() {
        assert_eq!(enneper_crossing_angle(3f64.sqrt()).unwrap(), 0.0);
        // acos(0.8660254·1.1180340)
        assert_relative_eq!(
            enneper_crossing_angle(2.0).unwrap(),
            (0.75f64 * 1.25).sqrt().acos(),
            epsilon = 1e-15
        );
        assert!((enneper_crossing_angle(2.0).unwrap() - 0.2527).abs() < 1e-4);
        assert_relative_eq!(
            enneper_crossing_angle(enneper_balance_radius()).unwrap(),
            FRAC_PI_8,
            epsilon = 1e-14
        );
        assert!(matches!(
            enneper_crossing_angle(1.5),
            Err(Error::NoIntersection { .. })
        ));
        // truncated √3 is accepted as the onset
        assert!(enneper_crossing_angle(1.732_050_8).unwrap() < 1e-3);
    }

    #[test]
    fn crossing_angle_limit() {
        let far = enneper_crossing_angle(1e6).unwrap();
        assert!(far < FRAC_PI_6 && FRAC_PI_6 - far < 1e-9);
    }

    #[test]
    fn section_examples() {
        let s3 = 3f64.sqrt();
        let info = enneper_section_arcs(&enneper(), s3).unwrap();
        assert_eq!(info.inner_arc, 0.0);
        assert_relative_eq!(info.outer_arc, FRAC_PI_2 * 4.0 * s3, max_relative = 1e-14);
        assert_eq!(info.sections, 4);

        let bal = enneper_section_arcs(&enneper(), enneper_balance_radius()).unwrap();
        assert_relative_eq!(bal.inner_arc, bal.outer_arc, max_relative = 1e-13);

        let two = enneper_section_arcs(&enneper(), 2.0).unwrap();
        assert_relative_eq!(
            4.0 * (two.inner_arc + two.outer_arc),
            2.0 * PI * 10.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            4.0 * (two.inner_arc + two.outer_arc),
            circumference(&enneper(), 2.0).unwrap(),
            max_relative = 1e-14
        );
        assert!(enneper_section_arcs(&SurfaceSpec::bour3(), 0.9).is_err());
        assert!(enneper_section_arcs(&enneper(), 1.0).is_err());
    }

    #[test]
    fn coincidence_examples() {
        for r in [2.0, 3.0] {
            let (a, b) = enneper_crossing_coincidence(&enneper(), r).unwrap();
            assert!(a.distance(b) < 1e-9);
        }
        let (a, b) = enneper_crossing_coincidence(&enneper(), 3f64.sqrt()).unwrap();
        assert!(a.x.abs() < 1e-14 && a.y.abs() < 1e-14 && a.distance(b) < 1e-14);
        assert!(enneper_crossing_coincidence(&enneper(), 1.2).is_err());
    }

    #[test]
    fn richmond_examples() {
        assert_relative_eq!(
            richmond_crossing_angle(3f64.sqrt()).unwrap(),
            PI,
            epsilon = 1e-15
        );
        let arg3 = (0.75f64 * (10.0 / 9.0)).sqrt();
        assert_relative_eq!(
            richmond_crossing_angle(3.0).unwrap(),
            2.0 * arg3.asin(),
            epsilon = 1e-15
        );
        assert!((richmond_crossing_angle(3.0).unwrap() - 2.300_524).abs() < 1e-6);
        assert!((richmond_crossing_angle(2.0).unwrap() - 2.636_232).abs() < 1e-6);
        assert!(richmond_crossing_angle(1.0).is_err());
    }

    #[test]
    fn richmond_line_detection() {
        let spec = SurfaceSpec::richmond(1).unwrap();
        assert_eq!(
            richmond_x_sign(&spec, ParamPoint::new(1.0, 0.0)).unwrap(),
            -1
        );
        assert_eq!(
            richmond_x_sign(&spec, ParamPoint::new(1.0, 2.0 * PI)).unwrap(),
            1
        );
        assert!(richmond_x_sign(&enneper(), ParamPoint::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn bour3_layout() {
        let b = bour3_sectors();
        assert_eq!(b.sectors.len(), 6);
        assert!(b.isolated);
        for s in &b.sectors {
            assert_relative_eq!(s.end - s.start, FRAC_PI_3, epsilon = 1e-15);
        }
        let above = b.sectors.iter().filter(|s| s.above).count();
        assert_eq!(above, 3);
        // z has the advertised sign at each sector centre
        let spec = SurfaceSpec::bour3();
        for (j, s) in b.sectors.iter().enumerate() {
            let mid = 0.5 * (s.start + s.end);
            let z = position(&spec, ParamPoint::new(0.8, mid)).unwrap().z;
            assert_eq!(z > 0.0, s.above);
            assert_eq!(b.sector_of(mid), j);
        }
    }
}
