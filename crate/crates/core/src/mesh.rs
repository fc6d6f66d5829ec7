//! Sampling surfaces into triangle meshes and polylines, and OBJ output.

use std::f64::consts::PI;
use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::surface::{
    position, richmond_alt_params, richmond_alt_position, Family, ParamPoint, SurfacePoint,
    SurfaceSpec,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub r_steps: u32,
    pub theta_steps: u32,
    pub r_range: (f64, f64),
    pub theta_range: (f64, f64),
}

impl GridSpec {
    pub fn new(
        r_steps: u32,
        theta_steps: u32,
        r_range: (f64, f64),
        theta_range: (f64, f64),
    ) -> Result<Self> {
        if r_steps < 1 || theta_steps < 3 {
            return Err(Error::InvalidArgument(format!(
                "grid needs r_steps >= 1 and theta_steps >= 3, got {r_steps} x {theta_steps}"
            )));
        }
        if !(r_range.0 < r_range.1 && theta_range.0 < theta_range.1) {
            return Err(Error::InvalidArgument(
                "grid ranges must be increasing".into(),
            ));
        }
        Ok(GridSpec {
            r_steps,
            theta_steps,
            r_range,
            theta_range,
        })
    }

    /// The whole domain of `spec`: its radius range and one full angular period.
    pub fn full(spec: &SurfaceSpec, r_steps: u32, theta_steps: u32) -> Result<Self> {
        GridSpec::new(
            r_steps,
            theta_steps,
            (spec.r_min(), spec.r_max()),
            (0.0, spec.theta_period()),
        )
    }
}

/// Indexed triangle mesh.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Mesh {
    pub vertices: Vec<SurfacePoint>,
    pub triangles: Vec<[u32; 3]>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polyline {
    pub points: Vec<SurfacePoint>,
    pub closed: bool,
}

impl Polyline {
    pub fn length(&self) -> f64 {
        let open: f64 = self.points.windows(2).map(|w| w[0].distance(w[1])).sum();
        match (self.closed, self.points.first(), self.points.last()) {
            (true, Some(a), Some(b)) if self.points.len() > 1 => open + a.distance(*b),
            _ => open,
        }
    }
}

/// Position used for plotting. Richmond surfaces are evaluated through their
/// `f = ζ^-2, g = ζ^(k+1)` form, which agrees with [`position`] to rounding.
fn plot_position(spec: &SurfaceSpec, p: ParamPoint) -> Result<SurfacePoint> {
    match spec.family() {
        Family::Richmond { k } => {
            spec.check_radius(p.r)?;
            let (tau, phi) = richmond_alt_params(k, p);
            let factor = (f64::from(k) + 1.0) * spec.scale();
            Ok(richmond_alt_position(k, tau, phi)? * factor)
        }
        _ => position(spec, p),
    }
}

fn covers_period(spec: &SurfaceSpec, range: (f64, f64)) -> bool {
    ((range.1 - range.0) - spec.theta_period()).abs() <= 1e-12 * spec.theta_period().max(2.0 * PI)
}

/// Samples `(r_steps+1)` rings of vertices. When the angular range spans the
/// full period the seam is welded and each ring has `theta_steps` vertices,
/// otherwise `theta_steps + 1`.
pub fn sample_mesh(spec: &SurfaceSpec, grid: &GridSpec) -> Result<Mesh> {
    spec.check_radius(grid.r_range.0)?;
    spec.check_radius(grid.r_range.1)?;
    let welded = covers_period(spec, grid.theta_range);
    let cols = if welded {
        grid.theta_steps
    } else {
        grid.theta_steps + 1
    };
    let dr = (grid.r_range.1 - grid.r_range.0) / f64::from(grid.r_steps);
    let dt = (grid.theta_range.1 - grid.theta_range.0) / f64::from(grid.theta_steps);

    let mut vertices = Vec::with_capacity(((grid.r_steps + 1) * cols) as usize);
    for i in 0..=grid.r_steps {
        let r = if i == grid.r_steps {
            grid.r_range.1
        } else {
            grid.r_range.0 + f64::from(i) * dr
        };
        for j in 0..cols {
            let theta = grid.theta_range.0 + f64::from(j) * dt;
            vertices.push(plot_position(spec, ParamPoint::new(r, theta))?);
        }
    }

    let index = |i: u32, j: u32| i * cols + if welded { j % cols } else { j };
    let mut triangles = Vec::with_capacity((2 * grid.r_steps * grid.theta_steps) as usize);
    for i in 0..grid.r_steps {
        for j in 0..grid.theta_steps {
            let a = index(i, j);
            let b = index(i, j + 1);
            let c = index(i + 1, j);
            let d = index(i + 1, j + 1);
            triangles.push([a, b, d]);
            triangles.push([a, d, c]);
        }
    }
    Ok(Mesh {
        vertices,
        triangles,
    })
}

/// Closed polyline along `r = const` with `steps` vertices over one period.
pub fn sample_round_polyline(spec: &SurfaceSpec, r: f64, steps: u32) -> Result<Polyline> {
    if steps < 3 {
        return Err(Error::InvalidArgument(
            "a closed round needs at least 3 points".into(),
        ));
    }
    let dt = spec.theta_period() / f64::from(steps);
    let points = (0..steps)
        .map(|j| plot_position(spec, ParamPoint::new(r, f64::from(j) * dt)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polyline {
        points,
        closed: true,
    })
}

/// Open polyline along the ray at angle `theta` with `steps` segments.
pub fn sample_radial_polyline(
    spec: &SurfaceSpec,
    theta: f64,
    r_range: (f64, f64),
    steps: u32,
) -> Result<Polyline> {
    if steps < 1 {
        return Err(Error::InvalidArgument(
            "a radial polyline needs at least one segment".into(),
        ));
    }
    if !(r_range.0 < r_range.1) {
        return Err(Error::InvalidArgument(
            "radius range must be increasing".into(),
        ));
    }
    let dr = (r_range.1 - r_range.0) / f64::from(steps);
    let points = (0..=steps)
        .map(|i| {
            let r = if i == steps {
                r_range.1
            } else {
                r_range.0 + f64::from(i) * dr
            };
            plot_position(spec, ParamPoint::new(r, theta))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Polyline {
        points,
        closed: false,
    })
}

/// Formats with nine significant digits in positional notation.
fn fmt_coord(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() {
            "0".into()
        } else {
            format!("{x}")
        };
    }
    let exp = x.abs().log10().floor() as i32;
    let prec = (8 - exp).clamp(0, 40) as usize;
    let s = format!("{x:.prec$}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0".into()
    } else {
        s
    }
}

fn write_vertices<W: Write>(out: &mut W, points: &[SurfacePoint]) -> io::Result<()> {
    for p in points {
        writeln!(
            out,
            "v {} {} {}",
            fmt_coord(p.x),
            fmt_coord(p.y),
            fmt_coord(p.z)
        )?;
    }
    Ok(())
}

/// `v x y z` lines followed by 1-based `f i j k` lines.
pub fn write_obj<W: Write>(mesh: &Mesh, out: &mut W) -> io::Result<()> {
    write_vertices(out, &mesh.vertices)?;
    for t in &mesh.triangles {
        writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1)?;
    }
    Ok(())
}

/// `v` lines followed by a single `l` element; closed polylines repeat the first index.
pub fn write_polyline_obj<W: Write>(line: &Polyline, out: &mut W) -> io::Result<()> {
    write_vertices(out, &line.points)?;
    if line.points.is_empty() {
        return Ok(());
    }
    let mut idx: Vec<String> = (1..=line.points.len()).map(|i| i.to_string()).collect();
    if line.closed {
        idx.push("1".into());
    }
    writeln!(out, "l {}", idx.join(" "))
}
