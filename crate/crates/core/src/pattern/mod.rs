//! Crochet pattern compilation: from a surface and a stitch gauge to stitches
//! per round.
//!
//! Round `ℓ` is the curve at intrinsic radius `ℓ·H`. Its stitch count is the
//! circumference of that curve divided by the stitch width, rounded to the
//! nearest integer (ties away from zero).

mod distribute;
mod render;
mod schedule;

use std::f64::consts::PI;

use serde::Serialize;

use crate::arc_length::{circumference, intrinsic_radius, invert_radial, RootConfig};
use crate::error::{Error, Result};
use crate::surface::SurfaceSpec;

pub use distribute::{distribute_increases, Stitch};
pub use render::{render_intersecting, render_table, Format};
pub use schedule::{
    enneper_intersection_schedule, intersection_start_round, split_into_quarters,
    IntersectingPattern, IntersectionRow, QuarterSchedule,
};

/// Physical stitch size in centimetres.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Gauge {
    #[serde(rename = "h_cm")]
    pub height: f64,
    #[serde(rename = "w_cm")]
    pub width: f64,
}

impl Gauge {
    pub fn new(height: f64, width: f64) -> Result<Self> {
        if !(height.is_finite() && height > 0.0 && width.is_finite() && width > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "gauge must be positive, got H = {height}, W = {width}"
            )));
        }
        Ok(Gauge { height, width })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RoundRow {
    pub round: u32,
    pub stitches: u32,
    /// `N(ℓ) - N(ℓ-1)`; negative for decreases.
    pub delta: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternWarning {
    pub round: u32,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternTable {
    /// `None` for the flat reference disc.
    pub spec: Option<SurfaceSpec>,
    pub gauge: Gauge,
    /// Stitches in the foundation ring before round 1 (0 when starting from a magic loop).
    pub foundation: u32,
    pub rows: Vec<RoundRow>,
    pub total: u64,
    pub warnings: Vec<PatternWarning>,
}

impl PatternTable {
    fn from_counts(
        spec: Option<SurfaceSpec>,
        gauge: Gauge,
        foundation: u32,
        counts: &[u32],
    ) -> Self {
        let mut rows = Vec::with_capacity(counts.len());
        let mut warnings = Vec::new();
        let mut prev = foundation;
        for (i, &n) in counts.iter().enumerate() {
            let round = i as u32 + 1;
            let delta = i64::from(n) - i64::from(prev);
            if prev > 0 && delta > i64::from(prev) {
                warnings.push(PatternWarning {
                    round,
                    message: format!(
                        "{delta} increases on {prev} stitches needs more than one increase per stitch"
                    ),
                });
            }
            rows.push(RoundRow {
                round,
                stitches: n,
                delta,
            });
            prev = n;
        }
        let total = counts.iter().map(|&n| u64::from(n)).sum();
        PatternTable {
            spec,
            gauge,
            foundation,
            rows,
            total,
            warnings,
        }
    }

    pub fn stitches(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.stitches).collect()
    }

    /// Stitch-by-stitch layout of round `round`, with increases staggered
    /// by half a gap on alternate rounds.
    pub fn round_instructions(&self, round: u32) -> Result<Vec<Stitch>> {
        let idx = round
            .checked_sub(1)
            .filter(|&i| (i as usize) < self.rows.len())
            .ok_or_else(|| Error::InvalidArgument(format!("no round {round} in table")))?;
        let row = self.rows[idx as usize];
        let prev = if idx == 0 {
            self.foundation
        } else {
            self.rows[idx as usize - 1].stitches
        };
        if prev == 0 {
            // worked into a magic loop
            return Ok(vec![Stitch::Single; row.stitches as usize]);
        }
        let delta = u32::try_from(row.delta.max(0)).unwrap_or(0);
        let offset = if delta > 0 && round.is_multiple_of(2) {
            prev / delta / 2
        } else {
            0
        };
        distribute_increases(prev, delta, offset)
    }
}

/// How the global scale of a surface is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScalePolicy {
    Explicit(f64),
    /// Scale so that round `round` lands on parameter radius `radius`.
    FitRound {
        round: u32,
        radius: f64,
    },
    /// Largest scale for which round `round` has exactly `stitches` stitches.
    FitCount {
        round: u32,
        stitches: u32,
    },
}

fn round_count(x: f64) -> u32 {
    // f64::round rounds half away from zero
    x.round().max(0.0) as u32
}

/// Reference disc: `2πH/W` stitches (rounded) added on every round, so
/// `N(ℓ) = ℓ·round(2πH/W)`.
pub fn flat_disc_pattern(gauge: Gauge, rounds: u32) -> Result<PatternTable> {
    if rounds == 0 {
        return Err(Error::InvalidArgument("need at least one round".into()));
    }
    let step = round_count(2.0 * PI * gauge.height / gauge.width);
    let counts: Vec<u32> = (1..=rounds).map(|l| l * step).collect();
    Ok(PatternTable::from_counts(None, gauge, 0, &counts))
}

/// Stitches of a Euclidean circle of radius `ℓ·H`: `round(2πℓH/W)`.
pub fn flat_disc_stitches(gauge: Gauge, round: u32) -> u32 {
    round_count(2.0 * PI * f64::from(round) * gauge.height / gauge.width)
}

/// Unrounded stitch count of round `round`: circumference at intrinsic
/// radius `round·H`, divided by `W`.
pub fn raw_stitch_count(spec: &SurfaceSpec, gauge: Gauge, round: u32) -> Result<f64> {
    let r = invert_radial(spec, f64::from(round) * gauge.height, RootConfig::default())?;
    Ok(circumference(spec, r)? / gauge.width)
}

pub fn stitch_count(spec: &SurfaceSpec, gauge: Gauge, round: u32) -> Result<u32> {
    if round == 0 {
        return Err(Error::InvalidArgument("rounds are numbered from 1".into()));
    }
    Ok(round_count(raw_stitch_count(spec, gauge, round)?))
}

/// Stitch count of the ring at the radial anchor (non-zero only when `m < 1`).
pub fn foundation_count(spec: &SurfaceSpec, gauge: Gauge) -> Result<u32> {
    Ok(round_count(
        circumference(spec, spec.radial_anchor())? / gauge.width,
    ))
}

pub fn generate_pattern(spec: &SurfaceSpec, gauge: Gauge, rounds: u32) -> Result<PatternTable> {
    if rounds == 0 {
        return Err(Error::InvalidArgument("need at least one round".into()));
    }
    let foundation = foundation_count(spec, gauge)?;
    let mut counts = Vec::with_capacity(rounds as usize);
    let mut clamped = Vec::new();
    for l in 1..=rounds {
        let n = stitch_count(spec, gauge, l)?;
        if n == 0 {
            clamped.push(l);
        }
        counts.push(n.max(1));
    }
    let mut table = PatternTable::from_counts(Some(*spec), gauge, foundation, &counts);
    for round in clamped {
        table.warnings.push(PatternWarning {
            round,
            message: "circumference below one stitch width; using 1 stitch".into(),
        });
    }
    table.warnings.sort_by_key(|w| w.round);
    Ok(table)
}

/// Resolves a [`ScalePolicy`] to a concrete scale for `spec` (whose own
/// scale is ignored).
pub fn resolve_scale(spec: &SurfaceSpec, gauge: Gauge, policy: ScalePolicy) -> Result<f64> {
    let unit = spec.with_scale(1.0)?;
    match policy {
        ScalePolicy::Explicit(s) => {
            if !(s.is_finite() && s > 0.0) {
                return Err(Error::ScaleFit(format!(
                    "explicit scale must be positive, got {s}"
                )));
            }
            Ok(s)
        }
        ScalePolicy::FitRound { round, radius } => {
            if round == 0 {
                return Err(Error::ScaleFit("target round must be >= 1".into()));
            }
            let arc = intrinsic_radius(&unit, radius)?;
            if arc <= 0.0 {
                return Err(Error::ScaleFit(format!(
                    "target radius {radius} has zero intrinsic radius"
                )));
            }
            Ok(f64::from(round) * gauge.height / arc)
        }
        ScalePolicy::FitCount { round, stitches } => fit_count(&unit, gauge, round, stitches),
    }
}

fn fit_count(unit: &SurfaceSpec, gauge: Gauge, round: u32, stitches: u32) -> Result<f64> {
    if round == 0 || stitches == 0 {
        return Err(Error::ScaleFit(
            "target round and stitch count must be >= 1".into(),
        ));
    }
    // Larger scales flatten the surface and lower the count. The supremum of
    // {s : round(count(s)) = N} is where the raw count crosses N - 1/2.
    let level = f64::from(stitches) - 0.5;
    let excess = |s: f64| -> Result<f64> {
        Ok(raw_stitch_count(&unit.with_scale(s)?, gauge, round)? - level)
    };
    let reach = f64::from(round) * gauge.height;
    let mut lo = reach / intrinsic_radius(unit, unit.r_max())? * (1.0 + 1e-12);
    if excess(lo)? < 0.0 {
        return Err(Error::ScaleFit(format!(
            "round {round} cannot reach {stitches} stitches within r <= {}",
            unit.r_max()
        )));
    }
    let mut hi = lo;
    loop {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::ScaleFit(format!(
                "round {round} keeps at least {stitches} stitches at every scale"
            )));
        }
        if excess(hi)? < 0.0 {
            break;
        }
        lo = hi;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || (hi - lo) <= 1e-14 * hi {
            break;
        }
        if excess(mid)? >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let got = stitch_count(&unit.with_scale(lo)?, gauge, round)?;
    if got != stitches {
        return Err(Error::ScaleFit(format!(
            "count is not monotone in scale: round {round} gives {got}, wanted {stitches}"
        )));
    }
    Ok(lo)
}
