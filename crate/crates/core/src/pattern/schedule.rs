//! Inner/outer bookkeeping for the self-intersecting `m = 2` model.
//!
//! From the last round before the intersection the model is handled as four
//! equal quarters. Each quarter holds one inner section (growing lobe) and one
//! outer section. An inner section grows by ordinary increases and by stitches
//! that move in from the neighbouring outer section.

use serde::Serialize;

use super::{generate_pattern, Gauge, PatternTable};
use crate::arc_length::{intrinsic_radius, invert_radial, RootConfig};
use crate::error::{Error, Result};
use crate::intersection::{enneper_first_intersection_radius, enneper_section_arcs};
use crate::surface::{Family, SurfaceSpec};

/// One round of one quarter. All counts are per quarter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntersectionRow {
    pub round: u32,
    pub n_inner: u32,
    /// Stitches moved from the outer into the inner section.
    pub move_in: u32,
    /// Ordinary increases in the inner section.
    pub inc_inner: u32,
    pub n_outer: u32,
    /// Ordinary increases in the outer section.
    pub inc_outer: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuarterSchedule {
    /// Stitches in this quarter on the last round before the intersection.
    pub start: u32,
    pub rows: Vec<IntersectionRow>,
}

impl QuarterSchedule {
    /// Returns every round whose counts break the growth identities.
    pub fn violations(&self) -> Vec<u32> {
        let mut prev = (0u32, self.start);
        let mut bad = Vec::new();
        for row in &self.rows {
            let inner_ok = i64::from(row.n_inner)
                == i64::from(prev.0) + i64::from(row.move_in) + i64::from(row.inc_inner);
            let outer_ok = i64::from(row.n_outer)
                == i64::from(prev.1) + i64::from(row.inc_outer) - i64::from(row.move_in);
            let total_ok = i64::from(row.n_inner) + i64::from(row.n_outer)
                == i64::from(prev.0 + prev.1) + i64::from(row.inc_inner + row.inc_outer);
            if !(inner_ok && outer_ok && total_ok) {
                bad.push(row.round);
            }
            prev = (row.n_inner, row.n_outer);
        }
        bad
    }
}

/// Pre-intersection rounds followed by the per-quarter schedule.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntersectingPattern {
    pub pre: PatternTable,
    pub start_round: u32,
    pub quarters: Vec<QuarterSchedule>,
    pub total: u64,
}

impl IntersectingPattern {
    /// Rows of the first quarter. Quarters differ only when the last
    /// pre-intersection round does not split evenly.
    pub fn rows(&self) -> &[IntersectionRow] {
        &self.quarters[0].rows
    }
}

/// Splits `n` stitches into four quarters, handing remainders out round-robin.
pub fn split_into_quarters(n: u32) -> [u32; 4] {
    let mut q = [n / 4; 4];
    for slot in q.iter_mut().take((n % 4) as usize) {
        *slot += 1;
    }
    q
}

/// First round whose intrinsic radius reaches the self-intersection.
pub fn intersection_start_round(spec: &SurfaceSpec, gauge: Gauge) -> Result<u32> {
    let onset = intrinsic_radius(spec, enneper_first_intersection_radius())?;
    let rounds = onset / gauge.height;
    // absorb float noise when a round lands exactly on the onset
    let start = (rounds * (1.0 - 1e-12)).ceil();
    Ok(start.max(1.0) as u32)
}

fn to_u32(round: u32, value: i64, what: &str) -> Result<u32> {
    u32::try_from(value).map_err(|_| Error::Infeasible {
        round,
        reason: format!("{what} would be {value}"),
    })
}

fn quarter_rows(start: u32, sections: &[(u32, u32, u32)]) -> Result<Vec<IntersectionRow>> {
    let mut rows = Vec::with_capacity(sections.len());
    let (mut prev_in, mut prev_out) = (i64::from(0u32), i64::from(start));
    for &(round, n_inner, n_outer) in sections {
        let (ni, no) = (i64::from(n_inner), i64::from(n_outer));
        let growth = ni + no - prev_in - prev_out;
        let inner_growth = ni - prev_in;
        if growth < 0 {
            return Err(Error::Infeasible {
                round,
                reason: format!("quarter shrinks by {}", -growth),
            });
        }
        if inner_growth < 0 {
            return Err(Error::Infeasible {
                round,
                reason: format!("inner section shrinks by {}", -inner_growth),
            });
        }
        // share of the quarter's increases proportional to the inner section,
        // capped so that move-ins stay non-negative
        let share = if ni + no > 0 {
            (growth * ni) as f64 / (ni + no) as f64
        } else {
            0.0
        };
        let inc_inner = (share.round() as i64).clamp(0, inner_growth.min(growth).min(prev_in));
        let move_in = inner_growth - inc_inner;
        if move_in > prev_out {
            return Err(Error::Infeasible {
                round,
                reason: format!(
                    "{move_in} stitches must move in but the outer section has {prev_out}"
                ),
            });
        }
        rows.push(IntersectionRow {
            round,
            n_inner,
            move_in: to_u32(round, move_in, "move-in")?,
            inc_inner: to_u32(round, inc_inner, "inner increases")?,
            n_outer,
            inc_outer: to_u32(round, growth - inc_inner, "outer increases")?,
        });
        prev_in = ni;
        prev_out = no;
    }
    Ok(rows)
}

/// Compiles the intersecting `m = 2` model up to and including `last_round`.
///
/// The spec must already carry its resolved scale.
pub fn enneper_intersection_schedule(
    spec: &SurfaceSpec,
    gauge: Gauge,
    last_round: u32,
) -> Result<IntersectingPattern> {
    if spec.family() != (Family::Enneper { k: 1 }) {
        return Err(Error::InvalidArgument(format!(
            "intersection schedules need the m = 2 surface, got m = {}",
            spec.m()
        )));
    }
    let start_round = intersection_start_round(spec, gauge)?;
    if start_round < 2 {
        return Err(Error::Infeasible {
            round: start_round,
            reason: "the surface intersects itself on the first round".into(),
        });
    }
    if last_round < start_round {
        return Err(Error::InvalidArgument(format!(
            "last round {last_round} ends before the first intersection round {start_round}"
        )));
    }
    let pre = generate_pattern(spec, gauge, start_round - 1)?;
    let last_pre = pre.rows.last().map_or(0, |r| r.stitches);

    let mut sections = Vec::new();
    for round in start_round..=last_round {
        let r = invert_radial(spec, f64::from(round) * gauge.height, RootConfig::default())?;
        let info = enneper_section_arcs(spec, r)?;
        let n_inner = (info.inner_arc / gauge.width).round() as u32;
        let n_outer = (info.outer_arc / gauge.width).round() as u32;
        sections.push((round, n_inner, n_outer));
    }

    let quarters = split_into_quarters(last_pre)
        .into_iter()
        .map(|start| {
            Ok(QuarterSchedule {
                start,
                rows: quarter_rows(start, &sections)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let section_total: u64 = quarters
        .iter()
        .flat_map(|q| q.rows.iter())
        .map(|row| u64::from(row.n_inner + row.n_outer))
        .sum();
    let total = pre.total + section_total;
    Ok(IntersectingPattern {
        pre,
        start_round,
        quarters,
        total,
    })
}
