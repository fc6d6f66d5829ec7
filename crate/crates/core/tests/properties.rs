use std::f64::consts::PI;

use bour_core::arc_length::{
    circumference, intrinsic_radius, invert_radial, radial_arc_length, RootConfig,
};
use bour_core::intersection::enneper_crossing_angle;
use bour_core::pattern::{
    distribute_increases, enneper_intersection_schedule, generate_pattern, resolve_scale,
    stitch_count, Gauge, ScalePolicy, Stitch,
};
use bour_core::surface::{
    enneper_alt_position, fundamental_form, metric_from_partials, partial_r, partial_theta,
    position,
};
use bour_core::{ParamPoint, SurfaceSpec};
use proptest::prelude::*;

fn any_m() -> impl Strategy<Value = f64> {
    prop_oneof![
        Just(0.5),
        Just(1.5),
        Just(2.0),
        Just(2.5),
        Just(3.0),
        Just(4.0 / 3.0)
    ]
}

fn spec_for(m: f64) -> SurfaceSpec {
    let spec = SurfaceSpec::bour(m).unwrap();
    if m < 1.0 {
        spec.with_radii(0.25, 4.0).unwrap()
    } else {
        spec.with_radii(0.0, 4.0).unwrap()
    }
}

proptest! {
    #[test]
    fn metric_is_angle_independent(m in any_m(), r in 0.3f64..3.0, theta in -10.0f64..10.0) {
        let spec = spec_for(m);
        let a = ParamPoint::new(r, 0.0);
        let b = ParamPoint::new(r, theta);
        let ta = partial_theta(&spec, a).unwrap().norm();
        let tb = partial_theta(&spec, b).unwrap().norm();
        let ra = partial_r(&spec, a).unwrap().norm();
        let rb = partial_r(&spec, b).unwrap().norm();
        prop_assert!((ta - tb).abs() <= 1e-12 * ta);
        prop_assert!((ra - rb).abs() <= 1e-12 * ra);
    }

    #[test]
    fn metric_matches_partials(m in any_m(), r in 0.3f64..3.0, theta in 0.0f64..6.3) {
        let spec = spec_for(m);
        let p = ParamPoint::new(r, theta);
        let closed = fundamental_form(&spec, p).unwrap();
        let inner = metric_from_partials(&spec, p).unwrap();
        prop_assert!((closed.e - inner.e).abs() <= 1e-12 * closed.e);
        prop_assert!((closed.g - inner.g).abs() <= 1e-12 * closed.g);
        prop_assert!(inner.f.abs() <= 1e-12 * (closed.e * closed.g).sqrt());
    }

    #[test]
    fn inversion_round_trips(m in any_m(), t in 0.0f64..=1.0) {
        let spec = spec_for(m);
        let max = intrinsic_radius(&spec, spec.r_max()).unwrap();
        let target = t * max;
        let r = invert_radial(&spec, target, RootConfig::default()).unwrap();
        prop_assert!((intrinsic_radius(&spec, r).unwrap() - target).abs() < 1e-10);
    }

    #[test]
    fn lengths_increase_with_radius(m in any_m(), a in 0.3f64..3.9, d in 1e-3f64..0.1) {
        let spec = spec_for(m);
        let b = a + d;
        prop_assert!(intrinsic_radius(&spec, b).unwrap() > intrinsic_radius(&spec, a).unwrap());
        prop_assert!(radial_arc_length(&spec, a, b).unwrap() > 0.0);
        // below m = 1 the circumference dips before it grows
        if m > 1.0 {
            prop_assert!(circumference(&spec, b).unwrap() > circumference(&spec, a).unwrap());
        }
        let ta = intrinsic_radius(&spec, a).unwrap();
        let tb = intrinsic_radius(&spec, b).unwrap();
        let cfg = RootConfig::default();
        prop_assert!(invert_radial(&spec, tb, cfg).unwrap() > invert_radial(&spec, ta, cfg).unwrap());
    }

    #[test]
    fn crossing_angle_grows_towards_limit(a in 1.7321f64..50.0, d in 1e-3f64..1.0) {
        let lo = enneper_crossing_angle(a).unwrap();
        let hi = enneper_crossing_angle(a + d).unwrap();
        prop_assert!(hi > lo);
        prop_assert!(hi < PI / 6.0);
    }

    /// At a fixed intrinsic radius the count does not depend on which gauge
    /// height sampled it.
    #[test]
    fn height_only_selects_sample_radii(h1 in 0.2f64..0.6, round in 1u32..8) {
        let spec = SurfaceSpec::enneper(1).unwrap().with_scale(2.0).unwrap();
        let g1 = Gauge::new(h1, 0.5).unwrap();
        let radius = f64::from(round) * h1;
        // one more round of a shorter stitch reaches the same radius
        let g2 = Gauge::new(radius / f64::from(round + 1), 0.5).unwrap();
        prop_assert_eq!(
            stitch_count(&spec, g1, round).unwrap(),
            stitch_count(&spec, g2, round + 1).unwrap()
        );
    }

    #[test]
    fn lengths_scale_linearly(m in any_m(), r in 0.3f64..3.0, s in 0.1f64..50.0) {
        let unit = spec_for(m);
        let scaled = unit.with_scale(s).unwrap();
        let c1 = circumference(&unit, r).unwrap();
        let cs = circumference(&scaled, r).unwrap();
        prop_assert!((cs - s * c1).abs() <= 1e-12 * cs);
        let r1 = intrinsic_radius(&unit, r).unwrap();
        let rs = intrinsic_radius(&scaled, r).unwrap();
        prop_assert!((rs - s * r1).abs() <= 1e-12 * rs);
    }

    #[test]
    fn enneper_forms_agree(r in 0.0f64..3.0, theta in -7.0f64..7.0) {
        let spec = SurfaceSpec::enneper(1).unwrap();
        let a = position(&spec, ParamPoint::new(r, theta)).unwrap();
        let b = enneper_alt_position(2, r, -theta).unwrap();
        prop_assert!(a.distance(b) <= 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn increases_are_spread_evenly(n in 1u32..300, frac in 0.0f64..=1.0, offset in 0u32..50) {
        let delta = (frac * f64::from(n)).floor() as u32;
        let plan = distribute_increases(n, delta, offset).unwrap();
        prop_assert_eq!(plan.len(), n as usize);
        let at: Vec<usize> = plan
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Stitch::Increase)
            .map(|(i, _)| i)
            .collect();
        prop_assert_eq!(at.len(), delta as usize);
        if at.len() > 1 {
            let mut gaps: Vec<usize> = at.windows(2).map(|w| w[1] - w[0]).collect();
            gaps.push(at[0] + n as usize - at[at.len() - 1]);
            let lo = gaps.iter().min().unwrap();
            let hi = gaps.iter().max().unwrap();
            prop_assert!(hi - lo <= 1);
        }
    }

    #[test]
    fn schedules_conserve_stitches(target in 70u32..130, height in 0.35f64..0.55) {
        let gauge = Gauge::new(height, 0.5).unwrap();
        let unit = SurfaceSpec::enneper(1).unwrap();
        let s = resolve_scale(&unit, gauge, ScalePolicy::FitCount { round: 9, stitches: target });
        prop_assume!(s.is_ok());
        let spec = unit.with_scale(s.unwrap()).unwrap();
        if let Ok(plan) = enneper_intersection_schedule(&spec, gauge, 30) {
            for q in &plan.quarters {
                prop_assert!(q.violations().is_empty());
            }
            let starts: u32 = plan.quarters.iter().map(|q| q.start).sum();
            prop_assert_eq!(starts, plan.pre.rows.last().unwrap().stitches);
        }
    }

    /// Counts depend on the surface only through its lengths, so scaling the
    /// surface and both gauge dimensions together changes nothing.
    #[test]
    fn counts_are_gauge_independent(m in any_m(), k in 0.2f64..5.0) {
        let spec = spec_for(m).with_scale(3.0).unwrap();
        let gauge = Gauge::new(0.4, 0.5).unwrap();
        let scaled = spec.with_scale(3.0 * k).unwrap();
        let big = Gauge::new(0.4 * k, 0.5 * k).unwrap();
        let max_round = (intrinsic_radius(&spec, spec.r_max()).unwrap() / 0.4).floor().min(12.0) as u32;
        for round in 1..=max_round {
            let a = stitch_count(&spec, gauge, round).unwrap();
            let b = stitch_count(&scaled, big, round).unwrap();
            prop_assert!(a.abs_diff(b) <= 1, "round {round}: {a} vs {b}");
        }
    }

    #[test]
    fn first_round_stays_small_for_enneper(s in 1.0f64..100.0) {
        let spec = SurfaceSpec::enneper(1).unwrap().with_scale(s).unwrap();
        let n = stitch_count(&spec, Gauge::new(0.5, 0.5).unwrap(), 1).unwrap();
        prop_assert!((5..=7).contains(&n), "N(1) = {n}");
    }
}

#[test]
fn pattern_totals_are_row_sums() {
    let spec = SurfaceSpec::bour3().with_scale(4.0).unwrap();
    let table = generate_pattern(&spec, Gauge::new(0.5, 0.5).unwrap(), 4).unwrap();
    let sum: u64 = table.rows.iter().map(|r| u64::from(r.stitches)).sum();
    assert_eq!(table.total, sum + u64::from(table.foundation));
}

#[test]
fn rounds_follow_surface_of_revolution_circumference() {
    // a cone-free check: for m = 2 the circumference of the round at intrinsic
    // radius R is 2π·s·(r + r³) with R = s·(r + r³/3)
    let spec = SurfaceSpec::enneper(1).unwrap().with_scale(2.0).unwrap();
    let r = invert_radial(&spec, 1.5, RootConfig::default()).unwrap();
    let c = circumference(&spec, r).unwrap();
    assert!((c - 2.0 * PI * 2.0 * (r + r.powi(3))).abs() < 1e-12);
}
