use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bour_core::arc_length::{circumference, intrinsic_radius};
use bour_core::intersection::{
    bour3_sectors, enneper_crossing_angle, enneper_first_intersection_radius, enneper_section_arcs,
    richmond_crossing_angle,
};
use bour_core::mesh::{
    sample_mesh, sample_radial_polyline, sample_round_polyline, write_obj, write_polyline_obj,
    GridSpec,
};
use bour_core::pattern::{
    enneper_intersection_schedule, generate_pattern, render_intersecting, render_table,
    resolve_scale, Format, Gauge, ScalePolicy,
};
use bour_core::surface::{fundamental_form, gaussian_curvature, Family};
use bour_core::validate::{validate, ValidateOptions};
use bour_core::{ParamPoint, SurfaceSpec};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bour",
    version,
    about = "Crochet patterns and geometry for Bour's minimal surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stitch counts per round.
    Pattern(PatternArgs),
    /// Geometric quantities at one parameter radius.
    Info(InfoArgs),
    /// Write a triangle mesh or polyline as OBJ.
    Mesh(MeshArgs),
    /// Regenerate the embedded published tables and report differences.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct SurfaceArgs {
    /// enneper:<k>, richmond:<k>, bour3 or bm:<m> (m may be a fraction like 3/2).
    selector: String,
    #[arg(long)]
    r_min: Option<f64>,
    #[arg(long)]
    r_max: Option<f64>,
}

#[derive(Args)]
struct PatternArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    /// Stitch height in cm.
    #[arg(long, env = "BOUR_GAUGE_H")]
    gauge_h: f64,
    /// Stitch width in cm.
    #[arg(long, env = "BOUR_GAUGE_W")]
    gauge_w: f64,
    #[arg(long)]
    rounds: u32,
    /// A number, `fit-intersection` or `fit-count:<round>,<stitches>`.
    #[arg(long, default_value = "1")]
    scale: String,
    /// text, csv or json.
    #[arg(long, default_value = "text")]
    format: String,
    /// Split rounds past the self-intersection into inner and outer sections (enneper:1 only).
    #[arg(long)]
    intersect: bool,
}

#[derive(Args)]
struct InfoArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    /// Parameter radius.
    #[arg(long)]
    r: f64,
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
}

#[derive(Args)]
struct MeshArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(long, default_value_t = 40)]
    r_steps: u32,
    #[arg(long, default_value_t = 120)]
    theta_steps: u32,
    /// Defaults to 0.
    #[arg(long)]
    theta_min: Option<f64>,
    /// Defaults to one full period after `--theta-min`.
    #[arg(long)]
    theta_max: Option<f64>,
    /// Write the closed round at this parameter radius instead of a mesh.
    #[arg(long, conflicts_with = "ray")]
    round: Option<f64>,
    /// Write the radial curve at this angle instead of a mesh.
    #[arg(long)]
    ray: Option<f64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ValidateArgs {
    /// Override the 0.45 cm gauge height to probe sensitivity.
    #[arg(long)]
    gauge_h: Option<f64>,
}

enum Failure {
    Usage(String),
    Validation,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn parse_number(text: &str) -> Result<f64, String> {
    let value = match text.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a
                .trim()
                .parse()
                .map_err(|_| format!("bad number '{text}'"))?;
            let b: f64 = b
                .trim()
                .parse()
                .map_err(|_| format!("bad number '{text}'"))?;
            a / b
        }
        None => text
            .trim()
            .parse()
            .map_err(|_| format!("bad number '{text}'"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("bad number '{text}'"))
    }
}

fn parse_k(text: &str) -> Result<u32, String> {
    text.parse::<u32>()
        .map_err(|_| format!("expected a positive integer, got '{text}'"))
}

fn resolve_surface(args: &SurfaceArgs) -> Result<SurfaceSpec, Failure> {
    let sel = args.selector.as_str();
    let spec = match sel.split_once(':') {
        Some(("enneper", k)) => SurfaceSpec::enneper(parse_k(k)?)?,
        Some(("richmond", k)) => SurfaceSpec::richmond(parse_k(k)?)?,
        Some(("bm", m)) => SurfaceSpec::bour(parse_number(m)?)?,
        None if sel == "bour3" => SurfaceSpec::bour3(),
        _ => {
            return Err(Failure::Usage(format!(
                "unknown surface '{sel}', expected enneper:<k>, richmond:<k>, bour3 or bm:<m>"
            )))
        }
    };
    if args.r_min.is_none() && args.r_max.is_none() {
        return Ok(spec);
    }
    let r_min = args.r_min.unwrap_or(spec.r_min());
    let r_max = args.r_max.unwrap_or(spec.r_max());
    Ok(spec.with_radii(r_min, r_max)?)
}

fn is_m2(spec: &SurfaceSpec) -> bool {
    spec.family() == (Family::Enneper { k: 1 })
}

fn scale_policy(text: &str, rounds: u32, spec: &SurfaceSpec) -> Result<ScalePolicy, Failure> {
    if text == "fit-intersection" {
        if !is_m2(spec) {
            return Err(Failure::Usage(
                "fit-intersection needs the m = 2 surface".into(),
            ));
        }
        return Ok(ScalePolicy::FitRound {
            round: rounds,
            radius: enneper_first_intersection_radius(),
        });
    }
    if let Some(rest) = text.strip_prefix("fit-count:") {
        let (round, stitches) = rest.split_once(',').ok_or_else(|| {
            Failure::Usage(format!(
                "expected fit-count:<round>,<stitches>, got '{text}'"
            ))
        })?;
        return Ok(ScalePolicy::FitCount {
            round: parse_k(round)?,
            stitches: parse_k(stitches)?,
        });
    }
    Ok(ScalePolicy::Explicit(parse_number(text)?))
}

fn cmd_pattern(args: &PatternArgs) -> CmdResult {
    let unit = resolve_surface(&args.surface)?;
    let gauge = Gauge::new(args.gauge_h, args.gauge_w)?;
    let format: Format = args.format.parse()?;
    if args.rounds == 0 {
        return Err(Failure::Usage("--rounds must be at least 1".into()));
    }
    let policy = scale_policy(&args.scale, args.rounds, &unit)?;
    let s = resolve_scale(&unit, gauge, policy)?;
    let spec = unit.with_scale(s)?;

    let mut out = String::new();
    if format == Format::Text {
        let _ = writeln!(
            out,
            "Surface m = {}, scale {:.6}, gauge {} x {} cm",
            spec.m(),
            s,
            gauge.height,
            gauge.width
        );
    }
    if args.intersect {
        if !is_m2(&spec) {
            return Err(Failure::Usage(
                "--intersect is only supported for enneper:1".into(),
            ));
        }
        let plan = enneper_intersection_schedule(&spec, gauge, args.rounds)?;
        out.push_str(&render_intersecting(&plan, format));
    } else {
        let table = generate_pattern(&spec, gauge, args.rounds)?;
        out.push_str(&render_table(&table, format));
    }
    Ok(out)
}

fn cmd_info(args: &InfoArgs) -> CmdResult {
    let spec = resolve_surface(&args.surface)?.with_scale(args.scale)?;
    let r = args.r;
    let p = ParamPoint::new(r, 0.0);
    let ff = fundamental_form(&spec, p)?;
    let mut out = String::new();
    let _ = writeln!(out, "m: {}", spec.m());
    let _ = writeln!(out, "scale: {}", spec.scale());
    let _ = writeln!(out, "r: {r}");
    let _ = writeln!(out, "circumference C: {:.10}", circumference(&spec, r)?);
    let _ = writeln!(
        out,
        "intrinsic radius R: {:.10}",
        intrinsic_radius(&spec, r)?
    );
    match gaussian_curvature(&spec, p) {
        Ok(k) => {
            let _ = writeln!(out, "gaussian curvature K: {k:.10}");
        }
        Err(e) => {
            let _ = writeln!(out, "gaussian curvature K: {e}");
        }
    }
    let _ = writeln!(out, "E: {:.10}", ff.e);
    let _ = writeln!(out, "F: {:.10}", ff.f);
    let _ = writeln!(out, "G: {:.10}", ff.g);

    match spec.family() {
        Family::Enneper { k: 1 } => {
            let onset = enneper_first_intersection_radius();
            let _ = writeln!(
                out,
                "first intersection at r = {onset:.10}, R = {:.10}",
                intrinsic_radius(&spec, onset)?
            );
            match enneper_section_arcs(&spec, r) {
                Ok(info) => {
                    let theta = enneper_crossing_angle(r)?;
                    let _ = writeln!(out, "crossing angle theta_cr: {theta:.10}");
                    if theta < 1e-6 {
                        let _ = writeln!(out, "this round passes through the first intersection");
                    }
                    let _ = writeln!(out, "inner section arc: {:.10}", info.inner_arc);
                    let _ = writeln!(out, "outer section arc: {:.10}", info.outer_arc);
                }
                Err(_) => {
                    let _ = writeln!(
                        out,
                        "crossing angle theta_cr: none, the round does not meet itself"
                    );
                }
            }
        }
        Family::Richmond { k: 1 } => match richmond_crossing_angle(r) {
            Ok(theta) => {
                let _ = writeln!(out, "crossing angle theta_cr: {theta:.10}");
            }
            Err(_) => {
                let _ = writeln!(
                    out,
                    "crossing angle theta_cr: none below r = {:.10}",
                    enneper_first_intersection_radius()
                );
            }
        },
        Family::Bour3 => {
            let sectors = bour3_sectors();
            let _ = writeln!(
                out,
                "sectors: {} of width {:.10}",
                sectors.sectors.len(),
                sectors.width()
            );
        }
        _ => {}
    }
    Ok(out)
}

fn cmd_mesh(args: &MeshArgs) -> CmdResult {
    let spec = resolve_surface(&args.surface)?.with_scale(args.scale)?;
    let file = File::create(&args.out)
        .map_err(|e| format!("cannot create {}: {e}", args.out.display()))?;
    let mut w = BufWriter::new(file);
    let summary = if let Some(r) = args.round {
        let line = sample_round_polyline(&spec, r, args.theta_steps)?;
        write_polyline_obj(&line, &mut w)?;
        format!("{} vertices, 1 closed polyline", line.points.len())
    } else if let Some(theta) = args.ray {
        let line =
            sample_radial_polyline(&spec, theta, (spec.r_min(), spec.r_max()), args.r_steps)?;
        write_polyline_obj(&line, &mut w)?;
        format!("{} vertices, 1 open polyline", line.points.len())
    } else {
        let t0 = args.theta_min.unwrap_or(0.0);
        let t1 = args.theta_max.unwrap_or(t0 + spec.theta_period());
        let grid = GridSpec::new(
            args.r_steps,
            args.theta_steps,
            (spec.r_min(), spec.r_max()),
            (t0, t1),
        )?;
        let mesh = sample_mesh(&spec, &grid)?;
        write_obj(&mesh, &mut w)?;
        format!(
            "{} vertices, {} faces",
            mesh.vertices.len(),
            mesh.triangles.len()
        )
    };
    w.flush()?;
    Ok(format!("wrote {summary} to {}\n", args.out.display()))
}

fn cmd_validate(args: &ValidateArgs) -> CmdResult {
    let report = validate(ValidateOptions {
        height_override: args.gauge_h,
    })?;
    print!("{}", report.render());
    if report.passed() {
        Ok(String::new())
    } else {
        Err(Failure::Validation)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let text = e.to_string();
            let parts: Vec<&str> = text
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty() && !l.starts_with("For more information"))
                .collect();
            eprintln!("{}", parts.join(" "));
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let result = match &cli.command {
        Command::Pattern(a) => cmd_pattern(a),
        Command::Info(a) => cmd_info(a),
        Command::Mesh(a) => cmd_mesh(a),
        Command::Validate(a) => cmd_validate(a),
    };
    match result {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Validation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg.lines().next().unwrap_or(""));
            ExitCode::from(2)
        }
    }
}
