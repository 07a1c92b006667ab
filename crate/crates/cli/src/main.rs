//! Command-line driver for the exact checkerboard and lattice toolkit.
//!
//! Every verb prints canonical JSON (default) or CSV on standard output;
//! output is byte-deterministic for a fixed command line. Exit codes:
//! 0 on success, 2 when a validation verb meets an unexpected outcome or an
//! enumeration exceeds its budget, 64 for usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use hyperdiamond_core::algebra::{Dyadic, OctonionVector, Quaternion};
use hyperdiamond_core::checkerboard::{
    brute_force_all, count_paths_all, effective_step_length, evaluate, future_links,
    lightcone_links, link_group_closure, phase, propagate_all, AmplitudePoly, Dim, Direction,
    EvaluationParams, PositionKey, WeightConvention, DEFAULT_ENUMERATION_BUDGET,
};
use hyperdiamond_core::lattice::{
    decomposition_harness, e8_roots, nearest_neighbors, next_nearest_4hd, IdentityCheck,
    LatticePoint, LatticeSpec,
};
use hyperdiamond_core::particles::{
    builtin_known_anomalies, builtin_table, validate, ParticleKind, ParticlePath,
};
use hyperdiamond_core::{selfcheck, Error};

/// 2019 SI exact values.
const PLANCK: f64 = 6.626_070_15e-34;
const LIGHT_SPEED: f64 = 299_792_458.0;

const EXIT_CHECK_FAILED: u8 = 2;
const EXIT_USAGE: u8 = 64;

const COORD_NAMES: [&str; 4] = ["t", "x", "y", "z"];

#[derive(Parser)]
#[command(
    name = "hyperdiamond",
    version,
    about = "Exact quaternion path sums on checkerboard lattices, with the \
             surrounding lattice constructions and particle-path validators"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    /// Slice-by-slice transfer over (position, direction) states.
    Transfer,
    /// Explicit enumeration of all direction sequences (budget-guarded).
    Enumerate,
}

/// Flags shared by the path-sum verbs.
#[derive(Args)]
struct PathArgs {
    /// Spacetime dimension (2 or 4); inferred from --start, checked if given.
    #[arg(long)]
    dim: Option<usize>,

    /// First link of every path: F1..F4 (dimension 4) or R, L (dimension 2).
    #[arg(long)]
    start: String,

    /// Number of links per path.
    #[arg(long)]
    steps: u32,

    /// Endpoint: a link sum like "F1+F2", or half-unit coordinates "t,x[,y,z]".
    /// Omit to list every reachable endpoint.
    #[arg(long)]
    end: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// The lightcone links with direction names and half-unit displacements.
    Links {
        /// Spacetime dimension (2 or 4).
        #[arg(long, default_value_t = 4)]
        dim: usize,
    },
    /// Nearest neighbors of a lattice, named like "4hd", "d4", or "z4".
    Neighbors {
        #[arg(long)]
        lattice: String,
    },
    /// The 240 unit vectors of the 8-dimensional root enumeration.
    Roots {
        /// Print only the total and the three shell sizes.
        #[arg(long)]
        count_only: bool,
    },
    /// The 24 next-to-nearest neighbors of 4HD (the 24-cell).
    Nn24,
    /// The multiplicative closure of the lightcone links: 24 unit quaternions.
    Closure,
    /// Compare the box decompositions; exits 2 on an unexpected outcome.
    Decompose {
        /// Half the box edge, an exactly representable decimal of at most 2.
        #[arg(long, default_value = "2")]
        box_radius: String,
    },
    /// Corner polynomials of all paths from the origin.
    Propagate {
        #[command(flatten)]
        path: PathArgs,

        /// Corner weight convention.
        #[arg(long, default_value = "signed")]
        convention: String,

        /// Evaluation engine.
        #[arg(long, value_enum, default_value_t = Engine::Transfer)]
        engine: Engine,
    },
    /// Exact path counts by corner number.
    Count {
        #[command(flatten)]
        path: PathArgs,
    },
    /// Numeric amplitude of the corner polynomial at mu = m·eps (dimension 2)
    /// or m·sqrt(3)·eps (dimension 4).
    Evaluate {
        #[command(flatten)]
        path: PathArgs,

        #[arg(long)]
        mass: f64,

        /// Lattice step length.
        #[arg(long)]
        epsilon: f64,

        #[arg(long, default_value = "signed")]
        convention: String,
    },
    /// Phase angle of the evaluated amplitude; exits 2 if it is undefined.
    Phase {
        #[command(flatten)]
        path: PathArgs,

        #[arg(long)]
        mass: f64,

        /// Lattice step length.
        #[arg(long)]
        epsilon: f64,

        #[arg(long, default_value = "signed")]
        convention: String,
    },
    /// Effective step length h/(m·c).
    Steplen {
        #[arg(long)]
        mass: f64,

        /// Planck constant.
        #[arg(long, default_value_t = PLANCK)]
        h: f64,

        /// Speed of light.
        #[arg(long, default_value_t = LIGHT_SPEED)]
        c: f64,
    },
    /// Validate a particle path table; exits 2 on unexpected anomalies.
    Particle {
        /// proton, pion, or graviton.
        #[arg(long)]
        kind: String,

        /// Read the table from a CSV file instead of the builtin.
        #[arg(long)]
        file: Option<PathBuf>,

        /// Print the canonical table instead of validating.
        #[arg(long)]
        table: bool,
    },
    /// Run every module's invariant suite; exits 0 only if all checks pass.
    Selfcheck,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_CHECK_FAILED,
            message: message.into(),
        }
    }
}

/// Library errors triggered by command-line input. Exceeding the enumeration
/// budget is a refused computation, not a malformed request; everything else
/// here means the flags asked for something impossible.
fn input_error(err: Error) -> Failure {
    match err {
        Error::EnumerationBudget { .. } | Error::UndefinedPhase => Failure::check(err.to_string()),
        _ => Failure::usage(err.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Links { dim } => links_cmd(*dim, cli.format),
        Command::Neighbors { lattice } => neighbors_cmd(lattice, cli.format),
        Command::Roots { count_only } => roots_cmd(*count_only, cli.format),
        Command::Nn24 => nn24_cmd(cli.format),
        Command::Closure => closure_cmd(cli.format),
        Command::Decompose { box_radius } => decompose_cmd(box_radius, cli.format),
        Command::Propagate {
            path,
            convention,
            engine,
        } => propagate_cmd(path, convention, *engine, cli.format),
        Command::Count { path } => count_cmd(path, cli.format),
        Command::Evaluate {
            path,
            mass,
            epsilon,
            convention,
        } => numeric_cmd(path, *mass, *epsilon, convention, false, cli.format),
        Command::Phase {
            path,
            mass,
            epsilon,
            convention,
        } => numeric_cmd(path, *mass, *epsilon, convention, true, cli.format),
        Command::Steplen { mass, h, c } => steplen_cmd(*mass, *h, *c, cli.format),
        Command::Particle { kind, file, table } => {
            particle_cmd(kind, file.as_deref(), *table, cli.format)
        }
        Command::Selfcheck => selfcheck_cmd(cli.format),
    }
}

// ---------------------------------------------------------------- parsing

fn parse_dim(n: usize) -> Result<Dim, Failure> {
    Dim::try_from_usize(n).map_err(input_error)
}

fn parse_start(text: &str, dim_flag: Option<usize>) -> Result<Direction, Failure> {
    let start = Direction::from_str(text).map_err(input_error)?;
    if let Some(n) = dim_flag {
        if parse_dim(n)? != start.dim() {
            return Err(Failure::usage(format!(
                "start {start} lives in dimension {}, but --dim {n} was given",
                start.dim().as_usize()
            )));
        }
    }
    Ok(start)
}

fn parse_convention(text: &str) -> Result<WeightConvention, Failure> {
    WeightConvention::from_str(text).map_err(input_error)
}

/// Enumeration guard, overridable through CHECKERBOARD_BUDGET.
fn budget() -> Result<u64, Failure> {
    match std::env::var("CHECKERBOARD_BUDGET") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Failure::usage(format!(
                "CHECKERBOARD_BUDGET must be a nonnegative integer, got {text:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUMERATION_BUDGET),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(Failure::usage("CHECKERBOARD_BUDGET is not valid UTF-8"))
        }
    }
}

/// Endpoint flag: either half-unit coordinates "t,x[,y,z]" or a sum of
/// direction names "F1+F2".
fn parse_end(text: &str, dim: Dim) -> Result<PositionKey, Failure> {
    let n = dim.as_usize();
    let mut key: PositionKey = [0; 4];
    if text.contains(',') {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != n {
            return Err(Failure::usage(format!(
                "--end needs {n} comma-separated half-unit coordinates, got {}",
                parts.len()
            )));
        }
        for (slot, part) in key.iter_mut().zip(&parts) {
            *slot = part.trim().parse().map_err(|_| {
                Failure::usage(format!("--end coordinate {part:?} is not an integer"))
            })?;
        }
    } else {
        for name in text.split('+') {
            let dir = Direction::from_str(name.trim()).map_err(input_error)?;
            if dir.dim() != dim {
                return Err(Failure::usage(format!(
                    "--end uses {dir}, which lives in dimension {}",
                    dir.dim().as_usize()
                )));
            }
            for (slot, delta) in key.iter_mut().zip(dir.displacement_half_units()) {
                *slot += delta;
            }
        }
    }
    Ok(key)
}

/// Lattice names: "<n>hd" (half-shifted doubling), "d<n>" (even coordinate
/// sum), "z<n>" (all integer vectors).
fn parse_lattice(name: &str) -> Result<LatticeSpec, Failure> {
    let lower = name.trim().to_ascii_lowercase();
    let unknown = || {
        Failure::usage(format!(
            "unknown lattice {name:?}; expected names like 4hd, d4, or z4"
        ))
    };
    let (build, digits): (fn(usize) -> LatticeSpec, &str) =
        if let Some(digits) = lower.strip_suffix("hd") {
            (LatticeSpec::HyperDiamond, digits)
        } else if let Some(digits) = lower.strip_prefix('d') {
            (LatticeSpec::Checkerboard, digits)
        } else if let Some(digits) = lower.strip_prefix('z') {
            (LatticeSpec::Hypercubic, digits)
        } else {
            return Err(unknown());
        };
    let n: usize = digits.parse().map_err(|_| unknown())?;
    Ok(build(n))
}

/// Exact decimal like "2", "0.5", or "-1.25". A fraction p/10^k is
/// representable iff 5^k divides p.
fn parse_dyadic(text: &str) -> Result<Dyadic, Failure> {
    let trimmed = text.trim();
    let bad = || {
        Failure::usage(format!(
            "{trimmed:?} is not an exactly representable decimal"
        ))
    };
    let (negative, digits) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let all_digits = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(bad());
    }
    // value = scaled / 10^k, which is dyadic exactly when 5^k divides scaled.
    let k = frac_part.len() as u32;
    let scaled: i128 = format!("{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let five_k = 5i128.checked_pow(k).ok_or_else(bad)?;
    if scaled % five_k != 0 {
        return Err(bad());
    }
    let mut numerator = scaled / five_k;
    if negative {
        numerator = -numerator;
    }
    Ok(Dyadic::new(numerator, k))
}

// --------------------------------------------------------------- printing

/// Single buffered write; a closed pipe (e.g. piping into `head`) ends the
/// run quietly instead of panicking.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let done = out.write_all(text.as_bytes()).and_then(|()| out.flush());
    if done.is_err() {
        std::process::exit(0);
    }
}

fn emit_json(value: &Value) {
    let mut text = value.to_string();
    text.push('\n');
    emit(&text);
}

fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn emit_csv<I>(header: &str, rows: I)
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut text = String::from(header);
    text.push('\n');
    for row in rows {
        let encoded: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        text.push_str(&encoded.join(","));
        text.push('\n');
    }
    emit(&text);
}

fn point_value(point: &LatticePoint) -> Value {
    Value::Array(
        point
            .decimal_coords()
            .into_iter()
            .map(Value::String)
            .collect(),
    )
}

fn octonion_value(vector: &OctonionVector) -> Value {
    Value::Array(
        vector
            .coords()
            .iter()
            .map(|c| Value::String(decimal(c)))
            .collect(),
    )
}

fn decimal(value: &Dyadic) -> String {
    value
        .to_decimal_string()
        .unwrap_or_else(|| value.to_string())
}

fn coord_header(n: usize) -> String {
    (1..=n)
        .map(|i| format!("x{i}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn emit_points(points: &[LatticePoint], format: Format) {
    match format {
        Format::Json => {
            emit_json(&Value::Array(points.iter().map(point_value).collect()));
        }
        Format::Csv => {
            let n = points.first().map_or(0, LatticePoint::dim);
            emit_csv(
                &coord_header(n),
                points.iter().map(|p| p.decimal_coords()),
            );
        }
    }
}

// ------------------------------------------------------------------ verbs

fn links_cmd(dim: usize, format: Format) -> Result<(), Failure> {
    let dim = parse_dim(dim)?;
    let n = dim.as_usize();
    let quaternions: Vec<Quaternion> = match dim {
        Dim::Four => lightcone_links().to_vec(),
        Dim::Two => {
            let r = Direction::R.link();
            let l = Direction::L.link();
            vec![r.clone(), l.clone(), -&l, -&r]
        }
    };
    let names = future_links(dim);
    debug_assert!(names
        .iter()
        .zip(&quaternions)
        .all(|(dir, q)| dir.link() == *q));

    let displacement = |q: &Quaternion| -> Vec<i64> {
        let components = q.components();
        components[..n]
            .iter()
            .map(|c| {
                let half = c.half_units().expect("links live on the half-unit grid");
                i64::try_from(half).expect("link displacements are single digits")
            })
            .collect()
    };

    match format {
        Format::Json => {
            let items: Vec<Value> = quaternions
                .iter()
                .enumerate()
                .map(|(idx, q)| {
                    json!({
                        "direction": names.get(idx).map(|d| d.name()),
                        "quaternion": q.to_string(),
                        "displacement": displacement(q),
                    })
                })
                .collect();
            emit_json(&json!({ "dim": n, "links": items }));
        }
        Format::Csv => {
            let header = format!("direction,quaternion,{}", COORD_NAMES[..n].join(","));
            emit_csv(
                &header,
                quaternions.iter().enumerate().map(|(idx, q)| {
                    let mut row = vec![
                        names.get(idx).map_or(String::new(), |d| d.name().to_string()),
                        q.to_string(),
                    ];
                    row.extend(displacement(q).iter().map(i64::to_string));
                    row
                }),
            );
        }
    }
    Ok(())
}

fn neighbors_cmd(lattice: &str, format: Format) -> Result<(), Failure> {
    let spec = parse_lattice(lattice)?;
    let points = nearest_neighbors(&spec).map_err(input_error)?;
    emit_points(&points, format);
    Ok(())
}

fn roots_cmd(count_only: bool, format: Format) -> Result<(), Failure> {
    let list = e8_roots();
    match (count_only, format) {
        (true, Format::Json) => {
            emit_json(&json!({ "total": list.points.len(), "strata": list.strata }));
        }
        (true, Format::Csv) => {
            emit_csv(
                "total,stratum1,stratum2,stratum3",
                [vec![
                    list.points.len().to_string(),
                    list.strata[0].to_string(),
                    list.strata[1].to_string(),
                    list.strata[2].to_string(),
                ]],
            );
        }
        (false, Format::Json) => {
            let points: Vec<Value> = list.points.iter().map(octonion_value).collect();
            emit_json(&json!({
                "total": list.points.len(),
                "strata": list.strata,
                "points": points,
            }));
        }
        (false, Format::Csv) => {
            emit_csv(
                &coord_header(list.dim),
                list.points
                    .iter()
                    .map(|p| p.coords().iter().map(decimal).collect()),
            );
        }
    }
    Ok(())
}

fn nn24_cmd(format: Format) -> Result<(), Failure> {
    let mut points = next_nearest_4hd();
    points.sort();
    emit_points(&points, format);
    Ok(())
}

fn closure_cmd(format: Format) -> Result<(), Failure> {
    let units: Vec<String> = link_group_closure()
        .iter()
        .map(Quaternion::to_string)
        .collect();
    match format {
        Format::Json => emit_json(&json!({ "count": units.len(), "units": units })),
        Format::Csv => emit_csv("quaternion", units.into_iter().map(|u| vec![u])),
    }
    Ok(())
}

fn identity_value(check: &IdentityCheck) -> Value {
    json!({
        "holds": check.holds,
        "only_in_whole": check.only_in_whole.iter().map(point_value).collect::<Vec<_>>(),
        "only_in_split": check.only_in_split.iter().map(point_value).collect::<Vec<_>>(),
    })
}

fn decompose_cmd(box_radius: &str, format: Format) -> Result<(), Failure> {
    let radius = parse_dyadic(box_radius)?;
    let report = decomposition_harness(&radius).map_err(input_error)?;
    match format {
        Format::Json => {
            emit_json(&json!({
                "box_radius": decimal(&report.box_radius),
                "candidates": report.candidates,
                "pair_identity": identity_value(&report.d8_as_d4_pairs),
                "glued_identity": identity_value(&report.e8_as_hyperdiamond_pairs),
            }));
        }
        Format::Csv => {
            let row = |name: &str, check: &IdentityCheck| {
                vec![
                    name.to_string(),
                    check.holds.to_string(),
                    check.only_in_whole.len().to_string(),
                    check.only_in_split.len().to_string(),
                ]
            };
            emit_csv(
                "identity,holds,only_in_whole,only_in_split",
                [
                    row("pairs", &report.d8_as_d4_pairs),
                    row("glued", &report.e8_as_hyperdiamond_pairs),
                ],
            );
        }
    }
    if report.matches_expected_shape() {
        Ok(())
    } else {
        Err(Failure::check(
            "decomposition outcome differs from the expected shape",
        ))
    }
}

fn poly_rows(prefix: &[String], poly: &AmplitudePoly) -> Vec<Vec<String>> {
    poly.iter()
        .map(|(c, q)| {
            let mut row = prefix.to_vec();
            row.push(c.to_string());
            row.extend(q.components().iter().map(|d| d.to_string()));
            row
        })
        .collect()
}

fn end_strings(key: &PositionKey, n: usize) -> Vec<String> {
    key[..n].iter().map(i64::to_string).collect()
}

fn propagate_cmd(
    path: &PathArgs,
    convention: &str,
    engine: Engine,
    format: Format,
) -> Result<(), Failure> {
    let start = parse_start(&path.start, path.dim)?;
    let convention = parse_convention(convention)?;
    let by_endpoint = match engine {
        Engine::Transfer => propagate_all(start, path.steps, convention),
        Engine::Enumerate => brute_force_all(start, path.steps, convention, budget()?),
    }
    .map_err(input_error)?;
    let n = start.dim().as_usize();

    if let Some(end_text) = &path.end {
        let key = parse_end(end_text, start.dim())?;
        let poly = by_endpoint
            .get(&key)
            .cloned()
            .unwrap_or_else(AmplitudePoly::zero);
        match format {
            Format::Json => emit_json(&json!({ "poly": poly.to_json() })),
            Format::Csv => emit_csv("C,re,i,j,k", poly_rows(&[], &poly)),
        }
    } else {
        match format {
            Format::Json => {
                let endpoints: Vec<Value> = by_endpoint
                    .iter()
                    .map(|(key, poly)| json!({ "end": &key[..n], "poly": poly.to_json() }))
                    .collect();
                emit_json(&json!({ "endpoints": endpoints }));
            }
            Format::Csv => {
                let header = format!("{},C,re,i,j,k", COORD_NAMES[..n].join(","));
                let rows = by_endpoint
                    .iter()
                    .flat_map(|(key, poly)| poly_rows(&end_strings(key, n), poly));
                emit_csv(&header, rows);
            }
        }
    }
    Ok(())
}

fn counts_value(counts: &[(u32, String)]) -> Value {
    Value::Array(
        counts
            .iter()
            .map(|(c, count)| json!({ "C": c, "N": count }))
            .collect(),
    )
}

fn counts_rows(prefix: &[String], counts: &[(u32, String)]) -> Vec<Vec<String>> {
    counts
        .iter()
        .map(|(c, count)| {
            let mut row = prefix.to_vec();
            row.push(c.to_string());
            row.push(count.clone());
            row
        })
        .collect()
}

fn count_cmd(path: &PathArgs, format: Format) -> Result<(), Failure> {
    let start = parse_start(&path.start, path.dim)?;
    let n = start.dim().as_usize();
    let by_endpoint: Vec<(PositionKey, Vec<(u32, String)>)> =
        count_paths_all(start, path.steps)
            .map_err(input_error)?
            .iter()
            .map(|(key, counts)| {
                let counts = counts
                    .iter()
                    .map(|(&c, count)| (c, count.to_string()))
                    .collect();
                (*key, counts)
            })
            .collect();

    if let Some(end_text) = &path.end {
        let key = parse_end(end_text, start.dim())?;
        let empty = Vec::new();
        let counts = by_endpoint
            .iter()
            .find(|(k, _)| *k == key)
            .map_or(&empty, |(_, counts)| counts);
        match format {
            Format::Json => emit_json(&json!({ "counts": counts_value(counts) })),
            Format::Csv => emit_csv("C,N", counts_rows(&[], counts)),
        }
    } else {
        match format {
            Format::Json => {
                let endpoints: Vec<Value> = by_endpoint
                    .iter()
                    .map(|(key, counts)| {
                        json!({ "end": &key[..n], "counts": counts_value(counts) })
                    })
                    .collect();
                emit_json(&json!({ "endpoints": endpoints }));
            }
            Format::Csv => {
                let header = format!("{},C,N", COORD_NAMES[..n].join(","));
                let rows = by_endpoint
                    .iter()
                    .flat_map(|(key, counts)| counts_rows(&end_strings(key, n), counts));
                emit_csv(&header, rows);
            }
        }
    }
    Ok(())
}

fn numeric_cmd(
    path: &PathArgs,
    mass: f64,
    epsilon: f64,
    convention: &str,
    phase_only: bool,
    format: Format,
) -> Result<(), Failure> {
    let start = parse_start(&path.start, path.dim)?;
    let convention = parse_convention(convention)?;
    let end_text = path
        .end
        .as_ref()
        .ok_or_else(|| Failure::usage("--end is required for this verb"))?;
    let key = parse_end(end_text, start.dim())?;
    let poly = propagate_all(start, path.steps, convention)
        .map_err(input_error)?
        .remove(&key)
        .unwrap_or_else(AmplitudePoly::zero);
    let params =
        EvaluationParams::new(mass, epsilon, start.dim(), convention).map_err(input_error)?;
    let amplitude = evaluate(&poly, &params);

    if phase_only {
        let angle = phase(&amplitude).map_err(input_error)?;
        match format {
            Format::Json => emit_json(&json!({ "phase": angle })),
            Format::Csv => emit_csv("phase", [vec![angle.to_string()]]),
        }
    } else {
        match format {
            Format::Json => emit_json(&json!({
                "mu": params.mu(),
                "re": amplitude.re,
                "i": amplitude.i,
                "j": amplitude.j,
                "k": amplitude.k,
                "norm": amplitude.norm(),
            })),
            Format::Csv => emit_csv(
                "mu,re,i,j,k,norm",
                [vec![
                    params.mu().to_string(),
                    amplitude.re.to_string(),
                    amplitude.i.to_string(),
                    amplitude.j.to_string(),
                    amplitude.k.to_string(),
                    amplitude.norm().to_string(),
                ]],
            ),
        }
    }
    Ok(())
}

fn steplen_cmd(mass: f64, h: f64, c: f64, format: Format) -> Result<(), Failure> {
    let length = effective_step_length(mass, h, c).map_err(input_error)?;
    match format {
        Format::Json => emit_json(&json!({ "mass": mass, "h": h, "c": c, "length": length })),
        Format::Csv => emit_csv(
            "mass,h,c,length",
            [vec![
                mass.to_string(),
                h.to_string(),
                c.to_string(),
                length.to_string(),
            ]],
        ),
    }
    Ok(())
}

fn particle_cmd(
    kind: &str,
    file: Option<&Path>,
    table: bool,
    format: Format,
) -> Result<(), Failure> {
    let kind = ParticleKind::from_str(kind).map_err(input_error)?;
    let path = match file {
        Some(file) => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", file.display())))?;
            ParticlePath::parse_table(kind, &text).map_err(input_error)?
        }
        None => builtin_table(kind),
    };

    if table {
        match format {
            Format::Json => emit_json(&path.to_json()),
            Format::Csv => emit(&path.canonical_table()),
        }
        return Ok(());
    }

    let report = validate(&path);
    match format {
        Format::Json => {
            let mut object = Map::new();
            object.insert("kind".into(), Value::String(kind.to_string()));
            if let Value::Object(rest) = report.to_json() {
                object.extend(rest);
            }
            emit_json(&Value::Object(object));
        }
        Format::Csv => emit_csv(
            "constituent,tick,description",
            report.anomalies.iter().map(|a| {
                vec![
                    a.constituent.clone(),
                    a.tick.to_string(),
                    a.description.clone(),
                ]
            }),
        ),
    }

    // Known discrepancies of the builtin tables are not failures; anything
    // beyond that list is.
    let known = builtin_known_anomalies(kind);
    let unexpected = report
        .anomalies
        .iter()
        .filter(|a| !known.contains(&(a.constituent.as_str(), a.tick)))
        .count();
    if unexpected == 0 {
        Ok(())
    } else {
        Err(Failure::check(format!(
            "{kind} table has {unexpected} anomalies beyond the known list"
        )))
    }
}

fn selfcheck_cmd(format: Format) -> Result<(), Failure> {
    let results = selfcheck::run_all();
    let ok = results.iter().all(|r| r.passed);
    match format {
        Format::Json => {
            let checks: Vec<Value> = results
                .iter()
                .map(|r| json!({ "name": r.name, "passed": r.passed, "detail": r.detail }))
                .collect();
            emit_json(&json!({ "ok": ok, "checks": checks }));
        }
        Format::Csv => emit_csv(
            "name,passed,detail",
            results
                .iter()
                .map(|r| vec![r.name.to_string(), r.passed.to_string(), r.detail.clone()]),
        ),
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::check("selfcheck failed"))
    }
}
