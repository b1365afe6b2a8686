//! Command implementations behind the `divbound` binary.
//!
//! Exit codes: 0 means every check passed, 1 means at least one mathematical
//! check failed, 2 means a usage or input error. Nothing else is ever
//! returned.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{self, MeasureId};
use crate::fdiv::dragomir_bounds;
use crate::relations::{self, Relation};
use crate::report::{format_value, Check, Metadata, Report};
use crate::simplex::{self, Distribution, DistributionPair, InputFormat};
use crate::verify::{self, FuzzConfig};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "divbound",
    version,
    about = "Divergence measures, bound chains, and inequality verification on the probability simplex"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// An inclusive dimension range written `LO..HI`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for DimRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected LO..HI, got '{s}'"))?;
        let lo = lo
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("bad LO: {e}"))?;
        let hi = hi
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("bad HI: {e}"))?;
        Ok(DimRange { lo, hi })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute measure values for a pair of distributions.
    Compute {
        /// File with distribution P (.json, .csv, or one float per line).
        #[arg(long = "p")]
        p: PathBuf,
        /// File with distribution Q.
        #[arg(long = "q")]
        q: PathBuf,
        /// Comma-separated measure names (default: all thirteen).
        #[arg(long, value_delimiter = ',')]
        measures: Option<Vec<String>>,
        /// Output format. CSV covers the measures map only.
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Rescale inputs to sum 1 before validation.
        #[arg(long)]
        normalize: bool,
    },
    /// Value, E/A/B bounds, and closed-form cross-checks for one measure.
    Bounds {
        #[arg(long = "p")]
        p: PathBuf,
        #[arg(long = "q")]
        q: PathBuf,
        /// Measure name; must have a generator.
        #[arg(long)]
        measure: String,
    },
    /// Run the full identity/bound/relation/certificate suite on a pair.
    Verify {
        #[arg(long = "p")]
        p: PathBuf,
        #[arg(long = "q")]
        q: PathBuf,
    },
    /// Run the suite over seeded random pairs; report worst margins.
    Fuzz {
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        /// Inclusive dimension range, e.g. 2..50.
        #[arg(long, default_value = "2..50")]
        dims: DimRange,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Lower clamp applied to sampled entries.
        #[arg(long, default_value_t = 1e-6)]
        floor: f64,
    },
    /// Analytic vs numeric sandwich coefficients on an interval.
    Relate {
        /// Relation name: d-delta, d-j, d-i, f-delta, f-j, f-i, g-delta,
        /// g-j, g-i, g-t.
        #[arg(long)]
        relation: String,
        /// Lower ratio endpoint, 0 < r <= 1.
        #[arg(long = "r")]
        r: f64,
        /// Upper ratio endpoint, R >= 1.
        #[arg(long = "R")]
        big_r: f64,
    },
}

/// Run a parsed command, printing its report to stdout.
pub fn run(cli: Cli) -> ExitCode {
    let outcome = match cli.command {
        Command::Compute {
            p,
            q,
            measures,
            format,
            normalize,
        } => cmd_compute(&p, &q, measures.as_deref(), format, normalize),
        Command::Bounds { p, q, measure } => cmd_bounds(&p, &q, &measure),
        Command::Verify { p, q } => cmd_verify(&p, &q),
        Command::Fuzz {
            trials,
            dims,
            seed,
            floor,
        } => cmd_fuzz(FuzzConfig {
            trials,
            dim_lo: dims.lo,
            dim_hi: dims.hi,
            seed,
            floor,
        }),
        Command::Relate { relation, r, big_r } => cmd_relate(&relation, r, big_r),
    };
    match outcome {
        Ok(report) => {
            if report.all_pass() {
                ExitCode::from(EXIT_OK)
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn load_pair(p: &Path, q: &Path, normalize: bool) -> Result<DistributionPair, String> {
    let load = |path: &Path| -> Result<Distribution, String> {
        simplex::load(path, InputFormat::from_extension(path), normalize).map_err(|e| e.to_string())
    };
    DistributionPair::new(load(p)?, load(q)?).map_err(|e| e.to_string())
}

fn cmd_compute(
    p: &Path,
    q: &Path,
    measures: Option<&[String]>,
    format: OutputFormat,
    normalize: bool,
) -> Result<Report, String> {
    let pair = load_pair(p, q, normalize)?;
    let selected: Vec<MeasureId> = match measures {
        None => MeasureId::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|n| MeasureId::from_name(n.trim()).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?,
    };
    let values: Vec<(MeasureId, f64)> = selected
        .iter()
        .map(|&m| (m, catalog::evaluate(m, &pair)))
        .collect();
    let report = Report {
        measures: values
            .iter()
            .map(|(m, v)| (m.name().to_string(), *v))
            .collect(),
        metadata: Metadata::for_pair(&pair),
        ..Report::default()
    };
    match format {
        OutputFormat::Json => println!("{}", report.to_json()),
        OutputFormat::Csv => {
            println!("measure,value");
            for (m, v) in &values {
                println!("{},{}", m.name(), format_value(*v));
            }
            println!("r,{}", format_value(pair.ratio_min()));
            println!("R,{}", format_value(pair.ratio_max()));
        }
    }
    Ok(report)
}

fn cmd_bounds(p: &Path, q: &Path, measure: &str) -> Result<Report, String> {
    let pair = load_pair(p, q, false)?;
    let measure = MeasureId::from_name(measure).map_err(|e| e.to_string())?;
    let gen = catalog::generator(measure).map_err(|e| e.to_string())?;
    let generic = dragomir_bounds(&gen, &pair);

    let mut bounds = BTreeMap::new();
    bounds.insert(measure.name().to_string(), generic.into());

    let mut checks = Vec::new();
    let scale = generic.a;
    let name = measure.name();
    checks.push(Check::leq(
        format!("bounds.{name}.value_nonneg"),
        0.0,
        generic.value,
        scale,
    ));
    checks.push(Check::leq(
        format!("bounds.{name}.value_le_e"),
        generic.value,
        generic.e,
        scale,
    ));
    checks.push(Check::leq(
        format!("bounds.{name}.e_le_a"),
        generic.e,
        generic.a,
        scale,
    ));
    if let Some(b) = generic.b {
        checks.push(Check::leq(
            format!("bounds.{name}.value_le_b"),
            generic.value,
            b,
            scale,
        ));
        checks.push(Check::leq(
            format!("bounds.{name}.b_le_a"),
            b,
            generic.a,
            scale,
        ));
        checks.push(Check::leq(
            format!("bounds.{name}.b_gap_nonneg"),
            0.0,
            b - generic.value,
            scale,
        ));
        checks.push(Check::leq(
            format!("bounds.{name}.b_gap_le_a"),
            b - generic.value,
            generic.a,
            scale,
        ));
    }

    if measure.has_closed_bounds() {
        let closed = catalog::closed_bounds(measure, &pair).map_err(|e| e.to_string())?;
        bounds.insert(format!("{name}.closed"), closed.into());
        let agree = |what: &str, closed_v: f64, generic_v: f64| {
            Check::residual(
                format!("closed.{name}.{what}_agrees"),
                (closed_v - generic_v).abs(),
                1e-8 * generic_v.abs().max(1.0),
            )
        };
        checks.push(agree("e", closed.e, generic.e));
        checks.push(agree("a", closed.a, generic.a));
        if let (Some(cb), Some(gb)) = (closed.b, generic.b) {
            checks.push(agree("b", cb, gb));
        }
        // Generator route vs direct closed-form evaluation of the measure.
        checks.push(Check::residual(
            format!("closed.{name}.value_agrees"),
            (closed.value - generic.value).abs(),
            1e-10 * generic.value.abs().max(1e-3),
        ));
    }

    let report = Report {
        bounds,
        checks,
        metadata: Metadata::for_pair(&pair),
        ..Report::default()
    };
    println!("{}", report.to_json());
    Ok(report)
}

fn cmd_verify(p: &Path, q: &Path) -> Result<Report, String> {
    let pair = load_pair(p, q, false)?;
    // The parallelogram reference has to come from somewhere deterministic;
    // the uniform distribution is the natural third point.
    let uniform = Distribution::uniform(pair.len()).map_err(|e| e.to_string())?;
    let report = Report {
        measures: verify::measure_entries(&pair),
        bounds: verify::bounds_entries(&pair),
        checks: verify::pair_suite(&pair, Some(&uniform)),
        metadata: Metadata::for_pair(&pair),
    };
    println!("{}", report.to_json());
    Ok(report)
}

fn cmd_fuzz(config: FuzzConfig) -> Result<Report, String> {
    let checks = verify::campaign(&config).map_err(|e| e.to_string())?;
    let report = Report {
        checks,
        metadata: Metadata {
            seed: Some(config.seed),
            ..Metadata::new()
        },
        ..Report::default()
    };
    println!("{}", report.to_json());
    Ok(report)
}

fn cmd_relate(relation: &str, r: f64, big_r: f64) -> Result<Report, String> {
    let relation = Relation::from_name(relation).map_err(|e| e.to_string())?;
    let cc = relations::cross_check(relation, r, big_r).map_err(|e| e.to_string())?;
    let tol = 1e-8 * cc.analytic.upper.abs().max(1.0);
    let checks = vec![
        Check::leq(
            "relate.analytic.ordered",
            cc.analytic.lower,
            cc.analytic.upper,
            cc.analytic.upper,
        ),
        Check::leq(
            "relate.numeric.ordered",
            cc.numeric.lower,
            cc.numeric.upper,
            cc.numeric.upper,
        ),
        Check::residual(
            "relate.lower_agrees",
            (cc.analytic.lower - cc.numeric.lower).abs(),
            tol,
        ),
        Check::residual(
            "relate.upper_agrees",
            (cc.analytic.upper - cc.numeric.upper).abs(),
            tol,
        ),
    ];
    let report = Report {
        checks,
        metadata: Metadata {
            r: Some(r),
            big_r: Some(big_r),
            ..Metadata::new()
        },
        ..Report::default()
    };
    println!("{}", report.to_json());
    Ok(report)
}
