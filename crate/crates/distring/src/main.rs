//! Thin command-line front end. All mathematics lives in the library; this
//! file only parses flags, wires up inputs, serializes reports, and maps
//! outcomes to exit codes:
//!   0 = pass / no violation found
//!   1 = rigorous violation found
//!   2 = input error
//!   3 = inconclusive

use clap::{Parser, Subcommand, ValueEnum};
use distring::ball::ComplexPoint;
use distring::cone::{check_support_fn_axioms, check_weight_locality, hessian_quad_form, Cone};
use distring::corona::{
    check_corona, necessity_bound, search_violation, verify_bezout,
    CoronaParams, CoronaVerdict, SearchBox,
};
use distring::distribution::Distribution;
use distring::error::Error;
use distring::liouville;
use distring::transform::{fl_transform, pws_bound_for, verify_pws_on_samples};
use distring::{json as dj, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

const EXIT_PASS: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "distring",
    about = "Exact distribution algebra, transforms, and corona-bound tooling"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate transforms of distributions at sample points
    Transform {
        /// distribution, as inline JSON or a path (repeatable)
        #[arg(long = "f", required = true)]
        fs: Vec<String>,
        /// sample points: JSON [[ [re,im], ... ], ...], inline or a path
        #[arg(long)]
        samples: String,
        #[arg(long, default_value_t = 128)]
        precision: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the supporting function H of (cone intersected with unit ball)
    SupportFn {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        speed: Option<String>,
        #[arg(long)]
        dimension: Option<usize>,
        /// direction, one value per coordinate
        #[arg(long, num_args = 1.., value_delimiter = ' ', allow_hyphen_values = true)]
        xi: Vec<f64>,
        #[arg(long, default_value_t = 128)]
        precision: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the weight locality, Hessian positivity, and supporting-function
    /// axiom suites on seeded random samples
    WeightCheck {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        speed: Option<String>,
        #[arg(long)]
        dimension: Option<usize>,
        /// number of random samples per suite
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 128)]
        precision: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Derive growth certificates and verify them on samples
    Pws {
        #[arg(long = "f", required = true)]
        fs: Vec<String>,
        /// optional explicit samples; default is 500 seeded points with
        /// imaginary part bounded by 10
        #[arg(long)]
        samples: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 128)]
        precision: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the corona lower bound on samples
    CoronaCheck {
        #[arg(long = "f", required = true)]
        fs: Vec<String>,
        #[arg(long = "C")]
        c: f64,
        #[arg(long = "N")]
        n: f64,
        #[arg(long = "M")]
        m: f64,
        #[arg(long)]
        cone: String,
        #[arg(long)]
        speed: Option<String>,
        #[arg(long)]
        dimension: Option<usize>,
        #[arg(long)]
        samples: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 128)]
        precision: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search a box for a rigorous violation of the corona lower bound
    CoronaSearch {
        #[arg(long = "f", required = true)]
        fs: Vec<String>,
        #[arg(long = "C")]
        c: f64,
        #[arg(long = "N")]
        n: f64,
        #[arg(long = "M")]
        m: f64,
        #[arg(long)]
        cone: String,
        #[arg(long)]
        speed: Option<String>,
        #[arg(long)]
        dimension: Option<usize>,
        /// search region as JSON {"re_lo":[..],"re_hi":[..],"im_lo":[..],"im_hi":[..]}
        #[arg(long = "box")]
        search_box: Option<String>,
        #[arg(long, default_value_t = 2_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 128)]
        precision: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify f_1*g_1 + ... + f_n*g_n = delta exactly, with a sampled cross-check
    BezoutVerify {
        #[arg(long = "f", required = true)]
        fs: Vec<String>,
        #[arg(long = "g", required = true)]
        gs: Vec<String>,
        /// also derive and report corona constants from the cofactors
        #[arg(long)]
        cone: Option<String>,
        #[arg(long)]
        speed: Option<String>,
        #[arg(long)]
        dimension: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 128)]
        precision: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact table of convergents, gap bounds, and corona ratios
    LiouvilleReport {
        #[arg(long = "C", default_value_t = 1.0)]
        c: f64,
        #[arg(long = "N", default_value_t = 1.0)]
        n: f64,
        #[arg(long = "M", default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value_t = liouville::K_CAP)]
        kmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Refute proposed corona constants with an exact-arithmetic witness
    LiouvilleRefute {
        #[arg(long = "C")]
        c: f64,
        #[arg(long = "N")]
        n: f64,
        #[arg(long = "M")]
        m: f64,
        /// orthant1 or full1 (the counterexample lives on the line)
        #[arg(long, default_value = "orthant1")]
        cone: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

/// Inline JSON if it looks like JSON, otherwise a file path.
fn load_text(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    Ok(std::fs::read_to_string(arg)?)
}

fn load_distributions(args: &[String]) -> Result<Vec<Distribution>> {
    args.iter()
        .map(|a| dj::distribution_from_str(&load_text(a)?))
        .collect()
}

fn parse_speed(speed: &Option<String>) -> Result<Rational> {
    let Some(s) = speed else {
        return Ok(Rational::from(1));
    };
    if let Ok(q) = Rational::from_str(s) {
        return Ok(q);
    }
    let x: f64 = s
        .parse()
        .map_err(|_| Error::InvalidInput(format!("cannot parse speed \"{s}\"")))?;
    Rational::from_f64(x).ok_or_else(|| Error::InvalidInput("speed must be finite".into()))
}

/// Cone flag: inline JSON, a path to JSON, or a shorthand like "orthant2",
/// "full3", "lightcone2" (trailing digits = ambient dimension; --dimension
/// also works).
fn parse_cone(arg: &str, speed: &Option<String>, dimension: Option<usize>) -> Result<Cone> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') || std::path::Path::new(trimmed).is_file() {
        return dj::cone_from_str(&load_text(trimmed)?);
    }
    let split = trimmed
        .find(|c: char| c.is_ascii_digit())
        .map(|i| trimmed.split_at(i))
        .unwrap_or((trimmed, ""));
    let kind = split.0;
    let suffix_dim: Option<usize> = if split.1.is_empty() {
        None
    } else {
        Some(split.1.parse().map_err(|_| {
            Error::InvalidInput(format!("bad dimension suffix in \"{trimmed}\""))
        })?)
    };
    let dim = suffix_dim.or(dimension);
    match kind {
        "full" => Ok(Cone::full(dim.unwrap_or(1))),
        "orthant" => Ok(Cone::orthant(dim.unwrap_or(1))),
        "lightcone" => {
            let d = dim.unwrap_or(2);
            if d < 2 {
                return Err(Error::InvalidInput(
                    "a light cone needs ambient dimension at least 2".into(),
                ));
            }
            Cone::light_cone(d - 1, parse_speed(speed)?)
        }
        other => Err(Error::InvalidInput(format!(
            "unknown cone \"{other}\" (try full, orthant, lightcone, or JSON)"
        ))),
    }
}

fn load_samples(arg: &str, prec: u32) -> Result<Vec<ComplexPoint>> {
    let v: Value = serde_json::from_str(&load_text(arg)?)?;
    dj::parse_samples(&v, prec)
}

/// Seeded uniform samples in a complex box; every stochastic subcommand
/// passes through here so a fixed seed fixes the verdict.
fn seeded_samples(
    d: usize,
    n: usize,
    seed: u64,
    re_half_width: f64,
    im_half_width: f64,
    prec: u32,
) -> Result<Vec<ComplexPoint>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let pairs: Vec<(f64, f64)> = (0..d)
                .map(|_| {
                    (
                        rng.gen_range(-re_half_width..=re_half_width),
                        rng.gen_range(-im_half_width..=im_half_width),
                    )
                })
                .collect();
            ComplexPoint::from_f64_pairs(&pairs, prec)
        })
        .collect()
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_json(v: &Value, out: &Option<PathBuf>) -> Result<()> {
    emit(&serde_json::to_string_pretty(v).expect("report is serializable"), out)
}

fn verdict_exit(v: &CoronaVerdict) -> u8 {
    match v {
        CoronaVerdict::NoViolationFoundOnSamples { .. } => EXIT_PASS,
        CoronaVerdict::ViolationAt { .. } => EXIT_VIOLATION,
        CoronaVerdict::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    }
}

fn run(cmd: Cmd) -> Result<u8> {
    match cmd {
        Cmd::Transform {
            fs,
            samples,
            precision,
            out,
        } => {
            let fs = load_distributions(&fs)?;
            let points = load_samples(&samples, precision)?;
            let mut rows = Vec::new();
            for (fi, f) in fs.iter().enumerate() {
                for z in &points {
                    let v = fl_transform(f, z)?;
                    rows.push(json!({
                        "distribution": fi,
                        "point": z.coords().iter()
                            .map(|c| [c.real().to_f64(), c.imag().to_f64()])
                            .collect::<Vec<_>>(),
                        "re": v.re().mid_f64(),
                        "im": v.im().mid_f64(),
                        "errorRadius": v.rad().to_f64(),
                    }));
                }
            }
            emit_json(&json!({"precision": precision, "values": rows}), &out)?;
            Ok(EXIT_PASS)
        }

        Cmd::SupportFn {
            cone,
            speed,
            dimension,
            xi,
            precision,
            out,
        } => {
            let cone = parse_cone(&cone, &speed, dimension)?;
            if xi.len() != cone.dimension() {
                return Err(Error::DimensionMismatch {
                    expected: cone.dimension(),
                    got: xi.len(),
                });
            }
            let h = cone.support_function(&xi)?;
            let balls: Vec<distring::RealBall> = xi
                .iter()
                .map(|&x| distring::RealBall::from_f64(x, precision))
                .collect();
            let hb = cone.support_function_ball(&balls, precision)?;
            emit_json(
                &json!({
                    "cone": dj::cone_to_json(&cone),
                    "xi": xi,
                    "value": h,
                    "ballValue": hb.mid_f64(),
                    "errorRadius": hb.rad_f64(),
                }),
                &out,
            )?;
            Ok(EXIT_PASS)
        }

        Cmd::WeightCheck {
            cone,
            speed,
            dimension,
            budget,
            seed,
            precision,
            out,
        } => {
            let cone = parse_cone(&cone, &speed, dimension)?;
            let d = cone.dimension();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);

            // locality: z in ||z|| <= 100, zeta = z + offset with ||offset|| <= 1
            let mut pairs = Vec::with_capacity(budget);
            for _ in 0..budget {
                let z: Vec<(f64, f64)> = (0..d)
                    .map(|_| (rng.gen_range(-70.0..=70.0), rng.gen_range(-70.0..=70.0)))
                    .collect();
                let scale = rng.gen_range(0.0..=1.0) / (2.0 * d as f64).sqrt();
                let zeta: Vec<(f64, f64)> = z
                    .iter()
                    .map(|&(re, im)| {
                        (
                            re + scale * rng.gen_range(-1.0..=1.0),
                            im + scale * rng.gen_range(-1.0..=1.0),
                        )
                    })
                    .collect();
                pairs.push((
                    ComplexPoint::from_f64_pairs(&z, precision)?,
                    ComplexPoint::from_f64_pairs(&zeta, precision)?,
                ));
            }
            let locality = check_weight_locality(&cone, &pairs, 0.0, 0.0)?;

            // Hessian positivity
            let mut hessian_min = f64::INFINITY;
            let mut hessian_violations = 0usize;
            for _ in 0..budget {
                let z: Vec<(f64, f64)> = (0..d)
                    .map(|_| (rng.gen_range(-10.0..=10.0), rng.gen_range(-10.0..=10.0)))
                    .collect();
                let w: Vec<(f64, f64)> = (0..d)
                    .map(|_| (rng.gen_range(-10.0..=10.0), rng.gen_range(-10.0..=10.0)))
                    .collect();
                let q = hessian_quad_form(
                    &ComplexPoint::from_f64_pairs(&z, precision)?,
                    &ComplexPoint::from_f64_pairs(&w, precision)?,
                )?;
                hessian_min = hessian_min.min(q.mid_f64());
                let scale = w.iter().map(|(a, b)| a * a + b * b).sum::<f64>();
                if q.upper().to_f64() < -1e-14 * (1.0 + scale) {
                    hessian_violations += 1;
                }
            }

            // supporting-function axioms
            let axiom_samples: Vec<(Vec<f64>, Vec<f64>, f64)> = (0..budget)
                .map(|i| {
                    let xi: Vec<f64> = (0..d).map(|_| rng.gen_range(-5.0..=5.0)).collect();
                    let eta: Vec<f64> = (0..d).map(|_| rng.gen_range(-5.0..=5.0)).collect();
                    let t = [0.0, 0.5, 2.0][i % 3];
                    (xi, eta, t)
                })
                .collect();
            let axioms = check_support_fn_axioms(&cone, &axiom_samples)?;

            let failed = !locality.violations.is_empty()
                || hessian_violations > 0
                || axioms.worst_subadditivity_violation > 1e-9
                || axioms.worst_homogeneity_violation > 1e-9;
            emit_json(
                &json!({
                    "seed": seed,
                    "cone": dj::cone_to_json(&cone),
                    "locality": locality,
                    "hessian": {
                        "checked": budget,
                        "minQuadForm": hessian_min,
                        "rigorousViolations": hessian_violations,
                    },
                    "supportFnAxioms": axioms,
                    "pass": !failed,
                }),
                &out,
            )?;
            Ok(if failed { EXIT_VIOLATION } else { EXIT_PASS })
        }

        Cmd::Pws {
            fs,
            samples,
            seed,
            precision,
            out,
        } => {
            let fs = load_distributions(&fs)?;
            let mut reports = Vec::new();
            let mut all_pass = true;
            for f in &fs {
                let bound = pws_bound_for(f)?;
                let points = match &samples {
                    Some(s) => load_samples(s, precision)?,
                    None => seeded_samples(f.dimension(), 500, seed, 50.0, 10.0, precision)?,
                };
                let report = verify_pws_on_samples(f, &bound, &points)?;
                all_pass &= report.all_pass;
                reports.push(json!({
                    "constC": bound.const_c,
                    "exponentN": bound.exponent_n,
                    "worstMargin": report.worst_margin,
                    "allPass": report.all_pass,
                    "samples": points.len(),
                }));
            }
            emit_json(&json!({"seed": seed, "bounds": reports, "pass": all_pass}), &out)?;
            Ok(if all_pass { EXIT_PASS } else { EXIT_VIOLATION })
        }

        Cmd::CoronaCheck {
            fs,
            c,
            n,
            m,
            cone,
            speed,
            dimension,
            samples,
            seed,
            precision,
            out,
        } => {
            let fs = load_distributions(&fs)?;
            let cone = parse_cone(&cone, &speed, dimension)?;
            let params = CoronaParams::from_f64s(c, n, m)?;
            let points = match &samples {
                Some(s) => load_samples(s, precision)?,
                None => seeded_samples(cone.dimension(), 200, seed, 50.0, 5.0, precision)?,
            };
            let verdict = check_corona(&fs, &params, &cone, &points)?;
            let mut v = serde_json::to_value(&verdict).expect("verdict serializes");
            v["seed"] = json!(seed);
            emit_json(&v, &out)?;
            Ok(verdict_exit(&verdict))
        }

        Cmd::CoronaSearch {
            fs,
            c,
            n,
            m,
            cone,
            speed,
            dimension,
            search_box,
            budget,
            seed,
            precision,
            out,
        } => {
            let fs = load_distributions(&fs)?;
            let cone = parse_cone(&cone, &speed, dimension)?;
            let params = CoronaParams::from_f64s(c, n, m)?;
            let bx: SearchBox = match &search_box {
                Some(s) => serde_json::from_str(&load_text(s)?)?,
                None => SearchBox {
                    re_lo: vec![-50.0; cone.dimension()],
                    re_hi: vec![50.0; cone.dimension()],
                    im_lo: vec![-5.0; cone.dimension()],
                    im_hi: vec![5.0; cone.dimension()],
                },
            };
            let verdict = search_violation(&fs, &params, &cone, &bx, budget, seed, precision)?;
            let mut v = serde_json::to_value(&verdict).expect("verdict serializes");
            v["seed"] = json!(seed);
            v["budget"] = json!(budget);
            emit_json(&v, &out)?;
            Ok(verdict_exit(&verdict))
        }

        Cmd::BezoutVerify {
            fs,
            gs,
            cone,
            speed,
            dimension,
            seed,
            precision,
            out,
        } => {
            let fs = load_distributions(&fs)?;
            let gs = load_distributions(&gs)?;
            let report = verify_bezout(&fs, &gs, seed, precision)?;
            let mut v = serde_json::to_value(&report).expect("report serializes");
            if let Some(cone_arg) = &cone {
                let cone = parse_cone(cone_arg, &speed, dimension)?;
                let params = necessity_bound(&gs, &cone)?;
                v["derivedParams"] = json!({
                    "constC": params.const_c.to_f64(),
                    "exponentN": params.exponent_n.to_f64(),
                    "coneScaleM": params.cone_scale_m.to_f64(),
                });
            }
            emit_json(&v, &out)?;
            Ok(if report.holds() { EXIT_PASS } else { EXIT_VIOLATION })
        }

        Cmd::LiouvilleReport {
            c,
            n,
            m,
            kmax,
            format,
            out,
        } => {
            let params = CoronaParams::from_f64s(c, n, m)?;
            let rows = liouville::report(kmax, &params, 2)?;
            match format {
                Format::Json => {
                    let v = json!({
                        "params": {"C": c, "N": n, "M": m},
                        "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                    });
                    emit_json(&v, &out)?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(liouville::LiouvilleRow::csv_header())
                        .map_err(|e| Error::InvalidInput(e.to_string()))?;
                    for r in &rows {
                        w.write_record(r.csv_record())
                            .map_err(|e| Error::InvalidInput(e.to_string()))?;
                    }
                    let data = w
                        .into_inner()
                        .map_err(|e| Error::InvalidInput(e.to_string()))?;
                    emit(&String::from_utf8_lossy(&data), &out)?;
                }
            }
            Ok(EXIT_PASS)
        }

        Cmd::LiouvilleRefute { c, n, m, cone, out } => {
            // the counterexample is stated on the line; both admissible cones
            // give e^{-M H} = 1 at the real test points
            let cone = parse_cone(&cone, &None, None)?;
            match cone {
                Cone::Orthant { dim: 1 } | Cone::FullSpace { dim: 1 } => {}
                _ => {
                    return Err(Error::InvalidInput(
                        "refutation is defined on orthant1 or full1".into(),
                    ))
                }
            }
            let params = CoronaParams::from_f64s(c, n, m)?;
            match liouville::refute_params(&params) {
                Ok(r) => {
                    emit_json(
                        &json!({
                            "K": r.k,
                            "qK": r.q_k.to_string(),
                            "testPoint": format!("2*pi*{}", r.q_k),
                            "ratioUpper": r.ratio_upper.to_string(),
                            "ratioUpperApprox": format!("{:.6e}", r.ratio_upper.to_f64()),
                            "verdict": "rigorous violation of the lower bound",
                        }),
                        &out,
                    )?;
                    Ok(EXIT_VIOLATION)
                }
                Err(Error::CapExceeded { estimate, cap, .. }) => {
                    emit_json(
                        &json!({
                            "verdict": "inconclusive",
                            "reason": format!("no K <= {cap} refutes these constants"),
                            "estimate": estimate,
                        }),
                        &out,
                    )?;
                    Ok(EXIT_INCONCLUSIVE)
                }
                Err(e) => Err(e),
            }
        }
    }
}
