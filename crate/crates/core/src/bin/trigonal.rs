use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};

use trigonal::algebra::ExactScalar;
use trigonal::curves::{generate_degy3, generate_on_scroll, generate_resultant, fmt_point, CanonicalCurve, ProjPoint};
use trigonal::error::{Error, Result};
use trigonal::format::{parse_curve_file, parse_poly, write_canonical_curve, write_plane_curve, CurveFile};
use trigonal::pipeline::{classify_canonical, ClassificationResult, ClassifyOptions};
use trigonal::radical::radical_parametrization;
use trigonal::selftest::{run_suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "trigonal", version, about = "Detect trigonal curves and compute their trigonal maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Permit results defined over a quadratic extension.
    #[arg(long, global = true, action = ArgAction::Set, num_args = 0..=1, default_value_t = true, default_missing_value = "true")]
    allow_extension: bool,
    /// Rational point `p0,p1,p2` on a genus-3 plane quartic.
    #[arg(long, global = true, value_parser = parse_point)]
    point: Option<ProjPoint>,
    /// Bound for the conic point search.
    #[arg(long, global = true, default_value_t = trigonal::sl2::DEFAULT_SEARCH_BOUND)]
    search_bound: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the classification as `key: value` lines.
    Classify { file: PathBuf },
    /// Print the two components of the trigonal map.
    Map { file: PathBuf },
    /// Print a radical parametrization of the curve.
    Radical { file: PathBuf },
    /// Write a random trigonal curve.
    Generate {
        #[arg(long, value_enum)]
        method: Method,
        /// x-degree for degy3, degree of the cubic's coefficients for resultant.
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 3)]
        height: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Scroll parameters `m,n` for the scroll method.
        #[arg(long, value_parser = parse_params, default_value = "2,1")]
        params: (u32, u32),
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Reduced instance counts.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Degy3,
    Resultant,
    Scroll,
}

fn parse_point(s: &str) -> std::result::Result<ProjPoint, String> {
    let coords: Vec<ExactScalar> = s
        .split(',')
        .map(|c| parse_poly(c, &["$"]).and_then(|p| p.constant_value().ok_or_else(|| "coordinate is not a constant".into())))
        .collect::<std::result::Result<_, _>>()?;
    if coords.len() != 3 || coords.iter().all(ExactScalar::is_zero) {
        return Err("expected three coordinates, not all zero".into());
    }
    Ok(coords)
}

fn parse_params(s: &str) -> std::result::Result<(u32, u32), String> {
    let (m, n) = s.split_once(',').ok_or("expected m,n")?;
    let m = m.trim().parse().map_err(|_| "m is not a number")?;
    let n = n.trim().parse().map_err(|_| "n is not a number")?;
    Ok((m, n))
}

fn load(path: &Path) -> Result<CurveFile> {
    parse_curve_file(&fs::read_to_string(path)?)
}

fn to_canonical(input: &CurveFile) -> Result<CanonicalCurve> {
    match input {
        CurveFile::Plane(c) => trigonal::curves::canonical_system(c),
        CurveFile::Canonical(k) => Ok(k.clone()),
    }
}

fn classify(path: &Path, opts: &ClassifyOptions) -> Result<(CanonicalCurve, ClassificationResult)> {
    let k = to_canonical(&load(path)?)?;
    let res = classify_canonical(&k, opts)?;
    Ok((k, res))
}

fn map_of(res: &ClassificationResult) -> Result<&(trigonal::algebra::MultiPoly, trigonal::algebra::MultiPoly)> {
    res.trigonal_map
        .as_ref()
        .ok_or_else(|| Error::Unsupported(format!("curve is not trigonal (case {})", res.case)))
}

fn run(cli: Cli) -> Result<String> {
    let opts = ClassifyOptions { search_bound: cli.search_bound, allow_extension: cli.allow_extension, point: cli.point };
    match cli.command {
        Command::Classify { file } => Ok(classify(&file, &opts)?.1.report()),
        Command::Map { file } => {
            let (k, res) = classify(&file, &opts)?;
            let (p, q) = map_of(&res)?;
            let names: Vec<String> = match k.source() {
                Some(_) => ["x", "y", "z"].map(String::from).to_vec(),
                None => (0..=k.ambient_dim).map(|i| format!("x{i}")).collect(),
            };
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let mut out = format!("p = {}\nq = {}\n", p.fmt_with(&refs), q.fmt_with(&refs));
            if let Some(pt) = &res.base_point {
                out.push_str(&format!("point: {}\n", fmt_point(pt)));
            }
            Ok(out)
        }
        Command::Radical { file } => {
            let (k, res) = classify(&file, &opts)?;
            let map = map_of(&res)?;
            let src = k.source().ok_or_else(|| Error::Unsupported("radical parametrization needs a plane model".into()))?;
            let rp = radical_parametrization(src, map)?;
            let xyz = ["x", "y", "z"];
            Ok(format!("t = ({}) / ({})\nx = {}\ny = {}\n", map.0.fmt_with(&xyz), map.1.fmt_with(&xyz), rp.x, rp.y))
        }
        Command::Generate { method, degree, height, seed, params, out } => {
            let text = match method {
                Method::Degy3 => write_plane_curve(&generate_degy3(degree, height, seed)?.0),
                Method::Resultant => write_plane_curve(&generate_resultant(degree, height, seed)?.0),
                Method::Scroll => write_canonical_curve(&generate_on_scroll(params.0, params.1, height, seed)?.0),
            };
            match out {
                Some(path) => {
                    fs::write(path, text)?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Selftest { quick } => {
            let cfg = if quick { SuiteConfig::quick() } else { SuiteConfig::full() };
            let reports = run_suite(&cfg, |r| println!("{r}"));
            let failed = reports.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                return Err(Error::Unsupported(format!("{failed} criterion(s) failed")));
            }
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
