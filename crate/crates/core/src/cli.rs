//! The `rzdet` command-line tool.
//!
//! Every subcommand writes one JSON document (to stdout or `--out`) holding
//! the tool version, an echo of the configuration and the result. Exit
//! codes: 0 pass, 1 fail (with witness), 2 inconclusive, 3 bad input.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{construct, ConstructOptions, InterlacerSpec};
use crate::corpus;
use crate::error::{Error, Result};
use crate::interlace::{interlaces_sampled, psd_interlacing_check};
use crate::pencil::io::{parse_pencil_json, pencil_to_json_value, PencilFile};
use crate::pencil::{cauchy_cross_check, realify, verify_lmi, MatrixPencil};
use crate::poly::io::{parse_auto, to_json_value, PolyFile};
use crate::poly::{HomogeneousPolynomial, Polynomial};
use crate::report::Status;
use crate::rz::{hermite_matrix, hermite_psd_check, is_rz_sampled, renegar_derivative, MembershipOracle};
use crate::sampling::{in_box, stream, with_threads};
use crate::scalar::{parse_rational, CoeffMode, GaussRational, Scalar};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(Debug, Parser)]
#[command(name = "rzdet", version, about = "Real-zero polynomials, interlacers and determinantal representations")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args, Serialize)]
pub struct RunConfig {
    /// Arithmetic: exact (Gaussian rationals) or float. Defaults to the mode
    /// of the input files.
    #[arg(long, value_enum, global = true)]
    pub mode: Option<ModeArg>,
    #[arg(long, default_value_t = 1e-9, global = true)]
    pub tol: f64,
    /// Sample points for verification checks.
    #[arg(long, default_value_t = 200, global = true)]
    pub samples: usize,
    /// Random lines for sampled line tests.
    #[arg(long, default_value_t = 200, global = true)]
    pub lines: usize,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    #[serde(skip)]
    pub threads: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<String>,
    /// Print a one-line summary to stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    #[serde(skip)]
    pub verbose: u8,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Sampled real-zero test along random lines through the point.
    RzCheck(PolyArgs),
    /// Hermite matrix and a sampled PSD check.
    Hermite(PolyArgs),
    /// Renegar derivative of order k.
    Renegar {
        #[command(flatten)]
        input: PolyArgs,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Membership of a point in the rigidly convex region.
    Member {
        #[command(flatten)]
        input: PolyArgs,
        /// The query point, comma separated.
        #[arg(long)]
        x: String,
    },
    /// Interlacing tests of Q (default: derivative in the direction of the point).
    Interlace {
        #[command(flatten)]
        input: PolyArgs,
        /// Interlacer polynomial file, in the affine variables.
        #[arg(long)]
        q: Option<String>,
    },
    /// Determinantal representation of a plane polynomial.
    Construct {
        #[command(flatten)]
        input: PolyArgs,
        /// Interlacer polynomial file, in the affine variables.
        #[arg(long)]
        interlacer: Option<String>,
        /// Use the derivative in the direction of this point as interlacer.
        #[arg(long)]
        derivative_at: Option<String>,
        #[arg(long, default_value_t = 5)]
        retries: usize,
    },
    /// Check that a pencil represents a polynomial.
    Verify(PencilArgs),
    /// Diagonal cofactors of a pencil against its base-point definiteness.
    CrossCheck(PencilArgs),
    /// Real symmetric double of a hermitian pencil.
    Realify {
        /// Pencil file (or `-`).
        #[arg(long, default_value = "-")]
        pencil: String,
    },
    /// Named polynomials.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PolyArgs {
    /// Polynomial file, JSON or text (`-` for stdin).
    #[arg(long, default_value = "-")]
    pub poly: String,
    /// Base point, comma separated (default: the origin).
    #[arg(long)]
    pub point: Option<String>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PencilArgs {
    /// Pencil JSON, or a `construct` report (`-` for stdin).
    #[arg(long, default_value = "-")]
    pub pencil: String,
    /// Polynomial file; optional when the pencil input is a construct report.
    #[arg(long)]
    pub poly: Option<String>,
    #[arg(long)]
    pub point: Option<String>,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusAction {
    /// List instance names.
    List,
    /// Write an instance as polynomial JSON.
    Emit {
        name: String,
        /// Emit the generating pencil instead, when there is one.
        #[arg(long)]
        pencil: bool,
    },
}

/// What a subcommand produced.
struct Outcome {
    status: Status,
    body: Value,
    /// Written verbatim instead of the standard envelope.
    raw: bool,
}

impl Outcome {
    fn new(status: Status, body: Value) -> Self {
        Outcome { status, body, raw: false }
    }
}

/// Usage problems: exit 3.
fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::DimensionMismatch { .. }
            | Error::Precondition(_)
            | Error::VanishesAtBasePoint
            | Error::ZeroPolynomial
            | Error::ZeroPoint
            | Error::OutOfRange { .. }
            | Error::NotSquare { .. }
            | Error::DegreeMismatch(_)
    )
}

/// Input reader; `-` names the standard input, read once up front.
struct Io {
    stdin: Option<String>,
}

impl Io {
    fn read(&self, path: &str) -> Result<String> {
        if path == "-" {
            self.stdin
                .clone()
                .ok_or_else(|| Error::Precondition("no data on stdin".into()))
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("reading {path}: {e}")))
        }
    }
}

fn parse_point(s: &str) -> Result<Vec<GaussRational>> {
    s.split(',')
        .map(|t| {
            parse_rational(t)
                .map(GaussRational::real)
                .ok_or_else(|| Error::Precondition(format!("bad coordinate `{t}` in point `{s}`")))
        })
        .collect()
}

fn point_or_origin(s: Option<&str>, d: usize) -> Result<Vec<GaussRational>> {
    let p = match s {
        Some(s) => parse_point(s)?,
        None => vec![GaussRational::zero(); d],
    };
    if p.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: p.len() });
    }
    Ok(p)
}

fn resolve_mode(flag: Option<ModeArg>, files: &[CoeffMode]) -> ModeArg {
    flag.unwrap_or(if files.iter().all(|m| *m == CoeffMode::Rational) {
        ModeArg::Exact
    } else {
        ModeArg::Float
    })
}

fn convert_point<S: Scalar>(x: &[GaussRational]) -> Vec<S> {
    x.iter().map(|c| S::from_parts(c.re.clone(), c.im.clone())).collect()
}

fn point_json<S: Scalar>(x: &[S]) -> Value {
    Value::Array(
        x.iter()
            .map(|c| crate::poly::io::coeff_json(c, |g| &g.re, |z| z.re))
            .collect(),
    )
}

fn point_from_json(v: &Value) -> Option<Vec<GaussRational>> {
    v.as_array()?
        .iter()
        .map(|c| crate::poly::io::json_number(c).map(GaussRational::real))
        .collect()
}

/// Pencil, and what a construct report says about its source.
struct PencilInput {
    file: PencilFile,
    poly: Option<PolyFile>,
    point: Option<Vec<GaussRational>>,
}

fn read_pencil_input(io: &Io, path: &str) -> Result<PencilInput> {
    let src = io.read(path)?;
    let value: Value = serde_json::from_str(&src).map_err(|e| crate::poly::io::perr(e.line(), e.column(), e.to_string()))?;
    let value = match value.get("result") {
        Some(r) if r.get("pencil").is_some() => r.clone(),
        _ => value,
    };
    if let Some(p) = value.get("pencil") {
        let file = parse_pencil_json(&p.to_string())?;
        let poly = match value.get("poly") {
            Some(v) => Some(crate::poly::io::parse_json(&v.to_string())?),
            None => None,
        };
        let point = value.get("point").and_then(point_from_json);
        Ok(PencilInput { file, poly, point })
    } else {
        Ok(PencilInput {
            file: parse_pencil_json(&src)?,
            poly: None,
            point: None,
        })
    }
}

fn homogenized<S: Scalar>(q: &Polynomial<S>) -> Result<HomogeneousPolynomial<S>> {
    HomogeneousPolynomial::homogenize(q, q.degree().unwrap_or(0))
}

fn base<S: Scalar>(x0: &[S]) -> Vec<S> {
    let mut v = vec![S::one()];
    v.extend_from_slice(x0);
    v
}

fn poly_arg<S: Scalar>(io: &Io, args: &PolyArgs) -> Result<(Polynomial<S>, Vec<S>)> {
    let file = parse_auto(&io.read(&args.poly)?)?;
    let p: Polynomial<S> = file.to_poly();
    let x0 = point_or_origin(args.point.as_deref(), p.nvars())?;
    Ok((p, convert_point(&x0)))
}

fn run_poly_command<S: Scalar>(cmd: &Command, cfg: &RunConfig, io: &Io) -> Result<Outcome> {
    match cmd {
        Command::RzCheck(args) => {
            let (p, x0) = poly_arg::<S>(io, args)?;
            let v = is_rz_sampled(&p, &x0, cfg.lines, cfg.tol, cfg.seed)?;
            Ok(Outcome::new(v.status.status(), serde_json::to_value(&v).unwrap()))
        }
        Command::Hermite(args) => {
            let (p, x0) = poly_arg::<S>(io, args)?;
            let h = hermite_matrix(&p, &x0)?;
            let report = hermite_psd_check(&h, cfg.samples, cfg.tol, cfg.seed);
            let m = h.matrix.rows();
            let entries: Vec<Vec<Value>> = (0..m)
                .map(|i| (0..m).map(|j| to_json_value(h.matrix.get(i, j))).collect())
                .collect();
            Ok(Outcome::new(
                report.status,
                json!({"degree": h.degree, "matrix": entries, "psd": report}),
            ))
        }
        Command::Renegar { input, k } => {
            let (p, x0) = poly_arg::<S>(io, input)?;
            let (q, vanished) = renegar_derivative(&p, &x0, *k)?;
            Ok(Outcome::new(
                Status::Pass,
                json!({"k": k, "vanishes": vanished, "derivative": to_json_value(&q)}),
            ))
        }
        Command::Member { input, x } => {
            let (p, x0) = poly_arg::<S>(io, input)?;
            let xs: Vec<f64> = parse_point(x)?.iter().map(|c| c.to_c64().re).collect();
            if xs.len() != p.nvars() {
                return Err(Error::DimensionMismatch { expected: p.nvars(), got: xs.len() });
            }
            let oracle = MembershipOracle::new(&p, &x0)?;
            let inside = oracle.contains(&xs, cfg.tol);
            Ok(Outcome::new(
                if inside { Status::Pass } else { Status::Fail },
                json!({"x": xs, "member": inside, "levels": oracle.values(&xs)}),
            ))
        }
        Command::Interlace { input, q } => {
            let (p, x0) = poly_arg::<S>(io, input)?;
            let m = p.degree().unwrap_or(0);
            let hp = HomogeneousPolynomial::homogenize(&p, m)?;
            let qf = match q {
                Some(path) => {
                    let q: Polynomial<S> = parse_auto(&io.read(path)?)?.to_poly();
                    if q.nvars() != p.nvars() {
                        return Err(Error::DimensionMismatch { expected: p.nvars(), got: q.nvars() });
                    }
                    homogenized(&q)?
                }
                None => hp.directional_derivative(&base(&x0))?.0,
            };
            let sampled = interlaces_sampled(&hp, &qf, &x0, cfg.lines, cfg.tol, cfg.seed);
            let sampled = match sampled {
                Err(Error::NotRelativelyPrime) => {
                    return Ok(Outcome::new(
                        Status::Fail,
                        json!({"interlacer": to_json_value(&qf.dehomogenize()), "error": "P and Q share a factor"}),
                    ))
                }
                r => r?,
            };
            let psd = psd_interlacing_check(&hp, &qf, &x0, cfg.samples, cfg.tol, cfg.seed)?;
            let agree = sampled.status == psd.status;
            let status = if agree { sampled.status } else { Status::Inconclusive };
            Ok(Outcome::new(
                status,
                json!({
                    "interlacer": to_json_value(&qf.dehomogenize()),
                    "sampled": sampled,
                    "bezoutiant": psd,
                    "agree": agree,
                }),
            ))
        }
        Command::Construct {
            input,
            interlacer,
            derivative_at,
            retries,
        } => {
            let (p, x0) = poly_arg::<S>(io, input)?;
            let spec = match (interlacer, derivative_at) {
                (Some(_), Some(_)) => {
                    return Err(Error::Precondition("give either --interlacer or --derivative-at".into()))
                }
                (Some(path), None) => {
                    let q: Polynomial<S> = parse_auto(&io.read(path)?)?.to_poly();
                    InterlacerSpec::Explicit(homogenized(&q)?)
                }
                (None, Some(pt)) => InterlacerSpec::DerivativeAt(Some(convert_point(&point_or_origin(Some(pt), 2)?))),
                (None, None) => InterlacerSpec::DerivativeAt(None),
            };
            let opts = ConstructOptions {
                seed: cfg.seed,
                tol: cfg.tol,
                rz_lines: cfg.lines,
                verify_samples: cfg.samples,
                max_retries: *retries,
            };
            match construct(&p, &x0, &spec, &opts) {
                Ok((pencil, trace)) => Ok(Outcome::new(
                    Status::Pass,
                    json!({
                        "poly": to_json_value(&p),
                        "point": point_json(&x0),
                        "pencil": pencil_to_json_value(&pencil),
                        "trace": trace.to_json(),
                    }),
                )),
                Err(Error::Stage { stage, attempts, source }) if !is_input_error(&source) => Ok(Outcome::new(
                    Status::Fail,
                    json!({
                        "poly": to_json_value(&p),
                        "point": point_json(&x0),
                        "error": {"stage": stage, "attempts": attempts, "message": source.to_string()},
                    }),
                )),
                Err(Error::Stage { source, .. }) => Err(*source),
                Err(e) => Err(e),
            }
        }
        _ => unreachable!("not a polynomial command"),
    }
}

fn run_pencil_command<S: Scalar>(
    cmd: &Command,
    cfg: &RunConfig,
    input: PencilInput,
    poly: Option<PolyFile>,
    point: Option<Vec<GaussRational>>,
) -> Result<Outcome> {
    let pencil: MatrixPencil<S> = input.file.to_pencil();
    let need_poly = || Error::Precondition("a polynomial is required (--poly, or a construct report)".into());
    match cmd {
        Command::Verify(_) => {
            let p: Polynomial<S> = poly.ok_or_else(need_poly)?.to_poly();
            let x0: Vec<S> = convert_point(&point_or_origin_vec(point, p.nvars())?);
            let report = verify_lmi(&pencil, &p, &x0, cfg.tol, cfg.samples, cfg.seed)?;
            Ok(Outcome::new(report.status, serde_json::to_value(&report).unwrap()))
        }
        Command::CrossCheck(_) => {
            let p: Polynomial<S> = poly.ok_or_else(need_poly)?.to_poly();
            let x0: Vec<S> = convert_point(&point_or_origin_vec(point, p.nvars())?);
            let report = cauchy_cross_check(&pencil, &p, &x0, cfg.lines, cfg.tol, cfg.seed)?;
            Ok(Outcome::new(report.report.status, serde_json::to_value(&report).unwrap()))
        }
        Command::Realify { .. } => {
            let real = realify(&pencil)?;
            let d = pencil.dim();
            let mut worst: f64 = 0.0;
            for k in 0..cfg.samples {
                let mut rng = stream(cfg.seed, k as u64);
                let x = in_box(&mut rng, &vec![0.0; d], 1.0);
                let a = pencil.eval_f64(&x).determinant();
                let b = real.eval_f64(&x).determinant();
                let want = a * a.conj();
                worst = worst.max((b - want).norm() / want.norm().max(1.0));
            }
            let status = if worst <= 1e-10 { Status::Pass } else { Status::Fail };
            Ok(Outcome::new(
                status,
                json!({
                    "pencil": pencil_to_json_value(&real),
                    "det_square_residual": worst,
                    "samples": cfg.samples,
                }),
            ))
        }
        _ => unreachable!("not a pencil command"),
    }
}

fn point_or_origin_vec(p: Option<Vec<GaussRational>>, d: usize) -> Result<Vec<GaussRational>> {
    let p = p.unwrap_or_else(|| vec![GaussRational::zero(); d]);
    if p.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: p.len() });
    }
    Ok(p)
}

fn run_corpus(action: &CorpusAction) -> Result<Outcome> {
    match action {
        CorpusAction::List => {
            let instances: Vec<Value> = corpus::standard().iter().map(|i| i.summary_json()).collect();
            Ok(Outcome::new(
                Status::Pass,
                json!({"names": corpus::names(), "instances": instances}),
            ))
        }
        CorpusAction::Emit { name, pencil } => {
            let inst = corpus::by_name(name)?;
            let body = if *pencil {
                let p = inst
                    .pencil
                    .as_ref()
                    .ok_or_else(|| Error::Precondition(format!("`{name}` has no generating pencil")))?;
                match inst.mode {
                    CoeffMode::Rational => pencil_to_json_value(p),
                    CoeffMode::Float => pencil_to_json_value(&p.convert::<Complex64>()),
                }
            } else {
                inst.poly_json()
            };
            Ok(Outcome {
                status: Status::Pass,
                body,
                raw: true,
            })
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::RzCheck(_) => "rz-check",
        Command::Hermite(_) => "hermite",
        Command::Renegar { .. } => "renegar",
        Command::Member { .. } => "member",
        Command::Interlace { .. } => "interlace",
        Command::Construct { .. } => "construct",
        Command::Verify(_) => "verify",
        Command::CrossCheck(_) => "cross-check",
        Command::Realify { .. } => "realify",
        Command::Corpus { .. } => "corpus",
    }
}

fn dispatch(cli: &Cli, io: &Io) -> Result<(Outcome, Option<ModeArg>)> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Corpus { action } => Ok((run_corpus(action)?, None)),
        cmd @ (Command::Verify(PencilArgs { pencil, poly, point })
        | Command::CrossCheck(PencilArgs { pencil, poly, point })) => {
            let input = read_pencil_input(io, pencil)?;
            let poly_file = match poly {
                Some(path) => Some(parse_auto(&io.read(path)?)?),
                None => input.poly.clone(),
            };
            let pt = match point {
                Some(s) => Some(parse_point(s)?),
                None => input.point.clone(),
            };
            let mut modes = vec![input.file.mode];
            modes.extend(poly_file.as_ref().map(|f| f.mode));
            let mode = resolve_mode(cfg.mode, &modes);
            let out = match mode {
                ModeArg::Exact => run_pencil_command::<GaussRational>(cmd, cfg, input, poly_file, pt)?,
                ModeArg::Float => run_pencil_command::<Complex64>(cmd, cfg, input, poly_file, pt)?,
            };
            Ok((out, Some(mode)))
        }
        cmd @ Command::Realify { pencil } => {
            let input = read_pencil_input(io, pencil)?;
            let mode = resolve_mode(cfg.mode, &[input.file.mode]);
            let out = match mode {
                ModeArg::Exact => run_pencil_command::<GaussRational>(cmd, cfg, input, None, None)?,
                ModeArg::Float => run_pencil_command::<Complex64>(cmd, cfg, input, None, None)?,
            };
            Ok((out, Some(mode)))
        }
        cmd => {
            let args = poly_args(cmd).expect("polynomial command");
            let file_mode = parse_auto(&io.read(&args.poly)?)?.mode;
            let mode = resolve_mode(cfg.mode, &[file_mode]);
            let out = match mode {
                ModeArg::Exact => run_poly_command::<GaussRational>(cmd, cfg, io)?,
                ModeArg::Float => run_poly_command::<Complex64>(cmd, cfg, io)?,
            };
            Ok((out, Some(mode)))
        }
    }
}

fn poly_args(cmd: &Command) -> Option<&PolyArgs> {
    match cmd {
        Command::RzCheck(a) | Command::Hermite(a) => Some(a),
        Command::Renegar { input, .. }
        | Command::Member { input, .. }
        | Command::Interlace { input, .. }
        | Command::Construct { input, .. } => Some(input),
        _ => None,
    }
}

/// Every input path given on the command line.
fn input_paths(cmd: &Command) -> Vec<&str> {
    let mut out = Vec::new();
    if let Some(a) = poly_args(cmd) {
        out.push(a.poly.as_str());
    }
    match cmd {
        Command::Interlace { q: Some(p), .. } | Command::Construct { interlacer: Some(p), .. } => out.push(p),
        Command::Verify(a) | Command::CrossCheck(a) => {
            out.push(&a.pencil);
            out.extend(a.poly.as_deref());
        }
        Command::Realify { pencil } => out.push(pencil),
        _ => {}
    }
    out
}

fn envelope(cli: &Cli, mode: Option<ModeArg>, outcome: &Outcome) -> Value {
    let mut config = serde_json::to_value(&cli.config).unwrap();
    config["mode"] = serde_json::to_value(mode).unwrap();
    json!({
        "tool": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
        "command": command_name(&cli.command),
        "args": serde_json::to_value(&cli.command).unwrap(),
        "config": config,
        "status": outcome.status,
        "result": outcome.body,
    })
}

fn emit(cli: &Cli, text: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &cli.config.out {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

/// Run the tool with explicit streams and return the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_PASS;
        }
    };
    let mut io = Io { stdin: None };
    if input_paths(&cli.command).contains(&"-") {
        let mut buf = String::new();
        if let Err(e) = stdin.read_to_string(&mut buf) {
            let _ = writeln!(stderr, "error: reading stdin: {e}");
            return EXIT_USAGE;
        }
        io.stdin = Some(buf);
    }
    let result = with_threads(cli.config.threads, || dispatch(&cli, &io));
    let (outcome, mode) = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return if is_input_error(&e) { EXIT_USAGE } else { EXIT_FAIL };
        }
    };
    let value = if outcome.raw {
        outcome.body.clone()
    } else {
        envelope(&cli, mode, &outcome)
    };
    let text = serde_json::to_string_pretty(&value).unwrap() + "\n";
    if let Err(e) = emit(&cli, &text, stdout) {
        let _ = writeln!(stderr, "error: writing output: {e}");
        return EXIT_USAGE;
    }
    if cli.config.verbose > 0 {
        let _ = writeln!(stderr, "{}: {:?}", command_name(&cli.command), outcome.status);
    }
    outcome.status.exit_code()
}

/// Entry point of the `rzdet` binary.
pub fn main() -> i32 {
    run(
        std::env::args_os(),
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
