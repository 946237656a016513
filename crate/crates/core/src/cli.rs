//! Command-line front end. Every subcommand produces a [`CommandResult`]
//! whose payload is rendered either as `key: value` lines or as JSON.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::ehrhart::{
    count_points, dilation_check, ehrhart_data, h1_hd_check, quasi_check, rational_ehrhart, LatticePolytope,
    PolytopeFile, RationalPolytope,
};
use crate::error::{Error, Result};
use crate::eulerian::{a_limit_deviation, a_limit_deviation_shifted, eulerian, veronese_limit_deviation};
use crate::optimality::{double_root_witness, nonreal_witness, WitnessOutcome};
use crate::poly::{parse_rational, Polynomial, Rational};
use crate::realroots::{
    classify_real_rooted, default_eps, interlaces, isolate_real_roots, mutual_interlacing, Verdict,
};
use crate::sections::section;
use crate::veronese::{
    a_family_recursive, a_poly, veronese_all_paths, veronese_numerator, veronese_numerator_by,
    veronese_numerator_lincomb, Method, VeroneseParams,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_INVARIANT: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "veronese", version, about = "Exact Veronese transforms and real-rootedness certificates")]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The r-section f^<r,i>.
    Section {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(short = 'r', long = "r")]
        r: usize,
        #[arg(short = 'i', long = "i")]
        i: usize,
    },
    /// The polynomial a_d^<r,i>.
    Apoly {
        #[arg(short = 'd', long = "d")]
        d: usize,
        #[arg(short = 'r', long = "r")]
        r: usize,
        #[arg(short = 'i', long = "i")]
        i: usize,
        /// Build through the interlacing-preserving recursion.
        #[arg(long)]
        recursive: bool,
    },
    /// The transform U_{r,i}^d h.
    Veronese {
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(short = 'd', long = "d")]
        d: usize,
        #[arg(short = 'r', long = "r")]
        r: usize,
        #[arg(short = 'i', long = "i")]
        i: usize,
        /// hecke, linear, lincomb or all.
        #[arg(long, default_value = "hecke")]
        method: String,
    },
    /// Real-root classification and isolation.
    Roots {
        #[command(subcommand)]
        command: RootsCommand,
    },
    /// Whether g interlaces f.
    Interlace {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Mutual interlacing of a `;`-separated list.
    Mutual {
        #[arg(long, allow_hyphen_values = true)]
        list: String,
    },
    /// The Eulerian polynomial A_k.
    Eulerian {
        #[arg(short = 'k', long = "k")]
        k: usize,
    },
    /// Distance of scaled a-polynomials or transforms from their limit.
    Limits {
        #[arg(short = 'd', long = "d")]
        d: usize,
        #[arg(short = 'i', long = "i")]
        i: usize,
        #[arg(short = 'r', long = "r")]
        r: usize,
        /// Measure U_{r,i}^d h instead of a_d^<r,i>.
        #[arg(long, allow_hyphen_values = true)]
        h: Option<String>,
        /// Measure t a_d^<r,r-i> instead (requires i >= 1).
        #[arg(long, conflicts_with = "h")]
        shifted: bool,
    },
    /// Lattice-point counts and h*-polynomials.
    Ehrhart {
        #[command(subcommand)]
        command: EhrhartCommand,
    },
    /// Tightness witnesses for the bounds on r.
    Optimality {
        #[command(subcommand)]
        command: OptimalityCommand,
    },
    /// Reproduce the reference examples and report pass/fail.
    PaperExamples,
}

#[derive(Debug, Subcommand)]
pub enum RootsCommand {
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    Isolate {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Maximal interval width, a rational `p` or `p/q`.
        #[arg(long)]
        eps: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct PolytopeArg {
    /// JSON or TOML polytope description.
    #[arg(long)]
    pub polytope: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum EhrhartCommand {
    /// |nP ∩ Z^m| (or of nP - v when the file has a shift).
    Count {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[arg(short = 'n', long = "n")]
        n: u64,
    },
    /// Counts, Ehrhart polynomial and h* of a lattice polytope.
    Hstar {
        #[command(flatten)]
        polytope: PolytopeArg,
    },
    /// h*(rP) through the transform against a fresh recount.
    DilateCheck {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[arg(short = 'r', long = "r", default_value_t = 2)]
        r: u64,
    },
    /// Quasi-period numerator of a rational polytope and its dilated constituents.
    Quasi {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[arg(short = 'r', long = "r", default_value_t = 1)]
        r: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum OptimalityCommand {
    Witness {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        i: usize,
        /// nonreal or double.
        #[arg(long)]
        mode: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_message: Option<String>,
}

/// A finished invocation: the result, the process exit code and the text
/// that should be written (to stdout when `exit_code == 0`, else stderr
/// unless JSON output was requested).
#[derive(Clone, Debug)]
pub struct Outcome {
    pub result: CommandResult,
    pub exit_code: i32,
    pub rendered: String,
    pub json: bool,
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Invariant(_) | Error::Interpolation { .. } => EXIT_INVARIANT,
        _ => EXIT_PRECONDITION,
    }
}

fn parse_poly(param: &str, text: &str) -> Result<Polynomial> {
    text.parse::<Polynomial>().map_err(|e| Error::Parse {
        what: format!("--{param}"),
        detail: e.to_string(),
    })
}

fn load_polytope(arg: &PolytopeArg) -> Result<PolytopeFile> {
    PolytopeFile::load(&arg.polytope).map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::Parse {
            what: format!("--polytope {}", arg.polytope.display()),
            detail: other.to_string(),
        },
    })
}

fn poly_value(p: &Polynomial) -> Value {
    Value::String(p.to_string())
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable payload")
}

fn execute(command: &Command) -> Result<Value> {
    match command {
        Command::Section { f, r, i } => {
            let f = parse_poly("f", f)?;
            Ok(json!({ "section": poly_value(&section(&f, *r, *i)?) }))
        }
        Command::Apoly { d, r, i, recursive } => {
            let p = if *recursive {
                VeroneseParams::new(*d, *r, *i)?;
                a_family_recursive(*d, *r)?.swap_remove(*i)
            } else {
                a_poly(*d, *r, *i)?
            };
            Ok(json!({ "a": poly_value(&p), "recursive": recursive }))
        }
        Command::Veronese { h, d, r, i, method } => {
            let h = parse_poly("h", h)?;
            let params = VeroneseParams::new(*d, *r, *i)?;
            if method == "all" {
                let paths = veronese_all_paths(&h, params);
                if !paths.agree() {
                    return Err(Error::Invariant(format!(
                        "transform paths disagree: hecke {}, linear {}, lincomb {:?}",
                        paths.hecke, paths.linear, paths.lincomb
                    )));
                }
                Ok(json!({
                    "transform": poly_value(&paths.hecke),
                    "hecke": poly_value(&paths.hecke),
                    "linear": poly_value(&paths.linear),
                    "lincomb": paths.lincomb.as_ref().map(poly_value),
                    "paths_agree": true,
                }))
            } else {
                let method: Method = method.parse().map_err(|e: Error| Error::Parse {
                    what: "--method".into(),
                    detail: e.to_string(),
                })?;
                let u = veronese_numerator_by(&h, params, method)?;
                Ok(json!({ "transform": poly_value(&u), "method": method.name() }))
            }
        }
        Command::Roots { command } => match command {
            RootsCommand::Classify { f } => {
                let f = parse_poly("f", f)?;
                let c = classify_real_rooted(&f);
                Ok(json!({ "verdict": c.verdict.name(), "sign_summary": c.sign_summary.name() }))
            }
            RootsCommand::Isolate { f, eps } => {
                let f = parse_poly("f", f)?;
                let eps = match eps {
                    Some(e) => parse_rational(e).map_err(|err| Error::Parse {
                        what: "--eps".into(),
                        detail: err.to_string(),
                    })?,
                    None => default_eps(),
                };
                let iso = isolate_real_roots(&f, &eps)?;
                Ok(json!({
                    "intervals": to_value(&iso.intervals),
                    "distinct_roots": iso.distinct_root_count(),
                    "roots_with_multiplicity": iso.root_count_with_multiplicity(),
                }))
            }
        },
        Command::Interlace { g, f } => {
            let g = parse_poly("g", g)?;
            let f = parse_poly("f", f)?;
            Ok(json!({ "interlacing": interlaces(&g, &f)?.name() }))
        }
        Command::Mutual { list } => {
            let fs = list
                .split(';')
                .map(|s| parse_poly("list", s.trim()))
                .collect::<Result<Vec<_>>>()?;
            Ok(json!({ "mutual_interlacing": mutual_interlacing(&fs)?.name() }))
        }
        Command::Eulerian { k } => Ok(json!({ "eulerian": poly_value(&eulerian(*k)) })),
        Command::Limits { d, i, r, h, shifted } => {
            let report = match (h, shifted) {
                (Some(h), _) => veronese_limit_deviation(&parse_poly("h", h)?, *d, *i, *r)?,
                (None, true) => a_limit_deviation_shifted(*d, *i, *r)?,
                (None, false) => a_limit_deviation(*d, *i, *r)?,
            };
            Ok(to_value(&report))
        }
        Command::Ehrhart { command } => execute_ehrhart(command),
        Command::Optimality {
            command: OptimalityCommand::Witness { s, d, i, mode },
        } => {
            let outcome = match mode.as_str() {
                "nonreal" => nonreal_witness(*s, *d, *i)?,
                "double" => double_root_witness(*s, *d, *i)?,
                other => {
                    return Err(Error::Parse {
                        what: "--mode".into(),
                        detail: format!("unknown mode {other:?}, expected nonreal or double"),
                    })
                }
            };
            Ok(to_value::<WitnessOutcome>(&outcome))
        }
        Command::PaperExamples => Ok(reference_examples()),
    }
}

fn execute_ehrhart(command: &EhrhartCommand) -> Result<Value> {
    match command {
        EhrhartCommand::Count { polytope, n } => {
            let file = load_polytope(polytope)?;
            let count = count_points(&file.polytope, *n, file.shift.as_deref())?;
            Ok(json!({ "n": n, "count": count }))
        }
        EhrhartCommand::Hstar { polytope } => {
            let file = load_polytope(polytope)?;
            let data = ehrhart_data(&file.polytope, file.shift.as_deref())?;
            let mut payload = to_value(&data);
            if file.shift.is_none() && file.polytope.is_lattice() {
                let lattice = LatticePolytope::from_polytope(file.polytope.clone())?;
                payload["h1_ge_hd"] = Value::Bool(h1_hd_check(&lattice)?);
            }
            Ok(payload)
        }
        EhrhartCommand::DilateCheck { polytope, r } => {
            let file = load_polytope(polytope)?;
            let lattice = LatticePolytope::from_polytope(file.polytope)?;
            let check = dilation_check(&lattice, *r)?;
            if !check.agree {
                return Err(Error::Invariant(format!(
                    "transformed h* {} differs from recount {}",
                    check.transformed, check.recounted
                )));
            }
            let verdict = classify_real_rooted(&check.transformed);
            let mut payload = to_value(&check);
            payload["verdict"] = to_value(&verdict);
            Ok(payload)
        }
        EhrhartCommand::Quasi { polytope, r } => {
            let file = load_polytope(polytope)?;
            let rational = RationalPolytope::from_polytope(file.polytope);
            let data = rational_ehrhart(&rational)?;
            let mut constituents = Vec::new();
            for i in 0..data.l {
                let check = quasi_check(&rational, *r, i)?;
                if !check.agree {
                    return Err(Error::Invariant(format!(
                        "constituent {i}: transformed {} differs from recount {}",
                        check.transformed, check.recounted
                    )));
                }
                let mut v = to_value(&check);
                v["verdict"] = to_value(&classify_real_rooted(&check.transformed));
                constituents.push(v);
            }
            Ok(json!({
                "h": poly_value(&data.h),
                "l": data.l,
                "d": data.d,
                "counts": data.counts,
                "constituents": constituents,
            }))
        }
    }
}

struct ExampleCheck {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check(name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> ExampleCheck {
    match f() {
        Ok((pass, detail)) => ExampleCheck { name, pass, detail },
        Err(e) => ExampleCheck {
            name,
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

fn ints(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

fn translated_triangle() -> Result<LatticePolytope> {
    LatticePolytope::new(&[vec![0, 0], vec![-1, 0], vec![0, -1]], None)
}

fn quarter_shift() -> Vec<Rational> {
    let q = Rational::new(1.into(), 4.into());
    vec![q.clone(), q]
}

fn reference_examples() -> Value {
    let checks = vec![
        check("a_1 is identically one", || {
            let all_one = (1..=8).all(|r| (0..r).all(|i| a_poly(1, r, i).map(|p| p == Polynomial::one()).unwrap_or(false)));
            Ok((all_one, "a_1^<r,i> = 1 for 1 <= r <= 8".into()))
        }),
        check("transform of 1 + t^2 (d=2, r=2, i=0)", || {
            let u = veronese_numerator(&ints(&[1, 0, 1]), VeroneseParams::new(2, 2, 0)?);
            Ok((u == ints(&[1, 2, 1]), format!("U = {u}")))
        }),
        check("lincomb path for 1 + t^2 (d=2, r=2, i=0)", || {
            let u = veronese_numerator_lincomb(&ints(&[1, 0, 1]), VeroneseParams::new(2, 2, 0)?);
            Ok((u == Some(ints(&[1, 2, 1])), format!("U = {u:?}")))
        }),
        check("all transform paths agree on 1 + t^2", || {
            let paths = veronese_all_paths(&ints(&[1, 0, 1]), VeroneseParams::new(2, 2, 0)?);
            Ok((paths.agree() && paths.hecke == ints(&[1, 2, 1]), format!("U = {}", paths.hecke)))
        }),
        check("(1+t)^2 has a double negative root", || {
            let c = classify_real_rooted(&ints(&[1, 2, 1]));
            Ok((
                c.verdict == Verdict::RealRootedRepeated && c.roots_negative(),
                format!("{} / {}", c.verdict, c.sign_summary),
            ))
        }),
        check("translated triangle count at n=2", || {
            let n = count_points(&*translated_triangle()?, 2, Some(&quarter_shift()))?;
            Ok((n == 1, format!("count = {n}")))
        }),
        check("translated triangle numerator", || {
            let data = ehrhart_data(&*translated_triangle()?, Some(&quarter_shift()))?;
            Ok((data.h_star == ints(&[0, 0, 1]), format!("h = {} from counts {:?}", data.h_star, data.counts)))
        }),
        check("non-real witness (s=3, d=1, i=0)", || {
            let w = nonreal_witness(3, 1, 0)?;
            let rep = w.report().ok_or_else(|| Error::Invariant("no witness".into()))?;
            Ok((
                rep.transformed == ints(&[1, 0, 1]) && rep.verdict.verdict == Verdict::NotRealRooted,
                format!("U = {} with M = {:?}", rep.transformed, rep.scale.as_ref().map(|m| m.to_string())),
            ))
        }),
        check("double-root witness (s=2, d=2, i=0)", || {
            let w = double_root_witness(2, 2, 0)?;
            let rep = w.report().ok_or_else(|| Error::Invariant("no witness".into()))?;
            let alpha_ok = rep.alpha == Some(-Rational::from_integer(1.into()));
            Ok((
                alpha_ok && rep.witness_h == ints(&[1, 0, 1]) && rep.transformed == ints(&[1, 2, 1]),
                format!("h = {}, U = {}", rep.witness_h, rep.transformed),
            ))
        }),
        check("a_1^<7,3>", || {
            let a = a_poly(1, 7, 3)?;
            Ok((a == Polynomial::one(), format!("a = {a}")))
        }),
    ];
    let all_pass = checks.iter().all(|c| c.pass);
    let extra = veronese_numerator(&ints(&[1, 0, 1]), VeroneseParams::new(3, 2, 0).expect("valid"));
    json!({
        "all_pass": all_pass,
        "examples": checks.iter().map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail })).collect::<Vec<_>>(),
        "notes": { "transform of 1 + t^2 with d=3, r=2, i=0": poly_value(&extra) },
    })
}

fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(v, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|x| x.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}  -\n"));
                            render_text(item, indent + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(v))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn finish(result: CommandResult, exit_code: i32, json: bool) -> Outcome {
    let rendered = if json {
        serde_json::to_string_pretty(&result).expect("serializable result") + "\n"
    } else if let Some(msg) = &result.error_message {
        format!("error: {msg}\n")
    } else {
        let mut out = String::new();
        render_text(&result.payload, 0, &mut out);
        out
    };
    Outcome {
        result,
        exit_code,
        rendered,
        json,
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                return Outcome {
                    result: CommandResult {
                        status: Status::Ok,
                        payload: Value::Null,
                        error_message: None,
                    },
                    exit_code: EXIT_OK,
                    rendered: text,
                    json: false,
                };
            }
            let message = text.lines().next().unwrap_or("usage error").trim_start_matches("error: ").to_string();
            let result = CommandResult {
                status: Status::Error,
                payload: Value::Null,
                error_message: Some(message),
            };
            let mut outcome = finish(result, EXIT_USAGE, json);
            if !json {
                outcome.rendered = text;
            }
            return outcome;
        }
    };
    match execute(&cli.command) {
        Ok(payload) => {
            let failed_examples = matches!(cli.command, Command::PaperExamples)
                && payload.get("all_pass") != Some(&Value::Bool(true));
            let result = CommandResult {
                status: Status::Ok,
                payload,
                error_message: None,
            };
            finish(result, if failed_examples { EXIT_INVARIANT } else { EXIT_OK }, cli.json)
        }
        Err(e) => {
            let result = CommandResult {
                status: Status::Error,
                payload: Value::Object(Map::new()),
                error_message: Some(e.to_string()),
            };
            finish(result, exit_code_for(&e), cli.json)
        }
    }
}
