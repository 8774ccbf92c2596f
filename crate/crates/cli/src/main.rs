//! `hd`: JSON front end for Howe-duality computations on `(U_l, U_l')`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use hd_core::constants::{c_bullet_closed, constants};
use hd_core::intertwine::{
    distribution_g, distribution_gprime, multiplicity_one, DistributionData,
};
use hd_core::linalg::CMat;
use hd_core::par::Exec;
use hd_core::reps::{
    correspond, correspond_back, dim_piprime, dim_weyl, hc_param, hw_of, occurrence_g,
    occurrence_gprime, HighestWeight, Reason, Side,
};
use hd_core::suite::{self, Settings, Suite};
use hd_core::{DualPair, Error, HCParam, HalfInt};
use num_bigint::BigInt;

const OK: u8 = 0;
const DOMAIN: u8 = 1;
const USAGE: u8 = 2;
const VERIFY_FAILED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hd",
    version,
    about = "Howe duality for the dual pair (U_l, U_l')"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct PairArgs {
    /// Rank of G = U_l.
    #[arg(long)]
    l: usize,
    /// Rank of G' = U_l'.
    #[arg(long)]
    lp: usize,
}

#[derive(Args, Clone)]
struct ParamArgs {
    /// Harish-Chandra parameter of Π, comma separated ("2", "3/2,-1/2", "1.5").
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Harish-Chandra parameter of Π'.
    #[arg(long = "mu-prime", allow_hyphen_values = true)]
    mu_prime: Option<String>,
    /// Read the lists as highest weights instead of Harish-Chandra parameters.
    #[arg(long)]
    lambda: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    G,
    Gprime,
}

#[derive(Subcommand)]
enum Cmd {
    /// Whether Π (or Π') occurs in the restriction of the Weil representation.
    Occurs {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// The corresponding parameter on the other side.
    Correspond {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Map μ' back to μ.
        #[arg(long)]
        back: bool,
    },
    /// The intertwining distribution as prefactor, polynomial and Gaussian.
    Dist {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        /// JSON file with an l × l' matrix of [re, im] pairs.
        #[arg(long)]
        at: Option<PathBuf>,
        /// Add a LaTeX rendering of the polynomial.
        #[arg(long)]
        emit_latex: bool,
    },
    /// Highest weights and dimensions of Π and Π'.
    Dims {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// The normalization constants of the pair.
    Constants {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// The value at zero with its multiplicity-one comparison, and optionally
    /// the value at a matrix.
    Eval {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        at: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        /// Overridden by HD_SEED when set.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

struct Failure {
    code: u8,
    body: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::Length { .. }
            | Error::RankOrder { .. }
            | Error::InvalidPair(_) => USAGE,
            _ => DOMAIN,
        };
        Failure {
            code,
            body: json!({ "error": e.to_string() }),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        body: json!({ "error": msg.into() }),
    }
}

fn not_occurring(reason: Reason) -> Failure {
    Failure {
        code: DOMAIN,
        body: json!({ "occurs": false, "reason": reason }),
    }
}

type Out = Result<(u8, Value), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (code, body) = match run(cli.cmd) {
        Ok(x) => x,
        Err(f) => (f.code, f.body),
    };
    println!("{}", serde_json::to_string(&body).expect("serializable"));
    ExitCode::from(code)
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Occurs { pair, params } => occurs(pair, &params),
        Cmd::Correspond { pair, params, back } => correspond_cmd(pair, &params, back),
        Cmd::Dist {
            pair,
            params,
            side,
            at,
            emit_latex,
        } => dist(pair, &params, side, at, emit_latex),
        Cmd::Dims { pair, params } => dims(pair, &params),
        Cmd::Constants { pair } => {
            let p = ordered(pair)?;
            let mut v = to_value(&constants(p));
            v["c_bullet_closed"] = to_value(&c_bullet_closed(p));
            Ok((OK, v))
        }
        Cmd::Eval { pair, params, at } => eval(pair, &params, at),
        Cmd::Verify {
            suite,
            seed,
            samples,
            sequential,
        } => verify(&suite, seed, samples, sequential),
    }
}

fn ordered(p: PairArgs) -> Result<DualPair, Failure> {
    Ok(DualPair::ordered(p.l, p.lp)?)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn big(n: &BigInt) -> Value {
    u64::try_from(n)
        .map(Value::from)
        .unwrap_or_else(|_| Value::from(n.to_string()))
}

fn parse_list(s: &str) -> Result<Vec<HalfInt>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<HalfInt>().map_err(Failure::from))
        .collect()
}

/// The parameter on the requested side, sorted into its dominant representative.
fn param(pair: DualPair, params: &ParamArgs, side: Side) -> Result<HCParam, Failure> {
    Ok(try_param(pair, params, side)??)
}

fn try_param(
    pair: DualPair,
    params: &ParamArgs,
    side: Side,
) -> Result<Result<HCParam, Error>, Failure> {
    let raw = match side {
        Side::G => params
            .mu
            .as_deref()
            .ok_or_else(|| usage("--mu is required"))?,
        Side::GPrime => params
            .mu_prime
            .as_deref()
            .ok_or_else(|| usage("--mu-prime is required"))?,
    };
    let entries = parse_list(raw)?;
    let expected = match side {
        Side::G => pair.l,
        Side::GPrime => pair.lp,
    };
    if entries.len() != expected {
        return Err(Error::Length {
            expected,
            got: entries.len(),
        }
        .into());
    }
    Ok(if params.lambda {
        HighestWeight::new(entries).and_then(|w| hc_param(&w, pair, side))
    } else {
        HCParam::from_orbit(entries).map(|x| x.0)
    })
}

fn side_of(params: &ParamArgs, requested: Option<SideArg>) -> Result<Side, Failure> {
    let side = match (requested, &params.mu, &params.mu_prime) {
        (_, Some(_), Some(_)) => return Err(usage("give either --mu or --mu-prime")),
        (Some(SideArg::G), _, Some(_)) => return Err(usage("--side g takes --mu")),
        (Some(SideArg::Gprime), Some(_), _) => return Err(usage("--side gprime takes --mu-prime")),
        (_, Some(_), None) => Side::G,
        (_, None, Some(_)) => Side::GPrime,
        (_, None, None) => return Err(usage("--mu or --mu-prime is required")),
    };
    Ok(side)
}

fn occurs(pair: PairArgs, params: &ParamArgs) -> Out {
    let p = ordered(pair)?;
    let side = side_of(params, None)?;
    let mu = match try_param(p, params, side)? {
        Err(Error::Parity) => return Err(not_occurring(Reason::Parity)),
        r => r?,
    };
    let reason = match side {
        Side::G => occurrence_g(&mu, p)?,
        Side::GPrime => occurrence_gprime(&mu, p)?,
    };
    let code = if reason.occurs() { OK } else { DOMAIN };
    Ok((code, json!({ "occurs": reason.occurs(), "reason": reason })))
}

fn require(reason: Reason) -> Result<(), Failure> {
    if reason.occurs() {
        Ok(())
    } else {
        Err(not_occurring(reason))
    }
}

fn correspond_cmd(pair: PairArgs, params: &ParamArgs, back: bool) -> Out {
    let p = ordered(pair)?;
    if back {
        let mp = param(p, params, Side::GPrime)?;
        require(occurrence_gprime(&mp, p)?)?;
        let mu = correspond_back(&mp, p)?;
        Ok((
            OK,
            json!({ "mu": mu, "dim_pi": big(&dim_weyl(&mu)), "dim_pi_prime": big(&dim_piprime(&mp, p)?) }),
        ))
    } else {
        let mu = param(p, params, Side::G)?;
        require(occurrence_g(&mu, p)?)?;
        let mp = correspond(&mu, p)?;
        Ok((
            OK,
            json!({ "mu_prime": mp, "dim_pi": big(&dim_weyl(&mu)), "dim_pi_prime": big(&dim_piprime(&mp, p)?) }),
        ))
    }
}

fn dims(pair: PairArgs, params: &ParamArgs) -> Out {
    let p = ordered(pair)?;
    let (mu, mp) = match side_of(params, None)? {
        Side::G => {
            let mu = param(p, params, Side::G)?;
            require(occurrence_g(&mu, p)?)?;
            let mp = correspond(&mu, p)?;
            (mu, mp)
        }
        Side::GPrime => {
            let mp = param(p, params, Side::GPrime)?;
            require(occurrence_gprime(&mp, p)?)?;
            (correspond_back(&mp, p)?, mp)
        }
    };
    Ok((
        OK,
        json!({
            "mu": mu,
            "mu_prime": mp,
            "lambda": hw_of(&mu, p, Side::G)?.entries(),
            "lambda_prime": hw_of(&mp, p, Side::GPrime)?.entries(),
            "dim_pi": big(&dim_weyl(&mu)),
            "dim_pi_prime": big(&dim_piprime(&mp, p)?),
        }),
    ))
}

fn read_matrix(path: &PathBuf, pair: DualPair) -> Result<CMat, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let rows: Vec<Vec<[f64; 2]>> =
        serde_json::from_str(&text).map_err(|e| usage(format!("malformed matrix file: {e}")))?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.len() != pair.l || rows.iter().any(|r| r.len() != cols) || cols != pair.lp {
        return Err(Error::Dimension(format!(
            "expected a {} x {} matrix, got {} rows",
            pair.l,
            pair.lp,
            rows.len()
        ))
        .into());
    }
    Ok(CMat::from_fn(pair.l, pair.lp, |i, j| {
        Complex64::new(rows[i][j][0], rows[i][j][1])
    }))
}

fn distribution_object(d: &DistributionData) -> Map<String, Value> {
    match to_value(d) {
        Value::Object(m) => m,
        _ => unreachable!("distributions serialize as objects"),
    }
}

fn dist(
    pair: PairArgs,
    params: &ParamArgs,
    side: Option<SideArg>,
    at: Option<PathBuf>,
    latex: bool,
) -> Out {
    let p = ordered(pair)?;
    let d = match side_of(params, side)? {
        Side::G => distribution_g(&param(p, params, Side::G)?, p)?,
        Side::GPrime => distribution_gprime(&param(p, params, Side::GPrime)?, p)?,
    };
    let mut out = distribution_object(&d);
    if latex && !d.is_zero() {
        out.insert("latex".into(), Value::from(d.poly.to_latex()));
    }
    if let Some(path) = at {
        let w = read_matrix(&path, p)?;
        out.insert(
            "value".into(),
            Value::from(if d.is_zero() { 0.0 } else { d.eval_on_w(&w)? }),
        );
    }
    Ok((OK, Value::Object(out)))
}

fn eval(pair: PairArgs, params: &ParamArgs, at: Option<PathBuf>) -> Out {
    let p = ordered(pair)?;
    let mu = param(p, params, Side::G)?;
    require(occurrence_g(&mu, p)?)?;
    let d = distribution_g(&mu, p)?;
    let mut out = Map::new();
    out.insert("value_at_zero".into(), to_value(&d.value_at_zero()));
    out.insert(
        "multiplicity_one".into(),
        to_value(&multiplicity_one(&mu, p)?),
    );
    if let Some(path) = at {
        out.insert(
            "value".into(),
            Value::from(d.eval_on_w(&read_matrix(&path, p)?)?),
        );
    }
    Ok((OK, Value::Object(out)))
}

fn verify(name: &str, seed: u64, samples: u64, sequential: bool) -> Out {
    let seed = match std::env::var("HD_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| usage(format!("HD_SEED is not an integer: {s:?}")))?,
        Err(_) => seed,
    };
    let suite: Suite = name.parse()?;
    let exec = if sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    let r = suite::run(
        suite,
        name,
        Settings {
            seed,
            samples,
            exec,
        },
    )?;
    let code = if r.summary.pass { OK } else { VERIFY_FAILED };
    Ok((code, to_value(&r)))
}
