mod cache;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use plethygen::combinat::Partition;
use plethygen::sl2::{self, SpletMethod};
use plethygen::verify::{self, Suite, SuiteParams};
use plethygen::{glnp, golden, ptop, qehr, Error, FactoredRational};
use serde_json::json;

use cache::Cache;

/// `println!` that ignores a closed stdout.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "plethygen", version, about = "Generating functions of SL2-plethysm coefficients")]
struct Cli {
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute A_mu(z, q) as a rational function.
    Compute {
        #[arg(long)]
        mu: Partition,
        /// Initial truncation order.
        #[arg(long)]
        m: Option<u32>,
        /// Skip the on-disk cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Print the closed form of QEhr_mu(z, q).
    Qehr {
        #[arg(long)]
        mu: Partition,
    },
    /// A single coefficient a_{mu[h]}^{[k]}.
    Coeff {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        h: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum)]
        method: Option<CoeffMethod>,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// GL_n plethysm by brute force.
    Gln {
        #[command(subcommand)]
        command: GlnCommand,
    },
}

#[derive(Args)]
struct Bounds {
    #[arg(long)]
    max: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    w: Option<u32>,
    #[arg(long)]
    h: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffMethod {
    Ssyt,
    Qehr,
    Gauss,
    Recur,
}

#[derive(Subcommand)]
enum GlnCommand {
    /// Schur expansion of s_outer[s_inner] in a few variables.
    Plethysm {
        #[arg(long)]
        outer: Partition,
        #[arg(long)]
        inner: Partition,
        #[arg(long, default_value_t = 2)]
        vars: usize,
    },
    /// The series sum_r a_{r mu[nu]}^{r lam} t^r.
    Kirillov {
        #[arg(long)]
        lam: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long, default_value_t = 10)]
        n: u32,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Usage(_) | Error::Parse(_) => 2,
        Error::Resource { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            log::warn!("could not set thread count: {e}");
        }
    }
    let json = cli.json || cli.format == Format::Json;
    match run(cli.command, json) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("plethygen: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn print_json(v: &serde_json::Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

fn run(command: Command, json: bool) -> plethygen::Result<u8> {
    match command {
        Command::Compute { mu, m, no_cache } => compute(&mu, m, no_cache, json),
        Command::Qehr { mu } => {
            let q = qehr::qehr_mu(&mu)?;
            if json {
                print_json(&q.to_json_value());
            } else {
                out!("{q}");
            }
            Ok(0)
        }
        Command::Coeff { mu, h, k, method } => {
            let c = coefficient(&mu, h, k, method)?;
            if json {
                print_json(&json!({ "mu": mu, "h": h, "k": k, "coeff": c.to_string() }));
            } else {
                out!("{c}");
            }
            Ok(0)
        }
        Command::Verify { suite, bounds } => {
            let params = SuiteParams {
                max: bounds.max,
                n: bounds.n,
                w: bounds.w,
                h: bounds.h,
            };
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>()?]
            };
            let mut reports = Vec::new();
            for s in suites {
                reports.push(verify::run(s, &params)?);
            }
            if json {
                let v = serde_json::to_value(&reports).expect("serialisable");
                print_json(if reports.len() == 1 { &v[0] } else { &v });
            } else {
                for r in &reports {
                    out!("{r}");
                }
            }
            Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 })
        }
        Command::Gln { command } => gln(command, json),
    }
}

fn compute(mu: &Partition, m: Option<u32>, no_cache: bool, json: bool) -> plethygen::Result<u8> {
    let cache = Cache::from_env();
    let cached = if no_cache { None } else { cache.get(mu, m) };
    let a: FactoredRational = match cached {
        Some(a) => {
            log::info!("A_{mu} read from {}", cache.dir().display());
            a
        }
        None => {
            let a = ptop::compute_a(mu, m)?;
            if !no_cache {
                cache.put(mu, m, &a);
            }
            a
        }
    };
    let reference = golden::reference(mu).filter(|r| r.equals(&a));
    if json {
        print_json(&a.to_json_value());
        return Ok(0);
    }
    out!("A_{mu} = {a}");
    if reference.is_some() {
        let text = golden::reference_text(mu).expect("reference has text");
        out!("{:width$} = {text}", "", width = format!("A_{mu}").len());
    } else if golden::reference(mu).is_some() {
        log::warn!("A_{mu} does not match its reference form");
        return Ok(1);
    }
    Ok(0)
}

fn coefficient(mu: &Partition, h: u32, k: u32, method: Option<CoeffMethod>) -> plethygen::Result<BigInt> {
    let method = match method {
        None => return sl2::coefficient(mu, h, k),
        Some(CoeffMethod::Ssyt) => SpletMethod::Ssyt,
        Some(CoeffMethod::Qehr) => SpletMethod::Qehr,
        Some(CoeffMethod::Gauss) => SpletMethod::Gauss,
        Some(CoeffMethod::Recur) => {
            if mu.len() != 1 {
                return Err(Error::Usage("the recurrences need a single-row mu".into()));
            }
            let top = mu.size() * h + 1;
            if k == 0 || k > top || (top - k) % 2 == 1 {
                return Ok(BigInt::from(0));
            }
            return sl2::recurrence_w(mu.size(), h, k as i64);
        }
    };
    sl2::coefficient_with(mu, h, k, method)
}

fn gln(command: GlnCommand, json: bool) -> plethygen::Result<u8> {
    match command {
        GlnCommand::Plethysm { outer, inner, vars } => {
            let e = glnp::schur_decompose(&glnp::plethysm_poly(&outer, &inner, vars)?)?;
            if json {
                print_json(&json!({
                    "outer": outer,
                    "inner": inner,
                    "vars": vars,
                    "expansion": e.to_json_value(),
                }));
            } else {
                out!("s{outer}[s{inner}] = {e}");
            }
        }
        GlnCommand::Kirillov { lam, mu, nu, n } => {
            let s = glnp::kirillov_series(&lam, &mu, &nu, n)?;
            let fit = glnp::fit_recurrence(&s, (s.len() / 3).max(1));
            if json {
                print_json(&json!({
                    "series": s.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "empirical_recurrence": fit.as_ref().map(|r| json!({
                        "coeffs": r.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "checked": r.checked,
                    })),
                }));
            } else {
                let terms: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                out!("[{}]", terms.join(", "));
                match fit {
                    Some(r) => out!("empirical recurrence: {r} (checked on {} terms)", r.checked),
                    None => out!("empirical recurrence: none found"),
                }
            }
        }
    }
    Ok(0)
}
