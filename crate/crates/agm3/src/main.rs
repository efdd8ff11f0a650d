//! Command-line front end. All computation lives in the library; this
//! binary parses arguments, picks an output format and maps errors to
//! exit codes: 0 success, 2 validation error, 3 non-convergence,
//! 4 verification failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use agm3::{
    agm_mean, appell_f1, cross_check, elliptic_k, extended_mean, f1_reduce, AppellF1Params,
    EllipticModulus, Error, OutputRecord, SeriesBudget, Triple, VERIFY_THRESHOLD,
};

#[derive(Parser)]
#[command(
    name = "agm3",
    version,
    about = "Three-variable arithmetic-geometric mean and its cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the mean M(a, b, c) by iteration
    Mean(MeanArgs),
    /// Shorthand for `mean --trace`
    Trace(TraceArgs),
    /// Evaluate a0/M along every route and compare them pairwise
    Verify(VerifyArgs),
    /// Evaluate the two-variable hypergeometric series F1
    F1(F1Args),
    /// Classic two-variable arithmetic-geometric mean
    GaussAgm(GaussAgmArgs),
    /// Complete elliptic integral of the first kind K(k)
    EllipticK(EllipticKArgs),
}

#[derive(Args)]
struct MeanArgs {
    a: f64,
    b: f64,
    c: f64,
    /// Relative convergence tolerance (values below 4 eps are raised)
    #[arg(long, default_value_t = 4e-16)]
    tol: f64,
    /// Record the per-step trace
    #[arg(long)]
    trace: bool,
    /// Emit one JSON record
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit the trace as CSV (n,a,b,c,kappa,lambda)
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct TraceArgs {
    a: f64,
    b: f64,
    c: f64,
    #[arg(long, default_value_t = 4e-16)]
    tol: f64,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct VerifyArgs {
    a: f64,
    b: f64,
    c: f64,
    #[arg(long, default_value_t = 4e-16)]
    tol: f64,
    /// Record the per-step trace
    #[arg(long)]
    trace: bool,
    /// Emit one JSON record
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct F1Args {
    alpha: f64,
    beta: f64,
    beta_prime: f64,
    gamma: f64,
    x: f64,
    y: f64,
    /// Direct double series, or the single-series reduction
    /// (requires gamma = beta + beta')
    #[arg(long, value_enum, default_value_t = Method::Series)]
    method: Method,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Series,
    Reduce,
}

#[derive(Args)]
struct GaussAgmArgs {
    a: f64,
    b: f64,
    #[arg(long, default_value_t = 4e-16)]
    tol: f64,
}

#[derive(Args)]
struct EllipticKArgs {
    k: f64,
}

fn exit_code_for(error: &Error) -> u8 {
    match error {
        Error::NonConvergence { .. } | Error::SlowConvergence { .. } => 3,
        _ => 2,
    }
}

fn run_mean(
    a: f64,
    b: f64,
    c: f64,
    tol: f64,
    trace: bool,
    json: bool,
    csv: bool,
) -> Result<(), Error> {
    let t = Triple::new(a, b, c)?;
    let result = extended_mean(t, tol)?;
    let record = OutputRecord::from_mean(t, &result, trace || csv)?;
    if json {
        println!("{}", record.to_json());
    } else if csv {
        print!("{}", record.to_csv()?);
    } else {
        print!("{}", record.to_text());
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<bool, Error> {
    let t = Triple::new(args.a, args.b, args.c)?;
    let check = cross_check(t, args.tol)?;
    let record = OutputRecord::from_cross_check(t, &check, args.trace)?;
    if args.json {
        println!("{}", record.to_json());
    } else {
        print!("{}", record.to_text());
        println!(
            "verification: {} (threshold {VERIFY_THRESHOLD:e})",
            if check.passed() { "PASS" } else { "FAIL" }
        );
    }
    if !check.passed() {
        let (pair, residual) = check.worst_pair();
        eprintln!("verification failed: {pair} residual {residual:e} exceeds {VERIFY_THRESHOLD:e}");
        return Ok(false);
    }
    Ok(true)
}

fn run_f1(args: &F1Args) -> Result<(), Error> {
    let params = AppellF1Params::new(args.alpha, args.beta, args.beta_prime, args.gamma)?;
    let value = match args.method {
        Method::Series => appell_f1(params, args.x, args.y, SeriesBudget::double_series())?,
        Method::Reduce => f1_reduce(params, args.x, args.y, SeriesBudget::default())?,
    };
    println!("{value}");
    Ok(())
}

fn dispatch(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Mean(a) => {
            run_mean(a.a, a.b, a.c, a.tol, a.trace, a.json, a.csv)?;
            Ok(true)
        }
        Command::Trace(a) => {
            run_mean(a.a, a.b, a.c, a.tol, true, a.json, a.csv)?;
            Ok(true)
        }
        Command::Verify(args) => run_verify(&args),
        Command::F1(args) => {
            run_f1(&args)?;
            Ok(true)
        }
        Command::GaussAgm(args) => {
            println!("{}", agm_mean(args.a, args.b, args.tol)?);
            Ok(true)
        }
        Command::EllipticK(args) => {
            println!("{}", elliptic_k(EllipticModulus::new(args.k)?));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(4),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(exit_code_for(&error))
        }
    }
}
