use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tanhvol::harness::{
    compute_metrics, run_iv_comparison, run_lattice_erf_study, run_moneyness_sweep, Baseline, IvGridSpec,
    LatticeSpec, SweepSpec,
};
use tanhvol::{
    atm_call_hat, bs_call, call_hat, comparator_iv, implied_vol, in_atm_band, iv_oracle, normalize, AtmSurrogateKind,
    CallQuote, ComparatorKind, Error, OptionTerms,
};

const EXIT_VALIDATION: u8 = 2;
const EXIT_REGRESSION: u8 = 3;
const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser)]
#[command(name = "tanhvol", version, about = "Black-Scholes calls, tanh surrogate and closed-form implied volatility")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Price a European call.
    Price(PriceArgs),
    /// Implied volatility of a call price.
    Iv(IvArgs),
    /// Random sweep of |chi - chi_hat| over moneyness and volatility.
    Sweep(SweepArgs),
    /// erf against the Theta surrogates on the (sigma, T) lattice.
    ErfStudy(ErfArgs),
    /// Implied-volatility estimators on a grid of Black-Scholes prices.
    IvCompare(IvCompareArgs),
    /// Freeze or check the metric baseline.
    Baseline {
        #[command(subcommand)]
        action: BaselineAction,
    },
}

#[derive(Args)]
struct Contract {
    #[arg(long)]
    spot: f64,
    #[arg(long)]
    strike: f64,
    #[arg(long, default_value_t = 0.0)]
    rate: f64,
    #[arg(long)]
    maturity: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Bs,
    Tanh,
}

#[derive(Clone, Copy, ValueEnum)]
enum AtmArg {
    Theta0,
    Theta1,
    Theta2,
}

impl From<AtmArg> for AtmSurrogateKind {
    fn from(a: AtmArg) -> Self {
        match a {
            AtmArg::Theta0 => AtmSurrogateKind::Theta0,
            AtmArg::Theta1 => AtmSurrogateKind::Theta1,
            AtmArg::Theta2 => AtmSurrogateKind::Theta2,
        }
    }
}

#[derive(Args)]
struct PriceArgs {
    #[command(flatten)]
    contract: Contract,
    #[arg(long)]
    vol: f64,
    #[arg(long, value_enum, default_value = "bs")]
    model: Model,
    /// ATM formula used by `--model tanh` when S equals the discounted strike.
    #[arg(long, value_enum, default_value = "theta2")]
    atm: AtmArg,
    #[arg(long, default_value_t = 4)]
    digits: usize,
}

#[derive(Args)]
struct IvArgs {
    #[command(flatten)]
    contract: Contract,
    #[arg(long)]
    price: f64,
    #[arg(long, value_enum, default_value = "theta2")]
    atm: AtmArg,
}

#[derive(Args)]
struct Output {
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; all cores when omitted. Output does not depend on it.
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long = "t", default_value_t = 0.25)]
    maturity: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 0.0)]
    sigma_lo: f64,
    #[arg(long, default_value_t = 1.25)]
    sigma_hi: f64,
    #[arg(long, default_value_t = 500)]
    sigma_samples: usize,
    #[arg(long, default_value_t = 10_000)]
    moneyness_samples: usize,
    /// Moneyness S/X range; beyond [0.5, 2] the output is marked experimental.
    #[arg(long, default_value_t = 0.5)]
    moneyness_lo: f64,
    #[arg(long, default_value_t = 2.0)]
    moneyness_hi: f64,
    #[arg(long, default_value_t = 5)]
    parts: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ErfArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct IvCompareArgs {
    #[arg(long, default_value_t = 100.0)]
    spot: f64,
    #[arg(long, value_enum, default_value = "theta2")]
    atm: AtmArg,
    #[command(flatten)]
    output: Output,
}

#[derive(Subcommand)]
enum BaselineAction {
    /// Recompute every metric and write the baseline document.
    Freeze {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Recompute every metric and compare with the frozen document.
    Check {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
    },
}

enum Failure {
    Validation(Error),
    Regression(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(msg) => Failure::Other(msg),
            other => Failure::Validation(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

fn open_output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn terms(c: &Contract) -> Result<tanhvol::NormalizedTerms, Error> {
    normalize(&OptionTerms::new(c.spot, c.strike, c.rate, c.maturity)?)
}

fn price(args: PriceArgs) -> Result<(), Failure> {
    let t = terms(&args.contract)?;
    let value = match args.model {
        Model::Bs => bs_call(t, args.vol)?,
        Model::Tanh if in_atm_band(t) => atm_call_hat(args.atm.into(), t.spot(), t.maturity(), args.vol)?,
        Model::Tanh => call_hat(t, args.vol)?,
    };
    println!("{value:.prec$}", prec = args.digits);
    Ok(())
}

fn iv(args: IvArgs) -> Result<(), Failure> {
    let quote = CallQuote::new(terms(&args.contract)?, args.price)?;
    let hat = implied_vol(&quote, args.atm.into())?;
    println!("{:<22} {:.10}", hat.method.label(), hat.sigma);
    for kind in ComparatorKind::ALL {
        match comparator_iv(kind, &quote).sigma() {
            Some(s) => println!("{:<22} {s:.10}", kind.method().label()),
            None => println!("{:<22} unavailable", kind.method().label()),
        }
    }
    println!("{:<22} {:.10}", "oracle", iv_oracle(&quote)?);
    Ok(())
}

fn sweep(args: SweepArgs) -> Result<(), Failure> {
    let spec = SweepSpec {
        sigma_interval: (args.sigma_lo, args.sigma_hi),
        sigma_samples: args.sigma_samples,
        moneyness_range: (args.moneyness_lo, args.moneyness_hi),
        moneyness_samples: args.moneyness_samples,
        maturity: args.maturity,
        parts: args.parts,
        seed: args.seed,
        workers: args.output.workers,
    };
    spec.validate()?;
    let mut out = open_output(&args.output.out)?;
    let report = run_moneyness_sweep(&spec, Some(&mut *out))?;
    if args.output.out.is_some() {
        eprintln!("{}", report.overall.to_comment("all"));
    }
    Ok(())
}

fn erf_study(args: ErfArgs) -> Result<(), Failure> {
    let spec = LatticeSpec {
        samples_per_maturity: args.samples,
        seed: args.seed,
        workers: args.output.workers,
        ..LatticeSpec::default()
    };
    spec.validate()?;
    let mut out = open_output(&args.output.out)?;
    run_lattice_erf_study(&spec, Some(&mut *out))?;
    Ok(())
}

fn iv_compare(args: IvCompareArgs) -> Result<(), Failure> {
    let spec = IvGridSpec {
        spot: args.spot,
        atm_kind: args.atm.into(),
        workers: args.output.workers,
        ..IvGridSpec::default()
    };
    spec.validate()?;
    let mut out = open_output(&args.output.out)?;
    run_iv_comparison(&spec, Some(&mut *out))?;
    Ok(())
}

fn baseline(action: BaselineAction) -> Result<(), Failure> {
    match action {
        BaselineAction::Freeze { file, workers } => {
            let current = compute_metrics(workers)?;
            std::fs::write(&file, current.render())?;
            println!("froze {} metrics to {}", current.metrics.len(), file.display());
            Ok(())
        }
        BaselineAction::Check { file, workers } => {
            let text = std::fs::read_to_string(&file)?;
            let frozen = Baseline::parse(&text)?;
            let current = compute_metrics(workers)?;
            let check = frozen.check(&current);
            for e in check.failures() {
                println!("REGRESSION {} frozen={:e} current={:e}", e.name, e.frozen, e.current);
            }
            for name in &check.missing {
                println!("MISSING {name}");
            }
            if check.passed() {
                println!("baseline ok: {} metrics within tolerance", check.entries.len());
                Ok(())
            } else {
                Err(Failure::Regression(format!("{} metrics out of tolerance", check.failures().count())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Price(a) => price(a),
        Command::Iv(a) => iv(a),
        Command::Sweep(a) => sweep(a),
        Command::ErfStudy(a) => erf_study(a),
        Command::IvCompare(a) => iv_compare(a),
        Command::Baseline { action } => baseline(action),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION)
        }
        Err(Failure::Regression(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_REGRESSION)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
