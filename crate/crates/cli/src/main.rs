use std::path::PathBuf;
use std::process::ExitCode;

use algint::error::{Error, Result};
use algint::harness::{
    self, exit_code, output_path, q_list, write_output, ExperimentConfig, Mode, OutputFormat,
    RatPair,
};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "algint",
    version,
    about = "Census and construction of algebraic integer points in the plane"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Count points in a rectangle (or the plane with --naive and no midpoint).
    CountRect(Common),
    /// Count points near a curve for each Q.
    CountCurve(Common),
    /// Level table of the special-square conditions for a square.
    SpecialCheck(Common),
    /// Build polynomials with two real roots near a target.
    Construct(Common),
    /// Curve counts over a Q sweep with exponent fits.
    Sweep(Common),
    /// Compare rectangle counts with the explicit rectangle bound.
    AuditT1(Common),
    /// Run a JSON experiment configuration.
    Run {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// One Q, a comma-separated list, or a start value with --steps.
    #[arg(long, default_value = "10")]
    q: String,
    /// Doubling steps when a single Q is given.
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    gamma2: Option<f64>,
    #[arg(long, default_value = "square")]
    curve: String,
    /// Interval J as `a,b`.
    #[arg(long, allow_hyphen_values = true)]
    interval: Option<RatPair>,
    #[arg(long, default_value_t = 1.0)]
    c1: f64,
    #[arg(long, default_value_t = 1.0)]
    c6: f64,
    /// Rectangle midpoint or construction target `d1,d2`.
    #[arg(long, allow_hyphen_values = true)]
    midpoint: Option<RatPair>,
    /// Explicit rectangle widths `w1,w2`.
    #[arg(long)]
    width: Option<RatPair>,
    #[arg(long)]
    delta: Option<String>,
    /// Special-square weights `v1,v2`.
    #[arg(long, default_value = "0.5,0.5")]
    weights: String,
    /// Use the exhaustive census instead of the accelerated one.
    #[arg(long)]
    naive: bool,
    /// Random instances (construction targets or audit rectangles per Q).
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[arg(long, default_value_t = 4)]
    retries: usize,
    #[arg(long)]
    shards: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1_000_000_000)]
    budget: u64,
    /// Include wall-clock seconds in the output.
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
}

impl Common {
    fn into_config(self, mode: Mode) -> Result<ExperimentConfig> {
        let mut c = ExperimentConfig::new(mode, self.n, q_list(&self.q, self.steps)?);
        let w: Vec<f64> = self
            .weights
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::InvalidInput(format!("bad weight {s:?}")))
            })
            .collect::<Result<_>>()?;
        let [v1, v2] = w[..] else {
            return Err(Error::InvalidInput("--weights needs two values".into()));
        };
        c.gamma = self.gamma;
        c.gamma2 = self.gamma2;
        c.curve = self.curve;
        c.interval = self.interval;
        c.c1 = self.c1;
        c.c6 = self.c6;
        c.midpoint = self.midpoint;
        c.width = self.width;
        c.delta = self.delta;
        c.weights = [v1, v2];
        c.naive = self.naive;
        c.samples = self.samples;
        c.retries = self.retries;
        c.shards = self.shards;
        c.seed = self.seed;
        c.budget = self.budget;
        c.timing = self.timing;
        c.out = self.out;
        c.format = self.format;
        Ok(c)
    }
}

fn config(verb: Verb) -> Result<ExperimentConfig> {
    let (mode, common) = match verb {
        Verb::Run { config, out } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Error::Io(format!("{}: {e}", config.display())))?;
            let mut c = ExperimentConfig::from_json(&text)?;
            if out.is_some() {
                c.out = out;
            }
            return Ok(c);
        }
        Verb::CountRect(c) => (Mode::RectCount, c),
        Verb::CountCurve(c) => (Mode::CurveCount, c),
        Verb::SpecialCheck(c) => (Mode::SpecialCheck, c),
        Verb::Construct(c) => (Mode::Construct, c),
        Verb::Sweep(c) => (Mode::Sweep, c),
        Verb::AuditT1(c) => (Mode::AuditT1, c),
    };
    common.into_config(mode)
}

fn execute(verb: Verb) -> Result<Option<Error>> {
    let cfg = config(verb)?;
    let out = harness::run(&cfg)?;
    for line in &out.summary {
        eprintln!("{line}");
    }
    match output_path(&cfg) {
        Some(p) => {
            write_output(&p, &out, cfg.format)?;
            eprintln!("wrote {}", p.display());
        }
        None => print!("{}", out.render(cfg.format)),
    }
    Ok(out.failure)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let e = match execute(cli.verb) {
        Ok(None) => return ExitCode::SUCCESS,
        Ok(Some(e)) | Err(e) => e,
    };
    eprintln!("error: {}: {e}", e.name());
    ExitCode::from(exit_code(&e) as u8)
}
