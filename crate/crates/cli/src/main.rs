//! Command-line driver for the star CMTFA solver.
//!
//! Exit codes partition outcomes and are never overloaded:
//! 0 success, 1 verification failure, 2 malformed input or I/O error,
//! 3 oracle resource limit.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cmtfa::{
    build_null_basis, build_sigma_x, build_t_dm, build_t_nd, classify_dominance, compare,
    lemma4_check, lemma5_gap, lemma6_cross_term, s_min, sample_latent, solve, solve_cmtfa_numeric,
    verify_certificate, AlphaVector, OracleStatus, StarCovariance, DEFAULT_ENTRYWISE_TOL,
    DEFAULT_MAX_ITER, DEFAULT_OBJECTIVE_TOL, DEFAULT_TOL_FEAS,
};

use input::InputEcho;
use report::{
    print_json, AgreementReport, CertificateReport, DominanceReport, EstimateReport, LemmaCounts,
    LemmaViolation, LemmasReport, OracleReport, RunReport, SolutionReport, Timings,
};

const EXIT_VERIFICATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_LIMIT: u8 = 3;

/// Optional defaults file named by `CMTFA_CONFIG`; explicit flags always win.
#[derive(Debug, Default, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigDefaults {
    tol: Option<f64>,
    tol_feas: Option<f64>,
    max_iter: Option<usize>,
    obj_tol: Option<f64>,
    entry_tol: Option<f64>,
}

fn config_defaults() -> Result<ConfigDefaults> {
    let Some(path) = std::env::var_os("CMTFA_CONFIG") else {
        return Ok(ConfigDefaults::default());
    };
    let path = PathBuf::from(path);
    let text = std::fs::read_to_string(&path)
        .with_context(|| format!("cannot read CMTFA_CONFIG file {}", path.display()))?;
    serde_json::from_str(&text).context("malformed CMTFA_CONFIG file")
}

#[derive(Parser)]
#[command(
    name = "cmtfa",
    version,
    about = "Closed-form constrained minimum trace factor analysis for star covariances",
    after_help = "Reports are JSON on stdout; diagnostics go to stderr.\n\
                  Exit codes: 0 success, 1 verification failure, 2 input error, 3 iteration limit.\n\
                  CMTFA_CONFIG may name a JSON file of default tolerances\n\
                  (tol, tol_feas, max_iter, obj_tol, entry_tol); explicit flags win."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Inline JSON array of loadings, e.g. '[0.9,0.3,0.2]'
    #[arg(long, value_name = "JSON")]
    alpha: Option<String>,
    /// JSON file {"sigma": [[...], ...]} with a symmetric covariance
    #[arg(long, value_name = "FILE")]
    sigma: Option<PathBuf>,
    /// CSV file of samples: header row, one draw per row
    #[arg(long, value_name = "FILE")]
    data: Option<PathBuf>,
}

impl InputArgs {
    fn resolve(&self) -> Result<(AlphaVector, InputEcho)> {
        input::resolve(
            self.alpha.as_deref(),
            self.sigma.as_deref(),
            self.data.as_deref(),
        )
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a loading vector as dominant or non-dominant
    Classify(InputArgs),
    /// Solve in closed form, optionally with certificate and oracle cross-check
    Solve {
        #[command(flatten)]
        input: InputArgs,
        /// Build and verify the optimality certificate
        #[arg(long)]
        certify: bool,
        /// Cross-check against the numeric cutting-plane solver
        #[arg(long)]
        oracle: bool,
        /// Certificate verdict tolerance [default: 1e-8]
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Draw samples from the latent star model into a CSV file
    Sample {
        /// Inline JSON array of loadings
        #[arg(long, value_name = "JSON")]
        alpha: String,
        /// Number of rows to draw
        #[arg(long, value_name = "N")]
        n_samples: usize,
        /// RNG seed; identical seeds give byte-identical files
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV path
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Estimate loadings from a covariance or sample matrix
    Estimate {
        /// JSON file {"sigma": [[...], ...]}
        #[arg(long, value_name = "FILE")]
        sigma: Option<PathBuf>,
        /// CSV file of samples
        #[arg(long, value_name = "FILE")]
        data: Option<PathBuf>,
    },
    /// Run the numeric cutting-plane solver on its own
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// Feasibility tolerance on the smallest eigenvalue [default: 1e-8]
        #[arg(long)]
        tol_feas: Option<f64>,
        /// Cutting-plane iteration cap [default: 500]
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Randomized property checks for the partition inequalities
    Lemmas {
        /// Number of random vectors to draw
        #[arg(long)]
        trials: usize,
        /// Largest vector length to draw (at most 30)
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        /// RNG seed, echoed in the report for reproduction
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the closed form against the numeric oracle
    Compare {
        #[command(flatten)]
        input: InputArgs,
        /// Agreement tolerance on the objective gap [default: 1e-4]
        #[arg(long)]
        obj_tol: Option<f64>,
        /// Agreement tolerance on the entrywise diagonal gap [default: 1e-3]
        #[arg(long)]
        entry_tol: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    let defaults = config_defaults()?;
    match command {
        Command::Classify(input) => cmd_classify(&input),
        Command::Solve {
            input,
            certify,
            oracle,
            tol,
        } => {
            let tol = tol.or(defaults.tol).unwrap_or(cmtfa::DEFAULT_CERT_TOL);
            cmd_solve(&input, certify, oracle, tol)
        }
        Command::Sample {
            alpha,
            n_samples,
            seed,
            out,
        } => cmd_sample(&alpha, n_samples, seed, &out),
        Command::Estimate { sigma, data } => cmd_estimate(sigma.as_deref(), data.as_deref()),
        Command::Oracle {
            input,
            tol_feas,
            max_iter,
        } => {
            let tol_feas = tol_feas.or(defaults.tol_feas).unwrap_or(DEFAULT_TOL_FEAS);
            let max_iter = max_iter.or(defaults.max_iter).unwrap_or(DEFAULT_MAX_ITER);
            cmd_oracle(&input, tol_feas, max_iter)
        }
        Command::Lemmas {
            trials,
            n_max,
            seed,
        } => cmd_lemmas(trials, n_max, seed),
        Command::Compare {
            input,
            obj_tol,
            entry_tol,
        } => {
            let obj_tol = obj_tol
                .or(defaults.obj_tol)
                .unwrap_or(DEFAULT_OBJECTIVE_TOL);
            let entry_tol = entry_tol
                .or(defaults.entry_tol)
                .unwrap_or(DEFAULT_ENTRYWISE_TOL);
            cmd_compare(&input, obj_tol, entry_tol)
        }
    }
}

fn cmd_classify(input: &InputArgs) -> Result<u8> {
    let (alpha, _) = input.resolve()?;
    let report = DominanceReport::from(classify_dominance(&alpha));
    print_json(&report)?;
    Ok(0)
}

fn cmd_solve(input: &InputArgs, certify: bool, oracle: bool, tol: f64) -> Result<u8> {
    let (alpha, echo) = input.resolve()?;
    let sigma = build_sigma_x(&alpha);
    let class = classify_dominance(&alpha);

    let started = Instant::now();
    let solution = solve(&alpha);
    let mut timings = Timings {
        solve: Some(ms_since(started)),
        ..Timings::default()
    };

    let mut exit = 0u8;
    let mut certificate = None;
    if certify {
        let started = Instant::now();
        let built = if class.is_dominant() {
            build_t_dm(&alpha)
        } else {
            build_t_nd(&alpha)
        }
        .context("certificate construction failed")?;
        let verified = verify_certificate(&sigma, &solution, &built, tol)?;
        let case_tag = if class.is_dominant() {
            None
        } else {
            Some(format!("{:?}", build_null_basis(&alpha)?.case_tag))
        };
        timings.certificate = Some(ms_since(started));
        if !verified.verdict {
            exit = exit.max(EXIT_VERIFICATION);
        }
        certificate = Some(CertificateReport::new(&verified, case_tag, tol));
    }

    let mut oracle_report = None;
    if oracle {
        let started = Instant::now();
        let numeric = solve_cmtfa_numeric(&sigma, DEFAULT_TOL_FEAS, DEFAULT_MAX_ITER)?;
        timings.oracle = Some(ms_since(started));
        match numeric.status {
            OracleStatus::Optimal => {
                let agreement = compare(
                    &solution,
                    &numeric,
                    DEFAULT_OBJECTIVE_TOL,
                    DEFAULT_ENTRYWISE_TOL,
                )?;
                if !agreement.agree {
                    exit = exit.max(EXIT_VERIFICATION);
                }
                oracle_report = Some(OracleReport::new(&numeric, Some((&agreement).into())));
            }
            OracleStatus::IterationLimit => {
                exit = EXIT_LIMIT;
                oracle_report = Some(OracleReport::new(&numeric, None));
            }
            OracleStatus::Infeasible => bail!("oracle reported an infeasible program"),
        }
    }

    let report = RunReport {
        input: echo,
        dominance: class.into(),
        solution: SolutionReport::from(&solution),
        certificate,
        oracle: oracle_report,
        timings_ms: timings,
    };
    print_json(&report)?;
    Ok(exit)
}

fn cmd_sample(alpha_json: &str, n_samples: usize, seed: u64, out: &std::path::Path) -> Result<u8> {
    let alpha = input::alpha_from_json(alpha_json)?;
    let batch = sample_latent(&alpha, n_samples, seed).context("sampling failed")?;
    let mut writer = csv::WriterBuilder::new()
        .from_path(out)
        .with_context(|| format!("cannot write {}", out.display()))?;
    let header: Vec<String> = (1..=alpha.n()).map(|i| format!("x{i}")).collect();
    writer.write_record(&header)?;
    for row in 0..n_samples {
        let record: Vec<String> = batch
            .samples
            .row(row)
            .iter()
            .map(|v| format!("{v}"))
            .collect();
        writer.write_record(&record)?;
    }
    writer.flush()?;
    Ok(0)
}

fn cmd_estimate(sigma: Option<&std::path::Path>, data: Option<&std::path::Path>) -> Result<u8> {
    let (alpha, echo) = input::resolve(None, sigma, data)?;
    let report = EstimateReport {
        alpha: alpha.values().to_vec(),
        dominance: classify_dominance(&alpha).into(),
        input: echo,
    };
    print_json(&report)?;
    Ok(0)
}

fn cmd_oracle(input: &InputArgs, tol_feas: f64, max_iter: usize) -> Result<u8> {
    // A covariance given directly feeds the oracle as-is; the other input
    // forms go through loading estimation first.
    let (sigma, echo) = if let (Some(path), None, None) = (
        input.sigma.as_deref(),
        input.alpha.as_deref(),
        input.data.as_deref(),
    ) {
        let matrix = input::sigma_from_file(path)?;
        let sigma = StarCovariance::try_from_matrix(matrix).context("invalid covariance")?;
        let echo = InputEcho {
            source: "sigma".into(),
            alpha: vec![],
            estimated_from: Some(path.display().to_string()),
        };
        (sigma, echo)
    } else {
        let (alpha, echo) = input.resolve()?;
        (build_sigma_x(&alpha), echo)
    };

    let numeric = solve_cmtfa_numeric(&sigma, tol_feas, max_iter)?;
    let report = OracleReport::new(&numeric, None);
    print_json(&serde_json::json!({ "input": echo, "oracle": report }))?;
    match numeric.status {
        OracleStatus::Optimal => Ok(0),
        OracleStatus::IterationLimit => Ok(EXIT_LIMIT),
        OracleStatus::Infeasible => bail!("oracle reported an infeasible program"),
    }
}

fn cmd_lemmas(trials: usize, n_max: usize, seed: u64) -> Result<u8> {
    if trials == 0 {
        bail!("--trials must be at least 1");
    }
    if n_max == 0 || n_max > 30 {
        bail!("--n-max must be between 1 and 30");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lemma4 = LemmaCounts {
        checked: 0,
        passed: 0,
    };
    let mut lemma5 = LemmaCounts {
        checked: 0,
        passed: 0,
    };
    let mut lemma6 = LemmaCounts {
        checked: 0,
        passed: 0,
    };
    let mut singletons = 0;
    let mut violations = Vec::new();

    for _ in 0..trials {
        let n = rng.random_range(1..=n_max);
        let e: Vec<f64> = (0..n).map(|_| rng.random_range(0.01..10.0)).collect();
        let result = s_min(&e)?;

        lemma4.checked += 1;
        if lemma4_check(&result) {
            lemma4.passed += 1;
        } else {
            violations.push(LemmaViolation {
                lemma: "lemma4".into(),
                elements: e.clone(),
                detail: format!("s_min {} > f_min {}", result.s_min, result.f_min),
            });
        }

        if n < 2 {
            singletons += 1;
            continue;
        }

        lemma5.checked += 1;
        let gap = lemma5_gap(&e)?;
        if gap >= -1e-12 {
            lemma5.passed += 1;
        } else {
            violations.push(LemmaViolation {
                lemma: "lemma5".into(),
                elements: e.clone(),
                detail: format!("gap {gap} is negative"),
            });
        }

        lemma6.checked += 1;
        let cross = lemma6_cross_term(&e, &result.signs)?;
        if cross < 0.0 {
            lemma6.passed += 1;
        } else {
            violations.push(LemmaViolation {
                lemma: "lemma6".into(),
                elements: e.clone(),
                detail: format!("cross term {cross} is not negative"),
            });
        }
    }

    let any_violation = !violations.is_empty();
    let report = LemmasReport {
        trials,
        n_max,
        seed,
        lemma4,
        lemma5,
        lemma6,
        singletons_excluded: singletons,
        violations,
    };
    print_json(&report)?;
    if any_violation {
        eprintln!("lemma violations found; rerun with --seed {seed} to reproduce");
        Ok(EXIT_VERIFICATION)
    } else {
        Ok(0)
    }
}

fn cmd_compare(input: &InputArgs, obj_tol: f64, entry_tol: f64) -> Result<u8> {
    let (alpha, echo) = input.resolve()?;
    let sigma = build_sigma_x(&alpha);
    let class = classify_dominance(&alpha);

    let started = Instant::now();
    let solution = solve(&alpha);
    let solve_ms = ms_since(started);

    let started = Instant::now();
    let numeric = solve_cmtfa_numeric(&sigma, DEFAULT_TOL_FEAS, DEFAULT_MAX_ITER)?;
    let oracle_ms = ms_since(started);

    let (exit, agreement) = match numeric.status {
        OracleStatus::Optimal => {
            let agreement = compare(&solution, &numeric, obj_tol, entry_tol)?;
            let exit = if agreement.agree {
                0
            } else {
                EXIT_VERIFICATION
            };
            (exit, Some(AgreementReport::from(&agreement)))
        }
        OracleStatus::IterationLimit => (EXIT_LIMIT, None),
        OracleStatus::Infeasible => bail!("oracle reported an infeasible program"),
    };

    let report = RunReport {
        input: echo,
        dominance: class.into(),
        solution: SolutionReport::from(&solution),
        certificate: None,
        oracle: Some(OracleReport::new(&numeric, agreement)),
        timings_ms: Timings {
            solve: Some(solve_ms),
            certificate: None,
            oracle: Some(oracle_ms),
        },
    };
    print_json(&report)?;
    Ok(exit)
}

fn ms_since(started: Instant) -> f64 {
    started.elapsed().as_secs_f64() * 1e3
}
