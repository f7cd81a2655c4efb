//! Command-line front end: solve and verify instance files, generate random
//! instances, and benchmark the solver.
//!
//! Exit codes: 0 success, 1 parse error, 2 invalid instance, 3 verification
//! failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use absched::dp::solve;
use absched::format::{parse_instance, parse_solution, to_json_pretty, SolutionFile};
use absched::generate::{generate_instance, GenConfig};
use absched::instance::CostMode;
use absched::reconstruct::validate_schedule;

const EXIT_PARSE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "absched",
    about = "Exact makespan minimization for alternating-batch scheduling of two job types",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Quadratic,
    Linear,
}

impl From<ModeArg> for CostMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Quadratic => CostMode::Quadratic,
            ModeArg::Linear => CostMode::Linear,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file and write the solution as JSON
    Solve {
        /// Instance JSON file
        input: PathBuf,
        /// Write the solution here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Override the cost mode from the file (warns on stderr)
        #[arg(long, value_enum)]
        force_mode: Option<ModeArg>,
    },
    /// Check a solution file against its instance
    Verify {
        /// Instance JSON file
        instance: PathBuf,
        /// Solution JSON file
        solution: PathBuf,
    },
    /// Generate a random instance
    Gen {
        /// Number of machines
        #[arg(long, default_value_t = 2)]
        machines: u64,
        /// Number of A-jobs
        #[arg(long)]
        na: u64,
        /// Number of B-jobs
        #[arg(long)]
        nb: u64,
        /// Upper bound for the drawn speeds and overheads
        #[arg(long, default_value_t = 10)]
        param_max: u64,
        /// Draw parameters from [0, param-max] instead of [1, param-max]
        #[arg(long)]
        allow_zero: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "quadratic")]
        mode: ModeArg,
        /// Write the instance here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time full solves over a range of sizes; emits CSV
    Bench {
        /// Comma-separated job counts; each run uses nA = nB = n
        #[arg(long, value_delimiter = ',', default_value = "250,500,1000,2000")]
        sizes: Vec<u64>,
        /// Number of machines
        #[arg(long, default_value_t = 4)]
        machines: u64,
        /// Timed repetitions per size (fresh instance each)
        #[arg(long, default_value_t = 3)]
        repeats: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Upper bound for the generated parameters
        #[arg(long, default_value_t = 10)]
        param_max: u64,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl ToString) -> Self {
        Self {
            code,
            message: message.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve {
            input,
            output,
            force_mode,
        } => cmd_solve(&input, output.as_deref(), force_mode),
        Command::Verify { instance, solution } => cmd_verify(&instance, &solution),
        Command::Gen {
            machines,
            na,
            nb,
            param_max,
            allow_zero,
            seed,
            mode,
            output,
        } => {
            let cfg = GenConfig {
                machines,
                n_a: na,
                n_b: nb,
                param_max,
                allow_zero,
                seed,
                mode: mode.into(),
            };
            let inst = generate_instance(&cfg).map_err(|e| CliError::new(EXIT_INVALID, e))?;
            write_output(output.as_deref(), &to_json_pretty(&inst))
        }
        Command::Bench {
            sizes,
            machines,
            repeats,
            seed,
            param_max,
            output,
        } => cmd_bench(&sizes, machines, repeats, seed, param_max, output.as_deref()),
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, contents)
            .map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display()))),
        None => {
            print!("{contents}");
            std::io::stdout()
                .flush()
                .map_err(|e| CliError::new(EXIT_PARSE, e))
        }
    }
}

fn cmd_solve(
    input: &Path,
    output: Option<&Path>,
    force_mode: Option<ModeArg>,
) -> Result<(), CliError> {
    let bytes = read_file(input)?;
    let mut inst = parse_instance(&bytes).map_err(|e| CliError::new(EXIT_PARSE, e))?;
    if let Some(mode) = force_mode {
        let mode = CostMode::from(mode);
        if mode != inst.mode {
            eprintln!(
                "warning: overriding cost mode '{}' from the file with '{}'",
                inst.mode, mode
            );
            inst.mode = mode;
        }
    }
    inst.validate().map_err(|e| CliError::new(EXIT_INVALID, e))?;
    let result = solve(&inst);
    let doc = SolutionFile::from_schedule(&result.schedule);
    write_output(output, &to_json_pretty(&doc))
}

fn cmd_verify(instance: &Path, solution: &Path) -> Result<(), CliError> {
    let inst_bytes = read_file(instance)?;
    let inst = parse_instance(&inst_bytes).map_err(|e| CliError::new(EXIT_PARSE, e))?;
    inst.validate().map_err(|e| CliError::new(EXIT_INVALID, e))?;
    let sol_bytes = read_file(solution)?;
    let doc = parse_solution(&sol_bytes).map_err(|e| CliError::new(EXIT_PARSE, e))?;
    let claimed = doc.makespan;
    let schedule = doc
        .into_schedule(inst.machine_count())
        .map_err(|e| CliError::new(EXIT_VERIFY, e))?;
    validate_schedule(&inst, &schedule, claimed).map_err(|e| CliError::new(EXIT_VERIFY, e))?;
    println!("ok: makespan {claimed}");
    Ok(())
}

fn cmd_bench(
    sizes: &[u64],
    machines: u64,
    repeats: u32,
    seed: u64,
    param_max: u64,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let mut csv = String::from("n,p,mean_ms,stddev_ms\n");
    for &n in sizes {
        let mut samples = Vec::with_capacity(repeats as usize);
        for rep in 0..repeats.max(1) {
            let cfg = GenConfig {
                machines,
                n_a: n,
                n_b: n,
                param_max,
                allow_zero: false,
                seed: seed ^ (n << 20) ^ u64::from(rep),
                mode: CostMode::Quadratic,
            };
            let inst = generate_instance(&cfg).map_err(|e| CliError::new(EXIT_INVALID, e))?;
            let start = Instant::now();
            let result = solve(&inst);
            samples.push(start.elapsed().as_secs_f64() * 1e3);
            std::hint::black_box(result.makespan);
        }
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        let stddev = if samples.len() > 1 {
            let var = samples.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>()
                / (samples.len() - 1) as f64;
            var.sqrt()
        } else {
            0.0
        };
        csv.push_str(&format!("{n},{machines},{mean:.3},{stddev:.3}\n"));
    }
    write_output(output, &csv)
}
