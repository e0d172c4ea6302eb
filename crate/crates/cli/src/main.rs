use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use hvconvex::centered::{solve_centered, CenteredOptions};
use hvconvex::hv::{reconstruct_hv, HvOptions, PlanMode};
use hvconvex::oracle::{generate_centered_instance, generate_instance};
use hvconvex::ryser::ryser_reconstruct;
use hvconvex::{BinaryGrid, Outcome, Projections};
use hvconvex_cli::{
    parse_grid, parse_instance, parse_instance_lenient, render, Format, InstanceFile,
};

#[derive(Parser)]
#[command(
    name = "hvconvex",
    version,
    about = "Reconstruct binary images from row and column sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a realization of an instance file.
    Reconstruct(ReconstructArgs),
    /// Check a grid against an instance file.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        grid: PathBuf,
    },
    /// Print a random instance with its witness as comments.
    Generate {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Make one row full.
        #[arg(long)]
        centered: bool,
        /// Also write the witness grid to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Time reconstructions of generated square instances.
    Bench {
        #[arg(long, value_enum, default_value_t = Mode::Hv)]
        mode: Mode,
        /// Comma separated side lengths.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(clap::Args)]
struct ReconstructArgs {
    /// Instance file, or `-` for standard input.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
    format: OutputFormat,
    /// Restrict the anchor rows tried (default).
    #[arg(long, overrides_with = "no_prune")]
    prune: bool,
    /// Try every pair of anchor rows.
    #[arg(long, overrides_with = "prune")]
    no_prune: bool,
    /// Re-check the output before printing it.
    #[arg(long)]
    verify: bool,
    /// Print progress of the algorithm on standard error.
    #[arg(long)]
    trace: bool,
    /// Try anchor pairs on all cores.
    #[arg(long)]
    parallel: bool,
    /// Accept out-of-range sums with a warning; such instances have no
    /// realization.
    #[arg(long)]
    lenient: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Centered when some row is full, otherwise hv.
    Auto,
    Hv,
    Centered,
    Ryser,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Ascii,
    Pbm,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Ascii => Format::Ascii,
            OutputFormat::Pbm => Format::Pbm,
        }
    }
}

/// Ways a command can end other than success.
enum Exit {
    NoRealization(String),
    Invalid(anyhow::Error),
    VerifyFailed(String),
}

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Self {
        Exit::Invalid(e)
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_instance(path: &Path, lenient: bool) -> Result<Projections, Exit> {
    let text = read_text(path)?;
    let located = |e: hvconvex_cli::ParseError| anyhow!("{}:{e}", path.display());
    let instance = if lenient {
        let (instance, warnings) = parse_instance_lenient(&text).map_err(located)?;
        if !warnings.is_empty() {
            for w in warnings {
                eprintln!("warning: {}:{w}", path.display());
            }
            return Err(Exit::NoRealization(
                "sums out of range, no realization exists".into(),
            ));
        }
        instance
    } else {
        parse_instance(&text).map_err(located)?
    };
    Ok(instance.projections().map_err(anyhow::Error::from)?)
}

fn reconstruct(args: &ReconstructArgs) -> Result<String, Exit> {
    let p = load_instance(&args.input, args.lenient)?;
    let mode = match args.mode {
        Mode::Auto if p.is_centered() => Mode::Centered,
        Mode::Auto => Mode::Hv,
        m => m,
    };
    let grid = match mode {
        Mode::Centered => {
            let options = CenteredOptions { trace: args.trace };
            let solution = solve_centered(&p, &options).map_err(anyhow::Error::from)?;
            for step in &solution.trace {
                eprintln!("{step}");
            }
            solution.tvector.map(|t| t.to_grid(&p))
        }
        Mode::Hv | Mode::Auto => {
            let options = HvOptions {
                plan: if args.no_prune {
                    PlanMode::Full
                } else {
                    PlanMode::Pruned
                },
                parallel: args.parallel,
                ..Default::default()
            };
            let result = reconstruct_hv(&p, &options).map_err(anyhow::Error::from)?;
            if args.trace {
                let s = &result.stats;
                eprintln!(
                    "anchors tried {}, clauses {}, solver {:.3} ms",
                    s.anchors_tried,
                    s.clauses_generated,
                    s.solver_time.as_secs_f64() * 1e3
                );
                if let Outcome::Success {
                    anchor: Some(a), ..
                } = &result.outcome
                {
                    let side = if a.transposed { " (transposed)" } else { "" };
                    eprintln!("anchored at k={} l={}{side}", a.k + 1, a.l + 1);
                }
            }
            result.into_grid()
        }
        Mode::Ryser => ryser_reconstruct(&p),
    };
    let Some(grid) = grid else {
        return Err(Exit::NoRealization(format!("no realization of {p}")));
    };
    if args.verify {
        verify(&grid, &p, mode != Mode::Ryser)?;
    }
    Ok(render(&grid, args.format.into()))
}

fn verify(grid: &BinaryGrid, p: &Projections, convex: bool) -> Result<(), Exit> {
    if !grid.is_realization(p).unwrap_or(false) {
        return Err(Exit::VerifyFailed("output does not match the sums".into()));
    }
    if convex && !grid.is_hv_convex_polyomino() {
        return Err(Exit::VerifyFailed(
            "output is not an hv-convex polyomino".into(),
        ));
    }
    Ok(())
}

fn check(input: &Path, grid: &Path) -> Result<String, Exit> {
    let p = load_instance(input, false)?;
    let text = read_text(grid)?;
    let g = parse_grid(&text).map_err(|e| anyhow!("{}:{e}", grid.display()))?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let realization = g.is_realization(&p).unwrap_or(false);
    let report = format!(
        "realization: {}\nhv-convex polyomino: {}\n",
        yes_no(realization),
        yes_no(g.is_hv_convex_polyomino())
    );
    if realization {
        Ok(report)
    } else {
        print!("{report}");
        Err(Exit::NoRealization(format!(
            "{} is not a realization of {}",
            grid.display(),
            input.display()
        )))
    }
}

fn generate(
    rows: usize,
    cols: usize,
    seed: u64,
    centered: bool,
    witness: Option<&Path>,
) -> Result<String, Exit> {
    if rows == 0 || cols == 0 {
        return Err(Exit::Invalid(anyhow!("--rows and --cols must be positive")));
    }
    let (grid, p) = if centered {
        generate_centered_instance(rows, cols, seed)
    } else {
        generate_instance(rows, cols, seed)
    };
    if let Some(path) = witness {
        fs::write(path, grid.to_string()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(InstanceFile::from(&p).with_witness(&grid))
}

fn bench(mode: Mode, sizes: &[usize], seed: u64) -> Result<String, Exit> {
    let mut out = String::from("mode\tm\tn\tmillis\tclauses\tanchors\n");
    for &size in sizes {
        if size == 0 {
            return Err(Exit::Invalid(anyhow!("sizes must be positive")));
        }
        let centered = matches!(mode, Mode::Centered | Mode::Auto);
        let (_, p) = if centered {
            generate_centered_instance(size, size, seed)
        } else {
            generate_instance(size, size, seed)
        };
        let start = Instant::now();
        let (name, found, clauses, anchors) = match mode {
            Mode::Hv => {
                let r = reconstruct_hv(&p, &HvOptions::default()).map_err(anyhow::Error::from)?;
                let s = &r.stats;
                ("hv", r.is_success(), s.clauses_generated, s.anchors_tried)
            }
            Mode::Centered | Mode::Auto => {
                let s =
                    solve_centered(&p, &CenteredOptions::default()).map_err(anyhow::Error::from)?;
                ("centered", s.tvector.is_some(), 0, 0)
            }
            Mode::Ryser => ("ryser", ryser_reconstruct(&p).is_some(), 0, 0),
        };
        let millis = start.elapsed().as_secs_f64() * 1e3;
        if !found {
            return Err(Exit::Invalid(anyhow!(
                "generated {size}x{size} instance was not solved"
            )));
        }
        out.push_str(&format!(
            "{name}\t{size}\t{size}\t{millis:.3}\t{clauses}\t{anchors}\n"
        ));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Reconstruct(args) => reconstruct(args),
        Command::Check { input, grid } => check(input, grid),
        Command::Generate {
            rows,
            cols,
            seed,
            centered,
            witness,
        } => generate(*rows, *cols, *seed, *centered, witness.as_deref()),
        Command::Bench { mode, sizes, seed } => bench(*mode, sizes, *seed),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Exit::NoRealization(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Exit::Invalid(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Exit::VerifyFailed(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
