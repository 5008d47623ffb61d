use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use freeconv::convolve::{ConvolutionOp, ConvolutionRequest};
use freeconv::measure::{atoms_json, jacobi_json, measure_from_str, moments_json, stieltjes_density, Representation};
use freeconv::opmodel::{free_product_ball, graph_comb, graph_orthogonal, graph_star, RootedGraph};
use freeconv::scalar::format_rational;
use freeconv::verify::{self, Suite, VerifyConfig};
use freeconv::{Error, MeasureRep, Rational};

#[derive(Parser)]
#[command(name = "freeconv", version, about = "Convolutions of probability measures in noncommutative probability")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convolve two measure files and print the result as JSON.
    Convolve {
        #[arg(value_enum)]
        op: Op,
        /// Nesting depth for `orthogonal-iter`, otherwise the first measure file.
        args: Vec<String>,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Density of a measure on a uniform grid by Stieltjes inversion, as CSV.
    Density {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value_t = -3.0)]
        xmin: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 3.0)]
        xmax: f64,
        #[arg(long, default_value_t = 601)]
        points: usize,
        #[arg(long, default_value_t = 1e-6)]
        epsilon: f64,
        #[arg(long, default_value_t = 64)]
        depth: usize,
    },
    /// Run the seeded self-check suites; exit status 1 names the first failure.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Product of two rooted graph files, with its root spectral moments.
    Graph {
        #[arg(value_enum)]
        op: GraphOp,
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long, default_value_t = 4)]
        radius: usize,
        #[arg(long, default_value_t = 8)]
        moments: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Free,
    Boolean,
    Monotone,
    Orthogonal,
    Sfree,
    OrthogonalIter,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Partitions,
    Convolutions,
    Opmodel,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOp {
    Orthogonal,
    Comb,
    Star,
    FreeBall,
}

/// Exit statuses for library errors.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidParameter(_) => 2,
        Error::NotAMomentSequence { .. } => 3,
        Error::RouteMismatch { .. } => 4,
        Error::Domain(_) | Error::NumericalSingularity(_) => 5,
        _ => 1,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Reads a measure file, rejecting moment data that no positive measure has.
fn read_measure(path: &Path, order: usize) -> Result<MeasureRep<Rational>, Error> {
    let m = measure_from_str(&read(path)?)?;
    if matches!(m.representation(), Representation::Moments(_)) {
        m.jacobi()?;
    }
    m.moments(order)?;
    Ok(m)
}

fn convolve(op: Op, args: &[String], order: usize, output: Output) -> Result<(), Error> {
    if order == 0 {
        return Err(Error::InvalidParameter("--order must be at least 1".into()));
    }
    let (op, files) = match op {
        Op::OrthogonalIter => {
            let (m, rest) = args.split_first().ok_or_else(|| Error::Parse("orthogonal-iter needs m".into()))?;
            let m = m.parse().map_err(|_| Error::Parse(format!("nesting depth {m:?} is not a count")))?;
            (ConvolutionOp::OrthogonalIterated(m), rest)
        }
        Op::Free => (ConvolutionOp::Free, args),
        Op::Boolean => (ConvolutionOp::Boolean, args),
        Op::Monotone => (ConvolutionOp::Monotone, args),
        Op::Orthogonal => (ConvolutionOp::Orthogonal, args),
        Op::Sfree => (ConvolutionOp::SFree, args),
    };
    let [mu, nu] = files else {
        return Err(Error::Parse(format!("expected two measure files, got {}", files.len())));
    };
    let mu = read_measure(Path::new(mu), order)?;
    let nu = read_measure(Path::new(nu), order)?;
    let out = ConvolutionRequest { mu, nu, op, order }.run()?;
    let moments = out.moments(order)?;
    match output {
        Output::Json => {
            let mut v = moments_json(&moments);
            if let Ok(j) = out.jacobi() {
                v["jacobi"] = jacobi_json(&j);
            }
            if let Some(a) = out.atoms() {
                v["atoms"] = atoms_json(&a)["atoms"].clone();
            }
            println!("{v}");
        }
        Output::Table => {
            println!("n,m");
            for (n, m) in moments.as_slice().iter().enumerate() {
                println!("{},{}", n + 1, format_rational(m));
            }
        }
    }
    Ok(())
}

fn density(file: &Path, xmin: f64, xmax: f64, points: usize, epsilon: f64, depth: usize) -> Result<(), Error> {
    if !(xmin < xmax) || points < 2 {
        return Err(Error::Domain("need xmin < xmax and at least two points".into()));
    }
    let m = measure_from_str(&read(file)?)?;
    let grid: Vec<f64> = (0..points).map(|i| xmin + (xmax - xmin) * i as f64 / (points - 1) as f64).collect();
    let rows = stieltjes_density(&m, &grid, epsilon, depth)?;
    let mut out = String::from("x,f\n");
    for (x, f) in rows {
        out.push_str(&format!("{x},{f}\n"));
    }
    print!("{out}");
    Ok(())
}

fn graph(op: GraphOp, g1: &Path, g2: &Path, radius: usize, n: usize) -> Result<(), Error> {
    let g1: RootedGraph = read(g1)?.parse()?;
    let g2: RootedGraph = read(g2)?.parse()?;
    let g = match op {
        GraphOp::Orthogonal => graph_orthogonal(&g1, &g2),
        GraphOp::Comb => graph_comb(&g1, &g2),
        GraphOp::Star => graph_star(&g1, &g2),
        GraphOp::FreeBall => {
            if radius == 0 {
                return Err(Error::InvalidParameter("--radius must be at least 1".into()));
            }
            free_product_ball(&g1, &g2, radius)
        }
    };
    let v: Value = json!({ "graph": g.to_json(), "moments": moments_json(&g.root_spectral_moments(n))["m"] });
    println!("{v}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Convolve { op, args, order, output } => convolve(op, &args, order, output),
        Command::Density { file, xmin, xmax, points, epsilon, depth } => {
            density(&file, xmin, xmax, points, epsilon, depth)
        }
        Command::Graph { op, g1, g2, radius, moments } => graph(op, &g1, &g2, radius, moments),
        Command::Verify { suite, n_max, seed } => {
            let suite = match suite {
                SuiteArg::Partitions => Suite::Partitions,
                SuiteArg::Convolutions => Suite::Convolutions,
                SuiteArg::Opmodel => Suite::OpModel,
                SuiteArg::All => Suite::All,
            };
            let report = verify::run(&VerifyConfig { suite, n_max, seed, ..Default::default() });
            println!("{report}");
            return match report.first_failure() {
                None => ExitCode::SUCCESS,
                Some(f) => {
                    eprintln!("first failing identity: {}", f.name);
                    ExitCode::from(1)
                }
            };
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
