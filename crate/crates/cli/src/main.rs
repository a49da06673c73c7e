//! `ybr`: exact construction, verification and classification of unitary
//! involutive Yang-Baxter solutions over the JSON matrix format.
//!
//! Exit codes: 0 success, 2 usage, 3 validation, 4 budget, 5 I/O.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use num_traits::ToPrimitive;

use yb_core::json;
use yb_core::oracle;
use yb_core::partitions::{CycleType, Partition, PartitionPair};
use yb_core::rmatrix::{diagonal_type, normal_form, tl_classify, tl_exists, RMatrix};
use yb_core::scalar::render_rational;
use yb_core::series::{hilbert_minus, hilbert_plus, RationalFunction};
use yb_core::symfun::lambda_op;
use yb_core::thoma::normalize;

const EXIT_USAGE: u8 = 2;
const EXIT_VALIDATION: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_IO: u8 = 5;

struct Failure {
    code: u8,
    message: String,
}

type CliResult<T> = Result<T, Failure>;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<yb_core::Error> for Failure {
    fn from(e: yb_core::Error) -> Failure {
        let code = match e {
            yb_core::Error::Budget(_) => EXIT_BUDGET,
            _ => EXIT_VALIDATION,
        };
        fail(code, e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "ybr",
    version,
    about = "Involutive Yang-Baxter solutions: verify, classify, construct"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check unitarity, involutivity and the Yang-Baxter identity of a matrix file
    Verify { file: PathBuf },
    /// Classify a solution by its pair of Young diagrams and Thoma parameters
    Classify {
        file: PathBuf,
        /// Render Thoma parameters as decimal approximations
        #[arg(long)]
        decimal: bool,
    },
    /// Write the normal-form solution of a classification pair
    Construct {
        #[arg(
            long,
            default_value = "[]",
            help = "Plus diagram, e.g. \"[3,1]\" or \"[]\""
        )]
        plus: String,
        /// Minus diagram
        #[arg(long, default_value = "[]")]
        minus: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build a diagonal-type solution from a phase-matrix file
    Diagonal {
        phases: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Box sum of two solutions
    Boxsum {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Box tensor of two solutions
    Boxtensor {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Normalized character value on a cycle type
    Character {
        file: PathBuf,
        #[arg(long, help = "Cycle type, e.g. \"[3,2]\" (fixed points included)")]
        cycles: String,
        #[arg(long)]
        decimal: bool,
    },
    /// Decompose the level-n representations into irreducible multiplicities
    Decompose {
        file: PathBuf,
        /// Highest level to decompose
        #[arg(long)]
        n: u64,
        /// Use the explicit tensor-power matrix oracle (d <= 2, n <= 4)
        #[arg(long)]
        oracle: bool,
    },
    /// Hilbert-Poincare series of a solution or of a classification pair
    Hilbert {
        /// Matrix file; alternatively give --plus/--minus
        file: Option<PathBuf>,
        #[arg(long)]
        plus: Option<String>,
        #[arg(long)]
        minus: Option<String>,
        /// Which series: "plus" (trivial) or "minus" (alternating)
        #[arg(long, default_value = "minus")]
        side: String,
        /// Number of series coefficients to print (inclusive order)
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Lambda-operation on a classification pair
    Lambda {
        #[arg(long, default_value = "[]")]
        plus: String,
        #[arg(long, default_value = "[]")]
        minus: String,
        #[arg(long)]
        n: usize,
    },
    /// Check for a Temperley-Lieb solution with given dimension and rank
    TlCheck { d: usize, r: usize },
    /// Table of all Temperley-Lieb (d, r, k) triples up to a dimension
    TlTable {
        #[arg(long)]
        dmax: usize,
    },
    /// Equivalence of two solutions (similar partial traces)
    Equiv { left: PathBuf, right: PathBuf },
}

fn read_file(path: &PathBuf) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_IO, format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &PathBuf, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents)
        .map_err(|e| fail(EXIT_IO, format!("cannot write {}: {e}", path.display())))
}

fn read_rmatrix(path: &PathBuf) -> CliResult<RMatrix> {
    Ok(json::rmatrix_from_json(&read_file(path)?)?)
}

fn parse_partition(text: &str, what: &str) -> CliResult<Partition> {
    text.parse()
        .map_err(|e| fail(EXIT_USAGE, format!("bad {what} partition: {e}")))
}

fn rational_list(values: &[BigRational], decimal: bool) -> String {
    let rendered: Vec<String> = values
        .iter()
        .map(|v| {
            if decimal {
                format!("{}", v.to_f64().unwrap_or(f64::NAN))
            } else {
                render_rational(v)
            }
        })
        .collect();
    format!("[{}]", rendered.join(","))
}

fn classification_line(r: &RMatrix, decimal: bool) -> CliResult<String> {
    let cls = r.classify()?;
    let params = normalize(&cls)?;
    Ok(format!(
        "plus={} minus={} d={} alpha={} beta={}",
        cls.plus,
        cls.minus,
        r.dim(),
        rational_list(params.alpha(), decimal),
        rational_list(params.beta(), decimal),
    ))
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Verify { file } => {
            read_rmatrix(&file)?;
            println!("unitary: ok, involutive: ok, yang-baxter: ok");
        }
        Command::Classify { file, decimal } => {
            let r = read_rmatrix(&file)?;
            println!("{}", classification_line(&r, decimal)?);
        }
        Command::Construct {
            plus,
            minus,
            output,
        } => {
            let pair = PartitionPair::new(
                parse_partition(&plus, "plus")?,
                parse_partition(&minus, "minus")?,
            );
            let r = normal_form(&pair)?;
            write_file(&output, &json::rmatrix_to_json(&r))?;
            println!(
                "wrote {}: plus={} minus={} d={}",
                output.display(),
                pair.plus,
                pair.minus,
                r.dim()
            );
        }
        Command::Diagonal { phases, output } => {
            let matrix = json::phases_from_json(&read_file(&phases)?)?;
            let r = diagonal_type(&matrix)?;
            write_file(&output, &json::rmatrix_to_json(&r))?;
            println!(
                "wrote {}: {}",
                output.display(),
                classification_line(&r, false)?
            );
        }
        Command::Boxsum {
            left,
            right,
            output,
        } => {
            let r = read_rmatrix(&left)?.box_sum(&read_rmatrix(&right)?);
            write_file(&output, &json::rmatrix_to_json(&r))?;
            println!(
                "wrote {}: {}",
                output.display(),
                classification_line(&r, false)?
            );
        }
        Command::Boxtensor {
            left,
            right,
            output,
        } => {
            let r = read_rmatrix(&left)?.box_tensor(&read_rmatrix(&right)?);
            write_file(&output, &json::rmatrix_to_json(&r))?;
            println!(
                "wrote {}: {}",
                output.display(),
                classification_line(&r, false)?
            );
        }
        Command::Character {
            file,
            cycles,
            decimal,
        } => {
            let r = read_rmatrix(&file)?;
            let cycles: CycleType = cycles
                .parse()
                .map_err(|e| fail(EXIT_USAGE, format!("bad cycle type: {e}")))?;
            let value = r.character(&cycles);
            if decimal {
                println!("{}", value.to_f64().unwrap_or(f64::NAN));
            } else {
                println!("{}", render_rational(&value));
            }
        }
        Command::Decompose { file, n, oracle } => {
            let r = read_rmatrix(&file)?;
            let levels = (1..=n)
                .map(|level| {
                    if oracle {
                        oracle::decompose_explicit(&r, level)
                    } else {
                        oracle::decompose(&r, level)
                    }
                })
                .collect::<yb_core::Result<Vec<_>>>()?;
            for decomposition in levels {
                println!("{decomposition}");
            }
        }
        Command::Hilbert {
            file,
            plus,
            minus,
            side,
            order,
        } => {
            let pair = match (&file, &plus, &minus) {
                (Some(path), None, None) => read_rmatrix(path)?.classify()?,
                (None, plus, minus) if plus.is_some() || minus.is_some() => PartitionPair::new(
                    parse_partition(plus.as_deref().unwrap_or("[]"), "plus")?,
                    parse_partition(minus.as_deref().unwrap_or("[]"), "minus")?,
                ),
                _ => {
                    return Err(fail(
                        EXIT_USAGE,
                        "give either a matrix file or --plus/--minus diagrams",
                    ))
                }
            };
            let (label, series): (&str, RationalFunction) = match side.as_str() {
                "minus" => ("H^-", hilbert_minus(&pair)),
                "plus" => ("H^+", hilbert_plus(&pair)),
                other => return Err(fail(EXIT_USAGE, format!("bad --side {other:?}"))),
            };
            println!("{label}(z) = {series}");
            let coeffs: Vec<String> = series.series(order).iter().map(|c| c.to_string()).collect();
            println!("series: {}", coeffs.join(","));
        }
        Command::Lambda { plus, minus, n } => {
            let pair = PartitionPair::new(
                parse_partition(&plus, "plus")?,
                parse_partition(&minus, "minus")?,
            );
            let result = lambda_op(n, &pair);
            println!("plus={} minus={}", result.plus, result.minus);
        }
        Command::TlCheck { d, r } => match tl_exists(d, r) {
            Some(k) => {
                let cls = tl_classify(d, r)?;
                let params = normalize(&cls)?;
                println!(
                    "exists: k={k} plus={} minus={} beta={}",
                    cls.plus,
                    cls.minus,
                    rational_list(params.beta(), false)
                );
            }
            None => println!("exists: no"),
        },
        Command::TlTable { dmax } => {
            let mut out = String::new();
            for d in 1..=dmax {
                for r in 0..=d * d {
                    if let Some(k) = tl_exists(d, r) {
                        writeln!(out, "d={d} r={r} k={k}").expect("string write");
                    }
                }
            }
            print!("{out}");
        }
        Command::Equiv { left, right } => {
            let a = read_rmatrix(&left)?;
            let b = read_rmatrix(&right)?;
            println!("equivalent: {}", a.is_equivalent_to(&b));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
