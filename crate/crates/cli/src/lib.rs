//! Command-line front end for `matradix`.
//!
//! Every command reads a matrix file and writes deterministic JSON (or CSV
//! for `atlas`). Exit codes: 0 success, 2 input error, 3 domain violation,
//! 4 internal inconsistency.

pub mod document;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use matradix::criteria::{DEFAULT_BETA_MAX};
use matradix::{
    atlas, bounds_report, check_conditions, cross_validate, evaluate, find_power, pseudodigits, represent,
    transport, verify_dilation, BoxConvention, DigitSet, Error, IntMatrix, PseudodigitTable, Representation,
    Threshold,
};
use serde_json::{json, Value};

use document::{json_int_vector, parse_vector, parse_vector_list, MatrixDocument};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                Error::EmptyMatrix
                | Error::NotSquare { .. }
                | Error::DimensionMismatch { .. }
                | Error::DigitNotInSet(_)
                | Error::NotInLattice => 2,
                Error::Singular
                | Error::NotDilation { .. }
                | Error::NotNormal
                | Error::NonIntegralTransport
                | Error::PowerNotFound { .. } => 3,
                Error::ResidueSystem { .. }
                | Error::StepBudget(_)
                | Error::UnknownCycle(_)
                | Error::Inconsistent(_) => 4,
            },
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "matradix", version, about = "Radix and pseudodigit representations for integer dilation matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ConventionArg {
    /// [-1/2, 1/2)ⁿ
    F,
    /// (-1/2, 1/2]ⁿ
    U,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ThresholdArg {
    /// μ > 2
    #[value(name = "mu2")]
    Mu2,
    /// μ > 2√n
    #[value(name = "mu2sqrtn")]
    Mu2SqrtN,
}

#[derive(clap::Args, Debug)]
pub struct SystemArgs {
    /// Matrix file (JSON).
    pub matrix: PathBuf,
    /// Half-open box defining the canonical digit set.
    #[arg(long, value_enum, default_value = "f")]
    pub convention: ConventionArg,
    /// Explicit digit set as a JSON list of vectors, replacing the canonical one.
    #[arg(long, value_name = "JSON")]
    pub digits: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the digit set.
    Digits(SystemArgs),
    /// Find every nonzero cycle of the division algorithm.
    Pseudodigits(SystemArgs),
    /// Encode a vector, or decode a representation with --decode.
    Represent {
        #[command(flatten)]
        system: SystemArgs,
        /// Vector such as "1,-2" or "[1,-2]"; with --decode, representation
        /// JSON or @path to a file holding it.
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[arg(long)]
        decode: bool,
    },
    /// Evaluate the sufficient conditions and cross-check them against the
    /// pseudodigit search.
    Check {
        matrix: PathBuf,
    },
    /// Smallest power of the matrix passing a singular-value threshold.
    Power {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "mu2")]
        threshold: ThresholdArg,
        #[arg(long, default_value_t = DEFAULT_BETA_MAX)]
        beta_max: u32,
    },
    /// Points with radix or pseudodigit representations of length at most N.
    Atlas {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        n_max: usize,
        /// CSV output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Move a map on the lattice spanned by the columns of a basis to
    /// coefficient coordinates.
    Transport {
        /// Map on the ambient space (JSON, rational or complex entries).
        matrix: PathBuf,
        /// Basis matrix whose columns span the lattice.
        #[arg(long)]
        basis: PathBuf,
    },
}

struct System {
    name: Option<String>,
    ds: DigitSet,
}

impl System {
    fn load(args: &SystemArgs) -> Result<Self, CliError> {
        let doc = MatrixDocument::load(&args.matrix)?;
        let a = doc.to_integer()?;
        let ds = match &args.digits {
            Some(list) => DigitSet::from_digits(&a, parse_vector_list(list)?)?,
            None => DigitSet::new(&a, convention(args.convention))?,
        };
        Ok(System { name: doc.name, ds })
    }

    fn table(&self) -> Result<PseudodigitTable, CliError> {
        let br = bounds_report(self.ds.matrix())?;
        Ok(pseudodigits(&self.ds, &br)?)
    }

    fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }
}

fn convention(c: ConventionArg) -> BoxConvention {
    match c {
        ConventionArg::F => BoxConvention::F,
        ConventionArg::U => BoxConvention::U,
    }
}

fn parse_representation(text: &str) -> Result<Representation, CliError> {
    let text = match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?,
        None => text.to_string(),
    };
    let v: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("malformed representation: {e}")))?;
    let digits = match v.get("digits") {
        Some(Value::Array(ds)) => ds.iter().map(json_int_vector).collect::<Result<Vec<_>, _>>()?,
        _ => return Err(CliError::Input("representation needs a \"digits\" array".into())),
    };
    match v.get("kind").and_then(Value::as_str) {
        Some("radix") => {
            if digits.is_empty() {
                return Err(CliError::Input("radix representation needs at least one digit".into()));
            }
            Ok(Representation::Radix { digits })
        }
        Some("pseudo") => {
            let s = v
                .get("pseudodigit")
                .ok_or_else(|| CliError::Input("pseudo representation needs \"pseudodigit\"".into()))?;
            Ok(Representation::Pseudo { digits, pseudodigit: json_int_vector(s)? })
        }
        _ => Err(CliError::Input("\"kind\" must be \"radix\" or \"pseudo\"".into())),
    }
}

fn atlas_csv(dim: usize, atlas: &matradix::Atlas) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    let mut header: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
    header.push("tag".into());
    w.write_record(&header).map_err(io)?;
    for (points, tag) in [(&atlas.radix, "radix"), (&atlas.pseudo, "pseudo")] {
        for p in points {
            let mut rec: Vec<String> = p.iter().map(ToString::to_string).collect();
            rec.push(tag.into());
            w.write_record(&rec).map_err(io)?;
        }
    }
    w.into_inner().map_err(|e| CliError::Io(e.to_string()))
}

fn check(doc: &MatrixDocument) -> Result<Value, CliError> {
    let a: IntMatrix = doc.to_integer()?;
    let report = check_conditions(&a)?;
    let mut out = render::conditions(doc.name.as_deref(), &a, &report);
    let cv = if verify_dilation(&a) { Some(render::consistency(&cross_validate(&a)?)) } else { None };
    out.insert("cross_validation".into(), cv.unwrap_or(Value::Null));
    Ok(Value::Object(out))
}

/// Runs one command and returns the bytes for stdout.
pub fn run(cli: &Cli) -> Result<Vec<u8>, CliError> {
    let text = |v: Value| Ok(render::to_text(&v).into_bytes());
    match &cli.command {
        Command::Digits(args) => {
            let sys = System::load(args)?;
            text(render::digit_set(sys.name(), &sys.ds))
        }
        Command::Pseudodigits(args) => {
            let sys = System::load(args)?;
            let table = sys.table()?;
            text(render::table(sys.name(), &sys.ds, &table))
        }
        Command::Represent { system, value, decode } => {
            let sys = System::load(system)?;
            if *decode {
                let rep = parse_representation(value)?;
                text(render::vector(&evaluate(&sys.ds, &rep)?))
            } else {
                let x = parse_vector(value)?;
                if x.len() != sys.ds.dim() {
                    return Err(Error::DimensionMismatch { expected: sys.ds.dim(), found: x.len() }.into());
                }
                let table = sys.table()?;
                let rep = represent(&sys.ds, &table, &x)?;
                if evaluate(&sys.ds, &rep)? != x {
                    return Err(Error::Inconsistent(format!("representation of {x:?} does not decode to it")).into());
                }
                text(render::representation(&rep))
            }
        }
        Command::Check { matrix } => text(check(&MatrixDocument::load(matrix)?)?),
        Command::Power { matrix, threshold, beta_max } => {
            let doc = MatrixDocument::load(matrix)?;
            let a = doc.to_integer()?;
            let thr = match threshold {
                ThresholdArg::Mu2 => Threshold::MuGt2,
                ThresholdArg::Mu2SqrtN => Threshold::MuGt2SqrtN,
            };
            let r = find_power(&a, thr, *beta_max)?;
            text(json!({
                "name": doc.name,
                "threshold": match thr { Threshold::MuGt2 => "mu2", Threshold::MuGt2SqrtN => "mu2sqrtn" },
                "t_sq": render::rational(&thr.t_sq(a.dim())),
                "beta": r.beta,
                "power": render::int_matrix(&r.power),
                "certificate": render::certificate(&r.certificate),
            }))
        }
        Command::Atlas { system, n_max, out } => {
            let sys = System::load(system)?;
            let table = sys.table()?;
            let at = atlas(&sys.ds, &table, *n_max);
            let bytes = atlas_csv(sys.ds.dim(), &at)?;
            match out {
                None => Ok(bytes),
                Some(path) => {
                    std::fs::write(path, &bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                    text(json!({ "radix": at.radix.len(), "pseudo": at.pseudo.len(), "out": path.display().to_string() }))
                }
            }
        }
        Command::Transport { matrix, basis } => {
            let a = MatrixDocument::load(matrix)?;
            let m = MatrixDocument::load(basis)?;
            let b = if a.is_real() && m.is_real() {
                transport(&m.to_rational()?, &a.to_rational()?)?.transported().clone()
            } else {
                transport(&m.to_gaussian()?, &a.to_gaussian()?)?.transported().clone()
            };
            text(json!({
                "name": a.name,
                "n": b.dim(),
                "rows": render::int_matrix(&b),
                "is_dilation": verify_dilation(&b),
            }))
        }
    }
}
