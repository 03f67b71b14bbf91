//! `mmeuler`: mixed Eulerian numbers of matroids from the command line.
//!
//! Exit codes: 0 on success, 1 for bad input, 2 when two computations that
//! must agree do not.

mod check;
mod output;
mod descriptor;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use mixed_eulerian::chow::{enumerate_trees, pvol};
use mixed_eulerian::composition::{compositions, is_contiguous};
use mixed_eulerian::localization::gamma_degree_via_localization;
use mixed_eulerian::pmd::{lopsided_degree, pmd_profile, remixed_eulerian_eval};
use mixed_eulerian::recursion::{
    cv_polynomial, cv_via_tutte_convolution, deletion_contraction_degree, eulerian_recursion_degree,
};
use mixed_eulerian::tutte::{characteristic_data, tutte_polynomial, TutteMethod};
use mixed_eulerian::{Composition, DegreeCache, Matroid, WeightConvention};

use output::{emit, Format, OutputRecord};
use descriptor::MatroidDescriptor;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot parse {input:?} at position {position}: {message}")]
    Descriptor { input: String, position: usize, message: String },
    #[error(transparent)]
    Core(#[from] mixed_eulerian::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
    #[error("invariant violated: {0}")]
    Disagreement(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Disagreement(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "mmeuler", version, about = "Matroidal mixed Eulerian numbers")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct MatroidArg {
    /// uniform:R,N | boolean:N | pg:R,Q | sparse:R,N;012|345 | file:PATH
    #[arg(long)]
    matroid: String,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Exponents {
    /// Exponents c_1..c_n of γ_1..γ_n.
    #[arg(long, value_delimiter = ',')]
    c: Option<Vec<usize>>,
    /// Class indices v_1..v_r, one per factor.
    #[arg(long, value_delimiter = ',')]
    v: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Pipeline {
    Flag,
    Eulerian,
    Delcon,
    Localization,
    Lopsided,
    Convolution,
}

impl Pipeline {
    fn name(self) -> &'static str {
        match self {
            Pipeline::Flag => "flag",
            Pipeline::Eulerian => "eulerian",
            Pipeline::Delcon => "delcon",
            Pipeline::Localization => "localization",
            Pipeline::Lopsided => "lopsided",
            Pipeline::Convolution => "convolution",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Convention {
    Oi,
    Mult,
}

impl From<Convention> for WeightConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Oi => WeightConvention::Oi,
            Convention::Mult => WeightConvention::Mult,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    CorankNullity,
    DeletionContraction,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree of one monomial in the γ classes.
    Degree {
        #[command(flatten)]
        matroid: MatroidArg,
        #[command(flatten)]
        exponents: Exponents,
        #[arg(long, value_enum, default_value_t = Pipeline::Flag)]
        pipeline: Pipeline,
        #[arg(long, value_enum, default_value_t = Convention::Oi)]
        convention: Convention,
    },
    /// Degrees of every monomial of top degree.
    Table {
        #[command(flatten)]
        matroid: MatroidArg,
        /// Only monomials whose indices form an interval.
        #[arg(long)]
        contiguous_only: bool,
    },
    /// Tutte polynomial.
    Tutte {
        #[command(flatten)]
        matroid: MatroidArg,
        #[arg(long, value_enum, default_value_t = Method::CorankNullity)]
        method: Method,
    },
    /// Characteristic polynomial and the unsigned coefficients of its reduction.
    Charpoly {
        #[command(flatten)]
        matroid: MatroidArg,
    },
    /// Polynomial in y collecting deg(γ_v γ_n^s) as s varies.
    Cvpoly {
        #[command(flatten)]
        matroid: MatroidArg,
        #[arg(long, value_delimiter = ',', required = true)]
        v: Vec<usize>,
    },
    /// Sum of all mixed Eulerian numbers, weighted by multinomials.
    Pvol {
        #[command(flatten)]
        matroid: MatroidArg,
    },
    /// Remixed Eulerian number A_c(q).
    Remixed {
        #[arg(long)]
        r: usize,
        /// A positive rational such as 2 or 1/2.
        #[arg(long)]
        q: String,
        #[arg(long, value_delimiter = ',', required = true)]
        c: Vec<usize>,
    },
    /// Flat-filled binary trees and their weights.
    Trees {
        #[command(flatten)]
        matroid: MatroidArg,
        #[arg(long, value_delimiter = ',', required = true)]
        v: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Convention::Oi)]
        convention: Convention,
    },
    /// Run a verification suite on one matroid.
    Check {
        #[arg(long, value_enum)]
        suite: check::Suite,
        #[command(flatten)]
        matroid: MatroidArg,
    },
}

fn load(arg: &MatroidArg) -> Result<(MatroidDescriptor, Matroid), CliError> {
    let desc = MatroidDescriptor::parse(&arg.matroid)?;
    let m = desc.build()?;
    Ok((desc, m))
}

fn composition_of(m: &Matroid, e: &Exponents) -> Result<Composition, CliError> {
    let c = match (&e.c, &e.v) {
        (Some(c), None) => {
            if c.len() != m.n() {
                return Err(mixed_eulerian::Error::CompositionLength { expected: m.n(), found: c.len() }.into());
            }
            Composition::new(c.clone())
        }
        (None, Some(v)) => Composition::from_v(m.n(), v)?,
        _ => return Err(CliError::Usage("give exactly one of --c and --v".into())),
    };
    c.check_total(m.chow_dimension())?;
    Ok(c)
}

/// Largest ground set for which permutation sums are attempted.
const LOCALIZATION_LIMIT: usize = 10;

fn degree_by(m: &Matroid, c: &Composition, pipeline: Pipeline, conv: WeightConvention) -> Result<BigInt, CliError> {
    let v = c.to_v();
    Ok(match pipeline {
        Pipeline::Flag => DegreeCache::new(m, conv).degree(c)?,
        Pipeline::Eulerian => {
            let j = v
                .windows(2)
                .position(|w| w[0] == w[1])
                .ok_or_else(|| CliError::Usage(format!("{v:?} has no repeated index")))?;
            eulerian_recursion_degree(m, &v, j + 1, conv)?
        }
        Pipeline::Delcon => {
            let trailing = v.iter().rev().take_while(|&&x| x == m.n()).count();
            let mut last = None;
            for s in (0..=trailing).rev() {
                match deletion_contraction_degree(m, &v[..v.len() - s], s, 0) {
                    Ok(d) => return Ok(d),
                    Err(e) => last = Some(e),
                }
            }
            return Err(last.expect("at least one split").into());
        }
        Pipeline::Localization => {
            if m.size() > LOCALIZATION_LIMIT {
                return Err(CliError::Usage(format!(
                    "permutation sums are limited to ground sets of size {LOCALIZATION_LIMIT}"
                )));
            }
            gamma_degree_via_localization(m, c)?
        }
        Pipeline::Lopsided => {
            let p = pmd_profile(m)?;
            let mut by_rank = vec![0; p.r()];
            for k in c.support() {
                let i = p.sizes[..p.r()]
                    .iter()
                    .position(|&s| s == k)
                    .ok_or_else(|| CliError::Usage(format!("γ_{k} is not indexed by a flat size")))?;
                by_rank[i] = c.get(k);
            }
            lopsided_degree(m, &by_rank)?
        }
        Pipeline::Convolution => cv_via_tutte_convolution(m, &v)?,
    })
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    let start = Instant::now();
    let records = match &cli.command {
        Command::Degree { matroid, exponents, pipeline, convention } => {
            let (desc, m) = load(matroid)?;
            let c = composition_of(&m, exponents)?;
            let value = degree_by(&m, &c, *pipeline, (*convention).into())?;
            if *pipeline != Pipeline::Flag || *convention != Convention::Oi {
                let oracle = degree_by(&m, &c, Pipeline::Flag, WeightConvention::Oi)?;
                if oracle != value {
                    return Err(CliError::Disagreement(format!(
                        "{} gives {value}, flag expansion gives {oracle} for {c} on {desc}",
                        pipeline.name()
                    )));
                }
            }
            vec![OutputRecord {
                matroid: Some(desc.to_string()),
                c: Some(c.to_string()),
                pipeline: Some(pipeline.name().to_string()),
                ..OutputRecord::new("degree", value)
            }]
        }
        Command::Table { matroid, contiguous_only } => {
            let (desc, m) = load(matroid)?;
            let mut cache = DegreeCache::new(&m, WeightConvention::Oi);
            let mut rows = Vec::new();
            for c in compositions(m.chow_dimension(), m.n()) {
                let c = Composition::new(c);
                if *contiguous_only && !is_contiguous(&c.to_v()) {
                    continue;
                }
                let value = cache.degree(&c)?;
                rows.push(OutputRecord {
                    matroid: Some(desc.to_string()),
                    c: Some(c.to_string()),
                    pipeline: Some("flag".into()),
                    ..OutputRecord::new("table", value)
                });
            }
            rows
        }
        Command::Tutte { matroid, method } => {
            let (desc, m) = load(matroid)?;
            let method = match method {
                Method::CorankNullity => TutteMethod::CorankNullity,
                Method::DeletionContraction => TutteMethod::DeletionContraction,
            };
            let t = tutte_polynomial(&m, method);
            let terms: Vec<Value> = t
                .terms()
                .map(|(i, j, a)| serde_json::json!({ "x": i, "y": j, "coeff": a.to_string() }))
                .collect();
            vec![OutputRecord { matroid: Some(desc.to_string()), ..OutputRecord::new("tutte", &t) }
                .detail("terms", terms)]
        }
        Command::Charpoly { matroid } => {
            let (desc, m) = load(matroid)?;
            let d = characteristic_data(&m)?;
            let mu: Vec<Value> = d.mu.iter().map(|x| Value::from(x.to_string())).collect();
            vec![OutputRecord {
                matroid: Some(desc.to_string()),
                ..OutputRecord::new("charpoly", d.chi.display("λ"))
            }
            .detail("reduced", d.chi_reduced.display("λ"))
            .detail("mu", mu)]
        }
        Command::Cvpoly { matroid, v } => {
            let (desc, m) = load(matroid)?;
            let p = cv_polynomial(&m, v)?;
            let coeffs: Vec<Value> = p.coeffs().iter().map(|x| Value::from(x.to_string())).collect();
            vec![OutputRecord {
                matroid: Some(desc.to_string()),
                c: Some(format!("{v:?}")),
                ..OutputRecord::new("cvpoly", p.display("y"))
            }
            .detail("coefficients", coeffs)]
        }
        Command::Pvol { matroid } => {
            let (desc, m) = load(matroid)?;
            vec![OutputRecord { matroid: Some(desc.to_string()), ..OutputRecord::new("pvol", pvol(&m)) }]
        }
        Command::Remixed { r, q, c } => {
            let q: BigRational =
                q.parse().map_err(|_| CliError::Usage(format!("cannot parse q = {q:?} as a rational")))?;
            let value = remixed_eulerian_eval(*r, c, &q)?;
            vec![OutputRecord {
                c: Some(format!("{c:?}")),
                ..OutputRecord::new("remixed", value)
            }
            .detail("q", q.to_string())]
        }
        Command::Trees { matroid, v, convention } => {
            let (desc, m) = load(matroid)?;
            let trees = enumerate_trees(&m, v, (*convention).into())?;
            let total: BigRational = trees.iter().map(|(_, w)| w).sum();
            let listed: Vec<Value> = trees
                .iter()
                .map(|(t, w)| serde_json::json!({ "tree": t.to_string(), "weight": w.to_string() }))
                .collect();
            vec![OutputRecord {
                matroid: Some(desc.to_string()),
                c: Some(format!("{v:?}")),
                ..OutputRecord::new("trees", total)
            }
            .detail("count", trees.len())
            .detail("trees", listed)]
        }
        Command::Check { suite, matroid } => {
            let (desc, m) = load(matroid)?;
            let report = check::run_suite(*suite, &m)?;
            let record = OutputRecord {
                matroid: Some(desc.to_string()),
                pipeline: Some(suite.name().to_string()),
                ..OutputRecord::new("check", if report.failures.is_empty() { "pass" } else { "fail" })
            }
            .detail("cases", report.cases)
            .detail("failures", report.failures.clone());
            if !report.failures.is_empty() {
                let mut rec = record;
                rec.millis = start.elapsed().as_millis();
                emit(out, cli.format, &[rec])?;
                return Err(CliError::Disagreement(report.failures.join("; ")));
            }
            vec![record]
        }
    };
    let millis = start.elapsed().as_millis();
    let records: Vec<OutputRecord> = records.into_iter().map(|r| OutputRecord { millis, ..r }).collect();
    emit(out, cli.format, &records)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
