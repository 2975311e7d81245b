//! Command-line front end for the `cgraph` library.
//!
//! [`run`] parses arguments and produces a JSON report plus an exit code:
//! 0 on success, 1 when a check fails, 2 on usage or input errors.

pub mod formats;
pub mod sweep;

use std::io::Read;
use std::path::PathBuf;

use cgraph::charpoly::{psi_full, psi_pi, trivial_exponents};
use cgraph::quotient::{check_equitable, quotient_matrix, structural_identity_holds};
use cgraph::recognize::{recognize, representations};
use cgraph::spectra::{
    charpoly_oracle, distinct_count_bound, distinct_eigenvalue_count, inertia_formula, inertia_from_poly,
    interval_check, multiplicities_from_poly, multiplicity_formula, quotient_inertia, quotient_minus_one, Inertia,
    MultiplicityReport,
};
use cgraph::{build_cgraph, Composition, IntMatrix, IntPoly};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::formats::{GraphFile, GraphFormat};
use crate::sweep::{sweep, Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cgraph", version, about = "Exact spectral reports for C-graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build C(alpha) and serialize it.
    Build {
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        /// Write the graph here instead of embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient matrix of the construction partition.
    Quotient {
        #[arg(long)]
        alpha: String,
    },
    /// Characteristic polynomials of the quotient and of the graph.
    Charpoly {
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = Via::Formula)]
        via: Via,
    },
    /// Inertia, trivial multiplicities, eigenvalue-free interval.
    Spectrum {
        #[arg(long)]
        alpha: String,
        /// Cross-check every formula against the characteristic polynomial.
        #[arg(long)]
        check: bool,
    },
    /// Decide membership of a graph read from a file (`-` for stdin).
    Recognize {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Check every even composition up to the given order.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Comma-separated subset of checks; all by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Via {
    Formula,
    Oracle,
    Both,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn report<T: Serialize>(report: &T, passed: bool) -> Self {
        let mut stdout = serde_json::to_string_pretty(report).expect("reports serialize");
        stdout.push('\n');
        let code = if passed { EXIT_OK } else { EXIT_CHECK_FAILED };
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Runs the command line `argv` (program name first).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match cli.command {
        Command::Build { alpha, format, out } => with_alpha(&alpha, |c| build(c, format, out)),
        Command::Quotient { alpha } => with_alpha(&alpha, quotient),
        Command::Charpoly { alpha, via } => with_alpha(&alpha, |c| charpoly(c, via)),
        Command::Spectrum { alpha, check } => with_alpha(&alpha, |c| spectrum(c, check)),
        Command::Recognize { input, format } => recognize_file(&input, format),
        Command::Verify { max_n, checks, jobs } => match sweep(max_n, &checks, jobs) {
            Ok(report) => {
                let passed = report.passed;
                Outcome::report(&report, passed)
            }
            Err(e) => Outcome::usage(e),
        },
    }
}

fn with_alpha(alpha: &str, f: impl FnOnce(&Composition) -> Result<Outcome, String>) -> Outcome {
    let c = match alpha.parse::<Composition>() {
        Ok(c) => c,
        Err(e) => return Outcome::usage(format!("--alpha {alpha}: {e}")),
    };
    if let Err(e) = c.half_len() {
        return Outcome::usage(format!("--alpha {alpha}: {e}"));
    }
    f(&c).unwrap_or_else(Outcome::usage)
}

/// Serializes as a JSON number of any size.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Big(BigInt);

impl Serialize for Big {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = self.0.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

fn bigs(v: &[BigInt]) -> Vec<Big> {
    v.iter().cloned().map(Big).collect()
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<Big>> {
    (0..m.rows()).map(|i| bigs(m.row(i))).collect()
}

#[derive(Serialize)]
struct PolyJson {
    /// Ascending powers of x.
    coefficients: Vec<Big>,
    text: String,
}

impl From<&IntPoly> for PolyJson {
    fn from(p: &IntPoly) -> Self {
        PolyJson {
            coefficients: bigs(p.coeffs()),
            text: p.to_string(),
        }
    }
}

#[derive(Serialize)]
struct InertiaJson {
    n_minus: usize,
    n_zero: usize,
    n_plus: usize,
}

impl From<Inertia> for InertiaJson {
    fn from(i: Inertia) -> Self {
        InertiaJson {
            n_minus: i.n_minus,
            n_zero: i.n_zero,
            n_plus: i.n_plus,
        }
    }
}

#[derive(Serialize)]
struct MultiplicityJson {
    m0: usize,
    m_minus1: usize,
}

impl From<MultiplicityReport> for MultiplicityJson {
    fn from(m: MultiplicityReport) -> Self {
        MultiplicityJson {
            m0: m.m0,
            m_minus1: m.m_minus1,
        }
    }
}

#[derive(Serialize)]
struct BuildReport<'a> {
    composition: &'a [usize],
    order: usize,
    edges: usize,
    class_sizes: &'a [usize],
    format: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    payload: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
}

fn build(c: &Composition, format: GraphFormat, out: Option<PathBuf>) -> Result<Outcome, String> {
    let (g, _) = build_cgraph(c).map_err(|e| e.to_string())?;
    let file = GraphFile::encode(&g, format);
    let (payload, out) = match out {
        Some(path) => {
            std::fs::write(&path, &file.payload).map_err(|e| format!("{}: {e}", path.display()))?;
            (None, Some(path.display().to_string()))
        }
        None => {
            let text = String::from_utf8(file.payload).expect("graph formats are ASCII");
            (Some(text.trim_end_matches('\n').to_string()), None)
        }
    };
    let report = BuildReport {
        composition: c.parts(),
        order: g.order(),
        edges: g.edge_count(),
        class_sizes: c.parts(),
        format: format.as_str(),
        payload,
        out,
    };
    Ok(Outcome::report(&report, true))
}

#[derive(Serialize)]
struct QuotientReport<'a> {
    composition: &'a [usize],
    k: usize,
    matrix: Vec<Vec<Big>>,
    trace: Big,
    equitable: bool,
    structural_identity: bool,
}

fn quotient(c: &Composition) -> Result<Outcome, String> {
    let err = |e: cgraph::Error| e.to_string();
    let q = quotient_matrix(c).map_err(err)?;
    let (g, p) = build_cgraph(c).map_err(err)?;
    let equitable = check_equitable(&g, &p, &q).map_err(err)?;
    let structural_identity = structural_identity_holds(c).map_err(err)?;
    let report = QuotientReport {
        composition: c.parts(),
        k: c.half_len().map_err(err)?,
        matrix: matrix_rows(q.matrix()),
        trace: Big(q.matrix().trace()),
        equitable,
        structural_identity,
    };
    Ok(Outcome::report(&report, equitable && structural_identity))
}

#[derive(Serialize)]
struct TrivialExponents {
    x: usize,
    x_plus_1: usize,
}

#[derive(Serialize)]
struct CharpolyReport<'a> {
    composition: &'a [usize],
    order: usize,
    via: &'static str,
    psi_pi: PolyJson,
    psi: PolyJson,
    trivial_exponents: TrivialExponents,
    factored: String,
    /// Formula and oracle agree on both polynomials; only with `--via both`.
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
}

fn charpoly(c: &Composition, via: Via) -> Result<Outcome, String> {
    let err = |e: cgraph::Error| e.to_string();
    let oracle = || -> Result<(IntPoly, IntPoly), String> {
        let q = quotient_matrix(c).map_err(err)?;
        let (g, _) = build_cgraph(c).map_err(err)?;
        Ok((
            charpoly_oracle(q.matrix()).map_err(err)?,
            charpoly_oracle(&g.adjacency_matrix()).map_err(err)?,
        ))
    };
    let formula = || -> Result<(IntPoly, IntPoly), String> { Ok((psi_pi(c).map_err(err)?, psi_full(c).map_err(err)?)) };
    let ((pi, full), agreement) = match via {
        Via::Formula => (formula()?, None),
        Via::Oracle => (oracle()?, None),
        Via::Both => {
            let f = formula()?;
            let o = oracle()?;
            let agree = f == o;
            (f, Some(agree))
        }
    };
    let (e0, e1) = trivial_exponents(c).map_err(err)?;
    let factored = format!("x^{e0} (x + 1)^{e1} ({pi})");
    let report = CharpolyReport {
        composition: c.parts(),
        order: c.order(),
        via: match via {
            Via::Formula => "formula",
            Via::Oracle => "oracle",
            Via::Both => "both",
        },
        psi_pi: (&pi).into(),
        psi: (&full).into(),
        trivial_exponents: TrivialExponents { x: e0, x_plus_1: e1 },
        factored,
        agreement,
    };
    Ok(Outcome::report(&report, agreement != Some(false)))
}

#[derive(Serialize)]
struct IntervalJson {
    lower: String,
    upper: String,
    nontrivial_factor: PolyJson,
    count_in_gap: usize,
    holds: bool,
}

#[derive(Serialize)]
struct SpectrumCheck {
    inertia: bool,
    quotient_inertia: bool,
    multiplicities: bool,
    charpoly: bool,
    distinct_bound: bool,
    passed: bool,
}

#[derive(Serialize)]
struct SpectrumReport<'a> {
    composition: &'a [usize],
    order: usize,
    k: usize,
    inertia: InertiaJson,
    quotient_inertia: InertiaJson,
    multiplicities: MultiplicityJson,
    /// Null unless `a_2 = 1`.
    quotient_minus_one_eigenvector: Option<Vec<Big>>,
    interval: IntervalJson,
    distinct_eigenvalues: usize,
    distinct_eigenvalue_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<SpectrumCheck>,
}

fn spectrum(c: &Composition, check: bool) -> Result<Outcome, String> {
    let err = |e: cgraph::Error| e.to_string();
    let k = c.half_len().map_err(err)?;
    let inertia = inertia_formula(c).map_err(err)?;
    let q_inertia = quotient_inertia(c).map_err(err)?;
    let mult = multiplicity_formula(c).map_err(err)?;
    let interval = interval_check(c).map_err(err)?;
    let psi = psi_full(c).map_err(err)?;

    let cross = if check {
        let (g, _) = build_cgraph(c).map_err(err)?;
        let oracle_a = charpoly_oracle(&g.adjacency_matrix()).map_err(err)?;
        let oracle_q = charpoly_oracle(quotient_matrix(c).map_err(err)?.matrix()).map_err(err)?;
        let inertia_ok = inertia_from_poly(&oracle_a).map_err(err)? == inertia;
        let quotient_ok = inertia_from_poly(&oracle_q).map_err(err)? == q_inertia;
        let mult_ok = multiplicities_from_poly(&oracle_a).map_err(err)? == mult;
        let charpoly_ok = oracle_a == psi && oracle_q == psi_pi(c).map_err(err)?;
        let bound_ok = distinct_count_bound(c, &oracle_a).map_err(err)?;
        Some(SpectrumCheck {
            inertia: inertia_ok,
            quotient_inertia: quotient_ok,
            multiplicities: mult_ok,
            charpoly: charpoly_ok,
            distinct_bound: bound_ok,
            passed: inertia_ok && quotient_ok && mult_ok && charpoly_ok && bound_ok,
        })
    } else {
        None
    };
    let passed = interval.holds() && cross.as_ref().is_none_or(|x| x.passed);
    let report = SpectrumReport {
        composition: c.parts(),
        order: c.order(),
        k,
        inertia: inertia.into(),
        quotient_inertia: q_inertia.into(),
        multiplicities: mult.into(),
        quotient_minus_one_eigenvector: quotient_minus_one(c).map_err(err)?.as_deref().map(bigs),
        interval: IntervalJson {
            lower: interval.lambda_minus_ub.to_string(),
            upper: interval.lambda_plus_lb.to_string(),
            nontrivial_factor: (&interval.nontrivial_factor).into(),
            count_in_gap: interval.count_in_gap,
            holds: interval.holds(),
        },
        distinct_eigenvalues: distinct_eigenvalue_count(&psi).map_err(err)?,
        distinct_eigenvalue_bound: 2 * k + 2,
        check: cross,
    };
    Ok(Outcome::report(&report, passed))
}

#[derive(Serialize)]
struct RecognizeReport {
    order: usize,
    sequence: Vec<usize>,
    parity: &'static str,
    verdict: &'static str,
    class_of: Vec<Option<usize>>,
    /// Every defining sequence, when the graph has more than one.
    representations: Vec<Vec<usize>>,
}

fn recognize_file(input: &str, format: GraphFormat) -> Outcome {
    let payload = if input == "-" {
        let mut buf = Vec::new();
        if let Err(e) = std::io::stdin().read_to_end(&mut buf) {
            return Outcome::usage(format!("stdin: {e}"));
        }
        buf
    } else {
        match std::fs::read(input) {
            Ok(b) => b,
            Err(e) => return Outcome::usage(format!("{input}: {e}")),
        }
    };
    let g = match (GraphFile { format, payload }).decode() {
        Ok(g) => g,
        Err(e) => return Outcome::usage(format!("{input}: {e}")),
    };
    let r = recognize(&g);
    let report = RecognizeReport {
        order: g.order(),
        parity: if r.is_even() { "even" } else { "odd" },
        verdict: r.verdict.as_str(),
        representations: representations(&g),
        sequence: r.sequence,
        class_of: r.class_of,
    };
    Outcome::report(&report, true)
}
