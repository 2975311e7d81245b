//! Exhaustive verification over every even composition up to a given order.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use cgraph::charpoly::{psi_full, psi_pi};
use cgraph::quotient::{check_equitable, quotient_matrix, structural_identity_holds, QuotientMatrix};
use cgraph::recognize::{isomorphic_partner, recognize, Verdict};
use cgraph::spectra::{
    charpoly_oracle, distinct_count_bound, inertia_formula, inertia_from_poly, interval_check,
    multiplicities_from_poly, multiplicity_formula, quotient_inertia,
};
use cgraph::{build_cgraph, build_cgraph_direct, ClassPartition, Composition, Graph, IntPoly};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

/// Relabelings are tried only up to this order; they multiply the cost of
/// the recognition check.
pub const RELABEL_MAX_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Check {
    ConstructAgreement,
    Equitable,
    StructuralIdentity,
    Charpoly,
    Inertia,
    Multiplicity,
    Interval,
    DistinctBound,
    Recognition,
    QuotientInertia,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::ConstructAgreement,
        Check::Equitable,
        Check::StructuralIdentity,
        Check::Charpoly,
        Check::Inertia,
        Check::Multiplicity,
        Check::Interval,
        Check::DistinctBound,
        Check::Recognition,
        Check::QuotientInertia,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::ConstructAgreement => "construct-agreement",
            Check::Equitable => "equitable",
            Check::StructuralIdentity => "structural-identity",
            Check::Charpoly => "charpoly",
            Check::Inertia => "inertia",
            Check::Multiplicity => "multiplicity",
            Check::Interval => "interval",
            Check::DistinctBound => "distinct-bound",
            Check::Recognition => "recognition",
            Check::QuotientInertia => "quotient-inertia",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown check {0:?}")]
pub struct UnknownCheck(pub String);

impl FromStr for Check {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("max_n must be at least 2, got {0}")]
    MaxNTooSmall(usize),
    #[error("jobs must be at least 1")]
    NoJobs,
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub composition: Vec<usize>,
    pub check: Check,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: Check,
    pub run: usize,
    pub failed: usize,
}

/// Deliberately carries no timing or worker count, so reports compare
/// byte for byte across `jobs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub compositions: usize,
    pub checks: Vec<CheckSummary>,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

/// Runs `checks` (all when empty) on every even composition of order
/// `2..=max_n`, ordered by order then lexicographically. Duplicate checks are
/// run once.
pub fn sweep(max_n: usize, checks: &[Check], jobs: usize) -> Result<VerifyReport, SweepError> {
    if max_n < 2 {
        return Err(SweepError::MaxNTooSmall(max_n));
    }
    if jobs == 0 {
        return Err(SweepError::NoJobs);
    }
    let mut selected: Vec<Check> = if checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        checks.to_vec()
    };
    selected.sort_unstable();
    selected.dedup();

    let compositions = Composition::all_even_up_to(max_n);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    let per_composition: Vec<Vec<Failure>> =
        pool.install(|| compositions.par_iter().map(|c| run_checks(c, &selected)).collect());

    let failures: Vec<Failure> = per_composition.into_iter().flatten().collect();
    let summaries = selected
        .iter()
        .map(|&check| CheckSummary {
            check,
            run: compositions.len(),
            failed: failures.iter().filter(|f| f.check == check).count(),
        })
        .collect();
    Ok(VerifyReport {
        max_n,
        compositions: compositions.len(),
        checks: summaries,
        passed: failures.is_empty(),
        failures,
    })
}

/// Per-composition values shared between checks, computed on first use.
struct Subject<'a> {
    c: &'a Composition,
    built: OnceCell<Result<(Graph, ClassPartition), String>>,
    quotient: OnceCell<Result<QuotientMatrix, String>>,
    oracle_q: OnceCell<Result<IntPoly, String>>,
    oracle_a: OnceCell<Result<IntPoly, String>>,
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

impl<'a> Subject<'a> {
    fn new(c: &'a Composition) -> Self {
        Subject {
            c,
            built: OnceCell::new(),
            quotient: OnceCell::new(),
            oracle_q: OnceCell::new(),
            oracle_a: OnceCell::new(),
        }
    }

    fn built(&self) -> Result<&(Graph, ClassPartition), String> {
        self.built
            .get_or_init(|| build_cgraph(self.c).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn quotient(&self) -> Result<&QuotientMatrix, String> {
        self.quotient
            .get_or_init(|| quotient_matrix(self.c).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn oracle_q(&self) -> Result<&IntPoly, String> {
        self.oracle_q
            .get_or_init(|| {
                let q = self.quotient()?;
                charpoly_oracle(q.matrix()).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn oracle_a(&self) -> Result<&IntPoly, String> {
        self.oracle_a
            .get_or_init(|| {
                let (g, _) = self.built()?;
                charpoly_oracle(&g.adjacency_matrix()).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn run(&self, check: Check) -> Outcome {
        let c = self.c;
        let err = |e: cgraph::Error| e.to_string();
        match check {
            Check::ConstructAgreement => {
                let (g, _) = self.built()?;
                let (direct, _) = build_cgraph_direct(c).map_err(err)?;
                ensure(*g == direct, || "recurrence and direct adjacency rule differ".into())
            }
            Check::Equitable => {
                let (g, p) = self.built()?;
                let ok = check_equitable(g, p, self.quotient()?).map_err(err)?;
                ensure(ok, || "A P != P Q".into())
            }
            Check::StructuralIdentity => {
                let ok = structural_identity_holds(c).map_err(err)?;
                ensure(ok, || "Q != (A_2k + D') D".into())
            }
            Check::Charpoly => {
                let formula = psi_pi(c).map_err(err)?;
                let oracle = self.oracle_q()?;
                ensure(&formula == oracle, || format!("psi_pi = {formula}, oracle = {oracle}"))?;
                let formula = psi_full(c).map_err(err)?;
                let oracle = self.oracle_a()?;
                ensure(&formula == oracle, || format!("psi = {formula}, oracle = {oracle}"))
            }
            Check::Inertia => {
                let formula = inertia_formula(c).map_err(err)?;
                let oracle = inertia_from_poly(self.oracle_a()?).map_err(err)?;
                ensure(formula == oracle, || format!("formula {formula:?}, oracle {oracle:?}"))
            }
            Check::QuotientInertia => {
                let formula = quotient_inertia(c).map_err(err)?;
                let oracle = inertia_from_poly(self.oracle_q()?).map_err(err)?;
                ensure(formula == oracle, || format!("expected {formula:?}, oracle {oracle:?}"))
            }
            Check::Multiplicity => {
                let formula = multiplicity_formula(c).map_err(err)?;
                let oracle = multiplicities_from_poly(self.oracle_a()?).map_err(err)?;
                ensure(formula == oracle, || format!("formula {formula:?}, oracle {oracle:?}"))
            }
            Check::Interval => {
                let report = interval_check(c).map_err(err)?;
                ensure(report.holds(), || {
                    format!(
                        "{} roots of {} in ({}, {}]",
                        report.count_in_gap, report.nontrivial_factor, report.lambda_minus_ub, report.lambda_plus_lb
                    )
                })
            }
            Check::DistinctBound => {
                let ok = distinct_count_bound(c, self.oracle_a()?).map_err(err)?;
                ensure(ok, || "more than 2k + 2 distinct eigenvalues".into())
            }
            Check::Recognition => self.recognition(),
        }
    }

    /// Unrelabeled input must give back `c` exactly. Relabeled input can
    /// only be recovered up to isomorphism, so there the isomorphic partner
    /// composition is accepted as well.
    fn recognition(&self) -> Outcome {
        let c = self.c;
        let (g, _) = self.built()?;
        let r = recognize(g);
        ensure(r.verdict == Verdict::MemberOfCEven && r.sequence == c.parts(), || {
            format!("got {:?} ({})", r.sequence, r.verdict.as_str())
        })?;
        if c.order() > RELABEL_MAX_ORDER {
            return Ok(());
        }
        let partner = isomorphic_partner(c);
        for perm in relabelings(c.order()) {
            let h = g.permuted(&perm).map_err(|e| e.to_string())?;
            let r = recognize(&h);
            let matches = r.sequence == c.parts() || partner.as_ref().is_some_and(|p| r.sequence == p.parts());
            ensure(r.verdict == Verdict::MemberOfCEven && matches, || {
                format!(
                    "under relabeling {perm:?} got {:?} ({})",
                    r.sequence,
                    r.verdict.as_str()
                )
            })?;
        }
        Ok(())
    }
}

/// Fixed relabelings `v -> (a v + b) mod n` with `a` a unit, plus reversal.
fn relabelings(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n).rev().collect::<Vec<_>>()];
    for (a, b) in [(5, 3), (7, 1)] {
        if num_integer::gcd(a, n) == 1 {
            out.push((0..n).map(|v| (a * v + b) % n).collect());
        }
    }
    out
}

fn run_checks(c: &Composition, checks: &[Check]) -> Vec<Failure> {
    let subject = Subject::new(c);
    checks
        .iter()
        .filter_map(|&check| {
            subject.run(check).err().map(|detail| Failure {
                composition: c.parts().to_vec(),
                check,
                detail,
            })
        })
        .collect()
}
