//! Closed-form spectral facts about C-graphs, and the exact oracles used to
//! check them.

pub mod oracle;
pub mod sturm;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::charpoly;
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::quotient::quotient_matrix;
use crate::Rational;

pub use oracle::{charpoly_oracle, rational_determinant};
pub use sturm::{inertia_from_poly, sturm_count, SturmChain};

/// Eigenvalue sign counts `(n-, n0, n+)`, with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub n_minus: usize,
    pub n_zero: usize,
    pub n_plus: usize,
}

impl Inertia {
    pub fn new(n_minus: usize, n_zero: usize, n_plus: usize) -> Self {
        Inertia {
            n_minus,
            n_zero,
            n_plus,
        }
    }

    pub fn total(&self) -> usize {
        self.n_minus + self.n_zero + self.n_plus
    }
}

/// Multiplicities of the trivial eigenvalues `0` and `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityReport {
    pub m0: usize,
    pub m_minus1: usize,
}

/// `(sum a_odd, sum a_even - k, k)`.
pub fn inertia_formula(c: &Composition) -> Result<Inertia> {
    let k = c.half_len()?;
    Ok(Inertia {
        n_minus: c.odd_parts().sum(),
        n_zero: c.even_parts().sum::<usize>() - k,
        n_plus: k,
    })
}

/// The quotient matrix always has inertia `(k, 0, k)`.
pub fn quotient_inertia(c: &Composition) -> Result<Inertia> {
    let k = c.half_len()?;
    Ok(Inertia::new(k, 0, k))
}

/// `m0 = sum a_even - k`; `m-1 = sum a_odd - k`, plus one when `a_2 = 1`.
pub fn multiplicity_formula(c: &Composition) -> Result<MultiplicityReport> {
    let k = c.half_len()?;
    let bonus = usize::from(c.alpha(2) == 1);
    Ok(MultiplicityReport {
        m0: c.even_parts().sum::<usize>() - k,
        m_minus1: c.odd_parts().sum::<usize>() - k + bonus,
    })
}

/// Multiplicities of the factors `x` and `x + 1`, by repeated division.
pub fn multiplicities_from_poly(p: &IntPoly) -> Result<MultiplicityReport> {
    Ok(MultiplicityReport {
        m0: p.multiplicity(&IntPoly::x())?,
        m_minus1: p.multiplicity(&IntPoly::linear(1, 1))?,
    })
}

/// `-1` is an eigenvalue of the quotient matrix exactly when `a_2 = 1`; the
/// eigenvector is then `(-1, a_1, 0, ..., 0)`.
pub fn quotient_minus_one(c: &Composition) -> Result<Option<Vec<BigInt>>> {
    let k = c.half_len()?;
    if c.alpha(2) != 1 {
        return Ok(None);
    }
    let mut x = vec![BigInt::zero(); 2 * k];
    x[0] = BigInt::from(-1);
    x[1] = BigInt::from(c.alpha(1));
    Ok(Some(x))
}

/// `det(Q + I)`.
pub fn quotient_shifted_determinant(c: &Composition) -> Result<BigInt> {
    let q = quotient_matrix(c)?;
    q.matrix().add_scalar_identity(&BigInt::from(1)).determinant()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinKind {
    /// Pairwise adjacent twins; eigenvalue `-1`.
    Clique,
    /// Pairwise non-adjacent twins; eigenvalue `0`.
    Independent,
}

impl TwinKind {
    pub fn eigenvalue(self) -> i64 {
        match self {
            TwinKind::Clique => -1,
            TwinKind::Independent => 0,
        }
    }
}

/// The `m - 1` vectors `X_j = (1, ..., 1, -j, 0, ...)` supported on the twin
/// set `s`: `j` ones on `s[0..j]`, `-j` on `s[j]`.
///
/// `s` must be a clique or an independent set (per `kind`) of size at least
/// two whose members have identical neighbourhoods outside `s`.
pub fn twin_eigenvectors(g: &Graph, s: &[usize], kind: TwinKind) -> Result<Vec<Vec<i64>>> {
    let n = g.order();
    if s.len() < 2 {
        return Err(Error::TwinSet(format!("need at least two vertices, got {}", s.len())));
    }
    let mut in_s = vec![false; n];
    for &v in s {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, order: n });
        }
        if std::mem::replace(&mut in_s[v], true) {
            return Err(Error::TwinSet(format!("vertex {v} listed twice")));
        }
    }
    let want_edge = kind == TwinKind::Clique;
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if g.has_edge(u, v) != want_edge {
                return Err(Error::TwinSet(format!(
                    "vertices {u} and {v} break the {kind:?} condition"
                )));
            }
        }
    }
    let first = s[0];
    for &u in &s[1..] {
        if let Some(w) = (0..n).find(|&w| !in_s[w] && g.has_edge(first, w) != g.has_edge(u, w)) {
            return Err(Error::TwinSet(format!(
                "vertices {first} and {u} disagree on outside neighbour {w}"
            )));
        }
    }
    Ok((1..s.len())
        .map(|j| {
            let mut x = vec![0i64; n];
            for &v in &s[..j] {
                x[v] = 1;
            }
            x[s[j]] = -(j as i64);
            x
        })
        .collect())
}

/// Inner rational endpoints of the eigenvalue-free gap:
/// `-12071/10000 >= (-1 - sqrt 2)/2` and
/// `2071/10000 * a_min <= (-1 + sqrt 2)/2 * a_min`.
pub fn gap_endpoints(alpha_min: usize) -> (Rational, Rational) {
    (
        Rational::new(BigInt::from(-12071), BigInt::from(10000)),
        Rational::new(BigInt::from(2071 * alpha_min), BigInt::from(10000)),
    )
}

/// Strips every `x` and `x + 1` factor, then counts the distinct roots of
/// what is left in `(lower, upper]`.
pub fn nontrivial_gap_count(p: &IntPoly, lower: &Rational, upper: &Rational) -> Result<(IntPoly, usize)> {
    let (rest, _) = p.remove_factor(&IntPoly::x())?;
    let (rest, _) = rest.remove_factor(&IntPoly::linear(1, 1))?;
    let count = if rest.is_constant() {
        if lower >= upper {
            return Err(Error::EmptyInterval {
                lower: lower.to_string(),
                upper: upper.to_string(),
            });
        }
        0
    } else {
        sturm_count(&rest.squarefree_part()?, lower, upper)?
    };
    Ok((rest, count))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalReport {
    /// Upper end of the tested gap; the least positive eigenvalue lies above.
    pub lambda_plus_lb: Rational,
    /// Lower end of the tested gap; the largest eigenvalue below `-1` lies
    /// below.
    pub lambda_minus_ub: Rational,
    /// The quotient polynomial with any `x + 1` factor removed.
    pub nontrivial_factor: IntPoly,
    pub count_in_gap: usize,
}

impl IntervalReport {
    pub fn holds(&self) -> bool {
        self.count_in_gap == 0
    }
}

/// Counts roots of the non-trivial part of the quotient polynomial inside
/// the gap. Every nontrivial eigenvalue of the graph is a root of it.
pub fn interval_check(c: &Composition) -> Result<IntervalReport> {
    let q = charpoly::psi_pi_recurrence(c)?;
    let (lower, upper) = gap_endpoints(c.alpha_min());
    let (nontrivial_factor, count_in_gap) = nontrivial_gap_count(&q, &lower, &upper)?;
    Ok(IntervalReport {
        lambda_plus_lb: upper,
        lambda_minus_ub: lower,
        nontrivial_factor,
        count_in_gap,
    })
}

/// Number of distinct roots of `psi`.
pub fn distinct_eigenvalue_count(psi: &IntPoly) -> Result<usize> {
    Ok(psi.squarefree_part()?.degree().unwrap_or(0))
}

/// At most `2k + 2` distinct eigenvalues.
pub fn distinct_count_bound(c: &Composition, psi: &IntPoly) -> Result<bool> {
    let k = c.half_len()?;
    Ok(distinct_eigenvalue_count(psi)? <= 2 * k + 2)
}
