//! Quotient matrix of the construction partition.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::construct::{self, ClassPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::IntMatrix;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    matrix: IntMatrix,
    composition: Composition,
}

impl QuotientMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    /// Replaces the underlying matrix, keeping the composition. Intended for
    /// perturbation tests of [`check_equitable`].
    pub fn with_matrix(&self, matrix: IntMatrix) -> Self {
        QuotientMatrix {
            matrix,
            composition: self.composition.clone(),
        }
    }
}

/// 1 iff a vertex of 1-based class `i` sees class `j != i` in the
/// antiregular pattern: the larger index must be even.
fn pattern(i: usize, j: usize) -> bool {
    (i < j && j.is_multiple_of(2)) || (j < i && i.is_multiple_of(2))
}

/// `Q(i, j) = a_j * [pattern(i, j)] + [i = j, i odd] * (a_i - 1)`, 1-based.
pub fn quotient_matrix(c: &Composition) -> Result<QuotientMatrix> {
    let size = 2 * c.half_len()?;
    let matrix = IntMatrix::from_fn(size, size, |r, s| {
        let (i, j) = (r + 1, s + 1);
        if i == j {
            if i % 2 == 1 {
                BigInt::from(c.alpha(i) - 1)
            } else {
                BigInt::zero()
            }
        } else if pattern(i, j) {
            BigInt::from(c.alpha(j))
        } else {
            BigInt::zero()
        }
    });
    Ok(QuotientMatrix {
        matrix,
        composition: c.clone(),
    })
}

/// The `n x 2k` class indicator matrix `P`.
pub fn characteristic_matrix(p: &ClassPartition) -> IntMatrix {
    IntMatrix::from_fn(p.order(), p.class_count(), |v, c| {
        if p.class_of(v) == c {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Checks `A P = P Q` exactly.
pub fn check_equitable(g: &Graph, p: &ClassPartition, q: &QuotientMatrix) -> Result<bool> {
    let q = q.matrix();
    if g.order() != p.order() || q.rows() != p.class_count() || !q.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "graph order {}, partition of {} vertices into {} classes, quotient {}x{}",
            g.order(),
            p.order(),
            p.class_count(),
            q.rows(),
            q.cols()
        )));
    }
    let pm = characteristic_matrix(p);
    Ok(g.adjacency_matrix().mul(&pm)? == pm.mul(q)?)
}

/// `D = diag(a_i)` and `D' = diag((a_1 - 1)/a_1, 0, (a_3 - 1)/a_3, 0, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingDiagonals {
    pub d: Vec<Rational>,
    pub d_prime: Vec<Rational>,
}

impl ScalingDiagonals {
    pub fn new(c: &Composition) -> Result<Self> {
        c.half_len()?;
        let d = c.parts().iter().map(|&a| Rational::from_integer(a.into())).collect();
        let d_prime = c
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &a)| {
                if r % 2 == 0 {
                    Rational::new(BigInt::from(a - 1), BigInt::from(a))
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Ok(ScalingDiagonals { d, d_prime })
    }
}

/// Entrywise `(A_2k + D') D`, with `A_2k` the adjacency matrix of the
/// antiregular graph on `2k` vertices built from scratch.
pub fn scaled_antiregular_form(c: &Composition) -> Result<Vec<Vec<Rational>>> {
    let k = c.half_len()?;
    let scaling = ScalingDiagonals::new(c)?;
    let anti = construct::antiregular(2 * k)?;
    let size = 2 * k;
    Ok((0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let mut v = Rational::from_integer(BigInt::from(u8::from(anti.has_edge(i, j))));
                    if i == j {
                        v += &scaling.d_prime[i];
                    }
                    v * &scaling.d[j]
                })
                .collect()
        })
        .collect())
}

/// `Q = (A_2k + D') D` over the rationals.
pub fn structural_identity_holds(c: &Composition) -> Result<bool> {
    let q = quotient_matrix(c)?;
    let form = scaled_antiregular_form(c)?;
    Ok(form.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, v)| *v == Rational::from_integer(q.matrix().get(i, j).clone()))
    }))
}
