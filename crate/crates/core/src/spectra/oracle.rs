//! Characteristic polynomials computed without any closed form: Bareiss
//! determinants at integer nodes, then Lagrange interpolation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::IntPoly;
use crate::Rational;

/// Interpolation node `i`: `0, 1, -1, 2, -2, ...`.
pub fn node(i: usize) -> BigInt {
    let half = BigInt::from(i.div_ceil(2));
    if i % 2 == 1 {
        half
    } else {
        -half
    }
}

/// `det(xI - M)`, exact and monic.
pub fn charpoly_oracle(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "characteristic polynomial of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let nodes: Vec<BigInt> = (0..=n).map(node).collect();
    let values = nodes
        .iter()
        .map(|t| m.shifted_negation(t).determinant())
        .collect::<Result<Vec<_>>>()?;

    let mut coeffs = vec![Rational::zero(); n + 1];
    for (j, (tj, yj)) in nodes.iter().zip(&values).enumerate() {
        if yj.is_zero() {
            continue;
        }
        let mut basis = IntPoly::one();
        let mut denom = BigInt::one();
        for (i, ti) in nodes.iter().enumerate() {
            if i != j {
                basis = &basis * &IntPoly::linear(-ti, 1);
                denom *= tj - ti;
            }
        }
        let weight = Rational::new(yj.clone(), denom);
        for (c, b) in coeffs.iter_mut().zip(basis.coeffs()) {
            *c += &weight * Rational::from_integer(b.clone());
        }
    }
    let ints = coeffs
        .into_iter()
        .enumerate()
        .map(|(d, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegerInterpolation(d))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let p = IntPoly::new(ints);
    debug_assert!(p.is_monic());
    Ok(p)
}

/// Determinant of a rational matrix: clear denominators row by row, then
/// run integer Bareiss.
pub fn rational_determinant(rows: &[Vec<Rational>]) -> Result<Rational> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(
            "rational determinant needs a square matrix".into(),
        ));
    }
    let mut scale = BigInt::one();
    let mut data = Vec::with_capacity(n * n);
    for row in rows {
        let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        for v in row {
            data.push(v.numer() * (&l / v.denom()));
        }
        scale *= l;
    }
    let det = IntMatrix::new(n, n, data)?.determinant()?;
    Ok(Rational::new(det, scale))
}
