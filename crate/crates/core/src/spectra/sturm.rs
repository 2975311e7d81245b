//! Exact real-root counting.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::Rational;

use super::Inertia;

/// Sturm chain of a squarefree polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Ok(SturmChain {
            polys: p.sturm_chain()?,
        })
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    /// Sign changes along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in self.polys.iter().map(|p| p.sign_at(x)) {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> Result<usize> {
        if a >= b {
            return Err(Error::EmptyInterval {
                lower: a.to_string(),
                upper: b.to_string(),
            });
        }
        Ok(self.variations(a) - self.variations(b))
    }
}

/// Number of distinct real roots of a squarefree `p` in `(a, b]`.
pub fn sturm_count(p: &IntPoly, a: &Rational, b: &Rational) -> Result<usize> {
    SturmChain::new(p)?.count(a, b)
}

/// Inertia of a symmetric matrix read off its characteristic polynomial.
///
/// Zero eigenvalues are the multiplicity of `x`; the rest are counted on
/// `(-B, 0)` and `(0, B)` with `B` the Cauchy bound, weighting each factor of
/// the squarefree decomposition by its exponent.
pub fn inertia_from_poly(p: &IntPoly) -> Result<Inertia> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let n_zero = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let rest = IntPoly::new(p.coeffs()[n_zero..].to_vec());
    let bound = rest.cauchy_bound()?;
    let neg_bound = -bound.clone();
    let zero = Rational::zero();
    let (mut n_minus, mut n_plus) = (0, 0);
    for (i, f) in rest.squarefree_decomposition()?.iter().enumerate() {
        if f.is_constant() {
            continue;
        }
        let chain = SturmChain::new(f)?;
        n_minus += (i + 1) * chain.count(&neg_bound, &zero)?;
        n_plus += (i + 1) * chain.count(&zero, &bound)?;
    }
    let real = n_minus + n_zero + n_plus;
    if real != degree {
        return Err(Error::NonRealRoots { degree, real });
    }
    Ok(Inertia {
        n_minus,
        n_zero,
        n_plus,
    })
}
