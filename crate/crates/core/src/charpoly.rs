//! Closed-form characteristic polynomials of C-graphs.
//!
//! The quotient polynomial is assembled from a tridiagonal determinant with
//! unit off-diagonals (`-1` above, `+1` below). Such a determinant equals the
//! sum, over all products of disjoint adjacent transpositions, of the product
//! of the diagonal entries left fixed. Two evaluations are provided: the
//! matching sum and the three-term recurrence.

use num_bigint::BigInt;

use crate::composition::Composition;
use crate::error::Result;
use crate::poly::IntPoly;

/// A product of disjoint adjacent transpositions `(l, l+1)` on `{1..n}`.
///
/// Stored as the sorted list of left endpoints `l` (1-based); the empty list
/// is the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EMatching {
    size: usize,
    lefts: Vec<usize>,
}

impl EMatching {
    pub fn identity(size: usize) -> Self {
        EMatching {
            size,
            lefts: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn transpositions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.lefts.iter().map(|&l| (l, l + 1))
    }

    pub fn transposition_count(&self) -> usize {
        self.lefts.len()
    }

    /// Image of 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        if self.lefts.binary_search(&i).is_ok() {
            i + 1
        } else if i > 1 && self.lefts.binary_search(&(i - 1)).is_ok() {
            i - 1
        } else {
            i
        }
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.apply(i) == i
    }
}

/// All of `E_n`; its size is the Fibonacci number `F(n + 1)`.
///
/// Ordered by number of transpositions, then lexicographically.
pub fn enumerate_e(n: usize) -> Vec<EMatching> {
    fn rec(start: usize, n: usize, lefts: &mut Vec<usize>, out: &mut Vec<EMatching>) {
        out.push(EMatching {
            size: n,
            lefts: lefts.clone(),
        });
        for l in start..n {
            lefts.push(l);
            rec(l + 2, n, lefts, out);
            lefts.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.lefts.len().cmp(&b.lefts.len()).then_with(|| a.lefts.cmp(&b.lefts)));
    out
}

/// `num / den` with polynomial numerator and denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFraction {
    pub num: IntPoly,
    pub den: IntPoly,
}

impl PolyFraction {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        PolyFraction { num, den }
    }

    pub fn constant(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self::new(IntPoly::constant(num), IntPoly::constant(den))
    }

    /// Equality as rational functions (cross-multiplication).
    pub fn same_value(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

/// Diagonal entries of a tridiagonal determinant with off-diagonals `-1`
/// (super) and `+1` (sub).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TridiagonalSpec {
    pub betas: Vec<PolyFraction>,
}

impl TridiagonalSpec {
    /// `b_1 = (1 + x)/(a_1 - 1 - x)`, `b_i = a_i/(a_i - 1 - x)` for odd
    /// `i >= 3`, `b_i = a_i/(a_i + x)` for even `i`.
    pub fn for_composition(c: &Composition) -> Result<Self> {
        c.half_len()?;
        let betas = (1..=c.len())
            .map(|i| {
                let num = if i == 1 {
                    IntPoly::linear(1, 1)
                } else {
                    IntPoly::constant(c.alpha(i))
                };
                PolyFraction::new(num, diagonal_factor(c, i))
            })
            .collect();
        Ok(TridiagonalSpec { betas })
    }

    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }

    fn common_denominator(&self) -> IntPoly {
        self.betas.iter().map(|b| b.den.clone()).product()
    }
}

/// `a_i - 1 - x` for odd `i`, `a_i + x` for even `i` (1-based).
fn diagonal_factor(c: &Composition, i: usize) -> IntPoly {
    let a = BigInt::from(c.alpha(i));
    if i % 2 == 1 {
        IntPoly::linear(a - 1, -1)
    } else {
        IntPoly::linear(a, 1)
    }
}

/// Matching-sum evaluation, denominators cleared:
/// numerator `sum_s prod_{fixed} num_i prod_{moved} den_i`, denominator
/// `prod den_i`.
pub fn tridiag_det_enum(spec: &TridiagonalSpec) -> PolyFraction {
    let n = spec.len();
    let num = enumerate_e(n)
        .iter()
        .map(|sigma| {
            (1..=n)
                .map(|i| {
                    let b = &spec.betas[i - 1];
                    if sigma.is_fixed(i) {
                        b.num.clone()
                    } else {
                        b.den.clone()
                    }
                })
                .product::<IntPoly>()
        })
        .sum();
    PolyFraction {
        num,
        den: spec.common_denominator(),
    }
}

/// Three-term recurrence `T_i = b_i T_{i-1} + T_{i-2}` carried over the
/// running denominator `prod_{j <= i} den_j`.
pub fn tridiag_det_rec(spec: &TridiagonalSpec) -> PolyFraction {
    let mut prev2 = IntPoly::zero(); // N_{-1}
    let mut prev = IntPoly::one(); // N_0
    let mut prev_den = IntPoly::one();
    for b in &spec.betas {
        let next = &(&b.num * &prev) + &(&(&b.den * &prev_den) * &prev2);
        prev2 = prev;
        prev = next;
        prev_den = b.den.clone();
    }
    PolyFraction {
        num: prev,
        den: spec.common_denominator(),
    }
}

/// `det(xI - Q)` for the quotient matrix, from the matching sum:
/// `(-1)^k sum_s prod_{fixed} c_i prod_{moved} q_i` with `c_1 = 1 + x`,
/// `c_i = a_i` otherwise and `q_i` the diagonal factors.
pub fn psi_pi(c: &Composition) -> Result<IntPoly> {
    let k = c.half_len()?;
    let spec = TridiagonalSpec::for_composition(c)?;
    Ok(apply_sign(tridiag_det_enum(&spec).num, k))
}

/// Same polynomial via the recurrence; linear in `k`.
pub fn psi_pi_recurrence(c: &Composition) -> Result<IntPoly> {
    let k = c.half_len()?;
    let spec = TridiagonalSpec::for_composition(c)?;
    Ok(apply_sign(tridiag_det_rec(&spec).num, k))
}

fn apply_sign(p: IntPoly, k: usize) -> IntPoly {
    if k % 2 == 1 {
        -p
    } else {
        p
    }
}

/// Exponents `(e0, e1)` of `x` and `x + 1` split off the quotient factor:
/// `e0 = sum (a_2i - 1)`, `e1 = sum (a_2i-1 - 1)`.
pub fn trivial_exponents(c: &Composition) -> Result<(usize, usize)> {
    c.half_len()?;
    Ok((c.even_parts().map(|a| a - 1).sum(), c.odd_parts().map(|a| a - 1).sum()))
}

/// `det(xI - A) = x^{e0} (x + 1)^{e1} psi_pi(x)`.
pub fn psi_full(c: &Composition) -> Result<IntPoly> {
    let (e0, e1) = trivial_exponents(c)?;
    let q = psi_pi_recurrence(c)?;
    Ok(IntPoly::x().pow(e0) * IntPoly::linear(1, 1).pow(e1) * q)
}
