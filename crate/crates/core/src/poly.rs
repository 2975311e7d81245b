//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Integer polynomial, coefficients stored in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `c0 + c1 * x`.
    pub fn linear(c0: impl Into<BigInt>, c1: impl Into<BigInt>) -> Self {
        Self::new(vec![c0.into(), c1.into()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            content = -content;
        }
        Self::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Primitive part that keeps the sign of the leading coefficient.
    fn content_free(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let content = self.content();
        Self::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Exact quotient `self / divisor` over the integers.
    ///
    /// Fails with [`Error::NotDivisible`] when the division leaves a
    /// remainder or needs a non-integer coefficient.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(Error::NotDivisible);
        }
        let lc = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            if rem[i + dd].is_zero() {
                continue;
            }
            let (q, r) = rem[i + dd].div_rem(lc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::new(quot))
    }

    /// Remainder `r` with `c * self = q * divisor + r` for some positive
    /// integer `c`, so `r` has the sign of the true rational remainder.
    pub fn positive_pseudo_rem(&self, divisor: &Self) -> Result<Self> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let lc = &divisor.coeffs[dd];
        let lc_abs = lc.abs();
        let lc_sign = lc.signum();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let lead = rem.coeffs[dr].clone();
            let scaled = rem.scale(&lc_abs);
            let sub = divisor.scale(&(&lead * &lc_sign)).shift(dr - dd);
            rem = &scaled - &sub;
        }
        Ok(rem)
    }

    /// Greatest common divisor over the rationals, returned primitive with a
    /// positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let r = a.positive_pseudo_rem(&b).expect("divisor checked nonzero");
            a = b;
            b = r.primitive_part();
        }
        if a.is_constant() {
            Self::one()
        } else {
            a.primitive_part()
        }
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// `p / gcd(p, p')`: one copy of every distinct complex root.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.exact_div(&g)?.primitive_part())
    }

    /// Yun's decomposition `p = c * f_1 * f_2^2 * f_3^3 * ...`.
    ///
    /// Entry `i` of the result is `f_{i+1}`; factors are squarefree,
    /// pairwise coprime and primitive. Trailing constant factors are dropped,
    /// so a constant input yields an empty list.
    pub fn squarefree_decomposition(&self) -> Result<Vec<Self>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.primitive_part();
        if f.is_constant() {
            return Ok(Vec::new());
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0)?;
        let mut c = fp.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut factors = Vec::new();
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            factors.push(a);
        }
        while factors.last().is_some_and(IntPoly::is_constant) {
            factors.pop();
        }
        Ok(factors)
    }

    /// Number of times `factor` divides `self` exactly.
    pub fn multiplicity(&self, factor: &Self) -> Result<usize> {
        if self.is_zero() || factor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if factor.is_constant() {
            return Err(Error::DimensionMismatch(
                "multiplicity of a constant factor is unbounded".into(),
            ));
        }
        let mut count = 0;
        let mut rest = self.clone();
        while let Ok(q) = rest.exact_div(factor) {
            rest = q;
            count += 1;
        }
        Ok(count)
    }

    /// Strips every factor of `factor` and returns the cofactor.
    pub fn remove_factor(&self, factor: &Self) -> Result<(Self, usize)> {
        let m = self.multiplicity(factor)?;
        let mut rest = self.clone();
        for _ in 0..m {
            rest = rest.exact_div(factor)?;
        }
        Ok((rest, m))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &Rational) -> Ordering {
        self.eval(x).cmp(&Rational::zero())
    }

    /// `1 + max |c_i / c_d|`; every complex root has modulus strictly below it.
    pub fn cauchy_bound(&self) -> Result<Rational> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        Ok(Rational::one() + Rational::new(max, lc))
    }

    /// Standard Sturm chain normalised to content-free integer multiples.
    ///
    /// Each member is a positive multiple of the classical chain element, so
    /// sign variations are unchanged.
    pub fn sturm_chain(&self) -> Result<Vec<Self>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![self.content_free()];
        let d = self.derivative();
        if d.is_zero() {
            return Ok(chain);
        }
        chain.push(d.content_free());
        loop {
            let n = chain.len();
            let r = chain[n - 2].positive_pseudo_rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push((-r).content_free());
        }
        Ok(chain)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, mag: &BigInt, deg: usize) -> fmt::Result {
    let show_coeff = deg == 0 || !mag.is_one();
    if show_coeff {
        write!(f, "{mag}")?;
    }
    match deg {
        0 => Ok(()),
        1 => write!(f, "x"),
        _ => write!(f, "x^{deg}"),
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_term(f, &c.abs(), deg)?;
            first = false;
        }
        Ok(())
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn quartic() -> IntPoly {
        p(&[78, 8, -27, -4, 1])
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p(&[1, 1]) * p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_shares_root_minus_one() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 2, 1])), p(&[1, 1]));
    }

    #[test]
    fn gcd_is_primitive_with_positive_lead() {
        let a = p(&[-6, 0, 6]); // 6(x^2 - 1)
        let b = p(&[-4, -4]); // -4(x + 1)
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[3, 0, 1]).gcd(&p(&[1, 1])), IntPoly::one());
        assert_eq!(IntPoly::zero().gcd(&p(&[2, 4])), p(&[1, 2]));
    }

    #[test]
    fn exact_division_recovers_cofactor() {
        let cof = IntPoly::x().pow(3) * p(&[1, 1]).pow(4);
        let full = &cof * &quartic();
        assert_eq!(full.exact_div(&quartic()).unwrap(), cof);
    }

    #[test]
    fn exact_division_reports_non_divisor() {
        assert_eq!(p(&[1, 0, 1]).exact_div(&p(&[1, 1])), Err(Error::NotDivisible));
        assert_eq!(p(&[1, 1]).exact_div(&p(&[0, 2])), Err(Error::NotDivisible));
        assert_eq!(p(&[1, 1]).exact_div(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_part_examples() {
        let repeated = IntPoly::x().pow(3) * p(&[1, 1]).pow(4);
        assert_eq!(repeated.squarefree_part().unwrap(), p(&[0, 1, 1]));
        assert_eq!(p(&[-1, 0, 1]).squarefree_part().unwrap(), p(&[-1, 0, 1]));
        assert_eq!(IntPoly::zero().squarefree_part(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn example_psi_squarefree_part() {
        // The quartic must be squarefree and coprime to x and x + 1 before
        // the golden value below is meaningful.
        let q = quartic();
        assert!(q.gcd(&q.derivative()).is_constant());
        assert!(q.gcd(&IntPoly::x()).is_constant());
        assert!(q.gcd(&p(&[1, 1])).is_constant());
        let psi = IntPoly::x().pow(3) * p(&[1, 1]).pow(4) * q.clone();
        let expected = p(&[0, 1, 1]) * q;
        assert_eq!(psi.squarefree_part().unwrap(), expected);
    }

    #[test]
    fn yun_decomposition() {
        let f = p(&[0, 1]) * p(&[1, 1]).pow(2) * p(&[-2, 1]).pow(2) * p(&[3, 0, 1]).pow(4);
        let parts = f.squarefree_decomposition().unwrap();
        assert_eq!(parts.len(), 4);
        assert_eq!(parts[0], p(&[0, 1]));
        assert_eq!(parts[1], p(&[1, 1]) * p(&[-2, 1]));
        assert!(parts[2].is_constant());
        assert_eq!(parts[3], p(&[3, 0, 1]));
    }

    #[test]
    fn display_matches_conventional_form() {
        assert_eq!(quartic().to_string(), "x^4 - 4x^3 - 27x^2 + 8x + 78");
        assert_eq!(p(&[-1, 0, -1]).to_string(), "-x^2 - 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn multiplicity_by_repeated_division() {
        let f = IntPoly::x().pow(3) * p(&[1, 1]).pow(4) * quartic();
        assert_eq!(f.multiplicity(&IntPoly::x()).unwrap(), 3);
        assert_eq!(f.multiplicity(&p(&[1, 1])).unwrap(), 4);
        assert_eq!(f.multiplicity(&p(&[-1, 1])).unwrap(), 0);
    }

    #[test]
    fn cauchy_bound_encloses_roots() {
        // roots 2 and -3 of x^2 + x - 6
        let b = p(&[-6, 1, 1]).cauchy_bound().unwrap();
        assert_eq!(b, Rational::from_integer(7.into()));
        let b = p(&[1, 2]).cauchy_bound().unwrap();
        assert_eq!(b, Rational::new(3.into(), 2.into()));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..=20, 0..=9).prop_map(|c| IntPoly::from_i64(&c))
    }

    proptest! {
        #[test]
        fn product_divides_back(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn squarefree_degree_is_power_invariant(a in small_poly(), e in 1usize..=3) {
            prop_assume!(!a.is_zero());
            let base = a.squarefree_part().unwrap().degree();
            prop_assert_eq!(a.pow(e).squarefree_part().unwrap().degree(), base);
        }

        #[test]
        fn yun_reconstructs_input(a in small_poly(), b in small_poly()) {
            let f = &a * &(&b * &b);
            prop_assume!(!f.is_zero());
            let parts = f.squarefree_decomposition().unwrap();
            let rebuilt: IntPoly = parts
                .iter()
                .enumerate()
                .map(|(i, g)| g.pow(i + 1))
                .product();
            prop_assert_eq!(rebuilt.primitive_part(), f.primitive_part());
            for g in &parts {
                prop_assert!(g.is_constant() || g.is_squarefree());
            }
        }

        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
