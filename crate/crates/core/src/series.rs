//! Exact rationals and truncated one-variable power series.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of `h^0..=h^N`
//! and represents a power series modulo `h^(N+1)`. Binary operations never
//! extend precision: the result carries the smaller of the two orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
}

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`, reduced.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    ///
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        Self { coeffs }
    }

    /// Integer coefficients, padded with zeros (or cut) to the given order.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let coeffs = (0..=order).map(|i| coeffs.get(i).map_or_else(Rational::zero, |&c| rat(c))).collect();
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `1 + d·h` at the given order.
    pub fn linear(d: i64, order: usize) -> Self {
        Self::from_ints(&[1, d], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `h^i`.
    ///
    /// # Panics
    ///
    /// Panics if `i` exceeds the order: that coefficient is unknown.
    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops coefficients above `order`. Asking for more precision than the
    /// series carries is a no-op.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Self { coeffs: self.coeffs[..keep].to_vec() }
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse at the same order, via the coefficient recurrence
    /// `b_0 = 1/a_0`, `b_m = -(1/a_0) Σ_{i=1..m} a_i b_{m-i}`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv_a0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_a0.clone());
        for m in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for i in 1..=m {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[m - i];
                }
            }
            out.push(-(acc * &inv_a0));
        }
        Ok(Self { coeffs: out })
    }

    /// `self^e`; negative exponents go through [`inverse`](Self::inverse).
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut square = base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&square);
            }
            exp >>= 1;
            if exp > 0 {
                square = square.mul(&square);
            }
        }
        Ok(result)
    }

    /// Substitutes `h ↦ d·h`.
    pub fn scale_variable(&self, d: i64) -> Self {
        let d = rat(d);
        let mut factor = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * &factor;
                factor *= &d;
                out
            })
            .collect();
        Self { coeffs }
    }

    /// Divides by `h`, losing one order of precision. The constant term must
    /// vanish for this to be exact; it is discarded.
    fn shift_down(&self) -> Option<Self> {
        (self.order() > 0).then(|| Self { coeffs: self.coeffs[1..].to_vec() })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }
}

fn exp_series(sign: i64, order: usize) -> TruncatedSeries {
    // e^{sign·x} = Σ sign^k x^k / k!
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for k in 1..=order {
        term = term * rat(sign) / rat(k as i64);
        coeffs.push(term.clone());
    }
    TruncatedSeries::new(coeffs)
}

/// Taylor series of `tanh(x)/x` at the given order, from
/// `(e^x - e^{-x}) / (x·(e^x + e^{-x}))`.
pub fn tanh_x_over_x(order: usize) -> TruncatedSeries {
    let pos = exp_series(1, order + 1);
    let neg = exp_series(-1, order + 1);
    let numerator = (&pos - &neg).shift_down().expect("order + 1 is positive");
    let denominator = (&pos + &neg).truncate(order);
    let inv = denominator.inverse().expect("e^x + e^-x has constant term 2");
    numerator.mul(&inv)
}

/// Taylor series of `x/tanh(x)`: the characteristic power series of the
/// L-genus.
pub fn x_over_tanh_x(order: usize) -> TruncatedSeries {
    tanh_x_over_x(order).inverse().expect("tanh(x)/x has constant term 1")
}

impl<'a> Add for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, other: &'a TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order].iter().zip(&other.coeffs[..=order]).map(|(a, b)| a + b).collect();
        TruncatedSeries { coeffs }
    }
}

impl<'a> Sub for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, other: &'a TruncatedSeries) -> TruncatedSeries {
        self + &(-other)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, other: &'a TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, other)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "h")?;
                    } else {
                        write!(f, "h^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}
