//! Invariants of smooth complete intersections `X_n(d_1, …, d_k)`.
//!
//! The Chern classes come from the Euler sequence,
//! `c(X) = (1+h)^{n+k+1} / ∏(1 + d_i h)`, and the signature from the
//! L-genus `(h/tanh h)^{n+k+1} · ∏ tanh(d_i h)/(d_i h)`. Every number is read
//! off the `h^n` coefficient and multiplied by the degree `∏ d_i`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::series::{self, Rational, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CiError {
    #[error("complex dimension must be at least 1")]
    ZeroDimension,
    #[error("hypersurface degrees must be at least 1, got {0}")]
    ZeroDegree(u32),
    #[error("middle Betti number came out negative ({0}); this is a bug")]
    NegativeBetti(BigInt),
    #[error("operation needs even complex dimension, got {0}")]
    OddDimension(u32),
    #[error("operation needs odd complex dimension at least 3, got {0}")]
    BadOddDimension(u32),
    #[error("b_n + signature is odd ({0}); this is a bug")]
    ParityViolation(BigInt),
    #[error("operation needs complex dimension {expected}, got {found}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("Betti list must have odd length 2n+1, got {0}")]
    BadLength(usize),
    #[error("Betti numbers must be non-negative")]
    NegativeInput,
}

/// Complex dimension together with the multiset of hypersurface degrees.
///
/// Degrees equal to 1 are dropped and the rest kept sorted, so `X_n(1, 2)`
/// and `X_n(2)` compare equal. The empty multiset is projective space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree {
    n: u32,
    degrees: Vec<u32>,
}

impl Multidegree {
    pub fn new(n: u32, degrees: impl IntoIterator<Item = u32>) -> Result<Self, CiError> {
        if n == 0 {
            return Err(CiError::ZeroDimension);
        }
        let mut kept = Vec::new();
        for d in degrees {
            match d {
                0 => return Err(CiError::ZeroDegree(0)),
                1 => {}
                d => kept.push(d),
            }
        }
        kept.sort_unstable();
        Ok(Self { n, degrees: kept })
    }

    /// `CP^n`.
    pub fn projective(n: u32) -> Result<Self, CiError> {
        Self::new(n, [])
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    /// `∏ d_i`, the degree of `X` in its ambient projective space.
    pub fn degree(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    fn order(&self) -> usize {
        self.n as usize
    }

    /// Exponent `n + k + 1` of the ambient factor.
    fn ambient_power(&self) -> i64 {
        i64::from(self.n) + self.codim() as i64 + 1
    }

    /// `(∏ d_i) · [h^n] s`. For the generating functions used here this is
    /// always an integer.
    fn integrate(&self, s: &TruncatedSeries) -> BigInt {
        let value = s.coeff(self.order()) * Rational::from_integer(self.degree());
        debug_assert!(value.is_integer(), "characteristic number {value} is not integral");
        value.to_integer()
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{}({})", self.n, format_degrees(&self.degrees))
    }
}

/// `"2,2"`, or `"1"` for projective space.
pub fn format_degrees(degrees: &[u32]) -> String {
    if degrees.is_empty() {
        return "1".to_string();
    }
    degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Total Chern class as a series in the hyperplane class, order `n`.
pub fn total_chern_series(md: &Multidegree) -> TruncatedSeries {
    let order = md.order();
    let ambient = TruncatedSeries::linear(1, order).pow(md.ambient_power()).expect("non-negative exponent");
    md.degrees.iter().fold(ambient, |acc, &d| {
        let factor = TruncatedSeries::linear(i64::from(d), order).inverse().expect("constant term is 1");
        acc.mul(&factor)
    })
}

/// Integer coefficients of [`total_chern_series`]; `c_i(X) = chern[i]·h^i`.
pub fn chern_coefficients(md: &Multidegree) -> Vec<BigInt> {
    total_chern_series(md)
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// Topological Euler characteristic `∫ c_n`.
pub fn euler_characteristic(md: &Multidegree) -> BigInt {
    md.integrate(&total_chern_series(md))
}

/// Betti numbers `b_0..b_{2n}`. Off the middle degree they agree with `CP^n`;
/// the middle one is fixed by the Euler characteristic.
pub fn betti_numbers(md: &Multidegree) -> Result<Vec<BigInt>, CiError> {
    let n = md.n as usize;
    let chi = euler_characteristic(md);
    let middle = if n.is_multiple_of(2) { &chi - BigInt::from(n) } else { BigInt::from(n + 1) - &chi };
    if middle.is_negative() {
        return Err(CiError::NegativeBetti(middle));
    }
    Ok((0..=2 * n)
        .map(|i| {
            if i == n {
                middle.clone()
            } else if i % 2 == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect())
}

/// Signature of the intersection form. Zero unless the real dimension is
/// divisible by 4.
pub fn signature(md: &Multidegree) -> BigInt {
    if md.n % 2 == 1 {
        return BigInt::zero();
    }
    let order = md.order();
    let ambient = series::x_over_tanh_x(order).pow(md.ambient_power()).expect("non-negative exponent");
    let base = series::tanh_x_over_x(order);
    let l_class = md.degrees.iter().fold(ambient, |acc, &d| acc.mul(&base.scale_variable(i64::from(d))));
    md.integrate(&l_class)
}

/// `Σ_i (b_{4i} - b_{4i+2})` for a complete intersection, straight from the
/// Euler characteristic: off the middle degree the even Betti numbers are 1,
/// so for even `n = 2m` the sum is `1 - (-1)^m + (-1)^m b_n`, and for odd `n`
/// it vanishes.
fn alternating_even_betti(md: &Multidegree) -> BigInt {
    let n = md.n;
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let b_mid = euler_characteristic(md) - BigInt::from(n);
    if (n / 2).is_multiple_of(2) {
        b_mid
    } else {
        BigInt::from(2) - b_mid
    }
}

/// `σ(X) - Σ_i (b_{4i} - b_{4i+2})`.
pub fn i_jr(md: &Multidegree) -> BigInt {
    signature(md) - alternating_even_betti(md)
}

/// `(b_n^+, b_n^-)` for even `n`.
pub fn b_plus_minus(md: &Multidegree) -> Result<(BigInt, BigInt), CiError> {
    if md.n % 2 == 1 {
        return Err(CiError::OddDimension(md.n));
    }
    let b_mid = betti_numbers(md)?.swap_remove(md.n as usize);
    let sigma = signature(md);
    let sum = &b_mid + &sigma;
    if sum.is_odd() {
        return Err(CiError::ParityViolation(sum));
    }
    let two = BigInt::from(2);
    let plus = &sum / &two;
    let minus = (&b_mid - &sigma) / &two;
    if plus.is_negative() || minus.is_negative() {
        return Err(CiError::ParityViolation(sum));
    }
    Ok((plus, minus))
}

/// `∫ c_1 c_{n-1}`.
pub fn c1_cnm1(md: &Multidegree) -> BigInt {
    let c = chern_coefficients(md);
    let n = md.n as usize;
    md.degree() * &c[1] * &c[n - 1]
}

/// `∫ c_2^2` on a fourfold.
pub fn c2_squared(md: &Multidegree) -> Result<BigInt, CiError> {
    if md.n != 4 {
        return Err(CiError::DimensionMismatch { expected: 4, found: md.n });
    }
    let c = chern_coefficients(md);
    Ok(md.degree() * &c[2] * &c[2])
}

/// `Σ_{p=0..n} b_{2p} (6p(p-1) + (5n - 3n²)/2)`, the Chern number
/// `∫ c_1 c_{n-1}` expressed through even Betti numbers. Takes the full list
/// `b_0..b_{2n}`.
pub fn gs_chern_sum(betti: &[BigInt]) -> Result<Rational, CiError> {
    if betti.len().is_multiple_of(2) {
        return Err(CiError::BadLength(betti.len()));
    }
    if betti.iter().any(Signed::is_negative) {
        return Err(CiError::NegativeInput);
    }
    let n = BigInt::from((betti.len() - 1) / 2);
    let shift = Rational::new(BigInt::from(5) * &n - BigInt::from(3) * &n * &n, BigInt::from(2));
    Ok(betti
        .iter()
        .step_by(2)
        .enumerate()
        .map(|(p, b)| {
            let p = BigInt::from(p);
            let weight = Rational::from_integer(BigInt::from(6) * &p * (&p - 1)) + &shift;
            weight * Rational::from_integer(b.clone())
        })
        .sum())
}

/// Everything this module knows about one complete intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub multidegree: Multidegree,
    pub euler: BigInt,
    pub betti: Vec<BigInt>,
    pub signature: BigInt,
    /// Present for even `n` only.
    pub b_plus: Option<BigInt>,
    pub b_minus: Option<BigInt>,
    pub i_jr: BigInt,
    pub c1_cnm1: BigInt,
    /// Present for `n = 4` only.
    pub c2_squared: Option<BigInt>,
}

pub fn invariant_report(md: &Multidegree) -> Result<InvariantReport, CiError> {
    let (b_plus, b_minus) = if md.n.is_multiple_of(2) {
        let (p, m) = b_plus_minus(md)?;
        (Some(p), Some(m))
    } else {
        (None, None)
    };
    Ok(InvariantReport {
        multidegree: md.clone(),
        euler: euler_characteristic(md),
        betti: betti_numbers(md)?,
        signature: signature(md),
        b_plus,
        b_minus,
        i_jr: i_jr(md),
        c1_cnm1: c1_cnm1(md),
        c2_squared: if md.n == 4 { Some(c2_squared(md)?) } else { None },
    })
}

/// All sorted degree lists with entries `>= 2` and sum at most `max_sum`,
/// including the empty list, in lexicographic order.
pub fn degree_lists(max_sum: u32) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, min: u32, remaining: u32, out: &mut Vec<Vec<u32>>) {
        out.push(prefix.clone());
        for d in min..=remaining {
            prefix.push(d);
            extend(prefix, d, remaining - d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 2, max_sum, &mut out);
    out.sort();
    out
}

fn scan(
    n: u32,
    max_degree_sum: u32,
    keep: impl Fn(&Multidegree) -> Result<bool, CiError> + Sync,
) -> Result<Vec<Multidegree>, CiError> {
    let candidates = degree_lists(max_degree_sum);
    let hits: Result<Vec<Option<Multidegree>>, CiError> = candidates
        .into_par_iter()
        .map(|degrees| {
            let md = Multidegree::new(n, degrees)?;
            Ok(keep(&md)?.then_some(md))
        })
        .collect();
    let mut hits: Vec<Multidegree> = hits?.into_iter().flatten().collect();
    hits.sort();
    Ok(hits)
}

/// Multidegrees of even dimension `n` with `I_JR = 0`.
pub fn scan_jr_null(n: u32, max_degree_sum: u32) -> Result<Vec<Multidegree>, CiError> {
    if n == 0 {
        return Err(CiError::ZeroDimension);
    }
    if n % 2 == 1 {
        return Err(CiError::OddDimension(n));
    }
    scan(n, max_degree_sum, |md| Ok(i_jr(md).is_zero()))
}

/// Multidegrees of odd dimension `n >= 3` with `χ = n + 1`.
pub fn scan_chi_linear(n: u32, max_degree_sum: u32) -> Result<Vec<Multidegree>, CiError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(CiError::BadOddDimension(n));
    }
    let target = BigInt::from(n + 1);
    scan(n, max_degree_sum, |md| Ok(euler_characteristic(md) == target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn md(n: u32, d: &[u32]) -> Multidegree {
        Multidegree::new(n, d.iter().copied()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Independent route to `[h^m] (1+h)^a / (1+d h)`: direct double sum.
    fn chern_top_single(a: u32, d: i64, m: u32) -> BigInt {
        let mut acc = BigInt::zero();
        let mut binom = BigInt::one();
        for j in 0..=m {
            // term: C(a, j) * (-d)^{m-j}
            acc += &binom * BigInt::from(-d).pow(m - j);
            binom = binom * BigInt::from(a - j) / BigInt::from(j + 1);
            if j + 1 > a {
                break;
            }
        }
        acc
    }

    #[test]
    fn normalization_drops_linear_sections() {
        assert_eq!(md(4, &[1, 2, 1]), md(4, &[2]));
        assert_eq!(md(3, &[3, 2]).degrees(), &[2, 3]);
        assert_eq!(Multidegree::new(0, []), Err(CiError::ZeroDimension));
        assert_eq!(Multidegree::new(2, [0]), Err(CiError::ZeroDegree(0)));
        assert_eq!(md(4, &[2, 2]).to_string(), "X_4(2,2)");
        assert_eq!(md(4, &[]).to_string(), "X_4(1)");
    }

    #[test]
    fn chern_classes() {
        assert_eq!(chern_coefficients(&md(4, &[2, 2])), big(&[1, 3, 5, 3, 3]));
        assert_eq!(chern_coefficients(&md(2, &[3])), big(&[1, 1, 3]));
        assert_eq!(chern_coefficients(&md(3, &[])), big(&[1, 4, 6, 4]));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_characteristic(&md(4, &[2, 2])), BigInt::from(12));
        assert_eq!(euler_characteristic(&md(3, &[2])), BigInt::from(4));
        let oracle = chern_top_single(5, 5, 3) * 5;
        assert_eq!(oracle, BigInt::from(-200));
        assert_eq!(euler_characteristic(&md(3, &[5])), oracle);
    }

    #[test]
    fn betti() {
        for n in (2..=12).step_by(2) {
            let b = betti_numbers(&md(n, &[2, 2])).unwrap();
            assert_eq!(b[n as usize], BigInt::from(n + 4));
        }
        assert_eq!(betti_numbers(&md(3, &[])).unwrap(), big(&[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(betti_numbers(&md(3, &[5])).unwrap()[3], BigInt::from(204));
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&md(4, &[2, 2])), BigInt::from(8));
        assert_eq!(signature(&md(4, &[])), BigInt::from(1));
        assert_eq!(signature(&md(4, &[3])), BigInt::from(19));
        assert_eq!(signature(&md(2, &[4])), BigInt::from(-16));
        assert_eq!(signature(&md(3, &[5])), BigInt::zero());
    }

    #[test]
    fn jr_invariant() {
        assert_eq!(i_jr(&md(4, &[2, 2])), BigInt::zero());
        assert_eq!(i_jr(&md(4, &[])), BigInt::zero());
        assert_eq!(i_jr(&md(4, &[3])), BigInt::from(-4));
    }

    #[test]
    fn plus_minus() {
        let pm = |n, d: &[u32]| {
            let (p, m) = b_plus_minus(&md(n, d)).unwrap();
            (p.to_i64().unwrap(), m.to_i64().unwrap())
        };
        assert_eq!(pm(4, &[2, 2]), (8, 0));
        assert_eq!(pm(2, &[3]), (1, 6));
        assert_eq!(pm(6, &[2, 2]), (1, 9));
        assert_eq!(b_plus_minus(&md(3, &[2])), Err(CiError::OddDimension(3)));
    }

    #[test]
    fn chern_numbers() {
        assert_eq!(c1_cnm1(&md(4, &[2, 2])), BigInt::from(36));
        assert_eq!(c1_cnm1(&md(6, &[2, 2])), BigInt::from(120));
        assert_eq!(c1_cnm1(&md(4, &[])), BigInt::from(50));
        assert_eq!(c2_squared(&md(4, &[2, 2])).unwrap(), BigInt::from(100));
        assert_eq!(c2_squared(&md(4, &[])).unwrap(), BigInt::from(100));
        assert!(!c2_squared(&md(4, &[2])).unwrap().is_negative());
        assert_eq!(c2_squared(&md(3, &[2])), Err(CiError::DimensionMismatch { expected: 4, found: 3 }));
    }

    #[test]
    fn gs_sum() {
        let quadrics = big(&[1, 0, 1, 0, 8, 0, 1, 0, 1]);
        assert_eq!(gs_chern_sum(&quadrics).unwrap(), series::rat(36));
        let cp4 = big(&[1, 0, 1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(gs_chern_sum(&cp4).unwrap(), series::rat(50));
        assert_eq!(gs_chern_sum(&big(&[0; 9])).unwrap(), series::rat(0));
        assert_eq!(gs_chern_sum(&big(&[1, 0])), Err(CiError::BadLength(2)));
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(degree_lists(1), vec![Vec::<u32>::new()]);
        assert_eq!(degree_lists(4), vec![vec![], vec![2], vec![2, 2], vec![3], vec![4]]);
    }

    #[test]
    fn scans() {
        let degs = |v: Vec<Multidegree>| v.into_iter().map(|m| m.degrees).collect::<Vec<_>>();
        assert_eq!(degs(scan_jr_null(4, 12).unwrap()), vec![vec![], vec![2], vec![2, 2]]);
        assert_eq!(degs(scan_jr_null(2, 9).unwrap()), vec![vec![], vec![2], vec![2, 2], vec![3]]);
        assert_eq!(degs(scan_chi_linear(3, 12).unwrap()), vec![vec![], vec![2]]);
        assert_eq!(degs(scan_chi_linear(3, 1).unwrap()), vec![Vec::<u32>::new()]);
        assert_eq!(scan_jr_null(3, 5), Err(CiError::OddDimension(3)));
        assert_eq!(scan_chi_linear(4, 5), Err(CiError::BadOddDimension(4)));
    }

    #[test]
    fn report() {
        let r = invariant_report(&md(4, &[2, 2])).unwrap();
        assert_eq!(r.euler, BigInt::from(12));
        assert_eq!(r.b_plus, Some(BigInt::from(8)));
        assert_eq!(r.c2_squared, Some(BigInt::from(100)));
        let r = invariant_report(&md(3, &[2])).unwrap();
        assert_eq!(r.b_plus, None);
        assert_eq!(r.c2_squared, None);
    }
}
