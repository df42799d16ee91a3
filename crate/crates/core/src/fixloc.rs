//! Fixed-point data of Hamiltonian circle actions.
//!
//! A [`FixedPointData`] lists the connected components of the fixed set with
//! their Betti numbers, signatures, half Morse–Bott indices and optionally
//! their moment values and normal weights. From that alone we recover the
//! Betti numbers and signature of the ambient manifold, the invariant
//! `I_JR = σ - Σ(b_{4i} - b_{4i+2})` by two independent routes, and a battery
//! of consistency checks that any genuine action must pass.

use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::series::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixlocError {
    #[error("components must be non-empty")]
    NoComponents,
    #[error("component {index}: dimension {dim} is odd")]
    OddComponentDimension { index: usize, dim: u32 },
    #[error("component {index}: dimension {dim} exceeds ambient dimension {ambient}")]
    ComponentTooLarge { index: usize, dim: u32, ambient: u32 },
    #[error("component {index}: expected {expected} Betti numbers, found {found}")]
    BettiLength { index: usize, expected: usize, found: usize },
    #[error("component {index}: lambda {lambda} exceeds n - dim/2 = {max}")]
    LambdaOutOfRange { index: usize, lambda: u32, max: u32 },
    #[error("operation needs half dimension {expected}, got {found}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("weights must be positive, got {0}")]
    NonPositiveWeight(i64),
    #[error("reduced level must be positive, got {0}")]
    NonPositiveLevel(Rational),
    #[error("at least one weight is required")]
    EmptyWeights,
}

/// One connected component `F` of the fixed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedComponent {
    /// Real dimension of `F`.
    pub dim: u32,
    /// `b_0(F)..b_dim(F)`.
    pub betti: Vec<u64>,
    pub signature: i64,
    /// Half the Morse–Bott index of the Hamiltonian along `F`, equivalently
    /// the number of negative normal weights. Not the full index.
    pub lambda: u32,
    /// `H(F)`.
    pub moment_value: Option<Rational>,
    /// Nonzero normal weights, with multiplicity.
    pub weights: Option<Vec<i64>>,
}

impl FixedComponent {
    pub fn new(dim: u32, betti: Vec<u64>, signature: i64, lambda: u32) -> Self {
        Self { dim, betti, signature, lambda, moment_value: None, weights: None }
    }

    /// An isolated fixed point.
    pub fn point(lambda: u32) -> Self {
        Self::new(0, vec![1], 1, lambda)
    }

    pub fn with_moment(mut self, h: Rational) -> Self {
        self.moment_value = Some(h);
        self
    }

    pub fn with_weights(mut self, weights: Vec<i64>) -> Self {
        self.weights = Some(weights);
        self
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    fn is_point(&self) -> bool {
        self.dim == 0
    }
}

/// Fixed set of a Hamiltonian circle action on a closed symplectic
/// `2n`-manifold.
///
/// Construction checks only the shape of the data (dimensions, list lengths,
/// index range). Whether the data could come from an actual action is what
/// [`validate`] reports on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointData {
    half_dim: u32,
    components: Vec<FixedComponent>,
    monotone: bool,
    spin: bool,
}

impl FixedPointData {
    pub fn new(half_dim: u32, components: Vec<FixedComponent>) -> Result<Self, FixlocError> {
        if components.is_empty() {
            return Err(FixlocError::NoComponents);
        }
        for (index, c) in components.iter().enumerate() {
            if c.dim % 2 == 1 {
                return Err(FixlocError::OddComponentDimension { index, dim: c.dim });
            }
            if c.dim > 2 * half_dim {
                return Err(FixlocError::ComponentTooLarge { index, dim: c.dim, ambient: 2 * half_dim });
            }
            let expected = c.dim as usize + 1;
            if c.betti.len() != expected {
                return Err(FixlocError::BettiLength { index, expected, found: c.betti.len() });
            }
            let max = half_dim - c.dim / 2;
            if c.lambda > max {
                return Err(FixlocError::LambdaOutOfRange { index, lambda: c.lambda, max });
            }
        }
        Ok(Self { half_dim, components, monotone: false, spin: false })
    }

    /// Declares `c_1(M) = [ω]`, which turns on the weight-sum normalization
    /// check.
    pub fn with_monotone(mut self, monotone: bool) -> Self {
        self.monotone = monotone;
        self
    }

    pub fn with_spin(mut self, spin: bool) -> Self {
        self.spin = spin;
        self
    }

    pub fn half_dim(&self) -> u32 {
        self.half_dim
    }

    pub fn components(&self) -> &[FixedComponent] {
        &self.components
    }

    pub fn monotone(&self) -> bool {
        self.monotone
    }

    pub fn spin(&self) -> bool {
        self.spin
    }

    /// Normal complex rank `n - dim(F)/2`.
    fn codim(&self, c: &FixedComponent) -> u32 {
        self.half_dim - c.dim / 2
    }

    /// The same fixed set for the reversed circle action: every `λ_F`
    /// becomes `n - dim(F)/2 - λ_F`, weights change sign and so does `H`.
    pub fn reversed(&self) -> Self {
        let components = self
            .components
            .iter()
            .map(|c| FixedComponent {
                lambda: self.codim(c) - c.lambda,
                moment_value: c.moment_value.as_ref().map(|h| -h),
                weights: c.weights.as_ref().map(|w| w.iter().map(|x| -x).collect()),
                ..c.clone()
            })
            .collect();
        Self { components, ..self.clone() }
    }
}

/// `b_i(M) = Σ_F b_{i - 2λ_F}(F)` for `i = 0..2n`.
pub fn localize_betti(fpd: &FixedPointData) -> Vec<u64> {
    let mut out = vec![0u64; 2 * fpd.half_dim as usize + 1];
    for c in &fpd.components {
        let shift = 2 * c.lambda as usize;
        for (j, &b) in c.betti.iter().enumerate() {
            out[j + shift] += b;
        }
    }
    out
}

/// `σ(M) = Σ_F (-1)^{λ_F} σ(F)`.
pub fn localize_signature(fpd: &FixedPointData) -> i64 {
    fpd.components.iter().map(|c| if c.lambda % 2 == 0 { c.signature } else { -c.signature }).sum()
}

/// `σ - Σ_i (b_{4i} - b_{4i+2})` for a Betti list `b_0..b_{2n}`.
pub fn i_jr_direct(betti: &[u64], signature: i64) -> i64 {
    let alternating: i64 = betti
        .iter()
        .enumerate()
        .filter(|(i, _)| i % 2 == 0)
        .map(|(i, &b)| if i % 4 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    signature - alternating
}

/// `I_JR(M)` as a signed sum over the fixed components of positive dimension
/// divisible by 4. Points and components of dimension `2 mod 4` contribute
/// nothing.
pub fn i_jr_localized(fpd: &FixedPointData) -> i64 {
    fpd.components
        .iter()
        .filter(|c| c.dim > 0 && c.dim % 4 == 0)
        .map(|c| {
            let term = i_jr_direct(&c.betti, c.signature);
            if c.lambda % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `I_JR` of a closed 4-manifold with the given `b_2^+`.
pub fn i_jr_four_manifold(b2_plus: u64) -> i64 {
    2 * b2_plus as i64 - 2
}

/// Symplectic volume `x^{n-1} / ∏ w_i` of the reduced space at level `x`
/// of the linear circle action on `C^n` with positive weights `w_i`.
pub fn reduced_volume_linear(weights: &[i64], x: &Rational) -> Result<Rational, FixlocError> {
    if weights.is_empty() {
        return Err(FixlocError::EmptyWeights);
    }
    if let Some(&w) = weights.iter().find(|&&w| w <= 0) {
        return Err(FixlocError::NonPositiveWeight(w));
    }
    if !x.is_positive() {
        return Err(FixlocError::NonPositiveLevel(x.clone()));
    }
    let product: Rational = weights.iter().map(|&w| crate::series::rat(w)).product();
    let power = num_traits::pow(x.clone(), weights.len() - 1);
    Ok(power / product)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        })
    }
}

/// The checks [`validate`] runs, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    ComponentInvariants,
    AmbientPoincareDuality,
    UniqueExtrema,
    MorseIndexBound,
    ExtremalNeighbours,
    WeightSumNormalization,
    ExtremalWeightSigns,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::ComponentInvariants,
        Check::AmbientPoincareDuality,
        Check::UniqueExtrema,
        Check::MorseIndexBound,
        Check::ExtremalNeighbours,
        Check::WeightSumNormalization,
        Check::ExtremalWeightSigns,
    ];

    /// 1-based position in the report.
    pub fn number(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap() + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Check::ComponentInvariants => "component-invariants",
            Check::AmbientPoincareDuality => "ambient-poincare-duality",
            Check::UniqueExtrema => "unique-extrema",
            Check::MorseIndexBound => "morse-index-bound",
            Check::ExtremalNeighbours => "extremal-neighbours",
            Check::WeightSumNormalization => "weight-sum-normalization",
            Check::ExtremalWeightSigns => "extremal-weight-signs",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
    /// Indices into the component list that caused a failure.
    pub components: Vec<usize>,
}

impl CheckRecord {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Self { name, status: CheckStatus::Pass, detail: detail.into(), components: Vec::new() }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        Self { name, status: CheckStatus::Skipped, detail: detail.into(), components: Vec::new() }
    }

    fn fail(name: &'static str, detail: impl Into<String>, components: Vec<usize>) -> Self {
        Self { name, status: CheckStatus::Fail, detail: detail.into(), components }
    }

    /// Pass if `problems` is empty, otherwise fail listing them.
    fn from_problems(name: &'static str, ok_detail: &str, problems: Vec<(usize, String)>) -> Self {
        if problems.is_empty() {
            return Self::pass(name, ok_detail);
        }
        let mut components: Vec<usize> = problems.iter().map(|(i, _)| *i).collect();
        components.sort_unstable();
        components.dedup();
        let detail =
            problems.into_iter().map(|(i, msg)| format!("component {i}: {msg}")).collect::<Vec<_>>().join("; ");
        Self::fail(name, detail, components)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<CheckRecord>,
}

impl ValidationReport {
    pub fn get(&self, check: Check) -> &CheckRecord {
        &self.checks[check.number() - 1]
    }

    /// True when no check failed; skipped checks do not count against it.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).map(|c| c.name).collect()
    }
}

/// Runs every consistency check on the data. Failures are reported, never
/// raised.
pub fn validate(fpd: &FixedPointData) -> ValidationReport {
    let checks = Check::ALL
        .iter()
        .map(|&check| match check {
            Check::ComponentInvariants => check_components(fpd),
            Check::AmbientPoincareDuality => check_ambient_duality(fpd),
            Check::UniqueExtrema => check_unique_extrema(fpd),
            Check::MorseIndexBound => check_morse_bound(fpd),
            Check::ExtremalNeighbours => check_extremal_neighbours(fpd),
            Check::WeightSumNormalization => check_weight_sum(fpd),
            Check::ExtremalWeightSigns => check_extremal_weights(fpd),
        })
        .collect();
    ValidationReport { checks }
}

fn check_components(fpd: &FixedPointData) -> CheckRecord {
    let mut problems = Vec::new();
    for (i, c) in fpd.components.iter().enumerate() {
        let d = c.dim as usize;
        if c.betti[0] != 1 {
            problems.push((i, format!("b_0 = {} but components are connected", c.betti[0])));
        }
        if let Some(k) = (0..=d).find(|&k| c.betti[k] != c.betti[d - k]) {
            problems.push((
                i,
                format!("Poincare duality fails: b_{k} = {} but b_{} = {}", c.betti[k], d - k, c.betti[d - k]),
            ));
        }
        if c.dim == 0 {
            if c.signature != 1 {
                problems.push((i, format!("a point has signature 1, got {}", c.signature)));
            }
        } else if c.dim % 4 == 2 {
            if c.signature != 0 {
                problems.push((i, format!("dimension {} forces signature 0, got {}", c.dim, c.signature)));
            }
        } else {
            let mid = c.betti[d / 2] as i64;
            if c.signature.abs() > mid {
                problems.push((i, format!("|signature| = {} exceeds b_{} = {mid}", c.signature.abs(), d / 2)));
            } else if (mid - c.signature) % 2 != 0 {
                problems.push((i, format!("signature {} and b_{} = {mid} differ in parity", c.signature, d / 2)));
            }
        }
        if let Some(weights) = &c.weights {
            let expected = fpd.codim(c) as usize;
            if weights.len() != expected {
                problems.push((i, format!("expected {expected} normal weights, found {}", weights.len())));
            }
            if weights.contains(&0) {
                problems.push((i, "normal weights must be nonzero".to_string()));
            }
            let negative = weights.iter().filter(|&&w| w < 0).count();
            if negative != c.lambda as usize {
                problems.push((i, format!("lambda = {} but {negative} weights are negative", c.lambda)));
            }
        }
    }
    CheckRecord::from_problems(Check::ComponentInvariants.name(), "every component is consistent", problems)
}

fn check_ambient_duality(fpd: &FixedPointData) -> CheckRecord {
    let b = localize_betti(fpd);
    let top = b.len() - 1;
    match (0..=top).find(|&i| b[i] != b[top - i]) {
        None => CheckRecord::pass(Check::AmbientPoincareDuality.name(), format!("localized Betti numbers {b:?}")),
        Some(i) => CheckRecord::fail(
            Check::AmbientPoincareDuality.name(),
            format!("localized Betti numbers {b:?}: b_{i} = {} but b_{} = {}", b[i], top - i, b[top - i]),
            Vec::new(),
        ),
    }
}

fn minima(fpd: &FixedPointData) -> Vec<usize> {
    (0..fpd.components.len()).filter(|&i| fpd.components[i].lambda == 0).collect()
}

fn maxima(fpd: &FixedPointData) -> Vec<usize> {
    (0..fpd.components.len())
        .filter(|&i| {
            let c = &fpd.components[i];
            c.lambda == fpd.codim(c)
        })
        .collect()
}

fn check_unique_extrema(fpd: &FixedPointData) -> CheckRecord {
    let name = Check::UniqueExtrema.name();
    let (mins, maxs) = (minima(fpd), maxima(fpd));
    let mut problems = Vec::new();
    if mins.len() != 1 {
        problems.push(format!("{} components with lambda = 0 {mins:?}", mins.len()));
    }
    if maxs.len() != 1 {
        problems.push(format!("{} components with lambda = n - dim/2 {maxs:?}", maxs.len()));
    }
    if problems.is_empty() {
        return CheckRecord::pass(name, format!("minimum is component {}, maximum is component {}", mins[0], maxs[0]));
    }
    let mut components: Vec<usize> = Vec::new();
    if mins.len() != 1 {
        components.extend(&mins);
    }
    if maxs.len() != 1 {
        components.extend(&maxs);
    }
    components.sort_unstable();
    components.dedup();
    CheckRecord::fail(name, problems.join("; "), components)
}

fn moment_values(fpd: &FixedPointData) -> Option<Vec<&Rational>> {
    fpd.components.iter().map(|c| c.moment_value.as_ref()).collect()
}

fn check_morse_bound(fpd: &FixedPointData) -> CheckRecord {
    let name = Check::MorseIndexBound.name();
    let Some(h) = moment_values(fpd) else {
        return CheckRecord::skipped(name, "needs moment values on every component");
    };
    let mut problems = Vec::new();
    for (i, c) in fpd.components.iter().enumerate() {
        let bound: u32 =
            fpd.components.iter().zip(&h).filter(|(_, hj)| **hj < h[i]).map(|(other, _)| other.dim / 2 + 1).sum();
        if c.lambda > bound {
            problems.push((i, format!("lambda = {} > {bound} allowed by the components below it", c.lambda)));
        }
    }
    CheckRecord::from_problems(name, "every lambda is within the bound from lower components", problems)
}

fn check_extremal_neighbours(fpd: &FixedPointData) -> CheckRecord {
    let name = Check::ExtremalNeighbours.name();
    let Some(h) = moment_values(fpd) else {
        return CheckRecord::skipped(name, "needs moment values on every component");
    };
    let lowest = h.iter().copied().min().expect("non-empty");
    let highest = h.iter().copied().max().expect("non-empty");
    let at = |v: &Rational| (0..h.len()).filter(|&i| h[i] == v).collect::<Vec<_>>();
    let (bottom, top) = (at(lowest), at(highest));
    let isolated = |ix: &[usize]| ix.len() == 1 && fpd.components[ix[0]].is_point();
    if lowest == highest || !isolated(&bottom) || !isolated(&top) {
        return CheckRecord::pass(name, "not applicable: minimum and maximum are not both isolated points");
    }
    let internal: Vec<usize> = (0..h.len()).filter(|&i| h[i] > lowest && h[i] < highest).collect();
    let Some(low) = internal.iter().map(|&i| h[i]).min() else {
        return CheckRecord::pass(name, "no internal components");
    };
    let high = internal.iter().map(|&i| h[i]).max().expect("non-empty");
    let mut problems = Vec::new();
    for &i in &internal {
        let lambda = fpd.components[i].lambda;
        if h[i] == low && lambda != 1 {
            problems.push((i, format!("lowest internal component has lambda = {lambda}, expected 1")));
        }
        // reversing the action turns this into the first clause
        let expected = fpd.codim(&fpd.components[i]) - 1;
        if h[i] == high && lambda != expected {
            problems.push((i, format!("highest internal component has lambda = {lambda}, expected {expected}")));
        }
    }
    CheckRecord::from_problems(name, "lowest internal lambda is 1 and highest is n - dim/2 - 1", problems)
}

/// `H(F) + Σ weights(F)` for each component, when every component carries
/// both.
pub fn weight_sum_offsets(fpd: &FixedPointData) -> Option<Vec<Rational>> {
    fpd.components
        .iter()
        .map(|c| {
            let h = c.moment_value.as_ref()?;
            let sum: i64 = c.weights.as_ref()?.iter().sum();
            Some(h + crate::series::rat(sum))
        })
        .collect()
}

fn check_weight_sum(fpd: &FixedPointData) -> CheckRecord {
    let name = Check::WeightSumNormalization.name();
    if !fpd.monotone {
        return CheckRecord::skipped(name, "data is not flagged monotone");
    }
    let Some(offsets) = weight_sum_offsets(fpd) else {
        return CheckRecord::skipped(name, "needs weights and moment values on every component");
    };
    let reference = &offsets[0];
    let problems: Vec<(usize, String)> = offsets
        .iter()
        .enumerate()
        .filter(|(_, o)| *o != reference)
        .map(|(i, o)| (i, format!("H + sum of weights = {o}, component 0 has {reference}")))
        .collect();
    CheckRecord::from_problems(name, &format!("H + sum of weights = {reference} on every component"), problems)
}

fn check_extremal_weights(fpd: &FixedPointData) -> CheckRecord {
    let name = Check::ExtremalWeightSigns.name();
    let mut problems = Vec::new();
    let mut seen = false;
    for i in minima(fpd) {
        if let Some(w) = &fpd.components[i].weights {
            seen = true;
            if w.iter().any(|&x| x <= 0) {
                problems.push((i, format!("minimum has non-positive weight in {w:?}")));
            }
        }
    }
    for i in maxima(fpd) {
        if let Some(w) = &fpd.components[i].weights {
            seen = true;
            if w.iter().any(|&x| x >= 0) {
                problems.push((i, format!("maximum has non-negative weight in {w:?}")));
            }
        }
    }
    if !seen {
        return CheckRecord::skipped(name, "no weights given at the extrema");
    }
    CheckRecord::from_problems(name, "weights are positive at the minimum and negative at the maximum", problems)
}

/// `b_2(M) ≤ b_4(M)` for an 8-manifold whose 4-dimensional fixed components
/// are all non-extremal (`λ = 1`).
pub fn check_unimodal_8(fpd: &FixedPointData) -> Result<CheckRecord, FixlocError> {
    const NAME: &str = "unimodal-8";
    if fpd.half_dim != 4 {
        return Err(FixlocError::DimensionMismatch { expected: 4, found: fpd.half_dim });
    }
    let extremal: Vec<usize> =
        (0..fpd.components.len()).filter(|&i| fpd.components[i].dim == 4 && fpd.components[i].lambda != 1).collect();
    if !extremal.is_empty() {
        return Ok(CheckRecord::skipped(NAME, format!("components {extremal:?} are extremal 4-dimensional")));
    }
    let b = localize_betti(fpd);
    Ok(if b[2] <= b[4] {
        CheckRecord::pass(NAME, format!("b_2 = {} <= b_4 = {}", b[2], b[4]))
    } else {
        CheckRecord::fail(NAME, format!("b_2 = {} > b_4 = {}", b[2], b[4]), Vec::new())
    })
}

/// `1 - b_2 + b_4 - … ± b_n` over the even degrees up to the middle.
fn truncated_alternating_sum(b: &[u64], n: usize) -> i64 {
    (0..=n).step_by(2).map(|i| if i % 4 == 0 { b[i] as i64 } else { -(b[i] as i64) }).sum()
}

/// Betti-number consequences of the JR equation when no fixed component has
/// positive dimension divisible by 4: the alternating-sum inequality, even
/// unimodality in dimension 12 with `b_2 = 1`, and the mod-16 congruence for
/// spin manifolds. Returns one record per statement, skipped when its
/// hypotheses fail.
pub fn check_inequalities(fpd: &FixedPointData) -> Vec<CheckRecord> {
    let n = fpd.half_dim as usize;
    let b = localize_betti(fpd);
    let blocking: Vec<usize> = (0..fpd.components.len())
        .filter(|&i| {
            let d = fpd.components[i].dim;
            d > 0 && d.is_multiple_of(4)
        })
        .collect();
    let jr_holds = blocking.is_empty();
    let blocked = || format!("components {blocking:?} have positive dimension divisible by 4");

    let inequality = {
        const NAME: &str = "alternating-sum-inequality";
        if !jr_holds {
            CheckRecord::skipped(NAME, blocked())
        } else if n % 2 == 1 {
            CheckRecord::skipped(NAME, "real dimension is not divisible by 4")
        } else {
            let s = truncated_alternating_sum(&b, n);
            if n.is_multiple_of(4) {
                if s > 0 {
                    CheckRecord::pass(NAME, format!("alternating sum {s} > 0"))
                } else {
                    CheckRecord::fail(NAME, format!("alternating sum {s} is not positive"), Vec::new())
                }
            } else if s <= 0 {
                CheckRecord::pass(NAME, format!("alternating sum {s} <= 0"))
            } else {
                CheckRecord::fail(NAME, format!("alternating sum {s} is positive"), Vec::new())
            }
        }
    };

    let twelve = {
        const NAME: &str = "unimodal-12";
        let low_dim: Vec<usize> =
            (0..fpd.components.len()).filter(|&i| matches!(fpd.components[i].dim, 4 | 8)).collect();
        if n != 6 {
            CheckRecord::skipped(NAME, "needs a 12-manifold")
        } else if b[2] != 1 {
            CheckRecord::skipped(NAME, format!("needs b_2 = 1, got {}", b[2]))
        } else if !low_dim.is_empty() {
            CheckRecord::skipped(NAME, format!("components {low_dim:?} are 4- or 8-dimensional"))
        } else if b[0] <= b[2] && b[2] <= b[4] && b[4] <= b[6] {
            CheckRecord::pass(NAME, format!("{} <= {} <= {} <= {}", b[0], b[2], b[4], b[6]))
        } else {
            CheckRecord::fail(
                NAME,
                format!("even Betti numbers {:?} are not unimodal", [b[0], b[2], b[4], b[6]]),
                Vec::new(),
            )
        }
    };

    let rokhlin = {
        const NAME: &str = "rokhlin-ochanine-congruence";
        let off_middle_ones = (0..=2 * n).step_by(2).all(|i| i == n || b[i] == 1);
        if !jr_holds {
            CheckRecord::skipped(NAME, blocked())
        } else if n % 4 != 2 {
            CheckRecord::skipped(NAME, "needs real dimension 4 mod 8")
        } else if !fpd.spin {
            CheckRecord::skipped(NAME, "data is not flagged spin")
        } else if !off_middle_ones {
            CheckRecord::skipped(NAME, "needs b_2i = 1 away from the middle degree")
        } else if b[n] % 16 == 2 {
            CheckRecord::pass(NAME, format!("b_{n} = {} = 2 mod 16", b[n]))
        } else {
            CheckRecord::fail(NAME, format!("b_{n} = {} = {} mod 16, expected 2", b[n], b[n] % 16), Vec::new())
        }
    };

    vec![inequality, twelve, rokhlin]
}

/// Ready-made fixed-point data sets.
pub mod fixtures {
    use super::*;
    use crate::series::rat;

    /// `CP^4` with `t·[z_0:…:z_4] = [t z_0 : z_1 : … : z_4]`: an isolated
    /// minimum and the hyperplane `CP^3` as maximum.
    pub fn cp4_standard() -> FixedPointData {
        FixedPointData::new(4, vec![FixedComponent::point(0), FixedComponent::new(6, vec![1, 0, 1, 0, 1, 0, 1], 0, 1)])
            .expect("valid fixture")
    }

    /// `CP^4` with weights `(0, 1, 1, 1, 2)`, normalized so that `c_1 = [ω]`:
    /// isolated extrema at `H = ∓5` and a `CP^2` at level 0 with normal
    /// weights `{-1, 1}`.
    pub fn cp4_weighted() -> FixedPointData {
        FixedPointData::new(
            4,
            vec![
                FixedComponent::point(0).with_moment(rat(-5)).with_weights(vec![1, 1, 1, 2]),
                FixedComponent::new(4, vec![1, 0, 1, 0, 1], 1, 1).with_moment(rat(0)).with_weights(vec![-1, 1]),
                FixedComponent::point(4).with_moment(rat(5)).with_weights(vec![-1, -1, -1, -2]),
            ],
        )
        .expect("valid fixture")
        .with_monotone(true)
    }

    /// A K3 surface: `b_2 = 22`, `σ = -16`.
    pub fn k3(lambda: u32) -> FixedComponent {
        FixedComponent::new(4, vec![1, 0, 22, 0, 1], -16, lambda)
    }

    /// Equivariant blow-up of `cp4_standard` along a quartic K3 inside the
    /// fixed hyperplane: fixed set `{pt, K3, CP^3}` with `λ_{K3} = 1`.
    pub fn k3_blowup() -> FixedPointData {
        FixedPointData::new(
            4,
            vec![FixedComponent::point(0), k3(1), FixedComponent::new(6, vec![1, 0, 1, 0, 1, 0, 1], 0, 1)],
        )
        .expect("valid fixture")
    }

    /// One fixed point, `n = 0`.
    pub fn single_point() -> FixedPointData {
        FixedPointData::new(0, vec![FixedComponent::point(0)]).expect("valid fixture")
    }

    /// Isolated fixed points realizing the given even Betti numbers
    /// `b_0, b_2, …, b_{2n}`: `counts[k]` points of index `k`.
    pub fn isolated_points(counts: &[u32]) -> FixedPointData {
        let n = counts.len() as u32 - 1;
        let components = counts
            .iter()
            .enumerate()
            .flat_map(|(k, &m)| (0..m).map(move |_| FixedComponent::point(k as u32)))
            .collect();
        FixedPointData::new(n, components).expect("valid fixture")
    }
}
