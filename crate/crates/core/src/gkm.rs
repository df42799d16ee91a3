//! GKM graphs: fixed points of a torus action as vertices, invariant
//! 2-spheres as edges labelled by primitive weights.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::series::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GkmError {
    #[error("torus rank must be positive")]
    ZeroRank,
    #[error("duplicate vertex id {0:?}")]
    DuplicateVertex(String),
    #[error("vertex {id:?}: moment has {found} entries, rank is {rank}")]
    MomentLength { id: String, found: usize, rank: usize },
    #[error("edge {edge}: endpoint {endpoint} is out of range")]
    UnknownEndpoint { edge: usize, endpoint: usize },
    #[error("edge {edge}: both endpoints are vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge}: weight has {found} entries, rank is {rank}")]
    WeightLength { edge: usize, found: usize, rank: usize },
    #[error("edge {edge}: weight {weight:?} is not primitive")]
    NotPrimitive { edge: usize, weight: Vec<i64> },
    #[error("edge {edge}: moment difference is not a nonzero multiple of the weight")]
    Incompatible { edge: usize },
    #[error("vertices {vertices:?} do not have exactly {valence} incident edges")]
    IrregularValence { valence: usize, vertices: Vec<usize> },
    #[error("direction has {found} entries, rank is {rank}")]
    DirectionLength { found: usize, rank: usize },
    #[error("direction is orthogonal to the weights of edges {0:?}")]
    NonGenericDirection(Vec<usize>),
    #[error("expected {expected} {what}, got {found}")]
    LengthMismatch { what: &'static str, expected: usize, found: usize },
    #[error("edge {0}: rotation weight must be positive")]
    ZeroWeight(usize),
    #[error("two-quadrics bound needs even n >= 4, got {0}")]
    BadDimension(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkmVertex {
    pub id: String,
    pub moment: Vec<Rational>,
}

/// An invariant sphere between vertices `v` and `w`. The weight is stored
/// once, unoriented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkmEdge {
    pub v: usize,
    pub w: usize,
    pub weight: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkmGraph {
    rank: usize,
    valence: usize,
    vertices: Vec<GkmVertex>,
    edges: Vec<GkmEdge>,
    /// Sign of `c` in `μ(w) - μ(v) = c · weight`, per edge.
    orientation: Vec<i8>,
}

impl GkmGraph {
    /// Checks weights (primitive, right length) and moment compatibility.
    /// Regularity of the valence is reported separately by
    /// [`check_valence`](Self::check_valence) so that broken graphs can still
    /// be inspected.
    pub fn new(rank: usize, valence: usize, vertices: Vec<GkmVertex>, edges: Vec<GkmEdge>) -> Result<Self, GkmError> {
        if rank == 0 {
            return Err(GkmError::ZeroRank);
        }
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.id.as_str(), i).is_some() {
                return Err(GkmError::DuplicateVertex(v.id.clone()));
            }
            if v.moment.len() != rank {
                return Err(GkmError::MomentLength { id: v.id.clone(), found: v.moment.len(), rank });
            }
        }
        let mut orientation = Vec::with_capacity(edges.len());
        for (edge, e) in edges.iter().enumerate() {
            for endpoint in [e.v, e.w] {
                if endpoint >= vertices.len() {
                    return Err(GkmError::UnknownEndpoint { edge, endpoint });
                }
            }
            if e.v == e.w {
                return Err(GkmError::SelfLoop { edge, vertex: e.v });
            }
            if e.weight.len() != rank {
                return Err(GkmError::WeightLength { edge, found: e.weight.len(), rank });
            }
            let g = e.weight.iter().fold(0u64, |g, &x| g.gcd(&x.unsigned_abs()));
            if g != 1 {
                return Err(GkmError::NotPrimitive { edge, weight: e.weight.clone() });
            }
            let sign = compatibility_sign(&vertices[e.v].moment, &vertices[e.w].moment, &e.weight)
                .ok_or(GkmError::Incompatible { edge })?;
            orientation.push(sign);
        }
        Ok(Self { rank, valence, vertices, edges, orientation })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn valence(&self) -> usize {
        self.valence
    }

    pub fn vertices(&self) -> &[GkmVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GkmEdge] {
        &self.edges
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.edges.iter().filter(|e| e.v == vertex || e.w == vertex).count()
    }

    /// Every vertex meets exactly `valence` edges.
    pub fn check_valence(&self) -> Result<(), GkmError> {
        let bad: Vec<usize> = (0..self.vertices.len()).filter(|&v| self.degree(v) != self.valence).collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(GkmError::IrregularValence { valence: self.valence, vertices: bad })
        }
    }

    /// Weight of `edge` oriented away from `vertex`, i.e. pointing along
    /// the moment image towards the other endpoint.
    fn weight_from(&self, edge: usize, vertex: usize) -> impl Iterator<Item = i128> + '_ {
        let e = &self.edges[edge];
        let sign = i128::from(self.orientation[edge]) * if vertex == e.v { 1 } else { -1 };
        e.weight.iter().map(move |&x| sign * i128::from(x))
    }
}

/// `Some(sign of c)` if `b - a = c · weight` for a nonzero rational `c`.
fn compatibility_sign(a: &[Rational], b: &[Rational], weight: &[i64]) -> Option<i8> {
    let mut scale: Option<Rational> = None;
    for ((x, y), &w) in a.iter().zip(b).zip(weight) {
        let diff = y - x;
        if w == 0 {
            if !diff.is_zero() {
                return None;
            }
            continue;
        }
        let c = diff / Rational::from_integer(BigInt::from(w));
        match &scale {
            None => scale = Some(c),
            Some(s) if *s == c => {}
            Some(_) => return None,
        }
    }
    let c = scale?;
    if c.is_zero() {
        None
    } else if c.is_positive() {
        Some(1)
    } else {
        Some(-1)
    }
}

fn pairing(weight: impl Iterator<Item = i128>, xi: &[i64]) -> BigInt {
    weight.zip(xi).map(|(a, &b)| BigInt::from(a) * b).sum()
}

/// Number of fixed points, which is the Euler characteristic.
pub fn euler(g: &GkmGraph) -> usize {
    g.vertices.len()
}

/// `|E| = n·|V|/2`.
pub fn edge_count_identity(g: &GkmGraph) -> bool {
    2 * g.edges.len() == g.valence * g.vertices.len()
}

/// Betti numbers `b_0..b_{2n}` by Morse counting along the component
/// `⟨μ, xi⟩`: a vertex contributes to `b_{2i}` when exactly `i` of its
/// edges point downward.
pub fn morse_betti(g: &GkmGraph, xi: &[i64]) -> Result<Vec<u64>, GkmError> {
    if xi.len() != g.rank {
        return Err(GkmError::DirectionLength { found: xi.len(), rank: g.rank });
    }
    g.check_valence()?;
    let degenerate: Vec<usize> = (0..g.edges.len())
        .filter(|&e| pairing(g.edges[e].weight.iter().map(|&x| i128::from(x)), xi).is_zero())
        .collect();
    if !degenerate.is_empty() {
        return Err(GkmError::NonGenericDirection(degenerate));
    }
    let mut betti = vec![0u64; 2 * g.valence + 1];
    for v in 0..g.vertices.len() {
        let index = (0..g.edges.len())
            .filter(|&e| g.edges[e].v == v || g.edges[e].w == v)
            .filter(|&e| pairing(g.weight_from(e, v), xi).is_negative())
            .count();
        betti[2 * index] += 1;
    }
    Ok(betti)
}

/// GKM graph of the standard `T^n` action on `CP^n`: the complete graph on
/// `n + 1` vertices with vertex 0 at the origin and vertex `i` at `e_i`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cp_graph(n: usize) -> GkmGraph {
    assert!(n >= 1, "CP^n needs n >= 1");
    let basis = |i: usize| -> Vec<i64> { (1..=n).map(|j| i64::from(i == j)).collect() };
    let vertices = (0..=n)
        .map(|i| GkmVertex {
            id: format!("p{i}"),
            moment: basis(i).into_iter().map(|x| Rational::from_integer(BigInt::from(x))).collect(),
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let weight = basis(i).iter().zip(basis(j)).map(|(a, b)| a - b).collect();
            edges.push(GkmEdge { v: i, w: j, weight });
        }
    }
    GkmGraph::new(n, n, vertices, edges).expect("CP^n graph is valid")
}

/// `Σ_edges |H(v) - H(w)| / m(edge)`: the symplectic area of the toric
/// 1-skeleton, given the circle moment map on vertices and the rotation
/// weight of the circle on each invariant sphere.
pub fn skeleton_c1_sum(g: &GkmGraph, moment_h: &[Rational], s1_weights: &[u64]) -> Result<Rational, GkmError> {
    if moment_h.len() != g.vertices.len() {
        return Err(GkmError::LengthMismatch {
            what: "moment values",
            expected: g.vertices.len(),
            found: moment_h.len(),
        });
    }
    if s1_weights.len() != g.edges.len() {
        return Err(GkmError::LengthMismatch {
            what: "edge weights",
            expected: g.edges.len(),
            found: s1_weights.len(),
        });
    }
    g.edges.iter().zip(s1_weights).enumerate().try_fold(Rational::zero(), |acc, (i, (e, &m))| {
        if m == 0 {
            return Err(GkmError::ZeroWeight(i));
        }
        let area = (&moment_h[e.v] - &moment_h[e.w]).abs() / Rational::from_integer(BigInt::from(m));
        Ok(acc + area)
    })
}

/// The two numbers whose comparison rules out a GKM action on `X_n(2,2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityCertificate {
    pub n: u32,
    /// `∫ c_1 c_{n-1}` forced by the Betti numbers.
    pub required: i128,
    /// Minimum the toric 1-skeleton can contribute.
    pub lower_bound: i128,
    pub feasible: bool,
}

/// For `X_n(2,2)`, `n` even and at least 4: the Chern number
/// `∫ c_1 c_{n-1} = n(n+2)(n-1)/2` against the skeleton bound. The skeleton
/// has `n·χ/2 = n(n+2)` spheres, each carrying `∫ c_1` a positive multiple of
/// `n - 1`, so any GKM action needs `n(n+2)(n-1) ≤ n(n+2)(n-1)/2`.
pub fn two_quadrics_feasibility(n: u32) -> Result<FeasibilityCertificate, GkmError> {
    if n < 4 || n % 2 == 1 {
        return Err(GkmError::BadDimension(n));
    }
    let m = i128::from(n);
    let euler = 2 * (m + 2);
    let edge_count = m * euler / 2;
    let required = m * (m + 2) * (m - 1) / 2;
    let lower_bound = edge_count * (m - 1);
    Ok(FeasibilityCertificate { n, required, lower_bound, feasible: lower_bound <= required })
}
