use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lp::{feasibility, Feasibility};
use super::{Address, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`cut_cone_decompose`]; the LP has
/// `2^(n-1) - 1` columns.
pub const MAX_CUT_CONE_VERTICES: usize = 13;

/// Cut `S` as a bit mask over vertex indices, never containing vertex 0.
type CutMask = u64;

fn separates(cut: CutMask, i: usize, j: usize) -> bool {
    (cut >> i & 1) != (cut >> j & 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// A path metric written as `Σ w_S δ_S` with positive rational weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutDecomposition {
    vertex_count: usize,
    weights: BTreeMap<CutMask, BigRational>,
}

impl CutDecomposition {
    /// Each cut is a list of vertex indices; a side containing vertex 0 is
    /// replaced by its complement and repeated cuts add up.
    pub fn new(vertex_count: usize, cuts: Vec<(Vec<usize>, BigRational)>) -> Result<Self> {
        if vertex_count > 64 {
            return Err(Error::guard("cut decompositions hold at most 64 vertices"));
        }
        let full: CutMask = if vertex_count == 64 { u64::MAX } else { (1 << vertex_count) - 1 };
        let mut weights: BTreeMap<CutMask, BigRational> = BTreeMap::new();
        for (side, w) in cuts {
            if !w.is_positive() {
                return Err(Error::OutOfRange { what: "cut weight", detail: format!("{w} <= 0") });
            }
            let mut mask: CutMask = 0;
            for v in side {
                if v >= vertex_count {
                    return Err(Error::OutOfRange { what: "cut vertex", detail: format!("{v}") });
                }
                mask |= 1 << v;
            }
            if mask & 1 == 1 {
                mask ^= full;
            }
            if mask == 0 {
                return Err(Error::OutOfRange { what: "cut", detail: "trivial cut".into() });
            }
            *weights.entry(mask).or_insert_with(BigRational::zero) += w;
        }
        Ok(CutDecomposition { vertex_count, weights })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Cuts (as sorted vertex lists not containing vertex 0) with weights.
    pub fn cuts(&self) -> Vec<(Vec<usize>, BigRational)> {
        self.weights
            .iter()
            .map(|(&mask, w)| ((0..self.vertex_count).filter(|v| mask >> v & 1 == 1).collect(), w.clone()))
            .collect()
    }

    /// `Σ_S w_S δ_S(i, j)`.
    pub fn distance(&self, i: usize, j: usize) -> BigRational {
        self.weights.iter().filter(|(&s, _)| separates(s, i, j)).map(|(_, w)| w.clone()).sum()
    }

    /// Whether the weighted cuts reproduce the path metric of `graph` exactly.
    pub fn realizes(&self, graph: &Graph) -> bool {
        self.vertex_count == graph.vertex_count()
            && pairs(self.vertex_count).into_iter().all(|(i, j)| match graph.distance(i, j) {
                Some(d) => self.distance(i, j) == BigRational::from_integer(d.into()),
                None => false,
            })
    }

    /// Least common multiple of the weight denominators.
    pub fn scale(&self) -> BigInt {
        self.weights.values().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()))
    }
}

/// A vector `y` over vertex pairs with `y·δ_S <= 0` for every cut and
/// `y·d > 0`, proving the metric lies outside the cut cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasCertificate {
    vertex_count: usize,
    coefficients: Vec<((usize, usize), BigRational)>,
}

impl FarkasCertificate {
    pub fn coefficients(&self) -> &[((usize, usize), BigRational)] {
        &self.coefficients
    }

    /// Re-checks the certificate against `graph` over all cuts.
    pub fn certifies(&self, graph: &Graph) -> bool {
        let n = self.vertex_count;
        if n != graph.vertex_count() || !graph.is_connected() {
            return false;
        }
        let on_metric: BigRational = self
            .coefficients
            .iter()
            .map(|((i, j), y)| y * BigRational::from_integer(graph.d(*i, *j).into()))
            .sum();
        if !on_metric.is_positive() {
            return false;
        }
        (1..1u64 << (n - 1)).all(|half| {
            let cut = half << 1;
            let on_cut: BigRational = self
                .coefficients
                .iter()
                .filter(|((i, j), _)| separates(cut, *i, *j))
                .map(|(_, y)| y.clone())
                .sum();
            !on_cut.is_positive()
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutConeVerdict {
    Feasible(CutDecomposition),
    Infeasible(FarkasCertificate),
}

impl CutConeVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, CutConeVerdict::Feasible(_))
    }

    pub fn decomposition(&self) -> Option<&CutDecomposition> {
        match self {
            CutConeVerdict::Feasible(d) => Some(d),
            CutConeVerdict::Infeasible(_) => None,
        }
    }
}

/// Decides whether the path metric of `graph` lies in the cut cone, i.e.
/// whether the graph embeds into a hypercube at some scale.
pub fn cut_cone_decompose(graph: &Graph) -> Result<CutConeVerdict> {
    let n = graph.vertex_count();
    if n > MAX_CUT_CONE_VERTICES {
        return Err(Error::guard(format!(
            "cut cone LP is limited to {MAX_CUT_CONE_VERTICES} vertices, got {n}"
        )));
    }
    graph.require_connected()?;
    let pairs = pairs(n);
    let cuts: Vec<CutMask> = (1..1u64 << (n - 1)).map(|half| half << 1).collect();
    let matrix: Vec<Vec<BigRational>> = pairs
        .iter()
        .map(|&(i, j)| {
            cuts.iter()
                .map(|&s| if separates(s, i, j) { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    let rhs: Vec<BigRational> =
        pairs.iter().map(|&(i, j)| BigRational::from_integer(graph.d(i, j).into())).collect();
    Ok(match feasibility(&matrix, &rhs) {
        Feasibility::Feasible(x) => {
            let weights = cuts
                .into_iter()
                .zip(x)
                .filter(|(_, w)| w.is_positive())
                .collect();
            CutConeVerdict::Feasible(CutDecomposition { vertex_count: n, weights })
        }
        Feasibility::Infeasible(y) => CutConeVerdict::Infeasible(FarkasCertificate {
            vertex_count: n,
            coefficients: pairs.into_iter().zip(y).filter(|(_, y)| !y.is_zero()).collect(),
        }),
    })
}

/// Hypercube addresses with Hamming distance `scale * d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledEmbedding {
    pub scale: u64,
    pub addresses: Vec<Address>,
}

impl ScaledEmbedding {
    pub fn dim(&self) -> usize {
        self.addresses.first().map_or(0, Address::len)
    }
}

/// Turns a decomposition into an embedding at scale `λ = lcm(denominators)`:
/// cut `S` contributes `λ w_S` coordinates, equal to 1 exactly on `S`.
pub fn embedding_from_cuts(decomposition: &CutDecomposition) -> Result<ScaledEmbedding> {
    let scale = decomposition.scale();
    let too_large = || Error::guard("embedding scale or dimension does not fit in u64");
    let scale_u64 = scale.to_u64().ok_or_else(too_large)?;
    let lambda = BigRational::from_integer(scale);
    let mut addresses = vec![Address(Vec::new()); decomposition.vertex_count];
    for (&cut, w) in &decomposition.weights {
        let copies = (w * &lambda).to_integer().to_usize().ok_or_else(too_large)?;
        for (v, address) in addresses.iter_mut().enumerate() {
            address.0.extend(std::iter::repeat_n(cut >> v & 1 == 1, copies));
        }
    }
    Ok(ScaledEmbedding { scale: scale_u64, addresses })
}
