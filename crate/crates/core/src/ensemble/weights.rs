use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::moments::MomentSequence;
use crate::rational::{catalan, format_rational, parse_rational, pow, rat, to_f64, Rational};
use crate::seed;

use super::RegularGraph;

/// Edge-weight distribution. Parameters are exact so that the analytic
/// moments are exact too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSpec {
    ConstantOne,
    /// Semicircle law with the given variance, supported on
    /// `[-2 sigma, 2 sigma]`.
    Semicircle { variance: Rational },
    Gaussian { variance: Rational },
    /// Uniform sign.
    Rademacher,
    /// Uniform on `[-a, a]`.
    Uniform { half_width: Rational },
}

impl WeightSpec {
    pub fn semicircle_quarter() -> Self {
        WeightSpec::Semicircle { variance: rat(1, 4) }
    }

    /// Draws one weight.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            WeightSpec::ConstantOne => 1.0,
            WeightSpec::Rademacher => {
                if rng.random::<bool>() {
                    1.0
                } else {
                    -1.0
                }
            }
            WeightSpec::Gaussian { variance } => {
                let normal = Normal::new(0.0, to_f64(variance).sqrt()).expect("positive variance");
                normal.sample(rng)
            }
            WeightSpec::Uniform { half_width } => {
                let a = to_f64(half_width);
                rng.random_range(-a..=a)
            }
            WeightSpec::Semicircle { variance } => {
                // uniform envelope on the support, acceptance pi/4
                let radius = 2.0 * to_f64(variance).sqrt();
                loop {
                    let x: f64 = rng.random_range(-1.0..=1.0);
                    let u: f64 = rng.random();
                    if u * u <= 1.0 - x * x {
                        return radius * x;
                    }
                }
            }
        }
    }

    /// Exact `k`-th moment.
    pub fn moment(&self, k: u32) -> Rational {
        let even = k.is_multiple_of(2);
        let half = k / 2;
        match self {
            WeightSpec::ConstantOne => Rational::one(),
            _ if !even => Rational::zero(),
            WeightSpec::Rademacher => Rational::one(),
            WeightSpec::Semicircle { variance } => {
                Rational::from_integer(catalan(u64::from(half))) * pow(variance, half)
            }
            WeightSpec::Gaussian { variance } => {
                let double_factorial: BigInt = (1..k).step_by(2).map(BigInt::from).product();
                Rational::from_integer(double_factorial) * pow(variance, half)
            }
            WeightSpec::Uniform { half_width } => {
                pow(half_width, k) / Rational::from_integer(BigInt::from(k + 1))
            }
        }
    }

    pub fn moments(&self, max_order: u32) -> MomentSequence {
        MomentSequence::from_fn(self.to_string(), max_order, |k| self.moment(k))
    }

    /// Weights are symmetric about zero, so odd moments vanish.
    pub fn is_symmetric(&self) -> bool {
        !matches!(self, WeightSpec::ConstantOne)
    }
}

pub fn weight_moments(spec: &WeightSpec, order: u32) -> Rational {
    spec.moment(order)
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSpec::ConstantOne => f.write_str("constant"),
            WeightSpec::Rademacher => f.write_str("rademacher"),
            WeightSpec::Semicircle { variance } => write!(f, "semicircle:{}", format_rational(variance)),
            WeightSpec::Gaussian { variance } => write!(f, "gaussian:{}", format_rational(variance)),
            WeightSpec::Uniform { half_width } => write!(f, "uniform:{}", format_rational(half_width)),
        }
    }
}

/// `constant`, `rademacher`, `semicircle[:variance]` (default 1/4),
/// `gaussian[:variance]` (default 1), `uniform[:half_width]` (default 1).
/// Parameters are decimals or fractions and must be positive.
impl FromStr for WeightSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let (kind, param) = match trimmed.split_once(':') {
            Some((k, p)) => (k.trim(), Some(p)),
            None => (trimmed, None),
        };
        let positive = |default: Rational| -> Result<Rational> {
            let value = match param {
                Some(p) => parse_rational(p)?,
                None => default,
            };
            if !value.is_positive() {
                return Err(Error::parse("weight spec", s, "parameter must be positive"));
            }
            if to_f64(&value) > 1e150 {
                return Err(Error::parse("weight spec", s, "parameter too large"));
            }
            Ok(value)
        };
        let no_param = |spec: WeightSpec| match param {
            None => Ok(spec),
            Some(_) => Err(Error::parse("weight spec", s, "this kind takes no parameter")),
        };
        match kind.to_ascii_lowercase().as_str() {
            "constant" | "constant-one" | "one" | "unweighted" => no_param(WeightSpec::ConstantOne),
            "rademacher" | "sign" => no_param(WeightSpec::Rademacher),
            "semicircle" => Ok(WeightSpec::Semicircle {
                variance: positive(rat(1, 4))?,
            }),
            "gaussian" | "normal" => Ok(WeightSpec::Gaussian {
                variance: positive(Rational::one())?,
            }),
            "uniform" => Ok(WeightSpec::Uniform {
                half_width: positive(Rational::one())?,
            }),
            _ => Err(Error::parse("weight spec", s, "unknown kind")),
        }
    }
}

impl Serialize for WeightSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for WeightSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A regular graph with one real weight per undirected edge.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    base: RegularGraph,
    /// Aligned with `base.edges()`.
    weights: Vec<f64>,
    /// Weighted neighbor lists, same order as `base.neighbors`.
    adjacency: Vec<Vec<(u32, f64)>>,
    spec: Option<WeightSpec>,
    seed: Option<u64>,
}

impl WeightedGraph {
    pub fn unweighted(base: RegularGraph) -> Self {
        let weights = vec![1.0; base.edge_count()];
        Self::from_parts(base, weights, Some(WeightSpec::ConstantOne), None)
    }

    /// `weights` must have one entry per edge of `base.edges()`.
    pub fn with_weights(base: RegularGraph, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != base.edge_count() {
            return Err(Error::NotRegular {
                d: base.d(),
                reason: format!("{} weights for {} edges", weights.len(), base.edge_count()),
            });
        }
        Ok(Self::from_parts(base, weights, None, None))
    }

    fn from_parts(base: RegularGraph, weights: Vec<f64>, spec: Option<WeightSpec>, seed: Option<u64>) -> Self {
        let mut adjacency: Vec<Vec<(u32, f64)>> =
            (0..base.n()).map(|_| Vec::with_capacity(base.d())).collect();
        for (&(u, v), &w) in base.edges().iter().zip(&weights) {
            adjacency[u as usize].push((v, w));
            adjacency[v as usize].push((u, w));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable_by_key(|&(v, _)| v);
        }
        Self {
            base,
            weights,
            adjacency,
            spec,
            seed,
        }
    }

    pub fn base(&self) -> &RegularGraph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn spec(&self) -> Option<&WeightSpec> {
        self.spec.as_ref()
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn neighbors(&self, v: usize) -> &[(u32, f64)] {
        &self.adjacency[v]
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        self.adjacency[u]
            .binary_search_by_key(&(v as u32), |&(w, _)| w)
            .ok()
            .map(|i| self.adjacency[u][i].1)
    }

    /// Dense symmetric matrix with zero diagonal.
    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.n();
        let mut m = DMatrix::zeros(n, n);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &(v, w) in nbrs {
                m[(u, v as usize)] = w;
            }
        }
        m
    }
}

/// One independent draw per undirected edge, in edge order.
pub fn assign_weights(graph: &RegularGraph, spec: &WeightSpec, seed: u64) -> WeightedGraph {
    let mut rng = seed::rng(seed);
    let weights = (0..graph.edge_count()).map(|_| spec.sample(&mut rng)).collect();
    WeightedGraph::from_parts(graph.clone(), weights, Some(spec.clone()), Some(seed))
}
