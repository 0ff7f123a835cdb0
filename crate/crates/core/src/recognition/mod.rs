//! Recognising a Hilbert series as that of a Gorenstein ring in a weighted
//! projective space.
//!
//! [`recognize`] runs a greedy loop on the expansion: the first nonzero
//! coefficient `c_d`, if positive, is cleared by `c_d` new generators of weight
//! `d`. When a negative coefficient or the end of the expansion is reached the
//! candidate is closed: the numerator must stop at `k = sum of weights`, carry
//! the Gorenstein symmetry, and reproduce the input series exactly.
//!
//! The codimension is the number of weights minus the pole order at `t = 1`,
//! so a threefold in `P(w_1..w_N)` has codimension `N - 4`.

mod search;
mod shape;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::series::{IntPolynomial, RationalSeries, WeightVector};

pub use search::{analyse, search, unprojection_prediction, Analysis, ProjectionAdvisory, SearchQuery, SearchRow};
pub use shape::{complete_shape, fit_resolution_shape, ResolutionShape, ShapeError, ShapeFit, MAX_SHAPES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionConfig {
    /// Number of expansion coefficients examined, `c_0..=c_order`.
    pub expansion_order: usize,
    /// Largest admissible number of generators, hints included.
    pub max_weights: usize,
    /// Generator weights cleared before the greedy loop starts.
    pub hint_weights: Vec<u32>,
}

impl Default for RecognitionConfig {
    fn default() -> Self {
        Self { expansion_order: 80, max_weights: 10, hint_weights: Vec::new() }
    }
}

impl RecognitionConfig {
    pub fn with_hints(&self, hints: Vec<u32>) -> Self {
        Self { hint_weights: hints, ..self.clone() }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("series has no pole at t = 1")]
    NoPole,
    #[error("hint weights must be positive")]
    ZeroHint,
    #[error("series does not start with constant term 1 (found {0})")]
    NotNormalised(BigInt),
    #[error("weight budget exceeded: {weights:?} needs {needed} weights, limit {max}")]
    BudgetExceeded { weights: Vec<u32>, needed: usize, max: usize },
    #[error("{weights:?} gives codimension {codim}; at least one equation is needed")]
    TooFewWeights { weights: Vec<u32>, codim: i64 },
    #[error("adjunction degree {k} exceeds the expansion order {order}")]
    ExpansionTooShort { k: u32, order: usize },
    #[error("residual tail at degree {degree} after weights {weights:?}")]
    ResidualTail { weights: Vec<u32>, degree: usize },
    #[error("numerator {numerator} over {weights:?} is not Gorenstein symmetric")]
    AsymmetricNumerator { weights: Vec<u32>, numerator: String },
    #[error("numerator over {weights:?} does not reproduce the series")]
    NotExact { weights: Vec<u32> },
}

/// Where a candidate's equation degrees came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquationSource {
    /// Negative numerator coefficients; codimension 1 and 2.
    Numerator,
    /// Fitted to the codimension 3 or 4 resolution shape.
    ShapeFit,
    /// Predicted from the codimension 3 projection from the named point.
    UnprojectionSeed(String),
    /// The leading negative block of the numerator; no shape is known.
    LeadingBlock,
    /// Codimension 3 or 4 numerator that fits no shape; leading block reported.
    Unfitted(ShapeError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCandidate {
    pub weights: WeightVector,
    pub numerator: IntPolynomial,
    /// Adjunction number, `k = sum of weights = deg numerator`.
    pub k: u32,
    pub codim: usize,
    pub pole_order: u32,
    /// Leading coefficient at `t = 1`; `A^3` for threefolds.
    pub degree_a3: BigRational,
    pub equation_degrees: Vec<u32>,
    pub syzygy_degrees: Vec<u32>,
    pub source: EquationSource,
    /// Number of equally preferred shape fits (1 when unambiguous).
    pub alternatives: usize,
    pub hints_used: Vec<u32>,
    pub advisories: Vec<ProjectionAdvisory>,
}

impl EmbeddingCandidate {
    pub fn is_shape_fitted(&self) -> bool {
        !matches!(self.source, EquationSource::Unfitted(_))
    }

    /// `X_{d1,...} in P(w...)` style description.
    pub fn describe(&self) -> String {
        let eq = notation(&self.equation_degrees);
        format!("X_{{{}}} in {}", eq, self.weights.ambient_notation())
    }
}

fn notation(d: &[u32]) -> String {
    let w = WeightVector::new(d.to_vec()).unwrap_or_default();
    let s = w.ambient_notation();
    s[2..s.len() - 1].to_string()
}

/// Number of sign alternations among the nonzero coefficients of `n`.
pub fn sign_changes(n: &IntPolynomial) -> usize {
    n.sign_changes()
}

/// Greedy recognition of `p` with the hints in `config`.
pub fn recognize(p: &RationalSeries, config: &RecognitionConfig) -> Result<EmbeddingCandidate, RecognitionError> {
    let (pole_order, degree_a3) = p.leading_coefficient_at_one().map_err(|_| RecognitionError::NoPole)?;
    let order = config.expansion_order;
    let mut s = p.expand(order);
    if !s.coefficient(0).is_one() {
        return Err(RecognitionError::NotNormalised(s.coefficient(0).clone()));
    }
    if config.hint_weights.contains(&0) {
        return Err(RecognitionError::ZeroHint);
    }
    let mut weights: Vec<u32> = Vec::new();
    for &h in &config.hint_weights {
        s = s.mul_factor(h, 1);
        weights.push(h);
    }
    if weights.len() > config.max_weights {
        return Err(RecognitionError::BudgetExceeded {
            weights: sorted(&weights),
            needed: weights.len(),
            max: config.max_weights,
        });
    }
    let mut from = 1;
    while let Some(d) = s.first_nonzero_from(from) {
        let c = s.coefficient(d);
        if c.is_negative() {
            break;
        }
        let needed = c.to_usize().map(|m| m + weights.len()).unwrap_or(usize::MAX);
        if needed > config.max_weights {
            return Err(RecognitionError::BudgetExceeded {
                weights: sorted(&weights),
                needed,
                max: config.max_weights,
            });
        }
        let m = needed - weights.len();
        s = s.mul_factor(d as u32, m as u32);
        weights.extend(std::iter::repeat_n(d as u32, m));
        from = d + 1;
    }

    let weights = WeightVector::new(weights).map_err(|_| RecognitionError::ZeroHint)?;
    let codim = weights.len() as i64 - pole_order as i64;
    if codim < 1 {
        return Err(RecognitionError::TooFewWeights { weights: weights.as_slice().to_vec(), codim });
    }
    let k = weights.sum();
    if k as usize >= order {
        return Err(RecognitionError::ExpansionTooShort { k, order });
    }
    if let Some(degree) = s.first_nonzero_from(k as usize + 1) {
        return Err(RecognitionError::ResidualTail { weights: weights.as_slice().to_vec(), degree });
    }
    let numerator = IntPolynomial::from_coefficients(&s.coefficients()[..=k as usize]);
    let sign = if codim % 2 == 0 { 1 } else { -1 };
    if !numerator.is_palindromic(k, sign) {
        return Err(RecognitionError::AsymmetricNumerator {
            weights: weights.as_slice().to_vec(),
            numerator: numerator.to_string(),
        });
    }
    if !RationalSeries::new(numerator.clone(), weights.clone()).equals(p) {
        return Err(RecognitionError::NotExact { weights: weights.as_slice().to_vec() });
    }

    let codim = codim as usize;
    let (equation_degrees, syzygy_degrees, source, alternatives) = read_equations(&numerator, k, codim);
    Ok(EmbeddingCandidate {
        weights,
        numerator,
        k,
        codim,
        pole_order,
        degree_a3,
        equation_degrees,
        syzygy_degrees,
        source,
        alternatives,
        hints_used: config.hint_weights.clone(),
        advisories: Vec::new(),
    })
}

fn sorted(w: &[u32]) -> Vec<u32> {
    let mut v = w.to_vec();
    v.sort_unstable();
    v
}

fn read_equations(n: &IntPolynomial, k: u32, codim: usize) -> (Vec<u32>, Vec<u32>, EquationSource, usize) {
    match codim {
        1 | 2 => {
            let mut eq = Vec::new();
            for (e, c) in n.terms() {
                if c.is_negative() {
                    eq.extend(std::iter::repeat_n(e, c.abs().to_usize().unwrap_or(0)));
                }
            }
            (eq, Vec::new(), EquationSource::Numerator, 1)
        }
        3 | 4 => match fit_resolution_shape(n, k, codim) {
            Ok(fit) => {
                let best = fit.best().clone();
                (best.equations, best.syzygies, EquationSource::ShapeFit, fit.ambiguity())
            }
            Err(e) => (shape::leading_negative_block(n), Vec::new(), EquationSource::Unfitted(e), 0),
        },
        _ => (shape::leading_negative_block(n), Vec::new(), EquationSource::LeadingBlock, 1),
    }
}
