//! Basket-aware recognition and the `(P1, P2, n, m)` table search.
//!
//! [`analyse`] assembles the Hilbert series, screens out data that cannot come
//! from a threefold, and runs [`recognize`] through a retry ladder of hint
//! weights derived from the basket. A candidate is accepted once it closes,
//! fits its resolution shape (codimension 3 and 4), and has a weight divisible
//! by every basket index. Codimension 4 candidates then try to read their
//! equation degrees off a codimension 3 projection.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use super::shape::complete_shape;
use super::{recognize, EmbeddingCandidate, EquationSource, RecognitionConfig, RecognitionError};
use crate::orbifold::{standard_basket, Basket, ContributionRegistry, InitialData, OrbifoldError};
use crate::series::WeightVector;

/// Expected projection from a basket point, attached to candidates as advice only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionAdvisory {
    /// The point projected from.
    pub from: String,
    /// Projection exists only if `A^3` exceeds this.
    pub threshold: BigRational,
    /// Index of the residual singularity, which should divide some weight.
    pub expected_index: u32,
    pub satisfied: bool,
}

/// Outcome of analysing one `(P1, P2, basket)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Analysis {
    Embedded(Box<EmbeddingCandidate>),
    /// Recognition succeeded in codimension at least 5, or ran out of weights.
    HighCodimension {
        candidate: Option<Box<EmbeddingCandidate>>,
        reason: String,
    },
    NonArising {
        reason: String,
    },
    Failed {
        reason: String,
    },
}

impl Analysis {
    pub fn candidate(&self) -> Option<&EmbeddingCandidate> {
        match self {
            Analysis::Embedded(c) => Some(c),
            Analysis::HighCodimension { candidate: Some(c), .. } => Some(c),
            _ => None,
        }
    }

    /// Short status label used in tables.
    pub fn status(&self) -> String {
        let hints = |c: &EmbeddingCandidate| {
            if c.hints_used.is_empty() {
                String::new()
            } else {
                let h: Vec<String> = c.hints_used.iter().map(u32::to_string).collect();
                format!(" [hints {}]", h.join(","))
            }
        };
        match self {
            Analysis::Embedded(c) => format!("codim {}{}", c.codim, hints(c)),
            Analysis::HighCodimension { candidate, .. } => {
                format!("codimension >= 5{}", candidate.as_deref().map(hints).unwrap_or_default())
            }
            Analysis::NonArising { .. } => "non-arising".to_string(),
            Analysis::Failed { .. } => "failed".to_string(),
        }
    }
}

/// Hint sets tried in order: none, then per basket type by decreasing index
/// `{r}`, `{r, c}` for `1/r(a,b,c)`, and `r` repeated once per point.
pub fn hint_ladder(basket: &Basket) -> Vec<Vec<u32>> {
    let mut types: Vec<_> = basket.iter().collect();
    types.sort_by_key(|t| std::cmp::Reverse(t.0.r));
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for (q, mult) in types {
        let r = q.r;
        let c = q.weights[2];
        for h in [vec![r], vec![r, c], vec![r; mult as usize]] {
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out
}

/// Weights and equation degrees of `X` predicted from its projection `Y`.
///
/// Projecting from an index `r` point drops one weight `r` and contracts a
/// divisor `P(w1,w2,w3)` into `Y`; the four remaining weights `g` of `Y`
/// contribute the unprojection equations of degree `r + g`.
pub fn unprojection_prediction(
    y_weights: &WeightVector,
    y_equations: &[u32],
    divisor: [u32; 3],
    r: u32,
) -> Option<(WeightVector, Vec<u32>)> {
    let plane = WeightVector::new(divisor.to_vec()).ok()?;
    let rest = y_weights.difference(&plane)?;
    if rest.len() != 4 {
        return None;
    }
    let mut eq = y_equations.to_vec();
    eq.extend(rest.as_slice().iter().map(|g| r + g));
    eq.sort_unstable();
    let mut w = y_weights.clone();
    w.push(r);
    Some((w, eq))
}

/// Assembles, screens and recognises `(d, basket)`; hints come from the basket unless `cfg` sets some.
pub fn analyse(
    d: InitialData,
    basket: &Basket,
    registry: &ContributionRegistry,
    cfg: &RecognitionConfig,
) -> Result<Analysis, OrbifoldError> {
    analyse_inner(d, basket, registry, cfg, true)
}

fn analyse_inner(
    d: InitialData,
    basket: &Basket,
    registry: &ContributionRegistry,
    cfg: &RecognitionConfig,
    seed: bool,
) -> Result<Analysis, OrbifoldError> {
    let series = registry.assemble(d, basket)?;
    match series.leading_coefficient_at_one() {
        Ok((4, a3)) if a3.is_positive() => {}
        Ok((4, a3)) => return Ok(Analysis::NonArising { reason: format!("A^3 = {a3} is not positive") }),
        Ok((p, _)) => {
            return Ok(Analysis::NonArising {
                reason: format!("Hilbert series has a pole of order {p} at t = 1, not 4"),
            })
        }
        Err(_) => return Ok(Analysis::NonArising { reason: "Hilbert series has no pole at t = 1".into() }),
    }

    let ladder = if cfg.hint_weights.is_empty() { hint_ladder(basket) } else { vec![cfg.hint_weights.clone()] };
    let indices = basket.indices();
    let mut first_error: Option<RecognitionError> = None;
    let mut high: Option<EmbeddingCandidate> = None;
    let mut accepted = None;
    for hints in ladder {
        match recognize(&series, &cfg.with_hints(hints)) {
            Ok(c) => {
                let compatible = indices.iter().all(|r| c.weights.as_slice().iter().any(|w| w % r == 0));
                if !compatible || !c.is_shape_fitted() {
                    continue;
                }
                if c.codim >= 5 {
                    high.get_or_insert(c);
                    continue;
                }
                accepted = Some(c);
                break;
            }
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }

    let Some(mut c) = accepted else {
        if let Some(mut c) = high {
            c.advisories = advisories(&c, basket, registry);
            return Ok(Analysis::HighCodimension { candidate: Some(Box::new(c)), reason: "codimension >= 5".into() });
        }
        return Ok(match first_error {
            Some(e @ RecognitionError::BudgetExceeded { .. }) => {
                Analysis::HighCodimension { candidate: None, reason: e.to_string() }
            }
            Some(e) => Analysis::Failed { reason: e.to_string() },
            None => Analysis::Failed { reason: "no hint set gave a compatible candidate".into() },
        });
    };

    if seed && c.codim == 4 {
        seed_from_projection(&mut c, d, basket, registry, cfg)?;
    }
    c.advisories = advisories(&c, basket, registry);
    Ok(Analysis::Embedded(Box::new(c)))
}

fn seed_from_projection(
    c: &mut EmbeddingCandidate,
    d: InitialData,
    basket: &Basket,
    registry: &ContributionRegistry,
    cfg: &RecognitionConfig,
) -> Result<(), OrbifoldError> {
    for (q, _) in basket.iter() {
        let contribution = registry.get(q)?;
        let mut projected = basket.clone();
        projected.remove_one(q);
        if let Some(res) = contribution.residual {
            projected.insert(res, 1);
        }
        let Analysis::Embedded(y) = analyse_inner(d, &projected, registry, &cfg.with_hints(Vec::new()), false)? else {
            continue;
        };
        if y.codim != 3 || y.source != EquationSource::ShapeFit {
            continue;
        }
        let Some((w, eq)) = unprojection_prediction(&y.weights, &y.equation_degrees, contribution.divisor, q.r) else {
            continue;
        };
        if w != c.weights {
            continue;
        }
        if let Some(shape) = complete_shape(&c.numerator, c.k, 4, &eq) {
            c.equation_degrees = shape.equations;
            c.syzygy_degrees = shape.syzygies;
            c.source = EquationSource::UnprojectionSeed(q.to_string());
            return Ok(());
        }
    }
    Ok(())
}

fn advisories(c: &EmbeddingCandidate, basket: &Basket, registry: &ContributionRegistry) -> Vec<ProjectionAdvisory> {
    let mut out = Vec::new();
    for (q, _) in basket.iter() {
        let Ok(contribution) = registry.get(q) else { continue };
        let Some(res) = contribution.residual else { continue };
        let denom: u64 = q.r as u64 * contribution.divisor.iter().map(|&w| w as u64).product::<u64>();
        let threshold = BigRational::new(BigInt::from(1), BigInt::from(denom));
        if c.degree_a3 > threshold {
            out.push(ProjectionAdvisory {
                from: q.to_string(),
                threshold,
                expected_index: res.r,
                satisfied: c.weights.as_slice().iter().any(|w| w % res.r == 0),
            });
        }
    }
    out
}

/// A finite list of `(P1, P2, n, m)` tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchQuery {
    pub tuples: Vec<[u32; 4]>,
}

impl SearchQuery {
    /// All tuples in the product of the ranges, `P1` slowest and `m` fastest.
    pub fn grid(
        p1: RangeInclusive<u32>,
        p2: RangeInclusive<u32>,
        n: RangeInclusive<u32>,
        m: RangeInclusive<u32>,
    ) -> Self {
        let mut tuples = Vec::new();
        for a in p1 {
            for b in p2.clone() {
                for x in n.clone() {
                    for y in m.clone() {
                        tuples.push([a, b, x, y]);
                    }
                }
            }
        }
        Self { tuples }
    }
}

/// One row of a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchRow {
    pub p1: u32,
    pub p2: u32,
    pub n: u32,
    pub m: u32,
    pub analysis: Analysis,
}

/// Analyses each tuple with the basket `n x 1/3(1,1,1) + m x 1/5(1,1,3)`; rows keep input order.
pub fn search(query: &SearchQuery, cfg: &RecognitionConfig) -> Vec<SearchRow> {
    let registry = ContributionRegistry::default();
    query
        .tuples
        .par_iter()
        .map(|&[p1, p2, n, m]| {
            let analysis = analyse(InitialData { p1, p2 }, &standard_basket(n, m), &registry, cfg)
                .unwrap_or_else(|e| Analysis::Failed { reason: e.to_string() });
            SearchRow { p1, p2, n, m, analysis }
        })
        .collect()
}
