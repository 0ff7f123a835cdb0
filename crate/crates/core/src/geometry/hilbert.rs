//! Hilbert series steps used to audit unprojections.

use super::WeightedPlane;
use crate::series::{IntPolynomial, RationalSeries, WeightVector};

/// Change in Hilbert series from unprojecting a divisor `P(w1,w2,w3)` with a
/// new variable of degree `s`: `t^s / ((1 - t^s) prod (1 - t^(w_i)))`.
pub fn unproject_term(plane: WeightedPlane, s: u32) -> RationalSeries {
    assert!(s >= 1, "unprojection degree must be positive");
    let mut den = plane.0.to_vec();
    den.push(s);
    RationalSeries::new(IntPolynomial::monomial(s, 1), WeightVector::new(den).expect("positive"))
}

/// Complete intersection of the given degrees in `P(ambient)`.
pub fn ci_series(ambient: &WeightVector, eq_degrees: &[u32]) -> RationalSeries {
    let mut num = IntPolynomial::one();
    for &d in eq_degrees {
        num = num.mul_factor(d, 1);
    }
    RationalSeries::new(num, ambient.clone())
}

/// Numerator of `p` written over `prod_{a in target} (1 - t^a)`, if that is a polynomial.
pub fn numerator_over(p: &RationalSeries, target: &WeightVector) -> Option<IntPolynomial> {
    let mut num = p.numerator.clone();
    for a in target.minus(&p.denominator) {
        num = num.mul_factor(a, 1);
    }
    for a in p.denominator.minus(target) {
        num = num.div_factor(a)?;
    }
    Some(num)
}
