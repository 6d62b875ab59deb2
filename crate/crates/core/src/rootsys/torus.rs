use std::f64::consts::PI;

use num_complex::Complex64;

use super::{ratio_to_f64, RootDatum, RootIdx, Weight};
use crate::error::{Error, Result};

/// Period 4π per coordinate keeps e^{φ/2} single-valued.
pub const DEFAULT_PERIOD: f64 = 4.0 * PI;

const PERIOD_TOL: f64 = 1e-9;

/// A point of the compact torus in dual coordinates: `coords[i]` is the value
/// α_i(x), and e^λ(x) = exp(i Σ λ_i x_i).
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    pub coords: Vec<f64>,
    pub period: f64,
}

impl TorusPoint {
    pub fn new(coords: Vec<f64>) -> Self {
        TorusPoint {
            coords,
            period: DEFAULT_PERIOD,
        }
    }

    pub fn with_period(coords: Vec<f64>, period: f64) -> Self {
        TorusPoint { coords, period }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// λ(x), the coordinate pairing.
    pub fn pairing(&self, lam: &Weight) -> f64 {
        lam.0.iter().zip(&self.coords).map(|(l, x)| ratio_to_f64(l) * x).sum()
    }

    /// e^λ(x) without any periodicity check.
    pub fn exp(&self, lam: &Weight) -> Complex64 {
        Complex64::from_polar(1.0, self.pairing(lam))
    }

    /// Whether e^λ is well defined on the torus of the given period.
    pub fn admits(&self, lam: &Weight) -> bool {
        lam.0.iter().all(|c| {
            let turns = ratio_to_f64(c) * self.period / (2.0 * PI);
            (turns - turns.round()).abs() < PERIOD_TOL
        })
    }
}

/// One term c·e^λ of an exponential sum.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpTerm {
    pub coeff: Complex64,
    pub weight: Weight,
}

impl ExpTerm {
    pub fn new(coeff: impl Into<Complex64>, weight: Weight) -> Self {
        ExpTerm {
            coeff: coeff.into(),
            weight,
        }
    }
}

/// Σ c·exp(i·λ(x)).
pub fn exp_eval(datum: &RootDatum, terms: &[ExpTerm], x: &TorusPoint) -> Result<Complex64> {
    if x.rank() != datum.rank() {
        return Err(Error::DimensionMismatch {
            expected: datum.rank(),
            got: x.rank(),
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for t in terms {
        if t.weight.rank() != datum.rank() {
            return Err(Error::DimensionMismatch {
                expected: datum.rank(),
                got: t.weight.rank(),
            });
        }
        if !x.admits(&t.weight) {
            return Err(Error::AperiodicExponential);
        }
        acc += t.coeff * x.exp(&t.weight);
    }
    Ok(acc)
}

/// Expansion of Π_{φ∈roots}(e^{φ/2} − e^{−φ/2}) into exponential terms.
pub fn denominator_terms(datum: &RootDatum, roots: &[RootIdx]) -> Vec<ExpTerm> {
    let half = num_rational::Rational64::new(1, 2);
    let mut terms = vec![ExpTerm::new(1.0, Weight::zero(datum.rank()))];
    for &i in roots {
        let h = datum.root_weight(i).scale(half);
        let mut next = Vec::with_capacity(terms.len() * 2);
        for t in &terms {
            next.push(ExpTerm::new(t.coeff, &t.weight + &h));
            next.push(ExpTerm::new(-t.coeff, &t.weight - &h));
        }
        terms = next;
    }
    terms
}

/// Direct product evaluation of the Weyl denominator over `roots`.
pub fn weyl_denominator(datum: &RootDatum, roots: &[RootIdx], x: &TorusPoint) -> Complex64 {
    roots
        .iter()
        .map(|&i| {
            let theta = x.pairing(&datum.root_weight(i)) / 2.0;
            Complex64::new(0.0, 2.0 * theta.sin())
        })
        .product()
}

#[cfg(test)]
mod tests {
    use super::super::build_root_datum;
    use super::*;

    #[test]
    fn half_root_difference_is_two_i() {
        let d = build_root_datum(&[vec![2]]).unwrap();
        let terms = vec![
            ExpTerm::new(1.0, Weight::from_fracs(&[(1, 2)])),
            ExpTerm::new(-1.0, Weight::from_fracs(&[(-1, 2)])),
        ];
        let v = exp_eval(&d, &terms, &TorusPoint::new(vec![PI])).unwrap();
        assert!((v - Complex64::new(0.0, 2.0)).norm() < 1e-12);
    }

    #[test]
    fn constant_term() {
        let d = build_root_datum(&[vec![2, -1], vec![-1, 2]]).unwrap();
        let v = exp_eval(
            &d,
            &[ExpTerm::new(1.0, Weight::zero(2))],
            &TorusPoint::new(vec![0.3, -1.7]),
        )
        .unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn denominator_at_quarter_turn() {
        let d = build_root_datum(&[vec![2]]).unwrap();
        let x = TorusPoint::new(vec![PI / 2.0]);
        let expanded = exp_eval(&d, &denominator_terms(&d, &[0]), &x).unwrap();
        let direct = weyl_denominator(&d, &[0], &x);
        let expected = Complex64::new(0.0, 2.0 * (PI / 4.0).sin());
        assert!((expanded - expected).norm() < 1e-12);
        assert!((direct - expected).norm() < 1e-12);
        assert!((expected.im - 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn period_mismatch() {
        let d = build_root_datum(&[vec![2]]).unwrap();
        let third = [ExpTerm::new(1.0, Weight::from_fracs(&[(1, 3)]))];
        assert_eq!(
            exp_eval(&d, &third, &TorusPoint::new(vec![1.0])).unwrap_err(),
            Error::AperiodicExponential
        );
        let half = [ExpTerm::new(1.0, Weight::from_fracs(&[(1, 2)]))];
        assert_eq!(
            exp_eval(&d, &half, &TorusPoint::with_period(vec![1.0], 2.0 * PI)).unwrap_err(),
            Error::AperiodicExponential
        );
        assert!(exp_eval(&d, &third, &TorusPoint::with_period(vec![1.0], 6.0 * PI)).is_ok());
    }
}
