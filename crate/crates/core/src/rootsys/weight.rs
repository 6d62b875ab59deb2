use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Rational weight in simple-root coordinates.
///
/// Half-integer coordinates are the common case (ρ and e^{φ/2} live there),
/// but any rational is representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational64::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| Rational64::from_integer(x)).collect())
    }

    /// Builds a weight from `(numerator, denominator)` pairs.
    pub fn from_fracs(v: &[(i64, i64)]) -> Self {
        Weight(v.iter().map(|&(p, q)| Rational64::new(p, q)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: Rational64) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }

    /// True when every coordinate lies in ½ℤ.
    pub fn is_half_integral(&self) -> bool {
        self.0.iter().all(|x| (x * 2).is_integer())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(ratio_to_f64).collect()
    }

    /// Parses a comma-separated list such as `"1/2,-3,0"`. The empty string
    /// yields the empty weight.
    pub fn parse_list(s: &str) -> Result<Weight> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Weight(vec![]));
        }
        s.split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

pub fn ratio_to_f64(x: &Rational64) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Parses `"p/q"` or an integer string.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
        None => s.parse::<i64>().map(Rational64::from_integer).map_err(|_| bad()),
    }
}

/// Formats a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rational(x: &Rational64) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn sign_of(x: &Rational64) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Weight::parse_list(s)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl From<&[i64]> for Weight {
    fn from(v: &[i64]) -> Self {
        Weight::from_ints(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        let w = Weight::parse_list("1/2, -3,4/2").unwrap();
        assert_eq!(w, Weight::from_fracs(&[(1, 2), (-3, 1), (2, 1)]));
        assert_eq!(w.to_string(), "1/2,-3,2");
        assert_eq!(Weight::parse_list("").unwrap().rank(), 0);
        assert!(Weight::parse_list("1/0").is_err());
        assert!(Weight::parse_list("x").is_err());
    }

    #[test]
    fn half_integrality() {
        assert!(Weight::from_fracs(&[(3, 2), (1, 1)]).is_half_integral());
        assert!(!Weight::from_fracs(&[(1, 3)]).is_half_integral());
    }
}
