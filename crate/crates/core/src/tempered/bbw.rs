use std::collections::BTreeSet;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use super::{dominant_conjugate, rho_t, simple_roots_of, span_positive, Chi};
use crate::error::{Error, Result};
use crate::realform::CartanClass;
use crate::rootsys::{varpi, RootDatum, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BbwResult {
    /// Cohomology vanishes in every degree.
    Vanishes,
    /// Cohomology is concentrated in degree `q0`, with parameter `nu`.
    Cohomology { q0: usize, nu: Weight, chi: Chi },
}

/// Bott–Borel–Weil for the imaginary root system of `cartan`.
///
/// `phi_t` indexes the simple roots of the positive imaginary system;
/// `beta` must be dominant for the positive roots they span.
pub fn bott_borel_weil(cartan: &CartanClass, phi_t: &BTreeSet<usize>, beta: &Weight, chi: &Chi) -> Result<BbwResult> {
    let d = cartan.datum();
    if beta.rank() != d.rank() {
        return Err(Error::DimensionMismatch {
            expected: d.rank(),
            got: beta.rank(),
        });
    }
    let pos = cartan.positive_imaginary();
    let simples = simple_roots_of(d, &pos);
    if let Some(&bad) = phi_t.iter().find(|&&k| k >= simples.len()) {
        return Err(Error::BadSimpleIndex(bad));
    }
    let chosen: BTreeSet<usize> = phi_t.iter().map(|&k| simples[k]).collect();
    let levi = span_positive(d, &pos, &chosen);
    if levi.iter().any(|&i| d.pair_root(i, beta).is_negative()) {
        return Err(Error::NotHighestWeight);
    }

    let lam = beta + &rho_t(cartan);
    let pairings: Vec<Rational64> = pos.iter().map(|&i| d.pair_root(i, &lam)).collect();
    if pairings.iter().any(Zero::is_zero) {
        return Ok(BbwResult::Vanishes);
    }
    let q0 = pairings.iter().filter(|p| p.is_negative()).count();
    let nu = dominant_conjugate(cartan, &lam)?.ok_or(Error::NotHighestWeight)?;
    Ok(BbwResult::Cohomology {
        q0,
        nu,
        chi: chi.clone(),
    })
}

/// ϖ(ν)/ϖ(ρ): the dimension of the irreducible module with infinitesimal
/// parameter ν.
pub fn weyl_dimension(datum: &RootDatum, nu: &Weight) -> Rational64 {
    varpi(datum, nu) / varpi(datum, datum.rho())
}
