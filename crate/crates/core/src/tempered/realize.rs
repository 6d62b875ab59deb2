use num_traits::{Signed, Zero};

use super::{dominant_conjugate, hseries_param, q_lambda, rho_t, varpi_t, Chi, SeriesParam};
use crate::error::{Error, Result};
use crate::orbits::RealizationConfig;
use crate::rootsys::Weight;

/// What the orbit realizes for a given highest weight.
#[derive(Debug, Clone)]
pub struct RealizationResult {
    pub vanishes: bool,
    /// β + ρ_𝔱.
    pub nu_plus_rho: Weight,
    /// q_M(β + ρ_𝔱), the only degree with nonzero cohomology.
    pub degree: Option<usize>,
    pub param: Option<SeriesParam>,
    /// (−1)^{|Σ_𝔱⁺| + degree}.
    pub euler_sign: Option<i8>,
}

/// Resolves the H-series class carried by the realization orbit at highest
/// weight `beta` and continuous parameter `sigma` (𝔞-coordinates).
pub fn realize(rc: &RealizationConfig, chi: &Chi, beta: &Weight, sigma: &Weight) -> Result<RealizationResult> {
    rc.verify()?;
    let cartan = &rc.config.cartan;
    let d = cartan.datum();
    if beta.rank() != d.rank() {
        return Err(Error::DimensionMismatch {
            expected: d.rank(),
            got: beta.rank(),
        });
    }
    if sigma.rank() != cartan.dim_a() {
        return Err(Error::DimensionMismatch {
            expected: cartan.dim_a(),
            got: sigma.rank(),
        });
    }
    if cartan.t_part(beta) != *beta {
        return Err(Error::NotInEigenspace("-1"));
    }
    if !beta.is_half_integral() {
        return Err(Error::NotInLattice);
    }
    if rc
        .phi_t_span
        .iter()
        .any(|&i| d.is_positive(i) && d.pair_root(i, beta).is_negative())
    {
        return Err(Error::NotHighestWeight);
    }

    let lam = beta + &rho_t(cartan);
    if varpi_t(cartan, &lam).is_zero() {
        return Ok(RealizationResult {
            vanishes: true,
            nu_plus_rho: lam,
            degree: None,
            param: None,
            euler_sign: None,
        });
    }
    let degree = q_lambda(cartan, &lam)?;
    let nu = dominant_conjugate(cartan, &lam)?.ok_or(Error::NotHSeriesParameter)?;
    let param = hseries_param(cartan, chi, &nu, sigma)?;
    let parity = (rc.sigma_t_plus.len() + degree) % 2;
    Ok(RealizationResult {
        vanishes: false,
        nu_plus_rho: lam,
        degree: Some(degree),
        param: Some(param),
        euler_sign: Some(if parity == 0 { 1 } else { -1 }),
    })
}
