use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::realform::{default_sigma_t_plus, merge_positive_systems, CartanClass, CuspidalParabolic, Grade};
use crate::rootsys::{RootIdx, Weight};

use super::{orbit_report, parabolic_subset, OrbitConfig, OrbitReport, Tri};

/// An orbit configuration built from a cuspidal parabolic, remembering the
/// positive systems it was built from.
#[derive(Debug, Clone)]
pub struct RealizationConfig {
    pub config: OrbitConfig,
    pub parabolic: CuspidalParabolic,
    /// Merged positive system Σ⁺, in the Cartan's own coordinates.
    pub sigma_plus: BTreeSet<RootIdx>,
    pub sigma_t_plus: BTreeSet<RootIdx>,
    /// Simple roots of Σ_𝔱⁺, ordered by root index.
    pub pi_t: Vec<RootIdx>,
    /// The chosen subset Φ_𝔱 of `pi_t`, as root indices.
    pub phi_t: BTreeSet<RootIdx>,
    /// Roots spanned by Φ_𝔱 (the Levi part of the isotropy).
    pub phi_t_span: BTreeSet<RootIdx>,
}

/// Builds the flag and base point whose orbit realizes the H-series of
/// `cartan` through `parabolic`.
///
/// `phi_t` indexes into the simple roots of the imaginary positive system.
/// The flag is Φ = Φ_𝔱 read in the simple system of the merged Σ⁺.
pub fn realization_configs(
    cartan: &CartanClass,
    parabolic: &CuspidalParabolic,
    phi_t: &BTreeSet<usize>,
) -> Result<RealizationConfig> {
    let d = cartan.datum().clone();
    let group = d.weyl_group()?;
    let sigma_a_plus: BTreeSet<Weight> = parabolic
        .n_roots
        .iter()
        .map(|&i| cartan.restriction(d.neg(i)))
        .collect();
    let sigma_t_plus = default_sigma_t_plus(cartan);
    let sigma_plus = merge_positive_systems(cartan, &sigma_a_plus, &sigma_t_plus)?;
    let w = group
        .element_for_positive_system(&d, &sigma_plus)
        .ok_or(Error::NoCompatiblePositiveSystem)?;
    let elem = group.get(w);

    let pi: Vec<RootIdx> = (0..d.rank()).map(|i| elem.perm[d.simple_index(i)]).collect();
    let mut pi_t: Vec<RootIdx> = pi.iter().copied().filter(|&r| cartan.grade(r).is_some()).collect();
    pi_t.sort_unstable();
    if let Some(&bad) = phi_t.iter().find(|&&k| k >= pi_t.len()) {
        return Err(Error::BadSimpleIndex(bad));
    }
    let phi_t_roots: BTreeSet<RootIdx> = phi_t.iter().map(|&k| pi_t[k]).collect();
    let phi_std: BTreeSet<usize> = (0..d.rank()).filter(|&i| phi_t_roots.contains(&pi[i])).collect();
    let subset = parabolic_subset(&d, &phi_std)?;

    let phi_t_span: BTreeSet<RootIdx> = subset.phi_r.iter().map(|&i| elem.perm[i]).collect();
    if phi_t_span.iter().any(|&r| cartan.grade(r) != Some(Grade::Compact)) {
        return Err(Error::IsotropyNotCompact);
    }

    Ok(RealizationConfig {
        config: OrbitConfig::new(cartan.clone(), w, subset)?,
        parabolic: parabolic.clone(),
        sigma_plus,
        sigma_t_plus,
        pi_t,
        phi_t: phi_t_roots,
        phi_t_span,
    })
}

impl RealizationConfig {
    /// Confirms the orbit is measurable and integrable with normalizer 𝔭,
    /// returning its report.
    pub fn verify(&self) -> Result<OrbitReport> {
        let report = orbit_report(&self.config)?;
        if report.is_measurable != Tri::Yes {
            return Err(Error::NotRealizationConfig("orbit is not measurable".into()));
        }
        if !report.is_integrable {
            return Err(Error::NotRealizationConfig("orbit is not integrable".into()));
        }
        let group = self.config.cartan.datum().weyl_group()?;
        let perm = &group.get(self.config.w).perm;
        let normalizer: BTreeSet<RootIdx> = report
            .normalizer_roots
            .as_ref()
            .expect("measurable orbits carry a normalizer")
            .iter()
            .map(|&i| perm[i])
            .collect();
        if normalizer != self.parabolic.p_roots() {
            return Err(Error::NotRealizationConfig(
                "normalizer differs from the cuspidal parabolic".into(),
            ));
        }
        if self
            .phi_t_span
            .iter()
            .any(|&r| self.config.cartan.grade(r) != Some(Grade::Compact))
        {
            return Err(Error::IsotropyNotCompact);
        }
        Ok(report)
    }
}
