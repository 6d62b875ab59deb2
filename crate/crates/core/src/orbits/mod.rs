//! Real group orbits on complex flag manifolds.
//!
//! A flag manifold is fixed by a subset Φ of the simple roots; a base point is
//! fixed by a Weyl element `w`, which replaces τ by w⁻¹τw. Everything is
//! decided on root sets.

mod open;
mod realization;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::realform::CartanClass;
use crate::rootsys::{RootDatum, RootIdx, Weight};

pub use open::{count_open_orbits, double_coset_count};
pub use realization::{realization_configs, RealizationConfig};

/// Three-valued verdict for criteria that are only decidable under
/// hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tri {
    Yes,
    No,
    Undecided,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Undecided => "undecided",
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Φ ⊂ Π with Φ^r (roots spanned by Φ) and Φ^u (negative roots outside Φ^r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSubset {
    pub phi: BTreeSet<usize>,
    pub phi_r: BTreeSet<RootIdx>,
    pub phi_u: BTreeSet<RootIdx>,
}

impl ParabolicSubset {
    /// Roots of 𝔮 = 𝔮^r + 𝔮^u.
    pub fn q_roots(&self) -> BTreeSet<RootIdx> {
        self.phi_r.union(&self.phi_u).copied().collect()
    }
}

pub fn parabolic_subset(datum: &RootDatum, phi: &BTreeSet<usize>) -> Result<ParabolicSubset> {
    if let Some(&bad) = phi.iter().find(|&&i| i >= datum.rank()) {
        return Err(Error::BadSimpleIndex(bad));
    }
    let phi_r: BTreeSet<RootIdx> = datum
        .all_indices()
        .filter(|&i| {
            datum
                .root(i)
                .iter()
                .enumerate()
                .all(|(k, &c)| c == 0 || phi.contains(&k))
        })
        .collect();
    let phi_u = datum
        .all_indices()
        .filter(|&i| !datum.is_positive(i) && !phi_r.contains(&i))
        .collect();
    Ok(ParabolicSubset {
        phi: phi.clone(),
        phi_r,
        phi_u,
    })
}

/// Base point data: a Cartan class, a Weyl translate, and a flag type.
#[derive(Debug, Clone)]
pub struct OrbitConfig {
    pub cartan: CartanClass,
    pub w: usize,
    pub subset: ParabolicSubset,
}

impl OrbitConfig {
    pub fn new(cartan: CartanClass, w: usize, subset: ParabolicSubset) -> Result<OrbitConfig> {
        let order = cartan.datum().weyl_group()?.order();
        if w >= order {
            return Err(Error::DimensionMismatch {
                expected: order,
                got: w,
            });
        }
        Ok(OrbitConfig { cartan, w, subset })
    }

    /// The class with τ replaced by w⁻¹τw.
    pub fn effective(&self) -> Result<CartanClass> {
        let group = self.cartan.datum().weyl_group()?;
        self.cartan.conjugate_by(group.inverse(self.w))
    }
}

#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub codim: usize,
    pub is_open: bool,
    pub is_measurable: Tri,
    pub is_integrable: bool,
    pub is_partially_complex: Tri,
    pub is_flag_type: Tri,
    pub delta_x: Weight,
    pub q_bracket: BTreeSet<RootIdx>,
    pub gamma: BTreeSet<RootIdx>,
    pub m_bracket: BTreeSet<RootIdx>,
    pub v_plus: BTreeSet<RootIdx>,
    pub v_minus: BTreeSet<RootIdx>,
    pub normalizer_roots: Option<BTreeSet<RootIdx>>,
}

/// φ, ψ ∈ S with φ+ψ a root forces φ+ψ ∈ S.
pub fn is_root_closed(datum: &RootDatum, set: &BTreeSet<RootIdx>) -> bool {
    set.iter().all(|&a| {
        set.iter()
            .all(|&b| datum.sum_index(a, b).is_none_or(|c| set.contains(&c)))
    })
}

fn image(perm: &[RootIdx], set: &BTreeSet<RootIdx>) -> BTreeSet<RootIdx> {
    set.iter().map(|&i| perm[i]).collect()
}

fn negate(datum: &RootDatum, set: &BTreeSet<RootIdx>) -> BTreeSet<RootIdx> {
    set.iter().map(|&i| datum.neg(i)).collect()
}

pub fn orbit_report(config: &OrbitConfig) -> Result<OrbitReport> {
    let eff = config.effective()?;
    let d = eff.datum().clone();
    let tau = eff.tau_perm();
    let u = &config.subset.phi_u;
    let r = &config.subset.phi_r;
    let tau_u = image(tau, u);
    let tau_r = image(tau, r);

    let both: BTreeSet<RootIdx> = u.intersection(&tau_u).copied().collect();
    let codim = both.len();
    let is_open = codim == 0;

    let mut delta_x = Weight::zero(d.rank());
    for &i in &both {
        delta_x = &delta_x + &d.root_weight(i);
    }
    let q_bracket: BTreeSet<RootIdx> = d
        .all_indices()
        .filter(|&i| !d.pair_root(i, &delta_x).is_negative())
        .collect();
    let gamma: BTreeSet<RootIdx> = d
        .all_indices()
        .filter(|&i| {
            d.pair_root(i, &delta_x).is_negative() && !both.contains(&d.neg(i)) && d.sum_index(i, tau[i]).is_none()
        })
        .collect();
    let m_bracket: BTreeSet<RootIdx> = q_bracket.union(&gamma).copied().collect();
    let m_closed = is_root_closed(&d, &m_bracket);

    let q = config.subset.q_roots();
    let tau_q = image(tau, &q);
    let q_union: BTreeSet<RootIdx> = q.union(&tau_q).copied().collect();
    let is_integrable = is_root_closed(&d, &q_union);

    let r_stable = tau_r == *r;
    let is_measurable = if is_open {
        Tri::from_bool(r_stable && tau_u == negate(&d, u))
    } else if r_stable {
        Tri::from_bool(is_integrable)
    } else if is_integrable || !m_closed {
        Tri::No
    } else {
        Tri::Undecided
    };

    let (is_partially_complex, is_flag_type) = if is_measurable == Tri::Yes {
        (Tri::Yes, Tri::Yes)
    } else {
        let pc = Tri::from_bool(m_closed);
        let ft = if r_stable && pc == Tri::Yes {
            Tri::No
        } else {
            Tri::Undecided
        };
        (pc, ft)
    };

    let neg_u = negate(&d, u);
    let neg_tau_u = negate(&d, &tau_u);
    let v_minus: BTreeSet<RootIdx> = u.intersection(&neg_tau_u).copied().collect();
    let v_plus: BTreeSet<RootIdx> = neg_u.intersection(&tau_u).copied().collect();
    let normalizer_roots =
        (is_measurable == Tri::Yes).then(|| q.intersection(&tau_q).chain(&v_plus).chain(&v_minus).copied().collect());

    Ok(OrbitReport {
        codim,
        is_open,
        is_measurable,
        is_integrable,
        is_partially_complex,
        is_flag_type,
        delta_x,
        q_bracket,
        gamma,
        m_bracket,
        v_plus,
        v_minus,
        normalizer_roots,
    })
}

/// Every subset of `0..rank`, in order of the bitmask.
pub fn all_subsets(rank: usize) -> Vec<BTreeSet<usize>> {
    (0u32..1 << rank)
        .map(|mask| (0..rank).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}
