use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use super::CartanClass;
use crate::error::{Error, Result};
use crate::rootsys::{RootIdx, Weight};

/// Restricted roots Σ_𝔞 in 𝔞-coordinates with multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct RestrictedRootSystem {
    pub roots: Vec<Weight>,
    pub multiplicity: BTreeMap<Weight, usize>,
    pub positive: BTreeSet<Weight>,
    /// ½ Σ_{φ∈Σ_𝔞⁺} mult(φ)·φ, in 𝔞-coordinates.
    pub rho_a: Weight,
    /// Set when the Cartan is compact and the system is empty.
    pub compact: bool,
}

impl RestrictedRootSystem {
    /// Fails on the empty system of a compact Cartan.
    pub fn require_noncompact(&self) -> Result<&Self> {
        if self.compact {
            Err(Error::NoRestrictedRoots)
        } else {
            Ok(self)
        }
    }
}

fn first_nonzero_positive(v: &Weight) -> bool {
    v.0.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

pub fn restricted_roots(cartan: &CartanClass) -> RestrictedRootSystem {
    let mut multiplicity: BTreeMap<Weight, usize> = BTreeMap::new();
    for i in cartan.datum().all_indices() {
        let r = cartan.restriction(i);
        if !r.is_zero() {
            *multiplicity.entry(r).or_default() += 1;
        }
    }
    let roots: Vec<Weight> = multiplicity.keys().cloned().collect();
    let positive: BTreeSet<Weight> = roots.iter().filter(|r| first_nonzero_positive(r)).cloned().collect();
    let rho_a = half_weighted_sum(cartan.dim_a(), &positive, &multiplicity);
    RestrictedRootSystem {
        roots,
        multiplicity,
        positive,
        rho_a,
        compact: cartan.dim_a() == 0,
    }
}

fn half_weighted_sum(dim: usize, positive: &BTreeSet<Weight>, multiplicity: &BTreeMap<Weight, usize>) -> Weight {
    let mut acc = Weight::zero(dim);
    for p in positive {
        acc = &acc + &p.scale(Rational64::from_integer(multiplicity[p] as i64));
    }
    acc.scale(Rational64::new(1, 2))
}

/// Σ_𝔞⁺ chosen by the sign of the first nonzero coordinate.
pub fn default_sigma_a_plus(cartan: &CartanClass) -> BTreeSet<Weight> {
    restricted_roots(cartan).positive
}

/// Σ_𝔱⁺: the imaginary roots that are positive in the standard order.
pub fn default_sigma_t_plus(cartan: &CartanClass) -> BTreeSet<RootIdx> {
    cartan.positive_imaginary().into_iter().collect()
}

fn check_sigma_a(cartan: &CartanClass, sigma_a_plus: &BTreeSet<Weight>) -> Result<()> {
    let sys = restricted_roots(cartan);
    for r in &sys.roots {
        let neg = -r;
        if sigma_a_plus.contains(r) == sigma_a_plus.contains(&neg) {
            return Err(Error::NoCompatiblePositiveSystem);
        }
    }
    if sigma_a_plus.iter().any(|r| !sys.multiplicity.contains_key(r)) {
        return Err(Error::NoCompatiblePositiveSystem);
    }
    Ok(())
}

/// The unique positive system whose 𝔞-restrictions lie in Σ_𝔞⁺ (when
/// nonzero) and whose imaginary members form Σ_𝔱⁺.
pub fn merge_positive_systems(
    cartan: &CartanClass,
    sigma_a_plus: &BTreeSet<Weight>,
    sigma_t_plus: &BTreeSet<RootIdx>,
) -> Result<BTreeSet<RootIdx>> {
    check_sigma_a(cartan, sigma_a_plus)?;
    let d = cartan.datum();
    for i in cartan.imaginary_roots() {
        if sigma_t_plus.contains(&i) == sigma_t_plus.contains(&d.neg(i)) {
            return Err(Error::NoCompatiblePositiveSystem);
        }
    }
    if sigma_t_plus.iter().any(|&i| cartan.grade(i).is_none()) {
        return Err(Error::NoCompatiblePositiveSystem);
    }
    let merged: BTreeSet<RootIdx> = d
        .all_indices()
        .filter(|&i| {
            let r = cartan.restriction(i);
            if r.is_zero() {
                sigma_t_plus.contains(&i)
            } else {
                sigma_a_plus.contains(&r)
            }
        })
        .collect();
    let group = d.weyl_group()?;
    group
        .element_for_positive_system(d, &merged)
        .map(|_| merged)
        .ok_or(Error::NoCompatiblePositiveSystem)
}

/// P = MAN attached to a Cartan class and a choice of Σ_𝔞⁺.
#[derive(Debug, Clone)]
pub struct CuspidalParabolic {
    pub cartan: CartanClass,
    /// Roots with zero 𝔞-restriction.
    pub m_roots: BTreeSet<RootIdx>,
    /// Roots whose restriction lies in −Σ_𝔞⁺.
    pub n_roots: BTreeSet<RootIdx>,
    pub a_dim: usize,
    /// 2ρ_𝔞 in 𝔞-coordinates.
    pub modular_exponent: Weight,
}

impl CuspidalParabolic {
    /// Roots of 𝔭 = 𝔪 + 𝔞 + 𝔫.
    pub fn p_roots(&self) -> BTreeSet<RootIdx> {
        self.m_roots.union(&self.n_roots).copied().collect()
    }
}

pub fn cuspidal_parabolic(cartan: &CartanClass, sigma_a_plus: &BTreeSet<Weight>) -> Result<CuspidalParabolic> {
    check_sigma_a(cartan, sigma_a_plus)?;
    let sys = restricted_roots(cartan);
    let mut m_roots = BTreeSet::new();
    let mut n_roots = BTreeSet::new();
    for i in cartan.datum().all_indices() {
        let r = cartan.restriction(i);
        if r.is_zero() {
            m_roots.insert(i);
        } else if sigma_a_plus.contains(&-&r) {
            n_roots.insert(i);
        }
    }
    let rho_a = half_weighted_sum(cartan.dim_a(), sigma_a_plus, &sys.multiplicity);
    Ok(CuspidalParabolic {
        cartan: cartan.clone(),
        m_roots,
        n_roots,
        a_dim: cartan.dim_a(),
        modular_exponent: rho_a.scale(Rational64::from_integer(2)),
    })
}
