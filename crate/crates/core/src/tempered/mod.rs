//! Tempered series parameters and their invariants.
//!
//! A [`SeriesParam`] lives on one Cartan class: ν is a regular weight on the
//! compact part and σ a vector in 𝔞-coordinates. Characters, Bott–Borel–Weil
//! and the orbit realization resolver build on these.

mod bbw;
mod catalog;
mod character;
mod realize;

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::realform::{CartanClass, Grade};
use crate::rootsys::{varpi, RootDatum, RootIdx, Weight};

pub use bbw::{bott_borel_weil, weyl_dimension, BbwResult};
pub use catalog::{series_catalog, SeriesFamily};
pub use character::{character_at, character_on_cartan, orthogonality_check};
pub use realize::{realize, RealizationResult};

/// Scalar label for the component-group character. Only one-dimensional
/// characters are modeled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chi(String);

impl Chi {
    pub fn trivial() -> Chi {
        Chi("trivial".into())
    }

    /// Known labels are `trivial` (value 1) and `sign` (value −1).
    pub fn new(label: &str) -> Result<Chi> {
        match label {
            "trivial" | "sign" => Ok(Chi(label.into())),
            other => Err(Error::GroupSpec(format!("unknown character label {other:?}"))),
        }
    }

    pub fn label(&self) -> &str {
        &self.0
    }

    pub fn value(&self) -> f64 {
        if self.0 == "sign" {
            -1.0
        } else {
            1.0
        }
    }
}

impl Default for Chi {
    fn default() -> Self {
        Chi::trivial()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    RelativeDiscrete,
    Principal,
    Intermediate,
}

impl SeriesKind {
    pub fn of(cartan: &CartanClass) -> SeriesKind {
        if cartan.dim_a() == 0 {
            SeriesKind::RelativeDiscrete
        } else if cartan.roots_of_grade(Grade::Noncompact).next().is_none() {
            SeriesKind::Principal
        } else {
            SeriesKind::Intermediate
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SeriesKind::RelativeDiscrete => "relative-discrete",
            SeriesKind::Principal => "principal",
            SeriesKind::Intermediate => "intermediate",
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One standard tempered parameter (χ, ν, σ) on a Cartan class.
#[derive(Debug, Clone)]
pub struct SeriesParam {
    pub cartan: CartanClass,
    pub chi: Chi,
    pub nu: Weight,
    /// σ in 𝔞-coordinates.
    pub sigma: Weight,
    pub kind: SeriesKind,
    /// ⟨ν,ν⟩ + ⟨σ,σ⟩ − ⟨ρ,ρ⟩.
    pub casimir: Rational64,
    /// |ϖ(ν)|, only for relative discrete series.
    pub formal_degree: Option<Rational64>,
    /// σ pairs nonzero with every root that has nonzero 𝔞-restriction.
    pub sigma_regular: bool,
}

impl SeriesParam {
    /// σ as a weight in the +1 eigenspace.
    pub fn sigma_full(&self) -> Weight {
        self.cartan
            .from_a_coords(&self.sigma)
            .expect("sigma length is checked at construction")
    }
}

fn check_rank(datum: &RootDatum, w: &Weight) -> Result<()> {
    if w.rank() != datum.rank() {
        return Err(Error::DimensionMismatch {
            expected: datum.rank(),
            got: w.rank(),
        });
    }
    Ok(())
}

/// q(λ) over the positive imaginary roots: compact roots pairing negatively
/// plus noncompact roots pairing positively.
pub fn q_lambda(cartan: &CartanClass, lam: &Weight) -> Result<usize> {
    let d = cartan.datum();
    check_rank(d, lam)?;
    let mut q = 0;
    for i in cartan.positive_imaginary() {
        let p = d.pair_root(i, lam);
        if p.is_zero() {
            return Err(Error::SingularQ);
        }
        match cartan.grade(i) {
            Some(Grade::Compact) if p.is_negative() => q += 1,
            Some(Grade::Noncompact) if p.is_positive() => q += 1,
            _ => {}
        }
    }
    Ok(q)
}

/// ϖ_𝔱(λ): product of pairings over the positive imaginary roots.
pub fn varpi_t(cartan: &CartanClass, lam: &Weight) -> Rational64 {
    cartan.datum().varpi_over(cartan.positive_imaginary(), lam)
}

pub fn discrete_series_param(cartan: &CartanClass, lam: &Weight, chi: &Chi) -> Result<SeriesParam> {
    let d = cartan.datum();
    check_rank(d, lam)?;
    if cartan.dim_a() != 0 {
        return Err(Error::DiscreteNeedsCompactCartan);
    }
    if !lam.is_half_integral() {
        return Err(Error::NotInLattice);
    }
    let v = varpi(d, lam);
    if v.is_zero() {
        return Err(Error::SingularDiscrete);
    }
    Ok(SeriesParam {
        cartan: cartan.clone(),
        chi: chi.clone(),
        nu: lam.clone(),
        sigma: Weight::zero(0),
        kind: SeriesKind::RelativeDiscrete,
        casimir: d.pair(lam, lam) - d.pair(d.rho(), d.rho()),
        formal_degree: Some(v.abs()),
        sigma_regular: true,
    })
}

pub fn hseries_param(cartan: &CartanClass, chi: &Chi, nu: &Weight, sigma: &Weight) -> Result<SeriesParam> {
    let d = cartan.datum();
    check_rank(d, nu)?;
    if cartan.t_part(nu) != *nu {
        return Err(Error::NotInEigenspace("-1"));
    }
    if !nu.is_half_integral() {
        return Err(Error::NotInLattice);
    }
    let sigma_full = cartan.from_a_coords(sigma)?;
    if varpi_t(cartan, nu).is_zero() {
        return Err(Error::NotHSeriesParameter);
    }
    let sigma_regular = d
        .all_indices()
        .filter(|&i| !cartan.restriction(i).is_zero())
        .all(|i| !d.pair_root(i, &sigma_full).is_zero());
    let kind = SeriesKind::of(cartan);
    let formal_degree = (kind == SeriesKind::RelativeDiscrete).then(|| varpi(d, nu).abs());
    Ok(SeriesParam {
        cartan: cartan.clone(),
        chi: chi.clone(),
        nu: nu.clone(),
        sigma: sigma.clone(),
        kind,
        casimir: d.pair(nu, nu) + d.pair(&sigma_full, &sigma_full) - d.pair(d.rho(), d.rho()),
        formal_degree,
        sigma_regular,
    })
}

/// Outcome of comparing two parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    Inequivalent,
    /// The parameters live on different Cartan classes.
    DisjointSeries,
}

impl Equivalence {
    pub fn holds(self) -> bool {
        self == Equivalence::Equivalent
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Equivalence::Equivalent => "equivalent",
            Equivalence::Inequivalent => "inequivalent",
            Equivalence::DisjointSeries => "disjoint series",
        }
    }
}

/// Compares (χ, ν, σ) up to the real Weyl group W_{G,H}.
pub fn compare(p1: &SeriesParam, p2: &SeriesParam) -> Result<Equivalence> {
    if p1.cartan != p2.cartan {
        return Ok(Equivalence::DisjointSeries);
    }
    if p1.chi != p2.chi {
        return Ok(Equivalence::Inequivalent);
    }
    let group = p1.cartan.datum().weyl_group()?;
    let (s1, s2) = (p1.sigma_full(), p2.sigma_full());
    let hit = p1
        .cartan
        .real_weyl_group()?
        .into_iter()
        .any(|w| group.act(w, &p1.nu) == p2.nu && group.act(w, &s1) == s2);
    Ok(if hit {
        Equivalence::Equivalent
    } else {
        Equivalence::Inequivalent
    })
}

pub fn equivalent(p1: &SeriesParam, p2: &SeriesParam) -> Result<bool> {
    compare(p1, p2).map(Equivalence::holds)
}

/// Canonical representative of the full Weyl orbit of ν + iσ, as the
/// lexicographically least pair (wν, wσ).
pub fn infinitesimal_character(p: &SeriesParam) -> Result<(Weight, Weight)> {
    let group = p.cartan.datum().weyl_group()?;
    let s = p.sigma_full();
    Ok((0..group.order())
        .map(|w| (group.act(w, &p.nu), group.act(w, &s)))
        .min()
        .expect("Weyl group is nonempty"))
}

/// The element of the W(M⁰,T⁰)-orbit of `lam` pairing positively with every
/// positive compact root; `None` if `lam` is singular for those roots.
pub fn dominant_conjugate(cartan: &CartanClass, lam: &Weight) -> Result<Option<Weight>> {
    let d = cartan.datum();
    let group = d.weyl_group()?;
    let compact: BTreeSet<RootIdx> = cartan
        .roots_of_grade(Grade::Compact)
        .filter(|&i| d.is_positive(i))
        .collect();
    for w in cartan.compact_weyl_group()? {
        let mu = group.act(w, lam);
        if compact.iter().all(|&i| d.pair_root(i, &mu).is_positive()) {
            return Ok(Some(mu));
        }
    }
    Ok(None)
}

/// ρ_𝔱: half the sum of the positive imaginary roots.
pub fn rho_t(cartan: &CartanClass) -> Weight {
    let d = cartan.datum();
    let mut acc = Weight::zero(d.rank());
    for i in cartan.positive_imaginary() {
        acc = &acc + &d.root_weight(i);
    }
    acc.scale(Rational64::new(1, 2))
}

/// Simple roots of a positive system inside the datum, sorted by index.
pub fn simple_roots_of(datum: &RootDatum, positive: &[RootIdx]) -> Vec<RootIdx> {
    let set: BTreeSet<RootIdx> = positive.iter().copied().collect();
    let mut out: Vec<RootIdx> = positive
        .iter()
        .copied()
        .filter(|&r| {
            !set.iter().any(|&a| {
                let diff: Vec<i64> = datum.root(r).iter().zip(datum.root(a)).map(|(x, y)| x - y).collect();
                datum.root_index(&diff).is_some_and(|b| set.contains(&b))
            })
        })
        .collect();
    out.sort_unstable();
    out
}

/// Positive roots of the subsystem generated by `simples` inside `positive`.
pub fn span_positive(datum: &RootDatum, positive: &[RootIdx], simples: &BTreeSet<RootIdx>) -> BTreeSet<RootIdx> {
    let pos: BTreeSet<RootIdx> = positive.iter().copied().collect();
    let mut out = simples.clone();
    let mut frontier: Vec<RootIdx> = simples.iter().copied().collect();
    while let Some(r) = frontier.pop() {
        for &s in simples {
            if let Some(t) = datum.sum_index(r, s) {
                if pos.contains(&t) && out.insert(t) {
                    frontier.push(t);
                }
            }
        }
    }
    out
}
