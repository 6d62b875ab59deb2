//! Real forms seen through their Cartan subgroups.
//!
//! A [`CartanClass`] is an involution τ on the root datum together with a
//! compact/noncompact grading of the imaginary roots. Cayley transforms move
//! between classes; [`classify_cartans`] closes a fundamental class under them.

mod restricted;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootsys::{IntMatrix, RootDatum, RootIdx, Weight};

pub use restricted::{
    cuspidal_parabolic, default_sigma_a_plus, default_sigma_t_plus, merge_positive_systems, restricted_roots,
    CuspidalParabolic, RestrictedRootSystem,
};

/// Grading of an imaginary root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grade {
    Compact,
    Noncompact,
}

impl Grade {
    fn parity(self) -> u8 {
        match self {
            Grade::Compact => 0,
            Grade::Noncompact => 1,
        }
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grade::Compact => "compact",
            Grade::Noncompact => "noncompact",
        })
    }
}

impl FromStr for Grade {
    type Err = Error;
    fn from_str(s: &str) -> Result<Grade> {
        match s {
            "compact" => Ok(Grade::Compact),
            "noncompact" => Ok(Grade::Noncompact),
            other => Err(Error::GroupSpec(format!("unknown grade {other:?}"))),
        }
    }
}

/// How τ acts on a single root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootKind {
    Imaginary(Grade),
    Real,
    Complex,
}

/// One conjugacy class of Cartan subgroups, presented by (τ, grading).
#[derive(Debug, Clone)]
pub struct CartanClass {
    datum: Arc<RootDatum>,
    tau: IntMatrix,
    tau_perm: Vec<RootIdx>,
    grading: BTreeMap<RootIdx, Grade>,
    a_basis: Vec<Weight>,
    a_pivots: Vec<usize>,
    label: String,
}

impl PartialEq for CartanClass {
    fn eq(&self, other: &Self) -> bool {
        *self.datum == *other.datum && self.tau == other.tau && self.grading == other.grading
    }
}

/// Canonical form of a class under Weyl conjugation: the flattened matrix of
/// wτw⁻¹ followed by the grading over positive roots (0 none, 1 compact,
/// 2 noncompact), minimized over w.
pub type CanonicalKey = (Vec<i64>, Vec<u8>);

/// Validates `(τ, grading)` and builds the class.
///
/// `grading` may list either member of each ± pair of imaginary roots; the
/// other member is filled in.
pub fn attach_involution(
    datum: Arc<RootDatum>,
    tau: IntMatrix,
    grading: &BTreeMap<RootIdx, Grade>,
) -> Result<CartanClass> {
    let n = datum.rank();
    if tau.dim() != n {
        return Err(Error::InvalidInvolution(format!(
            "expected a {n}x{n} matrix, got {0}x{0}",
            tau.dim()
        )));
    }
    if !tau.mul(&tau).is_identity() {
        return Err(Error::InvalidInvolution("tau squared is not the identity".into()));
    }
    let tau_perm = datum
        .root_permutation(&tau)
        .ok_or_else(|| Error::InvalidInvolution("tau does not preserve the roots".into()))?;
    if !datum.preserves_form(&tau) {
        return Err(Error::InvalidInvolution("tau does not preserve the form".into()));
    }

    let imaginary: BTreeSet<RootIdx> = datum.all_indices().filter(|&i| tau_perm[i] == datum.neg(i)).collect();
    let mut full = BTreeMap::new();
    for (&i, &g) in grading {
        if i >= datum.num_roots() || !imaginary.contains(&i) {
            return Err(Error::GradingDomain);
        }
        for j in [i, datum.neg(i)] {
            if let Some(prev) = full.insert(j, g) {
                if prev != g {
                    return Err(Error::GradingDomain);
                }
            }
        }
    }
    if full.len() != imaginary.len() {
        return Err(Error::GradingDomain);
    }
    // The grading is a Z/2 grading: noncompact + noncompact = compact.
    for &a in &imaginary {
        for &b in &imaginary {
            if let Some(c) = datum.sum_index(a, b) {
                if full[&c].parity() != (full[&a].parity() + full[&b].parity()) % 2 {
                    return Err(Error::InvalidInvolution(
                        "grading is not additive on imaginary roots".into(),
                    ));
                }
            }
        }
    }

    let (a_basis, a_pivots) = plus_eigenbasis(&tau);
    let label = format!("dim_a={}", a_basis.len());
    Ok(CartanClass {
        datum,
        tau,
        tau_perm,
        grading: full,
        a_basis,
        a_pivots,
        label,
    })
}

/// Cayley transform through the noncompact imaginary root `alpha`.
pub fn cayley_transform(cartan: &CartanClass, alpha: RootIdx) -> Result<CartanClass> {
    if cartan.grade(alpha) != Some(Grade::Noncompact) {
        return Err(Error::CayleyUndefined);
    }
    let d = &cartan.datum;
    let tau = d.reflection_matrix(alpha).mul(&cartan.tau);
    let perm = d
        .root_permutation(&tau)
        .expect("product of root-preserving maps preserves roots");
    let mut grading = BTreeMap::new();
    for i in d.all_indices() {
        if perm[i] != d.neg(i) {
            continue;
        }
        match cartan.grade(i) {
            Some(g) if d.root_pair(i, alpha).is_zero() => {
                grading.insert(i, g);
            }
            _ => return Err(Error::UnsupportedGradingPropagation),
        }
    }
    attach_involution(d.clone(), tau, &grading)
}

/// All classes reachable from a fundamental class by Cayley transforms,
/// one representative per Weyl-conjugacy class, ordered by
/// `(dim_a, canonical key)`.
pub fn classify_cartans(fundamental: &CartanClass) -> Result<Vec<CartanClass>> {
    classify_with_order(fundamental, false)
}

/// Same closure, visiting Cayley roots in reverse order. Exposed so callers
/// can confirm the result does not depend on traversal order.
pub fn classify_cartans_reversed(fundamental: &CartanClass) -> Result<Vec<CartanClass>> {
    classify_with_order(fundamental, true)
}

fn classify_with_order(fundamental: &CartanClass, reversed: bool) -> Result<Vec<CartanClass>> {
    if !fundamental.is_fundamental()? {
        return Err(Error::NotFundamental);
    }
    let mut found: BTreeMap<(usize, CanonicalKey), CartanClass> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let k0 = fundamental.canonical_key()?;
    found.insert((fundamental.dim_a(), k0), fundamental.clone());
    queue.push_back(fundamental.clone());
    while let Some(c) = queue.pop_front() {
        let mut roots: Vec<RootIdx> = c
            .datum
            .positive_indices()
            .filter(|&i| c.grade(i) == Some(Grade::Noncompact))
            .collect();
        if reversed {
            roots.reverse();
        }
        for alpha in roots {
            let next = cayley_transform(&c, alpha)?;
            let key = (next.dim_a(), next.canonical_key()?);
            if let std::collections::btree_map::Entry::Vacant(e) = found.entry(key) {
                e.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<CartanClass> = found.into_values().collect();
    let mut per_dim: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &out {
        *per_dim.entry(c.dim_a()).or_default() += 1;
    }
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &mut out {
        let k = c.dim_a();
        let pos = seen.entry(k).or_default();
        c.label = if per_dim[&k] == 1 {
            format!("dim_a={k}")
        } else {
            format!("dim_a={k}#{pos}")
        };
        *pos += 1;
    }
    Ok(out)
}

impl CartanClass {
    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn tau(&self) -> &IntMatrix {
        &self.tau
    }

    /// Index of τ(φ_i).
    pub fn tau_root(&self, i: RootIdx) -> RootIdx {
        self.tau_perm[i]
    }

    pub fn tau_perm(&self) -> &[RootIdx] {
        &self.tau_perm
    }

    pub fn apply_tau(&self, v: &Weight) -> Weight {
        Weight(self.tau.apply_rational(&v.0))
    }

    /// The grading on all imaginary roots (both signs).
    pub fn grading(&self) -> &BTreeMap<RootIdx, Grade> {
        &self.grading
    }

    pub fn grade(&self, i: RootIdx) -> Option<Grade> {
        self.grading.get(&i).copied()
    }

    pub fn kind(&self, i: RootIdx) -> RootKind {
        if let Some(g) = self.grade(i) {
            RootKind::Imaginary(g)
        } else if self.tau_perm[i] == i {
            RootKind::Real
        } else {
            RootKind::Complex
        }
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn dim_a(&self) -> usize {
        self.a_basis.len()
    }

    pub fn dim_t(&self) -> usize {
        self.rank() - self.dim_a()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn imaginary_roots(&self) -> impl Iterator<Item = RootIdx> + '_ {
        self.grading.keys().copied()
    }

    /// Σ_𝔱⁺: imaginary roots that are positive in the standard order.
    pub fn positive_imaginary(&self) -> Vec<RootIdx> {
        self.datum
            .positive_indices()
            .filter(|i| self.grading.contains_key(i))
            .collect()
    }

    pub fn roots_of_grade(&self, g: Grade) -> impl Iterator<Item = RootIdx> + '_ {
        self.grading.iter().filter(move |(_, &h)| h == g).map(|(&i, _)| i)
    }

    pub fn real_roots(&self) -> impl Iterator<Item = RootIdx> + '_ {
        self.datum.all_indices().filter(|&i| self.tau_perm[i] == i)
    }

    /// RREF basis of the +1 eigenspace; `a_pivots[k]` is where `a_basis[k]`
    /// has its leading 1.
    pub fn a_basis(&self) -> &[Weight] {
        &self.a_basis
    }

    /// 𝔞-coordinates of (v + τv)/2.
    pub fn a_coords(&self, v: &Weight) -> Weight {
        let p = self.a_part(v);
        Weight(self.a_pivots.iter().map(|&j| p.0[j]).collect())
    }

    /// Restriction of a root to 𝔞, in 𝔞-coordinates.
    pub fn restriction(&self, i: RootIdx) -> Weight {
        self.a_coords(&self.datum.root_weight(i))
    }

    /// Inverse of [`CartanClass::a_coords`] on the +1 eigenspace.
    pub fn from_a_coords(&self, c: &Weight) -> Result<Weight> {
        if c.rank() != self.dim_a() {
            return Err(Error::DimensionMismatch {
                expected: self.dim_a(),
                got: c.rank(),
            });
        }
        let mut v = Weight::zero(self.rank());
        for (b, k) in self.a_basis.iter().zip(&c.0) {
            v = &v + &b.scale(*k);
        }
        Ok(v)
    }

    pub fn a_part(&self, v: &Weight) -> Weight {
        (v + &self.apply_tau(v)).scale(Rational64::new(1, 2))
    }

    pub fn t_part(&self, v: &Weight) -> Weight {
        (v - &self.apply_tau(v)).scale(Rational64::new(1, 2))
    }

    /// The class transported by w: τ ↦ wτw⁻¹, grading(wφ) = grading(φ).
    pub fn conjugate_by(&self, w: usize) -> Result<CartanClass> {
        let group = self.datum.weyl_group()?;
        let winv = group.inverse(w);
        let tau = group.get(w).matrix.mul(&self.tau).mul(&group.get(winv).matrix);
        let perm = &group.get(w).perm;
        let grading = self.grading.iter().map(|(&i, &g)| (perm[i], g)).collect();
        let mut out = attach_involution(self.datum.clone(), tau, &grading)?;
        out.label = self.label.clone();
        Ok(out)
    }

    pub fn canonical_key(&self) -> Result<CanonicalKey> {
        let group = self.datum.weyl_group()?;
        let mut best: Option<CanonicalKey> = None;
        for w in 0..group.order() {
            let winv = group.inverse(w);
            let m = group.get(w).matrix.mul(&self.tau).mul(&group.get(winv).matrix);
            let back = &group.get(winv).perm;
            let grades: Vec<u8> = self
                .datum
                .positive_indices()
                .map(|p| match self.grade(back[p]) {
                    None => 0,
                    Some(g) => g.parity() + 1,
                })
                .collect();
            let key = (m.rows().concat(), grades);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        Ok(best.expect("Weyl group is nonempty"))
    }

    /// Whether some simple system satisfies τΠ = −Π.
    pub fn is_fundamental(&self) -> Result<bool> {
        let d = &self.datum;
        let group = d.weyl_group()?;
        let simples: Vec<RootIdx> = (0..d.rank()).map(|i| d.simple_index(i)).collect();
        Ok(group.elements().iter().any(|e| {
            let pi: BTreeSet<RootIdx> = simples.iter().map(|&s| e.perm[s]).collect();
            pi.iter().all(|&r| pi.contains(&d.neg(self.tau_perm[r])))
        }))
    }

    fn subgroup_of_reflections(&self, roots: impl Iterator<Item = RootIdx>) -> Result<Vec<usize>> {
        let group = self.datum.weyl_group()?;
        let gens: Vec<usize> = roots
            .filter(|&i| self.datum.is_positive(i))
            .map(|i| group.reflection(&self.datum, i))
            .collect();
        Ok(group.subgroup(&gens))
    }

    /// W(M⁰, T⁰): generated by reflections in compact imaginary roots. For a
    /// compact Cartan this is W_K.
    pub fn compact_weyl_group(&self) -> Result<Vec<usize>> {
        self.subgroup_of_reflections(self.roots_of_grade(Grade::Compact))
    }

    /// Complex Weyl group of the imaginary root subsystem.
    pub fn imaginary_weyl_group(&self) -> Result<Vec<usize>> {
        self.subgroup_of_reflections(self.imaginary_roots())
    }

    /// W_{G,H}: generated by real reflections, compact imaginary reflections,
    /// and s_φ s_{τφ} for complex φ orthogonal to τφ.
    pub fn real_weyl_group(&self) -> Result<Vec<usize>> {
        let d = &self.datum;
        let group = d.weyl_group()?;
        let mut gens = Vec::new();
        for i in d.positive_indices() {
            match self.kind(i) {
                RootKind::Real | RootKind::Imaginary(Grade::Compact) => {
                    gens.push(group.reflection(d, i));
                }
                RootKind::Complex if d.root_pair(i, self.tau_perm[i]).is_zero() => {
                    let a = group.reflection(d, i);
                    let b = group.reflection(d, self.tau_perm[i]);
                    gens.push(group.compose(a, b));
                }
                _ => {}
            }
        }
        Ok(group.subgroup(&gens))
    }
}

/// Row-reduced basis of the image of I + τ, with pivot columns.
fn plus_eigenbasis(tau: &IntMatrix) -> (Vec<Weight>, Vec<usize>) {
    let n = tau.dim();
    // Rows are the images (I + τ)e_j, i.e. columns of I + τ.
    let rows: Vec<Vec<Rational64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| Rational64::from_integer(tau.get(i, j) + i64::from(i == j)))
                .collect()
        })
        .collect();
    let (basis, pivots) = rref(rows);
    (basis.into_iter().map(Weight).collect(), pivots)
}

/// Reduced row echelon form; returns the nonzero rows and their pivots.
pub(crate) fn rref(mut m: Vec<Vec<Rational64>>) -> (Vec<Vec<Rational64>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c];
        for x in &mut m[r] {
            *x /= lead;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}
