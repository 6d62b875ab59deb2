//! Root data, Weyl groups and exponential evaluation on a torus.
//!
//! Everything here is exact: roots are integer vectors in simple-root
//! coordinates, weights are rationals, and the invariant form is the
//! symmetrized Cartan matrix normalized so that long roots have squared
//! length 2 in every simple component.

mod matrix;
mod torus;
mod weight;
mod weyl;

use std::collections::{HashMap, VecDeque};

use num_rational::Rational64;
use num_traits::{One, Zero};
use once_cell::sync::OnceCell;

use crate::error::{Error, Result};

pub use matrix::IntMatrix;
pub use torus::{denominator_terms, exp_eval, weyl_denominator, ExpTerm, TorusPoint, DEFAULT_PERIOD};
pub use weight::{format_rational, parse_rational, ratio_to_f64, sign_of, Weight};
pub use weyl::{WeylElement, WeylGroup};

/// Guard on both the number of roots and the Weyl group order.
pub const DEFAULT_GUARD: usize = 10_000;

/// Index into [`RootDatum::roots`].
pub type RootIdx = usize;

/// A finite root system together with its invariant form and ρ.
///
/// Roots are stored positives first (ordered by height), followed by their
/// negatives in the same order, so `neg(i)` is a constant-time lookup.
#[derive(Debug)]
pub struct RootDatum {
    cartan: IntMatrix,
    form: Vec<Vec<Rational64>>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, RootIdx>,
    rho: Weight,
    simple_reflections: Vec<IntMatrix>,
    guard: usize,
    weyl: OnceCell<WeylGroup>,
}

impl Clone for RootDatum {
    fn clone(&self) -> Self {
        RootDatum {
            cartan: self.cartan.clone(),
            form: self.form.clone(),
            roots: self.roots.clone(),
            index: self.index.clone(),
            rho: self.rho.clone(),
            simple_reflections: self.simple_reflections.clone(),
            guard: self.guard,
            weyl: OnceCell::new(),
        }
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

/// Builds the root datum of a finite-type Cartan matrix.
///
/// Convention: `a[i][j] = 2(α_i, α_j)/(α_i, α_i)`, so `[[2,-2],[-1,2]]` has
/// `α_1` short.
pub fn build_root_datum(cartan_matrix: &[Vec<i64>]) -> Result<RootDatum> {
    RootDatum::with_guard(cartan_matrix, DEFAULT_GUARD)
}

/// Weyl group of a datum, computed on first use.
pub fn weyl_group(datum: &RootDatum) -> Result<&WeylGroup> {
    datum.weyl_group()
}

/// ϖ(λ) = Π_{φ∈Σ⁺} ⟨φ, λ⟩.
pub fn varpi(datum: &RootDatum, lam: &Weight) -> Rational64 {
    datum.varpi_over(datum.positive_indices(), lam)
}

impl RootDatum {
    pub fn with_guard(cartan_matrix: &[Vec<i64>], guard: usize) -> Result<RootDatum> {
        let cartan = validate_cartan(cartan_matrix)?;
        let n = cartan.dim();
        let half_lengths = symmetrize(&cartan)?;
        let form: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|j| half_lengths[i] * cartan.get(i, j)).collect())
            .collect();

        let simple_reflections: Vec<IntMatrix> = (0..n)
            .map(|i| {
                // s_i(α_j) = α_j - a_ij α_i
                IntMatrix::from_fn(n, |r, c| {
                    let delta = i64::from(r == c);
                    if r == i {
                        delta - cartan.get(i, c)
                    } else {
                        delta
                    }
                })
            })
            .collect();

        let roots = reflection_closure(&simple_reflections, n, guard)?;
        let mut positives: Vec<Vec<i64>> = roots.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
        positives.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let mut all = positives.clone();
        all.extend(positives.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let index = all.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let mut rho = Weight::zero(n);
        for r in &positives {
            rho = &rho + &Weight::from_ints(r);
        }
        let rho = rho.scale(Rational64::new(1, 2));

        Ok(RootDatum {
            cartan,
            form,
            roots: all,
            index,
            rho,
            simple_reflections,
            guard,
            weyl: OnceCell::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.dim()
    }

    pub fn cartan_matrix(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    pub fn form(&self) -> &[Vec<Rational64>] {
        &self.form
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn root(&self, i: RootIdx) -> &[i64] {
        &self.roots[i]
    }

    pub fn root_weight(&self, i: RootIdx) -> Weight {
        Weight::from_ints(&self.roots[i])
    }

    pub fn root_index(&self, v: &[i64]) -> Option<RootIdx> {
        self.index.get(v).copied()
    }

    /// Index of a rational vector if it is a root.
    pub fn weight_root_index(&self, w: &Weight) -> Option<RootIdx> {
        if !w.0.iter().all(|x| x.is_integer()) {
            return None;
        }
        let v: Vec<i64> = w.0.iter().map(|x| x.to_integer()).collect();
        self.root_index(&v)
    }

    pub fn neg(&self, i: RootIdx) -> RootIdx {
        let p = self.num_positive();
        if i < p {
            i + p
        } else {
            i - p
        }
    }

    pub fn is_positive(&self, i: RootIdx) -> bool {
        i < self.num_positive()
    }

    pub fn positive_indices(&self) -> impl Iterator<Item = RootIdx> + Clone {
        0..self.num_positive()
    }

    pub fn all_indices(&self) -> std::ops::Range<RootIdx> {
        0..self.roots.len()
    }

    /// Index of the simple root α_i.
    pub fn simple_index(&self, i: usize) -> RootIdx {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        self.index[&e]
    }

    /// Index of φ+ψ when that is a root.
    pub fn sum_index(&self, a: RootIdx, b: RootIdx) -> Option<RootIdx> {
        let v: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.root_index(&v)
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn simple_reflections(&self) -> &[IntMatrix] {
        &self.simple_reflections
    }

    /// The invariant form ⟨x, y⟩.
    pub fn pair(&self, x: &Weight, y: &Weight) -> Rational64 {
        let n = self.rank();
        let mut acc = Rational64::zero();
        for i in 0..n {
            if x.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += x.0[i] * self.form[i][j] * y.0[j];
            }
        }
        acc
    }

    pub fn pair_root(&self, i: RootIdx, w: &Weight) -> Rational64 {
        self.pair(&self.root_weight(i), w)
    }

    pub fn root_pair(&self, a: RootIdx, b: RootIdx) -> Rational64 {
        self.pair(&self.root_weight(a), &self.root_weight(b))
    }

    /// ⟨λ, φ^∨⟩ = 2⟨λ, φ⟩/⟨φ, φ⟩.
    pub fn coroot_pair(&self, lam: &Weight, i: RootIdx) -> Rational64 {
        let phi = self.root_weight(i);
        self.pair(lam, &phi) * 2 / self.pair(&phi, &phi)
    }

    pub fn reflect(&self, i: RootIdx, lam: &Weight) -> Weight {
        let c = self.coroot_pair(lam, i);
        lam - &self.root_weight(i).scale(c)
    }

    /// Integer matrix of the reflection in root `i`.
    pub fn reflection_matrix(&self, i: RootIdx) -> IntMatrix {
        let n = self.rank();
        let cols: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                let img = self.reflect(i, &Weight::from_ints(&e));
                img.0.iter().map(|x| x.to_integer()).collect()
            })
            .collect();
        IntMatrix::from_fn(n, |r, c| cols[c][r])
    }

    /// Permutation of root indices induced by an integer matrix, or `None` if
    /// the matrix does not preserve the root set.
    pub fn root_permutation(&self, m: &IntMatrix) -> Option<Vec<RootIdx>> {
        self.roots.iter().map(|r| self.root_index(&m.apply(r))).collect()
    }

    /// Whether `m` preserves the invariant form.
    pub fn preserves_form(&self, m: &IntMatrix) -> bool {
        let n = self.rank();
        let cols: Vec<Weight> = (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                Weight::from_ints(&m.apply(&e))
            })
            .collect();
        (0..n).all(|i| (0..n).all(|j| self.pair(&cols[i], &cols[j]) == self.form[i][j]))
    }

    pub fn varpi_over(&self, roots: impl IntoIterator<Item = RootIdx>, lam: &Weight) -> Rational64 {
        roots
            .into_iter()
            .fold(Rational64::one(), |acc, i| acc * self.pair_root(i, lam))
    }

    pub fn weyl_group(&self) -> Result<&WeylGroup> {
        self.weyl.get_or_try_init(|| WeylGroup::generate(self, self.guard))
    }
}

fn validate_cartan(m: &[Vec<i64>]) -> Result<IntMatrix> {
    let bad = |why: &str| Error::InvalidCartanMatrix(why.to_string());
    if m.is_empty() {
        return Err(bad("empty matrix"));
    }
    let a = IntMatrix::from_rows(m).ok_or_else(|| bad("not square"))?;
    let n = a.dim();
    for i in 0..n {
        if a.get(i, i) != 2 {
            return Err(bad("diagonal entries must be 2"));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if a.get(i, j) > 0 {
                return Err(bad("off-diagonal entries must be non-positive"));
            }
            if (a.get(i, j) == 0) != (a.get(j, i) == 0) {
                return Err(bad("zero pattern is not symmetric"));
            }
        }
    }
    Ok(a)
}

/// Half squared lengths d_i with d_i a_ij = d_j a_ji, long roots at d = 1 in
/// each connected component.
fn symmetrize(a: &IntMatrix) -> Result<Vec<Rational64>> {
    let n = a.dim();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    let mut component = vec![usize::MAX; n];
    let mut comp_count = 0;
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational64::one());
        component[start] = comp_count;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || a.get(i, j) == 0 {
                    continue;
                }
                let dj = di * a.get(i, j) / a.get(j, i);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component[j] = comp_count;
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::InvalidCartanMatrix("not symmetrizable".into()))
                    }
                    Some(_) => {}
                }
            }
        }
        comp_count += 1;
    }
    let d: Vec<Rational64> = d.into_iter().map(Option::unwrap).collect();
    let mut out = d.clone();
    for c in 0..comp_count {
        let max = (0..n).filter(|&i| component[i] == c).map(|i| d[i]).max().unwrap();
        for i in (0..n).filter(|&i| component[i] == c) {
            out[i] = d[i] / max;
        }
    }
    Ok(out)
}

fn reflection_closure(reflections: &[IntMatrix], n: usize, guard: usize) -> Result<Vec<Vec<i64>>> {
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone(), ());
        queue.push_back(e);
    }
    let mut order = Vec::new();
    while let Some(r) = queue.pop_front() {
        order.push(r.clone());
        for s in reflections {
            let img = s.apply(&r);
            if !seen.contains_key(&img) {
                if seen.len() >= guard {
                    return Err(Error::NotFiniteType);
                }
                seen.insert(img.clone(), ());
                queue.push_back(img);
            }
        }
    }
    Ok(order)
}
