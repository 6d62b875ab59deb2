use std::collections::{HashMap, VecDeque};

use super::{IntMatrix, RootDatum, RootIdx, Weight};
use crate::error::{Error, Result};

/// One Weyl group element with its action on roots.
#[derive(Debug, Clone)]
pub struct WeylElement {
    pub matrix: IntMatrix,
    /// `perm[i]` is the index of `w(root_i)`.
    pub perm: Vec<RootIdx>,
    pub det: i64,
    /// Coxeter length (number of positive roots sent negative).
    pub length: usize,
}

/// The Weyl group as an explicit element list. Element 0 is the identity.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<IntMatrix, usize>,
}

impl WeylGroup {
    pub(crate) fn generate(datum: &RootDatum, guard: usize) -> Result<WeylGroup> {
        let n = datum.rank();
        let id = IntMatrix::identity(n);
        let gens = datum.simple_reflections();
        let mut elements = vec![WeylElement {
            perm: datum.all_indices().collect(),
            matrix: id.clone(),
            det: 1,
            length: 0,
        }];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for s in gens {
                let m = s.mul(&elements[k].matrix);
                if index.contains_key(&m) {
                    continue;
                }
                if elements.len() >= guard {
                    return Err(Error::WeylGroupTooLarge);
                }
                let perm = datum.root_permutation(&m).expect("Weyl group elements permute roots");
                let length = datum
                    .positive_indices()
                    .filter(|&i| !datum.is_positive(perm[i]))
                    .count();
                index.insert(m.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(WeylElement {
                    matrix: m,
                    perm,
                    det: -elements[k].det,
                    length,
                });
            }
        }
        Ok(WeylGroup { elements, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn get(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index of `w_a · w_b`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a].matrix.mul(&self.elements[b].matrix);
        self.index[&m]
    }

    pub fn inverse(&self, a: usize) -> usize {
        // Weyl matrices are orthogonal for the invariant form, but not as
        // integer matrices; search the (small) group instead.
        let id = &self.elements[0].matrix;
        (0..self.order())
            .find(|&b| self.elements[a].matrix.mul(&self.elements[b].matrix) == *id)
            .expect("group is closed under inverses")
    }

    /// Element indices of the subgroup generated by `gens`, sorted.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for &g in gens {
                let h = self.compose(g, k);
                if !seen[h] {
                    seen[h] = true;
                    queue.push_back(h);
                }
            }
        }
        (0..self.order()).filter(|&k| seen[k]).collect()
    }

    /// Index of the reflection in root `i`.
    pub fn reflection(&self, datum: &RootDatum, i: RootIdx) -> usize {
        self.index[&datum.reflection_matrix(i)]
    }

    pub fn act(&self, k: usize, lam: &Weight) -> Weight {
        Weight(self.elements[k].matrix.apply_rational(&lam.0))
    }

    /// The element sending the standard positive system onto `positive`,
    /// if `positive` is a positive system.
    pub fn element_for_positive_system(
        &self,
        datum: &RootDatum,
        positive: &std::collections::BTreeSet<RootIdx>,
    ) -> Option<usize> {
        if positive.len() != datum.num_positive() {
            return None;
        }
        (0..self.order()).find(|&k| {
            datum
                .positive_indices()
                .all(|i| positive.contains(&self.elements[k].perm[i]))
        })
    }
}
