use crate::realform::CartanClass;
use crate::rootsys::RootIdx;

use super::SeriesKind;

/// One tempered series family, attached to one Cartan class.
#[derive(Debug, Clone)]
pub struct SeriesFamily {
    pub label: String,
    pub kind: SeriesKind,
    pub dim_a: usize,
    pub dim_t: usize,
    /// ν must pair nonzero with each of these (positive imaginary) roots.
    pub regularity_roots: Vec<Vec<i64>>,
    /// Human-readable description of the discrete parameter set.
    pub lattice: String,
    /// Number of continuous σ directions.
    pub continuous_dims: usize,
    /// Families this one is disjoint from (all others).
    pub disjoint_from: Vec<String>,
}

/// The support bookkeeping of the tempered dual: one family per class, all
/// pairwise disjoint.
pub fn series_catalog(cartans: &[CartanClass]) -> Vec<SeriesFamily> {
    cartans
        .iter()
        .map(|c| {
            let d = c.datum();
            let regularity_roots: Vec<Vec<i64>> = c
                .positive_imaginary()
                .into_iter()
                .map(|i: RootIdx| d.root(i).to_vec())
                .collect();
            let lattice = if c.dim_t() == 0 {
                "trivial".to_string()
            } else {
                let n = regularity_roots.len();
                format!(
                    "half-integral nu with tau(nu) = -nu, rank {}; regular for {n} positive imaginary root{}",
                    c.dim_t(),
                    if n == 1 { "" } else { "s" }
                )
            };
            SeriesFamily {
                label: c.label().to_string(),
                kind: SeriesKind::of(c),
                dim_a: c.dim_a(),
                dim_t: c.dim_t(),
                regularity_roots,
                lattice,
                continuous_dims: c.dim_a(),
                disjoint_from: cartans
                    .iter()
                    .filter(|o| o.label() != c.label())
                    .map(|o| o.label().to_string())
                    .collect(),
            }
        })
        .collect()
}
