use crate::error::{Error, Result};
use crate::realform::CartanClass;
use crate::rootsys::WeylGroup;

use super::ParabolicSubset;

/// Number of double cosets `left \ W / right`, both given as element lists.
pub fn double_coset_count(group: &WeylGroup, left: &[usize], right: &[usize]) -> usize {
    let mut seen = vec![false; group.order()];
    let mut count = 0;
    for g in 0..group.order() {
        if seen[g] {
            continue;
        }
        count += 1;
        for &k in left {
            let kg = group.compose(k, g);
            for &p in right {
                seen[group.compose(kg, p)] = true;
            }
        }
    }
    count
}

/// Open orbits on the flag manifold of `subset`, counted as
/// W_K \ W / W_{Φ^r} with W_K generated by compact imaginary reflections.
pub fn count_open_orbits(cartan: &CartanClass, subset: &ParabolicSubset) -> Result<usize> {
    if cartan.dim_a() != 0 {
        return Err(Error::OpenCountNotEqualRank);
    }
    let d = cartan.datum();
    let group = d.weyl_group()?;
    let w_k = cartan.compact_weyl_group()?;
    let gens: Vec<usize> = subset
        .phi
        .iter()
        .map(|&i| group.reflection(d, d.simple_index(i)))
        .collect();
    let w_r = group.subgroup(&gens);
    Ok(double_coset_count(group, &w_k, &w_r))
}
