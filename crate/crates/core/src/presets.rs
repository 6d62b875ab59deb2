//! Built-in groups and the JSON group-spec reader.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::realform::{attach_involution, classify_cartans, CartanClass, Grade};
use crate::rootsys::{IntMatrix, RootDatum, DEFAULT_GUARD};

/// Preset ids in display order.
pub const PRESET_IDS: [&str; 5] = ["su2", "sl2r", "su11", "a1a1", "su21"];

/// A group with its root datum and one representative per Cartan class.
#[derive(Debug, Clone)]
pub struct GroupPreset {
    pub id: String,
    pub name: String,
    pub datum: Arc<RootDatum>,
    pub cartans: Vec<CartanClass>,
}

impl GroupPreset {
    pub fn cartan(&self, label: &str) -> Result<&CartanClass> {
        self.cartans
            .iter()
            .find(|c| c.label() == label)
            .ok_or_else(|| Error::UnknownCartan(label.to_string()))
    }

    /// The fundamental (most compact) class.
    pub fn fundamental(&self) -> &CartanClass {
        &self.cartans[0]
    }

    pub fn labels(&self) -> Vec<&str> {
        self.cartans.iter().map(CartanClass::label).collect()
    }
}

pub fn preset(id: &str) -> Result<GroupPreset> {
    preset_with_guard(id, DEFAULT_GUARD)
}

pub fn preset_with_guard(id: &str, guard: usize) -> Result<GroupPreset> {
    use Grade::{Compact as C, Noncompact as N};
    type ClassSpec = (&'static str, Vec<Vec<i64>>, Vec<(usize, Grade)>);
    let (name, cartan, classes): (&str, Vec<Vec<i64>>, Vec<ClassSpec>) = match id {
        "su2" => ("SU(2)", vec![vec![2]], vec![("compact", vec![vec![-1]], vec![(0, C)])]),
        "sl2r" | "su11" => (
            if id == "sl2r" { "SL(2,R)" } else { "SU(1,1)" },
            vec![vec![2]],
            vec![
                ("compact", vec![vec![-1]], vec![(0, N)]),
                ("split", vec![vec![1]], vec![]),
            ],
        ),
        "a1a1" => (
            "SL(2,R) x SL(2,R)",
            vec![vec![2, 0], vec![0, 2]],
            vec![
                ("compact", vec![vec![-1, 0], vec![0, -1]], vec![(0, N), (1, N)]),
                ("split1", vec![vec![1, 0], vec![0, -1]], vec![(1, N)]),
                ("split2", vec![vec![-1, 0], vec![0, 1]], vec![(0, N)]),
                ("split", vec![vec![1, 0], vec![0, 1]], vec![]),
            ],
        ),
        "su21" => (
            "SU(2,1)",
            vec![vec![2, -1], vec![-1, 2]],
            vec![
                ("compact", vec![vec![-1, 0], vec![0, -1]], vec![(0, C), (1, N), (2, N)]),
                // τ = s_{α₂}∘(−1): α₁ ↦ −α₁−α₂, α₂ ↦ α₂
                ("split", vec![vec![-1, 0], vec![-1, 1]], vec![]),
            ],
        ),
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    let datum = Arc::new(RootDatum::with_guard(&cartan, guard)?);
    let cartans = classes
        .into_iter()
        .map(|(label, tau, grading)| {
            let tau = IntMatrix::from_rows(&tau).expect("preset matrices are square");
            let grading: BTreeMap<_, _> = grading.into_iter().collect();
            Ok(attach_involution(datum.clone(), tau, &grading)?.with_label(label))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupPreset {
        id: id.to_string(),
        name: name.to_string(),
        datum,
        cartans,
    })
}

pub fn all_presets() -> Result<Vec<GroupPreset>> {
    PRESET_IDS.iter().map(|id| preset(id)).collect()
}

fn int_matrix(v: &Value, what: &str) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::GroupSpec(format!("{what} must be an array of integer arrays"));
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_i64().ok_or_else(bad))
                .collect()
        })
        .collect()
}

/// Reads a group spec: either `{"preset": id}` or explicit
/// `{"cartan_matrix", "tau", "grading", "name"}` data for a fundamental
/// Cartan. Grading keys index the positive roots; `tau` columns are the
/// images of the simple roots. The remaining classes come from the Cayley
/// closure.
pub fn group_from_json(spec: &Value, guard: usize) -> Result<GroupPreset> {
    if let Some(id) = spec.get("preset") {
        let id = id
            .as_str()
            .ok_or_else(|| Error::GroupSpec("preset must be a string".into()))?;
        return preset_with_guard(id, guard);
    }
    let cartan = int_matrix(
        spec.get("cartan_matrix")
            .ok_or_else(|| Error::GroupSpec("missing cartan_matrix".into()))?,
        "cartan_matrix",
    )?;
    let datum = Arc::new(RootDatum::with_guard(&cartan, guard)?);
    let tau_rows = int_matrix(
        spec.get("tau").ok_or_else(|| Error::GroupSpec("missing tau".into()))?,
        "tau",
    )?;
    let tau = IntMatrix::from_rows(&tau_rows).ok_or_else(|| Error::GroupSpec("tau must be square".into()))?;
    let mut grading = BTreeMap::new();
    if let Some(g) = spec.get("grading") {
        let obj = g
            .as_object()
            .ok_or_else(|| Error::GroupSpec("grading must be an object".into()))?;
        for (k, v) in obj {
            let idx: usize = k
                .parse()
                .map_err(|_| Error::GroupSpec(format!("grading key {k:?} is not a root index")))?;
            if idx >= datum.num_positive() {
                return Err(Error::GroupSpec(format!("grading key {idx} is not a positive root")));
            }
            let grade: Grade = v
                .as_str()
                .ok_or_else(|| Error::GroupSpec("grading values must be strings".into()))?
                .parse()?;
            grading.insert(idx, grade);
        }
    }
    let name = spec.get("name").and_then(Value::as_str).unwrap_or("custom").to_string();
    let fundamental = attach_involution(datum.clone(), tau, &grading)?;
    let cartans = classify_cartans(&fundamental)?;
    Ok(GroupPreset {
        id: name.clone(),
        name,
        datum,
        cartans,
    })
}
