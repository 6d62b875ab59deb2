//! Root data, real forms, flag-manifold orbits and tempered series.
//!
//! ```
//! use std::collections::BTreeSet;
//! use tempered_core::orbits::{count_open_orbits, parabolic_subset};
//! use tempered_core::presets::preset;
//!
//! let g = preset("su21")?;
//! let flag = parabolic_subset(&g.datum, &BTreeSet::new())?;
//! assert_eq!(count_open_orbits(g.fundamental(), &flag)?, 3);
//! # Ok::<(), tempered_core::Error>(())
//! ```

pub mod check;
pub mod error;
pub mod orbits;
pub mod presets;
pub mod realform;
pub mod rootsys;
pub mod tempered;

pub use error::{Error, Result};
