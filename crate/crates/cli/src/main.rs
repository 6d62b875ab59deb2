//! `tempered`: command-line front end for the tempered-core library.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

mod render;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use render::{emit, opt, rational, roots, weight, Format};
use tempered_core::check::{run_selected, CheckOptions};
use tempered_core::orbits::{
    count_open_orbits, orbit_report, parabolic_subset, realization_configs, OrbitConfig, OrbitReport,
};
use tempered_core::presets::{group_from_json, preset_with_guard, GroupPreset, PRESET_IDS};
use tempered_core::realform::{cuspidal_parabolic, default_sigma_a_plus, CartanClass, Grade};
use tempered_core::rootsys::{TorusPoint, Weight, DEFAULT_GUARD};
use tempered_core::tempered::{
    bott_borel_weil, character_at, hseries_param, realize, series_catalog, varpi_t, BbwResult, Chi,
};
use tempered_core::Error;

#[derive(Parser)]
#[command(
    name = "tempered",
    version,
    about = "Root data, real forms, flag orbits and tempered series"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArg {
    /// Preset id, a JSON group-spec file, or an inline JSON spec.
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct CartanArgs {
    #[command(flatten)]
    group: GroupArg,
    /// Cartan class label; defaults to the fundamental class.
    #[arg(long)]
    cartan: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List the preset group ids.
    Groups,
    /// List the Cartan classes of a group.
    Cartans {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Orbit data for a flag and base point (all base points unless --w).
    OrbitReport {
        #[command(flatten)]
        target: CartanArgs,
        /// Simple roots spanning the Levi, 1-based (e.g. "a1,a2" or "1,2").
        #[arg(long, default_value = "")]
        flag: String,
        /// Weyl-group index of the base point.
        #[arg(long)]
        w: Option<usize>,
    },
    /// Count the open orbits on a flag manifold.
    OpenOrbits {
        #[command(flatten)]
        target: CartanArgs,
        #[arg(long, default_value = "")]
        flag: String,
    },
    /// Bott-Borel-Weil for the imaginary roots of a Cartan.
    Bbw {
        #[command(flatten)]
        target: CartanArgs,
        /// Highest weight, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Simple imaginary roots of the isotropy Levi, 1-based.
        #[arg(long, default_value = "")]
        flag: String,
        #[arg(long, default_value = "trivial")]
        chi: String,
    },
    /// Evaluate a tempered character at a point of the Cartan subgroup.
    Character {
        #[command(flatten)]
        target: CartanArgs,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Continuous parameter in 𝔞-coordinates.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        sigma: String,
        /// Compact torus coordinates, comma-separated reals.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Split torus coordinates, comma-separated reals.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        split: String,
        #[arg(long, default_value = "trivial")]
        chi: String,
    },
    /// Resolve the series realized on the orbit attached to a Cartan.
    Realize {
        #[command(flatten)]
        target: CartanArgs,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, default_value = "")]
        flag: String,
        #[arg(long, default_value = "trivial")]
        chi: String,
    },
    /// List the tempered series families of a group.
    Catalog {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Run the invariant suite.
    Check {
        /// Restrict to one group.
        #[arg(long)]
        group: Option<String>,
        /// Quadrature points per coordinate for orthogonality.
        #[arg(long, default_value_t = 4096)]
        quadrature: usize,
        /// Random points per sampled parameter.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownPreset(_) | Error::UnknownCartan(_) | Error::GroupSpec(_) | Error::BadRational(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Domain(other),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn guard() -> CliResult<usize> {
    match std::env::var("TEMPERED_GUARD") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("TEMPERED_GUARD must be a positive integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn load_group(spec: &str) -> CliResult<GroupPreset> {
    let guard = guard()?;
    if PRESET_IDS.contains(&spec) {
        return Ok(preset_with_guard(spec, guard)?);
    }
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else if std::path::Path::new(spec).is_file() {
        std::fs::read_to_string(spec).map_err(|e| Failure::Usage(format!("cannot read {spec}: {e}")))?
    } else {
        return Err(Error::UnknownPreset(spec.to_string()).into());
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("malformed group spec: {e}")))?;
    Ok(group_from_json(&value, guard)?)
}

fn pick_cartan<'a>(g: &'a GroupPreset, label: Option<&str>) -> CliResult<&'a CartanClass> {
    match label {
        Some(l) => Ok(g.cartan(l)?),
        None => Ok(g.fundamental()),
    }
}

/// Parses "a1,a3" or "1,3" into 0-based indices.
fn parse_flag(s: &str) -> CliResult<BTreeSet<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let digits = t.strip_prefix('a').unwrap_or(t);
            match digits.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(Failure::Usage(format!(
                    "bad flag entry {t:?}: expected a1, a2, ... or 1, 2, ..."
                ))),
            }
        })
        .collect()
}

fn parse_reals(s: &str, what: &str) -> CliResult<Vec<f64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Failure::Usage(format!("bad {what} coordinate {t:?}")))
        })
        .collect()
}

fn parse_weight(s: &str) -> CliResult<Weight> {
    Ok(Weight::parse_list(s)?)
}

fn parse_chi(s: &str) -> CliResult<Chi> {
    Ok(Chi::new(s)?)
}

fn cartan_json(c: &CartanClass) -> Value {
    let d = c.datum();
    let pos = |set: BTreeSet<usize>| roots(d, &set.into_iter().filter(|&i| d.is_positive(i)).collect());
    json!({
        "label": c.label(),
        "dim_a": c.dim_a(),
        "dim_t": c.dim_t(),
        "a_basis": c.a_basis().iter().map(weight).collect::<Vec<_>>(),
        "tau": c.tau().rows(),
        "compact_roots": pos(c.roots_of_grade(Grade::Compact).collect()),
        "noncompact_roots": pos(c.roots_of_grade(Grade::Noncompact).collect()),
        "real_roots": pos(c.real_roots().collect()),
        "series": tempered_core::tempered::SeriesKind::of(c).as_str(),
    })
}

fn report_json(c: &CartanClass, w: usize, r: &OrbitReport) -> Value {
    let d = c.datum();
    json!({
        "w": w,
        "codim": r.codim,
        "open": r.is_open,
        "measurable": r.is_measurable.as_str(),
        "integrable": r.is_integrable,
        "partially_complex": r.is_partially_complex.as_str(),
        "flag_type": r.is_flag_type.as_str(),
        "delta_x": weight(&r.delta_x),
        "q_bracket": roots(d, &r.q_bracket),
        "gamma": roots(d, &r.gamma),
        "m_bracket": roots(d, &r.m_bracket),
        "v_plus": roots(d, &r.v_plus),
        "v_minus": roots(d, &r.v_minus),
        "normalizer_roots": opt(r.normalizer_roots.as_ref(), |n| roots(d, n)),
    })
}

/// Returns the value to print and whether the command succeeded.
fn run(command: Command) -> CliResult<(Value, bool)> {
    let out = match command {
        Command::Groups => json!(PRESET_IDS),
        Command::Cartans { group } => {
            let g = load_group(&group.group)?;
            Value::Array(g.cartans.iter().map(cartan_json).collect())
        }
        Command::OrbitReport { target, flag, w } => {
            let g = load_group(&target.group.group)?;
            let c = pick_cartan(&g, target.cartan.as_deref())?;
            let sub = parabolic_subset(&g.datum, &parse_flag(&flag)?)?;
            let one = |w: usize| -> CliResult<Value> {
                let cfg = OrbitConfig::new(c.clone(), w, sub.clone())?;
                Ok(report_json(c, w, &orbit_report(&cfg)?))
            };
            match w {
                Some(w) => one(w)?,
                None => {
                    let order = g.datum.weyl_group()?.order();
                    Value::Array((0..order).map(one).collect::<CliResult<_>>()?)
                }
            }
        }
        Command::OpenOrbits { target, flag } => {
            let g = load_group(&target.group.group)?;
            let c = pick_cartan(&g, target.cartan.as_deref())?;
            let sub = parabolic_subset(&g.datum, &parse_flag(&flag)?)?;
            json!({ "count": count_open_orbits(c, &sub)? })
        }
        Command::Bbw {
            target,
            beta,
            flag,
            chi,
        } => {
            let g = load_group(&target.group.group)?;
            let c = pick_cartan(&g, target.cartan.as_deref())?;
            let chi = parse_chi(&chi)?;
            match bott_borel_weil(c, &parse_flag(&flag)?, &parse_weight(&beta)?, &chi)? {
                BbwResult::Vanishes => {
                    json!({ "vanishes": true, "q0": null, "nu": null, "chi": chi.label(), "dimension": null })
                }
                BbwResult::Cohomology { q0, nu, chi } => {
                    let dim = varpi_t(c, &nu) / varpi_t(c, &tempered_core::tempered::rho_t(c));
                    json!({
                        "vanishes": false,
                        "q0": q0,
                        "nu": weight(&nu),
                        "chi": chi.label(),
                        "dimension": rational(&if dim < 0.into() { -dim } else { dim }),
                    })
                }
            }
        }
        Command::Character {
            target,
            nu,
            sigma,
            at,
            split,
            chi,
        } => {
            let g = load_group(&target.group.group)?;
            let c = pick_cartan(&g, target.cartan.as_deref())?;
            let sigma = if sigma.trim().is_empty() {
                Weight::zero(c.dim_a())
            } else {
                parse_weight(&sigma)?
            };
            let mut a = parse_reals(&split, "split")?;
            if a.is_empty() {
                a = vec![0.0; c.dim_a()];
            }
            let param = hseries_param(c, &parse_chi(&chi)?, &parse_weight(&nu)?, &sigma)?;
            let v = character_at(&param, &TorusPoint::new(parse_reals(&at, "torus")?), &a)?;
            // adding 0.0 turns -0.0 into 0.0
            json!({ "value_re": v.re + 0.0, "value_im": v.im + 0.0 })
        }
        Command::Realize {
            target,
            beta,
            sigma,
            flag,
            chi,
        } => {
            let g = load_group(&target.group.group)?;
            let c = pick_cartan(&g, target.cartan.as_deref())?;
            let sigma = if sigma.trim().is_empty() {
                Weight::zero(c.dim_a())
            } else {
                parse_weight(&sigma)?
            };
            let par = cuspidal_parabolic(c, &default_sigma_a_plus(c))?;
            let rc = realization_configs(c, &par, &parse_flag(&flag)?)?;
            let r = realize(&rc, &parse_chi(&chi)?, &parse_weight(&beta)?, &sigma)?;
            let p = r.param.as_ref();
            json!({
                "vanishes": r.vanishes,
                "degree": r.degree,
                "euler_sign": r.euler_sign,
                "nu_plus_rho": weight(&r.nu_plus_rho),
                "nu": opt(p, |p| weight(&p.nu)),
                "sigma": opt(p, |p| weight(&p.sigma)),
                "series": opt(p, |p| json!(p.kind.as_str())),
                "casimir": opt(p, |p| rational(&p.casimir)),
            })
        }
        Command::Catalog { group } => {
            let g = load_group(&group.group)?;
            let fams = series_catalog(&g.cartans);
            Value::Array(
                fams.iter()
                    .map(|f| {
                        json!({
                            "label": f.label,
                            "series": f.kind.as_str(),
                            "dim_a": f.dim_a,
                            "dim_t": f.dim_t,
                            "regularity_roots": f.regularity_roots.iter()
                                .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
                                .collect::<Vec<_>>(),
                            "lattice": f.lattice,
                            "continuous_dims": f.continuous_dims,
                            "disjoint_from": f.disjoint_from,
                        })
                    })
                    .collect(),
            )
        }
        Command::Check {
            group,
            quadrature,
            samples,
        } => {
            let groups = match group {
                Some(id) => vec![load_group(&id)?],
                None => PRESET_IDS.iter().map(|id| load_group(id)).collect::<CliResult<_>>()?,
            };
            let opts = CheckOptions {
                quadrature,
                samples,
                ..CheckOptions::default()
            };
            let out = run_selected(&groups, &opts, None);
            let passed = out.iter().all(|o| o.passed);
            let checks: Vec<Value> = out
                .iter()
                .map(|o| json!({ "name": o.name, "passed": o.passed, "detail": o.detail, "seconds": (o.seconds * 1e3).round() / 1e3 }))
                .collect();
            return Ok((json!({ "passed": passed, "checks": checks }), passed));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli.command) {
        Ok((value, ok)) => {
            println!("{}", emit(&value, format));
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: invariant check failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
