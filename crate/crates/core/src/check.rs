//! The invariant suite behind the `check` command.
//!
//! Each check is run per preset and reports pass/fail with a short detail
//! string. Random sampling uses a fixed seed so runs are reproducible.

use std::collections::BTreeSet;
use std::time::Instant;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::Result;
use crate::orbits::{
    all_subsets, count_open_orbits, is_root_closed, orbit_report, parabolic_subset, realization_configs, OrbitConfig,
    Tri,
};
use crate::presets::GroupPreset;
use crate::realform::{
    classify_cartans, classify_cartans_reversed, cuspidal_parabolic, default_sigma_a_plus, default_sigma_t_plus,
    merge_positive_systems, restricted_roots, CartanClass, Grade,
};
use crate::rootsys::{varpi, weyl_denominator, TorusPoint, Weight, DEFAULT_PERIOD};
use crate::tempered::{
    bott_borel_weil, character_at, compare, discrete_series_param, hseries_param, infinitesimal_character,
    orthogonality_check, varpi_t, BbwResult, Chi, Equivalence, SeriesParam,
};

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub quadrature: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            quadrature: 4096,
            samples: 50,
            seed: 0x7e4_9e3d,
        }
    }
}

type CheckFn = fn(&GroupPreset, &CheckOptions, &mut StdRng) -> Result<Vec<String>>;

/// Runs every check on every preset. A check passes when it returns no
/// violations and no error.
pub fn run_checks(presets: &[GroupPreset], opts: &CheckOptions) -> Vec<CheckOutcome> {
    run_selected(presets, opts, None)
}

/// Names accepted by [`run_selected`].
pub const CHECK_NAMES: [&str; 10] = [
    "root datum",
    "cartan classes",
    "restricted roots",
    "orbit sweep",
    "open orbit count",
    "realization configs",
    "characters",
    "bott-borel-weil",
    "disjointness",
    "orthogonality",
];

/// Like [`run_checks`], restricted to the named checks when `only` is given.
pub fn run_selected(presets: &[GroupPreset], opts: &CheckOptions, only: Option<&[&str]>) -> Vec<CheckOutcome> {
    let wanted = |name: &str| only.is_none_or(|o| o.contains(&name));
    let checks: [(&str, CheckFn); 9] = [
        ("root datum", check_root_datum),
        ("cartan classes", check_cartans),
        ("restricted roots", check_restricted),
        ("orbit sweep", check_orbit_sweep),
        ("open orbit count", check_open_counts),
        ("realization configs", check_realization),
        ("characters", check_characters),
        ("bott-borel-weil", check_bbw),
        ("disjointness", check_disjointness),
    ];
    let mut out = Vec::new();
    for p in presets {
        let mut rng = StdRng::seed_from_u64(opts.seed);
        for (name, f) in checks {
            if !wanted(name) {
                continue;
            }
            let start = Instant::now();
            let (passed, detail) = match f(p, opts, &mut rng) {
                Ok(v) if v.is_empty() => (true, "ok".to_string()),
                Ok(v) => (false, format!("{} violation(s); first: {}", v.len(), v[0])),
                Err(e) => (false, format!("error: {e}")),
            };
            out.push(CheckOutcome {
                name: format!("{}: {name}", p.id),
                passed,
                detail,
                seconds: start.elapsed().as_secs_f64(),
            });
        }
        if wanted("orthogonality")
            && p.cartans
                .iter()
                .all(|c| c.roots_of_grade(Grade::Noncompact).next().is_none())
        {
            let start = Instant::now();
            let (passed, detail) = match check_orthogonality(p, opts) {
                Ok(v) if v.is_empty() => (true, "ok".to_string()),
                Ok(v) => (false, v[0].clone()),
                Err(e) => (false, format!("error: {e}")),
            };
            out.push(CheckOutcome {
                name: format!("{}: orthogonality", p.id),
                passed,
                detail,
                seconds: start.elapsed().as_secs_f64(),
            });
        }
    }
    out
}

fn check_root_datum(p: &GroupPreset, _: &CheckOptions, rng: &mut StdRng) -> Result<Vec<String>> {
    let d = &p.datum;
    let group = d.weyl_group()?;
    let mut bad = Vec::new();
    for e in group.elements() {
        if !d.preserves_form(&e.matrix) || d.root_permutation(&e.matrix).is_none() {
            bad.push(format!("element {} does not preserve roots and form", e.matrix));
        }
    }
    for a in 0..group.order() {
        for b in 0..group.order() {
            let ab = group.compose(a, b);
            if group.get(ab).det != group.get(a).det * group.get(b).det {
                bad.push(format!("det fails on ({a}, {b})"));
            }
        }
    }
    for i in 0..d.rank() {
        if d.coroot_pair(d.rho(), d.simple_index(i)) != Rational64::from_integer(1) {
            bad.push(format!("rho is not 1 on coroot {i}"));
        }
    }
    if d.positive_indices().any(|i| !d.pair_root(i, d.rho()).is_positive()) {
        bad.push("rho is not dominant regular".into());
    }
    for _ in 0..20 {
        let lam = random_weight(rng, d.rank(), 4);
        let base = varpi(d, &lam);
        for k in 0..group.order() {
            let lhs = varpi(d, &group.act(k, &lam));
            if lhs != base * group.get(k).det {
                bad.push(format!("varpi not alternating at {lam}"));
            }
        }
    }
    Ok(bad)
}

fn check_cartans(p: &GroupPreset, _: &CheckOptions, _: &mut StdRng) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let fundamental = p.fundamental();
    let forward = classify_cartans(fundamental)?;
    let backward = classify_cartans_reversed(fundamental)?;
    let keys = |cs: &[CartanClass]| -> Result<Vec<_>> { cs.iter().map(|c| c.canonical_key()).collect() };
    let (kf, kb, kp) = (keys(&forward)?, keys(&backward)?, keys(&p.cartans)?);
    if kf != kb {
        bad.push("classification depends on Cayley order".into());
    }
    let set_f: BTreeSet<_> = kf.iter().cloned().collect();
    let set_p: BTreeSet<_> = kp.iter().cloned().collect();
    if set_f != set_p || kp.len() != set_p.len() {
        bad.push(format!(
            "preset lists {} classes, classification finds {}",
            kp.len(),
            kf.len()
        ));
    }
    if fundamental.dim_a() == 0 && forward.iter().filter(|c| c.dim_a() == 0).count() != 1 {
        bad.push("equal-rank group must have exactly one compact class".into());
    }
    for c in &p.cartans {
        if c.dim_a() + c.dim_t() != c.rank() {
            bad.push(format!("{}: dimensions do not add up", c.label()));
        }
    }
    Ok(bad)
}

fn check_restricted(p: &GroupPreset, _: &CheckOptions, _: &mut StdRng) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let d = &p.datum;
    for c in &p.cartans {
        let sys = restricted_roots(c);
        let nonzero = d.all_indices().filter(|&i| !c.restriction(i).is_zero()).count();
        let total: usize = sys.multiplicity.values().sum();
        if total != nonzero {
            bad.push(format!(
                "{}: multiplicities sum to {total}, expected {nonzero}",
                c.label()
            ));
        }
        let sa = default_sigma_a_plus(c);
        let st = default_sigma_t_plus(c);
        let merged = merge_positive_systems(c, &sa, &st)?;
        let back_a: BTreeSet<Weight> = merged
            .iter()
            .map(|&i| c.restriction(i))
            .filter(|r| !r.is_zero())
            .collect();
        let back_t: BTreeSet<usize> = merged.iter().copied().filter(|&i| c.restriction(i).is_zero()).collect();
        if back_a != sa || back_t != st {
            bad.push(format!("{}: merged system does not restrict to its inputs", c.label()));
        }
        let par = cuspidal_parabolic(c, &sa)?;
        let mut trace = Weight::zero(c.dim_a());
        for &i in &par.n_roots {
            trace = &trace + &c.restriction(i);
        }
        if trace != -&par.modular_exponent {
            bad.push(format!("{}: trace of a on n is not -2 rho_a", c.label()));
        }
        let covered = par.m_roots.len() + 2 * par.n_roots.len();
        if covered != d.num_roots() {
            bad.push(format!("{}: m, n, -n do not partition the roots", c.label()));
        }
    }
    Ok(bad)
}

fn check_orbit_sweep(p: &GroupPreset, _: &CheckOptions, _: &mut StdRng) -> Result<Vec<String>> {
    let d = &p.datum;
    let order = d.weyl_group()?.order();
    let mut bad = Vec::new();
    for c in &p.cartans {
        for phi in all_subsets(d.rank()) {
            let sub = parabolic_subset(d, &phi)?;
            for w in 0..order {
                let cfg = OrbitConfig::new(c.clone(), w, sub.clone())?;
                let rep = orbit_report(&cfg)?;
                let here = format!("{} phi={phi:?} w={w}", c.label());
                if (rep.codim == 0) != rep.is_open {
                    bad.push(format!("{here}: codim/open mismatch"));
                }
                if c.dim_a() == 0 && rep.is_open && rep.is_measurable != Tri::Yes {
                    bad.push(format!("{here}: equal-rank open orbit not measurable"));
                }
                if rep.is_measurable == Tri::Yes
                    && (rep.is_partially_complex != Tri::Yes || rep.is_flag_type != Tri::Yes)
                {
                    bad.push(format!("{here}: measurable but not partially complex of flag type"));
                }
                let eff = cfg.effective()?;
                let tau_r: BTreeSet<usize> = sub.phi_r.iter().map(|&i| eff.tau_root(i)).collect();
                if tau_r == sub.phi_r && (rep.is_measurable == Tri::Yes) != rep.is_integrable {
                    bad.push(format!("{here}: measurable and integrable disagree"));
                }
                if let Some(n) = &rep.normalizer_roots {
                    if !is_root_closed(d, n) {
                        bad.push(format!("{here}: normalizer not closed"));
                    }
                }
            }
        }
    }
    Ok(bad)
}

fn check_open_counts(p: &GroupPreset, _: &CheckOptions, _: &mut StdRng) -> Result<Vec<String>> {
    let d = &p.datum;
    let group = d.weyl_group()?;
    let mut bad = Vec::new();
    for c in p.cartans.iter().filter(|c| c.dim_a() == 0) {
        let w_k = c.compact_weyl_group()?;
        for phi in all_subsets(d.rank()) {
            let sub = parabolic_subset(d, &phi)?;
            let count = count_open_orbits(c, &sub)?;
            // Orbits of W_K × W_{Φ^r} on open base points, tracked by the
            // flag each base point defines: the set w(Φ^u) determines wQw⁻¹.
            let mut flags: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
            let mut classes = 0;
            for w in 0..group.order() {
                let cfg = OrbitConfig::new(c.clone(), w, sub.clone())?;
                if !orbit_report(&cfg)?.is_open {
                    continue;
                }
                let flag: BTreeSet<usize> = sub.phi_u.iter().map(|&i| group.get(w).perm[i]).collect();
                if flags.contains(&flag) {
                    continue;
                }
                classes += 1;
                for &k in &w_k {
                    let moved: BTreeSet<usize> = flag.iter().map(|&i| group.get(k).perm[i]).collect();
                    flags.insert(moved);
                }
            }
            if classes != count {
                bad.push(format!(
                    "{} phi={phi:?}: count {count}, configs give {classes}",
                    c.label()
                ));
            }
        }
    }
    Ok(bad)
}

fn check_realization(p: &GroupPreset, _: &CheckOptions, _: &mut StdRng) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for c in &p.cartans {
        let par = cuspidal_parabolic(c, &default_sigma_a_plus(c))?;
        let rc = realization_configs(c, &par, &BTreeSet::new())?;
        match rc.verify() {
            Ok(rep) if rep.is_measurable == Tri::Yes && rep.is_integrable => {}
            Ok(_) => bad.push(format!("{}: realization orbit not measurable", c.label())),
            Err(e) => bad.push(format!("{}: {e}", c.label())),
        }
    }
    Ok(bad)
}

/// Random rational vector with coordinates in `[-bound, bound]`, step ½.
pub fn random_weight(rng: &mut StdRng, rank: usize, bound: i64) -> Weight {
    Weight(
        (0..rank)
            .map(|_| Rational64::new(rng.gen_range(-2 * bound..=2 * bound), 2))
            .collect(),
    )
}

/// A random regular ν (half-integral, in the −1 eigenspace) for `c`.
pub fn random_nu(rng: &mut StdRng, c: &CartanClass) -> Weight {
    loop {
        let raw = random_weight(rng, c.rank(), 3);
        let nu = c.t_part(&raw);
        if nu.is_half_integral() && !varpi_t(c, &nu).is_zero() {
            return nu;
        }
    }
}

/// A random σ in 𝔞-coordinates, regular for the restricted roots.
pub fn random_sigma(rng: &mut StdRng, c: &CartanClass) -> Weight {
    let d = c.datum();
    loop {
        let s = Weight(
            (0..c.dim_a())
                .map(|_| Rational64::new(rng.gen_range(-12..=12), 4))
                .collect(),
        );
        let full = c.from_a_coords(&s).expect("length matches dim_a");
        let regular = d
            .all_indices()
            .filter(|&i| !c.restriction(i).is_zero())
            .all(|i| !d.pair_root(i, &full).is_zero());
        if regular {
            return s;
        }
    }
}

/// A torus point where every root is comfortably away from the singular set.
pub fn random_regular_point(rng: &mut StdRng, c: &CartanClass) -> (TorusPoint, Vec<f64>) {
    let d = c.datum();
    let all: Vec<usize> = d.positive_indices().collect();
    loop {
        let t = TorusPoint::new((0..d.rank()).map(|_| rng.gen_range(0.0..DEFAULT_PERIOD)).collect());
        let a: Vec<f64> = (0..c.dim_a()).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let imag = c.positive_imaginary();
        let dm = weyl_denominator(d, &imag, &t).norm();
        let full_ok = all.iter().all(|&i| {
            let phi = d.root_weight(i);
            let th = t.pairing(&c.t_part(&phi)) / 2.0;
            let re: f64 = c
                .a_coords(&phi)
                .to_f64()
                .iter()
                .zip(&a)
                .map(|(x, y)| x * y)
                .sum::<f64>()
                / 2.0;
            let z = Complex64::from_polar(re.exp(), th) - Complex64::from_polar((-re).exp(), -th);
            z.norm() > 1e-2
        });
        if dm > 1e-2 && full_ok {
            return (t, a);
        }
    }
}

fn check_characters(p: &GroupPreset, opts: &CheckOptions, rng: &mut StdRng) -> Result<Vec<String>> {
    let d = &p.datum;
    let group = d.weyl_group()?;
    let mut bad = Vec::new();
    let chi = Chi::trivial();
    for c in &p.cartans {
        let real_w = c.real_weyl_group()?;
        for _ in 0..5 {
            let nu = random_nu(rng, c);
            let sigma = random_sigma(rng, c);
            let base = hseries_param(c, &chi, &nu, &sigma)?;
            let sf = base.sigma_full();
            let expected = d.pair(&nu, &nu) + d.pair(&sf, &sf) - d.pair(d.rho(), d.rho());
            if base.casimir != expected {
                bad.push(format!("{}: casimir mismatch", c.label()));
            }
            let conjugates: Vec<SeriesParam> = real_w
                .iter()
                .map(|&w| hseries_param(c, &chi, &group.act(w, &nu), &c.a_coords(&group.act(w, &sf))))
                .collect::<Result<_>>()?;
            for q in &conjugates {
                if let (Some(a), Some(b)) = (base.formal_degree, q.formal_degree) {
                    if a != b {
                        bad.push(format!("{}: formal degree not W-invariant", c.label()));
                    }
                }
                if compare(&base, q)? != Equivalence::Equivalent {
                    bad.push(format!("{}: W_GH conjugates judged inequivalent", c.label()));
                }
            }
            for _ in 0..opts.samples {
                let (t, a) = random_regular_point(rng, c);
                let v0 = character_at(&base, &t, &a)?;
                for q in &conjugates {
                    let v = character_at(q, &t, &a)?;
                    if (v - v0).norm() > 1e-9 {
                        bad.push(format!("{}: character not W-invariant at {:?}", c.label(), t.coords));
                    }
                }
            }
            // equivalence agrees with orbit membership under the full W
            for w in 0..group.order() {
                let wnu = group.act(w, &nu);
                let wsig = c.a_coords(&group.act(w, &sf));
                if c.t_part(&wnu) != wnu || c.from_a_coords(&wsig)? != group.act(w, &sf) {
                    continue;
                }
                let Ok(q) = hseries_param(c, &chi, &wnu, &wsig) else {
                    continue;
                };
                let in_orbit = real_w
                    .iter()
                    .any(|&u| group.act(u, &nu) == wnu && group.act(u, &sf) == group.act(w, &sf));
                if compare(&base, &q)?.holds() != in_orbit {
                    bad.push(format!("{}: equivalence disagrees with W_GH orbit", c.label()));
                }
            }
        }
    }
    Ok(bad)
}

fn check_bbw(p: &GroupPreset, opts: &CheckOptions, rng: &mut StdRng) -> Result<Vec<String>> {
    let d = &p.datum;
    let group = d.weyl_group()?;
    let mut bad = Vec::new();
    let chi = Chi::trivial();
    for c in p.cartans.iter().filter(|c| c.dim_a() == 0) {
        let npos = c.positive_imaginary().len();
        for _ in 0..20 {
            let beta = random_weight(rng, d.rank(), 4);
            let lam = &beta + d.rho();
            match bott_borel_weil(c, &BTreeSet::new(), &beta, &chi)? {
                BbwResult::Vanishes => {
                    if !varpi(d, &lam).is_zero() {
                        bad.push(format!("{}: vanishing at regular {lam}", c.label()));
                    }
                }
                BbwResult::Cohomology { q0, nu, .. } => {
                    if varpi(d, &lam).is_zero() || q0 > npos {
                        bad.push(format!("{}: bad degree {q0} at {lam}", c.label()));
                    }
                    let compact_group = c.roots_of_grade(Grade::Noncompact).next().is_none();
                    if !compact_group {
                        continue;
                    }
                    // Euler identity: the surviving degree carries the Weyl
                    // character of ν.
                    let param = discrete_series_param(c, &nu, &chi)?;
                    let all: Vec<usize> = d.positive_indices().collect();
                    for _ in 0..opts.samples.min(20) {
                        let (t, _) = random_regular_point(rng, c);
                        let numer: Complex64 = group
                            .elements()
                            .iter()
                            .enumerate()
                            .map(|(k, e)| Complex64::from_polar(e.det as f64, t.pairing(&group.act(k, &nu))))
                            .sum();
                        let weyl = numer / weyl_denominator(d, &all, &t);
                        let v = character_at(&param, &t, &[])?;
                        if (v - weyl).norm() > 1e-9 {
                            bad.push(format!("{}: Euler identity fails at {nu}", c.label()));
                        }
                    }
                }
            }
        }
    }
    Ok(bad)
}

fn check_disjointness(p: &GroupPreset, _: &CheckOptions, rng: &mut StdRng) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let chi = Chi::trivial();
    for (i, c1) in p.cartans.iter().enumerate() {
        for c2 in &p.cartans[i + 1..] {
            for _ in 0..100 {
                let p1 = hseries_param(c1, &chi, &random_nu(rng, c1), &random_sigma(rng, c1))?;
                let p2 = hseries_param(c2, &chi, &random_nu(rng, c2), &random_sigma(rng, c2))?;
                if compare(&p1, &p2)? != Equivalence::DisjointSeries {
                    bad.push(format!("{} vs {}: not reported disjoint", c1.label(), c2.label()));
                }
                if infinitesimal_character(&p1)? == infinitesimal_character(&p2)? {
                    bad.push(format!(
                        "{} vs {}: shared infinitesimal character at {} / {}",
                        c1.label(),
                        c2.label(),
                        p1.nu,
                        p2.nu
                    ));
                }
            }
        }
    }
    Ok(bad)
}

fn check_orthogonality(p: &GroupPreset, opts: &CheckOptions) -> Result<Vec<String>> {
    let d = &p.datum;
    let mut bad = Vec::new();
    // First five dominant regular parameters along ρ.
    let params: Vec<Weight> = (1..=5).map(|k| d.rho().scale(Rational64::from_integer(k))).collect();
    for (i, a) in params.iter().enumerate() {
        for (j, b) in params.iter().enumerate() {
            let v = orthogonality_check(d, a, b, opts.quadrature)?;
            let want = if i == j { 1.0 } else { 0.0 };
            if (v - Complex64::new(want, 0.0)).norm() > 1e-6 {
                bad.push(format!("gram[{i}][{j}] = {v}"));
            }
        }
    }
    Ok(bad)
}

/// True when every check passed.
pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}
