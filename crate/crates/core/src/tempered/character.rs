use num_complex::Complex64;
use num_rational::Rational64;

use super::{q_lambda, SeriesParam};
use crate::error::{Error, Result};
use crate::realform::CartanClass;
use crate::rootsys::{exp_eval, weyl_denominator, ExpTerm, RootDatum, TorusPoint, Weight, DEFAULT_PERIOD};

const REGULARITY_TOL: f64 = 1e-9;

/// e^μ at the point t·a of the Cartan: exp(i μ_𝔱(t) + μ_𝔞(a)).
fn exp_at(c: &CartanClass, mu: &Weight, t: &TorusPoint, a: &[f64]) -> Complex64 {
    let theta = t.pairing(&c.t_part(mu));
    let re: f64 = c.a_coords(mu).to_f64().iter().zip(a).map(|(x, y)| x * y).sum();
    Complex64::from_polar(re.exp(), theta)
}

fn sign(q: usize) -> f64 {
    if q.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Character value of `param` at `t·a`, where `t` is in dual coordinates and
/// `a` lists the 𝔞-coordinates of the split part.
pub fn character_at(param: &SeriesParam, t: &TorusPoint, a: &[f64]) -> Result<Complex64> {
    let c = &param.cartan;
    let d = c.datum();
    if t.rank() != d.rank() {
        return Err(Error::DimensionMismatch {
            expected: d.rank(),
            got: t.rank(),
        });
    }
    if a.len() != c.dim_a() {
        return Err(Error::DimensionMismatch {
            expected: c.dim_a(),
            got: a.len(),
        });
    }
    if c.dim_a() == 0 {
        compact_character(param, t)
    } else {
        character_on_cartan(param, t, a)
    }
}

/// (−1)^{q(ν)} Σ_{w∈W} det(w) e^{wν} / Δ on a compact Cartan.
fn compact_character(param: &SeriesParam, t: &TorusPoint) -> Result<Complex64> {
    let d = param.cartan.datum();
    let group = d.weyl_group()?;
    let half = Rational64::new(1, 2);
    if d.positive_indices().any(|i| !t.admits(&d.root_weight(i).scale(half))) {
        return Err(Error::AperiodicExponential);
    }
    let terms: Vec<ExpTerm> = group
        .elements()
        .iter()
        .enumerate()
        .map(|(k, e)| ExpTerm::new(e.det as f64, group.act(k, &param.nu)))
        .collect();
    let numer = exp_eval(d, &terms, t)?;
    let positive: Vec<usize> = d.positive_indices().collect();
    let delta = weyl_denominator(d, &positive, t);
    if delta.norm() <= REGULARITY_TOL {
        return Err(Error::SingularTorusPoint);
    }
    let q = q_lambda(&param.cartan, &param.nu)?;
    Ok(numer / delta * sign(q) * param.chi.value())
}

/// The induced-character formula on the parameter's own Cartan:
///
/// (|Δ_M(t)| / |Δ_G(ta)|) · |W_{M,T}|⁻¹ · Σ_{w∈W_{G,H}} Ψ(wt) e^{iσ}(wa)
///
/// with Ψ the discrete series character of M⁰ at ν. Valid for every
/// `dim_a`; on a compact Cartan it agrees with the Weyl-type formula.
pub fn character_on_cartan(param: &SeriesParam, t: &TorusPoint, a: &[f64]) -> Result<Complex64> {
    let c = &param.cartan;
    let d = c.datum();
    let group = d.weyl_group()?;
    let half = Rational64::new(1, 2);
    let pos_m = c.positive_imaginary();

    let delta_m = |winv: usize| -> Complex64 {
        pos_m
            .iter()
            .map(|&i| {
                let h = group.act(winv, &d.root_weight(i).scale(half));
                exp_at(c, &h, t, a) - exp_at(c, &-&h, t, a)
            })
            .product()
    };
    let dm0 = delta_m(0).norm();
    let dg: f64 = d
        .positive_indices()
        .map(|i| {
            let h = d.root_weight(i).scale(half);
            (exp_at(c, &h, t, a) - exp_at(c, &-&h, t, a)).norm()
        })
        .product();
    if dm0 <= REGULARITY_TOL || dg <= REGULARITY_TOL {
        return Err(Error::SingularTorusPoint);
    }

    let s = sign(q_lambda(c, &param.nu)?);
    let w_imag = c.imaginary_weyl_group()?;
    let w_mt = c.compact_weyl_group()?.len() as f64;
    let sigma_full = param.sigma_full();

    let mut sum = Complex64::new(0.0, 0.0);
    for w in c.real_weyl_group()? {
        let winv = group.inverse(w);
        let psi_num: Complex64 = w_imag
            .iter()
            .map(|&v| {
                let mu = group.act(winv, &group.act(v, &param.nu));
                exp_at(c, &mu, t, a) * group.get(v).det as f64
            })
            .sum();
        let psi = psi_num / delta_m(winv) * s;
        let sig = c.a_coords(&group.act(winv, &sigma_full)).to_f64();
        let phase: f64 = sig.iter().zip(a).map(|(x, y)| x * y).sum();
        sum += psi * Complex64::from_polar(1.0, phase);
    }
    Ok(sum * (dm0 / dg / w_mt) * param.chi.value())
}

/// Weyl-measure inner product of the characters with highest weights
/// λ₁ − ρ and λ₂ − ρ, by the rectangle rule on an `n`-point grid per
/// coordinate over the period torus.
pub fn orthogonality_check(datum: &RootDatum, lam1: &Weight, lam2: &Weight, n: usize) -> Result<Complex64> {
    for l in [lam1, lam2] {
        if l.rank() != datum.rank() {
            return Err(Error::DimensionMismatch {
                expected: datum.rank(),
                got: l.rank(),
            });
        }
    }
    let group = datum.weyl_group()?;
    let orbit = |l: &Weight| -> Vec<(f64, Vec<f64>)> {
        (0..group.order())
            .map(|k| (group.get(k).det as f64, group.act(k, l).to_f64()))
            .collect()
    };
    let (o1, o2) = (orbit(lam1), orbit(lam2));
    let alt = |o: &[(f64, Vec<f64>)], x: &[f64]| -> Complex64 {
        o.iter()
            .map(|(det, w)| {
                let th: f64 = w.iter().zip(x).map(|(a, b)| a * b).sum();
                Complex64::from_polar(*det, th)
            })
            .sum()
    };
    let r = datum.rank();
    let step = DEFAULT_PERIOD / n as f64;
    let total = n.pow(r as u32);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut x = vec![0.0; r];
    for idx in 0..total {
        let mut rem = idx;
        for xi in x.iter_mut() {
            *xi = (rem % n) as f64 * step;
            rem /= n;
        }
        acc += alt(&o1, &x) * alt(&o2, &x).conj();
    }
    Ok(acc / total as f64 / group.order() as f64)
}
