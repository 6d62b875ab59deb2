use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use tempered_core::orbits::{all_subsets, is_root_closed, orbit_report, parabolic_subset, OrbitConfig, Tri};
use tempered_core::presets::{all_presets, preset};
use tempered_core::realform::{cuspidal_parabolic, default_sigma_a_plus, restricted_roots, CartanClass};
use tempered_core::rootsys::{build_root_datum, exp_eval, varpi, ExpTerm, RootDatum, TorusPoint, Weight};
use tempered_core::tempered::{bott_borel_weil, discrete_series_param, hseries_param, realize, BbwResult, Chi};

fn cartan_matrices() -> Vec<Vec<Vec<i64>>> {
    vec![
        vec![vec![2]],
        vec![vec![2, 0], vec![0, 2]],
        vec![vec![2, -1], vec![-1, 2]],
        vec![vec![2, -2], vec![-1, 2]],
        vec![vec![2, -1], vec![-3, 2]],
    ]
}

fn datum_strategy() -> impl Strategy<Value = RootDatum> {
    (0..cartan_matrices().len()).prop_map(|k| build_root_datum(&cartan_matrices()[k]).unwrap())
}

fn half(n: i64) -> Rational64 {
    Rational64::new(n, 2)
}

fn weight_strategy(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-12i64..=12, rank).prop_map(|v| Weight(v.into_iter().map(half).collect()))
}

fn rational_weight(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec((-20i64..=20, 1i64..=6), rank)
        .prop_map(|v| Weight(v.into_iter().map(|(p, q)| Rational64::new(p, q)).collect()))
}

fn torus_strategy(rank: usize) -> impl Strategy<Value = TorusPoint> {
    prop::collection::vec(0.0..4.0 * PI, rank).prop_map(TorusPoint::new)
}

fn all_cartans() -> Vec<CartanClass> {
    all_presets().unwrap().into_iter().flat_map(|p| p.cartans).collect()
}

#[test]
fn roots_closed_under_negation_and_reflection() {
    for m in cartan_matrices() {
        let d = build_root_datum(&m).unwrap();
        let group = d.weyl_group().unwrap();
        for i in d.all_indices() {
            let r = d.root(i);
            assert!(r.iter().any(|&x| x != 0));
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            assert_eq!(d.root_index(&neg), Some(d.neg(i)));
            for k in 0..group.order() {
                let img = group.act(k, &d.root_weight(i));
                assert!(d.weight_root_index(&img).is_some());
            }
        }
    }
}

#[test]
fn weyl_group_is_closed_and_det_multiplicative() {
    for m in cartan_matrices() {
        let d = build_root_datum(&m).unwrap();
        let g = d.weyl_group().unwrap();
        let ids: Vec<usize> = (0..g.order()).filter(|&k| g.get(k).matrix.is_identity()).collect();
        assert_eq!(ids.len(), 1);
        for a in 0..g.order() {
            assert!(g.get(g.compose(a, g.inverse(a))).matrix.is_identity());
            for b in 0..g.order() {
                let ab = g.compose(a, b);
                assert_eq!(g.get(ab).det, g.get(a).det * g.get(b).det);
                assert_eq!(g.get(ab).matrix, g.get(a).matrix.mul(&g.get(b).matrix));
            }
        }
    }
}

#[test]
fn rho_is_dominant_regular() {
    for m in cartan_matrices() {
        let d = build_root_datum(&m).unwrap();
        for i in d.positive_indices() {
            assert!(d.pair_root(i, d.rho()).is_positive());
        }
        for s in 0..d.rank() {
            assert_eq!(d.coroot_pair(d.rho(), d.simple_index(s)), Rational64::from_integer(1));
        }
    }
}

proptest! {
    #[test]
    fn varpi_alternates((d, lam) in datum_strategy().prop_flat_map(|d| {
        let r = d.rank();
        (Just(d), rational_weight(r))
    })) {
        let g = d.weyl_group().unwrap();
        let base = varpi(&d, &lam);
        for k in 0..g.order() {
            prop_assert_eq!(varpi(&d, &g.act(k, &lam)), base * g.get(k).det);
        }
    }

    #[test]
    fn exp_eval_is_linear(
        (d, ws1, ws2, x) in datum_strategy().prop_flat_map(|d| {
            let r = d.rank();
            (
                Just(d),
                prop::collection::vec((weight_strategy(r), -3.0..3.0f64), 0..6),
                prop::collection::vec((weight_strategy(r), -3.0..3.0f64), 0..6),
                torus_strategy(r),
            )
        })
    ) {
        let t1: Vec<ExpTerm> = ws1.into_iter().map(|(w, c)| ExpTerm::new(c, w)).collect();
        let t2: Vec<ExpTerm> = ws2.into_iter().map(|(w, c)| ExpTerm::new(Complex64::new(0.0, c), w)).collect();
        let both: Vec<ExpTerm> = t1.iter().chain(&t2).cloned().collect();
        let lhs = exp_eval(&d, &both, &x).unwrap();
        let rhs = exp_eval(&d, &t1, &x).unwrap() + exp_eval(&d, &t2, &x).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12);
    }

    #[test]
    fn exponential_is_a_character(
        (a, b, x) in (1usize..=2).prop_flat_map(|r| (weight_strategy(r), weight_strategy(r), torus_strategy(r)))
    ) {
        let sum = &a + &b;
        prop_assert!((x.exp(&sum) - x.exp(&a) * x.exp(&b)).norm() < 1e-12);
        prop_assert!((x.exp(&Weight::zero(a.rank())) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn formal_degree_is_weyl_invariant(k in 0usize..2, v in prop::collection::vec(-8i64..=8, 2)) {
        let g = preset(["su21", "a1a1"][k]).unwrap();
        let c = g.fundamental();
        let lam = Weight(v.iter().map(|&n| half(n)).collect());
        prop_assume!(!varpi(c.datum(), &lam).is_zero());
        let p = discrete_series_param(c, &lam, &Chi::trivial()).unwrap();
        prop_assert!(p.formal_degree.unwrap().is_positive());
        let w = c.datum().weyl_group().unwrap();
        for e in 0..w.order() {
            let q = discrete_series_param(c, &w.act(e, &lam), &Chi::trivial()).unwrap();
            prop_assert_eq!(q.formal_degree, p.formal_degree);
        }
    }

    #[test]
    fn casimir_matches_raw_pairings(pick in 0usize..64, v in prop::collection::vec(-8i64..=8, 2), s in prop::collection::vec(-8i64..=8, 2)) {
        let cs = all_cartans();
        let c = &cs[pick % cs.len()];
        let d = c.datum();
        let nu = c.t_part(&Weight(v[..d.rank()].iter().map(|&n| Rational64::from_integer(n)).collect()));
        let sigma = Weight(s[..c.dim_a()].iter().map(|&n| Rational64::new(n, 3)).collect());
        let Ok(p) = hseries_param(c, &Chi::trivial(), &nu, &sigma) else { return Ok(()); };
        // σ as a full weight, rebuilt from the 𝔞-basis
        let mut sf = Weight::zero(d.rank());
        for (coef, b) in sigma.coords().iter().zip(c.a_basis()) {
            sf = &sf + &b.scale(*coef);
        }
        let raw = |x: &Weight, y: &Weight| -> Rational64 {
            let mut acc = Rational64::zero();
            for (row, xi) in d.form().iter().zip(x.coords()) {
                for (fij, yj) in row.iter().zip(y.coords()) {
                    acc += xi * fij * yj;
                }
            }
            acc
        };
        prop_assert_eq!(p.casimir, raw(&nu, &nu) + raw(&sf, &sf) - raw(d.rho(), d.rho()));
    }

    #[test]
    fn bbw_degree_bound(pick in 0usize..64, v in prop::collection::vec(-10i64..=10, 2)) {
        let cs: Vec<CartanClass> = all_cartans().into_iter().filter(|c| c.dim_a() == 0).collect();
        let c = &cs[pick % cs.len()];
        let d = c.datum();
        let beta = Weight(v[..d.rank()].iter().map(|&n| half(n)).collect());
        let lam = &beta + d.rho();
        match bott_borel_weil(c, &BTreeSet::new(), &beta, &Chi::trivial()).unwrap() {
            BbwResult::Vanishes => prop_assert!(varpi(d, &lam).is_zero()),
            BbwResult::Cohomology { q0, nu, .. } => {
                prop_assert!(q0 <= c.positive_imaginary().len());
                prop_assert_eq!(varpi(d, &nu).abs(), varpi(d, &lam).abs());
            }
        }
    }

    #[test]
    fn realize_degree_bound(k in 0usize..3, v in prop::collection::vec(-10i64..=10, 2)) {
        let g = preset(["sl2r", "su21", "a1a1"][k]).unwrap();
        let c = g.fundamental();
        let d = c.datum();
        let par = cuspidal_parabolic(c, &default_sigma_a_plus(c)).unwrap();
        let rc = tempered_core::orbits::realization_configs(c, &par, &BTreeSet::new()).unwrap();
        let beta = Weight(v[..d.rank()].iter().map(|&n| half(n)).collect());
        let r = realize(&rc, &Chi::trivial(), &beta, &Weight::zero(0)).unwrap();
        if !r.vanishes {
            prop_assert!(r.degree.unwrap() <= rc.sigma_t_plus.len());
        }
    }
}

#[test]
fn cartan_class_invariants() {
    for c in all_cartans() {
        let d = c.datum();
        let tau = c.tau();
        assert!(tau.mul(tau).is_identity());
        assert!(d.preserves_form(tau));
        assert!(d.root_permutation(tau).is_some());
        let imag: BTreeSet<usize> = c.imaginary_roots().collect();
        let graded: BTreeSet<usize> = c.grading().keys().copied().collect();
        assert_eq!(imag, graded, "{}", c.label());
        for &i in &imag {
            assert_eq!(c.grade(i), c.grade(d.neg(i)));
        }
        assert_eq!(c.dim_a() + c.dim_t(), c.rank());
    }
}

#[test]
fn restricted_root_invariants() {
    for c in all_cartans() {
        let sys = restricted_roots(&c);
        let set: BTreeSet<Weight> = sys.roots.iter().cloned().collect();
        for r in &sys.roots {
            assert!(set.contains(&-r));
            assert!(sys.multiplicity[r] >= 1);
        }
        let mut rho = Weight::zero(c.dim_a());
        for p in &sys.positive {
            rho = &rho + &p.scale(Rational64::new(sys.multiplicity[p] as i64, 2));
        }
        assert_eq!(rho, sys.rho_a);
        let par = cuspidal_parabolic(&c, &default_sigma_a_plus(&c)).unwrap();
        let mut seen = BTreeMap::new();
        for i in c.datum().all_indices() {
            let slots = [
                par.m_roots.contains(&i),
                par.n_roots.contains(&i),
                par.n_roots.contains(&c.datum().neg(i)),
            ];
            *seen.entry(slots.iter().filter(|&&b| b).count()).or_insert(0) += 1;
        }
        assert_eq!(seen.keys().copied().collect::<Vec<_>>(), vec![1]);
    }
}

#[test]
fn parabolic_and_orbit_invariants() {
    for g in all_presets().unwrap() {
        let d = &g.datum;
        let order = d.weyl_group().unwrap().order();
        for phi in all_subsets(d.rank()) {
            let sub = parabolic_subset(d, &phi).unwrap();
            for &i in &sub.phi_r {
                assert!(sub.phi_r.contains(&d.neg(i)));
            }
            assert!(sub.phi_u.is_disjoint(&sub.phi_r));
            assert_eq!(d.num_roots(), sub.phi_r.len() + 2 * sub.phi_u.len());
            for c in &g.cartans {
                for w in 0..order {
                    let cfg = OrbitConfig::new(c.clone(), w, sub.clone()).unwrap();
                    let eff = cfg.effective().unwrap();
                    assert!(eff.tau().mul(eff.tau()).is_identity());
                    assert!(d.root_permutation(eff.tau()).is_some());
                    let rep = orbit_report(&cfg).unwrap();
                    let tu: BTreeSet<usize> = sub.phi_u.iter().map(|&i| eff.tau_root(i)).collect();
                    assert_eq!(rep.codim, sub.phi_u.intersection(&tu).count());
                    let minus_tu: BTreeSet<usize> = tu.iter().map(|&i| d.neg(i)).collect();
                    let vm: BTreeSet<usize> = sub.phi_u.intersection(&minus_tu).copied().collect();
                    assert_eq!(rep.v_minus, vm);
                    if rep.is_measurable == Tri::Yes {
                        let n = rep.normalizer_roots.as_ref().unwrap();
                        assert!(is_root_closed(d, n));
                    } else {
                        assert!(rep.normalizer_roots.is_none());
                    }
                }
            }
        }
    }
}
