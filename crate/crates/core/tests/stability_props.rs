mod common;

use common::{distinct_nodes, small_rational, symmetric_nodes};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use rkcolloc::collocation::{gauss_pi, pi_from_nodes};
use rkcolloc::exactmath::scalar::{int, to_f64};
use rkcolloc::exactmath::RationalFunction;
use rkcolloc::rootloc::all_open_rhp;
use rkcolloc::stability::{
    boundary_deficit, dahlquist_validate, laplace_cross_check, resolvent_entries, stability_function,
};
use rkcolloc::{classify, AnalysisOptions, CollocationMethod, Criterion, NodeFamily, Notion, Poly};

fn full() -> AnalysisOptions {
    AnalysisOptions {
        force_full: true,
        ..AnalysisOptions::default()
    }
}

/// 2-norm condition number of `I - zA`.
fn stage_condition(a: &[Vec<f64>], z: Complex64) -> f64 {
    let s = a.len();
    let m = DMatrix::from_fn(s, s, |i, j| Complex64::new(f64::from(u8::from(i == j)), 0.0) - z * a[i][j]);
    let sv = m.singular_values();
    sv.max() / sv.min()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn report_respects_lattice(ns in distinct_nodes(1..=4, -1, 2), force in any::<bool>()) {
        let m = CollocationMethod::from_nodes(ns).unwrap();
        let opts = if force { full() } else { AnalysisOptions::default() };
        let r = classify(&m, &opts).unwrap();
        prop_assert!(r.check_lattice().is_ok());
        for (n, v) in r.verdicts() {
            prop_assert!(v.is_exact(), "{} not certified exactly", n);
        }
    }

    #[test]
    fn fast_paths_match_full_decisions(ns in distinct_nodes(1..=4, -1, 2)) {
        let m = CollocationMethod::from_nodes(ns).unwrap();
        let fast = classify(&m, &AnalysisOptions::default()).unwrap();
        let slow = classify(&m, &full()).unwrap();
        for n in Notion::ALL {
            prop_assert_eq!(fast.holds(n), slow.holds(n), "{}", n);
        }
    }

    #[test]
    fn tau_form_equals_tableau_form(ns in distinct_nodes(1..=5, -1, 2)) {
        let s = ns.stage_count();
        let m = CollocationMethod::from_nodes(ns).unwrap();
        let sf = stability_function(&m.pi, s);
        let res = resolvent_entries(&m.tableau).unwrap();
        // det + l sum_ij b_i adj_ij
        let mut num = res.det.clone();
        for i in 0..s {
            for j in 0..s {
                num = &num + &(&res.adj.get(i, j).scale(&m.tableau.b[i]) * &Poly::x());
            }
        }
        prop_assert_eq!(
            RationalFunction::new(sf.n.clone(), sf.d.clone()),
            RationalFunction::new(num, res.det.clone())
        );
        prop_assert!(sf.n.degree() <= Some(s) && sf.d.degree() <= Some(s));
        prop_assert_eq!(&(&sf.n_red * &sf.g).monic(), &sf.n.monic());
        prop_assert_eq!(&(&sf.d_red * &sf.g).monic(), &sf.d.monic());
    }

    #[test]
    fn symmetric_methods_are_unimodular_on_axis(ns in symmetric_nodes(6)) {
        let s = ns.stage_count();
        let pi = pi_from_nodes(&ns).unwrap();
        let lhs = pi.shift(&int(1)).tau();
        let rhs = pi.tau().compose_neg();
        let rhs = if s % 2 == 0 { rhs } else { -&rhs };
        prop_assert_eq!(lhs, rhs);
        prop_assert!(boundary_deficit(&stability_function(&pi, s)).is_identically_zero());
    }

    #[test]
    fn a_stable_reduced_function_is_proper(ns in distinct_nodes(1..=4, 0, 1)) {
        let m = CollocationMethod::from_nodes(ns).unwrap();
        let r = classify(&m, &AnalysisOptions::default()).unwrap();
        if r.holds(Notion::A) {
            prop_assert!(r.stability_function.n_red.degree() <= r.stability_function.d_red.degree());
        }
    }

    #[test]
    fn small_forward_methods_never_i_without_a(ns in distinct_nodes(1..=4, 0, 2)) {
        let m = CollocationMethod::from_nodes(ns).unwrap();
        let r = classify(&m, &full()).unwrap();
        prop_assert!(!(r.holds(Notion::I) && !r.holds(Notion::A)));
    }

    #[test]
    fn dahlquist_matches_r(
        ns in distinct_nodes(1..=5, 0, 1),
        re in small_rational(-2, 0),
        im in small_rational(-2, 2),
    ) {
        let s = ns.stage_count();
        let m = CollocationMethod::from_nodes(ns).unwrap();
        let sf = stability_function(&m.pi, s);
        let z = Complex64::new(to_f64(&re), to_f64(&im));
        prop_assume!(stage_condition(&m.tableau.a_f64(), z) < 100.0);
        let dev = dahlquist_validate(&m.tableau, &sf, z, 1.0, 50).unwrap();
        prop_assert!(dev < 1e-10, "deviation {}", dev);
    }

    #[test]
    fn laplace_form_matches(ns in distinct_nodes(1..=5, 0, 1)) {
        let s = ns.stage_count();
        let pi = pi_from_nodes(&ns).unwrap();
        let sf = stability_function(&pi, s);
        for l in [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(1.0, 1.0)] {
            if sf.d.eval_complex(l).norm() < 1e-6 {
                continue;
            }
            prop_assert!(laplace_cross_check(&pi, &sf, l) < 1e-12);
        }
    }
}

#[test]
fn gauss_family_is_a_hat_and_i_hat() {
    for s in 1..=6 {
        assert!(all_open_rhp(&gauss_pi(s).tau()), "s = {s}");
        let m = CollocationMethod::from_family(NodeFamily::Gauss(s)).unwrap();
        let fast = classify(&m, &AnalysisOptions::default()).unwrap();
        assert_eq!(fast.verdict(Notion::AHat).criterion(), Criterion::GaussTheorem);
        let slow = classify(&m, &full()).unwrap();
        for n in Notion::ALL {
            assert!(fast.holds(n) && slow.holds(n), "s = {s}, {n}");
        }
    }
}
