use approx::assert_relative_eq;
use proptest::prelude::*;
use ratext_core::dbt::*;
use ratext_core::families::{Domain, FamilySpec};
use ratext_core::oracle::{
    default_eigen_grid, integrate, schrodinger_residual, solve_bound_states, weight_truncated_grid,
    RESIDUAL_POINTS,
};
use ratext_core::polynomials::{laguerre_eval, pochhammer};
use ratext_core::Error;

fn standard_cases() -> Vec<(FamilySpec, usize)> {
    vec![
        (FamilySpec::ho(1.0).unwrap(), 2),
        (FamilySpec::ho(2.0).unwrap(), 2),
        (FamilySpec::ho(2.0).unwrap(), 4),
        (FamilySpec::ho(1.5).unwrap(), 0),
        (FamilySpec::morse(5.0, 1.0, 1.0).unwrap(), 2),
        (FamilySpec::morse(3.7, 0.6, 1.0).unwrap(), 2),
        (FamilySpec::morse(4.0, 1.5, 0.7).unwrap(), 2),
        (FamilySpec::morse(6.0, 1.0, 1.0).unwrap(), 4),
        (FamilySpec::erkc(4.0, 2.0).unwrap(), 2),
        (FamilySpec::erkc(1.6, 2.0).unwrap(), 1),
        (FamilySpec::erkc(2.5, 1.0).unwrap(), 3),
        (FamilySpec::erkc(3.5, 1.0).unwrap(), 0),
    ]
}

fn fact(n: usize) -> f64 {
    (1..=n).map(|j| j as f64).product()
}

#[test]
fn trivial_and_isotonic_extensions() {
    let ho = FamilySpec::ho(1.5).unwrap();
    let e0 = extend(&ho, 0).unwrap();
    let e1 = extend_with(&ho, 1, true).unwrap();
    assert!(!e1.conforming);
    assert_eq!(e1.domain, Domain::HALF_LINE);
    for i in 1..200 {
        let x = -5.0 + 0.05 * i as f64;
        assert_relative_eq!(e0.value(x), ho.potential_value(x).unwrap() - 1.5, epsilon = 1e-12);
        if x > 0.0 {
            let iso = 1.5 * 1.5 * x * x / 4.0 + 2.0 / (x * x) - 2.25;
            assert_relative_eq!(e1.value(x), iso, max_relative = 1e-12);
        }
    }
    assert!(e1.value(-1.0).is_nan());
}

#[test]
fn second_extension_is_cprs_type() {
    for omega in [1.0, 2.0, 0.7] {
        let ext = extend(&FamilySpec::ho(omega).unwrap(), 2).unwrap();
        for i in 0..300 {
            let x = -6.0 + 0.04 * i as f64;
            let u = omega * x * x;
            let expected =
                omega * omega * x * x / 4.0 + 4.0 * omega * (u - 1.0) / ((u + 1.0) * (u + 1.0)) - 1.5 * omega;
            assert_relative_eq!(ext.value(x), expected, max_relative = 1e-12, epsilon = 1e-13);
        }
    }
}

#[test]
fn singular_extensions_rejected() {
    let ho = FamilySpec::ho(1.0).unwrap();
    match extend(&ho, 1) {
        Err(Error::Regularity { branch, reason }) => {
            assert!(!branch.is_empty());
            assert!(reason.contains("origin"));
        }
        other => panic!("{other:?}"),
    }
    let morse = FamilySpec::morse(5.0, 1.0, 1.0).unwrap();
    assert!(matches!(extend(&morse, 1), Err(Error::Regularity { .. })));
    let erkc = FamilySpec::erkc(1.5, 2.0).unwrap();
    assert!(matches!(extend(&erkc, 2), Err(Error::Unsupported(_))));
    assert!(extend(&erkc, 1).is_ok());
    let erkc = FamilySpec::erkc(2.0, 2.0).unwrap();
    assert!(matches!(extend(&erkc, 1), Err(Error::Unsupported(_))));
    // a > n+1 with odd n: negative zero of the denominator
    let erkc = FamilySpec::erkc(3.0, 2.0).unwrap();
    assert!(matches!(extend(&erkc, 1), Err(Error::Regularity { .. })));
    let flagged = extend_with(&morse, 1, true).unwrap();
    assert!(!flagged.conforming);
}

#[test]
fn dbt_rs_examples() {
    let ho = FamilySpec::ho(1.3).unwrap();
    let e0 = extend(&ho, 0).unwrap();
    // V − ω has ψ_1 at energy E_0
    for x in [-2.0, -0.3, 0.7, 3.1] {
        assert_relative_eq!(dbt_rs(&e0, 0, x).unwrap(), 1.3 * x / 2.0 - 1.0 / x, max_relative = 1e-12);
    }
    assert!(matches!(dbt_rs(&e0, 0, 0.0), Err(Error::Coincidence { .. })));

    let e2 = extend(&FamilySpec::ho(2.0).unwrap(), 2).unwrap();
    let psi = extended_eigenstate(&e2, Level::Physical(0)).unwrap();
    let (w, _) = psi.rs_value_and_derivative(1.0);
    assert_relative_eq!(dbt_rs(&e2, 0, 1.0).unwrap(), w, max_relative = 1e-9);

    let morse = FamilySpec::morse(5.0, 1.0, 1.0).unwrap();
    let ext = extend(&morse, 2).unwrap();
    let st = extended_eigenstate(&ext, Level::Physical(1)).unwrap();
    let nodes = st.numerator.zeros_in(ext.domain).unwrap();
    // ψ_− is the ground state, so ψ_1 is the third level
    assert_eq!(nodes.len(), 2);
    // w^(n)′ = −v′ − (E_1 − E_−)(v′ − w′)/(v − w)², from the RS derivatives
    let w1 = ratext_core::families::rs_physical(&morse, 1).unwrap();
    let c = w1.energy - ext.v.energy;
    let mut worst = 0.0_f64;
    for i in 0..400 {
        let x = -2.0 + 0.02 * i as f64;
        if nodes.iter().any(|p| (x - p).abs() < 1e-3) {
            continue;
        }
        let (v, dv) = ext.v.value_and_derivative(x);
        let (w, dw) = w1.value_and_derivative(x);
        let wn = dbt_rs(&ext, 1, x).unwrap();
        let dwn = -dv - c * (dv - dw) / ((v - w) * (v - w));
        let q = ext.value(x) - st.energy;
        worst = worst.max((-dwn + wn * wn - q).abs() / (1.0 + q.abs()));
    }
    assert!(worst < 1e-8, "riccati residual {worst:e}");

    assert!(matches!(dbt_rs(&extend(&FamilySpec::erkc(4.0, 2.0).unwrap(), 2).unwrap(), 0, -1.0), Err(Error::Domain { .. })));
}

#[test]
fn eigenstates_solve_the_extended_equation() {
    for (f, n) in standard_cases() {
        let ext = extend(&f, n).unwrap();
        let g = weight_truncated_grid(&f, RESIDUAL_POINTS).unwrap();
        for lvl in ext.spectrum.levels.iter().take(5) {
            let st = extended_eigenstate(&ext, lvl.label).unwrap();
            assert_eq!(st.energy, lvl.energy);
            let r = schrodinger_residual(|x| ext.value(x), st.energy, |x| st.value(x), &g);
            assert!(r < 1e-8, "{f} n={n} level {}: residual {r:e}", lvl.label);
            let norm = st.norm_squared().unwrap();
            assert!(norm.is_finite() && norm > 0.0);
        }
    }
}

#[test]
fn wrong_energy_is_detected() {
    let ext = extend(&FamilySpec::ho(2.0).unwrap(), 2).unwrap();
    let g = weight_truncated_grid(&ext.family, RESIDUAL_POINTS).unwrap();
    let st = extended_eigenstate(&ext, Level::Physical(1)).unwrap();
    let r = schrodinger_residual(|x| ext.value(x), st.energy + 0.1, |x| st.value(x), &g);
    assert!(r > 1e-3);
}

#[test]
fn named_numerators_match_generic_map() {
    for (f, n) in standard_cases() {
        let ext = extend(&f, n).unwrap();
        let kmax = f.bound_state_count().unwrap_or(4).min(4);
        for k in 0..kmax {
            let named = extended_eigenstate(&ext, Level::Physical(k)).unwrap();
            let generic = generic_eigenstate(&ext, k).unwrap();
            let g = weight_truncated_grid(&f, 64).unwrap();
            let ratios: Vec<f64> = g
                .nodes()
                .into_iter()
                .filter(|&x| generic.value(x).abs() > 1e-8 * generic.norm_squared().unwrap().sqrt())
                .map(|x| named.value(x) / generic.value(x))
                .collect();
            let r0 = ratios[0];
            for r in &ratios {
                assert_relative_eq!(*r, r0, max_relative = 1e-8);
            }
        }
    }
}

#[test]
fn numerator_degrees() {
    for m in 1..=3 {
        for k in 0..=4 {
            assert_eq!(p_polynomial(m, k, 2.0).unwrap().degree(), 2 * m + k + 1);
            assert_eq!(m_polynomial(6.5, k, m).unwrap().degree(), 2 * m + k + 1);
        }
    }
    for (a, n) in [(4.0, 2), (1.6, 1), (2.5, 3), (7.0, 4)] {
        for k in 0..=3 {
            assert_eq!(n_polynomial(a, k, n, 2.0).unwrap().degree(), n + k + 1);
        }
    }
    assert_eq!(p_polynomial(1, 0, 2.0).unwrap().degree(), 3);
    assert_eq!(n_polynomial(4.0, 0, 2, 2.0).unwrap().degree(), 3);
    assert!(matches!(n_polynomial(1.0, 0, 1, 2.0), Err(Error::Unsupported(_))));
    assert!(matches!(n_polynomial(3.0, 0, 1, 2.0), Err(Error::Unsupported(_))));
    assert!(matches!(m_polynomial(3.7, 3, 1), Err(Error::NoSuchBoundState { .. })));
}

#[test]
fn odd_p_polynomials_two_term_form() {
    for (m, l, omega) in [(1usize, 0usize, 2.0), (1, 1, 2.0), (2, 1, 0.8), (3, 2, 1.0)] {
        let p = p_polynomial(m, 2 * l + 1, omega).unwrap();
        let two_term = |x: f64| {
            let s2 = omega * x * x / 2.0;
            (l as f64 + 1.0) * laguerre_eval(m, -0.5, -s2) * laguerre_eval(l + 1, -0.5, s2)
                - s2 * laguerre_eval(m - 1, 0.5, -s2) * laguerre_eval(l, 0.5, s2)
        };
        let ratio = p.eval(0.9) / two_term(0.9);
        for i in 0..10 {
            let x = -2.0 + 0.45 * i as f64;
            assert_relative_eq!(p.eval(x), ratio * two_term(x), max_relative = 1e-11, epsilon = 1e-11);
        }
    }
}

#[test]
fn m_polynomial_at_origin() {
    // expanding both Laguerre products at z = 0
    for a in [2.0f64, 3.0, 5.0, 3.5] {
        for m in 1..=2usize {
            for k in 0..=2usize {
                if (k as f64) >= a.floor() {
                    continue;
                }
                let mf = m as f64;
                let kf = k as f64;
                let expected = -(2.0 * a + 2.0 * mf + 1.0 - kf) * pochhammer(2.0 * a + 2.0 * mf + 2.0, 2 * m)
                    * pochhammer(2.0 * a - 2.0 * kf + 1.0, k)
                    / (fact(2 * m) * fact(k));
                let v = m_polynomial(a, k, m).unwrap().eval(0.0);
                assert_relative_eq!(v, expected, max_relative = 1e-12);
            }
        }
    }
}

#[test]
fn spectrum_reports() {
    let ho = extend(&FamilySpec::ho(2.0).unwrap(), 2).unwrap();
    assert_eq!(ho.spectrum.energies()[..4], [-6.0, 0.0, 2.0, 4.0]);
    assert_eq!(ho.spectrum.extra_level, Some(-6.0));
    assert!(!ho.spectrum.strict);

    let morse = extend(&FamilySpec::morse(5.0, 1.0, 1.0).unwrap(), 2).unwrap();
    assert_eq!(morse.spectrum.energies(), vec![-39.0, 0.0, 9.0, 16.0, 21.0, 24.0]);
    let short = extended_spectrum_upto(&morse, 3).unwrap();
    assert_eq!(short.energies(), vec![-39.0, 0.0, 9.0, 16.0, 21.0]);

    let m37 = extend(&FamilySpec::morse(3.7, 0.6, 1.0).unwrap(), 2).unwrap();
    assert_eq!(m37.spectrum.levels.iter().filter(|l| l.label != Level::Extra).count(), 3);

    let e1 = extend(&FamilySpec::erkc(1.6, 2.0).unwrap(), 1).unwrap();
    assert!(e1.spectrum.strict);
    assert!(e1.spectrum.energies().iter().all(|&e| e >= 0.0));
    assert!(matches!(extended_eigenstate(&e1, Level::Extra), Err(Error::NoExtraState)));

    let e2 = extend(&FamilySpec::erkc(4.0, 2.0).unwrap(), 2).unwrap();
    assert!(!e2.spectrum.strict);
    assert_relative_eq!(e2.spectrum.extra_level.unwrap(), 1.0 / 16.0 - 1.0, max_relative = 1e-14);

    for report in [&ho.spectrum, &morse.spectrum, &e1.spectrum, &e2.spectrum] {
        assert!(report.energies().windows(2).all(|w| w[0] < w[1]));
    }

    let odd = extend_with(&FamilySpec::ho(1.0).unwrap(), 1, true).unwrap();
    assert_eq!(odd.spectrum.energies(), vec![1.0, 3.0, 5.0, 7.0]);
    assert!(matches!(extended_eigenstate(&morse, Level::Physical(5)), Err(Error::NoSuchBoundState { .. })));
}

#[test]
fn oracle_reproduces_extended_spectra() {
    let cases = [
        (FamilySpec::ho(2.0).unwrap(), 2, false),
        (FamilySpec::ho(2.0).unwrap(), 4, false),
        (FamilySpec::morse(5.0, 1.0, 1.0).unwrap(), 2, false),
        (FamilySpec::erkc(4.0, 2.0).unwrap(), 2, false),
        (FamilySpec::erkc(1.6, 2.0).unwrap(), 1, false),
        (FamilySpec::ho(1.0).unwrap(), 1, true),
    ];
    for (f, n, nc) in cases {
        let ext = extend_with(&f, n, nc).unwrap();
        let want = ext.spectrum.energies();
        let top = match ext.spectrum.levels.last().unwrap().label {
            Level::Physical(k) => k,
            Level::Extra => 0,
        };
        let g = default_eigen_grid(&f, top, nc, 4096);
        let got = solve_bound_states(&|x| ext.value(x), &g, want.len()).unwrap();
        for (e, w) in got.energies.iter().zip(&want) {
            assert!((e - w).abs() < 1e-5, "{f} n={n}: {e} vs {w}");
        }
    }
}

#[test]
fn orthogonal_families() {
    let cases = [
        (FamilySpec::ho(1.0).unwrap(), 2, 3),
        (FamilySpec::ho(2.0).unwrap(), 4, 3),
        (FamilySpec::morse(5.0, 1.0, 1.0).unwrap(), 2, 3),
        (FamilySpec::morse(3.7, 0.6, 1.0).unwrap(), 2, 2),
        (FamilySpec::erkc(4.0, 2.0).unwrap(), 2, 3),
        (FamilySpec::erkc(1.6, 2.0).unwrap(), 1, 4),
        (FamilySpec::erkc(2.5, 1.0).unwrap(), 3, 4),
    ];
    for (f, n, kmax) in cases {
        let ext = extend(&f, n).unwrap();
        let fam = orthogonal_family(&ext, kmax).unwrap();
        let has_constant = fam.members[0].label == Level::Extra;
        assert_eq!(has_constant, !ext.spectrum.strict);
        assert_eq!(fam.members.len(), kmax + 1 + has_constant as usize);
        let off = fam.max_off_diagonal().unwrap();
        assert!(off < 1e-8, "{f} n={n}: off-diagonal {off:e}");
        for i in 1..50 {
            let u = if fam.lo == 0.0 { 0.2 * i as f64 } else { -5.0 + 0.2 * i as f64 };
            assert!(fam.weight.value(u) > 0.0);
        }
    }
    let ho = extend(&FamilySpec::ho(1.0).unwrap(), 2).unwrap();
    let fam = orthogonal_family(&ho, 2).unwrap();
    let labels: Vec<Level> = fam.members.iter().map(|m| m.label).collect();
    assert_eq!(labels, vec![Level::Extra, Level::Physical(0), Level::Physical(1), Level::Physical(2)]);
}

#[test]
fn superpartners() {
    for (f, n) in standard_cases() {
        let ext = extend(&f, n).unwrap();
        let sp = superpartner(&ext).unwrap();
        let g = weight_truncated_grid(&f, RESIDUAL_POINTS).unwrap();
        for x in g.nodes() {
            let v = sp.value(x);
            assert!(v.is_finite());
            if sp.equals_base {
                let base = f.potential_value(x).unwrap();
                assert!((v - base).abs() < 1e-10 * (1.0 + base.abs()), "{f} n={n} x={x}: {v} vs {base}");
            }
        }
    }
}

#[test]
fn dbt_consistency_with_closed_form() {
    for (f, n) in standard_cases() {
        let ext = extend(&f, n).unwrap();
        for k in 0..3 {
            let st = extended_eigenstate(&ext, Level::Physical(k)).unwrap();
            let nodes = st.numerator.zeros_in(ext.domain).unwrap();
            let w = |t: f64| match dbt_rs(&ext, k, t) {
                Ok(v) => v,
                // removable: resample on both sides
                Err(Error::Coincidence { .. }) => {
                    0.5 * (dbt_rs(&ext, k, t + 1e-7).unwrap() + dbt_rs(&ext, k, t - 1e-7).unwrap())
                }
                Err(e) => panic!("{e}"),
            };
            let g = weight_truncated_grid(&f, 256).unwrap();
            // exp(−∫w) is compared inside each nodal interval, away from the nodes
            let mut anchor: Option<(usize, f64, f64)> = None;
            for x in g.nodes() {
                if nodes.iter().any(|p| (x - p).abs() < 1e-3) {
                    continue;
                }
                let cell = nodes.iter().filter(|&&p| p < x).count();
                let (l, _) = st.log_abs(x);
                match anchor {
                    Some((c, x0, l0)) if c == cell => {
                        let int = integrate(w, x0, x, 1e-13).unwrap();
                        let dev = ((l - l0) + int).exp() - 1.0;
                        assert!(dev.abs() < 1e-7, "{f} n={n} k={k} x={x}: {dev:e}");
                    }
                    _ => anchor = Some((cell, x, l)),
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn strict_flag_follows_erkc_case(a in 1.05f64..9.0, n in 0usize..6, gamma in 0.5f64..3.0) {
        let f = FamilySpec::erkc(a, gamma).unwrap();
        let np1 = n as f64 + 1.0;
        prop_assume!((a - np1 / 2.0).abs() > 1e-6 && (a - np1).abs() > 1e-6);
        match extend(&f, n) {
            Ok(ext) => {
                let case_i = np1 / 2.0 < a && a < np1;
                prop_assert_eq!(ext.spectrum.strict, case_i);
                prop_assert!(case_i || (n % 2 == 0 && a > np1));
            }
            Err(Error::Regularity { .. }) => {
                prop_assert!(a < np1 / 2.0 || (n % 2 == 1 && a > np1));
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn even_extensions_are_finite(omega in 0.2f64..4.0, m in 0usize..4, x in -8.0f64..8.0) {
        let ext = extend(&FamilySpec::ho(omega).unwrap(), 2 * m).unwrap();
        prop_assert!(ext.value(x).is_finite());
        prop_assert!(!ext.spectrum.strict);
    }

    #[test]
    fn morse_even_extensions_regular(a in 1.2f64..8.0, b in 0.3f64..3.0, m in 1usize..3, x in -3.0f64..10.0) {
        let ext = extend(&FamilySpec::morse(a, b, 1.0).unwrap(), 2 * m).unwrap();
        prop_assert!(ext.value(x).is_finite());
        prop_assert_eq!(ext.spectrum.levels[0].energy, a * a - (a + 1.0 + 2.0 * m as f64).powi(2));
    }
}
