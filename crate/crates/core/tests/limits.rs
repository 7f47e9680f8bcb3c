use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qgwalk_core::algebra::{l1_norm, DEFAULT_TOL};
use qgwalk_core::idempotents::{build_idempotent, enumerate_central_idempotents, IdempotentSpec};
use qgwalk_core::sampling::{random_central_state, random_real_central_state};
use qgwalk_core::sekine::{CentralElement, IrrepLabel, Sekine};
use qgwalk_core::walks::{
    classify_limit, cutoff_bounds, cutoff_state, psi_p, walk_trace, Outcome, Walk,
};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn every_central_idempotent_is_a_limit_and_nothing_else() {
    for n in 2..=12 {
        let sekine = Sekine::new(n).unwrap();
        let central = enumerate_central_idempotents(n).unwrap();
        for spec in &central {
            let x = build_idempotent(spec, n).unwrap();
            let a = sekine.element_to_central(&x, 1e-9).unwrap();
            let got = classify_limit(&a, DEFAULT_TOL)
                .unwrap_or_else(|e| panic!("n = {n}, {spec}: {e}; {a:?}"));
            let limit = match &got.outcome {
                Outcome::ConvergesToHaar => build_idempotent(&IdempotentSpec::Haar, n).unwrap(),
                Outcome::ConvergesTo(s) => build_idempotent(s, n).unwrap(),
                other => panic!("n = {n}, {spec}: {other:?}"),
            };
            assert!(
                limit.max_abs_diff(&x).unwrap() < 1e-8,
                "n = {n}, {spec} -> {:?}",
                got.outcome
            );
            let in_set = central.iter().any(|s| {
                build_idempotent(s, n)
                    .unwrap()
                    .max_abs_diff(&limit)
                    .unwrap()
                    < 1e-8
            });
            assert!(in_set);
        }
    }
}

#[test]
fn random_real_states_have_limits_in_the_central_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 3..=8 {
        let central: Vec<_> = enumerate_central_idempotents(n)
            .unwrap()
            .iter()
            .map(|s| build_idempotent(s, n).unwrap())
            .collect();
        for _ in 0..20 {
            let a = random_real_central_state(n, 1.0, &mut rng).unwrap();
            if let Outcome::ConvergesTo(spec) = classify_limit(&a, DEFAULT_TOL).unwrap().outcome {
                let x = build_idempotent(&spec, n).unwrap();
                assert!(central.iter().any(|y| y.max_abs_diff(&x).unwrap() < 1e-8));
            }
        }
    }
}

#[test]
fn haar_convergence_rate() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 3..=9 {
        let sekine = Sekine::new(n).unwrap();
        for _ in 0..20 {
            let a = random_central_state(n, 0.9, &mut rng).unwrap();
            let walk = Walk::new(a.clone(), DEFAULT_TOL).unwrap();
            assert_eq!(walk.classify().unwrap().outcome, Outcome::ConvergesToHaar);
            let m = sekine
                .labels()
                .into_iter()
                .filter(|l| !l.is_trivial())
                .map(|l| a.ratio(l).norm())
                .fold(0.0, f64::max);
            for k in [1u64, 5, 20, 60] {
                let bound = n as f64 * std::f64::consts::SQRT_2 / 2.0 * m.powf(k as f64);
                assert!(walk.qtv(k).unwrap() <= bound + 1e-12);
            }
        }
    }
}

#[test]
fn convergent_limits_are_reached() {
    let n = 6;
    let a = CentralElement::new(
        n,
        [
            (IrrepLabel::TRIVIAL, c(1.0)),
            (IrrepLabel::SigmaMinus(0), c(1.0)),
            (IrrepLabel::RhoPlus(2), c(0.2)),
            (IrrepLabel::RhoPlus(4), c(0.2)),
            (IrrepLabel::SigmaMinus(2), c(0.2)),
            (IrrepLabel::SigmaMinus(4), c(0.2)),
        ],
    )
    .unwrap();
    let got = classify_limit(&a, DEFAULT_TOL).unwrap();
    assert_eq!(
        got.outcome,
        Outcome::ConvergesTo(IdempotentSpec::HGammaL { q: 2, l: 1 })
    );
    let walk = Walk::new(a, DEFAULT_TOL).unwrap();
    let k = (1e-8f64.ln() / 0.2f64.ln()).ceil() as u64;
    let built = build_idempotent(&IdempotentSpec::HGammaL { q: 2, l: 1 }, n).unwrap();
    assert!(l1_norm(&walk.power_element(k).unwrap().checked_sub(&built).unwrap()) <= 1e-6);
}

#[test]
fn cyclic_walks_repeat_after_burn_in() {
    let a = psi_p(9, 3).unwrap();
    let walk = Walk::new(a, DEFAULT_TOL).unwrap();
    let p = walk.detect_cycle(18, 1e-8).unwrap().unwrap();
    assert_eq!(p, 6);
    for k in 1..10 {
        let d = walk
            .power_element(k + 6)
            .unwrap()
            .checked_sub(&walk.power_element(k).unwrap())
            .unwrap();
        assert!(l1_norm(&d) <= 1e-8);
    }
}

#[test]
fn damped_signed_walk_settles_into_period_two() {
    // ρ_0^+ − ρ_0^- + ½ Σ_{l ≥ 1} (ρ_l^+ − ρ_l^-): every ρ_l^± with l ≥ 1 decays,
    // so the walk approaches the alternation of the ρ_0^+ − ρ_0^- walk.
    let n = 5;
    let mut coeffs = vec![
        (IrrepLabel::TRIVIAL, c(1.0)),
        (IrrepLabel::RhoMinus(0), c(-1.0)),
    ];
    for l in 1..n {
        coeffs.push((IrrepLabel::RhoPlus(l), c(0.5)));
        coeffs.push((IrrepLabel::RhoMinus(l), c(-0.5)));
    }
    let a = CentralElement::new(n, coeffs).unwrap();
    let got = classify_limit(&a, DEFAULT_TOL).unwrap();
    assert_eq!(got.outcome, Outcome::Diverges { period: Some(2) });
    assert!(!got.notes.is_empty());
}

#[test]
fn cosine_trace_is_sandwiched() {
    let n = 5;
    let report = walk_trace(&cutoff_state(n).unwrap(), 200, DEFAULT_TOL).unwrap();
    assert_eq!(report.steps.len(), 200);
    for step in &report.steps {
        let b = cutoff_bounds(n, step.k).unwrap();
        assert!(step.lower <= step.qtv + 1e-12 && step.qtv <= step.upper + 1e-12);
        assert!(b.lower <= step.qtv + 1e-12, "k = {}", step.k);
        assert!(step.qtv <= b.upper_sharp + 1e-12, "k = {}", step.k);
        if step.k >= (n * n) as u64 {
            assert!(step.qtv <= b.upper_theorem + 1e-12);
        }
    }
    let unit = walk_trace(&CentralElement::unit(4).unwrap(), 5, DEFAULT_TOL).unwrap();
    assert!(unit.steps.iter().all(|s| s.qtv == 0.0 && s.upper == 0.0));
}
