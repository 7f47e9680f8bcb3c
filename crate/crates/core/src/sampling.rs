//! Random states for property tests, benchmarks and the acceptance sweeps.
//!
//! Central states are sampled as `1 + t·h` with `h` a random Hermitian
//! central element with no trivial component, and `t` drawn below the largest
//! value keeping the element positive.

use num_complex::Complex64;
use rand::Rng;

use crate::algebra::{min_hermitian_eigenvalue, AlgebraElement};
use crate::dual::{DualCentralElement, DualLabel};
use crate::error::Result;
use crate::kp8::KpCoefficients;
use crate::sekine::{CentralElement, Sekine};

/// Smallest point of the spectrum of a Hermitian element.
fn min_spectrum(x: &AlgebraElement) -> f64 {
    let ab = x
        .abelian()
        .iter()
        .map(|z| z.re)
        .fold(f64::INFINITY, f64::min);
    ab.min(min_hermitian_eigenvalue(x.matrix()))
}

/// Largest `t` with `1 + t·h ≥ 0`, given the spectrum bottom of `h`.
fn positivity_radius(h: &AlgebraElement) -> f64 {
    let lo = min_spectrum(h);
    if lo >= 0.0 {
        1.0
    } else {
        1.0 / -lo
    }
}

fn gaussianish<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random_range(-1.0..1.0)
}

/// A random central state on `KP_n`. `reach ∈ (0, 1]` scales how close to
/// the boundary of the state space samples may go.
pub fn random_central_state<R: Rng + ?Sized>(
    n: usize,
    reach: f64,
    rng: &mut R,
) -> Result<CentralElement> {
    let sekine = Sekine::new(n)?;
    let mut h = CentralElement::zero(n)?;
    for label in sekine.labels() {
        let inv = label.inverse(n);
        if label.is_trivial() || inv < label {
            continue;
        }
        let z = if inv == label {
            Complex64::new(gaussianish(rng), 0.0)
        } else {
            Complex64::new(gaussianish(rng), gaussianish(rng))
        };
        h.set(label, z)?;
        h.set(inv, z.conj())?;
    }
    let t = positivity_radius(&sekine.central_to_element(&h)?) * reach * rng.random_range(0.0..1.0);
    let mut a = CentralElement::unit(n)?;
    for (label, z) in h.iter() {
        if !label.is_trivial() {
            a.set(label, z * t)?;
        }
    }
    Ok(a)
}

/// A random central state with real coefficients, so every ratio is real.
pub fn random_real_central_state<R: Rng + ?Sized>(
    n: usize,
    reach: f64,
    rng: &mut R,
) -> Result<CentralElement> {
    let sekine = Sekine::new(n)?;
    let mut h = CentralElement::zero(n)?;
    for label in sekine.labels() {
        let inv = label.inverse(n);
        if label.is_trivial() || inv < label {
            continue;
        }
        let z = Complex64::new(gaussianish(rng), 0.0);
        h.set(label, z)?;
        h.set(inv, z)?;
    }
    let t = positivity_radius(&sekine.central_to_element(&h)?) * reach * rng.random_range(0.0..1.0);
    let mut a = CentralElement::unit(n)?;
    for (label, z) in h.iter() {
        if !label.is_trivial() {
            a.set(label, z * t)?;
        }
    }
    Ok(a)
}

/// A random state on the Kac–Paljutkin quantum group.
pub fn random_kp_state<R: Rng + ?Sized>(reach: f64, rng: &mut R) -> KpCoefficients {
    let h = KpCoefficients::real(
        0.0,
        gaussianish(rng),
        gaussianish(rng),
        gaussianish(rng),
        gaussianish(rng),
    );
    let t = positivity_radius(&h.to_element()) * reach * rng.random_range(0.0..1.0);
    KpCoefficients::real(
        1.0,
        h.g[1].re * t,
        h.g[2].re * t,
        h.g[3].re * t,
        h.gx.re * t,
    )
}

/// A random dual state with every ratio `a_α / d_α` in `[0, max_ratio)`.
pub fn random_dual_state<R: Rng + ?Sized>(
    n: usize,
    max_ratio: f64,
    rng: &mut R,
) -> Result<DualCentralElement> {
    let mut a = DualCentralElement::haar(n)?;
    for label in DualCentralElement::labels(n) {
        if label != DualLabel::TRIVIAL {
            let d = label.dim(n) as f64;
            a.set(
                label,
                Complex64::new(d * max_ratio * rng.random_range(0.0..1.0), 0.0),
            )?;
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_TOL;
    use crate::dual::dual_validate_state;
    use crate::kp8::kp_validate_state;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=7 {
            let sekine = Sekine::new(n).unwrap();
            for _ in 0..20 {
                let a = random_central_state(n, 1.0, &mut rng).unwrap();
                assert!(
                    sekine.validate_state(&a, DEFAULT_TOL).unwrap().is_state,
                    "n={n}"
                );
                let b = random_real_central_state(n, 1.0, &mut rng).unwrap();
                assert!(
                    sekine.validate_state(&b, DEFAULT_TOL).unwrap().is_state,
                    "n={n}"
                );
                let d = random_dual_state(n, 1.0, &mut rng).unwrap();
                assert!(dual_validate_state(&d, DEFAULT_TOL).is_state);
            }
        }
        for _ in 0..50 {
            assert!(kp_validate_state(&random_kp_state(1.0, &mut rng), DEFAULT_TOL).is_state);
        }
    }
}
